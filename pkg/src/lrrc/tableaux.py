"""Standard and column-strict tableaux with the elementary maps on them.

Tableaux are stored row-major with an explicit inner shape, so skew
tableaux and the empty tableau are first-class values.  All values are
immutable; every map returns a new tableau.
"""

from functools import lru_cache

from . import partitions as pt

EMPTY_INNER = ()


class Tableau:
    """A filling of a (possibly skew) shape by integers.

    `rows[i]` holds the entries of row i left to right; `inner[i]` is the
    number of missing cells at the left of row i.  Straight shapes have an
    all-zero inner shape, which is normalized to ().
    """

    __slots__ = ("rows", "inner")

    def __init__(self, rows, inner=None):
        rows = tuple(tuple(r) for r in rows)
        while rows and not rows[-1]:
            rows = rows[:-1]
        if inner is None:
            inner = ()
        inner = tuple(inner)[: len(rows)]
        while inner and inner[-1] == 0:
            inner = inner[:-1]
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "inner", inner)

    def __setattr__(self, *a):
        raise AttributeError("Tableau is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Tableau)
            and self.rows == other.rows
            and self.inner == other.inner
        )

    def __hash__(self):
        return hash((self.rows, self.inner))

    def __repr__(self):
        if self.inner:
            return f"Tableau({list(map(list, self.rows))}, inner={list(self.inner)})"
        return f"Tableau({list(map(list, self.rows))})"

    def __len__(self):
        return sum(len(r) for r in self.rows)

    def __bool__(self):
        return bool(self.rows)

    def inner_at(self, i: int) -> int:
        return self.inner[i] if i < len(self.inner) else 0

    def shape(self) -> tuple:
        """Outer shape (row lengths including inner offsets)."""
        return tuple(self.inner_at(i) + len(r) for i, r in enumerate(self.rows))

    def is_straight(self) -> bool:
        return not self.inner

    def cells(self):
        """Yield (row, col, entry) with 0-indexed positions."""
        for i, r in enumerate(self.rows):
            off = self.inner_at(i)
            for j, x in enumerate(r):
                yield i, off + j, x

    def entry(self, i: int, j: int):
        """Entry at 0-indexed (i, j), or None outside the filling."""
        if 0 <= i < len(self.rows):
            off = self.inner_at(i)
            if off <= j < off + len(self.rows[i]):
                return self.rows[i][j - off]
        return None

    def find(self, letter: int):
        """0-indexed (row, col) of a letter; ValueError if absent."""
        for i, j, x in self.cells():
            if x == letter:
                return i, j
        raise ValueError(f"letter {letter} not in tableau")

    def letters(self) -> tuple:
        return tuple(sorted(x for _, _, x in self.cells()))

    def word(self) -> tuple:
        """Row-reading word: rows read left to right, bottom row first."""
        out = []
        for r in reversed(self.rows):
            out.extend(r)
        return tuple(out)

    def content(self) -> tuple:
        """Multiplicity of each letter 1..max, as a tuple."""
        letters = [x for _, _, x in self.cells()]
        if not letters:
            return ()
        return tuple(letters.count(v) for v in range(1, max(letters) + 1))

    def is_column_strict(self) -> bool:
        for i, r in enumerate(self.rows):
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                return False
            if i > 0:
                for j in range(len(r)):
                    above = self.entry(i - 1, self.inner_at(i) + j)
                    if above is not None and above >= r[j]:
                        return False
        sh = self.shape()
        return (not sh or pt.is_partition(sh)) and (
            not self.inner or pt.is_partition(tuple(x for x in self.inner if x))
            and pt.contains(sh, self.inner)
        )

    def is_standard(self) -> bool:
        if not self.is_straight():
            return False
        n = len(self)
        if self.letters() != tuple(range(1, n + 1)):
            return False
        for i, r in enumerate(self.rows):
            if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
                return False
            if i > 0 and any(
                j < len(self.rows[i - 1]) and self.rows[i - 1][j] >= r[j]
                for j in range(len(r))
            ):
                return False
        return pt.is_partition(self.shape())

    def to_json(self) -> dict:
        d = {"shape": list(self.shape()), "rows": [list(r) for r in self.rows]}
        if self.inner:
            d["inner"] = list(self.inner)
        return d

    @staticmethod
    def from_json(d) -> "Tableau":
        return Tableau(d["rows"], d.get("inner"))

    def render(self) -> str:
        """One row per line, entries space-separated; inner cells as dots."""
        lines = []
        for i, r in enumerate(self.rows):
            cells = ["."] * self.inner_at(i) + [str(x) for x in r]
            lines.append(" ".join(cells))
        return "\n".join(lines)


EMPTY_TABLEAU = Tableau(())


def _insert_row(rows, x):
    """Schensted row insertion of x; rows is a list of lists, mutated."""
    i = 0
    while i < len(rows):
        row = rows[i]
        # bump the leftmost entry strictly greater than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] <= x:
                lo = mid + 1
            else:
                hi = mid
        if lo == len(row):
            row.append(x)
            return
        row[lo], x = x, row[lo]
        i += 1
    rows.append([x])


def schensted_p(word) -> Tableau:
    """The Schensted P-tableau of a word, built by row insertion."""
    rows: list[list[int]] = []
    for x in word:
        _insert_row(rows, x)
    return Tableau(rows)


def p_tableau(t: Tableau) -> Tableau:
    """Straighten a (possibly skew) tableau: P of its reading word."""
    return schensted_p(t.word())


def restrict(t: Tableau, lo: int, hi: int) -> Tableau:
    """Erase every letter outside [lo, hi]; the result is skew in general."""
    rows, inner = [], []
    for i, r in enumerate(t.rows):
        kept = [x for x in r if lo <= x <= hi]
        inner.append(t.inner_at(i) + sum(1 for x in r if x < lo))
        rows.append(kept)
    return Tableau(rows, inner)


def shift(t: Tableau, delta: int) -> Tableau:
    """Add delta to every entry."""
    return Tableau(tuple(tuple(x + delta for x in r) for r in t.rows), t.inner)


def standardize(t: Tableau) -> Tableau:
    """Replace equal letters left to right by consecutive integers."""
    if not t.is_straight():
        raise ValueError("standardize expects a straight shape")
    cells = sorted(((x, j, i) for i, j, x in t.cells()))
    relabel = {}
    for new, (_, j, i) in enumerate(cells, start=1):
        relabel[(i, j)] = new
    rows = [
        [relabel[(i, j)] for j in range(len(r))] for i, r in enumerate(t.rows)
    ]
    return Tableau(rows)


def transpose_st(t: Tableau) -> Tableau:
    """Ordinary transposition of a straight tableau."""
    if not t.is_straight():
        raise ValueError("transpose expects a straight shape")
    if not t.rows:
        return EMPTY_TABLEAU
    rows = [
        [t.rows[i][j] for i in range(len(t.rows)) if j < len(t.rows[i])]
        for j in range(len(t.rows[0]))
    ]
    return Tableau(rows)


def minus(t: Tableau) -> Tableau:
    """Remove the maximum letter of a standard tableau."""
    n = len(t)
    if n == 0:
        raise ValueError("minus on the empty tableau")
    i, j = t.find(n)
    rows = [list(r) for r in t.rows]
    rows[i].pop()
    return Tableau(rows)


def d_map(t: Tableau) -> Tableau:
    """Remove 1, subtract one from every entry and straighten."""
    n = len(t)
    if n == 0:
        raise ValueError("d_map on the empty tableau")
    return schensted_p(shift(restrict(t, 2, n), -1).word())


def complement_word(word, n: int) -> tuple:
    """Reverse of the complement in the alphabet [1, n]."""
    return tuple(n + 1 - x for x in reversed(word))


def evacuate(t: Tableau) -> Tableau:
    """Schuetzenberger evacuation: P of the reversed complement word."""
    n = len(t)
    return schensted_p(complement_word(t.word(), n))


def ascents(t: Tableau) -> tuple:
    """Indices i such that i+1 sits in a strictly later column than i."""
    n = len(t)
    cols = {}
    for i, j, x in t.cells():
        cols[x] = j
    return tuple(i for i in range(1, n) if cols[i + 1] > cols[i])


def ls_charge(t: Tableau) -> int:
    """Charge of a standard tableau: each ascent i contributes n - i."""
    n = len(t)
    return sum(n - i for i in ascents(t))


def ls_charge_recursive(t: Tableau) -> int:
    """Charge by the ascent recursion c(S) = c(S-) + asc(S); test oracle."""
    if len(t) <= 1:
        return 0
    return ls_charge_recursive(minus(t)) + len(ascents(t))


def word_charge(word) -> int:
    """Charge of a word with partition content (standard-subword extraction).

    Repeatedly scan the word right to left, cyclically, picking a letter 1,
    then the next 2 weakly left of it, and so on; the picked positions form
    a standard subword whose charge is computed by the index rule (the index
    of r+1 is that of r, plus one exactly when r+1 lies to the right of r).
    The charges of the extracted subwords are summed.
    """
    remaining = list(word)
    total = 0
    while remaining:
        maxletter = max(remaining)
        picked = []
        pos = len(remaining)
        for target in range(1, maxletter + 1):
            found = None
            for step in range(len(remaining)):
                p = (pos - 1 - step) % len(remaining)
                if remaining[p] == target:
                    found = p
                    break
            if found is None:
                break
            picked.append(found)
            pos = found
        sub = sorted(picked)
        subword = [remaining[p] for p in sub]
        index = 0
        position = {x: i for i, x in enumerate(subword)}
        for r in range(2, len(subword) + 1):
            if position[r] > position[r - 1]:
                index += 1
            total += index
        for p in reversed(sub):
            remaining.pop(p)
    return total


def cst_charge(t: Tableau) -> int:
    """Classical charge of a column-strict tableau of partition content."""
    return word_charge(t.word())


@lru_cache(maxsize=None)
def enumerate_syt(lam) -> tuple:
    """All standard tableaux of a given shape, sorted by rows."""
    lam = pt.check_partition(lam)
    n = pt.size(lam)
    results = []

    def grow(filled, cells):
        if len(cells) == n:
            rows = [
                [0] * lam[i] for i in range(len(lam))
            ]
            for (i, j), x in cells.items():
                rows[i][j] = x
            results.append(Tableau(rows))
            return
        x = len(cells) + 1
        for i in range(len(lam)):
            j = filled[i]
            if j < lam[i] and (i == 0 or filled[i - 1] > j):
                filled[i] += 1
                cells[(i, j)] = x
                grow(filled, cells)
                del cells[(i, j)]
                filled[i] -= 1

    grow([0] * len(lam), {})
    return tuple(sorted(results, key=lambda t: t.rows))


def _horizontal_strips(prev, lam, k):
    """Row-length vectors nu with prev <= nu <= lam, |nu/prev| = k, nu/prev
    a horizontal strip (nu[i] <= prev[i-1] for i >= 1)."""
    nrows = len(lam)

    def go(i, left, acc):
        if i == nrows:
            if left == 0:
                yield tuple(acc)
            return
        lo = prev[i]
        hi = lam[i] if i == 0 else min(lam[i], prev[i - 1])
        # nu[i] <= prev[i-1] <= nu[i-1] keeps nu weakly decreasing
        for v in range(lo, hi + 1):
            if v - lo > left:
                break
            yield from go(i + 1, left - (v - lo), acc + [v])

    yield from go(0, k, [])


@lru_cache(maxsize=None)
def enumerate_cst(lam, content) -> tuple:
    """All column-strict tableaux of given straight shape and content.

    Realized as chains of partitions where letter v fills a horizontal
    strip of size content[v-1].
    """
    lam = pt.check_partition(lam) if lam else ()
    if sum(content) != pt.size(lam):
        return ()
    nrows = len(lam)
    results = []

    def grow(prev, letter, rows):
        if letter > len(content):
            if list(prev) == list(lam):
                results.append(Tableau([r[:] for r in rows]))
            return
        for nu in _horizontal_strips(prev, lam, content[letter - 1]):
            for i in range(nrows):
                rows[i].extend([letter] * (nu[i] - prev[i]))
            grow(nu, letter + 1, rows)
            for i in range(nrows):
                del rows[i][prev[i]:]

    grow(tuple([0] * nrows), 1, [[] for _ in range(nrows)])
    return tuple(sorted(set(results), key=lambda t: t.rows))
