"""LR tableau sets over a rectangle sequence: membership, enumeration,
relabelings, and the tableau-side maps that mirror rectangle moves."""

from functools import lru_cache

from . import partitions as pt
from . import rectangles as rs
from .tableaux import (
    Tableau,
    d_map,
    evacuate,
    minus,
    p_tableau,
    restrict,
    standardize,
    transpose_st,
)


class MembershipError(ValueError):
    pass


class LrContext:
    """Alphabets and the columnwise/rowwise standard tableaux of a sequence.

    For rectangle j of width w and height h with letter offset o, the
    columnwise filling puts o + c*h + r + 1 at cell (r, c) and the rowwise
    filling puts o + r*w + c + 1 there (0-indexed cells).
    """

    def __init__(self, rects):
        self.rects = rs.check_rects(rects) if rects else ()
        self.offsets = []
        self.zc = []
        self.zr = []
        o = 0
        for w, h in self.rects:
            self.offsets.append(o)
            self.zc.append(
                Tableau([[o + c * h + r + 1 for c in range(w)] for r in range(h)])
            )
            self.zr.append(
                Tableau([[o + r * w + c + 1 for c in range(w)] for r in range(h)])
            )
            o += w * h
        self.size = o
        # letter -> (rect index, zc row, zc col), 0-indexed
        self.letter_info = {}
        for j, t in enumerate(self.zc):
            for r, c, x in t.cells():
                self.letter_info[x] = (j, r, c)

    def alphabet(self, j: int) -> tuple:
        """Letters of rectangle j (0-indexed) as an inclusive interval."""
        w, h = self.rects[j]
        return (self.offsets[j] + 1, self.offsets[j] + w * h)

    def column_blocks(self) -> tuple:
        """Letters of each column of each rectangle, in sequence order."""
        blocks = []
        for j, (w, h) in enumerate(self.rects):
            o = self.offsets[j]
            for c in range(w):
                blocks.append(tuple(o + c * h + r + 1 for r in range(h)))
        return tuple(blocks)

    def relabel_zc_to_zr(self) -> dict:
        out = {}
        for zc, zr in zip(self.zc, self.zr):
            for (r, c, x), (_, _, y) in zip(zc.cells(), zr.cells()):
                out[x] = y
        return out


@lru_cache(maxsize=None)
def _context(rects) -> LrContext:
    return LrContext(rects)


def _fast_member(t: Tableau, ctx: LrContext) -> bool:
    pos = {}
    for i, j, x in t.cells():
        pos[x] = (i, j)
    for x, (j, r, c) in ctx.letter_info.items():
        w, h = ctx.rects[j]
        if r + 1 < h:  # x+1 sits immediately south of x in the filling
            if pos[x + 1][0] <= pos[x][0]:
                return False
        if c >= 1:  # x-h sits immediately west of x
            if pos[x - h][1] >= pos[x][1]:
                return False
    return True


def _p_member(t: Tableau, ctx: LrContext) -> bool:
    for j in range(len(ctx.rects)):
        lo, hi = ctx.alphabet(j)
        if p_tableau(restrict(t, lo, hi)) != ctx.zc[j]:
            return False
    return True


def is_clr(t: Tableau, lam, rects, method: str = "fast") -> bool:
    """Membership in the columnwise LR tableau set of shape lam over rects.

    method "fast" uses the cell-order characterization, "p" the defining
    restriction condition, "both" cross-checks them.
    """
    lam = tuple(lam)
    ctx = _context(rs.check_rects(rects) if rects else ())
    if len(t) != ctx.size or pt.size(lam) != ctx.size:
        return False
    if not t.is_straight() or t.shape() != lam or not t.is_standard():
        return False
    if method == "fast":
        return _fast_member(t, ctx)
    if method == "p":
        return _p_member(t, ctx)
    if method == "both":
        a, b = _fast_member(t, ctx), _p_member(t, ctx)
        if a != b:
            raise AssertionError(f"membership predicates disagree on {t!r}")
        return a
    raise ValueError(f"unknown method {method!r}")


def require_member(t: Tableau, lam, rects):
    if not is_clr(t, lam, rects):
        raise MembershipError(
            f"tableau is not an LR member of shape {tuple(lam)} over "
            f"{rs.render(rects)}"
        )


@lru_cache(maxsize=None)
def enumerate_clr(lam, rects) -> tuple:
    """All members of the columnwise LR set, sorted by rows.

    Letters are placed one at a time at addable corners; the cell-order
    constraints prune, the defining restriction condition certifies.
    """
    lam = tuple(lam)
    rects = rs.check_rects(rects) if rects else ()
    ctx = _context(rects)
    n = ctx.size
    if pt.size(lam) != n or not (pt.is_partition(lam) or lam == ()):
        return ()
    if n == 0:
        return (Tableau(()),)
    nrows = len(lam)
    pos: dict[int, tuple] = {}
    filled = [0] * nrows
    out = []

    def place(x):
        if x > n:
            rows = [[0] * filled[i] for i in range(nrows)]
            for letter, (i, j) in pos.items():
                rows[i][j] = letter
            t = Tableau(rows)
            if _p_member(t, ctx):
                out.append(t)
            return
        j, r, c = ctx.letter_info[x]
        w, h = ctx.rects[j]
        south_row = pos[x - 1][0] if r >= 1 else -1
        west_col = pos[x - h][1] if c >= 1 else -1
        for i in range(nrows):
            col = filled[i]
            if col >= lam[i] or (i > 0 and filled[i - 1] <= col):
                continue
            if i <= south_row or col <= west_col:
                continue
            filled[i] += 1
            pos[x] = (i, col)
            place(x + 1)
            del pos[x]
            filled[i] -= 1

    place(1)
    return tuple(sorted(out, key=lambda t: t.rows))


def enumerate_clr_all(rects) -> dict:
    """Map from each shape of the right size to its (nonempty) member set."""
    rects = rs.check_rects(rects) if rects else ()
    n = rs.total_size(rects)
    out = {}
    for lam in pt.partitions_of(n):
        members = enumerate_clr(lam, rects)
        if members:
            out[lam] = members
    return out


def gamma(t: Tableau, rects) -> Tableau:
    """Relabel a columnwise member into the rowwise set."""
    table = _context(rs.check_rects(rects) if rects else ()).relabel_zc_to_zr()
    out = Tableau([[table[x] for x in row] for row in t.rows])
    assert out.is_standard()
    return out


def gamma_inv(t: Tableau, rects) -> Tableau:
    table = _context(rs.check_rects(rects) if rects else ()).relabel_zc_to_zr()
    inv = {y: x for x, y in table.items()}
    out = Tableau([[inv[x] for x in row] for row in t.rows])
    assert out.is_standard()
    return out


def tr_lr(t: Tableau, lam, rects) -> Tableau:
    """Transpose bijection onto shape lam^t over the transposed rectangles."""
    require_member(t, lam, rects)
    return transpose_st(gamma(t, rects))


def is_lrt(t: Tableau, lam, rects) -> bool:
    """Membership in the row-content LR set: restriction to the j-th height
    alphabet straightens to the rectangle filled rowwise by constant letters."""
    lam = tuple(lam)
    rects = rs.check_rects(rects) if rects else ()
    if not t.is_straight() or t.shape() != lam or not t.is_column_strict():
        return False
    o = 0
    for w, h in rects:
        z = Tableau([[o + r + 1] * w for r in range(h)])
        if p_tableau(restrict(t, o + 1, o + h)) != z:
            return False
        o += h
    return not any(x > o for _, _, x in t.cells())


def beta(t: Tableau, rects) -> Tableau:
    """Relabeling bijection from the row-content set to the columnwise set:
    standardize, then pull the rowwise labels back to columnwise ones."""
    rects = rs.check_rects(rects) if rects else ()
    if not is_lrt(t, t.shape(), rects):
        raise MembershipError("tableau is not a row-content LR member")
    return gamma_inv(standardize(t), rects)


def cst_from_clr(t: Tableau, rects) -> Tableau:
    """For single-row rectangles: collapse each alphabet to its index,
    recovering the column-strict tableau (the inverse of standardization)."""
    rects = rs.check_rects(rects)
    if any(h != 1 for _, h in rects):
        raise ValueError("needs single-row rectangles")
    ctx = _context(rects)
    return Tableau(
        [[ctx.letter_info[x][0] + 1 for x in row] for row in t.rows]
    )


def _check_blocks_match(rects, other):
    a = _context(rects).column_blocks()
    b = _context(other).column_blocks()
    if a != b:
        raise AssertionError("column letter blocks changed under the split")


def i_hat(t: Tableau, lam, rects) -> Tableau:
    """Inclusion along the last-column split; the identity on tableau data."""
    require_member(t, lam, rects)
    _check_blocks_match(rects, rs.hat(rects))
    return t


def i_check(t: Tableau, lam, rects) -> Tableau:
    """Inclusion along the first-column split; the identity on tableau data."""
    require_member(t, lam, rects)
    _check_blocks_match(rects, rs.check(rects))
    return t


def i_greater(t: Tableau, lam, rects) -> Tableau:
    """Last-row split on tableaux, via conjugation by the transpose map."""
    lamt = pt.transpose(lam)
    rt = rs.transpose(rects)
    return tr_lr(i_hat(tr_lr(t, lam, rects), lamt, rt), lamt, rs.hat(rt))


def i_less(t: Tableau, lam, rects) -> Tableau:
    """First-row split on tableaux, via conjugation by the transpose map."""
    lamt = pt.transpose(lam)
    rt = rs.transpose(rects)
    return tr_lr(i_check(tr_lr(t, lam, rects), lamt, rt), lamt, rs.check(rt))


def clr_minus(t: Tableau, lam, rects) -> Tableau:
    """Drop the largest letter.  Lands over bar(R) when the last rectangle
    is a column, or over the shortened row when it is a single row."""
    require_member(t, lam, rects)
    w, h = rects[-1]
    if w != 1 and h != 1:
        raise ValueError("minus needs a single-column or single-row last rectangle")
    return minus(t)


def clr_d(t: Tableau, lam, rects) -> Tableau:
    """Remove 1 and slide: needs a single-column first rectangle."""
    require_member(t, lam, rects)
    if rects[0][0] != 1:
        raise ValueError("needs a single-column first rectangle")
    return d_map(t)


def clr_ev(t: Tableau, lam, rects) -> Tableau:
    """Evacuation, landing over the reversed sequence."""
    require_member(t, lam, rects)
    return evacuate(t)


def minus_image_contains(t: Tableau, lam, rects) -> bool:
    """Whether t (a member over bar(R)) arises by dropping the largest letter
    of a member of shape lam: the new corner must lie strictly below the cell
    vacated inside t, unless the last column has height one."""
    rects = rs.check_rects(rects)
    if rects[-1][0] != 1:
        raise ValueError("needs a single-column last rectangle")
    if rects[-1][1] == 1:
        return True
    (r,) = {row for row, _ in _added_cell(lam, t.shape())}
    i, _ = t.find(len(t))
    return i + 1 < r


def d_image_contains(t: Tableau, lam, rects) -> bool:
    """Image test for the slide map, by the same row comparison."""
    rects = rs.check_rects(rects)
    if rects[0][0] != 1:
        raise ValueError("needs a single-column first rectangle")
    if rects[0][1] == 1:
        return True
    (r,) = {row for row, _ in _added_cell(lam, t.shape())}
    sub = d_map(t)
    rr = _added_cell(t.shape(), sub.shape())
    (r2,) = {row for row, _ in rr}
    return r2 < r


def _added_cell(outer, inner):
    """The single cell of outer/inner as a set of (row, col), 1-indexed."""
    cells = []
    for i in range(len(outer)):
        a = outer[i]
        b = inner[i] if i < len(inner) else 0
        for c in range(b + 1, a + 1):
            cells.append((i + 1, c))
    if len(cells) != 1:
        raise ValueError("shapes do not differ by one cell")
    return cells
