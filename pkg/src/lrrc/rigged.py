"""Rigged configurations and every map acting on them.

A rigged configuration carries its (lambda, rects) context so vacancy
numbers and admissibility are self-contained.  Strings are (length,
label) pairs; each rigged partition is kept in canonical order (length
descending, then label descending), which makes equality multiset
equality.  Labels are stored; colabels are derived on demand.
"""

import itertools
from functools import lru_cache, total_ordering

from . import partitions as pt
from . import rectangles as rs


@total_ordering
class _Unbounded:
    """Order-infinite sentinel for string-selection bookkeeping."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, _Unbounded)

    def __gt__(self, other):
        return not isinstance(other, _Unbounded)

    def __hash__(self):
        return hash("unbounded")

    def __repr__(self):
        return "UNBOUNDED"


UNBOUNDED = _Unbounded()


class NotInImageError(ValueError):
    """Raised when an inverse map is applied outside its image."""

    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank


def canon_strings(strings) -> tuple:
    return tuple(sorted(((int(n), int(x)) for n, x in strings),
                        key=lambda s: (-s[0], -s[1])))


def block_sizes(lam, rects):
    """Required sizes of nu^(k), k >= 1; None when no configuration exists."""
    lam = tuple(lam)
    if pt.size(lam) != rs.total_size(rects):
        return None
    lamt = pt.transpose(lam)
    kmax = max([len(lamt)] + [w for w, _ in rects] + [1]) - 1
    sizes = []
    for k in range(1, kmax + 1):
        s = sum(lamt[k:]) - sum(h * max(w - k, 0) for w, h in rects)
        if s < 0:
            return None
        sizes.append(s)
    while sizes and sizes[-1] == 0:
        sizes.pop()
    return tuple(sizes)


class RiggedConfiguration:
    """Sequence of rigged partitions together with its (lambda, rects) context."""

    __slots__ = ("nu", "lam", "rects")

    def __init__(self, nu, lam, rects):
        nu = tuple(canon_strings(block) for block in nu)
        while nu and not nu[-1]:
            nu = nu[:-1]
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "lam", tuple(lam))
        object.__setattr__(self, "rects", rs.check_rects(rects) if rects else ())

    def __setattr__(self, *a):
        raise AttributeError("RiggedConfiguration is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, RiggedConfiguration)
            and self.nu == other.nu
            and self.lam == other.lam
            and self.rects == other.rects
        )

    def __hash__(self):
        return hash((self.nu, self.lam, self.rects))

    def __repr__(self):
        return f"RiggedConfiguration(nu={self.nu}, lam={self.lam}, rects={self.rects})"

    def block(self, k: int) -> tuple:
        """The k-th rigged partition (1-indexed); empty beyond storage."""
        return self.nu[k - 1] if 1 <= k <= len(self.nu) else ()

    def block_partition(self, k: int) -> tuple:
        return tuple(n for n, _ in self.block(k))

    def num_blocks(self) -> int:
        return len(self.nu)

    def vacancy(self, k: int, n: int) -> int:
        """P^(k)_n: counts columns of the neighbouring blocks and of the
        width-k rectangle heights; zero at n = 0."""
        if n <= 0:
            return 0
        q = pt.q_count
        return (
            q(self.block_partition(k - 1), n)
            - 2 * q(self.block_partition(k), n)
            + q(self.block_partition(k + 1), n)
            + q(rs.xi(self.rects, k), n)
        )

    def colabel(self, k: int, n: int, x: int) -> int:
        return self.vacancy(k, n) - x

    def is_singular(self, k: int, n: int, x: int) -> bool:
        return x == self.vacancy(k, n)

    def with_labels(self, new_nu) -> "RiggedConfiguration":
        return RiggedConfiguration(new_nu, self.lam, self.rects)

    def retyped(self, lam=None, rects=None) -> "RiggedConfiguration":
        return RiggedConfiguration(
            self.nu,
            self.lam if lam is None else lam,
            self.rects if rects is None else rects,
        )

    def max_string_length(self) -> int:
        return max((n for block in self.nu for n, _ in block), default=0)

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "rects": [list(r) for r in self.rects],
            "nu": [[list(s) for s in block] for block in self.nu],
        }

    @staticmethod
    def from_json(d) -> "RiggedConfiguration":
        return RiggedConfiguration(
            [[(n, x) for n, x in block] for block in d["nu"]],
            tuple(d["lambda"]),
            tuple((w, h) for w, h in d["rects"]),
        )

    def render(self) -> str:
        """One block per rigged partition; strings as `vacancy |cells| label`."""
        if not self.nu:
            return "(empty rigged configuration)"
        lines = []
        for k in range(1, len(self.nu) + 1):
            head = f"({k})"
            block = self.block(k)
            if not block:
                lines.append(f"{head}  -")
                continue
            for idx, (n, x) in enumerate(block):
                prefix = head if idx == 0 else " " * len(head)
                lines.append(f"{prefix}  {self.vacancy(k, n)} |{'#' * n}| {x}")
        return "\n".join(lines)


EMPTY_RC = RiggedConfiguration((), (), ())


def is_admissible(rc: RiggedConfiguration) -> bool:
    """Size constraints, nonnegative vacancies, labels within [0, vacancy]."""
    sizes = block_sizes(rc.lam, rc.rects)
    if sizes is None:
        return False
    for k in range(1, max(len(sizes), len(rc.nu)) + 1):
        blockp = rc.block_partition(k)
        if sum(blockp) != (sizes[k - 1] if k <= len(sizes) else 0):
            return False
    nmax = max(rc.max_string_length(), pt.size(rc.lam), 1)
    for k in range(1, len(rc.nu) + 2):
        for n in range(1, nmax + 1):
            if rc.vacancy(k, n) < 0:
                return False
    for k in range(1, len(rc.nu) + 1):
        for n, x in rc.block(k):
            if not 0 <= x <= rc.vacancy(k, n):
                return False
    return True


@lru_cache(maxsize=None)
def enumerate_configs(lam, rects) -> tuple:
    """All admissible configurations (as bare tuples of partitions).

    Candidates take each nu^(k) from the partitions of its forced size with
    parts capped by the next column of lambda; the vacancy filter then
    decides admissibility.
    """
    lam, rects = tuple(lam), tuple(rects)
    sizes = block_sizes(lam, rects)
    if sizes is None:
        return ()
    lamt = pt.transpose(lam)
    choices = []
    for k, s in enumerate(sizes, start=1):
        cap = lamt[k] if k < len(lamt) else 0
        if s > 0 and cap == 0:
            return ()
        choices.append(pt.partitions_of(s, cap if cap else None))
    out = []
    nmax = pt.size(lam) + 1
    for combo in itertools.product(*choices):
        rc = RiggedConfiguration([[(n, 0) for n in p] for p in combo], lam, rects)
        if all(
            rc.vacancy(k, n) >= 0
            for k in range(1, len(sizes) + 2)
            for n in range(1, nmax)
        ):
            out.append(tuple(combo))
    return tuple(sorted(out))


def _label_boxes(lam, rects, config):
    """Per configuration, the (k, n, multiplicity, vacancy) label boxes."""
    rc = RiggedConfiguration([[(n, 0) for n in p] for p in config], lam, rects)
    boxes = []
    for k, p in enumerate(config, start=1):
        for n in sorted(set(p), reverse=True):
            boxes.append((k, n, pt.mult(p, n), rc.vacancy(k, n)))
    return boxes


@lru_cache(maxsize=None)
def enumerate_rcs(lam, rects) -> tuple:
    """All rigged configurations over (lam, rects), sorted."""
    lam, rects = tuple(lam), tuple(rects)
    out = []
    for config in enumerate_configs(lam, rects):
        boxes = _label_boxes(lam, rects, config)
        label_choices = [pt.partitions_in_box(m, p) for _, _, m, p in boxes]
        for labels in itertools.product(*label_choices):
            nu = [[] for _ in config]
            for (k, n, m, _), partition in zip(boxes, labels):
                padded = tuple(partition) + (0,) * (m - len(partition))
                nu[k - 1].extend((n, x) for x in padded)
            out.append(RiggedConfiguration(nu, lam, rects))
    return tuple(sorted(out, key=lambda rc: rc.nu))


def cc_config(rc: RiggedConfiguration) -> int:
    """cc of the bare configuration: sum over columns n and blocks k of
    alpha_n^(k) (alpha_n^(k) - alpha_n^(k+1))."""
    total = 0
    nmax = rc.max_string_length()
    for k in range(1, rc.num_blocks() + 1):
        pk = rc.block_partition(k)
        pk1 = rc.block_partition(k + 1)
        for n in range(1, nmax + 1):
            a = pt.column_height(pk, n)
            total += a * (a - pt.column_height(pk1, n))
    return total


def cc(rc: RiggedConfiguration) -> int:
    """The statistic cc: configuration part plus the sum of all labels."""
    return cc_config(rc) + sum(x for block in rc.nu for _, x in block)


def theta(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Complement every label against its vacancy number."""
    return rc.with_labels(
        tuple(
            tuple((n, rc.vacancy(k, n) - x) for n, x in block)
            for k, block in enumerate(rc.nu, start=1)
        )
    )


def theta_ev(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Complement labels and reverse the rectangle sequence."""
    return theta(rc).retyped(rects=rs.ev(rc.rects))


def _remove_string(block, n, x):
    block = list(block)
    block.remove((n, x))
    return block


def j_hat(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Add a singular string of length mu_L to the first eta_L - 1 blocks;
    identity when the last rectangle is a single column.  Typed over hat(R)."""
    if not rc.rects:
        raise ValueError("j_hat needs a nonempty rectangle sequence")
    w, h = rc.rects[-1]
    if w == 1:
        return rc
    nu = [list(rc.block(k)) for k in range(1, max(rc.num_blocks(), w - 1) + 1)]
    for k in range(1, w):
        nu[k - 1].append((h, rc.vacancy(k, h)))
    return RiggedConfiguration(nu, rc.lam, rs.hat(rc.rects))


def j_hat_inverse(rc: RiggedConfiguration, rects) -> RiggedConfiguration:
    """Strip the singular strings j_hat adds, retyping over the unsplit rects."""
    rects = rs.check_rects(rects)
    w, h = rects[-1]
    if w == 1:
        return rc.retyped(rects=rects)
    if rs.hat(rects) != rc.rects:
        raise ValueError("rects is not the unsplit form of the rc context")
    nu = [list(block) for block in rc.nu]
    for k in range(1, w):
        target = (h, rc.vacancy(k, h))
        if k > len(nu) or target not in nu[k - 1]:
            raise NotInImageError(
                f"no singular string of length {h} in block {k}", rank=k
            )
        nu[k - 1].remove(target)
    return RiggedConfiguration(nu, rc.lam, rects)


def j_check(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Add a label-zero string of length mu_1 to the first eta_1 - 1 blocks;
    identity when the first rectangle is a single column.  Typed over check(R)."""
    if not rc.rects:
        raise ValueError("j_check needs a nonempty rectangle sequence")
    w, h = rc.rects[0]
    if w == 1:
        return rc
    nu = [list(rc.block(k)) for k in range(1, max(rc.num_blocks(), w - 1) + 1)]
    for k in range(1, w):
        nu[k - 1].append((h, 0))
    return RiggedConfiguration(nu, rc.lam, rs.check(rc.rects))


def j_greater(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Inclusion: same data, typed over the last-row split."""
    if not rc.rects:
        raise ValueError("j_greater needs a nonempty rectangle sequence")
    return rc.retyped(rects=rs.split_last_row(rc.rects))


def j_less(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Colabel-preserving map onto the first-row split: labels of strings in
    block eta_1 of length below mu_1 gain one."""
    if not rc.rects:
        raise ValueError("j_less needs a nonempty rectangle sequence")
    w, h = rc.rects[0]
    nu = [
        tuple(
            (n, x + 1) if k == w and n < h else (n, x) for n, x in block
        )
        for k, block in enumerate(rc.nu, start=1)
    ]
    return RiggedConfiguration(nu, rc.lam, rs.split_first_row(rc.rects))


def j_plus(rc: RiggedConfiguration, split: bool = False) -> RiggedConfiguration:
    """Colabel-preserving inclusion along a single-cell height transfer
    between the leading equal-width rectangles."""
    target = rs.e1_split(rc.rects) if split else rs.e1_step(rc.rects)
    moved = rc.retyped(rects=target)
    nu = tuple(
        tuple(
            (n, x + moved.vacancy(k, n) - rc.vacancy(k, n)) for n, x in block
        )
        for k, block in enumerate(rc.nu, start=1)
    )
    return RiggedConfiguration(nu, rc.lam, target)


def _fill_singular(nu_lengths, lam, rects, pending):
    """Build an rc from known string lengths, setting each pending (k, idx)
    label to the vacancy of its string in the new context."""
    probe = RiggedConfiguration(
        [
            [(n, 0 if x is None else x) for n, x in block]
            for block in nu_lengths
        ],
        lam,
        rects,
    )
    nu = []
    for k, block in enumerate(nu_lengths, start=1):
        nu.append(
            [
                (n, probe.vacancy(k, n) if x is None else x)
                for n, x in block
            ]
        )
    return RiggedConfiguration(nu, lam, rects)


def delta_bar_select(rc: RiggedConfiguration):
    """Selected lengths and rank of the box-removing map: lengths[k-1] is the
    minimal singular-string length in block k weakly above the previous one;
    rank is the first block with no such string."""
    if not rc.rects or rc.rects[-1][0] != 1:
        raise ValueError("delta_bar needs a single-column last rectangle")
    prev = rc.rects[-1][1]
    lengths = []
    k = 1
    while True:
        candidates = [
            n
            for n, x in rc.block(k)
            if n >= prev and rc.is_singular(k, n, x)
        ]
        if not candidates:
            return tuple(lengths), k
        prev = min(candidates)
        lengths.append(prev)
        k += 1


def delta_bar(rc: RiggedConfiguration):
    """Shorten one singular string per block up to the rank, keeping the
    shortened strings singular; removes a cell of lambda in the rank column.

    Returns (new rc, rank).
    """
    lengths, rank = delta_bar_select(rc)
    nu = [list(rc.block(k)) for k in range(1, rc.num_blocks() + 1)]
    for k, n in enumerate(lengths, start=1):
        nu[k - 1] = _remove_string(nu[k - 1], n, rc.vacancy(k, n))
        if n > 1:
            nu[k - 1].append((n - 1, None))
    rho = pt.remove_corner_in_column(rc.lam, rank)
    return _fill_singular(nu, rho, rs.bar(rc.rects), None), rank


def delta_bar_inv_select(rc: RiggedConfiguration, column: int) -> dict:
    """Downward selection for the inverse map: in blocks column-1, ..., 1 the
    maximal singular string weakly below the previous choice (0 when none)."""
    selected = {}
    prev = UNBOUNDED
    for k in range(column - 1, 0, -1):
        candidates = [
            n for n, x in rc.block(k) if n <= prev and rc.is_singular(k, n, x)
        ]
        prev = max(candidates) if candidates else 0
        selected[k] = prev
    return selected


def delta_bar_inv(rc: RiggedConfiguration, column: int, rects) -> RiggedConfiguration:
    """Inverse of delta_bar for a cell added in the given column of lambda.

    `rects` is the target rectangle sequence (its bar must be the rc
    context).  Outside the image the failing rank is reported.
    """
    rects = rs.check_rects(rects)
    if not rects or rects[-1][0] != 1:
        raise ValueError("delta_bar_inv needs a single-column last rectangle")
    if rs.bar(rects) != rc.rects:
        raise ValueError("rects does not bar down to the rc context")
    mu_l = rects[-1][1]
    if mu_l > 1:
        _, rank = delta_bar_select(rc)
        if rank < column:
            raise NotInImageError(
                f"rank {rank} below the added column {column}", rank=rank
            )
    lam = pt.add_corner_in_column(rc.lam, column)
    selected = delta_bar_inv_select(rc, column)
    nu = [list(rc.block(k)) for k in range(1, max(rc.num_blocks(), column - 1) + 1)]
    for k in range(1, column):
        s = selected[k]
        if s == 0:
            nu[k - 1].append((1, None))
        else:
            nu[k - 1] = _remove_string(nu[k - 1], s, rc.vacancy(k, s))
            nu[k - 1].append((s + 1, None))
    return _fill_singular(nu, lam, rects, None)


def delta_tilde_select(rc: RiggedConfiguration):
    """Selected lengths and rank for the label-zero variant."""
    if not rc.rects or rc.rects[0][0] != 1:
        raise ValueError("delta_tilde needs a single-column first rectangle")
    prev = rc.rects[0][1]
    lengths = []
    k = 1
    while True:
        candidates = [n for n, x in rc.block(k) if n >= prev and x == 0]
        if not candidates:
            return tuple(lengths), k
        prev = min(candidates)
        lengths.append(prev)
        k += 1


def delta_tilde(rc: RiggedConfiguration):
    """Shorten one label-zero string per block up to the rank, keeping them
    label zero and preserving the colabels of every other string.

    Returns (new rc, rank).  Agrees with conjugating delta_bar by theta_ev.
    """
    lengths, rank = delta_tilde_select(rc)
    rho = pt.remove_corner_in_column(rc.lam, rank)
    new_rects = rs.tilde(rc.rects)
    nu_lengths = []
    for k in range(1, rc.num_blocks() + 1):
        block = list(rc.block(k))
        if k <= len(lengths):
            block = _remove_string(block, lengths[k - 1], 0)
            if lengths[k - 1] > 1:
                block.append((lengths[k - 1] - 1, 0))
        nu_lengths.append(block)
    probe = RiggedConfiguration(nu_lengths, rho, new_rects)
    nu = []
    for k in range(1, rc.num_blocks() + 1):
        shortened = lengths[k - 1] - 1 if k <= len(lengths) else None
        # exactly one string per block keeps label zero: the shortened one
        pending = shortened is not None and shortened >= 1
        block = []
        for n, x in probe.block(k):
            if pending and n == shortened and x == 0:
                block.append((n, 0))
                pending = False
            else:
                block.append((n, x + probe.vacancy(k, n) - rc.vacancy(k, n)))
        assert not pending, "shortened string lost"
        nu.append(block)
    return RiggedConfiguration(nu, rho, new_rects), rank


def delta_tilde_via_theta(rc: RiggedConfiguration):
    """The conjugated form theta_ev . delta_bar . theta_ev; same rank."""
    flipped = theta_ev(rc)
    lowered, rank = delta_bar(flipped)
    return theta_ev(lowered), rank


def partial_del(rc: RiggedConfiguration):
    """Single-row removal map: with the last rectangle a single row of width
    eta_L, blocks below eta_L are untouched and from block eta_L on a minimal
    weakly increasing chain of singular strings is shortened, staying singular.

    Returns (new rc, rank).
    """
    if not rc.rects or rc.rects[-1][1] != 1:
        raise ValueError("partial_del needs a single-row last rectangle")
    eta = rc.rects[-1][0]
    prev = 1
    lengths = {}
    k = eta
    while True:
        candidates = [
            n for n, x in rc.block(k) if n >= prev and rc.is_singular(k, n, x)
        ]
        if not candidates:
            rank = k
            break
        prev = min(candidates)
        lengths[k] = prev
        k += 1
    nu = [list(rc.block(k)) for k in range(1, rc.num_blocks() + 1)]
    for k, n in lengths.items():
        nu[k - 1] = _remove_string(nu[k - 1], n, rc.vacancy(k, n))
        if n > 1:
            nu[k - 1].append((n - 1, None))
    rho = pt.remove_corner_in_column(rc.lam, rank)
    return _fill_singular(nu, rho, rs.remove_last_row_cell(rc.rects), None), rank


def _matrix_bound(rc: RiggedConfiguration) -> int:
    lam = rc.lam
    vals = [pt.part(lam, 1), len(lam), rc.max_string_length(), rc.num_blocks() + 1]
    vals.extend(w for w, _ in rc.rects)
    vals.extend(h for _, h in rc.rects)
    return max(vals) + 1


def tr_rc(rc: RiggedConfiguration) -> RiggedConfiguration:
    """Transpose map on rigged configurations.

    The configuration transposes through its column-difference matrix;
    each label partition is complemented inside its multiplicity-by-vacancy
    box and transposed into the image block.
    """
    bound = _matrix_bound(rc) + 1
    lam, rects = rc.lam, rc.rects
    alpha = [
        [pt.column_height(rc.block_partition(i), j) for j in range(bound + 1)]
        for i in range(bound + 2)
    ]

    def m(i, j):
        return alpha[i - 1][j] - alpha[i][j] if i >= 1 else 0

    def mt(i, j):
        val = -m(j, i) + (1 if pt.contains_cell(lam, i, j) else 0)
        val -= sum(1 for w, h in rects if i <= h and j <= w)
        return val

    # m holds downward column differences, so alpha^t accumulates -m^t
    alpha_t = [[0] * (bound + 1)]
    for i in range(1, bound + 1):
        alpha_t.append(
            [0] + [alpha_t[i - 1][j] - mt(i, j) for j in range(1, bound + 1)]
        )
    blocks_t = []
    for i in range(1, bound + 1):
        cols = [alpha_t[i][j] for j in range(1, bound + 1)]
        part = pt.transpose(tuple(c for c in cols if c > 0))
        blocks_t.append(part)
    lam_t = pt.transpose(lam)
    rects_t = rs.transpose(rects)
    base = RiggedConfiguration(
        [[(n, 0) for n in p] for p in blocks_t], lam_t, rects_t
    )
    # transport the riggings box by box
    labels = {}
    for k in range(1, rc.num_blocks() + 1):
        p = rc.block_partition(k)
        for n in sorted(set(p), reverse=True):
            mnum = pt.mult(p, n)
            pk = rc.vacancy(k, n)
            box = sorted((x for nn, x in rc.block(k) if nn == n), reverse=True)
            complement = sorted((pk - x for x in box), reverse=True)
            transposed = pt.transpose(tuple(c for c in complement if c > 0))
            padded = tuple(transposed) + (0,) * (pk - len(transposed))
            labels[(n, k)] = padded  # labels of the length-k strings in block n
    nu = []
    for bk in range(1, len(blocks_t) + 1):
        p = blocks_t[bk - 1]
        block = []
        for n in sorted(set(p), reverse=True):
            got = labels.get((bk, n))
            mnum = pt.mult(p, n)
            if got is None:
                got = (0,) * mnum
            assert len(got) == mnum, "rigging box does not fit the transpose"
            block.extend((n, x) for x in got)
        nu.append(block)
    return RiggedConfiguration(nu, lam_t, rects_t)
