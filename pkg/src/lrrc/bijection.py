"""The quantum-number bijection between LR tableaux and rigged
configurations, its inverse, the coquantum variant, the induced charge
statistics, and the content-permuting and dominance embeddings."""

from dataclasses import dataclass

from . import partitions as pt
from . import rectangles as rs
from .lrsets import MembershipError, _context, is_clr, require_member
from .rigged import (
    EMPTY_RC,
    UNBOUNDED,
    RiggedConfiguration,
    cc,
    delta_bar,
    delta_bar_inv,
    is_admissible,
    j_hat,
    j_hat_inverse,
    j_plus,
    theta,
)
from .tableaux import EMPTY_TABLEAU, Tableau, minus


@dataclass(frozen=True)
class TraceStep:
    """One letter of the direct algorithm: the letter, its column in the
    tableau and in the columnwise filling, the selected string lengths per
    block (0 meaning a new string), and the state after the letter."""

    x: int
    col: int
    zc_col: int
    selected: tuple
    rc: RiggedConfiguration

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "col": self.col,
            "zc_col": self.zc_col,
            "selected": [list(s) for s in self.selected],
            "rc": self.rc.to_json(),
        }


@dataclass(frozen=True)
class BijectionTrace:
    steps: tuple

    def at(self, x: int) -> TraceStep:
        return self.steps[x - 1]

    def to_json(self) -> list:
        return [s.to_json() for s in self.steps]

    def render(self) -> str:
        lines = []
        for s in self.steps:
            lines.append(f"x={s.x}")
            lines.append(s.rc.render())
        return "\n".join(lines)


def _split_context(rects, j, zc_col, zc_row):
    """Rectangle context while filling letter (zc_row, zc_col) of rectangle j:
    the finished rectangles, then the partial one split at its last column."""
    w, h = rects[j]
    c, r = zc_col + 1, zc_row + 1
    out = list(rects[:j])
    if r == h:
        out.append((c, h))
    else:
        out.append((c, r))
        if c > 1:
            out.append((c - 1, h - r))
    return tuple(p for p in out if p[0] >= 1 and p[1] >= 1)


def phi_bar(t: Tableau, lam, rects, with_trace: bool = False):
    """Direct algorithm for the bijection.

    Letters are processed in order; letter x with tableau column c and
    filling column c' adds one box per block from c' up to c-1, each time to
    the longest singular string not longer than the previously lengthened
    one (a new string when none exists), relabeling only the changed strings
    so they stay singular.  Vacancy numbers along the way are taken over the
    split context of the partially filled rectangle.
    """
    lam = tuple(lam)
    rects = rs.check_rects(rects) if rects else ()
    require_member(t, lam, rects)
    ctx = _context(rects)
    n = ctx.size
    pos = {x: (i, j) for i, j, x in t.cells()}
    state = EMPTY_RC
    shape = []
    steps = []
    for x in range(1, n + 1):
        j, zr, zc = ctx.letter_info[x]
        i, col = pos[x]
        c, cp = col + 1, zc + 1
        assert c >= cp, "member letter west of its filling column"
        split = _split_context(rects, j, zc, zr)
        nu = [list(state.block(k)) for k in range(1, max(state.num_blocks(), c - 1) + 1)]
        selected = []
        prev = UNBOUNDED
        for k in range(c - 1, cp - 1, -1):
            candidates = [
                m for m, lbl in state.block(k)
                if m <= prev and state.is_singular(k, m, lbl)
            ]
            s = max(candidates) if candidates else 0
            selected.append((k, s))
            prev = s
            if s == 0:
                nu[k - 1].append((1, None))
            else:
                nu[k - 1].remove((s, state.vacancy(k, s)))
                nu[k - 1].append((s + 1, None))
        while len(shape) <= i:
            shape.append(0)
        shape[i] += 1
        probe = RiggedConfiguration(
            [[(m, 0 if lbl is None else lbl) for m, lbl in b] for b in nu],
            tuple(shape), split,
        )
        state = RiggedConfiguration(
            [
                [
                    (m, probe.vacancy(k, m) if lbl is None else lbl)
                    for m, lbl in b
                ]
                for k, b in enumerate(nu, start=1)
            ],
            tuple(shape),
            split,
        )
        steps.append(TraceStep(x, c, cp, tuple(selected), state))
    assert state.lam == lam and state.rects == rects
    if with_trace:
        return state, BijectionTrace(tuple(steps))
    return state


def phi_bar_recursive(t: Tableau, lam, rects) -> RiggedConfiguration:
    """Column-peeling recurrence for the bijection; the test oracle for the
    direct algorithm.  Splits the last column off a wide last rectangle
    (stripping the added singular strings afterwards), otherwise removes the
    largest letter and rebuilds its box at the vacated column."""
    lam = tuple(lam)
    rects = rs.check_rects(rects) if rects else ()
    require_member(t, lam, rects)
    if not rects:
        return EMPTY_RC
    if rects[-1][0] > 1:
        inner = phi_bar_recursive(t, lam, rs.hat(rects))
        return j_hat_inverse(inner, rects)
    i, jcol = t.find(len(t))
    sub = minus(t)
    inner = phi_bar_recursive(sub, sub.shape(), rs.bar(rects))
    return delta_bar_inv(inner, jcol + 1, rects)


def phi_bar_inv(rc: RiggedConfiguration, certify: bool = False) -> Tableau:
    """Inverse bijection, peeling boxes with the singular-string removal map
    and placing the largest letter at the vacated corner."""
    if not is_admissible(rc):
        raise ValueError("rigged configuration is not admissible")
    lam0, rects0 = rc.lam, rc.rects
    cells = {}
    x = rs.total_size(rc.rects)
    while rc.rects:
        if rc.rects[-1][0] > 1:
            rc = j_hat(rc)
            continue
        lam = rc.lam
        rc, rank = delta_bar(rc)
        cells[x] = (pt.column_height(lam, rank) - 1, rank - 1)
        x -= 1
    if not cells:
        return EMPTY_TABLEAU
    nrows = max(i for i, _ in cells.values()) + 1
    rows = [[] for _ in range(nrows)]
    for letter in sorted(cells):
        i, j = cells[letter]
        while len(rows[i]) < j + 1:
            rows[i].append(0)
        rows[i][j] = letter
    t = Tableau(rows)
    if certify and not is_clr(t, lam0, rects0):
        raise AssertionError("inverse produced a non-member")
    return t


def phi_tilde(t: Tableau, lam, rects) -> RiggedConfiguration:
    """Coquantum bijection: complement the labels of the image."""
    return theta(phi_bar(t, lam, rects))


def phi_tilde_inv(rc: RiggedConfiguration) -> Tableau:
    return phi_bar_inv(theta(rc))


def charge(t: Tableau, lam, rects) -> int:
    """Charge of an LR tableau: the statistic of its coquantum image."""
    return cc(phi_tilde(t, lam, rects))


def cocharge(t: Tableau, lam, rects) -> int:
    return rs.pair_norm(rects) - charge(t, lam, rects)


def sigma_p(t: Tableau, lam, rects, p: int) -> Tableau:
    """Adjacent-rectangle switch on tableaux, through the bijection: the
    rigged-configuration sets over a sequence and its swap coincide."""
    if not 1 <= p <= len(rects) - 1:
        raise ValueError(f"swap position {p} out of range")
    rc = phi_bar(t, lam, rects)
    return phi_bar_inv(rc.retyped(rects=rs.swap(rects, p)))


def i_plus(t: Tableau, lam, rects, split: bool = False) -> Tableau:
    """Single-cell height-transfer embedding, through the bijection and the
    colabel-preserving inclusion on rigged configurations."""
    rc = phi_bar(t, lam, rects)
    return phi_bar_inv(j_plus(rc, split=split))


def embed(t: Tableau, lam, rects, target, moves=None) -> Tableau:
    """Dominance embedding: replay a move decomposition from rects to
    target, switching rectangles and transferring cells."""
    rects = rs.check_rects(rects) if rects else ()
    target = rs.check_rects(target) if target else ()
    if moves is None:
        moves = rs.decompose(rects, target)
    cur = rects
    for move in moves:
        kind = move[0]
        if kind == "swap":
            t = sigma_p(t, lam, cur, move[1])
        elif kind == "e1":
            t = i_plus(t, lam, cur)
        elif kind == "e1split":
            t = i_plus(t, lam, cur, split=True)
        else:
            raise ValueError(f"unknown move {move!r}")
        cur = rs.apply_move(cur, move)
    if cur != target:
        raise ValueError("moves do not lead to the target sequence")
    return t
