"""Exhaustive desk-scale verification sweeps.

Every theorem-level property of the library is checked over the corpus of
all rectangle sequences within given bounds and all compatible shapes.
Sweeps are deterministic (sorted corpus order, no randomness), so a report
is reproducible from its parameters alone.
"""

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache

from . import partitions as pt
from . import rectangles as rs
from .bijection import (
    charge,
    embed,
    i_plus,
    phi_bar,
    phi_bar_inv,
    phi_bar_recursive,
    phi_tilde,
    sigma_p,
)
from .kostka import (
    classical_kostka_foulkes,
    kostka_charge,
    kostka_qp,
    kostka_rc,
)
from .lrsets import (
    clr_d,
    clr_ev,
    clr_minus,
    cst_from_clr,
    enumerate_clr,
    i_check,
    i_greater,
    i_hat,
    i_less,
    is_clr,
    tr_lr,
)
from .rigged import (
    UNBOUNDED,
    cc,
    delta_bar,
    delta_bar_inv,
    delta_bar_inv_select,
    delta_bar_select,
    delta_tilde,
    delta_tilde_select,
    delta_tilde_via_theta,
    enumerate_rcs,
    is_admissible,
    j_check,
    j_greater,
    j_hat,
    j_less,
    partial_del,
    theta,
    theta_ev,
    tr_rc,
)
from .tableaux import ascents, enumerate_cst, ls_charge, p_tableau, restrict, shift

THEOREMS = (
    "bijectivity",
    "evacuation",
    "transpose",
    "embedding",
    "statistics",
    "commutation",
    "vacancy",
)


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, case: dict, detail: str):
        self.failures.append({"case": case, "detail": detail})

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.theorem}: {status} "
            f"(cases={self.cases}, failures={len(self.failures)}, "
            f"seconds={self.seconds:.1f})"
        )


@lru_cache(maxsize=None)
def rect_sequences(max_size: int, max_rects: int, max_dim: int) -> tuple:
    """All nonempty rectangle sequences within the bounds, sorted."""
    types = [
        (w, h)
        for w in range(1, max_dim + 1)
        for h in range(1, max_dim + 1)
        if w * h <= max_size
    ]
    out = []

    def go(cur, size):
        if cur:
            out.append(tuple(cur))
        if len(cur) == max_rects:
            return
        for r in types:
            if size + r[0] * r[1] <= max_size:
                cur.append(r)
                go(cur, size + r[0] * r[1])
                cur.pop()

    go([], 0)
    return tuple(sorted(out))


def corpus_pairs(max_size: int, max_rects: int, max_dim: int):
    """(rects, lam) pairs over the corpus, every shape of matching size."""
    for rects in rect_sequences(max_size, max_rects, max_dim):
        for lam in pt.partitions_of(rs.total_size(rects)):
            yield rects, lam


def _case(rects, lam, extra=None):
    case = {"rects": rs.render(rects), "lambda": list(lam)}
    if extra:
        case.update(extra)
    return case


def _chi(lo, n, hi) -> int:
    return 1 if (lo <= n and n < hi) else 0


def _chi_half(lo, n, hi) -> int:
    return 1 if (lo < n and n <= hi) else 0


def _ell_chain(first, lengths):
    chain = {0: first}
    for k, n in enumerate(lengths, start=1):
        chain[k] = n
    return lambda k: chain.get(k, UNBOUNDED)


def verify_bijectivity(max_size=7, max_rects=3, max_dim=3) -> VerificationReport:
    """Forward map lands in the rigged configurations and is a bijection;
    the direct and column-peeling forms agree; the inverse round-trips."""
    rep = VerificationReport(
        "bijectivity", dict(max_size=max_size, max_rects=max_rects, max_dim=max_dim)
    )
    t0 = time.monotonic()
    for rects, lam in corpus_pairs(max_size, max_rects, max_dim):
        members = enumerate_clr(lam, rects)
        rcs = enumerate_rcs(lam, rects)
        rep.cases += 1
        images = set()
        for t in members:
            rc = phi_bar(t, lam, rects)
            if not is_admissible(rc):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "image not admissible")
            if rc != phi_bar_recursive(t, lam, rects):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "direct and recursive forms differ")
            if phi_bar_inv(rc, certify=True) != t:
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "inverse does not round-trip")
            images.add(rc)
        if len(images) != len(members):
            rep.fail(_case(rects, lam), "forward map not injective")
        if len(members) != len(rcs):
            rep.fail(_case(rects, lam), f"|CLR|={len(members)} but |RC|={len(rcs)}")
        elif images != set(rcs):
            rep.fail(_case(rects, lam), "image differs from the rigged configuration set")
    rep.seconds = time.monotonic() - t0
    return rep


def verify_evacuation(max_size=7, max_rects=3, max_dim=3) -> VerificationReport:
    """Evacuation corresponds to label complementation with reversal."""
    rep = VerificationReport(
        "evacuation", dict(max_size=max_size, max_rects=max_rects, max_dim=max_dim)
    )
    t0 = time.monotonic()
    for rects, lam in corpus_pairs(max_size, max_rects, max_dim):
        rev = rs.ev(rects)
        for t in enumerate_clr(lam, rects):
            rep.cases += 1
            e = clr_ev(t, lam, rects)
            if not is_clr(e, lam, rev):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "evacuation left the set")
            if clr_ev(e, lam, rev) != t:
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "evacuation not an involution")
            if theta_ev(phi_bar(t, lam, rects)) != phi_bar(e, lam, rev):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "evacuation diagram broken")
            if i_check(e, lam, rev) != clr_ev(i_hat(t, lam, rects), lam, rs.hat(rects)):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "column-split/evacuation diagram broken")
    rep.seconds = time.monotonic() - t0
    return rep


def verify_transpose(max_size=7, max_rects=3, max_dim=3) -> VerificationReport:
    """The bijection intertwines the two transpose maps."""
    rep = VerificationReport(
        "transpose", dict(max_size=max_size, max_rects=max_rects, max_dim=max_dim)
    )
    t0 = time.monotonic()
    for rects, lam in corpus_pairs(max_size, max_rects, max_dim):
        lamt, rt = pt.transpose(lam), rs.transpose(rects)
        for t in enumerate_clr(lam, rects):
            rep.cases += 1
            tt = tr_lr(t, lam, rects)
            if not is_clr(tt, lamt, rt):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "transpose left the set")
            if tr_lr(tt, lamt, rt) != t:
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "tableau transpose not an involution")
            if tr_rc(phi_bar(t, lam, rects)) != phi_bar(tt, lamt, rt):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "transpose diagram broken")
        for rc in enumerate_rcs(lam, rects):
            rep.cases += 1
            if tr_rc(tr_rc(rc)) != rc:
                rep.fail(_case(rects, lam), "configuration transpose not an involution")
    rep.seconds = time.monotonic() - t0
    return rep


def _alt_moves(rects, target):
    """A second, generally different, move decomposition via the reversal."""
    mid = rs.ev(rects)
    return rs.decompose(rects, mid) + rs.decompose(mid, target)


def verify_embedding(max_size=7, max_rects=3, max_dim=3) -> VerificationReport:
    """Dominance embeddings match the inclusion of rigged configurations,
    are path independent, and the switch maps behave as required."""
    rep = VerificationReport(
        "embedding", dict(max_size=max_size, max_rects=max_rects, max_dim=max_dim)
    )
    t0 = time.monotonic()
    for rects, lam in corpus_pairs(max_size, max_rects, max_dim):
        target = rs.rows(rects)
        members = enumerate_clr(lam, rects)
        images = set()
        for t in members:
            rep.cases += 1
            u = embed(t, lam, rects, target)
            images.add(u)
            if not is_clr(u, lam, target):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "embedding left the set")
            if phi_tilde(u, lam, target) != phi_tilde(t, lam, rects).retyped(rects=target):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "embedding diagram broken")
            alt = embed(t, lam, rects, target, moves=_alt_moves(rects, target))
            if alt != u:
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "embedding depends on the path")
            if embed(t, lam, rects, rects) != t:
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "empty move sequence not the identity")
            for p in range(1, len(rects)):
                s = sigma_p(t, lam, rects, p)
                swapped = rs.swap(rects, p)
                if sigma_p(s, lam, swapped, p) != t:
                    rep.fail(_case(rects, lam, {"p": p}), "switch not an involution")
                if p < len(rects) - 1:
                    cut = rs.total_size(rects) - rects[-1][0] * rects[-1][1]
                    a = restrict(s, 1, cut)
                    b = restrict(t, 1, cut)
                    if a != sigma_p(b, b.shape(), rects[:-1], p):
                        rep.fail(_case(rects, lam, {"p": p}), "switch does not commute with restriction")
                else:
                    lhs = clr_ev(s, lam, swapped)
                    rhs = sigma_p(clr_ev(t, lam, rects), lam, rs.ev(rects), 1)
                    if lhs != rhs:
                        rep.fail(_case(rects, lam, {"p": p}), "switch/evacuation diagram broken")
        if len(images) != len(members):
            rep.fail(_case(rects, lam), "embedding not injective")
        # coefficientwise growth of the polynomial under the embedding
        if members and not (kostka_rc(lam, rects) <= kostka_rc(lam, target)):
            rep.fail(_case(rects, lam), "polynomial not monotone under dominance")
    rep.seconds = time.monotonic() - t0
    return rep


def verify_statistics(max_size=7, max_rects=3, max_dim=3) -> VerificationReport:
    """Statistic preservation: the three polynomial forms agree, charge
    specializes classically, and the single-box recursion mechanism holds."""
    rep = VerificationReport(
        "statistics", dict(max_size=max_size, max_rects=max_rects, max_dim=max_dim)
    )
    t0 = time.monotonic()
    for rects, lam in corpus_pairs(max_size, max_rects, max_dim):
        rep.cases += 1
        kq, kr, kc = kostka_qp(lam, rects), kostka_rc(lam, rects), kostka_charge(lam, rects)
        if not (kq == kr == kc):
            rep.fail(
                _case(rects, lam),
                f"forms disagree: qp={kq} rc={kr} charge={kc}",
            )
        krt = kostka_rc(pt.transpose(lam), rs.transpose(rects))
        if krt != kr.reversed_in_degree(rs.pair_norm(rects)):
            rep.fail(_case(rects, lam), "transpose duality broken")
        for rc in enumerate_rcs(lam, rects):
            if cc(rc) + cc(tr_rc(rc)) != rs.pair_norm(rects):
                rep.fail(_case(rects, lam), "cc does not pair to the norm")
        for p in range(1, len(rects)):
            if kostka_rc(lam, rs.swap(rects, p)) != kr:
                rep.fail(_case(rects, lam, {"p": p}), "polynomial not reorder invariant")
    # classical single-row cross-check by the independent word-charge oracle
    for n in range(1, max_size + 1):
        for eta in _compositions(n):
            rects = tuple((e, 1) for e in eta)
            mu = tuple(sorted(eta, reverse=True))
            for lam in pt.partitions_of(n):
                rep.cases += 1
                if kostka_rc(lam, rects) != classical_kostka_foulkes(lam, mu):
                    rep.fail(_case(rects, lam), "single-row classical value differs")
    # single-box mechanism: ascents match the first column of the image
    for n in range(2, min(max_size, 6) + 1):
        rects = ((1, 1),) * n
        for lam in pt.partitions_of(n):
            for t in enumerate_clr(lam, rects):
                rep.cases += 1
                rc = phi_tilde(t, lam, rects)
                a11 = pt.column_height(rc.block_partition(1), 1)
                low, _ = delta_tilde(rc)
                if len(ascents(t)) != a11:
                    rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "ascent count differs")
                if cc(rc) - cc(low) != a11:
                    rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "cc drop differs")
                if charge(t, lam, rects) != ls_charge(t):
                    rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "charge is not the standard charge")
    # content-lowering corollary on column-strict tableaux
    for n in range(1, min(max_size, 6) + 1):
        for mu in pt.partitions_of(n):
            rs_mu = tuple((m, 1) for m in mu)
            for lam in pt.partitions_of(n):
                for t in enumerate_cst(lam, mu):
                    for r in range(1, len(mu) + 1):
                        if pt.part(mu, r) <= pt.part(mu, r + 1):
                            continue
                        rep.cases += 1
                        if not _corollary_case(t, lam, mu, r):
                            rep.fail(
                                _case(rs_mu, lam, {"r": r, "tableau": t.to_json()}),
                                "content-lowering cocharge drop differs",
                            )
    rep.seconds = time.monotonic() - t0
    return rep


def _compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def _cocharge_cst(t, mu) -> int:
    """Cocharge of a column-strict tableau through the standardized member."""
    from .bijection import cocharge
    from .lrsets import beta

    rects = tuple((m, 1) for m in mu)
    s = beta(t, rects)
    return cocharge(s, t.shape(), rects)


def _corollary_case(t, lam, mu, r) -> bool:
    """Rotate the r-th content entry to the end, drop the rightmost copy of
    its letter, rotate back; the cocharge falls by the mu_r-th column height
    of the first block of the image of the transposed member."""
    from .bijection import cocharge
    from .lrsets import beta
    from .tableaux import Tableau

    L = len(mu)
    rects = tuple((m, 1) for m in mu)
    s = beta(t, rects)
    cur_rects, cur = rects, s
    for p in range(r, L):
        cur = sigma_p(cur, lam, cur_rects, p)
        cur_rects = rs.swap(cur_rects, p)
    mid = cst_from_clr(cur, cur_rects)
    # the rightmost copy of the largest letter ends its (longest such) row
    rows = [list(row) for row in mid.rows]
    _, a = max((len(row), i) for i, row in enumerate(rows) if row and row[-1] == L)
    rows[a].pop()
    mid2 = Tableau(rows)
    rects2 = tuple(rr for rr in cur_rects[:-1] + ((cur_rects[-1][0] - 1, 1),) if rr[0] >= 1)
    cur2, cur2_rects = beta(mid2, rects2), rects2
    if pt.part(mu, r) > 1:  # the lowered letter survives; rotate it back
        for p in range(L - 1, r - 1, -1):
            cur2 = sigma_p(cur2, mid2.shape(), cur2_rects, p)
            cur2_rects = rs.swap(cur2_rects, p)
    lhs = _cocharge_cst(t, mu) - cocharge(cur2, mid2.shape(), cur2_rects)
    rc = phi_tilde(tr_lr(s, lam, rects), pt.transpose(lam), rs.transpose(rects))
    rhs = pt.column_height(rc.block_partition(1), pt.part(mu, r))
    return lhs == rhs


def verify_commutation(max_size=7, max_rects=3, max_dim=3) -> VerificationReport:
    """String-map commutation laws and the split/removal diagrams."""
    rep = VerificationReport(
        "commutation", dict(max_size=max_size, max_rects=max_rects, max_dim=max_dim)
    )
    t0 = time.monotonic()
    for rects, lam in corpus_pairs(max_size, max_rects, max_dim):
        n = rs.total_size(rects)
        lamt = pt.transpose(lam)
        for rc in enumerate_rcs(lam, rects):
            rep.cases += 1
            hatted = j_hat(rc)
            checked = j_check(rc)
            for k in range(1, max(hatted.num_blocks(), rc.num_blocks()) + 2):
                for m in range(1, n + 1):
                    if hatted.vacancy(k, m) != rc.vacancy(k, m):
                        rep.fail(_case(rects, lam), "column split changed a vacancy")
                    if checked.vacancy(k, m) != rc.vacancy(k, m):
                        rep.fail(_case(rects, lam), "leading split changed a vacancy")
            if j_check(hatted) != j_hat(checked):
                rep.fail(_case(rects, lam), "the two column splits do not commute")
            if theta_ev(hatted) != j_check(theta_ev(rc)):
                rep.fail(_case(rects, lam), "split/complement diagram broken")
            if tr_rc(hatted) != j_greater(tr_rc(rc)):
                rep.fail(_case(rects, lam), "split/transpose diagram broken")
            if rects[-1][0] == 1:
                low, rank = delta_bar(rc)
                if tr_rc(low) != partial_del(tr_rc(rc))[0]:
                    rep.fail(_case(rects, lam), "removal/transpose diagram broken")
                back = delta_bar_inv(low, rank, rects)
                if back != rc:
                    rep.fail(_case(rects, lam), "removal does not invert")
            if rects[-1][1] == 1:
                if partial_del(rc) != delta_bar(j_hat(rc)):
                    rep.fail(_case(rects, lam), "row removal is not split-then-remove")
            if rects[0][0] == 1:
                if delta_tilde(rc) != delta_tilde_via_theta(rc):
                    rep.fail(_case(rects, lam), "direct and conjugated removals differ")
            if rects[0][0] == 1 and rects[-1][0] == 1 and n >= 2:
                a, rb = delta_bar(rc)
                a2, rt_after_b = delta_tilde(a)
                b, rt = delta_tilde(rc)
                b2, rb_after_t = delta_bar(b)
                if a2 != b2:
                    rep.fail(_case(rects, lam), "the two removals do not commute")
                same = rb_after_t == rb and rt_after_b == rt
                dropped = (
                    rb_after_t == rb - 1
                    and rt_after_b == rt - 1
                    and rb == rt
                    and pt.part(lamt, rb) == pt.part(lamt, rb - 1)
                )
                if same == dropped:
                    rep.fail(_case(rects, lam), "rank alternatives violated")
        for t in enumerate_clr(lam, rects):
            rep.cases += 1
            rc = phi_bar(t, lam, rects)
            if phi_bar(i_check(t, lam, rects), lam, rs.check(rects)) != j_check(rc):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "leading split diagram broken")
            if phi_bar(i_less(t, lam, rects), lam, rs.split_first_row(rects)) != j_less(rc):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "first-row split diagram broken")
            if phi_bar(i_greater(t, lam, rects), lam, rs.split_last_row(rects)) != j_greater(rc):
                rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "last-row split diagram broken")
            if rects[0][0] == 1:
                sub = clr_d(t, lam, rects)
                if phi_bar(sub, sub.shape(), rs.tilde(rects)) != delta_tilde(rc)[0]:
                    rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "slide diagram broken")
            if rects[-1][1] == 1:
                sub = clr_minus(t, lam, rects)
                if (
                    phi_bar(sub, sub.shape(), rs.remove_last_row_cell(rects))
                    != partial_del(rc)[0]
                ):
                    rep.fail(_case(rects, lam, {"tableau": t.to_json()}), "row removal diagram broken")
    rep.seconds = time.monotonic() - t0
    return rep


def verify_vacancy(max_size=7, max_rects=3, max_dim=3) -> VerificationReport:
    """Convexity of vacancy numbers, their stable values, and the local
    change laws under the removal maps and their inverses."""
    rep = VerificationReport(
        "vacancy", dict(max_size=max_size, max_rects=max_rects, max_dim=max_dim)
    )
    t0 = time.monotonic()
    for rects, lam in corpus_pairs(max_size, max_rects, max_dim):
        n = rs.total_size(rects)
        lamt = pt.transpose(lam)
        nmax = n + 1
        for rc in enumerate_rcs(lam, rects):
            rep.cases += 1
            for k in range(1, max(rc.num_blocks() + 1, pt.part(lam, 1)) + 1):
                blockp = rc.block_partition(k)
                for m in range(1, nmax):
                    if pt.mult(blockp, m) == 0:
                        if 2 * rc.vacancy(k, m) < rc.vacancy(k, m - 1) + rc.vacancy(k, m + 1):
                            rep.fail(_case(rects, lam, {"k": k, "n": m}), "convexity broken")
                for m in range(pt.part(lamt, k), nmax):
                    if rc.vacancy(k, m) != pt.part(lamt, k) - pt.part(lamt, k + 1):
                        rep.fail(_case(rects, lam, {"k": k, "n": m}), "stable value wrong")
                # gap bounds between occupied lengths
                occupied = [0] + sorted(set(blockp)) + [nmax]
                for a, b in zip(occupied, occupied[1:]):
                    vals = [rc.vacancy(k, m) for m in range(a, b + 1)]
                    lo = min(vals[0], vals[-1])
                    if any(v < lo for v in vals):
                        rep.fail(_case(rects, lam, {"k": k}), "gap minimum broken")
                    if 0 in vals[1:-1] and any(v != 0 for v in vals):
                        rep.fail(_case(rects, lam, {"k": k}), "interior zero does not flatten")
                    for c in range(len(vals) - 1):
                        if vals[c] == vals[c + 1] == 1 and any(
                            v != 1 for v in vals[1:-1]
                        ):
                            rep.fail(_case(rects, lam, {"k": k}), "double one does not flatten")
            if rects[-1][0] == 1:
                lengths, rank = delta_bar_select(rc)
                low, _ = delta_bar(rc)
                ell = _ell_chain(rects[-1][1], lengths)
                for k in range(1, rank + 2):
                    for m in range(0, nmax):
                        want = _chi(ell(k - 1), m, ell(k)) - _chi(ell(k), m, ell(k + 1))
                        if rc.vacancy(k, m) - low.vacancy(k, m) != want:
                            rep.fail(_case(rects, lam, {"k": k, "n": m}), "removal change law broken")
                back = delta_bar_inv(low, rank, rects)
                sel = delta_bar_inv_select(low, rank)
                sel[0] = rects[-1][1] - 1
                get = lambda k: sel.get(k, UNBOUNDED)
                for k in range(1, rank + 2):
                    for m in range(0, nmax):
                        want = _chi_half(get(k - 1), m, get(k)) - _chi_half(
                            get(k), m, get(k + 1)
                        )
                        if back.vacancy(k, m) - low.vacancy(k, m) != want:
                            rep.fail(_case(rects, lam, {"k": k, "n": m}), "inverse change law broken")
            if rects[0][0] == 1:
                lengths, rank = delta_tilde_select(rc)
                low, _ = delta_tilde(rc)
                ell = _ell_chain(rects[0][1], lengths)
                for k in range(1, rank + 2):
                    for m in range(0, nmax):
                        want = _chi(ell(k - 1), m, ell(k)) - _chi(ell(k), m, ell(k + 1))
                        if rc.vacancy(k, m) - low.vacancy(k, m) != want:
                            rep.fail(_case(rects, lam, {"k": k, "n": m}), "zero-label change law broken")
    rep.seconds = time.monotonic() - t0
    return rep


VERIFIERS = {
    "bijectivity": verify_bijectivity,
    "evacuation": verify_evacuation,
    "transpose": verify_transpose,
    "embedding": verify_embedding,
    "statistics": verify_statistics,
    "commutation": verify_commutation,
    "vacancy": verify_vacancy,
}


def run_verification(theorem="all", max_size=7, max_rects=3, max_dim=3):
    """Run one named sweep or all of them; returns a list of reports."""
    names = THEOREMS if theorem == "all" else (theorem,)
    return [
        VERIFIERS[name](max_size=max_size, max_rects=max_rects, max_dim=max_dim)
        for name in names
    ]
