"""Generalized Kostka polynomials by three independent routes, exact
q-polynomials, and the classical single-row cross-checks.

All arithmetic is exact integer arithmetic on coefficient tuples.
"""

import itertools
from functools import lru_cache

from . import partitions as pt
from . import rectangles as rs
from .bijection import charge
from .lrsets import enumerate_clr
from .rigged import RiggedConfiguration, _label_boxes, cc_config, enumerate_configs
from .tableaux import cst_charge, enumerate_cst


class QPolynomial:
    """Polynomial in q with integer coefficients, exact arithmetic."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = tuple(int(c) for c in coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("QPolynomial is immutable")

    @staticmethod
    def zero() -> "QPolynomial":
        return QPolynomial(())

    @staticmethod
    def one() -> "QPolynomial":
        return QPolynomial((1,))

    @staticmethod
    def q_power(k: int) -> "QPolynomial":
        return QPolynomial((0,) * k + (1,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(
            tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))
        )

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    def __le__(self, other):
        """Coefficientwise comparison."""
        a, b = self.coeffs, other.coeffs
        return all(
            (a[i] if i < len(a) else 0) <= (b[i] if i < len(b) else 0)
            for i in range(max(len(a), len(b)))
        )

    def evaluate(self, v: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def reversed_in_degree(self, d: int) -> "QPolynomial":
        """q^d times the polynomial in 1/q; requires degree <= d."""
        if self.degree() > d:
            raise ValueError("degree exceeds the reversal bound")
        padded = self.coeffs + (0,) * (d + 1 - len(self.coeffs))
        return QPolynomial(tuple(reversed(padded)))

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self):
        return self.render()

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                q = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    terms.append(q)
                elif c == -1:
                    terms.append(f"-{q}")
                else:
                    terms.append(f"{c}{q}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list:
        return list(self.coeffs)


@lru_cache(maxsize=None)
def gaussian_binomial(m: int, n: int) -> QPolynomial:
    """Generating function of partitions inside an m-by-n box; zero for
    negative arguments."""
    if m < 0 or n < 0:
        return QPolynomial.zero()
    if m == 0 or n == 0:
        return QPolynomial.one()
    # split on whether a part equal to n occurs
    return gaussian_binomial(m, n - 1) + QPolynomial.q_power(n) * gaussian_binomial(
        m - 1, n
    )


def kostka_qp(lam, rects) -> QPolynomial:
    """Quasi-particle form: sum over admissible configurations of q^cc times
    the product of label-box generating functions."""
    lam, rects = tuple(lam), tuple(rects)
    out = QPolynomial.zero()
    for config in enumerate_configs(lam, rects):
        rc = RiggedConfiguration([[(n, 0) for n in p] for p in config], lam, rects)
        term = QPolynomial.q_power(cc_config(rc))
        for k, p in enumerate(config, start=1):
            for n in sorted(set(p), reverse=True):
                term = term * gaussian_binomial(pt.mult(p, n), rc.vacancy(k, n))
        out = out + term
    return out


def kostka_rc(lam, rects) -> QPolynomial:
    """Rigged-configuration form: sum of q^cc over all rigged configurations,
    with the riggings of each configuration run through lazily as products
    of box partitions."""
    lam, rects = tuple(lam), tuple(rects)
    counts: dict[int, int] = {}
    for config in enumerate_configs(lam, rects):
        boxes = _label_boxes(lam, rects, config)
        base = cc_config(
            RiggedConfiguration([[(n, 0) for n in p] for p in config], lam, rects)
        )
        choices = [pt.partitions_in_box(m, p) for _, _, m, p in boxes]
        for labels in itertools.product(*choices):
            e = base + sum(map(sum, labels))
            counts[e] = counts.get(e, 0) + 1
    if not counts:
        return QPolynomial.zero()
    coeffs = [0] * (max(counts) + 1)
    for e, c in counts.items():
        coeffs[e] = c
    return QPolynomial(coeffs)


def kostka_charge(lam, rects) -> QPolynomial:
    """Charge form: the generating function of LR tableaux by charge."""
    lam, rects = tuple(lam), tuple(rects)
    counts: dict[int, int] = {}
    for t in enumerate_clr(lam, rects):
        e = charge(t, lam, rects)
        counts[e] = counts.get(e, 0) + 1
    if not counts:
        return QPolynomial.zero()
    coeffs = [0] * (max(counts) + 1)
    for e, c in counts.items():
        coeffs[e] = c
    return QPolynomial(coeffs)


def lr_coefficient(lam, rects) -> int:
    """Tensor-product multiplicity: the number of LR members."""
    lam, rects = tuple(lam), tuple(rects)
    if pt.size(lam) != rs.total_size(rects):
        return 0
    return len(enumerate_clr(lam, rects))


def classical_kostka_foulkes(lam, mu) -> QPolynomial:
    """Independent classical oracle: the generating function of column-strict
    tableaux of shape lam and partition content mu by word charge."""
    lam, mu = tuple(lam), tuple(mu)
    counts: dict[int, int] = {}
    for t in enumerate_cst(lam, mu):
        e = cst_charge(t)
        counts[e] = counts.get(e, 0) + 1
    if not counts:
        return QPolynomial.zero()
    coeffs = [0] * (max(counts) + 1)
    for e, c in counts.items():
        coeffs[e] = c
    return QPolynomial(coeffs)
