"""Littlewood-Richardson tableaux, rigged configurations, the
statistic-preserving bijection between them, and generalized Kostka
polynomials computed three independent ways."""

from . import bijection, kostka, lrsets, partitions, rectangles, rigged, tableaux
from .bijection import (
    BijectionTrace,
    charge,
    cocharge,
    embed,
    i_plus,
    phi_bar,
    phi_bar_inv,
    phi_bar_recursive,
    phi_tilde,
    phi_tilde_inv,
    sigma_p,
)
from .kostka import (
    QPolynomial,
    classical_kostka_foulkes,
    gaussian_binomial,
    kostka_charge,
    kostka_qp,
    kostka_rc,
    lr_coefficient,
)
from .lrsets import (
    MembershipError,
    beta,
    enumerate_clr,
    enumerate_clr_all,
    gamma,
    is_clr,
    tr_lr,
)
from .rigged import (
    RiggedConfiguration,
    cc,
    delta_bar,
    delta_bar_inv,
    delta_tilde,
    enumerate_configs,
    enumerate_rcs,
    is_admissible,
    j_check,
    j_greater,
    j_hat,
    j_less,
    j_plus,
    partial_del,
    theta,
    theta_ev,
    tr_rc,
)
from .tableaux import (
    Tableau,
    d_map,
    evacuate,
    ls_charge,
    minus,
    restrict,
    schensted_p,
    standardize,
    transpose_st,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
