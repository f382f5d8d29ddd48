"""betabound: validated-numerics certification of a sharp lower bound for
Euler's beta function on (0,1]^2.

Layers, bottom up:

* ``polys``      exact rational/polynomial algebra (identity certificates)
* ``signs``      one-sign-change criterion and bisection root enclosures
* ``specials``   50-digit gamma/polygamma/beta evaluation (Stirling series)
* ``quadrature`` independent tanh-sinh integral oracles
* ``psibounds``  rational sandwich bounds for psi' and psi''
* ``constants``  the named constants and their reference digits
* ``catalogue``  the bundled certificate polynomials
* ``proof``      step-by-step replay of the case analysis
* ``cli``        the ``betabound`` command
"""

from .catalogue import Catalogue, load_catalogue
from .constants import NamedConstants, compute_constants, solve_a3
from .polys import (
    BiPoly,
    Poly,
    RationalFn,
    bipoly_eval,
    poly_derivative,
    poly_eval,
    rationalfn_equal,
)
from .proof import (
    ProofReport,
    ProofStep,
    Trapezoid,
    big_F,
    big_G,
    remark_sandwich,
    replay_all,
    sweep_theorem,
    theorem_margin,
)
from .psibounds import (
    alzer_psi_diff_lower,
    lx,
    lxx,
    sandwich_check,
    verify_closed_forms,
)
from .signs import (
    Enclosure,
    PatternKind,
    SignPattern,
    SignReport,
    classify,
    isolate_crossing,
    negative_above,
    negative_below,
    positive_above,
    positive_below,
    verify_root_ordering,
)
from .specials import beta, delta, gamma, log_gamma, maximize_delta, psi, psi1, psi2

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "Catalogue",
    "Enclosure",
    "NamedConstants",
    "PatternKind",
    "Poly",
    "ProofReport",
    "ProofStep",
    "RationalFn",
    "SignPattern",
    "SignReport",
    "Trapezoid",
    "alzer_psi_diff_lower",
    "beta",
    "big_F",
    "big_G",
    "bipoly_eval",
    "classify",
    "compute_constants",
    "delta",
    "gamma",
    "isolate_crossing",
    "load_catalogue",
    "log_gamma",
    "lx",
    "lxx",
    "maximize_delta",
    "negative_above",
    "negative_below",
    "poly_derivative",
    "poly_eval",
    "positive_above",
    "positive_below",
    "psi",
    "psi1",
    "psi2",
    "rationalfn_equal",
    "remark_sandwich",
    "replay_all",
    "sandwich_check",
    "solve_a3",
    "sweep_theorem",
    "theorem_margin",
    "verify_closed_forms",
    "verify_root_ordering",
]
