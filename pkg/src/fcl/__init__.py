"""Exact calculus on rational functions F(w) = w P(w)/Q(w).

Free and monotone convolution, moment/cumulant extraction, characteristic
polynomials with real-rootedness certificates, Hankel positivity verdicts,
phase-transition scans, named distribution families, and a numeric density
engine — all over exact rational arithmetic.
"""

from .classf import (ClassF, RatFun, SeriesPrefix, boxplus, compose,
                     cumulants, dilate, free_power, from_r, identity_f,
                     make_classf, make_ratfun, moments, r_transform,
                     translate)
from .errors import (ComputationError, ContinuationFailure,
                     DecompositionNotReal, DegenerateEliminant, FclError,
                     InvalidRTransform, NetworkDisabled, NotFound,
                     NotInClass, NotSquarefree, ParseError)
from .exactalg import AlgebraicReal, BiPoly, Poly, Rat
from .posdef import HankelVerdict, fid_check, hankel_verdict, is_moment_positive_up_to
from .spectra import (CriticalReport, NSetResult, Verdict, char_poly,
                      char_poly_t, cg_region, critical_ts, deg3_rr0, is_rr,
                      is_rr0, is_singular, lb_curve, n_set, r3_poly_rr0,
                      r4_c0_classify, r4_singular_params, rr0_at_algebraic_t)

__version__ = "0.1.0"
