"""Continued fractions for Euler's divergent series 1 - a + a(a+b) - ..., evaluated exactly."""

from .brouncker import RSequence, Rejection, cf_from_r, detect_r, series_sum_from_r, telescope_step
from .contfrac import (
    Bracket,
    ContinuedFraction,
    Convergent,
    bracket,
    contract_even,
    convergent_values,
    convergents,
    eval_backward,
)
from .derivation import IdentityReport, verify_chain, verify_identity
from .euler import build_cf, build_cf_mnx, build_contracted, correspondence_order
from .exact import TruncPoly, binomial, parse_rational, poly_mul_trunc
from .series import SeriesParams, gtail_terms, letter, term

__version__ = "0.1.0"
