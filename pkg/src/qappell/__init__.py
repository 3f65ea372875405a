"""Exact 2D q-Appell polynomial families and identity verification.

Builds the q-Bernoulli / q-Euler / q-Genocchi families (and custom ones)
from their determining series over exact rationals, and checks the
lowering, recurrence and q-difference-equation identities they satisfy
by exact residual computation, including a bounded search over candidate
readings of the recurrence's printed factors.
"""

from .appell import AppellFamily, build_family, family_series, make_family
from .kernels import BACKEND
from .polyring import Poly2
from .pseries import TSeries, divide, q_exp_big, q_exp_scalar, q_exp_small
from .qcore import QContext, Rational, format_rational, parse_rational
from .verify import (
    CheckResult,
    DERIVED_VARIANT,
    PRINTED_VARIANT,
    Report,
    SuiteConfig,
    VARIANT_SPACE,
    VariantSpec,
    check_closed_forms,
    check_exp_inverse,
    check_kfold,
    check_lowering,
    check_qde,
    check_recurrence,
    run_suite,
    search_recurrence_variants,
)

__version__ = "0.1.0"

__all__ = [
    "AppellFamily",
    "BACKEND",
    "CheckResult",
    "DERIVED_VARIANT",
    "PRINTED_VARIANT",
    "Poly2",
    "QContext",
    "Rational",
    "Report",
    "SuiteConfig",
    "TSeries",
    "VARIANT_SPACE",
    "VariantSpec",
    "build_family",
    "check_closed_forms",
    "check_exp_inverse",
    "check_kfold",
    "check_lowering",
    "check_qde",
    "check_recurrence",
    "divide",
    "family_series",
    "format_rational",
    "make_family",
    "parse_rational",
    "q_exp_big",
    "q_exp_scalar",
    "q_exp_small",
    "run_suite",
    "search_recurrence_variants",
    "__version__",
]
