"""pantonum: certified numerics for proportional-delay functional equations.

Subpackages by concern:

* :mod:`pantonum.series`    exact interval evaluation of the delay exponential
* :mod:`pantonum.zeros`     certified real-zero atlas, limit constant, winding counts
* :mod:`pantonum.truncpoly` exact analysis of the truncated polynomials
* :mod:`pantonum.ode`       adaptive solver for proportional-delay ODE systems
* :mod:`pantonum.heat`      Fourier solver for the half-time heat equation
* :mod:`pantonum.burgers`   classical vs. half-time transport demonstration
* :mod:`pantonum.cli`       command-line surface over all of the above
"""

from .errors import (
    BlowUpError,
    BudgetExceededError,
    DatumRejectedError,
    InconclusiveError,
    PantonumError,
    QuadratureError,
    SignIndeterminateError,
    StepSizeError,
)
from .series import (
    DEFAULT_SPEC,
    IntervalValue,
    SeriesSpec,
    eval_float,
    eval_interval,
    sign_at,
    truncation_order,
)

__version__ = "0.1.0"

__all__ = [
    "BlowUpError",
    "BudgetExceededError",
    "DatumRejectedError",
    "DEFAULT_SPEC",
    "InconclusiveError",
    "IntervalValue",
    "PantonumError",
    "QuadratureError",
    "SeriesSpec",
    "SignIndeterminateError",
    "StepSizeError",
    "eval_float",
    "eval_interval",
    "sign_at",
    "truncation_order",
    "__version__",
]
