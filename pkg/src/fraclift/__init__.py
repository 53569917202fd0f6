"""fraclift: fractional derivatives of generalized power series, two ways.

The termwise Riemann-Liouville rule (rl_series) applies Gamma-function
ratios directly and inherits the classical semigroup failures from the
Gamma poles. The lifted route (lift_gen / embed -> shift -> project) turns
differentiation into exact offset arithmetic that commutes unconditionally,
and reproduces the termwise operator wherever the latter is defined.

Hot scalar kernels (log-Gamma, Gamma ratios, term evaluation) run on a
compiled backend when available; `fraclift.KERNEL_BACKEND` names the one in
use ("c" or "python").
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .coeffseq import (
    CoeffSeq,
    GenSeries,
    Term,
    int_antiderivative,
    int_derivative,
    lift_jet,
    monomial,
    seq_add,
    seq_scale,
    series_eval,
    series_from_json,
    series_to_json,
)
from .errors import (
    BasepointError,
    EvalDomainError,
    ExpansionError,
    ExponentError,
    FracliftError,
    GammaOverflowError,
    GammaPoleError,
    LatticeError,
    OracleError,
    ParseError,
    TruncationError,
)
from .gamma import (
    SignedLogGamma,
    gamma,
    gamma_ratio,
    is_pole,
    recip_gamma,
    signed_loggamma,
    sinpi,
)
from .lifted import (
    LiftedSeq,
    embed,
    lift_gen,
    lifted_from_json,
    lifted_to_json,
    project,
    shift,
)
from .oracle import EvalTable, QuadratureConfig, compare, rl_oracle
from .parser import parse, to_series, to_text
from .rl import rl_kernel_predicate, rl_series, rl_term

__version__ = "0.1.0"
