"""orlicz_kit: Orlicz/Lorentz norm computation and composition-operator certification.

Subpackages by concern:

- ``young``: Young-function families and their calculus (conjugates,
  generalized inverses, growth conditions, product bounds);
- ``measure``: measure spaces, interval/integer set algebra, function
  families, and distribution functions;
- ``norms``: Orlicz modulars, Luxemburg norms, Lorentz quasi-norms, and the
  identity cross-checks between them;
- ``composition``: composition maps with exact preimages, the
  volume-condition certifier, and the counterexample/obstruction demos;
- ``cli`` / ``runner`` / ``config`` / ``reports``: configuration grammar,
  deterministic report envelopes, and the command-line surface.
"""

from .composition import (
    BlockFamily,
    CertificationReport,
    DyadicIntervalFamily,
    FiniteRestrictionMap,
    GaussPowerMap,
    IdentityMap,
    LogFloorMap,
    OrliczInverseMap,
    RandomSubsetFamily,
    certify_min_D,
    check_volume_condition,
    continuity_obstruction_demo,
    counterexample_suite,
    holder_bound_check,
    indicator_sharpness_check,
    modular_bound_check,
    tau_preimage,
)
from .measure import (
    COUNTING_INTEGERS,
    LEBESGUE_LINE,
    ComposedFunction,
    IndicatorFunction,
    IntegerSet,
    IntervalSet,
    MeasureSpace,
    PowerLogDecay,
    RadialPower,
    SimpleFunction,
    counting_finite,
    distribution,
    measure_of,
    set_intersect,
    set_normalize,
    set_union,
)
from .norms import (
    QuadratureSettings,
    embedding_ratio,
    layer_cake_check,
    lorentz_quasinorm,
    lorentz_quasinorm_result,
    luxemburg_norm,
    luxemburg_norm_result,
    modular,
    modular_result,
    power_transform,
    scaling_identity_check,
)
from .reports import TOOL_VERSION, ReportEnvelope
from .young import (
    ExpMinusOneYoung,
    LLogLYoung,
    LinearYoung,
    Nabla2Report,
    PowerComposedYoung,
    PowerYoung,
    TabulatedYoung,
    check_nabla2,
    check_oneil,
    check_power_equivalence,
    complementary,
    estimate_nabla2_exponent,
    eval_young,
    generalized_inverse,
    left_derivative,
    power_compose,
    validate_young,
)

__version__ = TOOL_VERSION
