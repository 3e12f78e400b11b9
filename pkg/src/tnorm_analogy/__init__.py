"""Triangular-norm algebra and analogical proportions on [0, 1]."""

from tnorm_analogy._kernels import BACKEND
from tnorm_analogy.boolean import (
    BoolQuad,
    PostulateReport,
    analogy_dissim,
    ap_truth_table,
    pia,
    verify_boolean_postulates,
)
from tnorm_analogy.errors import (
    InvalidRange,
    InvalidSegments,
    NegativeParameter,
    NoBracket,
    NotArchimedean,
    OutOfRange,
)
from tnorm_analogy.frank import (
    INF,
    ONE,
    ZERO,
    FrankParam,
    frank_generator,
    frank_regime,
    frank_tconorm,
    frank_tnorm,
)
from tnorm_analogy.graded import (
    ProportionVerdict,
    Quadruple,
    analogy_check,
    geometric_proportion_check,
    goguen_implication,
    mv_degree_dissim,
    mv_degree_similarity,
)
from tnorm_analogy.means import (
    GEO,
    MAX,
    MIN,
    MeanParam,
    mean_analogy_check,
    power_mean,
    solve_r,
)
from tnorm_analogy.options import SolverOptions
from tnorm_analogy.solver import (
    DiffCurve,
    PSearchResult,
    diff_residual,
    minimize_over_d,
    solve_p,
    sweep_d,
)
from tnorm_analogy.tnorms import (
    Frank,
    Lukasiewicz,
    Min,
    NormClass,
    OrdinalSegment,
    OrdinalSum,
    Product,
    classify,
    eval_via_generator,
    generator_eval,
    generator_pseudo_inverse,
    negation,
    ordinal_sum_eval,
    tconorm_eval,
    tnorm_eval,
)

__version__ = "0.1.0"
