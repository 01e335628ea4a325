"""Orlicz-space norms, Young-function calculus and discretized Fourier
operators with an empirical boundedness harness."""

from .errors import (CapabilityError, DegenerateFunctionError, DivergenceError, DomainError,
                     FinitenessError, NotStrictError, OrderViolationError, OrliczError,
                     PreconditionError, ResourceError, SqueezingViolationError,
                     SymbolEvaluationError)
from .young import (BUILTIN_NAMES, Delta2Result, EquivalenceResult, ExponentReport, GridConfig,
                    LambdaResult, SqueezingConstants, YoungFunction, check_delta2,
                    check_equivalence, check_lambda, check_squeezing, compute_exponents,
                    evaluate, exponential_smoothing, make_builtin, one_sided_derivative,
                    second_differences, smooth_equivalent, strictly_convex_equivalent)
from .grid import GridFunction, load_grid_function, save_grid_function
from .norms import (NormResult, distribution_function, lp_norm, luxemburg_norm, modular,
                    weak_lp_norm, weak_orlicz_norm)
from .symbols import (PHASE_CATALOG, SYMBOL_CATALOG, PhaseDescriptor, SymbolDescriptor,
                      catalog_phase, catalog_symbol)
from .operators import (PhaseReport, SampledSymbol, apply_fio, apply_multiplier,
                        apply_psdo_general, apply_psdo_kn, fourier_transform,
                        transfer_quantization, validate_phase)
from .conditions import (HormanderReport, MihlinReport, SeminormReport, hormander_class_seminorm,
                         hormander_functional, mihlin_functional, sg_seminorm)
from .thresholds import (ThresholdReport, check_fio_orders, check_lp_fio_orders, fio_threshold,
                         interpolation_window, select_lp_exponents, threshold_report)
from .bench import (CASE_IDS, BoundednessReport, ExperimentSpec, FamilyConfig, generate_family,
                    reproduce_paper, run_boundedness, run_check)

__version__ = "0.1.0"
