from .analysis import (
    CLASSICAL_UPPER,
    BoundsRecord,
    SweepRow,
    Table1Report,
    advantage_threshold,
    bounds_record,
    entanglement_class,
    mermin_lower_bound,
    noise_sweep,
    quantum_success,
    separability_thresholds,
    table1_reproduce,
)
from .boolean import TABLE1_ORDER, TwoBitBoolean, eval_g, even_class, odd_class, symmetry_image
from .errors import DomainError, EmptyEnsembleError, GameError, LimitError, ValidationError
from .quantum import (
    MeasurementSetting,
    NoisyGHZ,
    OutcomeDistribution,
    PureState,
    SampledResult,
    apply_pauli_string,
    ghz_property_report,
    ghz_state,
    joint_distribution_analytic,
    joint_distribution_oracle,
    run_protocol_exact,
    run_protocol_sampled,
)
from .search import (
    classical_optimum,
    exhaustive_search_cc2,
    optimal_decoding_for_encodings,
    subtask_optimum,
)
from .strategy import (
    ClassicalStrategyCC2,
    GeneralClassicalStrategy,
    SearchReport,
    mixed_protocol_success,
    shared_randomness_success,
    strategy_success,
    strategy_success_cc2,
)
from .task import (
    InstanceEnsemble,
    TaskInstance,
    enumerate_instances,
    iter_instances,
    parity_indicator,
    promise_holds,
    restrict_to_subtask,
    target_function,
)
