"""Investment-strategy simulator for noisy periodic returns."""

from roisim._core import (  # noqa: F401
    ActionMode,
    BudgetSample,
    ExperimentConfig,
    ExperimentResult,
    GaConfig,
    Histogram,
    IncrementalUpdate,
    LineFit,
    MovingAverage,
    MovingLeastSquares,
    ParamGrid,
    QBounds,
    RampRectParams,
    ReturnParams,
    ReturnSeries,
    RngStream,
    StrategyCurve,
    StrategyKind,
    StrategySpec,
    StrategyTrial,
    TrialResult,
    TuneEntry,
    TuneResult,
    __version__,
    consecutive_product_distribution,
    generate_series,
    grid_search,
    histogram,
    mean_abs,
    mean_consecutive_product,
    next_return,
    q_constant,
    q_ramp_rect,
    q_risk_avoiding,
    q_risk_seeking,
    q_square_wave,
    run_experiment,
    run_trial,
    sign_correlation,
    step_budget,
)
