use thiserror::Error;

/// Errors produced while building grids, evaluating schemes, or driving solves.
#[derive(Debug, Error)]
pub enum Error {
    #[error("quadrature order must lie in 1..={max}, got {got}")]
    InvalidOrder { got: usize, max: usize },

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("point {point:?} lies outside the computational domain")]
    OutOfDomain { point: Vec<f64> },

    #[error("time step too large: h*c = {0} must stay strictly below 1")]
    StepTooLarge(f64),

    #[error("stencil condition violated: h^2/hhat = {0} exceeds 1")]
    StencilCondition(f64),

    #[error("matrix is not positive semidefinite: eigenvalue {0}")]
    NotPositiveSemidefinite(f64),

    #[error("transition probabilities degenerate: p(x,x) = {0} is negative; coefficients are not normalized")]
    NormalizationViolated(f64),

    #[error(
        "diffusion matrix varies with x at control {control}; \
         the finite-difference scheme requires sigma*sigma^T to depend on the control only"
    )]
    DiffusionVariesWithX { control: f64 },

    #[error("discount coefficient must stay positive: sampled minimum {0}")]
    NonPositiveDiscount(f64),

    #[error("control grid needs at least two points, got {0}")]
    TooFewControls(usize),

    #[error("unknown benchmark case {0}, expected 1..=4")]
    UnknownCase(usize),

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("invalid iteration parameters: {0}")]
    InvalidIteration(String),

    #[error("problem config: {0}")]
    Config(String),

    #[error("invalid grid function: {0}")]
    InvalidGridFunction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
