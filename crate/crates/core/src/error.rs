use alloc::string::String;

/// Errors raised by grids, transforms and experiments.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid signal: {0}")]
    InvalidSignal(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The requested evaluation would alias: the sampled integrand is not
    /// resolved by the grid, or a signal leaks into the grid boundary.
    #[error("aliasing risk: {0}")]
    AliasingRisk(String),
    /// Parameters sit on (or too close to) a pole of the family or of the
    /// composition law.
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("inapplicable experiment: {0}")]
    Inapplicable(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

macro_rules! bail {
    ($kind:ident, $($arg:tt)*) => {
        return Err($crate::Error::$kind(alloc::format!($($arg)*)))
    };
}
pub(crate) use bail;
