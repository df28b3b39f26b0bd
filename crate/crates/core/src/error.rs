use thiserror::Error;

/// Everything that can go wrong in the library. Each variant carries a stable
/// machine-readable code (see [`Error::code`]) used on the CLI error stream.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("direction vector must be nonzero")]
    ZeroVector,
    #[error("cone spans no angle: winding is 0 and both rays coincide")]
    DegenerateCone,
    #[error("matrix determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("{0}")]
    NotCoprime(String),
    #[error("plumbing chain needs at least two spheres, got {0}")]
    TooShort(usize),
    #[error("plumbing chain has no non-negative self-intersection number")]
    NoPivot,
    #[error("{0}")]
    BadInput(String),
    #[error("continued fraction evaluates a division by zero")]
    DivisionByZero,
    #[error("adjunction system Q·a = d is inconsistent; c1 is not torsion on the boundary")]
    NoTorsionC1,
    #[error("boundaries differ: {0} vs {1}")]
    LensMismatch(String, String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroVector => "zero_vector",
            Error::DegenerateCone => "degenerate_cone",
            Error::NotUnimodular(_) => "not_unimodular",
            Error::NotCoprime(_) => "not_coprime",
            Error::TooShort(_) => "too_short",
            Error::NoPivot => "no_pivot",
            Error::BadInput(_) => "bad_input",
            Error::DivisionByZero => "division_by_zero",
            Error::NoTorsionC1 => "no_torsion_c1",
            Error::LensMismatch(..) => "lens_mismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
