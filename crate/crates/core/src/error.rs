use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not invertible as a series: constant term is zero")]
    NotInvertible,

    #[error("residue class {residue} mod {period} has {got} distinct samples, need {needed}")]
    InsufficientSamples {
        residue: u64,
        period: u64,
        got: usize,
        needed: usize,
    },

    #[error("inconsistent duplicate samples at s = {s}")]
    InconsistentSamples { s: i64 },

    #[error("samples in residue class {residue} are not interpolated by a polynomial of degree <= {degree_bound}")]
    DegreeBoundExceeded { residue: u64, degree_bound: usize },

    #[error("oracle requires positive generators (got {generator})")]
    NonPositiveGenerator { generator: i64 },

    #[error("zero is not a valid generator")]
    ZeroGenerator,

    #[error("generator set is empty")]
    EmptyGeneratorSet,

    #[error("unknown closed form {name:?}; valid names: {valid}")]
    UnknownClosedForm { name: String, valid: String },

    #[error("partition table holds s <= {available}, need s = {needed}; extend the table")]
    TableTooShort { needed: i64, available: i64 },

    #[error("degenerate system outside Cayley reduction scope: columns {first} and {second} are proportional")]
    DegenerateSystem { first: usize, second: usize },

    #[error("invalid system: {0}")]
    InvalidSystem(String),

    #[error("s = {s} lies outside chamber {r} (bounds [{lower}, {upper}]); s belongs to chamber(s) {expected:?}")]
    OutsideChamber {
        r: u32,
        s: i64,
        lower: i64,
        upper: i64,
        expected: Vec<u32>,
    },

    #[error("chamber forms disagree at m = {m}, n = {n}, r = {r}, s = {s}")]
    ChamberMismatch { m: u32, n: u32, r: u32, s: i64 },

    #[error("unsupported m = {m}: {reason}")]
    UnsupportedM { m: u32, reason: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
