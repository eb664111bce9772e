use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} coordinates")]
    DimensionMismatch { left: usize, right: usize },

    #[error("the zero vector does not represent a projective point")]
    ZeroVector,

    #[error("point is not interior to the model (<x,x> = {norm})")]
    NotInterior { norm: f64 },

    #[error("pole <b,b> = {norm} does not define a hyperplane meeting the model")]
    DegenerateHyperplane { norm: f64 },

    #[error("hyperplanes are not ultraparallel (cosine of angle {cos_angle})")]
    NotUltraparallel { cos_angle: f64 },

    #[error("matrix is singular or numerically ill-conditioned")]
    Singular,

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid Coxeter label {label} (labels must be >= 2)")]
    InvalidLabel { label: f64 },

    #[error("group-theoretic operation needs integer labels, got {label}")]
    NonIntegerLabel { label: f64 },

    #[error("node index {index} out of range for graph with {order} nodes")]
    NodeOutOfRange { index: usize, order: usize },

    #[error("expected a graph of rank {expected}, got {actual}")]
    InvalidRank { expected: usize, actual: usize },

    #[error("proper parabolic subgroup on nodes {nodes:?} is infinite")]
    InfiniteParabolic { nodes: Vec<usize> },

    #[error("final principal vertex is not outer (cosh argument {value} < 1)")]
    NotTruncated { value: f64 },

    #[error("essential angles give no real theta (radicand {radicand})")]
    ThetaNotReal { radicand: f64 },

    #[error("quadrature did not converge: estimate {estimate}, error {error_estimate}")]
    QuadratureNotConverged { estimate: f64, error_estimate: f64 },

    #[error("{what} must be non-negative, got {value}")]
    NegativeInput { what: &'static str, value: f64 },

    #[error("parameter p = {p} is outside the admissible range: {reason}")]
    InvalidParameter { p: f64, reason: &'static str },

    #[error("expansion x = {x} outside [0, {max}]")]
    OutOfRange { x: f64, max: f64 },

    #[error("{quantity}: routes disagree ({first} vs {second})")]
    RouteMismatch {
        quantity: &'static str,
        first: f64,
        second: f64,
    },

    #[error("cannot parse Schläfli symbol {input:?}: {reason}")]
    ParseSymbol { input: String, reason: String },
}
