//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch on {axis}: expected {expected}, got {got}")]
    DimensionMismatch {
        axis: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("firm index {firm} out of range (game has {n_firms} firms)")]
    InvalidFirm { firm: usize, n_firms: usize },

    #[error("demand state does not match the game's state space: {0}")]
    InvalidState(String),

    #[error("exact enumeration refused: 2^{bits} states exceeds cap 2^{cap}")]
    EnumerationCap { bits: usize, cap: usize },

    #[error("discount factor {0} outside the open interval (0, 1)")]
    DiscountRange(f64),

    #[error("objective not concave or unbounded: {0}")]
    NotConcave(String),

    #[error("grid too large: {points} points exceeds cap {cap}")]
    GridTooLarge { points: u128, cap: u128 },

    #[error("punishment not harsher than deviation: deviation payoff {deviation} <= punishment payoff {punishment}")]
    PunishmentNotHarsher { deviation: f64, punishment: f64 },

    #[error("degenerate hull: firm's profile prices do not span at least two distinct points")]
    DegenerateHull,

    #[error("strategy profile undefined on state {0}")]
    ProfileIncomplete(String),

    #[error("decision instance has kind {got}, expected {expected}")]
    WrongInstanceKind {
        expected: &'static str,
        got: &'static str,
    },

    #[error("no price grid specified for a continuous-price game")]
    MissingGrid,

    #[error("empty formula")]
    EmptyFormula,

    #[error("clause with {0} literals exceeds the 3-literal limit")]
    ClauseTooLong(usize),

    #[error("clause weights must be positive (found {0})")]
    NonPositiveWeight(f64),

    #[error("literal references variable {var} but the formula has {n_vars} variables")]
    LiteralOutOfRange { var: usize, n_vars: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("punisher budget {budget} exceeds the {available} available punishing firms")]
    PunisherBudget { budget: usize, available: usize },

    #[error("policy count {policies} does not match firm count {firms}")]
    PolicyCount { policies: usize, firms: usize },

    #[error("degenerate normalization: monopoly and competitive markups coincide")]
    DegenerateNormalization,

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
