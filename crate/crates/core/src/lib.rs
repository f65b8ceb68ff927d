//! Parameter tables of cometric (Q-polynomial) association schemes computed
//! from Krein arrays in exact arithmetic, imprimitivity classification, and
//! certified nonexistence of the exceptional imprimitive six-class family.

pub mod exact;
pub mod classify;
pub mod d6;
pub mod scheme;
pub mod cli;
