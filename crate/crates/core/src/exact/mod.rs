//! Exact arithmetic substrate: rationals, polynomials, root isolation, and
//! certified signs of algebraic numbers.

pub mod ext;
pub mod interval;
pub mod number;
pub mod poly;
pub mod rat;
pub mod sturm;
pub mod tower;

pub use ext::{sign_at, ExtElem, Sign};
pub use interval::Interval;
pub use number::{IntegerVerdict, Number};
pub use poly::{Poly, PolyError};
pub use rat::Rat;
pub use sturm::{sturm_isolate, AlgebraicReal, IsolatingInterval};
