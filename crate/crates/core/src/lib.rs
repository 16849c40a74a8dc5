//! Exact symbolic pipeline for the offset/ED apparatus of a real algebraic variety:
//! ED correspondence, ED polynomial, offset discriminant, bisector, ED discriminant,
//! curvature correspondence, critical-curvature ideal and its degree, with real
//! critical centers and radii of curvature reported in exact rational arithmetic.

pub mod error;
pub mod gcd;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod input;
pub mod matrix;
pub mod parse;
pub mod pipeline;
pub mod poly;
pub mod realroots;
pub mod report;
pub mod resultant;
pub mod ring;

pub use error::{Error, Guard, Result};
pub use ideal::{GroebnerBasis, Ideal};
pub use matrix::PolyMatrix;
pub use pipeline::{Pipeline, VarietyInput};
pub use poly::{Monomial, Polynomial, Rat};
pub use ring::{TermOrder, VarSet};
