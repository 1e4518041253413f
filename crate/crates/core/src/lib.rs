pub mod affine;
pub mod charpoly;
pub mod linalg;
pub mod macdonald;
pub mod qtpoly;
pub mod rootdata;
pub mod weylchar;

pub use affine::{AffineElement, QuantumCover, QuantumGraph};
pub use charpoly::{CharPoly, CharSeries, Monomial};
pub use macdonald::{EPoly, Specialization};
pub use qtpoly::{BiPoly, QTRat};
pub use rootdata::{CartanType, Coweight, RootSystem, Weight, WeylElement};
