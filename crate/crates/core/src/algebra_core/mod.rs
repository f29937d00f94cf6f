//! Exact arithmetic, canonical decorated rooted trees and forests, graded
//! linear combinations, and the expression text format.

pub mod expr;
pub mod lincomb;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod tree;

pub use expr::{format_element, parse_element, parse_forest, parse_tree};
pub use lincomb::{GLVector, LinComb};
pub use matrix::Matrix;
pub use poly::{Laurent, MultiPoly, Poly};
pub use scalar::{binomial, factorial, int, parse_rational, rat, Rational, Ring};
pub use tree::{forests_of_size, trees_of_size, trees_up_to, Alphabet, Decoration, Forest, Tree};
