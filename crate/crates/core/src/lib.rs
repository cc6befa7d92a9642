//! Lower bounds, certificates and extremal search for the image of
//! `f(x, y) = g(x) + y h(x)` on product sets over finite fields.

pub mod bound;
pub mod certificate;
pub mod cli;
pub mod explore;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod sampling;
pub mod selftest;
mod text;
