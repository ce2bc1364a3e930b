//! Exact computational commutative algebra for projective curves: Gröbner
//! bases, ideal calculus, Hilbert functions, syzygies and Hilbert-scheme
//! tangent spaces, linkage and projection, together with a catalogue of
//! explicit ACM curves of degree 4 and genus 0 in P⁴.

pub mod deform;
pub mod error;
pub mod gallery;
pub mod groebner;
pub mod hilbert;
pub mod ideals;
pub mod linalg;
pub mod par;
pub mod polyring;

pub use error::{Error, Result};
