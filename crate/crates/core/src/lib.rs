//! Exact noncommutative differential and Riemannian geometry on finite
//! groups and finite sets.
//!
//! Everything is computed over the rationals. A finite group together with an
//! Ad-stable subset `C` determines a bicovariant calculus with left-invariant
//! 1-forms `E_a`; on top of it the crate builds 2-forms, metrics, spin
//! connections with their torsion and cotorsion, curvature, Ricci tensors and
//! Dirac operators, plus a tensorial engine for general finite sets.

pub mod linalg;
pub mod mpoly;
pub mod poly;
pub mod rational;
pub mod roots;

pub mod group;
pub mod calculus;
pub mod riemannian;
pub mod dirac;
pub mod finset;
pub mod io;
