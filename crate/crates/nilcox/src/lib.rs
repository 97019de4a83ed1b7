//! Demazure operators on the deformed reflection representation of the affine
//! Weyl group of type `A~_{n-1}`, their specialization to `G(m,m,n)` at roots of
//! unity, and the exotic nilCoxeter algebra they generate.
//!
//! Everything is exact: scalars live in `Q[p, p^{-1}]`, in a cyclotomic field
//! `Q(xi)` with `xi` a primitive `2nm`-th root of unity, or in a residue field
//! of `Z[xi]` used only for rank lower bounds.

pub mod affine;
pub mod algebra;
pub mod coinv;
pub mod demazure;
pub mod error;
pub mod exactnum;
pub mod linalg;
pub mod poly;
pub mod refrep;
pub mod verify;

pub use error::{Error, Result};
