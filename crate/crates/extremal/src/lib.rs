//! Exact computations with Lie algebras generated by extremal elements.
//!
//! An element `x` of a Lie algebra is extremal when `[x,[x,y]]` is a
//! multiple `f_x(y) x` of `x` for every `y`. This crate builds the universal
//! algebras generated by such elements, Chevalley algebras of every type over
//! the rationals and small prime fields, and checks structural statements
//! about them with exact arithmetic throughout.
//!
//! All algorithms are generic over [`Scalar`]; the aliases [`Q`], [`Gf3`],
//! [`Gf5`], [`Gf7`], [`Gf11`] and [`Gf13`] name the concrete fields.

pub mod chevalley;
pub mod error;
pub mod freelie;
pub mod liealg;
pub mod linalg;
pub mod nilquot;
pub mod report;
pub mod rootdata;
pub mod rootgroups;
pub mod scalars;
pub mod smallgen;

pub use error::{Error, Result};
pub use liealg::LieAlgebra;
pub use report::Report;
pub use scalars::{Field, FieldSpec, Gf, Gf11, Gf13, Gf3, Gf5, Gf7, Scalar, Q};
