//! Multi-variable affine index polynomial of virtual links.
//!
//! Diagrams are multi-component signed Gauss codes (see [`gauss`]). The
//! invariant ([`invariant::mvaip`]) is computed from an affine bilabelling
//! ([`labeling`]) and comes with executable checks of its properties:
//! Reidemeister invariance ([`moves`], [`fuzz`]), order-one finite type
//! behaviour ([`vassiliev`]) and starting-point transport ([`shift`]).

pub mod cli;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod fuzz;
pub mod gauss;
pub mod invariant;
pub mod labeling;
pub mod moves;
pub mod poly;
pub mod shift;
pub mod vassiliev;

pub use diagram::{Component, CrossingId, LinkDiagram, Pass, PassKind, Sign, StrandRole};
pub use error::{Error, Result};
pub use gauss::{parse, serialize};
pub use invariant::{aip_knot, kauffman_link_aip, mvaip, InvariantResult};
pub use poly::{AffineExponent, Format, MVPolynomial, Notation};
