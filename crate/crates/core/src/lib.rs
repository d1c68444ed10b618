//! Exact finite convex geometries and the order dimension of their lattices
//! of closed sets.
//!
//! The crate is split along three layers:
//!
//! * [`geometry`] holds exact rational planar geometry: orientation
//!   predicates, closure by convex hull, circular local sequences, planar
//!   copoint extraction and the composition / `ES(i, j)` / `XES(k)` point-set
//!   constructions.
//! * [`closure`] holds abstract convex geometries over a ground set of at most
//!   [`closure::MAX_ELEMENTS`] elements: axiom validation, closed-set
//!   enumeration, the Hasse diagram of the lattice, copoints, atomicity,
//!   2-edge-connectivity and independent sets.
//! * [`dimension`] holds critical pairs, the critical digraph, chord-free
//!   alternating cycles, exact (hyper)graph colouring, order dimension with a
//!   realizer witness, convex dimension and the law-verification suite.
//!
//! All values are immutable once built and every operation is a pure function
//! of its inputs, so everything here can be shared freely across threads.

pub mod closure;
pub mod dimension;
mod error;
pub mod geometry;
pub mod io;

pub use error::{Error, Result};
