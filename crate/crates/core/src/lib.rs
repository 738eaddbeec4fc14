//! Stick representations of bipartite graphs.
//!
//! A stick graph is the intersection graph of vertical sticks (the set `A`)
//! and horizontal sticks (the set `B`) whose bottom, respectively left,
//! endpoints lie on a common ground line of slope −1. This crate decides and
//! constructs such representations under several constraint variants:
//!
//! * [`sweep_ab`]: both ground orders are given (linear-time sweep).
//! * [`stick_a`]: only the order of the vertical sticks is given; the
//!   realizable horizontal orders are tracked in a [`semi_ordered_tree`].
//! * [`fixed_length`]: stick lengths are prescribed; a total ground order is
//!   checked through a system of difference constraints.
//! * [`oracle`]: exponential reference solvers for small instances.
//! * [`gadgets`]: generators for the hardness constructions, with witnesses.
//!
//! Everything is exact rational arithmetic and `no_std` (with `alloc`).

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod epsilon;
pub mod fixed_length;
pub mod gadgets;
pub mod geometry;
pub mod model;
pub mod oracle;
pub mod rational;
pub mod semi_ordered_tree;
pub mod stick_a;
pub mod sweep_ab;

pub use error::Error;
pub use geometry::{components, intersects, verify_representation, Issue, VerifyReport};
pub use model::{Instance, Lengths, Representation, Side, Vertex};
pub use rational::Rational;
