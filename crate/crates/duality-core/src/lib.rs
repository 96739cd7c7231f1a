//! Exact computational model of the duality groups of `n`-fold vector bundles.
//!
//! The group `DG_n` generated by the `n` dualization operations embeds into
//! `Gra(n+1) ⋊ S_{n+1}`, where `Gra(n+1)` is the group of subgraphs of the
//! complete graph on vertices `{0, …, n}` under symmetric difference. This
//! crate implements that embedding and everything reachable from it at desk
//! scale:
//!
//! - [`combinatorics`]: hops, runs, and set partitions of `{0, …, n}`, with
//!   the composition of partitions through complementary blocks.
//! - [`graph`]: labeled graphs as edge bit vectors, the kernel predicate
//!   (even valencies, even edge count), and GF(2) bases of the kernel.
//! - [`perm`] and [`group`]: permutations, semidirect-product elements, the
//!   generator images, word evaluation, BFS enumeration, order formulas,
//!   centre, and the splitting witness of the section construction.
//! - [`theta`]: the action of dualization words on statomorphism parameter
//!   spaces over a point base, in exact integer arithmetic.
//! - [`catalog`]: the 32-element kernel catalogue for `n = 4` with its sign
//!   and multiplication tables.
//! - [`presentation`]: relator verification and Todd-Coxeter coset
//!   enumeration certifying the order of the presented group for `n = 4`.
//!
//! The crate is `no_std` (with `alloc`) and has no dependencies; all
//! arithmetic is exact.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod combinatorics;
pub mod graph;
pub mod group;
pub mod perm;
pub mod presentation;
pub mod rng;
pub mod theta;

mod error;

pub use error::Error;

pub type Result<T> = core::result::Result<T, Error>;

/// Largest supported vertex index: masks fit in `u16`, edge sets in `u128`.
pub const MAX_N: u8 = 14;

/// Cap for partition-enumeration entry points (Bell(9) = 21147 partitions).
pub const MAX_ENUM_N: u8 = 8;
