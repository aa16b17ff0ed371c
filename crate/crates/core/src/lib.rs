//! Exact-arithmetic toolkit for group codes in finite group algebras.
//!
//! The crate builds up in layers:
//!
//! - [`field`]: GF(p^k) arithmetic on canonical integer representatives.
//! - [`group`]: finite groups as validated multiplication tables, with
//!   subgroup, conjugacy, and Sylow machinery.
//! - [`algebra`]: elements of KG with convolution product, adjoint, inner
//!   product, and idempotency/centrality tests.
//! - [`code`]: right ideals zKG as linear codes — canonical RREF bases,
//!   duals, hulls, LCD/MDS/self-adjoint predicates, exhaustive minimum
//!   distance.
//! - [`lab`]: executable predicates for the structural claims relating
//!   groups, fields, and LCD/MDS codes, plus idempotent search strategies
//!   and batch verification over a catalog of small instances.

// elimination and convolution kernels index several parallel arrays at
// once (and split borrows of the same matrix), where plain index loops
// stay readable
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod code;
pub mod field;
pub mod group;
pub mod lab;
mod linalg;

pub use algebra::{AlgebraElement, AlgebraError};
pub use code::{
    right_annihilator_dimension, CodeError, CodeReport, Distance, DistanceResult, GroupCode,
    DEFAULT_DISTANCE_BUDGET,
};
pub use field::{FieldElement, FieldError, FieldSpec};
pub use group::{Group, GroupDescriptor, GroupError, SubgroupView};
pub use lab::{
    CheckInstance, CheckReport, SearchStrategy, StrategyKind, TheoremId, Verdict,
    DEFAULT_SEARCH_BUDGET,
};
