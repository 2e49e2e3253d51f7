//! Exact symbolic engine for the combinatorics of parabolically induced
//! representations of classical p-adic groups along a single cuspidal line.
//!
//! Everything is integer-exact: points of the line live in (1/2)Z stored as
//! doubled integers, region geometry uses exact rationals, and all virtual
//! representations are finitely supported integer combinations of canonical
//! basis terms. No floating point enters any computation.
//!
//! Module layout mirrors the mathematical layering:
//!
//! * [`line_core`] — half-integers, segments, multisegments, the line context.
//! * [`gl_ring`] — the general-linear Grothendieck ring: formal sums,
//!   comultiplications, the Zelevinsky involution, small-support products.
//! * [`classical_reps`] — labels for irreducible representations of the
//!   classical groups: Langlands data, tempered labels, Jordan blocks.
//! * [`jacquet_engine`] — Jacquet module computations driven by the closed
//!   formula families and the catalogued case data.
//! * [`composition_db`] — composition series of the critical induced
//!   representations at corank up to three, with duality and unitarity flags.
//! * [`unitarity`] — the unitarizability classifier and the one-parameter
//!   family records.
//! * [`geometry`] — exact hyperplane-region membership and figure emission.
//! * [`verify`] — self-check suites shared by the CLI and the test harness.

pub mod classical_reps;
pub mod composition_db;
pub mod geometry;
pub mod gl_ring;
pub mod jacquet_engine;
pub mod line_core;
pub mod unitarity;
pub mod verify;
