//! Exact-arithmetic engine for q-series identities and partition congruences.
//!
//! The library is organised in layers:
//!
//! * [`series`] — truncated formal power series over arbitrary-precision
//!   integers, plus a fixed-modulus fast kernel for deep congruence checks.
//! * [`products`] — expansions of the named building blocks: Euler products
//!   `E_n = (q^n; q^n)_inf`, general Pochhammer products, `psi(q)`,
//!   `(-q^n; -q^n)_inf`, and the Rogers–Ramanujan quotient `R(q^k)`.
//! * [`oracle`] — independent combinatorial computations (partition
//!   enumeration, hook numbers, t-cores, regular and colored partitions, the
//!   mock theta function beta) used to validate the series machinery.
//! * [`expr`] — a small expression language over these building blocks with a
//!   parser, printer, and evaluator.
//! * [`registry`] — the catalog of identities and congruence claims, with
//!   verification drivers.

pub mod expr;
pub mod oracle;
pub mod products;
pub mod registry;
pub mod series;
