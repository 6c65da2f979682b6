//! Exact computations with spectra of finite and symbolically presented
//! commutative rings, and the compactifications they produce.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`]: finite commutative rings (products of `Z/p^k` or explicit
//!   Cayley tables), ideals, quotients and localizations.
//! * [`boolring`]: the power set ring of a finite set and a symbolic Boolean
//!   ring of ultimately periodic subsets of the naturals.
//! * [`spectrum`]: prime, minimal and maximal spectra together with their
//!   Zariski and flat topologies.
//! * [`stone`]: Stone duality for Boolean rings, ultrafilters, and the
//!   compactifications `Spec(R')` of the discrete naturals.
//! * [`ultra`]: ultra-ring ideals `M*` and `M♭` of product rings and the
//!   homeomorphisms between `Spec P(X)`, `Min(Λ)` and `Max(Γ)`.
//! * [`topspace`]: finite topological spaces, Zariski convergence and the
//!   Stone-Čech compactification of a finite space.
//! * [`emit`]: JSON, DOT and table rendering for command output.
//! * [`verify`]: the executable property suites, addressable by id.

pub mod boolring;
pub mod cli;
pub mod corpus;
pub mod emit;
mod error;
pub mod ring;
pub mod spectrum;
pub mod stone;
pub mod topspace;
pub mod ultra;
pub mod verify;

pub use error::{Error, Result};
