//! Exact verification of harmonic number identities obtained by
//! differentiating the Chu-Vandermonde convolution.
//!
//! * [`exact`]: rationals, signed binomials, factorials, harmonic numbers.
//! * [`jets`]: bivariate first-order jets; derivative operators become
//!   coefficient reads.
//! * [`identities`]: the identity registry, seed convolutions and the
//!   jet-based derivation and shift checks.
//! * [`verify`]: grid sweeps, verification records and report formats.
//! * [`cli`]: the `hnid` command line (`verify`, `list`, `derive`).

pub mod cli;
pub mod exact;
pub mod identities;
pub mod jets;
pub mod verify;

pub use exact::{binomial, factorial, harmonic, HarmonicTable, Rational};
pub use identities::{
    list_identities, registry, CaseTag, ClosedForm, IdentityDescriptor, IdentityParams, Registry,
};
pub use jets::{jet_binomial_affine, Component, Jet2};
