//! Frobenius-stable ideals of quotients of polynomial rings over `F_p`.

pub mod ci;
pub mod cli;
pub mod error;
pub mod field;
pub mod frobenius;
pub mod gorenstein;
pub mod groebner;
pub mod monomial;
pub mod poly;
pub mod ring;
pub mod stable;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use groebner::{GbLimits, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ring::PolyRing;
pub use ci::{CISetup, NilpotencyVerdict};
pub use gorenstein::{GorSetup, KuChain};
pub use stable::{
    FRationality, Height, Lattice, Member, MembershipVerdict, NilpotencyStatus, Settings, TestIdealReport, Witness,
};
