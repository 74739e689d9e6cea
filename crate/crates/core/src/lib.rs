//! Exact Gauss sums, finite Fourier transforms over `F_p`, and
//! multiplicative-character tests, together with exhaustive verifiers for
//! the spectral and autocorrelation characterizations of characters.
//!
//! Everything is computed in the cyclotomic ring `Z[ζ_N]` with
//! arbitrary-precision integer coordinates. No floating point is used
//! anywhere: a magnitude condition such as `|τ(f)| = √p` is decided as the
//! exact identity `τ(f)·conj(τ(f)) = p`.

pub mod classify;
pub mod cyclo;
pub mod error;
pub mod modp;
pub mod spectral;
pub mod verify;

pub use classify::{classify, Classification, SpectralVerdict};
pub use cyclo::{cyclotomic_polynomial, CyclotomicElement, IntPolynomial, UnityOrder};
pub use error::{Error, Result};
pub use modp::{
    enumerate_characters, enumerate_unit_functions, find_primitive_root, is_character_oracle,
    legendre_symbol, mod_inverse, Character, EnumerationBudget, PrimeModulus, UnitFunction,
    UnitFunctionEnumeration,
};
pub use spectral::{
    autocorrelation, fourier_sum, gauss_sum, has_unit_fourier_magnitude, kurlberg_test,
    parseval_sum, spectral_character_test, twisted_gauss_sum, SpectralOutcome, SpectralValue,
};
pub use verify::{default_grid, verify_grid, GridCell, Statement, VerificationReport, Witness};
