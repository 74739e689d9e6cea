//! Runs the spectral test and the homomorphism oracle side by side on one function.

use serde::Serialize;

use crate::error::Result;
use crate::modp::{is_character_oracle, UnitFunction};
use crate::spectral::spectral_character_test;

/// Verdict of the spectral route.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SpectralVerdict {
    /// Hypotheses hold; `witness` is the smallest `a` with `|f̂(a)| = 1`.
    Decided { character: bool, witness: Option<u64> },
    /// Hypotheses fail, so the spectral verdict carries no information.
    NotApplicable { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub function: String,
    /// `f` is a multiplicative character (trivial included).
    pub oracle: bool,
    pub trivial: bool,
    pub spectral: SpectralVerdict,
    /// `f` is a nontrivial character, per the oracle.
    pub character: bool,
    /// False only when the spectral route applies and contradicts the oracle.
    pub agreement: bool,
}

pub fn classify(f: &UnitFunction) -> Result<Classification> {
    let oracle = is_character_oracle(f);
    let trivial = f.is_trivial();
    let character = oracle && !trivial;
    let (p, n) = (f.p().get(), f.n().get());
    let spectral = if n % p == 0 {
        SpectralVerdict::NotApplicable { reason: format!("p divides n (p={p}, n={n})") }
    } else if f.exp_at(1) != Some(0) {
        SpectralVerdict::NotApplicable { reason: "f(1) != 1".into() }
    } else {
        let outcome = spectral_character_test(f)?;
        SpectralVerdict::Decided { character: outcome.passes(), witness: outcome.witness }
    };
    let agreement = match &spectral {
        SpectralVerdict::Decided { character: s, .. } => *s == character,
        SpectralVerdict::NotApplicable { .. } => true,
    };
    Ok(Classification { function: f.to_string(), oracle, trivial, spectral, character, agreement })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str) -> UnitFunction {
        text.parse().unwrap()
    }

    #[test]
    fn legendre_mod_7() {
        let c = classify(&f("p=7 n=2 exps=0,0,1,0,1,1")).unwrap();
        assert!(c.character && c.agreement);
        assert_eq!(c.spectral, SpectralVerdict::Decided { character: true, witness: Some(1) });
    }

    #[test]
    fn divisible_order_is_not_applicable() {
        let c = classify(&f("p=3 n=6 exps=0,5")).unwrap();
        assert!(!c.oracle);
        assert!(matches!(c.spectral, SpectralVerdict::NotApplicable { .. }));
    }

    #[test]
    fn unnormalized_function() {
        let c = classify(&f("p=5 n=2 exps=1,0,0,1")).unwrap();
        assert!(!c.character);
        assert_eq!(c.spectral, SpectralVerdict::NotApplicable { reason: "f(1) != 1".into() });
    }

    #[test]
    fn trivial_character_fails_spectral_route() {
        let c = classify(&f("p=5 n=2 exps=0,0,0,0")).unwrap();
        assert!(c.oracle && c.trivial && !c.character && c.agreement);
        assert_eq!(c.spectral, SpectralVerdict::Decided { character: false, witness: None });
    }
}
