//! Exhaustive small-case verification of the character characterizations.
//!
//! Every check enumerates all functions `F_p^× → μ_n` in a cell (with or
//! without `f(1) = 1`, following the statement's hypotheses), evaluates the
//! spectral or autocorrelation criterion exactly, and compares it with the
//! brute-force homomorphism oracle. Cells are evaluated in parallel but
//! results are merged in enumeration order, so reports are deterministic.

use std::fmt;
use std::str::FromStr;
use web_time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclo::{CyclotomicElement, UnityOrder};
use crate::error::{Error, Result};
use crate::modp::{
    enumerate_unit_functions, is_character_oracle, EnumerationBudget, PrimeModulus, UnitFunction,
};
use crate::spectral::{
    gauss_sum, has_unit_fourier_magnitude, kurlberg_test, spectral_character_test,
    unit_magnitude_set,
};

/// Statement identifiers, as they appear in reports and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Statement {
    /// Sign functions: the Legendre symbol is the only one with `|τ(f)| = √p`.
    #[serde(rename = "prop_1_1")]
    LegendreGaussSum,
    /// `f` is a nontrivial character iff `|f̂(a)| = 1` for some `a ≠ 0`.
    #[serde(rename = "thm_1_2")]
    SpectralCharacter,
    /// `|f̂(a)| = 1` holds for all `a ≠ 0` or for none.
    #[serde(rename = "cor_1_3")]
    UnitMagnitudeDichotomy,
    /// `τ(g) ∈ Q(ζ_n)` forces `g ≡ −τ(g)`.
    #[serde(rename = "lemma_2_1")]
    RationalGaussSum,
    /// With `f(1) = 1`: nontrivial character iff `|τ(f)| = √p`.
    #[serde(rename = "prop_2_2")]
    ConverseGauss,
    /// Without `f(1) = 1`: `|τ(f)| = √p` iff `f = ε·χ`.
    #[serde(rename = "cor_2_3")]
    ConstantTimesCharacter,
    /// Nontrivial characters are exactly the functions with the flat autocorrelation profile.
    #[serde(rename = "thm_1_7")]
    Autocorrelation,
    /// The non-character at `p = 3, n = 6` with `|τ(f)| = √3`.
    #[serde(rename = "remark_p_divides_n")]
    RemarkCounterexample,
    /// Non-characters with `|τ(f)| = √p` when `p | n`.
    #[serde(rename = "search_p_divides_n")]
    SearchPDividesN,
}

impl Statement {
    pub const ALL: [Statement; 9] = [
        Statement::LegendreGaussSum,
        Statement::SpectralCharacter,
        Statement::UnitMagnitudeDichotomy,
        Statement::RationalGaussSum,
        Statement::ConverseGauss,
        Statement::ConstantTimesCharacter,
        Statement::Autocorrelation,
        Statement::RemarkCounterexample,
        Statement::SearchPDividesN,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::LegendreGaussSum => "prop_1_1",
            Statement::SpectralCharacter => "thm_1_2",
            Statement::UnitMagnitudeDichotomy => "cor_1_3",
            Statement::RationalGaussSum => "lemma_2_1",
            Statement::ConverseGauss => "prop_2_2",
            Statement::ConstantTimesCharacter => "cor_2_3",
            Statement::Autocorrelation => "thm_1_7",
            Statement::RemarkCounterexample => "remark_p_divides_n",
            Statement::SearchPDividesN => "search_p_divides_n",
        }
    }

    /// Whether the enumeration pins `f(1) = 1`.
    pub fn fixes_f1(self) -> bool {
        !matches!(
            self,
            Statement::UnitMagnitudeDichotomy
                | Statement::RationalGaussSum
                | Statement::ConstantTimesCharacter
        )
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statement::ALL
            .into_iter()
            .find(|st| st.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown statement `{s}`")))
    }
}

/// A function that passed a criterion, with the Fourier index that witnesses it
/// when one applies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub exps: Vec<u64>,
    pub a: Option<u64>,
}

/// Outcome of one exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement: Statement,
    pub p: u64,
    pub n: u64,
    #[serde(skip)]
    pub budget: u64,
    pub total_functions: u64,
    pub passing_spectral: u64,
    pub passing_oracle: u64,
    pub mismatch_count: u64,
    /// Exponent tables of the offending functions.
    pub mismatches: Vec<Vec<u64>>,
    pub witnesses: Vec<Witness>,
    pub elapsed_ms: u64,
    pub success: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    /// The report with its timing zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        VerificationReport { elapsed_ms: 0, ..self.clone() }
    }

    /// One JSON object on a single line, in the stable field order.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    fn failed(statement: Statement, p: u64, n: u64, budget: u64, err: &Error) -> Self {
        VerificationReport {
            statement,
            p,
            n,
            budget,
            total_functions: 0,
            passing_spectral: 0,
            passing_oracle: 0,
            mismatch_count: 0,
            mismatches: Vec::new(),
            witnesses: Vec::new(),
            elapsed_ms: 0,
            success: false,
            error: Some(err.to_string()),
        }
    }
}

/// Per-function verdict produced inside a cell.
#[derive(Default)]
struct Verdict {
    spectral: bool,
    oracle: bool,
    mismatch: bool,
    witness: Option<Option<u64>>,
}

fn run_cell<F>(
    statement: Statement,
    p: PrimeModulus,
    n: UnityOrder,
    budget: EnumerationBudget,
    judge: F,
) -> Result<VerificationReport>
where
    F: Fn(&UnitFunction) -> Result<Verdict> + Sync,
{
    let start = Instant::now();
    let functions = enumerate_unit_functions(p, n, statement.fixes_f1(), budget)?;
    let verdicts = (0..functions.len())
        .into_par_iter()
        .map(|i| {
            let f = functions.get(i);
            judge(&f).map(|v| (f, v))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = VerificationReport {
        statement,
        p: p.get(),
        n: n.get(),
        budget: budget.0,
        total_functions: functions.len(),
        passing_spectral: 0,
        passing_oracle: 0,
        mismatch_count: 0,
        mismatches: Vec::new(),
        witnesses: Vec::new(),
        elapsed_ms: 0,
        success: false,
        error: None,
    };
    for (f, v) in verdicts {
        report.passing_spectral += u64::from(v.spectral);
        report.passing_oracle += u64::from(v.oracle);
        if v.mismatch {
            report.mismatches.push(f.exps().to_vec());
        }
        if let Some(a) = v.witness {
            report.witnesses.push(Witness { exps: f.exps().to_vec(), a });
        }
    }
    report.mismatch_count = report.mismatches.len() as u64;
    report.success = report.mismatches.is_empty();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn require_coprime(p: PrimeModulus, n: UnityOrder) -> Result<()> {
    if n.get().is_multiple_of(p.get()) {
        return Err(Error::Hypothesis(format!("p divides n (p={p}, n={n})")));
    }
    Ok(())
}

fn is_nontrivial_character(f: &UnitFunction) -> bool {
    !f.is_trivial() && is_character_oracle(f)
}

// |τ(f)| = √p is equivalent to |f̂(−1)| = 1, so p − 1 is recorded as the witness.
fn gauss_witness(f: &UnitFunction, passes: bool) -> Option<Option<u64>> {
    passes.then_some(Some(f.p().get() - 1))
}

/// Over all `f : F_p^× → {±1}` with `f(1) = 1`, only the Legendre symbol
/// has `|τ(f)|² = p`.
pub fn verify_prop_1_1(p: PrimeModulus, budget: EnumerationBudget) -> Result<VerificationReport> {
    let n = UnityOrder::new(2)?;
    let legendre = UnitFunction::legendre(p);
    run_cell(Statement::LegendreGaussSum, p, n, budget, |f| {
        let spectral = gauss_sum(f)?.has_magnitude_sqrt_p();
        let oracle = is_nontrivial_character(f);
        let is_legendre = *f == legendre;
        Ok(Verdict {
            spectral,
            oracle,
            mismatch: spectral != is_legendre || oracle != is_legendre,
            witness: gauss_witness(f, spectral),
        })
    })
}

/// Spectral test versus the oracle on every `f` with `f(1) = 1`.
pub fn verify_thm_1_2(
    p: PrimeModulus,
    n: UnityOrder,
    budget: EnumerationBudget,
) -> Result<VerificationReport> {
    require_coprime(p, n)?;
    run_cell(Statement::SpectralCharacter, p, n, budget, |f| {
        let outcome = spectral_character_test(f)?;
        let oracle = is_nontrivial_character(f);
        Ok(Verdict {
            spectral: outcome.passes(),
            oracle,
            mismatch: outcome.passes() != oracle,
            witness: outcome.witness.map(Some),
        })
    })
}

/// The set `{a ≠ 0 : |f̂(a)| = 1}` is empty or everything.
pub fn verify_cor_1_3(
    p: PrimeModulus,
    n: UnityOrder,
    budget: EnumerationBudget,
) -> Result<VerificationReport> {
    require_coprime(p, n)?;
    let full = p.get() as usize - 1;
    run_cell(Statement::UnitMagnitudeDichotomy, p, n, budget, |f| {
        let hits = unit_magnitude_set(f)?;
        let oracle = is_nontrivial_character(&f.normalized_at_one());
        Ok(Verdict {
            spectral: hits.len() == full,
            oracle,
            mismatch: !hits.is_empty() && hits.len() != full,
            witness: hits.first().map(|&a| Some(a)),
        })
    })
}

/// `τ(g) ∈ Q(ζ_n)` exactly for the `n` constant functions, each with `g ≡ −τ(g)`.
pub fn verify_lemma_2_1(
    p: PrimeModulus,
    n: UnityOrder,
    budget: EnumerationBudget,
) -> Result<VerificationReport> {
    require_coprime(p, n)?;
    run_cell(Statement::RationalGaussSum, p, n, budget, |g| {
        let tau = gauss_sum(g)?.into_value();
        let in_subfield = tau.in_subfield(n)?;
        let constant = g.is_constant();
        let mut mismatch = in_subfield != constant;
        if in_subfield {
            // g(a) = ζ_n^k for every a; compare with −τ(g) inside Z[ζ_L].
            let value = CyclotomicElement::zeta_pow(n, g.exps()[0] as i64).embed(tau.order())?;
            mismatch |= value != tau.neg();
        }
        Ok(Verdict {
            spectral: in_subfield,
            oracle: constant,
            mismatch,
            witness: in_subfield.then_some(None),
        })
    })
}

/// With `f(1) = 1`: `|τ(f)|² = p` iff `f` is a nontrivial character.
pub fn verify_prop_2_2(
    p: PrimeModulus,
    n: UnityOrder,
    budget: EnumerationBudget,
) -> Result<VerificationReport> {
    require_coprime(p, n)?;
    run_cell(Statement::ConverseGauss, p, n, budget, |f| {
        let spectral = gauss_sum(f)?.has_magnitude_sqrt_p();
        let oracle = is_nontrivial_character(f);
        Ok(Verdict { spectral, oracle, mismatch: spectral != oracle, witness: gauss_witness(f, spectral) })
    })
}

/// Without `f(1) = 1`: `|τ(f)|² = p` iff `f = f(1)·(conj(f(1))·f)` with the
/// second factor a nontrivial character.
pub fn verify_cor_2_3(
    p: PrimeModulus,
    n: UnityOrder,
    budget: EnumerationBudget,
) -> Result<VerificationReport> {
    require_coprime(p, n)?;
    run_cell(Statement::ConstantTimesCharacter, p, n, budget, |f| {
        let spectral = gauss_sum(f)?.has_magnitude_sqrt_p();
        let epsilon = f.exps()[0];
        let chi = f.normalized_at_one();
        let factors = is_nontrivial_character(&chi) && chi.rotate(epsilon) == *f;
        Ok(Verdict {
            spectral,
            oracle: factors,
            mismatch: spectral != factors,
            witness: gauss_witness(f, spectral),
        })
    })
}

/// Flat autocorrelation profile iff nontrivial character.
///
/// The trivial character has autocorrelation `p − 2` at every nonzero shift,
/// so it fails the profile test and is counted on neither side.
pub fn verify_thm_1_7(
    p: PrimeModulus,
    n: UnityOrder,
    budget: EnumerationBudget,
) -> Result<VerificationReport> {
    run_cell(Statement::Autocorrelation, p, n, budget, |f| {
        let spectral = kurlberg_test(f);
        let oracle = is_nontrivial_character(f);
        Ok(Verdict { spectral, oracle, mismatch: spectral != oracle, witness: spectral.then_some(None) })
    })
}

/// `p = 3, n = 6, f = (1, e(5/6))`: `|τ(f)|² = 3` although `f` is not a character.
pub fn remark_counterexample() -> Result<VerificationReport> {
    let start = Instant::now();
    let f = UnitFunction::from_parts(3, 6, &[0, 5])?;
    let (p, n) = (f.p(), f.n());
    let spectral = gauss_sum(&f)?.has_magnitude_sqrt_p();
    let oracle = is_character_oracle(&f);
    let witness = has_unit_fourier_magnitude(&f, 2)?;
    let holds = spectral && !oracle && n.get() % p.get() == 0 && witness;
    Ok(VerificationReport {
        statement: Statement::RemarkCounterexample,
        p: p.get(),
        n: n.get(),
        budget: 1,
        total_functions: 1,
        passing_spectral: u64::from(spectral),
        passing_oracle: u64::from(oracle),
        mismatch_count: u64::from(!holds),
        mismatches: if holds { Vec::new() } else { vec![f.exps().to_vec()] },
        witnesses: if witness { vec![Witness { exps: f.exps().to_vec(), a: Some(2) }] } else { Vec::new() },
        elapsed_ms: start.elapsed().as_millis() as u64,
        success: holds,
        error: None,
    })
}

/// Lists the non-characters with `|τ(f)|² = p` when `p | n`.
///
/// `passing_spectral` counts those hits and `passing_oracle` counts the
/// characters. A mismatch is a nontrivial character with `|τ|² ≠ p` or a
/// character whose minimal order is divisible by `p`; neither can occur.
pub fn search_p_divides_n(
    p: PrimeModulus,
    n: UnityOrder,
    budget: EnumerationBudget,
) -> Result<VerificationReport> {
    if !n.get().is_multiple_of(p.get()) {
        return Err(Error::Hypothesis(format!("p does not divide n (p={p}, n={n})")));
    }
    run_cell(Statement::SearchPDividesN, p, n, budget, |f| {
        let magnitude = gauss_sum(f)?.has_magnitude_sqrt_p();
        let character = is_character_oracle(f);
        let hit = magnitude && !character;
        let mismatch =
            character && !f.is_trivial() && (!magnitude || f.minimal_order() % p.get() == 0);
        Ok(Verdict { spectral: hit, oracle: character, mismatch, witness: gauss_witness(f, hit) })
    })
}

/// One `(statement, p, n)` entry of a verification grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridCell {
    pub statement: Statement,
    pub p: u64,
    pub n: u64,
}

impl GridCell {
    pub fn new(statement: Statement, p: u64, n: u64) -> Self {
        GridCell { statement, p, n }
    }

    pub fn run(&self, budget: EnumerationBudget) -> Result<VerificationReport> {
        let p = PrimeModulus::new(self.p)?;
        let n = UnityOrder::new(self.n)?;
        match self.statement {
            Statement::LegendreGaussSum => {
                if self.n != 2 {
                    return Err(Error::Hypothesis(format!("prop_1_1 uses n=2, got n={}", self.n)));
                }
                verify_prop_1_1(p, budget)
            }
            Statement::SpectralCharacter => verify_thm_1_2(p, n, budget),
            Statement::UnitMagnitudeDichotomy => verify_cor_1_3(p, n, budget),
            Statement::RationalGaussSum => verify_lemma_2_1(p, n, budget),
            Statement::ConverseGauss => verify_prop_2_2(p, n, budget),
            Statement::ConstantTimesCharacter => verify_cor_2_3(p, n, budget),
            Statement::Autocorrelation => verify_thm_1_7(p, n, budget),
            Statement::RemarkCounterexample => {
                if (self.p, self.n) != (3, 6) {
                    return Err(Error::Hypothesis("the remark concerns p=3, n=6".into()));
                }
                remark_counterexample()
            }
            Statement::SearchPDividesN => search_p_divides_n(p, n, budget),
        }
    }
}

/// Primes used with `n = 2`.
pub const GRID_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

/// Cells with `n > 2` (plus two small `n = 2` cells).
pub const GRID_MIXED: [(u64, u64); 10] =
    [(5, 3), (5, 4), (5, 6), (7, 2), (7, 3), (7, 4), (7, 6), (3, 2), (3, 4), (3, 5)];

/// The `(p, n)` pairs for statements quantified over general `n`.
pub fn default_cells() -> Vec<(u64, u64)> {
    let mut cells: Vec<(u64, u64)> = GRID_PRIMES.iter().map(|&p| (p, 2)).collect();
    for cell in GRID_MIXED {
        if !cells.contains(&cell) {
            cells.push(cell);
        }
    }
    cells
}

/// The default verification grid.
pub fn default_grid() -> Vec<GridCell> {
    let mut grid: Vec<GridCell> =
        GRID_PRIMES.iter().map(|&p| GridCell::new(Statement::LegendreGaussSum, p, 2)).collect();
    for statement in [
        Statement::SpectralCharacter,
        Statement::UnitMagnitudeDichotomy,
        Statement::RationalGaussSum,
        Statement::ConverseGauss,
        Statement::ConstantTimesCharacter,
        Statement::Autocorrelation,
    ] {
        grid.extend(default_cells().into_iter().map(|(p, n)| GridCell::new(statement, p, n)));
    }
    grid.push(GridCell::new(Statement::RemarkCounterexample, 3, 6));
    grid.push(GridCell::new(Statement::SearchPDividesN, 3, 6));
    grid
}

/// Runs every cell; a failing cell yields a failed report instead of
/// aborting the batch.
pub fn verify_grid(cells: &[GridCell], budget: EnumerationBudget) -> Vec<VerificationReport> {
    cells
        .iter()
        .map(|cell| {
            cell.run(budget).unwrap_or_else(|err| {
                VerificationReport::failed(cell.statement, cell.p, cell.n, budget.0, &err)
            })
        })
        .collect()
}
