//! Gauss sums, Fourier sums and autocorrelations of functions on `F_p^×`.
//!
//! A function valued in `μ_n` mixes `n`-th roots of unity with the additive
//! characters `e(x/p)`, so all sums live in `Z[ζ_L]` with `L = lcm(n, p)`.
//! The normalization `1/√p` of the Fourier transform is never formed:
//! `|f̂(ξ)| = 1` is decided as `S_ξ·conj(S_ξ) = p` for the unnormalized sum
//! `S_ξ = Σ_x f(x)·e(−xξ/p)`.

use num_bigint::BigInt;

use crate::cyclo::{CyclotomicElement, UnityOrder};
use crate::error::{Error, Result};
use crate::modp::{PrimeModulus, UnitFunction};

/// An exact sum of `f` against additive characters, valued in `Z[ζ_L]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralValue {
    value: CyclotomicElement,
    p: PrimeModulus,
    n: UnityOrder,
}

impl SpectralValue {
    pub fn value(&self) -> &CyclotomicElement {
        &self.value
    }

    pub fn into_value(self) -> CyclotomicElement {
        self.value
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn n(&self) -> UnityOrder {
        self.n
    }

    /// `|S|²` as an element of `Z[ζ_L]`.
    pub fn norm_squared(&self) -> CyclotomicElement {
        self.value.norm_squared()
    }

    /// `|S|²` when it is a rational integer.
    pub fn norm_squared_integer(&self) -> Option<BigInt> {
        self.norm_squared().as_integer()
    }

    /// Whether `|S|² = p`, i.e. the normalized coefficient `S/√p` has modulus one.
    pub fn has_magnitude_sqrt_p(&self) -> bool {
        self.norm_squared_integer() == Some(BigInt::from(self.p.get()))
    }
}

/// `L = lcm(n, p)`, the order housing every sum attached to `f`.
pub fn common_order(f: &UnitFunction) -> Result<UnityOrder> {
    f.n().lcm(f.p().order()?)
}

// Σ_{x ∈ F_p^×} f(x)·e(twist·x/p), built from exponent counts in Z[ζ_L].
fn additive_sum(f: &UnitFunction, twist: u64) -> Result<SpectralValue> {
    let (p, n) = (f.p(), f.n());
    let order = common_order(f)?;
    let l = order.get();
    let (step_n, step_p) = (l / n.get(), l / p.get());
    let mut counts = vec![0i64; l as usize];
    for (x, &k) in (1..p.get()).zip(f.exps()) {
        let idx = (step_n * k + step_p * p.mul(twist, x)) % l;
        counts[idx as usize] += 1;
    }
    Ok(SpectralValue { value: CyclotomicElement::from_exponent_counts(order, &counts), p, n })
}

/// `τ(f) = Σ_{x ∈ F_p^×} f(x)·e(x/p)`.
pub fn gauss_sum(f: &UnitFunction) -> Result<SpectralValue> {
    additive_sum(f, 1)
}

/// `Σ_{x ∈ F_p^×} f(x)·e(ax/p)` for `a ≢ 0`.
pub fn twisted_gauss_sum(f: &UnitFunction, a: i64) -> Result<SpectralValue> {
    let twist = f.p().reduce(a);
    if twist == 0 {
        return Err(Error::ZeroDivisor { a, p: f.p().get() });
    }
    additive_sum(f, twist)
}

/// The unnormalized Fourier coefficient `S_ξ = √p·f̂(ξ) = Σ_x f(x)·e(−xξ/p)`.
pub fn fourier_sum(f: &UnitFunction, xi: i64) -> Result<SpectralValue> {
    // ξ = 0 leaves the bare sum of values; used only for the Plancherel check.
    additive_sum(f, f.p().reduce(-xi))
}

/// Whether `|f̂(a)| = 1`, for `a ∈ F_p^×`.
pub fn has_unit_fourier_magnitude(f: &UnitFunction, a: i64) -> Result<bool> {
    if f.p().reduce(a) == 0 {
        return Err(Error::ZeroDivisor { a, p: f.p().get() });
    }
    Ok(fourier_sum(f, a)?.has_magnitude_sqrt_p())
}

/// Result of the spectral character test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectralOutcome {
    /// Smallest `a ∈ F_p^×` with `|f̂(a)| = 1`.
    pub witness: Option<u64>,
}

impl SpectralOutcome {
    pub fn passes(&self) -> bool {
        self.witness.is_some()
    }
}

/// Searches `a = 1, 2, …, p−1` for `|f̂(a)| = 1` and stops at the first hit.
pub fn spectral_character_test(f: &UnitFunction) -> Result<SpectralOutcome> {
    for a in 1..f.p().get() {
        if has_unit_fourier_magnitude(f, a as i64)? {
            return Ok(SpectralOutcome { witness: Some(a) });
        }
    }
    Ok(SpectralOutcome { witness: None })
}

/// All `a ∈ F_p^×` with `|f̂(a)| = 1`, in increasing order.
pub fn unit_magnitude_set(f: &UnitFunction) -> Result<Vec<u64>> {
    let mut hits = Vec::new();
    for a in 1..f.p().get() {
        if has_unit_fourier_magnitude(f, a as i64)? {
            hits.push(a);
        }
    }
    Ok(hits)
}

/// `Σ_{x ∈ F_p} f(x)·conj(f(x+h))` in `Z[ζ_n]`; terms meeting `f(0) = 0` vanish.
pub fn autocorrelation(f: &UnitFunction, h: i64) -> CyclotomicElement {
    let (p, n) = (f.p(), f.n().get());
    let shift = p.reduce(h);
    let mut counts = vec![0i64; n as usize];
    for x in 1..p.get() {
        let y = (x + shift) % p.get();
        if let (Some(a), Some(b)) = (f.exp_at(x as i64), f.exp_at(y as i64)) {
            counts[((a + n - b) % n) as usize] += 1;
        }
    }
    CyclotomicElement::from_exponent_counts(f.n(), &counts)
}

/// The autocorrelation profile of a character: `f(1) = 1`, `p − 1` at
/// `h = 0` (automatic) and `−1` at every other shift.
pub fn kurlberg_test(f: &UnitFunction) -> bool {
    let minus_one = CyclotomicElement::from_integer(f.n(), -1);
    f.exp_at(1) == Some(0) && (1..f.p().get()).all(|h| autocorrelation(f, h as i64) == minus_one)
}

/// `Σ_{k ∈ F_p} g(k)·e(k/p)` with `g(k) = Σ_ℓ f(ℓ+k)·conj(f(ℓ))`, which
/// expands to `|τ(f)|²`.
pub fn correlation_transform(f: &UnitFunction) -> Result<CyclotomicElement> {
    let p = f.p();
    let order = common_order(f)?;
    let mut total = CyclotomicElement::zero(order);
    for k in 0..p.get() {
        // g(k) = Σ_x f(x)·conj(f(x − k)) is the autocorrelation at shift −k.
        let g_k = autocorrelation(f, -(k as i64)).embed(order)?;
        let twiddle = CyclotomicElement::zeta_pow(order, (k * (order.get() / p.get())) as i64);
        total = total.checked_add(&g_k.checked_mul(&twiddle)?)?;
    }
    Ok(total)
}

/// `Σ_{ξ ∈ F_p} |S_ξ|²`, which equals `p·(p − 1)` for every `f`.
pub fn parseval_sum(f: &UnitFunction) -> Result<BigInt> {
    let mut total = CyclotomicElement::zero(common_order(f)?);
    for xi in 0..f.p().get() {
        total = total.checked_add(&fourier_sum(f, xi as i64)?.norm_squared())?;
    }
    total
        .as_integer()
        .ok_or_else(|| Error::Internal(format!("Σ|S_ξ|² is not rational for {f}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modp::{enumerate_characters, mod_inverse, Character};

    fn func(p: u64, n: u64, exps: &[u64]) -> UnitFunction {
        UnitFunction::from_parts(p, n, exps).unwrap()
    }

    fn trivial(p: u64) -> UnitFunction {
        func(p, 1, &vec![0; p as usize - 1])
    }

    fn legendre(p: u64) -> UnitFunction {
        UnitFunction::legendre(PrimeModulus::new(p).unwrap())
    }

    #[test]
    fn gauss_sum_of_trivial_character_is_minus_one() {
        for p in [3, 5, 7, 11] {
            assert_eq!(gauss_sum(&trivial(p)).unwrap().value().as_i64(), Some(-1));
            let t2 = func(p, 2, &vec![0; p as usize - 1]);
            assert_eq!(gauss_sum(&t2).unwrap().value().as_i64(), Some(-1));
        }
    }

    #[test]
    fn gauss_sum_of_minus_one_is_one() {
        for p in [3, 5, 7, 13] {
            let g = func(p, 2, &vec![1; p as usize - 1]);
            assert_eq!(gauss_sum(&g).unwrap().value().as_i64(), Some(1));
        }
    }

    #[test]
    fn remark_function() {
        let f = func(3, 6, &[0, 5]);
        let tau = gauss_sum(&f).unwrap();
        assert_eq!(tau.value().order().get(), 6);
        assert_eq!(tau.norm_squared_integer(), Some(BigInt::from(3)));
        assert!(has_unit_fourier_magnitude(&f, 2).unwrap());
    }

    #[test]
    fn twist_by_one_is_gauss_sum() {
        let f = func(7, 6, &[0, 3, 1, 4, 1, 5]);
        assert_eq!(twisted_gauss_sum(&f, 1).unwrap(), gauss_sum(&f).unwrap());
        assert_eq!(twisted_gauss_sum(&f, 8).unwrap(), gauss_sum(&f).unwrap());
        assert!(matches!(twisted_gauss_sum(&f, 14), Err(Error::ZeroDivisor { .. })));
        assert_eq!(twisted_gauss_sum(&trivial(7), 3).unwrap().value().as_i64(), Some(-1));
    }

    #[test]
    fn twist_covariance_by_substitution() {
        // Σ_x χ(x) e(ax/p) with x = a⁻¹m gives conj(χ(a))·τ(χ).
        let p = PrimeModulus::new(11).unwrap();
        for chi in enumerate_characters(p, UnityOrder::new(10).unwrap()) {
            let f = chi.to_function();
            let tau = gauss_sum(&f).unwrap();
            let order = tau.value().order();
            for a in 1..11i64 {
                let lhs = twisted_gauss_sum(&f, a).unwrap();
                let chi_a = f.value_at(a).conjugate().embed(order).unwrap();
                assert_eq!(*lhs.value(), chi_a.checked_mul(tau.value()).unwrap());
                let a_inv = mod_inverse(a, p).unwrap() as i64;
                let substituted: Vec<u64> =
                    (1..11).map(|m| f.exp_at(a_inv * m).unwrap()).collect();
                let g = UnitFunction::new(p, f.n(), substituted).unwrap();
                assert_eq!(lhs.value(), gauss_sum(&g).unwrap().value());
            }
        }
    }

    #[test]
    fn fourier_sums() {
        let f = legendre(3);
        let s = fourier_sum(&f, 1).unwrap();
        // S_1 = e(−1/3) − e(−2/3) = ζ₃² − ζ₃ in Z[ζ₆]
        let order = s.value().order();
        let expected = CyclotomicElement::zeta_pow(order, 4)
            .checked_sub(&CyclotomicElement::zeta_pow(order, 2))
            .unwrap();
        assert_eq!(*s.value(), expected);
        assert!(s.has_magnitude_sqrt_p());

        for xi in 1..7 {
            let s = fourier_sum(&trivial(7), xi).unwrap();
            assert_eq!(s.value().as_i64(), Some(-1));
            assert!(!s.has_magnitude_sqrt_p());
        }
        let f = func(5, 4, &[0, 1, 3, 2]);
        let s0 = fourier_sum(&f, 0).unwrap();
        // 1 + i − i − 1 = 0
        assert!(s0.value().is_zero());
        assert_eq!(fourier_sum(&f, -1).unwrap(), gauss_sum(&f).unwrap());
    }

    #[test]
    fn unit_magnitude_checks() {
        assert!(has_unit_fourier_magnitude(&legendre(3), 1).unwrap());
        for a in 1..5 {
            assert!(!has_unit_fourier_magnitude(&trivial(5), a).unwrap());
        }
        assert!(has_unit_fourier_magnitude(&legendre(5), 0).is_err());
    }

    #[test]
    fn spectral_test() {
        let out = spectral_character_test(&legendre(7)).unwrap();
        assert_eq!(out.witness, Some(1));
        assert!(!spectral_character_test(&trivial(7)).unwrap().passes());
        let f = func(5, 2, &[0, 0, 0, 1]);
        assert_eq!(unit_magnitude_set(&f).unwrap(), Vec::<u64>::new());
        assert!(!spectral_character_test(&f).unwrap().passes());
        assert_eq!(unit_magnitude_set(&legendre(7)).unwrap(), (1..7).collect::<Vec<_>>());
    }

    #[test]
    fn autocorrelations() {
        for f in [legendre(5), func(7, 6, &[0, 2, 5, 1, 1, 3]), trivial(11)] {
            let p = f.p().get() as i64;
            assert_eq!(autocorrelation(&f, 0).as_i64(), Some(p - 1));
        }
        // Legendre mod 5 = (+, −, −, +): pairs (1,2) (2,3) (3,4) give −1, +1, −1
        assert_eq!(autocorrelation(&legendre(5), 1).as_i64(), Some(-1));
        assert_eq!(autocorrelation(&trivial(5), 1).as_i64(), Some(3));
    }

    #[test]
    fn kurlberg_profiles() {
        assert!(kurlberg_test(&legendre(7)));
        assert!(!kurlberg_test(&func(7, 2, &[0; 6])));
        assert!(!kurlberg_test(&func(3, 6, &[0, 5])));
        assert!(!kurlberg_test(&legendre(7).rotate(1)));
    }

    #[test]
    fn correlation_transform_matches_gauss_norm() {
        for f in [legendre(5), func(7, 6, &[3, 2, 5, 1, 0, 3]), func(5, 3, &[1, 0, 2, 2])] {
            let tau = gauss_sum(&f).unwrap();
            assert_eq!(correlation_transform(&f).unwrap(), tau.norm_squared());
        }
    }

    #[test]
    fn parseval() {
        assert_eq!(parseval_sum(&func(5, 3, &[1, 0, 2, 2])).unwrap(), BigInt::from(20));
        assert_eq!(parseval_sum(&trivial(3)).unwrap(), BigInt::from(6));
        assert_eq!(parseval_sum(&legendre(3)).unwrap(), BigInt::from(6));
    }

    #[test]
    fn character_gauss_norms() {
        let p = PrimeModulus::new(13).unwrap();
        for j in 1..12 {
            let f = Character::new(p, j).unwrap().to_function();
            assert!(gauss_sum(&f).unwrap().has_magnitude_sqrt_p(), "j={j}");
        }
    }
}
