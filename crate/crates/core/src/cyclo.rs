//! Exact arithmetic in the cyclotomic ring `Z[ζ_N]`.
//!
//! Elements are stored in the power basis `{1, ζ_N, …, ζ_N^{φ(N)−1}}`, i.e.
//! as integer polynomials reduced modulo the cyclotomic polynomial `Φ_N`.
//! Since `Φ_N` is irreducible over `Q` this representation is canonical and
//! equality of elements is equality of coefficient vectors. `Φ_N` is monic,
//! so every reduction stays inside `Z`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest order accepted by [`UnityOrder::new`].
pub const DEFAULT_ORDER_CEILING: u64 = 10_000;

/// The order `N` of a root of unity `ζ_N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnityOrder(u64);

impl UnityOrder {
    pub fn new(order: u64) -> Result<Self> {
        Self::with_ceiling(order, DEFAULT_ORDER_CEILING)
    }

    pub fn with_ceiling(order: u64, ceiling: u64) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if order > ceiling {
            return Err(Error::OrderCeiling { order, ceiling });
        }
        Ok(UnityOrder(order))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Euler's totient `φ(N)`, the dimension of `Q(ζ_N)` over `Q`.
    pub fn totient(self) -> usize {
        let mut n = self.0;
        let mut phi = n;
        let mut q = 2;
        while q * q <= n {
            if n.is_multiple_of(q) {
                while n.is_multiple_of(q) {
                    n /= q;
                }
                phi -= phi / q;
            }
            q += 1;
        }
        if n > 1 {
            phi -= phi / n;
        }
        phi as usize
    }

    pub fn divides(self, other: UnityOrder) -> bool {
        other.0.is_multiple_of(self.0)
    }

    /// The least common multiple, checked against the default ceiling.
    pub fn lcm(self, other: UnityOrder) -> Result<UnityOrder> {
        UnityOrder::new(self.0.lcm(&other.0))
    }

    /// Positive divisors in increasing order.
    pub fn divisors(self) -> Vec<u64> {
        (1..=self.0).filter(|d| self.0.is_multiple_of(*d)).collect()
    }
}

impl fmt::Display for UnityOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A dense integer polynomial, lowest degree first, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    /// `x^n − 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    /// Exact quotient by a monic divisor; fails if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial> {
        let (quotient, remainder) = self.div_rem_monic(divisor)?;
        if remainder.is_zero() {
            Ok(quotient)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Division with remainder by a monic polynomial. Stays in `Z[x]`.
    pub fn div_rem_monic(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        if !divisor.is_monic() {
            return Err(Error::InexactDivision);
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((IntPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = std::mem::take(&mut rem[top]);
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs[..dd].iter().enumerate() {
                if !d.is_zero() {
                    rem[top - dd + i] -= &c * d;
                }
            }
            quot[top - dd] = c;
        }
        rem.truncate(dd);
        Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
    }

    /// Evaluates the polynomial at a cyclotomic element by Horner's rule.
    pub fn evaluate(&self, z: &CyclotomicElement) -> CyclotomicElement {
        let mut acc = CyclotomicElement::zero(z.order());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(z);
            acc.coeffs[0] += c;
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// `Φ_N` together with a machine-integer copy of its coefficients.
struct Modulus {
    poly: IntPolynomial,
    small: Option<Vec<i128>>,
}

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<Modulus>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Modulus>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cyclotomic_polynomial_shared(order: UnityOrder) -> Arc<Modulus> {
    if let Some(hit) = phi_cache().read().expect("poisoned").get(&order.get()) {
        return Arc::clone(hit);
    }
    // x^N − 1 = Π_{d | N} Φ_d, so divide out every proper divisor.
    let mut poly = IntPolynomial::x_pow_minus_one(order.get() as usize);
    for d in order.divisors() {
        if d == order.get() {
            continue;
        }
        let factor = cyclotomic_polynomial_shared(UnityOrder(d));
        poly = poly
            .div_exact(&factor.poly)
            .expect("x^N - 1 is divisible by every Φ_d with d | N");
    }
    let small = poly.coeffs().iter().map(|c| c.to_i128()).collect();
    let modulus = Arc::new(Modulus { poly, small });
    phi_cache()
        .write()
        .expect("poisoned")
        .entry(order.get())
        .or_insert(modulus)
        .clone()
}

/// The `N`-th cyclotomic polynomial `Φ_N`.
pub fn cyclotomic_polynomial(order: UnityOrder) -> IntPolynomial {
    cyclotomic_polynomial_shared(order).poly.clone()
}

// Long division of an exponent-indexed vector by the monic Φ_N in checked
// machine arithmetic. Returns None on overflow.
fn reduce_small(acc: &mut [i128], modulus: &[i128], phi: usize) -> Option<()> {
    for top in (phi..acc.len()).rev() {
        let c = std::mem::take(&mut acc[top]);
        if c == 0 {
            continue;
        }
        for (i, &d) in modulus[..phi].iter().enumerate() {
            if d != 0 {
                let slot = &mut acc[top - phi + i];
                *slot = slot.checked_sub(c.checked_mul(d)?)?;
            }
        }
    }
    Some(())
}

fn to_small(coeffs: &[BigInt]) -> Option<Vec<i128>> {
    coeffs.iter().map(ToPrimitive::to_i128).collect()
}

// Product modulo x^N − 1 in checked machine arithmetic.
fn mul_small(a: &[i128], b: &[i128], n: usize) -> Option<Vec<i128>> {
    let mut acc = vec![0i128; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                let slot = &mut acc[(i + j) % n];
                *slot = slot.checked_add(x.checked_mul(y)?)?;
            }
        }
    }
    Some(acc)
}

/// An element of `Z[ζ_N]` in canonical power-basis form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    order: UnityOrder,
    coeffs: Vec<BigInt>,
}

impl CyclotomicElement {
    pub fn zero(order: UnityOrder) -> Self {
        CyclotomicElement { order, coeffs: vec![BigInt::zero(); order.totient()] }
    }

    pub fn one(order: UnityOrder) -> Self {
        Self::from_integer(order, 1)
    }

    pub fn from_integer(order: UnityOrder, c: impl Into<BigInt>) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = c.into();
        z
    }

    /// `ζ_N^k`, with `k` reduced modulo `N`.
    pub fn zeta_pow(order: UnityOrder, k: i64) -> Self {
        let n = order.get() as i64;
        let mut counts = vec![BigInt::zero(); order.get() as usize];
        counts[k.rem_euclid(n) as usize] = BigInt::one();
        Self::from_exponent_coeffs(order, counts)
    }

    /// Builds `Σ_k counts[k]·ζ_N^k` from a coefficient vector indexed by
    /// exponent (length at most `N`), reducing it modulo `Φ_N`.
    pub fn from_exponent_coeffs(order: UnityOrder, mut counts: Vec<BigInt>) -> Self {
        let n = order.get() as usize;
        assert!(counts.len() <= n, "exponent vector longer than the order");
        counts.resize(n, BigInt::zero());
        Self::reduce(order, counts)
    }

    /// Same as [`Self::from_exponent_coeffs`] for small integer counts.
    pub fn from_exponent_counts(order: UnityOrder, counts: &[i64]) -> Self {
        let n = order.get() as usize;
        assert!(counts.len() <= n, "exponent vector longer than the order");
        let mut acc: Vec<i128> = counts.iter().map(|&c| i128::from(c)).collect();
        acc.resize(n, 0);
        Self::reduce_i128(order, acc)
    }

    /// Builds an element from power-basis coordinates of length `φ(N)`.
    pub fn from_coeffs(order: UnityOrder, coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() != order.totient() {
            return Err(Error::Internal(format!(
                "expected {} coordinates for order {}, got {}",
                order.totient(),
                order,
                coeffs.len()
            )));
        }
        Ok(CyclotomicElement { order, coeffs })
    }

    // Reduction of machine-integer exponent coefficients, falling back to
    // big integers if an intermediate value overflows.
    fn reduce_i128(order: UnityOrder, acc: Vec<i128>) -> Self {
        let phi = order.totient();
        if acc.len() > phi {
            let modulus = cyclotomic_polynomial_shared(order);
            if let Some(m) = &modulus.small {
                let mut work = acc.clone();
                if reduce_small(&mut work, m, phi).is_some() {
                    work.truncate(phi);
                    return CyclotomicElement { order, coeffs: work.into_iter().map(BigInt::from).collect() };
                }
            }
        }
        Self::reduce(order, acc.into_iter().map(BigInt::from).collect())
    }

    // Long division by the monic Φ_N, from the top degree down.
    fn reduce(order: UnityOrder, mut acc: Vec<BigInt>) -> Self {
        let phi = order.totient();
        if acc.len() > phi {
            let modulus = cyclotomic_polynomial_shared(order);
            let m = modulus.poly.coeffs();
            for top in (phi..acc.len()).rev() {
                let c = std::mem::take(&mut acc[top]);
                if c.is_zero() {
                    continue;
                }
                for (i, d) in m[..phi].iter().enumerate() {
                    if !d.is_zero() {
                        acc[top - phi + i] -= &c * d;
                    }
                }
            }
        }
        acc.resize(phi, BigInt::zero());
        CyclotomicElement { order, coeffs: acc }
    }

    #[inline]
    pub fn order(&self) -> UnityOrder {
        self.order
    }

    /// Power-basis coordinates, lowest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch { left: self.order.get(), right: other.order.get() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CyclotomicElement { order: self.order, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CyclotomicElement { order: self.order, coeffs })
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order.get() as usize;
        if let (Some(a), Some(b)) = (to_small(&self.coeffs), to_small(&other.coeffs)) {
            if let Some(acc) = mul_small(&a, &b, n) {
                return Self::reduce_i128(self.order, acc);
            }
        }
        let mut acc = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i + j) % n] += a * b;
                }
            }
        }
        Self::reduce(self.order, acc)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        CyclotomicElement { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    // Applies ζ^i ↦ ζ^{map(i)} to the basis and re-reduces.
    fn map_exponents(&self, map: impl Fn(u64) -> u64) -> Self {
        let n = self.order.get();
        let mut acc = vec![BigInt::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[(map(i as u64) % n) as usize] += c;
            }
        }
        Self::reduce(self.order, acc)
    }

    /// Complex conjugation, `ζ_N ↦ ζ_N^{N−1}`.
    pub fn conjugate(&self) -> Self {
        let n = self.order.get();
        self.map_exponents(|i| (n - i % n) % n)
    }

    /// `z·conj(z)`. When rational this is `|z|²` under every complex
    /// embedding of `Q(ζ_N)`.
    pub fn norm_squared(&self) -> Self {
        self.mul_unchecked(&self.conjugate())
    }

    /// Image under `ζ_N ↦ ζ_M^{M/N}`.
    pub fn embed(&self, target: UnityOrder) -> Result<Self> {
        if !self.order.divides(target) {
            return Err(Error::NotDivisor { divisor: self.order.get(), order: target.get() });
        }
        let step = target.get() / self.order.get();
        let mut acc = vec![BigInt::zero(); target.get() as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc[i * step as usize] += c;
            }
        }
        Ok(Self::reduce(target, acc))
    }

    /// Image under the Galois automorphism `σ_k : ζ_N ↦ ζ_N^k`.
    pub fn galois_apply(&self, k: i64) -> Result<Self> {
        let n = self.order.get();
        let k_red = k.rem_euclid(n as i64) as u64;
        if k_red.gcd(&n) != 1 {
            return Err(Error::NotCoprime { k, order: n });
        }
        Ok(self.map_exponents(|i| (i * k_red) % n))
    }

    /// Whether the element lies in the subfield `Q(ζ_d)`, decided by
    /// fixedness under every `σ_k` with `k ≡ 1 (mod d)`.
    pub fn in_subfield(&self, d: UnityOrder) -> Result<bool> {
        let n = self.order.get();
        if !d.divides(self.order) {
            return Err(Error::NotDivisor { divisor: d.get(), order: n });
        }
        for k in 1..n {
            if k.gcd(&n) != 1 || k % d.get() != 1 % d.get() {
                continue;
            }
            if self.map_exponents(|i| (i * k) % n) != *self {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The rational integer this element represents, if any.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|c| c.to_i64())
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "order={} coeffs=[", self.order)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: u64) -> UnityOrder {
        UnityOrder::new(n).unwrap()
    }

    fn int(n: u64, c: i64) -> CyclotomicElement {
        CyclotomicElement::from_integer(ord(n), c)
    }

    fn z(n: u64, k: i64) -> CyclotomicElement {
        CyclotomicElement::zeta_pow(ord(n), k)
    }

    #[test]
    fn order_bounds() {
        assert_eq!(UnityOrder::new(0), Err(Error::ZeroOrder));
        assert!(matches!(UnityOrder::new(10_001), Err(Error::OrderCeiling { .. })));
        assert!(UnityOrder::with_ceiling(20_000, 20_000).is_ok());
        assert_eq!(ord(12).totient(), 4);
        assert_eq!(ord(1).totient(), 1);
        assert_eq!(ord(7).totient(), 6);
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(ord(1)), IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(ord(7)), IntPolynomial::from_i64s(&[1; 7]));
        // x^6 − 1 divided by (x − 1)(x + 1)(x² + x + 1)
        let by_hand = IntPolynomial::x_pow_minus_one(6)
            .div_exact(&IntPolynomial::from_i64s(&[-1, 1]))
            .and_then(|q| q.div_exact(&IntPolynomial::from_i64s(&[1, 1])))
            .and_then(|q| q.div_exact(&IntPolynomial::from_i64s(&[1, 1, 1])))
            .unwrap();
        assert_eq!(by_hand, IntPolynomial::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(ord(6)), by_hand);
        assert_eq!(cyclotomic_polynomial(ord(6)).to_string(), "1 - x + x^2");
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let phi = cyclotomic_polynomial(ord(105));
        assert_eq!(phi.degree(), Some(48));
        assert!(phi.coeffs().iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn zeta_powers() {
        assert_eq!(z(4, 2), int(4, -1));
        assert_eq!(z(6, 2).coeffs(), &[BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(z(5, 5), int(5, 1));
        assert_eq!(z(5, -1), z(5, 4));
    }

    #[test]
    fn addition() {
        assert_eq!(z(3, 1).checked_add(&z(3, 2)).unwrap(), int(3, -1));
        let w = z(9, 4);
        assert_eq!(w.checked_add(&CyclotomicElement::zero(ord(9))).unwrap(), w);
        assert!(z(4, 1).checked_add(&z(4, 3)).unwrap().is_zero());
        assert_eq!(
            z(3, 1).checked_add(&z(4, 1)),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn multiplication() {
        assert_eq!(z(4, 1).checked_mul(&z(4, 1)).unwrap(), int(4, -1));
        let a = int(4, 1).checked_add(&z(4, 1)).unwrap();
        let b = int(4, 1).checked_sub(&z(4, 1)).unwrap();
        assert_eq!(a.checked_mul(&b).unwrap(), int(4, 2));
        assert_eq!(z(6, 1).checked_mul(&z(6, 5)).unwrap(), int(6, 1));
        assert!(z(6, 1).checked_mul(&z(3, 1)).is_err());
    }

    #[test]
    fn conjugation() {
        for k in 0..10 {
            assert_eq!(z(10, k).conjugate(), z(10, 10 - k));
        }
        let w = int(3, 1).checked_add(&z(3, 1)).unwrap();
        assert_eq!(w.conjugate(), z(3, 1).neg());
        assert_eq!(int(8, 7).conjugate(), int(8, 7));
    }

    #[test]
    fn norms() {
        let w = int(4, 1).checked_add(&z(4, 1)).unwrap();
        assert_eq!(w.norm_squared().as_i64(), Some(2));
        for k in 0..15 {
            assert_eq!(z(15, k).norm_squared().as_i64(), Some(1));
        }
        // τ(Legendre mod 5) = ζ − ζ² − ζ³ + ζ⁴
        let tau = CyclotomicElement::from_exponent_counts(ord(5), &[0, 1, -1, -1, 1]);
        assert_eq!(tau.norm_squared().as_i64(), Some(5));
    }

    #[test]
    fn embedding() {
        assert_eq!(z(3, 1).embed(ord(6)).unwrap(), z(6, 2));
        assert_eq!(int(5, 2).embed(ord(35)).unwrap(), int(35, 2));
        assert_eq!(z(3, 1).embed(ord(12)).unwrap(), z(12, 4));
        assert_eq!(z(4, 1).embed(ord(6)), Err(Error::NotDivisor { divisor: 4, order: 6 }));
    }

    #[test]
    fn galois_action() {
        let w = CyclotomicElement::from_exponent_counts(ord(12), &[3, -1, 0, 2, 0, 7]);
        assert_eq!(w.galois_apply(1).unwrap(), w);
        assert_eq!(w.galois_apply(11).unwrap(), w.conjugate());
        assert_eq!(z(6, 1).galois_apply(5).unwrap(), z(6, 5));
        assert_eq!(w.galois_apply(4), Err(Error::NotCoprime { k: 4, order: 12 }));
    }

    #[test]
    fn subfield_membership() {
        for d in ord(12).divisors() {
            assert!(int(12, 1).in_subfield(ord(d)).unwrap());
        }
        // σ_5 fixes 5 ≡ 1 (mod 2) and sends ζ₃ to ζ₃²
        let zeta3 = z(3, 1).embed(ord(6)).unwrap();
        assert!(!zeta3.in_subfield(ord(2)).unwrap());
        assert_eq!(zeta3.galois_apply(5).unwrap(), z(3, 2).embed(ord(6)).unwrap());
        assert!(z(6, 2).in_subfield(ord(3)).unwrap());
        assert!(z(6, 1).in_subfield(ord(4)).is_err());
    }

    #[test]
    fn integer_recognition() {
        assert_eq!(int(7, 1).as_i64(), Some(1));
        assert_eq!(z(3, 1).checked_add(&z(3, 2)).unwrap().as_i64(), Some(-1));
        assert_eq!(z(5, 1).as_integer(), None);
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(z(1, 17), int(1, 1));
        assert_eq!(z(2, 1), int(2, -1));
        assert_eq!(z(2, 1).conjugate(), int(2, -1));
    }

    #[test]
    fn large_coefficients_fall_back_to_big_integers() {
        let c = BigInt::from(1u64) << 100;
        let a = z(7, 1).scale(&c);
        let square = a.checked_mul(&a).unwrap();
        assert_eq!(square, z(7, 2).scale(&(&c * &c)));
        // ζ₇⁶ = −(1 + ζ + … + ζ⁵) forces reduction with big coefficients
        let b = z(7, 5).scale(&c);
        let expected: Vec<BigInt> = vec![-(&c * &c); 6];
        assert_eq!(a.checked_mul(&b).unwrap().coeffs(), expected.as_slice());
    }

    #[test]
    fn display() {
        assert_eq!(z(6, 2).to_string(), "order=6 coeffs=[-1,1]");
    }
}
