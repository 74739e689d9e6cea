//! The prime field `F_p`: modular arithmetic, primitive roots, the Legendre
//! symbol, root-of-unity valued function tables, characters, and a
//! brute-force homomorphism oracle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::cyclo::{CyclotomicElement, UnityOrder};
use crate::error::{Error, Result};

/// An odd prime `p`, checked by trial division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::NotPrime(p));
        }
        let mut d = 3;
        while d * d <= p {
            if p.is_multiple_of(d) {
                return Err(Error::NotPrime(p));
            }
            d += 2;
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, a: i64) -> u64 {
        a.rem_euclid(self.0 as i64) as u64
    }

    /// `p` as a root-of-unity order.
    pub fn order(self) -> Result<UnityOrder> {
        UnityOrder::new(self.0)
    }

    pub fn pow(self, base: u64, mut exp: u64) -> u64 {
        let p = self.0 as u128;
        let mut b = base as u128 % p;
        let mut acc = 1u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u64
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Multiplicative order of a nonzero `a` modulo `p`, by repeated multiplication.
fn multiplicative_order(a: u64, p: PrimeModulus) -> u64 {
    let mut x = a % p.get();
    let mut k = 1;
    while x != 1 {
        x = p.mul(x, a);
        k += 1;
    }
    k
}

/// Smallest `g ∈ [2, p)` of multiplicative order `p − 1`.
pub fn find_primitive_root(p: PrimeModulus) -> u64 {
    (2..p.get())
        .find(|&g| multiplicative_order(g, p) == p.get() - 1)
        .expect("F_p^× is cyclic")
}

/// The unique `b ∈ [1, p)` with `a·b ≡ 1 (mod p)`.
pub fn mod_inverse(a: i64, p: PrimeModulus) -> Result<u64> {
    let a_red = p.reduce(a);
    if a_red == 0 {
        return Err(Error::ZeroDivisor { a, p: p.get() });
    }
    let egcd = (a_red as i64).extended_gcd(&(p.get() as i64));
    Ok(p.reduce(egcd.x))
}

/// `(a/p)` computed from the explicit set of nonzero squares.
pub fn legendre_symbol(a: i64, p: PrimeModulus) -> i8 {
    let a = p.reduce(a);
    if a == 0 {
        return 0;
    }
    if (1..p.get()).any(|x| p.mul(x, x) == a) {
        1
    } else {
        -1
    }
}

/// A function `f : F_p^× → μ_n` given by `f(x) = e(exps[x]/n)`.
///
/// `f(0) = 0` by convention and is not stored; `exps[0]` holds the exponent
/// of `f(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitFunction {
    p: PrimeModulus,
    n: UnityOrder,
    exps: Vec<u64>,
}

impl UnitFunction {
    /// `exps` lists the exponents of `f(1), …, f(p−1)`.
    pub fn new(p: PrimeModulus, n: UnityOrder, exps: Vec<u64>) -> Result<Self> {
        if exps.len() as u64 != p.get() - 1 {
            return Err(Error::InvalidFunction(format!(
                "expected {} exponents for p={}, got {}",
                p.get() - 1,
                p,
                exps.len()
            )));
        }
        if let Some(bad) = exps.iter().find(|&&k| k >= n.get()) {
            return Err(Error::InvalidFunction(format!("exponent {bad} not in [0, {n})")));
        }
        Ok(UnitFunction { p, n, exps })
    }

    /// Convenience constructor from raw numbers.
    pub fn from_parts(p: u64, n: u64, exps: &[u64]) -> Result<Self> {
        Self::new(PrimeModulus::new(p)?, UnityOrder::new(n)?, exps.to_vec())
    }

    /// The constant function `e(k/n)`.
    pub fn constant(p: PrimeModulus, n: UnityOrder, k: u64) -> Result<Self> {
        Self::new(p, n, vec![k; p.get() as usize - 1])
    }

    /// The Legendre symbol as a `μ_2`-valued table.
    pub fn legendre(p: PrimeModulus) -> Self {
        let exps = (1..p.get() as i64).map(|x| u64::from(legendre_symbol(x, p) == -1)).collect();
        UnitFunction { p, n: UnityOrder::new(2).expect("2 is a valid order"), exps }
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn n(&self) -> UnityOrder {
        self.n
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    /// Exponent of `f(x)` for `x ≢ 0`; `None` at `x ≡ 0` where `f` vanishes.
    pub fn exp_at(&self, x: i64) -> Option<u64> {
        match self.p.reduce(x) {
            0 => None,
            r => Some(self.exps[r as usize - 1]),
        }
    }

    /// `f(x)` as an element of `Z[ζ_n]`.
    pub fn value_at(&self, x: i64) -> CyclotomicElement {
        match self.exp_at(x) {
            Some(k) => CyclotomicElement::zeta_pow(self.n, k as i64),
            None => CyclotomicElement::zero(self.n),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&k| k == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.exps.windows(2).all(|w| w[0] == w[1])
    }

    /// Pointwise product with the constant `e(k/n)`.
    pub fn rotate(&self, k: u64) -> Self {
        let n = self.n.get();
        let exps = self.exps.iter().map(|&e| (e + k % n) % n).collect();
        UnitFunction { p: self.p, n: self.n, exps }
    }

    /// `conj(f(1))·f`, which satisfies `g(1) = 1`.
    pub fn normalized_at_one(&self) -> Self {
        let n = self.n.get();
        self.rotate((n - self.exps[0]) % n)
    }

    /// Smallest `m | n` such that every value of `f` is an `m`-th root of unity.
    pub fn minimal_order(&self) -> u64 {
        let g = self.exps.iter().fold(self.n.get(), |acc, &k| acc.gcd(&k));
        self.n.get() / g
    }

    /// Re-expresses `f` with values read as `m`-th roots of unity, `m` a multiple of its minimal order.
    pub fn with_order(&self, m: UnityOrder) -> Result<Self> {
        let (n, m_val) = (self.n.get(), m.get());
        let min = self.minimal_order();
        if m_val % min != 0 {
            return Err(Error::InvalidFunction(format!(
                "values are {min}-th roots of unity, not {m_val}-th"
            )));
        }
        // k/n = k'/m with k a multiple of n/min.
        let exps = self.exps.iter().map(|&k| k / (n / min) * (m_val / min)).collect();
        Ok(UnitFunction { p: self.p, n: m, exps })
    }
}

impl fmt::Display for UnitFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} n={} exps=", self.p, self.n)?;
        for (i, k) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for UnitFunction {
    type Err = Error;

    /// Parses `p=<p> n=<n> exps=<k_1>,…,<k_{p−1}>`; whitespace is tolerated
    /// around `=` and `,`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.split_whitespace().collect::<Vec<_>>().join(" ");
        let compact = compact.replace(" =", "=").replace("= ", "=").replace(" ,", ",").replace(", ", ",");
        let (mut p, mut n, mut exps) = (None, None, None);
        for token in compact.split(' ').filter(|t| !t.is_empty()) {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, found `{token}`")))?;
            let slot = match key {
                "p" => &mut p,
                "n" => &mut n,
                "exps" => &mut exps,
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            };
            if slot.replace(value.to_string()).is_some() {
                return Err(Error::Parse(format!("duplicate key `{key}`")));
            }
        }
        let int = |name: &str, v: Option<String>| -> Result<u64> {
            let v = v.ok_or_else(|| Error::Parse(format!("missing `{name}=`")))?;
            v.parse().map_err(|_| Error::Parse(format!("`{name}` is not a nonnegative integer: `{v}`")))
        };
        let p = PrimeModulus::new(int("p", p)?)?;
        let n = UnityOrder::new(int("n", n)?)?;
        let exps_text = exps.ok_or_else(|| Error::Parse("missing `exps=`".into()))?;
        let exps = exps_text
            .split(',')
            .map(|k| k.parse::<u64>().map_err(|_| Error::Parse(format!("bad exponent `{k}`"))))
            .collect::<Result<Vec<_>>>()?;
        UnitFunction::new(p, n, exps)
    }
}

/// The character `χ_j(g^t) = e(j·t/(p−1))` relative to the smallest
/// primitive root `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Character {
    p: PrimeModulus,
    g: u64,
    j: u64,
}

impl Character {
    pub fn new(p: PrimeModulus, j: u64) -> Result<Self> {
        if j >= p.get() - 1 {
            return Err(Error::InvalidFunction(format!("character index {j} not in [0, {})", p.get() - 1)));
        }
        Ok(Character { p, g: find_primitive_root(p), j })
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn generator(&self) -> u64 {
        self.g
    }

    pub fn index(&self) -> u64 {
        self.j
    }

    pub fn is_trivial(&self) -> bool {
        self.j == 0
    }

    /// Order of `χ` in the dual group.
    pub fn order(&self) -> u64 {
        let m = self.p.get() - 1;
        m / self.j.gcd(&m)
    }

    /// The `μ_{p−1}`-valued table of `χ`.
    pub fn to_function(&self) -> UnitFunction {
        let m = self.p.get() - 1;
        let mut exps = vec![0; m as usize];
        let mut x = 1;
        for t in 0..m {
            exps[x as usize - 1] = (self.j * t) % m;
            x = self.p.mul(x, self.g);
        }
        UnitFunction { p: self.p, n: UnityOrder::new(m).expect("p − 1 within the order ceiling"), exps }
    }
}

/// Alias of [`Character::to_function`].
pub fn character_function(chi: &Character) -> UnitFunction {
    chi.to_function()
}

/// The characters mod `p` whose values lie in `μ_n`, ordered by index.
pub fn enumerate_characters(p: PrimeModulus, n: UnityOrder) -> Vec<Character> {
    let g = find_primitive_root(p);
    let m = p.get() - 1;
    (0..m)
        .filter(|j| n.get().is_multiple_of(m / j.gcd(&m)))
        .map(|j| Character { p, g, j })
        .collect()
}

/// Decides whether `f` is a multiplicative character by checking
/// `f(1) = 1` and `f(ab) = f(a)f(b)` on every pair.
pub fn is_character_oracle(f: &UnitFunction) -> bool {
    let (p, n) = (f.p.get(), f.n.get());
    if f.exps[0] != 0 {
        return false;
    }
    for a in 1..p {
        for b in a..p {
            let ab = f.p.mul(a, b);
            if f.exps[ab as usize - 1] != (f.exps[a as usize - 1] + f.exps[b as usize - 1]) % n {
                return false;
            }
        }
    }
    true
}

/// Upper bound on how many functions an exhaustive check may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EnumerationBudget(pub u64);

impl EnumerationBudget {
    pub const DEFAULT: EnumerationBudget = EnumerationBudget(10_000_000);
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// All functions `F_p^× → μ_n` (optionally with `f(1) = 1`) in
/// lexicographic order of their exponent tables.
///
/// Supports random access by index so that ranges can be handed to
/// independent workers.
#[derive(Clone, Debug)]
pub struct UnitFunctionEnumeration {
    p: PrimeModulus,
    n: UnityOrder,
    fix_f1: bool,
    len: u64,
    next: u64,
}

impl UnitFunctionEnumeration {
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The `index`-th function in lexicographic order.
    pub fn get(&self, mut index: u64) -> UnitFunction {
        assert!(index < self.len, "enumeration index out of range");
        let slots = self.p.get() as usize - 1;
        let n = self.n.get();
        let mut exps = vec![0; slots];
        let first_free = usize::from(self.fix_f1);
        for slot in (first_free..slots).rev() {
            exps[slot] = index % n;
            index /= n;
        }
        UnitFunction { p: self.p, n: self.n, exps }
    }
}

impl Iterator for UnitFunctionEnumeration {
    type Item = UnitFunction;

    fn next(&mut self) -> Option<UnitFunction> {
        if self.next >= self.len {
            return None;
        }
        let f = self.get(self.next);
        self.next += 1;
        Some(f)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = (self.len - self.next) as usize;
        (rest, Some(rest))
    }
}

impl ExactSizeIterator for UnitFunctionEnumeration {}

/// Number of functions [`enumerate_unit_functions`] would visit.
pub fn enumeration_count(p: PrimeModulus, n: UnityOrder, fix_f1: bool) -> BigUint {
    let free = p.get() - 1 - u64::from(fix_f1);
    num_traits::pow(BigUint::from(n.get()), free as usize)
}

pub fn enumerate_unit_functions(
    p: PrimeModulus,
    n: UnityOrder,
    fix_f1: bool,
    budget: EnumerationBudget,
) -> Result<UnitFunctionEnumeration> {
    let count = enumeration_count(p, n, fix_f1);
    match count.to_u64() {
        Some(len) if len <= budget.0 => Ok(UnitFunctionEnumeration { p, n, fix_f1, len, next: 0 }),
        _ => Err(Error::BudgetExceeded { count, budget: budget.0 }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn order(n: u64) -> UnityOrder {
        UnityOrder::new(n).unwrap()
    }

    #[test]
    fn primality() {
        for p in [3, 5, 7, 11, 13, 31, 97, 211] {
            assert!(PrimeModulus::new(p).is_ok(), "{p}");
        }
        for q in [0, 1, 2, 4, 9, 15, 91, 221] {
            assert_eq!(PrimeModulus::new(q), Err(Error::NotPrime(q)));
        }
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(find_primitive_root(prime(3)), 2);
        assert_eq!(find_primitive_root(prime(5)), 2);
        assert_eq!(find_primitive_root(prime(7)), 3);
        assert_eq!(find_primitive_root(prime(23)), 5);
        for p in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let p = prime(p);
            let g = find_primitive_root(p);
            let mut seen: Vec<u64> = (0..p.get() - 1).map(|t| p.pow(g, t)).collect();
            seen.sort_unstable();
            assert_eq!(seen, (1..p.get()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(2, prime(5)), Ok(3));
        assert_eq!(mod_inverse(1, prime(101)), Ok(1));
        assert_eq!(mod_inverse(-1, prime(7)), Ok(6));
        assert_eq!(mod_inverse(14, prime(7)), Err(Error::ZeroDivisor { a: 14, p: 7 }));
        let p = prime(97);
        for a in 1..97 {
            assert_eq!(p.mul(a, mod_inverse(a as i64, p).unwrap()), 1);
        }
    }

    #[test]
    fn legendre_values() {
        let p7 = prime(7);
        assert_eq!(legendre_symbol(1, p7), 1);
        assert_eq!(legendre_symbol(2, p7), 1);
        assert_eq!(legendre_symbol(3, p7), -1);
        assert_eq!(legendre_symbol(21, p7), 0);
        assert_eq!(legendre_symbol(-1, p7), -1);
        // Euler's criterion as an independent check
        for p in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let p = prime(p);
            for a in 1..p.get() {
                let euler = p.pow(a, (p.get() - 1) / 2);
                let expected = if euler == 1 { 1 } else { -1 };
                assert_eq!(legendre_symbol(a as i64, p), expected);
            }
        }
    }

    #[test]
    fn character_tables() {
        let p7 = prime(7);
        let trivial = Character::new(p7, 0).unwrap().to_function();
        assert!(trivial.is_trivial());
        let quad = Character::new(p7, 3).unwrap().to_function();
        for x in 1..7 {
            let sign = if quad.exp_at(x) == Some(0) { 1 } else { -1 };
            assert_eq!(sign, legendre_symbol(x, p7));
        }
        for j in 0..6 {
            assert_eq!(Character::new(p7, j).unwrap().to_function().exp_at(1), Some(0));
        }
        assert!(Character::new(p7, 6).is_err());
    }

    #[test]
    fn characters_and_oracle_agree() {
        for p in [3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let p = prime(p);
            for j in 0..p.get() - 1 {
                assert!(is_character_oracle(&character_function(&Character::new(p, j).unwrap())));
            }
            let legendre = UnitFunction::legendre(p);
            let quad = Character::new(p, (p.get() - 1) / 2).unwrap().to_function();
            assert_eq!(quad.with_order(order(2)).unwrap(), legendre);
        }
    }

    #[test]
    fn character_counts() {
        assert_eq!(enumerate_characters(prime(7), order(6)).len(), 6);
        let quad = enumerate_characters(prime(7), order(2));
        assert_eq!(quad.iter().map(Character::index).collect::<Vec<_>>(), vec![0, 3]);
        assert_eq!(enumerate_characters(prime(5), order(3)).len(), 1);
        for (p, n) in [(11, 4), (13, 8), (31, 12), (29, 7)] {
            let expected = n.gcd(&(p - 1));
            assert_eq!(enumerate_characters(prime(p), order(n)).len() as u64, expected);
        }
    }

    #[test]
    fn oracle_rejections() {
        let legendre7 = UnitFunction::from_parts(7, 2, &[0, 0, 1, 0, 1, 1]).unwrap();
        assert_eq!(legendre7, UnitFunction::legendre(prime(7)));
        assert!(is_character_oracle(&legendre7));
        let remark = UnitFunction::from_parts(3, 6, &[0, 5]).unwrap();
        assert!(!is_character_oracle(&remark));
        assert!(!is_character_oracle(&legendre7.rotate(1)));
    }

    #[test]
    fn enumeration() {
        let p3 = prime(3);
        let all: Vec<_> =
            enumerate_unit_functions(p3, order(2), true, EnumerationBudget::DEFAULT).unwrap().collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].exps(), &[0, 0]);
        assert_eq!(all[1].exps(), &[0, 1]);

        let e = enumerate_unit_functions(prime(7), order(6), true, EnumerationBudget::DEFAULT).unwrap();
        assert_eq!(e.len(), 7776);
        assert!(e.clone().all(|f| f.exps()[0] == 0));
        let tables: Vec<Vec<u64>> = e.map(|f| f.exps().to_vec()).collect();
        assert!(tables.windows(2).all(|w| w[0] < w[1]));

        let free: Vec<_> =
            enumerate_unit_functions(p3, order(2), false, EnumerationBudget::DEFAULT).unwrap().collect();
        assert_eq!(free.len(), 4);
        assert_eq!(free[2].exps(), &[1, 0]);

        match enumerate_unit_functions(prime(13), order(10), true, EnumerationBudget::DEFAULT) {
            Err(Error::BudgetExceeded { count, budget }) => {
                assert_eq!(count, BigUint::from(100_000_000_000u64));
                assert_eq!(budget, 10_000_000);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn function_text_format() {
        let f: UnitFunction = "p=7 n=2 exps=0,0,1,0,1,1".parse().unwrap();
        assert_eq!(f, UnitFunction::legendre(prime(7)));
        assert_eq!(f.to_string(), "p=7 n=2 exps=0,0,1,0,1,1");
        let g: UnitFunction = "  n = 6   p=3 exps = 0 , 5 ".parse().unwrap();
        assert_eq!(g.exps(), &[0, 5]);
        assert!(matches!("p=7 n=2 exps=0,0,1".parse::<UnitFunction>(), Err(Error::InvalidFunction(_))));
        assert!(matches!("p=5 n=2 exps=0,2,1,1".parse::<UnitFunction>(), Err(Error::InvalidFunction(_))));
        assert!(matches!("p=9 n=2 exps=0,0,0,0,0,0,0,0".parse::<UnitFunction>(), Err(Error::NotPrime(9))));
        assert!(matches!("p=5 exps=0,0,0,0".parse::<UnitFunction>(), Err(Error::Parse(_))));
        assert!(matches!("p=5 n=2 q=1 exps=0,0,0,0".parse::<UnitFunction>(), Err(Error::Parse(_))));
        assert!(matches!("p=5 n=2 exps=0,x,0,0".parse::<UnitFunction>(), Err(Error::Parse(_))));
    }

    #[test]
    fn minimal_orders() {
        let f = UnitFunction::from_parts(5, 12, &[0, 4, 8, 4]).unwrap();
        assert_eq!(f.minimal_order(), 3);
        assert_eq!(f.with_order(order(3)).unwrap().exps(), &[0, 1, 2, 1]);
        assert_eq!(f.with_order(order(6)).unwrap().exps(), &[0, 2, 4, 2]);
        assert!(f.with_order(order(4)).is_err());
        assert_eq!(UnitFunction::from_parts(3, 6, &[0, 5]).unwrap().minimal_order(), 6);
    }
}
