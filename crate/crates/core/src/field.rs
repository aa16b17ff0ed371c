//! Exact arithmetic in GF(p^k).
//!
//! Elements are stored as canonical integers in `[0, q)`: the polynomial
//! `c_0 + c_1·x + … + c_{k-1}·x^{k-1}` is encoded as `Σ c_i · p^i`. For
//! extension fields the reducing modulus is a monic irreducible polynomial
//! of degree `k` over GF(p), validated at construction. When no modulus is
//! given, the lexicographically smallest monic irreducible (coefficients
//! compared low-degree-first) is selected, so field construction is
//! deterministic across runs.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order. The instances this library targets need
/// only tiny fields, so the cap is generous.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    DegreeMismatch { expected: u32, got: usize },
    #[error("field order {order} exceeds the cap {cap}")]
    OrderTooLarge { order: u128, cap: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different fields")]
    SpecMismatch,
    #[error("representative {rep} out of range for field of order {order}")]
    RepOutOfRange { rep: u64, order: u64 },
    #[error("cannot parse field spec {0:?}")]
    Parse(String),
}

#[derive(Debug)]
struct SpecInner {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, k+1 coefficients low-degree-first. `[0, 1]` placeholder
    /// when k = 1 (arithmetic never consults it in that case).
    modulus: Vec<u64>,
}

/// A finite field GF(p^k). Cheap to clone; all element operations go
/// through a shared spec.
#[derive(Debug, Clone)]
pub struct FieldSpec(Arc<SpecInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FieldSpec {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomial remainder of `a` by monic `m`, coefficients mod p, low-degree-first.
fn poly_rem(mut a: Vec<u64>, m: &[u64], p: u64) -> Vec<u64> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let lead = *a.last().unwrap() % p;
        let shift = a.len() - 1 - dm;
        if lead != 0 {
            for i in 0..=dm {
                let idx = shift + i;
                a[idx] = (a[idx] + p - lead * m[i] % p) % p;
            }
        }
        a.pop();
    }
    a
}

fn poly_is_zero(a: &[u64]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// Irreducibility over GF(p) by trial division against all monic divisors
/// of degree 1..=deg/2.
fn poly_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        // all monic polynomials of degree d: p^d candidates
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                div.push(t % p);
                t /= p;
            }
            div.push(1);
            if poly_is_zero(&poly_rem(m.to_vec(), &div, p)) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest (low-degree coefficients compared first) monic
/// irreducible of degree k over GF(p).
fn default_modulus(p: u64, k: u32) -> Vec<u64> {
    let kk = k as usize;
    let mut digits = vec![0u64; kk];
    loop {
        let mut m = digits.clone();
        m.push(1);
        if poly_irreducible(&m, p) {
            return m;
        }
        // odometer with the low-degree coefficient as the most significant
        // digit, so iteration order matches the comparison order
        let mut i = kk;
        loop {
            if i == 0 {
                unreachable!("an irreducible of every degree exists over GF(p)");
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
        }
    }
}

impl FieldSpec {
    /// Build GF(p^k). `modulus` lists k+1 coefficients low-degree-first and
    /// may be omitted to select the default.
    pub fn new(p: u64, k: u32, modulus: Option<&[u64]>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrimeCharacteristic(p));
        }
        if k < 1 {
            return Err(FieldError::DegreeMismatch { expected: 1, got: 0 });
        }
        let order = (p as u128).pow(k);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(FieldError::OrderTooLarge { order, cap: MAX_FIELD_ORDER });
        }
        let q = order as u64;
        let modulus = match modulus {
            Some(m) => {
                let m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                if m.len() != k as usize + 1 || *m.last().unwrap() != 1 {
                    return Err(FieldError::DegreeMismatch { expected: k, got: m.len().saturating_sub(1) });
                }
                if !poly_irreducible(&m, p) {
                    return Err(FieldError::ReducibleModulus { p });
                }
                m
            }
            None => {
                if k == 1 {
                    vec![0, 1]
                } else {
                    default_modulus(p, k)
                }
            }
        };
        Ok(FieldSpec(Arc::new(SpecInner { p, k, q, modulus })))
    }

    /// Parse "p", "p^k", or "p^k:c0,c1,...,ck" (modulus low-degree-first).
    pub fn parse(s: &str) -> Result<Self, FieldError> {
        let s = s.trim();
        let (base, modulus) = match s.split_once(':') {
            Some((b, m)) => (b, Some(m)),
            None => (s, None),
        };
        let (p_str, k_str) = match base.split_once('^') {
            Some((p, k)) => (p, Some(k)),
            None => (base, None),
        };
        let p: u64 = p_str.trim().parse().map_err(|_| FieldError::Parse(s.to_string()))?;
        let k: u32 = match k_str {
            Some(k) => k.trim().parse().map_err(|_| FieldError::Parse(s.to_string()))?,
            None => 1,
        };
        let coeffs: Option<Vec<u64>> = match modulus {
            Some(m) => Some(
                m.split(',')
                    .map(|c| c.trim().parse().map_err(|_| FieldError::Parse(s.to_string())))
                    .collect::<Result<_, _>>()?,
            ),
            None => None,
        };
        FieldSpec::new(p, k, coeffs.as_deref())
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    /// Canonical "p" / "p^k:c0,..,ck" form that parses back to this field.
    pub fn spec_string(&self) -> String {
        if self.0.k == 1 {
            format!("{}", self.0.p)
        } else {
            let coeffs: Vec<String> = self.0.modulus.iter().map(|c| c.to_string()).collect();
            format!("{}^{}:{}", self.0.p, self.0.k, coeffs.join(","))
        }
    }

    pub fn element(&self, rep: u64) -> Result<FieldElement, FieldError> {
        if rep >= self.0.q {
            return Err(FieldError::RepOutOfRange { rep, order: self.0.q });
        }
        Ok(FieldElement { rep, spec: self.clone() })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { rep: 0, spec: self.clone() }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { rep: 1, spec: self.clone() }
    }

    /// Image of the integer m under the canonical map Z -> GF(p^k)
    /// (m mod p as a constant polynomial).
    pub fn from_integer(&self, m: u64) -> FieldElement {
        FieldElement { rep: m % self.0.p, spec: self.clone() }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |rep| FieldElement { rep, spec: self.clone() })
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..self.0.q).map(move |rep| FieldElement { rep, spec: self.clone() })
    }

    fn digits(&self, rep: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.0.k as usize);
        let mut t = rep;
        for _ in 0..self.0.k {
            out.push(t % self.0.p);
            t /= self.0.p;
        }
        out
    }

    fn rep_from_digits(&self, digits: &[u64]) -> u64 {
        let mut rep = 0u64;
        for &d in digits.iter().rev() {
            rep = rep * self.0.p + d % self.0.p;
        }
        rep
    }

    pub(crate) fn add_rep(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.k == 1 {
            return (a + b) % p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        self.rep_from_digits(&sum)
    }

    pub(crate) fn neg_rep(&self, a: u64) -> u64 {
        let p = self.0.p;
        if self.0.k == 1 {
            return (p - a % p) % p;
        }
        let da = self.digits(a);
        let neg: Vec<u64> = da.iter().map(|x| (p - x % p) % p).collect();
        self.rep_from_digits(&neg)
    }

    pub(crate) fn sub_rep(&self, a: u64, b: u64) -> u64 {
        self.add_rep(a, self.neg_rep(b))
    }

    pub(crate) fn mul_rep(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.k == 1 {
            return a * b % p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * self.0.k as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let rem = poly_rem(prod, &self.0.modulus, p);
        self.rep_from_digits(&rem)
    }

    pub(crate) fn pow_rep(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_rep(acc, base);
            }
            base = self.mul_rep(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero rep, as a^(q-2).
    pub(crate) fn inv_rep(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow_rep(a, self.0.q - 2)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

/// An element of a finite field, tied to its spec.
#[derive(Debug, Clone)]
pub struct FieldElement {
    rep: u64,
    spec: FieldSpec,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep && self.spec == other.spec
    }
}
impl Eq for FieldElement {}

impl FieldElement {
    pub fn rep(&self) -> u64 {
        self.rep
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.rep == 0
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.spec == other.spec {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(FieldElement { rep: self.spec.add_rep(self.rep, other.rep), spec: self.spec.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(FieldElement { rep: self.spec.sub_rep(self.rep, other.rep), spec: self.spec.clone() })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(FieldElement { rep: self.spec.mul_rep(self.rep, other.rep), spec: self.spec.clone() })
    }

    pub fn neg(&self) -> Self {
        FieldElement { rep: self.spec.neg_rep(self.rep), spec: self.spec.clone() }
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.rep == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(FieldElement { rep: self.spec.inv_rep(self.rep), spec: self.spec.clone() })
    }

    pub fn pow(&self, e: u64) -> Self {
        FieldElement { rep: self.spec.pow_rep(self.rep, e), spec: self.spec.clone() }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}
