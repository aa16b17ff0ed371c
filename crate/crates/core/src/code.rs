//! Linear codes of length |G| arising as right ideals zKG.
//!
//! A [`GroupCode`] stores a canonical reduced-row-echelon basis, so code
//! equality is matrix equality. The dual is the kernel under the coordinate
//! dot product. LCD status is decided by two independent criteria (hull
//! rank and Gram determinant) that must agree; minimum distance is found by
//! full message-space enumeration, which doubles as the oracle the small
//! instances were derived from.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::field::FieldSpec;
use crate::group::Group;
use crate::linalg;

/// Default cap on enumerated codewords.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 24;

/// Enumeration goes parallel above this many messages.
const PARALLEL_THRESHOLD: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("enumeration needs {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("hull criterion and Gram criterion disagree on LCD status (arithmetic bug)")]
    InternalInconsistency,
    #[error("codes live in different algebras")]
    SpecMismatch,
}

/// Minimum distance: infinite for the zero code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn as_finite(&self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(*d),
            Distance::Infinite => None,
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d),
            Distance::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .map(Distance::Finite)
                .ok_or_else(|| D::Error::custom("distance must be a non-negative integer")),
            serde_json::Value::String(s) if s == "infinite" => Ok(Distance::Infinite),
            other => Err(D::Error::custom(format!("bad distance value {other}"))),
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "infinite"),
        }
    }
}

/// Outcome of a minimum-distance enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub distance: Distance,
    pub codewords_examined: u64,
    /// Lexicographically smallest minimum-weight codeword; None for the zero code.
    pub witness: Option<AlgebraElement>,
}

/// Machine-readable code profile.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    pub lcd: bool,
    pub mds: bool,
    pub self_adjoint: bool,
    pub hull_dim: usize,
    pub witness: Option<Vec<u64>>,
}

/// A linear code over GF(q) of length |G| with a canonical RREF basis.
#[derive(Debug, Clone)]
pub struct GroupCode {
    field: FieldSpec,
    group: Group,
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    generator: Option<AlgebraElement>,
}

impl PartialEq for GroupCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.group == other.group && self.basis == other.basis
    }
}
impl Eq for GroupCode {}

impl GroupCode {
    /// C = zKG, spanned by the right translates z·g.
    pub fn right_ideal(z: &AlgebraElement) -> GroupCode {
        let group = z.group().clone();
        let field = z.field().clone();
        let n = group.order();
        let rows: Vec<Vec<u64>> = (0..n).map(|g| z.right_translate(g).coeff_reps().to_vec()).collect();
        let (basis, pivots) = linalg::rref(&field, rows, n);
        GroupCode { field, group, basis, pivots, generator: Some(z.clone()) }
    }

    /// Span of arbitrary algebra elements (no right-ideal closure implied).
    pub fn span(elements: &[AlgebraElement]) -> Result<GroupCode, CodeError> {
        let first = elements.first().ok_or(CodeError::SpecMismatch)?;
        let field = first.field().clone();
        let group = first.group().clone();
        let n = group.order();
        let mut rows = Vec::with_capacity(elements.len());
        for e in elements {
            if e.field() != &field || e.group() != &group {
                return Err(CodeError::SpecMismatch);
            }
            rows.push(e.coeff_reps().to_vec());
        }
        let (basis, pivots) = linalg::rref(&field, rows, n);
        Ok(GroupCode { field, group, basis, pivots, generator: None })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn length(&self) -> usize {
        self.group.order()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_rows(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn generator(&self) -> Option<&AlgebraElement> {
        self.generator.as_ref()
    }

    pub fn basis_elements(&self) -> Vec<AlgebraElement> {
        self.basis
            .iter()
            .map(|row| {
                AlgebraElement::from_coeff_reps(&self.field, &self.group, row.clone())
                    .expect("basis rows are canonical")
            })
            .collect()
    }

    /// Kernel of the basis matrix under the coordinate dot product.
    pub fn dual(&self) -> GroupCode {
        let n = self.length();
        let rows = if self.basis.is_empty() {
            // zero code: dual is the whole space
            (0..n)
                .map(|i| {
                    let mut r = vec![0u64; n];
                    r[i] = 1;
                    r
                })
                .collect()
        } else {
            linalg::kernel_basis(&self.field, self.basis.clone(), n)
        };
        let (basis, pivots) = linalg::rref(&self.field, rows, n);
        GroupCode { field: self.field.clone(), group: self.group.clone(), basis, pivots, generator: None }
    }

    /// dim(C ∩ C⊥) = k + k⊥ − rank of the stacked bases.
    pub fn hull_dimension(&self) -> usize {
        let dual = self.dual();
        let mut stacked = self.basis.clone();
        stacked.extend(dual.basis.iter().cloned());
        let r = linalg::rank(&self.field, stacked, self.length());
        self.dimension() + dual.dimension() - r
    }

    /// LCD iff the hull is trivial. Cross-checked against the Gram
    /// criterion (B·Bᵀ nonsingular); disagreement is an arithmetic bug.
    pub fn is_lcd(&self) -> Result<bool, CodeError> {
        let by_hull = self.hull_dimension() == 0;
        let k = self.dimension();
        let gram: Vec<Vec<u64>> = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let mut acc = 0u64;
                        for t in 0..self.length() {
                            acc = self
                                .field
                                .add_rep(acc, self.field.mul_rep(self.basis[i][t], self.basis[j][t]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let by_gram = linalg::det(&self.field, gram) != 0;
        if by_hull != by_gram {
            return Err(CodeError::InternalInconsistency);
        }
        Ok(by_hull)
    }

    /// Membership test by elimination against the RREF basis.
    pub fn contains(&self, a: &AlgebraElement) -> bool {
        if a.field() != &self.field || a.group() != &self.group {
            return false;
        }
        let rem = linalg::reduce_against(&self.field, &self.basis, &self.pivots, a.coeff_reps().to_vec());
        rem.iter().all(|&x| x == 0)
    }

    /// True iff the adjoint of every basis row lies in the code.
    pub fn is_self_adjoint(&self) -> bool {
        self.basis_elements().iter().all(|row| self.contains(&row.adjoint()))
    }

    /// Minimum weight over all q^k − 1 nonzero codewords by message-space
    /// enumeration; the witness is the lexicographically smallest codeword
    /// of minimum weight, making the result partition-independent.
    pub fn minimum_distance(&self, budget: u64) -> Result<DistanceResult, CodeError> {
        let k = self.dimension();
        let n = self.length();
        let q = self.field.order();
        if k == 0 {
            return Ok(DistanceResult {
                distance: Distance::Infinite,
                codewords_examined: 0,
                witness: None,
            });
        }
        let total = sat_pow(q, k);
        if total > budget as u128 {
            return Err(CodeError::BudgetExceeded { needed: total, budget });
        }
        let total = total as u64;

        let best = if total > PARALLEL_THRESHOLD {
            // split on the leading message digit; each block enumerates the
            // remaining k-1 digits serially
            (0..q)
                .into_par_iter()
                .map(|lead| {
                    let mut start = vec![0u64; n];
                    if lead != 0 {
                        for j in 0..n {
                            start[j] = self.field.mul_rep(lead, self.basis[0][j]);
                        }
                    }
                    self.scan_block(start, 1, lead == 0)
                })
                .reduce(|| None, merge_min)
        } else {
            self.scan_block(vec![0u64; n], 0, true)
        };

        let (weight, word) = best.expect("nonzero code has a nonzero codeword");
        let witness = AlgebraElement::from_coeff_reps(&self.field, &self.group, word)
            .expect("codeword coefficients are canonical");
        Ok(DistanceResult {
            distance: Distance::Finite(weight),
            codewords_examined: total - 1,
            witness: Some(witness),
        })
    }

    /// Enumerate all messages whose digits from `fixed_digits` onward vary,
    /// starting from `start` (the contribution of the fixed digits), and
    /// return the best (weight, codeword) seen. `skip_zero` drops the
    /// all-zero message.
    fn scan_block(&self, start: Vec<u64>, fixed_digits: usize, skip_zero: bool) -> Option<(u64, Vec<u64>)> {
        let k = self.dimension();
        let n = self.length();
        let q = self.field.order();
        let free = k - fixed_digits;
        let mut digits = vec![0u64; free];
        let mut word = start;
        let mut best: Option<(u64, Vec<u64>)> = None;
        let consider = |word: &[u64], best: &mut Option<(u64, Vec<u64>)>| {
            let w = word.iter().filter(|&&x| x != 0).count() as u64;
            let better = match best {
                None => true,
                Some((bw, bword)) => w < *bw || (w == *bw && word < bword.as_slice()),
            };
            if better {
                *best = Some((w, word.to_vec()));
            }
        };
        if !skip_zero {
            consider(&word, &mut best);
        }
        if free == 0 {
            return best;
        }
        // odometer over the free digits; each digit change adds
        // (new - old)·row to the running codeword. The delta is 1 for prime
        // fields, but in extension fields stepping the canonical rep by one
        // is not the same as adding the field's 1, so the general scalar
        // difference is required.
        let total_steps = sat_pow(q, free) as u64 - 1;
        for _ in 0..total_steps {
            let mut i = free;
            loop {
                i -= 1;
                let old = digits[i];
                let new = if old + 1 < q { old + 1 } else { 0 };
                digits[i] = new;
                let delta = self.field.sub_rep(new, old);
                let row = &self.basis[fixed_digits + i];
                if delta == 1 {
                    for j in 0..n {
                        word[j] = self.field.add_rep(word[j], row[j]);
                    }
                } else {
                    for j in 0..n {
                        word[j] = self.field.add_rep(word[j], self.field.mul_rep(delta, row[j]));
                    }
                }
                if new != 0 {
                    break;
                }
            }
            consider(&word, &mut best);
        }
        best
    }

    /// d = n − k + 1. The zero code is not MDS (its distance is not a number).
    pub fn is_mds(&self, budget: u64) -> Result<bool, CodeError> {
        let d = self.minimum_distance(budget)?;
        Ok(match d.distance {
            Distance::Finite(d) => d as usize == self.length() - self.dimension() + 1,
            Distance::Infinite => false,
        })
    }

    /// Full profile at the given enumeration budget.
    pub fn report(&self, budget: u64) -> Result<CodeReport, CodeError> {
        let dist = self.minimum_distance(budget)?;
        let mds = match dist.distance {
            Distance::Finite(d) => d as usize == self.length() - self.dimension() + 1,
            Distance::Infinite => false,
        };
        Ok(CodeReport {
            n: self.length(),
            k: self.dimension(),
            d: dist.distance,
            lcd: self.is_lcd()?,
            mds,
            self_adjoint: self.is_self_adjoint(),
            hull_dim: self.hull_dimension(),
            witness: dist.witness.map(|w| w.coeff_reps().to_vec()),
        })
    }
}

/// q^e, saturating instead of overflowing.
pub(crate) fn sat_pow(q: u64, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(q as u128))
}

fn merge_min(a: Option<(u64, Vec<u64>)>, b: Option<(u64, Vec<u64>)>) -> Option<(u64, Vec<u64>)> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => {
            if y.0 < x.0 || (y.0 == x.0 && y.1 < x.1) {
                Some(y)
            } else {
                Some(x)
            }
        }
    }
}

/// Dimension of {a ∈ KG : z·a = 0}: the kernel of left-multiplication by z,
/// whose matrix has the translates z·g as columns.
pub fn right_annihilator_dimension(z: &AlgebraElement) -> usize {
    let n = z.group().order();
    let mut mat = vec![vec![0u64; n]; n];
    for g in 0..n {
        let col = z.right_translate(g);
        for (i, &c) in col.coeff_reps().iter().enumerate() {
            mat[i][g] = c;
        }
    }
    linalg::kernel_basis(z.field(), mat, n).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn f2() -> FieldSpec {
        FieldSpec::new(2, 1, None).unwrap()
    }

    fn s3() -> Group {
        Group::from_descriptor("S3").unwrap()
    }

    fn s3_cycle_sum_code() -> GroupCode {
        let z = AlgebraElement::parse_literal(&f2(), &s3(), "e:1,(123):1,(132):1").unwrap();
        GroupCode::right_ideal(&z)
    }

    #[test]
    fn right_ideal_dimensions() {
        let g = s3();
        let f = f2();
        assert_eq!(GroupCode::right_ideal(&AlgebraElement::zero(&f, &g)).dimension(), 0);
        assert_eq!(GroupCode::right_ideal(&AlgebraElement::one(&f, &g)).dimension(), 6);
        assert_eq!(s3_cycle_sum_code().dimension(), 2);
    }

    #[test]
    fn s3_cycle_sum_code_profile() {
        let c = s3_cycle_sum_code();
        let d = c.minimum_distance(DEFAULT_DISTANCE_BUDGET).unwrap();
        assert_eq!(d.distance, Distance::Finite(3));
        assert_eq!(d.codewords_examined, 3);
        assert_eq!(d.witness.as_ref().unwrap().weight(), 3);
        assert!(c.contains(d.witness.as_ref().unwrap()));
        assert!(c.is_lcd().unwrap());
        assert!(c.is_self_adjoint());
        assert_eq!(c.hull_dimension(), 0);
        assert!(!c.is_mds(DEFAULT_DISTANCE_BUDGET).unwrap());
        // the three nonzero codewords weigh 3, 3, 6
        let mut weights = Vec::new();
        for a in 0..2u64 {
            for b in 0..2u64 {
                if a == 0 && b == 0 {
                    continue;
                }
                let mut w = [0u64; 6];
                for j in 0..6 {
                    let f = c.field();
                    w[j] = f.add_rep(
                        f.mul_rep(a, c.basis_rows()[0][j]),
                        f.mul_rep(b, c.basis_rows()[1][j]),
                    );
                }
                weights.push(w.iter().filter(|&&x| x != 0).count());
            }
        }
        weights.sort_unstable();
        assert_eq!(weights, vec![3, 3, 6]);
    }

    #[test]
    fn dual_round_trip_and_idempotent_decomposition() {
        let c = s3_cycle_sum_code();
        let dual = c.dual();
        assert_eq!(dual.dimension(), 4);
        assert_eq!(dual.dual(), c);
        // dual(zKG) = (1-z)KG for the symmetric idempotent z
        let z = c.generator().unwrap().clone();
        let omz_code = GroupCode::right_ideal(&z.one_minus());
        assert_eq!(dual, omz_code);
        // zero code: dual is everything
        let zero = GroupCode::right_ideal(&AlgebraElement::zero(&f2(), &s3()));
        assert_eq!(zero.dual().dimension(), 6);
        assert_eq!(zero.dual().dual(), zero);
    }

    #[test]
    fn hull_and_lcd_conventions() {
        let g = Group::from_descriptor("C2").unwrap();
        let f = f2();
        // whole space over GF(2), n=2: dual is zero, hull 0
        let whole = GroupCode::right_ideal(&AlgebraElement::one(&f, &g));
        assert_eq!(whole.hull_dimension(), 0);
        assert!(whole.is_lcd().unwrap());
        assert!(whole.is_mds(1 << 10).unwrap()); // d = 1 = n - n + 1
        // self-dual span {11}: hull = k = 1
        let row = AlgebraElement::from_coeff_reps(&f, &g, vec![1, 1]).unwrap();
        let selfdual = GroupCode::span(&[row]).unwrap();
        assert_eq!(selfdual.hull_dimension(), 1);
        assert!(!selfdual.is_lcd().unwrap());
        // zero code is LCD by convention, with infinite distance
        let zero = GroupCode::right_ideal(&AlgebraElement::zero(&f, &g));
        assert!(zero.is_lcd().unwrap());
        let d = zero.minimum_distance(1 << 10).unwrap();
        assert_eq!(d.distance, Distance::Infinite);
        assert!(!zero.is_mds(1 << 10).unwrap());
    }

    #[test]
    fn repetition_code_is_mds() {
        // {00, 11, 22} over GF(3): d = 2 = 2 - 1 + 1
        let g = Group::from_descriptor("C2").unwrap();
        let f = FieldSpec::new(3, 1, None).unwrap();
        let row = AlgebraElement::from_coeff_reps(&f, &g, vec![1, 1]).unwrap();
        let c = GroupCode::span(&[row]).unwrap();
        assert_eq!(c.minimum_distance(1 << 10).unwrap().distance, Distance::Finite(2));
        assert!(c.is_mds(1 << 10).unwrap());
    }

    #[test]
    fn distance_enumeration_over_extension_field() {
        // stepping message digits must walk all of GF(4), not just the
        // prime subfield
        let g = Group::from_descriptor("C2").unwrap();
        let f4 = FieldSpec::new(2, 2, None).unwrap();
        let row = AlgebraElement::from_coeff_reps(&f4, &g, vec![1, 2]).unwrap();
        let c = GroupCode::span(&[row]).unwrap();
        let res = c.minimum_distance(1 << 10).unwrap();
        assert_eq!(res.codewords_examined, 3);
        assert_eq!(res.distance, Distance::Finite(2));
        assert!(c.is_mds(1 << 10).unwrap());
        // whole space over GF(4) x C2: 15 nonzero codewords, d = 1
        let whole = GroupCode::right_ideal(&AlgebraElement::one(&f4, &g));
        let res = whole.minimum_distance(1 << 10).unwrap();
        assert_eq!(res.codewords_examined, 15);
        assert_eq!(res.distance, Distance::Finite(1));
        assert_eq!(res.witness.unwrap().coeff_reps(), &[0, 1]);
    }

    #[test]
    fn self_adjoint_detection() {
        let g = s3();
        let f = f2();
        // single row (12)+(123): adjoint is (12)+(132), not in span
        let row = AlgebraElement::parse_literal(&f, &g, "(12):1,(123):1").unwrap();
        let c = GroupCode::span(&[row]).unwrap();
        assert!(!c.is_self_adjoint());
        // zero code and whole space are self-adjoint
        assert!(GroupCode::right_ideal(&AlgebraElement::zero(&f, &g)).is_self_adjoint());
        assert!(GroupCode::right_ideal(&AlgebraElement::one(&f, &g)).is_self_adjoint());
    }

    #[test]
    fn annihilator_dimensions() {
        let g = s3();
        let f = f2();
        assert_eq!(right_annihilator_dimension(&AlgebraElement::one(&f, &g)), 0);
        assert_eq!(right_annihilator_dimension(&AlgebraElement::zero(&f, &g)), 6);
        let z = AlgebraElement::parse_literal(&f, &g, "e:1,(123):1,(132):1").unwrap();
        assert_eq!(right_annihilator_dimension(&z), 4);
        // rank-nullity: 6 = 2 + 4
        assert_eq!(GroupCode::right_ideal(&z).dimension() + 4, 6);
    }

    #[test]
    fn budget_enforced() {
        let g = Group::from_descriptor("C8").unwrap();
        let whole = GroupCode::right_ideal(&AlgebraElement::one(&f2(), &g));
        // 2^8 = 256 messages > 100
        assert!(matches!(
            whole.minimum_distance(100),
            Err(CodeError::BudgetExceeded { needed: 256, budget: 100 })
        ));
        assert!(whole.minimum_distance(256).is_ok());
    }

    #[test]
    fn witness_is_lex_smallest() {
        // whole space over GF(2) x C2: minimum weight 1, the lexicographically
        // smallest weight-1 word is 01 (index order), i.e. reps [0, 1]
        let g = Group::from_descriptor("C2").unwrap();
        let whole = GroupCode::right_ideal(&AlgebraElement::one(&f2(), &g));
        let d = whole.minimum_distance(1 << 10).unwrap();
        assert_eq!(d.witness.unwrap().coeff_reps(), &[0, 1]);
    }

    #[test]
    fn right_ideal_closure() {
        let z = AlgebraElement::parse_literal(&f2(), &s3(), "e:1,(123):1,(132):1").unwrap();
        let c = GroupCode::right_ideal(&z);
        for row in c.basis_elements() {
            for g in 0..6 {
                assert!(c.contains(&row.right_translate(g)));
            }
        }
    }
}
