//! Elements of the group algebra KG.
//!
//! An [`AlgebraElement`] is a dense coefficient vector over a finite field,
//! indexed by group element. Multiplication is the convolution extending the
//! group operation; the adjoint sends g to g⁻¹ with coefficients unchanged;
//! the inner product is the coordinate dot product.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::group::{Group, GroupError, SubgroupView};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("elements belong to different group algebras")]
    SpecMismatch,
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("scale must be nonzero")]
    ZeroScale,
    #[error("the zero element has no scalar stabilizer")]
    ZeroElement,
    #[error("cannot parse element literal {0:?}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A formal K-linear combination of group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    field: FieldSpec,
    group: Group,
    coeffs: Vec<u64>,
}

impl AlgebraElement {
    pub fn zero(field: &FieldSpec, group: &Group) -> Self {
        AlgebraElement {
            field: field.clone(),
            group: group.clone(),
            coeffs: vec![0; group.order()],
        }
    }

    /// The identity of KG: coefficient 1 on the group identity.
    pub fn one(field: &FieldSpec, group: &Group) -> Self {
        let mut out = Self::zero(field, group);
        out.coeffs[group.identity()] = 1;
        out
    }

    /// Build from (index, coefficient) terms; duplicate indices are summed.
    pub fn from_support(
        field: &FieldSpec,
        group: &Group,
        terms: &[(usize, FieldElement)],
    ) -> Result<Self, AlgebraError> {
        let mut out = Self::zero(field, group);
        for (idx, c) in terms {
            if *idx >= group.order() {
                return Err(AlgebraError::IndexOutOfRange { index: *idx, order: group.order() });
            }
            if c.spec() != field {
                return Err(AlgebraError::SpecMismatch);
            }
            out.coeffs[*idx] = field.add_rep(out.coeffs[*idx], c.rep());
        }
        Ok(out)
    }

    /// Build from a dense vector of canonical coefficient reps.
    pub fn from_coeff_reps(
        field: &FieldSpec,
        group: &Group,
        reps: Vec<u64>,
    ) -> Result<Self, AlgebraError> {
        if reps.len() != group.order() {
            return Err(AlgebraError::IndexOutOfRange { index: reps.len(), order: group.order() });
        }
        for &r in &reps {
            if r >= field.order() {
                return Err(AlgebraError::Field(FieldError::RepOutOfRange {
                    rep: r,
                    order: field.order(),
                }));
            }
        }
        Ok(AlgebraElement { field: field.clone(), group: group.clone(), coeffs: reps })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn coeff(&self, g: usize) -> FieldElement {
        self.field
            .element(self.coeffs[g])
            .expect("stored coefficients are canonical")
    }

    pub fn coeff_reps(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.field == other.field && self.group == other.group {
            Ok(())
        } else {
            Err(AlgebraError::SpecMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.field.add_rep(a, b))
            .collect();
        Ok(AlgebraElement { field: self.field.clone(), group: self.group.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.field.sub_rep(a, b))
            .collect();
        Ok(AlgebraElement { field: self.field.clone(), group: self.group.clone(), coeffs })
    }

    /// Convolution product: (a·b)_{gh} += a_g b_h over all pairs.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.group.order();
        let f = &self.field;
        let mut coeffs = vec![0u64; n];
        for g in 0..n {
            let ag = self.coeffs[g];
            if ag == 0 {
                continue;
            }
            for h in 0..n {
                let bh = other.coeffs[h];
                if bh == 0 {
                    continue;
                }
                let t = self.group.mul(g, h);
                coeffs[t] = f.add_rep(coeffs[t], f.mul_rep(ag, bh));
            }
        }
        AlgebraElement { field: self.field.clone(), group: self.group.clone(), coeffs }
    }

    pub fn scale(&self, c: &FieldElement) -> Result<Self, AlgebraError> {
        if c.spec() != &self.field {
            return Err(AlgebraError::SpecMismatch);
        }
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul_rep(a, c.rep())).collect();
        Ok(AlgebraElement { field: self.field.clone(), group: self.group.clone(), coeffs })
    }

    /// â = Σ a_g g⁻¹.
    pub fn adjoint(&self) -> Self {
        let n = self.group.order();
        let mut coeffs = vec![0u64; n];
        for g in 0..n {
            coeffs[self.group.inv(g)] = self.coeffs[g];
        }
        AlgebraElement { field: self.field.clone(), group: self.group.clone(), coeffs }
    }

    /// ⟨a, b⟩ = Σ a_g b_g.
    pub fn inner_product(&self, other: &Self) -> Result<FieldElement, AlgebraError> {
        self.check(other)?;
        let mut acc = 0u64;
        for (&a, &b) in self.coeffs.iter().zip(&other.coeffs) {
            acc = self.field.add_rep(acc, self.field.mul_rep(a, b));
        }
        Ok(self.field.element(acc).expect("canonical"))
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&g| self.coeffs[g] != 0).collect()
    }

    /// z = z² and z = ẑ.
    pub fn is_symmetric_idempotent(&self) -> bool {
        self.is_self_adjoint_element() && self.is_idempotent()
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul_unchecked(self) == *self
    }

    pub fn is_self_adjoint_element(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|g| self.coeffs[g] == self.coeffs[self.group.inv(g)])
    }

    /// True iff the element commutes with every group basis element
    /// (sufficient for centrality since G spans KG). Equivalent to the
    /// coefficients being constant on conjugacy classes.
    pub fn is_central(&self) -> bool {
        let n = self.group.order();
        (0..n).all(|g| {
            let gi = self.group.inv(g);
            (0..n).all(|h| self.coeffs[self.group.mul(self.group.mul(g, h), gi)] == self.coeffs[h])
        })
    }

    /// z·g for a group element g (right translation).
    pub fn right_translate(&self, g: usize) -> Self {
        let n = self.group.order();
        let mut coeffs = vec![0u64; n];
        for h in 0..n {
            coeffs[self.group.mul(h, g)] = self.coeffs[h];
        }
        AlgebraElement { field: self.field.clone(), group: self.group.clone(), coeffs }
    }

    /// a^m for m >= 1, by square and multiply.
    pub fn power(&self, m: u64) -> Self {
        assert!(m >= 1, "power requires a positive exponent");
        let mut base = self.clone();
        let mut e = m - 1;
        let mut acc = self.clone();
        // acc = a, multiply in a^(m-1)
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// 1 − z.
    pub fn one_minus(&self) -> Self {
        Self::one(&self.field, &self.group)
            .sub(self)
            .expect("same algebra")
    }

    /// scale·Σ_{h∈H} h. Always self-adjoint (subgroups are inverse-closed).
    pub fn subgroup_sum(
        field: &FieldSpec,
        h: &SubgroupView,
        scale: &FieldElement,
    ) -> Result<Self, AlgebraError> {
        if scale.is_zero() {
            return Err(AlgebraError::ZeroScale);
        }
        if scale.spec() != field {
            return Err(AlgebraError::SpecMismatch);
        }
        let mut out = Self::zero(field, h.parent());
        for &m in h.members() {
            out.coeffs[m] = scale.rep();
        }
        Ok(out)
    }

    /// S = {g : z·g = λ·z for some scalar λ}, always a subgroup (validated).
    /// λ is recovered as the ratio at any support point.
    pub fn scalar_stabilizer(&self) -> Result<SubgroupView, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroElement);
        }
        let n = self.group.order();
        let probe = self.support()[0];
        let probe_rep = self.coeffs[probe];
        let mut members = Vec::new();
        'outer: for g in 0..n {
            // z·g has coefficient z_{t g^{-1}} at t
            let gi = self.group.inv(g);
            let lambda = self
                .field
                .mul_rep(self.coeffs[self.group.mul(probe, gi)], self.field.inv_rep(probe_rep));
            if lambda == 0 {
                continue;
            }
            for t in 0..n {
                let translated = self.coeffs[self.group.mul(t, gi)];
                if translated != self.field.mul_rep(lambda, self.coeffs[t]) {
                    continue 'outer;
                }
            }
            members.push(g);
        }
        Ok(SubgroupView::new(&self.group, &members)?)
    }

    /// Sparse literal using group labels, e.g. "e:1,(123):1,(132):1".
    pub fn to_literal(&self) -> String {
        let parts: Vec<String> = self
            .support()
            .into_iter()
            .map(|g| format!("{}:{}", self.group.label(g), self.coeffs[g]))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(",")
        }
    }

    /// Parse either a dense coefficient list ("1,0,0,0,1,1") or a sparse
    /// label form ("e:1,(123):1"). Sparse duplicate labels are summed.
    /// Splitting respects parentheses so product labels like "(0,1)" work.
    pub fn parse_literal(
        field: &FieldSpec,
        group: &Group,
        s: &str,
    ) -> Result<Self, AlgebraError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(field, group));
        }
        let parts = split_top_level(s);
        if s.contains(':') {
            let mut terms = Vec::new();
            for part in parts {
                let (label, coeff) = part
                    .rsplit_once(':')
                    .ok_or_else(|| AlgebraError::Parse(s.to_string()))?;
                let idx = group
                    .element_by_label(label.trim())
                    .ok_or_else(|| AlgebraError::Parse(format!("unknown element {label:?}")))?;
                let rep: u64 = coeff
                    .trim()
                    .parse()
                    .map_err(|_| AlgebraError::Parse(s.to_string()))?;
                terms.push((idx, field.element(rep)?));
            }
            Self::from_support(field, group, &terms)
        } else {
            let reps: Vec<u64> = parts
                .iter()
                .map(|p| p.trim().parse().map_err(|_| AlgebraError::Parse(s.to_string())))
                .collect::<Result<_, _>>()?;
            if reps.len() != group.order() {
                return Err(AlgebraError::Parse(format!(
                    "dense literal has {} coefficients, group has order {}",
                    reps.len(),
                    group.order()
                )));
            }
            Self::from_coeff_reps(field, group, reps)
        }
    }
}

/// Split on commas outside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_literal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::new(2, 1, None).unwrap()
    }

    fn f3() -> FieldSpec {
        FieldSpec::new(3, 1, None).unwrap()
    }

    fn s3() -> Group {
        Group::from_descriptor("S3").unwrap()
    }

    fn s3_cycle_sum() -> AlgebraElement {
        let g = s3();
        AlgebraElement::parse_literal(&f2(), &g, "e:1,(123):1,(132):1").unwrap()
    }

    #[test]
    fn from_support_sums_duplicates() {
        let g = s3();
        let f = f2();
        let one = f.one();
        let z = AlgebraElement::from_support(&f, &g, &[(1, one.clone()), (1, one)]).unwrap();
        assert!(z.is_zero());
        let empty = AlgebraElement::from_support(&f, &g, &[]).unwrap();
        assert!(empty.is_zero());
    }

    #[test]
    fn s3_cycle_sum_is_symmetric_idempotent_and_central() {
        let z = s3_cycle_sum();
        assert_eq!(z.weight(), 3);
        assert!(z.is_symmetric_idempotent());
        assert!(z.is_central());
        assert_eq!(z.adjoint(), z);
        assert_eq!(z.mul(&z).unwrap(), z);
        // 1 - z = (123)+(132) over F2
        let omz = z.one_minus();
        assert_eq!(omz.to_literal(), "(123):1,(132):1");
        // disjoint supports
        assert!(z.inner_product(&omz).unwrap().is_zero());
        assert!(omz.is_symmetric_idempotent());
        assert!(z.mul(&omz).unwrap().is_zero());
    }

    #[test]
    fn c8_even_residue_sum_squares_to_zero() {
        let g = Group::from_descriptor("C8").unwrap();
        let z = AlgebraElement::parse_literal(&f2(), &g, "0:1,2:1,4:1,6:1").unwrap();
        assert!(z.mul(&z).unwrap().is_zero());
        assert!(!z.is_symmetric_idempotent());
        assert!(z.is_self_adjoint_element());
        // all higher powers vanish too
        assert!(z.power(2).is_zero());
        assert!(z.power(5).is_zero());
    }

    #[test]
    fn a4_klein_four_sum_over_gf3() {
        let g = Group::from_descriptor("A4").unwrap();
        let f = f3();
        let z = AlgebraElement::parse_literal(
            &f,
            &g,
            "e:1,(12)(34):1,(13)(24):1,(14)(23):1",
        )
        .unwrap();
        assert!(z.is_symmetric_idempotent());
        assert!(z.is_central());
        // <z, z> = 4 = 1 in GF(3)
        assert_eq!(z.inner_product(&z).unwrap().rep(), 1);
    }

    #[test]
    fn mul_by_identity_and_zero() {
        let g = s3();
        let f = f2();
        let z = s3_cycle_sum();
        let one = AlgebraElement::one(&f, &g);
        assert_eq!(z.mul(&one).unwrap(), z);
        assert_eq!(one.mul(&z).unwrap(), z);
        let zero = AlgebraElement::zero(&f, &g);
        assert!(z.mul(&zero).unwrap().is_zero());
        assert_eq!(z.add(&zero).unwrap(), z);
        // char 2: a + a = 0
        assert!(z.add(&z).unwrap().is_zero());
    }

    #[test]
    fn adjoint_is_involution_and_antihomomorphism() {
        let g = s3();
        let f = f3();
        // exhaustive over a modest slice: all elements with support in the
        // first three indices
        let mut elems = Vec::new();
        for a in 0..3u64 {
            for b in 0..3u64 {
                for c in 0..3u64 {
                    elems.push(
                        AlgebraElement::from_coeff_reps(&f, &g, vec![a, b, c, 0, 0, 0]).unwrap(),
                    );
                }
            }
        }
        for a in &elems {
            assert_eq!(a.adjoint().adjoint(), *a);
            for b in &elems {
                let lhs = a.mul(b).unwrap().adjoint();
                let rhs = b.adjoint().mul(&a.adjoint()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn non_central_element() {
        let g = s3();
        let f = f2();
        let t = AlgebraElement::parse_literal(&f, &g, "(12):1").unwrap();
        assert!(!t.is_central());
        // any element of a commutative algebra is central
        let c8 = Group::from_descriptor("C8").unwrap();
        let a = AlgebraElement::parse_literal(&f, &c8, "1:1,3:1").unwrap();
        assert!(a.is_central());
    }

    #[test]
    fn subgroup_sum_reproduces_cycle_sum() {
        let g = s3();
        let f = f2();
        let a3 = g.subgroup_generated(&[g.element_by_label("(123)").unwrap()]).unwrap();
        let z = AlgebraElement::subgroup_sum(&f, &a3, &f.one()).unwrap();
        assert_eq!(z, s3_cycle_sum());
        assert!(z.is_self_adjoint_element());
        // trivial subgroup with scale 1 gives the identity of KG
        let triv = g.subgroup_generated(&[]).unwrap();
        let one = AlgebraElement::subgroup_sum(&f, &triv, &f.one()).unwrap();
        assert_eq!(one, AlgebraElement::one(&f, &g));
        assert!(matches!(
            AlgebraElement::subgroup_sum(&f, &a3, &f.zero()),
            Err(AlgebraError::ZeroScale)
        ));
    }

    #[test]
    fn subgroup_sum_idempotent_iff_order_matches() {
        // lambda * |H| = 1 in K decides idempotency of lambda * sum(H)
        let g = s3();
        let f = f3();
        let t = g.subgroup_generated(&[g.element_by_label("(12)").unwrap()]).unwrap();
        // |H| = 2, lambda = 2: 2*2 = 4 = 1 in GF(3) -> idempotent
        let z2 = AlgebraElement::subgroup_sum(&f, &t, &f.element(2).unwrap()).unwrap();
        assert!(z2.is_symmetric_idempotent());
        // lambda = 1: 1*2 = 2 != 1 -> not idempotent
        let z1 = AlgebraElement::subgroup_sum(&f, &t, &f.one()).unwrap();
        assert!(!z1.is_idempotent());
        // A3 over GF(3): |H| = 3 = 0, no lambda works and the sum squares to 0
        let a3 = g.subgroup_generated(&[g.element_by_label("(123)").unwrap()]).unwrap();
        let za = AlgebraElement::subgroup_sum(&f, &a3, &f.one()).unwrap();
        assert!(za.mul(&za).unwrap().is_zero());
    }

    #[test]
    fn scalar_stabilizer_examples() {
        let g = s3();
        let f = f2();
        let z = s3_cycle_sum();
        let s = z.scalar_stabilizer().unwrap();
        assert_eq!(s.member_labels(), vec!["()", "(123)", "(132)"]);
        // S1 for 1-z is trivial
        let s1 = z.one_minus().scalar_stabilizer().unwrap();
        assert_eq!(s1.order(), 1);
        // z = identity of KG: only the group identity stabilizes
        let one = AlgebraElement::one(&f, &g);
        assert_eq!(one.scalar_stabilizer().unwrap().order(), 1);
        let zero = AlgebraElement::zero(&f, &g);
        assert!(matches!(zero.scalar_stabilizer(), Err(AlgebraError::ZeroElement)));
    }

    #[test]
    fn scalar_stabilizer_sees_nonunit_scalars() {
        // over GF(3) x C2: z = e + 2g has z*g = g + 2e = 2(e + 2g) = 2z
        let g = Group::from_descriptor("C2").unwrap();
        let f = f3();
        let z = AlgebraElement::from_coeff_reps(&f, &g, vec![1, 2]).unwrap();
        let s = z.scalar_stabilizer().unwrap();
        assert_eq!(s.order(), 2);
    }

    #[test]
    fn power_of_idempotent_is_itself() {
        let z = s3_cycle_sum();
        assert_eq!(z.power(1), z);
        for m in 2..10 {
            assert_eq!(z.power(m), z);
        }
    }

    #[test]
    fn literal_round_trip_and_errors() {
        let g = s3();
        let f = f2();
        let z = s3_cycle_sum();
        let back = AlgebraElement::parse_literal(&f, &g, &z.to_literal()).unwrap();
        assert_eq!(back, z);
        let dense = AlgebraElement::parse_literal(&f, &g, "1,0,0,1,1,0").unwrap();
        assert_eq!(dense, z);
        assert!(AlgebraElement::parse_literal(&f, &g, "e:1,(999):1").is_err());
        assert!(AlgebraElement::parse_literal(&f, &g, "1,0").is_err());
        // product labels contain commas; the splitter must honor parentheses
        let c33 = Group::from_descriptor("C3xC3").unwrap();
        let e = AlgebraElement::parse_literal(&f3(), &c33, "(0,0):1,(1,2):2").unwrap();
        assert_eq!(e.weight(), 2);
        assert_eq!(e.to_literal(), "(0,0):1,(1,2):2");
    }

    #[test]
    fn cross_algebra_operations_rejected() {
        let a = AlgebraElement::one(&f2(), &s3());
        let b = AlgebraElement::one(&f3(), &s3());
        assert!(matches!(a.add(&b), Err(AlgebraError::SpecMismatch)));
        let c = AlgebraElement::one(&f2(), &Group::from_descriptor("C8").unwrap());
        assert!(matches!(a.mul(&c), Err(AlgebraError::SpecMismatch)));
    }
}
