//! Finite groups as fully materialized multiplication tables.
//!
//! A [`Group`] owns an n×n index table validated at construction: Latin
//! square, two-sided identity, inverses, and associativity (checked with
//! Light's test against a greedy generating set, which covers all triples).
//! Everything downstream — subgroup closure, normality, conjugacy classes,
//! Sylow subgroups, full subgroup enumeration — works directly on the table.

mod builtin;

pub use builtin::{load_cayley_table_json, GroupDescriptor};

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest order a constructed group may have. Tables are dense (order²
/// entries), so this bounds memory; it comfortably covers S7 and the
/// order-2079 ingestion case.
pub const MAX_GROUP_ORDER: usize = 8192;

/// Default cap for complete subgroup enumeration (exponential worst case).
pub const SUBGROUP_ENUM_CAP: usize = 60;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("row or column {0} of the table is not a permutation")]
    NotLatinSquare(usize),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("operation is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("group order {order} exceeds cap {cap}")]
    SizeCap { order: usize, cap: usize },
    #[error("unsupported group family: {0}")]
    UnsupportedFamily(String),
    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("labels length {got} does not match order {expected}")]
    LabelCount { got: usize, expected: usize },
    #[error("subgroup members are not closed under the group operation")]
    NotClosed,
    #[error("declared identity {declared} is not the identity (computed {computed})")]
    IdentityMismatch { declared: usize, computed: usize },
    #[error("cannot read group file {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("cannot parse group descriptor {0:?}")]
    Parse(String),
}

#[derive(Debug)]
struct GroupInner {
    order: usize,
    /// Row-major: mul[a * order + b] = a*b.
    mul: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    labels: Vec<String>,
    name: String,
}

/// A finite group. Cheap to clone (shared table).
#[derive(Debug, Clone)]
pub struct Group(Arc<GroupInner>);

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order
                && self.0.identity == other.0.identity
                && self.0.mul == other.0.mul)
    }
}
impl Eq for Group {}

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

impl Group {
    /// Validate and build a group from a Cayley table of element indices.
    pub fn from_cayley_table(
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Group, GroupError> {
        Self::from_cayley_table_named(table, labels, "custom")
    }

    pub(crate) fn from_cayley_table_named(
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
        name: &str,
    ) -> Result<Group, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NoIdentity);
        }
        if n > MAX_GROUP_ORDER {
            return Err(GroupError::SizeCap { order: n, cap: MAX_GROUP_ORDER });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare { row: i, len: row.len(), expected: n });
            }
            for &x in row {
                if x >= n {
                    return Err(GroupError::IndexOutOfRange { index: x, order: n });
                }
            }
        }
        let mut mul = Vec::with_capacity(n * n);
        for row in table {
            mul.extend(row.iter().map(|&x| x as u32));
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != n {
                    return Err(GroupError::LabelCount { got: l.len(), expected: n });
                }
                l
            }
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Self::validate_and_build(n, mul, labels, name.to_string(), None)
    }

    fn validate_and_build(
        n: usize,
        mul: Vec<u32>,
        labels: Vec<String>,
        name: String,
        declared_identity: Option<usize>,
    ) -> Result<Group, GroupError> {
        let at = |a: usize, b: usize| mul[a * n + b] as usize;

        // Latin square: every row and column is a permutation
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let x = at(a, b);
                if seen[x] {
                    return Err(GroupError::NotLatinSquare(a));
                }
                seen[x] = true;
            }
        }
        for b in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for a in 0..n {
                let x = at(a, b);
                if seen[x] {
                    return Err(GroupError::NotLatinSquare(b));
                }
                seen[x] = true;
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or(GroupError::NoIdentity)?;
        if let Some(decl) = declared_identity {
            if decl != identity {
                return Err(GroupError::IdentityMismatch { declared: decl, computed: identity });
            }
        }

        let mut inv = vec![u32::MAX; n];
        for g in 0..n {
            let h = (0..n)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or(GroupError::NoInverse(g))?;
            inv[g] = h as u32;
        }

        // Light's associativity test: pick a greedy generating set (under the
        // table's own closure), then a*(g*c) = (a*g)*c for generators g
        // implies associativity for all triples.
        let mut generated = vec![false; n];
        generated[identity] = true;
        let mut generators = Vec::new();
        let mut frontier = vec![identity];
        loop {
            while let Some(x) = frontier.pop() {
                for y in 0..n {
                    if generated[y] {
                        let (xy, yx) = (at(x, y), at(y, x));
                        if !generated[xy] {
                            generated[xy] = true;
                            frontier.push(xy);
                        }
                        if !generated[yx] {
                            generated[yx] = true;
                            frontier.push(yx);
                        }
                    }
                }
            }
            match generated.iter().position(|&g| !g) {
                Some(next) => {
                    generators.push(next);
                    generated[next] = true;
                    frontier.push(next);
                }
                None => break,
            }
        }
        for &g in &generators {
            for a in 0..n {
                let ag = at(a, g);
                for c in 0..n {
                    if at(a, at(g, c)) != at(ag, c) {
                        return Err(GroupError::NotAssociative { a, b: g, c });
                    }
                }
            }
        }

        Ok(Group(Arc::new(GroupInner { order: n, mul, inv, identity, labels, name })))
    }

    /// Build one of the supported families (or load a table file).
    pub fn builtin(descriptor: &GroupDescriptor) -> Result<Group, GroupError> {
        builtin::build(descriptor)
    }

    /// Parse a descriptor string ("S3", "C8", "D4xC3", "file:g.json", ...)
    /// and build the group.
    pub fn from_descriptor(s: &str) -> Result<Group, GroupError> {
        Self::builtin(&s.parse()?)
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        self.0.identity
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mul[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.0.inv[g] as usize
    }

    pub fn label(&self, g: usize) -> &str {
        &self.0.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    /// Index of the element with the given label; "e" always names the identity.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        if label == "e" {
            return Some(self.0.identity);
        }
        self.0.labels.iter().position(|l| l == label)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.0.order;
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Least m >= 1 with g^m = identity.
    pub fn element_order(&self, g: usize) -> usize {
        let mut m = 1;
        let mut x = g;
        while x != self.0.identity {
            x = self.mul(x, g);
            m += 1;
        }
        m
    }

    pub fn primes_dividing_order(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut m = self.0.order as u64;
        let mut d = 2;
        while d * d <= m {
            if m.is_multiple_of(d) {
                out.push(d);
                while m.is_multiple_of(d) {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            out.push(m);
        }
        out
    }

    /// p^m with p^m | |G| and p^(m+1) ∤ |G|.
    pub fn sylow_order(&self, p: u64) -> usize {
        let mut pm = 1usize;
        while self.0.order.is_multiple_of(pm * p as usize) {
            pm *= p as usize;
        }
        pm
    }

    /// Smallest subgroup containing `seeds`, by closure iteration.
    pub fn subgroup_generated(&self, seeds: &[usize]) -> Result<SubgroupView, GroupError> {
        let n = self.0.order;
        for &s in seeds {
            if s >= n {
                return Err(GroupError::IndexOutOfRange { index: s, order: n });
            }
        }
        let members = self.close(seeds);
        Ok(SubgroupView { parent: self.clone(), members })
    }

    /// Closure of a seed set under multiplication (sorted member list).
    fn close(&self, seeds: &[usize]) -> Vec<usize> {
        let n = self.0.order;
        let mut in_set = vec![false; n];
        in_set[self.0.identity] = true;
        let mut members = vec![self.0.identity];
        let mut frontier: Vec<usize> = Vec::new();
        for &s in seeds {
            if !in_set[s] {
                in_set[s] = true;
                members.push(s);
                frontier.push(s);
            }
        }
        while let Some(x) = frontier.pop() {
            // grow by products with everything already present
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                for z in [self.mul(x, y), self.mul(y, x)] {
                    if !in_set[z] {
                        in_set[z] = true;
                        members.push(z);
                        frontier.push(z);
                    }
                }
                i += 1;
            }
        }
        members.sort_unstable();
        members
    }

    /// Non-identity elements whose order is a positive power of p.
    pub fn elements_of_p_power_order(&self, p: u64) -> Result<Vec<usize>, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let mut out = Vec::new();
        for g in 0..self.0.order {
            if g == self.0.identity {
                continue;
            }
            let mut m = self.element_order(g);
            while m.is_multiple_of(p as usize) {
                m /= p as usize;
            }
            if m == 1 {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Partition of the elements into conjugacy classes; each class sorted,
    /// classes ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.0.order;
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..n {
                let y = self.mul(self.mul(g, x), self.inv(g));
                if !assigned[y] {
                    assigned[y] = true;
                    class.push(y);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// All Sylow-p subgroups. If p does not divide |G| the trivial subgroup
    /// is the unique Sylow-p. Grows p-subgroups by adjoining p-power-order
    /// elements; the count is self-checked against the Sylow congruences.
    pub fn sylow_subgroups(&self, p: u64) -> Result<Vec<SubgroupView>, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        let pm = self.sylow_order(p);
        if pm == 1 {
            return Ok(vec![SubgroupView {
                parent: self.clone(),
                members: vec![self.0.identity],
            }]);
        }
        let candidates = self.elements_of_p_power_order(p)?;
        let is_p_power = |m: usize| {
            let mut m = m;
            while m.is_multiple_of(p as usize) {
                m /= p as usize;
            }
            m == 1
        };

        let mut complete: HashSet<Vec<usize>> = HashSet::new();
        let mut frontier: HashSet<Vec<usize>> = HashSet::new();
        frontier.insert(vec![self.0.identity]);
        while !frontier.is_empty() {
            let mut next: HashSet<Vec<usize>> = HashSet::new();
            for sub in frontier {
                for &x in &candidates {
                    if sub.binary_search(&x).is_ok() {
                        continue;
                    }
                    let mut seeds = sub.clone();
                    seeds.push(x);
                    let grown = self.close(&seeds);
                    if is_p_power(grown.len()) {
                        if grown.len() == pm {
                            complete.insert(grown);
                        } else {
                            next.insert(grown);
                        }
                    }
                }
            }
            frontier = next;
        }

        let mut result: Vec<Vec<usize>> = complete.into_iter().collect();
        result.sort();
        let count = result.len();
        assert!(
            count % p as usize == 1 && self.0.order.is_multiple_of(count),
            "Sylow self-check failed for p={p}: count {count} on group of order {}",
            self.0.order
        );
        Ok(result
            .into_iter()
            .map(|members| SubgroupView { parent: self.clone(), members })
            .collect())
    }

    /// Complete subgroup enumeration, optionally filtered by order. Errors
    /// with SizeCap above `SUBGROUP_ENUM_CAP`; use
    /// [`Group::all_subgroups_with_cap`] to override.
    pub fn all_subgroups(&self, order_filter: Option<usize>) -> Result<Vec<SubgroupView>, GroupError> {
        self.all_subgroups_with_cap(order_filter, SUBGROUP_ENUM_CAP)
    }

    pub fn all_subgroups_with_cap(
        &self,
        order_filter: Option<usize>,
        cap: usize,
    ) -> Result<Vec<SubgroupView>, GroupError> {
        let n = self.0.order;
        if n > cap {
            return Err(GroupError::SizeCap { order: n, cap });
        }
        let trivial = vec![self.0.identity];
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(trivial.clone());
        let mut frontier = vec![trivial];
        while let Some(sub) = frontier.pop() {
            for g in 0..n {
                if sub.binary_search(&g).is_ok() {
                    continue;
                }
                let mut seeds = sub.clone();
                seeds.push(g);
                let grown = self.close(&seeds);
                if !seen.contains(&grown) {
                    seen.insert(grown.clone());
                    frontier.push(grown);
                }
            }
        }
        let mut subs: Vec<Vec<usize>> = seen
            .into_iter()
            .filter(|s| order_filter.is_none_or(|k| s.len() == k))
            .collect();
        subs.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        Ok(subs
            .into_iter()
            .map(|members| SubgroupView { parent: self.clone(), members })
            .collect())
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.0.name, self.0.order)
    }
}

/// A validated subgroup: sorted member indices, closed under product and
/// inverse, containing the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupView {
    parent: Group,
    members: Vec<usize>,
}

impl SubgroupView {
    /// Validate a member set as a subgroup of `parent`.
    pub fn new(parent: &Group, members: &[usize]) -> Result<SubgroupView, GroupError> {
        let n = parent.order();
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &m in &sorted {
            if m >= n {
                return Err(GroupError::IndexOutOfRange { index: m, order: n });
            }
        }
        if sorted.binary_search(&parent.identity()).is_err() {
            return Err(GroupError::NotClosed);
        }
        for &a in &sorted {
            if sorted.binary_search(&parent.inv(a)).is_err() {
                return Err(GroupError::NotClosed);
            }
            for &b in &sorted {
                if sorted.binary_search(&parent.mul(a, b)).is_err() {
                    return Err(GroupError::NotClosed);
                }
            }
        }
        Ok(SubgroupView { parent: parent.clone(), members: sorted })
    }

    pub fn parent(&self) -> &Group {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        (0..g.order()).all(|x| {
            let xi = g.inv(x);
            self.members.iter().all(|&m| self.contains(g.mul(g.mul(x, m), xi)))
        })
    }

    pub fn member_labels(&self) -> Vec<String> {
        self.members.iter().map(|&m| self.parent.label(m).to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Group {
        Group::from_descriptor("S3").unwrap()
    }

    fn a4() -> Group {
        Group::from_descriptor("A4").unwrap()
    }

    fn z8() -> Group {
        Group::from_descriptor("C8").unwrap()
    }

    #[test]
    fn trivial_and_z2_tables() {
        let t = Group::from_cayley_table(&[vec![0]], None).unwrap();
        assert_eq!(t.order(), 1);
        let z2 = Group::from_cayley_table(&[vec![0, 1], vec![1, 0]], None).unwrap();
        assert_eq!(z2.order(), 2);
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(matches!(
            Group::from_cayley_table(&[vec![0, 1], vec![1, 1]], None),
            Err(GroupError::NotLatinSquare(_))
        ));
        // Latin square without a two-sided identity: subtraction mod 3
        let t: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (3 + a - b) % 3).collect()).collect();
        assert!(matches!(Group::from_cayley_table(&t, None), Err(GroupError::NoIdentity)));
        // Latin square with identity that is not associative (order 5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(Group::from_cayley_table(&t, None), Err(GroupError::NotAssociative { .. })));
    }

    #[test]
    fn s3_structure() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.labels(), &["()", "(23)", "(12)", "(123)", "(132)", "(13)"]);
        assert_eq!(g.element_order(g.element_by_label("(123)").unwrap()), 3);
        assert_eq!(g.element_order(g.identity()), 1);
        let sizes: Vec<usize> = {
            let mut v: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
            v.sort_unstable();
            v
        };
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn subgroup_generated_examples() {
        let g = s3();
        let c = g.element_by_label("(123)").unwrap();
        let h = g.subgroup_generated(&[c]).unwrap();
        assert_eq!(h.member_labels(), vec!["()", "(123)", "(132)"]);
        assert_eq!(g.subgroup_generated(&[]).unwrap().members(), &[g.identity()]);
        assert!(matches!(
            g.subgroup_generated(&[99]),
            Err(GroupError::IndexOutOfRange { .. })
        ));

        let a = a4();
        let cycles: Vec<usize> = (0..12).filter(|&x| a.element_order(x) == 3).collect();
        assert_eq!(a.subgroup_generated(&cycles).unwrap().order(), 12);
    }

    #[test]
    fn normality() {
        let g = s3();
        let a3 = g.subgroup_generated(&[g.element_by_label("(123)").unwrap()]).unwrap();
        assert!(a3.is_normal());
        let t = g.subgroup_generated(&[g.element_by_label("(12)").unwrap()]).unwrap();
        assert!(!t.is_normal());
        let whole = g.subgroup_generated(&(0..6).collect::<Vec<_>>()).unwrap();
        assert!(whole.is_normal());
    }

    #[test]
    fn element_order_z8() {
        let g = z8();
        assert_eq!(g.element_order(2), 4);
        assert_eq!(g.element_order(1), 8);
    }

    #[test]
    fn sylow_s3() {
        let g = s3();
        let s3s = g.sylow_subgroups(3).unwrap();
        assert_eq!(s3s.len(), 1);
        assert_eq!(s3s[0].member_labels(), vec!["()", "(123)", "(132)"]);
        assert!(s3s[0].is_normal());
        let s2s = g.sylow_subgroups(2).unwrap();
        assert_eq!(s2s.len(), 3);
        assert!(s2s.iter().all(|h| h.order() == 2 && !h.is_normal()));
        // 5 does not divide 6: trivial subgroup is the unique Sylow-5
        let s5s = g.sylow_subgroups(5).unwrap();
        assert_eq!(s5s.len(), 1);
        assert_eq!(s5s[0].order(), 1);
        assert!(matches!(g.sylow_subgroups(4), Err(GroupError::NotPrime(4))));
    }

    #[test]
    fn sylow_a4_klein_four() {
        let a = a4();
        let s2s = a.sylow_subgroups(2).unwrap();
        assert_eq!(s2s.len(), 1);
        assert_eq!(s2s[0].order(), 4);
        assert!(s2s[0].is_normal());
        assert_eq!(a.sylow_subgroups(3).unwrap().len(), 4);
    }

    #[test]
    fn p_power_order_census() {
        let a = a4();
        let d2 = a.elements_of_p_power_order(2).unwrap();
        assert_eq!(d2.len(), 3);
        assert!(d2.iter().all(|&x| a.element_order(x) == 2));
        let g8 = z8();
        assert_eq!(g8.elements_of_p_power_order(2).unwrap().len(), 7);
        assert!(s3().elements_of_p_power_order(5).unwrap().is_empty());
        assert!(matches!(s3().elements_of_p_power_order(6), Err(GroupError::NotPrime(6))));
    }

    #[test]
    fn conjugacy_classes_a4() {
        let mut sizes: Vec<usize> = a4().conjugacy_classes().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 4, 4]);
        // abelian: all singletons
        assert!(z8().conjugacy_classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn conjugacy_class_sizes_partition_and_divide() {
        for name in ["S3", "A4", "D4", "C8", "C3xC3", "S4"] {
            let g = Group::from_descriptor(name).unwrap();
            let classes = g.conjugacy_classes();
            let total: usize = classes.iter().map(|c| c.len()).sum();
            assert_eq!(total, g.order(), "{name}");
            for c in &classes {
                assert_eq!(g.order() % c.len(), 0, "{name}: class size {}", c.len());
            }
            // identity is a singleton class
            assert!(classes.iter().any(|c| c == &vec![g.identity()]), "{name}");
        }
    }

    #[test]
    fn all_subgroups_counts() {
        assert_eq!(z8().all_subgroups(None).unwrap().len(), 4);
        assert_eq!(s3().all_subgroups(None).unwrap().len(), 6);
        let a = a4();
        assert_eq!(a.all_subgroups(None).unwrap().len(), 10);
        assert!(a.all_subgroups(Some(6)).unwrap().is_empty());
        // Lagrange: every subgroup order divides |G|
        for h in a.all_subgroups(None).unwrap() {
            assert_eq!(12 % h.order(), 0);
        }
    }

    #[test]
    fn subgroup_view_validation() {
        let g = s3();
        assert!(SubgroupView::new(&g, &[0, 3, 4]).is_ok());
        assert!(matches!(SubgroupView::new(&g, &[0, 3]), Err(GroupError::NotClosed)));
        assert!(matches!(SubgroupView::new(&g, &[3, 4]), Err(GroupError::NotClosed)));
    }

    #[test]
    fn sylow_congruences_hold_for_catalog() {
        for name in ["S3", "A4", "C8", "C4", "D4", "C3xC3"] {
            let g = Group::from_descriptor(name).unwrap();
            for p in g.primes_dividing_order() {
                let sylows = g.sylow_subgroups(p).unwrap();
                let count = sylows.len();
                assert_eq!(count % p as usize, 1, "{name} p={p}");
                assert_eq!(g.order() % count, 0, "{name} p={p}");
                // uniqueness <=> normality of each Sylow-p
                for h in &sylows {
                    assert_eq!(h.is_normal(), count == 1, "{name} p={p}");
                }
            }
        }
    }
}
