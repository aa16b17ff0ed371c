//! Builtin group families, descriptor parsing, and Cayley-table ingestion.
//!
//! Element orderings are deterministic: permutation groups are sorted
//! lexicographically on image tuples (labels in cycle notation), cyclic
//! groups use residue order, dihedral groups list rotations r^0..r^(n-1)
//! then reflections s·r^0..s·r^(n-1), and direct products use
//! lexicographic pairs of the factor orderings.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Deserialize;

use super::{Group, GroupError, MAX_GROUP_ORDER};

/// Permutation-family size cap: tables are dense, S8 would already need a
/// 40320² table.
const MAX_PERMUTATION_POINTS: u32 = 7;

/// A parsed group descriptor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupDescriptor {
    Cyclic(u32),
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    DirectProduct(Box<GroupDescriptor>, Box<GroupDescriptor>),
    /// Cayley-table JSON on disk, with an optional display name.
    File { name: Option<String>, path: PathBuf },
}

impl FromStr for GroupDescriptor {
    type Err = GroupError;

    /// Grammar: factors joined by `x`; a factor is `C<n>`/`Z<n>`, `D<n>`,
    /// `S<n>`, `A<n>`, `file:<path>`, or `<name>-file:<path>`. A file factor
    /// consumes the rest of the string (paths may contain `x`), so it must
    /// come last in a product.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        fn parse_leaf(tok: &str, whole: &str) -> Result<GroupDescriptor, GroupError> {
            if let Some(path) = tok.strip_prefix("file:") {
                return Ok(GroupDescriptor::File { name: None, path: PathBuf::from(path) });
            }
            if let Some((name, path)) = tok.split_once("-file:") {
                return Ok(GroupDescriptor::File {
                    name: Some(name.to_string()),
                    path: PathBuf::from(path),
                });
            }
            if tok.is_empty() || !tok.is_char_boundary(1) {
                return Err(GroupError::Parse(whole.to_string()));
            }
            let (family, num) = tok.split_at(1);
            let n: u32 = num.parse().map_err(|_| GroupError::Parse(whole.to_string()))?;
            match family {
                "C" | "Z" => Ok(GroupDescriptor::Cyclic(n)),
                "D" => Ok(GroupDescriptor::Dihedral(n)),
                "S" => Ok(GroupDescriptor::Symmetric(n)),
                "A" => Ok(GroupDescriptor::Alternating(n)),
                _ => Err(GroupError::UnsupportedFamily(tok.to_string())),
            }
        }

        let s = s.trim();
        if s.is_empty() {
            return Err(GroupError::Parse(s.to_string()));
        }
        // split on 'x' until a factor containing "file:" swallows the tail
        let mut factors: Vec<&str> = Vec::new();
        let mut rest = s;
        loop {
            match rest.find('x') {
                Some(i) if !rest[..i].contains("file:") => {
                    factors.push(&rest[..i]);
                    rest = &rest[i + 1..];
                }
                _ => {
                    factors.push(rest);
                    break;
                }
            }
        }
        let mut iter = factors.into_iter();
        let mut desc = parse_leaf(iter.next().unwrap(), s)?;
        for tok in iter {
            desc = GroupDescriptor::DirectProduct(Box::new(desc), Box::new(parse_leaf(tok, s)?));
        }
        Ok(desc)
    }
}

impl std::fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupDescriptor::Cyclic(n) => write!(f, "C{n}"),
            GroupDescriptor::Dihedral(n) => write!(f, "D{n}"),
            GroupDescriptor::Symmetric(n) => write!(f, "S{n}"),
            GroupDescriptor::Alternating(n) => write!(f, "A{n}"),
            GroupDescriptor::DirectProduct(a, b) => write!(f, "{a}x{b}"),
            GroupDescriptor::File { name: Some(name), path } => {
                write!(f, "{name}-file:{}", path.display())
            }
            GroupDescriptor::File { name: None, path } => write!(f, "file:{}", path.display()),
        }
    }
}

pub(super) fn build(desc: &GroupDescriptor) -> Result<Group, GroupError> {
    match desc {
        GroupDescriptor::Cyclic(n) => cyclic(*n),
        GroupDescriptor::Dihedral(n) => dihedral(*n),
        GroupDescriptor::Symmetric(n) => permutation_group(*n, false),
        GroupDescriptor::Alternating(n) => permutation_group(*n, true),
        GroupDescriptor::DirectProduct(a, b) => direct_product(&build(a)?, &build(b)?),
        GroupDescriptor::File { name, path } => {
            let g = load_cayley_table_json(path)?;
            match name {
                Some(n) => Ok(rename(g, n)),
                None => Ok(g),
            }
        }
    }
}

fn rename(g: Group, name: &str) -> Group {
    // rebuild with the display name; table already validated
    let n = g.order();
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| g.mul(a, b)).collect()).collect();
    Group::from_cayley_table_named(&table, Some(g.labels().to_vec()), name)
        .expect("renaming a validated group cannot fail")
}

fn check_order_cap(order: usize, name: &str) -> Result<(), GroupError> {
    if order == 0 {
        return Err(GroupError::UnsupportedFamily(name.to_string()));
    }
    if order > MAX_GROUP_ORDER {
        return Err(GroupError::SizeCap { order, cap: MAX_GROUP_ORDER });
    }
    Ok(())
}

fn cyclic(n: u32) -> Result<Group, GroupError> {
    let name = format!("C{n}");
    let n = n as usize;
    check_order_cap(n, &name)?;
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    Group::from_cayley_table_named(&table, Some(labels), &name)
}

fn dihedral(n: u32) -> Result<Group, GroupError> {
    let name = format!("D{n}");
    let n = n as usize;
    check_order_cap(2 * n.max(1), &name)?;
    if n == 0 {
        return Err(GroupError::UnsupportedFamily(name));
    }
    // element eps*n + k encodes s^eps r^k; s r^k s = r^-k
    let code = |eps: usize, k: usize| eps * n + k;
    let mut table = vec![vec![0usize; 2 * n]; 2 * n];
    for e1 in 0..2 {
        for k1 in 0..n {
            for e2 in 0..2 {
                for k2 in 0..n {
                    let (e, k) = if e2 == 0 {
                        (e1, (k1 + k2) % n)
                    } else {
                        (e1 ^ 1, (n + k2 - k1) % n)
                    };
                    table[code(e1, k1)][code(e2, k2)] = code(e, k);
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(2 * n);
    for eps in 0..2 {
        for k in 0..n {
            labels.push(match (eps, k) {
                (0, 0) => "e".to_string(),
                (0, k) => format!("r{k}"),
                (_, 0) => "s".to_string(),
                (_, k) => format!("sr{k}"),
            });
        }
    }
    Group::from_cayley_table_named(&table, Some(labels), &name)
}

fn permutations(points: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..points {
        let mut next = Vec::new();
        for p in out {
            for v in 0..points as u8 {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}

fn parity(p: &[u8]) -> u8 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2
}

fn cycle_notation(p: &[u8]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut i = start;
        loop {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i] as usize;
            if i == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn permutation_group(points: u32, even_only: bool) -> Result<Group, GroupError> {
    let name = format!("{}{points}", if even_only { "A" } else { "S" });
    if points == 0 || points > MAX_PERMUTATION_POINTS {
        let order: usize = (1..=points as usize).product::<usize>().max(1);
        return Err(GroupError::SizeCap { order, cap: MAX_GROUP_ORDER });
    }
    let perms: Vec<Vec<u8>> = permutations(points as usize)
        .into_iter()
        .filter(|p| !even_only || parity(p) == 0)
        .collect();
    let n = perms.len();
    check_order_cap(n, &name)?;
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut table = vec![vec![0usize; n]; n];
    let mut buf = vec![0u8; points as usize];
    for (i, a) in perms.iter().enumerate() {
        for (j, b) in perms.iter().enumerate() {
            // (a∘b)(x) = a(b(x))
            for (x, slot) in buf.iter_mut().enumerate() {
                *slot = a[b[x] as usize];
            }
            table[i][j] = index[buf.as_slice()];
        }
    }
    let labels: Vec<String> = perms.iter().map(|p| cycle_notation(p)).collect();
    Group::from_cayley_table_named(&table, Some(labels), &name)
}

fn direct_product(a: &Group, b: &Group) -> Result<Group, GroupError> {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let name = format!("{}x{}", a.name(), b.name());
    check_order_cap(n, &name)?;
    let code = |x: usize, y: usize| x * nb + y;
    let mut table = vec![vec![0usize; n]; n];
    for x1 in 0..na {
        for y1 in 0..nb {
            for x2 in 0..na {
                for y2 in 0..nb {
                    table[code(x1, y1)][code(x2, y2)] = code(a.mul(x1, x2), b.mul(y1, y2));
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for x in 0..na {
        for y in 0..nb {
            labels.push(format!("({},{})", a.label(x), b.label(y)));
        }
    }
    Group::from_cayley_table_named(&table, Some(labels), &name)
}

#[derive(Deserialize)]
struct CayleyFile {
    order: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

/// Load and validate `{ "order": n, "identity": i, "table": [[...]], "labels": [...] }`.
pub fn load_cayley_table_json(path: &Path) -> Result<Group, GroupError> {
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    let file: CayleyFile = serde_json::from_str(&text).map_err(|e| GroupError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    if file.table.len() != file.order {
        return Err(GroupError::NotSquare {
            row: 0,
            len: file.table.len(),
            expected: file.order,
        });
    }
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "custom".to_string());
    let g = Group::from_cayley_table_named(&file.table, file.labels, &name)?;
    if g.identity() != file.identity {
        return Err(GroupError::IdentityMismatch {
            declared: file.identity,
            computed: g.identity(),
        });
    }
    Ok(g)
}
