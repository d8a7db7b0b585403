//! Finite groups with a frozen element listing and Cayley-table arithmetic.
//!
//! Listings (index 0 is always the identity):
//!
//! * `Cyclic(n)`: 1, x, …, x^(n−1)
//! * `Dihedral(2n)`: 1, x, …, x^(n−1), y, xy, …, x^(n−1)y with yx = x⁻¹y
//! * `Quaternion8`: 1, x, x², x³, y, xy, x²y, x³y with y² = x², yx = x⁻¹y
//! * `C2xC2`: 1, a, b, ab
//! * `C4xC2`: 1, a, a², a³, b, ab, a²b, a³b
//!
//! Composite block layouts depend on these orderings entry by entry.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Cyclic(usize),
    /// Dihedral group of the given order (8 for D8).
    Dihedral(usize),
    Quaternion8,
    C2xC2,
    C4xC2,
    /// Cyclic group of even order listed even powers first, then odd:
    /// 1, x², x⁴, …, x, x³, ….
    ///
    /// The length-64 and length-32 reproduction layouts only arise from
    /// this ordering of C4 and C8.
    CyclicAlt(usize),
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Cyclic(n) => write!(f, "c{n}"),
            GroupKind::Dihedral(n) => write!(f, "d{n}"),
            GroupKind::Quaternion8 => f.write_str("q8"),
            GroupKind::C2xC2 => f.write_str("c2c2"),
            GroupKind::C4xC2 => f.write_str("c4c2"),
            GroupKind::CyclicAlt(n) => write!(f, "c{n}alt"),
        }
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let kind = match lower.as_str() {
            "q8" => GroupKind::Quaternion8,
            "c2c2" => GroupKind::C2xC2,
            "c4c2" => GroupKind::C4xC2,
            other => {
                let parse = |p: &str| other.strip_prefix(p).and_then(|n| n.parse::<usize>().ok());
                let alt = other
                    .strip_suffix("alt")
                    .and_then(|o| o.strip_prefix('c'))
                    .and_then(|n| n.parse::<usize>().ok());
                if let Some(n) = alt {
                    GroupKind::CyclicAlt(n)
                } else if let Some(n) = parse("c") {
                    GroupKind::Cyclic(n)
                } else if let Some(n) = parse("d") {
                    GroupKind::Dihedral(n)
                } else {
                    return Err(Error::UnknownGroup(s.to_string()));
                }
            }
        };
        Ok(kind)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    cayley: Vec<usize>,
    inv: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

fn power_label(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

fn word_label(parts: &[String]) -> String {
    let s: String = parts.concat();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

impl FiniteGroup {
    pub fn new(kind: &GroupKind) -> Result<FiniteGroup> {
        match *kind {
            GroupKind::Cyclic(n) => {
                if n == 0 || n > 64 {
                    return Err(Error::InvalidGroup(format!("cyclic order {n}")));
                }
                let labels = (0..n).map(|i| word_label(&[power_label("x", i)])).collect();
                Self::from_rule(kind.to_string(), labels, |a, b| (a + b) % n)
            }
            GroupKind::Dihedral(order) => {
                if order < 4 || order % 2 != 0 || order > 64 {
                    return Err(Error::InvalidGroup(format!("dihedral order {order}")));
                }
                let n = order / 2;
                let labels = (0..order)
                    .map(|i| word_label(&[power_label("x", i % n), power_label("y", i / n)]))
                    .collect();
                // x^a y^b · x^c y^d = x^(a + (-1)^b c) y^(b+d)
                Self::from_rule(kind.to_string(), labels, |i, j| {
                    let (a, b, c, d) = (i % n, i / n, j % n, j / n);
                    let c = if b == 1 { (n - c) % n } else { c };
                    (a + c) % n + n * ((b + d) % 2)
                })
            }
            GroupKind::Quaternion8 => {
                let labels = (0..8)
                    .map(|i| word_label(&[power_label("x", i % 4), power_label("y", i / 4)]))
                    .collect();
                Self::from_rule(kind.to_string(), labels, |i, j| {
                    let (a, b, c, d) = (i % 4, i / 4, j % 4, j / 4);
                    let c = if b == 1 { (4 - c) % 4 } else { c };
                    let extra = if b == 1 && d == 1 { 2 } else { 0 };
                    (a + c + extra) % 4 + 4 * ((b + d) % 2)
                })
            }
            GroupKind::C2xC2 => {
                let labels = ["1", "a", "b", "ab"].map(String::from).to_vec();
                Self::from_rule(kind.to_string(), labels, |i, j| i ^ j)
            }
            GroupKind::C4xC2 => {
                let labels = (0..8)
                    .map(|i| word_label(&[power_label("a", i % 4), power_label("b", i / 4)]))
                    .collect();
                Self::from_rule(kind.to_string(), labels, |i, j| {
                    (i % 4 + j % 4) % 4 + 4 * ((i / 4 + j / 4) % 2)
                })
            }
            GroupKind::CyclicAlt(n) => {
                if n == 0 || n % 2 == 1 {
                    return Err(Error::InvalidGroup(format!("c{n}alt needs an even order")));
                }
                let half = n / 2;
                let exp = |p: usize| if p < half { 2 * p } else { 2 * (p - half) + 1 };
                let pos = |e: usize| if e.is_multiple_of(2) { e / 2 } else { half + e / 2 };
                let labels = (0..n).map(|p| word_label(&[power_label("x", exp(p))])).collect();
                Self::from_rule(kind.to_string(), labels, |i, j| pos((exp(i) + exp(j)) % n))
            }
        }
    }

    pub fn shared(kind: &GroupKind) -> Result<Arc<FiniteGroup>> {
        FiniteGroup::new(kind).map(Arc::new)
    }

    fn from_rule(
        name: String,
        labels: Vec<String>,
        rule: impl Fn(usize, usize) -> usize,
    ) -> Result<FiniteGroup> {
        let n = labels.len();
        let mut cayley = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                cayley.push(rule(i, j));
            }
        }
        Self::from_table(name, labels, cayley)
    }

    /// Builds a group from an explicit row-major Cayley table.
    ///
    /// The table must be a Latin square with identity at index 0 and be
    /// associative.
    pub fn from_table(name: String, labels: Vec<String>, cayley: Vec<usize>) -> Result<FiniteGroup> {
        let n = labels.len();
        if n == 0 || cayley.len() != n * n {
            return Err(Error::InvalidGroup(format!(
                "table of size {} for {n} labels",
                cayley.len()
            )));
        }
        if cayley.iter().any(|&c| c >= n) {
            return Err(Error::InvalidGroup("entry out of range".into()));
        }
        for i in 0..n {
            if cayley[i] != i || cayley[i * n] != i {
                return Err(Error::InvalidGroup("index 0 is not the identity".into()));
            }
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                row[cayley[i * n + j]] = true;
                col[cayley[j * n + i]] = true;
            }
            if row.contains(&false) || col.contains(&false) {
                return Err(Error::InvalidGroup("not a Latin square".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = cayley[a * n + b];
                for c in 0..n {
                    if cayley[ab * n + c] != cayley[a * n + cayley[b * n + c]] {
                        return Err(Error::InvalidGroup("not associative".into()));
                    }
                }
            }
        }
        let inv = (0..n)
            .map(|i| (0..n).find(|&j| cayley[i * n + j] == 0).expect("latin square"))
            .collect();
        Ok(FiniteGroup {
            name,
            labels,
            cayley,
            inv,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.cayley[i * self.order() + j]
    }

    #[inline]
    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    /// Index of `g_i⁻¹ g_j`.
    #[inline]
    pub fn left_quotient(&self, i: usize, j: usize) -> usize {
        self.mul(self.inv[i], j)
    }

    pub fn checked_mul(&self, i: usize, j: usize) -> Result<usize> {
        let n = self.order();
        for k in [i, j] {
            if k >= n {
                return Err(Error::OutOfRange { index: k, size: n });
            }
        }
        Ok(self.mul(i, j))
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// π_h with π_h(k) = index(h·g_k).
    pub fn left_translation(&self, h: usize) -> Result<Vec<usize>> {
        let n = self.order();
        if h >= n {
            return Err(Error::OutOfRange { index: h, size: n });
        }
        Ok((0..n).map(|k| self.mul(h, k)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_kinds() -> Vec<GroupKind> {
        vec![
            GroupKind::Cyclic(2),
            GroupKind::Cyclic(3),
            GroupKind::Cyclic(4),
            GroupKind::Cyclic(8),
            GroupKind::Cyclic(16),
            GroupKind::Dihedral(8),
            GroupKind::Dihedral(16),
            GroupKind::Quaternion8,
            GroupKind::C2xC2,
            GroupKind::C4xC2,
            GroupKind::CyclicAlt(4),
            GroupKind::CyclicAlt(8),
        ]
    }

    #[test]
    fn constructors_satisfy_group_axioms() {
        // from_table re-validates every constructor
        for kind in all_kinds() {
            let g = FiniteGroup::new(&kind).unwrap();
            for i in 0..g.order() {
                assert_eq!(g.inv(g.inv(i)), i);
                assert_eq!(g.mul(i, g.inv(i)), 0);
            }
            assert_eq!(g.label(0), "1");
        }
    }

    #[test]
    fn from_table_rejects_non_groups() {
        let labels: Vec<String> = (0..3).map(|i| i.to_string()).collect();
        let not_latin = vec![0, 1, 2, 1, 1, 0, 2, 0, 1];
        assert!(FiniteGroup::from_table("bad".into(), labels.clone(), not_latin).is_err());
        assert!(FiniteGroup::from_table("bad".into(), labels, vec![0; 4]).is_err());
        // Latin square with identity but not associative (order 5 loop)
        let loop5 = vec![
            0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0,
        ];
        let labels: Vec<String> = (0..5).map(|i| i.to_string()).collect();
        assert!(FiniteGroup::from_table("loop".into(), labels, loop5).is_err());
    }

    #[test]
    fn dihedral_examples() {
        let d8 = FiniteGroup::new(&GroupKind::Dihedral(8)).unwrap();
        assert_eq!(d8.labels(), ["1", "x", "x^2", "x^3", "y", "xy", "x^2y", "x^3y"]);
        assert_eq!(d8.mul(5, 1), 4); // xy · x = y
        assert_eq!(d8.mul(2, 2), 0);
        assert_eq!(d8.mul(4, 4), 0);
    }

    #[test]
    fn cyclic_and_quaternion_examples() {
        let c4 = FiniteGroup::new(&GroupKind::Cyclic(4)).unwrap();
        assert_eq!(c4.inv(1), 3);
        let q8 = FiniteGroup::new(&GroupKind::Quaternion8).unwrap();
        assert_eq!(q8.mul(5, 5), 2); // (xy)² = x²
        assert_eq!(q8.mul(4, 4), 2); // y² = x²
        assert_eq!(q8.inv(4), 6); // y⁻¹ = x²y
    }

    #[test]
    fn left_translation_examples() {
        let c4 = FiniteGroup::new(&GroupKind::Cyclic(4)).unwrap();
        assert_eq!(c4.left_translation(0).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(c4.left_translation(1).unwrap(), vec![1, 2, 3, 0]);
        let d8 = FiniteGroup::new(&GroupKind::Dihedral(8)).unwrap();
        let pi = d8.left_translation(4).unwrap();
        assert!(pi[..4].iter().all(|&k| k >= 4));
        assert!(pi[4..].iter().all(|&k| k < 4));
        assert!(d8.left_translation(8).is_err());
        assert!(d8.checked_mul(0, 9).is_err());
    }

    #[test]
    fn left_translation_is_an_action() {
        for kind in all_kinds() {
            let g = FiniteGroup::new(&kind).unwrap();
            for h1 in 0..g.order() {
                let p1 = g.left_translation(h1).unwrap();
                for h2 in 0..g.order() {
                    let p2 = g.left_translation(h2).unwrap();
                    let p12 = g.left_translation(g.mul(h1, h2)).unwrap();
                    let composed: Vec<usize> = (0..g.order()).map(|k| p1[p2[k]]).collect();
                    assert_eq!(p12, composed);
                }
            }
        }
    }

    #[test]
    fn alternate_c4_listing() {
        let g = FiniteGroup::new(&GroupKind::CyclicAlt(4)).unwrap();
        assert_eq!(g.labels(), ["1", "x^2", "x", "x^3"]);
        assert_eq!(g.mul(2, 2), 1);
        assert_eq!(g.mul(2, 3), 0);
        let g = FiniteGroup::new(&GroupKind::CyclicAlt(8)).unwrap();
        assert_eq!(g.labels(), ["1", "x^2", "x^4", "x^6", "x", "x^3", "x^5", "x^7"]);
        assert_eq!(g.mul(4, 7), 0);
        assert_eq!("c8alt".parse::<GroupKind>().unwrap(), GroupKind::CyclicAlt(8));
        assert!(FiniteGroup::new(&GroupKind::CyclicAlt(5)).is_err());
    }

    #[test]
    fn parse_kinds() {
        assert_eq!("d16".parse::<GroupKind>().unwrap(), GroupKind::Dihedral(16));
        assert_eq!("c8".parse::<GroupKind>().unwrap(), GroupKind::Cyclic(8));
        assert_eq!("q8".parse::<GroupKind>().unwrap(), GroupKind::Quaternion8);
        assert!("s3".parse::<GroupKind>().is_err());
        assert!(FiniteGroup::new(&GroupKind::Dihedral(7)).is_err());
    }
}
