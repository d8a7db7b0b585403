//! Small commutative rings of characteristic 2, stored as explicit tables.
//!
//! Every supported ring is a GF(2)-algebra, so an element is encoded by its
//! coordinate vector over a fixed GF(2) basis and the element index *is* that
//! bitmask. Addition is therefore XOR, but the table is still materialised so
//! that the ring axioms can be checked exhaustively.
//!
//! | kind  | basis (bit 0 first)      | size |
//! |-------|--------------------------|------|
//! | `F2`  | 1                        | 2    |
//! | `F4`  | 1, w                     | 4    |
//! | `F2u` | 1, u                     | 4    |
//! | `F4u` | 1, w, u, wu              | 16   |
//! | `Rk`  | monomials u^S, S ⊆ {1..k} | 2^(2^k) |
//!
//! In `Rk` the monomial u^S lives at bit `S` (u1 is bit 0 of `S`), with
//! relations u_i² = 0 and commuting indeterminates.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Element index inside a [`Ring`].
pub type Elem = u8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    F2,
    F4,
    F2u,
    F4u,
    Rk(u8),
}

impl RingKind {
    /// GF(2)-dimension of the ring.
    pub fn dim(self) -> u32 {
        match self {
            RingKind::F2 => 1,
            RingKind::F4 | RingKind::F2u => 2,
            RingKind::F4u => 4,
            RingKind::Rk(k) => 1 << k,
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::F2 => f.write_str("f2"),
            RingKind::F4 => f.write_str("f4"),
            RingKind::F2u => f.write_str("f2u"),
            RingKind::F4u => f.write_str("f4u"),
            RingKind::Rk(k) => write!(f, "r{k}"),
        }
    }
}

impl FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f2" => Ok(RingKind::F2),
            "f4" => Ok(RingKind::F4),
            "f2u" | "f2+uf2" => Ok(RingKind::F2u),
            "f4u" | "f4+uf4" => Ok(RingKind::F4u),
            other => other
                .strip_prefix('r')
                .and_then(|k| k.parse::<u8>().ok())
                .map(RingKind::Rk)
                .ok_or_else(|| Error::UnsupportedRing(s.to_string())),
        }
    }
}

/// A finite commutative ring with unity given by addition and multiplication tables.
#[derive(Clone, PartialEq, Eq)]
pub struct Ring {
    kind: RingKind,
    size: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    units: Vec<bool>,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("kind", &self.kind)
            .field("size", &self.size)
            .finish()
    }
}

impl Ring {
    /// Builds the tables for `kind`. `Rk(k)` is limited to `1 <= k <= 3`.
    pub fn new(kind: RingKind) -> Result<Ring> {
        if let RingKind::Rk(k) = kind {
            if !(1..=3).contains(&k) {
                return Err(Error::UnsupportedRing(format!("r{k} (only k = 1..3)")));
            }
        }
        let size = 1usize << kind.dim();
        let mul_fn: Box<dyn Fn(usize, usize) -> usize> = match kind {
            RingKind::F2 => Box::new(|a, b| a & b),
            RingKind::F4 => Box::new(f4_mul),
            RingKind::F2u => Box::new(|a, b| {
                let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
                (a0 & b0) | (((a0 & b1) ^ (a1 & b0)) << 1)
            }),
            RingKind::F4u => Box::new(|a, b| {
                let (a0, a1, b0, b1) = (a & 3, a >> 2, b & 3, b >> 2);
                f4_mul(a0, b0) | ((f4_mul(a0, b1) ^ f4_mul(a1, b0)) << 2)
            }),
            RingKind::Rk(k) => {
                let monomials = 1usize << k;
                Box::new(move |a, b| {
                    let mut out = 0usize;
                    for s in (0..monomials).filter(|s| a >> s & 1 == 1) {
                        for t in (0..monomials).filter(|t| b >> t & 1 == 1) {
                            if s & t == 0 {
                                out ^= 1 << (s | t);
                            }
                        }
                    }
                    out
                })
            }
        };

        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                add[a * size + b] = (a ^ b) as Elem;
                mul[a * size + b] = mul_fn(a, b) as Elem;
            }
        }
        let neg = (0..size)
            .map(|a| {
                (0..size)
                    .find(|&b| add[a * size + b] == 0)
                    .expect("additive inverse") as Elem
            })
            .collect();
        let units = (0..size)
            .map(|a| (0..size).any(|w| mul[a * size + w] == 1))
            .collect();
        Ok(Ring {
            kind,
            size,
            add,
            mul,
            neg,
            units,
        })
    }

    pub fn shared(kind: RingKind) -> Result<Arc<Ring>> {
        Ring::new(kind).map(Arc::new)
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// GF(2)-dimension; `size == 2^dim`.
    pub fn dim(&self) -> u32 {
        self.kind.dim()
    }

    pub fn characteristic(&self) -> usize {
        let mut acc = self.one();
        for c in 1..=self.size {
            if acc == self.zero() {
                return c;
            }
            acc = self.add(acc, self.one());
        }
        unreachable!("additive order of one exceeds ring size")
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.size + b as usize]
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.units[a as usize]
    }

    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        self.elements().find(|&w| self.mul(a, w) == self.one())
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.size).map(|e| e as Elem)
    }

    /// Elements with a single basis bit set.
    pub fn gf2_basis(&self) -> impl Iterator<Item = Elem> {
        (0..self.dim()).map(|i| 1 << i)
    }

    /// For the chain rings F2u and F4u: GF(2)-dimension of the residue field
    /// (the quotient by `u`). `None` for rings that are not chain rings with a
    /// proper maximal ideal (fields and `Rk` with k > 1).
    pub fn residue_dim(&self) -> Option<u32> {
        match self.kind {
            RingKind::F2u | RingKind::Rk(1) => Some(1),
            RingKind::F4u => Some(2),
            _ => None,
        }
    }

    /// Projection onto the residue field for chain rings (drops the `u` part).
    pub fn residue(&self, a: Elem) -> Elem {
        match self.kind {
            RingKind::F2u | RingKind::Rk(1) => a & 1,
            RingKind::F4u => a & 3,
            _ => a,
        }
    }

    pub fn check_index(&self, a: usize) -> Result<Elem> {
        if a < self.size {
            Ok(a as Elem)
        } else {
            Err(Error::OutOfRange {
                index: a,
                size: self.size,
            })
        }
    }

    /// Parses an element token such as `wu+u+1`, `3`, or `u1u2+1`.
    pub fn parse_elem(&self, token: &str) -> Result<Elem> {
        let token = token.trim();
        let err = || Error::Parse {
            what: "ring element",
            token: token.to_string(),
            position: None,
        };
        if token.is_empty() {
            return Err(err());
        }
        if self.kind == RingKind::F2u && token == "3" {
            return Ok(3);
        }
        let mut acc = 0;
        for mono in token.split('+') {
            let bit = self.monomial_bit(mono.trim()).ok_or_else(err)?;
            acc ^= bit;
        }
        Ok(acc)
    }

    fn monomial_bit(&self, mono: &str) -> Option<Elem> {
        match mono {
            "0" => return Some(0),
            "1" => return Some(1),
            _ => {}
        }
        match self.kind {
            RingKind::F2 => None,
            RingKind::F4 => (mono == "w").then_some(2),
            RingKind::F2u => (mono == "u").then_some(2),
            RingKind::F4u => match mono {
                "w" => Some(2),
                "u" => Some(4),
                "wu" | "uw" => Some(8),
                _ => None,
            },
            RingKind::Rk(k) => {
                if k == 1 && mono == "u" {
                    return Some(2);
                }
                let mut set = 0usize;
                let mut rest = mono;
                while let Some(r) = rest.strip_prefix('u') {
                    let digits = r.chars().take_while(char::is_ascii_digit).count();
                    let i: usize = r[..digits].parse().ok()?;
                    if i == 0 || i > k as usize || set >> (i - 1) & 1 == 1 {
                        return None;
                    }
                    set |= 1 << (i - 1);
                    rest = &r[digits..];
                }
                (rest.is_empty() && set != 0).then(|| (1usize << set) as Elem)
            }
        }
    }

    /// Canonical token for an element (highest basis monomial first).
    pub fn format_elem(&self, a: Elem) -> String {
        if a == 0 {
            return "0".into();
        }
        if self.kind == RingKind::F2u && a == 3 {
            return "3".into();
        }
        let names: Vec<String> = match self.kind {
            RingKind::F2 => vec!["1".into()],
            RingKind::F4 => vec!["1".into(), "w".into()],
            RingKind::F2u => vec!["1".into(), "u".into()],
            RingKind::F4u => vec!["1".into(), "w".into(), "u".into(), "wu".into()],
            RingKind::Rk(k) => (0..1usize << k)
                .map(|set| {
                    if set == 0 {
                        "1".to_string()
                    } else {
                        (0..k as usize)
                            .filter(|i| set >> i & 1 == 1)
                            .map(|i| format!("u{}", i + 1))
                            .collect()
                    }
                })
                .collect(),
        };
        (0..names.len())
            .rev()
            .filter(|i| a >> i & 1 == 1)
            .map(|i| names[i].as_str())
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn parse_vector(&self, text: &str) -> Result<Vec<Elem>> {
        let text = text.trim().trim_start_matches('(').trim_end_matches(')');
        text.split(',')
            .enumerate()
            .map(|(i, t)| {
                self.parse_elem(t).map_err(|_| Error::Parse {
                    what: "ring element",
                    token: t.trim().to_string(),
                    position: Some(i + 1),
                })
            })
            .collect()
    }

    pub fn format_vector(&self, v: &[Elem]) -> String {
        v.iter()
            .map(|&a| self.format_elem(a))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Euclidean inner product `Σ x_i y_i`.
    pub fn dot(&self, x: &[Elem], y: &[Elem]) -> Elem {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }
}

fn f4_mul(a: usize, b: usize) -> usize {
    let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
    let c0 = (a0 & b0) ^ (a1 & b1);
    let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
    c0 | (c1 << 1)
}

/// An element bound to its ring, for checked arithmetic across ring values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    ring: Arc<Ring>,
    index: Elem,
}

impl RingElement {
    pub fn new(ring: Arc<Ring>, index: usize) -> Result<RingElement> {
        let index = ring.check_index(index)?;
        Ok(RingElement { ring, index })
    }

    pub fn parse(ring: Arc<Ring>, token: &str) -> Result<RingElement> {
        let index = ring.parse_elem(token)?;
        Ok(RingElement { ring, index })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn index(&self) -> Elem {
        self.index
    }

    fn same_ring(&self, other: &RingElement) -> Result<()> {
        if self.ring.kind == other.ring.kind {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.kind.to_string(),
                right: other.ring.kind.to_string(),
            })
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(RingElement {
            ring: self.ring.clone(),
            index: self.ring.add(self.index, other.index),
        })
    }

    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_ring(other)?;
        Ok(RingElement {
            ring: self.ring.clone(),
            index: self.ring.mul(self.index, other.index),
        })
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(self.index)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format_elem(self.index))
    }
}
