//! Self-dual code constructions over the small rings: [I | Ω(v)], the
//! two-column extension, ring-code cardinality, and randomized search.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bincodes::{classify_enumerator, BinaryCode, EnumeratorClass, Family, WeightProfile};
use crate::composite::Layout;
use crate::error::{Error, Result};
use crate::gray;
use crate::group_ring::GroupRingElement;
use crate::matrix::RingMatrix;
use crate::ring::{Elem, Ring, RingKind};

/// GF(2) rank of wide bit rows.
fn wide_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let words = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..words * 64 {
        let (w, b) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[w] & b != 0 {
                row.iter_mut().zip(&pivot).for_each(|(x, y)| *x ^= y);
            }
        }
        rank += 1;
    }
    rank
}

fn pack_wide(bits: impl Iterator<Item = bool>, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len.div_ceil(64).max(1)];
    for (i, b) in bits.enumerate() {
        if b {
            out[i / 64] |= 1 << (i % 64);
        }
    }
    out
}

/// A linear code over one of the table rings, kept as its generator rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingCode {
    ring: Arc<Ring>,
    len: usize,
    rows: Vec<Vec<Elem>>,
}

/// Cardinality data of a [`RingCode`]. For chain rings with residue field of
/// size 2^e, |C| = (2^e)^(2·k1) · (2^e)^k2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeSize {
    pub log2: usize,
    pub k1: Option<usize>,
    pub k2: Option<usize>,
}

impl RingCode {
    pub fn new(ring: Arc<Ring>, len: usize, rows: Vec<Vec<Elem>>) -> Result<RingCode> {
        for r in &rows {
            if r.len() != len {
                return Err(Error::LengthMismatch {
                    expected: len,
                    got: r.len(),
                });
            }
            for &e in r {
                ring.check_index(e as usize)?;
            }
        }
        Ok(RingCode { ring, len, rows })
    }

    pub fn from_matrix(m: &RingMatrix) -> RingCode {
        RingCode {
            ring: m.ring().clone(),
            len: m.cols(),
            rows: m.to_rows(),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    /// The rows b·r over all generators r and GF(2) basis elements b; their
    /// GF(2) span is the code.
    fn gf2_spanning_set(&self) -> Vec<Vec<Elem>> {
        let r = &self.ring;
        self.rows
            .iter()
            .flat_map(|row| r.gf2_basis().map(move |b| row.iter().map(|&e| r.mul(b, e)).collect()))
            .collect()
    }

    fn pack_elems(&self, row: &[Elem]) -> Vec<u64> {
        let d = self.ring.dim() as usize;
        pack_wide(
            row.iter().flat_map(|&e| (0..d).map(move |i| e >> i & 1 == 1)),
            self.len * d,
        )
    }

    pub fn size(&self) -> CodeSize {
        let spanning = self.gf2_spanning_set();
        let log2 = wide_rank(spanning.iter().map(|r| self.pack_elems(r)).collect());
        let (k1, k2) = match self.ring.residue_dim() {
            Some(e) => {
                let e = e as usize;
                let residues = spanning
                    .iter()
                    .map(|r| {
                        let res: Vec<Elem> = r.iter().map(|&x| self.ring.residue(x)).collect();
                        self.pack_elems(&res)
                    })
                    .collect();
                let k1 = wide_rank(residues) / e;
                (Some(k1), Some((log2 - 2 * e * k1) / e))
            }
            None => (None, None),
        };
        CodeSize { log2, k1, k2 }
    }

    /// G·Gᵀ = 0.
    pub fn is_self_orthogonal(&self) -> bool {
        let r = &self.ring;
        self.rows
            .iter()
            .enumerate()
            .all(|(i, a)| self.rows[i..].iter().all(|b| r.dot(a, b) == 0))
    }

    /// G·Gᵀ = 0 and |C| = |R|^(n/2).
    pub fn is_self_dual(&self) -> bool {
        self.len.is_multiple_of(2)
            && self.is_self_orthogonal()
            && self.size().log2 == self.len / 2 * self.ring.dim() as usize
    }

    /// The standard Gray image (see [`gray::binary_image`]).
    pub fn binary_image(&self) -> Result<BinaryCode> {
        let mut words = Vec::new();
        let mut n = 0;
        for row in self.gf2_spanning_set() {
            let bits = gray::binary_image(&self.ring, &row)?;
            n = bits.len();
            words.push(gray::pack_bits(&bits)?);
        }
        if self.rows.is_empty() {
            n = gray::binary_image(&self.ring, &vec![0; self.len])?.len();
        }
        BinaryCode::from_rows(n, words)
    }

    /// ψ image over F2+uF2 of a code over F4+uF4: generators ψ(r) and ψ(ω·r).
    pub fn psi_image(&self) -> Result<RingCode> {
        let f2u = Ring::shared(RingKind::F2u)?;
        let w = 0b10;
        let mut rows = Vec::with_capacity(2 * self.rows.len());
        for row in &self.rows {
            rows.push(gray::psi_f4u(&self.ring, row)?);
            let wr: Vec<Elem> = row.iter().map(|&e| self.ring.mul(w, e)).collect();
            rows.push(gray::psi_f4u(&self.ring, &wr)?);
        }
        RingCode::new(f2u, 2 * self.len, rows)
    }

    /// Text form: `ring <kind> n=<len> rows=<m>` followed by one
    /// comma-separated token row per generator.
    pub fn to_text(&self) -> String {
        let mut s = format!("ring {} n={} rows={}\n", self.ring.kind(), self.len, self.rows.len());
        for r in &self.rows {
            s.push_str(&self.ring.format_vector(r));
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<RingCode> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().unwrap_or("");
        let bad_header = || Error::Parse {
            what: "ring code header",
            token: header.to_string(),
            position: None,
        };
        let parts: Vec<&str> = header.split_whitespace().collect();
        let [tag, kind, n, m] = parts[..] else {
            return Err(bad_header());
        };
        if tag != "ring" {
            return Err(bad_header());
        }
        let field = |p: &str, key: &str| -> Result<usize> {
            p.strip_prefix(key).and_then(|v| v.parse().ok()).ok_or_else(bad_header)
        };
        let ring = Ring::shared(kind.parse()?)?;
        let (len, m) = (field(n, "n=")?, field(m, "rows=")?);
        let rows = lines.map(|l| ring.parse_vector(l)).collect::<Result<Vec<_>>>()?;
        if rows.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                got: rows.len(),
            });
        }
        RingCode::new(ring, len, rows)
    }
}

/// [I | Ω(v)].
pub fn build_pure_generator(v: &GroupRingElement, layout: &Layout) -> Result<RingCode> {
    let omega = layout.pattern()?.matrix(v)?;
    let id = RingMatrix::identity(v.ring().clone(), omega.rows());
    Ok(RingCode::from_matrix(&id.hconcat(&omega)?))
}

/// Ω(v)Ω(v)ᵀ = −I.
pub fn check_selfdual_condition(v: &GroupRingElement, layout: &Layout) -> Result<bool> {
    let omega = layout.pattern()?.matrix(v)?;
    let prod = omega.mul(&omega.transpose())?;
    let r = v.ring();
    let minus_one = r.neg(r.one());
    Ok((0..prod.rows()).all(|i| {
        (0..prod.cols()).all(|j| prod.get(i, j) == if i == j { minus_one } else { 0 })
    }))
}

pub fn ring_code_is_self_dual(code: &RingCode) -> bool {
    code.is_self_dual()
}

/// Inputs to the two-column extension: c² = −1 and ⟨X, X⟩ = −1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub c: Elem,
    pub x: Vec<Elem>,
}

/// Rows (1, 0, X) and (y_i, c·y_i, r_i) with y_i = ⟨r_i, X⟩.
pub fn extend_code(code: &RingCode, ext: &ExtensionSpec) -> Result<RingCode> {
    let r = code.ring();
    let minus_one = r.neg(r.one());
    r.check_index(ext.c as usize)?;
    if !r.is_unit(ext.c) {
        return Err(Error::Extension(format!("c = {} is not a unit", r.format_elem(ext.c))));
    }
    if r.mul(ext.c, ext.c) != minus_one {
        return Err(Error::Extension(format!("c = {} does not square to -1", r.format_elem(ext.c))));
    }
    if ext.x.len() != code.len() {
        return Err(Error::LengthMismatch {
            expected: code.len(),
            got: ext.x.len(),
        });
    }
    for &e in &ext.x {
        r.check_index(e as usize)?;
    }
    if r.dot(&ext.x, &ext.x) != minus_one {
        return Err(Error::Extension("<X, X> is not -1".into()));
    }
    if !code.is_self_dual() {
        return Err(Error::Extension("input code is not self-dual".into()));
    }
    let mut rows = Vec::with_capacity(code.rows().len() + 1);
    rows.push([&[r.one(), 0][..], &ext.x].concat());
    for row in code.rows() {
        let y = r.dot(row, &ext.x);
        rows.push([&[y, r.mul(ext.c, y)][..], row].concat());
    }
    RingCode::new(r.clone(), code.len() + 2, rows)
}

/// What a search keeps.
#[derive(Debug, Clone, Default)]
pub struct SearchFilter {
    pub min_d: Option<usize>,
    pub family: Option<Family>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Found {
    pub v: Vec<Elem>,
    pub code: BinaryCode,
    pub d: usize,
    /// A_w for w ≤ min(n, 14); the dedup key.
    pub profile: Vec<u64>,
    pub class: EnumeratorClass,
}

/// Draws `trials` coefficient vectors i.i.d. uniform from a seeded ChaCha
/// stream, keeps those whose [I | Ω(v)] is self-dual and passes `filter`,
/// and returns one representative per weight-profile signature.
pub fn search_random(
    ring: &Arc<Ring>,
    layout: &Layout,
    trials: usize,
    seed: u64,
    filter: &SearchFilter,
) -> Result<Vec<Found>> {
    if ring.characteristic() != 2 {
        return Err(Error::Characteristic);
    }
    let pattern = layout.pattern()?;
    let group = pattern.group().clone();
    let n = group.order();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<Vec<Elem>> = (0..trials)
        .map(|_| (0..n).map(|_| rng.random_range(0..ring.size()) as Elem).collect())
        .collect();
    let hits: Vec<Found> = samples
        .into_par_iter()
        .map(|coeffs| -> Result<Option<Found>> {
            let v = GroupRingElement::new(group.clone(), ring.clone(), coeffs)?;
            if !check_selfdual_condition(&v, layout)? {
                return Ok(None);
            }
            let code = build_pure_generator(&v, layout)?.binary_image()?;
            let w_sig = code.len().min(14);
            let profile: WeightProfile = code.weight_counts(w_sig)?;
            let d = match profile.min_nonzero_weight() {
                Some(d) => d,
                None => code.min_distance()?.unwrap_or(0),
            };
            if filter.min_d.is_some_and(|m| d < m) {
                return Ok(None);
            }
            let class = classify_enumerator(code.len(), &profile);
            if filter.family.is_some_and(|f| f != class.family) {
                return Ok(None);
            }
            Ok(Some(Found {
                v: v.coeffs().to_vec(),
                code,
                d,
                profile: profile.counts,
                class,
            }))
        })
        .filter_map(|r| r.transpose())
        .collect::<Result<_>>()?;
    let mut by_sig: BTreeMap<Vec<u64>, Found> = BTreeMap::new();
    for f in hits {
        match by_sig.get(&f.profile) {
            Some(prev) if prev.v <= f.v => {}
            _ => {
                by_sig.insert(f.profile.clone(), f);
            }
        }
    }
    Ok(by_sig.into_values().collect())
}
