//! Bit-packed binary linear codes of length at most 128.
//!
//! Coordinate i of a word is bit i of a `u128`. Codes are kept in reduced
//! row-echelon form, so two codes are equal iff their row vectors are.

mod classify;
mod enumerate;

use std::fmt;

use crate::error::{Error, Result};

pub use classify::{classify_enumerator, EnumeratorClass, Family};
pub use enumerate::{naive_weight_counts, Strategy, WeightProfile, MAX_ENUM_LOG2};

pub type Word = u128;
pub const MAX_LEN: usize = 128;

#[inline]
pub fn weight(x: Word) -> u32 {
    x.count_ones()
}

/// ⟨x, y⟩ over GF(2).
#[inline]
pub fn inner_product(x: Word, y: Word) -> u8 {
    ((x & y).count_ones() & 1) as u8
}

fn len_mask(n: usize) -> Word {
    if n == MAX_LEN {
        Word::MAX
    } else {
        (1 << n) - 1
    }
}

/// Parses an unspaced bitstring; character i becomes coordinate i.
pub fn parse_bits(s: &str) -> Result<(usize, Word)> {
    let s = s.trim();
    if s.len() > MAX_LEN {
        return Err(Error::TooLong(s.len()));
    }
    let mut w = 0;
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '0' => {}
            '1' => w |= 1 << i,
            _ => {
                return Err(Error::Parse {
                    what: "bit",
                    token: ch.to_string(),
                    position: Some(i + 1),
                })
            }
        }
    }
    Ok((s.len(), w))
}

pub fn format_bits(x: Word, n: usize) -> String {
    (0..n).map(|i| if x >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Reduces `rows` in place to RREF, pivoting on the lowest coordinate.
/// Returns the pivot column of each surviving row.
fn reduce(rows: &mut Vec<Word>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..MAX_LEN {
        let bit = 1 << col;
        let Some(p) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pr = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pr;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<Word>,
    pivots: Vec<usize>,
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryCode [{}, {}]", self.n, self.dim())?;
        for &r in &self.rows {
            writeln!(f, "  {}", format_bits(r, self.n))?;
        }
        Ok(())
    }
}

impl BinaryCode {
    /// Row space of `rows`; dependent rows are dropped.
    pub fn from_rows(n: usize, rows: impl IntoIterator<Item = Word>) -> Result<BinaryCode> {
        if n > MAX_LEN {
            return Err(Error::TooLong(n));
        }
        let mask = len_mask(n);
        let mut rows: Vec<Word> = rows.into_iter().collect();
        if let Some(&bad) = rows.iter().find(|&&r| r & !mask != 0) {
            return Err(Error::LengthMismatch {
                expected: n,
                got: (MAX_LEN - bad.leading_zeros() as usize),
            });
        }
        let pivots = reduce(&mut rows);
        Ok(BinaryCode { n, rows, pivots })
    }

    pub fn from_bitstrings<S: AsRef<str>>(n: usize, rows: &[S]) -> Result<BinaryCode> {
        let mut words = Vec::with_capacity(rows.len());
        for r in rows {
            let (len, w) = parse_bits(r.as_ref())?;
            if len != n {
                return Err(Error::LengthMismatch { expected: n, got: len });
            }
            words.push(w);
        }
        BinaryCode::from_rows(n, words)
    }

    pub fn zero(n: usize) -> Result<BinaryCode> {
        BinaryCode::from_rows(n, [])
    }

    pub fn full(n: usize) -> Result<BinaryCode> {
        BinaryCode::from_rows(n, (0..n).map(|i| 1 << i))
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Generator rows in reduced row-echelon form.
    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rref(&self) -> &BinaryCode {
        self
    }

    fn check_word(&self, x: Word) -> Result<()> {
        if x & !len_mask(self.n) != 0 {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: MAX_LEN - x.leading_zeros() as usize,
            });
        }
        Ok(())
    }

    /// Remainder of x after clearing every pivot column.
    pub fn residual(&self, mut x: Word) -> Word {
        for (&r, &p) in self.rows.iter().zip(&self.pivots) {
            if x >> p & 1 == 1 {
                x ^= r;
            }
        }
        x
    }

    pub fn contains(&self, x: Word) -> bool {
        self.residual(x) == 0
    }

    pub fn contains_code(&self, other: &BinaryCode) -> bool {
        other.rows.iter().all(|&r| self.contains(r))
    }

    /// C⊥, read off the RREF: each free column f gives e_f + Σ_{rows with bit f} e_pivot.
    pub fn dual(&self) -> BinaryCode {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.n).filter(|&f| !is_pivot[f]).map(|f| {
            let mut w: Word = 1 << f;
            for (&r, &p) in self.rows.iter().zip(&self.pivots) {
                if r >> f & 1 == 1 {
                    w |= 1 << p;
                }
            }
            w
        });
        BinaryCode::from_rows(self.n, rows.collect::<Vec<_>>()).expect("dual stays in length")
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &a)| self.rows[i..].iter().all(|&b| inner_product(a, b) == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.n && self.is_self_orthogonal()
    }

    /// Image under the coordinate map i ↦ perm[i].
    pub fn permute(&self, perm: &[usize]) -> Result<BinaryCode> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: perm.len(),
            });
        }
        let rows = self.rows.iter().map(|&r| {
            let mut w = 0;
            for (i, &p) in perm.iter().enumerate() {
                w |= (r >> i & 1) << p;
            }
            w
        });
        BinaryCode::from_rows(self.n, rows.collect::<Vec<_>>())
    }

    /// ⟨⟨x⟩⊥ ∩ C, x⟩.
    pub fn neighbor(&self, x: Word) -> Result<BinaryCode> {
        self.check_word(x)?;
        if self.contains(x) {
            return Err(Error::VectorInCode);
        }
        if inner_product(x, x) != 0 {
            return Err(Error::VectorNotIsotropic);
        }
        let mut rows = self.rows.clone();
        if let Some(p) = rows.iter().position(|&r| inner_product(r, x) == 1) {
            let pr = rows.swap_remove(p);
            for r in rows.iter_mut() {
                if inner_product(*r, x) == 1 {
                    *r ^= pr;
                }
            }
        }
        rows.push(x);
        BinaryCode::from_rows(self.n, rows)
    }

    /// N_(i+1) = neighbor(N_(i), x_i); returns every N_(i) for i ≥ 1.
    pub fn neighbor_chain(&self, xs: &[Word]) -> Result<Vec<BinaryCode>> {
        let mut out: Vec<BinaryCode> = Vec::with_capacity(xs.len());
        for (step, &x) in xs.iter().enumerate() {
            let cur = out.last().unwrap_or(self);
            let next = cur.neighbor(x).map_err(|e| Error::ChainStep {
                step,
                source: Box::new(e),
            })?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn weight_counts(&self, w_max: usize) -> Result<WeightProfile> {
        enumerate::weight_counts(self, w_max, Strategy::Auto)
    }

    pub fn weight_counts_with(&self, w_max: usize, strategy: Strategy) -> Result<WeightProfile> {
        enumerate::weight_counts(self, w_max, strategy)
    }

    /// Minimum nonzero weight; `None` for the zero code.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        enumerate::min_distance(self)
    }

    /// Text form: `binary n=<len> k=<dim>` followed by one bitstring per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("binary n={} k={}\n", self.n, self.dim());
        for &r in &self.rows {
            s.push_str(&format_bits(r, self.n));
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<BinaryCode> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().unwrap_or("");
        let bad_header = || Error::Parse {
            what: "code header",
            token: header.to_string(),
            position: None,
        };
        let mut parts = header.split_whitespace();
        if parts.next() != Some("binary") {
            return Err(bad_header());
        }
        let mut field = |key: &str| -> Result<usize> {
            parts
                .next()
                .and_then(|p| p.strip_prefix(key))
                .and_then(|v| v.parse().ok())
                .ok_or_else(bad_header)
        };
        let n = field("n=")?;
        let k = field("k=")?;
        let rows: Vec<&str> = lines.collect();
        if rows.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                got: rows.len(),
            });
        }
        let code = BinaryCode::from_bitstrings(n, &rows)?;
        if code.dim() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                got: code.dim(),
            });
        }
        Ok(code)
    }
}
