//! Low-weight codeword counting.
//!
//! Two interchangeable engines sit behind [`weight_counts`]:
//!
//! * `Full`: every codeword in Gray-code order, one XOR and one popcount per
//!   step, the index space split into contiguous chunks for rayon.
//! * `InfoSets`: with m pairwise disjoint information sets, a word of weight
//!   ≤ w has weight ≤ ⌊w/m⌋ on at least one of them, so it suffices to
//!   enumerate low-weight messages per set. A word is counted only by the
//!   first set on which it is light, which keeps the counts exact.
//!
//! The same information sets drive a Brouwer–Zimmermann style minimum
//! distance search.

use rayon::prelude::*;

use super::{weight, BinaryCode, Word};
use crate::error::{Error, Result};

/// log2 of the largest number of codewords either engine will visit.
pub const MAX_ENUM_LOG2: u32 = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Whichever engine visits fewer codewords.
    Auto,
    Full,
    InfoSets,
}

/// Exact A_w for w = 0..=w_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    pub counts: Vec<u64>,
    pub exact: bool,
}

impl WeightProfile {
    pub fn w_max(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn get(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }
}

struct InfoSet {
    mask: Word,
    /// Systematic on `mask`: row i has a single 1 inside the set.
    rows: Vec<Word>,
}

/// Greedily peels off disjoint information sets until the remaining
/// coordinates no longer carry full rank.
fn disjoint_info_sets(code: &BinaryCode) -> Vec<InfoSet> {
    let k = code.dim();
    let mut sets = Vec::new();
    let mut used: Word = 0;
    if k == 0 {
        return sets;
    }
    loop {
        let mut rows = code.rows().to_vec();
        let mut mask: Word = 0;
        let mut r = 0;
        for col in (0..code.len()).filter(|&c| used >> c & 1 == 0) {
            let bit: Word = 1 << col;
            let Some(p) = (r..k).find(|&i| rows[i] & bit != 0) else {
                continue;
            };
            rows.swap(r, p);
            let pr = rows[r];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && *row & bit != 0 {
                    *row ^= pr;
                }
            }
            mask |= bit;
            r += 1;
            if r == k {
                break;
            }
        }
        if r < k {
            return sets;
        }
        used |= mask;
        sets.push(InfoSet { mask, rows });
    }
}

fn binomial_sum(k: usize, t: usize) -> f64 {
    let mut total = 0.0;
    let mut term = 1.0;
    for j in 0..=t.min(k) {
        total += term;
        term = term * (k - j) as f64 / (j + 1) as f64;
    }
    total
}

fn check_budget(code: &BinaryCode, visits: f64) -> Result<()> {
    if visits > (1u64 << MAX_ENUM_LOG2) as f64 {
        return Err(Error::OverBudget {
            dim: code.dim(),
            max: MAX_ENUM_LOG2 as usize,
        });
    }
    Ok(())
}

/// Calls `f` on the XOR of every subset of `rows` with size in `lo..=hi`,
/// parallel over the smallest chosen index. Returns the reduced accumulator.
fn fold_subsets<A, F>(rows: &[Word], lo: usize, hi: usize, init: impl Fn() -> A + Sync + Send, f: F, merge: impl Fn(A, A) -> A + Sync + Send) -> A
where
    A: Send,
    F: Fn(&mut A, Word) + Sync,
{
    #[allow(clippy::too_many_arguments)]
    fn walk<A>(rows: &[Word], start: usize, size: usize, lo: usize, hi: usize, acc: Word, st: &mut A, f: &impl Fn(&mut A, Word)) {
        for i in start..rows.len() {
            let c = acc ^ rows[i];
            if size + 1 >= lo {
                f(st, c);
            }
            if size + 1 < hi {
                walk(rows, i + 1, size + 1, lo, hi, c, st, f);
            }
        }
    }
    if hi == 0 {
        return init();
    }
    (0..rows.len())
        .into_par_iter()
        .map(|first| {
            let mut st = init();
            let c = rows[first];
            if lo <= 1 {
                f(&mut st, c);
            }
            if hi > 1 {
                walk(rows, first + 1, 1, lo, hi, c, &mut st, &f);
            }
            st
        })
        .reduce(&init, merge)
}

fn add_hist(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn full_counts(code: &BinaryCode, w_max: usize) -> Vec<u64> {
    let rows = code.rows();
    let split = rows.len().min(10);
    let (high, low) = rows.split_at(split);
    let n = code.len();
    let hist = (0u64..1 << split)
        .into_par_iter()
        .map(|chunk| {
            let mut cur: Word = 0;
            for (i, &r) in high.iter().enumerate() {
                if chunk >> i & 1 == 1 {
                    cur ^= r;
                }
            }
            let mut hist = vec![0u64; n + 1];
            hist[weight(cur) as usize] += 1;
            for step in 1u64..1 << low.len() {
                cur ^= low[step.trailing_zeros() as usize];
                hist[weight(cur) as usize] += 1;
            }
            hist
        })
        .reduce(|| vec![0; n + 1], add_hist);
    hist[..=w_max.min(n)].to_vec()
}

fn info_set_counts(sets: &[InfoSet], w_max: usize) -> Vec<u64> {
    let t = w_max / sets.len();
    let mut hist = vec![0u64; w_max + 1];
    hist[0] = 1;
    for (s, set) in sets.iter().enumerate() {
        let earlier: Vec<Word> = sets[..s].iter().map(|e| e.mask).collect();
        let part = fold_subsets(
            &set.rows,
            1,
            t,
            || vec![0u64; w_max + 1],
            |h, c| {
                let w = weight(c) as usize;
                if w <= w_max && earlier.iter().all(|&m| weight(c & m) as usize > t) {
                    h[w] += 1;
                }
            },
            add_hist,
        );
        hist = add_hist(hist, part);
    }
    hist
}

pub(super) fn weight_counts(code: &BinaryCode, w_max: usize, strategy: Strategy) -> Result<WeightProfile> {
    let w_max = w_max.min(code.len());
    let k = code.dim();
    let full_cost = 2f64.powi(k as i32);
    let sets = match strategy {
        Strategy::Full => Vec::new(),
        _ => disjoint_info_sets(code),
    };
    let set_cost = if sets.is_empty() {
        f64::INFINITY
    } else {
        sets.len() as f64 * binomial_sum(k, w_max / sets.len())
    };
    let use_sets = match strategy {
        Strategy::Full => false,
        Strategy::InfoSets => !sets.is_empty(),
        Strategy::Auto => set_cost < full_cost,
    };
    let counts = if use_sets {
        check_budget(code, set_cost)?;
        info_set_counts(&sets, w_max)
    } else {
        check_budget(code, full_cost)?;
        full_counts(code, w_max)
    };
    Ok(WeightProfile { counts, exact: true })
}

pub(super) fn min_distance(code: &BinaryCode) -> Result<Option<usize>> {
    let k = code.dim();
    if k == 0 {
        return Ok(None);
    }
    if k <= 20 {
        return Ok(full_counts(code, code.len()).iter().skip(1).position(|&c| c > 0).map(|w| w + 1));
    }
    let sets = disjoint_info_sets(code);
    let m = sets.len();
    let mut best = usize::MAX;
    let mut visits = 0.0;
    let mut binom = 1.0;
    for t in 1..=k {
        binom = binom * (k - t + 1) as f64 / t as f64;
        visits += m as f64 * binom;
        check_budget(code, visits)?;
        for set in &sets {
            let found = fold_subsets(
                &set.rows,
                t,
                t,
                || usize::MAX,
                |b, c| *b = (*b).min(weight(c) as usize),
                usize::min,
            );
            best = best.min(found);
        }
        // every unseen codeword is heavier than t on each of the m sets
        if best <= m * (t + 1) {
            break;
        }
    }
    Ok(Some(best))
}

/// Reference counter: expands every message independently. Only for small k.
pub fn naive_weight_counts(code: &BinaryCode, w_max: usize) -> Vec<u64> {
    let mut hist = vec![0u64; w_max + 1];
    for msg in 0u64..1 << code.dim() {
        let mut c: Word = 0;
        for (i, &r) in code.rows().iter().enumerate() {
            if msg >> i & 1 == 1 {
                c ^= r;
            }
        }
        let w = weight(c) as usize;
        if w <= w_max {
            hist[w] += 1;
        }
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bincodes::tests::hamming8;

    fn golay24() -> BinaryCode {
        // bordered double circulant on the quadratic residues mod 11
        let qr = [1usize, 3, 4, 5, 9];
        let mut rows = Vec::new();
        for i in 0..12usize {
            let mut w: Word = 1 << i;
            if i == 0 {
                for j in 1..12 {
                    w |= 1 << (12 + j);
                }
            } else {
                w |= 1 << 12;
                let a = i - 1;
                for j in 0..11usize {
                    let diff = (j + 11 - a) % 11;
                    if diff == 0 || !qr.contains(&diff) {
                        w |= 1 << (13 + j);
                    }
                }
            }
            rows.push(w);
        }
        BinaryCode::from_rows(24, rows).unwrap()
    }

    #[test]
    fn hamming_profile() {
        let p = hamming8().weight_counts(8).unwrap();
        assert_eq!(p.counts, [1, 0, 0, 0, 14, 0, 0, 0, 1]);
        assert_eq!(hamming8().min_distance().unwrap(), Some(4));
    }

    #[test]
    fn zero_and_repetition() {
        let z = BinaryCode::zero(6).unwrap();
        assert_eq!(z.weight_counts(6).unwrap().counts, [1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(z.min_distance().unwrap(), None);
        let rep = BinaryCode::from_rows(4, [0b1111]).unwrap();
        assert_eq!(rep.min_distance().unwrap(), Some(4));
    }

    #[test]
    fn golay_engines_agree() {
        let g = golay24();
        assert_eq!(g.dim(), 12);
        assert!(g.is_self_dual());
        let naive = naive_weight_counts(&g, 24);
        assert_eq!(naive[8], 759);
        assert_eq!(naive[12], 2576);
        for s in [Strategy::Full, Strategy::InfoSets, Strategy::Auto] {
            for w_max in [0, 7, 8, 12, 24] {
                let p = g.weight_counts_with(w_max, s).unwrap();
                assert_eq!(p.counts, naive[..=w_max], "{s:?} {w_max}");
            }
        }
        assert_eq!(g.min_distance().unwrap(), Some(8));
    }

    #[test]
    fn info_sets_are_disjoint_and_systematic() {
        let g = golay24();
        let sets = disjoint_info_sets(&g);
        assert_eq!(sets.len(), 2);
        assert_eq!(sets[0].mask & sets[1].mask, 0);
        for s in &sets {
            assert_eq!(s.mask.count_ones(), 12);
            for &r in &s.rows {
                assert_eq!((r & s.mask).count_ones(), 1);
            }
        }
    }

    #[test]
    fn large_min_distance_uses_info_sets() {
        // direct sum of four Golay codes: k = 48 is beyond the full budget
        let g = golay24();
        let rows = (0..4).flat_map(|i| g.rows().iter().map(move |&r| r << (24 * i)));
        let big = BinaryCode::from_rows(96, rows.collect::<Vec<_>>()).unwrap();
        assert_eq!(big.min_distance().unwrap(), Some(8));
        let p = big.weight_counts(8).unwrap();
        assert_eq!(p.get(8), 4 * 759);
        assert!(matches!(
            big.weight_counts_with(8, Strategy::Full),
            Err(Error::OverBudget { .. })
        ));
    }
}
