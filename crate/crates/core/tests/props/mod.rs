//! Property suites shared by the `properties` and `acceptance` targets.
//!
//! Each suite runs 500 cases from a fixed ChaCha seed and returns the first
//! counterexample as a string.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use compcodes::bincodes::{weight, BinaryCode, Strategy as Engine, Word};
use compcodes::composite::{preset, Layout};
use compcodes::construct::{build_pure_generator, check_selfdual_condition, RingCode};
use compcodes::gray;
use compcodes::group::{FiniteGroup, GroupKind};
use compcodes::group_ring::GroupRingElement;
use compcodes::ring::{Elem, Ring, RingKind};

pub const CASES: u32 = 500;

fn runner(tag: u8) -> TestRunner {
    let mut seed = [0x5eu8; 32];
    seed[0] = tag;
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &seed))
}

fn finish<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// Layouts whose Ω coincides with σ: all-natural, or the C4 layout on D8.
fn sigma_like() -> Vec<Layout> {
    vec![
        Layout::Sigma(GroupKind::Cyclic(4)),
        Layout::Sigma(GroupKind::Dihedral(8)),
        Layout::Sigma(GroupKind::Quaternion8),
        Layout::Sigma(GroupKind::Dihedral(16)),
        Layout::Composite(preset("d8-c4").unwrap()),
    ]
}

fn all_presets() -> Vec<Layout> {
    compcodes::composite::PRESETS
        .iter()
        .map(|p| Layout::Composite(preset(p).unwrap()))
        .chain(sigma_like())
        .collect()
}

/// (layout, ring, v, w) with v, w uniform over the group ring.
fn pair_strategy(layouts: Vec<Layout>) -> impl Strategy<Value = (Layout, RingKind, Vec<Elem>, Vec<Elem>)> {
    (prop::sample::select(layouts), prop::sample::select(vec![RingKind::F2, RingKind::F2u])).prop_flat_map(
        |(layout, ring)| {
            let n = FiniteGroup::new(layout.group()).unwrap().order();
            let q = Ring::new(ring).unwrap().size() as Elem;
            (Just(layout), Just(ring), prop::collection::vec(0..q, n), prop::collection::vec(0..q, n))
        },
    )
}

fn elem(layout: &Layout, ring: RingKind, coeffs: Vec<Elem>) -> GroupRingElement {
    GroupRingElement::new(
        FiniteGroup::shared(layout.group()).unwrap(),
        Ring::shared(ring).unwrap(),
        coeffs,
    )
    .unwrap()
}

pub fn omega_additive() -> Result<(), String> {
    finish(runner(1).run(&pair_strategy(all_presets()), |(layout, ring, a, b)| {
        let p = layout.pattern().unwrap();
        let (v, w) = (elem(&layout, ring, a), elem(&layout, ring, b));
        let lhs = p.matrix(&v.add(&w).unwrap()).unwrap();
        let rhs = p.matrix(&v).unwrap().add(&p.matrix(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        Ok(())
    }))
}

/// Ω(vw) = Ω(v)Ω(w) where Ω reduces to σ; see `composite_counterexamples`
/// for the other presets.
pub fn omega_multiplicative() -> Result<(), String> {
    finish(runner(2).run(&pair_strategy(sigma_like()), |(layout, ring, a, b)| {
        let p = layout.pattern().unwrap();
        let (v, w) = (elem(&layout, ring, a), elem(&layout, ring, b));
        let lhs = p.matrix(&v.mul(&w).unwrap()).unwrap();
        let rhs = p.matrix(&v).unwrap().mul(&p.matrix(&w).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        Ok(())
    }))
}

pub fn omega_transpose() -> Result<(), String> {
    finish(runner(3).run(&pair_strategy(sigma_like()), |(layout, ring, a, _)| {
        let p = layout.pattern().unwrap();
        let v = elem(&layout, ring, a);
        prop_assert_eq!(p.matrix(&v.involution()).unwrap(), p.matrix(&v).unwrap().transpose());
        Ok(())
    }))
}

/// ΩΩᵀ = −I ⟺ [I | Ω] self-dual for every preset; ⟺ vvᵀ = 1 as well where
/// Ω reduces to σ.
pub fn selfdual_criterion() -> Result<(), String> {
    let sigma_names: Vec<String> = sigma_like().iter().map(|l| format!("{l:?}")).collect();
    finish(runner(4).run(&pair_strategy(all_presets()), |(layout, ring, a, _)| {
        let v = elem(&layout, ring, a);
        let crit = check_selfdual_condition(&v, &layout).unwrap();
        let code = build_pure_generator(&v, &layout).unwrap();
        // independent check: every generator pair orthogonal and n/2 free rows
        let r = code.ring();
        let orth = code
            .rows()
            .iter()
            .all(|x| code.rows().iter().all(|y| r.dot(x, y) == 0));
        prop_assert_eq!(crit, orth, "criterion vs G·Gᵀ");
        prop_assert_eq!(crit, code.is_self_dual());
        if sigma_names.contains(&format!("{layout:?}")) {
            prop_assert_eq!(crit, v.is_unitary_unit().unwrap());
        }
        Ok(())
    }))
}

fn translate(code: &BinaryCode, g: &FiniteGroup, h: usize) -> Vec<Word> {
    // c'_k = c_{h⁻¹ g_k}
    let hi = g.inv(h);
    code.rows()
        .iter()
        .map(|&row| {
            (0..g.order()).fold(0, |acc, k| acc | (row >> g.mul(hi, k) & 1) << k)
        })
        .collect()
}

/// ⟨Ω(v)⟩ over F2 is invariant under left translation by G where Ω reduces to σ.
pub fn g_invariance() -> Result<(), String> {
    let layouts: Vec<Layout> = sigma_like();
    let strat = prop::sample::select(layouts).prop_flat_map(|layout| {
        let n = FiniteGroup::new(layout.group()).unwrap().order();
        (Just(layout), prop::collection::vec(0..2u8, n))
    });
    finish(runner(5).run(&strat, |(layout, a)| {
        let g = FiniteGroup::shared(layout.group()).unwrap();
        let v = elem(&layout, RingKind::F2, a);
        let code = RingCode::from_matrix(&layout.pattern().unwrap().matrix(&v).unwrap())
            .binary_image()
            .unwrap();
        for h in 0..g.order() {
            for w in translate(&code, &g, h) {
                prop_assert!(code.contains(w), "h = {}", g.label(h));
            }
        }
        // the dual is invariant too
        let dual = code.dual();
        for h in 0..g.order() {
            for w in translate(&dual, &g, h) {
                prop_assert!(dual.contains(w));
            }
        }
        Ok(())
    }))
}

/// Every Gray map in use, with the ring it applies to.
type GrayFn = fn(&Ring, &[Elem]) -> compcodes::Result<Vec<u8>>;

fn gray_maps() -> Vec<(&'static str, RingKind, GrayFn)> {
    fn phi_f4u_bits(r: &Ring, x: &[Elem]) -> compcodes::Result<Vec<u8>> {
        let f4 = Ring::new(RingKind::F4)?;
        gray::psi_f4(&f4, &gray::phi_f4u(r, x)?)
    }
    vec![
        ("psi_f4", RingKind::F4, gray::psi_f4),
        ("phi_f2u", RingKind::F2u, gray::phi_f2u),
        ("phi_1", RingKind::Rk(1), gray::phi_f2u),
        ("binary_f4u", RingKind::F4u, gray::binary_image_f4u),
        ("phi_f4u", RingKind::F4u, phi_f4u_bits),
        ("phi_k(1)", RingKind::Rk(1), gray::phi_k),
        ("phi_k(2)", RingKind::Rk(2), gray::phi_k),
        ("phi_k(3)", RingKind::Rk(3), gray::phi_k),
        ("psi_delta(2)", RingKind::Rk(2), gray::psi_delta),
        ("psi_delta(3)", RingKind::Rk(3), gray::psi_delta),
    ]
}

fn gray_pair() -> impl Strategy<Value = (usize, Vec<Elem>, Vec<Elem>)> {
    let maps = gray_maps();
    (0..maps.len(), 1..9usize).prop_flat_map(move |(m, len)| {
        let q = Ring::new(maps[m].1).unwrap().size();
        let sym = (0..q).prop_map(|e| e as Elem);
        (
            Just(m),
            prop::collection::vec(sym.clone(), len),
            prop::collection::vec(sym, len),
        )
    })
}

fn xor(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

/// GF(2)-linearity, injectivity and symbol-wise weight additivity.
pub fn gray_linear_injective() -> Result<(), String> {
    let maps = gray_maps();
    finish(runner(6).run(&gray_pair(), |(m, x, y)| {
        let (name, kind, f) = maps[m];
        let r = Ring::new(kind).unwrap();
        let sum: Vec<Elem> = x.iter().zip(&y).map(|(&a, &b)| r.add(a, b)).collect();
        let (fx, fy) = (f(&r, &x).unwrap(), f(&r, &y).unwrap());
        prop_assert_eq!(f(&r, &sum).unwrap(), xor(&fx, &fy), "{} not linear", name);
        prop_assert_eq!(fx == fy, x == y, "{} not injective", name);
        let per_symbol: usize = x
            .iter()
            .map(|&e| f(&r, &[e]).unwrap().iter().map(|&b| b as usize).sum::<usize>())
            .sum();
        prop_assert_eq!(fx.iter().map(|&b| b as usize).sum::<usize>(), per_symbol);
        Ok(())
    }))
}

/// v = g·(1 + u·w) with w = wᵀ is a unitary unit whenever u² = 0 in char 2,
/// so [I | σ(v)] is self-dual; its binary image must be too.
pub fn gray_selfdual_transport() -> Result<(), String> {
    let rings = vec![RingKind::F2u, RingKind::F4u, RingKind::Rk(1)];
    let groups = vec![GroupKind::Cyclic(4), GroupKind::Dihedral(8), GroupKind::Quaternion8];
    let strat = (prop::sample::select(rings), prop::sample::select(groups)).prop_flat_map(|(ring, group)| {
        let n = FiniteGroup::new(&group).unwrap().order();
        let q = Ring::new(ring).unwrap().size() as Elem;
        (Just(ring), Just(group), 0..n, prop::collection::vec(0..q, n))
    });
    finish(runner(7).run(&strat, |(ring, group, g0, s)| {
        let r = Ring::shared(ring).unwrap();
        let g = FiniteGroup::shared(&group).unwrap();
        let u: Elem = match ring {
            RingKind::F4u => 0b100,
            _ => 0b10,
        };
        let s = GroupRingElement::new(g.clone(), r.clone(), s).unwrap();
        let sym = s.add(&s.involution()).unwrap();
        let mut coeffs: Vec<Elem> = sym.coeffs().to_vec();
        for (i, c) in coeffs.iter_mut().enumerate() {
            if g.inv(i) == i {
                *c = s.coeff(i);
            }
        }
        let uw: Vec<Elem> = coeffs.iter().map(|&c| r.mul(u, c)).collect();
        let one = GroupRingElement::one(g.clone(), r.clone());
        let t = one.add(&GroupRingElement::new(g.clone(), r.clone(), uw).unwrap()).unwrap();
        let mut shift = vec![0; g.order()];
        shift[g0] = r.one();
        let v = GroupRingElement::new(g.clone(), r.clone(), shift).unwrap().mul(&t).unwrap();
        prop_assert!(v.is_unitary_unit().unwrap());
        let layout = Layout::Sigma(group.clone());
        let code = build_pure_generator(&v, &layout).unwrap();
        prop_assert!(code.is_self_dual());
        let bin = code.binary_image().unwrap();
        prop_assert_eq!(bin.dim() * 2, bin.len());
        prop_assert!(bin.is_self_dual());
        Ok(())
    }))
}

/// A random self-dual binary code: a permuted sum of {00, 11} blocks and
/// extended Hamming codes, walked through a few random neighbours.
fn random_self_dual(n_blocks: usize, hamming: usize, perm: &[usize], walk: &[Word]) -> BinaryCode {
    let ham = ["10000111", "01001011", "00101101", "00011110"];
    let mut rows: Vec<Word> = Vec::new();
    let mut off = 0;
    for _ in 0..hamming {
        for h in ham {
            let w = h.chars().enumerate().fold(0, |a, (i, c)| a | (Word::from(c == '1') << i));
            rows.push(w << off);
        }
        off += 8;
    }
    for _ in 0..n_blocks {
        rows.push(0b11 << off);
        off += 2;
    }
    let n = off;
    let mut code = BinaryCode::from_rows(n, rows).unwrap();
    let p: Vec<usize> = {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by_key(|&i| perm[i % perm.len()].wrapping_mul(31).wrapping_add(i));
        let mut inv = vec![0; n];
        for (new, &old) in idx.iter().enumerate() {
            inv[old] = new;
        }
        inv
    };
    code = code.permute(&p).unwrap();
    for &x in walk {
        let x = x & ((1 << n) - 1);
        if weight(x).is_multiple_of(2) && !code.contains(x) {
            code = code.neighbor(x).unwrap();
        }
    }
    code
}

fn self_dual_strategy() -> impl Strategy<Value = BinaryCode> {
    (0..6usize, 0..3usize, prop::collection::vec(any::<usize>(), 40), prop::collection::vec(any::<u64>(), 0..4))
        .prop_filter("non-empty", |(b, h, _, _)| b + h > 0)
        .prop_map(|(b, h, perm, walk)| {
            random_self_dual(b, h, &perm, &walk.iter().map(|&w| Word::from(w)).collect::<Vec<_>>())
        })
}

pub fn neighbor_properties() -> Result<(), String> {
    let strat = (self_dual_strategy(), any::<u64>());
    finish(runner(8).run(&strat, |(c, raw)| {
        prop_assert!(c.is_self_dual());
        let n = c.len();
        let mut x = Word::from(raw) & ((1 << n) - 1);
        if !weight(x).is_multiple_of(2) {
            x ^= 1;
        }
        prop_assume!(!c.contains(x));
        let d = c.neighbor(x).unwrap();
        prop_assert!(d.is_self_dual());
        prop_assert_eq!(d.dim(), c.dim());
        prop_assert!(d.contains(x));
        prop_assert_eq!(common_dim(&c, &d), c.dim() - 1);
        Ok(())
    }))
}

/// dim(A ∩ B) = dim A + dim B − dim(A + B).
fn common_dim(a: &BinaryCode, b: &BinaryCode) -> usize {
    let sum = BinaryCode::from_rows(a.len(), a.rows().iter().chain(b.rows()).copied()).unwrap();
    a.dim() + b.dim() - sum.dim()
}

/// Histogram and minimum distance of the span of `rows`, by brute force
/// over all 2^k combinations with duplicates removed.
fn naive(rows: &[Word], w_max: usize) -> (Vec<u64>, Option<usize>) {
    let span: std::collections::HashSet<Word> = (0u32..1 << rows.len())
        .map(|m| {
            rows.iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .fold(0, |a, (_, &r)| a ^ r)
        })
        .collect();
    let mut hist = vec![0u64; w_max + 1];
    for &c in &span {
        if let Some(h) = hist.get_mut(c.count_ones() as usize) {
            *h += 1;
        }
    }
    let d = span.iter().filter(|&&c| c != 0).map(|c| c.count_ones() as usize).min();
    (hist, d)
}

pub fn enumeration_matches_oracle() -> Result<(), String> {
    let strat = (8..72usize, 1..13usize).prop_flat_map(|(n, k)| {
        (Just(n), prop::collection::vec(any::<u128>(), k), 0..20usize)
    });
    finish(runner(9).run(&strat, |(n, raw, w_max)| {
        let rows: Vec<Word> = raw.iter().map(|&r| r & ((1 << n) - 1)).collect();
        let code = BinaryCode::from_rows(n, rows.iter().copied()).unwrap();
        // counts stop at weight n
        let (hist, d) = naive(&rows, w_max.min(n));
        for engine in [Engine::Full, Engine::InfoSets, Engine::Auto] {
            let p = code.weight_counts_with(w_max, engine).unwrap();
            prop_assert_eq!(&p.counts, &hist, "{:?}", engine);
        }
        prop_assert_eq!(code.min_distance().unwrap(), d);
        Ok(())
    }))
}
pub type Suite = fn() -> Result<(), String>;

/// All suites, in reporting order.
#[allow(dead_code)]
pub fn suites() -> Vec<(&'static str, Suite)> {
    vec![
        ("omega additivity", omega_additive),
        ("omega multiplicativity (sigma layouts)", omega_multiplicative),
        ("omega transpose (sigma layouts)", omega_transpose),
        ("self-duality criterion equivalence", selfdual_criterion),
        ("G-invariance over F2 (sigma layouts)", g_invariance),
        ("gray linearity/injectivity/weights", gray_linear_injective),
        ("gray self-duality transport", gray_selfdual_transport),
        ("neighbor properties", neighbor_properties),
        ("enumeration vs naive oracle", enumeration_matches_oracle),
    ]
}
