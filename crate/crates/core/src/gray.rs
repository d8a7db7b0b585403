//! Gray maps from ring vectors to binary (or smaller-ring) vectors.
//!
//! Vector maps are laid out block-wise: for a + bu ↦ (b, a+b) the output is
//! the whole b-vector followed by the whole (a+b)-vector. Bits are `u8`
//! values 0/1 so images longer than one machine word are fine.

use crate::bincodes::Word;
use crate::error::{Error, Result};
use crate::ring::{Elem, Ring, RingKind};

fn expect(ring: &Ring, kinds: &[RingKind]) -> Result<()> {
    if kinds.contains(&ring.kind()) {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: ring.kind().to_string(),
            right: kinds.iter().map(ToString::to_string).collect::<Vec<_>>().join("|"),
        })
    }
}

fn split<F: Fn(Elem) -> (Elem, Elem)>(x: &[Elem], f: F) -> Vec<Elem> {
    let (first, second): (Vec<Elem>, Vec<Elem>) = x.iter().map(|&e| f(e)).unzip();
    [first, second].concat()
}

/// F4 → F2²: aω + bω̄ ↦ (a, b).
pub fn psi_f4(ring: &Ring, x: &[Elem]) -> Result<Vec<u8>> {
    expect(ring, &[RingKind::F4])?;
    // c0 + c1ω = b + (a+b)ω
    Ok(split(x, |e| ((e ^ (e >> 1)) & 1, e & 1)))
}

/// F2+uF2 → F2²: a + bu ↦ (b, a+b).
pub fn phi_f2u(ring: &Ring, x: &[Elem]) -> Result<Vec<u8>> {
    expect(ring, &[RingKind::F2u, RingKind::Rk(1)])?;
    Ok(split(x, |e| (e >> 1, (e ^ (e >> 1)) & 1)))
}

/// F4+uF4 → (F2+uF2)²: aω + bω̄ ↦ (a, b).
pub fn psi_f4u(ring: &Ring, x: &[Elem]) -> Result<Vec<Elem>> {
    expect(ring, &[RingKind::F4u])?;
    // e = X + Yω with X, Y ∈ F2+uF2; then b = X and a = X + Y
    Ok(split(x, |e| {
        let big_x = (e & 1) | (e >> 1 & 2);
        let big_y = (e >> 1 & 1) | (e >> 2 & 2);
        (big_x ^ big_y, big_x)
    }))
}

/// F4+uF4 → F4²: a + bu ↦ (b, a+b).
pub fn phi_f4u(ring: &Ring, x: &[Elem]) -> Result<Vec<Elem>> {
    expect(ring, &[RingKind::F4u])?;
    Ok(split(x, |e| (e >> 2, (e ^ (e >> 2)) & 3)))
}

/// φ_{F2+uF2} ∘ ψ_{F4+uF4}: length n over F4+uF4 to 4n bits.
pub fn binary_image_f4u(ring: &Ring, x: &[Elem]) -> Result<Vec<u8>> {
    let mid = psi_f4u(ring, x)?;
    phi_f2u(&Ring::new(RingKind::F2u)?, &mid)
}

/// φ_k on R_k = R_{k−1}[u_k]: a + b·u_k ↦ (φ_{k−1}(b), φ_{k−1}(a+b)).
pub fn phi_k(ring: &Ring, x: &[Elem]) -> Result<Vec<u8>> {
    let RingKind::Rk(k) = ring.kind() else {
        return Err(Error::RingMismatch {
            left: ring.kind().to_string(),
            right: "r1|r2|r3".into(),
        });
    };
    let elems: Vec<u32> = x.iter().map(|&e| e as u32).collect();
    Ok(phi_k_raw(k as u32, &elems))
}

fn phi_k_raw(k: u32, x: &[u32]) -> Vec<u8> {
    if k == 0 {
        return x.iter().map(|&e| e as u8).collect();
    }
    // monomial bit S with u_k ∈ S sits in the top half of the 2^k coordinates
    let half = 1u32 << (k - 1);
    let low_mask = (1u32 << half) - 1;
    let (b, apb): (Vec<u32>, Vec<u32>) = x
        .iter()
        .map(|&e| {
            let (a, b) = (e & low_mask, e >> half);
            (b, a ^ b)
        })
        .unzip();
    [phi_k_raw(k - 1, &b), phi_k_raw(k - 1, &apb)].concat()
}

/// Position of monomial u^S in lexicographic order with u_1 most significant.
fn lex_position(k: u32, s: u32) -> u32 {
    (0..k).filter(|i| s >> i & 1 == 1).map(|i| 1 << (k - 1 - i)).sum()
}

/// Ψ_Δ for q = 2, Δ = 2^k: the basis monomial a maps to the indicator of all
/// monomials b with supp(b) ⊆ supp(a); one Δ-bit block per symbol.
pub fn psi_delta(ring: &Ring, x: &[Elem]) -> Result<Vec<u8>> {
    let RingKind::Rk(k) = ring.kind() else {
        return Err(Error::RingMismatch {
            left: ring.kind().to_string(),
            right: "r1|r2|r3".into(),
        });
    };
    let k = k as u32;
    let delta = 1usize << k;
    let mut out = vec![0u8; delta * x.len()];
    for (pos, &e) in x.iter().enumerate() {
        let block = &mut out[pos * delta..(pos + 1) * delta];
        for a in (0..delta as u32).filter(|a| (e as u32) >> a & 1 == 1) {
            for b in (0..delta as u32).filter(|b| b & !a == 0) {
                block[lex_position(k, b) as usize] ^= 1;
            }
        }
    }
    Ok(out)
}

/// The standard binary image for each supported ring.
pub fn binary_image(ring: &Ring, x: &[Elem]) -> Result<Vec<u8>> {
    match ring.kind() {
        RingKind::F2 => Ok(x.to_vec()),
        RingKind::F4 => psi_f4(ring, x),
        RingKind::F2u => phi_f2u(ring, x),
        RingKind::F4u => binary_image_f4u(ring, x),
        RingKind::Rk(_) => phi_k(ring, x),
    }
}

/// Hamming weight of the binary image of a single symbol.
pub fn lee_weight(ring: &Ring, e: Elem) -> Result<usize> {
    Ok(binary_image(ring, &[e])?.iter().map(|&b| b as usize).sum())
}

pub fn pack_bits(bits: &[u8]) -> Result<Word> {
    if bits.len() > crate::bincodes::MAX_LEN {
        return Err(Error::TooLong(bits.len()));
    }
    Ok(bits
        .iter()
        .enumerate()
        .fold(0, |w, (i, &b)| w | (Word::from(b & 1) << i)))
}

pub fn format_bit_vec(bits: &[u8]) -> String {
    bits.iter().map(|&b| char::from(b'0' + b)).collect()
}
