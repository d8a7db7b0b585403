//! Elements of the group ring RG and the matrix σ(v).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::matrix::RingMatrix;
use crate::ring::{Elem, Ring};

/// v = Σ coeffs[i]·g_i over the group's fixed listing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: Arc<FiniteGroup>,
    ring: Arc<Ring>,
    coeffs: Vec<Elem>,
}

impl GroupRingElement {
    pub fn new(group: Arc<FiniteGroup>, ring: Arc<Ring>, coeffs: Vec<Elem>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::LengthMismatch {
                expected: group.order(),
                got: coeffs.len(),
            });
        }
        for &c in &coeffs {
            ring.check_index(c as usize)?;
        }
        Ok(GroupRingElement { group, ring, coeffs })
    }

    /// Parses comma-separated ring tokens in listing order.
    pub fn parse(group: Arc<FiniteGroup>, ring: Arc<Ring>, text: &str) -> Result<Self> {
        let coeffs = ring.parse_vector(text)?;
        Self::new(group, ring, coeffs)
    }

    pub fn zero(group: Arc<FiniteGroup>, ring: Arc<Ring>) -> Self {
        let coeffs = vec![0; group.order()];
        GroupRingElement { group, ring, coeffs }
    }

    /// The unity 1·g_1.
    pub fn one(group: Arc<FiniteGroup>, ring: Arc<Ring>) -> Self {
        let mut e = Self::zero(group, ring);
        e.coeffs[0] = e.ring.one();
        e
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, g: usize) -> Elem {
        self.coeffs[g]
    }

    pub fn to_tokens(&self) -> String {
        self.ring.format_vector(&self.coeffs)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring.kind() != other.ring.kind() {
            return Err(Error::RingMismatch {
                left: self.ring.kind().to_string(),
                right: other.ring.kind().to_string(),
            });
        }
        if self.group != other.group {
            return Err(Error::GroupMismatch {
                left: self.group.name().to_string(),
                right: other.group.name().to_string(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.ring.add(a, b))
            .collect();
        Ok(GroupRingElement {
            coeffs,
            ..self.clone()
        })
    }

    /// Convolution: coefficient of g_k is Σ_{g_i g_j = g_k} α_i β_j.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let (r, g) = (&self.ring, &self.group);
        let mut coeffs = vec![0; g.order()];
        for (i, &a) in self.coeffs.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let k = g.mul(i, j);
                coeffs[k] = r.add(coeffs[k], r.mul(a, b));
            }
        }
        Ok(GroupRingElement {
            coeffs,
            ..self.clone()
        })
    }

    /// vᵀ = Σ α_i g_i⁻¹.
    pub fn involution(&self) -> Self {
        let g = &self.group;
        let coeffs = (0..g.order()).map(|i| self.coeffs[g.inv(i)]).collect();
        GroupRingElement {
            coeffs,
            ..self.clone()
        }
    }

    /// h·v as a group-ring element.
    pub fn left_translate(&self, h: usize) -> Self {
        let g = &self.group;
        let mut coeffs = vec![0; g.order()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            coeffs[g.mul(h, i)] = a;
        }
        GroupRingElement {
            coeffs,
            ..self.clone()
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == self.ring.one() && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// σ(v) with entry (j, i) = α_{g_j⁻¹ g_i}.
    pub fn sigma_matrix(&self) -> RingMatrix {
        let g = &self.group;
        let n = g.order();
        let mut m = RingMatrix::zeros(self.ring.clone(), n, n);
        for j in 0..n {
            for i in 0..n {
                m.set(j, i, self.coeffs[g.left_quotient(j, i)]);
            }
        }
        m
    }

    /// v·vᵀ = 1. Only defined in characteristic 2, where −1 = 1.
    pub fn is_unitary_unit(&self) -> Result<bool> {
        if self.ring.characteristic() != 2 {
            return Err(Error::Characteristic);
        }
        Ok(self.mul(&self.involution())?.is_one())
    }
}
