//! Block layouts for the composite matrix Ω(v).
//!
//! An n×n matrix is cut into r×r blocks. A `Natural` block at band
//! (j0, k0) holds α(g_{j0+m}⁻¹ g_{k0+t}) at (m, t), as σ(v) does. An
//! `Aux(H)` block holds α(g_{j0}⁻¹ g_{k0+s}) where s is the listing index
//! of h_m⁻¹ h_t in H. Because every listing starts at the identity, the
//! first row of either kind is the same.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupKind};
use crate::group_ring::GroupRingElement;
use crate::matrix::RingMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockKind {
    Natural,
    Aux(GroupKind),
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockKind::Natural => f.write_str("nat"),
            BlockKind::Aux(k) => write!(f, "aux:{k}"),
        }
    }
}

impl FromStr for BlockKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "nat" {
            return Ok(BlockKind::Natural);
        }
        match s.strip_prefix("aux:") {
            Some(g) => Ok(BlockKind::Aux(g.parse()?)),
            None => Err(Error::Parse {
                what: "block",
                token: s.to_string(),
                position: None,
            }),
        }
    }
}

/// First structural problem found in a [`CompositeSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecDiagnostic {
    #[error("block size {r} does not divide group order {n}")]
    NotDivisor { n: usize, r: usize },
    #[error("block size {r} must satisfy 1 < r < {n}")]
    BlockSizeRange { n: usize, r: usize },
    #[error("expected {expected} blocks, found {got}")]
    BlockCount { expected: usize, got: usize },
    #[error("block {block}: auxiliary group {group} has order {got}, expected {expected}")]
    AuxOrder {
        block: usize,
        group: String,
        expected: usize,
        got: usize,
    },
    #[error("block {block}: auxiliary group {group} is not constructible")]
    AuxGroup { block: usize, group: String },
    #[error("all blocks are natural; the layout is just σ(v)")]
    AllNatural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeSpec {
    pub group: GroupKind,
    pub block_size: usize,
    /// Row-major grid of (n/r)² blocks.
    pub blocks: Vec<BlockKind>,
}

impl CompositeSpec {
    pub fn new(group: GroupKind, block_size: usize, blocks: Vec<BlockKind>) -> Result<Self> {
        let spec = CompositeSpec {
            group,
            block_size,
            blocks,
        };
        let g = FiniteGroup::new(&spec.group)?;
        spec.validate(&g).map_err(Error::Spec)?;
        Ok(spec)
    }

    pub fn validate(&self, g: &FiniteGroup) -> std::result::Result<(), SpecDiagnostic> {
        let (n, r) = (g.order(), self.block_size);
        if r <= 1 || r >= n {
            return Err(SpecDiagnostic::BlockSizeRange { n, r });
        }
        if n % r != 0 {
            return Err(SpecDiagnostic::NotDivisor { n, r });
        }
        let bands = n / r;
        if self.blocks.len() != bands * bands {
            return Err(SpecDiagnostic::BlockCount {
                expected: bands * bands,
                got: self.blocks.len(),
            });
        }
        for (block, b) in self.blocks.iter().enumerate() {
            if let BlockKind::Aux(kind) = b {
                let h = FiniteGroup::new(kind).map_err(|_| SpecDiagnostic::AuxGroup {
                    block,
                    group: kind.to_string(),
                })?;
                if h.order() != r {
                    return Err(SpecDiagnostic::AuxOrder {
                        block,
                        group: kind.to_string(),
                        expected: r,
                        got: h.order(),
                    });
                }
            }
        }
        if self.blocks.iter().all(|b| *b == BlockKind::Natural) {
            return Err(SpecDiagnostic::AllNatural);
        }
        Ok(())
    }

    /// Parses the plain-text layout: `group <kind>`, `r <int>`, then the block tokens.
    pub fn parse(text: &str) -> Result<Self> {
        let mut words = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);
        let mut expect = |key: &'static str| -> Result<String> {
            match (words.next(), words.next()) {
                (Some(k), Some(v)) if k == key => Ok(v.to_string()),
                (k, _) => Err(Error::Parse {
                    what: "spec header",
                    token: k.unwrap_or("").to_string(),
                    position: None,
                }),
            }
        };
        let group: GroupKind = expect("group")?.parse()?;
        let r_tok = expect("r")?;
        let block_size = r_tok.parse().map_err(|_| Error::Parse {
            what: "block size",
            token: r_tok.clone(),
            position: None,
        })?;
        let blocks = words
            .enumerate()
            .map(|(i, w)| {
                w.parse().map_err(|_| Error::Parse {
                    what: "block",
                    token: w.to_string(),
                    position: Some(i + 1),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        CompositeSpec::new(group, block_size, blocks)
    }

    pub fn to_text(&self) -> String {
        let bands = self.blocks.len().isqrt();
        let mut s = format!("group {}\nr {}\n", self.group, self.block_size);
        for row in self.blocks.chunks(bands.max(1)) {
            let toks: Vec<String> = row.iter().map(ToString::to_string).collect();
            s.push_str(&toks.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Named layouts used by the reproduction targets.
pub const PRESETS: &[&str] = &[
    "q8-c2c2",
    "d8-full-c2c2",
    "d8-c4",
    "d8-sect7",
    "d16-ex7",
    "d16-c8",
];

pub fn preset(name: &str) -> Result<CompositeSpec> {
    use BlockKind::{Aux, Natural};
    use GroupKind::*;
    let (g, r, blocks) = match name {
        "q8-c2c2" => (Quaternion8, 4, vec![Aux(C2xC2), Natural, Natural, Aux(C2xC2)]),
        "d8-full-c2c2" => (Dihedral(8), 4, vec![Aux(C2xC2), Aux(C2xC2), Natural, Natural]),
        "d8-c4" => (Dihedral(8), 4, vec![Aux(Cyclic(4)), Aux(Cyclic(4)), Natural, Natural]),
        "d8-sect7" => (
            Dihedral(8),
            4,
            vec![Aux(CyclicAlt(4)), Aux(C2xC2), Aux(C2xC2), Aux(C2xC2)],
        ),
        "d16-ex7" => (
            Dihedral(16),
            8,
            vec![Aux(C4xC2), Aux(C4xC2), Aux(Dihedral(8)), Aux(Dihedral(8))],
        ),
        "d16-c8" => (Dihedral(16), 8, vec![Aux(CyclicAlt(8)); 4]),
        _ => {
            return Err(Error::Parse {
                what: "preset",
                token: name.to_string(),
                position: None,
            })
        }
    };
    CompositeSpec::new(g, r, blocks)
}

/// Either the plain σ(v) layout or a composite block layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Layout {
    Sigma(GroupKind),
    Composite(CompositeSpec),
}

impl Layout {
    /// Accepts `sigma:<group>`, a preset name, or a spec file path.
    pub fn resolve(arg: &str) -> Result<Layout> {
        if let Some(g) = arg.strip_prefix("sigma:") {
            return Ok(Layout::Sigma(g.parse()?));
        }
        if PRESETS.contains(&arg) {
            return preset(arg).map(Layout::Composite);
        }
        let text = std::fs::read_to_string(arg)?;
        CompositeSpec::parse(&text).map(Layout::Composite)
    }

    pub fn group(&self) -> &GroupKind {
        match self {
            Layout::Sigma(g) => g,
            Layout::Composite(s) => &s.group,
        }
    }

    /// n×n table of group indices: entry (row, col) is the element whose
    /// coefficient lands there.
    pub fn pattern(&self) -> Result<OmegaPattern> {
        let g = FiniteGroup::new(self.group())?;
        let n = g.order();
        let mut idx = vec![0; n * n];
        match self {
            Layout::Sigma(_) => {
                for j in 0..n {
                    for i in 0..n {
                        idx[j * n + i] = g.left_quotient(j, i);
                    }
                }
            }
            Layout::Composite(spec) => {
                spec.validate(&g).map_err(Error::Spec)?;
                let r = spec.block_size;
                let bands = n / r;
                for (b, kind) in spec.blocks.iter().enumerate() {
                    let (j0, k0) = ((b / bands) * r, (b % bands) * r);
                    let aux = match kind {
                        BlockKind::Natural => None,
                        BlockKind::Aux(h) => Some(FiniteGroup::new(h)?),
                    };
                    for m in 0..r {
                        for t in 0..r {
                            let e = match &aux {
                                None => g.left_quotient(j0 + m, k0 + t),
                                Some(h) => g.left_quotient(j0, k0 + h.left_quotient(m, t)),
                            };
                            idx[(j0 + m) * n + k0 + t] = e;
                        }
                    }
                }
            }
        }
        Ok(OmegaPattern {
            group: Arc::new(g),
            idx,
        })
    }
}

/// Coefficient-placement table of Ω for a fixed layout.
#[derive(Debug, Clone)]
pub struct OmegaPattern {
    group: Arc<FiniteGroup>,
    idx: Vec<usize>,
}

impl OmegaPattern {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    #[inline]
    pub fn at(&self, row: usize, col: usize) -> usize {
        self.idx[row * self.order() + col]
    }

    pub fn matrix(&self, v: &GroupRingElement) -> Result<RingMatrix> {
        if v.group().order() != self.order() || v.group().name() != self.group.name() {
            return Err(Error::GroupMismatch {
                left: v.group().name().to_string(),
                right: self.group.name().to_string(),
            });
        }
        let n = self.order();
        let mut m = RingMatrix::zeros(v.ring().clone(), n, n);
        for r in 0..n {
            for c in 0..n {
                m.set(r, c, v.coeff(self.at(r, c)));
            }
        }
        Ok(m)
    }
}

/// Ω(v) for a composite layout.
pub fn omega_matrix(v: &GroupRingElement, spec: &CompositeSpec) -> Result<RingMatrix> {
    Layout::Composite(spec.clone()).pattern()?.matrix(v)
}
