//! Published inputs and expected outputs, bound to runnable pipelines.
//!
//! Every fixture quotes its table cell verbatim; the pipelines below are the
//! only place that knows how a table row turns into a code.

use std::fmt;
use std::str::FromStr;

use crate::bincodes::{classify_enumerator, BinaryCode, EnumeratorClass, Family, Word};
use crate::composite::{preset, Layout};
use crate::construct::{build_pure_generator, extend_code, search_random, ExtensionSpec, RingCode, SearchFilter};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupKind};
use crate::group_ring::GroupRingElement;
use crate::matrix::RingMatrix;
use crate::ring::{Ring, RingKind};

pub const HAMMING_V: &str = "0,0,0,1,0,1,1,1";
/// Rows of Ω(v) as displayed; the displayed 4-row form is only equivalent.
pub const HAMMING_OMEGA: [&str; 8] = [
    "00010111", "00101011", "01001101", "10001110", "11010100", "11101000", "01110001", "10110010",
];

/// u(1+x+…+x⁶) + x⁷ + u(x²y+x³y) + (x⁵y+x⁶y+x⁷y) over R_1.
pub const EXAMPLE5_V: &str = "u,u,u,u,u,u,u,1,0,0,u,u,0,1,1,1";

/// First rows of A and B in σ(v) = [[A, B], [Bᵀ, Aᵀ]] over F2 D16.
pub const EXAMPLE6_ROWS: [(&str, &str); 3] = [
    ("0,0,0,0,0,1,0,1", "0,0,0,1,1,1,1,1"),
    ("0,0,0,0,0,1,1,1", "0,1,0,1,1,1,1,1"),
    ("0,0,0,0,1,1,1,1", "0,0,0,1,0,0,1,1"),
];

/// r_{A1}, r_{B1}, r_{A2}, r_{B2}, which are α_1..α_16 in order.
pub const EXAMPLE7_V: &str = "0,0,1,0,0,0,1,0,0,0,1,0,1,1,1,1";

pub const TABLE1_V: &str = "0,w,u+1,u+1,u,wu+u,w,wu+u+1";

pub const TABLE2_C: &str = "1";
pub const TABLE2_X: &str = "0,3,3,u,3,1,3,3,3,3,1,1,0,3,3,1,3,1,0,u,1,3,u,3,0,1,3,u,3,0,3,1";
pub const TABLE2_GAMMA_BETA: (i64, i64) = (4, 103);

/// (x_i, γ, β) for N_(i+1); the strings are coordinates 35..68.
pub const TABLE3: [(&str, i64, i64); 13] = [
    ("1111011010011101111111100100111110", 4, 101),
    ("0110100100111101111011111110111011", 6, 145),
    ("0000100000010000011101110110000101", 7, 152),
    ("1111111100000010000111001100101011", 7, 143),
    ("0110010010100110110111101011111111", 8, 162),
    ("1100001011011111001111110010001011", 9, 174),
    ("1110010010100011111100101110001100", 9, 167),
    ("0011000000000110110101001101100000", 9, 159),
    ("1001101110001110110000111101000011", 9, 158),
    ("1001011111100101110001001011110110", 9, 157),
    ("1010101101101101110111011111111010", 9, 152),
    ("1111010110110000110111011010101010", 7, 131),
    ("1000011111111011110110001010110010", 6, 117),
];

/// (i, x, γ, β): neighbours of N_(i), coordinates 35..68.
pub const TABLE4: [(usize, &str, i64, i64); 41] = [
    (7, "0001000010111101010000011101000110", 7, 141),
    (7, "0100101001111001101010101010101110", 8, 150),
    (7, "0111001010000000100011000001011100", 8, 151),
    (7, "1001100101100110101111100011101101", 8, 152),
    (7, "0011100111101011010101111011100100", 9, 164),
    (7, "1000000010011000001010001011010011", 9, 165),
    (7, "0010010111100000100111110000000000", 9, 166),
    (7, "0010101001010010101010100000000011", 9, 168),
    (7, "1000101001011010000100100100010010", 9, 170),
    (7, "0110110001000000000110000010011110", 9, 172),
    (8, "0111100101101011111001111110111101", 7, 134),
    (8, "1000001110101000000101110110100010", 7, 135),
    (8, "1111010110000000111001101001000000", 7, 136),
    (8, "1111000111011000110111001101111110", 7, 137),
    (8, "0010000011001100110010010001100001", 7, 138),
    (8, "1111001001110111001001100101001100", 7, 139),
    (8, "1011011001100110111011100100011000", 8, 144),
    (8, "1111101110010110001101111111010010", 8, 147),
    (8, "0011000110101010001011010101100101", 8, 148),
    (8, "0110110000000110010110011110100110", 8, 149),
    (8, "0001101100111000101110011001001001", 9, 160),
    (8, "1000001000111101010110000101010001", 9, 161),
    (8, "1110100010110010110000010010000101", 9, 162),
    (8, "0100011010001111001111101001011111", 9, 163),
    (10, "1101100111000110001101001101111000", 7, 132),
    (10, "1111000110101101101011011011000011", 8, 143),
    (10, "1110110011011110001010110001101011", 8, 145),
    (10, "0010111101110011010001011100111110", 8, 146),
    (10, "1011010011010100010100010010111010", 9, 156),
    (11, "0101000101100110011001011000111100", 8, 139),
    (11, "1011111100100001110111000101111100", 8, 140),
    (11, "1100011001000111000000110111010110", 8, 141),
    (11, "1101111110110100001101111111011101", 9, 151),
    (11, "0001100111110011010110111001111010", 9, 154),
    (11, "0100100111101001001010101111000001", 9, 155),
    (12, "1100011100101100111101111001101100", 6, 121),
    (12, "1111100111100011111001011110101111", 6, 123),
    (12, "0001101000001011101010000001100001", 6, 124),
    (13, "0101110011001101000001001000001000", 5, 110),
    (13, "1011011100110111011001011010101001", 6, 120),
    (13, "1000111010010011011000110000101011", 6, 122),
];

/// Offset of the 34 published bits inside a length-68 word.
const NEIGHBOR_OFFSET: usize = 34;

pub fn neighbor_vector(bits: &str) -> Result<Word> {
    let (len, w) = crate::bincodes::parse_bits(bits)?;
    if len != 34 {
        return Err(Error::LengthMismatch { expected: 34, got: len });
    }
    Ok(w << NEIGHBOR_OFFSET)
}

fn element(group: GroupKind, ring: RingKind, tokens: &str) -> Result<GroupRingElement> {
    GroupRingElement::parse(FiniteGroup::shared(&group)?, Ring::shared(ring)?, tokens)
}

pub fn hamming_omega() -> Result<RingMatrix> {
    let v = element(GroupKind::Quaternion8, RingKind::F2, HAMMING_V)?;
    Layout::Composite(preset("q8-c2c2")?).pattern()?.matrix(&v)
}

/// C(v) = ⟨Ω(v)⟩ over F2 Q8.
pub fn hamming_code() -> Result<BinaryCode> {
    RingCode::from_matrix(&hamming_omega()?).binary_image()
}

/// ⟨Ω(v)⟩ over R_1 with all four blocks C8.
pub fn example5_ring_code() -> Result<RingCode> {
    let v = element(GroupKind::Dihedral(16), RingKind::Rk(1), EXAMPLE5_V)?;
    let omega = Layout::Composite(preset("d16-c8")?).pattern()?.matrix(&v)?;
    Ok(RingCode::from_matrix(&omega))
}

pub fn example6_code(row: usize) -> Result<BinaryCode> {
    let (a, b) = EXAMPLE6_ROWS[row];
    let v = element(GroupKind::Dihedral(16), RingKind::F2, &format!("{a},{b}"))?;
    build_pure_generator(&v, &Layout::Sigma(GroupKind::Dihedral(16)))?.binary_image()
}

pub fn example7_code() -> Result<BinaryCode> {
    let v = element(GroupKind::Dihedral(16), RingKind::F2, EXAMPLE7_V)?;
    build_pure_generator(&v, &Layout::Composite(preset("d16-ex7")?))?.binary_image()
}

/// [I | Ω(v)] over F4+uF4 with the length-16 layout.
pub fn table1_ring_code() -> Result<RingCode> {
    let v = element(GroupKind::Dihedral(8), RingKind::F4u, TABLE1_V)?;
    build_pure_generator(&v, &Layout::Composite(preset("d8-sect7")?))
}

/// The length-34 extension over F2+uF2 of the ψ image of the length-64 code.
pub fn table2_ring_code() -> Result<RingCode> {
    let psi = table1_ring_code()?.psi_image()?;
    let r = psi.ring().clone();
    let ext = ExtensionSpec {
        c: r.parse_elem(TABLE2_C)?,
        x: r.parse_vector(TABLE2_X)?,
    };
    extend_code(&psi, &ext)
}

pub fn table2_code() -> Result<BinaryCode> {
    table2_ring_code()?.binary_image()
}

/// N_(1), …, N_(13).
pub fn table3_chain(start: &BinaryCode) -> Result<Vec<BinaryCode>> {
    let xs = TABLE3
        .iter()
        .map(|(bits, _, _)| neighbor_vector(bits))
        .collect::<Result<Vec<_>>>()?;
    start.neighbor_chain(&xs)
}

pub fn classify68(code: &BinaryCode) -> Result<EnumeratorClass> {
    Ok(classify_enumerator(68, &code.weight_counts(14)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReproTarget {
    HammingQ8,
    Example5D16,
    Table1,
    Table2,
    Table3Chain,
    Table4Neighbors,
    Example6Sigma,
    Example7Omega,
}

impl ReproTarget {
    pub const ALL: [ReproTarget; 8] = [
        ReproTarget::HammingQ8,
        ReproTarget::Example5D16,
        ReproTarget::Table1,
        ReproTarget::Table2,
        ReproTarget::Table3Chain,
        ReproTarget::Table4Neighbors,
        ReproTarget::Example6Sigma,
        ReproTarget::Example7Omega,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReproTarget::HammingQ8 => "hamming-q8",
            ReproTarget::Example5D16 => "example5-d16",
            ReproTarget::Table1 => "table1-64",
            ReproTarget::Table2 => "table2-68",
            ReproTarget::Table3Chain => "table3-chain",
            ReproTarget::Table4Neighbors => "table4-neighbors",
            ReproTarget::Example6Sigma => "example6-sigma",
            ReproTarget::Example7Omega => "example7-omega",
        }
    }
}

impl fmt::Display for ReproTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ReproTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ReproTarget::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "reproduction target",
                token: s.to_string(),
                position: None,
            })
    }
}

/// One compared quantity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub expected: String,
    pub got: String,
}

impl Check {
    fn new(label: impl Into<String>, expected: impl fmt::Display, got: impl fmt::Display) -> Check {
        Check {
            label: label.into(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }

    pub fn ok(&self) -> bool {
        self.expected == self.got
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "{} {} OK", self.label, self.got)
        } else {
            write!(f, "{} expected {} got {} MISMATCH", self.label, self.expected, self.got)
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub target: ReproTarget,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }
}

fn params(code: &BinaryCode) -> Result<String> {
    let d = code.min_distance()?.unwrap_or(0);
    Ok(format!("[{},{},{}]", code.len(), code.dim(), d))
}

fn gamma_beta(c: &EnumeratorClass) -> String {
    match (c.family, c.gamma) {
        (Family::W68_2, Some(g)) => format!("({g},{})", c.beta),
        _ => c.to_string(),
    }
}

pub fn run(target: ReproTarget) -> Result<Report> {
    let mut checks = Vec::new();
    match target {
        ReproTarget::HammingQ8 => {
            let c = hamming_code()?;
            checks.push(Check::new("parameters", "[8,4,4]", params(&c)?));
            checks.push(Check::new("self-dual", true, c.is_self_dual()));
            let rows: Vec<String> = hamming_omega()?
                .to_rows()
                .iter()
                .map(|r| r.iter().map(|&e| if e == 0 { '0' } else { '1' }).collect())
                .collect();
            checks.push(Check::new("omega rows", HAMMING_OMEGA.join(" "), rows.join(" ")));
        }
        ReproTarget::Example5D16 => {
            let rc = example5_ring_code()?;
            checks.push(Check::new("self-dual over R1", true, rc.is_self_dual()));
            let size = rc.size();
            checks.push(Check::new("|C| = 4^k", "4^8", format!("4^{}", size.log2 / 2)));
            let b = rc.binary_image()?;
            checks.push(Check::new("binary image", "[32,16,8]", params(&b)?));
            checks.push(Check::new("binary self-dual", true, b.is_self_dual()));
        }
        ReproTarget::Table1 => {
            let rc = table1_ring_code()?;
            checks.push(Check::new("self-dual over F4+uF4", true, rc.is_self_dual()));
            let b = rc.binary_image()?;
            checks.push(Check::new("binary image", "[64,32,12]", params(&b)?));
            checks.push(Check::new("binary self-dual", true, b.is_self_dual()));
            let p = b.weight_counts(14)?;
            checks.push(Check::new("A12", 1312, p.get(12)));
            checks.push(Check::new("A14", 23040, p.get(14)));
            checks.push(Check::new("class", "W64_2 beta=0", classify_enumerator(64, &p)));
        }
        ReproTarget::Table2 => {
            let rc = table2_ring_code()?;
            checks.push(Check::new("self-dual over F2+uF2", true, rc.is_self_dual()));
            let b = rc.binary_image()?;
            checks.push(Check::new("binary image", "[68,34,12]", params(&b)?));
            checks.push(Check::new("binary self-dual", true, b.is_self_dual()));
            let p = b.weight_counts(14)?;
            checks.push(Check::new("A12", 854, p.get(12)));
            checks.push(Check::new("A14", 13112, p.get(14)));
            let (g, beta) = TABLE2_GAMMA_BETA;
            checks.push(Check::new(
                "(gamma,beta)",
                format!("({g},{beta})"),
                gamma_beta(&classify_enumerator(68, &p)),
            ));
        }
        ReproTarget::Table3Chain => {
            let chain = table3_chain(&table2_code()?)?;
            for (i, (code, &(_, g, b))) in chain.iter().zip(TABLE3.iter()).enumerate() {
                let got = gamma_beta(&classify68(code)?);
                checks.push(Check::new(format!("N({})", i + 1), format!("({g},{b})"), got));
            }
        }
        ReproTarget::Table4Neighbors => {
            let start = table2_code()?;
            let chain = table3_chain(&start)?;
            for &(i, bits, g, b) in TABLE4.iter() {
                let base = if i == 0 { &start } else { &chain[i - 1] };
                let code = base.neighbor(neighbor_vector(bits)?)?;
                let got = gamma_beta(&classify68(&code)?);
                checks.push(Check::new(format!("N({i})+{bits}"), format!("({g},{b})"), got));
            }
        }
        ReproTarget::Example6Sigma => {
            let f2 = Ring::shared(RingKind::F2)?;
            let layout = Layout::Sigma(GroupKind::Dihedral(16));
            let filter = SearchFilter {
                min_d: Some(8),
                family: None,
            };
            let found = search_random(&f2, &layout, 4000, 6, &filter)?;
            for row in 0..EXAMPLE6_ROWS.len() {
                let c = example6_code(row)?;
                checks.push(Check::new(format!("C{} parameters", row + 1), "[32,16,8]", params(&c)?));
                checks.push(Check::new(format!("C{} self-dual", row + 1), true, c.is_self_dual()));
                let profile = c.weight_counts(14)?.counts;
                let seen = found.iter().any(|f| f.profile == profile);
                checks.push(Check::new(format!("C{} enumerator found by search", row + 1), true, seen));
            }
        }
        ReproTarget::Example7Omega => {
            let c = example7_code()?;
            checks.push(Check::new("parameters", "[32,16,8]", params(&c)?));
            checks.push(Check::new("self-dual", true, c.is_self_dual()));
        }
    }
    Ok(Report { target, checks })
}
