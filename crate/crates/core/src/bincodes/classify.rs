//! Reading (β, γ) off A_12 and A_14 for extremal self-dual codes of length 64 and 68.
//!
//! W64,1 = 1 + (1312 + 16β) y^12 + (22016 − 64β) y^14 + …
//! W64,2 = 1 + (1312 + 16β) y^12 + (23040 − 64β) y^14 + …
//! W68,1 = 1 + (442 + 4β) y^12 + (10864 − 8β) y^14 + …
//! W68,2 = 1 + (442 + 4β) y^12 + (14960 − 8β − 256γ) y^14 + …,  0 ≤ γ ≤ 9

use std::fmt;
use std::str::FromStr;

use super::WeightProfile;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    W64_1,
    W64_2,
    W68_1,
    W68_2,
    Unknown,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::W64_1 => "W64_1",
            Family::W64_2 => "W64_2",
            Family::W68_1 => "W68_1",
            Family::W68_2 => "W68_2",
            Family::Unknown => "unknown",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "W64_1" => Ok(Family::W64_1),
            "W64_2" => Ok(Family::W64_2),
            "W68_1" => Ok(Family::W68_1),
            "W68_2" => Ok(Family::W68_2),
            _ => Err(Error::Parse {
                what: "enumerator family",
                token: s.to_string(),
                position: None,
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumeratorClass {
    pub family: Family,
    pub beta: i64,
    pub gamma: Option<i64>,
}

impl EnumeratorClass {
    const UNKNOWN: EnumeratorClass = EnumeratorClass {
        family: Family::Unknown,
        beta: 0,
        gamma: None,
    };
}

impl fmt::Display for EnumeratorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.gamma) {
            (Family::Unknown, _) => f.write_str("unknown"),
            (fam, Some(g)) => write!(f, "{fam} gamma={g} beta={}", self.beta),
            (fam, None) => write!(f, "{fam} beta={}", self.beta),
        }
    }
}

/// Requires an exact profile through weight 14 with no words of weight 1..=11.
pub fn classify_enumerator(n: usize, profile: &WeightProfile) -> EnumeratorClass {
    if !profile.exact || profile.w_max() < 14 || (1..12).any(|w| profile.get(w) != 0) {
        return EnumeratorClass::UNKNOWN;
    }
    let a12 = profile.get(12) as i64;
    let a14 = profile.get(14) as i64;
    let class = |family, beta, gamma| EnumeratorClass { family, beta, gamma };
    match n {
        64 => {
            let d = a12 - 1312;
            if d % 16 != 0 {
                return EnumeratorClass::UNKNOWN;
            }
            let beta = d / 16;
            if a14 == 22016 - 64 * beta {
                class(Family::W64_1, beta, None)
            } else if a14 == 23040 - 64 * beta {
                class(Family::W64_2, beta, None)
            } else {
                EnumeratorClass::UNKNOWN
            }
        }
        68 => {
            let d = a12 - 442;
            if d % 4 != 0 {
                return EnumeratorClass::UNKNOWN;
            }
            let beta = d / 4;
            if a14 == 10864 - 8 * beta {
                return class(Family::W68_1, beta, None);
            }
            let rest = 14960 - 8 * beta - a14;
            if rest % 256 == 0 && (0..=9).contains(&(rest / 256)) {
                class(Family::W68_2, beta, Some(rest / 256))
            } else {
                EnumeratorClass::UNKNOWN
            }
        }
        _ => EnumeratorClass::UNKNOWN,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(a12: u64, a14: u64) -> WeightProfile {
        let mut counts = vec![0; 15];
        counts[0] = 1;
        counts[12] = a12;
        counts[14] = a14;
        WeightProfile { counts, exact: true }
    }

    #[test]
    fn length_64() {
        let c = classify_enumerator(64, &profile(1312, 23040));
        assert_eq!((c.family, c.beta, c.gamma), (Family::W64_2, 0, None));
        let c = classify_enumerator(64, &profile(1312 + 16 * 14, 22016 - 64 * 14));
        assert_eq!((c.family, c.beta), (Family::W64_1, 14));
        assert_eq!(classify_enumerator(64, &profile(1313, 23040)).family, Family::Unknown);
    }

    #[test]
    fn length_68() {
        let c = classify_enumerator(68, &profile(854, 13112));
        assert_eq!((c.family, c.beta, c.gamma), (Family::W68_2, 103, Some(4)));
        let c = classify_enumerator(68, &profile(442, 14960));
        assert_eq!((c.family, c.beta, c.gamma), (Family::W68_2, 0, Some(0)));
        let c = classify_enumerator(68, &profile(442 + 4 * 30, 10864 - 240));
        assert_eq!((c.family, c.beta), (Family::W68_1, 30));
        // γ = 10 is outside the admissible range
        assert_eq!(classify_enumerator(68, &profile(442, 14960 - 2560)).family, Family::Unknown);
    }

    #[test]
    fn rejects_short_or_light_profiles() {
        let mut p = profile(854, 13112);
        p.counts[10] = 1;
        assert_eq!(classify_enumerator(68, &p).family, Family::Unknown);
        let short = WeightProfile { counts: vec![1; 13], exact: true };
        assert_eq!(classify_enumerator(68, &short).family, Family::Unknown);
        assert_eq!(classify_enumerator(72, &profile(854, 13112)).family, Family::Unknown);
    }

    #[test]
    fn family_names_parse() {
        for f in [Family::W64_1, Family::W64_2, Family::W68_1, Family::W68_2] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert_eq!("w68-2".parse::<Family>().unwrap(), Family::W68_2);
        assert!("W72".parse::<Family>().is_err());
    }
}
