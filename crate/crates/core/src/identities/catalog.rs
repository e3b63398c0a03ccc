use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::exact::Rational;

/// Every identity the engine can build and check, tagged by equation number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Kummer1,
    Kummer2,
    GaussTerminating,
    GaussSecondFloat,
    Kummer2Alt,
    Preece,
    Bailey,
    WatsonFloat,
    PreeceExp,
    BaileyExp,
    BaileyProduct,
    RathiePlus,
    RathieMinus,
    ExpandPlus,
    ExpandMinus,
    ThmPP,
    ThmMM,
    ThmPM,
    SpecialPP,
    SpecialMM,
    SpecialPM,
}

impl IdentityId {
    pub const ALL: [IdentityId; 21] = [
        IdentityId::Kummer1,
        IdentityId::Kummer2,
        IdentityId::GaussTerminating,
        IdentityId::GaussSecondFloat,
        IdentityId::Kummer2Alt,
        IdentityId::Preece,
        IdentityId::Bailey,
        IdentityId::WatsonFloat,
        IdentityId::PreeceExp,
        IdentityId::BaileyExp,
        IdentityId::BaileyProduct,
        IdentityId::RathiePlus,
        IdentityId::RathieMinus,
        IdentityId::ExpandPlus,
        IdentityId::ExpandMinus,
        IdentityId::ThmPP,
        IdentityId::ThmMM,
        IdentityId::ThmPM,
        IdentityId::SpecialPP,
        IdentityId::SpecialMM,
        IdentityId::SpecialPM,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            IdentityId::Kummer1 => "1.1",
            IdentityId::Kummer2 => "1.2",
            IdentityId::GaussTerminating => "1.3",
            IdentityId::GaussSecondFloat => "1.4",
            IdentityId::Kummer2Alt => "1.5",
            IdentityId::Preece => "1.6",
            IdentityId::Bailey => "1.7",
            IdentityId::WatsonFloat => "1.8",
            IdentityId::PreeceExp => "1.9",
            IdentityId::BaileyExp => "1.10",
            IdentityId::BaileyProduct => "1.11",
            IdentityId::RathiePlus => "1.12",
            IdentityId::RathieMinus => "1.13",
            IdentityId::ExpandPlus => "1.17",
            IdentityId::ExpandMinus => "1.18",
            IdentityId::ThmPP => "2.1",
            IdentityId::ThmMM => "2.2",
            IdentityId::ThmPM => "2.3",
            IdentityId::SpecialPP => "3.1",
            IdentityId::SpecialMM => "3.2",
            IdentityId::SpecialPM => "3.3",
        }
    }

    pub fn from_tag(tag: &str) -> Option<IdentityId> {
        IdentityId::ALL.into_iter().find(|id| id.tag() == tag)
    }

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Kummer1 => "Kummer first transformation",
            IdentityId::Kummer2 => "Kummer second transformation",
            IdentityId::GaussTerminating => "Gauss summation, terminating (Chu-Vandermonde)",
            IdentityId::GaussSecondFloat => "Gauss second summation (float)",
            IdentityId::Kummer2Alt => "Kummer second transformation, 2x form",
            IdentityId::Preece => "Preece product",
            IdentityId::Bailey => "Bailey product",
            IdentityId::WatsonFloat => "Watson summation (float)",
            IdentityId::PreeceExp => "Preece product, exponential form",
            IdentityId::BaileyExp => "Bailey product, exponential form",
            IdentityId::BaileyProduct => "Bailey 0F1 x 0F1 product formula",
            IdentityId::RathiePlus => "Rathie contiguous product, 2alpha+1",
            IdentityId::RathieMinus => "Rathie contiguous product, 2alpha-1",
            IdentityId::ExpandPlus => "expansion of exp(-x/2) 1F1(alpha; 2alpha+i; x)",
            IdentityId::ExpandMinus => "expansion of exp(-x/2) 1F1(alpha; 2alpha-i; x)",
            IdentityId::ThmPP => "product 1F1(alpha; 2alpha+i) 1F1(beta; 2beta+j)",
            IdentityId::ThmMM => "product 1F1(alpha; 2alpha-i) 1F1(beta; 2beta-j)",
            IdentityId::ThmPM => "product 1F1(alpha; 2alpha+i) 1F1(beta; 2beta-j)",
            IdentityId::SpecialPP => "product 1F1(alpha; 2alpha+i) 1F1(alpha; 2alpha+j)",
            IdentityId::SpecialMM => "product 1F1(alpha; 2alpha-i) 1F1(alpha; 2alpha-j)",
            IdentityId::SpecialPM => "product 1F1(alpha; 2alpha+i) 1F1(alpha; 2alpha-j)",
        }
    }

    /// Which of `alpha, beta, i, j, c` the identity reads.
    pub fn uses(self) -> ParamUse {
        use IdentityId::*;
        let (beta, i, j, c) = match self {
            Kummer1 | Bailey | BaileyExp | BaileyProduct => (true, false, false, false),
            Kummer2 | Kummer2Alt | Preece | PreeceExp | RathiePlus | RathieMinus => {
                (false, false, false, false)
            }
            GaussTerminating | WatsonFloat => (true, false, false, true),
            GaussSecondFloat => (true, false, false, false),
            ExpandPlus | ExpandMinus => (false, true, false, false),
            ThmPP | ThmMM | ThmPM => (true, true, true, false),
            SpecialPP | SpecialMM | SpecialPM => (false, true, true, false),
        };
        ParamUse { beta, i, j, c }
    }

    /// Identities whose verdict can only come from the float path.
    pub fn is_float_only(self) -> bool {
        matches!(self, IdentityId::GaussSecondFloat | IdentityId::WatsonFloat)
    }

    pub fn is_classical_sum(self) -> bool {
        matches!(
            self,
            IdentityId::GaussTerminating | IdentityId::GaussSecondFloat | IdentityId::WatsonFloat
        )
    }

    /// Identities affected by the literal-reading switch.
    pub fn has_printed_form(self) -> bool {
        matches!(self, IdentityId::ThmPM | IdentityId::SpecialPM)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamUse {
    pub beta: bool,
    pub i: bool,
    pub j: bool,
    pub c: bool,
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::from_tag(s.trim()).ok_or_else(|| Error::Parse { token: s.to_string() })
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let tag = String::deserialize(deserializer)?;
        IdentityId::from_tag(&tag)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown identity tag {tag:?}")))
    }
}

/// The three sign patterns of the contiguous product theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    PP,
    MM,
    PM,
}

impl Variant {
    pub fn theorem_id(self) -> IdentityId {
        match self {
            Variant::PP => IdentityId::ThmPP,
            Variant::MM => IdentityId::ThmMM,
            Variant::PM => IdentityId::ThmPM,
        }
    }

    pub fn special_id(self) -> IdentityId {
        match self {
            Variant::PP => IdentityId::SpecialPP,
            Variant::MM => IdentityId::SpecialMM,
            Variant::PM => IdentityId::SpecialPM,
        }
    }
}

/// Parameter point for an identity check.
///
/// For the classical sums `alpha`, `beta` and `c` play the roles of the
/// series parameters `a`, `b`, `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub i: usize,
    pub j: usize,
    pub cap: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Rational>,
    /// Build the mixed-sign product with the numerator factor exactly as
    /// typeset, `(-j)_m`, instead of `(-j)_n`.
    #[serde(default)]
    pub printed_form: bool,
}

impl IdentityParams {
    pub fn new(alpha: Rational, beta: Rational, i: usize, j: usize) -> Self {
        IdentityParams {
            alpha,
            beta,
            i,
            j,
            cap: default_cap(i, j),
            c: None,
            printed_form: false,
        }
    }

    pub fn single(alpha: Rational) -> Self {
        Self::new(alpha, Rational::zero(), 0, 0)
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_c(mut self, c: Rational) -> Self {
        self.c = Some(c);
        self
    }

    pub fn with_printed_form(mut self, printed_form: bool) -> Self {
        self.printed_form = printed_form;
        self
    }
}

/// Default truncation cap `2(i+j) + 16`.
pub fn default_cap(i: usize, j: usize) -> usize {
    2 * (i + j) + 16
}
