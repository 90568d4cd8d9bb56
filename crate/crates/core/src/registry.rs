//! The identity catalog: one descriptor per verified identity, carrying
//! its source anchor, validity domain, arithmetic mode, and per-instance
//! cost class. Tokens I1..I26 are stable and part of the CLI surface.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    GcdFloor,
    FloorReciprocity,
    PhiRes1,
    PhiFourier,
    PhiRes2,
    Menon,
    CoprimeFloorLemma,
    CoprimeSumLemma,
    CosSumZero,
    KCosSumHalf,
    PhiRes3,
    TauToto,
    TauRes1Form,
    TauRes2Form,
    TauRes3Form,
    PillaiDivisorPhi,
    PillaiDivisorTauMu,
    PillaiPadicProduct,
    PillaiPhiOverD,
    MobiusExpsum,
    MobiusFloorSum,
    KlineSineSum,
    Mu2OverPhi,
    PhiMultGcd,
    MobiusInversionPhi,
    EulerProductPhi,
}

/// Every identity, in catalog order.
pub const ALL_IDENTITIES: [IdentityId; 26] = [
    IdentityId::GcdFloor,
    IdentityId::FloorReciprocity,
    IdentityId::PhiRes1,
    IdentityId::PhiFourier,
    IdentityId::PhiRes2,
    IdentityId::Menon,
    IdentityId::CoprimeFloorLemma,
    IdentityId::CoprimeSumLemma,
    IdentityId::CosSumZero,
    IdentityId::KCosSumHalf,
    IdentityId::PhiRes3,
    IdentityId::TauToto,
    IdentityId::TauRes1Form,
    IdentityId::TauRes2Form,
    IdentityId::TauRes3Form,
    IdentityId::PillaiDivisorPhi,
    IdentityId::PillaiDivisorTauMu,
    IdentityId::PillaiPadicProduct,
    IdentityId::PillaiPhiOverD,
    IdentityId::MobiusExpsum,
    IdentityId::MobiusFloorSum,
    IdentityId::KlineSineSum,
    IdentityId::Mu2OverPhi,
    IdentityId::PhiMultGcd,
    IdentityId::MobiusInversionPhi,
    IdentityId::EulerProductPhi,
];

impl IdentityId {
    /// Position in the catalog, 0-based.
    pub fn index(self) -> usize {
        ALL_IDENTITIES.iter().position(|&id| id == self).unwrap()
    }

    /// The stable token I1..I26.
    pub fn token(self) -> &'static str {
        TOKENS[self.index()]
    }

    /// Parses a token like `I6` (case-insensitive).
    pub fn from_token(s: &str) -> Result<Self> {
        let upper = s.to_ascii_uppercase();
        TOKENS
            .iter()
            .position(|&t| t == upper)
            .map(|i| ALL_IDENTITIES[i])
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

const TOKENS: [&str; 26] = [
    "I1", "I2", "I3", "I4", "I5", "I6", "I7", "I8", "I9", "I10", "I11", "I12", "I13", "I14", "I15",
    "I16", "I17", "I18", "I19", "I20", "I21", "I22", "I23", "I24", "I25", "I26",
];

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.token())
    }
}

/// Input shape of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    SingleN,
    /// Unordered sweep over (m, n) grids.
    PairMn,
    /// (k, n) with k swept as a multiple of n.
    PairKn,
}

impl Arity {
    pub fn label(self) -> &'static str {
        match self {
            Arity::SingleN => "single_n",
            Arity::PairMn => "pair(m,n)",
            Arity::PairKn => "pair(k,n)",
        }
    }
}

impl Serialize for Arity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// How the identity's sides are computed and compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithMode {
    Exact,
    Rational,
    Approx,
}

impl ArithMode {
    pub fn label(self) -> &'static str {
        match self {
            ArithMode::Exact => "exact",
            ArithMode::Rational => "rational",
            ArithMode::Approx => "approx",
        }
    }
}

impl Serialize for ArithMode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// Per-instance evaluation cost as a function of n. Drives the default
/// sweep ranges: quadratic identities get the smallest default ceiling,
/// constant-cost (sieve- and factorization-backed) identities the largest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CostClass {
    /// O(tau(n)) or O(log n) per instance; effectively flat at desk scale.
    Constant,
    /// O(n) per instance (one pass over 1..=n).
    Linear,
    /// O(n^2) per instance (floor double sums).
    Quadratic,
}

impl CostClass {
    pub fn label(self) -> &'static str {
        match self {
            CostClass::Constant => "constant",
            CostClass::Linear => "linear",
            CostClass::Quadratic => "quadratic",
        }
    }
}

impl Serialize for CostClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// Validity domain: the minimum n plus any arity-specific constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Domain {
    pub min_n: u64,
    pub constraint: Option<&'static str>,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n >= {}", self.min_n)?;
        if let Some(c) = self.constraint {
            write!(f, ", {c}")?;
        }
        Ok(())
    }
}

impl Serialize for Domain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Catalog entry for one identity.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityDescriptor {
    pub id: IdentityId,
    pub name: &'static str,
    /// Section/equation tag of the source relation plus a short label.
    pub anchor: &'static str,
    pub arity: Arity,
    pub domain: Domain,
    pub mode: ArithMode,
    pub cost_class: CostClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

const fn single(min_n: u64) -> Domain {
    Domain {
        min_n,
        constraint: None,
    }
}

static REGISTRY: [IdentityDescriptor; 26] = [
    IdentityDescriptor {
        id: IdentityId::GcdFloor,
        name: "gcd-floor",
        anchor: "sec. 2, eq. (gcd): gcd from a single floor sum",
        arity: Arity::PairKn,
        domain: Domain {
            min_n: 1,
            constraint: Some("k >= 1"),
        },
        mode: ArithMode::Exact,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::FloorReciprocity,
        name: "floor-reciprocity",
        anchor: "sec. 2, eq. (gcd1): two-sum floor reciprocity",
        arity: Arity::PairMn,
        domain: Domain {
            min_n: 1,
            constraint: Some("m >= 1"),
        },
        mode: ArithMode::Exact,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::PhiRes1,
        name: "phi-res1",
        anchor: "sec. 3, eq. (res1): phi from a coprime floor double sum",
        arity: Arity::SingleN,
        domain: single(3),
        mode: ArithMode::Exact,
        cost_class: CostClass::Quadratic,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::PhiFourier,
        name: "phi-fourier",
        anchor: "sec. 3, eq. (fourier): phi as a cosine-weighted gcd sum",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Approx,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::PhiRes2,
        name: "phi-res2",
        anchor: "sec. 3, eq. (res2): phi from a cosine-weighted floor double sum",
        arity: Arity::SingleN,
        domain: single(2),
        mode: ArithMode::Approx,
        cost_class: CostClass::Quadratic,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::Menon,
        name: "menon",
        anchor: "sec. 4, eq. (menon): phi(n)*tau(n) as a shifted-gcd sum over totatives",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Exact,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::CoprimeFloorLemma,
        name: "coprime-floor-lemma",
        anchor: "sec. 4: floor sum over a coprime multiplier equals (k-1)(n-1)/2",
        arity: Arity::PairKn,
        domain: Domain {
            min_n: 1,
            constraint: Some("gcd(k, n) = 1"),
        },
        mode: ArithMode::Exact,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::CoprimeSumLemma,
        name: "coprime-sum-lemma",
        anchor: "sec. 3: totative sum equals n*phi(n)/2",
        arity: Arity::SingleN,
        domain: single(2),
        mode: ArithMode::Exact,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::CosSumZero,
        name: "cos-sum-zero",
        anchor: "sec. 3: plain cosine sum over a full period vanishes",
        arity: Arity::SingleN,
        domain: single(2),
        mode: ArithMode::Approx,
        cost_class: CostClass::Linear,
        note: Some(
            "the source displays both 0 and n/2 as the value of the k-weighted cosine sum; \
             verified here as the corrected pair: plain sum = 0 (I9), k-weighted sum = n/2 (I10)",
        ),
    },
    IdentityDescriptor {
        id: IdentityId::KCosSumHalf,
        name: "k-cos-sum-half",
        anchor: "sec. 3: k-weighted cosine sum equals n/2",
        arity: Arity::SingleN,
        domain: single(2),
        mode: ArithMode::Approx,
        cost_class: CostClass::Linear,
        note: Some(
            "sides are exposed doubled (2*sum against n) so the rounding target stays an \
             integer for odd n; see also the note on I9",
        ),
    },
    IdentityDescriptor {
        id: IdentityId::PhiRes3,
        name: "phi-res3",
        anchor: "sec. 4, eq. (res3): phi from a shifted coprime floor double sum",
        arity: Arity::SingleN,
        domain: single(4),
        mode: ArithMode::Exact,
        cost_class: CostClass::Quadratic,
        note: Some(
            "the denominator 2*tau(n) + n^2 - 5n + 2 vanishes for n in {1, 2, 3}; the n = 3 \
             case reads 0/0 as displayed and is skipped by domain analysis",
        ),
    },
    IdentityDescriptor {
        id: IdentityId::TauToto,
        name: "tau-toto",
        anchor: "sec. 5, eq. (toto): tau as the Menon sum over the cosine gcd sum",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Approx,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::TauRes1Form,
        name: "tau-res1-form",
        anchor: "sec. 5: tau via the (res1) floor double sum",
        arity: Arity::SingleN,
        domain: single(3),
        mode: ArithMode::Exact,
        cost_class: CostClass::Quadratic,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::TauRes2Form,
        name: "tau-res2-form",
        anchor: "sec. 5: tau via the (res2) cosine floor double sum",
        arity: Arity::SingleN,
        domain: single(2),
        mode: ArithMode::Approx,
        cost_class: CostClass::Quadratic,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::TauRes3Form,
        name: "tau-res3-form",
        anchor: "sec. 5, closing display: tau via the (res3) shifted sum",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Exact,
        cost_class: CostClass::Quadratic,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::PillaiDivisorPhi,
        name: "pillai-divisor-phi",
        anchor: "sec. 5: gcd-sum as sum of d*phi(n/d) over divisors",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Exact,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::PillaiDivisorTauMu,
        name: "pillai-divisor-tau-mu",
        anchor: "sec. 5: gcd-sum as sum of d*tau(d)*mu(n/d) over divisors",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Exact,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::PillaiPadicProduct,
        name: "pillai-padic-product",
        anchor: "sec. 5: gcd-sum as a product over prime valuations",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Rational,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::PillaiPhiOverD,
        name: "pillai-phi-over-d",
        anchor: "sec. 5, closing display: gcd-sum as n * sum of phi(d)/d",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Rational,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::MobiusExpsum,
        name: "mobius-expsum",
        anchor: "sec. 5: mu(n) as a sum of roots of unity over totatives",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Approx,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::MobiusFloorSum,
        name: "mobius-floor-sum",
        anchor: "sec. 5: floor-weighted Mobius sum equals 1",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Exact,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::KlineSineSum,
        name: "kline-sine-sum",
        anchor: "sec. 5: sine-weighted Mobius sum over jk <= n equals 1",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Exact,
        cost_class: CostClass::Linear,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::Mu2OverPhi,
        name: "mu2-over-phi",
        anchor: "sec. 1: sum of mu^2(d)/phi(d) over divisors equals n/phi(n)",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Rational,
        cost_class: CostClass::Constant,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::PhiMultGcd,
        name: "phi-mult-gcd",
        anchor: "sec. 1: phi(mn)*phi(d) = phi(m)*phi(n)*d with d = gcd(m, n)",
        arity: Arity::PairMn,
        domain: Domain {
            min_n: 1,
            constraint: Some("m >= 1"),
        },
        mode: ArithMode::Exact,
        cost_class: CostClass::Constant,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::MobiusInversionPhi,
        name: "mobius-inversion-phi",
        anchor: "sec. 1: Mobius inversion of the divisor-sum formula for phi",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Exact,
        cost_class: CostClass::Constant,
        note: None,
    },
    IdentityDescriptor {
        id: IdentityId::EulerProductPhi,
        name: "euler-product-phi",
        anchor: "sec. 1: Euler product for phi",
        arity: Arity::SingleN,
        domain: single(1),
        mode: ArithMode::Exact,
        cost_class: CostClass::Constant,
        note: None,
    },
];

/// The full catalog, in stable I1..I26 order.
pub fn registry() -> &'static [IdentityDescriptor] {
    &REGISTRY
}

/// Descriptor lookup by id.
pub fn descriptor(id: IdentityId) -> &'static IdentityDescriptor {
    &REGISTRY[id.index()]
}

/// All descriptor summaries, stable order.
pub fn list_identities() -> &'static [IdentityDescriptor] {
    &REGISTRY
}
