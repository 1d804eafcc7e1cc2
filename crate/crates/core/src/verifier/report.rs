use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::egf_series::{EgfSeries, Polynomial};
use crate::error::Error;
use crate::exact_arith::Rational;
use crate::frobenius::Variant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    Theorem1,
    Corollary2,
    Theorem3,
    Corollary4,
    Corollary5,
    Eq60Multinomial,
    CarlitzProduct,
    CarlitzReciprocal,
    BernoulliProduct,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::Theorem1,
        IdentityId::Corollary2,
        IdentityId::Theorem3,
        IdentityId::Corollary4,
        IdentityId::Corollary5,
        IdentityId::Eq60Multinomial,
        IdentityId::CarlitzProduct,
        IdentityId::CarlitzReciprocal,
        IdentityId::BernoulliProduct,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Theorem1 => "theorem1",
            IdentityId::Corollary2 => "corollary2",
            IdentityId::Theorem3 => "theorem3",
            IdentityId::Corollary4 => "corollary4",
            IdentityId::Corollary5 => "corollary5",
            IdentityId::Eq60Multinomial => "eq60_multinomial",
            IdentityId::CarlitzProduct => "carlitz_product",
            IdentityId::CarlitzReciprocal => "carlitz_reciprocal",
            IdentityId::BernoulliProduct => "bernoulli_product",
        }
    }

    /// Whether the identity has an as-printed / corrected split.
    pub fn has_variants(self) -> bool {
        !matches!(
            self,
            IdentityId::Eq60Multinomial | IdentityId::CarlitzReciprocal | IdentityId::BernoulliProduct
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let normalized = s.replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == normalized)
            .ok_or_else(|| Error::Argument(format!("unknown identity {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportVariant {
    AsPrinted,
    Corrected,
    NotApplicable,
}

impl From<Variant> for ReportVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::AsPrinted => ReportVariant::AsPrinted,
            Variant::Corrected => ReportVariant::Corrected,
        }
    }
}

impl fmt::Display for ReportVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportVariant::AsPrinted => "as_printed",
            ReportVariant::Corrected => "corrected",
            ReportVariant::NotApplicable => "not_applicable",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// The parameters were rejected before anything was compared.
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Error => "error",
        })
    }
}

/// One disagreeing coefficient, with both sides as exact `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub variant: ReportVariant,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    pub mismatches: Vec<Mismatch>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// `pass` exactly when nothing mismatched and no error occurred.
    pub fn is_consistent(&self) -> bool {
        match self.verdict {
            Verdict::Pass => self.mismatches.is_empty() && self.error.is_none(),
            Verdict::Fail => !self.mismatches.is_empty() && self.error.is_none(),
            Verdict::Error => self.mismatches.is_empty() && self.error.is_some(),
        }
    }
}

/// Identity, variant and parameters of a run, before any comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportHeader {
    pub identity: IdentityId,
    pub variant: ReportVariant,
    pub params: BTreeMap<String, String>,
}

impl ReportHeader {
    pub fn new(identity: IdentityId, variant: ReportVariant) -> Self {
        ReportHeader {
            identity,
            variant,
            params: BTreeMap::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn finish(self, mismatches: Vec<Mismatch>) -> VerificationReport {
        let verdict = if mismatches.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            identity: self.identity,
            variant: self.variant,
            params: self.params,
            verdict,
            mismatches,
            error: None,
        }
    }

    pub fn error(self, err: &Error) -> VerificationReport {
        VerificationReport {
            identity: self.identity,
            variant: self.variant,
            params: self.params,
            verdict: Verdict::Error,
            mismatches: Vec::new(),
            error: Some(err.to_string()),
        }
    }
}

fn mismatch(at: String, lhs: &Rational, rhs: &Rational) -> Mismatch {
    Mismatch {
        at,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

pub(crate) fn compare_scalars(lhs: &Rational, rhs: &Rational) -> Vec<Mismatch> {
    if lhs == rhs {
        Vec::new()
    } else {
        vec![mismatch("value".into(), lhs, rhs)]
    }
}

/// Coefficientwise over `t^0..=t^upto`.
pub(crate) fn compare_series(lhs: &EgfSeries, rhs: &EgfSeries, upto: usize) -> Vec<Mismatch> {
    (0..=upto)
        .filter_map(|n| {
            let (a, b) = (lhs.coeff(n)?, rhs.coeff(n)?);
            (a != b).then(|| mismatch(format!("t^{n}"), a, b))
        })
        .collect()
}

/// Coefficientwise over every degree present on either side.
pub(crate) fn compare_polynomials(lhs: &Polynomial, rhs: &Polynomial) -> Vec<Mismatch> {
    let len = lhs.coeffs().len().max(rhs.coeffs().len());
    (0..len)
        .filter_map(|d| {
            let (a, b) = (lhs.coeff(d), rhs.coeff(d));
            (a != b).then(|| mismatch(format!("x^{d}"), &a, &b))
        })
        .collect()
}
