//! Batch runs over a parameter grid.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{IdentityId, ReportVariant, Verdict, VerificationReport};
use super::Check;
use crate::exact_arith::{rat, Rational};
use crate::frobenius::Variant;

/// Parameter ranges per identity. A missing section runs nothing; lists are
/// expanded as a Cartesian product in the order written.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridConfig {
    pub theorem1: Option<SeriesGrid>,
    pub corollary2: Option<SeriesGrid>,
    pub theorem3: Option<NumberGrid>,
    pub corollary4: Option<NumberGrid>,
    pub corollary5: Option<NumberGrid>,
    pub eq60_multinomial: Option<NumberGrid>,
    pub carlitz_product: Option<CarlitzGrid>,
    pub carlitz_reciprocal: Option<ReciprocalGrid>,
    pub bernoulli_product: Option<BernoulliGrid>,
    /// Variants to run for identities that have them; both when absent.
    pub variants: Option<Vec<Variant>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesGrid {
    #[serde(rename = "N")]
    pub orders: Vec<usize>,
    pub u: Vec<Rational>,
    /// Only used by `corollary2`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub x: Vec<Rational>,
    pub trunc: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumberGrid {
    pub n: Vec<usize>,
    #[serde(rename = "N")]
    pub orders: Vec<usize>,
    pub u: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CarlitzGrid {
    pub m: Vec<usize>,
    pub n: Vec<usize>,
    /// `(alpha, beta)` pairs.
    pub pairs: Vec<(Rational, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReciprocalGrid {
    pub m: Vec<usize>,
    pub n: Vec<usize>,
    pub alpha: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BernoulliGrid {
    pub m: Vec<usize>,
    pub n: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryEntry {
    pub identity: IdentityId,
    pub variant: ReportVariant,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
    pub by_identity: Vec<SummaryEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

impl AuditReport {
    pub fn all_passed(&self) -> bool {
        self.summary.pass == self.summary.total
    }
}

fn r(n: i64, d: i64) -> Rational {
    rat(n, d).expect("nonzero literal denominator")
}

/// The grid the `audit` command runs when no grid file is given.
pub fn default_grid() -> GridConfig {
    let u4 = vec![r(2, 1), r(-1, 1), r(1, 3), r(-5, 7)];
    let u3 = vec![r(2, 1), r(1, 3), r(-5, 7)];
    let u2 = vec![r(2, 1), r(1, 3)];
    GridConfig {
        theorem1: Some(SeriesGrid {
            orders: (1..=8).collect(),
            u: u4,
            x: Vec::new(),
            trunc: 16,
        }),
        corollary2: Some(SeriesGrid {
            orders: (1..=5).collect(),
            u: u2.clone(),
            x: vec![r(0, 1), r(2, 1), r(-1, 2)],
            trunc: 12,
        }),
        theorem3: Some(NumberGrid {
            n: (0..=8).collect(),
            orders: (1..=5).collect(),
            u: u3.clone(),
        }),
        corollary4: Some(NumberGrid {
            n: (0..=8).collect(),
            orders: (1..=5).collect(),
            u: u3,
        }),
        corollary5: Some(NumberGrid {
            n: (0..=8).collect(),
            orders: (1..=4).collect(),
            u: u2.clone(),
        }),
        eq60_multinomial: Some(NumberGrid {
            n: (0..=8).collect(),
            orders: (1..=4).collect(),
            u: u2,
        }),
        carlitz_product: Some(CarlitzGrid {
            m: (0..=6).collect(),
            n: (0..=6).collect(),
            pairs: vec![(r(2, 1), r(3, 1)), (r(1, 2), r(1, 3)), (r(-2, 1), r(5, 1))],
        }),
        carlitz_reciprocal: Some(ReciprocalGrid {
            m: (0..=4).collect(),
            n: (0..=4).collect(),
            alpha: vec![r(2, 1), r(1, 2), r(-2, 1)],
        }),
        bernoulli_product: Some(BernoulliGrid {
            m: (1..=7).collect(),
            n: (1..=7).collect(),
        }),
        variants: None,
    }
}

impl GridConfig {
    /// Expands the grid into checks, in report order.
    pub fn checks(&self) -> Vec<Check> {
        let variants: Vec<Variant> = self.variants.clone().unwrap_or_else(|| Variant::ALL.to_vec());
        let mut out = Vec::new();

        if let Some(g) = &self.theorem1 {
            for &order in &g.orders {
                for u in &g.u {
                    for &variant in &variants {
                        out.push(Check::Theorem1 { order, u: u.clone(), trunc: g.trunc, variant });
                    }
                }
            }
        }
        if let Some(g) = &self.corollary2 {
            for &order in &g.orders {
                for u in &g.u {
                    for x in &g.x {
                        for &variant in &variants {
                            out.push(Check::Corollary2 {
                                order,
                                u: u.clone(),
                                x: x.clone(),
                                trunc: g.trunc,
                                variant,
                            });
                        }
                    }
                }
            }
        }
        type NumberCheck = fn(usize, usize, Rational, Variant) -> Check;
        let number_grids: [(&Option<NumberGrid>, NumberCheck); 3] = [
            (&self.theorem3, |n, order, u, variant| Check::Theorem3 { n, order, u, variant }),
            (&self.corollary4, |n, order, u, variant| Check::Corollary4 { n, order, u, variant }),
            (&self.corollary5, |n, order, u, variant| Check::Corollary5 { n, order, u, variant }),
        ];
        for (grid, make) in number_grids {
            let Some(g) = grid else { continue };
            for &n in &g.n {
                for &order in &g.orders {
                    for u in &g.u {
                        for &variant in &variants {
                            out.push(make(n, order, u.clone(), variant));
                        }
                    }
                }
            }
        }
        if let Some(g) = &self.eq60_multinomial {
            for &n in &g.n {
                for &order in &g.orders {
                    for u in &g.u {
                        out.push(Check::Eq60Multinomial { n, order, u: u.clone() });
                    }
                }
            }
        }
        if let Some(g) = &self.carlitz_product {
            for &m in &g.m {
                for &n in &g.n {
                    for (alpha, beta) in &g.pairs {
                        for &variant in &variants {
                            out.push(Check::CarlitzProduct {
                                m,
                                n,
                                alpha: alpha.clone(),
                                beta: beta.clone(),
                                variant,
                            });
                        }
                    }
                }
            }
        }
        if let Some(g) = &self.carlitz_reciprocal {
            for &m in &g.m {
                for &n in &g.n {
                    for alpha in &g.alpha {
                        out.push(Check::CarlitzReciprocal { m, n, alpha: alpha.clone() });
                    }
                }
            }
        }
        if let Some(g) = &self.bernoulli_product {
            for &m in &g.m {
                for &n in &g.n {
                    out.push(Check::BernoulliProduct { m, n });
                }
            }
        }
        out
    }
}

/// Runs every check of `grid`; output order is grid order regardless of
/// which thread finished first.
pub fn audit_all(grid: &GridConfig) -> AuditReport {
    let reports: Vec<VerificationReport> = grid
        .checks()
        .par_iter()
        .map(Check::run_to_report)
        .collect();
    let summary = summarize(&reports);
    AuditReport { reports, summary }
}

fn summarize(reports: &[VerificationReport]) -> Summary {
    let mut by_identity: Vec<SummaryEntry> = Vec::new();
    for report in reports {
        let idx = by_identity
            .iter()
            .position(|e| e.identity == report.identity && e.variant == report.variant)
            .unwrap_or_else(|| {
                by_identity.push(SummaryEntry {
                    identity: report.identity,
                    variant: report.variant,
                    pass: 0,
                    fail: 0,
                    error: 0,
                });
                by_identity.len() - 1
            });
        let entry = &mut by_identity[idx];
        match report.verdict {
            Verdict::Pass => entry.pass += 1,
            Verdict::Fail => entry.fail += 1,
            Verdict::Error => entry.error += 1,
        }
    }
    let count = |v: Verdict| reports.iter().filter(|r| r.verdict == v).count();
    Summary {
        total: reports.len(),
        pass: count(Verdict::Pass),
        fail: count(Verdict::Fail),
        error: count(Verdict::Error),
        by_identity,
    }
}
