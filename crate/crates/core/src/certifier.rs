//! Certification of fibration data against Szpiro-type inequalities.
//!
//! Every inequality is evaluated in the normal form `slack >= 0` with exact
//! rational slack. Inequalities whose hypotheses depend on facts that the
//! combinatorial data cannot decide (the total space being rational or ruled)
//! only fire under an explicit [`TopologyAssertion`]; a violation is therefore
//! always a proof that the data does not come from a semistable symplectic
//! Lefschetz fibration of the asserted kind.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;
use thiserror::Error;

use crate::invariants::{
    component_bounds_check, FibrationDescription, InvariantError, InvariantReport, TopologyAssertion,
};
use crate::verdict::{q, InequalityId, InequalityVerdict, Status};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("fiber {fiber} is not semistable: piece {piece} is a sphere with fewer than two nodes")]
    NotSemistable { fiber: usize, piece: usize },
    #[error("a pencil without critical points is trivial and is not certified")]
    TrivialPencil,
    #[error(transparent)]
    Invariants(#[from] InvariantError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvaluateError {
    #[error("parameter t = {0} lies outside [0, 1]")]
    ParameterOutOfRange(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommutatorError {
    #[error("commutator length bound needs fiber genus at least 2, got {0}")]
    GenusTooSmall(u32),
    #[error("the twist power must be positive")]
    NonPositivePower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    RealizableConsistent,
    Refuted,
    Incomplete,
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Overall::RealizableConsistent => "realizable-consistent",
            Overall::Refuted => "refuted",
            Overall::Incomplete => "incomplete",
        })
    }
}

/// A named lower bound on `K^2` that applies to the description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K2Bound {
    #[serde(serialize_with = "serialize_display")]
    pub id: InequalityId,
    pub source: &'static str,
    pub bound: i64,
}

fn serialize_display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub overall: Overall,
    pub verdicts: Vec<InequalityVerdict>,
    pub k2_lower_bounds: Vec<K2Bound>,
}

impl CertificateReport {
    /// Orders the verdicts by id and derives the overall verdict: refuted iff
    /// something is violated, incomplete if something is unknown.
    pub fn from_verdicts(mut verdicts: Vec<InequalityVerdict>, k2_lower_bounds: Vec<K2Bound>) -> Self {
        verdicts.sort_by(|a, b| a.id.cmp(&b.id));
        let overall = if verdicts.iter().any(InequalityVerdict::is_violated) {
            Overall::Refuted
        } else if verdicts.iter().any(|v| v.status == Status::Unknown) {
            Overall::Incomplete
        } else {
            Overall::RealizableConsistent
        };
        CertificateReport {
            overall,
            verdicts,
            k2_lower_bounds,
        }
    }

    pub fn verdict(&self, id: &InequalityId) -> Option<&InequalityVerdict> {
        self.verdicts.iter().find(|v| &v.id == id)
    }

    pub fn violations(&self) -> impl Iterator<Item = &InequalityVerdict> {
        self.verdicts.iter().filter(|v| v.is_violated())
    }
}

/// Runs the full battery on a semistable description.
pub fn certify(fd: &FibrationDescription) -> Result<CertificateReport, CertifyError> {
    for (fiber, f) in fd.fibers().iter().enumerate() {
        if let Some(piece) = f.unstable_piece() {
            return Err(CertifyError::NotSemistable { fiber, piece });
        }
    }
    let report = fd.invariant_report()?;
    if report.g == 0 && report.counts.k == 0 {
        return Err(CertifyError::TrivialPencil);
    }
    Ok(certify_report(&report))
}

/// The battery for an invariant report, without the semistability gate.
pub fn certify_report(report: &InvariantReport) -> CertificateReport {
    use InequalityId::*;
    let mut verdicts = component_bounds_check(&report.counts, report.h, report.all_stable);

    let battery: Vec<InequalityId> = if report.g >= 1 {
        vec![Eq6, Eq9, Eq10, Eq11]
    } else {
        let mut ids = vec![Eq16, Eq17, Eq18, Eq19, Thm21, InequalityId::eq26_int(0), InequalityId::eq26_int(1)];
        match report.assertion {
            TopologyAssertion::NotRationalOrRuled => ids.extend([Eq21, Eq22]),
            TopologyAssertion::Ruled { .. } => ids.extend([Eq13, Eq14, Eq15]),
            TopologyAssertion::Unspecified => {}
        }
        ids
    };
    for id in battery {
        verdicts.push(evaluate_inequality(&id, report).expect("battery parameters lie in range"));
    }

    let bounds = k2_lower_bounds(report);
    for b in &bounds {
        let v = evaluate_inequality(&b.id, report).expect("no parameter");
        // undecided K^2 checks carry no information and are left out
        if v.status != Status::Unknown {
            verdicts.push(v);
        }
    }
    CertificateReport::from_verdicts(verdicts, bounds)
}

fn counts_as_i64(report: &InvariantReport) -> (i64, i64, i64, i64, i64) {
    let c = &report.counts;
    (c.k as i64, c.n as i64, c.s as i64, c.d as i64, c.components as i64)
}

/// Evaluates a single inequality against a report.
///
/// Inequalities whose hypotheses the report does not meet (wrong base genus,
/// trivial pencil, missing or contrary assertion) come back not-applicable;
/// `K^2` checks that need data the report lacks come back unknown.
pub fn evaluate_inequality(id: &InequalityId, report: &InvariantReport) -> Result<InequalityVerdict, EvaluateError> {
    use InequalityId::*;
    let h = i64::from(report.h);
    let g = i64::from(report.g);
    let (k, n, s, d, big_n) = counts_as_i64(report);
    let excess = big_n - d;
    let pencil = report.g == 0;
    let nontrivial_pencil = pencil && k >= 1;
    let positive_base = report.g >= 1;
    let genus_term = 6 * (3 * h - 1) * (g - 1);
    let na = || Ok(InequalityVerdict::not_applicable(id.clone()));
    let slack = |x: BigRational| Ok(InequalityVerdict::from_slack(id.clone(), x));

    match id {
        Eq4 | Eq5 | Rem7Cycles | Rem7Components => {
            let all = component_bounds_check(&report.counts, report.h, report.all_stable);
            Ok(all.into_iter().find(|v| &v.id == id).expect("component bounds cover their ids"))
        }

        Eq6 | Eq9 | Eq10 | Eq11 if !positive_base => na(),
        Eq6 => slack(q(5 * k + genus_term - 6 * excess)),
        Eq9 => slack(q(genus_term + 5 * n - s)),
        Eq10 => slack(q(genus_term + 6 * h * d - k)),
        Eq11 => slack(q(genus_term + (5 * h + 1) * d - big_n)),

        Eq16 | Eq17 | Eq18 | Eq19 | Thm21 | Eq26(_) | Eq21 | Eq22 | Eq13 | Eq14 | Eq15 if !nontrivial_pencil => {
            if let Eq26(t) = id {
                check_unit_interval(t)?;
            }
            na()
        }
        Eq16 => slack(q(5 * k - 6 * h - 6 * excess)),
        Eq17 => slack(q(5 * n - 6 * h - s)),
        Eq18 => slack(q(6 * h * (d - 1) - k)),
        Eq19 => slack(q((5 * h + 1) * (d - 1) - (h - 1) - big_n)),
        Thm21 => slack(q(5 * n - (8 * h - 3))),
        Eq26(t) => {
            check_unit_interval(t)?;
            // 5n - t s - (8 - 2t) h - 3(t - 1)
            let value = q(5 * n) - t * q(s) - (q(8) - t * q(2)) * q(h) - q(3) * (t - BigRational::one());
            slack(value)
        }

        Eq21 | Eq22 if report.assertion != TopologyAssertion::NotRationalOrRuled => na(),
        Eq21 => slack(q(5 * k - (8 * h - 3) - 5 * excess)),
        Eq22 => slack(q(5 * n - (8 * h - 3))),

        Eq13 | Eq14 | Eq15 => match report.assertion {
            TopologyAssertion::Ruled { a, b } => {
                let half = BigRational::new(BigInt::one(), BigInt::from(2));
                let (a, b) = (i64::from(a), i64::from(b));
                match id {
                    Eq13 => slack(q(k - (2 * h - 2)) - q(3 * excess) * &half),
                    Eq14 => slack(q(n - (2 * h - 2)) - q(excess) * &half),
                    _ => slack(q(2 + 2 * h - 4 * a) - q(b) * &half),
                }
            }
            _ => na(),
        },

        K2Taubes | K2Kneser | K2Li | K2Stipsicz => {
            let Some(bound) = k2_lower_bounds(report).into_iter().find(|b| &b.id == id) else {
                return na();
            };
            Ok(k2_verdict(id.clone(), bound.bound, report))
        }
    }
}

fn check_unit_interval(t: &BigRational) -> Result<(), EvaluateError> {
    if t.is_negative() || *t > BigRational::one() {
        return Err(EvaluateError::ParameterOutOfRange(t.clone()));
    }
    Ok(())
}

fn k2_verdict(id: InequalityId, bound: i64, report: &InvariantReport) -> InequalityVerdict {
    if let Some(k2) = report.k_squared {
        return InequalityVerdict::from_slack(id, q(k2 - bound));
    }
    match report.k_squared_upper_bound {
        Some(upper) if upper < bound => InequalityVerdict::from_slack(id, q(upper - bound)),
        _ => InequalityVerdict::unknown(id),
    }
}

/// Named lower bounds on `K^2` whose hypotheses the report satisfies.
///
/// * `K^2 >= 0` over positive-genus bases (such total spaces are minimal and
///   not ruled).
/// * `K^2 >= 2(h-1)(g-1)` over positive-genus bases once `b2+ >= 2` is
///   guaranteed, i.e. `N > D` or an exact `b2+ >= 2`.
/// * `K^2 >= 2 - 2h` for nontrivial pencils asserted not rational or ruled.
/// * `K^2 >= 4(1 - h)` for every nontrivial relatively minimal pencil.
pub fn k2_lower_bounds(report: &InvariantReport) -> Vec<K2Bound> {
    let h = i64::from(report.h);
    let g = i64::from(report.g);
    let c = &report.counts;
    let mut out = Vec::new();
    if c.k == 0 || c.d == 0 {
        return out;
    }
    if report.g >= 1 {
        out.push(K2Bound {
            id: InequalityId::K2Taubes,
            source: "Taubes-Liu: K^2 >= 0 for minimal non-ruled total spaces",
            bound: 0,
        });
        if c.components > c.d || report.b2_plus.is_some_and(|p| p >= 2) {
            out.push(K2Bound {
                id: InequalityId::K2Kneser,
                source: "Kneser: K^2 >= 2(h-1)(g-1)",
                bound: 2 * (h - 1) * (g - 1),
            });
        }
    } else {
        if report.assertion == TopologyAssertion::NotRationalOrRuled {
            out.push(K2Bound {
                id: InequalityId::K2Li,
                source: "Li: K^2 >= 2 - 2h for non-rational non-ruled pencils",
                bound: 2 - 2 * h,
            });
        }
        out.push(K2Bound {
            id: InequalityId::K2Stipsicz,
            source: "Stipsicz: K^2 >= 4(1 - h) for nontrivial relatively minimal pencils",
            bound: 4 * (1 - h),
        });
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

/// Smallest `g` with `g >= 1 + k / (6(3h - 1))`: the least number of
/// commutators a product equal to the `k`-th power of a Dehn twist about an
/// essential curve on a genus-`h` surface could use.
pub fn minimal_commutator_genus(h: u32, k: u64) -> Result<u64, CommutatorError> {
    if h < 2 {
        return Err(CommutatorError::GenusTooSmall(h));
    }
    if k == 0 {
        return Err(CommutatorError::NonPositivePower);
    }
    let denom = 6 * (3 * u64::from(h) - 1);
    Ok(1 + k.div_ceil(denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::invariants::{Counts, FibrationBuilder};
    use crate::surface_config::{Curve, FiberConfiguration, Piece};

    fn report(h: u32, g: u32, k: u64, n: u64, d: u64, big_n: u64) -> InvariantReport {
        InvariantReport::from_counts(
            h,
            g,
            Counts {
                k,
                n,
                s: k - n,
                d,
                components: big_n,
            },
            TopologyAssertion::Unspecified,
        )
    }

    fn is_zero_slack(v: &InequalityVerdict) -> bool {
        v.slack.as_ref().is_some_and(Zero::is_zero)
    }

    fn elliptic() -> FibrationDescription {
        let fibers = (0..12).map(|i| {
            let class = if i % 2 == 0 { vec![1, 0] } else { vec![0, 1] };
            FiberConfiguration::new(vec![Piece::new(0, 2)], vec![Curve::with_homology(0, 0, class)])
        });
        FibrationBuilder::new(1, 0)
            .fibers(fibers)
            .signature(Some(-8))
            .build()
            .unwrap()
    }

    #[test]
    fn elliptic_surface_certifies() {
        let cert = certify(&elliptic()).unwrap();
        assert_eq!(cert.overall, Overall::RealizableConsistent);
        assert_eq!(cert.verdict(&InequalityId::Eq18).unwrap().slack, Some(q(54)));
        assert_eq!(cert.verdict(&InequalityId::Eq16).unwrap().slack, Some(q(54)));
        let stipsicz = cert.verdict(&InequalityId::K2Stipsicz).unwrap();
        assert!(is_zero_slack(stipsicz));
        assert!(cert.verdict(&InequalityId::Eq21).is_none());
    }

    #[test]
    fn clustered_pencil_is_refuted() {
        let fd = FibrationBuilder::new(2, 0)
            .fiber(FiberConfiguration::new(vec![Piece::new(1, 2)], vec![Curve::new(0, 0)]))
            .build()
            .unwrap();
        let cert = certify(&fd).unwrap();
        assert_eq!(cert.overall, Overall::Refuted);
        let v = cert.verdict(&InequalityId::Eq18).unwrap();
        assert_eq!(v.status, Status::Violated);
        assert_eq!(v.slack, Some(q(-1)));
    }

    #[test]
    fn separating_overload_violates_eq9() {
        let r = report(2, 2, 100, 0, 100, 200);
        let v = evaluate_inequality(&InequalityId::Eq9, &r).unwrap();
        assert_eq!(v.slack, Some(q(-70)));
        assert!(v.is_violated());
    }

    #[test]
    fn eq26_endpoints_and_range() {
        let r = report(3, 0, 9, 7, 5, 7);
        let t0 = evaluate_inequality(&InequalityId::eq26_int(0), &r).unwrap();
        let thm = evaluate_inequality(&InequalityId::Thm21, &r).unwrap();
        assert_eq!((t0.status, t0.slack), (thm.status, thm.slack));
        let t1 = evaluate_inequality(&InequalityId::eq26_int(1), &r).unwrap();
        let e17 = evaluate_inequality(&InequalityId::Eq17, &r).unwrap();
        assert_eq!((t1.status, t1.slack), (e17.status, e17.slack));
        assert!(matches!(
            evaluate_inequality(&InequalityId::eq26_int(2), &r),
            Err(EvaluateError::ParameterOutOfRange(_))
        ));
    }

    #[test]
    fn eq15_zero_slack() {
        let mut r = report(1, 0, 3, 3, 3, 3);
        r.assertion = TopologyAssertion::Ruled { a: 1, b: 0 };
        let v = evaluate_inequality(&InequalityId::Eq15, &r).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!(is_zero_slack(&v));
    }

    #[test]
    fn eq13_keeps_half_integers() {
        let mut r = report(2, 0, 4, 3, 2, 3);
        r.assertion = TopologyAssertion::Ruled { a: 0, b: 1 };
        let v = evaluate_inequality(&InequalityId::Eq13, &r).unwrap();
        // 4 - 2 - 3/2
        assert_eq!(v.slack, Some(BigRational::new(1.into(), 2.into())));
    }

    #[test]
    fn eq6_trivial_when_no_excess_components() {
        for (h, g, k) in [(1, 1, 0), (2, 3, 17), (5, 1, 1)] {
            let r = report(h, g, k, k, k.max(1), k.max(1));
            let v = evaluate_inequality(&InequalityId::Eq6, &r).unwrap();
            assert_eq!(v.status, Status::Holds);
        }
    }

    #[test]
    fn flag_gated_inequalities() {
        let r = report(2, 0, 10, 10, 5, 5);
        assert_eq!(
            evaluate_inequality(&InequalityId::Eq22, &r).unwrap().status,
            Status::NotApplicable
        );
        let mut asserted = r.clone();
        asserted.assertion = TopologyAssertion::NotRationalOrRuled;
        assert_eq!(
            evaluate_inequality(&InequalityId::Eq22, &asserted).unwrap().slack,
            Some(q(50 - 13))
        );
        assert_eq!(
            evaluate_inequality(&InequalityId::Eq6, &r).unwrap().status,
            Status::NotApplicable
        );
    }

    #[test]
    fn k2_bound_examples() {
        let mut r = report(2, 0, 10, 10, 5, 5);
        r.assertion = TopologyAssertion::NotRationalOrRuled;
        let b: Vec<_> = k2_lower_bounds(&r).into_iter().map(|b| (b.id, b.bound)).collect();
        assert_eq!(b, vec![(InequalityId::K2Li, -2), (InequalityId::K2Stipsicz, -4)]);

        let r = report(2, 2, 3, 0, 1, 4);
        let b: Vec<_> = k2_lower_bounds(&r).into_iter().map(|b| (b.id, b.bound)).collect();
        assert_eq!(b, vec![(InequalityId::K2Taubes, 0), (InequalityId::K2Kneser, 2)]);

        let trivial = report(1, 1, 0, 0, 0, 0);
        assert!(k2_lower_bounds(&trivial).is_empty());
    }

    #[test]
    fn undecided_k2_check_is_unknown() {
        let r = report(2, 2, 3, 0, 1, 4);
        assert_eq!(
            evaluate_inequality(&InequalityId::K2Kneser, &r).unwrap().status,
            Status::Unknown
        );
        let mut exact = r.clone();
        exact.k_squared = Some(1);
        let v = evaluate_inequality(&InequalityId::K2Kneser, &exact).unwrap();
        assert_eq!((v.status, v.slack), (Status::Violated, Some(q(-1))));
    }

    #[test]
    fn commutator_genus_examples() {
        assert_eq!(minimal_commutator_genus(2, 30), Ok(2));
        assert_eq!(minimal_commutator_genus(2, 31), Ok(3));
        assert_eq!(minimal_commutator_genus(3, 1), Ok(2));
        assert_eq!(minimal_commutator_genus(1, 5), Err(CommutatorError::GenusTooSmall(1)));
        assert_eq!(minimal_commutator_genus(2, 0), Err(CommutatorError::NonPositivePower));
    }

    #[test]
    fn refuses_unstable_and_trivial_input() {
        let unstable = FibrationBuilder::new(1, 0)
            .fiber(FiberConfiguration::new(
                vec![Piece::new(0, 1), Piece::new(1, 1)],
                vec![Curve::new(0, 1)],
            ))
            .build()
            .unwrap();
        assert_eq!(certify(&unstable), Err(CertifyError::NotSemistable { fiber: 0, piece: 0 }));
        let trivial = FibrationBuilder::new(3, 0).build().unwrap();
        assert_eq!(certify(&trivial), Err(CertifyError::TrivialPencil));
    }

}
