//! Global numerical invariants of a fibration description.

use serde::{Serialize, Serializer};
use thiserror::Error;

use num_bigint::BigInt;

use crate::homology::{self, HomologyError, IntegerMatrix};
use crate::surface_config::{FiberConfiguration, SurfaceError, ValidatedFiber};
use crate::verdict::{q, InequalityId, InequalityVerdict};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("fiber genus must be at least 1, got {0}")]
    InvalidFiberGenus(u32),
    #[error("fiber {index}: {source}")]
    Fiber {
        index: usize,
        #[source]
        source: SurfaceError,
    },
    #[error("expected {expected} handle matrices (two per base handle), found {found}")]
    HandleCount { expected: usize, found: usize },
    #[error("handle matrix {index} is not {size}x{size}")]
    HandleDimension { index: usize, size: usize },
    #[error("handle matrix {index} is not symplectic")]
    MatrixNotSymplectic { index: usize },
    #[error("chi - 2 + 2 b1 +/- signature must be even (chi = {chi}, signature = {signature})")]
    ParityMismatch { chi: i64, signature: i64 },
    #[error("signature {signature} forces a negative Betti number (chi = {chi}, b1 = {b1})")]
    NegativeBetti { chi: i64, b1: u64, signature: i64 },
    #[error("exact b1 = {b1} lies outside the structural range [{lo}, {hi}]")]
    B1OutOfRange { b1: u64, lo: u64, hi: u64 },
    #[error("invalid counts: {0}")]
    InvalidCounts(String),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// What the user asserts about the total space, gating the inequalities whose
/// hypotheses cannot be read off combinatorial data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum TopologyAssertion {
    #[default]
    Unspecified,
    NotRationalOrRuled,
    /// Blowup in `b` points of a sphere bundle over a surface of genus `a`.
    Ruled { a: u32, b: u32 },
}

/// A validated fibration: fiber genus `h >= 1`, base genus `g`, singular
/// fibers, and optional homological and topological annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationDescription {
    h: u32,
    g: u32,
    fibers: Vec<ValidatedFiber>,
    handles: Option<Vec<IntegerMatrix>>,
    signature: Option<i64>,
    assertion: TopologyAssertion,
}

#[derive(Debug, Clone, Default)]
pub struct FibrationBuilder {
    h: u32,
    g: u32,
    fibers: Vec<FiberConfiguration>,
    handles: Option<Vec<IntegerMatrix>>,
    signature: Option<i64>,
    assertion: TopologyAssertion,
}

impl FibrationBuilder {
    pub fn new(h: u32, g: u32) -> Self {
        FibrationBuilder {
            h,
            g,
            ..Default::default()
        }
    }

    pub fn fiber(mut self, cfg: FiberConfiguration) -> Self {
        self.fibers.push(cfg);
        self
    }

    pub fn fibers(mut self, cfgs: impl IntoIterator<Item = FiberConfiguration>) -> Self {
        self.fibers.extend(cfgs);
        self
    }

    /// Handle monodromies `A_1, B_1, ..., A_g, B_g` acting on `H_1` of the fiber.
    pub fn handle_matrices(mut self, handles: Option<Vec<IntegerMatrix>>) -> Self {
        self.handles = handles;
        self
    }

    pub fn signature(mut self, signature: Option<i64>) -> Self {
        self.signature = signature;
        self
    }

    pub fn assertion(mut self, assertion: TopologyAssertion) -> Self {
        self.assertion = assertion;
        self
    }

    pub fn build(self) -> Result<FibrationDescription, InvariantError> {
        let h = self.h;
        if h == 0 {
            return Err(InvariantError::InvalidFiberGenus(h));
        }
        let fibers = self
            .fibers
            .into_iter()
            .enumerate()
            .map(|(index, cfg)| cfg.validate(h).map_err(|source| InvariantError::Fiber { index, source }))
            .collect::<Result<Vec<_>, _>>()?;

        if let Some(handles) = &self.handles {
            let expected = 2 * self.g as usize;
            if handles.len() != expected {
                return Err(InvariantError::HandleCount {
                    expected,
                    found: handles.len(),
                });
            }
            let size = 2 * h as usize;
            for (index, m) in handles.iter().enumerate() {
                if m.rows() != size || m.cols() != size {
                    return Err(InvariantError::HandleDimension { index, size });
                }
                if !homology::is_symplectic_matrix(m, h as usize)? {
                    return Err(InvariantError::MatrixNotSymplectic { index });
                }
            }
        }

        let fd = FibrationDescription {
            h,
            g: self.g,
            fibers,
            handles: self.handles,
            signature: self.signature,
            assertion: self.assertion,
        };

        let (b1, _) = fd.b1_state()?;
        if let Some(sigma) = fd.signature {
            let chi = fd.euler_characteristic();
            // b2 = chi - 2 + 2 b1, so the parity of b2 +/- sigma does not depend on b1
            if (chi + sigma).rem_euclid(2) != 0 {
                return Err(InvariantError::ParityMismatch {
                    chi,
                    signature: sigma,
                });
            }
            let b1_hi = b1.upper();
            if chi - 2 + 2 * b1_hi as i64 - sigma.abs() < 0 {
                return Err(InvariantError::NegativeBetti {
                    chi,
                    b1: b1_hi,
                    signature: sigma,
                });
            }
        }
        Ok(fd)
    }
}

impl FibrationDescription {
    pub fn fiber_genus(&self) -> u32 {
        self.h
    }

    pub fn base_genus(&self) -> u32 {
        self.g
    }

    pub fn is_pencil(&self) -> bool {
        self.g == 0
    }

    pub fn fibers(&self) -> &[ValidatedFiber] {
        &self.fibers
    }

    pub fn handle_matrices(&self) -> Option<&[IntegerMatrix]> {
        self.handles.as_deref()
    }

    pub fn signature(&self) -> Option<i64> {
        self.signature
    }

    pub fn assertion(&self) -> TopologyAssertion {
        self.assertion
    }

    /// A builder holding copies of every field, for deriving new descriptions.
    pub fn to_builder(&self) -> FibrationBuilder {
        FibrationBuilder {
            h: self.h,
            g: self.g,
            fibers: self.fibers.iter().map(|f| f.config().clone()).collect(),
            handles: self.handles.clone(),
            signature: self.signature,
            assertion: self.assertion,
        }
    }

    pub fn counts(&self) -> Counts {
        total_counts(self)
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(self.g, self.h, self.counts().k)
    }

    pub fn all_semistable(&self) -> bool {
        self.fibers.iter().all(ValidatedFiber::is_semistable)
    }

    pub fn all_stable(&self) -> bool {
        self.fibers.iter().all(ValidatedFiber::is_stable)
    }

    /// Structural range for `b_1`: `[2g, 2g + 2h]` over positive-genus bases,
    /// `[0, 2h - 1]` for pencils with a nonseparating vanishing cycle, and
    /// `[0, 2h]` for the remaining pencils.
    pub fn structural_b1_range(&self) -> (u64, u64) {
        let (g, h) = (u64::from(self.g), u64::from(self.h));
        if g >= 1 {
            (2 * g, 2 * g + 2 * h)
        } else if self.counts().n > 0 {
            (0, 2 * h - 1)
        } else {
            (0, 2 * h)
        }
    }

    /// `b_1` together with the `H_1` torsion when the homology data suffices
    /// to compute it exactly.
    pub fn b1_state(&self) -> Result<(B1State, Option<Vec<BigInt>>), InvariantError> {
        let (lo, hi) = self.structural_b1_range();
        match homology::first_homology(self) {
            Ok(summary) => {
                if summary.b1 < lo || summary.b1 > hi {
                    return Err(InvariantError::B1OutOfRange { b1: summary.b1, lo, hi });
                }
                Ok((B1State::Exact(summary.b1), Some(summary.torsion)))
            }
            Err(HomologyError::MissingHomologyData { .. } | HomologyError::MissingHandleMatrices) => {
                Ok((B1State::Interval { lo, hi }, None))
            }
            Err(e) => Err(e.into()),
        }
    }

    pub fn invariant_report(&self) -> Result<InvariantReport, InvariantError> {
        let counts = self.counts();
        let chi = self.euler_characteristic();
        let (b1, torsion) = self.b1_state()?;

        let (b2_plus, b2_minus) = match (b1, self.signature) {
            (B1State::Exact(b), Some(sigma)) => {
                let (p, m) = betti_resolution(chi, b, sigma)?;
                (Some(p), Some(m))
            }
            _ => (None, None),
        };

        // K^2 = 2 chi + 3 sigma regardless of b1
        let k_squared = match (b1, b2_minus, self.signature) {
            (B1State::Exact(b), Some(m), _) => Some(canonical_square(chi, b, m)),
            (_, _, Some(sigma)) => Some(2 * chi + 3 * sigma),
            _ => None,
        };
        let k_squared_upper_bound = if counts.d >= 1 {
            Some(canonical_square_upper_bound(self)?)
        } else {
            None
        };

        Ok(InvariantReport {
            h: self.h,
            g: self.g,
            chi,
            counts,
            b1,
            torsion,
            b2_minus_lower: b2_minus_lower_bound(counts.components, counts.d)?,
            b2_plus,
            b2_minus,
            signature: self.signature,
            k_squared,
            k_squared_upper_bound,
            all_stable: self.all_stable(),
            assertion: self.assertion,
        })
    }
}

/// The five counts: vanishing cycles `k = n + s`, singular fibers `D`, and
/// components of singular fibers `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Counts {
    pub k: u64,
    pub n: u64,
    pub s: u64,
    #[serde(rename = "D")]
    pub d: u64,
    #[serde(rename = "N")]
    pub components: u64,
}

impl Counts {
    pub fn scaled(&self, factor: u64) -> Counts {
        Counts {
            k: self.k * factor,
            n: self.n * factor,
            s: self.s * factor,
            d: self.d * factor,
            components: self.components * factor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum B1State {
    Exact(u64),
    Interval { lo: u64, hi: u64 },
}

impl B1State {
    pub fn exact(&self) -> Option<u64> {
        match *self {
            B1State::Exact(b) => Some(b),
            B1State::Interval { .. } => None,
        }
    }

    pub fn upper(&self) -> u64 {
        match *self {
            B1State::Exact(b) => b,
            B1State::Interval { hi, .. } => hi,
        }
    }

    pub fn lower(&self) -> u64 {
        match *self {
            B1State::Exact(b) => b,
            B1State::Interval { lo, .. } => lo,
        }
    }
}

impl Serialize for B1State {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(1))?;
        match *self {
            B1State::Exact(b) => map.serialize_entry("exact", &b)?,
            B1State::Interval { lo, hi } => map.serialize_entry("interval", &[lo, hi])?,
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub h: u32,
    pub g: u32,
    pub chi: i64,
    pub counts: Counts,
    pub b1: B1State,
    /// `H_1` torsion invariant factors; reported for completeness, no
    /// inequality consumes it.
    #[serde(serialize_with = "crate::document::serialize_opt_bigints")]
    pub torsion: Option<Vec<BigInt>>,
    pub b2_minus_lower: u64,
    pub b2_plus: Option<u64>,
    pub b2_minus: Option<u64>,
    pub signature: Option<i64>,
    pub k_squared: Option<i64>,
    pub k_squared_upper_bound: Option<i64>,
    pub all_stable: bool,
    pub assertion: TopologyAssertion,
}

impl InvariantReport {
    /// A report carrying only counts, for evaluating inequalities on raw
    /// numbers. Everything homological is left at its structural bound.
    pub fn from_counts(h: u32, g: u32, counts: Counts, assertion: TopologyAssertion) -> Self {
        let b1_range = if g >= 1 {
            (2 * u64::from(g), 2 * u64::from(g) + 2 * u64::from(h))
        } else if counts.n > 0 {
            (0, 2 * u64::from(h) - 1)
        } else {
            (0, 2 * u64::from(h))
        };
        let chi = euler_characteristic(g, h, counts.k);
        let b2_minus_lower = if counts.d >= 1 {
            1 + counts.components.saturating_sub(counts.d)
        } else {
            0
        };
        let k_squared_upper_bound = (counts.d >= 1).then(|| {
            5 * chi - 6 + 6 * b1_range.1 as i64 - 6 * b2_minus_lower as i64
        });
        InvariantReport {
            h,
            g,
            chi,
            counts,
            b1: B1State::Interval {
                lo: b1_range.0,
                hi: b1_range.1,
            },
            torsion: None,
            b2_minus_lower,
            b2_plus: None,
            b2_minus: None,
            signature: None,
            k_squared: None,
            k_squared_upper_bound,
            all_stable: false,
            assertion,
        }
    }
}

/// `chi(X) = 4(g-1)(h-1) + k`.
pub fn euler_characteristic(g: u32, h: u32, k: u64) -> i64 {
    4 * (i64::from(g) - 1) * (i64::from(h) - 1) + k as i64
}

pub fn total_counts(fd: &FibrationDescription) -> Counts {
    fd.fibers.iter().fold(Counts::default(), |acc, f| {
        let k = f.curve_count() as u64;
        let s = f.separating_count() as u64;
        Counts {
            k: acc.k + k,
            n: acc.n + (k - s),
            s: acc.s + s,
            d: acc.d + 1,
            components: acc.components + f.component_count() as u64,
        }
    })
}

/// `1 + N - D`, the dimension of a negative definite subspace spanned by the
/// fiber class complement and all but one component of each singular fiber.
/// Zero without singular fibers.
pub fn b2_minus_lower_bound(components: u64, d: u64) -> Result<u64, InvariantError> {
    if components < d {
        return Err(InvariantError::InvalidCounts(format!(
            "N = {components} is smaller than D = {d}"
        )));
    }
    Ok(if d == 0 { 0 } else { 1 + components - d })
}

/// The component estimates `N >= s + D`, `N >= k - (h-1) D`, and for all-stable
/// fibrations with `h >= 2` the bounds `k <= 3(h-1) D`, `N <= 2(h-1) D`.
pub fn component_bounds_check(counts: &Counts, h: u32, all_stable: bool) -> Vec<InequalityVerdict> {
    let k = counts.k as i64;
    let s = counts.s as i64;
    let d = counts.d as i64;
    let big_n = counts.components as i64;
    let hm1 = i64::from(h) - 1;
    let mut out = vec![
        InequalityVerdict::from_slack(InequalityId::Eq4, q(big_n - s - d)),
        InequalityVerdict::from_slack(InequalityId::Eq5, q(big_n - k + hm1 * d)),
    ];
    if all_stable && h >= 2 {
        out.push(InequalityVerdict::from_slack(InequalityId::Rem7Cycles, q(3 * hm1 * d - k)));
        out.push(InequalityVerdict::from_slack(InequalityId::Rem7Components, q(2 * hm1 * d - big_n)));
    } else {
        out.push(InequalityVerdict::not_applicable(InequalityId::Rem7Cycles));
        out.push(InequalityVerdict::not_applicable(InequalityId::Rem7Components));
    }
    out
}

/// `(b2+, b2-)` from `b2 = chi - 2 + 2 b1` and the signature.
pub fn betti_resolution(chi: i64, b1: u64, signature: i64) -> Result<(u64, u64), InvariantError> {
    let b2 = chi - 2 + 2 * b1 as i64;
    let (plus2, minus2) = (b2 + signature, b2 - signature);
    if plus2.rem_euclid(2) != 0 {
        return Err(InvariantError::ParityMismatch { chi, signature });
    }
    if plus2 < 0 || minus2 < 0 {
        return Err(InvariantError::NegativeBetti { chi, b1, signature });
    }
    Ok(((plus2 / 2) as u64, (minus2 / 2) as u64))
}

/// `K^2 = 5 chi - 6 + 6 b1 - 6 b2-`.
pub fn canonical_square(chi: i64, b1: u64, b2_minus: u64) -> i64 {
    5 * chi - 6 + 6 * b1 as i64 - 6 * b2_minus as i64
}

/// Upper bound on `K^2` from the largest admissible `b_1` and the lower bound
/// `b2- >= 1 + N - D`.
pub fn canonical_square_upper_bound(fd: &FibrationDescription) -> Result<i64, InvariantError> {
    let counts = fd.counts();
    if counts.d == 0 {
        return Err(InvariantError::InvalidCounts(
            "no singular fibers: the b2- lower bound is vacuous".to_string(),
        ));
    }
    let (b1, _) = fd.b1_state()?;
    let b2m = b2_minus_lower_bound(counts.components, counts.d)?;
    Ok(canonical_square(fd.euler_characteristic(), b1.upper(), b2m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface_config::{Curve, Piece};

    fn nodal(class: Option<Vec<i64>>) -> FiberConfiguration {
        FiberConfiguration::new(
            vec![Piece::new(0, 2)],
            vec![Curve {
                ends: (0, 0),
                homology: class,
            }],
        )
    }

    fn elliptic(signature: Option<i64>) -> FibrationDescription {
        let fibers = (0..12).map(|i| nodal(Some(if i % 2 == 0 { vec![1, 0] } else { vec![0, 1] })));
        FibrationBuilder::new(1, 0)
            .fibers(fibers)
            .signature(signature)
            .build()
            .unwrap()
    }

    #[test]
    fn euler_characteristic_examples() {
        assert_eq!(euler_characteristic(0, 1, 12), 12);
        assert_eq!(euler_characteristic(1, 3, 0), 0);
        assert_eq!(euler_characteristic(0, 2, 20), 16);
    }

    #[test]
    fn counts_of_elliptic_data() {
        let fd = elliptic(None);
        assert_eq!(
            fd.counts(),
            Counts {
                k: 12,
                n: 12,
                s: 0,
                d: 12,
                components: 12
            }
        );
        let empty = FibrationBuilder::new(2, 1).build().unwrap();
        assert_eq!(empty.counts(), Counts::default());
    }

    #[test]
    fn separating_twist_power_counts() {
        // five parallel separating curves on a genus-2 fiber
        let mut pieces = vec![Piece::new(1, 1)];
        pieces.extend(std::iter::repeat_n(Piece::new(0, 2), 4));
        pieces.push(Piece::new(1, 1));
        let curves = (0..5).map(|i| Curve::new(i, i + 1)).collect();
        let fd = FibrationBuilder::new(2, 0)
            .fiber(FiberConfiguration::new(pieces, curves))
            .build()
            .unwrap();
        assert_eq!(
            fd.counts(),
            Counts {
                k: 5,
                n: 0,
                s: 5,
                d: 1,
                components: 6
            }
        );
    }

    #[test]
    fn b2_minus_bound_examples() {
        assert_eq!(b2_minus_lower_bound(12, 12).unwrap(), 1);
        assert_eq!(b2_minus_lower_bound(6, 1).unwrap(), 6);
        assert_eq!(b2_minus_lower_bound(0, 0).unwrap(), 0);
        assert!(matches!(b2_minus_lower_bound(1, 2), Err(InvariantError::InvalidCounts(_))));
    }

    #[test]
    fn component_bound_examples() {
        let c = Counts {
            k: 12,
            n: 12,
            s: 0,
            d: 12,
            components: 12,
        };
        let v = component_bounds_check(&c, 1, false);
        assert_eq!(v[0].slack, Some(q(0)));
        assert_eq!(v[1].slack, Some(q(0)));
        assert!(v.iter().all(|x| !x.is_violated()));

        let c = Counts {
            k: 5,
            n: 0,
            s: 5,
            d: 1,
            components: 6,
        };
        let v = component_bounds_check(&c, 2, false);
        assert_eq!(v[0].slack, Some(q(0)));
        assert_eq!(v[1].slack, Some(q(2)));

        let c = Counts {
            k: 7,
            n: 7,
            s: 0,
            d: 1,
            components: 2,
        };
        let v = component_bounds_check(&c, 2, true);
        assert_eq!(v[2].id, InequalityId::Rem7Cycles);
        assert!(v[2].is_violated());
        assert_eq!(v[2].slack, Some(q(-4)));
    }

    #[test]
    fn betti_resolution_examples() {
        assert_eq!(betti_resolution(12, 0, -8).unwrap(), (1, 9));
        assert_eq!(betti_resolution(4, 0, 0).unwrap(), (1, 1));
        assert!(matches!(betti_resolution(12, 0, -7), Err(InvariantError::ParityMismatch { .. })));
        assert!(matches!(betti_resolution(4, 0, 4), Err(InvariantError::NegativeBetti { .. })));
    }

    #[test]
    fn canonical_square_examples() {
        assert_eq!(canonical_square(12, 0, 9), 0);
        assert_eq!(canonical_square(4, 4, 1), 32);
        assert_eq!(canonical_square(0, 2, 1), 0);
    }

    #[test]
    fn canonical_square_upper_bound_examples() {
        // b1 = 0 exactly and b2- >= 1: 60 - 6 - 6
        assert_eq!(canonical_square_upper_bound(&elliptic(None)).unwrap(), 48);
        let report = elliptic(Some(-8)).invariant_report().unwrap();
        assert_eq!(report.k_squared, Some(0));
        assert_eq!(report.k_squared_upper_bound, Some(48));

        // genus-2 pencil, 20 nonseparating nodes on distinct fibers, no homology
        let fibers = (0..20).map(|_| FiberConfiguration::new(vec![Piece::new(1, 2)], vec![Curve::new(0, 0)]));
        let fd = FibrationBuilder::new(2, 0).fibers(fibers).build().unwrap();
        assert_eq!(fd.euler_characteristic(), 16);
        assert_eq!(canonical_square_upper_bound(&fd).unwrap(), 86);

        let trivial = FibrationBuilder::new(1, 1).build().unwrap();
        assert!(matches!(
            canonical_square_upper_bound(&trivial),
            Err(InvariantError::InvalidCounts(_))
        ));
    }

    #[test]
    fn elliptic_report() {
        let r = elliptic(Some(-8)).invariant_report().unwrap();
        assert_eq!(r.chi, 12);
        assert_eq!(r.b1, B1State::Exact(0));
        assert_eq!(r.torsion, Some(vec![]));
        assert_eq!((r.b2_plus, r.b2_minus), (Some(1), Some(9)));
        assert_eq!(r.b2_minus_lower, 1);
    }

    #[test]
    fn signature_parity_checked_at_build() {
        let fibers = (0..12).map(|_| nodal(None));
        let err = FibrationBuilder::new(1, 0)
            .fibers(fibers)
            .signature(Some(-7))
            .build()
            .unwrap_err();
        assert!(matches!(err, InvariantError::ParityMismatch { chi: 12, signature: -7 }));
    }

    #[test]
    fn handle_checks_at_build() {
        let err = FibrationBuilder::new(1, 1)
            .handle_matrices(Some(vec![IntegerMatrix::identity(2)]))
            .build()
            .unwrap_err();
        assert_eq!(err, InvariantError::HandleCount { expected: 2, found: 1 });

        let bad = IntegerMatrix::from_rows(&[[1i64, 1], [0, 2]]).unwrap();
        let err = FibrationBuilder::new(1, 1)
            .handle_matrices(Some(vec![IntegerMatrix::identity(2), bad]))
            .build()
            .unwrap_err();
        assert_eq!(err, InvariantError::MatrixNotSymplectic { index: 1 });

        let err = FibrationBuilder::new(1, 1)
            .handle_matrices(Some(vec![IntegerMatrix::identity(2), IntegerMatrix::identity(4)]))
            .build()
            .unwrap_err();
        assert_eq!(err, InvariantError::HandleDimension { index: 1, size: 2 });
    }

    #[test]
    fn fiber_errors_carry_index() {
        let bad = FiberConfiguration::new(vec![Piece::new(0, 1), Piece::new(1, 1)], vec![Curve::new(0, 1)]);
        let err = FibrationBuilder::new(2, 0)
            .fiber(nodal_genus2())
            .fiber(bad)
            .build()
            .unwrap_err();
        assert!(matches!(err, InvariantError::Fiber { index: 1, source: SurfaceError::EulerMismatch { .. } }));
    }

    fn nodal_genus2() -> FiberConfiguration {
        FiberConfiguration::new(vec![Piece::new(1, 2)], vec![Curve::new(0, 0)])
    }

    #[test]
    fn b1_interval_states() {
        let fd = FibrationBuilder::new(2, 0).fiber(nodal_genus2()).build().unwrap();
        assert_eq!(fd.b1_state().unwrap().0, B1State::Interval { lo: 0, hi: 3 });
        let fd = FibrationBuilder::new(2, 3).fiber(nodal_genus2()).build().unwrap();
        assert_eq!(fd.b1_state().unwrap().0, B1State::Interval { lo: 6, hi: 10 });
    }
}
