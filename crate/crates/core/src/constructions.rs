//! Building fibration descriptions: parallel twist fibers, fiber sums with
//! trivial bundles, pullbacks along unbranched covers of the base, a seed
//! catalog, and random generators for property testing.

use thiserror::Error;

use crate::certifier::{minimal_commutator_genus, CommutatorError};
use crate::homology::IntegerMatrix;
use crate::invariants::{FibrationBuilder, FibrationDescription, InvariantError};
use crate::surface_config::{Curve, FiberConfiguration, Piece, SurfaceError, ValidatedFiber};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("separating split ({left}, {right}) does not partition genus {h} into positive parts")]
    InvalidPartition { left: u32, right: u32, h: u32 },
    #[error("need at least one parallel copy")]
    NoCopies,
    #[error("fiber sum needs a positive extra base genus")]
    ZeroExtraGenus,
    #[error("cover degree must be positive")]
    ZeroDegree,
    #[error("the 2-sphere has no connected unbranched cover of degree {0}")]
    BaseSphereNoCover(u64),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Invariants(#[from] InvariantError),
    #[error(transparent)]
    Commutator(#[from] CommutatorError),
}

/// Which curve is twisted: a nonseparating one, or a separating one splitting
/// the fiber into genera `left + right = h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    Nonseparating,
    Separating { left: u32, right: u32 },
}

/// The singular fiber with `k` parallel copies of one vanishing cycle, as
/// produced by base change `z -> z^k` and minimal resolution.
///
/// Nonseparating: a genus `h-1` piece with two boundaries closed into a cycle
/// through `k-1` annuli (`k` components). Separating: the two sides joined by
/// a chain of `k-1` annuli (`k+1` components). Curves carry the class `a_1`
/// or zero respectively.
pub fn parallel_twist_fiber(kind: CurveKind, k: u32, h: u32) -> Result<ValidatedFiber, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::NoCopies);
    }
    if h == 0 {
        return Err(SurfaceError::InvalidFiberGenus(h).into());
    }
    let k = k as usize;
    let dim = 2 * h as usize;
    let cfg = match kind {
        CurveKind::Nonseparating => {
            let mut class = vec![0; dim];
            class[0] = 1;
            let mut pieces = vec![Piece::new(h - 1, 2)];
            pieces.extend(std::iter::repeat_n(Piece::new(0, 2), k - 1));
            let curves = (0..k)
                .map(|i| Curve::with_homology(i, (i + 1) % k, class.clone()))
                .collect();
            FiberConfiguration::new(pieces, curves)
        }
        CurveKind::Separating { left, right } => {
            if left == 0 || right == 0 || left + right != h {
                return Err(ConstructionError::InvalidPartition { left, right, h });
            }
            let mut pieces = vec![Piece::new(left, 1)];
            pieces.extend(std::iter::repeat_n(Piece::new(0, 2), k - 1));
            pieces.push(Piece::new(right, 1));
            let curves = (0..k)
                .map(|i| Curve::with_homology(i, i + 1, vec![0; dim]))
                .collect();
            FiberConfiguration::new(pieces, curves)
        }
    };
    Ok(cfg.validate(h)?)
}

/// Fiber sum with the trivial genus-`h` bundle over a surface of genus
/// `extra_base_genus`. Known handle matrices are extended by identities (a
/// pencil gains identity handles outright). The signature and any assertion
/// about the total space are dropped since the total space changes.
pub fn fiber_sum_trivial_bundle(
    fd: &FibrationDescription,
    extra_base_genus: u32,
) -> Result<FibrationDescription, ConstructionError> {
    if extra_base_genus == 0 {
        return Err(ConstructionError::ZeroExtraGenus);
    }
    let size = 2 * fd.fiber_genus() as usize;
    let handles = match fd.handle_matrices() {
        Some(existing) => Some(existing.to_vec()),
        None if fd.base_genus() == 0 => Some(Vec::new()),
        None => None,
    }
    .map(|mut hs| {
        hs.extend((0..2 * extra_base_genus).map(|_| IntegerMatrix::identity(size)));
        hs
    });
    Ok(FibrationBuilder::new(fd.fiber_genus(), fd.base_genus() + extra_base_genus)
        .fibers(fd.fibers().iter().map(|f| f.config().clone()))
        .handle_matrices(handles)
        .build()?)
}

/// Pullback along a connected unbranched degree-`d` cover of the base:
/// base genus `d(g-1) + 1`, every singular fiber repeated `d` times, and all
/// counts multiplied by `d`. Handle matrices are dropped for `d > 1`; the
/// signature, being multiplicative under finite covers, is scaled.
pub fn pullback_cover(fd: &FibrationDescription, d: u64) -> Result<FibrationDescription, ConstructionError> {
    if d == 0 {
        return Err(ConstructionError::ZeroDegree);
    }
    if d == 1 {
        return Ok(fd.clone());
    }
    if fd.base_genus() == 0 {
        return Err(ConstructionError::BaseSphereNoCover(d));
    }
    let g = u64::from(fd.base_genus());
    let new_g = u32::try_from(d * (g - 1) + 1).map_err(|_| {
        InvariantError::InvalidCounts(format!("base genus overflows for cover degree {d}"))
    })?;
    let fibers: Vec<FiberConfiguration> = (0..d)
        .flat_map(|_| fd.fibers().iter().map(|f| f.config().clone()))
        .collect();
    Ok(FibrationBuilder::new(fd.fiber_genus(), new_g)
        .fibers(fibers)
        .signature(fd.signature().map(|s| s * d as i64))
        .assertion(fd.assertion())
        .build()?)
}

/// The `k`-th power of a Dehn twist as a single singular fiber over a disk,
/// closed up over the smallest base genus the commutator-length bound does
/// not exclude. That genus is an annotation: the bound does not promise a
/// factorization exists there.
pub fn twist_power(h: u32, kind: CurveKind, k: u32) -> Result<FibrationDescription, ConstructionError> {
    let g = minimal_commutator_genus(h, u64::from(k))?;
    let fiber = parallel_twist_fiber(kind, k, h)?;
    let g = u32::try_from(g).map_err(|_| InvariantError::InvalidCounts("base genus overflow".into()))?;
    Ok(FibrationBuilder::new(h, g).fiber(fiber.into_config()).build()?)
}

/// Twelve nodal fibers on a genus-1 pencil with vanishing cycles alternating
/// `a, b`, the monodromy word `(t_a t_b)^6` of the rational elliptic surface.
pub fn elliptic_12() -> FibrationDescription {
    let fibers = (0..12).map(|i| {
        let class = if i % 2 == 0 { vec![1, 0] } else { vec![0, 1] };
        FiberConfiguration::new(vec![Piece::new(0, 2)], vec![Curve::with_homology(0, 0, class)])
    });
    FibrationBuilder::new(1, 0)
        .fibers(fibers)
        .signature(Some(-8))
        .build()
        .expect("elliptic fibers are valid")
}

/// Product bundle `F_h x F_g` with identity handle monodromies.
pub fn trivial_bundle(g: u32, h: u32) -> Result<FibrationDescription, ConstructionError> {
    let handles = (0..2 * g).map(|_| IntegerMatrix::identity(2 * h as usize)).collect();
    Ok(FibrationBuilder::new(h, g).handle_matrices(Some(handles)).build()?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub provenance: String,
    pub fibration: FibrationDescription,
}

fn entry(name: &str, description: &str, provenance: &str, fibration: FibrationDescription) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        description: description.to_string(),
        provenance: provenance.to_string(),
        fibration,
    }
}

pub fn catalog() -> Vec<CatalogEntry> {
    const TWIST_NOTE: &str =
        "base genus is the smallest not excluded by the commutator-length bound; realizability there is not claimed";
    let twist = |h, kind, k| twist_power(h, kind, k).expect("catalog twist powers are valid");
    vec![
        entry(
            "ELLIPTIC_12",
            "rational elliptic surface: genus-1 pencil with 12 nodal fibers, monodromy (t_a t_b)^6, signature -8",
            "classical; b1 = 0, b2+ = 1, b2- = 9, K^2 = 0",
            elliptic_12(),
        ),
        entry(
            "TWIST_POWER_H2_NONSEP_K6",
            "6 parallel nonseparating vanishing cycles on a genus-2 fiber, one singular fiber",
            TWIST_NOTE,
            twist(2, CurveKind::Nonseparating, 6),
        ),
        entry(
            "TWIST_POWER_H2_SEP_1_1_K5",
            "5 parallel separating vanishing cycles splitting a genus-2 fiber 1 + 1, one singular fiber",
            TWIST_NOTE,
            twist(2, CurveKind::Separating { left: 1, right: 1 }, 5),
        ),
        entry(
            "TWIST_POWER_H3_NONSEP_K48",
            "48 parallel nonseparating vanishing cycles on a genus-3 fiber, one singular fiber",
            TWIST_NOTE,
            twist(3, CurveKind::Nonseparating, 48),
        ),
        entry(
            "TWIST_POWER_H3_SEP_1_2_K7",
            "7 parallel separating vanishing cycles splitting a genus-3 fiber 1 + 2, one singular fiber",
            TWIST_NOTE,
            twist(3, CurveKind::Separating { left: 1, right: 2 }, 7),
        ),
        entry(
            "TRIVIAL_BUNDLE_G1_H1",
            "product of two tori",
            "no singular fibers; identity handle monodromies",
            trivial_bundle(1, 1).expect("valid"),
        ),
        entry(
            "TRIVIAL_BUNDLE_G2_H1",
            "torus times genus-2 surface",
            "no singular fibers; identity handle monodromies",
            trivial_bundle(2, 1).expect("valid"),
        ),
        entry(
            "TRIVIAL_BUNDLE_G1_H3",
            "genus-3 surface times torus",
            "no singular fibers; identity handle monodromies",
            trivial_bundle(1, 3).expect("valid"),
        ),
    ]
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// Random semistable data for property tests.
pub mod random {
    use rand::seq::SliceRandom;
    use rand::Rng;

    use super::*;

    #[derive(Debug, Clone, Copy)]
    pub struct FiberShape {
        pub max_curves: usize,
        /// Require at least three nodes on every sphere component.
        pub stable: bool,
    }

    /// A random connected, semistable (or stable) singular fiber for genus
    /// `h`, or `None` if no attempt succeeded.
    pub fn fiber<R: Rng + ?Sized>(rng: &mut R, h: u32, shape: FiberShape) -> Option<FiberConfiguration> {
        let min_nodes = if shape.stable { 3 } else { 2 };
        for _ in 0..200 {
            let curves = rng.gen_range(1..=shape.max_curves);
            let pieces = rng.gen_range(1..=curves + 1);
            // sum of genera = pieces - curves + h - 1
            let budget = pieces as i64 - curves as i64 + i64::from(h) - 1;
            if budget < 0 {
                continue;
            }

            let mut edges = Vec::with_capacity(curves);
            for v in 1..pieces {
                edges.push((rng.gen_range(0..v), v));
            }
            while edges.len() < curves {
                edges.push((rng.gen_range(0..pieces), rng.gen_range(0..pieces)));
            }
            edges.shuffle(rng);
            for e in &mut edges {
                if rng.gen_bool(0.5) {
                    *e = (e.1, e.0);
                }
            }

            let mut degree = vec![0u32; pieces];
            for &(a, b) in &edges {
                degree[a] += 1;
                degree[b] += 1;
            }
            let mut genus = vec![0u32; pieces];
            let mut left = budget as u32;
            for (gj, &dj) in genus.iter_mut().zip(&degree) {
                if dj < min_nodes {
                    if left == 0 {
                        break;
                    }
                    *gj = 1;
                    left -= 1;
                }
            }
            if genus.iter().zip(&degree).any(|(&gj, &dj)| gj == 0 && dj < min_nodes) {
                continue;
            }
            for _ in 0..left {
                genus[rng.gen_range(0..pieces)] += 1;
            }

            let pieces = genus.iter().zip(&degree).map(|(&gj, &dj)| Piece::new(gj, dj)).collect();
            let curves = edges.into_iter().map(|(a, b)| Curve::new(a, b)).collect();
            return Some(FiberConfiguration::new(pieces, curves));
        }
        None
    }

    #[derive(Debug, Clone, Copy)]
    pub struct DescriptionShape {
        pub h_range: (u32, u32),
        pub max_base_genus: u32,
        pub max_fibers: usize,
        pub fiber: FiberShape,
    }

    /// A random description whose fibers are all drawn with [`fiber`].
    pub fn description<R: Rng + ?Sized>(rng: &mut R, shape: DescriptionShape) -> FibrationDescription {
        loop {
            let h = rng.gen_range(shape.h_range.0..=shape.h_range.1);
            let g = rng.gen_range(0..=shape.max_base_genus);
            let d = rng.gen_range(0..=shape.max_fibers);
            let fibers: Option<Vec<_>> = (0..d).map(|_| fiber(rng, h, shape.fiber)).collect();
            let Some(fibers) = fibers else { continue };
            if let Ok(fd) = FibrationBuilder::new(h, g).fibers(fibers).build() {
                return fd;
            }
        }
    }
}
