//! Singular fibers as cut surfaces.
//!
//! A singular fiber with `m` nodes is modelled by cutting the generic genus-`h`
//! fiber along its `m` disjoint vanishing cycles. Each connected piece of the
//! cut surface is an irreducible component of the nodal fiber, and each curve
//! glues two boundary circles back together. The incidence multigraph
//! (pieces as vertices, curves as edges) carries everything the counting
//! arguments need: a curve is separating exactly when its edge is a bridge.

use num_integer::Integer;
use thiserror::Error;

/// One piece of the cut fiber, i.e. one irreducible component of the
/// singular fiber. `boundary_count` is the number of nodes on the component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Piece {
    pub genus: u32,
    pub boundary_count: u32,
}

impl Piece {
    pub const fn new(genus: u32, boundary_count: u32) -> Self {
        Piece {
            genus,
            boundary_count,
        }
    }

    /// Euler characteristic of the piece as a surface with boundary.
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.boundary_count)
    }

    /// Euler characteristic of the closed component obtained by capping the
    /// boundary circles with the node points.
    pub fn component_euler_characteristic(&self) -> i64 {
        2 - 2 * i64::from(self.genus)
    }
}

/// A vanishing cycle: an edge between the two pieces it bounds (possibly the
/// same piece twice) with an optional class in `H_1` of the generic fiber,
/// written in the basis `a_1, b_1, ..., a_h, b_h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub ends: (usize, usize),
    pub homology: Option<Vec<i64>>,
}

impl Curve {
    pub fn new(a: usize, b: usize) -> Self {
        Curve {
            ends: (a, b),
            homology: None,
        }
    }

    pub fn with_homology(a: usize, b: usize, class: Vec<i64>) -> Self {
        Curve {
            ends: (a, b),
            homology: Some(class),
        }
    }

    pub fn is_self_loop(&self) -> bool {
        self.ends.0 == self.ends.1
    }
}

/// Unvalidated description of one singular fiber.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FiberConfiguration {
    pub pieces: Vec<Piece>,
    pub curves: Vec<Curve>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("fiber genus must be at least 1, got {0}")]
    InvalidFiberGenus(u32),
    #[error("a singular fiber needs at least one vanishing cycle")]
    EmptyCurveSet,
    #[error("piece {piece} has no boundary circles")]
    EmptyPiece { piece: usize },
    #[error("curve {curve} references piece {piece}, but there are only {pieces} pieces")]
    IndexOutOfRange {
        curve: usize,
        piece: usize,
        pieces: usize,
    },
    #[error("curve index {curve} out of range ({curves} curves)")]
    CurveIndexOutOfRange { curve: usize, curves: usize },
    #[error("boundary circles total {boundary_total}, expected twice the curve count {curves}")]
    BoundaryMismatch { boundary_total: u64, curves: usize },
    #[error("piece {piece} declares {declared} boundary circles but {incident} curve ends attach to it")]
    NodeCountMismatch {
        piece: usize,
        declared: u32,
        incident: u32,
    },
    #[error("cut pieces have total Euler characteristic {found}, expected 2 - 2h = {expected}")]
    EulerMismatch { found: i64, expected: i64 },
    #[error("incidence graph has {components} connected components; a singular fiber is connected")]
    Disconnected { components: usize },
    #[error("curve {curve} has a homology vector of length {found}, expected {expected}")]
    DimensionMismatch {
        curve: usize,
        expected: usize,
        found: usize,
    },
    #[error("curve {curve} has a non-primitive homology class")]
    NonPrimitiveCurveClass { curve: usize },
    #[error(
        "curve {curve} is {} but its homology class is {}",
        if *.separating { "separating" } else { "nonseparating" },
        if *.separating { "nonzero" } else { "zero" }
    )]
    HomologyInconsistent { curve: usize, separating: bool },
}

impl FiberConfiguration {
    pub fn new(pieces: Vec<Piece>, curves: Vec<Curve>) -> Self {
        FiberConfiguration { pieces, curves }
    }

    /// Checks the configuration against the fiber genus `h` and classifies
    /// every curve as separating or not.
    pub fn validate(self, h: u32) -> Result<ValidatedFiber, SurfaceError> {
        if h == 0 {
            return Err(SurfaceError::InvalidFiberGenus(h));
        }
        if self.curves.is_empty() {
            return Err(SurfaceError::EmptyCurveSet);
        }
        if let Some(piece) = self.pieces.iter().position(|p| p.boundary_count == 0) {
            return Err(SurfaceError::EmptyPiece { piece });
        }

        let npieces = self.pieces.len();
        let mut incident = vec![0u32; npieces];
        for (curve, c) in self.curves.iter().enumerate() {
            for end in [c.ends.0, c.ends.1] {
                if end >= npieces {
                    return Err(SurfaceError::IndexOutOfRange {
                        curve,
                        piece: end,
                        pieces: npieces,
                    });
                }
                incident[end] += 1;
            }
        }

        let boundary_total: u64 = self.pieces.iter().map(|p| u64::from(p.boundary_count)).sum();
        if boundary_total != 2 * self.curves.len() as u64 {
            return Err(SurfaceError::BoundaryMismatch {
                boundary_total,
                curves: self.curves.len(),
            });
        }
        for (piece, (p, &inc)) in self.pieces.iter().zip(&incident).enumerate() {
            if p.boundary_count != inc {
                return Err(SurfaceError::NodeCountMismatch {
                    piece,
                    declared: p.boundary_count,
                    incident: inc,
                });
            }
        }

        let found: i64 = self.pieces.iter().map(Piece::euler_characteristic).sum();
        let expected = 2 - 2 * i64::from(h);
        if found != expected {
            return Err(SurfaceError::EulerMismatch { found, expected });
        }

        let edges: Vec<(usize, usize)> = self.curves.iter().map(|c| c.ends).collect();
        let components = count_components(npieces, &edges, None);
        if components != 1 {
            return Err(SurfaceError::Disconnected { components });
        }

        let separating = bridges(npieces, &edges);

        let dim = 2 * h as usize;
        for (curve, (c, &sep)) in self.curves.iter().zip(&separating).enumerate() {
            let Some(class) = &c.homology else { continue };
            if class.len() != dim {
                return Err(SurfaceError::DimensionMismatch {
                    curve,
                    expected: dim,
                    found: class.len(),
                });
            }
            let content = class.iter().fold(0u64, |acc, &x| acc.gcd(&x.unsigned_abs()));
            match (sep, content) {
                (true, 0) | (false, 1) => {}
                (false, 0) | (true, _) => {
                    return Err(SurfaceError::HomologyInconsistent {
                        curve,
                        separating: sep,
                    })
                }
                (false, _) => return Err(SurfaceError::NonPrimitiveCurveClass { curve }),
            }
        }

        Ok(ValidatedFiber {
            h,
            config: self,
            separating,
        })
    }
}

/// A fiber configuration that passed validation against a fixed fiber genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedFiber {
    h: u32,
    config: FiberConfiguration,
    separating: Vec<bool>,
}

impl ValidatedFiber {
    pub fn fiber_genus(&self) -> u32 {
        self.h
    }

    pub fn config(&self) -> &FiberConfiguration {
        &self.config
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.config.pieces
    }

    pub fn curves(&self) -> &[Curve] {
        &self.config.curves
    }

    pub fn into_config(self) -> FiberConfiguration {
        self.config
    }

    /// Per-curve separating flags, in curve order.
    pub fn separating_flags(&self) -> &[bool] {
        &self.separating
    }

    pub fn is_separating_curve(&self, curve: usize) -> Result<bool, SurfaceError> {
        self.separating
            .get(curve)
            .copied()
            .ok_or(SurfaceError::CurveIndexOutOfRange {
                curve,
                curves: self.separating.len(),
            })
    }

    /// Number of irreducible components of the nodal fiber.
    pub fn component_count(&self) -> usize {
        self.config.pieces.len()
    }

    pub fn curve_count(&self) -> usize {
        self.config.curves.len()
    }

    pub fn separating_count(&self) -> usize {
        self.separating.iter().filter(|&&s| s).count()
    }

    /// Every sphere component carries at least two nodes.
    pub fn is_semistable(&self) -> bool {
        self.first_sphere_with_fewer_nodes(2).is_none()
    }

    /// Every sphere component carries at least three nodes.
    pub fn is_stable(&self) -> bool {
        self.first_sphere_with_fewer_nodes(3).is_none()
    }

    /// Index of the first sphere component with fewer than two nodes, if any.
    pub fn unstable_piece(&self) -> Option<usize> {
        self.first_sphere_with_fewer_nodes(2)
    }

    fn first_sphere_with_fewer_nodes(&self, nodes: u32) -> Option<usize> {
        self.config
            .pieces
            .iter()
            .position(|p| p.genus == 0 && p.boundary_count < nodes)
    }

    /// Euler characteristic of the nodal fiber, summed over its components
    /// with one point removed per node.
    pub fn euler_characteristic(&self) -> i64 {
        let components: i64 = self
            .config
            .pieces
            .iter()
            .map(Piece::component_euler_characteristic)
            .sum();
        components - self.curve_count() as i64
    }
}

/// Number of connected components of a multigraph, optionally ignoring one
/// edge.
pub(crate) fn count_components(n: usize, edges: &[(usize, usize)], skip: Option<usize>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for (i, &(a, b)) in edges.iter().enumerate() {
        if Some(i) == skip {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            components -= 1;
        }
    }
    components
}

/// Bridge flags for every edge of an undirected multigraph.
///
/// Parallel edges are distinguished by edge id, so a doubled edge is never a
/// bridge; self-loops never are either.
pub fn bridges(n: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(a, b)) in edges.iter().enumerate() {
        if a != b {
            adj[a].push((b, id));
            adj[b].push((a, id));
        }
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_bridge = vec![false; edges.len()];
    let mut clock = 0;
    // (vertex, edge used to enter it, next adjacency index)
    let mut stack: Vec<(usize, Option<usize>, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, None, 0));

        while let Some(top) = stack.last_mut() {
            let (v, entry, next) = *top;
            if next < adj[v].len() {
                top.2 += 1;
                let (w, id) = adj[v][next];
                if Some(id) == entry {
                    continue;
                }
                if disc[w] == UNSEEN {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, Some(id), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(&(u, _, _)), Some(id)) = (stack.last(), entry) {
                    low[u] = low[u].min(low[v]);
                    if low[v] > disc[u] {
                        is_bridge[id] = true;
                    }
                }
            }
        }
    }
    is_bridge
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn self_loop_fiber(h: u32) -> FiberConfiguration {
        FiberConfiguration::new(vec![Piece::new(h - 1, 2)], vec![Curve::new(0, 0)])
    }

    fn separating_split() -> FiberConfiguration {
        FiberConfiguration::new(
            vec![Piece::new(1, 1), Piece::new(1, 1)],
            vec![Curve::new(0, 1)],
        )
    }

    #[test]
    fn single_nonseparating_loop() {
        let f = self_loop_fiber(2).validate(2).unwrap();
        assert!(!f.is_separating_curve(0).unwrap());
        assert_eq!(f.component_count(), 1);
        assert!(f.is_semistable());
        assert!(f.is_stable());
        assert_eq!(f.euler_characteristic(), -1);
    }

    #[test]
    fn genus_two_split_is_separating() {
        let f = separating_split().validate(2).unwrap();
        assert!(f.is_separating_curve(0).unwrap());
        assert_eq!(f.component_count(), 2);
        assert_eq!(f.separating_count(), 1);
    }

    #[test]
    fn euler_mismatch_is_rejected() {
        let cfg = FiberConfiguration::new(
            vec![Piece::new(0, 1), Piece::new(1, 1)],
            vec![Curve::new(0, 1)],
        );
        assert_eq!(
            cfg.validate(2),
            Err(SurfaceError::EulerMismatch {
                found: 0,
                expected: -2
            })
        );
    }

    #[test]
    fn structural_errors() {
        assert_eq!(
            FiberConfiguration::new(vec![Piece::new(2, 1)], vec![]).validate(2),
            Err(SurfaceError::EmptyCurveSet)
        );
        assert_eq!(self_loop_fiber(1).validate(0), Err(SurfaceError::InvalidFiberGenus(0)));
        assert!(matches!(
            FiberConfiguration::new(vec![Piece::new(1, 2)], vec![Curve::new(0, 3)]).validate(2),
            Err(SurfaceError::IndexOutOfRange { curve: 0, piece: 3, .. })
        ));
        assert!(matches!(
            FiberConfiguration::new(vec![Piece::new(0, 4)], vec![Curve::new(0, 0)]).validate(2),
            Err(SurfaceError::BoundaryMismatch { boundary_total: 4, curves: 1 })
        ));
        // totals balance but the node counts sit on the wrong pieces
        assert!(matches!(
            FiberConfiguration::new(
                vec![Piece::new(0, 3), Piece::new(1, 1)],
                vec![Curve::new(0, 0), Curve::new(1, 1)]
            )
            .validate(2),
            Err(SurfaceError::NodeCountMismatch { piece: 0, .. })
        ));
    }

    #[test]
    fn disconnected_is_rejected() {
        // two genus-1 pieces each closed up by a self-loop: chi = 0 + 0 - 2 - 2
        let cfg = FiberConfiguration::new(
            vec![Piece::new(1, 2), Piece::new(1, 2)],
            vec![Curve::new(0, 0), Curve::new(1, 1)],
        );
        assert_eq!(cfg.validate(3), Err(SurfaceError::Disconnected { components: 2 }));
    }

    #[test]
    fn homology_consistency() {
        let ok = FiberConfiguration::new(
            vec![Piece::new(1, 2)],
            vec![Curve::with_homology(0, 0, vec![1, 0, 0, 0])],
        );
        assert!(ok.validate(2).is_ok());

        let zero_on_nonsep = FiberConfiguration::new(
            vec![Piece::new(1, 2)],
            vec![Curve::with_homology(0, 0, vec![0, 0, 0, 0])],
        );
        assert_eq!(
            zero_on_nonsep.validate(2),
            Err(SurfaceError::HomologyInconsistent {
                curve: 0,
                separating: false
            })
        );

        let nonzero_on_sep = FiberConfiguration::new(
            vec![Piece::new(1, 1), Piece::new(1, 1)],
            vec![Curve::with_homology(0, 1, vec![0, 1, 0, 0])],
        );
        assert_eq!(
            nonzero_on_sep.validate(2),
            Err(SurfaceError::HomologyInconsistent {
                curve: 0,
                separating: true
            })
        );

        let non_primitive = FiberConfiguration::new(
            vec![Piece::new(1, 2)],
            vec![Curve::with_homology(0, 0, vec![2, 0, 0, 4])],
        );
        assert_eq!(
            non_primitive.validate(2),
            Err(SurfaceError::NonPrimitiveCurveClass { curve: 0 })
        );

        let short = FiberConfiguration::new(
            vec![Piece::new(1, 2)],
            vec![Curve::with_homology(0, 0, vec![1, 0])],
        );
        assert!(matches!(
            short.validate(2),
            Err(SurfaceError::DimensionMismatch { expected: 4, found: 2, .. })
        ));
    }

    #[test]
    fn parallel_edges_are_not_bridges() {
        // annulus and a genus-1 piece joined by two parallel curves
        let cfg = FiberConfiguration::new(
            vec![Piece::new(0, 2), Piece::new(1, 2)],
            vec![Curve::new(0, 1), Curve::new(0, 1)],
        );
        let f = cfg.validate(2).unwrap();
        assert!(!f.is_separating_curve(0).unwrap());
        assert!(!f.is_separating_curve(1).unwrap());
        assert!(matches!(
            f.is_separating_curve(2),
            Err(SurfaceError::CurveIndexOutOfRange { curve: 2, curves: 2 })
        ));
    }

    #[test]
    fn semistability_examples() {
        let sphere_one_node = FiberConfiguration::new(
            vec![Piece::new(0, 1), Piece::new(1, 1)],
            vec![Curve::new(0, 1)],
        )
        .validate(1)
        .unwrap();
        assert!(!sphere_one_node.is_semistable());
        assert_eq!(sphere_one_node.unstable_piece(), Some(0));

        // genus-1 piece with two boundaries closed up through an annulus
        let with_annulus = FiberConfiguration::new(
            vec![Piece::new(1, 2), Piece::new(0, 2)],
            vec![Curve::new(0, 1), Curve::new(1, 0)],
        )
        .validate(2)
        .unwrap();
        assert!(with_annulus.is_semistable());
        assert!(!with_annulus.is_stable());
    }

    #[test]
    fn two_pairs_of_pants_are_stable() {
        let f = FiberConfiguration::new(
            vec![Piece::new(0, 3), Piece::new(0, 3)],
            vec![Curve::new(0, 1), Curve::new(0, 1), Curve::new(0, 1)],
        )
        .validate(2)
        .unwrap();
        assert!(f.is_stable());
        assert_eq!(f.separating_count(), 0);
        assert_eq!(f.euler_characteristic(), 2 + 2 - 3);
    }

    #[test]
    fn euler_characteristic_of_nodal_fibers() {
        let nodal_cubic = FiberConfiguration::new(vec![Piece::new(0, 2)], vec![Curve::new(0, 0)])
            .validate(1)
            .unwrap();
        assert_eq!(nodal_cubic.euler_characteristic(), 1);

        let chain = FiberConfiguration::new(
            vec![Piece::new(1, 1), Piece::new(0, 2), Piece::new(1, 1)],
            vec![Curve::new(0, 1), Curve::new(1, 2)],
        )
        .validate(2)
        .unwrap();
        assert_eq!(chain.euler_characteristic(), 0);
    }

    fn multigraph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
        (1usize..=8).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..14)))
    }

    proptest! {
        #[test]
        fn bridges_match_edge_deletion((n, edges) in multigraph()) {
            let flags = bridges(n, &edges);
            let base = count_components(n, &edges, None);
            for (i, &flag) in flags.iter().enumerate() {
                let without = count_components(n, &edges, Some(i));
                prop_assert_eq!(flag, without > base, "edge {} of {:?}", i, edges);
            }
        }
    }
}
