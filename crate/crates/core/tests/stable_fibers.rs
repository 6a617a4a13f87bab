//! Exhaustive check, over small cut graphs, of the per-fiber bounds behind
//! the all-stable component inequalities: a stable singular fiber of genus
//! `h` has at most `3h - 3` nodes and at most `2h - 2` components.

use lefschetz_core::constructions::parallel_twist_fiber;
use lefschetz_core::surface_config::{Curve, FiberConfiguration, Piece};
use lefschetz_core::CurveKind;

fn connected(p: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; p];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Calls `visit` on every multiset of `m` edges (loops allowed) on `p`
/// labelled vertices.
fn for_each_multigraph(p: usize, m: usize, visit: &mut impl FnMut(&[(usize, usize)])) {
    let types: Vec<(usize, usize)> = (0..p).flat_map(|i| (i..p).map(move |j| (i, j))).collect();
    fn go(
        types: &[(usize, usize)],
        start: usize,
        m: usize,
        cur: &mut Vec<(usize, usize)>,
        visit: &mut impl FnMut(&[(usize, usize)]),
    ) {
        if cur.len() == m {
            visit(cur);
            return;
        }
        for t in start..types.len() {
            cur.push(types[t]);
            go(types, t, m, cur, visit);
            cur.pop();
        }
    }
    go(&types, 0, m, &mut Vec::new(), visit);
}

#[test]
fn stable_fibers_obey_node_and_component_bounds() {
    for h in 2..=3usize {
        let (mut max_m, mut max_p) = (0, 0);
        for p in 1..=2 * h - 1 {
            for m in 1..=3 * h - 2 {
                let Some(budget) = (h + p).checked_sub(m + 1) else { continue };
                for_each_multigraph(p, m, &mut |edges| {
                    let mut deg = vec![0u32; p];
                    for &(a, b) in edges {
                        deg[a] += 1;
                        deg[b] += 1;
                    }
                    let deficient = deg.iter().filter(|&&d| d < 3).count();
                    if deficient > budget || !connected(p, edges) {
                        return;
                    }
                    // witness: genus 1 on deficient pieces, the rest on piece 0
                    let mut genus: Vec<u32> = deg.iter().map(|&d| u32::from(d < 3)).collect();
                    genus[0] += (budget - deficient) as u32;
                    let cfg = FiberConfiguration::new(
                        genus.iter().zip(&deg).map(|(&g, &d)| Piece::new(g, d)).collect(),
                        edges.iter().map(|&(a, b)| Curve::new(a, b)).collect(),
                    );
                    let fiber = cfg.validate(h as u32).expect("witness validates");
                    assert!(fiber.is_stable());
                    max_m = max_m.max(m);
                    max_p = max_p.max(p);
                });
            }
        }
        assert_eq!(max_m, 3 * h - 3, "h={h}");
        assert_eq!(max_p, 2 * h - 2, "h={h}");
    }
}

#[test]
fn semistable_parallel_fibers_exceed_the_stable_bound() {
    for h in 2..=5u32 {
        let k = 3 * (h - 1) + 1;
        let f = parallel_twist_fiber(CurveKind::Nonseparating, k, h).unwrap();
        assert!(f.is_semistable());
        assert!(!f.is_stable());
        assert!(f.curve_count() as u32 > 3 * (h - 1));
    }
}
