//! Builders for the named extremal families: complete bipartite graphs
//! augmented inside one class with matchings, stars or disjoint triangles,
//! plus the handful of fixed small graphs.
//!
//! Every family has a fixed deterministic vertex layout so encoded output is
//! reproducible byte-for-byte: class X is `0..i` (triangles first, then the
//! star, then matched pairs), class Y follows.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    /// Path on `k` vertices with distance-one and distance-two pairs joined.
    SquarePath { k: usize },
    /// The 6-vertex, 9-edge "triforce": corner degrees 2, midpoint degrees 4.
    FlattenedTetrahedron,
    /// Flattened tetrahedron plus the three corner-midpoint diagonals.
    TPrime,
    /// `K_{i,n-i}` plus a maximum matching in the class of size `i`.
    E { i: usize, n: usize },
    /// `K_{i,n-i}` plus maximum matchings in both classes.
    Tmatch { i: usize, n: usize },
    /// `K_{i,n-i}` plus an `i`-vertex star in the class of size `i`.
    S { i: usize, n: usize },
    /// `K_{i,n-i}` plus disjoint triangles and a `j`-vertex star in class X.
    F { i: usize, j: usize, n: usize },
    /// `K_{i,n-i}` plus `i/3` disjoint triangles in class X.
    H { i: usize, n: usize },
    /// `K_4` plus a pendent edge.
    G0,
    /// Balanced complete `r`-partite graph on `n` vertices.
    Turan { n: usize, r: usize },
    CompleteBipartite { a: usize, b: usize },
    /// `K_{i,n-i}` plus disjoint cliques on `floor(2k/3)-1` vertices in X.
    ConjectureGraph { k: usize, i: usize, n: usize },
    /// Disjoint union of complete graphs `K_{l-1}` plus one `K_r`.
    FaudreeSchelpA { n: usize, l: usize },
    /// `t` copies of `K_{l-1}` plus `K_{l/2-1}` joined to an independent set.
    FaudreeSchelpB { n: usize, l: usize, t: usize },
}

use ConstructionSpec::*;

impl ConstructionSpec {
    fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Spec(msg));
        match *self {
            SquarePath { k } if k < 1 => fail(format!("SquarePath needs k >= 1, got {k}")),
            E { i, n } | Tmatch { i, n } | S { i, n } if !(1 <= i && i <= n) => {
                fail(format!("need 1 <= i <= n, got i={i}, n={n}"))
            }
            F { i, j, n } => {
                if !(1 <= j && j <= i && i <= n) {
                    fail(format!("F needs 1 <= j <= i <= n, got i={i}, j={j}, n={n}"))
                } else if (i - j) % 3 != 0 {
                    fail(format!("F needs 3 | (i-j), got i={i}, j={j}"))
                } else {
                    Ok(())
                }
            }
            H { i, n } => {
                if !(1 <= i && i <= n) {
                    fail(format!("H needs 1 <= i <= n, got i={i}, n={n}"))
                } else if i % 3 != 0 {
                    fail(format!("H needs 3 | i, got i={i}"))
                } else {
                    Ok(())
                }
            }
            Turan { n: _, r } if r < 1 => fail(format!("Turan needs r >= 1, got r={r}")),
            ConjectureGraph { k, i, n } => {
                if k < 3 {
                    return fail(format!("ConjectureGraph needs k >= 3, got {k}"));
                }
                let q = 2 * k / 3 - 1;
                if i < 1 || i > n {
                    fail(format!("ConjectureGraph needs 1 <= i <= n, got i={i}, n={n}"))
                } else if i % q != 0 {
                    fail(format!("ConjectureGraph needs {q} | i, got i={i}"))
                } else {
                    Ok(())
                }
            }
            FaudreeSchelpA { n, l } => {
                if l < 2 || n < 1 {
                    fail(format!("FaudreeSchelpA needs l >= 2, n >= 1, got l={l}, n={n}"))
                } else {
                    Ok(())
                }
            }
            FaudreeSchelpB { n, l, t } => {
                if l < 4 || l % 2 != 0 {
                    return fail(format!("FaudreeSchelpB needs even l >= 4, got l={l}"));
                }
                let r = n % (l - 1);
                if r != l / 2 && r != l / 2 - 1 {
                    return fail(format!(
                        "FaudreeSchelpB needs n = l/2 or l/2-1 (mod l-1), got n={n}, l={l}"
                    ));
                }
                if t > n / (l - 1) {
                    return fail(format!("FaudreeSchelpB needs t <= n/(l-1), got t={t}"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Number of vertices of the built graph.
    pub fn vertex_count(&self) -> usize {
        match *self {
            SquarePath { k } => k,
            FlattenedTetrahedron | TPrime => 6,
            G0 => 5,
            E { n, .. } | Tmatch { n, .. } | S { n, .. } | F { n, .. } | H { n, .. } => n,
            Turan { n, .. } => n,
            CompleteBipartite { a, b } => a + b,
            ConjectureGraph { n, .. } => n,
            FaudreeSchelpA { n, .. } | FaudreeSchelpB { n, .. } => n,
        }
    }
}

/// Flattened tetrahedron on vertices `a,b,c,d,e,f = 0..6`; corners are
/// `a,d,f`, the inner triangle is `b,c,e`.
const FLAT_TETRA_EDGES: [(usize, usize); 9] = [
    (0, 1),
    (0, 2),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 4),
    (2, 5),
    (3, 4),
    (4, 5),
];

/// The corner-midpoint diagonals `{a,e}, {d,c}, {b,f}`.
pub const T_PRIME_DIAGONALS: [(usize, usize); 3] = [(0, 4), (2, 3), (1, 5)];

fn complete_bipartite_between(g: &mut Graph, xs: std::ops::Range<usize>, ys: std::ops::Range<usize>) {
    for x in xs {
        for y in ys.clone() {
            g.insert_edge(x, y);
        }
    }
}

fn matching(g: &mut Graph, range: std::ops::Range<usize>) {
    let mut it = range;
    while let (Some(a), Some(b)) = (it.next(), it.next()) {
        g.insert_edge(a, b);
    }
}

/// X holds `tri` disjoint triangles first, then a star on the rest.
fn triangles_then_star(g: &mut Graph, i: usize, tri: usize) {
    for t in 0..tri {
        g.insert_edge(3 * t, 3 * t + 1);
        g.insert_edge(3 * t, 3 * t + 2);
        g.insert_edge(3 * t + 1, 3 * t + 2);
    }
    let center = 3 * tri;
    for leaf in center + 1..i {
        g.insert_edge(center, leaf);
    }
}

pub fn build(spec: &ConstructionSpec) -> Result<Graph> {
    spec.validate()?;
    let mut g = Graph::empty(spec.vertex_count())?;
    match *spec {
        SquarePath { k } => {
            for v in 0..k.saturating_sub(1) {
                g.insert_edge(v, v + 1);
                if v + 2 < k {
                    g.insert_edge(v, v + 2);
                }
            }
        }
        FlattenedTetrahedron => {
            for &(u, v) in &FLAT_TETRA_EDGES {
                g.insert_edge(u, v);
            }
        }
        TPrime => {
            for &(u, v) in FLAT_TETRA_EDGES.iter().chain(&T_PRIME_DIAGONALS) {
                g.insert_edge(u, v);
            }
        }
        G0 => {
            for u in 0..4 {
                for v in u + 1..4 {
                    g.insert_edge(u, v);
                }
            }
            g.insert_edge(3, 4);
        }
        E { i, n } => {
            complete_bipartite_between(&mut g, 0..i, i..n);
            matching(&mut g, 0..i);
        }
        Tmatch { i, n } => {
            complete_bipartite_between(&mut g, 0..i, i..n);
            matching(&mut g, 0..i);
            matching(&mut g, i..n);
        }
        S { i, n } => {
            complete_bipartite_between(&mut g, 0..i, i..n);
            triangles_then_star(&mut g, i, 0);
        }
        F { i, j, n } => {
            complete_bipartite_between(&mut g, 0..i, i..n);
            triangles_then_star(&mut g, i, (i - j) / 3);
        }
        H { i, n } => {
            complete_bipartite_between(&mut g, 0..i, i..n);
            triangles_then_star(&mut g, i, i / 3);
        }
        Turan { n, r } => {
            // balanced parts, larger parts first
            let mut starts = Vec::with_capacity(r + 1);
            let mut at = 0;
            for p in 0..r {
                starts.push(at);
                at += n / r + usize::from(p < n % r);
            }
            starts.push(n);
            for p in 0..r {
                for q in p + 1..r {
                    complete_bipartite_between(
                        &mut g,
                        starts[p]..starts[p + 1],
                        starts[q]..starts[q + 1],
                    );
                }
            }
        }
        CompleteBipartite { a, b } => {
            complete_bipartite_between(&mut g, 0..a, a..a + b);
        }
        ConjectureGraph { k, i, n } => {
            complete_bipartite_between(&mut g, 0..i, i..n);
            let q = 2 * k / 3 - 1;
            for block in 0..i / q {
                for u in block * q..(block + 1) * q {
                    for v in u + 1..(block + 1) * q {
                        g.insert_edge(u, v);
                    }
                }
            }
        }
        FaudreeSchelpA { n, l } => {
            // m cliques K_{l-1}, then a K_r remainder
            let mut at = 0;
            while at + (l - 1) <= n {
                for u in at..at + l - 1 {
                    for v in u + 1..at + l - 1 {
                        g.insert_edge(u, v);
                    }
                }
                at += l - 1;
            }
            for u in at..n {
                for v in u + 1..n {
                    g.insert_edge(u, v);
                }
            }
        }
        FaudreeSchelpB { n, l, t } => {
            for block in 0..t {
                let at = block * (l - 1);
                for u in at..at + l - 1 {
                    for v in u + 1..at + l - 1 {
                        g.insert_edge(u, v);
                    }
                }
            }
            // K_{l/2-1} fully joined to an independent remainder
            let core = t * (l - 1);
            let core_end = core + l / 2 - 1;
            for u in core..core_end {
                for v in u + 1..core_end {
                    g.insert_edge(u, v);
                }
            }
            complete_bipartite_between(&mut g, core..core_end, core_end..n);
        }
    }
    Ok(g)
}

/// Closed-form edge count of the built graph.
pub fn expected_edges(spec: &ConstructionSpec) -> Result<usize> {
    spec.validate()?;
    Ok(match *spec {
        SquarePath { k } => if k >= 2 { 2 * k - 3 } else { 0 },
        FlattenedTetrahedron => 9,
        TPrime => 12,
        G0 => 7,
        E { i, n } => i * (n - i) + i / 2,
        Tmatch { i, n } => i * (n - i) + i / 2 + (n - i) / 2,
        S { i, n } | F { i, n, .. } => i * (n - i) + i - 1,
        H { i, n } => i * (n - i) + i,
        Turan { n, r } => {
            let parts = (0..r).map(|p| n / r + usize::from(p < n % r));
            n * (n - 1) / 2 - parts.map(|s| s * (s - 1) / 2).sum::<usize>()
        }
        CompleteBipartite { a, b } => a * b,
        ConjectureGraph { k, i, n } => {
            let q = 2 * k / 3 - 1;
            i * (n - i) + i * (q - 1) / 2
        }
        FaudreeSchelpA { n, l } => {
            let m = n / (l - 1);
            let r = n % (l - 1);
            m * (l - 1) * (l - 2) / 2 + r.saturating_sub(1) * r / 2
        }
        FaudreeSchelpB { n, l, t } => {
            let s = l / 2 - 1;
            t * (l - 1) * (l - 2) / 2 + s * (s - 1) / 2 + s * (n - t * (l - 1) - s)
        }
    })
}

/// Node names for DOT output, matching the fixed layout.
pub fn vertex_labels(spec: &ConstructionSpec) -> Result<Vec<String>> {
    spec.validate()?;
    let n = spec.vertex_count();
    Ok(match *spec {
        FlattenedTetrahedron | TPrime => ["a", "b", "c", "d", "e", "f"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        E { i, .. }
        | Tmatch { i, .. }
        | S { i, .. }
        | F { i, .. }
        | H { i, .. }
        | ConjectureGraph { i, .. } => (1..=i)
            .map(|t| format!("x{t}"))
            .chain((1..=n - i).map(|t| format!("y{t}")))
            .collect(),
        CompleteBipartite { a, .. } => (1..=a)
            .map(|t| format!("x{t}"))
            .chain((1..=n - a).map(|t| format!("y{t}")))
            .collect(),
        _ => (1..=n).map(|t| format!("v{t}")).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn square_path_5() {
        let g = build(&SquarePath { k: 5 }).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 7);
        assert_eq!(expected_edges(&SquarePath { k: 3 }).unwrap(), 3);
        assert_eq!(build(&SquarePath { k: 3 }).unwrap().m(), 3);
    }

    #[test]
    fn flattened_tetrahedron_shape() {
        let g = build(&FlattenedTetrahedron).unwrap();
        assert_eq!(g.m(), 9);
        assert_eq!(g.degree_sequence(), vec![2, 2, 2, 4, 4, 4]);
    }

    #[test]
    fn e_family_counts() {
        assert_eq!(build(&E { i: 3, n: 5 }).unwrap().m(), 7);
        assert_eq!(expected_edges(&E { i: 3, n: 5 }).unwrap(), 7);
    }

    #[test]
    fn t_prime_is_h_3_6() {
        let tp = build(&TPrime).unwrap();
        assert_eq!(tp.m(), 12);
        let h36 = build(&H { i: 3, n: 6 }).unwrap();
        assert!(are_isomorphic(&tp, &h36));
    }

    #[test]
    fn g0_shape() {
        let g = build(&G0).unwrap();
        assert_eq!((g.n(), g.m()), (5, 7));
        let k4 = crate::graph::Graph::complete(4).unwrap();
        let pat = crate::containment::Pattern::new(k4);
        assert!(crate::containment::contains_subgraph(&g, &pat).is_some());
    }

    #[test]
    fn f_family_counts_and_guards() {
        assert_eq!(build(&F { i: 4, j: 1, n: 7 }).unwrap().m(), 15);
        assert!(matches!(
            build(&F { i: 5, j: 3, n: 9 }),
            Err(crate::error::Error::Spec(_))
        ));
    }

    #[test]
    fn conjecture_graph_6_6_12() {
        let spec = ConjectureGraph { k: 6, i: 6, n: 12 };
        let g = build(&spec).unwrap();
        assert_eq!(g.m(), 42);
        assert_eq!(expected_edges(&spec).unwrap(), 42);
    }

    #[test]
    fn tmatch_and_h_counts() {
        assert_eq!(expected_edges(&Tmatch { i: 4, n: 8 }).unwrap(), 20);
        assert_eq!(expected_edges(&H { i: 3, n: 7 }).unwrap(), 15);
        assert_eq!(build(&H { i: 3, n: 7 }).unwrap().m(), 15);
    }

    #[test]
    fn built_edges_match_closed_forms() {
        let mut specs: Vec<ConstructionSpec> = vec![FlattenedTetrahedron, TPrime, G0];
        for k in 1..=10 {
            specs.push(SquarePath { k });
        }
        for n in 2..=20 {
            for i in 1..=n {
                specs.push(E { i, n });
                specs.push(Tmatch { i, n });
                specs.push(S { i, n });
                for j in 1..=i {
                    if (i - j) % 3 == 0 {
                        specs.push(F { i, j, n });
                    }
                }
                if i % 3 == 0 {
                    specs.push(H { i, n });
                }
            }
            for r in 1..=n {
                specs.push(Turan { n, r });
            }
        }
        for n in 1..=20 {
            for l in 2..=8 {
                specs.push(FaudreeSchelpA { n, l });
                if l >= 4 && l % 2 == 0 {
                    let r = n % (l - 1);
                    if r == l / 2 || r + 1 == l / 2 {
                        for t in 0..=n / (l - 1) {
                            specs.push(FaudreeSchelpB { n, l, t });
                        }
                    }
                }
            }
        }
        for k in 3..=8 {
            let q = 2 * k / 3 - 1;
            for i in (q..=12).step_by(q) {
                specs.push(ConjectureGraph { k, i, n: 12 });
            }
        }
        for spec in &specs {
            assert_eq!(
                build(spec).unwrap().m(),
                expected_edges(spec).unwrap(),
                "{spec:?}"
            );
        }
    }

    #[test]
    fn f_star_case_is_s() {
        for n in 4..=12usize {
            let i = n.div_ceil(2);
            let f = build(&F { i, j: i, n }).unwrap();
            let s = build(&S { i, n }).unwrap();
            assert!(are_isomorphic(&f, &s), "n={n}");
        }
    }
}
