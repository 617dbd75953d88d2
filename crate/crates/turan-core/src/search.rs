//! Exact computation of ex(n,H) with enumeration of all extremal graphs up
//! to isomorphism.
//!
//! Graphs are grown vertex by vertex in a level-synchronous sweep: the
//! frontier at level k holds one representative per isomorphism class of
//! pattern-free graphs on k vertices that can still reach the incumbent
//! edge bound. Children are generated in parallel per parent and merged in
//! parent order, so results are identical for any thread budget.

use std::collections::HashSet;
use std::time::Instant;

use crate::canon::{canon_rows, canonical_form, canonical_representative, CanonicalForm};
use crate::containment::{contains_subgraph, Pattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, CANON_CAP};
use crate::graph6;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub threads: usize,
    /// Known-achievable edge count (e.g. from a construction); branches that
    /// cannot reach it are pruned. Must not exceed the true maximum.
    pub seed_lower_bound: Option<usize>,
    pub node_limit: Option<u64>,
    pub collect_extremal: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            threads: 1,
            seed_lower_bound: None,
            node_limit: None,
            collect_extremal: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub n: usize,
    /// graph6 encoding of the forbidden pattern
    pub pattern: String,
    pub max_edges: usize,
    /// one canonically labeled representative per extremal class, sorted
    pub extremal: Vec<(CanonicalForm, Graph)>,
    pub nodes_explored: u64,
    pub elapsed_ms: u64,
    pub exact: bool,
}

impl SearchResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "pattern": self.pattern,
            "max_edges": self.max_edges,
            "extremal": self.extremal.iter().map(|(_, g)| graph6::encode(g)).collect::<Vec<_>>(),
            "nodes": self.nodes_explored,
            "elapsed_ms": self.elapsed_ms,
            "exact": self.exact,
        })
    }
}

/// Pattern visit orders, one per start vertex, for embeddings forced through
/// a given host vertex.
struct ForcedPattern {
    k: usize,
    /// per start vertex: (parents bitmask per position, pattern degree per position)
    orders: Vec<(Vec<u16>, Vec<u8>)>,
}

impl ForcedPattern {
    fn new(pattern: &Graph) -> Self {
        let k = pattern.n();
        let deg: Vec<usize> = (0..k).map(|v| pattern.degree(v)).collect();
        let orders = (0..k)
            .map(|start| {
                let mut order = vec![start];
                let mut placed = vec![false; k];
                placed[start] = true;
                while order.len() < k {
                    let next = (0..k)
                        .filter(|&v| !placed[v])
                        .max_by_key(|&v| {
                            let anchored =
                                order.iter().filter(|&&u| pattern.has_edge(u, v)).count();
                            (anchored, deg[v], std::cmp::Reverse(v))
                        })
                        .unwrap();
                    placed[next] = true;
                    order.push(next);
                }
                let parents: Vec<u16> = order
                    .iter()
                    .enumerate()
                    .map(|(pos, &v)| {
                        (0..pos)
                            .filter(|&p| pattern.has_edge(order[p], v))
                            .fold(0u16, |m, p| m | 1 << p)
                    })
                    .collect();
                let degs: Vec<u8> = order.iter().map(|&v| deg[v] as u8).collect();
                (parents, degs)
            })
            .collect();
        ForcedPattern { k, orders }
    }

    /// Does the host contain the pattern via an embedding whose image
    /// includes `forced`?
    fn embeds_using(&self, rows: &[u16], host_deg: &[u8], forced: usize) -> bool {
        if self.k > rows.len() {
            return false;
        }
        let full = if rows.len() >= 16 {
            u16::MAX
        } else {
            (1u16 << rows.len()) - 1
        };
        let mut image = [0usize; 16];
        for (parents, degs) in &self.orders {
            if host_deg[forced] < degs[0] {
                continue;
            }
            image[0] = forced;
            if Self::extend(rows, host_deg, parents, degs, full, 1 << forced, &mut image, 1) {
                return true;
            }
        }
        false
    }

    fn extend(
        rows: &[u16],
        host_deg: &[u8],
        parents: &[u16],
        degs: &[u8],
        full: u16,
        used: u16,
        image: &mut [usize; 16],
        pos: usize,
    ) -> bool {
        if pos == parents.len() {
            return true;
        }
        let mut cand = full & !used;
        let mut pm = parents[pos];
        while pm != 0 {
            let p = pm.trailing_zeros() as usize;
            pm &= pm - 1;
            cand &= rows[image[p]];
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if host_deg[v] < degs[pos] {
                continue;
            }
            image[pos] = v;
            if Self::extend(rows, host_deg, parents, degs, full, used | 1 << v, image, pos + 1) {
                return true;
            }
        }
        false
    }
}

#[derive(Clone)]
struct Node {
    rows: Vec<u16>,
    m: usize,
}

impl Node {
    fn extended(&self, nb: u16) -> Node {
        let k = self.rows.len();
        let mut rows = self.rows.clone();
        rows.push(nb);
        let mut bm = nb;
        while bm != 0 {
            let u = bm.trailing_zeros() as usize;
            bm &= bm - 1;
            rows[u] |= 1 << k;
        }
        Node {
            rows,
            m: self.m + nb.count_ones() as usize,
        }
    }

    fn degrees(&self) -> Vec<u8> {
        self.rows.iter().map(|r| r.count_ones() as u8).collect()
    }

    fn to_graph(&self) -> Graph {
        let n = self.rows.len();
        Graph::from_edges(
            n,
            (0..n).flat_map(|u| {
                let row = self.rows[u];
                (u + 1..n).filter(move |&v| row >> v & 1 == 1).map(move |v| (u, v))
            }),
        )
        .unwrap()
    }
}

/// edges still addable when growing from k to n vertices
fn remaining_capacity(k: usize, n: usize) -> usize {
    (n * (n - 1) - k * (k - 1)) / 2
}

fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool");
    pool.install(f)
}

struct Sweep<'a> {
    n: usize,
    forced: &'a ForcedPattern,
    /// children must satisfy edges + capacity >= low
    low: usize,
    /// children must satisfy edges <= high
    high: usize,
    nodes: u64,
    node_limit: Option<u64>,
}

impl<'a> Sweep<'a> {
    /// Run the level sweep; returns the final-level nodes (graphs on n
    /// vertices, pattern-free, within the edge window).
    fn run(&mut self) -> Result<Vec<Node>> {
        use rayon::prelude::*;
        let mut frontier = vec![Node {
            rows: vec![0u16],
            m: 0,
        }];
        for k in 1..self.n {
            let last = k + 1 == self.n;
            let cap_after = remaining_capacity(k + 1, self.n);
            let results: Vec<Vec<(u128, Node)>> = frontier
                .par_iter()
                .map(|parent| {
                    let mut out = Vec::new();
                    for nb in 0u32..1u32 << k {
                        let nb = nb as u16;
                        let e = parent.m + nb.count_ones() as usize;
                        if e > self.high || e + cap_after < self.low {
                            continue;
                        }
                        let child = parent.extended(nb);
                        let deg = child.degrees();
                        if self.forced.embeds_using(&child.rows, &deg, k) {
                            continue;
                        }
                        let code = if last {
                            0
                        } else {
                            canon_rows(&child.rows, k + 1).0
                        };
                        out.push((code, child));
                    }
                    out
                })
                .collect();
            self.nodes += (frontier.len() as u64) << k;
            if let Some(limit) = self.node_limit {
                if self.nodes > limit {
                    return Err(Error::NodeLimit {
                        nodes: self.nodes,
                        best: 0,
                    });
                }
            }
            let mut next = Vec::new();
            if last {
                for group in results {
                    next.extend(group.into_iter().map(|(_, node)| node));
                }
            } else {
                let mut seen: HashSet<u128> = HashSet::new();
                for group in results {
                    for (code, node) in group {
                        if seen.insert(code) {
                            next.push(node);
                        }
                    }
                }
            }
            frontier = next;
        }
        Ok(frontier)
    }
}

fn check_entry(n: usize, pattern: &Pattern) -> Result<Option<SearchResult>> {
    if n > CANON_CAP {
        return Err(Error::Capacity { n, cap: CANON_CAP });
    }
    if pattern.n() > n {
        // pattern cannot embed at all: the complete graph is extremal
        let kn = Graph::complete(n)?;
        return Ok(Some(SearchResult {
            n,
            pattern: graph6::encode(pattern.graph()),
            max_edges: n * (n - 1) / 2,
            extremal: vec![(canonical_form(&kn)?, canonical_representative(&kn)?)],
            nodes_explored: 0,
            elapsed_ms: 0,
            exact: true,
        }));
    }
    if contains_subgraph(&Graph::empty(n)?, pattern).is_some() {
        return Err(Error::DegeneratePattern);
    }
    Ok(None)
}

fn collect_classes(finals: &[Node], target: usize) -> Vec<(CanonicalForm, Graph)> {
    let mut out: Vec<(CanonicalForm, Graph)> = Vec::new();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    for node in finals {
        if node.m != target {
            continue;
        }
        let g = node.to_graph();
        let form = canonical_form(&g).unwrap();
        if seen.insert(form) {
            out.push((form, canonical_representative(&g).unwrap()));
        }
    }
    out.sort_by_key(|(form, _)| *form);
    out
}

/// Exact maximum edge count over pattern-free graphs on `n` vertices, with
/// the complete list of extremal isomorphism classes.
pub fn search_max_edges(n: usize, pattern: &Pattern, cfg: &SearchConfig) -> Result<SearchResult> {
    let start = Instant::now();
    if let Some(short) = check_entry(n, pattern)? {
        return Ok(short);
    }
    if n == 0 {
        return Ok(SearchResult {
            n,
            pattern: graph6::encode(pattern.graph()),
            max_edges: 0,
            extremal: vec![(
                canonical_form(&Graph::empty(0)?)?,
                Graph::empty(0)?,
            )],
            nodes_explored: 0,
            elapsed_ms: 0,
            exact: true,
        });
    }
    let forced = ForcedPattern::new(pattern.graph());
    let seed = cfg.seed_lower_bound.unwrap_or(0);
    let mut sweep = Sweep {
        n,
        forced: &forced,
        low: seed,
        high: n * (n - 1) / 2,
        nodes: 0,
        node_limit: cfg.node_limit,
    };
    let finals = with_pool(cfg.threads, || sweep.run()).map_err(|e| match e {
        Error::NodeLimit { nodes, .. } => Error::NodeLimit { nodes, best: seed },
        other => other,
    })?;
    let max_edges = match finals.iter().map(|f| f.m).max() {
        Some(m) => m,
        None => {
            return Err(Error::Domain(
                "seed lower bound exceeds the true maximum".into(),
            ))
        }
    };
    let extremal = if cfg.collect_extremal {
        collect_classes(&finals, max_edges)
    } else {
        Vec::new()
    };
    Ok(SearchResult {
        n,
        pattern: graph6::encode(pattern.graph()),
        max_edges,
        extremal,
        nodes_explored: sweep.nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
        exact: true,
    })
}

/// All isomorphism classes of pattern-free graphs on `n` vertices with
/// exactly `m` edges.
pub fn enumerate_free_at(
    n: usize,
    pattern: &Pattern,
    m: usize,
    cfg: &SearchConfig,
) -> Result<Vec<(CanonicalForm, Graph)>> {
    if n > CANON_CAP {
        return Err(Error::Capacity { n, cap: CANON_CAP });
    }
    if m > n.saturating_sub(1) * n / 2 {
        return Ok(Vec::new());
    }
    if n == 0 {
        return Ok(vec![(canonical_form(&Graph::empty(0)?)?, Graph::empty(0)?)]);
    }
    if pattern.n() <= n && contains_subgraph(&Graph::empty(n)?, pattern).is_some() {
        return Err(Error::DegeneratePattern);
    }
    let forced = ForcedPattern::new(pattern.graph());
    let mut sweep = Sweep {
        n,
        forced: &forced,
        low: m,
        high: m,
        nodes: 0,
        node_limit: cfg.node_limit,
    };
    let finals = with_pool(cfg.threads, || sweep.run())?;
    Ok(collect_classes(&finals, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, ConstructionSpec as Spec};

    fn pat(spec: Spec) -> Pattern {
        Pattern::new(build(&spec).unwrap())
    }

    #[test]
    fn p5sq_at_5() {
        let r = search_max_edges(5, &pat(Spec::SquarePath { k: 5 }), &SearchConfig::default())
            .unwrap();
        assert_eq!(r.max_edges, 7);
        assert_eq!(r.extremal.len(), 3);
        let expected: HashSet<CanonicalForm> = [Spec::G0, Spec::E { i: 2, n: 5 }, Spec::E { i: 3, n: 5 }]
            .iter()
            .map(|s| canonical_form(&build(s).unwrap()).unwrap())
            .collect();
        let found: HashSet<CanonicalForm> = r.extremal.iter().map(|(f, _)| *f).collect();
        assert_eq!(found, expected);
    }

    #[test]
    fn pattern_larger_than_host() {
        let r = search_max_edges(4, &pat(Spec::SquarePath { k: 5 }), &SearchConfig::default())
            .unwrap();
        assert_eq!(r.max_edges, 6);
        assert_eq!(r.extremal.len(), 1);
    }

    #[test]
    fn triangle_free_small() {
        let r = search_max_edges(5, &pat(Spec::SquarePath { k: 3 }), &SearchConfig::default())
            .unwrap();
        assert_eq!(r.max_edges, 6); // K_{2,3}
        assert_eq!(r.extremal.len(), 1);
    }

    #[test]
    fn enumerate_classes_basics() {
        // any 4-vertex graph with 5 edges contains a triangle
        let classes = enumerate_free_at(4, &pat(Spec::SquarePath { k: 3 }), 5, &SearchConfig::default())
            .unwrap();
        assert!(classes.is_empty());

        let classes = enumerate_free_at(3, &pat(Spec::SquarePath { k: 5 }), 3, &SearchConfig::default())
            .unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].1.m(), 3);
    }

    #[test]
    fn degenerate_pattern_rejected() {
        let edgeless = Pattern::new(Graph::empty(2).unwrap());
        assert!(matches!(
            search_max_edges(4, &edgeless, &SearchConfig::default()),
            Err(Error::DegeneratePattern)
        ));
    }

    #[test]
    fn node_limit_reported() {
        let cfg = SearchConfig {
            node_limit: Some(10),
            ..Default::default()
        };
        assert!(matches!(
            search_max_edges(7, &pat(Spec::SquarePath { k: 5 }), &cfg),
            Err(Error::NodeLimit { .. })
        ));
    }

    // naive oracle: scan all labeled graphs on n vertices
    fn naive_max(n: usize, pattern: &Pattern) -> usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut best = 0;
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            if g.m() > best && contains_subgraph(&g, pattern).is_none() {
                best = g.m();
            }
        }
        best
    }

    #[test]
    fn agrees_with_naive_enumeration_up_to_6() {
        let patterns = [
            Spec::SquarePath { k: 3 },
            Spec::SquarePath { k: 4 },
            Spec::SquarePath { k: 5 },
            Spec::SquarePath { k: 6 },
            Spec::FlattenedTetrahedron,
        ];
        for n in 1..=6 {
            for spec in &patterns {
                let p = pat(*spec);
                let expect = if p.n() > n {
                    n * (n - 1) / 2
                } else {
                    naive_max(n, &p)
                };
                let got = search_max_edges(n, &p, &SearchConfig::default()).unwrap();
                assert_eq!(got.max_edges, expect, "n={n}, {spec:?}");
            }
        }
    }

    #[test]
    fn deterministic_across_thread_budgets() {
        let p = pat(Spec::FlattenedTetrahedron);
        let base = search_max_edges(7, &p, &SearchConfig::default()).unwrap();
        for threads in [2, 8] {
            let cfg = SearchConfig {
                threads,
                ..Default::default()
            };
            let r = search_max_edges(7, &p, &cfg).unwrap();
            assert_eq!(r.max_edges, base.max_edges);
            assert_eq!(r.nodes_explored, base.nodes_explored);
            assert_eq!(
                r.extremal.iter().map(|(f, _)| *f).collect::<Vec<_>>(),
                base.extremal.iter().map(|(f, _)| *f).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn seeding_preserves_result() {
        let p = pat(Spec::FlattenedTetrahedron);
        let plain = search_max_edges(7, &p, &SearchConfig::default()).unwrap();
        let seeded = search_max_edges(
            7,
            &p,
            &SearchConfig {
                seed_lower_bound: Some(15),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(plain.max_edges, seeded.max_edges);
        assert_eq!(
            plain.extremal.iter().map(|(f, _)| *f).collect::<Vec<_>>(),
            seeded.extremal.iter().map(|(f, _)| *f).collect::<Vec<_>>()
        );
    }
}
