//! Non-induced subgraph containment: backtracking over a degree-ordered,
//! connectivity-first visit order with bitset candidate pruning.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, VERTEX_CAP};

/// Injective vertex map from pattern to host certifying containment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    /// `map()[p]` is the host vertex of pattern vertex `p`.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// Checks injectivity and that every pattern edge lands on a host edge.
    /// Kept independent of the solver so it can vouch for its output.
    pub fn validates(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        if self.map.iter().any(|&v| v >= host.n()) {
            return false;
        }
        let mut seen = vec![false; host.n()];
        for &v in &self.map {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        pattern
            .edges()
            .all(|(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

/// A forbidden subgraph prepared for containment queries.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
    /// visit order: highest-degree vertex first, then neighbors-first
    pub(crate) order: Vec<usize>,
    /// per position, the earlier positions adjacent in the pattern
    pub(crate) parents: Vec<Vec<usize>>,
    /// pattern degree at each position
    pub(crate) degrees: Vec<usize>,
}

impl Pattern {
    pub fn new(graph: Graph) -> Self {
        let n = graph.n();
        let deg: Vec<usize> = (0..n).map(|v| graph.degree(v)).collect();
        let mut order: Vec<usize> = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        while order.len() < n {
            // most already-ordered neighbors, ties by degree then index
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let anchored = order
                        .iter()
                        .filter(|&&u| graph.has_edge(u, v))
                        .count();
                    (anchored, deg[v], std::cmp::Reverse(v))
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        let parents: Vec<Vec<usize>> = order
            .iter()
            .map(|&v| {
                order
                    .iter()
                    .take_while(|&&u| u != v)
                    .enumerate()
                    .filter(|(_, &u)| graph.has_edge(u, v))
                    .map(|(pos, _)| pos)
                    .collect()
            })
            .collect();
        let degrees = order.iter().map(|&v| deg[v]).collect();
        Pattern {
            graph,
            order,
            parents,
            degrees,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

struct Solver<'a> {
    host: &'a Graph,
    pattern: &'a Pattern,
    host_deg: Vec<usize>,
    used: Vec<bool>,
    image: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn run(&mut self) -> Option<Embedding> {
        if self.extend(0) {
            let mut map = vec![0usize; self.pattern.n()];
            for (pos, &pv) in self.pattern.order.iter().enumerate() {
                map[pv] = self.image[pos];
            }
            Some(Embedding::new(map))
        } else {
            None
        }
    }

    fn extend(&mut self, pos: usize) -> bool {
        let k = self.pattern.n();
        if pos == k {
            return true;
        }
        let hn = self.host.n();
        let words = hn.div_ceil(64).max(1);
        let mut cand = vec![u64::MAX; words];
        if hn % 64 != 0 {
            *cand.last_mut().unwrap() = (1u64 << (hn % 64)) - 1;
        }
        for &par in &self.pattern.parents[pos] {
            for (w, hw) in cand.iter_mut().zip(self.host.row(self.image[par])) {
                *w &= hw;
            }
        }
        let need = self.pattern.degrees[pos];
        for v in bits(&cand).collect::<Vec<_>>() {
            if self.used[v] || self.host_deg[v] < need {
                continue;
            }
            self.used[v] = true;
            self.image.push(v);
            if self.extend(pos + 1) {
                return true;
            }
            self.image.pop();
            self.used[v] = false;
        }
        false
    }
}

/// Decide whether `host` contains `pattern` as a (not necessarily induced)
/// subgraph; returns a witness embedding if so.
pub fn contains_subgraph(host: &Graph, pattern: &Pattern) -> Option<Embedding> {
    let k = pattern.n();
    if k == 0 || k > host.n() {
        return if k == 0 {
            Some(Embedding::new(Vec::new()))
        } else {
            None
        };
    }
    let mut solver = Solver {
        host,
        pattern,
        host_deg: (0..host.n()).map(|v| host.degree(v)).collect(),
        used: vec![false; host.n()],
        image: Vec::with_capacity(k),
    };
    let result = solver.run();
    debug_assert!(result
        .as_ref()
        .map_or(true, |e| e.validates(host, pattern.graph())));
    result
}

/// Complete bipartite `K_{n,n}` with a path on `r` vertices inside class X,
/// together with the explicit embedding of the squared path on
/// `3r/2 + 1` (rounded down, plus one) vertices.
///
/// X is `0..n` holding the path `0,1,..,r-1`; Y is `n..2n`.
pub fn lemma12_witness(n: usize, r: usize) -> Result<(Graph, Embedding)> {
    if r < 2 || n < r {
        return Err(Error::Domain(format!(
            "need n >= r >= 2, got n={n}, r={r}"
        )));
    }
    if 2 * n > VERTEX_CAP {
        return Err(Error::Capacity {
            n: 2 * n,
            cap: VERTEX_CAP,
        });
    }
    let mut g = Graph::empty(2 * n)?;
    for x in 0..n {
        for y in n..2 * n {
            g.insert_edge(x, y);
        }
    }
    for x in 0..r - 1 {
        g.insert_edge(x, x + 1);
    }
    let s = r / 2;
    let y = |j: usize| n + j - 1; // y_j, 1-based
    let x = |i: usize| i - 1; // x_i, 1-based
    let mut seq = Vec::with_capacity(3 * r / 2 + 1);
    for t in 1..=s {
        seq.push(y(t));
        seq.push(x(2 * t - 1));
        seq.push(x(2 * t));
    }
    seq.push(y(s + 1));
    if r % 2 == 1 {
        seq.push(x(2 * s + 1));
    }
    debug_assert_eq!(seq.len(), 3 * r / 2 + 1);
    let emb = Embedding::new(seq);
    let pattern = crate::constructions::build(&crate::constructions::ConstructionSpec::SquarePath {
        k: 3 * r / 2 + 1,
    })?;
    if !emb.validates(&g, &pattern) {
        return Err(Error::Domain(
            "internal: constructed embedding failed validation".into(),
        ));
    }
    Ok((g, emb))
}
