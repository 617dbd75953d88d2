use crate::error::{Error, Result};

/// Hard cap on vertex counts for construction and containment work.
pub const VERTEX_CAP: usize = 512;

/// Cap for canonical labeling and exhaustive search.
pub const CANON_CAP: usize = 16;

/// Dense undirected simple graph over `{0..n-1}` with bitset adjacency rows.
///
/// Values are immutable from the caller's perspective: every mutation returns
/// a new `Graph`, so they can be freely shared across threads.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > VERTEX_CAP {
            return Err(Error::Capacity { n, cap: VERTEX_CAP });
        }
        let words = n.div_ceil(64).max(1);
        Ok(Graph {
            n,
            words,
            adj: vec![0u64; n * words],
            m: 0,
        })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_edge(u, v)?;
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    fn check_edge(&self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.n || v >= self.n {
            return Err(Error::InvalidEdge { u, v, n: self.n });
        }
        Ok(())
    }

    /// Returns a copy of the graph with the edge `{u,v}` added. Idempotent.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_edge(u, v)?;
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// Returns a copy with the edge `{u,v}` removed (no-op if absent).
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_edge(u, v)?;
        let mut g = self.clone();
        if g.has_edge(u, v) {
            g.adj[u * g.words + v / 64] &= !(1u64 << (v % 64));
            g.adj[v * g.words + u / 64] &= !(1u64 << (u % 64));
            g.m -= 1;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            self.adj[u * self.words + v / 64] |= 1u64 << (v % 64);
            self.adj[v * self.words + u / 64] |= 1u64 << (u % 64);
            self.m += 1;
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency row of `v` as bitset words.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Relabeled copy: vertex `i` of `self` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        assert_eq!(perm.len(), self.n);
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

/// Iterate the set bit positions of a word slice.
pub fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        std::iter::successors(
            if w == 0 { None } else { Some(w) },
            |w| {
                let w = w & (w - 1);
                if w == 0 {
                    None
                } else {
                    Some(w)
                }
            },
        )
        .map(move |w| i * 64 + w.trailing_zeros() as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_basics() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(g.n(), 0);
        assert_eq!(g.m(), 0);

        let g = Graph::empty(5).unwrap();
        assert_eq!(g.m(), 0);
        assert!((0..5).all(|v| g.degree(v) == 0));
    }

    #[test]
    fn empty_graph_over_cap() {
        assert!(matches!(
            Graph::empty(513),
            Err(Error::Capacity { n: 513, cap: 512 })
        ));
    }

    #[test]
    fn add_edge_idempotent() {
        let g = Graph::empty(2).unwrap().add_edge(0, 1).unwrap();
        assert_eq!(g.m(), 1);
        let g = g.add_edge(1, 0).unwrap();
        assert_eq!(g.m(), 1);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
    }

    #[test]
    fn add_edge_rejects_loops_and_range() {
        let g = Graph::empty(4).unwrap();
        assert!(matches!(g.add_edge(3, 3), Err(Error::InvalidEdge { .. })));
        assert!(matches!(g.add_edge(0, 4), Err(Error::InvalidEdge { .. })));
    }

    #[test]
    fn remove_edge() {
        let g = Graph::complete(4).unwrap();
        assert_eq!(g.m(), 6);
        let h = g.remove_edge(1, 2).unwrap();
        assert_eq!(h.m(), 5);
        assert!(!h.has_edge(2, 1));
        assert_eq!(h.remove_edge(1, 2).unwrap().m(), 5);
    }

    #[test]
    fn large_graph_rows() {
        // spans multiple 64-bit words per row
        let g = Graph::from_edges(130, [(0, 129), (64, 65), (128, 1)]).unwrap();
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.degree(1), 1);
    }

    #[test]
    fn permute_preserves_structure() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.permute(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h.m(), 3);
        assert!(h.has_edge(3, 2) && h.has_edge(2, 1) && h.has_edge(1, 0));
    }
}
