//! Canonical labeling for small graphs (n <= 16) by iterated degree
//! refinement plus backtracking over target-cell choices, keeping the
//! lexicographically least upper-triangle bit-string.

use crate::containment::{contains_subgraph, Pattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, CANON_CAP};

/// Labeling-invariant representation: two graphs on the same number of
/// vertices have equal `CanonicalForm` iff they are isomorphic.
///
/// `bits` holds the upper triangle of the canonically relabeled adjacency
/// matrix in column order (the graph6 bit order), most significant bit first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }
}

/// Upper-triangle code of `rows` under labeling `inv` (inv[label] = vertex),
/// column order, MSB first.
fn code_under(rows: &[u16], inv: &[usize], p: usize) -> u128 {
    let mut code = 0u128;
    let mut pos = 0u32;
    for j in 1..p {
        for i in 0..j {
            code = (code << 1) | (rows[inv[j]] >> inv[i] & 1) as u128;
            pos += 1;
        }
    }
    if pos == 0 {
        return 0;
    }
    // left-align so that u128 comparison is lexicographic on the bit-string
    code << (128 - pos)
}

struct Search<'a> {
    rows: &'a [u16],
    n: usize,
    best: Option<u128>,
    best_inv: Vec<usize>,
}

impl<'a> Search<'a> {
    /// Split cells by neighbor counts into the current cells until stable.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let masks: Vec<u16> = cells
                .iter()
                .map(|c| c.iter().fold(0u16, |m, &v| m | 1 << v))
                .collect();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut tagged: Vec<(Vec<u8>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let sig = masks
                            .iter()
                            .map(|&m| (self.rows[v] & m).count_ones() as u8)
                            .collect();
                        (sig, v)
                    })
                    .collect();
                tagged.sort();
                let mut start = 0;
                for i in 1..=tagged.len() {
                    if i == tagged.len() || tagged[i].0 != tagged[start].0 {
                        next.push(tagged[start..i].iter().map(|t| t.1).collect());
                        start = i;
                    }
                }
            }
            let done = next.len() == cells.len();
            *cells = next;
            if done {
                break;
            }
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<usize>>) {
        self.refine(&mut cells);

        // labeling prefix fixed by the leading singleton cells
        let mut inv = Vec::with_capacity(self.n);
        for cell in &cells {
            if cell.len() == 1 {
                inv.push(cell[0]);
            } else {
                break;
            }
        }
        let p = inv.len();
        if let Some(best) = self.best {
            let partial = code_under(self.rows, &inv, p);
            let bits = (p * (p - 1) / 2) as u32;
            if bits > 0 {
                let mask = if bits >= 128 {
                    u128::MAX
                } else {
                    !0u128 << (128 - bits)
                };
                if partial & mask > best & mask {
                    return;
                }
            }
        }

        if p == self.n {
            let code = code_under(self.rows, &inv, self.n);
            if self.best.map_or(true, |b| code < b) {
                self.best = Some(code);
                self.best_inv = inv;
            }
            return;
        }

        let target = cells.iter().position(|c| c.len() > 1).unwrap();
        for k in 0..cells[target].len() {
            let v = cells[target][k];
            // If an earlier choice u in this cell is a twin of v (same
            // neighborhood outside {u, v}), the transposition (u v) is an
            // automorphism and v's subtree repeats u's code for code.
            let twin = cells[target][..k].iter().any(|&u| {
                let mask = !(1u16 << u | 1u16 << v);
                self.rows[u] & mask == self.rows[v] & mask
            });
            if twin {
                continue;
            }
            let mut child = cells.clone();
            child[target].remove(k);
            child.insert(target, vec![v]);
            self.descend(child);
        }
    }
}

fn small_rows(g: &Graph) -> Result<Vec<u16>> {
    if g.n() > CANON_CAP {
        return Err(Error::Capacity {
            n: g.n(),
            cap: CANON_CAP,
        });
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).fold(0u16, |m, u| m | 1 << u))
        .collect())
}

/// Canonical code and labeling (`inv[label] = original vertex`) for bitset
/// adjacency rows on `n <= 16` vertices.
pub(crate) fn canon_rows(rows: &[u16], n: usize) -> (u128, Vec<usize>) {
    if n == 0 {
        return (0, Vec::new());
    }
    let mut s = Search {
        rows,
        n,
        best: None,
        best_inv: Vec::new(),
    };
    // initial partition: one cell, refinement splits by degree first
    s.descend(vec![(0..n).collect()]);
    (s.best.unwrap(), s.best_inv)
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let rows = small_rows(g)?;
    let (bits, _) = canon_rows(&rows, g.n());
    Ok(CanonicalForm {
        n: g.n() as u8,
        bits,
    })
}

/// Canonically relabeled copy of `g`.
pub fn canonical_representative(g: &Graph) -> Result<Graph> {
    let rows = small_rows(g)?;
    let (_, inv) = canon_rows(&rows, g.n());
    let mut perm = vec![0usize; g.n()];
    for (label, &v) in inv.iter().enumerate() {
        perm[v] = label;
    }
    g.permute(&perm)
}

/// Adjacency-preserving bijection test. Uses canonical forms up to the
/// canonicalization cap and falls back to a containment search above it.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    if g.n() <= CANON_CAP {
        return canonical_form(g).unwrap() == canonical_form(h).unwrap();
    }
    // equal n and m: an edge-preserving injection is already a bijection
    contains_subgraph(h, &Pattern::new(g.clone())).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn c5() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn relabeling_invariance_c5() {
        let g = c5();
        let base = canonical_form(&g).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..5).collect();
            perm.shuffle(&mut rng);
            let h = g.permute(&perm).unwrap();
            assert_eq!(canonical_form(&h).unwrap(), base);
        }
    }

    #[test]
    fn p4_vs_star_distinct() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let k13 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4).unwrap(), canonical_form(&k13).unwrap());
        assert!(!are_isomorphic(&p4, &k13));
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        // brute-force partition of the 64 labeled graphs into isomorphism
        // classes via the permutation oracle, then compare the counts
        let pairs: Vec<(usize, usize)> =
            (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        let all: Vec<Graph> = (0u32..64)
            .map(|mask| {
                Graph::from_edges(
                    4,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                )
                .unwrap()
            })
            .collect();

        let mut reps: Vec<Graph> = Vec::new();
        for g in &all {
            if !reps.iter().any(|r| iso_by_permutations(r, g)) {
                reps.push(g.clone());
            }
        }
        assert_eq!(reps.len(), 11);

        let forms: std::collections::HashSet<_> =
            all.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), 11);
    }

    // O(n!) oracle
    fn iso_by_permutations(g: &Graph, h: &Graph) -> bool {
        if g.n() != h.n() || g.m() != h.m() {
            return false;
        }
        let n = g.n();
        permutations(n).into_iter().any(|perm| {
            g.edges()
                .all(|(u, v)| h.has_edge(perm[u], perm[v]))
        })
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        use itertools::Itertools;
        (0..n).permutations(n).collect()
    }

    #[test]
    fn agrees_with_permutation_oracle_on_random_pairs() {
        use rand::Rng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let g = random_graph(n, &mut rng);
            // half the time, test against a permuted copy (isomorphic pair)
            let h = if rng.gen_bool(0.5) {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut rng);
                g.permute(&perm).unwrap()
            } else {
                random_graph(n, &mut rng)
            };
            assert_eq!(are_isomorphic(&g, &h), iso_by_permutations(&g, &h));
        }
    }

    fn random_graph(n: usize, rng: &mut impl rand::Rng) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    g = g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn highly_symmetric_graphs_terminate_quickly() {
        // huge automorphism groups; without twin pruning the backtracking
        // would branch factorially on these
        let empty = Graph::empty(16).unwrap();
        let complete = Graph::complete(16).unwrap();
        let bipartite =
            Graph::from_edges(16, (0..8).flat_map(|u| (8..16).map(move |v| (u, v)))).unwrap();
        let near_empty = Graph::from_edges(16, [(0, 1), (2, 3)]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for g in [empty, complete, bipartite, near_empty] {
            let base = canonical_form(&g).unwrap();
            let mut perm: Vec<usize> = (0..16).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.permute(&perm).unwrap()).unwrap(), base);
        }
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::empty(17).unwrap();
        assert!(matches!(canonical_form(&g), Err(Error::Capacity { .. })));
    }
}
