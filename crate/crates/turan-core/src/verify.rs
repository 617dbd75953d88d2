//! Verification playbook: each claim id re-derives a published statement by
//! exhaustive search and compares formula values and extremal class sets
//! against the closed forms and constructions.

use serde::Serialize;
use std::collections::BTreeSet;
use std::time::Instant;

use crate::constructions::{build, ConstructionSpec as Spec};
use crate::containment::{contains_subgraph, lemma12_witness, Pattern};
use crate::error::{Error, Result};
use crate::formulas::{
    closed_form_ex, conjecture_bound, erdos_gallai_bound, faudree_schelp_ex, TuranTarget,
};
use crate::graph::Graph;
use crate::graph6;
use crate::search::{enumerate_free_at, search_max_edges, SearchConfig};
use num_rational::Rational64;
use num_traits::ToPrimitive;

/// Per-row verification outcome. `formula` is the published value,
/// `search` the independently computed one; the class lists hold sorted
/// graph6 encodings of canonical representatives.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClaimRow {
    pub n: usize,
    pub formula: usize,
    pub search: usize,
    pub expected_classes: Vec<String>,
    pub found_classes: Vec<String>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: String,
    pub rows: Vec<ClaimRow>,
    pub pass: bool,
    pub nodes: u64,
    pub elapsed_ms: u64,
}

impl ClaimReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Largest n verified by exhaustive search per row; rows beyond it are
/// included but marked skipped.
pub const SEARCH_CAP: usize = 10;

pub const CLAIM_IDS: [&str; 13] = [
    "mantel",
    "dirac",
    "thm3",
    "thm4",
    "thm5",
    "thm6",
    "thm7",
    "thm8",
    "prop11",
    "lemma12",
    "erdos-gallai",
    "faudree-schelp",
    "conjecture-consistency",
];

/// Fifth extremal class for the flattened tetrahedron at n = 6 (the
/// minimum-degree-2 case); frozen from the exhaustive search output.
const T6_MIN_DEG2_G6: &str = "EJ~o";

fn sorted_classes(graphs: impl IntoIterator<Item = Graph>) -> Result<Vec<String>> {
    let mut set = BTreeSet::new();
    for g in graphs {
        let rep = crate::canon::canonical_representative(&g)?;
        set.insert((crate::canon::canonical_form(&g)?, graph6::encode(&rep)));
    }
    Ok(set.into_iter().map(|(_, s)| s).collect())
}

fn build_all(specs: &[Spec]) -> Result<Vec<Graph>> {
    specs.iter().map(build).collect()
}

fn path_graph(l: usize) -> Graph {
    Graph::from_edges(l, (0..l.saturating_sub(1)).map(|v| (v, v + 1))).unwrap()
}

/// Two triangles sharing one vertex.
fn bowtie() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

/// Five-cycle plus one chord closing a triangle.
fn house() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap()
}

/// Two triangles joined by a perfect matching.
fn prism() -> Graph {
    Graph::from_edges(
        6,
        [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
    )
    .unwrap()
}

fn k5_plus_pendant() -> Graph {
    Graph::from_edges(
        6,
        (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .chain(std::iter::once((4, 5))),
    )
    .unwrap()
}

struct Ctx<'a> {
    cfg: &'a SearchConfig,
    rows: Vec<ClaimRow>,
    nodes: u64,
}

impl<'a> Ctx<'a> {
    fn new(cfg: &'a SearchConfig) -> Self {
        Ctx {
            cfg,
            rows: Vec::new(),
            nodes: 0,
        }
    }

    fn skip_row(&mut self, n: usize, why: &str) {
        self.rows.push(ClaimRow {
            n,
            formula: 0,
            search: 0,
            expected_classes: Vec::new(),
            found_classes: Vec::new(),
            pass: true,
            note: Some(format!("skipped: {why}")),
        });
    }

    /// Value-and-classes row: runs the search (seeded by the expected
    /// constructions when they are pattern-free) and compares both the
    /// maximum and, when `expected` is nonempty, the extremal class list.
    fn search_row(
        &mut self,
        n: usize,
        pattern: &Pattern,
        formula: usize,
        expected: &[Graph],
        note: Option<String>,
    ) -> Result<()> {
        if n > SEARCH_CAP {
            self.skip_row(n, &format!("n exceeds exhaustive cap {SEARCH_CAP}"));
            return Ok(());
        }
        // a construction seeds the bound only if it really is pattern-free
        let seed = expected
            .iter()
            .filter(|g| g.n() == n && contains_subgraph(g, pattern).is_none())
            .map(|g| g.m())
            .max();
        let cfg = SearchConfig {
            seed_lower_bound: seed,
            collect_extremal: true,
            ..self.cfg.clone()
        };
        let result = search_max_edges(n, pattern, &cfg)?;
        self.nodes += result.nodes_explored;
        let found: Vec<String> = result
            .extremal
            .iter()
            .map(|(_, g)| graph6::encode(g))
            .collect();
        let expected_classes = sorted_classes(expected.iter().cloned())?;
        let classes_ok = expected.is_empty() || expected_classes == found;
        let found_classes = if expected.is_empty() { Vec::new() } else { found };
        self.rows.push(ClaimRow {
            n,
            formula,
            search: result.max_edges,
            expected_classes,
            found_classes,
            pass: result.max_edges == formula && classes_ok,
            note,
        });
        Ok(())
    }

    fn finish(self, claim: &str, start: Instant) -> ClaimReport {
        let pass = self.rows.iter().all(|r| r.pass);
        ClaimReport {
            claim: claim.to_string(),
            rows: self.rows,
            pass,
            nodes: self.nodes,
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }
}

fn default_range(claim: &str) -> (usize, usize) {
    match claim {
        "mantel" => (3, 9),
        "dirac" => (4, 9),
        "thm3" | "thm4" => (5, 9),
        "thm5" => (4, 9),
        "thm6" | "thm7" | "thm8" => (6, 9),
        "prop11" => (8, 8),
        "lemma12" => (2, 10),
        "erdos-gallai" | "faudree-schelp" => (3, 9),
        "conjecture-consistency" => (6, 40),
        _ => (0, 0),
    }
}

/// All F^{i,j} variants at a given i: every star size j with 3 | (i-j).
fn f_variants(i: usize, n: usize) -> Vec<Spec> {
    (1..=i)
        .filter(|j| (i - j) % 3 == 0)
        .map(|j| Spec::F { i, j, n })
        .collect()
}

/// Published extremal classes for the squared five-vertex path.
fn expected_p5sq(n: usize) -> Vec<Spec> {
    let hi = n.div_ceil(2);
    let lo = n / 2;
    if n == 5 {
        vec![Spec::G0, Spec::E { i: 2, n }, Spec::E { i: 3, n }]
    } else if n % 4 == 1 {
        vec![Spec::E { i: hi, n }, Spec::E { i: lo, n }]
    } else if n % 4 == 2 {
        // for even n the two published part sizes coincide; the second
        // class is the one with the larger part, matching the edge count
        vec![Spec::E { i: n / 2, n }, Spec::E { i: n / 2 + 1, n }]
    } else {
        vec![Spec::E { i: hi, n }]
    }
}

/// Published extremal classes for the flattened tetrahedron (n >= 7).
fn expected_flat_tetra(n: usize) -> Vec<Spec> {
    let hi = n.div_ceil(2);
    match n % 4 {
        0 => vec![Spec::Tmatch { i: n / 2, n }],
        2 => vec![
            Spec::Tmatch { i: n / 2, n },
            Spec::Tmatch { i: n / 2 + 1, n },
            Spec::S { i: n / 2, n },
        ],
        _ => vec![Spec::Tmatch { i: hi, n }, Spec::S { i: hi, n }],
    }
}

/// Published extremal classes for the squared six-vertex path (n >= 6).
fn expected_p6sq(n: usize) -> Vec<Spec> {
    let hi = n.div_ceil(2);
    match n % 6 {
        0 => vec![Spec::H { i: n / 2, n }],
        1 => {
            let mut v = f_variants(hi, n);
            v.push(Spec::H { i: n / 2, n });
            v
        }
        2 => {
            let mut v = f_variants(n / 2, n);
            v.extend(f_variants(n / 2 + 1, n));
            v
        }
        3 => {
            let mut v = f_variants(hi, n);
            v.push(Spec::H { i: hi + 1, n });
            v
        }
        4 => vec![Spec::H { i: n / 2 + 1, n }],
        _ => vec![Spec::H { i: hi, n }],
    }
}

pub fn verify_claim(
    claim: &str,
    range: Option<(usize, usize)>,
    cfg: &SearchConfig,
) -> Result<ClaimReport> {
    if !CLAIM_IDS.contains(&claim) {
        return Err(Error::UnknownClaim(claim.to_string()));
    }
    let start = Instant::now();
    let (lo, hi) = range.unwrap_or_else(|| default_range(claim));
    let mut ctx = Ctx::new(cfg);

    match claim {
        "mantel" | "dirac" => {
            let k = if claim == "mantel" { 3 } else { 4 };
            let target = if claim == "mantel" {
                TuranTarget::P3sq
            } else {
                TuranTarget::P4sq
            };
            let pattern = Pattern::new(build(&Spec::SquarePath { k })?);
            for n in lo.max(k)..=hi {
                let formula = closed_form_ex(target, n)?;
                let bip = build(&Spec::CompleteBipartite {
                    a: n / 2,
                    b: n.div_ceil(2),
                })?;
                // the published uniqueness claim for the squared-P4 case
                // only holds from n = 7 on: exhaustive enumeration finds
                // the bowtie and the house at n = 5 and the prism at n = 6
                // as further extremal graphs
                let (expected, note): (Vec<Graph>, Option<String>) = match (claim, n) {
                    ("dirac", 4) => {
                        (Vec::new(), Some("value only; uniqueness needs n >= 7".into()))
                    }
                    ("dirac", 5) => (
                        vec![bip, bowtie(), house()],
                        Some("uniqueness fails at n = 5: bowtie and house are extremal too".into()),
                    ),
                    ("dirac", 6) => (
                        vec![bip, prism()],
                        Some("uniqueness fails at n = 6: the prism is extremal too".into()),
                    ),
                    _ => (vec![bip], None),
                };
                ctx.search_row(n, &pattern, formula, &expected, note)?;
            }
        }
        "thm3" | "thm4" => {
            let pattern = Pattern::new(build(&Spec::SquarePath { k: 5 })?);
            for n in lo.max(5)..=hi {
                let formula = closed_form_ex(TuranTarget::P5sq, n)?;
                let expected = if claim == "thm4" {
                    build_all(&expected_p5sq(n))?
                } else {
                    Vec::new()
                };
                ctx.search_row(n, &pattern, formula, &expected, None)?;
            }
        }
        "thm5" | "thm6" => {
            let pattern = Pattern::new(build(&Spec::FlattenedTetrahedron)?);
            for n in lo.max(4)..=hi {
                let (formula, expected, note): (usize, Vec<Graph>, Option<String>) = match n {
                    4 => (6, vec![Graph::complete(4)?], None),
                    // the closed form excludes n = 5; the pattern has six
                    // vertices, so K5 is trivially extremal there
                    5 => (
                        10,
                        vec![Graph::complete(5)?],
                        Some("excluded by theorem; search value 10".into()),
                    ),
                    6 => {
                        let mut ex = vec![k5_plus_pendant(), graph6::decode(T6_MIN_DEG2_G6)?];
                        ex.extend(build_all(&[
                            Spec::Tmatch { i: 3, n: 6 },
                            Spec::Tmatch { i: 4, n: 6 },
                            Spec::S { i: 3, n: 6 },
                        ])?);
                        (
                            closed_form_ex(TuranTarget::FlatTetra, 6)?,
                            ex,
                            Some("special case outside the theorem's families".into()),
                        )
                    }
                    _ => (
                        closed_form_ex(TuranTarget::FlatTetra, n)?,
                        build_all(&expected_flat_tetra(n))?,
                        None,
                    ),
                };
                let expected = if claim == "thm5" { Vec::new() } else { expected };
                ctx.search_row(n, &pattern, formula, &expected, note)?;
            }
        }
        "thm7" | "thm8" => {
            let pattern = Pattern::new(build(&Spec::SquarePath { k: 6 })?);
            for n in lo.max(6)..=hi {
                let formula = closed_form_ex(TuranTarget::P6sq, n)?;
                if claim == "thm8" && n % 6 == 3 {
                    // the H family at i = ceil(n/2)+1 needs 3 | i; this
                    // holds for every n = 3 (mod 6)
                    assert_eq!((n.div_ceil(2) + 1) % 3, 0);
                }
                let expected = if claim == "thm8" {
                    build_all(&expected_p6sq(n))?
                } else {
                    Vec::new()
                };
                ctx.search_row(n, &pattern, formula, &expected, None)?;
            }
        }
        "prop11" => {
            let pattern = Pattern::new(build(&Spec::FlattenedTetrahedron)?);
            for n in lo..=hi {
                if n % 4 != 0 || n < 8 {
                    ctx.skip_row(n, "proposition needs 4 | n, n >= 8");
                    continue;
                }
                if n > SEARCH_CAP {
                    ctx.skip_row(n, &format!("n exceeds exhaustive cap {SEARCH_CAP}"));
                    continue;
                }
                let m = n * n / 4 + n / 2 - 1;
                // expected: pattern-free one-edge deletions of the matched
                // bipartite graph, plus the two star families
                let tm = build(&Spec::Tmatch { i: n / 2, n })?;
                let mut expected: Vec<Graph> = tm
                    .edges()
                    .map(|(u, v)| tm.remove_edge(u, v).unwrap())
                    .filter(|g| contains_subgraph(g, &pattern).is_none())
                    .collect();
                expected.push(build(&Spec::S { i: n / 2, n })?);
                expected.push(build(&Spec::S { i: n / 2 + 1, n })?);
                let expected_classes = sorted_classes(expected)?;
                let found = enumerate_free_at(n, &pattern, m, ctx.cfg)?;
                let found_classes: Vec<String> =
                    found.iter().map(|(_, g)| graph6::encode(g)).collect();
                ctx.rows.push(ClaimRow {
                    n,
                    formula: m,
                    search: m,
                    pass: expected_classes == found_classes,
                    expected_classes,
                    found_classes,
                    note: None,
                });
            }
        }
        "lemma12" => {
            // the range parameter is the path length r inside class X
            for r in lo.max(2)..=hi {
                let expect_len = 3 * r / 2 + 1;
                let (host, emb) = lemma12_witness(r, r)?;
                let got = emb.map().len();
                ctx.rows.push(ClaimRow {
                    n: r,
                    formula: expect_len,
                    search: got,
                    expected_classes: Vec::new(),
                    found_classes: Vec::new(),
                    pass: got == expect_len && host.n() == 2 * r,
                    note: Some(format!("witness in K_{{{r},{r}}} plus P_{r}")),
                });
            }
        }
        "erdos-gallai" => {
            for n in lo.max(3)..=hi {
                if n > SEARCH_CAP {
                    ctx.skip_row(n, &format!("n exceeds exhaustive cap {SEARCH_CAP}"));
                    continue;
                }
                for l in 3..=n.min(6) {
                    let bound = erdos_gallai_bound(n, l)?;
                    let pattern = Pattern::new(path_graph(l));
                    let result = search_max_edges(n, &pattern, ctx.cfg)?;
                    ctx.nodes += result.nodes_explored;
                    let exact = Rational64::from_integer(result.max_edges as i64);
                    // the bound is tight exactly for disjoint unions of
                    // complete graphs on l-1 vertices
                    let tight = n % (l - 1) == 0;
                    ctx.rows.push(ClaimRow {
                        n,
                        formula: (bound.floor().to_integer()).to_usize().unwrap(),
                        search: result.max_edges,
                        expected_classes: Vec::new(),
                        found_classes: Vec::new(),
                        pass: exact <= bound && (exact == bound) == tight,
                        note: Some(format!("l={l}")),
                    });
                }
            }
        }
        "faudree-schelp" => {
            for n in lo.max(3)..=hi {
                if n > SEARCH_CAP {
                    ctx.skip_row(n, &format!("n exceeds exhaustive cap {SEARCH_CAP}"));
                    continue;
                }
                for l in 3..=n.min(6) {
                    let formula = faudree_schelp_ex(n, l)?;
                    let pattern = Pattern::new(path_graph(l));
                    let witness = build(&Spec::FaudreeSchelpA { n, l })?;
                    let witness_ok = witness.m() == formula
                        && contains_subgraph(&witness, &pattern).is_none();
                    let result = search_max_edges(n, &pattern, ctx.cfg)?;
                    ctx.nodes += result.nodes_explored;
                    ctx.rows.push(ClaimRow {
                        n,
                        formula,
                        search: result.max_edges,
                        expected_classes: Vec::new(),
                        found_classes: Vec::new(),
                        pass: result.max_edges == formula && witness_ok,
                        note: Some(format!("l={l}")),
                    });
                }
            }
        }
        "conjecture-consistency" => {
            // known closed forms for k = 3..6 must sit within [bound-1, bound]
            let targets = [
                (3, TuranTarget::P3sq),
                (4, TuranTarget::P4sq),
                (5, TuranTarget::P5sq),
                (6, TuranTarget::P6sq),
            ];
            for n in lo..=hi {
                for (k, target) in targets {
                    let known = match closed_form_ex(target, n) {
                        Ok(v) => v,
                        Err(_) => continue, // outside the formula's domain
                    };
                    let bound = conjecture_bound(k, n)?;
                    let gap = bound.value - Rational64::from_integer(known as i64);
                    // the bound is off by exactly one for k = 6 when
                    // n = 1, 2, 3 (mod 6); everywhere else the gap is in [0,1)
                    let gap_ok = if k == 6 && matches!(n % 6, 1 | 2 | 3) {
                        gap == Rational64::from_integer(1)
                    } else {
                        gap >= Rational64::from_integer(0) && gap < Rational64::from_integer(1)
                    };
                    // when the clique size divides the maximizer, the
                    // conjectured construction must meet the bound exactly
                    let q = 2 * k / 3 - 1;
                    let construction_ok = if bound.argmax_i % q == 0 && bound.argmax_i > 0 {
                        let g = build(&Spec::ConjectureGraph {
                            k,
                            i: bound.argmax_i,
                            n,
                        })?;
                        Rational64::from_integer(g.m() as i64) == bound.value
                    } else {
                        true
                    };
                    ctx.rows.push(ClaimRow {
                        n,
                        formula: bound.value.floor().to_integer().to_usize().unwrap(),
                        search: known,
                        expected_classes: Vec::new(),
                        found_classes: Vec::new(),
                        pass: gap_ok && construction_ok,
                        note: Some(format!("k={k}, argmax i={}", bound.argmax_i)),
                    });
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(ctx.finish(claim, start))
}
