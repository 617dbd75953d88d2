//! Exact Turán-number toolkit for squared paths and related small
//! forbidden subgraphs: constructions of the known extremal families,
//! closed-form edge counts, subgraph containment, canonical labeling, and
//! an exhaustive isomorph-free search with extremal enumeration.

pub mod canon;
pub mod constructions;
pub mod containment;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod search;
pub mod verify;

pub use canon::{are_isomorphic, canonical_form, canonical_representative, CanonicalForm};
pub use constructions::{build, expected_edges, vertex_labels, ConstructionSpec};
pub use containment::{contains_subgraph, lemma12_witness, Embedding, Pattern};
pub use error::{Error, Result};
pub use formulas::{
    closed_form_ex, conjecture_bound, erdos_gallai_bound, faudree_schelp_ex, BoundValue,
    TuranTarget,
};
pub use graph::Graph;
pub use search::{enumerate_free_at, search_max_edges, SearchConfig, SearchResult};
pub use verify::{verify_claim, ClaimReport};
