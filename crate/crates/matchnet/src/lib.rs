//! Perfect matchings and proof nets for multiplicative linear logic with
//! Mix, connected by explicit translations.
//!
//! The two sides of the library mirror each other:
//!
//! * on graphs: maximum matchings, uniqueness of a perfect matching with
//!   alternating-cycle witnesses, and an inductive decomposition of unique
//!   matchings driven by bridges ([`matching`]);
//! * on proof structures: validity, switching-based correctness, and
//!   sequentialization into derivation trees ([`proofnet`], [`seq`]);
//! * between them: the edge-based and link-based translations of structures
//!   into matched graphs, the inverse construction, and the
//!   vertex-per-edge-end translation of graphs with forbidden transitions
//!   ([`translate`], [`transitions`]).
//!
//! On top of that sit the dependency and ordering analyses of [`kingdom`],
//! seeded generators in [`gen`], JSON and DOT formats, and a thin CLI.
//!
//! Each major capability has a runnable demonstration under `examples/`.
//!
//! ```
//! use matchnet::proofnet::{dr_check, DrMode};
//! use matchnet::matching::is_unique_pm;
//! use matchnet::translate::graphification;
//!
//! // A correct structure is one whose translated matching is unique.
//! let net = matchnet::fixtures::double_par_net();
//! let (translated, _) = graphification(&net);
//! assert!(dr_check(&net, DrMode::Mix).unwrap().is_correct());
//! assert!(is_unique_pm(&translated.graph, &translated.matching)
//!     .unwrap()
//!     .is_unique());
//! ```

pub mod cli;
pub mod dot;
pub mod fixtures;
pub mod gen;
pub mod graph;
pub mod json;
pub mod kingdom;
pub mod matching;
pub mod proofnet;
pub mod seq;
pub mod transitions;
pub mod translate;

pub use graph::{AlternatingCycle, AlternatingPath, Graph, Matching};
pub use matching::{maximum_matching, is_unique_pm, upm_sequentialize, Uniqueness, UpmDerivation};
pub use proofnet::{dr_check, mix_count, DrMode, DrVerdict, LinkKind, ProofStructure};
pub use seq::{mix_sequentialize, validate_derivation, Derivation};
pub use translate::{graphification, proofification, rb_graph, MatchedGraph};
