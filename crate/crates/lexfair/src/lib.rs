//! Fair and Pareto-optimal allocation of indivisible goods and chores under
//! weakly lexicographic preferences.
//!
//! Agents rank items in ordered indifference classes; one item from an
//! earlier class outweighs any number of items from later classes. Bundles
//! are compared by lexicographic dominance of per-class count vectors.
//! On top of that vocabulary the crate provides:
//!
//! - picking-loop solvers: [`solve_goods`] guarantees PO together with EF1,
//!   EFX, MMS, or EFX+MMS depending on the chosen [`Criteria`];
//!   [`solve_chores_ef1`] guarantees EF1+PO for chores, and
//!   [`solve_chores_efx_po_two_agents`] EFX+PO for two-agent chores
//!   instances via a goods reduction;
//! - verifiers with witnesses ([`is_ef`], [`is_ef1`], [`is_efx`],
//!   [`verify_report`]) and the alternating-path Pareto-optimality check
//!   [`is_pareto_optimal`];
//! - closed-form maximin-share thresholds ([`mms_goods`], [`mms_chores`]);
//! - brute-force oracles that certify everything on small instances
//!   ([`ef_exists`], [`po_dominance_search`], [`mms_enumerate`],
//!   [`efx_po_catalogue`]);
//! - a seeded instance generator and a CSV benchmark harness.
//!
//! Start with the runnable programs under `examples/`.
//!
//! ```
//! use lexfair::{instance_from_labels, AgentOrdering, Criteria, Polarity};
//!
//! let instance = instance_from_labels(
//!     Polarity::Goods,
//!     &["g1", "g2", "g3", "g4"],
//!     &[
//!         ("1", &[&["g1", "g2"], &["g3", "g4"]]),
//!         ("2", &[&["g1"], &["g2", "g3", "g4"]]),
//!         ("3", &[&["g1"], &["g2", "g3", "g4"]]),
//!     ],
//! )
//! .unwrap();
//! let sigma = AgentOrdering::natural(&instance);
//! let allocation = lexfair::solve_goods(&instance, &sigma, Criteria::EfxAndMms).unwrap();
//! let report = lexfair::verify_report(&instance, &allocation).unwrap();
//! assert!(report.efx && report.po && report.all_mms());
//! ```

#![forbid(unsafe_code)]

mod allocation;
mod bench;
mod envy;
mod error;
mod gen;
mod instance;
mod mms;
mod oracle;
mod ordering;
mod prefgraph;
mod score;
mod solver;
mod verify;

pub use allocation::{allocation_from_bundles, Allocation};
pub use bench::{rows_to_csv, run_bench, BenchRow};
pub use envy::{potential_envy_graph, potentially_envies, source_scc, PotentialEnvyGraph};
pub use error::{Error, Result};
pub use gen::{generate, GenConfig};
pub use instance::{instance_from_labels, Agent, Instance, Item, Polarity};
pub use mms::{mms_chores, mms_goods, mms_threshold, satisfies_mms};
pub use oracle::{
    ef_exists, efx_po_catalogue, enumerate_allocations, mms_enumerate, po_dominance_search,
    DEFAULT_BUDGET,
};
pub use ordering::AgentOrdering;
pub use prefgraph::{
    available_items, find_alternating_path, is_pareto_optimal, pareto_improvement_witness,
    reachable_items, update_along_path, validate_update_path, AlternatingPath,
};
pub use score::{lex_compare, prefers, score, Preference, ScoreVector};
pub use solver::{
    check_criteria, chores_to_goods, solve_chores_ef1, solve_chores_ef1_traced,
    solve_chores_efx_po_two_agents, solve_goods, solve_goods_traced, ChoresToGoods, Criteria,
    IterationRecord, SolveTrace,
};
pub use verify::{
    envy_edges, is_ef, is_ef1, is_efx, verify_report, Ef1Witness, EfxWitness, EnvyWitness, Report,
};
