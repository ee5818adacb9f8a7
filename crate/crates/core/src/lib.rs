//! Antimagic labelings of generalized edge coronas.
//!
//! Build a corona over a pan or spider base with [`corona::build`], check the
//! hypotheses with [`conditions::check_conditions`], label it with
//! [`labeling::label_instance`] and confirm the result with
//! [`verify::vertex_sums`]. Small graphs can be settled exhaustively with
//! [`search::brute_force_search`].
//!
//! ```
//! use antimagic_corona::{corona, graph, labeling, verify};
//!
//! let attachments = vec![graph::complete(2)?, graph::cycle(3)?, graph::cycle(3)?];
//! let inst = corona::build(corona::BaseSpec::Spider { p: 1 }, attachments)?;
//! let out = labeling::label_instance(&inst, false)?;
//! let report = verify::vertex_sums(inst.composite(), &out.labeling)?;
//! assert!(report.is_antimagic);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod conditions;
pub mod corona;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod search;
pub mod verify;

pub use conditions::{check_conditions, ConditionReport};
pub use corona::{BaseSpec, CoronaInstance};
pub use graph::Graph;
pub use labeling::{label_instance, Labeling, LabelingOutcome};
pub use search::{brute_force_search, random_search, SearchOutcome, SearchStatus};
pub use verify::{vertex_sums, SumReport};

// Book chapters are compiled as doc-tests so their snippets stay in sync.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/coronas.md")]
    mod coronas {}
    #[doc = include_str!("../../../book/src/conditions.md")]
    mod conditions {}
    #[doc = include_str!("../../../book/src/labeling.md")]
    mod labeling {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
