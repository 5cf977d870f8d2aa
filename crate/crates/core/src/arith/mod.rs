pub mod expr;
pub mod filters;
pub mod orders;
pub mod ppd;

pub use filters::{divisibility_filter, FilterInput, FilterOutcome};
pub use orders::{classical_order, order_of, outer_order, Family, GroupOrderSpec};
pub use ppd::{ppd, ppd_lemma_check};
