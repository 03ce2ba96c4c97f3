//! Executable checks of the logical properties of the history-based update,
//! the update-postulate violation search and the epistemic-state demo.

mod demo;
mod suite;
mod u8search;

pub use demo::{epistemic_state_demo, EpistemicDemo};
pub use suite::{check_postulate_suite, SuiteReport, SUITE_CHECKS};
pub use u8search::{find_km_u8_violation, find_u8_violation_in, U8Witness};
