//! Shared fixtures for the criterion benchmarks.

use ratrep_core::catalog::{parse_group_id, GroupId};

/// Groups timed by every benchmark, from order 16 to 625.
pub const IDS: [&str; 6] =
    ["g6@16", "phi2_21@p=3", "phi2_211b@p=3", "phi3_211b@p=3,r=nu", "phi2_21@p=5", "phi2_22@p=5"];

pub fn fixtures() -> Vec<GroupId> {
    IDS.iter().map(|s| parse_group_id(s).expect("fixture ids parse")).collect()
}
