//! Fixed inputs shared by the benchmarks.

use mutvis_core::{construct, Family, Graph};

pub fn fixture(family: Family) -> Graph {
    construct(&family).expect("benchmark families are valid").graph
}
