//! Exact partition combinatorics and truncated integer power series.
//!
//! Partitions carry the hook-length and `l`-core machinery; [`IntSeries`]
//! carries every generating-function count. Both are immutable after
//! construction and safe to share across threads.

mod partition;
mod series;

pub use partition::{
    bipartition_count, partition_count, partitions_of, partitions_of_bounded, Partition,
    DEFAULT_ENUMERATION_BOUND,
};
pub use series::{core_count_series, IntSeries};
