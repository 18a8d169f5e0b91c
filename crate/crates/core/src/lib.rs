//! Exact weight counts for fusion systems of compact connected Lie groups.
//!
//! For a compact connected Lie group `G` and a prime `l`, the number of
//! weights of the `l`-fusion system of `G` is
//!
//! ```text
//! w(F) = sum over classes of l-stubborn subgroups P of z(N_G(P)/P),
//! ```
//!
//! where `z` counts irreducible characters of zero `l`-defect. This crate
//! computes `w(F)` exactly:
//!
//! - [`combinatorics`]: partitions, hook lengths, `l`-cores and truncated
//!   integer power series — every count reduces to coefficients produced here;
//! - [`rootdata`]: the supported group families, Weyl group orders, good/bad
//!   primes and `|Irr(W)|`;
//! - [`stubborn`]: conjugacy-class labels of `l`-stubborn subgroups of the
//!   classical groups and their symbolic automizers;
//! - [`weight`]: evaluation of automizer contributions by `l`-core counting,
//!   with the total computed two independent ways (class-by-class enumeration
//!   and a closed-form generating function);
//! - [`exceptional`]: tabulated class data for the exceptional groups.
//!
//! All arithmetic is exact; counts are arbitrary-precision integers.

pub mod automizer;
pub mod combinatorics;
mod error;
pub mod exceptional;
pub mod rootdata;
pub mod stubborn;
pub mod weight;

pub use automizer::{AutomizerAtom, AutomizerDescriptor};
pub use combinatorics::{
    bipartition_count, core_count_series, partition_count, partitions_of, IntSeries, Partition,
};
pub use error::Error;
pub use exceptional::{automizer_z_crosscheck, exceptional_weight_count, CrosscheckStatus};
pub use rootdata::{is_prime, GroupSpec, PrimeClass};
pub use stubborn::{
    automizer_of, class_count, enumerate_labels, enumerate_labels_with, BlockKey, StubbornLabel,
};
pub use weight::{
    count_weights_enum, count_weights_enum_with, count_weights_gf, expected_verdict, verify,
    weight_contribution, z_atom, ClassWeight, Method, Verdict, WeightReport,
};
