use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;

/// Cap for explicit partition enumeration; counting functions are not capped.
pub const DEFAULT_ENUMERATION_BOUND: u32 = 60;

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Parts are stored largest first. The empty partition is the unique
/// partition of 0 and is a first-class value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    ///
    /// Panics if the parts are not weakly decreasing or contain a zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        assert!(
            parts.last().map_or(true, |&p| p > 0),
            "partition parts must be positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The size |λ|, i.e. the number being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.parts.first() else {
            return Partition::empty();
        };
        let parts = (0..first)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All |λ| hook lengths h(i,j) = λ_i − j + λ'_j − i + 1, sorted decreasing.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let hook = row + conj.parts[j] - i as u32 - j as u32 - 1;
                hooks.push(hook);
            }
        }
        hooks.sort_unstable_by(|a, b| b.cmp(a));
        hooks
    }

    /// True iff no hook length is divisible by `ell`.
    pub fn is_ell_core(&self, ell: u64) -> bool {
        assert!(ell >= 2, "ell must be at least 2");
        self.hook_lengths().iter().all(|&h| h as u64 % ell != 0)
    }

    /// The `ell`-core of the partition.
    ///
    /// Computed by sliding beads down the runners of an `ell`-runner abacus;
    /// the result is what repeated rim `ell`-hook removal produces, in any
    /// order. Order-independence is checked against a rim-hook oracle in the
    /// test suite rather than assumed here.
    pub fn ell_core(&self, ell: u64) -> Partition {
        assert!(ell >= 2, "ell must be at least 2");
        let ell = ell as usize;
        let beads = self.parts.len();
        // Beta numbers for a bead count equal to the number of parts.
        let mut runner_counts = vec![0usize; ell];
        for (i, &part) in self.parts.iter().enumerate() {
            let beta = part as usize + (beads - 1 - i);
            runner_counts[beta % ell] += 1;
        }
        // Slide beads to the bottom of each runner and read the result back.
        let mut betas: Vec<usize> = Vec::with_capacity(beads);
        for (runner, &count) in runner_counts.iter().enumerate() {
            for j in 0..count {
                betas.push(runner + j * ell);
            }
        }
        betas.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<u32> = betas
            .iter()
            .enumerate()
            .map(|(i, &beta)| (beta - (beads - 1 - i)) as u32)
            .filter(|&p| p > 0)
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, each exactly once, in lexicographically decreasing
/// order. Subject to [`DEFAULT_ENUMERATION_BOUND`].
pub fn partitions_of(n: u32) -> Result<Vec<Partition>, Error> {
    partitions_of_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

/// Same as [`partitions_of`] with an explicit enumeration cap.
pub fn partitions_of_bounded(n: u32, bound: u32) -> Result<Vec<Partition>, Error> {
    if n > bound {
        return Err(Error::EnumerationBound { n, bound });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn descend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            descend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    descend(n, n, &mut prefix, &mut out);
    Ok(out)
}

/// p(n), the number of partitions of n, by the pentagonal number recurrence.
pub fn partition_count(n: u64) -> BigUint {
    partition_table(n as usize)
        .pop()
        .expect("table has n + 1 entries")
}

/// p₂(n) = Σ_k p(k)·p(n−k), the number of bipartitions of n.
pub fn bipartition_count(n: u64) -> BigUint {
    let table = partition_table(n as usize);
    let mut total = BigUint::zero();
    for k in 0..=n as usize {
        total += &table[k] * &table[n as usize - k];
    }
    total
}

/// p(0)..p(n) via Euler's recurrence with generalized pentagonal numbers.
fn partition_table(n: usize) -> Vec<BigUint> {
    let mut table: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    table[0] = BigInt::one();
    for i in 1..=n {
        let mut sum = BigInt::zero();
        let mut k: usize = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let mut term = table[i - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= i {
                term += &table[i - g2];
            }
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
            k += 1;
        }
        table[i] = sum;
    }
    table
        .into_iter()
        .map(|v| v.to_biguint().expect("partition counts are nonnegative"))
        .collect()
}
