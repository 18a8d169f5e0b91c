//! Static knowledge about the supported compact groups: family tags, Weyl
//! group orders, good and bad primes, and `|Irr(W)|`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::{bipartition_count, partition_count};

/// One of the supported compact connected Lie groups.
///
/// The rank parameter of the classical families follows the compact
/// convention: `Unitary(n)` is U(n), `Symplectic(n)` is the group of n×n
/// quaternionic matrices (rank n, Weyl group of type C_n),
/// `SpecialOrthogonalOdd(n)` is SO(2n+1) and `SpecialOrthogonalEven(n)` is
/// SO(2n). Low-rank degeneracies (SO(2) a torus, D₂ = A₁×A₁, D₃ = A₃) are
/// not special-cased; the family formulas hold uniformly for n ≥ 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GroupSpec {
    Unitary(u32),
    Symplectic(u32),
    SpecialOrthogonalOdd(u32),
    SpecialOrthogonalEven(u32),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl GroupSpec {
    pub fn is_classical(&self) -> bool {
        matches!(
            self,
            GroupSpec::Unitary(_)
                | GroupSpec::Symplectic(_)
                | GroupSpec::SpecialOrthogonalOdd(_)
                | GroupSpec::SpecialOrthogonalEven(_)
        )
    }

    pub fn is_exceptional(&self) -> bool {
        !self.is_classical()
    }

    /// The rank parameter n for classical families, the Lie rank otherwise.
    pub fn rank(&self) -> u32 {
        match *self {
            GroupSpec::Unitary(n)
            | GroupSpec::Symplectic(n)
            | GroupSpec::SpecialOrthogonalOdd(n)
            | GroupSpec::SpecialOrthogonalEven(n) => n,
            GroupSpec::G2 => 2,
            GroupSpec::F4 => 4,
            GroupSpec::E6 => 6,
            GroupSpec::E7 => 7,
            GroupSpec::E8 => 8,
        }
    }

    /// Short family tag used by the command line and report rows.
    pub fn family_tag(&self) -> &'static str {
        match self {
            GroupSpec::Unitary(_) => "U",
            GroupSpec::Symplectic(_) => "Sp",
            GroupSpec::SpecialOrthogonalOdd(_) => "SO-odd",
            GroupSpec::SpecialOrthogonalEven(_) => "SO-even",
            GroupSpec::G2 => "G2",
            GroupSpec::F4 => "F4",
            GroupSpec::E6 => "E6",
            GroupSpec::E7 => "E7",
            GroupSpec::E8 => "E8",
        }
    }

    /// The bad primes of the root system. Type A has none; types B, C and D
    /// have 2; G2, F4, E6 and E7 have 2 and 3; E8 has 2, 3 and 5. The
    /// classification is uniform in the rank (for SO(2) the entry is
    /// vacuous but kept for a uniform table).
    pub fn bad_primes(&self) -> &'static [u64] {
        match self {
            GroupSpec::Unitary(_) => &[],
            GroupSpec::Symplectic(_)
            | GroupSpec::SpecialOrthogonalOdd(_)
            | GroupSpec::SpecialOrthogonalEven(_) => &[2],
            GroupSpec::G2 | GroupSpec::F4 | GroupSpec::E6 | GroupSpec::E7 => &[2, 3],
            GroupSpec::E8 => &[2, 3, 5],
        }
    }

    pub fn is_good(&self, ell: u64) -> bool {
        !self.bad_primes().contains(&ell)
    }

    /// |W|: n!, 2^n·n!, 2^n·n!, 2^{n−1}·n! for the classical families and
    /// the fixed orders for the exceptional ones.
    pub fn weyl_order(&self) -> BigUint {
        match *self {
            GroupSpec::Unitary(n) => factorial(n),
            GroupSpec::Symplectic(n) | GroupSpec::SpecialOrthogonalOdd(n) => {
                factorial(n) << n as usize
            }
            GroupSpec::SpecialOrthogonalEven(n) => factorial(n) << (n as usize - 1),
            GroupSpec::G2 => BigUint::from(12u32),
            GroupSpec::F4 => BigUint::from(1152u32),
            GroupSpec::E6 => BigUint::from(51840u32),
            GroupSpec::E7 => BigUint::from(2903040u32),
            GroupSpec::E8 => BigUint::from(696729600u32),
        }
    }

    /// |Irr(W)|: partitions for S_n, bipartitions for the hyperoctahedral
    /// group, the half-sum formula for type D, and fixed counts for the
    /// exceptional Weyl groups.
    pub fn irr_weyl_count(&self) -> BigUint {
        match *self {
            GroupSpec::Unitary(n) => partition_count(n as u64),
            GroupSpec::Symplectic(n) | GroupSpec::SpecialOrthogonalOdd(n) => {
                bipartition_count(n as u64)
            }
            GroupSpec::SpecialOrthogonalEven(n) => {
                // (p₂(n) + 3·p(n/2)) / 2: unordered bipartitions, with equal
                // pairs counted twice (split restriction from type B).
                let half = if n % 2 == 0 {
                    partition_count(n as u64 / 2)
                } else {
                    BigUint::zero()
                };
                let numerator = bipartition_count(n as u64) + BigUint::from(3u32) * half;
                assert!(
                    (&numerator % 2u32).is_zero(),
                    "type D character count must divide exactly"
                );
                numerator / 2u32
            }
            GroupSpec::G2 => BigUint::from(6u32),
            GroupSpec::F4 => BigUint::from(25u32),
            GroupSpec::E6 => BigUint::from(25u32),
            GroupSpec::E7 => BigUint::from(60u32),
            GroupSpec::E8 => BigUint::from(112u32),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupSpec::Unitary(n) => write!(f, "U({n})"),
            GroupSpec::Symplectic(n) => write!(f, "Sp({n})"),
            GroupSpec::SpecialOrthogonalOdd(n) => write!(f, "SO({})", 2 * n + 1),
            GroupSpec::SpecialOrthogonalEven(n) => write!(f, "SO({})", 2 * n),
            GroupSpec::G2 => write!(f, "G2"),
            GroupSpec::F4 => write!(f, "F4"),
            GroupSpec::E6 => write!(f, "E6"),
            GroupSpec::E7 => write!(f, "E7"),
            GroupSpec::E8 => write!(f, "E8"),
        }
    }
}

/// Classification of a prime relative to a group's root system.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PrimeClass {
    Good,
    Bad,
}

pub fn classify_prime(spec: GroupSpec, ell: u64) -> PrimeClass {
    if spec.is_good(ell) {
        PrimeClass::Good
    } else {
        PrimeClass::Bad
    }
}

/// Trial-division primality check; inputs here are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn factorial(n: u32) -> BigUint {
    (1..=n as u64).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}
