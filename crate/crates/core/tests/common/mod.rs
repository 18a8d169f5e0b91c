//! Brute-force oracles shared by the property and acceptance suites.
//!
//! Everything here recomputes quantities by explicit enumeration, staying
//! independent of the series-coefficient paths it is used to check.

// Each test target compiles this module separately and uses a subset.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use stubborn_weights::{partitions_of, AutomizerAtom, AutomizerDescriptor, Partition, z_atom};

/// Removes the rim hook cornered at cell (row, col) (0-based coordinates).
pub fn remove_rim_hook(lam: &Partition, row: usize, col: usize) -> Partition {
    let parts = lam.parts();
    let mut last = row;
    while last + 1 < parts.len() && parts[last + 1] as usize > col {
        last += 1;
    }
    let mut new_parts: Vec<u32> = parts.to_vec();
    for r in row..last {
        new_parts[r] = parts[r + 1] - 1;
    }
    new_parts[last] = col as u32;
    Partition::new(new_parts.into_iter().filter(|&p| p > 0).collect())
}

/// All cells whose hook length is exactly `ell`, i.e. the corners of the
/// removable rim `ell`-hooks.
pub fn removable_hook_corners(lam: &Partition, ell: u64) -> Vec<(usize, usize)> {
    let parts = lam.parts();
    let conj = lam.conjugate();
    let mut corners = Vec::new();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row as usize {
            let hook = row + conj.parts()[j] - i as u32 - j as u32 - 1;
            if u64::from(hook) == ell {
                corners.push((i, j));
            }
        }
    }
    corners
}

/// The `ell`-core by rim-hook stripping, with the removal order driven by
/// the choice stream. Any order must land on the same core.
pub fn rim_hook_core(lam: &Partition, ell: u64, choices: &[u8]) -> Partition {
    let mut current = lam.clone();
    let mut step = 0usize;
    loop {
        let corners = removable_hook_corners(&current, ell);
        if corners.is_empty() {
            assert!(
                current.is_ell_core(ell),
                "stripping ended off-core at {current}"
            );
            return current;
        }
        let pick = choices.get(step).copied().unwrap_or(0) as usize % corners.len();
        let (i, j) = corners[pick];
        current = remove_rim_hook(&current, i, j);
        step += 1;
    }
}

/// Number of `ell`-core partitions of m by filtering the full enumeration.
pub fn brute_core_count(ell: u64, m: u32) -> usize {
    partitions_of(m)
        .unwrap()
        .iter()
        .filter(|p| p.is_ell_core(ell))
        .count()
}

/// The `ell`-cores of each size 0..=max.
pub fn cores_by_size(ell: u64, max: u32) -> Vec<Vec<Partition>> {
    (0..=max)
        .map(|m| {
            partitions_of(m)
                .unwrap()
                .into_iter()
                .filter(|p| p.is_ell_core(ell))
                .collect()
        })
        .collect()
}

/// All k-tuples of `ell`-cores with total size exactly m, materialized.
pub fn core_tuples(cores: &[Vec<Partition>], k: usize, m: u32) -> Vec<Vec<Partition>> {
    fn descend(
        cores: &[Vec<Partition>],
        slots: usize,
        remaining: u32,
        prefix: &mut Vec<Partition>,
        out: &mut Vec<Vec<Partition>>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for size in 0..=remaining {
            for core in &cores[size as usize] {
                prefix.push(core.clone());
                descend(cores, slots - 1, remaining - size, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    descend(cores, k, m, &mut Vec::new(), &mut out);
    out
}

fn product_without_order_two(base: &AutomizerDescriptor) -> Vec<AutomizerDescriptor> {
    let AutomizerDescriptor::Product(children) = base else {
        panic!("even-C2 wreath bases are products");
    };
    children
        .iter()
        .filter(|c| !matches!(c, AutomizerDescriptor::Atom(AutomizerAtom::OrderTwo)))
        .cloned()
        .collect()
}

/// Brute-force defect-zero count of a descriptor: wreath layers by explicit
/// tuple enumeration, the even-C₂ node by explicit orbit enumeration under
/// the simultaneous pair swap, with each orbit contributing the order of a
/// point stabilizer.
pub fn brute_contribution(desc: &AutomizerDescriptor, ell: u64) -> BigUint {
    match desc {
        AutomizerDescriptor::Atom(atom) => BigUint::from(z_atom(atom, ell).unwrap()),
        AutomizerDescriptor::Product(children) => children
            .iter()
            .map(|c| brute_contribution(c, ell))
            .fold(BigUint::one(), |a, b| a * b),
        AutomizerDescriptor::Wreath { base, copies } => {
            let k: usize = brute_contribution(base, ell)
                .try_into()
                .expect("base count fits");
            let cores = cores_by_size(ell, *copies);
            BigUint::from(core_tuples(&cores, k, *copies).len())
        }
        AutomizerDescriptor::EvenC2Diagonal(children) => {
            // Per block: tuples of length 2·k_b with the two C₂ copies of
            // each character adjacent at slots (2i, 2i+1).
            let mut per_block: Vec<Vec<Vec<Partition>>> = Vec::new();
            for child in children {
                let AutomizerDescriptor::Wreath { base, copies } = child else {
                    panic!("even-C2 children are wreath nodes");
                };
                let half: usize = product_without_order_two(base)
                    .iter()
                    .map(|c| brute_contribution(c, ell))
                    .fold(BigUint::one(), |a, b| a * b)
                    .try_into()
                    .expect("base count fits");
                let cores = cores_by_size(ell, *copies);
                per_block.push(core_tuples(&cores, 2 * half, *copies));
            }
            // Cartesian product over blocks.
            let mut assignments: Vec<Vec<Vec<Partition>>> = vec![Vec::new()];
            for block in &per_block {
                let mut next = Vec::with_capacity(assignments.len() * block.len());
                for partial in &assignments {
                    for choice in block {
                        let mut extended = partial.clone();
                        extended.push(choice.clone());
                        next.push(extended);
                    }
                }
                assignments = next;
            }
            // Orbits of the involution swapping slots 2i and 2i+1 in every
            // block at once; a fixed point yields two weights, a free orbit
            // one.
            let swap = |assignment: &Vec<Vec<Partition>>| -> Vec<Vec<Partition>> {
                assignment
                    .iter()
                    .map(|block| {
                        let mut swapped = block.clone();
                        for pair in swapped.chunks_exact_mut(2) {
                            pair.swap(0, 1);
                        }
                        swapped
                    })
                    .collect()
            };
            let mut seen: BTreeSet<Vec<Vec<Partition>>> = BTreeSet::new();
            let mut weights = BigUint::zero();
            for assignment in &assignments {
                let image = swap(assignment);
                let representative = assignment.clone().min(image.clone());
                if seen.insert(representative) {
                    weights += if *assignment == image { 2u32 } else { 1u32 };
                }
            }
            weights
        }
    }
}
