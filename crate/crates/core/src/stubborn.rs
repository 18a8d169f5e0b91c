//! Conjugacy-class labels of `l`-stubborn subgroups of the classical groups,
//! and the symbolic automizer of each class.
//!
//! Following Oliver's classification, a class of `l`-stubborn subgroups of
//! U(n), Sp(n) or SO(n) is labelled by a finitely supported function from
//! block keys (α, c) — a tower exponent α and a composition c — to positive
//! multiplicities, with Σ ℓ^{α+|c|}·f(α,c) = n. Sp(n) at ℓ = 2 needs an
//! ordered pair of such functions (f, f'). The subgroups themselves are never
//! materialized; the label determines the automizer shape and that is all the
//! weight count needs.

use std::collections::BTreeMap;
use std::fmt;

use crate::automizer::{AutomizerAtom, AutomizerDescriptor};
use crate::error::Error;
use crate::rootdata::{is_prime, GroupSpec};

/// A block key (α, c): the exponent α and the composition c = (c₁,…,c_t)
/// of one iterated-wreath layer. Its weight is ℓ^{α+|c|}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BlockKey {
    alpha: u32,
    comp: Vec<u32>,
}

impl BlockKey {
    pub fn new(alpha: u32, comp: Vec<u32>) -> Self {
        assert!(
            comp.iter().all(|&c| c > 0),
            "composition entries must be strictly positive"
        );
        BlockKey { alpha, comp }
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    pub fn comp(&self) -> &[u32] {
        &self.comp
    }

    /// α + |c|, the exponent of the block weight.
    pub fn exponent(&self) -> u32 {
        self.alpha + self.comp.iter().sum::<u32>()
    }

    /// ℓ^{α+|c|}.
    pub fn weight(&self, ell: u64) -> u64 {
        ell.checked_pow(self.exponent())
            .expect("block weight fits in u64 by generation bounds")
    }
}

// Canonical order: alpha first, then composition by length, then entries.
impl Ord for BlockKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.alpha, self.comp.len(), &self.comp).cmp(&(
            other.alpha,
            other.comp.len(),
            &other.comp,
        ))
    }
}

impl PartialOrd for BlockKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BlockKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|", self.alpha)?;
        for (i, c) in self.comp.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// One conjugacy class of `l`-stubborn subgroups, encoded by the function f
/// (and f' for Sp(n) at ℓ = 2, empty otherwise).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StubbornLabel {
    primary: BTreeMap<BlockKey, u32>,
    secondary: BTreeMap<BlockKey, u32>,
    ell: u64,
    spec: GroupSpec,
}

impl StubbornLabel {
    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    /// The blocks of f in canonical key order.
    pub fn primary_blocks(&self) -> impl Iterator<Item = (&BlockKey, u32)> {
        self.primary.iter().map(|(k, &m)| (k, m))
    }

    /// The blocks of f' in canonical key order (empty unless Sp(n), ℓ = 2).
    pub fn secondary_blocks(&self) -> impl Iterator<Item = (&BlockKey, u32)> {
        self.secondary.iter().map(|(k, &m)| (k, m))
    }

    /// Σ ℓ^{α+|c|}·f(α,c) + Σ ℓ^{α'+|c'|}·f'(α',c'); always equals n.
    pub fn weighted_sum(&self) -> u64 {
        self.primary
            .iter()
            .chain(self.secondary.iter())
            .map(|(k, &m)| k.weight(self.ell) * u64::from(m))
            .sum()
    }
}

// Canonical text encoding: `f[(α|c1,…,ct)]=m` segments joined by `;`, with
// the f' segments written `f'[...]`.
impl fmt::Display for StubbornLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (key, mult) in &self.primary {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "f[{key}]={mult}")?;
            first = false;
        }
        for (key, mult) in &self.secondary {
            if !first {
                write!(f, ";")?;
            }
            write!(f, "f'[{key}]={mult}")?;
            first = false;
        }
        Ok(())
    }
}

/// Which label shape a supported (spec, ℓ) pair uses.
enum LabelShape {
    /// A single function f (U(n) at any prime; Sp, SO at odd primes).
    Single,
    /// An ordered pair (f, f') (Sp(n) at ℓ = 2).
    Pair,
}

fn label_shape(spec: GroupSpec, ell: u64) -> Result<LabelShape, Error> {
    if !is_prime(ell) {
        return Err(Error::ContractViolation(format!("{ell} is not prime")));
    }
    match spec {
        GroupSpec::Unitary(_) => Ok(LabelShape::Single),
        GroupSpec::Symplectic(_) if ell == 2 => Ok(LabelShape::Pair),
        GroupSpec::Symplectic(_) => Ok(LabelShape::Single),
        GroupSpec::SpecialOrthogonalOdd(_) | GroupSpec::SpecialOrthogonalEven(_) => {
            if ell == 2 {
                Err(Error::Unsupported {
                    spec,
                    ell,
                    reason: "2-stubborn subgroups of SO(n) are not classified".into(),
                })
            } else {
                Ok(LabelShape::Single)
            }
        }
        _ => Err(Error::Unsupported {
            spec,
            ell,
            reason: "exceptional groups have no label classification; \
                     use the exceptional tables"
                .into(),
        }),
    }
}

/// All compositions of `s` (ordered sequences of positive integers summing
/// to s), in length-then-entries order. `s = 0` yields only the empty one.
fn compositions(s: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn descend(remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in 1..=remaining {
            prefix.push(first);
            descend(remaining - first, prefix, out);
            prefix.pop();
        }
    }
    descend(s, &mut prefix, &mut out);
    out.sort_by_key(|c| (c.len(), c.clone()));
    out
}

/// All block keys of weight ≤ n, in canonical order.
fn block_keys(ell: u64, n: u32) -> Vec<BlockKey> {
    let mut keys = Vec::new();
    let mut exponent = 0u32;
    let mut weight = 1u64;
    while weight <= u64::from(n) {
        for alpha in 0..=exponent {
            for comp in compositions(exponent - alpha) {
                keys.push(BlockKey::new(alpha, comp));
            }
        }
        exponent += 1;
        match weight.checked_mul(ell) {
            Some(w) => weight = w,
            None => break,
        }
    }
    keys.sort();
    keys
}

/// Enumerates the conjugacy-class labels of `l`-stubborn subgroups of a
/// classical group, one per class, in canonical order. Classes whose weight
/// contribution turns out to be zero are included; suppressing them would
/// break the class count.
pub fn enumerate_labels(spec: GroupSpec, ell: u64) -> Result<Vec<StubbornLabel>, Error> {
    enumerate_labels_with(spec, ell, false)
}

/// As [`enumerate_labels`], with the classification's multiplicity
/// exclusions optionally lifted. Lifting is a debug facility: the extra
/// labels all contribute zero weights, which the test suite checks.
pub fn enumerate_labels_with(
    spec: GroupSpec,
    ell: u64,
    lift_exclusions: bool,
) -> Result<Vec<StubbornLabel>, Error> {
    let shape = label_shape(spec, ell)?;
    let n = spec.rank();
    if n == 0 {
        return Err(Error::ContractViolation(
            "classical rank parameter must be at least 1".into(),
        ));
    }
    let keys = block_keys(ell, n);

    // Tag each key once for f and, in the paired shape, once for f'.
    let mut slots: Vec<(bool, BlockKey, u64)> = Vec::new();
    for key in &keys {
        slots.push((false, key.clone(), key.weight(ell)));
    }
    if matches!(shape, LabelShape::Pair) {
        for key in &keys {
            slots.push((true, key.clone(), key.weight(ell)));
        }
    }

    let mut labels = Vec::new();
    let mut primary = BTreeMap::new();
    let mut secondary = BTreeMap::new();
    assign(
        &slots,
        0,
        u64::from(n),
        &mut primary,
        &mut secondary,
        &mut |primary, secondary| {
            let label = StubbornLabel {
                primary: primary.clone(),
                secondary: secondary.clone(),
                ell,
                spec,
            };
            if lift_exclusions || !is_excluded(&label) {
                labels.push(label);
            }
        },
    );
    labels.sort();
    Ok(labels)
}

fn assign(
    slots: &[(bool, BlockKey, u64)],
    index: usize,
    remaining: u64,
    primary: &mut BTreeMap<BlockKey, u32>,
    secondary: &mut BTreeMap<BlockKey, u32>,
    emit: &mut impl FnMut(&BTreeMap<BlockKey, u32>, &BTreeMap<BlockKey, u32>),
) {
    if index == slots.len() {
        if remaining == 0 {
            emit(primary, secondary);
        }
        return;
    }
    let (is_secondary, key, weight) = &slots[index];
    assign(slots, index + 1, remaining, primary, secondary, emit);
    let mut mult = 1u64;
    while mult * weight <= remaining {
        if *is_secondary {
            secondary.insert(key.clone(), mult as u32);
        } else {
            primary.insert(key.clone(), mult as u32);
        }
        assign(
            slots,
            index + 1,
            remaining - mult * weight,
            primary,
            secondary,
            emit,
        );
        mult += 1;
    }
    if *is_secondary {
        secondary.remove(key);
    } else {
        primary.remove(key);
    }
}

/// The classification's multiplicity exclusions: for U(n) the trivial block
/// (0,()) may not have multiplicity 2 or 4 at ℓ = 2, nor 3 at ℓ = 3; for
/// Sp(n) at ℓ = 2 the same applies to f'(0,()). These are exactly the
/// multiplicities m with O_ℓ(S_m) ≠ 1, where the would-be normalizer
/// quotient has a nontrivial normal ℓ-subgroup.
fn is_excluded(label: &StubbornLabel) -> bool {
    let trivial_key = BlockKey::new(0, Vec::new());
    match label.spec {
        GroupSpec::Unitary(_) => {
            let m = label.primary.get(&trivial_key).copied().unwrap_or(0);
            (label.ell == 2 && (m == 2 || m == 4)) || (label.ell == 3 && m == 3)
        }
        GroupSpec::Symplectic(_) if label.ell == 2 => {
            let m = label.secondary.get(&trivial_key).copied().unwrap_or(0);
            m == 2 || m == 4
        }
        _ => false,
    }
}

/// The number of conjugacy classes of `l`-stubborn subgroups.
pub fn class_count(spec: GroupSpec, ell: u64) -> Result<usize, Error> {
    Ok(enumerate_labels(spec, ell)?.len())
}

/// Builds the symbolic automizer N_G(P)/P of the class labelled by `label`.
pub fn automizer_of(label: &StubbornLabel) -> AutomizerDescriptor {
    let ell = label.ell;
    match label.spec {
        GroupSpec::Unitary(_) => {
            let wreaths = label
                .primary_blocks()
                .map(|(key, mult)| {
                    AutomizerDescriptor::wreath(unitary_base(key, ell), mult)
                })
                .collect();
            AutomizerDescriptor::Product(wreaths)
        }
        GroupSpec::Symplectic(_) if ell == 2 => {
            let mut wreaths: Vec<AutomizerDescriptor> = Vec::new();
            for (key, mult) in label.primary_blocks() {
                let mut children = vec![AutomizerDescriptor::atom(
                    AutomizerAtom::MinusOrthogonal { alpha: key.alpha() },
                )];
                children.extend(general_linear_atoms(key, ell));
                wreaths.push(AutomizerDescriptor::wreath(
                    AutomizerDescriptor::Product(children),
                    mult,
                ));
            }
            for (key, mult) in label.secondary_blocks() {
                wreaths.push(AutomizerDescriptor::wreath(unitary_base(key, ell), mult));
            }
            AutomizerDescriptor::Product(wreaths)
        }
        GroupSpec::Symplectic(_) | GroupSpec::SpecialOrthogonalOdd(_) => {
            let wreaths = label
                .primary_blocks()
                .map(|(key, mult)| {
                    AutomizerDescriptor::wreath(order_two_base(key, ell), mult)
                })
                .collect();
            AutomizerDescriptor::Product(wreaths)
        }
        GroupSpec::SpecialOrthogonalEven(_) => {
            let wreaths = label
                .primary_blocks()
                .map(|(key, mult)| {
                    AutomizerDescriptor::wreath(order_two_base(key, ell), mult)
                })
                .collect();
            AutomizerDescriptor::EvenC2Diagonal(wreaths)
        }
        _ => unreachable!("labels only exist for classical groups"),
    }
}

/// Sp_{2α}(ℓ) × GL_{c₁}(ℓ) × ⋯ × GL_{c_t}(ℓ).
fn unitary_base(key: &BlockKey, ell: u64) -> AutomizerDescriptor {
    let mut children = vec![AutomizerDescriptor::atom(AutomizerAtom::FiniteSymplectic {
        alpha: key.alpha(),
        ell,
    })];
    children.extend(general_linear_atoms(key, ell));
    AutomizerDescriptor::Product(children)
}

/// C₂ × Sp_{2α}(ℓ) × GL_{c₁}(ℓ) × ⋯ × GL_{c_t}(ℓ).
fn order_two_base(key: &BlockKey, ell: u64) -> AutomizerDescriptor {
    let mut children = vec![AutomizerDescriptor::atom(AutomizerAtom::OrderTwo)];
    if let AutomizerDescriptor::Product(rest) = unitary_base(key, ell) {
        children.extend(rest);
    }
    AutomizerDescriptor::Product(children)
}

fn general_linear_atoms<'a>(
    key: &'a BlockKey,
    ell: u64,
) -> impl Iterator<Item = AutomizerDescriptor> + 'a {
    key.comp().iter().map(move |&degree| {
        AutomizerDescriptor::atom(AutomizerAtom::FiniteGeneralLinear { degree, ell })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key(alpha: u32, comp: &[u32]) -> BlockKey {
        BlockKey::new(alpha, comp.to_vec())
    }

    #[test]
    fn unitary_rank_one_has_a_single_class() {
        let labels = enumerate_labels(GroupSpec::Unitary(1), 3).unwrap();
        assert_eq!(labels.len(), 1);
        let blocks: Vec<_> = labels[0].primary_blocks().collect();
        assert_eq!(blocks, vec![(&key(0, &[]), 1)]);
        assert_eq!(class_count(GroupSpec::Unitary(1), 5).unwrap(), 1);
    }

    #[test]
    fn unitary_rank_two_at_two_excludes_the_doubled_torus() {
        let labels = enumerate_labels(GroupSpec::Unitary(2), 2).unwrap();
        assert_eq!(labels.len(), 2);
        let encodings: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        assert_eq!(encodings, vec!["f[(0|1)]=1", "f[(1|)]=1"]);
        // Lifting the exclusion restores f[(0|)]=2.
        let lifted = enumerate_labels_with(GroupSpec::Unitary(2), 2, true).unwrap();
        assert_eq!(lifted.len(), 3);
    }

    #[test]
    fn unitary_rank_three_at_three_excludes_multiplicity_three() {
        let labels = enumerate_labels(GroupSpec::Unitary(3), 3).unwrap();
        let encodings: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        assert_eq!(encodings, vec!["f[(0|1)]=1", "f[(1|)]=1"]);
        assert_eq!(class_count(GroupSpec::Unitary(3), 3).unwrap(), 2);
        let lifted = enumerate_labels_with(GroupSpec::Unitary(3), 3, true).unwrap();
        assert_eq!(lifted.len(), 3);
    }

    #[test]
    fn symplectic_rank_two_at_two_matches_the_classification() {
        let labels = enumerate_labels(GroupSpec::Symplectic(2), 2).unwrap();
        let encodings: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        // Six classes: four weight-bearing plus two that contribute zero.
        assert_eq!(
            encodings,
            vec![
                "f'[(0|1)]=1",
                "f'[(1|)]=1",
                "f[(0|)]=1;f'[(0|)]=1",
                "f[(0|)]=2",
                "f[(0|1)]=1",
                "f[(1|)]=1",
            ]
        );
        // f'(0,()) = 2 is excluded.
        assert!(!encodings.contains(&"f'[(0|)]=2".to_string()));
    }

    #[test]
    fn weighted_sums_reproduce_the_rank() {
        for (spec, ell) in [
            (GroupSpec::Unitary(6), 2),
            (GroupSpec::Unitary(5), 3),
            (GroupSpec::Symplectic(4), 3),
            (GroupSpec::Symplectic(5), 2),
            (GroupSpec::SpecialOrthogonalOdd(4), 5),
            (GroupSpec::SpecialOrthogonalEven(6), 3),
        ] {
            let labels = enumerate_labels(spec, ell).unwrap();
            for label in &labels {
                assert_eq!(label.weighted_sum(), u64::from(spec.rank()));
                for (key, _) in label.primary_blocks().chain(label.secondary_blocks()) {
                    assert!(key.weight(ell) <= u64::from(spec.rank()));
                }
            }
            // No duplicates: labels are sorted, so adjacent equality suffices.
            assert!(labels.windows(2).all(|w| w[0] != w[1]));
        }
    }

    #[test]
    fn orthogonal_at_two_is_unsupported() {
        let err = enumerate_labels(GroupSpec::SpecialOrthogonalOdd(3), 2).unwrap_err();
        assert!(matches!(err, Error::Unsupported { .. }));
        let err = enumerate_labels(GroupSpec::SpecialOrthogonalEven(3), 2).unwrap_err();
        assert!(matches!(err, Error::Unsupported { .. }));
        let err = enumerate_labels(GroupSpec::G2, 3).unwrap_err();
        assert!(matches!(err, Error::Unsupported { .. }));
    }

    #[test]
    fn automizer_shapes_follow_the_family() {
        // U(2), ℓ=2, f(0,(1)) = 1.
        let labels = enumerate_labels(GroupSpec::Unitary(2), 2).unwrap();
        let descriptor = automizer_of(&labels[0]);
        let expected = AutomizerDescriptor::Product(vec![AutomizerDescriptor::wreath(
            AutomizerDescriptor::Product(vec![
                AutomizerDescriptor::atom(AutomizerAtom::FiniteSymplectic { alpha: 0, ell: 2 }),
                AutomizerDescriptor::atom(AutomizerAtom::FiniteGeneralLinear {
                    degree: 1,
                    ell: 2,
                }),
            ]),
            1,
        )]);
        assert_eq!(descriptor, expected);

        // Sp(1), ℓ=3, f(0,()) = 1.
        let labels = enumerate_labels(GroupSpec::Symplectic(1), 3).unwrap();
        let descriptor = automizer_of(&labels[0]);
        let expected = AutomizerDescriptor::Product(vec![AutomizerDescriptor::wreath(
            AutomizerDescriptor::Product(vec![
                AutomizerDescriptor::atom(AutomizerAtom::OrderTwo),
                AutomizerDescriptor::atom(AutomizerAtom::FiniteSymplectic { alpha: 0, ell: 3 }),
            ]),
            1,
        )]);
        assert_eq!(descriptor, expected);

        // SO(4), ℓ=3, f(0,()) = 2 is the only class.
        let labels = enumerate_labels(GroupSpec::SpecialOrthogonalEven(2), 3).unwrap();
        assert_eq!(labels.len(), 1);
        let descriptor = automizer_of(&labels[0]);
        let expected = AutomizerDescriptor::EvenC2Diagonal(vec![AutomizerDescriptor::wreath(
            AutomizerDescriptor::Product(vec![
                AutomizerDescriptor::atom(AutomizerAtom::OrderTwo),
                AutomizerDescriptor::atom(AutomizerAtom::FiniteSymplectic { alpha: 0, ell: 3 }),
            ]),
            2,
        )]);
        assert_eq!(descriptor, expected);
    }

    #[test]
    fn block_key_order_is_alpha_then_length_then_entries() {
        let mut keys = vec![
            key(0, &[2]),
            key(1, &[]),
            key(0, &[1, 1]),
            key(0, &[]),
            key(2, &[]),
            key(0, &[1]),
        ];
        keys.sort();
        assert_eq!(
            keys,
            vec![
                key(0, &[]),
                key(0, &[1]),
                key(0, &[2]),
                key(0, &[1, 1]),
                key(1, &[]),
                key(2, &[]),
            ]
        );
    }

    #[test]
    fn compositions_are_complete_and_ordered() {
        assert_eq!(compositions(0), vec![Vec::<u32>::new()]);
        assert_eq!(
            compositions(3),
            vec![vec![3], vec![1, 2], vec![2, 1], vec![1, 1, 1]]
        );
        // 2^{s-1} compositions of s.
        for s in 1..=6u32 {
            assert_eq!(compositions(s).len(), 1 << (s - 1));
        }
    }
}
