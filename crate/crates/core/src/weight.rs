//! Weight counts: evaluating automizer contributions by `l`-core counting
//! and totalling w(F) two independent ways.
//!
//! The class-by-class route sums, over the enumerated stubborn classes, the
//! number of defect-zero characters of each automizer; a wreath `B ≀ S_m`
//! whose base has k defect-zero characters contributes the number of
//! k-tuples of `l`-cores of total size m, i.e. the coefficient of q^m in
//! C_l(q)^k. The closed-form route collapses the same sum into a single
//! series coefficient. The two agree on every supported input — that is the
//! artifact's central self-check — and both are compared against |Irr(W)|.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::automizer::{AutomizerAtom, AutomizerDescriptor};
use crate::combinatorics::{core_count_series, IntSeries};
use crate::error::Error;
use crate::exceptional::exceptional_weight_count;
use crate::rootdata::{is_prime, GroupSpec};
use crate::stubborn::{automizer_of, enumerate_labels_with};

/// How a total was computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Enumeration,
    GeneratingFunction,
    Table,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::Enumeration => "enumeration",
            Method::GeneratingFunction => "generating-function",
            Method::Table => "table",
        };
        write!(f, "{name}")
    }
}

/// The comparison of w(F) against |Irr(W)|.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Equal,
    StrictlyLess,
    Unsupported,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Verdict::Equal => "Equal",
            Verdict::StrictlyLess => "StrictlyLess",
            Verdict::Unsupported => "Unsupported",
        };
        write!(f, "{name}")
    }
}

/// One class row in a report: the class label (canonical text encoding or a
/// table name), its automizer rendered as text, and its weight contribution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassWeight {
    pub id: String,
    pub automizer: String,
    pub contribution: BigUint,
}

/// The result of a weight computation for one (group, prime) pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightReport {
    pub spec: GroupSpec,
    pub ell: u64,
    /// w(F); absent when the pair is unsupported.
    pub total_weights: Option<BigUint>,
    pub irr_w: BigUint,
    /// Per-class contributions in canonical order (enumeration and table
    /// methods only).
    pub per_class: Vec<ClassWeight>,
    pub method: Option<Method>,
    pub verdict: Verdict,
    /// The reason string accompanying an `Unsupported` verdict.
    pub note: Option<String>,
}

impl WeightReport {
    pub(crate) fn supported(
        spec: GroupSpec,
        ell: u64,
        total: BigUint,
        per_class: Vec<ClassWeight>,
        method: Method,
    ) -> Self {
        let irr_w = spec.irr_weyl_count();
        let verdict = verdict_for(&total, &irr_w);
        WeightReport {
            spec,
            ell,
            total_weights: Some(total),
            irr_w,
            per_class,
            method: Some(method),
            verdict,
            note: None,
        }
    }

    pub(crate) fn unsupported(spec: GroupSpec, ell: u64, reason: String) -> Self {
        WeightReport {
            spec,
            ell,
            total_weights: None,
            irr_w: spec.irr_weyl_count(),
            per_class: Vec::new(),
            method: None,
            verdict: Verdict::Unsupported,
            note: Some(reason),
        }
    }
}

fn verdict_for(total: &BigUint, irr_w: &BigUint) -> Verdict {
    match total.cmp(irr_w) {
        std::cmp::Ordering::Equal => Verdict::Equal,
        std::cmp::Ordering::Less => Verdict::StrictlyLess,
        std::cmp::Ordering::Greater => {
            // w(F) ≤ |Irr(W)| throughout the supported range; exceeding it
            // can only be a transcription bug and must be loud.
            panic!("weight count {total} exceeds |Irr(W)| = {irr_w}")
        }
    }
}

/// The number of defect-zero characters of an atom group at the prime `ell`.
///
/// Sp_{2α}(ℓ) and GL_c(ℓ) have only Steinberg characters in defect zero:
/// one for the symplectic group, ℓ−1 extensions for the general linear
/// group. C₂ contributes both its characters (ℓ odd), GO⁻_{2α+2}(2) exactly
/// one when α = 0 and none otherwise.
pub fn z_atom(atom: &AutomizerAtom, ell: u64) -> Result<u64, Error> {
    match *atom {
        AutomizerAtom::FiniteSymplectic { ell: atom_ell, .. } => {
            ensure_atom_prime(atom, atom_ell, ell)?;
            Ok(1)
        }
        AutomizerAtom::FiniteGeneralLinear { ell: atom_ell, .. } => {
            ensure_atom_prime(atom, atom_ell, ell)?;
            Ok(ell - 1)
        }
        AutomizerAtom::OrderTwo => {
            if ell == 2 {
                Err(Error::ContractViolation(
                    "C2 has no defect-zero characters at ell = 2; \
                     it never appears in a valid descriptor there"
                        .into(),
                ))
            } else {
                Ok(2)
            }
        }
        AutomizerAtom::MinusOrthogonal { alpha } => {
            if ell != 2 {
                Err(Error::ContractViolation(
                    "GO-_{2a+2}(2) atoms only arise at ell = 2".into(),
                ))
            } else if alpha == 0 {
                Ok(1)
            } else {
                Ok(0)
            }
        }
        AutomizerAtom::Named(name) => Err(Error::ContractViolation(format!(
            "named atom {name} is resolved by the exceptional tables, \
             not by structural evaluation"
        ))),
    }
}

fn ensure_atom_prime(atom: &AutomizerAtom, atom_ell: u64, ell: u64) -> Result<(), Error> {
    if atom_ell == ell {
        Ok(())
    } else {
        Err(Error::ContractViolation(format!(
            "atom {atom} evaluated at ell = {ell}"
        )))
    }
}

/// [q^m] C_ell(q)^k: the number of k-tuples of `ell`-cores of total size m.
fn core_tuple_count(ell: u64, k: usize, m: usize) -> BigUint {
    core_count_series(ell, m)
        .pow(k)
        .coefficient(m)
        .expect("coefficient within truncation order")
        .clone()
}

/// The number of defect-zero characters contributed by a descriptor tree.
///
/// Products multiply; a wreath `B ≀ S_m` with base count k yields
/// [q^m] C_ℓ(q)^k; the even-C₂ node counts orbits of the swap action, a
/// free orbit contributing one weight and a fixed point two, which closes
/// to (total + 3·fixed)/2.
pub fn weight_contribution(desc: &AutomizerDescriptor, ell: u64) -> Result<BigUint, Error> {
    match desc {
        AutomizerDescriptor::Atom(atom) => Ok(BigUint::from(z_atom(atom, ell)?)),
        AutomizerDescriptor::Product(children) => {
            let mut product = BigUint::one();
            for child in children {
                product *= weight_contribution(child, ell)?;
            }
            Ok(product)
        }
        AutomizerDescriptor::Wreath { base, copies } => {
            let base_count = weight_contribution(base, ell)?;
            let k = biguint_to_usize(&base_count)?;
            Ok(core_tuple_count(ell, k, *copies as usize))
        }
        AutomizerDescriptor::EvenC2Diagonal(children) => {
            let mut total = BigUint::one();
            let mut fixed = BigUint::one();
            for child in children {
                let AutomizerDescriptor::Wreath { base, copies } = child else {
                    return Err(Error::MalformedDescriptor(
                        "even-C2 children must be wreath nodes".into(),
                    ));
                };
                let half_count = base_without_order_two(base, ell)?;
                let m = *copies as usize;
                total *= core_tuple_count(ell, 2 * half_count, m);
                if m % 2 == 0 {
                    fixed *= core_tuple_count(ell, half_count, m / 2);
                } else {
                    fixed = BigUint::zero();
                }
            }
            let numerator = total + BigUint::from(3u32) * fixed;
            // Orbit counting must divide exactly; a parity failure is a bug.
            assert!(
                (&numerator % 2u32).is_zero(),
                "even-C2 orbit count is not integral"
            );
            Ok(numerator / 2u32)
        }
    }
}

/// Defect-zero count of a wreath base with its single C₂ factor removed.
fn base_without_order_two(base: &AutomizerDescriptor, ell: u64) -> Result<usize, Error> {
    let AutomizerDescriptor::Product(children) = base else {
        return Err(Error::MalformedDescriptor(
            "even-C2 wreath bases must be products".into(),
        ));
    };
    let order_two_count = children
        .iter()
        .filter(|c| matches!(c, AutomizerDescriptor::Atom(AutomizerAtom::OrderTwo)))
        .count();
    if order_two_count != 1 {
        return Err(Error::MalformedDescriptor(format!(
            "even-C2 wreath bases must contain exactly one C2 atom, found {order_two_count}"
        )));
    }
    let mut product = BigUint::one();
    for child in children {
        if matches!(child, AutomizerDescriptor::Atom(AutomizerAtom::OrderTwo)) {
            continue;
        }
        product *= weight_contribution(child, ell)?;
    }
    biguint_to_usize(&product)
}

fn biguint_to_usize(value: &BigUint) -> Result<usize, Error> {
    usize::try_from(value.clone()).map_err(|_| {
        Error::MalformedDescriptor(format!("base character count {value} is out of range"))
    })
}

/// w(F) by class-by-class enumeration, with per-class contributions.
pub fn count_weights_enum(spec: GroupSpec, ell: u64) -> Result<WeightReport, Error> {
    count_weights_enum_with(spec, ell, false)
}

/// As [`count_weights_enum`], optionally lifting the classification's
/// multiplicity exclusions (the lifted classes all contribute zero).
pub fn count_weights_enum_with(
    spec: GroupSpec,
    ell: u64,
    lift_exclusions: bool,
) -> Result<WeightReport, Error> {
    let labels = enumerate_labels_with(spec, ell, lift_exclusions)?;
    let mut per_class = Vec::with_capacity(labels.len());
    let mut total = BigUint::zero();
    for label in &labels {
        let descriptor = automizer_of(label);
        let contribution = weight_contribution(&descriptor, ell)?;
        total += &contribution;
        per_class.push(ClassWeight {
            id: label.to_string(),
            automizer: descriptor.to_string(),
            contribution,
        });
    }
    Ok(WeightReport::supported(
        spec,
        ell,
        total,
        per_class,
        Method::Enumeration,
    ))
}

/// Σ over compositions c of s of (ℓ−1)^{t(c)}, in closed form:
/// d(0) = 1 and d(s) = (ℓ−1)·ℓ^{s−1} for s ≥ 1.
fn composition_weight(ell: u64, s: u32) -> u64 {
    if s == 0 {
        1
    } else {
        (ell - 1) * ell.pow(s - 1)
    }
}

/// ∏ over α, s ≥ 0 with ℓ^{α+s} ≤ n of C_ℓ(q^{ℓ^{α+s}})^{scale·d(s)},
/// truncated at order n. With scale 1 this generates the unitary counts;
/// scale 2 doubles every exponent for the C₂ factors of types B and C.
fn assignment_series(n: usize, ell: u64, scale: u64) -> IntSeries {
    let core = core_count_series(ell, n);
    let mut acc = IntSeries::one(n);
    let mut alpha_weight = 1u64;
    loop {
        if alpha_weight > n as u64 {
            break;
        }
        let mut s = 0u32;
        let mut weight = alpha_weight;
        while weight <= n as u64 {
            let exponent = scale * composition_weight(ell, s);
            let factor = core.substitute(weight as usize).pow(exponent as usize);
            acc = acc.mul(&factor);
            s += 1;
            weight = match weight.checked_mul(ell) {
                Some(w) => w,
                None => break,
            };
        }
        alpha_weight = match alpha_weight.checked_mul(ell) {
            Some(w) => w,
            None => break,
        };
    }
    acc
}

/// The ℓ = 2 symplectic series: the orthogonal-side blocks only count at
/// α = 0, the symplectic-side blocks at every α.
fn symplectic_two_series(n: usize) -> IntSeries {
    let core = core_count_series(2, n);
    let mut acc = IntSeries::one(n);
    let mut s = 0u32;
    let mut weight = 1u64;
    while weight <= n as u64 {
        let exponent = composition_weight(2, s);
        acc = acc.mul(&core.substitute(weight as usize).pow(exponent as usize));
        s += 1;
        weight *= 2;
    }
    acc.mul(&assignment_series(n, 2, 1))
}

/// w(F) as a single generating-function coefficient. No per-class data.
pub fn count_weights_gf(spec: GroupSpec, ell: u64) -> Result<WeightReport, Error> {
    if !is_prime(ell) {
        return Err(Error::ContractViolation(format!("{ell} is not prime")));
    }
    if spec.is_classical() && spec.rank() == 0 {
        return Err(Error::ContractViolation(
            "classical rank parameter must be at least 1".into(),
        ));
    }
    let n = spec.rank() as usize;
    let so_unsupported = || Error::Unsupported {
        spec,
        ell,
        reason: "2-stubborn subgroups of SO(n) are not classified".into(),
    };
    let total = match spec {
        GroupSpec::Unitary(_) => assignment_series(n, ell, 1)
            .coefficient(n)
            .expect("order n")
            .clone(),
        GroupSpec::Symplectic(_) if ell == 2 => symplectic_two_series(n)
            .coefficient(n)
            .expect("order n")
            .clone(),
        GroupSpec::Symplectic(_) | GroupSpec::SpecialOrthogonalOdd(_) => {
            if ell == 2 {
                return Err(so_unsupported());
            }
            assignment_series(n, ell, 2)
                .coefficient(n)
                .expect("order n")
                .clone()
        }
        GroupSpec::SpecialOrthogonalEven(_) => {
            if ell == 2 {
                return Err(so_unsupported());
            }
            let full = assignment_series(n, ell, 2)
                .coefficient(n)
                .expect("order n")
                .clone();
            // Swap-symmetric assignments live on one C₂ representative at
            // half the size; odd n admits none.
            let symmetric = if n % 2 == 0 {
                assignment_series(n / 2, ell, 1)
                    .coefficient(n / 2)
                    .expect("order n/2")
                    .clone()
            } else {
                BigUint::zero()
            };
            let numerator = full + BigUint::from(3u32) * symmetric;
            assert!(
                (&numerator % 2u32).is_zero(),
                "even-C2 orbit count is not integral"
            );
            numerator / 2u32
        }
        _ => {
            return Err(Error::Unsupported {
                spec,
                ell,
                reason: "exceptional groups have no label classification; \
                         use the exceptional tables"
                    .into(),
            })
        }
    };
    Ok(WeightReport::supported(
        spec,
        ell,
        total,
        Vec::new(),
        Method::GeneratingFunction,
    ))
}

/// Whether the classical enumeration (and hence the generating function)
/// covers the pair.
fn classical_supported(spec: GroupSpec, ell: u64) -> bool {
    match spec {
        GroupSpec::Unitary(_) | GroupSpec::Symplectic(_) => true,
        GroupSpec::SpecialOrthogonalOdd(_) | GroupSpec::SpecialOrthogonalEven(_) => ell != 2,
        _ => false,
    }
}

/// Computes w(F) by every available route, checks the routes against each
/// other, and compares with |Irr(W)|.
///
/// Classical groups run both the enumeration and the generating function
/// and must agree; exceptional groups use the tabulated data. Pairs with no
/// classification in the source literature come back with an `Unsupported`
/// verdict and a reason, not an error, so sweeps stay total.
pub fn verify(spec: GroupSpec, ell: u64) -> Result<WeightReport, Error> {
    if !is_prime(ell) {
        return Err(Error::ContractViolation(format!("{ell} is not prime")));
    }
    if spec.is_exceptional() {
        return exceptional_weight_count(spec, ell);
    }
    if !classical_supported(spec, ell) {
        return Ok(WeightReport::unsupported(
            spec,
            ell,
            "2-stubborn subgroups of SO(n) are not classified".into(),
        ));
    }
    let enum_report = count_weights_enum(spec, ell)?;
    let gf_report = count_weights_gf(spec, ell)?;
    let enum_total = enum_report
        .total_weights
        .clone()
        .expect("supported reports carry totals");
    let gf_total = gf_report
        .total_weights
        .clone()
        .expect("supported reports carry totals");
    if enum_total != gf_total {
        return Err(Error::MethodMismatch {
            spec,
            ell,
            enum_total,
            gf_total,
        });
    }
    Ok(enum_report)
}

/// The verdict the source analysis predicts for each (group, prime) pair:
/// equality at good primes (and for U(n) everywhere), the known strict
/// deficits at the computed bad primes, and `Unsupported` where no
/// computation exists.
pub fn expected_verdict(spec: GroupSpec, ell: u64) -> Verdict {
    match spec {
        GroupSpec::Unitary(_) => Verdict::Equal,
        GroupSpec::Symplectic(n) => {
            if ell == 2 && n >= 2 {
                Verdict::StrictlyLess
            } else {
                Verdict::Equal
            }
        }
        GroupSpec::SpecialOrthogonalOdd(_) | GroupSpec::SpecialOrthogonalEven(_) => {
            if ell == 2 {
                Verdict::Unsupported
            } else {
                Verdict::Equal
            }
        }
        GroupSpec::G2 => Verdict::Equal,
        GroupSpec::F4 => match ell {
            3 => Verdict::StrictlyLess,
            2 => Verdict::Unsupported,
            _ => Verdict::Equal,
        },
        GroupSpec::E6 | GroupSpec::E7 => match ell {
            2 | 3 => Verdict::Unsupported,
            _ => Verdict::Equal,
        },
        GroupSpec::E8 => match ell {
            2 | 3 | 5 => Verdict::Unsupported,
            _ => Verdict::Equal,
        },
    }
}
