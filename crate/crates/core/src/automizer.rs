//! Symbolic descriptions of automizers N_G(P)/P.
//!
//! A descriptor is a term tree over a handful of atoms; the weight module
//! evaluates defect-zero character counts by structural recursion on the
//! tree without looking back at the class label that produced it.

use std::fmt;

/// A leaf group in an automizer tree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum AutomizerAtom {
    /// The finite symplectic group Sp_{2α}(ℓ); α = 0 is the trivial group.
    FiniteSymplectic { alpha: u32, ell: u64 },
    /// The finite general linear group GL_c(ℓ), c ≥ 1.
    FiniteGeneralLinear { degree: u32, ell: u64 },
    /// A cyclic group of order 2 (only meaningful at odd ℓ).
    OrderTwo,
    /// The minus-type orthogonal group GO⁻_{2α+2}(2) (ℓ = 2 only).
    MinusOrthogonal { alpha: u32 },
    /// A group known only by name, resolved by the exceptional tables.
    Named(&'static str),
}

/// A term tree describing an automizer.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum AutomizerDescriptor {
    Atom(AutomizerAtom),
    /// Direct product of the children; the empty product is the trivial group.
    Product(Vec<AutomizerDescriptor>),
    /// `base ≀ S_copies`, the wreath product with the symmetric group.
    Wreath {
        base: Box<AutomizerDescriptor>,
        copies: u32,
    },
    /// The index-2 subgroup of a product of wreath nodes consisting of the
    /// elements with an even number of nontrivial entries in the C₂
    /// components. Each child must be a wreath whose base contains exactly
    /// one [`AutomizerAtom::OrderTwo`].
    EvenC2Diagonal(Vec<AutomizerDescriptor>),
}

impl AutomizerDescriptor {
    pub fn atom(atom: AutomizerAtom) -> Self {
        AutomizerDescriptor::Atom(atom)
    }

    pub fn wreath(base: AutomizerDescriptor, copies: u32) -> Self {
        AutomizerDescriptor::Wreath {
            base: Box::new(base),
            copies,
        }
    }
}

impl fmt::Display for AutomizerAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AutomizerAtom::FiniteSymplectic { alpha, ell } => {
                write!(f, "Sp_{}({})", 2 * alpha, ell)
            }
            AutomizerAtom::FiniteGeneralLinear { degree, ell } => {
                write!(f, "GL_{degree}({ell})")
            }
            AutomizerAtom::OrderTwo => write!(f, "C2"),
            AutomizerAtom::MinusOrthogonal { alpha } => write!(f, "GO-_{}(2)", 2 * alpha + 2),
            AutomizerAtom::Named(name) => write!(f, "{name}"),
        }
    }
}

impl fmt::Display for AutomizerDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomizerDescriptor::Atom(atom) => write!(f, "{atom}"),
            AutomizerDescriptor::Product(children) => {
                if children.is_empty() {
                    return write!(f, "1");
                }
                for (i, child) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{child}")?;
                }
                Ok(())
            }
            AutomizerDescriptor::Wreath { base, copies } => {
                write!(f, "({base}) wr S_{copies}")
            }
            AutomizerDescriptor::EvenC2Diagonal(children) => {
                write!(f, "Even[")?;
                for (i, child) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    write!(f, "{child}")?;
                }
                write!(f, "]")
            }
        }
    }
}
