//! Local Clifford twists: per-slot permutations of the letters {X, Y, Z}.
//!
//! Diagonal Clifford conjugation acts, up to sign, as an element of S₃ on the
//! non-identity letters of each tensor factor while fixing `I`. Sign tracking
//! across twists is deliberately not defined: twisted operators are returned
//! as their canonical positive-phase representatives, since membership tests
//! downstream are all up to sign.

use std::fmt;

use crate::error::{Error, Result};
use crate::pauli::{Letter, PauliOperator};

/// One of the six permutations of {X, Y, Z}, in cycle notation with the
/// standard left-to-right reading ((XZY) sends X to Z).
///
/// The declaration order `id < (XY) < (XZ) < (YZ) < (XYZ) < (XZY)` is the
/// tie-breaking order used when several twists witness the same membership.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterPerm {
    Identity,
    SwapXY,
    SwapXZ,
    SwapYZ,
    CycleXYZ,
    CycleXZY,
}

impl LetterPerm {
    pub const ALL: [LetterPerm; 6] = [
        LetterPerm::Identity,
        LetterPerm::SwapXY,
        LetterPerm::SwapXZ,
        LetterPerm::SwapYZ,
        LetterPerm::CycleXYZ,
        LetterPerm::CycleXZY,
    ];

    /// Images of (X, Y, Z).
    fn table(self) -> [Letter; 3] {
        use Letter::*;
        match self {
            LetterPerm::Identity => [X, Y, Z],
            LetterPerm::SwapXY => [Y, X, Z],
            LetterPerm::SwapXZ => [Z, Y, X],
            LetterPerm::SwapYZ => [X, Z, Y],
            LetterPerm::CycleXYZ => [Y, Z, X],
            LetterPerm::CycleXZY => [Z, X, Y],
        }
    }

    pub fn apply(self, letter: Letter) -> Letter {
        match letter {
            Letter::I => Letter::I,
            Letter::X => self.table()[0],
            Letter::Y => self.table()[1],
            Letter::Z => self.table()[2],
        }
    }

    pub fn inverse(self) -> LetterPerm {
        match self {
            LetterPerm::CycleXYZ => LetterPerm::CycleXZY,
            LetterPerm::CycleXZY => LetterPerm::CycleXYZ,
            other => other,
        }
    }

    /// The unique letter permutation with the two given images, if the pair
    /// is consistent.
    pub fn from_images(x_to: Letter, y_to: Letter) -> Option<LetterPerm> {
        LetterPerm::ALL
            .into_iter()
            .find(|p| p.apply(Letter::X) == x_to && p.apply(Letter::Y) == y_to)
    }

    pub fn name(self) -> &'static str {
        match self {
            LetterPerm::Identity => "id",
            LetterPerm::SwapXY => "(XY)",
            LetterPerm::SwapXZ => "(XZ)",
            LetterPerm::SwapYZ => "(YZ)",
            LetterPerm::CycleXYZ => "(XYZ)",
            LetterPerm::CycleXZY => "(XZY)",
        }
    }

    pub fn parse(text: &str) -> Result<LetterPerm> {
        LetterPerm::ALL
            .into_iter()
            .find(|p| p.name() == text)
            .ok_or_else(|| Error::BadLetterPerm(text.to_string()))
    }
}

impl fmt::Display for LetterPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// An element of S₃ⁿ: one letter permutation per qubit slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalCliffordTwist {
    slots: Vec<LetterPerm>,
}

impl LocalCliffordTwist {
    pub fn identity(n: usize) -> LocalCliffordTwist {
        LocalCliffordTwist {
            slots: vec![LetterPerm::Identity; n],
        }
    }

    pub fn from_slots(slots: Vec<LetterPerm>) -> LocalCliffordTwist {
        LocalCliffordTwist { slots }
    }

    pub fn n(&self) -> usize {
        self.slots.len()
    }

    pub fn slot(&self, j: usize) -> LetterPerm {
        self.slots[j]
    }

    pub fn slots(&self) -> &[LetterPerm] {
        &self.slots
    }

    pub fn is_identity(&self) -> bool {
        self.slots.iter().all(|p| *p == LetterPerm::Identity)
    }

    pub fn inverse(&self) -> LocalCliffordTwist {
        LocalCliffordTwist {
            slots: self.slots.iter().map(|p| p.inverse()).collect(),
        }
    }

    /// Twist each tensor factor. The result is the canonical positive-phase
    /// representative of the twisted letter string.
    pub fn apply(&self, p: &PauliOperator) -> Result<PauliOperator> {
        if self.n() != p.qubits() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                actual: p.qubits(),
            });
        }
        let letters: Vec<Letter> = (0..p.qubits())
            .map(|j| self.slots[j].apply(p.letter_at(j)))
            .collect();
        PauliOperator::from_letters(&letters)
    }
}

impl fmt::Display for LocalCliffordTwist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, p) in self.slots.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
