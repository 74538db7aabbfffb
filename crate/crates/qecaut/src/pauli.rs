//! Phase-tracked n-qubit Pauli operators in binary-symplectic (check matrix) form.
//!
//! An operator is stored as `i^phase_exp · ⊗_j X^{a_j} Z^{b_j}` with the `a`
//! and `b` vectors bit-packed into one machine word each. `Y` is encoded as
//! `iXZ`, so parsing a letter string absorbs one factor of `i` per `Y` slot
//! into the phase exponent.

use std::fmt;

use crate::error::{Error, Result};

/// Bit vectors are packed into a single `u64`, which covers every code in
/// scope (searches are guarded at 12 qubits anyway).
pub const MAX_QUBITS: usize = 64;

/// One tensor factor. The ordering `I < X < Y < Z` is the tie-breaking order
/// used by the distance enumerator.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub const NON_IDENTITY: [Letter; 3] = [Letter::X, Letter::Y, Letter::Z];

    pub fn from_bits(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    /// (x, z) check-matrix bits of this letter.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'I' => Some(Letter::I),
            'X' => Some(Letter::X),
            'Y' => Some(Letter::Y),
            'Z' => Some(Letter::Z),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Real scalar sign of a Hermitian Pauli.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A phase-tracked Pauli operator: `i^phase_exp · ⊗_j X^{a_j} Z^{b_j}`.
///
/// `x_bits` is the `a` vector and `z_bits` the `b` vector of the check-matrix
/// row `(a|b)`; bit `j` corresponds to qubit slot `j + 1` in the 1-based
/// external numbering.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: usize,
    phase_exp: u8,
    x_bits: u64,
    z_bits: u64,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Result<PauliOperator> {
        PauliOperator::from_parts(n, 0, 0, 0)
    }

    pub fn from_parts(n: usize, phase_exp: u8, x_bits: u64, z_bits: u64) -> Result<PauliOperator> {
        if n == 0 {
            return Err(Error::EmptyPauli);
        }
        if n > MAX_QUBITS {
            return Err(Error::TooManyQubits(n));
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(PauliOperator {
            n,
            phase_exp: phase_exp & 3,
            x_bits: x_bits & mask,
            z_bits: z_bits & mask,
        })
    }

    /// Positive-phase operator with the given letters.
    pub fn from_letters(letters: &[Letter]) -> Result<PauliOperator> {
        let mut x_bits = 0u64;
        let mut z_bits = 0u64;
        let mut phase_exp = 0u8;
        if letters.len() > MAX_QUBITS {
            return Err(Error::TooManyQubits(letters.len()));
        }
        for (j, letter) in letters.iter().enumerate() {
            let (x, z) = letter.bits();
            x_bits |= (x as u64) << j;
            z_bits |= (z as u64) << j;
            if *letter == Letter::Y {
                phase_exp = (phase_exp + 1) & 3;
            }
        }
        PauliOperator::from_parts(letters.len(), phase_exp, x_bits, z_bits)
    }

    /// Parse a signed Pauli string: `['-']['i']? {I|X|Y|Z}+`.
    pub fn parse(text: &str) -> Result<PauliOperator> {
        let mut phase_exp = 0u8;
        let mut chars = text.char_indices().peekable();
        if let Some((_, '-')) = chars.peek() {
            chars.next();
            phase_exp += 2;
        }
        if let Some((_, 'i')) = chars.peek() {
            chars.next();
            phase_exp += 1;
        }
        let mut letters = Vec::new();
        for (pos, c) in chars {
            match Letter::from_char(c) {
                Some(letter) => letters.push(letter),
                None => return Err(Error::IllegalCharacter { ch: c, pos }),
            }
        }
        if letters.is_empty() {
            return Err(Error::EmptyPauli);
        }
        let mut op = PauliOperator::from_letters(&letters)?;
        op.phase_exp = (op.phase_exp + phase_exp) & 3;
        Ok(op)
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase_exp
    }

    pub fn x_bits(&self) -> u64 {
        self.x_bits
    }

    pub fn z_bits(&self) -> u64 {
        self.z_bits
    }

    /// Check-matrix row with the phase stripped.
    pub fn row(&self) -> (u64, u64) {
        (self.x_bits, self.z_bits)
    }

    pub fn letter_at(&self, slot: usize) -> Letter {
        debug_assert!(slot < self.n);
        Letter::from_bits(
            (self.x_bits >> slot) & 1 == 1,
            (self.z_bits >> slot) & 1 == 1,
        )
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.n).map(|j| self.letter_at(j)).collect()
    }

    fn y_count(&self) -> u32 {
        (self.x_bits & self.z_bits).count_ones()
    }

    /// Scalar relative to the letter string: `Some(Plus)` for `XZZXI`,
    /// `Some(Minus)` for `-ZZX`, `None` when an `i` or `-i` factor remains.
    pub fn sign(&self) -> Option<Sign> {
        match (self.phase_exp as u32 + 4 - (self.y_count() & 3)) & 3 {
            0 => Some(Sign::Plus),
            2 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn has_real_phase(&self) -> bool {
        self.sign().is_some()
    }

    /// Same letters, positive sign.
    pub fn positive(&self) -> PauliOperator {
        PauliOperator {
            phase_exp: (self.y_count() & 3) as u8,
            ..*self
        }
    }

    pub fn negated(&self) -> PauliOperator {
        PauliOperator {
            phase_exp: (self.phase_exp + 2) & 3,
            ..*self
        }
    }

    pub fn is_identity(&self) -> bool {
        self.x_bits == 0 && self.z_bits == 0 && self.phase_exp == 0
    }

    /// True when every tensor factor is `I`, ignoring the scalar.
    pub fn is_identity_letters(&self) -> bool {
        self.x_bits == 0 && self.z_bits == 0
    }

    /// Inverse of [`PauliOperator::parse`] on real-phase operators.
    pub fn serialize(&self) -> Result<String> {
        let sign = self.sign().ok_or(Error::ImaginaryPhase)?;
        let mut out = String::with_capacity(self.n + 1);
        if sign == Sign::Minus {
            out.push('-');
        }
        for j in 0..self.n {
            out.push(self.letter_at(j).as_char());
        }
        Ok(out)
    }

    /// `X^a Z^b · X^c Z^d = (-1)^{b·c} X^{a+c} Z^{b+d}`, with the input phases
    /// carried along.
    pub fn multiply(&self, other: &PauliOperator) -> Result<PauliOperator> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: other.n,
            });
        }
        let reorder = (self.z_bits & other.x_bits).count_ones() & 1;
        Ok(PauliOperator {
            n: self.n,
            phase_exp: ((self.phase_exp as u32 + other.phase_exp as u32 + 2 * reorder) & 3) as u8,
            x_bits: self.x_bits ^ other.x_bits,
            z_bits: self.z_bits ^ other.z_bits,
        })
    }

    /// Conjugate transpose. `(i^p X^a Z^b)^* = i^{-p} (-1)^{a·b} X^a Z^b`.
    pub fn adjoint(&self) -> PauliOperator {
        let y_parity = self.y_count() & 1;
        PauliOperator {
            phase_exp: ((4 - self.phase_exp as u32 + 2 * y_parity) & 3) as u8,
            ..*self
        }
    }

    /// Symplectic form `a·d + b·c` over GF(2) vanishes exactly on commuting
    /// pairs.
    pub fn commutes(&self, other: &PauliOperator) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: other.n,
            });
        }
        Ok(rows_commute(self.row(), other.row()))
    }

    /// `g · self · g⁻¹`; flips the sign when the two anticommute.
    pub fn conjugate_by(&self, g: &PauliOperator) -> Result<PauliOperator> {
        if self.commutes(g)? {
            Ok(*self)
        } else {
            Ok(self.negated())
        }
    }

    /// Number of non-identity tensor factors.
    pub fn weight(&self) -> usize {
        (self.x_bits | self.z_bits).count_ones() as usize
    }

    /// Positions with an `I` factor, as a bit mask.
    pub fn identity_mask(&self) -> u64 {
        let mask = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        !(self.x_bits | self.z_bits) & mask
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.phase_exp as u32 + 4 - (self.y_count() & 3)) & 3 {
            1 => write!(f, "i")?,
            2 => write!(f, "-")?,
            3 => write!(f, "-i")?,
            _ => {}
        }
        for j in 0..self.n {
            write!(f, "{}", self.letter_at(j))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PauliOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<PauliOperator> {
        PauliOperator::parse(s)
    }
}

/// Symplectic form on bare check-matrix rows.
pub(crate) fn rows_commute(a: (u64, u64), b: (u64, u64)) -> bool {
    ((a.0 & b.1).count_ones() + (a.1 & b.0).count_ones()) & 1 == 0
}

/// Number of distinct Pauli letters (`I`, `X`, `Y`, `Z`) appearing as tensor
/// factors across a set of operators.
pub fn complexity(ops: &[PauliOperator]) -> Result<u32> {
    if ops.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = ops[0].qubits();
    let mut seen = [false; 4];
    for op in ops {
        if op.qubits() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: op.qubits(),
            });
        }
        for j in 0..n {
            seen[match op.letter_at(j) {
                Letter::I => 0,
                Letter::X => 1,
                Letter::Y => 2,
                Letter::Z => 3,
            }] = true;
        }
    }
    Ok(seen.iter().filter(|&&s| s).count() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> PauliOperator {
        PauliOperator::parse(text).unwrap()
    }

    #[test]
    fn parse_encodes_check_matrix_rows() {
        let op = p("XZZXI");
        assert_eq!(op.phase_exp(), 0);
        assert_eq!(op.x_bits(), 0b01001);
        assert_eq!(op.z_bits(), 0b00110);

        // IXYZ carries one i from the Y factor.
        let op = p("IXYZ");
        assert_eq!(op.x_bits(), 0b0110);
        assert_eq!(op.z_bits(), 0b1100);
        assert_eq!(op.phase_exp(), 1);

        // Two Y factors plus the minus sign cancel mod 4.
        let op = p("-YYI");
        assert_eq!(op.phase_exp(), 0);
        assert_eq!(op.x_bits(), 0b011);
        assert_eq!(op.z_bits(), 0b011);
        assert_eq!(op.sign(), Some(Sign::Minus));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(PauliOperator::parse(""), Err(Error::EmptyPauli));
        assert_eq!(PauliOperator::parse("-"), Err(Error::EmptyPauli));
        assert!(matches!(
            PauliOperator::parse("XQZ"),
            Err(Error::IllegalCharacter { ch: 'Q', pos: 1 })
        ));
        // An i prefix parses fine; it is the group builder that rejects it.
        assert_eq!(p("iX").sign(), None);
    }

    #[test]
    fn serialize_round_trips() {
        for text in ["-ZZX", "XZZXI", "YYI", "-IYY", "Z", "-Y"] {
            assert_eq!(p(text).serialize().unwrap(), text);
        }
        assert_eq!(p("iX").serialize(), Err(Error::ImaginaryPhase));
        assert_eq!(format!("{}", p("iX")), "iX");
        assert_eq!(format!("{}", p("-iX")), "-iX");
    }

    #[test]
    fn multiply_matches_worked_products() {
        let prod = p("XXX").multiply(&p("YYI")).unwrap();
        assert_eq!(prod.serialize().unwrap(), "-ZZX");
        let prod = p("XZZ").multiply(&p("ZXZ")).unwrap();
        assert_eq!(prod.serialize().unwrap(), "YYI");
        let id = PauliOperator::identity(3).unwrap();
        assert_eq!(id.multiply(&p("ZXZ")).unwrap(), p("ZXZ"));
        assert!(p("XX").multiply(&p("X")).is_err());
    }

    #[test]
    fn commutation_via_symplectic_form() {
        assert!(p("XZZXI").commutes(&p("IXZZX")).unwrap());
        assert!(!p("X").commutes(&p("Z")).unwrap());
        for gen in ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"] {
            assert!(p("XIZIX").commutes(&p(gen)).unwrap());
        }
    }

    #[test]
    fn anticommutation_shows_up_as_a_sign() {
        for a in ["X", "Y", "Z", "I"] {
            for b in ["X", "Y", "Z", "I"] {
                let pq = p(a).multiply(&p(b)).unwrap();
                let qp = p(b).multiply(&p(a)).unwrap();
                let commute = p(a).commutes(&p(b)).unwrap();
                assert_eq!(pq.row(), qp.row());
                let offset = (pq.phase_exp() + 4 - qp.phase_exp()) & 3;
                assert_eq!(commute, offset == 0);
                assert_eq!(!commute, offset == 2);
            }
        }
    }

    #[test]
    fn squares_are_plus_or_minus_identity() {
        for text in ["X", "Y", "Z", "-YYI", "XZZXI", "-ZZX"] {
            let op = p(text);
            let sq = op.multiply(&op).unwrap();
            assert_eq!(sq.row(), (0, 0));
            assert!(sq.phase_exp() == 0 || sq.phase_exp() == 2);
        }
    }

    #[test]
    fn weight_counts_non_identity_factors() {
        assert_eq!(p("XZIIZ").weight(), 3);
        assert_eq!(p("IIIII").weight(), 0);
        assert_eq!(p("XIZIX").weight(), 3);
    }

    #[test]
    fn adjoint_fixes_hermitian_operators() {
        for text in ["Y", "XZZXI", "-YYI", "ZY"] {
            let op = p(text);
            assert_eq!(op.adjoint(), op);
        }
        // iX is not Hermitian: (iX)* = -iX.
        assert_eq!(p("iX").adjoint(), p("-iX"));
    }

    #[test]
    fn complexity_counts_distinct_letters() {
        assert_eq!(complexity(&[p("IXX"), p("YYZ")]).unwrap(), 4);
        assert_eq!(complexity(&[p("III")]).unwrap(), 1);
        assert_eq!(complexity(&[p("XZZXI")]).unwrap(), 3);
        assert_eq!(complexity(&[]), Err(Error::EmptySet));
    }
}
