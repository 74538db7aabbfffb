//! Stabilizer groups: validated generator sets with fast membership.
//!
//! A group is built from independent, pairwise-commuting, real-phase
//! generators. Membership queries solve the GF(2) system against a
//! row-reduced echelon form of the check-matrix rows and then replay the
//! signed generator product to settle exact-vs-up-to-sign; the full element
//! table is materialized lazily only where a caller needs it.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::pauli::{rows_commute, PauliOperator, Sign};

/// Outcome of a membership query.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MembershipStatus {
    /// The operator itself, phase included, lies in the group.
    Exact,
    /// The operator's letter string appears in the group with the opposite
    /// sign.
    UpToSign,
    Absent,
}

/// Membership answer with the sign of the matching group element (relative to
/// the positive-phase representative of its letters); `None` iff absent.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct MembershipAnswer {
    pub status: MembershipStatus,
    pub sign: Option<Sign>,
}

impl MembershipAnswer {
    const ABSENT: MembershipAnswer = MembershipAnswer {
        status: MembershipStatus::Absent,
        sign: None,
    };

    pub fn is_member_up_to_sign(&self) -> bool {
        self.status != MembershipStatus::Absent
    }
}

#[derive(Copy, Clone, Debug)]
struct EchelonRow {
    x: u64,
    z: u64,
    pivot: u32,
    /// Which original generators multiply (in ascending index order) to an
    /// element with this row.
    combo: u64,
}

/// Guard for element enumeration; all codes in scope have m ≤ 12.
pub const MAX_ENUMERATION_GENERATORS: usize = 20;

#[derive(Debug)]
pub struct StabilizerGroup {
    n: usize,
    generators: Vec<PauliOperator>,
    echelon: Vec<EchelonRow>,
    elements: OnceLock<Vec<PauliOperator>>,
    element_index: OnceLock<HashMap<(u64, u64), u8>>,
}

/// 2n-bit pivot position: x bits first, then z bits.
fn pivot_of(x: u64, z: u64) -> u32 {
    if x != 0 {
        x.trailing_zeros()
    } else {
        64 + z.trailing_zeros()
    }
}

impl StabilizerGroup {
    /// Validate generators and build the membership structure.
    ///
    /// Errors, in the order they are detected per generator: `BadPhase` for an
    /// imaginary scalar, `NonCommuting(i, j)` for an anticommuting pair,
    /// `DependentGenerators(i)` when generator `i` is a signed product of
    /// earlier ones, and `ContainsMinusI` when a generator is itself `-I…I`.
    pub fn build(generators: &[PauliOperator]) -> Result<StabilizerGroup> {
        Self::build_inner(generators, false)
    }

    /// Like [`StabilizerGroup::build`], but Gaussian-reduces the input:
    /// generators that are exact signed products of earlier ones are dropped
    /// instead of reported. A dependency whose replayed sign disagrees still
    /// means the group would contain `-I`, which stays a hard error.
    pub fn build_reduced(generators: &[PauliOperator]) -> Result<StabilizerGroup> {
        Self::build_inner(generators, true)
    }

    pub fn from_strings<S: AsRef<str>>(gens: &[S]) -> Result<StabilizerGroup> {
        let ops = gens
            .iter()
            .map(|s| PauliOperator::parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::build(&ops)
    }

    fn build_inner(generators: &[PauliOperator], reduce: bool) -> Result<StabilizerGroup> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        let n = generators[0].qubits();
        for (i, g) in generators.iter().enumerate() {
            if g.qubits() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    actual: g.qubits(),
                });
            }
            if !g.has_real_phase() {
                return Err(Error::BadPhase(i));
            }
        }
        for i in 0..generators.len() {
            for j in (i + 1)..generators.len() {
                if !rows_commute(generators[i].row(), generators[j].row()) {
                    return Err(Error::NonCommuting(i, j));
                }
            }
        }

        let mut kept: Vec<PauliOperator> = Vec::new();
        let mut echelon: Vec<EchelonRow> = Vec::new();
        for (i, g) in generators.iter().enumerate() {
            let (mut x, mut z) = g.row();
            let mut combo = 0u64;
            for row in &echelon {
                if pivot_bit(x, z, row.pivot) {
                    x ^= row.x;
                    z ^= row.z;
                    combo ^= row.combo;
                }
            }
            if x == 0 && z == 0 {
                // Row-dependent. A bare -I generator is the one way the group
                // can be handed -I directly.
                if combo == 0 && g.sign() == Some(Sign::Minus) {
                    return Err(Error::ContainsMinusI);
                }
                if reduce {
                    let replayed = product_of(&kept, combo, n);
                    if replayed.phase_exp() != g.phase_exp() {
                        return Err(Error::ContainsMinusI);
                    }
                    continue;
                }
                return Err(Error::DependentGenerators(i));
            }
            combo ^= 1u64 << kept.len();
            kept.push(*g);
            let row = EchelonRow {
                x,
                z,
                pivot: pivot_of(x, z),
                combo,
            };
            let pos = echelon
                .binary_search_by_key(&row.pivot, |r| r.pivot)
                .unwrap_err();
            echelon.insert(pos, row);
        }
        // Self-orthogonality under the symplectic form bounds the rank by n,
        // so this cannot fire after the commutation check; keep it as a
        // consistency assertion.
        debug_assert!(kept.len() <= n);
        Ok(StabilizerGroup {
            n,
            generators: kept,
            echelon,
            elements: OnceLock::new(),
            element_index: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of independent generators.
    pub fn m(&self) -> usize {
        self.generators.len()
    }

    /// Logical qubit count `n - m`.
    pub fn k(&self) -> usize {
        self.n - self.m()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Express a check-matrix row as a combination of generators, if possible.
    fn solve_row(&self, row: (u64, u64)) -> Option<u64> {
        let (mut x, mut z) = row;
        let mut combo = 0u64;
        for r in &self.echelon {
            if pivot_bit(x, z, r.pivot) {
                x ^= r.x;
                z ^= r.z;
                combo ^= r.combo;
            }
        }
        (x == 0 && z == 0).then_some(combo)
    }

    /// The group element with the given row, if any. O(m·n/word) echelon
    /// solve plus an O(m) sign replay; no element table required.
    pub fn element_with_row(&self, row: (u64, u64)) -> Option<PauliOperator> {
        let combo = self.solve_row(row)?;
        Some(product_of(&self.generators, combo, self.n))
    }

    /// Membership with sign, for real-phase operators.
    pub fn contains(&self, p: &PauliOperator) -> Result<MembershipAnswer> {
        if p.qubits() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: p.qubits(),
            });
        }
        if !p.has_real_phase() {
            return Err(Error::ImaginaryPhase);
        }
        let Some(element) = self.element_with_row(p.row()) else {
            return Ok(MembershipAnswer::ABSENT);
        };
        let status = if element.phase_exp() == p.phase_exp() {
            MembershipStatus::Exact
        } else {
            MembershipStatus::UpToSign
        };
        Ok(MembershipAnswer {
            status,
            sign: element.sign(),
        })
    }

    /// All `2^m` signed elements, identity first, in generator-subset counting
    /// order. Cached after the first call.
    pub fn elements(&self) -> Result<&[PauliOperator]> {
        if self.m() > MAX_ENUMERATION_GENERATORS {
            return Err(Error::GuardExceeded {
                what: "element enumeration generator count",
                limit: MAX_ENUMERATION_GENERATORS,
                requested: self.m(),
            });
        }
        Ok(self.elements.get_or_init(|| {
            (0u64..(1u64 << self.m()))
                .map(|mask| product_of(&self.generators, mask, self.n))
                .collect()
        }))
    }

    /// Row → phase index over the full element table.
    pub fn element_phase_index(&self) -> Result<&HashMap<(u64, u64), u8>> {
        let elements = self.elements()?;
        Ok(self
            .element_index
            .get_or_init(|| elements.iter().map(|e| (e.row(), e.phase_exp())).collect()))
    }

    /// True iff `p` commutes with every generator. `N(S)` equals the
    /// centralizer, so this is the normalizer test.
    pub fn in_normalizer(&self, p: &PauliOperator) -> Result<bool> {
        if p.qubits() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: p.qubits(),
            });
        }
        Ok(self.row_in_normalizer(p.row()))
    }

    pub(crate) fn row_in_normalizer(&self, row: (u64, u64)) -> bool {
        self.generators.iter().all(|g| rows_commute(g.row(), row))
    }

    /// Membership up to sign from the bare row, without phase bookkeeping.
    pub(crate) fn row_in_group(&self, row: (u64, u64)) -> bool {
        self.solve_row(row).is_some()
    }
}

/// Product of the selected generators in ascending index order. The fixed
/// order makes replayed signs deterministic.
fn product_of(generators: &[PauliOperator], combo: u64, n: usize) -> PauliOperator {
    let mut acc = PauliOperator::identity(n).expect("validated qubit count");
    let mut rest = combo;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        acc = acc
            .multiply(&generators[i])
            .expect("uniform qubit count within a group");
    }
    acc
}

fn pivot_bit(x: u64, z: u64, pivot: u32) -> bool {
    if pivot < 64 {
        (x >> pivot) & 1 == 1
    } else {
        (z >> (pivot - 64)) & 1 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(text: &str) -> PauliOperator {
        PauliOperator::parse(text).unwrap()
    }

    fn group(gens: &[&str]) -> StabilizerGroup {
        StabilizerGroup::from_strings(gens).unwrap()
    }

    pub(crate) const FIVE_QUBIT: [&str; 4] = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"];

    #[test]
    fn five_qubit_code_dimensions() {
        let g = group(&FIVE_QUBIT);
        assert_eq!((g.n(), g.m(), g.k()), (5, 4, 1));
    }

    #[test]
    fn build_rejects_bad_generator_sets() {
        assert_eq!(
            StabilizerGroup::from_strings(&["XI", "ZI"]).unwrap_err(),
            Error::NonCommuting(0, 1)
        );
        assert_eq!(
            StabilizerGroup::from_strings(&["XX", "-XX"]).unwrap_err(),
            Error::DependentGenerators(1)
        );
        assert_eq!(
            StabilizerGroup::from_strings(&["iXX"]).unwrap_err(),
            Error::BadPhase(0)
        );
        assert_eq!(
            StabilizerGroup::from_strings(&["-II"]).unwrap_err(),
            Error::ContainsMinusI
        );
        let empty: [&str; 0] = [];
        assert_eq!(
            StabilizerGroup::from_strings(&empty).unwrap_err(),
            Error::NoGenerators
        );
    }

    #[test]
    fn reduced_build_drops_exact_duplicates_only() {
        let g = StabilizerGroup::build_reduced(&[p("XX"), p("ZZ"), p("-YY")]).unwrap();
        // XX·ZZ = -YY, so the third generator is an exact signed product.
        assert_eq!(g.m(), 2);
        assert_eq!(
            StabilizerGroup::build_reduced(&[p("XX"), p("ZZ"), p("YY")]).unwrap_err(),
            Error::ContainsMinusI
        );
    }

    #[test]
    fn three_qubit_signed_group_enumerates_exactly() {
        let g = group(&["XXX", "YYI", "ZXZ"]);
        assert_eq!((g.m(), g.k()), (3, 0));
        let got: BTreeSet<String> = g
            .elements()
            .unwrap()
            .iter()
            .map(|e| e.serialize().unwrap())
            .collect();
        let want: BTreeSet<String> = ["III", "XXX", "YYI", "ZXZ", "-ZZX", "-YIY", "XZZ", "-IYY"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, want);
        assert_eq!(
            g.elements().unwrap()[0],
            PauliOperator::identity(3).unwrap()
        );
    }

    #[test]
    fn five_qubit_elements_all_positive() {
        let g = group(&FIVE_QUBIT);
        let elements = g.elements().unwrap();
        assert_eq!(elements.len(), 16);
        assert!(elements.iter().all(|e| e.sign() == Some(Sign::Plus)));
        let listed = [
            "XZZXI", "XYIYX", "ZIZYY", "ZYYZI", "IXZZX", "IZYYZ", "YXXYI", "YIYXX", "XIXZZ",
            "YYZIZ", "IYXXY", "ZZXIX", "ZXIXZ", "XXYIY", "YZIZY", "IIIII",
        ];
        let got: BTreeSet<String> = elements.iter().map(|e| e.serialize().unwrap()).collect();
        assert_eq!(got, listed.iter().map(|s| s.to_string()).collect());
    }

    #[test]
    fn membership_reports_exact_sign_and_absence() {
        let g24 = group(&["XZZ", "ZXZ"]);
        let ans = g24.contains(&p("YYI")).unwrap();
        assert_eq!(ans.status, MembershipStatus::Exact);
        assert_eq!(ans.sign, Some(Sign::Plus));

        let g28 = group(&["XXX", "YYI", "ZXZ"]);
        let ans = g28.contains(&p("ZZX")).unwrap();
        assert_eq!(ans.status, MembershipStatus::UpToSign);
        assert_eq!(ans.sign, Some(Sign::Minus));
        let ans = g28.contains(&p("-ZZX")).unwrap();
        assert_eq!(ans.status, MembershipStatus::Exact);
        assert_eq!(ans.sign, Some(Sign::Minus));

        let g513 = group(&FIVE_QUBIT);
        assert_eq!(
            g513.contains(&p("XIZIX")).unwrap(),
            MembershipAnswer::ABSENT
        );
        assert_eq!(g513.contains(&p("iXIZIX")), Err(Error::ImaginaryPhase));
    }

    #[test]
    fn membership_agrees_with_enumeration() {
        let g = group(&["XXX", "YYI", "ZXZ"]);
        let elements: Vec<PauliOperator> = g.elements().unwrap().to_vec();
        for e in &elements {
            assert_eq!(g.contains(e).unwrap().status, MembershipStatus::Exact);
        }
        // Exhaust all positive 3-qubit strings and cross-check.
        for bits in 0u64..64 {
            let x = bits & 7;
            let z = bits >> 3;
            let candidate = PauliOperator::from_parts(3, (x & z).count_ones() as u8, x, z).unwrap();
            let in_list = elements.contains(&candidate);
            assert_eq!(
                g.contains(&candidate).unwrap().status == MembershipStatus::Exact,
                in_list
            );
        }
    }

    #[test]
    fn enumeration_is_closed_and_minus_i_free() {
        let g = group(&["XXX", "YYI", "ZXZ"]);
        let table: Vec<PauliOperator> = g.elements().unwrap().to_vec();
        for a in &table {
            for b in &table {
                let ab = a.multiply(b).unwrap();
                assert!(table.contains(&ab));
            }
        }
        let mut rows = std::collections::HashMap::new();
        for e in &table {
            if let Some(prev) = rows.insert(e.row(), e.phase_exp()) {
                assert_eq!(prev, e.phase_exp(), "two signs for one row");
            }
        }
    }

    #[test]
    fn normalizer_test_is_generator_commutation() {
        let g = group(&FIVE_QUBIT);
        assert!(g.in_normalizer(&p("XIZIX")).unwrap());
        assert!(!g.in_normalizer(&p("XIIII")).unwrap());
        assert!(g.in_normalizer(&p("IIIII")).unwrap());
    }

    #[test]
    fn enumeration_guard_on_generator_count() {
        let n = 21;
        let gens: Vec<PauliOperator> = (0..n)
            .map(|i| PauliOperator::from_parts(n, 0, 0, 1 << i).unwrap())
            .collect();
        let g = StabilizerGroup::build(&gens).unwrap();
        assert_eq!(g.m(), 21);
        assert!(matches!(
            g.elements().unwrap_err(),
            Error::GuardExceeded { .. }
        ));
    }

    #[test]
    fn minimal_group_from_single_generator() {
        let g = group(&["ZI"]);
        let got: Vec<String> = g
            .elements()
            .unwrap()
            .iter()
            .map(|e| e.serialize().unwrap())
            .collect();
        assert_eq!(got, vec!["II".to_string(), "ZI".to_string()]);
    }
}
