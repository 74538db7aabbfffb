//! Code parameters, codespace bases, and error-set correctability.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::StabilizerGroup;
use crate::pauli::{Letter, PauliOperator};

/// `[[n, k, d]]` with a flag for the zero-qubit distance convention.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// True iff `k = 0`, where `d` is the minimal weight of a non-identity
    /// element of `S` rather than of `N(S) - S`.
    pub degenerate_convention: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub params: CodeParameters,
    /// Minimal-weight witness: an element of `N(S) - S` for `k ≥ 1`, the
    /// signed group element itself for `k = 0`. Deterministic: the
    /// enumeration visits position subsets in lexicographic order with
    /// letters ordered `X < Y < Z`.
    pub witness: PauliOperator,
}

/// Weight-ascending scan for the code distance.
pub fn distance(group: &StabilizerGroup) -> Result<DistanceResult> {
    let n = group.n();
    let degenerate = group.k() == 0;
    for w in 1..=n {
        let subsets = position_subsets(n, w);
        let hit = subsets
            .par_iter()
            .enumerate()
            .filter_map(|(rank, positions)| {
                first_hit_in_subset(group, positions, degenerate).map(|op| (rank, op))
            })
            .min_by_key(|(rank, _)| *rank);
        if let Some((_, op)) = hit {
            let witness = if degenerate {
                group
                    .element_with_row(op.row())
                    .expect("hit row solved against the group")
            } else {
                op
            };
            return Ok(DistanceResult {
                params: CodeParameters {
                    n,
                    k: group.k(),
                    d: w,
                    degenerate_convention: degenerate,
                },
                witness,
            });
        }
    }
    // k ≥ 1 guarantees N(S) - S is nonempty by dimension count, and k = 0
    // means S itself has 2^n > 1 elements, so the scan always terminates
    // inside the loop.
    Err(Error::InternalInconsistency(
        "weight scan exhausted without a distance witness",
    ))
}

/// Minimal-letter hit within one position subset, or None.
fn first_hit_in_subset(
    group: &StabilizerGroup,
    positions: &[usize],
    degenerate: bool,
) -> Option<PauliOperator> {
    let w = positions.len();
    let mut letters = vec![0u8; w];
    loop {
        let mut x = 0u64;
        let mut z = 0u64;
        for (t, &pos) in positions.iter().enumerate() {
            let (xb, zb) = Letter::NON_IDENTITY[letters[t] as usize].bits();
            x |= (xb as u64) << pos;
            z |= (zb as u64) << pos;
        }
        let row = (x, z);
        let hit = if degenerate {
            group.row_in_group(row)
        } else {
            group.row_in_normalizer(row) && !group.row_in_group(row)
        };
        if hit {
            let phase = ((x & z).count_ones() & 3) as u8;
            return Some(PauliOperator::from_parts(group.n(), phase, x, z).expect("n validated"));
        }
        // Odometer over {X, Y, Z}^w, rightmost position fastest.
        let mut t = w;
        loop {
            if t == 0 {
                return None;
            }
            t -= 1;
            if letters[t] < 2 {
                letters[t] += 1;
                letters[t + 1..].fill(0);
                break;
            }
        }
    }
}

/// All w-element subsets of 0..n in lexicographic order.
fn position_subsets(n: usize, w: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(w);
    fn rec(start: usize, n: usize, w: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == w {
            out.push(current.clone());
            return;
        }
        let remaining = w - current.len();
        for pos in start..=(n - remaining) {
            current.push(pos);
            rec(pos + 1, n, w, current, out);
            current.pop();
        }
    }
    rec(0, n, w, &mut current, &mut out);
    out
}

/// Exact Gaussian integer, for codespace coefficients. Elements with an odd
/// number of Y factors contribute imaginary units, so plain integers are not
/// enough in general.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };

    pub fn i_power(k: u8) -> GaussInt {
        match k & 3 {
            0 => GaussInt { re: 1, im: 0 },
            1 => GaussInt { re: 0, im: 1 },
            2 => GaussInt { re: -1, im: 0 },
            _ => GaussInt { re: 0, im: -1 },
        }
    }

    pub fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn plus(self, other: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re + other.re,
            im: self.im + other.im,
        }
    }

    pub fn negate(self) -> GaussInt {
        GaussInt {
            re: -self.re,
            im: -self.im,
        }
    }

    pub fn times(self, other: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re * other.re - self.im * other.im,
            im: self.re * other.im + self.im * other.re,
        }
    }
}

impl std::fmt::Display for GaussInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im > 0 => write!(f, "({re}+{im}i)"),
            (re, im) => write!(f, "({re}{im}i)"),
        }
    }
}

/// One unnormalized codespace vector: nonzero coefficients over computational
/// basis states, sorted by state index. Bit `j` of a state index is the value
/// of qubit slot `j + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub terms: Vec<(u64, GaussInt)>,
}

impl BasisVector {
    /// Render a state index as a bit string, slot 1 first.
    pub fn label(n: usize, state: u64) -> String {
        (0..n)
            .map(|j| if (state >> j) & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodespaceBasis {
    pub n: usize,
    pub vectors: Vec<BasisVector>,
}

/// Memory guard: the projector is applied one basis vector at a time, never
/// materialized, but each image still needs a 2^n accumulator.
pub const MAX_BASIS_QUBITS: usize = 14;

/// Span of the codespace via the group-average projector `Σ_{s∈S} s`
/// applied to computational basis states, normalization dropped.
///
/// Images of basis states in the same X-part coset are parallel and images
/// across cosets have disjoint support, so collecting nonzero images over
/// unseen states yields exactly `2^k` independent vectors.
pub fn codespace_basis(group: &StabilizerGroup) -> Result<CodespaceBasis> {
    let n = group.n();
    if n > MAX_BASIS_QUBITS {
        return Err(Error::GuardExceeded {
            what: "codespace qubit count",
            limit: MAX_BASIS_QUBITS,
            requested: n,
        });
    }
    let elements = group.elements()?;
    let dim = 1u64 << n;
    let want = 1usize << group.k();
    let mut seen = vec![false; dim as usize];
    let mut accumulator = vec![GaussInt::ZERO; dim as usize];
    let mut vectors = Vec::with_capacity(want);
    for e in 0..dim {
        if vectors.len() == want {
            break;
        }
        if seen[e as usize] {
            continue;
        }
        let mut touched = Vec::with_capacity(elements.len());
        for s in elements {
            // s|e> = i^phase (-1)^{b·e} |e xor a>
            let target = e ^ s.x_bits();
            let mut coeff = GaussInt::i_power(s.phase_exp());
            if (s.z_bits() & e).count_ones() & 1 == 1 {
                coeff = coeff.negate();
            }
            if accumulator[target as usize].is_zero() {
                touched.push(target);
            }
            accumulator[target as usize] = accumulator[target as usize].plus(coeff);
        }
        let mut terms: Vec<(u64, GaussInt)> = Vec::new();
        for &t in &touched {
            let c = accumulator[t as usize];
            accumulator[t as usize] = GaussInt::ZERO;
            if !c.is_zero() {
                terms.push((t, c));
            }
        }
        if terms.is_empty() {
            continue;
        }
        // Bit-string label order (slot 1 first), matching how state lists are
        // conventionally written.
        terms.sort_by_key(|&(state, _)| state.reverse_bits() >> (64 - n));
        for &(state, _) in &terms {
            seen[state as usize] = true;
        }
        vectors.push(BasisVector { terms });
    }
    debug_assert_eq!(vectors.len(), want);
    Ok(CodespaceBasis { n, vectors })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    /// The offending `E_i* E_j`, which lies in `N(S) - S`.
    pub product: PauliOperator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorrectabilityReport {
    pub correctable: bool,
    pub violation: Option<Violation>,
}

/// Stabilizer error-correction criterion: the set is correctable iff no
/// `E_i* E_j` lands in `N(S) - S`. The first violating pair in input order is
/// reported.
pub fn check_correctable(
    group: &StabilizerGroup,
    errors: &[PauliOperator],
) -> Result<CorrectabilityReport> {
    for e in errors {
        if e.qubits() != group.n() {
            return Err(Error::LengthMismatch {
                expected: group.n(),
                actual: e.qubits(),
            });
        }
    }
    for (i, ei) in errors.iter().enumerate() {
        let adj = ei.adjoint();
        for (j, ej) in errors.iter().enumerate() {
            let product = adj.multiply(ej)?;
            let row = product.row();
            if group.row_in_normalizer(row) && !group.row_in_group(row) {
                return Ok(CorrectabilityReport {
                    correctable: false,
                    violation: Some(Violation { i, j, product }),
                });
            }
        }
    }
    Ok(CorrectabilityReport {
        correctable: true,
        violation: None,
    })
}

/// The 3n weight-one errors in slot-major, X < Y < Z order.
pub fn single_qubit_errors(n: usize) -> Vec<PauliOperator> {
    let mut out = Vec::with_capacity(3 * n);
    for pos in 0..n {
        for letter in Letter::NON_IDENTITY {
            let (x, z) = letter.bits();
            let phase = if letter == Letter::Y { 1 } else { 0 };
            out.push(
                PauliOperator::from_parts(n, phase, (x as u64) << pos, (z as u64) << pos)
                    .expect("n validated"),
            );
        }
    }
    out
}
