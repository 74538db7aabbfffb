//! Shared test oracles, independent of the pruned search path.

#![allow(dead_code)]

use std::collections::HashSet;

use qecaut::pauli::{PauliOperator, Sign};
use qecaut::perm::Permutation;
use qecaut::twist::{LetterPerm, LocalCliffordTwist};

/// All n! permutations in lexicographic image order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, images: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if images.len() == n {
            out.push(Permutation::from_images(images.clone()).unwrap());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                images.push(v);
                rec(n, images, used, out);
                images.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut images, &mut used, &mut out);
    out
}

/// Full element table generated by repeated multiplication from the
/// generators, with signed and letters-only index sets. Built independently
/// of the echelon machinery.
pub struct NaiveGroup {
    pub n: usize,
    pub generators: Vec<PauliOperator>,
    pub elements: Vec<PauliOperator>,
    signed: HashSet<(u64, u64, u8)>,
    rows: HashSet<(u64, u64)>,
}

impl NaiveGroup {
    pub fn from_strings(gens: &[&str]) -> NaiveGroup {
        let generators: Vec<PauliOperator> = gens
            .iter()
            .map(|s| PauliOperator::parse(s).unwrap())
            .collect();
        let n = generators[0].qubits();
        let mut elements = vec![PauliOperator::identity(n).unwrap()];
        let mut signed: HashSet<(u64, u64, u8)> = elements
            .iter()
            .map(|e| (e.x_bits(), e.z_bits(), e.phase_exp()))
            .collect();
        let mut frontier = elements.clone();
        while let Some(current) = frontier.pop() {
            for g in &generators {
                let next = current.multiply(g).unwrap();
                if signed.insert((next.x_bits(), next.z_bits(), next.phase_exp())) {
                    elements.push(next);
                    frontier.push(next);
                }
            }
        }
        let rows = elements.iter().map(|e| (e.x_bits(), e.z_bits())).collect();
        NaiveGroup {
            n,
            generators,
            elements,
            signed,
            rows,
        }
    }

    pub fn contains_signed(&self, p: &PauliOperator) -> bool {
        self.signed
            .contains(&(p.x_bits(), p.z_bits(), p.phase_exp()))
    }

    pub fn contains_row(&self, p: &PauliOperator) -> bool {
        self.rows.contains(&(p.x_bits(), p.z_bits()))
    }

    pub fn is_strong(&self, sigma: &Permutation) -> bool {
        self.generators
            .iter()
            .all(|g| self.contains_signed(&sigma.apply(g).unwrap()))
    }

    pub fn is_weak(&self, sigma: &Permutation) -> bool {
        self.generators
            .iter()
            .all(|g| self.contains_row(&sigma.apply(g).unwrap()))
    }

    /// Exhaustive scan over all 6^n twists.
    pub fn is_clifford(&self, sigma: &Permutation) -> bool {
        let permuted: Vec<PauliOperator> = self
            .generators
            .iter()
            .map(|g| sigma.apply(g).unwrap())
            .collect();
        let mut odometer = vec![0usize; self.n];
        loop {
            let twist = LocalCliffordTwist::from_slots(
                odometer.iter().map(|&i| LetterPerm::ALL[i]).collect(),
            );
            if permuted
                .iter()
                .all(|g| self.contains_row(&twist.apply(g).unwrap()))
            {
                return true;
            }
            let mut slot = 0;
            loop {
                if slot == self.n {
                    return false;
                }
                odometer[slot] += 1;
                if odometer[slot] < 6 {
                    break;
                }
                odometer[slot] = 0;
                slot += 1;
            }
        }
    }

    pub fn strong_group(&self) -> Vec<Permutation> {
        all_permutations(self.n)
            .into_iter()
            .filter(|p| self.is_strong(p))
            .collect()
    }

    pub fn weak_group(&self) -> Vec<Permutation> {
        all_permutations(self.n)
            .into_iter()
            .filter(|p| self.is_weak(p))
            .collect()
    }

    pub fn clifford_group(&self) -> Vec<Permutation> {
        all_permutations(self.n)
            .into_iter()
            .filter(|p| self.is_clifford(p))
            .collect()
    }
}

/// Dense complex-integer matrices for the 2^n-dimensional lift.
pub type Matrix = Vec<Vec<(i64, i64)>>;

fn mat_identity(dim: usize) -> Matrix {
    (0..dim)
        .map(|r| (0..dim).map(|c| ((r == c) as i64, 0)).collect())
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let dim = a.len();
    let mut out = vec![vec![(0i64, 0i64); dim]; dim];
    for r in 0..dim {
        for k in 0..dim {
            let (are, aim) = a[r][k];
            if are == 0 && aim == 0 {
                continue;
            }
            for c in 0..dim {
                let (bre, bim) = b[k][c];
                out[r][c].0 += are * bre - aim * bim;
                out[r][c].1 += are * bim + aim * bre;
            }
        }
    }
    out
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![(0i64, 0i64); ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            let (are, aim) = a[i][j];
            for k in 0..rb {
                for l in 0..rb {
                    let (bre, bim) = b[k][l];
                    out[i * rb + k][j * rb + l] = (are * bre - aim * bim, are * bim + aim * bre);
                }
            }
        }
    }
    out
}

/// Lift `i^phase ⊗_j X^{a_j} Z^{b_j}` to its matrix. Tensor slot 1 is the
/// leftmost Kronecker factor.
pub fn lift(p: &PauliOperator) -> Matrix {
    let x_mat: Matrix = vec![vec![(0, 0), (1, 0)], vec![(1, 0), (0, 0)]];
    let z_mat: Matrix = vec![vec![(1, 0), (0, 0)], vec![(0, 0), (-1, 0)]];
    let mut out = mat_identity(1);
    for j in 0..p.qubits() {
        let mut slot = mat_identity(2);
        if (p.x_bits() >> j) & 1 == 1 {
            slot = mat_mul(&slot, &x_mat);
        }
        if (p.z_bits() >> j) & 1 == 1 {
            slot = mat_mul(&slot, &z_mat);
        }
        out = kron(&out, &slot);
    }
    let (fre, fim) = match p.phase_exp() {
        0 => (1, 0),
        1 => (0, 1),
        2 => (-1, 0),
        _ => (0, -1),
    };
    for row in &mut out {
        for entry in row.iter_mut() {
            *entry = (entry.0 * fre - entry.1 * fim, entry.0 * fim + entry.1 * fre);
        }
    }
    out
}

/// All positive-phase letter strings on n qubits, in row order.
pub fn all_letter_strings(n: usize) -> Vec<PauliOperator> {
    let mut out = Vec::with_capacity(1 << (2 * n));
    for x in 0u64..(1 << n) {
        for z in 0u64..(1 << n) {
            let phase = ((x & z).count_ones() & 3) as u8;
            out.push(PauliOperator::from_parts(n, phase, x, z).unwrap());
        }
    }
    out
}

/// Every phased Pauli on n qubits (letters times i^k).
pub fn all_phased_paulis(n: usize) -> Vec<PauliOperator> {
    let mut out = Vec::new();
    for base in all_letter_strings(n) {
        for extra in 0..4u8 {
            out.push(
                PauliOperator::from_parts(
                    n,
                    (base.phase_exp() + extra) & 3,
                    base.x_bits(),
                    base.z_bits(),
                )
                .unwrap(),
            );
        }
    }
    out
}

pub fn sign_chars(signs: &[Sign]) -> String {
    signs
        .iter()
        .map(|s| match s {
            Sign::Plus => '+',
            Sign::Minus => '-',
        })
        .collect()
}
