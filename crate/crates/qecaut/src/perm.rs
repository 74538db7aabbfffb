//! Permutations of qubit slots.
//!
//! Slots are 1-based in cycle notation (matching the usual group-theory
//! convention) and 0-based in the `images` array. The action on operators
//! moves the letter in slot `j` to slot `σ(j)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from a 0-based image array; `images[i]` is σ(i).
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// Parse cycle notation such as `(1 2 3)(4 5)`: whitespace-separated
    /// 1-based points inside parentheses; juxtaposed cycles compose with the
    /// rightmost applied first; fixed points may be omitted.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::BadCycleNotation("empty string".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::BadCycleNotation(format!("expected '(' at {rest:?}")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::BadCycleNotation("unclosed cycle".into()));
            };
            let body = &stripped[..close];
            let mut cycle = Vec::new();
            for token in body.split_whitespace() {
                let point: usize = token
                    .parse()
                    .map_err(|_| Error::BadCycleNotation(format!("bad point {token:?}")))?;
                if point == 0 || point > n {
                    return Err(Error::PointOutOfRange(point, n));
                }
                let point = point - 1;
                if cycle.contains(&point) {
                    return Err(Error::BadCycleNotation(format!(
                        "repeated point {} in cycle",
                        point + 1
                    )));
                }
                cycle.push(point);
            }
            if cycle.is_empty() {
                return Err(Error::BadCycleNotation("empty cycle".into()));
            }
            cycles.push(cycle);
            rest = stripped[close + 1..].trim_start();
        }
        // Rightmost cycle acts first.
        let mut result = Permutation::identity(n);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..n).collect();
            for w in 0..cycle.len() {
                images[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
            let step = Permutation { images };
            result = step.compose(&result)?;
        }
        Ok(result)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// `self ∘ other`: apply `other` first, so that
    /// `compose(σ, τ).apply(p) == σ.apply(τ.apply(p))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                actual: other.n(),
            });
        }
        Ok(Permutation {
            images: (0..self.n())
                .map(|i| self.images[other.images[i]])
                .collect(),
        })
    }

    /// Permute tensor factors: slot `j`'s letter moves to slot `σ(j)`. The
    /// global phase is unchanged.
    pub fn apply(&self, p: &PauliOperator) -> Result<PauliOperator> {
        if self.n() != p.qubits() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                actual: p.qubits(),
            });
        }
        let mut x = 0u64;
        let mut z = 0u64;
        for (j, &v) in self.images.iter().enumerate() {
            x |= ((p.x_bits() >> j) & 1) << v;
            z |= ((p.z_bits() >> j) & 1) << v;
        }
        PauliOperator::from_parts(p.qubits(), p.phase_exp(), x, z)
    }

    /// Image of a bit mask of slots.
    pub fn apply_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for (j, &v) in self.images.iter().enumerate() {
            out |= ((mask >> j) & 1) << v;
        }
        out
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that
    /// point; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn is_n_cycle(&self) -> bool {
        let cycles = self.cycles();
        cycles.len() == 1 && cycles[0].len() == self.n()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "(1)");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (idx, point) in cycle.iter().enumerate() {
                if idx > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", point + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
