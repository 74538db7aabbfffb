//! Machine-readable export of automorphism search results.

use serde::{Deserialize, Serialize};

use crate::aut::{AutomorphismResult, Witness};
use crate::error::{Error, Result};
use crate::pauli::Sign;
use crate::perm::Permutation;
use crate::twist::{LetterPerm, LocalCliffordTwist};

/// Structured result document. Permutations are rendered in cycle notation,
/// twists as per-slot letter permutation names; both parse back losslessly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutReport {
    pub code: String,
    pub qubits: usize,
    pub kind: String,
    pub order: u64,
    pub generators: Vec<String>,
    pub transitivity_degree: usize,
    pub cyclic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<WitnessReport>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessReport {
    None,
    /// One `+`/`-` per generator.
    Signs(String),
    /// Per-slot letter permutation names.
    Twist(Vec<String>),
}

impl AutReport {
    pub fn new(
        code: &str,
        qubits: usize,
        result: &AutomorphismResult,
        include_elements: bool,
    ) -> AutReport {
        let generators = result
            .generating_set()
            .iter()
            .map(|p| p.to_string())
            .collect();
        let (elements, witnesses) = if include_elements {
            (
                Some(result.elements.iter().map(|p| p.to_string()).collect()),
                Some(result.witnesses.iter().map(WitnessReport::from).collect()),
            )
        } else {
            (None, None)
        };
        AutReport {
            code: code.to_string(),
            qubits,
            kind: result.kind.name().to_string(),
            order: result.order,
            generators,
            transitivity_degree: result.transitivity_degree,
            cyclic: result.is_cyclic,
            elements,
            witnesses,
        }
    }

    pub fn parse_elements(&self) -> Result<Vec<Permutation>> {
        let Some(elements) = &self.elements else {
            return Ok(Vec::new());
        };
        elements
            .iter()
            .map(|text| Permutation::parse_cycles(text, self.qubits))
            .collect()
    }
}

impl From<&Witness> for WitnessReport {
    fn from(witness: &Witness) -> WitnessReport {
        match witness {
            Witness::None => WitnessReport::None,
            Witness::Signs(signs) => WitnessReport::Signs(
                signs
                    .iter()
                    .map(|s| match s {
                        Sign::Plus => '+',
                        Sign::Minus => '-',
                    })
                    .collect(),
            ),
            Witness::Twist(twist) => {
                WitnessReport::Twist(twist.slots().iter().map(|p| p.name().to_string()).collect())
            }
        }
    }
}

impl WitnessReport {
    pub fn to_witness(&self) -> Result<Witness> {
        match self {
            WitnessReport::None => Ok(Witness::None),
            WitnessReport::Signs(text) => text
                .chars()
                .map(|c| match c {
                    '+' => Ok(Sign::Plus),
                    '-' => Ok(Sign::Minus),
                    other => Err(Error::IllegalCharacter { ch: other, pos: 0 }),
                })
                .collect::<Result<Vec<_>>>()
                .map(Witness::Signs),
            WitnessReport::Twist(names) => names
                .iter()
                .map(|name| LetterPerm::parse(name))
                .collect::<Result<Vec<_>>>()
                .map(|slots| Witness::Twist(LocalCliffordTwist::from_slots(slots))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{compute_group, AutomorphismKind, SearchOptions};
    use crate::group::StabilizerGroup;

    #[test]
    fn json_round_trip() {
        let group = StabilizerGroup::from_strings(&["XXZZ", "YYXX"]).unwrap();
        for kind in [
            AutomorphismKind::Strong,
            AutomorphismKind::Weak,
            AutomorphismKind::Clifford,
        ] {
            let result = compute_group(&group, kind, &SearchOptions::default()).unwrap();
            let report = AutReport::new("422b", 4, &result, true);
            let json = serde_json::to_string(&report).unwrap();
            let back: AutReport = serde_json::from_str(&json).unwrap();
            assert_eq!(report, back);
            let parsed = back.parse_elements().unwrap();
            assert_eq!(parsed, result.elements);
            let witnesses: Vec<_> = back
                .witnesses
                .unwrap()
                .iter()
                .map(|w| w.to_witness().unwrap())
                .collect();
            assert_eq!(witnesses, result.witnesses);
        }
    }
}
