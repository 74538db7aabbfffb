//! Strong, weak, and Clifford-twisted automorphism groups.
//!
//! Single-permutation membership tests produce checkable witnesses: the
//! per-generator sign vector for weak membership, the Pauli element γ with
//! `σ(C) = γ·C`, and the local Clifford twist for twisted membership. Full
//! groups are computed exactly by a depth-first scan over slot permutations,
//! pruned by per-generator candidate sets: an image assignment survives only
//! while every generator can still land on some element of the group
//! (letter-for-letter for strong/weak, I-pattern-compatible for twisted).

use std::collections::HashMap;
use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::{MembershipStatus, StabilizerGroup};
use crate::pauli::{PauliOperator, Sign};
use crate::perm::Permutation;
use crate::twist::{LetterPerm, LocalCliffordTwist};

/// Search ceiling: full enumeration over S_n is budgeted up to n = 12.
pub const MAX_SEARCH_QUBITS: usize = 12;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum AutomorphismKind {
    Strong,
    Weak,
    Clifford,
}

impl AutomorphismKind {
    pub fn name(self) -> &'static str {
        match self {
            AutomorphismKind::Strong => "strong",
            AutomorphismKind::Weak => "weak",
            AutomorphismKind::Clifford => "clifford",
        }
    }
}

impl std::fmt::Display for AutomorphismKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Per-element evidence attached to a computed group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Strong membership needs no extra data.
    None,
    /// Weak: sign of each permuted generator relative to the group
    /// (`σ(g_i) = ε_i · s` for some `s ∈ S`).
    Signs(Vec<Sign>),
    /// Clifford-twisted: lexicographically least twist pulling every permuted
    /// generator back into `S ∪ -S`.
    Twist(LocalCliffordTwist),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismResult {
    pub kind: AutomorphismKind,
    pub order: u64,
    /// Complete element list, sorted lexicographically by image array.
    pub elements: Vec<Permutation>,
    /// Aligned with `elements`.
    pub witnesses: Vec<Witness>,
    pub transitivity_degree: usize,
    /// True iff the group contains an n-cycle.
    pub is_cyclic: bool,
}

impl AutomorphismResult {
    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.elements.binary_search(sigma).is_ok()
    }

    /// Greedy generating set: scan elements in lex order, keeping those not
    /// yet generated.
    pub fn generating_set(&self) -> Vec<Permutation> {
        let n = match self.elements.first() {
            Some(e) => e.n(),
            None => return Vec::new(),
        };
        let mut generators: Vec<Permutation> = Vec::new();
        let mut closure: HashSet<Vec<usize>> = HashSet::new();
        closure.insert(Permutation::identity(n).images().to_vec());
        for element in &self.elements {
            if closure.contains(element.images()) {
                continue;
            }
            generators.push(element.clone());
            closure = close_under_composition(&generators, n);
            if closure.len() as u64 == self.order {
                break;
            }
        }
        generators
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Worker count for the permutation scan; `None` uses the ambient pool.
    pub threads: Option<usize>,
    /// Print periodic scanned/pruned counts to stderr.
    pub progress: bool,
}

// ---------------------------------------------------------------------------
// Single-permutation tests
// ---------------------------------------------------------------------------

/// `σ(g_i) ∈ S`, sign included, for every generator.
pub fn is_strong(group: &StabilizerGroup, sigma: &Permutation) -> Result<bool> {
    check_n(group, sigma)?;
    for g in group.generators() {
        let image = sigma.apply(g)?;
        if group.contains(&image)?.status != MembershipStatus::Exact {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-generator signs when `σ(g_i)` or `-σ(g_i)` lies in `S` for every
/// generator; `None` otherwise.
pub fn weak_signs(group: &StabilizerGroup, sigma: &Permutation) -> Result<Option<Vec<Sign>>> {
    check_n(group, sigma)?;
    let mut signs = Vec::with_capacity(group.m());
    for g in group.generators() {
        let image = sigma.apply(g)?;
        match group.contains(&image)?.status {
            MembershipStatus::Exact => signs.push(Sign::Plus),
            MembershipStatus::UpToSign => signs.push(Sign::Minus),
            MembershipStatus::Absent => return Ok(None),
        }
    }
    Ok(Some(signs))
}

pub fn is_weak(group: &StabilizerGroup, sigma: &Permutation) -> Result<bool> {
    Ok(weak_signs(group, sigma)?.is_some())
}

/// Construct γ with `γ S γ⁻¹ = σ(S)`, hence `σ(C) = γ·C`.
///
/// Following the existence proof: γ must commute with the generators that
/// σ(S) contains with the same sign and anticommute with those it contains
/// negated, which is a linear system under the symplectic form. The
/// constructed γ is verified element-by-element before it is returned.
pub fn weak_twist_witness(group: &StabilizerGroup, sigma: &Permutation) -> Result<PauliOperator> {
    check_n(group, sigma)?;
    let n = group.n();
    let permuted: Vec<PauliOperator> = group
        .generators()
        .iter()
        .map(|g| sigma.apply(g))
        .collect::<Result<_>>()?;
    let target = StabilizerGroup::build(&permuted)
        .map_err(|_| Error::InternalInconsistency("permuted generators failed to rebuild"))?;

    // Right-hand side: anticommute exactly where g_i enters σ(S) negated.
    let mut rows: Vec<(u64, u64, bool)> = Vec::with_capacity(group.m());
    for g in group.generators() {
        let rhs = match target.contains(g)?.status {
            MembershipStatus::Exact => false,
            MembershipStatus::UpToSign => true,
            MembershipStatus::Absent => return Err(Error::NotWeak),
        };
        // <(a|b), (c|d)> = a·d + b·c, so the coefficient row on (c|d) is (b|a).
        rows.push((g.z_bits(), g.x_bits(), rhs));
    }
    let (x, z) = solve_gf2(&mut rows, n)
        .ok_or(Error::InternalInconsistency("symplectic system unsolvable"))?;
    let gamma = PauliOperator::from_parts(n, ((x & z).count_ones() & 3) as u8, x, z)?;

    for s in group.elements()? {
        let conjugated = s.conjugate_by(&gamma)?;
        if target.contains(&conjugated)?.status != MembershipStatus::Exact {
            return Err(Error::InternalInconsistency(
                "constructed gamma does not conjugate S onto sigma(S)",
            ));
        }
    }
    Ok(gamma)
}

/// Gaussian elimination over GF(2) on 2n-bit coefficient rows `(c|d)` with a
/// boolean right-hand side. Free variables are set to zero.
fn solve_gf2(rows: &mut [(u64, u64, bool)], n: usize) -> Option<(u64, u64)> {
    let mut pivots: Vec<(usize, u32)> = Vec::new(); // (row index, pivot bit)
    let total_bits = 2 * n as u32;
    let mut next_row = 0;
    for bit in 0..total_bits {
        let Some(r) = (next_row..rows.len()).find(|&r| row_bit(rows[r], bit)) else {
            continue;
        };
        rows.swap(next_row, r);
        for other in 0..rows.len() {
            if other != next_row && row_bit(rows[other], bit) {
                rows[other].0 ^= rows[next_row].0;
                rows[other].1 ^= rows[next_row].1;
                rows[other].2 ^= rows[next_row].2;
            }
        }
        pivots.push((next_row, bit));
        next_row += 1;
    }
    if rows[next_row..].iter().any(|&(_, _, rhs)| rhs) {
        return None;
    }
    let mut x = 0u64;
    let mut z = 0u64;
    for &(row, bit) in &pivots {
        if rows[row].2 {
            if bit < 64 {
                x |= 1 << bit;
            } else {
                z |= 1 << (bit - 64);
            }
        }
    }
    Some((x, z))
}

fn row_bit(row: (u64, u64, bool), bit: u32) -> bool {
    if bit < 64 {
        (row.0 >> bit) & 1 == 1
    } else {
        (row.1 >> (bit - 64)) & 1 == 1
    }
}

/// Does some twist pull every permuted generator back into `S ∪ -S`?
pub fn is_clifford(group: &StabilizerGroup, sigma: &Permutation) -> Result<bool> {
    Ok(twist_for_permutation(group, sigma, false)?.is_some())
}

/// Lexicographically least witnessing twist (slot-major, letter permutations
/// ordered `id < (XY) < (XZ) < (YZ) < (XYZ) < (XZY)`), or `None`.
pub fn find_clifford_twist(
    group: &StabilizerGroup,
    sigma: &Permutation,
) -> Result<Option<LocalCliffordTwist>> {
    twist_for_permutation(group, sigma, true)
}

fn twist_for_permutation(
    group: &StabilizerGroup,
    sigma: &Permutation,
    want_least: bool,
) -> Result<Option<LocalCliffordTwist>> {
    check_n(group, sigma)?;
    let n = group.n();
    let elements = group.elements()?;
    let mut by_imask: HashMap<u64, Vec<u32>> = HashMap::new();
    for (idx, e) in elements.iter().enumerate() {
        by_imask
            .entry(e.identity_mask())
            .or_default()
            .push(idx as u32);
    }
    let elem_letters = letters_table(elements, n);

    let mut problem = TwistProblem::new(n, &elem_letters);
    for g in group.generators() {
        let image = sigma.apply(g)?;
        let Some(targets) = by_imask.get(&image.identity_mask()) else {
            // Twists fix I positions, so no target can exist.
            return Ok(None);
        };
        problem.push_generator(&image, targets);
    }
    Ok(problem.solve(want_least))
}

fn check_n(group: &StabilizerGroup, sigma: &Permutation) -> Result<()> {
    if sigma.n() != group.n() {
        return Err(Error::LengthMismatch {
            expected: group.n(),
            actual: sigma.n(),
        });
    }
    Ok(())
}

/// Flattened per-element letter codes (0 = I, 1 = X, 2 = Z, 3 = Y).
fn letters_table(elements: &[PauliOperator], n: usize) -> Vec<u8> {
    let mut table = vec![0u8; elements.len() * n];
    for (idx, e) in elements.iter().enumerate() {
        for j in 0..n {
            table[idx * n + j] = letter_code(e, j);
        }
    }
    table
}

fn letter_code(op: &PauliOperator, slot: usize) -> u8 {
    let x = (op.x_bits() >> slot) & 1;
    let z = (op.z_bits() >> slot) & 1;
    (x | (z << 1)) as u8 // I=0, X=1, Z=2, Y=3
}

/// Letter images of (X, Z, Y) in the local code space above, per LetterPerm.
fn letter_perm_code_table(perm: LetterPerm) -> [u8; 4] {
    let mut table = [0u8; 4];
    for code in 1..4u8 {
        let letter = code_to_letter(code);
        table[code as usize] = letter_to_code(perm.apply(letter));
    }
    table
}

fn code_to_letter(code: u8) -> crate::pauli::Letter {
    match code {
        1 => crate::pauli::Letter::X,
        2 => crate::pauli::Letter::Z,
        3 => crate::pauli::Letter::Y,
        _ => crate::pauli::Letter::I,
    }
}

fn letter_to_code(letter: crate::pauli::Letter) -> u8 {
    match letter {
        crate::pauli::Letter::I => 0,
        crate::pauli::Letter::X => 1,
        crate::pauli::Letter::Z => 2,
        crate::pauli::Letter::Y => 3,
    }
}

/// Backtracking search for a twist mapping each permuted generator onto one
/// of its candidate targets, maintaining per-slot partial injections on
/// {X, Y, Z}.
struct TwistProblem<'a> {
    n: usize,
    elem_letters: &'a [u8],
    /// Per generator: letters of the permuted generator, and candidate target
    /// element indices (same I-pattern).
    gens: Vec<(Vec<u8>, Vec<u32>)>,
}

struct TwistState {
    /// forward[slot * 4 + code] = image code or 0 for unset (I never queried).
    forward: Vec<u8>,
    reverse: Vec<u8>,
    trail: Vec<(usize, u8, u8)>,
    best: Option<LocalCliffordTwist>,
    want_least: bool,
}

impl<'a> TwistProblem<'a> {
    fn new(n: usize, elem_letters: &'a [u8]) -> TwistProblem<'a> {
        TwistProblem {
            n,
            elem_letters,
            gens: Vec::new(),
        }
    }

    fn push_generator(&mut self, image: &PauliOperator, targets: &[u32]) {
        let letters: Vec<u8> = (0..self.n).map(|j| letter_code(image, j)).collect();
        self.gens.push((letters, targets.to_vec()));
    }

    fn solve(&mut self, want_least: bool) -> Option<LocalCliffordTwist> {
        // Most-constrained generator first.
        self.gens.sort_by_key(|(_, targets)| targets.len());
        let mut state = TwistState {
            forward: vec![0; self.n * 4],
            reverse: vec![0; self.n * 4],
            trail: Vec::new(),
            best: None,
            want_least,
        };
        self.assign(0, &mut state);
        state.best
    }

    /// Returns true when the search may stop (non-least mode, first hit).
    fn assign(&self, depth: usize, state: &mut TwistState) -> bool {
        if depth == self.gens.len() {
            let twist = self.minimal_completion(state);
            match &state.best {
                Some(best) if *best <= twist => {}
                _ => state.best = Some(twist),
            }
            return !state.want_least;
        }
        let (letters, targets) = &self.gens[depth];
        for &target in targets {
            let target_letters = &self.elem_letters[target as usize * self.n..][..self.n];
            let mark = state.trail.len();
            let mut ok = true;
            for slot in 0..self.n {
                let from = letters[slot];
                if from == 0 {
                    continue;
                }
                let to = target_letters[slot];
                debug_assert_ne!(to, 0, "I-patterns were matched up front");
                let fwd = &mut state.forward[slot * 4 + from as usize];
                if *fwd == to {
                    continue;
                }
                if *fwd != 0 || state.reverse[slot * 4 + to as usize] != 0 {
                    ok = false;
                    break;
                }
                *fwd = to;
                state.reverse[slot * 4 + to as usize] = from;
                state.trail.push((slot, from, to));
            }
            if ok && self.assign(depth + 1, state) {
                return true;
            }
            while state.trail.len() > mark {
                let (slot, from, to) = state.trail.pop().unwrap();
                state.forward[slot * 4 + from as usize] = 0;
                state.reverse[slot * 4 + to as usize] = 0;
            }
        }
        false
    }

    /// Slot-wise least completion of the current partial letter maps.
    fn minimal_completion(&self, state: &TwistState) -> LocalCliffordTwist {
        let mut slots = Vec::with_capacity(self.n);
        'slot: for slot in 0..self.n {
            for perm in LetterPerm::ALL {
                let table = letter_perm_code_table(perm);
                let consistent = (1..4u8).all(|code| {
                    let image = state.forward[slot * 4 + code as usize];
                    image == 0 || image == table[code as usize]
                });
                if consistent {
                    slots.push(perm);
                    continue 'slot;
                }
            }
            unreachable!("partial injections on three letters always complete");
        }
        LocalCliffordTwist::from_slots(slots)
    }
}

// ---------------------------------------------------------------------------
// Full-group search
// ---------------------------------------------------------------------------

#[derive(Copy, Clone, PartialEq, Eq)]
enum ScanMode {
    LetterExact,
    IPattern,
}

/// Precomputed per-position element filters.
///
/// Constraint rows are the generators plus, in I-pattern mode, probe elements
/// drawn from I-count classes that realize few of the possible I-patterns
/// (for the ten-qubit code these are the weight-4 elements, whose I-patterns
/// form the block design the twisted group preserves). Probe conditions are
/// necessary for membership, so they only prune, never drop members.
struct SearchIndex {
    n: usize,
    rows: usize,
    words: usize,
    /// letter_masks[code][pos]: bitset of elements with that letter at pos.
    letter_masks: [Vec<u64>; 4],
    not_i_masks: Vec<u64>,
    /// Per-row initial candidate sets.
    init: Vec<u64>,
    row_letters: Vec<u8>,
    elem_letters: Vec<u8>,
    imask_index: HashMap<u64, Vec<u32>>,
}

/// Cap on extra probe rows; each costs one bitset intersection per node.
const MAX_PROBE_ROWS: usize = 64;

impl SearchIndex {
    fn build(group: &StabilizerGroup, mode: ScanMode) -> Result<SearchIndex> {
        let n = group.n();
        let elements = group.elements()?;
        let count = elements.len();
        let words = count.div_ceil(64);
        let elem_letters = letters_table(elements, n);
        let mut letter_masks: [Vec<u64>; 4] = std::array::from_fn(|_| vec![0u64; n * words]);
        for idx in 0..count {
            for pos in 0..n {
                let code = elem_letters[idx * n + pos] as usize;
                letter_masks[code][pos * words + idx / 64] |= 1 << (idx % 64);
            }
        }
        let mut not_i_masks = vec![0u64; n * words];
        for pos in 0..n {
            for w in 0..words {
                not_i_masks[pos * words + w] = letter_masks[1][pos * words + w]
                    | letter_masks[2][pos * words + w]
                    | letter_masks[3][pos * words + w];
            }
        }

        let mut row_ops: Vec<PauliOperator> = group.generators().to_vec();
        if mode == ScanMode::IPattern {
            row_ops.extend(probe_elements(elements, n));
        }
        let rows = row_ops.len();
        let mut row_letters = vec![0u8; rows * n];
        for (ri, op) in row_ops.iter().enumerate() {
            for pos in 0..n {
                row_letters[ri * n + pos] = letter_code(op, pos);
            }
        }

        // Initial candidates: same letter multiset (letter-exact mode) or
        // same I count (I-pattern mode).
        let mut elem_counts = vec![[0u32; 4]; count];
        for (idx, counts) in elem_counts.iter_mut().enumerate() {
            for pos in 0..n {
                counts[elem_letters[idx * n + pos] as usize] += 1;
            }
        }
        let mut init = vec![0u64; rows * words];
        for ri in 0..rows {
            let mut rcounts = [0u32; 4];
            for pos in 0..n {
                rcounts[row_letters[ri * n + pos] as usize] += 1;
            }
            for (idx, ecounts) in elem_counts.iter().enumerate() {
                let compatible = match mode {
                    ScanMode::LetterExact => *ecounts == rcounts,
                    ScanMode::IPattern => ecounts[0] == rcounts[0],
                };
                if compatible {
                    init[ri * words + idx / 64] |= 1 << (idx % 64);
                }
            }
        }
        let mut imask_index: HashMap<u64, Vec<u32>> = HashMap::new();
        for (idx, e) in elements.iter().enumerate() {
            imask_index
                .entry(e.identity_mask())
                .or_default()
                .push(idx as u32);
        }
        Ok(SearchIndex {
            n,
            rows,
            words,
            letter_masks,
            not_i_masks,
            init,
            row_letters,
            elem_letters,
            imask_index,
        })
    }

    fn mask_slice(&self, ri: usize, depth: usize, image: usize, mode: ScanMode) -> &[u64] {
        let code = self.row_letters[ri * self.n + depth] as usize;
        let masks = match mode {
            ScanMode::LetterExact => &self.letter_masks[code],
            ScanMode::IPattern => {
                if code == 0 {
                    &self.letter_masks[0]
                } else {
                    &self.not_i_masks
                }
            }
        };
        &masks[image * self.words..][..self.words]
    }
}

/// Probe rows for the I-pattern filter: one element per distinct I-pattern,
/// taken from I-count classes where the realized patterns are a proper subset
/// of all possible ones (classes realizing every pattern cannot prune).
fn probe_elements(elements: &[PauliOperator], n: usize) -> Vec<PauliOperator> {
    let mut class_sizes: HashMap<u32, usize> = HashMap::new();
    let mut class_patterns: HashMap<u32, HashSet<u64>> = HashMap::new();
    for e in elements {
        let icount = e.identity_mask().count_ones();
        *class_sizes.entry(icount).or_default() += 1;
        class_patterns
            .entry(icount)
            .or_default()
            .insert(e.identity_mask());
    }
    let mut selective: Vec<u32> = class_patterns
        .iter()
        .filter(|(&icount, patterns)| {
            icount > 0
                && icount < n as u32
                && (patterns.len() as u64) < binomial(n, icount as usize)
        })
        .map(|(&icount, _)| icount)
        .collect();
    selective.sort_by_key(|c| (class_sizes[c], *c));

    let mut probes = Vec::new();
    let mut seen_masks: HashSet<u64> = HashSet::new();
    for icount in selective {
        for e in elements {
            if probes.len() >= MAX_PROBE_ROWS {
                return probes;
            }
            if e.identity_mask().count_ones() == icount && seen_masks.insert(e.identity_mask()) {
                probes.push(*e);
            }
        }
    }
    probes
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) as u64 / (i + 1) as u64;
    }
    result
}

struct Progress {
    enabled: bool,
    scanned: AtomicU64,
    pruned: AtomicU64,
}

impl Progress {
    fn new(enabled: bool) -> Progress {
        Progress {
            enabled,
            scanned: AtomicU64::new(0),
            pruned: AtomicU64::new(0),
        }
    }

    fn leaf(&self) {
        if !self.enabled {
            return;
        }
        let count = self.scanned.fetch_add(1, Ordering::Relaxed) + 1;
        if count.is_multiple_of(1 << 20) {
            eprintln!(
                "aut search: {count} permutations reached, {} branches pruned",
                self.pruned.load(Ordering::Relaxed)
            );
        }
    }

    fn prune(&self) {
        if !self.enabled {
            return;
        }
        let count = self.pruned.fetch_add(1, Ordering::Relaxed) + 1;
        if count.is_multiple_of(1 << 24) {
            eprintln!(
                "aut search: {} permutations reached, {count} branches pruned",
                self.scanned.load(Ordering::Relaxed)
            );
        }
    }
}

struct DfsWorker<'a> {
    index: &'a SearchIndex,
    mode: ScanMode,
    progress: &'a Progress,
    images: Vec<usize>,
    used: u64,
    /// Candidate bitsets per depth and generator, flattened.
    stack: Vec<u64>,
    survivors: Vec<Vec<usize>>,
}

impl<'a> DfsWorker<'a> {
    fn new(index: &'a SearchIndex, mode: ScanMode, progress: &'a Progress) -> DfsWorker<'a> {
        let per_level = index.rows * index.words;
        let mut stack = vec![0u64; (index.n + 1) * per_level];
        stack[..per_level].copy_from_slice(&index.init);
        DfsWorker {
            index,
            mode,
            progress,
            images: Vec::with_capacity(index.n),
            used: 0,
            stack,
            survivors: Vec::new(),
        }
    }

    fn descend(&mut self, image: usize) -> bool {
        let idx = self.index;
        let depth = self.images.len();
        let per_level = idx.rows * idx.words;
        let (current, rest) = self.stack[depth * per_level..].split_at_mut(per_level);
        let next = &mut rest[..per_level];
        for ri in 0..idx.rows {
            let mask = idx.mask_slice(ri, depth, image, self.mode);
            let mut nonzero = 0u64;
            for w in 0..idx.words {
                let v = current[ri * idx.words + w] & mask[w];
                next[ri * idx.words + w] = v;
                nonzero |= v;
            }
            if nonzero == 0 {
                self.progress.prune();
                return false;
            }
        }
        self.images.push(image);
        self.used |= 1 << image;
        true
    }

    fn ascend(&mut self) {
        let image = self.images.pop().expect("descend/ascend are paired");
        self.used &= !(1u64 << image);
    }

    fn run(&mut self) {
        if self.images.len() == self.index.n {
            self.progress.leaf();
            self.survivors.push(self.images.clone());
            return;
        }
        for image in 0..self.index.n {
            if (self.used >> image) & 1 == 1 {
                continue;
            }
            if self.descend(image) {
                self.run();
                self.ascend();
            }
        }
    }
}

/// All permutations passing the viability filter at full depth, in lex order.
/// In letter-exact mode these are exactly the weak automorphisms; in
/// I-pattern mode they are the candidates for the twisted search.
fn scan(index: &SearchIndex, mode: ScanMode, progress: &Progress) -> Vec<Vec<usize>> {
    let branches: Vec<Vec<Vec<usize>>> = (0..index.n)
        .into_par_iter()
        .map(|first| {
            let mut worker = DfsWorker::new(index, mode, progress);
            if worker.descend(first) {
                worker.run();
            }
            worker.survivors
        })
        .collect();
    branches.into_iter().flatten().collect()
}

/// Exact element list of the chosen automorphism group, with witnesses.
pub fn compute_group(
    group: &StabilizerGroup,
    kind: AutomorphismKind,
    options: &SearchOptions,
) -> Result<AutomorphismResult> {
    if group.n() > MAX_SEARCH_QUBITS {
        return Err(Error::GuardExceeded {
            what: "automorphism search qubit count",
            limit: MAX_SEARCH_QUBITS,
            requested: group.n(),
        });
    }
    match options.threads {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|_| Error::InternalInconsistency("failed to build thread pool"))?;
            pool.install(|| compute_group_inner(group, kind, options))
        }
        None => compute_group_inner(group, kind, options),
    }
}

fn compute_group_inner(
    group: &StabilizerGroup,
    kind: AutomorphismKind,
    options: &SearchOptions,
) -> Result<AutomorphismResult> {
    let n = group.n();
    let progress = Progress::new(options.progress);
    let mode = match kind {
        AutomorphismKind::Strong | AutomorphismKind::Weak => ScanMode::LetterExact,
        AutomorphismKind::Clifford => ScanMode::IPattern,
    };
    let index = SearchIndex::build(group, mode)?;
    let survivors = scan(&index, mode, &progress);

    let mut elements: Vec<Permutation> = Vec::new();
    let mut witnesses: Vec<Witness> = Vec::new();
    match kind {
        AutomorphismKind::Strong | AutomorphismKind::Weak => {
            for images in survivors {
                let sigma = Permutation::from_images(images)?;
                let signs = weak_signs(group, &sigma)?.ok_or(Error::InternalInconsistency(
                    "letter-exact survivor failed the weak membership test",
                ))?;
                match kind {
                    AutomorphismKind::Strong => {
                        if signs.iter().all(|s| *s == Sign::Plus) {
                            elements.push(sigma);
                            witnesses.push(Witness::None);
                        }
                    }
                    AutomorphismKind::Weak => {
                        elements.push(sigma);
                        witnesses.push(Witness::Signs(signs));
                    }
                    AutomorphismKind::Clifford => unreachable!(),
                }
            }
        }
        AutomorphismKind::Clifford => {
            // Confirmed members generate a subgroup; anything already in its
            // closure skips the twist search.
            let mut confirmed: HashSet<Vec<usize>> = HashSet::new();
            let mut member_list: Vec<Permutation> = Vec::new();
            for images in survivors {
                let sigma = Permutation::from_images(images)?;
                let member = if confirmed.contains(sigma.images()) {
                    true
                } else if membership_twist_exists(group, &index, &sigma)? {
                    member_list.push(sigma.clone());
                    confirmed = close_under_composition(&member_list, n);
                    true
                } else {
                    false
                };
                if member {
                    elements.push(sigma);
                }
            }
            witnesses = elements
                .par_iter()
                .map(|sigma| {
                    find_clifford_twist(group, sigma).map(|twist| {
                        Witness::Twist(twist.expect("member permutations have a twist"))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
        }
    }

    debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
    let degree = transitivity_degree(&elements, n)?;
    let is_cyclic = elements.iter().any(Permutation::is_n_cycle);
    Ok(AutomorphismResult {
        kind,
        order: elements.len() as u64,
        elements,
        witnesses,
        transitivity_degree: degree,
        is_cyclic,
    })
}

/// Twist-existence test reusing the prebuilt I-pattern index.
fn membership_twist_exists(
    group: &StabilizerGroup,
    index: &SearchIndex,
    sigma: &Permutation,
) -> Result<bool> {
    let mut problem = TwistProblem::new(index.n, &index.elem_letters);
    for g in group.generators() {
        let image = sigma.apply(g)?;
        let Some(targets) = index.imask_index.get(&image.identity_mask()) else {
            return Ok(false);
        };
        problem.push_generator(&image, targets);
    }
    Ok(problem.solve(false).is_some())
}

fn close_under_composition(generators: &[Permutation], n: usize) -> HashSet<Vec<usize>> {
    let mut set: HashSet<Vec<usize>> = HashSet::new();
    set.insert(Permutation::identity(n).images().to_vec());
    let mut frontier: Vec<Permutation> = vec![Permutation::identity(n)];
    while let Some(current) = frontier.pop() {
        for g in generators {
            let product = g.compose(&current).expect("uniform n");
            if set.insert(product.images().to_vec()) {
                frontier.push(product);
            }
        }
    }
    set
}

/// Largest t ≤ 5 such that the element list acts transitively on ordered
/// t-tuples of distinct points, by direct orbit counting.
pub fn transitivity_degree(elements: &[Permutation], n: usize) -> Result<usize> {
    if elements.is_empty() {
        return Err(Error::ClosureViolation);
    }
    let set: HashSet<&[usize]> = elements.iter().map(|e| e.images()).collect();
    if !set.contains(Permutation::identity(n).images()) {
        return Err(Error::ClosureViolation);
    }
    for a in elements {
        for b in elements {
            let ab = a.compose(b)?;
            if !set.contains(ab.images()) {
                return Err(Error::ClosureViolation);
            }
        }
    }

    let max_t = 5.min(n);
    for t in 1..=max_t {
        let full: u64 = ((n - t + 1)..=n).map(|v| v as u64).product();
        if (elements.len() as u64) < full {
            return Ok(t - 1);
        }
        let mut orbit: HashSet<u64> = HashSet::new();
        for e in elements {
            let mut packed = 0u64;
            for (pos, point) in (0..t).enumerate() {
                packed |= (e.image(point) as u64) << (4 * pos);
            }
            orbit.insert(packed);
        }
        if orbit.len() as u64 != full {
            return Ok(t - 1);
        }
    }
    Ok(max_t)
}
