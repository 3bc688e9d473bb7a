//! Compiles target gates into braid words by breadth-first search over the
//! generator moves, with states deduplicated modulo global phase, and
//! enumerates the finite projective image of a representation.
//!
//! Search order is fixed: depth by depth, moves in letter order (index
//! ascending, plain before inverse), so the returned word is the
//! length-lexicographically smallest among the shortest solutions and runs
//! reproduce byte-identical results.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::braid::{word_eval, BraidLetter, BraidWord, RepHandle};
use crate::matrix::{kron_power, sigma1, ExactMatrix};
use crate::{CycloNum, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchMode {
    Exact,
    UpToGlobalPhase,
}

/// A unitary to synthesize, with a name for reports.
#[derive(Debug, Clone)]
pub struct GateTarget {
    pub name: String,
    pub matrix: ExactMatrix,
    pub match_mode: MatchMode,
}

impl GateTarget {
    pub fn new(name: &str, matrix: ExactMatrix, match_mode: MatchMode) -> Result<Self> {
        if !matrix.is_unitary() {
            return Err(Error::ConstructionIntegrity("gate target must be unitary"));
        }
        Ok(GateTarget {
            name: String::from(name),
            matrix,
            match_mode,
        })
    }
}

/// Standard targets on the computational basis: Z and X on the first qubit,
/// plus CNOT with control 1 / target 2 when there are at least two qubits.
pub fn builtin_targets(qubits: usize) -> Vec<GateTarget> {
    let tail = ExactMatrix::identity(1 << (qubits - 1));
    let z = ExactMatrix::diagonal(&[CycloNum::one(), CycloNum::from_int(-1)]).kron(&tail);
    let x = sigma1().kron(&tail);
    let mut targets = Vec::new();
    targets.push(GateTarget::new("z", z, MatchMode::UpToGlobalPhase).expect("unitary"));
    targets.push(GateTarget::new("x", x, MatchMode::UpToGlobalPhase).expect("unitary"));
    if qubits >= 2 {
        let mut cnot = ExactMatrix::zeros(4, 4);
        cnot.set(0, 0, CycloNum::one());
        cnot.set(1, 1, CycloNum::one());
        cnot.set(2, 3, CycloNum::one());
        cnot.set(3, 2, CycloNum::one());
        let full = cnot.kron(&kron_power(&ExactMatrix::identity(2), qubits - 2));
        targets.push(GateTarget::new("cnot", full, MatchMode::UpToGlobalPhase).expect("unitary"));
    }
    targets
}

/// Outcome of a successful synthesis.
#[derive(Debug, Clone)]
pub struct SynthResult {
    pub word: BraidWord,
    pub realized: ExactMatrix,
    /// λ with realized = λ·target (1 in exact mode); unit modulus.
    pub phase: CycloNum,
    pub explored: usize,
    pub depth_reached: usize,
}

#[derive(Debug, Clone)]
pub enum SynthOutcome {
    Found(SynthResult),
    /// No solution within the depth; the explored count is exact.
    Exhausted {
        explored: usize,
        depth_reached: usize,
    },
    /// The state budget filled before the search could finish.
    BudgetExceeded {
        explored: usize,
        depth_reached: usize,
    },
}

fn move_matrices(rep: &RepHandle) -> Vec<(BraidLetter, ExactMatrix)> {
    let mut moves = Vec::with_capacity(2 * rep.generators.len());
    for index in 1..=rep.generators.len() {
        let g = &rep.generators[index - 1];
        moves.push((
            BraidLetter {
                index,
                inverse: false,
            },
            g.clone(),
        ));
        moves.push((
            BraidLetter {
                index,
                inverse: true,
            },
            g.dagger(),
        ));
    }
    moves
}

fn state_key(m: &ExactMatrix, mode: MatchMode) -> Result<ExactMatrix> {
    match mode {
        MatchMode::UpToGlobalPhase => m.projective_canonical(),
        MatchMode::Exact => Ok(m.clone()),
    }
}

/// Breadth-first search for a shortest braid word realizing the target,
/// up to `max_depth` letters, storing at most `budget` distinct states.
pub fn synth_bfs(
    rep: &RepHandle,
    target: &GateTarget,
    max_depth: usize,
    budget: usize,
) -> Result<SynthOutcome> {
    if target.matrix.rows() != rep.dimension || target.matrix.cols() != rep.dimension {
        return Err(Error::DimensionMismatch {
            left: target.matrix.rows(),
            right: rep.dimension,
        });
    }
    let target_key = state_key(&target.matrix, target.match_mode)?;
    let finish =
        |letters: Vec<BraidLetter>, explored: usize, depth: usize| -> Result<SynthOutcome> {
            let word = BraidWord::new(rep.strands(), letters)?;
            let realized = word_eval(rep, &word)?;
            let phase = match target.match_mode {
                MatchMode::Exact => CycloNum::one(),
                MatchMode::UpToGlobalPhase => realized
                    .projective_eq(&target.matrix)?
                    .ok_or(Error::ConstructionIntegrity("key matched without scalar"))?,
            };
            if !phase.abs2().is_one() {
                return Err(Error::ConstructionIntegrity("phase is not unit modulus"));
            }
            Ok(SynthOutcome::Found(SynthResult {
                word,
                realized,
                phase,
                explored,
                depth_reached: depth,
            }))
        };

    let id_key = state_key(&ExactMatrix::identity(rep.dimension), target.match_mode)?;
    let mut visited: BTreeSet<ExactMatrix> = BTreeSet::new();
    visited.insert(id_key.clone());
    if id_key == target_key {
        return finish(Vec::new(), 1, 0);
    }
    let moves = move_matrices(rep);
    let mut frontier: Vec<(ExactMatrix, Vec<BraidLetter>)> = alloc::vec![(id_key, Vec::new())];
    for depth in 1..=max_depth {
        let mut next: Vec<(ExactMatrix, Vec<BraidLetter>)> = Vec::new();
        for (state, letters) in &frontier {
            for (letter, mat) in &moves {
                let key = state_key(&state.mul(mat)?, target.match_mode)?;
                if visited.contains(&key) {
                    continue;
                }
                if visited.len() >= budget {
                    return Ok(SynthOutcome::BudgetExceeded {
                        explored: visited.len(),
                        depth_reached: depth,
                    });
                }
                let mut word = letters.clone();
                word.push(*letter);
                visited.insert(key.clone());
                if key == target_key {
                    return finish(word, visited.len(), depth);
                }
                next.push((key, word));
            }
        }
        if next.is_empty() {
            // group closed under all moves without reaching the target
            return Ok(SynthOutcome::Exhausted {
                explored: visited.len(),
                depth_reached: depth - 1,
            });
        }
        frontier = next;
    }
    Ok(SynthOutcome::Exhausted {
        explored: visited.len(),
        depth_reached: max_depth,
    })
}

#[derive(Debug, Clone)]
pub enum EnumerateOutcome {
    /// The image modulo phase closed under all moves.
    Complete { order: usize, diameter: usize },
    BudgetExceeded {
        explored: usize,
        depth_reached: usize,
    },
}

/// Closure of the projective image under all generator moves: returns the
/// group order modulo phase and the maximum geodesic length, or the budget
/// signal when the state cap fills first.
pub fn group_enumerate(rep: &RepHandle, budget: usize) -> Result<EnumerateOutcome> {
    let moves = move_matrices(rep);
    let id = ExactMatrix::identity(rep.dimension);
    let mut visited: BTreeSet<ExactMatrix> = BTreeSet::new();
    visited.insert(id.projective_canonical()?);
    let mut frontier: Vec<ExactMatrix> = visited.iter().cloned().collect();
    let mut depth = 0usize;
    loop {
        depth += 1;
        let mut next = Vec::new();
        for state in &frontier {
            for (_, mat) in &moves {
                let key = state.mul(mat)?.projective_canonical()?;
                if visited.contains(&key) {
                    continue;
                }
                if visited.len() >= budget {
                    return Ok(EnumerateOutcome::BudgetExceeded {
                        explored: visited.len(),
                        depth_reached: depth,
                    });
                }
                visited.insert(key.clone());
                next.push(key);
            }
        }
        if next.is_empty() {
            return Ok(EnumerateOutcome::Complete {
                order: visited.len(),
                diameter: depth - 1,
            });
        }
        frontier = next;
    }
}

/// Evaluates the word and compares against the target per its match mode;
/// returns the scalar relating them when matched.
pub fn verify_word(
    rep: &RepHandle,
    word: &BraidWord,
    target: &GateTarget,
) -> Result<(bool, Option<CycloNum>)> {
    if target.matrix.rows() != rep.dimension {
        return Err(Error::DimensionMismatch {
            left: target.matrix.rows(),
            right: rep.dimension,
        });
    }
    let realized = word_eval(rep, word)?;
    match target.match_mode {
        MatchMode::Exact => {
            if realized == target.matrix {
                Ok((true, Some(CycloNum::one())))
            } else {
                Ok((false, None))
            }
        }
        MatchMode::UpToGlobalPhase => match realized.projective_eq(&target.matrix)? {
            Some(phase) => Ok((true, Some(phase))),
            None => Ok((false, None)),
        },
    }
}
