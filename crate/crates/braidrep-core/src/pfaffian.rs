//! Braid generators for 2n+2 anyons built from the 4-anyon base matrices.
//!
//! The n-qubit computational basis is the set of sign strings (c_1..c_n),
//! one sign per fused pair, with a completion sign on the final inert pair
//! forced by the representation parity. Generators are assembled two ways:
//! recursively from the two (2n)-anyon representations, and from closed
//! tensor-product formulas; the two routes are cross-checked wherever they
//! overlap. Fusion-projection maps onto the (2n)-anyon bases intertwine the
//! generator actions and are verified exactly.

use alloc::vec::Vec;

use crate::matrix::{sigma1, ExactMatrix};
use crate::{CycloNum, Error, Parity, Result};

/// Capacity guard: generator matrices stay at most 128×128.
pub const MAX_ANYONS: usize = 16;

/// diag(1, i): the exchange phase of a fused pair (trivial channel keeps
/// phase 1, fermion channel gains i).
pub fn exchange_phase_block() -> ExactMatrix {
    ExactMatrix::diagonal(&[CycloNum::one(), CycloNum::i()])
}

/// (e^{iπ/4}/√2)·(I₂ − i·σ1): mixes the final qubit with the inert pair.
pub fn mixer_block_two() -> ExactMatrix {
    ExactMatrix::identity(2)
        .sub(&sigma1().scale(&CycloNum::i()))
        .expect("same shape")
        .scale(&CycloNum::exchange_prefactor())
}

/// (e^{iπ/4}/√2)·(I₄ − i·σ1⊗σ1): mixes two adjacent qubits.
pub fn mixer_block_four() -> ExactMatrix {
    let xx = sigma1().kron(&sigma1());
    ExactMatrix::identity(4)
        .sub(&xx.scale(&CycloNum::i()))
        .expect("same shape")
        .scale(&CycloNum::exchange_prefactor())
}

/// One computational basis state: the free signs c_1..c_n plus the parity
/// of the representation the state lives in. The sign of the trailing inert
/// pair is not free; it is the product of the free signs times the parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisState {
    signs: Vec<Parity>,
    parity: Parity,
}

impl BasisState {
    pub fn signs(&self) -> &[Parity] {
        &self.signs
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// The forced sign completing the correlator to the right parity.
    pub fn completion(&self) -> Parity {
        let minus_count = self.signs.iter().filter(|s| **s == Parity::Minus).count();
        if minus_count % 2 == 0 {
            self.parity
        } else {
            self.parity.flip()
        }
    }
}

/// All 2^n sign strings in lexicographic order with + < −; index k is the
/// binary expansion of k with bit 1 ↦ −, most significant bit first.
pub fn enumerate_basis(qubits: usize, parity: Parity) -> Vec<BasisState> {
    (0..1usize << qubits)
        .map(|k| BasisState {
            signs: (0..qubits)
                .map(|slot| {
                    if (k >> (qubits - 1 - slot)) & 1 == 1 {
                        Parity::Minus
                    } else {
                        Parity::Plus
                    }
                })
                .collect(),
            parity,
        })
        .collect()
}

/// One wave-function representation of the braid group on `anyons` strands.
#[derive(Debug, Clone)]
pub struct PfaffRep {
    anyons: usize,
    parity: Parity,
    generators: Vec<ExactMatrix>,
    basis: Vec<BasisState>,
}

impl PfaffRep {
    pub fn from_parts(
        anyons: usize,
        parity: Parity,
        generators: Vec<ExactMatrix>,
        basis: Vec<BasisState>,
    ) -> Result<Self> {
        if anyons < 4 || anyons % 2 != 0 {
            return Err(Error::InvalidAnyonCount { anyons });
        }
        if generators.len() != anyons - 1 {
            return Err(Error::ConstructionIntegrity(
                "generator count != anyons - 1",
            ));
        }
        Ok(PfaffRep {
            anyons,
            parity,
            generators,
            basis,
        })
    }

    pub fn anyons(&self) -> usize {
        self.anyons
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn qubits(&self) -> usize {
        self.anyons / 2 - 1
    }

    pub fn dimension(&self) -> usize {
        1 << self.qubits()
    }

    /// 1-based generator access, 1 ≤ j ≤ anyons−1.
    pub fn generator(&self, j: usize) -> Result<&ExactMatrix> {
        if j < 1 || j > self.generators.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: self.generators.len(),
            });
        }
        Ok(&self.generators[j - 1])
    }

    pub fn generators(&self) -> &[ExactMatrix] {
        &self.generators
    }

    pub fn basis(&self) -> &[BasisState] {
        &self.basis
    }
}

fn check_anyons(anyons: usize, cap: usize) -> Result<()> {
    if anyons < 4 || anyons % 2 != 0 {
        return Err(Error::InvalidAnyonCount { anyons });
    }
    if anyons > cap {
        return Err(Error::Capacity {
            what: "anyons",
            requested: anyons,
            max: cap,
        });
    }
    Ok(())
}

/// The three 2×2 generators for 4 anyons.
pub fn b4_base(parity: Parity) -> PfaffRep {
    let s = exchange_phase_block();
    let last = match parity {
        Parity::Plus => s.clone(),
        Parity::Minus => ExactMatrix::diagonal(&[CycloNum::i(), CycloNum::one()]),
    };
    PfaffRep {
        anyons: 4,
        parity,
        generators: alloc::vec![s.clone(), mixer_block_two(), last],
        basis: enumerate_basis(1, parity),
    }
}

/// Builds the representation by the recursion on anyon count: generator j
/// of the (m)-anyon representation is generator j of the (m−2)-anyon
/// same-parity representation tensored with I₂ when j ≤ m−5, and the direct
/// sum of the two (m−2)-anyon generators j−2 (same parity first) when
/// j ≥ 3. Overlapping indices must agree. The six-anyon middle generator is
/// reached by neither route and enters as base data (the 4×4 mixer block).
pub fn build_recursive(anyons: usize, parity: Parity) -> Result<PfaffRep> {
    build_recursive_with_cap(anyons, parity, MAX_ANYONS)
}

pub fn build_recursive_with_cap(anyons: usize, parity: Parity, cap: usize) -> Result<PfaffRep> {
    check_anyons(anyons, cap)?;
    let mut plus = b4_base(Parity::Plus);
    let mut minus = b4_base(Parity::Minus);
    let mut m = 4;
    while m < anyons {
        m += 2;
        let next_plus = assemble_step(m, Parity::Plus, &plus, &minus)?;
        let next_minus = assemble_step(m, Parity::Minus, &minus, &plus)?;
        plus = next_plus;
        minus = next_minus;
    }
    Ok(match parity {
        Parity::Plus => plus,
        Parity::Minus => minus,
    })
}

fn assemble_step(
    anyons: usize,
    parity: Parity,
    same: &PfaffRep,
    opp: &PfaffRep,
) -> Result<PfaffRep> {
    let i2 = ExactMatrix::identity(2);
    let tensor_cut = anyons - 5;
    let mut generators = Vec::with_capacity(anyons - 1);
    for j in 1..=anyons - 1 {
        let tensor_route = if j <= tensor_cut {
            Some(same.generators[j - 1].kron(&i2))
        } else {
            None
        };
        let dirsum_route = if j >= 3 {
            Some(same.generators[j - 3].dirsum(&opp.generators[j - 3]))
        } else {
            None
        };
        let gen = match (tensor_route, dirsum_route) {
            (Some(a), Some(b)) => {
                if a != b {
                    return Err(Error::ConstructionIntegrity(
                        "tensor and direct-sum routes disagree",
                    ));
                }
                a
            }
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => {
                if anyons == 6 && j == 2 {
                    mixer_block_four()
                } else {
                    return Err(Error::ConstructionIntegrity("recursion left a gap"));
                }
            }
        };
        generators.push(gen);
    }
    Ok(PfaffRep {
        anyons,
        parity,
        generators,
        basis: enumerate_basis(anyons / 2 - 1, parity),
    })
}

/// Diagonal of the last generator in closed form: entry 1 on even-weight
/// sign strings and i on odd-weight for positive parity, swapped for
/// negative. Verified against the recursion on every build.
fn last_generator_closed_form(qubits: usize, parity: Parity) -> ExactMatrix {
    let diag: Vec<CycloNum> = (0..1usize << qubits)
        .map(|k| {
            let odd = k.count_ones() % 2 == 1;
            let gains_i = match parity {
                Parity::Plus => odd,
                Parity::Minus => !odd,
            };
            if gains_i {
                CycloNum::i()
            } else {
                CycloNum::one()
            }
        })
        .collect();
    ExactMatrix::diagonal(&diag)
}

/// Last generator by its own recursion: direct sum of the two last
/// generators one size down, with the 4-anyon diagonals as base.
fn last_generator_recursive(anyons: usize, parity: Parity) -> ExactMatrix {
    if anyons == 4 {
        return match parity {
            Parity::Plus => exchange_phase_block(),
            Parity::Minus => ExactMatrix::diagonal(&[CycloNum::i(), CycloNum::one()]),
        };
    }
    let same = last_generator_recursive(anyons - 2, parity);
    let opp = last_generator_recursive(anyons - 2, parity.flip());
    same.dirsum(&opp)
}

/// Builds the representation from the closed tensor-product formulas:
/// odd generators are diag(1,i) in one qubit slot, even generators are the
/// 4×4 mixer on adjacent qubit slots (or the 2×2 mixer on the final slot),
/// and the last generator follows its own direct-sum recursion.
pub fn build_explicit(anyons: usize, parity: Parity) -> Result<PfaffRep> {
    build_explicit_with_cap(anyons, parity, MAX_ANYONS)
}

pub fn build_explicit_with_cap(anyons: usize, parity: Parity, cap: usize) -> Result<PfaffRep> {
    check_anyons(anyons, cap)?;
    let qubits = anyons / 2 - 1;
    let mut generators = alloc::vec![ExactMatrix::identity(1); anyons - 1];
    for slot in 1..=qubits {
        let head = ExactMatrix::identity(1 << (slot - 1));
        let tail = ExactMatrix::identity(1 << (qubits - slot));
        generators[2 * slot - 2] = head.kron(&exchange_phase_block()).kron(&tail);
    }
    for slot in 1..qubits {
        let head = ExactMatrix::identity(1 << (slot - 1));
        let tail = ExactMatrix::identity(1 << (qubits - slot - 1));
        generators[2 * slot - 1] = head.kron(&mixer_block_four()).kron(&tail);
    }
    generators[2 * qubits - 1] = ExactMatrix::identity(1 << (qubits - 1)).kron(&mixer_block_two());
    let last = last_generator_recursive(anyons, parity);
    if last != last_generator_closed_form(qubits, parity) {
        return Err(Error::ConstructionIntegrity(
            "last-generator recursion disagrees with closed form",
        ));
    }
    generators[2 * qubits] = last;
    Ok(PfaffRep {
        anyons,
        parity,
        generators,
        basis: enumerate_basis(qubits, parity),
    })
}

/// The 2^{n+1}-dimensional unprojected even-index generator: the 4×4 mixer
/// block in tensor slots j/2, j/2+1 of n+1 slots. Projecting onto a parity
/// eigenspace and compressing reproduces the projected generator.
pub fn build_unprojected_even(anyons: usize, j: usize) -> Result<ExactMatrix> {
    check_anyons(anyons, MAX_ANYONS)?;
    let n = anyons / 2 - 1;
    if j % 2 != 0 || j < 2 || j > 2 * n {
        return Err(Error::GeneratorIndex {
            index: j,
            strands: anyons,
        });
    }
    let pos = j / 2;
    let head = ExactMatrix::identity(1 << (pos - 1));
    let tail = ExactMatrix::identity(1 << (n - pos));
    Ok(head.kron(&mixer_block_four()).kron(&tail))
}

/// Which pair of anyons a fusion projection removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FusionKind {
    /// Fuse the leading pair: drops the first qubit, sign −1 on states
    /// whose first sign is −.
    FirstPair,
    /// Fuse the trailing inert pair: drops the last qubit label; the image
    /// parity is the product of the free signs.
    LastPair,
}

/// Signed permutation from the (2n+2)-anyon basis into the concatenation of
/// the two (2n)-anyon bases, same-parity block first.
#[derive(Debug, Clone)]
pub struct FusionMap {
    pub kind: FusionKind,
    pub anyons: usize,
    pub parity: Parity,
    pub matrix: ExactMatrix,
}

pub fn fusion_map(anyons: usize, parity: Parity, kind: FusionKind) -> Result<FusionMap> {
    check_anyons(anyons, MAX_ANYONS)?;
    let qubits = anyons / 2 - 1;
    if qubits < 2 {
        return Err(Error::Capacity {
            what: "fusion projection qubits (need at least 2)",
            requested: qubits,
            max: usize::MAX,
        });
    }
    let dim = 1usize << qubits;
    let half = dim >> 1;
    let mut matrix = ExactMatrix::zeros(dim, dim);
    for col in 0..dim {
        let (row, coeff) = match kind {
            FusionKind::LastPair => {
                let label = col >> 1;
                let even_weight = col.count_ones() % 2 == 0;
                // the fused inert pair carries the completion sign
                // parity × product of signs; it fuses to the trivial channel
                // (keeping the parity) exactly when that sign is +
                let same_block = even_weight == (parity == Parity::Plus);
                let block = if same_block { 0 } else { 1 };
                (block * half + label, 1)
            }
            FusionKind::FirstPair => {
                let first_minus = (col >> (qubits - 1)) & 1 == 1;
                let label = col & (half - 1);
                if first_minus {
                    (half + label, -1)
                } else {
                    (label, 1)
                }
            }
        };
        matrix.set(row, col, CycloNum::from_int(coeff));
    }
    Ok(FusionMap {
        kind,
        anyons,
        parity,
        matrix,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionFailure {
    pub kind: FusionKind,
    pub j: usize,
}

#[derive(Debug, Clone)]
pub struct FusionReport {
    pub anyons: usize,
    pub parity: Parity,
    pub failures: Vec<FusionFailure>,
}

impl FusionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies that each fusion map intertwines the parent generators with the
/// direct sum of the child generators over the range of exchanges that do
/// not touch the fused pair:
///   F_last · B_j = (B_j ⊕ B_j') · F_last        for 1 ≤ j ≤ 2n−3,
///   F_first · B_j = (B_{j−2} ⊕ B_{j−2}') · F_first  for 3 ≤ j ≤ 2n+1,
/// with the same-parity child first in each sum.
pub fn fusion_intertwine_check(anyons: usize, parity: Parity) -> Result<FusionReport> {
    let parent = build_recursive(anyons, parity)?;
    let same = build_recursive(anyons - 2, parity)?;
    let opp = build_recursive(anyons - 2, parity.flip())?;
    fusion_intertwine_check_reps(&parent, &same, &opp)
}

pub fn fusion_intertwine_check_reps(
    parent: &PfaffRep,
    same: &PfaffRep,
    opp: &PfaffRep,
) -> Result<FusionReport> {
    let anyons = parent.anyons();
    let parity = parent.parity();
    let mut failures = Vec::new();
    let last = fusion_map(anyons, parity, FusionKind::LastPair)?;
    for j in 1..=anyons - 5 {
        let lhs = last.matrix.mul(parent.generator(j)?)?;
        let rhs = same
            .generator(j)?
            .dirsum(opp.generator(j)?)
            .mul(&last.matrix)?;
        if lhs != rhs {
            failures.push(FusionFailure {
                kind: FusionKind::LastPair,
                j,
            });
        }
    }
    let first = fusion_map(anyons, parity, FusionKind::FirstPair)?;
    for j in 3..=anyons - 1 {
        let lhs = first.matrix.mul(parent.generator(j)?)?;
        let rhs = same
            .generator(j - 2)?
            .dirsum(opp.generator(j - 2)?)
            .mul(&first.matrix)?;
        if lhs != rhs {
            failures.push(FusionFailure {
                kind: FusionKind::FirstPair,
                j,
            });
        }
    }
    Ok(FusionReport {
        anyons,
        parity,
        failures,
    })
}
