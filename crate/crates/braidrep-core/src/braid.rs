//! Braid words, their evaluation in a built representation, exact
//! verification of the braid-group relations, and the equivalence between
//! the spinor and wave-function families.

use alloc::string::String;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::matrix::ExactMatrix;
use crate::pfaffian::{build_recursive, PfaffRep};
use crate::spinor::{
    build_spinor_rep, build_spinor_rep_on_basis, eigenbasis, SpinorRep, MAX_SLOTS,
};
use crate::{CycloNum, Error, Parity, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepFamily {
    Spinor,
    Pfaffian,
}

impl RepFamily {
    pub fn name(self) -> &'static str {
        match self {
            RepFamily::Spinor => "spinor",
            RepFamily::Pfaffian => "pfaffian",
        }
    }
}

/// Identifies one representation: family, anyon count, parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepSpec {
    pub family: RepFamily,
    pub anyons: usize,
    pub parity: Parity,
}

/// One signed letter of a braid word: generator index (1-based) and
/// exponent sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

/// A word in the braid group on `strands` strands, applied left-to-right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        for l in &letters {
            if l.index < 1 || l.index >= strands {
                return Err(Error::GeneratorIndex {
                    index: l.index,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// Parses whitespace-separated signed indices, e.g. `"1 2 -3"` meaning
    /// B₁·B₂·B₃⁻¹ applied left-to-right.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let signed: i64 = token.parse().map_err(|_| Error::WordSyntax {
                token: token.to_string(),
            })?;
            if signed == 0 {
                return Err(Error::WordSyntax {
                    token: token.to_string(),
                });
            }
            letters.push(BraidLetter {
                index: signed.unsigned_abs() as usize,
                inverse: signed < 0,
            });
        }
        BraidWord::new(strands, letters)
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.inverse {
                    alloc::format!("-{}", l.index)
                } else {
                    alloc::format!("{}", l.index)
                }
            })
            .collect();
        parts.join(" ")
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Free reduction only: cancels adjacent g·g⁻¹ pairs, no braid-relation
    /// rewriting.
    pub fn reduce(&self) -> BraidWord {
        let mut stack: Vec<BraidLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(top) if top.index == l.index && top.inverse != l.inverse => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// The inverse word: letters reversed with exponents flipped.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BraidLetter {
                    index: l.index,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }

    pub fn concat(&self, rhs: &BraidWord) -> Result<BraidWord> {
        if self.strands != rhs.strands {
            return Err(Error::StrandMismatch {
                word: rhs.strands,
                rep: self.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }
}

/// A built representation ready for word evaluation: its spec, dimension,
/// and one unitary matrix per generator.
#[derive(Debug, Clone)]
pub struct RepHandle {
    pub spec: RepSpec,
    pub dimension: usize,
    pub generators: Vec<ExactMatrix>,
}

impl RepHandle {
    pub fn from_pfaffian(rep: &PfaffRep) -> Self {
        RepHandle {
            spec: RepSpec {
                family: RepFamily::Pfaffian,
                anyons: rep.anyons(),
                parity: rep.parity(),
            },
            dimension: rep.dimension(),
            generators: rep.generators().to_vec(),
        }
    }

    pub fn from_spinor(rep: &SpinorRep) -> Self {
        RepHandle {
            spec: RepSpec {
                family: RepFamily::Spinor,
                anyons: rep.strands(),
                parity: rep.parity(),
            },
            dimension: rep.dimension(),
            generators: rep.generators().to_vec(),
        }
    }

    pub fn strands(&self) -> usize {
        self.spec.anyons
    }

    /// 1-based generator access.
    pub fn generator(&self, j: usize) -> Result<&ExactMatrix> {
        if j < 1 || j > self.generators.len() {
            return Err(Error::GeneratorIndex {
                index: j,
                strands: self.strands(),
            });
        }
        Ok(&self.generators[j - 1])
    }
}

/// Builds the representation a spec names, with default capacity guards.
pub fn build_handle(spec: &RepSpec) -> Result<RepHandle> {
    build_handle_with_cap(spec, crate::pfaffian::MAX_ANYONS)
}

pub fn build_handle_with_cap(spec: &RepSpec, max_anyons: usize) -> Result<RepHandle> {
    if spec.anyons < 4 || spec.anyons % 2 != 0 {
        return Err(Error::InvalidAnyonCount {
            anyons: spec.anyons,
        });
    }
    match spec.family {
        RepFamily::Pfaffian => Ok(RepHandle::from_pfaffian(
            &crate::pfaffian::build_recursive_with_cap(spec.anyons, spec.parity, max_anyons)?,
        )),
        RepFamily::Spinor => {
            let slots = spec.anyons / 2;
            let cap = if max_anyons == crate::pfaffian::MAX_ANYONS {
                MAX_SLOTS
            } else {
                max_anyons / 2
            };
            Ok(RepHandle::from_spinor(
                &crate::spinor::build_spinor_rep_with_cap(slots, spec.parity, cap)?,
            ))
        }
    }
}

/// Ordered product of generator matrices; inverse letters use the adjoint,
/// valid because every generator is unitary. The empty word is the identity.
pub fn word_eval(rep: &RepHandle, word: &BraidWord) -> Result<ExactMatrix> {
    if word.strands() != rep.strands() {
        return Err(Error::StrandMismatch {
            word: word.strands(),
            rep: rep.strands(),
        });
    }
    let mut acc = ExactMatrix::identity(rep.dimension);
    for l in word.letters() {
        let g = rep.generator(l.index)?;
        let m = if l.inverse { g.dagger() } else { g.clone() };
        acc = acc.mul(&m)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RelationFailure {
    FarCommutation { i: usize, j: usize },
    YangBaxter { i: usize },
}

#[derive(Debug, Clone)]
pub struct RelationReport {
    pub spec: RepSpec,
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Exact verification of B_i B_j = B_j B_i for |i−j| ≥ 2 and
/// B_i B_{i+1} B_i = B_{i+1} B_i B_{i+1} for all i.
pub fn braid_relations_check(rep: &RepHandle) -> Result<RelationReport> {
    let count = rep.generators.len();
    let mut failures = Vec::new();
    let mut checked = 0;
    for i in 1..=count {
        for j in i + 2..=count {
            checked += 1;
            let a = rep.generator(i)?;
            let b = rep.generator(j)?;
            if a.mul(b)? != b.mul(a)? {
                failures.push(RelationFailure::FarCommutation { i, j });
            }
        }
    }
    for i in 1..count {
        checked += 1;
        let a = rep.generator(i)?;
        let b = rep.generator(i + 1)?;
        let lhs = a.mul(b)?.mul(a)?;
        let rhs = b.mul(a)?.mul(b)?;
        if lhs != rhs {
            failures.push(RelationFailure::YangBaxter { i });
        }
    }
    Ok(RelationReport {
        spec: rep.spec,
        checked,
        failures,
    })
}

/// Product of all diagonal generators B_1 B_3 ⋯ B_{2n+1} of the
/// wave-function representation; diagonal, and conjugating the spinor
/// generators by it yields the wave-function ones.
pub fn equivalence_conjugator(anyons: usize, parity: Parity) -> Result<ExactMatrix> {
    let rep = build_recursive(anyons, parity)?;
    conjugator_from_rep(&rep)
}

fn conjugator_from_rep(rep: &PfaffRep) -> Result<ExactMatrix> {
    let mut c = ExactMatrix::identity(rep.dimension());
    let mut j = 1;
    while j <= rep.anyons() - 1 {
        c = c.mul(rep.generator(j)?)?;
        j += 2;
    }
    if !c.is_diagonal() {
        return Err(Error::ConstructionIntegrity("conjugator is not diagonal"));
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceFailure {
    pub j: usize,
    pub check: &'static str,
}

#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    pub anyons: usize,
    pub parity: Parity,
    pub failures: Vec<EquivalenceFailure>,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies that the wave-function generators equal the compressed spinor
/// generators conjugated by the product of the diagonal generators:
/// B_j = C⁻¹ R_j C for all j, with C = B_1 B_3 ⋯ B_{2n+1}; the diagonal
/// generators themselves must coincide outright.
///
/// The basis identification is fixed here: the k-th wave-function basis
/// state (sign string read as bits, − ↦ 1) corresponds to the k-th kept
/// index of the spinor parity eigenspace in ascending order — the free
/// signs fill the leading tensor slots and the forced sign lands in the
/// last slot.
pub fn spinor_equivalence_check(anyons: usize, parity: Parity) -> Result<EquivalenceReport> {
    spinor_equivalence_check_on(anyons, parity, false)
}

/// `reverse_basis` deliberately reverses the eigenspace ordering to
/// demonstrate that the identification above is load-bearing.
pub fn spinor_equivalence_check_on(
    anyons: usize,
    parity: Parity,
    reverse_basis: bool,
) -> Result<EquivalenceReport> {
    let pfaff = build_recursive(anyons, parity)?;
    let slots = anyons / 2;
    let spinor = if reverse_basis {
        let mut basis = eigenbasis(slots, parity);
        basis.reverse();
        build_spinor_rep_on_basis(slots, parity, basis, MAX_SLOTS)?
    } else {
        build_spinor_rep(slots, parity)?
    };
    let c = conjugator_from_rep(&pfaff)?;
    let c_inv = c.dagger();
    let mut failures = Vec::new();
    for j in 1..=anyons - 1 {
        let b = pfaff.generator(j)?;
        let r = spinor.generator(j)?;
        let conj = c_inv.mul(r)?.mul(&c)?;
        if &conj != b {
            failures.push(EquivalenceFailure {
                j,
                check: "conjugated spinor generator",
            });
        }
        if j % 2 == 1 && r != b {
            failures.push(EquivalenceFailure {
                j,
                check: "diagonal generators coincide",
            });
        }
    }
    Ok(EquivalenceReport {
        anyons,
        parity,
        failures,
    })
}

/// Verifies the four-anyon identities: the negative-parity wave-function
/// generators equal the compressed spinor ones outright, and the
/// positive-parity ones equal them conjugated by Z = (B_1)² = diag(1,−1).
pub fn four_anyon_z_conjugation_check() -> Result<EquivalenceReport> {
    let mut failures = Vec::new();

    let minus = build_recursive(4, Parity::Minus)?;
    let spin_minus = build_spinor_rep(2, Parity::Minus)?;
    for j in 1..=3 {
        if minus.generator(j)? != spin_minus.generator(j)? {
            failures.push(EquivalenceFailure {
                j,
                check: "negative parity direct identity",
            });
        }
    }

    let plus = build_recursive(4, Parity::Plus)?;
    let spin_plus = build_spinor_rep(2, Parity::Plus)?;
    let b1 = plus.generator(1)?;
    let z = b1.mul(b1)?;
    let z_expect = ExactMatrix::diagonal(&[CycloNum::one(), CycloNum::from_int(-1)]);
    if z != z_expect {
        failures.push(EquivalenceFailure {
            j: 1,
            check: "squared diagonal is diag(1,-1)",
        });
    }
    for j in 1..=3 {
        let conj = z.mul(spin_plus.generator(j)?)?.mul(&z)?;
        if &conj != plus.generator(j)? {
            failures.push(EquivalenceFailure {
                j,
                check: "positive parity Z conjugation",
            });
        }
    }
    Ok(EquivalenceReport {
        anyons: 4,
        parity: Parity::Plus,
        failures,
    })
}

/// Breadth-first search, in length-lexicographic order, for a word whose
/// trace differs between the two representations. Traces are conjugation
/// invariants, so a differing trace certifies inequivalence.
pub fn inequivalence_witness(
    rep_a: &RepHandle,
    rep_b: &RepHandle,
    max_len: usize,
) -> Result<Option<BraidWord>> {
    if rep_a.dimension != rep_b.dimension {
        return Err(Error::DimensionMismatch {
            left: rep_a.dimension,
            right: rep_b.dimension,
        });
    }
    if rep_a.strands() != rep_b.strands() {
        return Err(Error::StrandMismatch {
            word: rep_a.strands(),
            rep: rep_b.strands(),
        });
    }
    let strands = rep_a.strands();
    let dim = rep_a.dimension;
    let mut letters: Vec<BraidLetter> = Vec::new();
    for index in 1..strands {
        for inverse in [false, true] {
            letters.push(BraidLetter { index, inverse });
        }
    }
    let moves: Vec<(BraidLetter, ExactMatrix, ExactMatrix)> = letters
        .into_iter()
        .map(|l| {
            let a = rep_a.generators[l.index - 1].clone();
            let b = rep_b.generators[l.index - 1].clone();
            if l.inverse {
                (l, a.dagger(), b.dagger())
            } else {
                (l, a, b)
            }
        })
        .collect();

    fn explore(
        moves: &[(BraidLetter, ExactMatrix, ExactMatrix)],
        depth_left: usize,
        prod_a: &ExactMatrix,
        prod_b: &ExactMatrix,
        prefix: &mut Vec<BraidLetter>,
    ) -> Result<Option<Vec<BraidLetter>>> {
        if depth_left == 0 {
            return Ok(if prod_a.trace()? != prod_b.trace()? {
                Some(prefix.clone())
            } else {
                None
            });
        }
        for (l, ma, mb) in moves {
            let na = prod_a.mul(ma)?;
            let nb = prod_b.mul(mb)?;
            prefix.push(*l);
            if let Some(hit) = explore(moves, depth_left - 1, &na, &nb, prefix)? {
                return Ok(Some(hit));
            }
            prefix.pop();
        }
        Ok(None)
    }

    let id = ExactMatrix::identity(dim);
    for len in 1..=max_len {
        let mut prefix = Vec::new();
        if let Some(letters) = explore(&moves, len, &id, &id, &mut prefix)? {
            return Ok(Some(BraidWord::new(strands, letters)?));
        }
    }
    Ok(None)
}
