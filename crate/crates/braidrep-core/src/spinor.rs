//! Rotation generators built from gamma matrices, the fermion-parity
//! projectors, and the compressed spinor representations of the braid group.
//!
//! For n tensor slots there are 2n gamma matrices of size 2^n obeying the
//! Clifford anticommutation relations; each adjacent product γ_j γ_{j+1}
//! squares to −I, so the exchange generator
//! (e^{iπ/4}/√2)(I − γ_j γ_{j+1}) is unitary. The parity operator
//! (−i)^n γ_1 ⋯ γ_2n is diagonal with entries ±1 and commutes with every
//! exchange generator; compressing onto one of its eigenspaces yields the
//! two irreducible 2^{n−1}-dimensional representations.

use alloc::vec::Vec;

use crate::matrix::{kron_power, sigma1, sigma2, sigma3, ExactMatrix};
use crate::{CycloNum, Error, Parity, Result};

/// Capacity guard: unreduced matrices stay at most 128×128.
pub const MAX_SLOTS: usize = 7;

/// The 2n gamma matrices for n tensor slots.
#[derive(Debug, Clone)]
pub struct GammaSet {
    slots: usize,
    gammas: Vec<ExactMatrix>,
}

/// γ_{2j−1} = I^{⊗(j−1)} ⊗ σ1 ⊗ σ3^{⊗(n−j)} and
/// γ_{2j}   = I^{⊗(j−1)} ⊗ σ2 ⊗ σ3^{⊗(n−j)}.
pub fn build_gammas(slots: usize) -> Result<GammaSet> {
    build_gammas_with_cap(slots, MAX_SLOTS)
}

pub fn build_gammas_with_cap(slots: usize, cap: usize) -> Result<GammaSet> {
    if slots < 1 || slots > cap {
        return Err(Error::Capacity {
            what: "gamma slots",
            requested: slots,
            max: cap,
        });
    }
    let mut gammas = Vec::with_capacity(2 * slots);
    for i in 1..=2 * slots {
        let j = i.div_ceil(2);
        let mid = if i % 2 == 1 { sigma1() } else { sigma2() };
        let head = ExactMatrix::identity(1 << (j - 1));
        let tail = kron_power(&sigma3(), slots - j);
        gammas.push(head.kron(&mid).kron(&tail));
    }
    Ok(GammaSet { slots, gammas })
}

impl GammaSet {
    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn dimension(&self) -> usize {
        1 << self.slots
    }

    /// 1-based access, 1 ≤ i ≤ 2n.
    pub fn gamma(&self, i: usize) -> Result<&ExactMatrix> {
        if i < 1 || i > 2 * self.slots {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: 2 * self.slots,
            });
        }
        Ok(&self.gammas[i - 1])
    }

    pub fn gammas(&self) -> &[ExactMatrix] {
        &self.gammas
    }

    /// Unprojected exchange generator (e^{iπ/4}/√2)(I − γ_j γ_{j+1}),
    /// 1 ≤ j ≤ 2n−1.
    pub fn r_unprojected(&self, j: usize) -> Result<ExactMatrix> {
        if j < 1 || j > 2 * self.slots - 1 {
            return Err(Error::IndexOutOfRange {
                index: j,
                bound: 2 * self.slots - 1,
            });
        }
        let prod = self.gammas[j - 1].mul(&self.gammas[j])?;
        let diff = ExactMatrix::identity(self.dimension()).sub(&prod)?;
        Ok(diff.scale(&CycloNum::exchange_prefactor()))
    }

    /// Parity operator (−i)^n γ_1 ⋯ γ_2n; diagonal with entries ±1.
    pub fn gamma_five(&self) -> ExactMatrix {
        let mut prod = ExactMatrix::identity(self.dimension());
        for g in &self.gammas {
            prod = prod.mul(g).expect("square sizes agree");
        }
        // (−i)^n = ω^{6n}
        prod.scale(&CycloNum::omega_pow(6 * self.slots as i64))
    }

    /// (I ± γ_F)/2; idempotent and self-adjoint.
    pub fn projector(&self, parity: Parity) -> ExactMatrix {
        let gf = self.gamma_five();
        let id = ExactMatrix::identity(self.dimension());
        let sum = match parity {
            Parity::Plus => id.add(&gf),
            Parity::Minus => id.sub(&gf),
        }
        .expect("same shape");
        sum.scale(&CycloNum::new([
            crate::Dyadic::half(),
            crate::Dyadic::zero(),
            crate::Dyadic::zero(),
            crate::Dyadic::zero(),
        ]))
    }
}

/// Indices of the parity eigenspace: b ∈ [0, 2^n) with even popcount for
/// `Plus`, odd for `Minus`, ascending, reading index bits most-significant
/// first as tensor slots 1..n.
pub fn eigenbasis(slots: usize, parity: Parity) -> Vec<usize> {
    let want_odd = parity == Parity::Minus;
    (0..1usize << slots)
        .filter(|b| (b.count_ones() % 2 == 1) == want_odd)
        .collect()
}

/// One irreducible spinor representation of the braid group on 2n strands,
/// compressed onto the chosen parity eigenspace.
#[derive(Debug, Clone)]
pub struct SpinorRep {
    slots: usize,
    parity: Parity,
    generators: Vec<ExactMatrix>,
    projector: ExactMatrix,
    eigenbasis: Vec<usize>,
}

pub fn build_spinor_rep(slots: usize, parity: Parity) -> Result<SpinorRep> {
    build_spinor_rep_with_cap(slots, parity, MAX_SLOTS)
}

pub fn build_spinor_rep_with_cap(slots: usize, parity: Parity, cap: usize) -> Result<SpinorRep> {
    if slots < 2 || slots > cap {
        return Err(Error::Capacity {
            what: "spinor slots",
            requested: slots,
            max: cap,
        });
    }
    let basis = eigenbasis(slots, parity);
    build_spinor_rep_on_basis(slots, parity, basis, cap)
}

/// Builder taking an explicit eigenspace ordering. The ascending order of
/// `eigenbasis` is the supported convention; other orderings exist so that
/// verification tooling can demonstrate the failure they cause.
pub fn build_spinor_rep_on_basis(
    slots: usize,
    parity: Parity,
    basis: Vec<usize>,
    cap: usize,
) -> Result<SpinorRep> {
    if slots < 2 || slots > cap {
        return Err(Error::Capacity {
            what: "spinor slots",
            requested: slots,
            max: cap,
        });
    }
    let gammas = build_gammas_with_cap(slots, cap)?;
    let projector = gammas.projector(parity);
    let mut generators = Vec::with_capacity(2 * slots - 1);
    for j in 1..=2 * slots - 1 {
        let projected = gammas.r_unprojected(j)?.mul(&projector)?;
        generators.push(projected.compress(&basis)?);
    }
    Ok(SpinorRep {
        slots,
        parity,
        generators,
        projector,
        eigenbasis: basis,
    })
}

impl SpinorRep {
    pub fn slots(&self) -> usize {
        self.slots
    }

    /// Number of strands of the braid group this represents.
    pub fn strands(&self) -> usize {
        2 * self.slots
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn dimension(&self) -> usize {
        1 << (self.slots - 1)
    }

    /// 1-based generator access, 1 ≤ j ≤ 2n−1.
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

    pub fn projector(&self) -> &ExactMatrix {
        &self.projector
    }

    pub fn eigenbasis(&self) -> &[usize] {
        &self.eigenbasis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{kron_power, sigma1, sigma2, sigma3};

    #[test]
    fn one_slot_gammas_are_paulis() {
        let g = build_gammas(1).unwrap();
        assert_eq!(g.gamma(1).unwrap(), &sigma1());
        assert_eq!(g.gamma(2).unwrap(), &sigma2());
    }

    #[test]
    fn two_slot_last_gamma() {
        let g = build_gammas(2).unwrap();
        assert_eq!(
            g.gamma(4).unwrap(),
            &ExactMatrix::identity(2).kron(&sigma2())
        );
    }

    #[test]
    fn clifford_relations_three_slots() {
        let g = build_gammas(3).unwrap();
        let id = ExactMatrix::identity(8);
        let two_id = id.scale(&CycloNum::from_int(2));
        for i in 1..=6 {
            for j in i..=6 {
                let gi = g.gamma(i).unwrap();
                let gj = g.gamma(j).unwrap();
                let anti = gi.mul(gj).unwrap().add(&gj.mul(gi).unwrap()).unwrap();
                if i == j {
                    assert_eq!(anti, two_id, "{{γ{i},γ{i}}} = 2I");
                } else {
                    assert!(
                        anti.entries().iter().all(CycloNum::is_zero),
                        "γ{i},γ{j} must anticommute"
                    );
                }
            }
        }
    }

    #[test]
    fn gammas_hermitian() {
        let g = build_gammas(3).unwrap();
        for k in 1..=6 {
            let gk = g.gamma(k).unwrap();
            assert_eq!(&gk.dagger(), gk);
        }
    }

    #[test]
    fn exchange_one_slot_is_diag_1_i() {
        let g = build_gammas(1).unwrap();
        let r = g.r_unprojected(1).unwrap();
        let expect = ExactMatrix::from_int_coeffs(
            2,
            2,
            &[[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]],
        );
        assert_eq!(r, expect);
    }

    #[test]
    fn adjacent_products_square_to_minus_identity() {
        for n in 1..=4 {
            let g = build_gammas(n).unwrap();
            let minus_id = ExactMatrix::identity(1 << n).scale(&CycloNum::from_int(-1));
            for j in 1..=2 * n - 1 {
                let p = g.gamma(j).unwrap().mul(g.gamma(j + 1).unwrap()).unwrap();
                assert_eq!(p.mul(&p).unwrap(), minus_id);
            }
        }
    }

    #[test]
    fn exchanges_unitary() {
        for n in 1..=3 {
            let g = build_gammas(n).unwrap();
            for j in 1..=2 * n - 1 {
                assert!(g.r_unprojected(j).unwrap().is_unitary());
            }
        }
    }

    #[test]
    fn parity_operator_values() {
        let g = build_gammas(1).unwrap();
        assert_eq!(g.gamma_five(), sigma3());
        let g = build_gammas(2).unwrap();
        assert_eq!(g.gamma_five(), sigma3().kron(&sigma3()));
        for n in 1..=4 {
            let g = build_gammas(n).unwrap();
            assert_eq!(g.gamma_five(), kron_power(&sigma3(), n));
        }
    }

    #[test]
    fn parity_operator_commutes_with_exchanges() {
        for n in 1..=4 {
            let g = build_gammas(n).unwrap();
            let gf = g.gamma_five();
            assert!(gf.mul(&gf).unwrap().is_identity());
            for j in 1..=2 * n - 1 {
                let r = g.r_unprojected(j).unwrap();
                assert_eq!(gf.mul(&r).unwrap(), r.mul(&gf).unwrap());
            }
        }
    }

    #[test]
    fn projector_algebra() {
        let g = build_gammas(1).unwrap();
        let p = g.projector(Parity::Plus);
        assert_eq!(
            p,
            ExactMatrix::from_int_coeffs(
                2,
                2,
                &[[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
            )
        );
        for n in 1..=4 {
            let g = build_gammas(n).unwrap();
            let pp = g.projector(Parity::Plus);
            let pm = g.projector(Parity::Minus);
            assert_eq!(pp.mul(&pp).unwrap(), pp);
            assert_eq!(pp.dagger(), pp);
            assert_eq!(pm.mul(&pm).unwrap(), pm);
            assert_eq!(pm.dagger(), pm);
            assert!(pp.add(&pm).unwrap().is_identity());
        }
    }

    #[test]
    fn eigenbasis_orderings() {
        assert_eq!(eigenbasis(2, Parity::Plus), alloc::vec![0, 3]);
        assert_eq!(eigenbasis(2, Parity::Minus), alloc::vec![1, 2]);
        assert_eq!(eigenbasis(3, Parity::Plus), alloc::vec![0, 3, 5, 6]);
    }

    #[test]
    fn compression_matches_projected_diagonal() {
        // restrict R_1 P_+ for two slots to indices [0,3]: diag(1, i)
        let g = build_gammas(2).unwrap();
        let proj = g.projector(Parity::Plus);
        let m = g.r_unprojected(1).unwrap().mul(&proj).unwrap();
        let compressed = m.compress(&[0, 3]).unwrap();
        let expect = ExactMatrix::from_int_coeffs(
            2,
            2,
            &[[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]],
        );
        assert_eq!(compressed, expect);
    }

    #[test]
    fn rep_guard() {
        assert!(matches!(
            build_spinor_rep(1, Parity::Plus),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(
            build_spinor_rep(8, Parity::Plus),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn two_slot_reps_match_four_anyon_bases() {
        // negative parity: generators equal the 4-anyon wave-function set
        let rep = build_spinor_rep(2, Parity::Minus).unwrap();
        let s_diag = ExactMatrix::from_int_coeffs(
            2,
            2,
            &[[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]],
        );
        let mixer = ExactMatrix::from_int_coeffs(
            2,
            2,
            &[[1, 0, 0, 0], [0, 0, -1, 0], [0, 0, -1, 0], [1, 0, 0, 0]],
        )
        .scale(&CycloNum::exchange_prefactor());
        let last = ExactMatrix::from_int_coeffs(
            2,
            2,
            &[[0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]],
        );
        assert_eq!(rep.generator(1).unwrap(), &s_diag);
        assert_eq!(rep.generator(2).unwrap(), &mixer);
        assert_eq!(rep.generator(3).unwrap(), &last);

        // positive parity: middle generator conjugated by diag(1,−1) flips the
        // off-diagonal signs and lands on the wave-function matrix
        let rep = build_spinor_rep(2, Parity::Plus).unwrap();
        let z = ExactMatrix::from_int_coeffs(
            2,
            2,
            &[[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [-1, 0, 0, 0]],
        );
        let conj = z.mul(rep.generator(2).unwrap()).unwrap().mul(&z).unwrap();
        assert_eq!(conj, mixer);
        assert_eq!(rep.generator(1).unwrap(), &s_diag);
        assert_eq!(rep.generator(3).unwrap(), &s_diag);
    }

    #[test]
    fn generators_unitary_three_slots() {
        for parity in [Parity::Plus, Parity::Minus] {
            let rep = build_spinor_rep(3, parity).unwrap();
            for g in rep.generators() {
                assert!(g.is_unitary());
            }
        }
    }
}
