//! Modular data of the rank-one even lattice VOA V_{Zγ}, (γ,γ) = 2k.
//!
//! The 2k irreducible modules are V_{Zγ+λ_j} with λ_j = (j/2k)γ, so
//! (λ_a, λ_b) = ab/2k. Fusion is addition of residues, the contragredient
//! of j is −j, and S_{a,b} = e^{−2πi·ab/2k}/√(2k).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::cyclo::{Cyclotomic, CycloError, CONDUCTOR};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("half norm must be at least 1")]
    InvalidHalfNorm,
    #[error("modular data for (γ,γ) = {two_k} does not live in Q(ζ_{CONDUCTOR})")]
    NotRepresentable { two_k: u32 },
    #[error("Verlinde sum N({a},{b};{c}) = {value} is not a nonnegative integer")]
    NonIntegral { a: u32, b: u32, c: u32, value: String },
}

/// V_{Zγ} with (γ,γ) = 2·half_norm.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LatticeData {
    half_norm: u32,
}

impl LatticeData {
    pub fn new(half_norm: u32) -> Result<Self, LatticeError> {
        if half_norm == 0 {
            return Err(LatticeError::InvalidHalfNorm);
        }
        Ok(LatticeData { half_norm })
    }

    pub fn half_norm(&self) -> u32 {
        self.half_norm
    }

    /// Number of irreducible modules, 2k.
    pub fn module_count(&self) -> u32 {
        2 * self.half_norm
    }

    pub fn labels(&self) -> impl Iterator<Item = CosetLabel> {
        let n = self.module_count();
        (0..n).map(CosetLabel)
    }

    pub fn label(&self, j: i64) -> CosetLabel {
        CosetLabel::new(j, self)
    }
}

/// Residue j mod 2k naming the coset Zγ + λ_j.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct CosetLabel(u32);

impl CosetLabel {
    pub fn new(j: i64, data: &LatticeData) -> Self {
        CosetLabel(j.rem_euclid(data.module_count() as i64) as u32)
    }

    pub fn residue(self) -> u32 {
        self.0
    }
}

/// Lowest conformal weight of V_{Zγ+λ_j}: min(j, 2k−j)²/4k.
pub fn coset_weight(data: &LatticeData, j: CosetLabel) -> BigRational {
    let n = data.module_count();
    let m = j.0.min(n - j.0) as i64;
    BigRational::new(BigInt::from(m * m), BigInt::from(4 * data.half_norm as i64))
}

pub fn lattice_fusion(data: &LatticeData, a: CosetLabel, b: CosetLabel) -> CosetLabel {
    CosetLabel::new(a.0 as i64 + b.0 as i64, data)
}

pub fn contragredient(data: &LatticeData, a: CosetLabel) -> CosetLabel {
    CosetLabel::new(-(a.0 as i64), data)
}

fn check_supported(data: &LatticeData) -> Result<Cyclotomic, LatticeError> {
    let two_k = data.module_count();
    let unsupported = LatticeError::NotRepresentable { two_k };
    if !CONDUCTOR.is_multiple_of(two_k) {
        return Err(unsupported);
    }
    Cyclotomic::sqrt_rational(two_k as u64).map_err(|_| unsupported)
}

/// S_{a,b} = e^{−2πi·ab/2k}/√(2k), exact.
pub fn lattice_s_entry(data: &LatticeData, a: CosetLabel, b: CosetLabel) -> Result<Cyclotomic, LatticeError> {
    let root = check_supported(data)?;
    s_entry_with_root(data, &root.inverse().expect("√2k is nonzero"), a, b)
}

fn s_entry_with_root(
    data: &LatticeData,
    inv_root: &Cyclotomic,
    a: CosetLabel,
    b: CosetLabel,
) -> Result<Cyclotomic, LatticeError> {
    let n = data.module_count();
    let phase = Cyclotomic::root_of_unity(n, -((a.0 as i64) * (b.0 as i64)))
        .map_err(|_: CycloError| LatticeError::NotRepresentable { two_k: n })?;
    Ok(inv_root * &phase)
}

/// The full 2k×2k lattice S-matrix. Verlinde sums run over the phases
/// √(2k)·S, which are bare roots of unity: since S_{0,s} = 1/√(2k),
/// N_{a,b}^c = (1/2k)·Σ_s φ_{a,s} φ_{b,s} φ_{s,−c}.
#[derive(Clone, Debug)]
pub struct LatticeSMatrix {
    data: LatticeData,
    entries: Vec<Vec<Cyclotomic>>,
    phases: Vec<Vec<Cyclotomic>>,
    inv_count: BigRational,
}

impl LatticeSMatrix {
    pub fn new(data: LatticeData) -> Result<Self, LatticeError> {
        let root = check_supported(&data)?;
        let inv_root = root.inverse().expect("√2k is nonzero");
        let n = data.module_count();
        let phases = data
            .labels()
            .map(|a| {
                data.labels()
                    .map(|b| {
                        Cyclotomic::root_of_unity(n, -((a.0 as i64) * (b.0 as i64)))
                            .map_err(|_: CycloError| LatticeError::NotRepresentable { two_k: n })
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<_>>, _>>()?;
        let entries = phases.iter().map(|row| row.iter().map(|p| p * &inv_root).collect()).collect();
        let inv_count = BigRational::new(BigInt::from(1), BigInt::from(n));
        Ok(LatticeSMatrix { data, entries, phases, inv_count })
    }

    /// √(2k)·S_{a,b} = e^{−2πi·ab/2k}.
    pub fn phase(&self, a: CosetLabel, b: CosetLabel) -> &Cyclotomic {
        &self.phases[a.0 as usize][b.0 as usize]
    }

    fn count(&self, a: CosetLabel, b: CosetLabel, c: CosetLabel, sum: Cyclotomic) -> Result<u64, LatticeError> {
        let value = sum.scale(&self.inv_count);
        as_count(&value).ok_or_else(|| LatticeError::NonIntegral { a: a.0, b: b.0, c: c.0, value: value.to_string() })
    }

    pub fn data(&self) -> &LatticeData {
        &self.data
    }

    pub fn entry(&self, a: CosetLabel, b: CosetLabel) -> &Cyclotomic {
        &self.entries[a.0 as usize][b.0 as usize]
    }

    /// N_{a,b}^c = Σ_s S_{a,s} S_{b,s} S_{s,−c} / S_{0,s}.
    pub fn verlinde(&self, a: CosetLabel, b: CosetLabel, c: CosetLabel) -> Result<u64, LatticeError> {
        let dual_c = contragredient(&self.data, c);
        let sum: Cyclotomic =
            self.data.labels().map(|s| &(self.phase(a, s) * self.phase(b, s)) * self.phase(s, dual_c)).sum();
        self.count(a, b, c, sum)
    }

    /// N_{a,b}^c for every c, sharing the c-independent factors.
    pub fn fusion_row(&self, a: CosetLabel, b: CosetLabel) -> Result<Vec<u64>, LatticeError> {
        let weights: Vec<Cyclotomic> = self.data.labels().map(|s| self.phase(a, s) * self.phase(b, s)).collect();
        self.data
            .labels()
            .map(|c| {
                let dual_c = contragredient(&self.data, c);
                let sum: Cyclotomic = self.data.labels().map(|s| &weights[s.0 as usize] * self.phase(s, dual_c)).sum();
                self.count(a, b, c, sum)
            })
            .collect()
    }

    /// (S²)_{a,b}.
    pub fn square_entry(&self, a: CosetLabel, b: CosetLabel) -> Cyclotomic {
        let sum: Cyclotomic = self.data.labels().map(|s| self.phase(a, s) * self.phase(s, b)).sum();
        sum.scale(&self.inv_count)
    }
}

/// A nonnegative integer value, if `x` is one.
pub(crate) fn as_count(x: &Cyclotomic) -> Option<u64> {
    let r = x.as_rational()?;
    (r.is_integer() && !r.is_negative()).then(|| r.to_integer().to_u64()).flatten()
}

/// Verlinde fusion coefficient for the lattice theory.
pub fn verlinde_lattice(data: &LatticeData, a: CosetLabel, b: CosetLabel, c: CosetLabel) -> Result<u64, LatticeError> {
    LatticeSMatrix::new(*data)?.verlinde(a, b, c)
}

/// A triple where the Verlinde sum disagrees with residue addition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionWitness {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub value: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionOracleReport {
    pub two_k: u32,
    pub triples: usize,
    pub witnesses: Vec<FusionWitness>,
}

impl FusionOracleReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Checks verlinde(a, b, c) = [c ≡ a + b] over all triples.
pub fn verify_lattice_fusion(data: &LatticeData) -> Result<FusionOracleReport, LatticeError> {
    let s = LatticeSMatrix::new(*data)?;
    let mut report = FusionOracleReport { two_k: data.module_count(), triples: 0, witnesses: Vec::new() };
    for a in data.labels() {
        for b in data.labels() {
            let row = s.fusion_row(a, b)?;
            let sum = lattice_fusion(data, a, b);
            for c in data.labels() {
                report.triples += 1;
                let value = row[c.0 as usize];
                if value != u64::from(c == sum) {
                    report.witnesses.push(FusionWitness { a: a.0, b: b.0, c: c.0, value });
                }
            }
        }
    }
    Ok(report)
}

/// An entry of S² that differs from the charge-conjugation matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareWitness {
    pub a: u32,
    pub b: u32,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SSquaredReport {
    pub two_k: u32,
    pub cells: usize,
    pub witnesses: Vec<SquareWitness>,
}

impl SSquaredReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Checks (S²)_{a,b} = [b ≡ −a] over all pairs.
pub fn verify_s_squared(data: &LatticeData) -> Result<SSquaredReport, LatticeError> {
    let s = LatticeSMatrix::new(*data)?;
    let mut witnesses = Vec::new();
    let mut cells = 0;
    for a in data.labels() {
        for b in data.labels() {
            cells += 1;
            let value = s.square_entry(a, b);
            let expected = if b == contragredient(data, a) { Cyclotomic::one() } else { Cyclotomic::zero() };
            if value != expected {
                witnesses.push(SquareWitness { a: a.0, b: b.0, value: value.to_string() });
            }
        }
    }
    Ok(SSquaredReport { two_k: data.module_count(), cells, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn nine() -> LatticeData {
        LatticeData::new(9).unwrap()
    }

    #[test]
    fn rejects_zero_half_norm() {
        assert_eq!(LatticeData::new(0), Err(LatticeError::InvalidHalfNorm));
    }

    #[test]
    fn labels_reduce() {
        let d = nine();
        assert_eq!(d.label(-1).residue(), 17);
        assert_eq!(d.label(36).residue(), 0);
        assert_eq!(d.labels().count(), 18);
    }

    #[test]
    fn weights() {
        let d = nine();
        let w = |j| coset_weight(&d, d.label(j));
        assert_eq!(w(1), BigRational::new(1.into(), 36.into()));
        assert_eq!(w(13), BigRational::new(25.into(), 36.into()));
        assert!(w(0).is_zero());
        assert_eq!(w(9), BigRational::new(9.into(), 4.into()));
    }

    #[test]
    fn s_entries() {
        let d = nine();
        let inv_sqrt18 = Cyclotomic::sqrt_rational(18).unwrap().inverse().unwrap();
        assert_eq!(lattice_s_entry(&d, d.label(0), d.label(0)).unwrap(), inv_sqrt18);
        let e = lattice_s_entry(&d, d.label(1), d.label(1)).unwrap();
        assert_eq!(e, &inv_sqrt18 * &Cyclotomic::root_of_unity(18, -1).unwrap());
        assert_eq!(lattice_s_entry(&d, d.label(1), d.label(9)).unwrap(), -&inv_sqrt18);
    }

    #[test]
    fn unsupported_lattices() {
        for k in [3u32, 5, 8] {
            let d = LatticeData::new(k).unwrap();
            assert_eq!(
                lattice_s_entry(&d, d.label(0), d.label(0)),
                Err(LatticeError::NotRepresentable { two_k: 2 * k })
            );
        }
    }

    #[test]
    fn fusion_is_addition() {
        let d = nine();
        assert_eq!(lattice_fusion(&d, d.label(6), d.label(1)).residue(), 7);
        assert_eq!(lattice_fusion(&d, d.label(6), d.label(17)).residue(), 5);
        for j in 0..18 {
            assert_eq!(lattice_fusion(&d, d.label(0), d.label(j)).residue(), j as u32);
        }
    }

    #[test]
    fn verlinde_examples() {
        let d = nine();
        assert_eq!(verlinde_lattice(&d, d.label(1), d.label(6), d.label(7)), Ok(1));
        assert_eq!(verlinde_lattice(&d, d.label(1), d.label(6), d.label(8)), Ok(0));
        let d1 = LatticeData::new(1).unwrap();
        assert_eq!(verlinde_lattice(&d1, d1.label(1), d1.label(1), d1.label(0)), Ok(1));
    }

    #[test]
    fn verlinde_is_residue_addition() {
        for k in [1, 2, 9] {
            let report = verify_lattice_fusion(&LatticeData::new(k).unwrap()).unwrap();
            assert_eq!(report.triples, (8 * k * k * k) as usize);
            assert!(report.passed(), "k = {k}: {:?}", report.witnesses);
        }
    }

    #[test]
    fn fusion_row_matches_single_coefficients() {
        let d = nine();
        let s = LatticeSMatrix::new(d).unwrap();
        let row = s.fusion_row(d.label(5), d.label(16)).unwrap();
        for c in d.labels() {
            assert_eq!(row[c.residue() as usize], s.verlinde(d.label(5), d.label(16), c).unwrap());
        }
    }

    #[test]
    fn s_squared_is_charge_conjugation() {
        for k in [1, 2, 9] {
            let report = verify_s_squared(&LatticeData::new(k).unwrap()).unwrap();
            assert!(report.passed(), "k = {k}: {:?}", report.witnesses);
            assert_eq!(report.cells, (4 * k * k) as usize);
        }
    }

    #[test]
    fn symmetric_with_constant_unit_row() {
        let d = nine();
        let s = LatticeSMatrix::new(d).unwrap();
        let first = s.entry(d.label(0), d.label(0)).clone();
        for a in d.labels() {
            assert_eq!(s.entry(d.label(0), a), &first);
            for b in d.labels() {
                assert_eq!(s.entry(a, b), s.entry(b, a));
            }
        }
    }
}
