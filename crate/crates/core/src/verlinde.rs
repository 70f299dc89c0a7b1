//! Exact Verlinde sums on K₀ = {0, 6..17}, the ids whose S-rows are fully
//! known.
//!
//! N_{i,j}^k = Σ_s S_{i,s} S_{j,s} S_{s,k'} / S_{0,s}, using S^{-1}_{s,k} =
//! S_{s,k'} so no inverse matrix is ever formed. In the √18·S
//! normalization T this is (1/18)·Σ_s T_{i,s} T_{j,s} T_{s,k'} / T_{0,s}.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{ModuleId, TwistedParts};
use crate::cyclo::Cyclotomic;
use crate::fusion::{FusionVector, RuleFamily};
use crate::lattice::as_count;
use crate::notation::render_value;
use crate::smatrix::{is_known_id, known_ids, PartialSMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerlindeError {
    #[error("N({i},{j};{k}) needs S-cells outside the known mask")]
    NotComputable { i: u8, j: u8, k: u8 },
    #[error("N({i},{j};{k}) = {value} is not a nonnegative integer")]
    NonIntegral { i: u8, j: u8, k: u8, value: String },
    #[error("{i} ⊠ {j} has quantum-dimension mass {missing} outside K₀; refusing a partial product")]
    Escapes { i: u8, j: u8, missing: u64 },
}

/// Precomputed rows of √18·S for K₀ and the reciprocals of row 0.
#[derive(Clone, Debug)]
pub struct VerlindeEngine {
    rows: Vec<Option<Vec<Cyclotomic>>>,
    inv_unit_row: Vec<Cyclotomic>,
    eighteenth: BigRational,
}

impl VerlindeEngine {
    pub fn new(s: &PartialSMatrix) -> Self {
        let rows = ModuleId::all()
            .map(|i| s.scaled_row(i).map(|row| row.into_iter().cloned().collect()))
            .collect::<Vec<Option<Vec<Cyclotomic>>>>();
        let inv_unit_row = rows[0]
            .as_ref()
            .expect("row 0 is known")
            .iter()
            .map(|t| t.inverse().expect("S_{0,s} is nonzero"))
            .collect();
        VerlindeEngine { rows, inv_unit_row, eighteenth: BigRational::new(BigInt::from(1), BigInt::from(18)) }
    }

    fn row(&self, i: ModuleId) -> Option<&[Cyclotomic]> {
        self.rows[i.index()].as_deref()
    }

    /// Σ_s T_{i,s}T_{j,s}/T_{0,s}, the part of the sum shared by every k.
    fn pair_weights(&self, i: ModuleId, j: ModuleId, k: ModuleId) -> Result<Vec<Cyclotomic>, VerlindeError> {
        let missing = || VerlindeError::NotComputable { i: i.index() as u8, j: j.index() as u8, k: k.index() as u8 };
        let (ri, rj) = (self.row(i).ok_or_else(missing)?, self.row(j).ok_or_else(missing)?);
        Ok(ri.iter().zip(rj).zip(&self.inv_unit_row).map(|((a, b), u)| &(a * b) * u).collect())
    }

    fn finish(&self, weights: &[Cyclotomic], i: ModuleId, j: ModuleId, k: ModuleId) -> Result<u32, VerlindeError> {
        let row = self
            .row(k.dual())
            .ok_or(VerlindeError::NotComputable { i: i.index() as u8, j: j.index() as u8, k: k.index() as u8 })?;
        let sum: Cyclotomic = weights.iter().zip(row).map(|(w, t)| w * t).sum();
        let value = sum.scale(&self.eighteenth);
        as_count(&value).map(|n| n as u32).ok_or_else(|| VerlindeError::NonIntegral {
            i: i.index() as u8,
            j: j.index() as u8,
            k: k.index() as u8,
            value: render_value(&value),
        })
    }

    /// N_{i,j}^k for i, j, k ∈ K₀.
    pub fn fusion_coefficient(&self, i: ModuleId, j: ModuleId, k: ModuleId) -> Result<u32, VerlindeError> {
        let weights = self.pair_weights(i, j, k)?;
        self.finish(&weights, i, j, k)
    }

    /// N_{i,j}^k for every k ∈ K₀; other components are left at zero.
    pub fn restricted_product(&self, i: ModuleId, j: ModuleId) -> Result<FusionVector, VerlindeError> {
        let weights = self.pair_weights(i, j, ModuleId::VACUUM)?;
        let mut out = FusionVector::zero();
        for k in known_ids() {
            out.set(k, self.finish(&weights, i, j, k)?);
        }
        Ok(out)
    }

    /// The full product i ⊠ j, provided every summand lies in K₀. Checked
    /// by quantum dimension: anything else would silently drop summands.
    pub fn complete_product(&self, i: ModuleId, j: ModuleId) -> Result<FusionVector, VerlindeError> {
        let v = self.restricted_product(i, j)?;
        let expected = i.qdim() as u64 * j.qdim() as u64;
        let found = v.qdim_total();
        if found != expected {
            return Err(VerlindeError::Escapes { i: i.index() as u8, j: j.index() as u8, missing: expected - found });
        }
        Ok(v)
    }
}

/// All 13×13 restricted products on K₀.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedBlock {
    products: Vec<(ModuleId, ModuleId, FusionVector)>,
}

impl TwistedBlock {
    pub fn get(&self, i: ModuleId, j: ModuleId) -> Option<&FusionVector> {
        self.products.iter().find(|(a, b, _)| *a == i && *b == j).map(|(_, _, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (ModuleId, ModuleId, &FusionVector)> {
        self.products.iter().map(|(a, b, v)| (*a, *b, v))
    }

    /// Number of coefficients, 13³.
    pub fn coefficient_count(&self) -> usize {
        self.products.len() * known_ids().count()
    }

    pub fn max_coefficient(&self) -> u32 {
        self.iter().flat_map(|(_, _, v)| known_ids().map(move |k| v.get(k))).max().unwrap_or(0)
    }
}

pub fn twisted_block_table(engine: &VerlindeEngine) -> Result<TwistedBlock, VerlindeError> {
    let mut products = Vec::new();
    for i in known_ids() {
        for j in known_ids() {
            products.push((i, j, engine.restricted_product(i, j)?));
        }
    }
    Ok(TwistedBlock { products })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityViolation {
    pub i: u8,
    pub j: u8,
    pub value: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub pairs: usize,
    pub violations: Vec<DualityViolation>,
}

impl DualityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// N_{i,j}^0 = δ_{j,i'} on K₀.
pub fn duality_check(engine: &VerlindeEngine) -> Result<DualityReport, VerlindeError> {
    let mut report = DualityReport { pairs: 0, violations: Vec::new() };
    for i in known_ids() {
        for j in known_ids() {
            let value = engine.fusion_coefficient(i, j, ModuleId::VACUUM)?;
            report.pairs += 1;
            if value != u32::from(j == i.dual()) {
                report.violations.push(DualityViolation { i: i.index() as u8, j: j.index() as u8, value });
            }
        }
    }
    Ok(report)
}

/// Right-hand sides of the three same-power twisted products exactly as
/// printed, for power `i` and superscripts `k` (left) and `l` (right):
///
/// - 4.4-3: W_{σ^i,1}^k ⊠ W_{σ^i,1}^l = ⊕_m W_{σ^{3-i},1}^m ⊕ W_{σ^{3-i},2}^{-i(k+l)}
/// - 4.4-4: W_{σ^i,2}^k ⊠ W_{σ^i,2}^l = ⊕_m W_{σ^{3-i},1}^m ⊕ W_{σ^{3-i},2}^{1+i(k+l)}
/// - 4.4-5: W_{σ^i,1}^k ⊠ W_{σ^i,2}^l = ⊕_{k} W_{σ^{3-i},2}^k ⊕ W_{σ^{3-i},2}^{i(l-k)}
///
/// The last one rebinds k inside the sum; the trailing superscript is read
/// with the outer k.
pub fn printed_twisted_rule(family: RuleFamily, i: u8, k: i64, l: i64) -> Option<(ModuleId, ModuleId, FusionVector)> {
    let (p, o) = (i, 3 - i);
    let ik = i as i64;
    let mut v = FusionVector::zero();
    let (left, right) = match family {
        RuleFamily::F4_4_3 => {
            (0..3).for_each(|m| v.add(TwistedParts::id(o, 1, m), 1));
            v.add(TwistedParts::id(o, 2, -ik * (k + l)), 1);
            (TwistedParts::id(p, 1, k), TwistedParts::id(p, 1, l))
        }
        RuleFamily::F4_4_4 => {
            (0..3).for_each(|m| v.add(TwistedParts::id(o, 1, m), 1));
            v.add(TwistedParts::id(o, 2, 1 + ik * (k + l)), 1);
            (TwistedParts::id(p, 2, k), TwistedParts::id(p, 2, l))
        }
        RuleFamily::F4_4_5 => {
            (0..3).for_each(|m| v.add(TwistedParts::id(o, 2, m), 1));
            v.add(TwistedParts::id(o, 2, ik * (l - k)), 1);
            (TwistedParts::id(p, 1, k), TwistedParts::id(p, 2, l))
        }
        _ => return None,
    };
    Some((left, right, v))
}

/// One (i, k, l) instance of a printed twisted rule against Verlinde.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleInstance {
    pub family: String,
    pub power: u8,
    pub k: u8,
    pub l: u8,
    pub left: u8,
    pub right: u8,
    pub printed: String,
    pub verlinde: String,
    pub matches: bool,
}

/// Compares every instance of `family` (4.4-3, 4.4-4 or 4.4-5) with the
/// Verlinde product.
pub fn compare_printed_rule(engine: &VerlindeEngine, family: RuleFamily) -> Result<Vec<RuleInstance>, VerlindeError> {
    let mut out = Vec::new();
    for i in 1..=2u8 {
        for k in 0..3u8 {
            for l in 0..3u8 {
                let Some((a, b, printed)) = printed_twisted_rule(family, i, k as i64, l as i64) else {
                    return Ok(out);
                };
                let computed = engine.complete_product(a, b)?;
                out.push(RuleInstance {
                    family: family.tag().to_string(),
                    power: i,
                    k,
                    l,
                    left: a.index() as u8,
                    right: b.index() as u8,
                    printed: printed.to_string(),
                    verlinde: computed.to_string(),
                    matches: printed == computed,
                });
            }
        }
    }
    Ok(out)
}

/// Whether `i ⊠ j` lands entirely in K₀ by the catalog's sector data: both
/// factors in K₀ and not oppositely twisted.
pub fn is_closed_pair(i: ModuleId, j: ModuleId) -> bool {
    if !is_known_id(i) || !is_known_id(j) {
        return false;
    }
    match (i.twisted_parts(), j.twisted_parts()) {
        (Some(a), Some(b)) => a.power == b.power,
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smatrix::build_partial_s;
    use std::sync::OnceLock;

    fn engine() -> &'static VerlindeEngine {
        static E: OnceLock<VerlindeEngine> = OnceLock::new();
        E.get_or_init(|| VerlindeEngine::new(&build_partial_s().unwrap()))
    }

    fn id(i: u8) -> ModuleId {
        ModuleId::of(i)
    }

    #[test]
    fn examples() {
        let e = engine();
        assert_eq!(e.fusion_coefficient(id(6), id(6), id(12)), Ok(1));
        assert_eq!(e.fusion_coefficient(id(6), id(6), id(9)), Ok(0));
        assert_eq!(e.fusion_coefficient(id(6), id(12), id(0)), Ok(1));
        assert_eq!(e.fusion_coefficient(id(0), id(0), id(0)), Ok(1));
    }

    #[test]
    fn outside_k0_is_refused() {
        let e = engine();
        assert_eq!(e.fusion_coefficient(id(3), id(6), id(6)), Err(VerlindeError::NotComputable { i: 3, j: 6, k: 6 }));
        assert_eq!(e.fusion_coefficient(id(6), id(6), id(19)), Err(VerlindeError::NotComputable { i: 6, j: 6, k: 19 }));
    }

    #[test]
    fn same_power_products() {
        let e = engine();
        let ones = |v: &FusionVector| v.support().map(|k| k.index()).collect::<Vec<_>>();
        assert_eq!(ones(&e.complete_product(id(6), id(6)).unwrap()), [12, 13, 14, 15]);
        assert_eq!(ones(&e.complete_product(id(9), id(9)).unwrap()), [12, 13, 14, 16]);
        assert_eq!(ones(&e.complete_product(id(0), id(6)).unwrap()), [6]);
    }

    #[test]
    fn opposite_powers_escape() {
        let e = engine();
        assert!(matches!(e.complete_product(id(6), id(12)), Err(VerlindeError::Escapes { i: 6, j: 12, missing: 15 })));
        assert!(!is_closed_pair(id(6), id(12)));
        assert!(is_closed_pair(id(6), id(7)));
    }

    #[test]
    fn block_is_small_integers() {
        let block = twisted_block_table(engine()).unwrap();
        assert_eq!(block.coefficient_count(), 2197);
        assert!(block.max_coefficient() <= 2);
        for (i, j, v) in block.iter() {
            assert_eq!(Some(v), block.get(j, i), "({i}, {j})");
            if is_closed_pair(i, j) {
                assert_eq!(v.qdim_total(), (i.qdim() * j.qdim()) as u64);
            }
        }
    }

    #[test]
    fn duality() {
        let report = duality_check(engine()).unwrap();
        assert_eq!(report.pairs, 169);
        assert!(report.passed(), "{:?}", report.violations);
    }

    #[test]
    fn printed_rules_hold_for_second_power() {
        for family in [RuleFamily::F4_4_3, RuleFamily::F4_4_4] {
            let instances = compare_printed_rule(engine(), family).unwrap();
            assert_eq!(instances.len(), 18);
            assert!(instances.iter().filter(|r| r.power == 2).all(|r| r.matches));
            // For σ the printed sign of k + l is flipped; k + l ≡ 0 agrees.
            for r in instances.iter().filter(|r| r.power == 1) {
                assert_eq!(r.matches, (r.k + r.l) % 3 == 0, "{r:?}");
            }
        }
    }

    #[test]
    fn printed_mixed_rule_is_not_a_product() {
        let instances = compare_printed_rule(engine(), RuleFamily::F4_4_5).unwrap();
        assert!(instances.iter().all(|r| !r.matches));
    }
}
