//! The fusion ring of the 21 modules as closed-form rule families, plus the
//! ring-theoretic sweeps that certify it.
//!
//! Superscripts are residues mod 3 throughout. Modules are grouped as
//!
//! - U^i = (V_Zβ^+)^i, ids 0..=2
//! - M = V_Zβ^-, id 3
//! - T_r = V_{Zβ+rβ/8}, r = 1, 3, ids 4, 5
//! - W_{p,t}^s, twisted, ids 6..=17
//! - Q^i = V_{Zβ+β/4}^i, ids 18..=20

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::catalog::{ModuleId, TwistedParts};
use crate::smatrix::known_ids;
use crate::verlinde::{VerlindeEngine, VerlindeError};

const N: usize = ModuleId::COUNT;

/// N_{i,j}^k for fixed i, j, indexed by k.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FusionVector([u32; N]);

impl FusionVector {
    pub fn zero() -> Self {
        FusionVector([0; N])
    }

    pub fn unit(k: ModuleId) -> Self {
        let mut v = Self::zero();
        v.0[k.index()] = 1;
        v
    }

    pub fn get(&self, k: ModuleId) -> u32 {
        self.0[k.index()]
    }

    pub fn set(&mut self, k: ModuleId, n: u32) {
        self.0[k.index()] = n;
    }

    pub fn add(&mut self, k: ModuleId, n: u32) {
        self.0[k.index()] += n;
    }

    pub fn as_array(&self) -> &[u32; N] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = (ModuleId, u32)> + '_ {
        ModuleId::all().map(|k| (k, self.0[k.index()]))
    }

    /// Ids with nonzero multiplicity, ascending.
    pub fn support(&self) -> impl Iterator<Item = ModuleId> + '_ {
        self.iter().filter(|&(_, n)| n > 0).map(|(k, _)| k)
    }

    /// Σ_k N^k·qdim(k).
    pub fn qdim_total(&self) -> u64 {
        self.iter().map(|(k, n)| n as u64 * k.qdim() as u64).sum()
    }

    fn render(&self, name: impl Fn(ModuleId) -> String, times: &str, zero: &str) -> String {
        let terms: Vec<String> = self
            .iter()
            .filter(|&(_, n)| n > 0)
            .map(|(k, n)| if n == 1 { name(k) } else { format!("{n}{times}{}", name(k)) })
            .collect();
        if terms.is_empty() {
            zero.to_string()
        } else {
            terms.join(" + ")
        }
    }

    pub fn to_latex(&self) -> String {
        self.render(|k| k.entry().latex.to_string(), "", "0").replace(" + ", r" \oplus ")
    }

    /// Unicode labels, e.g. `W_{σ²,1}^0 + 2·V_Zβ^-`.
    pub fn to_label_string(&self) -> String {
        self.render(|k| k.entry().label.to_string(), "·", "0")
    }
}

/// ASCII names joined by ` + `, e.g. `V+0 + V+1 + V+2 + 2·V-`.
impl fmt::Display for FusionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|k| k.name().to_string(), "·", "0"))
    }
}

impl Serialize for FusionVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

/// The 20 printed equation families.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RuleFamily {
    F1_1,
    F1_2,
    F1_3,
    F1_4,
    F1_6_1,
    F2_2,
    F2_3,
    F2_4,
    F2_6,
    F3_3,
    F3_4,
    F3_6,
    F6_6_1,
    F6_6_2,
    F4_4_1,
    F4_4_2,
    F4_4_3,
    F4_4_4,
    F4_4_5,
    F4_6,
}

impl RuleFamily {
    pub const ALL: [RuleFamily; 20] = [
        RuleFamily::F1_1,
        RuleFamily::F1_2,
        RuleFamily::F1_3,
        RuleFamily::F1_4,
        RuleFamily::F1_6_1,
        RuleFamily::F2_2,
        RuleFamily::F2_3,
        RuleFamily::F2_4,
        RuleFamily::F2_6,
        RuleFamily::F3_3,
        RuleFamily::F3_4,
        RuleFamily::F3_6,
        RuleFamily::F6_6_1,
        RuleFamily::F6_6_2,
        RuleFamily::F4_4_1,
        RuleFamily::F4_4_2,
        RuleFamily::F4_4_3,
        RuleFamily::F4_4_4,
        RuleFamily::F4_4_5,
        RuleFamily::F4_6,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            RuleFamily::F1_1 => "1.1",
            RuleFamily::F1_2 => "1.2",
            RuleFamily::F1_3 => "1.3",
            RuleFamily::F1_4 => "1.4",
            RuleFamily::F1_6_1 => "1.6-1",
            RuleFamily::F2_2 => "2.2",
            RuleFamily::F2_3 => "2.3",
            RuleFamily::F2_4 => "2.4",
            RuleFamily::F2_6 => "2.6",
            RuleFamily::F3_3 => "3.3",
            RuleFamily::F3_4 => "3.4",
            RuleFamily::F3_6 => "3.6",
            RuleFamily::F6_6_1 => "6.6-1",
            RuleFamily::F6_6_2 => "6.6-2",
            RuleFamily::F4_4_1 => "4.4-1",
            RuleFamily::F4_4_2 => "4.4-2",
            RuleFamily::F4_4_3 => "4.4-3",
            RuleFamily::F4_4_4 => "4.4-4",
            RuleFamily::F4_4_5 => "4.4-5",
            RuleFamily::F4_6 => "4.6",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// The family whose equation covers the unordered pair {i, j}.
    pub fn classify(i: ModuleId, j: ModuleId) -> RuleFamily {
        let (a, b) = canonical(i, j);
        family_of(a, b)
    }
}

impl fmt::Display for RuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Copy, Clone, Debug)]
enum Kind {
    U(i64),
    Q(i64),
    M,
    T(u8),
    W(TwistedParts),
}

impl Kind {
    fn of(id: ModuleId) -> Kind {
        match id.index() {
            i @ 0..=2 => Kind::U(i as i64),
            3 => Kind::M,
            4 => Kind::T(1),
            5 => Kind::T(3),
            i @ 18..=20 => Kind::Q(i as i64 - 18),
            _ => Kind::W(id.twisted_parts().expect("ids 6..=17 are twisted")),
        }
    }

    fn rank(self) -> u8 {
        match self {
            Kind::U(_) => 0,
            Kind::Q(_) => 1,
            Kind::M => 2,
            Kind::T(_) => 3,
            Kind::W(_) => 4,
        }
    }
}

/// Orders a pair so the family match below only sees one orientation:
/// lower rank first; among twisted modules σ before σ², then type 1
/// before type 2.
fn canonical(i: ModuleId, j: ModuleId) -> (Kind, Kind) {
    let (a, b) = (Kind::of(i), Kind::of(j));
    let swap = match (a, b) {
        (Kind::W(x), Kind::W(y)) => (x.power, x.kind) > (y.power, y.kind),
        _ => a.rank() > b.rank(),
    };
    if swap {
        (b, a)
    } else {
        (a, b)
    }
}

fn family_of(a: Kind, b: Kind) -> RuleFamily {
    use Kind::*;
    match (a, b) {
        (U(_), U(_)) => RuleFamily::F1_1,
        (U(_), Q(_)) => RuleFamily::F1_2,
        (U(_), M) => RuleFamily::F1_3,
        (U(_), W(_)) => RuleFamily::F1_4,
        (U(_), T(_)) => RuleFamily::F1_6_1,
        (Q(_), Q(_)) => RuleFamily::F2_2,
        (Q(_), M) => RuleFamily::F2_3,
        (Q(_), W(_)) => RuleFamily::F2_4,
        (Q(_), T(_)) => RuleFamily::F2_6,
        (M, M) => RuleFamily::F3_3,
        (M, W(_)) => RuleFamily::F3_4,
        (M, T(_)) => RuleFamily::F3_6,
        (T(r), T(s)) if r == s => RuleFamily::F6_6_1,
        (T(_), T(_)) => RuleFamily::F6_6_2,
        (T(_), W(_)) => RuleFamily::F4_6,
        (W(x), W(y)) if x.power != y.power => {
            if x.kind == y.kind {
                RuleFamily::F4_4_1
            } else {
                RuleFamily::F4_4_2
            }
        }
        (W(x), W(y)) => match (x.kind, y.kind) {
            (1, 1) => RuleFamily::F4_4_3,
            (2, 2) => RuleFamily::F4_4_4,
            _ => RuleFamily::F4_4_5,
        },
        _ => unreachable!("canonical order"),
    }
}

fn u(i: i64) -> ModuleId {
    ModuleId::of(i.rem_euclid(3) as u8)
}

fn q(i: i64) -> ModuleId {
    ModuleId::of(18 + i.rem_euclid(3) as u8)
}

const M_ID: ModuleId = ModuleId::of(3);
const T1: ModuleId = ModuleId::of(4);
const T3: ModuleId = ModuleId::of(5);

fn w(power: u8, kind: u8, sup: i64) -> ModuleId {
    TwistedParts::id(power, kind, sup)
}

fn sum(terms: &[(ModuleId, u32)]) -> FusionVector {
    let mut v = FusionVector::zero();
    for &(k, n) in terms {
        v.add(k, n);
    }
    v
}

fn orbit(power: u8, kind: u8) -> [(ModuleId, u32); 3] {
    [0, 1, 2].map(|s| (w(power, kind, s), 1))
}

/// The product i ⊠ j from the closed-form families.
///
/// Three families are encoded in their arbitrated form rather than as
/// printed. With o = 3 − p the opposite power:
///
/// - 4.4-3: W_{p,1}^k ⊠ W_{p,1}^l ∋ W_{o,2}^{k+l}
/// - 4.4-4: W_{p,2}^k ⊠ W_{p,2}^l ∋ W_{o,2}^{1−k−l}
/// - 4.4-5: W_{p,1}^k ⊠ W_{p,2}^l = ⊕_m W_{o,2}^m ⊕ W_{o,1}^{l−k}
///
/// These agree with the printed equations for p = 2 (and 4.4-3/4.4-4 for
/// p = 1 when k + l ≡ 0) and are what the Verlinde sums give.
pub fn fuse(i: ModuleId, j: ModuleId) -> FusionVector {
    use Kind::*;
    let (a, b) = canonical(i, j);
    match (a, b) {
        (U(x), U(y)) => FusionVector::unit(u(x + y)),
        (U(x), Q(y)) => FusionVector::unit(q(x + y)),
        (U(_), M) => FusionVector::unit(M_ID),
        (U(x), W(t)) => {
            let sup = t.sup as i64;
            let sup = if t.kind == t.power { sup - x } else { sup + x };
            FusionVector::unit(w(t.power, t.kind, sup))
        }
        (U(_), T(r)) => FusionVector::unit(if r == 1 { T1 } else { T3 }),
        (Q(x), Q(y)) => sum(&[(M_ID, 1), (u(x + y), 1)]),
        (Q(_), M) => sum(&[(q(0), 1), (q(1), 1), (q(2), 1)]),
        (Q(x), W(t)) => {
            let (p, l) = (t.power, t.sup as i64);
            if t.kind == 3 - p {
                sum(&[(w(p, p, 2 * l - x), 1), (w(p, p, 2 * l - x + 1), 1)])
            } else {
                sum(&[(w(p, 3 - p, x - l), 1), (w(p, 3 - p, x - l + 1), 1)])
            }
        }
        (Q(_), T(_)) => sum(&[(T1, 1), (T3, 1)]),
        (M, M) => sum(&[(u(0), 1), (u(1), 1), (u(2), 1), (M_ID, 2)]),
        (M, W(t)) => sum(&orbit(t.power, t.kind)),
        (M, T(1)) => sum(&[(T1, 1), (T3, 2)]),
        (M, T(_)) => sum(&[(T1, 2), (T3, 1)]),
        (T(r), T(s)) => {
            let mut v = sum(&[(q(0), 1), (q(1), 1), (q(2), 1), (T1, 2), (T3, 2)]);
            if r == s {
                [u(0), u(1), u(2), M_ID].into_iter().for_each(|k| v.add(k, 1));
            } else {
                v.add(M_ID, 2);
            }
            v
        }
        (T(_), W(t)) => {
            let mut v = sum(&orbit(t.power, 1));
            orbit(t.power, 2).into_iter().for_each(|(k, n)| v.add(k, n));
            v
        }
        (W(x), W(y)) if x.power != y.power => {
            // x is the σ factor W_{σ,r}^k, y the σ² factor with superscript l.
            let (r, k, l) = (x.kind as i64, x.sup as i64, y.sup as i64);
            if x.kind == y.kind {
                sum(&[(u(r * (l - k)), 1), (M_ID, 1), (T1, 1), (T3, 1)])
            } else {
                sum(&[(q(r * (-k - l)), 1), (q(r * (-k - l + 1)), 1), (T1, 1), (T3, 1)])
            }
        }
        (W(x), W(y)) => {
            let (o, k, l) = (3 - x.power, x.sup as i64, y.sup as i64);
            match (x.kind, y.kind) {
                (1, 1) => {
                    let mut v = sum(&orbit(o, 1));
                    v.add(w(o, 2, k + l), 1);
                    v
                }
                (2, 2) => {
                    let mut v = sum(&orbit(o, 1));
                    v.add(w(o, 2, 1 - k - l), 1);
                    v
                }
                _ => {
                    let mut v = sum(&orbit(o, 2));
                    v.add(w(o, 1, l - k), 1);
                    v
                }
            }
        }
        _ => unreachable!("canonical order"),
    }
}

pub fn n_coeff(i: ModuleId, j: ModuleId, k: ModuleId) -> u32 {
    fuse(i, j).get(k)
}

/// The whole 21×21 table, row-major.
#[derive(Clone, Debug)]
pub struct FusionTable {
    products: Vec<FusionVector>,
}

impl FusionTable {
    pub fn new() -> Self {
        let products = ModuleId::all().flat_map(|i| ModuleId::all().map(move |j| fuse(i, j))).collect();
        FusionTable { products }
    }

    pub fn product(&self, i: ModuleId, j: ModuleId) -> &FusionVector {
        &self.products[i.index() * N + j.index()]
    }

    pub fn n(&self, i: ModuleId, j: ModuleId, k: ModuleId) -> u32 {
        self.product(i, j).get(k)
    }
}

impl Default for FusionTable {
    fn default() -> Self {
        Self::new()
    }
}

/// One axiom sweep: how many cases were checked, and the failing index
/// tuples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomSweep {
    pub axiom: &'static str,
    pub cases: usize,
    pub violations: Vec<Vec<u8>>,
}

impl AxiomSweep {
    fn new(axiom: &'static str) -> Self {
        AxiomSweep { axiom, cases: 0, violations: Vec::new() }
    }

    fn record(&mut self, ok: bool, indices: &[ModuleId]) {
        self.cases += 1;
        if !ok {
            self.violations.push(indices.iter().map(|k| k.index() as u8).collect());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Commutativity, unit, duality symmetry, associativity and
/// N_{i,j}^0 = δ_{j,i'}, in that order.
pub fn verify_ring_axioms() -> Vec<AxiomSweep> {
    verify_ring_axioms_of(&FusionTable::new())
}

pub fn verify_ring_axioms_of(t: &FusionTable) -> Vec<AxiomSweep> {
    let ids = || ModuleId::all();
    let v = ModuleId::VACUUM;

    let mut comm = AxiomSweep::new("commutativity");
    for i in ids() {
        for j in ids() {
            comm.record(t.product(i, j) == t.product(j, i), &[i, j]);
        }
    }

    let mut unit = AxiomSweep::new("unit");
    for j in ids() {
        unit.record(*t.product(v, j) == FusionVector::unit(j), &[j]);
    }

    let mut duality = AxiomSweep::new("duality-symmetry");
    for i in ids() {
        for j in ids() {
            for k in ids() {
                duality.record(t.n(i, j, k) == t.n(i, k.dual(), j.dual()), &[i, j, k]);
            }
        }
    }

    let mut assoc = AxiomSweep::new("associativity");
    for i in ids() {
        for j in ids() {
            let ij = t.product(i, j);
            for k in ids() {
                let jk = t.product(j, k);
                for l in ids() {
                    let lhs: u32 = ids().map(|m| ij.get(m) * t.n(m, k, l)).sum();
                    let rhs: u32 = ids().map(|m| jk.get(m) * t.n(i, m, l)).sum();
                    assoc.record(lhs == rhs, &[i, j, k, l]);
                }
            }
        }
    }

    let mut vacuum = AxiomSweep::new("vacuum-coefficient");
    for i in ids() {
        for j in ids() {
            vacuum.record(t.n(i, j, v) == u32::from(j == i.dual()), &[i, j]);
        }
    }

    vec![comm, unit, duality, assoc, vacuum]
}

/// Σ_k N_{i,j}^k·qdim(k) = qdim(i)·qdim(j) over all ordered pairs.
pub fn verify_qdim_homomorphism() -> AxiomSweep {
    let mut sweep = AxiomSweep::new("qdim-homomorphism");
    for i in ModuleId::all() {
        for j in ModuleId::all() {
            sweep.record(fuse(i, j).qdim_total() == i.qdim() as u64 * j.qdim() as u64, &[i, j]);
        }
    }
    sweep
}

/// How a qdim-1 module acts on the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleCurrent {
    pub id: u8,
    /// Image of each id, when every product is a single module.
    pub permutation: Option<Vec<u8>>,
    pub is_permutation: bool,
}

pub fn verify_simple_currents() -> Vec<SimpleCurrent> {
    ModuleId::all()
        .filter(|i| i.qdim() == 1)
        .map(|i| {
            let images: Option<Vec<u8>> = ModuleId::all()
                .map(|j| {
                    let v = fuse(i, j);
                    let mut support = v.support();
                    match (support.next(), support.next()) {
                        (Some(k), None) if v.get(k) == 1 => Some(k.index() as u8),
                        _ => None,
                    }
                })
                .collect();
            let is_permutation = images.as_ref().is_some_and(|p| {
                let mut sorted = p.clone();
                sorted.sort_unstable();
                sorted.iter().enumerate().all(|(n, &k)| n == k as usize)
            });
            SimpleCurrent { id: i.index() as u8, permutation: images, is_permutation }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerlindeMismatch {
    pub i: u8,
    pub j: u8,
    pub k: u8,
    pub table: u32,
    pub verlinde: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub triples: usize,
    pub mismatches: Vec<VerlindeMismatch>,
}

/// The table restricted to K₀³ against the Verlinde engine.
pub fn cross_check_verlinde(engine: &VerlindeEngine) -> Result<CrossCheck, VerlindeError> {
    let mut report = CrossCheck { triples: 0, mismatches: Vec::new() };
    for i in known_ids() {
        for j in known_ids() {
            let computed = engine.restricted_product(i, j)?;
            let table = fuse(i, j);
            for k in known_ids() {
                report.triples += 1;
                if computed.get(k) != table.get(k) {
                    report.mismatches.push(VerlindeMismatch {
                        i: i.index() as u8,
                        j: j.index() as u8,
                        k: k.index() as u8,
                        table: table.get(k),
                        verlinde: computed.get(k),
                    });
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualError {
    #[error("{id} has no k with N_{{{id},k}}^0 = 1")]
    NoDual { id: ModuleId },
    #[error("{id} has several candidate duals: {candidates:?}")]
    MultipleDuals { id: ModuleId, candidates: Vec<u8> },
}

/// The unique k with N_{i,k}^0 = 1.
pub fn dual_from_table(i: ModuleId) -> Result<ModuleId, DualError> {
    let candidates: Vec<ModuleId> = ModuleId::all().filter(|&k| n_coeff(i, k, ModuleId::VACUUM) == 1).collect();
    match candidates[..] {
        [k] => Ok(k),
        [] => Err(DualError::NoDual { id: i }),
        _ => Err(DualError::MultipleDuals { id: i, candidates: candidates.iter().map(|k| k.index() as u8).collect() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn id(i: u8) -> ModuleId {
        ModuleId::of(i)
    }

    #[test]
    fn printed_examples() {
        assert_eq!(fuse(id(3), id(3)).to_string(), "V+0 + V+1 + V+2 + 2·V-");
        assert_eq!(
            fuse(id(4), id(4)).to_string(),
            "V+0 + V+1 + V+2 + V- + 2·V1/8 + 2·V3/8 + V1/4^0 + V1/4^1 + V1/4^2"
        );
        assert_eq!(n_coeff(id(3), id(4), id(5)), 2);
        assert_eq!(n_coeff(id(1), id(1), id(2)), 1);
        assert_eq!(n_coeff(id(0), id(5), id(5)), 1);
        for j in ModuleId::all() {
            assert_eq!(fuse(id(0), j), FusionVector::unit(j));
        }
    }

    #[test]
    fn families_cover_every_pair_once() {
        let mut counts: BTreeMap<RuleFamily, usize> = BTreeMap::new();
        for i in ModuleId::all() {
            for j in ModuleId::all().filter(|&j| j >= i) {
                assert_eq!(RuleFamily::classify(i, j), RuleFamily::classify(j, i));
                *counts.entry(RuleFamily::classify(i, j)).or_default() += 1;
            }
        }
        assert_eq!(counts.len(), 20);
        assert_eq!(counts.values().sum::<usize>(), 231);
        assert_eq!(counts[&RuleFamily::F4_4_5], 18);
        assert_eq!(counts[&RuleFamily::F6_6_2], 1);
        for f in RuleFamily::ALL {
            assert_eq!(RuleFamily::from_tag(f.tag()), Some(f));
        }
    }

    #[test]
    fn twisted_orbits_under_m() {
        for j in (6..18).map(id) {
            let t = j.twisted_parts().unwrap();
            let expected: Vec<ModuleId> = (0..3).map(|s| TwistedParts::id(t.power, t.kind, s)).collect();
            assert_eq!(fuse(id(3), j).support().collect::<Vec<_>>(), expected);
        }
    }

    #[test]
    fn opposite_power_rules() {
        // W_{σ,2}^1 ⊠ W_{σ²,2}^0: r = 2, l − k = −1, 2·(−1) ≡ 1.
        assert_eq!(fuse(id(10), id(15)).to_string(), "V+1 + V- + V1/8 + V3/8");
        assert_eq!(fuse(id(6), id(15)).to_string(), "V1/8 + V3/8 + V1/4^0 + V1/4^1");
    }

    #[test]
    fn ring_axioms() {
        for sweep in verify_ring_axioms() {
            assert!(sweep.passed(), "{}: {:?}", sweep.axiom, &sweep.violations[..sweep.violations.len().min(5)]);
        }
    }

    #[test]
    fn broken_table_is_caught() {
        let mut t = FusionTable::new();
        t.products[3 * N + 4].add(id(4), 1);
        let sweeps = verify_ring_axioms_of(&t);
        assert!(!sweeps[0].passed());
        assert!(!sweeps[3].passed());
    }

    #[test]
    fn qdim_homomorphism() {
        let sweep = verify_qdim_homomorphism();
        assert_eq!(sweep.cases, 441);
        assert!(sweep.passed(), "{:?}", sweep.violations);
    }

    #[test]
    fn simple_currents() {
        let currents = verify_simple_currents();
        assert_eq!(currents.iter().map(|c| c.id).collect::<Vec<_>>(), [0, 1, 2]);
        assert!(currents.iter().all(|c| c.is_permutation));
        let p1 = currents[1].permutation.as_ref().unwrap();
        let p2 = currents[2].permutation.as_ref().unwrap();
        assert_eq!(&p1[..6], [1, 2, 0, 3, 4, 5]);
        assert_eq!(&p1[18..], [19, 20, 18]);
        for k in 0..21 {
            assert_eq!(p2[p1[k] as usize] as usize, k);
        }
    }

    #[test]
    fn table_agrees_with_verlinde_on_k0() {
        let engine = VerlindeEngine::new(&crate::smatrix::build_partial_s().unwrap());
        let report = cross_check_verlinde(&engine).unwrap();
        assert_eq!(report.triples, 2197);
        assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    }

    #[test]
    fn duals_from_table() {
        for i in ModuleId::all() {
            assert_eq!(dual_from_table(i), Ok(i.dual()));
        }
    }
}
