//! The 21 irreducible modules of V_{L2}^{A4}.
//!
//! Ids follow the standard numbering M⁰ … M²⁰:
//!
//! | ids     | modules                                   |
//! |---------|-------------------------------------------|
//! | 0, 1, 2 | (V_Zβ^+)^0, (V_Zβ^+)^1, (V_Zβ^+)^2        |
//! | 3       | V_Zβ^-                                    |
//! | 4, 5    | V_{Zβ+β/8}, V_{Zβ+3β/8}                   |
//! | 6..=11  | W_{σ,1}^{0,1,2}, W_{σ,2}^{0,1,2}          |
//! | 12..=17 | W_{σ²,1}^{0,1,2}, W_{σ²,2}^{0,1,2}        |
//! | 18..=20 | V_{Zβ+β/4}^{0,1,2}                        |
//!
//! Every module except ids 4 and 5 occurs as a direct summand of some
//! V_{Zγ+λ_j}, (γ,γ) = 18; `cosets` records which.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::lattice::{CosetLabel, LatticeData};

/// Index of an irreducible module, `0..21`. Id 0 is the algebra itself.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModuleId(u8);

impl ModuleId {
    pub const COUNT: usize = 21;
    pub const VACUUM: ModuleId = ModuleId(0);

    pub fn new(index: usize) -> Option<Self> {
        (index < Self::COUNT).then_some(ModuleId(index as u8))
    }

    /// Panics on an out-of-range index.
    pub const fn of(index: u8) -> Self {
        assert!((index as usize) < Self::COUNT);
        ModuleId(index)
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn all() -> impl Iterator<Item = ModuleId> + Clone {
        (0..Self::COUNT as u8).map(ModuleId)
    }

    pub fn entry(self) -> &'static CatalogEntry {
        &catalog()[self.index()]
    }

    pub fn qdim(self) -> u32 {
        self.entry().qdim
    }

    pub fn dual(self) -> ModuleId {
        self.entry().dual
    }

    pub fn name(self) -> &'static str {
        self.entry().name
    }

    /// Twisted-sector coordinates `(σ-power, type, superscript)` for
    /// W_{σ^p,t}^s, ids 6..=17.
    pub fn twisted_parts(self) -> Option<TwistedParts> {
        let i = self.0;
        (6..18).contains(&i).then(|| {
            let x = i - 6;
            TwistedParts { power: x / 6 + 1, kind: (x % 6) / 3 + 1, sup: x % 3 }
        })
    }
}

impl fmt::Display for ModuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// W_{σ^power, kind}^{sup}.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct TwistedParts {
    pub power: u8,
    pub kind: u8,
    pub sup: u8,
}

impl TwistedParts {
    /// The id of W_{σ^power,kind}^{sup mod 3}. `power` and `kind` are 1 or 2.
    pub fn id(power: u8, kind: u8, sup: i64) -> ModuleId {
        assert!(matches!(power, 1 | 2) && matches!(kind, 1 | 2));
        ModuleId(6 + 6 * (power - 1) + 3 * (kind - 1) + sup.rem_euclid(3) as u8)
    }
}

/// Which σ^i-twisted sector of V_Zβ^+ a module comes from.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Untwisted,
    Sigma,
    Sigma2,
}

impl Sector {
    pub fn as_str(self) -> &'static str {
        match self {
            Sector::Untwisted => "untwisted",
            Sector::Sigma => "sigma",
            Sector::Sigma2 => "sigma2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: ModuleId,
    /// ASCII short name accepted on the command line.
    pub name: &'static str,
    pub label: &'static str,
    pub latex: &'static str,
    pub sector: Sector,
    weight: (i64, i64),
    pub qdim: u32,
    pub dual: ModuleId,
    /// Residues j mod 18 whose V_{Zγ+λ_j} contains this module.
    pub cosets: &'static [u8],
}

impl CatalogEntry {
    /// Lowest conformal weight.
    pub fn weight(&self) -> BigRational {
        BigRational::new(BigInt::from(self.weight.0), BigInt::from(self.weight.1))
    }

    pub fn coset_labels(&self) -> Vec<CosetLabel> {
        self.cosets.iter().map(|&j| CosetLabel::new(j as i64, &orbifold_lattice())).collect()
    }
}

/// The rank-one lattice Zγ, (γ,γ) = 18, whose modules decompose into ours.
pub fn orbifold_lattice() -> LatticeData {
    LatticeData::new(9).expect("half norm 9 is valid")
}

macro_rules! entry {
    ($id:expr, $name:expr, $label:expr, $latex:expr, $sector:ident, ($wn:expr, $wd:expr), $qdim:expr, $dual:expr, [$($c:expr),*]) => {
        CatalogEntry {
            id: ModuleId($id),
            name: $name,
            label: $label,
            latex: $latex,
            sector: Sector::$sector,
            weight: ($wn, $wd),
            qdim: $qdim,
            dual: ModuleId($dual),
            cosets: &[$($c),*],
        }
    };
}

// Weights and quantum dimensions: the four quantum-dimension tables.
// Duals: 1<->2 is derived from the fusion table (N_{1,2}^0 = 1); the rest
// are stated contragredients. Cosets: the two identification results for
// untwisted and twisted summands of V_{Zγ+λ_j}.
static CATALOG: [CatalogEntry; 21] = [
    entry!(0, "V+0", "(V_Zβ^+)^0", r"(V_{\mathbb{Z}\beta}^{+})^{0}", Untwisted, (0, 1), 1, 0, [0]),
    entry!(1, "V+1", "(V_Zβ^+)^1", r"(V_{\mathbb{Z}\beta}^{+})^{1}", Untwisted, (4, 1), 1, 2, [6]),
    entry!(2, "V+2", "(V_Zβ^+)^2", r"(V_{\mathbb{Z}\beta}^{+})^{2}", Untwisted, (4, 1), 1, 1, [12]),
    entry!(3, "V-", "V_Zβ^-", r"V_{\mathbb{Z}\beta}^{-}", Untwisted, (1, 1), 3, 3, [0, 6, 12]),
    entry!(4, "V1/8", "V_{Zβ+β/8}", r"V_{\mathbb{Z}\beta+\frac{1}{8}\beta}", Untwisted, (1, 16), 6, 4, []),
    entry!(5, "V3/8", "V_{Zβ+3β/8}", r"V_{\mathbb{Z}\beta+\frac{3}{8}\beta}", Untwisted, (9, 16), 6, 5, []),
    entry!(6, "W_s1^0", "W_{σ,1}^0", r"W_{\sigma,1}^{0}", Sigma, (1, 36), 4, 12, [1]),
    entry!(7, "W_s1^1", "W_{σ,1}^1", r"W_{\sigma,1}^{1}", Sigma, (25, 36), 4, 13, [13]),
    entry!(8, "W_s1^2", "W_{σ,1}^2", r"W_{\sigma,1}^{2}", Sigma, (49, 36), 4, 14, [7]),
    entry!(9, "W_s2^0", "W_{σ,2}^0", r"W_{\sigma,2}^{0}", Sigma, (1, 9), 4, 15, [16]),
    entry!(10, "W_s2^1", "W_{σ,2}^1", r"W_{\sigma,2}^{1}", Sigma, (4, 9), 4, 16, [4]),
    entry!(11, "W_s2^2", "W_{σ,2}^2", r"W_{\sigma,2}^{2}", Sigma, (16, 9), 4, 17, [10]),
    entry!(12, "W_ss1^0", "W_{σ²,1}^0", r"W_{\sigma^{2},1}^{0}", Sigma2, (1, 36), 4, 6, [17]),
    entry!(13, "W_ss1^1", "W_{σ²,1}^1", r"W_{\sigma^{2},1}^{1}", Sigma2, (25, 36), 4, 7, [5]),
    entry!(14, "W_ss1^2", "W_{σ²,1}^2", r"W_{\sigma^{2},1}^{2}", Sigma2, (49, 36), 4, 8, [11]),
    entry!(15, "W_ss2^0", "W_{σ²,2}^0", r"W_{\sigma^{2},2}^{0}", Sigma2, (1, 9), 4, 9, [2]),
    entry!(16, "W_ss2^1", "W_{σ²,2}^1", r"W_{\sigma^{2},2}^{1}", Sigma2, (4, 9), 4, 10, [14]),
    entry!(17, "W_ss2^2", "W_{σ²,2}^2", r"W_{\sigma^{2},2}^{2}", Sigma2, (16, 9), 4, 11, [8]),
    entry!(18, "V1/4^0", "V_{Zβ+β/4}^0", r"V_{\mathbb{Z}\beta+\frac{1}{4}\beta}^{0}", Untwisted, (1, 4), 2, 18, [3, 15]),
    entry!(19, "V1/4^1", "V_{Zβ+β/4}^1", r"V_{\mathbb{Z}\beta+\frac{1}{4}\beta}^{1}", Untwisted, (9, 4), 2, 20, [3, 9]),
    entry!(20, "V1/4^2", "V_{Zβ+β/4}^2", r"V_{\mathbb{Z}\beta+\frac{1}{4}\beta}^{2}", Untwisted, (9, 4), 2, 19, [9, 15]),
];

/// All 21 catalog entries, indexed by id.
pub fn catalog() -> &'static [CatalogEntry] {
    &CATALOG
}

pub fn dual(id: ModuleId) -> ModuleId {
    id.dual()
}

/// Summands of V_{Zγ+λ_j} as a V_{L2}^{A4}-module, in id order.
pub fn decomposition(j: CosetLabel) -> Vec<ModuleId> {
    let j = j.residue() as u8;
    catalog().iter().filter(|e| e.cosets.contains(&j)).map(|e| e.id).collect()
}

/// Σ qdim² over the given modules.
pub fn qdim_squared_sum_of(ids: impl IntoIterator<Item = ModuleId>) -> u64 {
    ids.into_iter().map(|id| (id.qdim() as u64).pow(2)).sum()
}

/// Σ qdim² over all 21 modules, the global dimension of the orbifold.
pub fn qdim_squared_sum() -> u64 {
    qdim_squared_sum_of(ModuleId::all())
}

/// Looks up a module by id (`"7"`, `"M7"`), short name (`"V-"`,
/// `"W_s1^0"`) or display label (`"W_{σ,1}^0"`).
pub fn parse_module(text: &str) -> Option<ModuleId> {
    let t = text.trim();
    if let Some(id) = t.strip_prefix('M').unwrap_or(t).parse::<usize>().ok().and_then(ModuleId::new) {
        return Some(id);
    }
    let normalized = t.replace("σ^2", "σ²").replace("sigma2", "σ²").replace("sigma", "σ");
    catalog()
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(t) || e.label == normalized || e.latex == t)
        .map(|e| e.id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn id(i: u8) -> ModuleId {
        ModuleId::of(i)
    }

    #[test]
    fn twenty_one_entries_in_order() {
        assert_eq!(catalog().len(), 21);
        for (i, e) in catalog().iter().enumerate() {
            assert_eq!(e.id.index(), i);
        }
    }

    #[test]
    fn sample_entries() {
        let e6 = id(6).entry();
        assert_eq!(e6.weight(), BigRational::new(1.into(), 36.into()));
        assert_eq!(e6.qdim, 4);
        assert_eq!(e6.sector, Sector::Sigma);

        let e0 = id(0).entry();
        assert!(e0.weight().is_zero());
        assert_eq!((e0.qdim, e0.dual), (1, id(0)));

        let e19 = id(19).entry();
        assert_eq!(e19.dual, id(20));
        assert_eq!(e19.weight(), BigRational::new(9.into(), 4.into()));
    }

    #[test]
    fn qdims_match_tables() {
        let q: Vec<u32> = ModuleId::all().map(ModuleId::qdim).collect();
        let mut expected = vec![1, 1, 1, 3, 6, 6];
        expected.extend([4; 12]);
        expected.extend([2, 2, 2]);
        assert_eq!(q, expected);
    }

    #[test]
    fn weights_match_tables() {
        let w: Vec<(i64, i64)> = catalog().iter().map(|e| e.weight).collect();
        let twisted = [(1, 36), (25, 36), (49, 36), (1, 9), (4, 9), (16, 9)];
        let mut expected = vec![(0, 1), (4, 1), (4, 1), (1, 1), (1, 16), (9, 16)];
        expected.extend(twisted);
        expected.extend(twisted);
        expected.extend([(1, 4), (9, 4), (9, 4)]);
        assert_eq!(w, expected);
    }

    #[test]
    fn dual_is_weight_preserving_involution() {
        for e in catalog() {
            let d = e.dual.entry();
            assert_eq!(d.dual, e.id);
            assert_eq!(d.weight(), e.weight());
            assert_eq!(d.qdim, e.qdim);
            let expected_sector = match e.sector {
                Sector::Untwisted => Sector::Untwisted,
                Sector::Sigma => Sector::Sigma2,
                Sector::Sigma2 => Sector::Sigma,
            };
            assert_eq!(d.sector, expected_sector);
        }
        assert_eq!(dual(id(6)), id(12));
        assert_eq!(dual(id(0)), id(0));
        assert_eq!(dual(id(19)), id(20));
    }

    #[test]
    fn coset_counts() {
        for e in catalog() {
            let expected = match e.id.index() {
                6..=17 | 0 | 1 | 2 => 1,
                3 => 3,
                18..=20 => 2,
                _ => 0,
            };
            assert_eq!(e.cosets.len(), expected, "id {}", e.id.index());
        }
        let slots: usize = (0..18).map(|j| decomposition(CosetLabel::new(j, &orbifold_lattice())).len()).sum();
        assert_eq!(slots, 24);
    }

    #[test]
    fn decomposition_dictionary() {
        let lat = orbifold_lattice();
        let dec = |j: i64| decomposition(CosetLabel::new(j, &lat)).iter().map(|m| m.index()).collect::<Vec<_>>();
        assert_eq!(dec(0), vec![0, 3]);
        assert_eq!(dec(6), vec![1, 3]);
        assert_eq!(dec(12), vec![2, 3]);
        assert_eq!(dec(3), vec![18, 19]);
        assert_eq!(dec(9), vec![19, 20]);
        assert_eq!(dec(15), vec![18, 20]);
        let twisted = [(1, 6), (13, 7), (7, 8), (16, 9), (4, 10), (10, 11), (17, 12), (5, 13), (11, 14), (2, 15), (14, 16), (8, 17)];
        for (j, m) in twisted {
            assert_eq!(dec(j), vec![m], "coset {j}");
        }
    }

    #[test]
    fn global_dimension() {
        assert_eq!(qdim_squared_sum(), 288);
        assert_eq!(qdim_squared_sum_of([ModuleId::VACUUM]), 1);
        // |A4|^2 · glob(V_L2), with V_L2 having two simple-current modules.
        assert_eq!(qdim_squared_sum(), 12u64.pow(2) * 2);
    }

    #[test]
    fn twisted_parts_round_trip() {
        for i in 6..18 {
            let p = id(i).twisted_parts().unwrap();
            assert_eq!(TwistedParts::id(p.power, p.kind, p.sup as i64), id(i));
        }
        assert_eq!(id(3).twisted_parts(), None);
        assert_eq!(TwistedParts::id(2, 2, -1), id(17));
    }

    #[test]
    fn parses_names() {
        assert_eq!(parse_module("V-"), Some(id(3)));
        assert_eq!(parse_module("V+0"), Some(id(0)));
        assert_eq!(parse_module("W_s1^0"), Some(id(6)));
        assert_eq!(parse_module("W_ss2^1"), Some(id(16)));
        assert_eq!(parse_module("W_{σ²,1}^2"), Some(id(14)));
        assert_eq!(parse_module("W_{sigma2,1}^2"), Some(id(14)));
        assert_eq!(parse_module("M20"), Some(id(20)));
        assert_eq!(parse_module("5"), Some(id(5)));
        assert_eq!(parse_module("21"), None);
        assert_eq!(parse_module("bogus"), None);
    }
}
