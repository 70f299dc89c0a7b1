//! The partially known S-matrix of V_{L2}^{A4}.
//!
//! Everything here is stored in the printed normalization T = √18·S, which
//! keeps every known entry a rational multiple of a root of unity. The true
//! S is `T/√18`; [`PartialSMatrix::entry`] does that division.
//!
//! Known cells are those with at least one index in K = {0, 6..17}. Column
//! 0 comes from quantum dimensions, twisted columns from sums of lattice
//! S-entries over coset memberships, and rows 18..20 at twisted columns
//! from the printed table (the coset rule does not determine them).

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{decomposition, orbifold_lattice, ModuleId};
use crate::cyclo::Cyclotomic;
use crate::lattice::{CosetLabel, LatticeSMatrix};
use crate::notation::{parse_value, render_value, NotationError};

const N: usize = ModuleId::COUNT;

/// Columns of the printed table, in print order.
pub const APPENDIX_COLUMNS: [u8; 13] = [0, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17];

/// K: ids whose S-rows are completely known.
pub fn known_ids() -> impl Iterator<Item = ModuleId> + Clone {
    APPENDIX_COLUMNS.iter().map(|&i| ModuleId::of(i))
}

pub fn is_known_id(id: ModuleId) -> bool {
    APPENDIX_COLUMNS.contains(&(id.index() as u8))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SMatrixError {
    #[error("printed table has no cell ({row}, {col})")]
    FixtureMissing { row: u8, col: u8 },
    #[error(transparent)]
    FixtureParse(#[from] NotationError),
    #[error("cells ({i}, {j}) and ({j}, {i}) disagree: {a} vs {b}")]
    SymmetryConflict { i: u8, j: u8, a: String, b: String },
    #[error("printed ({row}, {col}) = {printed} differs from computed {computed} and no symmetric partner confirms it")]
    UnresolvedDiscrepancy { row: u8, col: u8, printed: String, computed: String },
    #[error("malformed S-matrix document: {0}")]
    Malformed(String),
}

// √18·S_{i,j}, rows 0..=20, columns APPENDIX_COLUMNS. Transcribed verbatim,
// including the (10, 9) and (16, 15) cells.
#[rustfmt::skip]
static PRINTED: [[&str; 13]; N] = [
    ["1/4", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1", "1"],
    ["1/4", "e^{-2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{2πi/3}"],
    ["1/4", "e^{2πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}"],
    ["3/4", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["3/2", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["3/2", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["1", "e^{-πi/9}", "e^{5πi/9}", "e^{-7πi/9}", "e^{2πi/9}", "e^{-4πi/9}", "e^{8πi/9}", "e^{πi/9}", "e^{-5πi/9}", "e^{7πi/9}", "e^{-2πi/9}", "e^{4πi/9}", "e^{-8πi/9}"],
    ["1", "e^{5πi/9}", "e^{-7πi/9}", "e^{-πi/9}", "e^{8πi/9}", "e^{2πi/9}", "e^{-4πi/9}", "e^{-5πi/9}", "e^{7πi/9}", "e^{πi/9}", "e^{-8πi/9}", "e^{-2πi/9}", "e^{4πi/9}"],
    ["1", "e^{-7πi/9}", "e^{-πi/9}", "e^{5πi/9}", "e^{-4πi/9}", "e^{8πi/9}", "e^{2πi/9}", "e^{7πi/9}", "e^{πi/9}", "e^{-5πi/9}", "e^{4πi/9}", "e^{-8πi/9}", "e^{-2πi/9}"],
    ["1", "e^{2πi/9}", "e^{8πi/9}", "e^{-4πi/9}", "e^{-4πi/9}", "e^{8πi/9}", "e^{2πi/9}", "e^{-2πi/9}", "e^{-8πi/9}", "e^{4πi/9}", "e^{4πi/9}", "e^{-8πi/9}", "e^{-2πi/9}"],
    ["1", "e^{-4πi/9}", "e^{2πi/9}", "e^{8πi/9}", "e^{-8πi/9}", "e^{2πi/9}", "e^{-4πi/9}", "e^{4πi/9}", "e^{-2πi/9}", "e^{-8πi/9}", "e^{-8πi/9}", "e^{-2πi/9}", "e^{4πi/9}"],
    ["1", "e^{8πi/9}", "e^{-4πi/9}", "e^{2πi/9}", "e^{2πi/9}", "e^{-4πi/9}", "e^{8πi/9}", "e^{-8πi/9}", "e^{4πi/9}", "e^{-2πi/9}", "e^{-2πi/9}", "e^{4πi/9}", "e^{-8πi/9}"],
    ["1", "e^{πi/9}", "e^{-5πi/9}", "e^{7πi/9}", "e^{-2πi/9}", "e^{4πi/9}", "e^{-8πi/9}", "e^{-πi/9}", "e^{5πi/9}", "e^{-7πi/9}", "e^{2πi/9}", "e^{-4πi/9}", "e^{8πi/9}"],
    ["1", "e^{-5πi/9}", "e^{7πi/9}", "e^{πi/9}", "e^{-8πi/9}", "e^{-2πi/9}", "e^{4πi/9}", "e^{5πi/9}", "e^{-7πi/9}", "e^{-πi/9}", "e^{8πi/9}", "e^{2πi/9}", "e^{-4πi/9}"],
    ["1", "e^{7πi/9}", "e^{πi/9}", "e^{-5πi/9}", "e^{4πi/9}", "e^{-8πi/9}", "e^{-2πi/9}", "e^{-7πi/9}", "e^{-πi/9}", "e^{5πi/9}", "e^{-4πi/9}", "e^{8πi/9}", "e^{2πi/9}"],
    ["1", "e^{-2πi/9}", "e^{-8πi/9}", "e^{4πi/9}", "e^{4πi/9}", "e^{-8πi/9}", "e^{-2πi/9}", "e^{2πi/9}", "e^{8πi/9}", "e^{-4πi/9}", "e^{-4πi/9}", "e^{8πi/9}", "e^{2πi/9}"],
    ["1", "e^{4πi/9}", "e^{-2πi/9}", "e^{-8πi/9}", "e^{-8πi/9}", "e^{-2πi/9}", "e^{4πi/9}", "e^{-4πi/9}", "e^{2πi/9}", "e^{8πi/9}", "e^{-8πi/9}", "e^{2πi/9}", "e^{-4πi/9}"],
    ["1", "e^{-8πi/9}", "e^{4πi/9}", "e^{-2πi/9}", "e^{-2πi/9}", "e^{4πi/9}", "e^{-8πi/9}", "e^{8πi/9}", "e^{-4πi/9}", "e^{2πi/9}", "e^{2πi/9}", "e^{-4πi/9}", "e^{8πi/9}"],
    ["1/2", "e^{-2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{πi/3}", "e^{πi/3}", "e^{πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{-πi/3}", "e^{-πi/3}", "e^{-πi/3}"],
    ["1/2", "1", "1", "1", "-1", "-1", "-1", "1", "1", "1", "-1", "-1", "-1"],
    ["1/2", "e^{2πi/3}", "e^{2πi/3}", "e^{2πi/3}", "e^{-πi/3}", "e^{-πi/3}", "e^{-πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{-2πi/3}", "e^{πi/3}", "e^{πi/3}", "e^{πi/3}"],
];

/// The printed √18·S table, parsed. Cells can be removed to simulate a
/// damaged transcription.
#[derive(Clone, Debug)]
pub struct AppendixFixture {
    cells: Vec<Vec<Option<(&'static str, Cyclotomic)>>>,
}

fn column_slot(col: u8) -> Option<usize> {
    APPENDIX_COLUMNS.iter().position(|&c| c == col)
}

impl AppendixFixture {
    pub fn printed() -> &'static AppendixFixture {
        static FIXTURE: OnceLock<AppendixFixture> = OnceLock::new();
        FIXTURE.get_or_init(|| AppendixFixture::parse(&PRINTED).expect("printed table parses"))
    }

    fn parse(rows: &[[&'static str; 13]; N]) -> Result<Self, SMatrixError> {
        let cells = rows
            .iter()
            .map(|row| row.iter().map(|&text| Ok(Some((text, parse_value(text)?)))).collect::<Result<Vec<_>, SMatrixError>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AppendixFixture { cells })
    }

    pub fn get(&self, row: u8, col: u8) -> Option<&Cyclotomic> {
        self.cell(row, col).map(|(_, v)| v)
    }

    /// The cell as printed.
    pub fn text(&self, row: u8, col: u8) -> Option<&'static str> {
        self.cell(row, col).map(|(t, _)| *t)
    }

    fn cell(&self, row: u8, col: u8) -> Option<&(&'static str, Cyclotomic)> {
        self.cells.get(row as usize)?.get(column_slot(col)?)?.as_ref()
    }

    pub fn without(mut self, row: u8, col: u8) -> Self {
        if let (Some(r), Some(c)) = (self.cells.get_mut(row as usize), column_slot(col)) {
            r[c] = None;
        }
        self
    }
}

fn sqrt18() -> &'static Cyclotomic {
    static ROOT: OnceLock<Cyclotomic> = OnceLock::new();
    ROOT.get_or_init(|| Cyclotomic::sqrt_rational(18).expect("√18 is representable"))
}

fn inv_sqrt18() -> &'static Cyclotomic {
    static INV: OnceLock<Cyclotomic> = OnceLock::new();
    INV.get_or_init(|| sqrt18().inverse().expect("√18 is nonzero"))
}

/// 21×21 grid of √18·S with absent cells where S is unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialSMatrix {
    scaled: Vec<Vec<Option<Cyclotomic>>>,
}

impl PartialSMatrix {
    /// √18·S_{i,j}, if known.
    pub fn scaled(&self, i: ModuleId, j: ModuleId) -> Option<&Cyclotomic> {
        self.scaled[i.index()][j.index()].as_ref()
    }

    /// S_{i,j}, if known.
    pub fn entry(&self, i: ModuleId, j: ModuleId) -> Option<Cyclotomic> {
        self.scaled(i, j).map(|t| t * inv_sqrt18())
    }

    pub fn is_known(&self, i: ModuleId, j: ModuleId) -> bool {
        self.scaled[i.index()][j.index()].is_some()
    }

    pub fn known_mask(&self) -> Vec<Vec<bool>> {
        self.scaled.iter().map(|row| row.iter().map(Option::is_some).collect()).collect()
    }

    pub fn known_count(&self) -> usize {
        self.scaled.iter().flatten().filter(|c| c.is_some()).count()
    }

    /// √18·S row `i` when fully known.
    pub fn scaled_row(&self, i: ModuleId) -> Option<Vec<&Cyclotomic>> {
        self.scaled[i.index()].iter().map(Option::as_ref).collect()
    }
}

/// Assembles the partial matrix from quantum dimensions, the lattice
/// S-matrix at (γ,γ) = 18 and the printed rows 18..20.
pub fn build_partial_s() -> Result<PartialSMatrix, SMatrixError> {
    build_partial_s_with(AppendixFixture::printed())
}

pub fn build_partial_s_with(fixture: &AppendixFixture) -> Result<PartialSMatrix, SMatrixError> {
    let mut grid: Vec<Vec<Option<Cyclotomic>>> = vec![vec![None; N]; N];

    for i in ModuleId::all() {
        grid[i.index()][0] = Some(Cyclotomic::ratio(i.qdim() as i64, 4));
    }

    let lattice = LatticeSMatrix::new(orbifold_lattice()).expect("(γ,γ) = 18 is supported");
    for j in ModuleId::all().filter(|j| j.twisted_parts().is_some()) {
        let l = single_coset(j);
        for i in (0..18).map(ModuleId::of) {
            let sum: Cyclotomic = i.entry().coset_labels().into_iter().map(|m| lattice.entry(l, m)).sum();
            grid[i.index()][j.index()] = Some(sum * sqrt18());
        }
        for i in 18..=20u8 {
            let value = fixture.get(i, j.index() as u8).ok_or(SMatrixError::FixtureMissing { row: i, col: j.index() as u8 })?;
            grid[i as usize][j.index()] = Some(value.clone());
        }
    }

    for i in 0..N {
        for j in i + 1..N {
            match (grid[i][j].take(), grid[j][i].take()) {
                (Some(a), Some(b)) if a != b => {
                    return Err(SMatrixError::SymmetryConflict {
                        i: i as u8,
                        j: j as u8,
                        a: render_value(&a),
                        b: render_value(&b),
                    })
                }
                (Some(a), _) | (None, Some(a)) => {
                    grid[i][j] = Some(a.clone());
                    grid[j][i] = Some(a);
                }
                (None, None) => {}
            }
        }
    }
    Ok(PartialSMatrix { scaled: grid })
}

/// The unique coset containing a twisted module.
fn single_coset(j: ModuleId) -> CosetLabel {
    match j.entry().coset_labels()[..] {
        [l] => l,
        _ => unreachable!("twisted modules sit in exactly one coset"),
    }
}

/// A printed cell that disagrees with the computed value while its
/// symmetric partner agrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixTypo {
    pub row: u8,
    pub col: u8,
    pub printed: String,
    pub computed: String,
    pub partner_printed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AppendixReport {
    pub cells: usize,
    pub matches: usize,
    pub typos: Vec<AppendixTypo>,
}

/// Diffs every printed cell against the computed matrix.
pub fn compare_with_appendix(computed: &PartialSMatrix) -> Result<AppendixReport, SMatrixError> {
    compare_with(computed, AppendixFixture::printed())
}

pub fn compare_with(computed: &PartialSMatrix, fixture: &AppendixFixture) -> Result<AppendixReport, SMatrixError> {
    let mut report = AppendixReport { cells: 0, matches: 0, typos: Vec::new() };
    for row in 0..N as u8 {
        for &col in &APPENDIX_COLUMNS {
            let (text, printed) = fixture.cell(row, col).ok_or(SMatrixError::FixtureMissing { row, col })?;
            let value = computed
                .scaled(ModuleId::of(row), ModuleId::of(col))
                .expect("printed cells lie in the known mask");
            report.cells += 1;
            if printed == value {
                report.matches += 1;
                continue;
            }
            match fixture.cell(col, row) {
                Some((partner, p)) if p == value => report.typos.push(AppendixTypo {
                    row,
                    col,
                    printed: text.to_string(),
                    computed: render_value(value),
                    partner_printed: partner.to_string(),
                }),
                _ => {
                    return Err(SMatrixError::UnresolvedDiscrepancy {
                        row,
                        col,
                        printed: text.to_string(),
                        computed: render_value(value),
                    })
                }
            }
        }
    }
    Ok(report)
}

/// Character classes whose members are separated by the coset rule.
pub const CHECKED_CLASSES: [&[u8]; 11] =
    [&[0], &[3], &[4], &[5], &[1, 2], &[6, 12], &[7, 13], &[8, 14], &[9, 15], &[10, 16], &[11, 17]];

/// Classes touching ids 18..20: the printed rows and the coset dictionary
/// disagree on the first two; the third is their sum.
pub const TENSION_CLASSES: [&[u8]; 3] = [&[18], &[19, 20], &[18, 19, 20]];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSumRecord {
    pub row: u8,
    pub class: Vec<u8>,
    /// Σ_{i∈C} √18·S_{row,i}.
    pub matrix_side: String,
    /// Σ_m √18·S_{λ_l,λ_m}·|C ∩ decomposition(m)|.
    pub lattice_side: String,
    pub passed: bool,
    /// Outside the checked classes; reported, not judged.
    pub excluded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSumReport {
    pub records: Vec<ClassSumRecord>,
}

impl ClassSumReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.excluded || r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClassSumRecord> {
        self.records.iter().filter(|r| !r.excluded && !r.passed)
    }

    pub fn tension(&self) -> impl Iterator<Item = &ClassSumRecord> {
        self.records.iter().filter(|r| r.excluded && !r.passed)
    }
}

/// For each twisted row and character class, compares the matrix row sum
/// with the lattice expansion of the coset characters.
pub fn class_sum_check(s: &PartialSMatrix) -> ClassSumReport {
    let lattice = LatticeSMatrix::new(orbifold_lattice()).expect("(γ,γ) = 18 is supported");
    let data = orbifold_lattice();
    let mut records = Vec::new();
    for j in ModuleId::all().filter(|j| j.twisted_parts().is_some()) {
        let l = single_coset(j);
        let classes = CHECKED_CLASSES.iter().map(|c| (c, false)).chain(TENSION_CLASSES.iter().map(|c| (c, true)));
        for (class, excluded) in classes {
            let members: BTreeSet<u8> = class.iter().copied().collect();
            let matrix_side: Cyclotomic = class
                .iter()
                .map(|&i| s.scaled(j, ModuleId::of(i)).expect("twisted rows are fully known"))
                .sum();
            let lattice_side: Cyclotomic = data
                .labels()
                .map(|m| {
                    let count = decomposition(m).iter().filter(|id| members.contains(&(id.index() as u8))).count();
                    lattice.entry(l, m).scale(&BigRational::from_integer(BigInt::from(count)))
                })
                .sum::<Cyclotomic>()
                * sqrt18();
            records.push(ClassSumRecord {
                row: j.index() as u8,
                class: class.to_vec(),
                passed: matrix_side == lattice_side,
                matrix_side: render_value(&matrix_side),
                lattice_side: render_value(&lattice_side),
                excluded,
            });
        }
    }
    ClassSumReport { records }
}

/// A cell of S·S that differs from the charge-conjugation matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationWitness {
    pub i: u8,
    pub j: u8,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationReport {
    pub cells: usize,
    pub witnesses: Vec<ConjugationWitness>,
}

impl ConjugationReport {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Σ_s S_{i,s}S_{s,j} = δ_{j,dual(i)} for i, j ∈ K.
pub fn charge_conjugation_check(s: &PartialSMatrix) -> ConjugationReport {
    let eighteenth = BigRational::new(BigInt::from(1), BigInt::from(18));
    let mut report = ConjugationReport { cells: 0, witnesses: Vec::new() };
    for i in known_ids() {
        for j in known_ids() {
            let sum: Cyclotomic = ModuleId::all()
                .map(|k| s.scaled(i, k).expect("known row") * s.scaled(k, j).expect("known column"))
                .sum();
            let value = sum.scale(&eighteenth);
            let expected = if j == i.dual() { Cyclotomic::one() } else { Cyclotomic::zero() };
            report.cells += 1;
            if value != expected {
                report.witnesses.push(ConjugationWitness { i: i.index() as u8, j: j.index() as u8, value: render_value(&value) });
            }
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QdimRecord {
    pub id: u8,
    pub expected: u32,
    /// S_{i,0}/S_{0,0} from the assembled matrix.
    pub computed: String,
    /// The same ratio from the printed column 0.
    pub printed: String,
    pub passed: bool,
}

/// S_{i,0}/S_{0,0} = qdim(M^i) for all 21 modules, from both the assembled
/// matrix and the printed column; also checks row 0 is positive real.
pub fn qdim_check(s: &PartialSMatrix) -> Vec<QdimRecord> {
    let fixture = AppendixFixture::printed();
    let v = ModuleId::VACUUM;
    let s00_inv = s.scaled(v, v).expect("S_00 known").inverse().expect("S_00 nonzero");
    let p00_inv = fixture.get(0, 0).expect("printed S_00").inverse().expect("printed S_00 nonzero");
    ModuleId::all()
        .map(|i| {
            let expected = Cyclotomic::from_integer(i.qdim() as i64);
            let computed = s.scaled(i, v).expect("column 0 known") * &s00_inv;
            let printed = fixture.get(i.index() as u8, 0).expect("printed column 0") * &p00_inv;
            let positive = s.scaled(v, i).and_then(Cyclotomic::as_rational).is_some_and(|r| r > BigRational::from_integer(0.into()));
            QdimRecord {
                id: i.index() as u8,
                expected: i.qdim(),
                passed: computed == expected && printed == expected && positive,
                computed: render_value(&computed),
                printed: render_value(&printed),
            }
        })
        .collect()
}

// JSON document: true S entries plus their printed-normalization rendering.

#[derive(Serialize, Deserialize)]
struct CellDoc {
    exact: Cyclotomic,
    sqrt18_s: String,
}

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    size: usize,
    known_mask: Vec<Vec<bool>>,
    entries: Vec<Vec<Option<CellDoc>>>,
}

impl Serialize for PartialSMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let entries = self
            .scaled
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.as_ref().map(|t| CellDoc { exact: t * inv_sqrt18(), sqrt18_s: render_value(t) }))
                    .collect()
            })
            .collect();
        MatrixDoc { size: N, known_mask: self.known_mask(), entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PartialSMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let doc = MatrixDoc::deserialize(deserializer)?;
        let bad = |msg: &str| D::Error::custom(SMatrixError::Malformed(msg.to_string()));
        if doc.size != N || doc.entries.len() != N || doc.known_mask.len() != N {
            return Err(bad("expected 21 rows"));
        }
        let mut scaled = Vec::with_capacity(N);
        for (row, mask) in doc.entries.into_iter().zip(&doc.known_mask) {
            if row.len() != N || mask.len() != N {
                return Err(bad("expected 21 columns"));
            }
            let mut out = Vec::with_capacity(N);
            for (cell, &known) in row.into_iter().zip(mask) {
                if cell.is_some() != known {
                    return Err(bad("known_mask disagrees with entries"));
                }
                out.push(cell.map(|c| c.exact * sqrt18()));
            }
            scaled.push(out);
        }
        Ok(PartialSMatrix { scaled })
    }
}
