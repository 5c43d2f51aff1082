//! Value-set invariants of a character table.

use serde::Serialize;

use crate::chartab::{character_table_with_seed, codegree, CharTable};
use crate::cyclo::Cyc;
use crate::error::Result;
use crate::permcore::{
    derived_series, normal_subgroups, subgroups, DerivedLength, FlagsSummary, PermGroup,
    StructureFlags,
};

#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    pub order: usize,
    pub class_count: usize,
    /// All character values.
    pub cv: Vec<Cyc>,
    /// Character degrees.
    pub cd: Vec<u64>,
    /// `cv` minus the degrees.
    pub cdc: Vec<Cyc>,
    /// Values that are not positive integers.
    pub ncv: Vec<Cyc>,
    pub per_char_cv_sizes: Vec<usize>,
    pub cod: Vec<u64>,
    /// Largest degree.
    pub b: u64,
    pub dl: DerivedLength,
    pub is_rational_group: bool,
    pub root_of_unity_elements: Vec<usize>,
    pub flags: FlagsSummary,
}

fn sorted_distinct<'a>(values: impl Iterator<Item = &'a Cyc>) -> Vec<Cyc> {
    let mut out: Vec<Cyc> = values.cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// Distinct values of one row, sorted.
pub fn per_char_values(table: &CharTable, row: usize) -> Vec<Cyc> {
    sorted_distinct(table.rows[row].values.iter())
}

pub fn character_values(table: &CharTable) -> Vec<Cyc> {
    sorted_distinct(table.rows.iter().flat_map(|r| r.values.iter()))
}

/// Classes on which every irreducible character has modulus 1.
pub fn root_of_unity_elements(table: &CharTable) -> Vec<usize> {
    let one = Cyc::one();
    (0..table.class_count())
        .filter(|&c| table.rows.iter().all(|r| r.values[c].abs_squared() == one))
        .collect()
}

pub fn report(table: &CharTable) -> Result<InvariantReport> {
    let normals = normal_subgroups(&table.group, &table.classes)?;
    let flags = subgroups::structure_flags_with(&table.group, &normals);
    report_with(table, &flags)
}

/// Like [`report`], reusing precomputed structure flags.
pub fn report_with(table: &CharTable, flags: &StructureFlags) -> Result<InvariantReport> {
    let cv = character_values(table);
    let mut cd = table.degrees();
    cd.dedup();
    let degrees: Vec<Cyc> = cd.iter().map(|&d| Cyc::from_integer(d)).collect();
    let cdc: Vec<Cyc> = cv.iter().filter(|v| !degrees.contains(v)).cloned().collect();
    let ncv: Vec<Cyc> = cv
        .iter()
        .filter(|v| !v.classify().is_positive_natural)
        .cloned()
        .collect();
    let per_char_cv_sizes = (0..table.rows.len())
        .map(|r| per_char_values(table, r).len())
        .collect();
    let cod = (0..table.rows.len())
        .map(|r| codegree(table, r))
        .collect::<Result<Vec<_>>>()?;
    Ok(InvariantReport {
        order: table.order(),
        class_count: table.class_count(),
        is_rational_group: cv.iter().all(Cyc::is_rational),
        b: *cd.last().unwrap_or(&1),
        cv,
        cd,
        cdc,
        ncv,
        per_char_cv_sizes,
        cod,
        dl: derived_series(&table.group).length,
        root_of_unity_elements: root_of_unity_elements(table),
        flags: FlagsSummary::from(flags),
    })
}

/// Everything the checkers need about one group, computed once.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub table: CharTable,
    pub normals: Vec<Vec<usize>>,
    pub flags: StructureFlags,
    pub report: InvariantReport,
}

impl Analysis {
    pub fn group(&self) -> &PermGroup {
        &self.table.group
    }

    /// Rows of degree greater than one.
    pub fn nonlinear_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.table.rows.len()).filter(|&r| self.table.rows[r].degree > 1)
    }
}

pub fn analyze(group: &PermGroup, seed: u64) -> Result<Analysis> {
    let table = character_table_with_seed(group, seed)?;
    let normals = normal_subgroups(&table.group, &table.classes)?;
    let flags = subgroups::structure_flags_with(&table.group, &normals);
    let report = report_with(&table, &flags)?;
    Ok(Analysis {
        table,
        normals,
        flags,
        report,
    })
}
