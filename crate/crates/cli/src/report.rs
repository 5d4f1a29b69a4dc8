//! Machine-readable output. Each top-level object names its schema under
//! `docs/schemas`.

use serde::Serialize;

use hurwitz_core::braid::OrbitReport;
use hurwitz_core::{EquivalenceClass, HurwitzProblem, Permutation};

pub const ORBIT_SCHEMA: &str = "hurwitz/orbit-report/1";
pub const TABLE_SCHEMA: &str = "hurwitz/table/1";
pub const FOURPOINT_SCHEMA: &str = "hurwitz/fourpoint-list/1";

#[derive(Serialize, Debug)]
pub struct ProblemJson {
    pub d: usize,
    pub genus: usize,
    pub e: Vec<usize>,
    pub simple: usize,
}

impl From<&HurwitzProblem> for ProblemJson {
    fn from(p: &HurwitzProblem) -> Self {
        ProblemJson {
            d: p.d(),
            genus: p.genus(),
            e: p.e().to_vec(),
            simple: p.simple_count(),
        }
    }
}

/// A tuple as lists of 1-based cycles.
pub fn sigma_json(sigma: &[Permutation]) -> Vec<Vec<Vec<usize>>> {
    sigma.iter().map(Permutation::cycles_1based).collect()
}

#[derive(Serialize, Debug)]
pub struct OrbitJson {
    pub size: usize,
    pub classes: Vec<Vec<Vec<Vec<usize>>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Debug)]
pub struct OrbitReportJson {
    pub schema: &'static str,
    pub problem: ProblemJson,
    pub generators: &'static str,
    pub class_count: usize,
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    pub generator_applications: u64,
    pub orbits: Vec<OrbitJson>,
}

impl OrbitReportJson {
    pub fn new(
        problem: &HurwitzProblem,
        generators: &'static str,
        class_count: usize,
        report: &OrbitReport,
    ) -> Self {
        let word = |c: &EquivalenceClass| -> Vec<String> {
            report.witness_paths.as_ref().unwrap()[c]
                .iter()
                .map(ToString::to_string)
                .collect()
        };
        let orbits = report
            .orbits
            .iter()
            .map(|orbit| OrbitJson {
                size: orbit.len(),
                classes: orbit.iter().map(|c| sigma_json(c.sigma())).collect(),
                witnesses: report
                    .witness_paths
                    .as_ref()
                    .map(|_| orbit.iter().map(word).collect()),
            })
            .collect();
        OrbitReportJson {
            schema: ORBIT_SCHEMA,
            problem: problem.into(),
            generators,
            class_count,
            orbit_count: report.orbit_count,
            orbit_sizes: report.orbit_sizes.clone(),
            generator_applications: report.generator_applications,
            orbits,
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub d: usize,
    pub e: Vec<usize>,
    pub h_formula: Option<usize>,
    pub h_enum: usize,
    pub orbit_count: usize,
    pub group_tag: String,
    pub degen_count: usize,
}

impl TableRow {
    pub fn csv_header(r: usize) -> Vec<String> {
        let mut h = vec!["d".to_string()];
        h.extend((1..=r).map(|i| format!("e{i}")));
        h.extend(
            [
                "h_formula",
                "h_enum",
                "orbit_count",
                "group_tag",
                "degen_count",
            ]
            .map(String::from),
        );
        h
    }

    pub fn csv_record(&self) -> Vec<String> {
        let mut rec = vec![self.d.to_string()];
        rec.extend(self.e.iter().map(ToString::to_string));
        rec.push(self.h_formula.map(|h| h.to_string()).unwrap_or_default());
        rec.push(self.h_enum.to_string());
        rec.push(self.orbit_count.to_string());
        rec.push(self.group_tag.clone());
        rec.push(self.degen_count.to_string());
        rec
    }
}

#[derive(Serialize, Debug)]
pub struct TableJson {
    pub schema: &'static str,
    pub r: usize,
    pub dmax: usize,
    pub rows: Vec<TableRow>,
}

#[derive(Serialize, Debug)]
pub struct FourPointEntryJson {
    pub params: String,
    pub sigma: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize, Debug)]
pub struct FourPointListJson {
    pub schema: &'static str,
    pub problem: ProblemJson,
    pub count: usize,
    pub entries: Vec<FourPointEntryJson>,
}
