use std::io::{Read, Write};
use std::ops::RangeInclusive;
use std::time::Instant;

use mdl_core::families::{
    johnson_beta_s_formula, kneser_beta_s_formula, kneser_diameter, metric_dim_formula_nk2,
    psi_formula_nk2,
};
use mdl_core::graph::diameter;
use mdl_core::resolving::{doubly_metric_dimension_exact, metric_dimension_exact};
use mdl_core::strong::strong_metric_dimension_exact;
use mdl_core::{Family, FamilySpec, Graph, SolveResult, Status};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::args::{Invariant, Source};
use crate::error::{CliError, CliResult};

pub const HEADER: [&str; 9] = [
    "family",
    "n",
    "k",
    "vertices",
    "edges",
    "invariant",
    "value",
    "status",
    "elapsed_ms",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowStatus {
    Optimal,
    UpperBoundOnly,
    Formula,
}

impl From<Status> for RowStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Optimal => RowStatus::Optimal,
            Status::UpperBoundOnly => RowStatus::UpperBoundOnly,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasRow {
    #[serde(with = "tag")]
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub vertices: usize,
    pub edges: usize,
    #[serde(with = "tag")]
    pub invariant: Invariant,
    pub value: u64,
    pub status: RowStatus,
    pub elapsed_ms: u128,
}

impl AtlasRow {
    fn sort_key(&self) -> (Family, usize, usize, Invariant) {
        (self.family, self.n, self.k, self.invariant)
    }
}

mod tag {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: TagLike, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&v.as_tag())
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }

    pub trait TagLike {
        fn as_tag(&self) -> &'static str;
    }

    impl TagLike for mdl_core::Family {
        fn as_tag(&self) -> &'static str {
            self.tag()
        }
    }

    impl TagLike for crate::args::Invariant {
        fn as_tag(&self) -> &'static str {
            self.tag()
        }
    }
}

/// Runs the exact solver for one invariant of `g`.
pub fn solve(g: &Graph, invariant: Invariant, budget: u64) -> CliResult<SolveResult> {
    Ok(match invariant {
        Invariant::Beta => metric_dimension_exact(g, budget)?,
        Invariant::BetaS => strong_metric_dimension_exact(g, budget)?,
        Invariant::Psi => doubly_metric_dimension_exact(g, budget)?,
        Invariant::Diam => {
            let start = Instant::now();
            let d = diameter(g).ok_or(mdl_core::Error::Disconnected)?;
            SolveResult {
                value: d as usize,
                certificate: Vec::new(),
                nodes_explored: 0,
                elapsed: start.elapsed(),
                status: Status::Optimal,
                bound: d as usize,
            }
        }
    })
}

/// Closed-form value, when one covers the instance.
pub fn formula(spec: &FamilySpec, invariant: Invariant) -> Option<u64> {
    let (n, k) = (spec.n, spec.k);
    let value = match (invariant, spec.family) {
        (Invariant::BetaS, Family::Johnson) => johnson_beta_s_formula(n, k).ok()?,
        (Invariant::BetaS, Family::Kneser) => kneser_beta_s_formula(n, k).ok()?,
        (Invariant::Beta, _) if k == 2 => metric_dim_formula_nk2(n).ok()? as u64,
        (Invariant::Psi, family) if k == 2 => psi_formula_nk2(n, family).ok()? as u64,
        (Invariant::Diam, Family::Johnson) => k as u64,
        (Invariant::Diam, Family::Kneser) => kneser_diameter(n, k).ok()? as u64,
        _ => return None,
    };
    Some(value)
}

/// Family instances in the ranges, without Johnson duplicates (`n < 2k`)
/// and without invalid parameters.
pub fn instances(
    families: &[Family],
    n: &RangeInclusive<usize>,
    k: &RangeInclusive<usize>,
) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for &family in families {
        for n in n.clone() {
            for k in k.clone() {
                if k == 0 || 2 * k > n {
                    continue;
                }
                if let Ok(spec) = FamilySpec::new(family, n, k) {
                    out.push(spec);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn compute_row(
    spec: &FamilySpec,
    invariant: Invariant,
    source: Source,
    budget: u64,
) -> CliResult<Option<AtlasRow>> {
    let start = Instant::now();
    let g = spec.build()?;
    let (value, status) = match source {
        Source::Formula => match formula(spec, invariant) {
            Some(v) => (v, RowStatus::Formula),
            None => return Ok(None),
        },
        Source::Solver => {
            if !g.is_connected() {
                log::warn!("skipping {spec}: disconnected");
                return Ok(None);
            }
            let r = solve(&g, invariant, budget)?;
            (r.value as u64, r.status.into())
        }
    };
    Ok(Some(AtlasRow {
        family: spec.family,
        n: spec.n,
        k: spec.k,
        vertices: g.n_vertices(),
        edges: g.n_edges(),
        invariant,
        value,
        status,
        elapsed_ms: start.elapsed().as_millis(),
    }))
}

/// One row per instance and invariant, computed in parallel and sorted by
/// `(family, n, k, invariant)`.
pub fn build_atlas(
    specs: &[FamilySpec],
    invariants: &[Invariant],
    source: Source,
    budget: u64,
) -> CliResult<Vec<AtlasRow>> {
    let mut invariants = invariants.to_vec();
    invariants.sort();
    invariants.dedup();
    let tasks: Vec<(FamilySpec, Invariant)> = specs
        .iter()
        .flat_map(|s| invariants.iter().map(move |&i| (*s, i)))
        .collect();
    let results: Vec<CliResult<Option<AtlasRow>>> = tasks
        .par_iter()
        .map(|(spec, inv)| compute_row(spec, *inv, source, budget))
        .collect();
    let mut rows = Vec::with_capacity(results.len());
    for r in results {
        if let Some(row) = r? {
            rows.push(row);
        }
    }
    rows.sort_by_key(AtlasRow::sort_key);
    Ok(rows)
}

pub fn write_atlas<W: Write>(out: W, rows: &[AtlasRow]) -> CliResult<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_atlas<R: Read>(input: R) -> CliResult<Vec<AtlasRow>> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
    if header != HEADER {
        return Err(CliError::Usage(format!(
            "unexpected atlas header `{}`",
            header.join(",")
        )));
    }
    r.deserialize().map(|row| row.map_err(CliError::from)).collect()
}
