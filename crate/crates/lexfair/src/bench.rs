//! Batch benchmarking: solve generated instances, verify the outputs and
//! emit one CSV row per (instance, criteria) pair.

use std::time::Instant;

use crate::error::Result;
use crate::gen::{generate, GenConfig};
use crate::instance::Polarity;
use crate::ordering::AgentOrdering;
use crate::solver::{solve_chores_ef1, solve_goods, Criteria};
use crate::verify::{envy_edges, verify_report};

/// One benchmark result row.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub seed: u64,
    pub agents: usize,
    pub items: usize,
    pub polarity: Polarity,
    pub criteria: Criteria,
    pub runtime_ns: u128,
    pub envy_edges: usize,
    pub ef1: bool,
    pub efx: bool,
    pub mms: bool,
    pub po: bool,
    pub error: String,
}

/// Runs every criteria mode on every generated config. Solver or verifier
/// errors do not abort the batch; they land in the row's error column.
pub fn run_bench(configs: &[GenConfig], criteria: &[Criteria]) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for config in configs {
        for &mode in criteria {
            rows.push(bench_one(config, mode));
        }
    }
    rows
}

fn bench_one(config: &GenConfig, criteria: Criteria) -> BenchRow {
    let mut row = BenchRow {
        seed: config.seed,
        agents: config.agents,
        items: config.items,
        polarity: config.polarity,
        criteria,
        runtime_ns: 0,
        envy_edges: 0,
        ef1: false,
        efx: false,
        mms: false,
        po: false,
        error: String::new(),
    };
    match try_bench(config, criteria, &mut row) {
        Ok(()) => {}
        Err(err) => row.error = err.to_string(),
    }
    row
}

fn try_bench(config: &GenConfig, criteria: Criteria, row: &mut BenchRow) -> Result<()> {
    let instance = generate(config)?;
    let sigma = AgentOrdering::natural(&instance);
    let start = Instant::now();
    let allocation = match instance.polarity() {
        Polarity::Goods => solve_goods(&instance, &sigma, criteria)?,
        Polarity::Chores => {
            if criteria != Criteria::Null {
                return Err(crate::error::Error::Unsupported(format!(
                    "criteria {criteria} is not supported for chores batches; use null"
                )));
            }
            solve_chores_ef1(&instance, &sigma)?
        }
    };
    row.runtime_ns = start.elapsed().as_nanos();
    row.envy_edges = envy_edges(&instance, &allocation)?.len();
    let report = verify_report(&instance, &allocation)?;
    row.ef1 = report.ef1;
    row.efx = report.efx;
    row.mms = report.all_mms();
    row.po = report.po;
    Ok(())
}

/// Serializes rows as RFC 4180 CSV with a header line.
pub fn rows_to_csv(rows: &[BenchRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record([
            "seed", "agents", "items", "polarity", "criteria", "runtime_ns", "envy_edges",
            "ef1", "efx", "mms", "po", "error",
        ])
        .expect("writing to a vec cannot fail");
    for row in rows {
        writer
            .write_record([
                row.seed.to_string(),
                row.agents.to_string(),
                row.items.to_string(),
                row.polarity.to_string(),
                row.criteria.to_string(),
                row.runtime_ns.to_string(),
                row.envy_edges.to_string(),
                row.ef1.to_string(),
                row.efx.to_string(),
                row.mms.to_string(),
                row.po.to_string(),
                row.error.clone(),
            ])
            .expect("writing to a vec cannot fail");
    }
    String::from_utf8(writer.into_inner().expect("csv writer flush")).expect("csv is utf-8")
}
