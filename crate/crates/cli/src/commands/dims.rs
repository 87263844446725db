use rayon::prelude::*;
use serde_json::{json, Map};

use quintic_core::lsys::{dim_l, type_record, TYPE_TABLE};
use quintic_core::projgeom::{sample_generic, split_seed};
use quintic_core::{Error, FieldTag, Scalar};

use crate::field::with_field;
use crate::report::RunReport;

/// `"all"` or a single type id.
pub fn parse_types(s: &str) -> Result<Vec<u8>, String> {
    if s == "all" {
        return Ok(TYPE_TABLE.iter().map(|r| r.type_id).collect());
    }
    let t: u8 = s.parse().map_err(|_| format!("type {s:?} is not `all` or a number"))?;
    type_record(t).map(|r| vec![r.type_id]).ok_or_else(|| format!("type {t} outside 1..=42"))
}

struct Sample {
    type_id: u8,
    index: u64,
    seed: u64,
    outcome: Result<usize, Error>,
}

fn sweep<F: Scalar>(types: &[u8], seeds: u64, seed: u64) -> Vec<Sample> {
    let jobs: Vec<(u8, u64)> = types.iter().flat_map(|&t| (0..seeds).map(move |i| (t, i))).collect();
    jobs.into_par_iter()
        .map(|(type_id, index)| {
            let s = split_seed(seed, type_id, index);
            let outcome = sample_generic::<F>(type_id, s).and_then(|k| dim_l(&k, 5));
            Sample { type_id, index, seed: s, outcome }
        })
        .collect()
}

pub fn run(types: &str, field: FieldTag, seeds: u64, seed: u64) -> RunReport {
    let mut inputs = Map::new();
    inputs.insert("field".into(), json!(field.to_string()));
    inputs.insert("seed".into(), json!(seed));
    inputs.insert("seeds".into(), json!(seeds));
    inputs.insert("type".into(), json!(types));
    let mut report = RunReport::new("dims", inputs);
    let types = match parse_types(types) {
        Ok(t) => t,
        Err(e) => return report.fail_input(e),
    };
    let samples = with_field!(field, F => sweep::<F>(&types, seeds, seed));
    for s in &samples {
        let expected = type_record(s.type_id).expect("validated").expected_dim;
        let name = format!("type {} sample {} seed {:#018x}", s.type_id, s.index, s.seed);
        match &s.outcome {
            Ok(d) => {
                report.check(name, expected, d);
            }
            Err(e @ Error::FieldTooSmall { .. }) => return report.fail_input(e),
            Err(e) => {
                report.check(name, expected, format!("error: {e}"));
            }
        }
    }
    report.output = json!({ "types": types.len(), "samples": samples.len() });
    report.finish()
}
