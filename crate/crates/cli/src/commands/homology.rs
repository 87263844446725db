use serde_json::{json, Map, Value};

use quintic_core::ledger::PoincarePoly;
use quintic_core::twisted::ModelSpec;
use quintic_core::{DenseMatrix, FieldTag, Result, Scalar};

use crate::field::with_field;
use crate::report::RunReport;

/// A built-in model name or a path to a JSON model file.
pub fn load_model(source: &str) -> Result<ModelSpec> {
    if ModelSpec::builtin_names().contains(&source) {
        return ModelSpec::builtin(source);
    }
    match std::fs::read_to_string(source) {
        Ok(text) => ModelSpec::from_json(&text),
        Err(e) => Err(quintic_core::Error::Input(format!(
            "{source:?} is neither a built-in model ({}) nor a readable file: {e}",
            ModelSpec::builtin_names().join(", ")
        ))),
    }
}

fn rows<F: Scalar>(m: &DenseMatrix<F>) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
}

fn evaluate<F: Scalar>(spec: &ModelSpec, report: &mut RunReport) -> Result<Value> {
    let built = spec.build::<F>()?;
    let outcome = built.evaluate()?;
    let induced: Option<Vec<Vec<Vec<String>>>> = outcome.induced.as_ref().map(|ms| ms.iter().map(rows).collect());
    let expect = spec.expect.clone().unwrap_or_default();
    if let Some(b) = &expect.betti {
        report.check("betti numbers", format!("{b:?}"), format!("{:?}", outcome.betti));
    }
    if let Some(d) = &expect.dual {
        let computed = outcome.dual.as_ref().map_or("(no dual dimension)".to_string(), |p| p.to_string());
        let expected = d.parse::<PoincarePoly>().map_or_else(|e| format!("unparsable {d:?}: {e}"), |p| p.to_string());
        report.check("Borel-Moore polynomial", expected, computed);
    }
    if let Some(expected) = spec.expected_induced::<F>()? {
        let expected: Vec<Vec<Vec<String>>> = expected.iter().map(rows).collect();
        let computed = induced.clone().unwrap_or_default();
        for k in 0..expected.len().max(computed.len()) {
            report.check(
                format!("induced map on H_{k}"),
                format!("{:?}", expected.get(k).cloned().unwrap_or_default()),
                format!("{:?}", computed.get(k).cloned().unwrap_or_default()),
            );
        }
    }
    Ok(json!({
        "model": spec.name,
        "about": spec.about,
        "chain_sizes": built.complex.sizes(),
        "betti": outcome.betti,
        "poincare": outcome.poincare.to_string(),
        "euler_characteristic": built.complex.euler_characteristic(),
        "dual": outcome.dual.map(|p| p.to_string()),
        "induced": induced,
    }))
}

pub fn run(model: &str, field: FieldTag) -> RunReport {
    let mut inputs = Map::new();
    inputs.insert("field".into(), json!(field.to_string()));
    inputs.insert("model".into(), json!(model));
    let mut report = RunReport::new("homology", inputs);
    let spec = match load_model(model) {
        Ok(s) => s,
        Err(e) => return report.fail_input(e),
    };
    match with_field!(field, F => evaluate::<F>(&spec, &mut report)) {
        Ok(out) => {
            report.output = out;
            report.finish()
        }
        Err(e) => report.fail_input(e),
    }
}
