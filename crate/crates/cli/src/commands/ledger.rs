use serde_json::{json, Map, Value};

use quintic_core::ledger::{dataset_quintic, Dataset, E1Table, PoincarePoly};
use quintic_core::twisted::pairs_in_cstar;
use quintic_core::{Result, Scalar, Q};

use crate::report::RunReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Emit {
    Poincare,
    Tables,
}

fn table_json(t: &E1Table) -> Value {
    json!(t.entries().map(|(p, q, d)| json!({ "p": p, "q": q, "dim": d })).collect::<Vec<_>>())
}

fn column_totals(t: &E1Table) -> Value {
    json!(t.columns().into_iter().map(|p| json!({ "p": p, "total": t.column(p).to_string() })).collect::<Vec<_>>())
}

/// Text grid with `q` descending down the rows and `p` across.
pub fn render_grid(t: &E1Table) -> String {
    let cols = t.columns();
    let qs: Vec<u32> = {
        let mut q: Vec<u32> = t.entries().map(|e| e.1).collect();
        q.sort_unstable();
        q.dedup();
        q
    };
    let (Some(&qmin), Some(&qmax)) = (qs.first(), qs.last()) else {
        return "(empty table)\n".into();
    };
    let mut out = String::new();
    for q in (qmin..=qmax).rev() {
        out += &format!("{q:>4} |");
        for &p in &cols {
            let d = t.get(p, q);
            out += &if d == 0 { format!("{:>6}", ".") } else { format!("{:>6}", format!("R^{d}")) };
        }
        out += "\n";
    }
    out += "     +";
    out += &"-".repeat(6 * cols.len());
    out += "\n      ";
    for p in &cols {
        out += &format!("{p:>6}");
    }
    out + "\n"
}

/// Borel–Moore polynomial of a product of two pair spaces in `C*` with the
/// all-signs system, shifted by the degree-one fiber class.
fn product_row_from_models() -> Result<PoincarePoly> {
    let (a3, _) = pairs_in_cstar(Q::from_i64(-1), Q::from_i64(-1))?;
    Ok(a3.tensor(&a3).betti_poly().poincare_dual(4)?.shift(1))
}

fn pair_space_degrees() -> Result<Vec<u32>> {
    let (a1, _) = pairs_in_cstar(Q::from_i64(1), Q::from_i64(-1))?;
    Ok(a1.betti_poly().poincare_dual(2)?.terms().map(|(d, _)| d).collect())
}

fn checks(ds: &Dataset, report: &mut RunReport) -> Result<Value> {
    let limit = ds.limit_table()?;
    let total = limit.totalize();
    let result = ds.pipeline()?;
    let mut out = json!({
        "dataset": ds.name,
        "about": ds.about,
        "differentials": ds.differentials.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "total": total.to_string(),
        "expanded": result.to_string(),
    });
    if let Some(expected) = &ds.expected {
        report.check("final polynomial", expected, &result);
    }
    if let Some(f) = &ds.factored {
        out["factored"] = json!(f);
        match f.parse::<PoincarePoly>() {
            Ok(p) => report.check("factored form expands to the final polynomial", &result, p),
            Err(e) => report.check("factored form expands to the final polynomial", &result, format!("error: {e}")),
        };
    }
    if let Some(d) = ds.alexander {
        out["alexander_dim"] = json!(d);
    }

    match ds.name.as_str() {
        "quintic5" => {
            report.check("no differentials: limit equals E^1", true, limit == ds.table);
            report.check("columns agree with the type table", "ok", ds.check_columns().map_or_else(|e| e.to_string(), |_| "ok".into()));
            let col1 = ds.column(1).map(|c| c.contribution()).transpose()?.unwrap_or_default();
            report.check("column 1 from the shift formula", ds.table.column(1), col1);
            report.check("sum of shifted columns equals the table total", ds.table.totalize(), ds.column_total()?);
        }
        "ss7" => {
            report.check("limit table is empty", true, limit.is_empty());
            let base39 = dataset_quintic().column(39).map(|c| c.base.clone()).unwrap_or_default();
            report.check("column 39 contributes 0", base39, &total);
            out["note"] = json!(format!("column 39 contributes {total}"));
        }
        "ssx" => {
            report.check("row recomputed from pair-space models", &total, product_row_from_models()?);
        }
        "ss2" => {
            let fiber: Vec<u32> = {
                let mut q: Vec<u32> = ds.table.entries().map(|e| e.1).collect();
                q.dedup();
                q.sort_unstable();
                q.dedup();
                q
            };
            report.check("fiber degrees match the pair-space model", format!("{:?}", pair_space_degrees()?), format!("{fiber:?}"));
        }
        _ => {}
    }
    Ok(out)
}

pub fn run(dataset: &str, emit: Emit) -> RunReport {
    let mut inputs = Map::new();
    inputs.insert("dataset".into(), json!(dataset));
    inputs.insert("emit".into(), json!(format!("{emit:?}").to_lowercase()));
    let mut report = RunReport::new("ledger", inputs);
    let ds = match Dataset::builtin(dataset) {
        Ok(d) => d,
        Err(e) => {
            let names = Dataset::builtin_names().join(", ");
            return report.fail_input(format!("{e}; known datasets: {names}"));
        }
    };
    let mut out = match checks(&ds, &mut report) {
        Ok(o) => o,
        Err(e) => return report.fail_input(e),
    };
    if emit == Emit::Tables {
        out["table"] = table_json(&ds.table);
        out["column_totals"] = column_totals(&ds.table);
        if let Ok(limit) = ds.limit_table() {
            out["limit_table"] = table_json(&limit);
        }
        out["grid"] = json!(render_grid(&ds.table));
    }
    report.output = out;
    report.finish()
}
