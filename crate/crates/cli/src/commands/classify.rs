use serde_json::{json, Map, Value};

use quintic_core::lsys::poly::dim_forms;
use quintic_core::lsys::singular::{singular_points_by_rows, MAX_ENUMERATION_PRIME};
use quintic_core::lsys::{constraint_subspace, dim_l, singular_set_bruteforce, type_record, Classification, HomogeneousPoly};
use quintic_core::{Error, FieldTag, Fp};

use crate::report::RunReport;

/// Expected outcome given on the command line: a type id, `none` or `nonsingular`.
pub fn parse_expected(s: &str) -> Result<Classification, String> {
    match s {
        "none" => Ok(Classification::None),
        "nonsingular" => Ok(Classification::Nonsingular),
        _ => {
            let t: u8 = s.parse().map_err(|_| format!("expected type {s:?} is not a number, `none` or `nonsingular`"))?;
            type_record(t).map(|_| Classification::Type(t)).ok_or_else(|| format!("type {t} outside 1..=42"))
        }
    }
}

pub fn describe(c: Classification) -> String {
    match c {
        Classification::Type(t) => format!("type {t}"),
        Classification::None => "none".into(),
        Classification::Nonsingular => "nonsingular".into(),
    }
}

/// Reads the polynomial from a file if `source` names one, else treats it as text.
/// Lines starting with `#` are ignored.
pub fn read_poly_text(source: &str) -> Result<String, String> {
    let text = match std::fs::read_to_string(source) {
        Ok(t) => t,
        Err(_) if !std::path::Path::new(source).exists() => source.to_string(),
        Err(e) => return Err(format!("cannot read {source}: {e}")),
    };
    let body: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    if body.is_empty() {
        return Err(format!("no polynomial in {source:?}"));
    }
    Ok(body.join(" "))
}

fn analyse<const P: u64>(text: &str, expected: Option<Classification>, report: &mut RunReport) -> Result<Value, Error> {
    let f = HomogeneousPoly::<Fp<P>>::parse(text, 5)?;
    let set = singular_set_bruteforce(&f)?;
    let config = set.to_config();
    let class = set.classify()?;
    let d = f.degree();
    let dim = dim_l(&config, d)?;
    let codim = dim_forms(d) - dim;

    let fmt = |v: &[String]| json!(v);
    let mut by_rows: Vec<String> = singular_points_by_rows(&f).iter().map(|p| p.to_string()).collect();
    let mut brute: Vec<String> = set.all_points.iter().map(|p| p.to_string()).collect();
    by_rows.sort();
    brute.sort();
    report.check("singular points: enumeration agrees with gradient rows", brute.join(" "), by_rows.join(" "));
    let space = constraint_subspace(&config, d)?;
    report.check("polynomial lies in its own linear system", true, space.contains(&f.to_vector()));
    if let Classification::Type(t) = class {
        let expected_dim = type_record(t).expect("classifier returns known types").expected_dim;
        report.check(format!("dim L(K) for type {t}"), expected_dim, dim);
    }
    if let Some(e) = expected {
        report.check("classification", describe(e), describe(class));
    }

    Ok(json!({
        "polynomial": f.to_string(),
        "degree": d,
        "singular_set": {
            "whole_plane": set.whole_plane,
            "points": fmt(&brute),
            "isolated_points": fmt(&set.isolated_points.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
            "lines": fmt(&set.line_components.iter().map(|l| l.to_string()).collect::<Vec<_>>()),
            "conics": fmt(&set.conic_components.iter().map(|c| format!("{c:?}")).collect::<Vec<_>>()),
        },
        "classification": describe(class),
        "description": class.type_id().and_then(type_record).map(|r| r.description),
        "dim_l": dim,
        "codimension": codim,
    }))
}

pub fn run(source: &str, field: FieldTag, expected: Option<&str>) -> RunReport {
    let mut inputs = Map::new();
    inputs.insert("expected".into(), json!(expected));
    inputs.insert("field".into(), json!(field.to_string()));
    inputs.insert("poly".into(), json!(source));
    let mut report = RunReport::new("classify", inputs);
    let expected = match expected.map(parse_expected).transpose() {
        Ok(e) => e,
        Err(e) => return report.fail_input(e),
    };
    let p = match field {
        FieldTag::Prime(p) if p <= MAX_ENUMERATION_PRIME => p,
        _ => return report.fail_input(format!("classify needs a prime field fp:<p> with p <= {MAX_ENUMERATION_PRIME}")),
    };
    let text = match read_poly_text(source) {
        Ok(t) => t,
        Err(e) => return report.fail_input(e),
    };
    macro_rules! dispatch {
        ($($q:literal),*) => {
            match p {
                $($q => analyse::<$q>(&text, expected, &mut report),)*
                other => Err(Error::Unsupported(format!("prime {other} is not compiled in"))),
            }
        };
    }
    match dispatch!(5, 7, 11, 13, 17, 19, 23, 29, 31, 101, 103, 1009) {
        Ok(out) => {
            report.output = out;
            report.finish()
        }
        Err(Error::Invariant(e)) => {
            report.check("classification is unambiguous", "one type", format!("error: {e}"));
            report.finish()
        }
        Err(e) => report.fail_input(e),
    }
}
