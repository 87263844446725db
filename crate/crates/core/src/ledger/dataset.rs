use std::collections::BTreeMap;

use super::poly::PoincarePoly;
use super::table::{ColumnSpec, DifferentialDecl, E1Table};
use crate::error::{input, Error, Result};
use crate::lsys::type_record;

const BUILTIN: &str = include_str!("../../data/datasets.txt");

/// A named spectral-sequence table with everything needed to run it to
/// a final polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dataset {
    pub name: String,
    pub about: String,
    pub table: E1Table,
    pub differentials: Vec<DifferentialDecl>,
    pub columns: Vec<ColumnSpec>,
    pub values: BTreeMap<String, PoincarePoly>,
    /// `D` such that the total is dualized into the complement of a
    /// hypersurface in `C^D`.
    pub alexander: Option<u32>,
    pub expected: Option<PoincarePoly>,
    pub factored: Option<String>,
}

impl Dataset {
    /// Parses every `[name]` section of a dataset file.
    pub fn parse_all(text: &str) -> Result<Vec<Dataset>> {
        let mut out: Vec<Dataset> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}: {line:?}", lineno + 1));
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                out.push(Dataset { name: name.trim().to_string(), ..Dataset::default() });
                continue;
            }
            let ds = out.last_mut().ok_or_else(|| err("entry before any [name] header"))?;
            let (key, rest) = line.split_once(char::is_whitespace).ok_or_else(|| err("missing value"))?;
            let rest = rest.trim();
            let words: Vec<&str> = rest.split_whitespace().collect();
            let num = |s: &str| s.parse::<u64>().map_err(|_| err("expected a nonnegative integer"));
            match key {
                "about" => ds.about = rest.to_string(),
                "alexander" => ds.alexander = Some(num(rest)? as u32),
                "expect" => ds.expected = Some(rest.parse()?),
                "factored" => ds.factored = Some(rest.to_string()),
                "entry" => {
                    let [p, q, d] = words[..] else { return Err(err("expected p q dim")) };
                    ds.table.add(num(p)? as u32, num(q)? as u32, num(d)?);
                }
                "diff" => {
                    let [p, q, "->", p2, q2, r] = words[..] else {
                        return Err(err("expected p q -> p' q' rank"));
                    };
                    let decl = DifferentialDecl::between(
                        (num(p)? as u32, num(q)? as u32),
                        (num(p2)? as u32, num(q2)? as u32),
                        num(r)?,
                    )?;
                    ds.differentials.push(decl);
                }
                "column" => {
                    let [i, k, d, ref poly @ ..] = words[..] else {
                        return Err(err("expected index points dim poly"));
                    };
                    let k_points = if k == "-" { None } else { Some(num(k)? as u32) };
                    ds.columns.push(ColumnSpec {
                        index: u8::try_from(num(i)?).map_err(|_| err("column index too large"))?,
                        k_points,
                        fiber_dim: num(d)? as u32,
                        base: poly.join("").parse()?,
                    });
                }
                "value" => {
                    let (name, poly) = rest.split_once(char::is_whitespace).ok_or_else(|| err("expected key poly"))?;
                    ds.values.insert(name.to_string(), poly.parse()?);
                }
                _ => return Err(err("unknown key")),
            }
        }
        Ok(out)
    }

    /// Names of the datasets shipped with the crate.
    pub fn builtin_names() -> Vec<String> {
        Self::parse_all(BUILTIN).expect("built-in datasets parse").into_iter().map(|d| d.name).collect()
    }

    pub fn builtin(name: &str) -> Result<Dataset> {
        Self::parse_all(BUILTIN)
            .expect("built-in datasets parse")
            .into_iter()
            .find(|d| d.name == name)
            .map_or_else(|| input(format!("unknown dataset {name:?}")), Ok)
    }

    pub fn value(&self, key: &str) -> Result<&PoincarePoly> {
        self.values.get(key).ok_or_else(|| Error::Input(format!("dataset {} has no value {key:?}", self.name)))
    }

    pub fn column(&self, index: u8) -> Option<&ColumnSpec> {
        self.columns.iter().find(|c| c.index == index)
    }

    /// The table after all declared differentials.
    pub fn limit_table(&self) -> Result<E1Table> {
        self.table.apply_differentials(&self.differentials)
    }

    /// Total polynomial of the limit table.
    pub fn total(&self) -> Result<PoincarePoly> {
        Ok(self.limit_table()?.totalize())
    }

    /// Total polynomial, dualized when the dataset asks for it.
    pub fn pipeline(&self) -> Result<PoincarePoly> {
        let total = self.total()?;
        match self.alexander {
            Some(d) => total.alexander_dualize(d),
            None => Ok(total),
        }
    }

    /// Sum of every column's shifted base polynomial.
    pub fn column_total(&self) -> Result<PoincarePoly> {
        self.columns.iter().map(|c| c.contribution()).sum()
    }

    /// Checks each column's point count and dimension against the type table.
    pub fn check_columns(&self) -> Result<()> {
        for c in &self.columns {
            let rec = type_record(c.index).ok_or_else(|| Error::Input(format!("no type {}", c.index)))?;
            if rec.k_points.map(u32::from) != c.k_points || u32::from(rec.expected_dim) != c.fiber_dim {
                return input(format!(
                    "column {} declares k={:?}, d={} but the type table has k={:?}, d={}",
                    c.index, c.k_points, c.fiber_dim, rec.k_points, rec.expected_dim
                ));
            }
        }
        Ok(())
    }
}

/// The quintic dataset: the `E^1` table, the 42 filtration columns and the
/// auxiliary polynomials they rely on.
pub fn dataset_quintic() -> Dataset {
    Dataset::builtin("quintic5").expect("quintic5 is built in")
}
