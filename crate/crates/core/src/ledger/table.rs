use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::poly::PoincarePoly;
use crate::error::{input, Error, Result};

/// Sparse table of dimensions `E_{p,q}`; only positive entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct E1Table {
    entries: BTreeMap<(u32, u32), u64>,
}

impl E1Table {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a table from `(p, q, dim)` triples; repeated cells add up.
    pub fn from_entries(entries: impl IntoIterator<Item = (u32, u32, u64)>) -> Self {
        let mut t = Self::new();
        for (p, q, d) in entries {
            t.add(p, q, d);
        }
        t
    }

    pub fn add(&mut self, p: u32, q: u32, dim: u64) {
        if dim > 0 {
            *self.entries.entry((p, q)).or_insert(0) += dim;
        }
    }

    pub fn get(&self, p: u32, q: u32) -> u64 {
        self.entries.get(&(p, q)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(p, q, dim)` in lexicographic order of `(p, q)`.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, u64)> + '_ {
        self.entries.iter().map(|(&(p, q), &d)| (p, q, d))
    }

    /// Entries of column `p`, as a polynomial in the total degree `p + q`.
    pub fn column(&self, p: u32) -> PoincarePoly {
        PoincarePoly::from_terms(self.entries().filter(|e| e.0 == p).map(|(p, q, d)| (p + q, d)))
    }

    /// Column indices that hold at least one entry.
    pub fn columns(&self) -> Vec<u32> {
        let mut cols: Vec<u32> = self.entries.keys().map(|k| k.0).collect();
        cols.dedup();
        cols
    }

    /// Coefficient of `t^n` is the sum of `dim E_{p,q}` over `p + q = n`.
    pub fn totalize(&self) -> PoincarePoly {
        PoincarePoly::from_terms(self.entries().map(|(p, q, d)| (p + q, d)))
    }

    /// Cancels each declared differential against its source and target.
    pub fn apply_differentials(&self, decls: &[DifferentialDecl]) -> Result<Self> {
        let mut out = self.clone();
        for d in decls {
            let (sp, sq) = d.source;
            let (tp, tq) = d.target();
            let available = out.get(sp, sq).min(out.get(tp, tq));
            if d.rank > available {
                return input(format!(
                    "differential {d} of rank {} exceeds available dimension {available}",
                    d.rank
                ));
            }
            for key in [(sp, sq), (tp, tq)] {
                let v = out.entries.get_mut(&key).map_or(0, |v| {
                    *v -= d.rank;
                    *v
                });
                if v == 0 {
                    out.entries.remove(&key);
                }
            }
        }
        Ok(out)
    }
}

/// A differential `d_r : E_{p,q} → E_{p-r, q+r-1}` of known rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialDecl {
    pub source: (u32, u32),
    pub page: u32,
    pub rank: u64,
}

impl DifferentialDecl {
    pub fn new(source: (u32, u32), page: u32, rank: u64) -> Result<Self> {
        if page == 0 || source.0 < page {
            return input(format!("no page-{page} differential out of column {}", source.0));
        }
        Ok(DifferentialDecl { source, page, rank })
    }

    /// Recovers the page from the source and target, checking the bidegree.
    pub fn between(source: (u32, u32), target: (u32, u32), rank: u64) -> Result<Self> {
        let r = source.0.checked_sub(target.0).filter(|&r| r > 0);
        match r {
            Some(r) if target.1 + 1 == source.1 + r => Self::new(source, r, rank),
            _ => input(format!("{source:?} -> {target:?} is not the bidegree of a differential")),
        }
    }

    pub fn target(&self) -> (u32, u32) {
        (self.source.0 - self.page, self.source.1 + self.page - 1)
    }
}

impl std::fmt::Display for DifferentialDecl {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (tp, tq) = self.target();
        write!(f, "d{}: ({},{}) -> ({tp},{tq})", self.page, self.source.0, self.source.1)
    }
}

/// One term of the filtration: a configuration type, its point count
/// (`None` for types containing a curve), the dimension of its linear
/// system, and the Borel–Moore polynomial of the configuration space with
/// sign coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnSpec {
    pub index: u8,
    pub k_points: Option<u32>,
    pub fiber_dim: u32,
    pub base: PoincarePoly,
}

impl ColumnSpec {
    /// The base polynomial shifted up by `2·d + (k − 1)`.
    pub fn contribution(&self) -> Result<PoincarePoly> {
        match self.k_points {
            Some(0) => input(format!("column {} has no points", self.index)),
            Some(k) => Ok(self.base.shift(2 * self.fiber_dim + k - 1)),
            None if self.base.is_zero() => Ok(PoincarePoly::zero()),
            None => Err(Error::Unsupported(format!(
                "column {} contains a curve and has nonzero base {}",
                self.index, self.base
            ))),
        }
    }
}

pub fn column_contribution(c: &ColumnSpec) -> Result<PoincarePoly> {
    c.contribution()
}

pub fn apply_differentials(t: &E1Table, decls: &[DifferentialDecl]) -> Result<E1Table> {
    t.apply_differentials(decls)
}

pub fn totalize(t: &E1Table) -> PoincarePoly {
    t.totalize()
}
