use rand::Rng;
use serde::{Deserialize, Serialize};

use super::complex::{ChainMap, CwComplex, LocalSystem, TwistedChainComplex};
use crate::error::{input, Error, Result};
use crate::exactalg::{DenseMatrix, Scalar};
use crate::ledger::PoincarePoly;

const BUILTIN: [(&str, &str); 4] = [
    ("prop-b-a1", include_str!("../../data/models/prop-b-a1.json")),
    ("prop-b-a2", include_str!("../../data/models/prop-b-a2.json")),
    ("prop-b-a3", include_str!("../../data/models/prop-b-a3.json")),
    ("prop-c", include_str!("../../data/models/prop-c.json")),
];

/// Which self-map of the model to push to homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportMap {
    FiberMap,
    BaseReversal,
}

/// Expected outcomes stored alongside a model.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelExpect {
    #[serde(default)]
    pub betti: Option<Vec<usize>>,
    #[serde(default)]
    pub dual: Option<String>,
    /// One matrix per degree, entries as exact scalars in text form.
    #[serde(default)]
    pub induced: Option<Vec<Vec<Vec<String>>>>,
}

/// A cellular model in JSON form: cells, edge endpoints and monodromy,
/// higher incidences, and optionally a self-map, a mapping-torus twist and
/// the complex dimension used for duality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpec {
    pub name: String,
    #[serde(default)]
    pub about: String,
    pub cells: Vec<Vec<String>>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
    #[serde(default)]
    pub monodromy: Vec<String>,
    #[serde(default)]
    pub higher: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    pub fiber_map: Option<Vec<Vec<Vec<i64>>>>,
    #[serde(default)]
    pub torus_twist: Option<String>,
    #[serde(default)]
    pub report_map: Option<ReportMap>,
    #[serde(default)]
    pub dual_dim: Option<u32>,
    #[serde(default)]
    pub expect: Option<ModelExpect>,
}

/// A model assembled into chain-level data.
#[derive(Clone, Debug)]
pub struct BuiltModel<F: Scalar> {
    pub complex: TwistedChainComplex<F>,
    pub report_map: Option<ChainMap<F>>,
    pub dual_dim: Option<u32>,
}

/// Homology data computed from a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelOutcome<F: Scalar> {
    pub betti: Vec<usize>,
    pub poincare: PoincarePoly,
    pub dual: Option<PoincarePoly>,
    pub induced: Option<Vec<DenseMatrix<F>>>,
}

impl ModelSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("model file: {e}")))
    }

    pub fn builtin_names() -> Vec<&'static str> {
        BUILTIN.iter().map(|(n, _)| *n).collect()
    }

    pub fn builtin(name: &str) -> Result<Self> {
        match BUILTIN.iter().find(|(n, _)| *n == name) {
            Some((_, text)) => Ok(Self::from_json(text).expect("built-in model parses")),
            None => input(format!("unknown model {name:?}")),
        }
    }

    pub fn cw_complex(&self) -> Result<CwComplex> {
        let vertices = self.cells.first().map_or(&[][..], |c| c.as_slice());
        let index = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::Input(format!("edge endpoint {name:?} is not a vertex")))
        };
        let edges = self.edges.iter().map(|[t, h]| Ok((index(t)?, index(h)?))).collect::<Result<_>>()?;
        CwComplex::new(self.cells.clone(), edges, self.higher.clone())
    }

    pub fn build<F: Scalar>(&self) -> Result<BuiltModel<F>> {
        let cw = self.cw_complex()?;
        let n1 = cw.cell_counts().get(1).copied().unwrap_or(0);
        let sys = if self.monodromy.is_empty() {
            LocalSystem::trivial(n1)
        } else {
            LocalSystem::new(self.monodromy.iter().map(|s| F::parse_scalar(s)).collect::<Result<_>>()?)?
        };
        let fiber = cw.twisted(&sys)?;
        let fiber_map = match &self.fiber_map {
            Some(ms) => {
                let maps = ms.iter().map(|m| int_matrix(m)).collect::<Result<_>>()?;
                Some(ChainMap::new(&fiber, &fiber, maps)?)
            }
            None => None,
        };
        let twist = self.torus_twist.as_deref().map(F::parse_scalar).transpose()?;
        let (complex, report_map) = match (&twist, self.report_map) {
            (None, None) => (fiber, None),
            (None, Some(ReportMap::FiberMap)) => {
                let f = fiber_map.ok_or_else(|| Error::Input("report_map needs a fiber_map".into()))?;
                (fiber, Some(f))
            }
            (None, Some(ReportMap::BaseReversal)) => return input("base_reversal needs a torus_twist"),
            (Some(t), report) => {
                let f = fiber_map.unwrap_or_else(|| ChainMap::identity(&fiber));
                let torus = fiber.mapping_torus(&f, t)?;
                let map = match report {
                    None => None,
                    Some(ReportMap::BaseReversal) => Some(f.base_reversal(&torus, t)?),
                    Some(ReportMap::FiberMap) => return input("fiber_map is not a self-map of the mapping torus"),
                };
                (torus, map)
            }
        };
        Ok(BuiltModel { complex, report_map, dual_dim: self.dual_dim })
    }

    pub fn evaluate<F: Scalar>(&self) -> Result<ModelOutcome<F>> {
        self.build::<F>()?.evaluate()
    }

    /// Expected induced matrices parsed into the scalar field.
    pub fn expected_induced<F: Scalar>(&self) -> Result<Option<Vec<DenseMatrix<F>>>> {
        let Some(ms) = self.expect.as_ref().and_then(|e| e.induced.as_ref()) else { return Ok(None) };
        ms.iter()
            .map(|m| {
                let rows = m.iter().map(|r| r.iter().map(|s| F::parse_scalar(s)).collect()).collect::<Result<Vec<Vec<F>>>>()?;
                let cols = rows.first().map_or(0, |r| r.len());
                DenseMatrix::from_rows(rows, cols)
            })
            .collect::<Result<_>>()
            .map(Some)
    }
}

impl<F: Scalar> BuiltModel<F> {
    pub fn evaluate(&self) -> Result<ModelOutcome<F>> {
        let betti = self.complex.homology();
        let poincare = self.complex.betti_poly();
        let dual = self.dual_dim.map(|n| poincare.poincare_dual(n)).transpose()?;
        let induced = self.report_map.as_ref().map(|f| f.induced_map()).transpose()?;
        Ok(ModelOutcome { betti, poincare, dual, induced })
    }
}

fn int_matrix<F: Scalar>(m: &[Vec<i64>]) -> Result<DenseMatrix<F>> {
    let cols = m.first().map_or(0, |r| r.len());
    DenseMatrix::from_rows(m.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect(), cols)
}

/// One vertex with two loops `b`, `c` acting by the given scalars.
pub fn figure_eight<F: Scalar>(lambda_b: F, lambda_c: F) -> Result<TwistedChainComplex<F>> {
    let cw = CwComplex::new(vec![vec!["v".into()], vec!["b".into(), "c".into()]], vec![(0, 0), (0, 0)], vec![])?;
    cw.twisted(&LocalSystem::new(vec![lambda_b, lambda_c])?)
}

/// The self-map of [`figure_eight`] fixing the vertex and exchanging the loops.
pub fn swap_loops<F: Scalar>(c: &TwistedChainComplex<F>) -> Result<ChainMap<F>> {
    let swap = DenseMatrix::from_i64_rows(&[&[0, 1], &[1, 0]])?;
    ChainMap::new(c, c, vec![DenseMatrix::identity(1), swap])
}

/// Unordered pairs of points in `C*` as the mapping torus of the
/// figure-eight under the loop swap: fiber loops act by `fiber_sign`, the
/// base loop by `twist`. Returns the torus and its base reversal.
pub fn pairs_in_cstar<F: Scalar>(fiber_sign: F, twist: F) -> Result<(TwistedChainComplex<F>, ChainMap<F>)> {
    let fiber = figure_eight(fiber_sign.clone(), fiber_sign)?;
    let f = swap_loops(&fiber)?;
    let torus = fiber.mapping_torus(&f, &twist)?;
    let rev = f.base_reversal(&torus, &twist)?;
    Ok((torus, rev))
}

/// A graph with random endpoints and random nonzero monodromy.
pub fn random_graph<F: Scalar, R: Rng + ?Sized>(rng: &mut R, max_vertices: usize, max_edges: usize) -> TwistedChainComplex<F> {
    let nv = rng.gen_range(1..=max_vertices);
    let ne = rng.gen_range(0..=max_edges);
    let cells = vec![(0..nv).map(|i| format!("v{i}")).collect(), (0..ne).map(|i| format!("e{i}")).collect()];
    let edges = (0..ne).map(|_| (rng.gen_range(0..nv), rng.gen_range(0..nv))).collect();
    let cw = CwComplex::new(cells, edges, vec![]).expect("graphs have no higher cells");
    let monodromy = (0..ne)
        .map(|_| loop {
            let v = F::sample(rng);
            if !v.is_zero() {
                break v;
            }
        })
        .collect();
    cw.twisted(&LocalSystem::new(monodromy).expect("nonzero")).expect("graphs are complexes")
}

/// A small random complex: a twisted graph, a product of two, or a mapping
/// torus of one by a scalar self-map.
pub fn random_complex<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> TwistedChainComplex<F> {
    let g = random_graph::<F, R>(rng, 3, 4);
    match rng.gen_range(0..3) {
        0 => g,
        1 => g.tensor(&random_graph(rng, 2, 3)),
        _ => {
            let s = nonzero(rng);
            let t = nonzero(rng);
            g.mapping_torus(&ChainMap::scalar(&g, &s), &t).expect("scalar maps are chain maps")
        }
    }
}

fn nonzero<F: Scalar, R: Rng + ?Sized>(rng: &mut R) -> F {
    loop {
        let v = F::sample(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Q;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    #[test]
    fn figure_eight_with_sign_system() {
        let c = figure_eight(q(-1), q(-1)).unwrap();
        assert_eq!(c.homology(), vec![0, 1]);
        let ind = swap_loops(&c).unwrap().induced_map().unwrap();
        assert_eq!(ind[1], DenseMatrix::from_i64_rows(&[&[-1]]).unwrap());
    }

    #[test]
    fn pairs_in_cstar_systems() {
        let (a1, r1) = pairs_in_cstar(q(1), q(-1)).unwrap();
        let (a2, _) = pairs_in_cstar(q(-1), q(1)).unwrap();
        let (a3, r3) = pairs_in_cstar(q(-1), q(-1)).unwrap();
        for (c, expect) in [(&a1, "t^2(1+t)"), (&a2, "0"), (&a3, "t^2(1+t)")] {
            assert_eq!(c.betti_poly().poincare_dual(2).unwrap(), expect.parse().unwrap());
        }
        for r in [r1, r3] {
            let ind = r.induced_map().unwrap();
            assert_eq!(ind[1], DenseMatrix::from_i64_rows(&[&[1]]).unwrap());
            assert_eq!(ind[2], DenseMatrix::from_i64_rows(&[&[-1]]).unwrap());
        }
    }

    #[test]
    fn builtin_models_meet_their_expectations() {
        for name in ModelSpec::builtin_names() {
            let spec = ModelSpec::builtin(name).unwrap();
            let out = spec.evaluate::<Q>().unwrap();
            let exp = spec.expect.clone().unwrap();
            assert_eq!(Some(out.betti.clone()), exp.betti, "{name}");
            assert_eq!(out.dual.unwrap(), exp.dual.unwrap().parse().unwrap(), "{name}");
            assert_eq!(out.induced, spec.expected_induced::<Q>().unwrap(), "{name}");
        }
    }

    #[test]
    fn bad_models_are_rejected() {
        let mut spec = ModelSpec::builtin("prop-c").unwrap();
        spec.fiber_map = Some(vec![vec![vec![1]], vec![vec![1, 0], vec![0, 0]]]);
        assert!(spec.build::<Q>().is_err());
        let mut spec = ModelSpec::builtin("prop-c").unwrap();
        spec.edges[0][0] = "w".into();
        assert!(spec.build::<Q>().is_err());
        assert!(ModelSpec::from_json("{\"name\": \"x\"}").is_err());
        assert!(ModelSpec::builtin("nope").is_err());
    }
}
