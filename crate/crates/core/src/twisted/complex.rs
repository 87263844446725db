use crate::error::{input, Error, Result};
use crate::exactalg::{DenseMatrix, Scalar, SubspaceBasis};
use crate::ledger::PoincarePoly;

/// A finite CW complex given by its cells and integer incidence numbers.
///
/// 1-cells carry a tail and a head vertex; boundaries in dimension two and
/// above are incidence matrices with rows indexed by the cells one
/// dimension down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwComplex {
    cells: Vec<Vec<String>>,
    edges: Vec<(usize, usize)>,
    higher: Vec<Vec<Vec<i64>>>,
}

impl CwComplex {
    pub fn new(cells: Vec<Vec<String>>, edges: Vec<(usize, usize)>, higher: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        if cells.is_empty() {
            return input("a complex needs cells in dimension 0");
        }
        let n0 = cells[0].len();
        let n1 = cells.get(1).map_or(0, |c| c.len());
        if edges.len() != n1 {
            return input(format!("{} edge endpoints for {n1} one-cells", edges.len()));
        }
        if let Some(&(t, h)) = edges.iter().find(|&&(t, h)| t >= n0 || h >= n0) {
            return input(format!("edge endpoint ({t}, {h}) is not a vertex"));
        }
        if higher.len() != cells.len().saturating_sub(2) {
            return input(format!("{} incidence matrices for {} dimensions", higher.len(), cells.len()));
        }
        for (i, m) in higher.iter().enumerate() {
            let k = i + 2;
            let (rows, cols) = (cells[k - 1].len(), cells[k].len());
            if m.len() != rows || m.iter().any(|r| r.len() != cols) {
                return input(format!("incidence matrix in dimension {k} must be {rows}x{cols}"));
            }
        }
        let cx = CwComplex { cells, edges, higher };
        cx.twisted::<crate::Q>(&LocalSystem::trivial(n1))?;
        Ok(cx)
    }

    /// Top dimension of the complex.
    pub fn dim(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn cell_names(&self, k: usize) -> &[String] {
        self.cells.get(k).map_or(&[], |c| c.as_slice())
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.cell_counts())
    }

    /// Chain complex with coefficients in the local system: an edge `e` from
    /// `u` to `v` has boundary `λ_e·v − u`; higher incidences are kept as given.
    pub fn twisted<F: Scalar>(&self, sys: &LocalSystem<F>) -> Result<TwistedChainComplex<F>> {
        let counts = self.cell_counts();
        let n1 = counts.get(1).copied().unwrap_or(0);
        if sys.monodromy.len() != n1 {
            return input(format!("local system has {} scalars for {n1} edges", sys.monodromy.len()));
        }
        let mut boundaries = Vec::new();
        if n1 > 0 {
            let mut d1 = DenseMatrix::<F>::zeros(counts[0], n1);
            for (e, (&(t, h), lambda)) in self.edges.iter().zip(&sys.monodromy).enumerate() {
                d1.set(h, e, d1.get(h, e).clone() + lambda.clone());
                d1.set(t, e, d1.get(t, e).clone() - F::one());
            }
            boundaries.push(d1);
        } else if counts.len() > 1 {
            boundaries.push(DenseMatrix::zeros(counts[0], 0));
        }
        for m in &self.higher {
            let rows: Vec<Vec<F>> = m.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect();
            let cols = m.first().map_or(0, |r| r.len());
            boundaries.push(DenseMatrix::from_rows(rows, cols).unwrap_or_else(|_| DenseMatrix::zeros(m.len(), cols)));
        }
        TwistedChainComplex::new(counts, boundaries)
            .map_err(|e| Error::Input(format!("local system is incompatible with the 2-cells: {e}")))
    }
}

/// A rank-one local system: one nonzero scalar per 1-cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSystem<F: Scalar> {
    monodromy: Vec<F>,
}

impl<F: Scalar> LocalSystem<F> {
    pub fn new(monodromy: Vec<F>) -> Result<Self> {
        if let Some(i) = monodromy.iter().position(|x| x.is_zero()) {
            return input(format!("edge {i} has zero monodromy"));
        }
        Ok(LocalSystem { monodromy })
    }

    pub fn trivial(edges: usize) -> Self {
        LocalSystem { monodromy: vec![F::one(); edges] }
    }

    pub fn monodromy(&self) -> &[F] {
        &self.monodromy
    }
}

/// Chain groups `F^{n_k}` with boundary matrices `∂_k : F^{n_k} → F^{n_{k-1}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedChainComplex<F: Scalar> {
    sizes: Vec<usize>,
    /// `boundaries[k]` is `∂_{k+1}`, of shape `n_k × n_{k+1}`.
    boundaries: Vec<DenseMatrix<F>>,
}

impl<F: Scalar> TwistedChainComplex<F> {
    /// Checks shapes and `∂_k ∘ ∂_{k+1} = 0`.
    pub fn new(sizes: Vec<usize>, boundaries: Vec<DenseMatrix<F>>) -> Result<Self> {
        if sizes.is_empty() {
            return input("a chain complex needs at least one degree");
        }
        if boundaries.len() != sizes.len() - 1 {
            return input(format!("{} boundary maps for {} degrees", boundaries.len(), sizes.len()));
        }
        for (k, b) in boundaries.iter().enumerate() {
            if b.rows() != sizes[k] || b.cols() != sizes[k + 1] {
                return input(format!(
                    "boundary {} is {}x{}, expected {}x{}",
                    k + 1,
                    b.rows(),
                    b.cols(),
                    sizes[k],
                    sizes[k + 1]
                ));
            }
        }
        for k in 1..boundaries.len() {
            if !boundaries[k - 1].mul(&boundaries[k])?.is_zero() {
                return input(format!("boundary squares to nonzero in degree {}", k + 1));
            }
        }
        Ok(TwistedChainComplex { sizes, boundaries })
    }

    /// The complex `F^{sizes}` with all boundaries zero.
    pub fn with_zero_boundaries(sizes: Vec<usize>) -> Self {
        let boundaries = sizes.windows(2).map(|w| DenseMatrix::zeros(w[0], w[1])).collect();
        TwistedChainComplex { sizes, boundaries }
    }

    pub fn top_degree(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn size(&self, k: usize) -> usize {
        self.sizes.get(k).copied().unwrap_or(0)
    }

    /// `∂_k`, or `None` outside `1..=top_degree`.
    pub fn boundary(&self, k: usize) -> Option<&DenseMatrix<F>> {
        k.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    fn boundary_rank(&self, k: usize) -> usize {
        self.boundary(k).map_or(0, |b| b.rank())
    }

    /// Betti numbers `b_k = n_k − rank ∂_k − rank ∂_{k+1}`.
    pub fn homology(&self) -> Vec<usize> {
        (0..self.sizes.len())
            .map(|k| self.sizes[k] - self.boundary_rank(k) - self.boundary_rank(k + 1))
            .collect()
    }

    pub fn betti_poly(&self) -> PoincarePoly {
        PoincarePoly::from_coeff_slice(&self.homology().iter().map(|&b| b as u64).collect::<Vec<_>>())
    }

    /// `Σ (−1)^k n_k`, which equals the alternating sum of Betti numbers.
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.sizes)
    }

    /// Cycles in degree `k`.
    pub fn cycles(&self, k: usize) -> SubspaceBasis<F> {
        match self.boundary(k) {
            Some(b) => b.kernel(),
            None => SubspaceBasis::full(self.size(k)),
        }
    }

    /// Boundaries in degree `k`.
    pub fn boundaries_in(&self, k: usize) -> SubspaceBasis<F> {
        match self.boundary(k + 1) {
            Some(b) => SubspaceBasis::span(self.size(k), b.transpose().row_vecs()).expect("columns have length n_k"),
            None => SubspaceBasis::zero(self.size(k)),
        }
    }

    /// Cycles whose classes form a basis of `H_k`.
    pub fn homology_basis(&self, k: usize) -> Vec<Vec<F>> {
        let mut span = self.boundaries_in(k);
        let mut out = Vec::new();
        for z in self.cycles(k).vectors() {
            if !span.contains(z) {
                let line = SubspaceBasis::span(self.size(k), vec![z.clone()]).expect("length n_k");
                span = span.sum(&line).expect("same ambient space");
                out.push(z.clone());
            }
        }
        out
    }

    /// Coordinates of a cycle's class in the basis from [`Self::homology_basis`].
    pub fn class_of(&self, k: usize, z: &[F]) -> Result<Vec<F>> {
        let mut cols = self.boundaries_in(k).vectors().to_vec();
        let nb = cols.len();
        let basis = self.homology_basis(k);
        cols.extend(basis.iter().cloned());
        if cols.is_empty() {
            return Ok(Vec::new());
        }
        let m = DenseMatrix::from_rows(cols, self.size(k))?.transpose();
        match m.solve(z)? {
            Some(x) => Ok(x[nb..].to_vec()),
            None => input(format!("vector is not a cycle in degree {k}")),
        }
    }

    /// Chain-level tensor product with `∂(a⊗b) = ∂a⊗b + (−1)^{deg a} a⊗∂b`.
    ///
    /// Degree-`n` generators are ordered by the degree `i` of the left factor,
    /// then lexicographically by `(a, b)`.
    pub fn tensor(&self, other: &Self) -> Self {
        let top = self.top_degree() + other.top_degree();
        let offsets: Vec<Vec<usize>> = (0..=top)
            .map(|n| {
                let mut acc = 0;
                (0..=n)
                    .map(|i| {
                        let here = acc;
                        acc += self.size(i) * other.size(n - i);
                        here
                    })
                    .collect()
            })
            .collect();
        let sizes: Vec<usize> = (0..=top).map(|n| (0..=n).map(|i| self.size(i) * other.size(n - i)).sum()).collect();
        let mut boundaries = Vec::new();
        for n in 1..=top {
            let mut d = DenseMatrix::<F>::zeros(sizes[n - 1], sizes[n]);
            for i in 0..=n {
                let j = n - i;
                let (na, nb) = (self.size(i), other.size(j));
                for a in 0..na {
                    for b in 0..nb {
                        let col = offsets[n][i] + a * nb + b;
                        if let Some(da) = self.boundary(i) {
                            let nb_ = other.size(j);
                            for a2 in 0..da.rows() {
                                let c = da.get(a2, a);
                                if !c.is_zero() {
                                    let row = offsets[n - 1][i - 1] + a2 * nb_ + b;
                                    d.set(row, col, d.get(row, col).clone() + c.clone());
                                }
                            }
                        }
                        if let Some(db) = other.boundary(j) {
                            let sign = if i % 2 == 0 { F::one() } else { -F::one() };
                            let nb_ = other.size(j - 1);
                            for b2 in 0..db.rows() {
                                let c = db.get(b2, b);
                                if !c.is_zero() {
                                    let row = offsets[n - 1][i] + a * nb_ + b2;
                                    d.set(row, col, d.get(row, col).clone() + sign.clone() * c.clone());
                                }
                            }
                        }
                    }
                }
            }
            boundaries.push(d);
        }
        TwistedChainComplex::new(sizes, boundaries).expect("tensor product of complexes is a complex")
    }

    /// Algebraic mapping torus of a self chain map `f`, with the base loop
    /// acting on coefficients by `twist`.
    ///
    /// `M_k = C_k ⊕ C_{k−1}` and `∂(x, y) = (∂x + twist·f(y) − y, −∂y)`.
    pub fn mapping_torus(&self, f: &ChainMap<F>, twist: &F) -> Result<Self> {
        if f.source() != self || f.target() != self {
            return input("mapping torus needs a self chain map of the complex");
        }
        if twist.is_zero() {
            return input("mapping torus twist must be nonzero");
        }
        let top = self.top_degree() + 1;
        let sizes: Vec<usize> = (0..=top).map(|k| self.size(k) + k.checked_sub(1).map_or(0, |j| self.size(j))).collect();
        let mut boundaries = Vec::new();
        for k in 1..=top {
            let (xr, xc) = (self.size(k - 1), self.size(k));
            let mut d = DenseMatrix::zeros(sizes[k - 1], sizes[k]);
            if let Some(b) = self.boundary(k) {
                copy_block(&mut d, b, 0, 0, &F::one());
            }
            let mut shear = f.component(k - 1).scale(twist);
            for i in 0..self.size(k - 1) {
                shear.set(i, i, shear.get(i, i).clone() - F::one());
            }
            copy_block(&mut d, &shear, 0, xc, &F::one());
            if k >= 2 {
                if let Some(b) = self.boundary(k - 1) {
                    copy_block(&mut d, b, xr, xc, &-F::one());
                }
            }
            boundaries.push(d);
        }
        TwistedChainComplex::new(sizes, boundaries)
    }
}

fn copy_block<F: Scalar>(dst: &mut DenseMatrix<F>, src: &DenseMatrix<F>, r0: usize, c0: usize, s: &F) {
    for i in 0..src.rows() {
        for j in 0..src.cols() {
            let v = src.get(i, j);
            if !v.is_zero() {
                dst.set(r0 + i, c0 + j, v.clone() * s.clone());
            }
        }
    }
}

fn alternating_sum(xs: &[usize]) -> i64 {
    xs.iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
}

/// A chain map `f_k : C_k → D_k` commuting with the boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap<F: Scalar> {
    source: TwistedChainComplex<F>,
    target: TwistedChainComplex<F>,
    maps: Vec<DenseMatrix<F>>,
}

impl<F: Scalar> ChainMap<F> {
    /// `maps[k]` has shape `target.size(k) × source.size(k)`; missing
    /// trailing degrees are zero.
    pub fn new(source: &TwistedChainComplex<F>, target: &TwistedChainComplex<F>, maps: Vec<DenseMatrix<F>>) -> Result<Self> {
        let top = source.top_degree().max(target.top_degree());
        if maps.len() > top + 1 {
            return input(format!("{} components for degrees 0..={top}", maps.len()));
        }
        let mut full = maps;
        while full.len() <= top {
            let k = full.len();
            full.push(DenseMatrix::zeros(target.size(k), source.size(k)));
        }
        for (k, m) in full.iter().enumerate() {
            if m.rows() != target.size(k) || m.cols() != source.size(k) {
                return input(format!(
                    "component {k} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    target.size(k),
                    source.size(k)
                ));
            }
        }
        for k in 1..=top {
            let left = match target.boundary(k) {
                Some(d) => d.mul(&full[k])?,
                None => DenseMatrix::zeros(target.size(k - 1), source.size(k)),
            };
            let right = match source.boundary(k) {
                Some(d) => full[k - 1].mul(d)?,
                None => DenseMatrix::zeros(target.size(k - 1), source.size(k)),
            };
            if left != right {
                return input(format!("map does not commute with the boundary in degree {k}"));
            }
        }
        Ok(ChainMap { source: source.clone(), target: target.clone(), maps: full })
    }

    pub fn identity(c: &TwistedChainComplex<F>) -> Self {
        Self::scalar(c, &F::one())
    }

    /// Multiplication by `s` in every degree.
    pub fn scalar(c: &TwistedChainComplex<F>, s: &F) -> Self {
        let maps = c.sizes().iter().map(|&n| DenseMatrix::identity(n).scale(s)).collect();
        ChainMap { source: c.clone(), target: c.clone(), maps }
    }

    pub fn source(&self) -> &TwistedChainComplex<F> {
        &self.source
    }

    pub fn target(&self) -> &TwistedChainComplex<F> {
        &self.target
    }

    /// `f_k`, zero outside the range of degrees.
    pub fn component(&self, k: usize) -> DenseMatrix<F> {
        self.maps.get(k).cloned().unwrap_or_else(|| DenseMatrix::zeros(self.target.size(k), self.source.size(k)))
    }

    pub fn compose(&self, after: &ChainMap<F>) -> Result<ChainMap<F>> {
        if after.source != self.target {
            return input("composition of chain maps with mismatched complexes");
        }
        let maps = (0..self.maps.len().max(after.maps.len()))
            .map(|k| after.component(k).mul(&self.component(k)))
            .collect::<Result<_>>()?;
        ChainMap::new(&self.source, &after.target, maps)
    }

    /// Matrices of the induced maps on homology, one per degree, in the
    /// bases of [`TwistedChainComplex::homology_basis`].
    pub fn induced_map(&self) -> Result<Vec<DenseMatrix<F>>> {
        let top = self.source.top_degree().max(self.target.top_degree());
        (0..=top)
            .map(|k| {
                let src = self.source.homology_basis(k);
                let tgt_dim = self.target.homology_basis(k).len();
                let mut cols = Vec::with_capacity(src.len());
                for z in &src {
                    let image = self.component(k).mul_vec(z)?;
                    cols.push(self.target.class_of(k, &image)?);
                }
                if cols.is_empty() {
                    return Ok(DenseMatrix::zeros(tgt_dim, 0));
                }
                Ok(DenseMatrix::from_rows(cols, tgt_dim)?.transpose())
            })
            .collect()
    }

    /// The chain map of the mapping torus of `self` reversing the base
    /// circle: `(x, y) ↦ (x, −twist⁻¹·f⁻¹(y))`.
    ///
    /// Defined when `f∘f = twist⁻²`, which makes `f⁻¹ = twist²·f`.
    pub fn base_reversal(&self, torus: &TwistedChainComplex<F>, twist: &F) -> Result<ChainMap<F>> {
        let c = &self.source;
        let tinv = twist.inv().ok_or_else(|| Error::Input("twist must be nonzero".into()))?;
        let tinv2 = tinv.clone() * tinv.clone();
        let t2 = twist.clone() * twist.clone();
        for k in 0..=c.top_degree() {
            let sq = self.component(k).mul(&self.component(k))?;
            if sq != DenseMatrix::identity(c.size(k)).scale(&tinv2) {
                return input(format!("monodromy squared is not twist^-2 in degree {k}"));
            }
        }
        let mut maps = Vec::new();
        for k in 0..=c.top_degree() + 1 {
            let mut m = DenseMatrix::zeros(torus.size(k), torus.size(k));
            copy_block(&mut m, &DenseMatrix::identity(c.size(k)), 0, 0, &F::one());
            if k >= 1 {
                let s = -(tinv.clone() * t2.clone());
                copy_block(&mut m, &self.component(k - 1), c.size(k), c.size(k), &s);
            }
            maps.push(m);
        }
        ChainMap::new(torus, torus, maps)
    }
}

pub fn homology<F: Scalar>(c: &TwistedChainComplex<F>) -> Vec<usize> {
    c.homology()
}

pub fn tensor<F: Scalar>(a: &TwistedChainComplex<F>, b: &TwistedChainComplex<F>) -> TwistedChainComplex<F> {
    a.tensor(b)
}

pub fn mapping_torus<F: Scalar>(c: &TwistedChainComplex<F>, f: &ChainMap<F>, twist: &F) -> Result<TwistedChainComplex<F>> {
    c.mapping_torus(f, twist)
}

pub fn induced_map<F: Scalar>(f: &ChainMap<F>) -> Result<Vec<DenseMatrix<F>>> {
    f.induced_map()
}

/// `t^{2n}·p(1/t)`; see [`PoincarePoly::poincare_dual`].
pub fn poincare_dual(p: &PoincarePoly, n: u32) -> Result<PoincarePoly> {
    p.poincare_dual(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Q;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn circle(lambda: i64) -> TwistedChainComplex<Q> {
        let cw = CwComplex::new(vec![vec!["v".into()], vec!["a".into()]], vec![(0, 0)], vec![]).unwrap();
        cw.twisted(&LocalSystem::new(vec![q(lambda)]).unwrap()).unwrap()
    }

    #[test]
    fn circles() {
        assert_eq!(circle(1).homology(), vec![1, 1]);
        assert_eq!(circle(-1).homology(), vec![0, 0]);
        assert_eq!(circle(-1).boundary(1).unwrap().get(0, 0), &q(-2));
    }

    #[test]
    fn torus_two_ways() {
        assert_eq!(circle(1).tensor(&circle(1)).homology(), vec![1, 2, 1]);
        let c = circle(1);
        let t = c.mapping_torus(&ChainMap::identity(&c), &q(1)).unwrap();
        assert_eq!(t.homology(), vec![1, 2, 1]);
        assert!(circle(-1).tensor(&circle(1).tensor(&circle(1))).homology().iter().all(|&b| b == 0));
    }

    #[test]
    fn boundary_squares_checked() {
        let d1 = DenseMatrix::<Q>::from_i64_rows(&[&[1]]).unwrap();
        let d2 = DenseMatrix::<Q>::from_i64_rows(&[&[1]]).unwrap();
        assert!(TwistedChainComplex::new(vec![1, 1, 1], vec![d1, d2]).is_err());
        assert!(LocalSystem::<Q>::new(vec![q(0)]).is_err());
    }

    #[test]
    fn non_chain_map_rejected() {
        let c = circle(-1);
        let bad = vec![DenseMatrix::identity(1), DenseMatrix::zeros(1, 1)];
        assert!(ChainMap::new(&c, &c, bad).is_err());
    }

    #[test]
    fn identity_induces_identity() {
        let t = circle(1).tensor(&circle(1));
        for (k, m) in ChainMap::identity(&t).induced_map().unwrap().iter().enumerate() {
            assert_eq!(m, &DenseMatrix::identity(t.homology()[k]));
        }
    }

    #[test]
    fn tensor_sign_convention() {
        let t = circle(1).tensor(&circle(1));
        assert_eq!(t.sizes(), &[1, 2, 1]);
        assert!(t.boundary(1).unwrap().is_zero());
        assert!(t.boundary(2).unwrap().is_zero());
        let s = circle(2).tensor(&circle(3));
        // a⊗b ↦ (2−1)v⊗b − a⊗(3−1)v, with v⊗b listed before a⊗v
        let d2 = s.boundary(2).unwrap();
        assert_eq!(d2.get(0, 0), &q(1));
        assert_eq!(d2.get(1, 0), &q(-2));
    }
}
