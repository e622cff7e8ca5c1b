//! Representations of a double quiver over an exact field, with socles,
//! radicals, filtrations, Hom spaces, isomorphism tests, quotients and
//! generated submodules.

use std::sync::Arc;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::linalg::{Matrix, Subspace};
use crate::quiver::{Quiver, QuiverSpec};

/// A representation: one space per vertex and one matrix per arrow, with
/// `maps[a]` of shape `dims[t(a)] x dims[s(a)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep<F: Field> {
    field: F,
    quiver: Arc<Quiver>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

/// A graded linear map between two representations, one block per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism<F: Field> {
    pub blocks: Vec<Matrix<F>>,
}

/// A graded subspace of some representation, one canonical echelon subspace
/// per vertex. The ambient representation is passed to every operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subrep<F: Field> {
    spaces: Vec<Subspace<F>>,
}

impl<F: Field> PartialOrd for Subrep<F> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for Subrep<F> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.spaces.cmp(&other.spaces)
    }
}

/// Outcome of a bounded isomorphism search that is allowed to give up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoSearch<F: Field> {
    Isomorphic(Morphism<F>),
    NotIsomorphic,
    Inconclusive { hom_dim: usize },
}

/// Cap on coefficient vectors tried by the isomorphism search.
pub const ISO_SEARCH_BUDGET: u64 = 200_000;

impl<F: Field> Morphism<F> {
    pub fn identity(rep: &Rep<F>) -> Self {
        Morphism { blocks: rep.dims.iter().map(|&d| Matrix::identity(&rep.field, d)).collect() }
    }

    pub fn zero(field: &F, target: &[usize], source: &[usize]) -> Self {
        Morphism { blocks: target.iter().zip(source).map(|(&r, &c)| Matrix::zeros(field, r, c)).collect() }
    }

    pub fn compose(&self, inner: &Morphism<F>) -> Morphism<F> {
        Morphism { blocks: self.blocks.iter().zip(&inner.blocks).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn add(&self, other: &Morphism<F>) -> Morphism<F> {
        Morphism { blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn scale(&self, s: &F::Elem) -> Morphism<F> {
        Morphism { blocks: self.blocks.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<Morphism<F>> {
        let blocks = self.blocks.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(Morphism { blocks })
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn kernel(&self) -> Vec<Subspace<F>> {
        self.blocks.iter().map(|b| Subspace::span(b.field(), b.cols(), b.kernel())).collect()
    }

    pub fn image(&self) -> Subrep<F> {
        Subrep { spaces: self.blocks.iter().map(Subspace::column_space).collect() }
    }

    /// Whether `self` intertwines the arrow actions of `source` and `target`.
    pub fn is_homomorphism(&self, source: &Rep<F>, target: &Rep<F>) -> bool {
        let q = &source.quiver;
        (0..q.num_arrows()).all(|a| {
            let (s, t) = (q.arrow(a).source, q.arrow(a).target);
            self.blocks[t].mul(&source.maps[a]) == target.maps[a].mul(&self.blocks[s])
        })
    }
}

/// Layout of the unknown entries of a graded map `V -> W` in a linear system.
pub(crate) struct BlockLayout {
    rows: Vec<usize>,
    cols: Vec<usize>,
    offsets: Vec<usize>,
    total: usize,
}

impl BlockLayout {
    pub(crate) fn new(rows: &[usize], cols: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(rows.len());
        let mut total = 0;
        for (r, c) in rows.iter().zip(cols) {
            offsets.push(total);
            total += r * c;
        }
        BlockLayout { rows: rows.to_vec(), cols: cols.to_vec(), offsets, total }
    }

    pub(crate) fn total(&self) -> usize {
        self.total
    }

    pub(crate) fn var(&self, v: usize, r: usize, c: usize) -> usize {
        self.offsets[v] + r * self.cols[v] + c
    }

    pub(crate) fn assemble<F: Field>(&self, field: &F, x: &[F::Elem]) -> Morphism<F> {
        let blocks = (0..self.rows.len())
            .map(|v| {
                let mut m = Matrix::zeros(field, self.rows[v], self.cols[v]);
                for r in 0..self.rows[v] {
                    for c in 0..self.cols[v] {
                        m.set(r, c, x[self.var(v, r, c)].clone());
                    }
                }
                m
            })
            .collect();
        Morphism { blocks }
    }

    /// Rows of `gamma_t x^V_a - scalar_a * x^W_a gamma_s = 0` for every arrow.
    pub(crate) fn intertwining_rows<F: Field>(
        &self,
        source: &Rep<F>,
        target: &Rep<F>,
        scalars: Option<&[F::Elem]>,
    ) -> Vec<Vec<F::Elem>> {
        let f = &source.field;
        let q = &source.quiver;
        let mut rows = Vec::new();
        for a in 0..q.num_arrows() {
            let (s, t) = (q.arrow(a).source, q.arrow(a).target);
            let xv = &source.maps[a];
            let xw = &target.maps[a];
            let scalar = scalars.map(|s| s[a].clone()).unwrap_or_else(|| f.one());
            for r in 0..target.dims[t] {
                for c in 0..source.dims[s] {
                    let mut row = vec![f.zero(); self.total];
                    for k in 0..source.dims[t] {
                        let x = xv.get(k, c);
                        if !f.is_zero(x) {
                            let i = self.var(t, r, k);
                            row[i] = f.add(&row[i], x);
                        }
                    }
                    for k in 0..target.dims[s] {
                        let x = xw.get(r, k);
                        if !f.is_zero(x) {
                            let i = self.var(s, k, c);
                            row[i] = f.sub(&row[i], &f.mul(&scalar, x));
                        }
                    }
                    if row.iter().any(|e| !f.is_zero(e)) {
                        rows.push(row);
                    }
                }
            }
        }
        rows
    }
}

impl<F: Field> Subrep<F> {
    pub fn new(spaces: Vec<Subspace<F>>) -> Self {
        Subrep { spaces }
    }

    pub fn zero(rep: &Rep<F>) -> Self {
        Subrep { spaces: rep.dims.iter().map(|&d| Subspace::zero(&rep.field, d)).collect() }
    }

    pub fn full(rep: &Rep<F>) -> Self {
        Subrep { spaces: rep.dims.iter().map(|&d| Subspace::full(&rep.field, d)).collect() }
    }

    pub fn spaces(&self) -> &[Subspace<F>] {
        &self.spaces
    }

    pub fn space(&self, v: usize) -> &Subspace<F> {
        &self.spaces[v]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().all(Subspace::is_zero)
    }

    pub fn is_subrep_of(&self, other: &Subrep<F>) -> bool {
        self.spaces.iter().zip(&other.spaces).all(|(a, b)| a.is_subspace_of(b))
    }

    pub fn sum(&self, other: &Subrep<F>) -> Subrep<F> {
        Subrep { spaces: self.spaces.iter().zip(&other.spaces).map(|(a, b)| a.sum(b)).collect() }
    }

    pub fn intersect(&self, other: &Subrep<F>) -> Subrep<F> {
        Subrep { spaces: self.spaces.iter().zip(&other.spaces).map(|(a, b)| a.intersect(b)).collect() }
    }

    /// Arrow closure `x_a(S_{s(a)}) <= S_{t(a)}` inside `rep`.
    pub fn is_closed_in(&self, rep: &Rep<F>) -> bool {
        let q = &rep.quiver;
        self.spaces.len() == rep.dims.len()
            && self.spaces.iter().zip(&rep.dims).all(|(s, &d)| s.ambient_dim() == d)
            && (0..q.num_arrows()).all(|a| {
                let (s, t) = (q.arrow(a).source, q.arrow(a).target);
                self.spaces[s].basis().iter().all(|b| self.spaces[t].contains(&rep.maps[a].mul_vec(b)))
            })
    }

    pub fn convert<G: Field>(&self, target: &G, f: impl Fn(&F::Elem) -> Result<G::Elem>) -> Result<Subrep<G>> {
        let spaces = self.spaces.iter().map(|s| s.convert(target, &f)).collect::<Result<Vec<_>>>()?;
        Ok(Subrep { spaces })
    }

    /// Canonical echelon bases per vertex as JSON.
    pub fn to_json(&self, rep: &Rep<F>) -> Value {
        let f = &rep.field;
        let spaces: Vec<Value> = self
            .spaces
            .iter()
            .zip(rep.quiver.vertices())
            .map(|(s, v)| {
                let rows: Vec<Value> =
                    s.basis().iter().map(|r| Value::Array(r.iter().map(|x| f.to_json(x)).collect())).collect();
                serde_json::json!({ "vertex": v, "basis": rows })
            })
            .collect();
        serde_json::json!({ "dims": self.dims(), "spaces": spaces })
    }
}

impl<F: Field> Rep<F> {
    /// Validate shapes (and, when asked, the preprojective relations).
    pub fn new(field: F, quiver: Arc<Quiver>, dims: Vec<usize>, maps: Vec<Matrix<F>>, preprojective: bool) -> Result<Self> {
        if !quiver.is_double() {
            return Err(Error::Validation("representations live on a double quiver".into()));
        }
        if dims.len() != quiver.num_vertices() {
            return Err(Error::ShapeMismatch(format!("{} dims for {} vertices", dims.len(), quiver.num_vertices())));
        }
        if maps.len() != quiver.num_arrows() {
            return Err(Error::ShapeMismatch(format!("{} maps for {} arrows", maps.len(), quiver.num_arrows())));
        }
        for (a, m) in maps.iter().enumerate() {
            let arrow = quiver.arrow(a);
            let want = (dims[arrow.target], dims[arrow.source]);
            if m.shape() != want {
                return Err(Error::ShapeMismatch(format!("arrow {}: got {:?}, want {:?}", arrow.name, m.shape(), want)));
            }
        }
        let rep = Rep { field, quiver, dims, maps };
        if preprojective {
            let bad = rep.violated_vertices();
            if !bad.is_empty() {
                return Err(Error::RelationViolated { vertices: bad });
            }
        }
        Ok(rep)
    }

    /// The representation with all maps zero (the semisimple module `s^dims`).
    pub fn semisimple(field: F, quiver: Arc<Quiver>, dims: Vec<usize>) -> Result<Self> {
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(&field, dims[a.target], dims[a.source]))
            .collect();
        Rep::new(field, quiver, dims, maps, true)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }
    pub fn map(&self, a: usize) -> &Matrix<F> {
        &self.maps[a]
    }

    /// Per-vertex residual `sum_{t(a)=i} x_a x_abar - sum_{s(a)=i} x_abar x_a`
    /// over original arrows `a`.
    pub fn preprojective_residuals(&self) -> Vec<Matrix<F>> {
        let q = &self.quiver;
        let f = &self.field;
        let mut res: Vec<Matrix<F>> = self.dims.iter().map(|&d| Matrix::zeros(f, d, d)).collect();
        for a in 0..q.num_arrows() {
            if !q.is_original(a) {
                continue;
            }
            let abar = q.bar(a).expect("double quiver");
            let (s, t) = (q.arrow(a).source, q.arrow(a).target);
            res[t] = res[t].add(&self.maps[a].mul(&self.maps[abar]));
            res[s] = res[s].sub(&self.maps[abar].mul(&self.maps[a]));
        }
        res
    }

    pub fn violated_vertices(&self) -> Vec<String> {
        self.preprojective_residuals()
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(v, _)| self.quiver.vertices()[v].clone())
            .collect()
    }

    pub fn is_preprojective(&self) -> bool {
        self.violated_vertices().is_empty()
    }

    /// Common kernel of all arrows leaving each vertex.
    pub fn socle(&self) -> Subrep<F> {
        self.preimage_of(&Subrep::zero(self))
    }

    /// `{v in V_i : x_a v in S_{t(a)} for every arrow a leaving i}`.
    pub fn preimage_of(&self, s: &Subrep<F>) -> Subrep<F> {
        let q = &self.quiver;
        let spaces = (0..self.dims.len())
            .map(|v| {
                let mut acc = Subspace::full(&self.field, self.dims[v]);
                for a in q.arrows_from(v) {
                    let pre = Subspace::preimage(&self.maps[a], &s.spaces[q.arrow(a).target]);
                    acc = acc.intersect(&pre);
                }
                acc
            })
            .collect();
        Subrep { spaces }
    }

    /// Sum of the images of all arrows applied to `s`.
    pub fn arrow_image(&self, s: &Subrep<F>) -> Subrep<F> {
        let q = &self.quiver;
        let mut spaces: Vec<Subspace<F>> = self.dims.iter().map(|&d| Subspace::zero(&self.field, d)).collect();
        for a in 0..q.num_arrows() {
            let (src, t) = (q.arrow(a).source, q.arrow(a).target);
            let img = Subspace::image(&self.maps[a], &s.spaces[src]);
            spaces[t] = spaces[t].sum(&img);
        }
        Subrep { spaces }
    }

    /// `P_+ V`, the span of all arrow images.
    pub fn radical(&self) -> Subrep<F> {
        self.arrow_image(&Subrep::full(self))
    }

    /// `0 = V^(0) <= V^(1) = soc V <= ...` up to stabilization.
    pub fn socle_filtration(&self) -> Vec<Subrep<F>> {
        let mut chain = vec![Subrep::zero(self)];
        loop {
            let next = self.preimage_of(chain.last().expect("nonempty"));
            if &next == chain.last().expect("nonempty") {
                return chain;
            }
            chain.push(next);
        }
    }

    /// `V >= P_+ V >= P_{>=2} V >= ...` up to stabilization.
    pub fn radical_series(&self) -> Vec<Subrep<F>> {
        let mut chain = vec![Subrep::full(self)];
        loop {
            let next = self.arrow_image(chain.last().expect("nonempty"));
            if &next == chain.last().expect("nonempty") {
                return chain;
            }
            chain.push(next);
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.radical_series().last().expect("nonempty").is_zero()
    }

    /// Loewy length: the number of nonzero socle layers of a nilpotent rep.
    pub fn loewy_length(&self) -> Option<usize> {
        let f = self.socle_filtration();
        (f.last().expect("nonempty").dims() == self.dims).then(|| f.len() - 1)
    }

    /// Basis of `Hom_P(self, other)`.
    pub fn hom_space(&self, other: &Rep<F>) -> Vec<Morphism<F>> {
        let layout = BlockLayout::new(&other.dims, &self.dims);
        let rows = layout.intertwining_rows(self, other, None);
        let m = Matrix::from_rows(&self.field, layout.total(), rows);
        m.kernel().iter().map(|k| layout.assemble(&self.field, k)).collect()
    }

    /// Search for an invertible homomorphism `self -> other`.
    ///
    /// Over the rationals the sweep uses the grid `{0..=D}^k` (D = total
    /// dimension, k = Hom dimension), on which a nonzero determinant cannot
    /// vanish identically; over `F_p` the sweep is exhaustive. Either sweep is
    /// conclusive when it fits the budget.
    pub fn find_isomorphism(&self, other: &Rep<F>) -> IsoSearch<F> {
        if self.dims != other.dims || !self.same_invariants(other) {
            return IsoSearch::NotIsomorphic;
        }
        if self.total_dim() == 0 {
            return IsoSearch::Isomorphic(Morphism::identity(self));
        }
        let basis = self.hom_space(other);
        let k = basis.len();
        if k == 0 {
            return IsoSearch::NotIsomorphic;
        }
        let f = &self.field;
        for b in &basis {
            if b.is_invertible() {
                return IsoSearch::Isomorphic(b.clone());
            }
        }
        // cheap deterministic guesses before the exhaustive sweep
        for t in 0..4u32 {
            let mut m = basis[0].clone();
            for (j, b) in basis.iter().enumerate().skip(1) {
                m = m.add(&b.scale(&f.from_i64((j as i64 + 1).pow(t))));
            }
            if m.is_invertible() {
                return IsoSearch::Isomorphic(m);
            }
        }
        let (values, conclusive_len): (Vec<F::Elem>, u64) = match f.spec() {
            FieldSpec::Rationals => {
                let d = self.total_dim() as i64;
                ((0..=d).map(|x| f.from_i64(x)).collect(), d as u64 + 1)
            }
            FieldSpec::PrimeField(p) => ((0..p as i64).map(|x| f.from_i64(x)).collect(), p),
        };
        let grid = (conclusive_len as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        let budget = ISO_SEARCH_BUDGET.min(grid.min(u64::MAX as u128) as u64);
        let mut digits = vec![0usize; k];
        for _ in 0..budget {
            let mut m = basis[0].scale(&values[digits[0]]);
            for j in 1..k {
                m = m.add(&basis[j].scale(&values[digits[j]]));
            }
            if m.is_invertible() {
                return IsoSearch::Isomorphic(m);
            }
            for d in digits.iter_mut() {
                *d += 1;
                if *d < values.len() {
                    break;
                }
                *d = 0;
            }
        }
        if grid <= ISO_SEARCH_BUDGET as u128 {
            IsoSearch::NotIsomorphic
        } else {
            IsoSearch::Inconclusive { hom_dim: k }
        }
    }

    pub fn is_isomorphic(&self, other: &Rep<F>) -> Result<bool> {
        match self.find_isomorphism(other) {
            IsoSearch::Isomorphic(_) => Ok(true),
            IsoSearch::NotIsomorphic => Ok(false),
            IsoSearch::Inconclusive { hom_dim } => Err(Error::SearchExhausted { hom_dim }),
        }
    }

    fn same_invariants(&self, other: &Rep<F>) -> bool {
        let dims = |c: Vec<Subrep<F>>| c.iter().map(Subrep::dims).collect::<Vec<_>>();
        dims(self.socle_filtration()) == dims(other.socle_filtration())
            && dims(self.radical_series()) == dims(other.radical_series())
    }

    /// `V / S` with the projection `V -> V/S`. The quotient basis at each
    /// vertex is indexed by the non-pivot coordinates of `S`.
    pub fn quotient(&self, s: &Subrep<F>) -> Result<(Rep<F>, Morphism<F>)> {
        if !s.is_closed_in(self) {
            return Err(Error::NotSubmodule);
        }
        let f = &self.field;
        let proj: Vec<Matrix<F>> = s.spaces.iter().map(Subspace::residual_matrix).collect();
        let free: Vec<Vec<usize>> = s.spaces.iter().map(Subspace::free_coordinates).collect();
        let dims: Vec<usize> = free.iter().map(Vec::len).collect();
        let q = &self.quiver;
        let maps = (0..q.num_arrows())
            .map(|a| {
                let (src, t) = (q.arrow(a).source, q.arrow(a).target);
                let mut m = Matrix::zeros(f, dims[t], dims[src]);
                for (j, &c) in free[src].iter().enumerate() {
                    let img = proj[t].mul_vec(&self.maps[a].column(c));
                    for (i, x) in img.into_iter().enumerate() {
                        m.set(i, j, x);
                    }
                }
                m
            })
            .collect();
        let quotient = Rep::new(f.clone(), self.quiver.clone(), dims, maps, false)?;
        Ok((quotient, Morphism { blocks: proj }))
    }

    /// `S` as a representation in its echelon basis, with the inclusion map.
    pub fn restrict(&self, s: &Subrep<F>) -> Result<(Rep<F>, Morphism<F>)> {
        if !s.is_closed_in(self) {
            return Err(Error::NotSubmodule);
        }
        let f = &self.field;
        let q = &self.quiver;
        let dims = s.dims();
        let maps = (0..q.num_arrows())
            .map(|a| {
                let (src, t) = (q.arrow(a).source, q.arrow(a).target);
                let cols: Vec<Vec<F::Elem>> = s.spaces[src]
                    .basis()
                    .iter()
                    .map(|b| s.spaces[t].coordinates(&self.maps[a].mul_vec(b)).expect("closed"))
                    .collect();
                Matrix::from_columns(f, dims[t], &cols)
            })
            .collect();
        let sub = Rep::new(f.clone(), self.quiver.clone(), dims, maps, false)?;
        let inclusion = Morphism { blocks: s.spaces.iter().map(Subspace::basis_matrix).collect() };
        Ok((sub, inclusion))
    }

    /// Smallest subrepresentation containing the given `(vertex, vector)` pairs.
    pub fn sub_generated(&self, vectors: &[(usize, Vec<F::Elem>)]) -> Subrep<F> {
        let mut spaces: Vec<Subspace<F>> = (0..self.dims.len())
            .map(|v| {
                Subspace::span(
                    &self.field,
                    self.dims[v],
                    vectors.iter().filter(|(w, _)| *w == v).map(|(_, x)| x.clone()),
                )
            })
            .collect();
        loop {
            let current = Subrep { spaces: spaces.clone() };
            let next = current.sum(&self.arrow_image(&current));
            if next == current {
                return current;
            }
            spaces = next.spaces;
        }
    }

    pub fn direct_sum(&self, other: &Rep<F>) -> Rep<F> {
        let f = &self.field;
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let q = &self.quiver;
        let maps = (0..q.num_arrows())
            .map(|a| {
                let (s, t) = (q.arrow(a).source, q.arrow(a).target);
                let mut m = Matrix::zeros(f, dims[t], dims[s]);
                let (x, y) = (&self.maps[a], &other.maps[a]);
                for i in 0..x.rows() {
                    for j in 0..x.cols() {
                        m.set(i, j, x.get(i, j).clone());
                    }
                }
                for i in 0..y.rows() {
                    for j in 0..y.cols() {
                        m.set(self.dims[t] + i, self.dims[s] + j, y.get(i, j).clone());
                    }
                }
                m
            })
            .collect();
        Rep { field: f.clone(), quiver: self.quiver.clone(), dims, maps }
    }

    /// Linear dual with arrows acting by `x_a^* = (x_abar)^T`, the module
    /// structure transported through the path-reversing anti-involution.
    pub fn dual(&self) -> Rep<F> {
        let q = &self.quiver;
        let maps = (0..q.num_arrows()).map(|a| self.maps[q.bar(a).expect("double quiver")].transpose()).collect();
        Rep { field: self.field.clone(), quiver: self.quiver.clone(), dims: self.dims.clone(), maps }
    }

    /// `U^perp` inside the dual representation.
    pub fn annihilator(&self, s: &Subrep<F>) -> Subrep<F> {
        let spaces = s
            .spaces
            .iter()
            .map(|sp| {
                let m = Matrix::from_rows(&self.field, sp.ambient_dim(), sp.basis().to_vec());
                Subspace::span(&self.field, sp.ambient_dim(), m.kernel())
            })
            .collect();
        Subrep { spaces }
    }

    /// Change of field applied entrywise to every map.
    pub fn convert<G: Field>(&self, target: &G, f: impl Fn(&F::Elem) -> Result<G::Elem>) -> Result<Rep<G>> {
        let maps = self.maps.iter().map(|m| m.convert(target, &f)).collect::<Result<Vec<_>>>()?;
        Ok(Rep { field: target.clone(), quiver: self.quiver.clone(), dims: self.dims.clone(), maps })
    }

    pub fn to_json(&self) -> Value {
        let f = &self.field;
        let q = &self.quiver;
        let maps: Vec<Value> = (0..q.num_arrows())
            .map(|a| {
                let rows: Vec<Value> = self.maps[a]
                    .to_rows()
                    .iter()
                    .map(|r| Value::Array(r.iter().map(|x| f.to_json(x)).collect()))
                    .collect();
                serde_json::json!({ "arrow": q.arrow(a).name, "matrix": rows })
            })
            .collect();
        serde_json::json!({
            "field": f.spec().tag(),
            "quiver": serde_json::to_value(q.spec()).expect("quiver serializes"),
            "dims": self.dims,
            "maps": maps,
        })
    }
}

impl Rep<Rationals> {
    pub fn reduce_mod(&self, p: u64) -> Result<Rep<PrimeField>> {
        let fp = PrimeField::new(p)?;
        self.convert(&fp, |x| fp.reduce(x))
    }
}

#[derive(Deserialize, Serialize)]
struct RepJson {
    field: String,
    quiver: QuiverSpec,
    dims: Vec<usize>,
    maps: Vec<MapJson>,
}

#[derive(Deserialize, Serialize)]
struct MapJson {
    arrow: String,
    matrix: Vec<Vec<Value>>,
}

/// A parsed representation over whichever field its JSON names.
#[derive(Clone, Debug)]
pub enum AnyRep {
    Rational(Rep<Rationals>),
    Modular(Rep<PrimeField>),
}

pub fn rep_from_json(text: &str) -> Result<AnyRep> {
    let raw: RepJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let quiver = Arc::new(Quiver::build(&raw.quiver)?);
    match FieldSpec::parse_tag(&raw.field)? {
        FieldSpec::Rationals => Ok(AnyRep::Rational(parse_maps(Rationals, quiver, &raw)?)),
        FieldSpec::PrimeField(p) => Ok(AnyRep::Modular(parse_maps(PrimeField::new(p)?, quiver, &raw)?)),
    }
}

fn parse_maps<F: Field>(f: F, quiver: Arc<Quiver>, raw: &RepJson) -> Result<Rep<F>> {
    let mut maps: Vec<Option<Matrix<F>>> = vec![None; quiver.num_arrows()];
    for m in &raw.maps {
        let a = quiver.arrow_index(&m.arrow).ok_or_else(|| Error::Parse(format!("unknown arrow {:?}", m.arrow)))?;
        let arrow = quiver.arrow(a);
        let (r, c) = (raw.dims[arrow.target], raw.dims[arrow.source]);
        if m.matrix.len() != r || m.matrix.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch(format!("arrow {}", m.arrow)));
        }
        let rows = m
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| match x {
                        Value::String(s) => f.parse(s),
                        Value::Number(n) => f.parse(&n.to_string()),
                        _ => Err(Error::Parse(format!("bad matrix entry {x}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        maps[a] = Some(Matrix::from_rows(&f, c, rows));
    }
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(a, m)| m.ok_or_else(|| Error::Parse(format!("missing map for arrow {}", quiver.arrow(a).name))))
        .collect::<Result<Vec<_>>>()?;
    Rep::new(f, quiver, raw.dims.clone(), maps, false)
}

/// Build a rational representation from integer matrices keyed by arrow name.
pub fn rational_rep(quiver: &Arc<Quiver>, dims: &[usize], maps: &[(&str, Vec<Vec<i64>>)], preprojective: bool) -> Result<Rep<Rationals>> {
    let f = Rationals;
    let mut out: Vec<Matrix<Rationals>> = quiver
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(&f, dims[a.target], dims[a.source]))
        .collect();
    for (name, rows) in maps {
        let a = quiver.arrow_index(name).ok_or_else(|| Error::Validation(format!("unknown arrow {name:?}")))?;
        let cols = dims[quiver.arrow(a).source];
        if rows.len() != dims[quiver.arrow(a).target] || rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("arrow {name}")));
        }
        out[a] = Matrix::from_i64(&f, cols, rows);
    }
    Rep::new(f, quiver.clone(), dims.to_vec(), out, preprojective)
}

pub fn rational_vec(xs: &[i64]) -> Vec<BigRational> {
    xs.iter().map(|&x| Rationals.from_i64(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::named::*;

    fn a2d() -> Arc<Quiver> {
        Arc::new(a2().double().unwrap())
    }

    /// q^1 for A2: e1* at vertex 1, a** at vertex 2, x_{a*} = [1].
    fn q1() -> Rep<Rationals> {
        rational_rep(&a2d(), &[1, 1], &[("a*", vec![vec![1]])], true).unwrap()
    }

    fn simple(v: usize) -> Rep<Rationals> {
        let mut dims = vec![0, 0];
        dims[v] = 1;
        Rep::semisimple(Rationals, a2d(), dims).unwrap()
    }

    #[test]
    fn make_rep_checks_relations() {
        assert!(q1().is_preprojective());
        let r = rational_rep(&a2d(), &[1, 1], &[("a", vec![vec![1]]), ("a*", vec![vec![1]])], true);
        assert_eq!(r.unwrap_err(), Error::RelationViolated { vertices: vec!["1".into(), "2".into()] });
        assert!(Rep::semisimple(Rationals, a2d(), vec![2, 3]).is_ok());
        let r = rational_rep(&a2d(), &[1, 1], &[("a", vec![vec![1, 0]])], false);
        assert!(matches!(r, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn socle_and_radical() {
        assert_eq!(q1().socle().dims(), vec![1, 0]);
        assert_eq!(q1().radical().dims(), vec![1, 0]);
        let s = Rep::semisimple(Rationals, a2d(), vec![2, 1]).unwrap();
        assert_eq!(s.socle().dims(), vec![2, 1]);
        assert!(s.radical().is_zero());
        // p^1 = span{e1, a}: x_a e1 = a
        let p1 = rational_rep(&a2d(), &[1, 1], &[("a", vec![vec![1]])], true).unwrap();
        assert_eq!(p1.radical().dims(), vec![0, 1]);
    }

    #[test]
    fn filtrations_and_nilpotency() {
        let s = Rep::semisimple(Rationals, a2d(), vec![1, 1]).unwrap();
        assert_eq!(s.socle_filtration().iter().map(Subrep::dims).collect::<Vec<_>>(), vec![vec![0, 0], vec![1, 1]]);
        assert!(s.is_nilpotent());
        let qq = q1().direct_sum(&rational_rep(&a2d(), &[1, 1], &[("a", vec![vec![1]])], true).unwrap());
        assert_eq!(
            qq.socle_filtration().iter().map(Subrep::dims).collect::<Vec<_>>(),
            vec![vec![0, 0], vec![1, 1], vec![2, 2]]
        );
        let kron = Arc::new(affine_a1().double().unwrap());
        let cyc = rational_rep(&kron, &[1, 1], &[("a", vec![vec![1]]), ("b*", vec![vec![1]])], false).unwrap();
        assert!(!cyc.is_nilpotent());
        let chain = cyc.socle_filtration();
        assert_ne!(chain.last().unwrap().dims(), vec![1, 1]);
        assert_eq!(cyc.loewy_length(), None);
    }

    #[test]
    fn hom_dimensions() {
        assert_eq!(simple(0).hom_space(&q1()).len(), 1);
        assert_eq!(simple(0).hom_space(&simple(1)).len(), 0);
        assert_eq!(q1().hom_space(&q1()).len(), 1);
        let id = Morphism::identity(&q1());
        assert!(id.is_homomorphism(&q1(), &q1()));
    }

    #[test]
    fn isomorphism_tests() {
        // p^2 = span{e2, a*}: x_{a*} e2 = a*
        let p2 = rational_rep(&a2d(), &[1, 1], &[("a*", vec![vec![3]])], true).unwrap();
        assert!(q1().is_isomorphic(&p2).unwrap());
        let ss = simple(0).direct_sum(&simple(1));
        assert!(!ss.is_isomorphic(&q1()).unwrap());
        assert!(q1().is_isomorphic(&q1()).unwrap());
        let fp = q1().reduce_mod(3).unwrap();
        assert!(fp.is_isomorphic(&fp).unwrap());
    }

    #[test]
    fn quotients() {
        let q = q1();
        let (quot, proj) = q.quotient(&q.socle()).unwrap();
        assert!(quot.is_isomorphic(&simple(1)).unwrap());
        assert!(proj.is_homomorphism(&q, &quot));
        let (same, _) = q.quotient(&Subrep::zero(&q)).unwrap();
        assert!(same.is_isomorphic(&q).unwrap());
        let (zero, _) = q.quotient(&Subrep::full(&q)).unwrap();
        assert_eq!(zero.total_dim(), 0);
        let bad = Subrep::new(vec![Subspace::zero(&Rationals, 1), Subspace::full(&Rationals, 1)]);
        assert_eq!(q.quotient(&bad).unwrap_err(), Error::NotSubmodule);
    }

    #[test]
    fn generated_submodules() {
        let q = q1();
        assert_eq!(q.sub_generated(&[(1, rational_vec(&[1]))]), Subrep::full(&q));
        assert_eq!(q.sub_generated(&[(0, rational_vec(&[1]))]), q.socle());
        assert!(q.sub_generated(&[]).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let q = q1();
        let text = q.to_json().to_string();
        match rep_from_json(&text).unwrap() {
            AnyRep::Rational(r) => assert_eq!(r, q),
            AnyRep::Modular(_) => panic!("wrong field"),
        }
        let m = q.reduce_mod(5).unwrap();
        match rep_from_json(&m.to_json().to_string()).unwrap() {
            AnyRep::Modular(r) => assert_eq!(r, m),
            AnyRep::Rational(_) => panic!("wrong field"),
        }
    }

    #[test]
    fn dual_swaps_socle_and_top() {
        let q = q1();
        let d = q.dual();
        assert!(d.is_preprojective());
        assert_eq!(d.socle().dims(), vec![0, 1]);
        let ann = q.annihilator(&q.socle());
        assert!(ann.is_closed_in(&d));
        assert_eq!(ann.dims(), vec![0, 1]);
    }
}
