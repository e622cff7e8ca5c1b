//! Injective modules `q^i`, `q^w` (exact in finite type, truncated
//! otherwise), projectives `p^i`, unique extension of maps into `q^w`, framed
//! points with their stability test, and automorphisms induced by rescaling.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::palg::{Path, PreprojectiveAlgebra};
use crate::quiver::{Kind, Quiver};
use crate::repmod::{BlockLayout, Morphism, Rep, Subrep};

/// Largest degree examined when looking for the vanishing degree of a
/// finite-type preprojective algebra (E8 vanishes in degree 29).
const VANISHING_SEARCH_LIMIT: usize = 64;

/// Label of a basis vector `beta^*` of `q^w`: the summand it belongs to, the
/// socle vertex `i` of that summand, and the path `beta` ending at `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPath {
    pub summand: usize,
    pub socle_vertex: usize,
    pub path: Path,
}

impl DualPath {
    pub fn degree(&self) -> usize {
        self.path.len()
    }
}

/// `q^w` with its socle copy of `s^w` and a projection `pi: q^w -> s^w`.
#[derive(Clone, Debug)]
pub struct InjectiveModel<F: Field> {
    rep: Rep<F>,
    w: Vec<usize>,
    labels: Vec<Vec<DualPath>>,
    socle_basis: Vec<Vec<Vec<F::Elem>>>,
    projection: Morphism<F>,
    bound: usize,
    exact: bool,
}

/// Degree bound actually used, and whether the result is the full module.
fn resolve_bound(q: &Quiver, trunc: Option<usize>) -> Result<(usize, bool)> {
    let finite = q.cartan_matrix().kind == Kind::Finite;
    let vanish = if finite { PreprojectiveAlgebra::vanishing_degree(q, VANISHING_SEARCH_LIMIT) } else { None };
    match (trunc, vanish) {
        (Some(0), _) => Err(Error::Validation("truncation bound must be at least 1".into())),
        (Some(n), Some(v)) => Ok((n.min(v.max(1)), n >= v)),
        (Some(n), None) => Ok((n, false)),
        (None, Some(v)) => Ok((v.max(1), true)),
        (None, None) => Ok((crate::palg::default_truncation(q), false)),
    }
}

fn convert_all<F: Field>(f: &F, xs: &[num_rational::BigRational]) -> Result<Vec<F::Elem>> {
    xs.iter().map(|x| f.from_rational(x)).collect()
}

/// Summand `q^i` truncated at `bound`: dual basis of paths ending at `i` of
/// length `< bound`, each placed at its source vertex.
fn injective_summand<F: Field>(
    field: &F,
    alg: &PreprojectiveAlgebra,
    i: usize,
    bound: usize,
) -> Result<(Rep<F>, Vec<Vec<Path>>)> {
    let dq = alg.quiver();
    let nv = dq.num_vertices();
    let mut per_vertex: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for n in 0..bound {
        for (k, p) in alg.slice(n).basis().iter().enumerate() {
            if p.target == i {
                per_vertex[p.source].push((n, k));
            }
        }
    }
    let dims: Vec<usize> = per_vertex.iter().map(Vec::len).collect();
    let mut maps = Vec::with_capacity(dq.num_arrows());
    for a in 0..dq.num_arrows() {
        let (s, t) = (dq.arrow(a).source, dq.arrow(a).target);
        let mut m = Matrix::zeros(field, dims[t], dims[s]);
        // (a . x^*) pairs with beta through the coefficient of beta in x.a
        for (r, &(n, k)) in per_vertex[t].iter().enumerate() {
            if n + 1 >= bound {
                continue;
            }
            let x = &alg.slice(n).basis()[k];
            let xa = x.concat(&Path::arrow(dq, a)).expect("s(x) = t(a)");
            let coords = convert_all(field, &alg.rewrite(&xa))?;
            for (c, &(n2, k2)) in per_vertex[s].iter().enumerate() {
                if n2 == n + 1 {
                    m.set(r, c, coords[k2].clone());
                }
            }
        }
        maps.push(m);
    }
    let paths =
        per_vertex.iter().map(|v| v.iter().map(|&(n, k)| alg.slice(n).basis()[k].clone()).collect()).collect();
    let rep = Rep::new(field.clone(), Arc::new(dq.clone()), dims, maps, false)?;
    Ok((rep, paths))
}

/// `q^i` for a single vertex.
pub fn injective_trunc<F: Field>(field: &F, q: &Quiver, i: usize, trunc: Option<usize>) -> Result<InjectiveModel<F>> {
    let mut w = vec![0; q.num_vertices()];
    *w.get_mut(i).ok_or_else(|| Error::Validation(format!("vertex index {i} out of range")))? = 1;
    q_w(field, q, &w, trunc)
}

/// `q^w = (+)_i (q^i)^{w_i}`, summands ordered by vertex then copy.
pub fn q_w<F: Field>(field: &F, q: &Quiver, w: &[usize], trunc: Option<usize>) -> Result<InjectiveModel<F>> {
    let nv = q.num_vertices();
    if w.len() != nv {
        return Err(Error::ShapeMismatch(format!("{} entries for {} vertices", w.len(), nv)));
    }
    let (bound, exact) = resolve_bound(q, trunc)?;
    let alg = PreprojectiveAlgebra::new(q, bound - 1);
    let dq = Arc::new(alg.quiver().clone());
    let mut rep = Rep::semisimple(field.clone(), dq, vec![0; nv])?;
    let mut labels: Vec<Vec<DualPath>> = vec![Vec::new(); nv];
    let mut summand = 0;
    for (i, &wi) in w.iter().enumerate() {
        if wi == 0 {
            continue;
        }
        let (piece, paths) = injective_summand(field, &alg, i, bound)?;
        for _ in 0..wi {
            rep = rep.direct_sum(&piece);
            for (v, ps) in paths.iter().enumerate() {
                labels[v].extend(ps.iter().map(|p| DualPath { summand, socle_vertex: i, path: p.clone() }));
            }
            summand += 1;
        }
    }
    let mut socle_basis: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); nv];
    let mut blocks = Vec::with_capacity(nv);
    for v in 0..nv {
        let mut pi = Matrix::zeros(field, w[v], rep.dims()[v]);
        let mut r = 0;
        for (c, l) in labels[v].iter().enumerate() {
            if l.path.is_empty() {
                pi.set(r, c, field.one());
                let mut e = vec![field.zero(); rep.dims()[v]];
                e[c] = field.one();
                socle_basis[v].push(e);
                r += 1;
            }
        }
        blocks.push(pi);
    }
    Ok(InjectiveModel {
        rep,
        w: w.to_vec(),
        labels,
        socle_basis,
        projection: Morphism { blocks },
        bound,
        exact,
    })
}

/// `p^i = P e_i` truncated at the bound: paths leaving `i`, placed at their
/// target, acted on by left multiplication.
pub fn projective<F: Field>(field: &F, q: &Quiver, i: usize, trunc: Option<usize>) -> Result<Rep<F>> {
    if i >= q.num_vertices() {
        return Err(Error::Validation(format!("vertex index {i} out of range")));
    }
    let (bound, _) = resolve_bound(q, trunc)?;
    let alg = PreprojectiveAlgebra::new(q, bound - 1);
    let dq = alg.quiver();
    let nv = dq.num_vertices();
    let mut per_vertex: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
    for n in 0..bound {
        for (k, p) in alg.slice(n).basis().iter().enumerate() {
            if p.source == i {
                per_vertex[p.target].push((n, k));
            }
        }
    }
    let dims: Vec<usize> = per_vertex.iter().map(Vec::len).collect();
    let mut maps = Vec::with_capacity(dq.num_arrows());
    for a in 0..dq.num_arrows() {
        let (s, t) = (dq.arrow(a).source, dq.arrow(a).target);
        let mut m = Matrix::zeros(field, dims[t], dims[s]);
        for (c, &(n, k)) in per_vertex[s].iter().enumerate() {
            if n + 1 >= bound {
                continue;
            }
            let unit = alg.basis_element(n, k).coords;
            let prod = convert_all(field, &alg.left_mul_arrow(n, a, &unit).expect("degree computed"))?;
            for (r, &(n2, k2)) in per_vertex[t].iter().enumerate() {
                if n2 == n + 1 {
                    m.set(r, c, prod[k2].clone());
                }
            }
        }
        maps.push(m);
    }
    Rep::new(field.clone(), Arc::new(dq.clone()), dims, maps, false)
}

/// A graded map `gamma` into `q^w` and the evidence that it is the unique one.
#[derive(Clone, Debug)]
pub struct Extension<F: Field> {
    pub gamma: Morphism<F>,
    /// Dimension of the homogeneous solution space; always zero on success.
    pub kernel_dim: usize,
    pub injective: bool,
    pub image: Subrep<F>,
}

/// Framed representation `(x, t)` read off a submodule of `q^w`.
#[derive(Clone, Debug)]
pub struct FramedPoint<F: Field> {
    pub x: Rep<F>,
    pub t: Morphism<F>,
    pub stable: bool,
}

impl<F: Field> InjectiveModel<F> {
    pub fn rep(&self) -> &Rep<F> {
        &self.rep
    }
    pub fn field(&self) -> &F {
        self.rep.field()
    }
    pub fn w(&self) -> &[usize] {
        &self.w
    }
    pub fn dims(&self) -> &[usize] {
        self.rep.dims()
    }
    pub fn labels(&self) -> &[Vec<DualPath>] {
        &self.labels
    }
    pub fn socle_basis(&self) -> &[Vec<Vec<F::Elem>>] {
        &self.socle_basis
    }
    pub fn projection(&self) -> &Morphism<F> {
        &self.projection
    }
    /// Degree bound `N`: the module is annihilated by `P_{>=N}`.
    pub fn bound(&self) -> usize {
        self.bound
    }
    /// Whether this is the full `q^w` rather than a truncation.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// The socle copy of `s^w` as a submodule.
    pub fn socle_copy(&self) -> Subrep<F> {
        let f = self.field();
        Subrep::new(
            self.socle_basis
                .iter()
                .zip(self.dims())
                .map(|(b, &d)| Subspace::span(f, d, b.iter().cloned()))
                .collect(),
        )
    }

    /// `s^w` itself (zero maps).
    pub fn socle_rep(&self) -> Rep<F> {
        Rep::semisimple(self.field().clone(), self.rep.quiver().clone(), self.w.clone()).expect("zero maps")
    }

    /// Span of the basis vectors below the top degree `N - 1`. A submodule
    /// inside it is unaffected by the truncation.
    pub fn below_top(&self) -> Subrep<F> {
        let f = self.field();
        let spaces = self
            .labels
            .iter()
            .map(|ls| {
                let n = ls.len();
                Subspace::span(
                    f,
                    n,
                    ls.iter().enumerate().filter(|(_, l)| self.exact || l.degree() + 1 < self.bound).map(|(c, _)| {
                        let mut e = vec![f.zero(); n];
                        e[c] = f.one();
                        e
                    }),
                )
            })
            .collect();
        Subrep::new(spaces)
    }

    pub fn fits_below_top(&self, u: &Subrep<F>) -> bool {
        self.exact || u.is_subrep_of(&self.below_top())
    }

    /// The same module with another projection onto `s^w`, which must restrict
    /// to the identity on the socle copy.
    pub fn with_projection(&self, pi: Morphism<F>) -> Result<Self> {
        let f = self.field();
        for v in 0..self.w.len() {
            let b = &pi.blocks[v];
            if b.shape() != (self.w[v], self.dims()[v]) {
                return Err(Error::ShapeMismatch(format!("projection block at vertex {v}")));
            }
            for (r, e) in self.socle_basis[v].iter().enumerate() {
                let img = b.mul_vec(e);
                if img.iter().enumerate().any(|(k, x)| *x != if k == r { f.one() } else { f.zero() }) {
                    return Err(Error::Validation("projection does not restrict to the identity on the socle".into()));
                }
            }
        }
        Ok(InjectiveModel { projection: pi, ..self.clone() })
    }

    /// The unique homomorphism `gamma: V -> q^w` with `pi gamma = tau`.
    pub fn extend_to_injective(&self, v: &Rep<F>, tau: &Morphism<F>) -> Result<Extension<F>> {
        if !v.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        let f = self.field();
        for (k, b) in tau.blocks.iter().enumerate() {
            if b.shape() != (self.w[k], v.dims()[k]) {
                return Err(Error::ShapeMismatch(format!("tau block at vertex {k}")));
            }
        }
        if !self.exact {
            let ll = v.loewy_length().unwrap_or(usize::MAX);
            if ll > self.bound {
                return Err(Error::TruncationTooSmall { requested: self.bound, suggested: Some(ll) });
            }
        }
        let layout = BlockLayout::new(self.dims(), v.dims());
        let mut rows = layout.intertwining_rows(v, &self.rep, None);
        let mut rhs = vec![f.zero(); rows.len()];
        for k in 0..self.w.len() {
            let pi = &self.projection.blocks[k];
            for r in 0..self.w[k] {
                for c in 0..v.dims()[k] {
                    let mut row = vec![f.zero(); layout.total()];
                    for j in 0..self.dims()[k] {
                        if !f.is_zero(pi.get(r, j)) {
                            row[layout.var(k, j, c)] = pi.get(r, j).clone();
                        }
                    }
                    rows.push(row);
                    rhs.push(tau.blocks[k].get(r, c).clone());
                }
            }
        }
        let system = Matrix::from_rows(f, layout.total(), rows);
        let kernel_dim = system.kernel().len();
        if kernel_dim > 0 {
            return Err(Error::NonUnique(kernel_dim));
        }
        let x = system.solve(&rhs).ok_or_else(|| Error::NoSolution("extension into q^w".into()))?;
        let gamma = layout.assemble(f, &x);
        let image = gamma.image();
        Ok(Extension { injective: gamma.is_injective(), gamma, kernel_dim, image })
    }

    /// `(x, t)` with `x` the arrow maps on `U` and `t = pi|_U`.
    pub fn to_nakajima(&self, u: &Subrep<F>) -> Result<FramedPoint<F>> {
        let (x, inclusion) = self.rep.restrict(u)?;
        let t = self.projection.compose(&inclusion);
        let stable = is_stable(&x, &t);
        Ok(FramedPoint { x, t, stable })
    }

    /// The automorphism `gamma` of `q^w` with `gamma x_a = z^{-(m(a)+1)} x_a gamma`
    /// and `pi gamma = z g pi`, where `m(abar) = -m(a)`.
    pub fn induced_automorphism(&self, g: &Morphism<F>, z: &F::Elem, m: &[i64]) -> Result<Morphism<F>> {
        let f = self.field();
        let q = self.rep.quiver();
        if m.len() != q.num_arrows() {
            return Err(Error::ShapeMismatch(format!("{} weights for {} arrows", m.len(), q.num_arrows())));
        }
        for a in 0..q.num_arrows() {
            if m[q.bar(a).expect("double quiver")] != -m[a] {
                return Err(Error::Validation(format!("weight of {} is not antisymmetric", q.arrow(a).name)));
            }
        }
        if f.is_zero(z) {
            return Err(Error::Validation("z must be nonzero".into()));
        }
        if !g.is_invertible() || g.blocks.iter().zip(&self.w).any(|(b, &wi)| b.shape() != (wi, wi)) {
            return Err(Error::Validation("g must be an invertible graded map on s^w".into()));
        }
        let scalars: Vec<F::Elem> = m.iter().map(|&ma| f.pow(z, -(ma + 1)).expect("z nonzero")).collect();
        let layout = BlockLayout::new(self.dims(), self.dims());
        let mut rows = layout.intertwining_rows(&self.rep, &self.rep, Some(&scalars));
        let mut rhs = vec![f.zero(); rows.len()];
        let target = g.compose(&self.projection).scale(z);
        for k in 0..self.w.len() {
            let pi = &self.projection.blocks[k];
            for r in 0..self.w[k] {
                for c in 0..self.dims()[k] {
                    let mut row = vec![f.zero(); layout.total()];
                    for j in 0..self.dims()[k] {
                        if !f.is_zero(pi.get(r, j)) {
                            row[layout.var(k, j, c)] = pi.get(r, j).clone();
                        }
                    }
                    rows.push(row);
                    rhs.push(target.blocks[k].get(r, c).clone());
                }
            }
        }
        let system = Matrix::from_rows(f, layout.total(), rows);
        let kernel_dim = system.kernel().len();
        if kernel_dim > 0 {
            return Err(Error::NonUnique(kernel_dim));
        }
        let x = system.solve(&rhs).ok_or_else(|| Error::NoSolution("twisted automorphism".into()))?;
        let gamma = layout.assemble(f, &x);
        if !gamma.is_invertible() {
            return Err(Error::Internal("induced map is not invertible".into()));
        }
        Ok(gamma)
    }

    pub fn to_json(&self) -> Value {
        let f = self.field();
        let q = self.rep.quiver();
        let socle: Vec<Value> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, ls)| {
                let labels: Vec<Value> = ls
                    .iter()
                    .map(|l| json!({ "summand": l.summand, "socle_vertex": q.vertices()[l.socle_vertex], "dual_of": l.path.display(q) }))
                    .collect();
                json!({ "vertex": q.vertices()[v], "basis": labels })
            })
            .collect();
        let projection: Vec<Value> = self
            .projection
            .blocks
            .iter()
            .enumerate()
            .map(|(v, b)| {
                let rows: Vec<Value> =
                    b.to_rows().iter().map(|r| Value::Array(r.iter().map(|x| f.to_json(x)).collect())).collect();
                json!({ "vertex": q.vertices()[v], "matrix": rows })
            })
            .collect();
        json!({
            "rep": self.rep.to_json(),
            "w": self.w,
            "socle_dims": self.w,
            "bound": self.bound,
            "exact": self.exact,
            "basis": socle,
            "projection": projection,
        })
    }
}

/// Stable iff no nonzero arrow-invariant subspace lies in `ker t`.
pub fn is_stable<F: Field>(x: &Rep<F>, t: &Morphism<F>) -> bool {
    let mut w = Subrep::new(t.kernel());
    loop {
        let next = w.intersect(&x.preimage_of(&w));
        if next == w {
            return w.is_zero();
        }
        w = next;
    }
}

/// Arrow weights `m_2`: zero on every arrow.
pub fn m2_weights(q: &Quiver) -> Vec<i64> {
    vec![0; q.num_arrows()]
}
