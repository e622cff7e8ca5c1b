//! Graded pieces of the double-quiver path algebra and of the preprojective
//! algebra, computed degree by degree with exact linear algebra.
//!
//! Paths are written `a_l ... a_1` (the rightmost arrow is applied first).
//! The degree-`n` piece is computed as the quotient of `A_1 (x) P_{n-1}` by the
//! images of the vertex relations times `P_{n-2}`; basis representatives are
//! the lexicographically earliest independent raw paths.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::{Field, Rationals};
use crate::linalg::Matrix;
use crate::quiver::Quiver;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    /// Arrow indices in written order: `arrows[0]` is applied last.
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { arrows: Vec::new(), source: v, target: v }
    }

    pub fn arrow(q: &Quiver, a: usize) -> Path {
        Path { arrows: vec![a], source: q.arrow(a).source, target: q.arrow(a).target }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self * other` (other applied first), if the endpoints match.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        (self.source == other.target).then(|| Path {
            arrows: self.arrows.iter().chain(&other.arrows).copied().collect(),
            source: other.source,
            target: self.target,
        })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices()[self.source])
        } else {
            self.arrows.iter().map(|&a| q.arrow(a).name.as_str()).collect::<Vec<_>>().join(".")
        }
    }

    fn cmp_names(&self, other: &Path, q: &Quiver) -> Ordering {
        let a = self.arrows.iter().map(|&x| q.arrow(x).name.as_str());
        let b = other.arrows.iter().map(|&x| q.arrow(x).name.as_str());
        a.cmp(b)
    }
}

/// All length-`n` paths from `i` to `j` in lexicographic arrow-name order.
pub fn raw_paths(dq: &Quiver, n: usize, i: usize, j: usize) -> Vec<Path> {
    // grow from the source end: prepend arrows leaving the current target
    let mut frontier = vec![Path::trivial(i)];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &frontier {
            for a in dq.arrows_from(p.target) {
                let mut arrows = Vec::with_capacity(p.len() + 1);
                arrows.push(a);
                arrows.extend(&p.arrows);
                next.push(Path { arrows, source: i, target: dq.arrow(a).target });
            }
        }
        frontier = next;
    }
    let mut out: Vec<Path> = frontier.into_iter().filter(|p| p.target == j).collect();
    out.sort_by(|a, b| a.cmp_names(b, dq));
    out
}

/// Degree-`n` piece of the preprojective algebra.
#[derive(Clone, Debug)]
pub struct AlgSlice {
    degree: usize,
    basis: Vec<Path>,
    /// For each arrow `c` and each basis index `b` of the previous slice with
    /// `s(c) = t(b)`: coordinates of `c * b` in this slice.
    left: Vec<Vec<Option<Vec<BigRational>>>>,
}

impl AlgSlice {
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Indices of basis paths from `i` to `j`, i.e. a basis of `e_j P_n e_i`.
    pub fn pair_basis(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&k| self.basis[k].source == i && self.basis[k].target == j).collect()
    }
}

/// An element of one graded piece, in that piece's basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub degree: usize,
    pub coords: Vec<BigRational>,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }
}

/// The preprojective algebra of a quiver, with slices computed up to a
/// degree bound that can be raised later.
#[derive(Clone, Debug)]
pub struct PreprojectiveAlgebra {
    quiver: Quiver,
    slices: Vec<AlgSlice>,
}

impl PreprojectiveAlgebra {
    /// Slices `0..=max_degree` of `P(Q)`; `Q` is doubled if necessary.
    pub fn new(q: &Quiver, max_degree: usize) -> Self {
        let mut alg = PreprojectiveAlgebra { quiver: q.doubled(), slices: Vec::new() };
        alg.extend_to(max_degree);
        alg
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn max_degree(&self) -> usize {
        self.slices.len() - 1
    }

    pub fn slice(&self, n: usize) -> &AlgSlice {
        &self.slices[n]
    }

    pub fn extend_to(&mut self, max_degree: usize) {
        while self.slices.len() <= max_degree {
            let n = self.slices.len();
            let s = self.build_slice(n);
            self.slices.push(s);
        }
    }

    /// `[dim P_0, ..., dim P_N]`.
    pub fn hilbert(&self) -> Vec<usize> {
        self.slices.iter().map(AlgSlice::dim).collect()
    }

    /// First degree whose slice vanishes, looking no further than `limit`.
    /// Since `P` is generated in degree one, every later slice vanishes too.
    pub fn vanishing_degree(q: &Quiver, limit: usize) -> Option<usize> {
        let mut alg = PreprojectiveAlgebra::new(q, 0);
        for n in 0..=limit {
            alg.extend_to(n);
            if alg.slice(n).dim() == 0 {
                return Some(n);
            }
        }
        None
    }

    fn build_slice(&self, n: usize) -> AlgSlice {
        let dq = &self.quiver;
        let f = Rationals;
        if n == 0 {
            let basis = (0..dq.num_vertices()).map(Path::trivial).collect();
            return AlgSlice { degree: 0, basis, left: Vec::new() };
        }
        let prev = &self.slices[n - 1];
        // generators (c, b) with their raw paths c * rep(b)
        struct Gen {
            arrow: usize,
            prev: usize,
            path: Path,
        }
        let mut gens: Vec<Gen> = Vec::new();
        for (b, path) in prev.basis.iter().enumerate() {
            for c in dq.arrows_from(path.target) {
                let p = Path::arrow(dq, c).concat(path).expect("composable");
                gens.push(Gen { arrow: c, prev: b, path: p });
            }
        }
        gens.sort_by(|x, y| {
            (x.path.source, x.path.target)
                .cmp(&(y.path.source, y.path.target))
                .then_with(|| x.path.cmp_names(&y.path, dq))
        });
        let gen_index = |c: usize, b: usize| gens.iter().position(|g| g.arrow == c && g.prev == b);

        // relation rows: rho_k * b'' for basis b'' of P_{n-2} ending at k
        let mut relations: Vec<Vec<BigRational>> = Vec::new();
        if n >= 2 {
            let pp = &self.slices[n - 2];
            for (b2, path2) in pp.basis.iter().enumerate() {
                let k = path2.target;
                let mut row = vec![f.zero(); gens.len()];
                let mut e = vec![f.zero(); pp.dim()];
                e[b2] = f.one();
                for a in 0..dq.num_arrows() {
                    if !dq.is_original(a) {
                        continue;
                    }
                    let abar = dq.bar(a).expect("double quiver");
                    // + a * (abar * b'') when t(a) = k; - abar * (a * b'') when s(a) = k
                    for (outer, inner, sign) in [(a, abar, 1i64), (abar, a, -1i64)] {
                        if dq.arrow(outer).target != k {
                            continue;
                        }
                        if let Some(mid) = self.left_mul_arrow(n - 2, inner, &e) {
                            for (idx, x) in mid.iter().enumerate() {
                                if x.is_zero() {
                                    continue;
                                }
                                let g = gen_index(outer, idx).expect("generator exists");
                                row[g] = f.add(&row[g], &f.mul(x, &f.from_i64(sign)));
                            }
                        }
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    relations.push(row);
                }
            }
        }

        // reduce each (source, target) block, pivoting on the latest paths
        let mut basis_gens: Vec<usize> = Vec::new();
        let mut expressions: Vec<Option<Vec<(usize, BigRational)>>> = vec![None; gens.len()];
        let mut start = 0;
        while start < gens.len() {
            let key = (gens[start].path.source, gens[start].path.target);
            let end = (start..gens.len()).find(|&g| (gens[g].path.source, gens[g].path.target) != key).unwrap_or(gens.len());
            let width = end - start;
            let rows: Vec<Vec<BigRational>> = relations
                .iter()
                .filter(|r| r[start..end].iter().any(|x| !x.is_zero()))
                .map(|r| (0..width).rev().map(|c| r[start + c].clone()).collect())
                .collect();
            let m = Matrix::from_rows(&f, width, rows);
            let (rref, pivots) = m.rref();
            let mut is_pivot = vec![false; width];
            for &p in &pivots {
                is_pivot[p] = true;
            }
            for rc in 0..width {
                let g = start + (width - 1 - rc);
                if !is_pivot[rc] {
                    basis_gens.push(g);
                }
            }
            for (r, &p) in pivots.iter().enumerate() {
                let g = start + (width - 1 - p);
                let expr = (0..width)
                    .filter(|&c| c != p && !rref.get(r, c).is_zero())
                    .map(|c| (start + (width - 1 - c), -rref.get(r, c).clone()))
                    .collect();
                expressions[g] = Some(expr);
            }
            start = end;
        }
        basis_gens.sort_unstable();
        let position: Vec<Option<usize>> = {
            let mut pos = vec![None; gens.len()];
            for (k, &g) in basis_gens.iter().enumerate() {
                pos[g] = Some(k);
            }
            pos
        };
        let dim = basis_gens.len();
        let mut left: Vec<Vec<Option<Vec<BigRational>>>> = vec![vec![None; prev.dim()]; dq.num_arrows()];
        for (g, gen) in gens.iter().enumerate() {
            let mut coords = vec![f.zero(); dim];
            match position[g] {
                Some(k) => coords[k] = f.one(),
                None => {
                    for (h, x) in expressions[g].as_ref().expect("pivot generator") {
                        let k = position[*h].expect("expressions use basis generators only");
                        coords[k] = f.add(&coords[k], x);
                    }
                }
            }
            left[gen.arrow][gen.prev] = Some(coords);
        }
        let basis = basis_gens.iter().map(|&g| gens[g].path.clone()).collect();
        AlgSlice { degree: n, basis, left }
    }

    /// `c * x` for `x` given in slice `m` coordinates; `None` if `m + 1` is
    /// beyond the computed range.
    pub fn left_mul_arrow(&self, m: usize, c: usize, x: &[BigRational]) -> Option<Vec<BigRational>> {
        let target = self.slices.get(m + 1)?;
        let f = Rationals;
        let mut out = vec![f.zero(); target.dim()];
        for (b, xb) in x.iter().enumerate() {
            if xb.is_zero() {
                continue;
            }
            if let Some(coords) = &target.left[c][b] {
                for (o, y) in out.iter_mut().zip(coords) {
                    if !y.is_zero() {
                        *o = f.mul_add(o, xb, y);
                    }
                }
            }
        }
        Some(out)
    }

    /// Coordinates of a raw path in its degree's basis. Panics if the degree
    /// has not been computed.
    pub fn rewrite(&self, path: &Path) -> Vec<BigRational> {
        let f = Rationals;
        let mut x = vec![f.zero(); self.slices[0].dim()];
        x[path.source] = f.one();
        for (m, &c) in path.arrows.iter().rev().enumerate() {
            x = self.left_mul_arrow(m, c, &x).expect("degree computed");
        }
        x
    }

    pub fn basis_element(&self, n: usize, k: usize) -> Element {
        let mut coords = vec![BigRational::zero(); self.slices[n].dim()];
        coords[k] = BigRational::one();
        Element { degree: n, coords }
    }

    pub fn idempotent(&self, v: usize) -> Element {
        self.basis_element(0, v)
    }

    /// Product `x * y` (y acts first); `None` past the computed range.
    pub fn multiply(&self, x: &Element, y: &Element) -> Option<Element> {
        let n = x.degree + y.degree;
        if n > self.max_degree() {
            return None;
        }
        let f = Rationals;
        let mut out = vec![f.zero(); self.slices[n].dim()];
        for (b, xb) in x.coords.iter().enumerate() {
            if xb.is_zero() {
                continue;
            }
            let rep = &self.slices[x.degree].basis[b];
            let ybasis = &self.slices[y.degree].basis;
            let mut acc: Vec<BigRational> = y
                .coords
                .iter()
                .zip(ybasis)
                .map(|(c, p)| if p.target == rep.source { c.clone() } else { f.zero() })
                .collect();
            for (step, &c) in rep.arrows.iter().rev().enumerate() {
                acc = self.left_mul_arrow(y.degree + step, c, &acc)?;
            }
            for (o, a) in out.iter_mut().zip(&acc) {
                if !a.is_zero() {
                    *o = f.mul_add(o, xb, a);
                }
            }
        }
        Some(Element { degree: n, coords: out })
    }
}

/// `[dim P_0, ..., dim P_N]` for the preprojective algebra of `q`.
pub fn hilbert(q: &Quiver, max_degree: usize) -> Vec<usize> {
    PreprojectiveAlgebra::new(q, max_degree).hilbert()
}

/// Default truncation for quivers not of finite type: twice the vertex count.
pub fn default_truncation(q: &Quiver) -> usize {
    2 * q.num_vertices()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::named::*;
    use crate::quiver::Kind;

    #[test]
    fn raw_path_examples() {
        let d = a2().double().unwrap();
        let p = raw_paths(&d, 1, 0, 1);
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].display(&d), "a");
        let p = raw_paths(&d, 2, 0, 0);
        assert_eq!(p.iter().map(|p| p.display(&d)).collect::<Vec<_>>(), vec!["a*.a"]);
        let d3 = type_a(3).double().unwrap();
        let total: usize = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| raw_paths(&d3, 2, i, j).len()).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn a2_and_a3_dimensions() {
        assert_eq!(hilbert(&a2(), 3), vec![2, 2, 0, 0]);
        assert_eq!(hilbert(&type_a(3), 4), vec![3, 4, 3, 0, 0]);
        assert_eq!(hilbert(&type_a(1), 5), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn kronecker_never_vanishes() {
        let h = hilbert(&affine_a1(), 12);
        assert!(h.iter().all(|&d| d > 0), "{h:?}");
    }

    #[test]
    fn products() {
        let alg = PreprojectiveAlgebra::new(&a2(), 3);
        let d = alg.quiver().clone();
        let a = d.arrow_index("a").unwrap();
        let abar = d.arrow_index("a*").unwrap();
        let el = |p: Path| Element { degree: p.len(), coords: alg.rewrite(&p) };
        let x = el(Path::arrow(&d, abar));
        let y = el(Path::arrow(&d, a));
        assert!(alg.multiply(&x, &y).unwrap().is_zero());
        let e1 = alg.idempotent(0);
        let e2 = alg.idempotent(1);
        assert_eq!(alg.multiply(&e1, &e1).unwrap(), e1);
        assert!(alg.multiply(&e1, &e2).unwrap().is_zero());
        // e_j * beta = beta iff t(beta) = j
        assert_eq!(alg.multiply(&e2, &y).unwrap(), y);
        assert!(alg.multiply(&e1, &y).unwrap().is_zero());
    }

    #[test]
    fn basis_representatives_rewrite_to_units() {
        let alg = PreprojectiveAlgebra::new(&type_d(4), 6);
        for n in 0..=6 {
            for (k, p) in alg.slice(n).basis().iter().enumerate() {
                let v = alg.rewrite(p);
                assert!(v.iter().enumerate().all(|(i, x)| if i == k { x.is_one() } else { x.is_zero() }));
            }
        }
    }

    #[test]
    fn finite_types_vanish() {
        for q in [type_a(2), type_a(4), type_d(4), type_d(5), type_e(6)] {
            assert_eq!(q.classify().kind, Kind::Finite);
            assert!(PreprojectiveAlgebra::vanishing_degree(&q, 20).is_some());
        }
    }
}
