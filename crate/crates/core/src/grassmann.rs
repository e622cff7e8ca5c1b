//! Quiver grassmannians over prime fields: pruned exhaustive enumeration,
//! nested pairs, codimension counts, eigen-graded submodules, and point-count
//! polynomials with a certified interpolation.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::hull::{q_w, InjectiveModel};
use crate::linalg::{Matrix, Subspace};
use crate::poly;
use crate::quiver::Quiver;
use crate::repmod::{Morphism, Rep, Subrep};

/// Default bound on candidate subspaces visited by one enumeration.
pub const DEFAULT_CAP: u128 = 10_000_000;

type Fp = PrimeField;

/// A direct-sum decomposition of every vertex space, with the coordinate map
/// into the block-adapted basis.
struct Blocks {
    /// `bases[k][j]`: basis vectors of block `j` at vertex `k`.
    bases: Vec<Vec<Vec<Vec<u64>>>>,
    /// Inverse of the block-adapted basis matrix at each vertex.
    coords: Vec<Matrix<Fp>>,
}

impl Blocks {
    fn trivial(rep: &Rep<Fp>) -> Self {
        let f = rep.field();
        let bases = rep
            .dims()
            .iter()
            .map(|&d| vec![(0..d).map(|i| crate::linalg::unit_vector(f, d, i)).collect()])
            .collect();
        let coords = rep.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        Blocks { bases, coords }
    }

    fn new(rep: &Rep<Fp>, bases: Vec<Vec<Vec<Vec<u64>>>>) -> Result<Self> {
        let f = rep.field();
        let mut coords = Vec::with_capacity(bases.len());
        for (k, blocks) in bases.iter().enumerate() {
            let cols: Vec<Vec<u64>> = blocks.iter().flatten().cloned().collect();
            let m = Matrix::from_columns(f, rep.dims()[k], &cols);
            let inv = m.inverse().ok_or_else(|| Error::BadPrime {
                prime: f.modulus(),
                value: format!("eigenspace basis at vertex {k}"),
            })?;
            coords.push(inv);
        }
        Ok(Blocks { bases, coords })
    }

    /// Component of `x` in block `j` at vertex `k`.
    fn project(&self, f: &Fp, k: usize, j: usize, x: &[u64]) -> Vec<u64> {
        let y = self.coords[k].mul_vec(x);
        let offset: usize = self.bases[k][..j].iter().map(Vec::len).sum();
        let mut out = vec![0; x.len()];
        for (l, b) in self.bases[k][j].iter().enumerate() {
            let c = &y[offset + l];
            if *c != 0 {
                for (o, bi) in out.iter_mut().zip(b) {
                    *o = f.mul_add(o, c, bi);
                }
            }
        }
        out
    }
}

/// Gaussian binomial `[n choose k]_p`, saturating.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let p = p as u128;
    for i in 0..k {
        let a = p.checked_pow((n - i) as u32).map(|x| x - 1);
        let b = p.checked_pow((i + 1) as u32).map(|x| x - 1);
        match (a.and_then(|a| num.checked_mul(a)), b.and_then(|b| den.checked_mul(b))) {
            (Some(x), Some(y)) => {
                num = x;
                den = y;
                let g = num_integer::gcd(num, den);
                num /= g;
                den /= g;
            }
            _ => return u128::MAX,
        }
    }
    num / den
}

/// Call `visit` with a basis (in `F_p^m` coordinates) of every `d`-dimensional
/// subspace of `F_p^m`, in reduced echelon form.
fn for_each_subspace(f: &Fp, m: usize, d: usize, visit: &mut dyn FnMut(&[Vec<u64>]) -> Result<()>) -> Result<()> {
    if d > m {
        return Ok(());
    }
    let p = f.modulus();
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..d)
            .flat_map(|r| ((pivots[r] + 1)..m).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let mut vals = vec![0u64; free.len()];
        loop {
            let mut rows = vec![vec![0u64; m]; d];
            for (r, &c) in pivots.iter().enumerate() {
                rows[r][c] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(&vals) {
                rows[r][c] = v;
            }
            visit(&rows)?;
            let mut k = 0;
            while k < vals.len() {
                vals[k] += 1;
                if vals[k] < p {
                    break;
                }
                vals[k] = 0;
                k += 1;
            }
            if k == vals.len() {
                break;
            }
        }
        // next pivot combination
        let mut r = d;
        loop {
            if r == 0 {
                return Ok(());
            }
            r -= 1;
            if pivots[r] < m - d + r {
                pivots[r] += 1;
                for s in r + 1..d {
                    pivots[s] = pivots[s - 1] + 1;
                }
                break;
            }
        }
    }
}

/// All subspaces `S` with `lower <= S <= upper` and `dim S = d`.
fn between(f: &Fp, lower: &Subspace<Fp>, upper: &Subspace<Fp>, d: usize, counter: &Counter) -> Result<Vec<Subspace<Fp>>> {
    if !lower.is_subspace_of(upper) || d < lower.dim() || d > upper.dim() {
        return Ok(Vec::new());
    }
    let n = upper.ambient_dim();
    // complement of lower inside upper
    let mut acc = lower.clone();
    let mut comp: Vec<Vec<u64>> = Vec::new();
    for b in upper.basis() {
        if !acc.contains(b) {
            acc = acc.sum(&Subspace::span(f, n, [b.clone()]));
            comp.push(b.clone());
        }
    }
    let mut out = Vec::new();
    for_each_subspace(f, comp.len(), d - lower.dim(), &mut |rows| {
        counter.tick()?;
        let extra = rows.iter().map(|r| {
            let mut v = vec![0u64; n];
            for (c, basis) in r.iter().zip(&comp) {
                if *c != 0 {
                    for (o, x) in v.iter_mut().zip(basis) {
                        *o = f.mul_add(o, c, x);
                    }
                }
            }
            v
        });
        out.push(Subspace::span(f, n, lower.basis().iter().cloned().chain(extra)));
        Ok(())
    })?;
    Ok(out)
}

struct Counter {
    visited: AtomicU64,
    cap: u128,
    estimate: u128,
}

impl Counter {
    fn tick(&self) -> Result<()> {
        let v = self.visited.fetch_add(1, Ordering::Relaxed) as u128 + 1;
        if v > self.cap {
            return Err(Error::CapExceeded { candidates: self.estimate.max(v), cap: self.cap });
        }
        Ok(())
    }
}

struct Search<'a> {
    rep: &'a Rep<Fp>,
    blocks: &'a Blocks,
    targets: &'a [Vec<usize>],
    counter: Counter,
}

impl Search<'_> {
    fn candidates(&self, chosen: &[Subspace<Fp>], k: usize) -> Result<Vec<Subspace<Fp>>> {
        let f = self.rep.field();
        let q = self.rep.quiver();
        let n = self.rep.dims()[k];
        let mut lower = Subspace::zero(f, n);
        let mut upper = Subspace::full(f, n);
        for a in 0..q.num_arrows() {
            let (s, t) = (q.arrow(a).source, q.arrow(a).target);
            if t == k && s < k {
                lower = lower.sum(&Subspace::image(self.rep.map(a), &chosen[s]));
            }
            if s == k && t < k {
                upper = upper.intersect(&Subspace::preimage(self.rep.map(a), &chosen[t]));
            }
        }
        if !lower.is_subspace_of(&upper) {
            return Ok(Vec::new());
        }
        let mut pieces: Vec<Vec<Subspace<Fp>>> = Vec::new();
        for (j, basis) in self.blocks.bases[k].iter().enumerate() {
            let block = Subspace::span(f, n, basis.iter().cloned());
            let lo = Subspace::span(f, n, lower.basis().iter().map(|x| self.blocks.project(f, k, j, x)));
            let hi = upper.intersect(&block);
            let list = between(f, &lo, &hi, self.targets[k][j], &self.counter)?;
            if list.is_empty() {
                return Ok(Vec::new());
            }
            pieces.push(list);
        }
        let mut out = vec![Subspace::zero(f, n)];
        for list in pieces {
            let mut next = Vec::with_capacity(out.len() * list.len());
            for s in &out {
                for t in &list {
                    next.push(s.sum(t));
                }
            }
            out = next;
        }
        Ok(out)
    }

    fn extend(&self, chosen: &mut Vec<Subspace<Fp>>, out: &mut Vec<Subrep<Fp>>) -> Result<()> {
        let k = chosen.len();
        if k == self.rep.dims().len() {
            let s = Subrep::new(chosen.clone());
            if !s.is_closed_in(self.rep) {
                return Err(Error::Internal("enumerated subspace is not a submodule".into()));
            }
            out.push(s);
            return Ok(());
        }
        for c in self.candidates(chosen, k)? {
            chosen.push(c);
            self.extend(chosen, out)?;
            chosen.pop();
        }
        Ok(())
    }

    fn run(&self) -> Result<Vec<Subrep<Fp>>> {
        if self.rep.dims().is_empty() {
            return Ok(vec![Subrep::new(Vec::new())]);
        }
        let first = self.candidates(&[], 0)?;
        let parts: Vec<Vec<Subrep<Fp>>> = first
            .into_par_iter()
            .map(|c| {
                let mut chosen = vec![c];
                let mut out = Vec::new();
                self.extend(&mut chosen, &mut out)?;
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut all: Vec<Subrep<Fp>> = parts.into_iter().flatten().collect();
        all.sort();
        Ok(all)
    }
}

fn search(rep: &Rep<Fp>, blocks: &Blocks, targets: &[Vec<usize>], cap: u128) -> Result<Vec<Subrep<Fp>>> {
    let p = rep.field().modulus();
    let estimate = blocks
        .bases
        .iter()
        .zip(targets)
        .flat_map(|(bs, ts)| bs.iter().zip(ts).map(|(b, &t)| gaussian_binomial(b.len(), t, p)))
        .fold(1u128, |acc, x| acc.saturating_mul(x));
    let counter = Counter { visited: AtomicU64::new(0), cap, estimate };
    Search { rep, blocks, targets, counter }.run()
}

/// Every submodule of `V` of graded dimension `v`, in canonical order.
pub fn enumerate_submodules(rep: &Rep<Fp>, v: &[usize], cap: u128) -> Result<Vec<Subrep<Fp>>> {
    if v.len() != rep.dims().len() {
        return Err(Error::ShapeMismatch(format!("{} entries for {} vertices", v.len(), rep.dims().len())));
    }
    if v.iter().zip(rep.dims()).any(|(a, b)| a > b) {
        return Ok(Vec::new());
    }
    let targets: Vec<Vec<usize>> = v.iter().map(|&x| vec![x]).collect();
    search(rep, &Blocks::trivial(rep), &targets, cap)
}

pub fn count_submodules(rep: &Rep<Fp>, v: &[usize], cap: u128) -> Result<u64> {
    Ok(enumerate_submodules(rep, v, cap)?.len() as u64)
}

/// Nested pairs `U <= U'` with graded dimensions `u` and `u2`.
pub fn enumerate_pairs(rep: &Rep<Fp>, u: &[usize], u2: &[usize], cap: u128) -> Result<Vec<(Subrep<Fp>, Subrep<Fp>)>> {
    if u.iter().zip(u2).any(|(a, b)| a > b) {
        return Err(Error::Validation("pair dimensions must satisfy u <= u'".into()));
    }
    let small = enumerate_submodules(rep, u, cap)?;
    let big = enumerate_submodules(rep, u2, cap)?;
    let mut out = Vec::new();
    for a in &small {
        for b in &big {
            if a.is_subrep_of(b) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// Submodules of codimension `v` with nilpotent quotient.
pub fn tilde_count(rep: &Rep<Fp>, v: &[usize], cap: u128) -> Result<u64> {
    if v.len() != rep.dims().len() {
        return Err(Error::ShapeMismatch(format!("{} entries for {} vertices", v.len(), rep.dims().len())));
    }
    if v.iter().zip(rep.dims()).any(|(a, b)| a > b) {
        return Ok(0);
    }
    let dims: Vec<usize> = rep.dims().iter().zip(v).map(|(d, c)| d - c).collect();
    let subs = enumerate_submodules(rep, &dims, cap)?;
    if rep.is_nilpotent() {
        return Ok(subs.len() as u64);
    }
    let mut n = 0;
    for s in &subs {
        if rep.quotient(s)?.0.is_nilpotent() {
            n += 1;
        }
    }
    Ok(n)
}

/// `v.w - v.Cv / 2`, the expected dimension used as the interpolation degree.
pub fn expected_dimension(q: &Quiver, w: &[usize], v: &[usize]) -> i64 {
    let c = q.cartan_matrix().matrix;
    let vw: i64 = v.iter().zip(w).map(|(a, b)| (a * b) as i64).sum();
    let vcv: i64 = (0..v.len()).map(|i| (0..v.len()).map(|j| v[i] as i64 * c[i][j] * v[j] as i64).sum::<i64>()).sum();
    vw - vcv / 2
}

/// Point-count polynomial certified at extra primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountPoly {
    /// Integer coefficients, constant term first.
    pub coefficients: Vec<BigInt>,
    pub primes_used: Vec<u64>,
    pub consistency_primes: Vec<u64>,
    pub counts: Vec<(u64, u64)>,
}

impl CountPoly {
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, x: i64) -> BigInt {
        self.coefficients.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Euler characteristic: the value at 1.
    pub fn chi(&self) -> BigInt {
        self.eval(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coefficients.last().cloned().unwrap_or_default()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "polynomial": self.coefficients.iter().map(bigint_json).collect::<Vec<_>>(),
            "degree": self.degree(),
            "chi": bigint_json(&self.chi()),
            "leading": bigint_json(&self.leading()),
            "primes_used": self.primes_used,
            "consistency_primes": self.consistency_primes,
            "counts": self.counts.iter().map(|(p, c)| json!({ "prime": p, "count": c })).collect::<Vec<_>>(),
        })
    }
}

pub fn bigint_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

/// Interpolate counts with a polynomial of degree at most `degree`, using the
/// first `degree + 1` points and checking the rest.
pub fn interpolate_counts(degree: usize, counts: &[(u64, u64)]) -> Result<CountPoly> {
    let needed = degree + 2;
    if counts.len() < needed {
        return Err(Error::InsufficientPrimes { needed, given: counts.len() });
    }
    let inconsistent = || Error::InterpolationInconsistent { degree, counts: counts.to_vec() };
    let pts: Vec<(BigRational, BigRational)> = counts[..=degree]
        .iter()
        .map(|&(p, c)| (poly::rat(p as i64), BigRational::from_integer(BigInt::from(c))))
        .collect();
    let f = poly::interpolate(&pts);
    if f.iter().any(|c| !c.is_integer()) {
        return Err(inconsistent());
    }
    for &(p, c) in &counts[degree + 1..] {
        if poly::eval(&f, &poly::rat(p as i64)) != BigRational::from_integer(BigInt::from(c)) {
            return Err(inconsistent());
        }
    }
    Ok(CountPoly {
        coefficients: f.iter().map(|c| c.to_integer()).collect(),
        primes_used: counts[..=degree].iter().map(|c| c.0).collect(),
        consistency_primes: counts[degree + 1..].iter().map(|c| c.0).collect(),
        counts: counts.to_vec(),
    })
}

/// `#Gr(v, q^w)(F_p)` for each prime, then the certified polynomial.
pub fn count_polynomial(q: &Quiver, w: &[usize], v: &[usize], primes: &[u64], trunc: Option<usize>, cap: u128) -> Result<CountPoly> {
    let degree = expected_dimension(q, w, v).max(0) as usize;
    if primes.len() < degree + 2 {
        return Err(Error::InsufficientPrimes { needed: degree + 2, given: primes.len() });
    }
    let counts = count_at_primes(q, w, v, primes, trunc, cap)?;
    interpolate_counts(degree, &counts)
}

pub fn count_at_primes(q: &Quiver, w: &[usize], v: &[usize], primes: &[u64], trunc: Option<usize>, cap: u128) -> Result<Vec<(u64, u64)>> {
    primes
        .par_iter()
        .map(|&p| {
            let f = PrimeField::new(p)?;
            let model = q_w(&f, q, w, trunc)?;
            Ok((p, count_submodules(model.rep(), v, cap)?))
        })
        .collect()
}

/// Graded dimension with respect to an eigen-grading: `(vertex, weight
/// index) -> dimension`.
pub type GradedCharacter = BTreeMap<(usize, usize), usize>;

/// Eigenspace decomposition of a graded automorphism over the rationals.
#[derive(Clone, Debug)]
pub struct EigenGrading {
    /// Distinct eigenvalues, increasing; weight indices point into this list.
    pub eigenvalues: Vec<BigRational>,
    /// Per vertex, `(weight index, eigenspace)` for each eigenvalue present.
    pub spaces: Vec<Vec<(usize, Subspace<Rationals>)>>,
}

pub fn eigen_grading(gamma: &Morphism<Rationals>) -> Result<EigenGrading> {
    let f = Rationals;
    let per_vertex: Vec<Vec<BigRational>> = gamma.blocks.iter().map(|b| poly::rational_roots(&poly::charpoly(b))).collect();
    let mut eigenvalues: Vec<BigRational> = per_vertex.iter().flatten().cloned().collect();
    eigenvalues.sort();
    eigenvalues.dedup();
    let mut spaces = Vec::with_capacity(gamma.blocks.len());
    for (b, roots) in gamma.blocks.iter().zip(&per_vertex) {
        let n = b.rows();
        let mut here = Vec::new();
        let mut total = 0;
        for r in roots {
            let shifted = b.sub(&Matrix::identity(&f, n).scale(r));
            let e = Subspace::span(&f, n, shifted.kernel());
            total += e.dim();
            here.push((eigenvalues.binary_search(r).expect("collected"), e));
        }
        if total != n {
            return Err(Error::NotDiagonalizable);
        }
        spaces.push(here);
    }
    Ok(EigenGrading { eigenvalues, spaces })
}

impl EigenGrading {
    /// Character of a submodule over `F_p`, reading its intersections with
    /// the reduced eigenspaces.
    pub fn character_mod_p(&self, f: &Fp, u: &Subrep<Fp>) -> Result<GradedCharacter> {
        let mut out = GradedCharacter::new();
        for (k, here) in self.spaces.iter().enumerate() {
            for (idx, e) in here {
                let ep = e.convert(f, |x| f.from_rational(x))?;
                let d = u.space(k).intersect(&ep).dim();
                if d > 0 {
                    out.insert((k, *idx), d);
                }
            }
        }
        Ok(out)
    }

    pub fn character(&self, u: &Subrep<Rationals>) -> GradedCharacter {
        let mut out = GradedCharacter::new();
        for (k, here) in self.spaces.iter().enumerate() {
            for (idx, e) in here {
                let d = u.space(k).intersect(e).dim();
                if d > 0 {
                    out.insert((k, *idx), d);
                }
            }
        }
        out
    }

    /// Whether `u` is the direct sum of its eigenspace intersections.
    pub fn is_graded_mod_p(&self, f: &Fp, u: &Subrep<Fp>) -> Result<bool> {
        let ch = self.character_mod_p(f, u)?;
        Ok((0..self.spaces.len()).all(|k| ch.iter().filter(|((v, _), _)| *v == k).map(|(_, d)| d).sum::<usize>() == u.space(k).dim()))
    }
}

/// Submodules of `q^w` over `F_p` that are graded for the eigen-grading and
/// have character `d`.
pub fn graded_submodules(
    model: &InjectiveModel<Rationals>,
    grading: &EigenGrading,
    d: &GradedCharacter,
    p: u64,
    cap: u128,
) -> Result<Vec<Subrep<Fp>>> {
    let f = PrimeField::new(p)?;
    let rep = model.rep().reduce_mod(p)?;
    let mut bases = Vec::with_capacity(grading.spaces.len());
    let mut targets = Vec::with_capacity(grading.spaces.len());
    for (k, here) in grading.spaces.iter().enumerate() {
        let mut bs = Vec::new();
        let mut ts = Vec::new();
        for (idx, e) in here {
            let basis = e.basis().iter().map(|v| v.iter().map(|x| f.from_rational(x)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
            bs.push(basis);
            ts.push(d.get(&(k, *idx)).copied().unwrap_or(0));
        }
        bases.push(bs);
        targets.push(ts);
    }
    if d.keys().any(|(k, idx)| grading.spaces.get(*k).is_none_or(|h| h.iter().all(|(i, _)| i != idx))) {
        return Ok(Vec::new());
    }
    let blocks = Blocks::new(&rep, bases)?;
    search(&rep, &blocks, &targets, cap)
}
