//! Raising and lowering operators on functions on quiver grassmannians of
//! `q^w`, realized as integer matrices when every grassmannian is a finite
//! point set, with fiber Euler characteristics and the comparison checks
//! (sl2 relations, Demazure restriction, Chevalley involution).

use std::collections::VecDeque;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::demazure::{crt_reconstruct, demazure_module, LIFT_PRIMES};
use crate::error::{Error, Result};
use crate::field::{PrimeField, Rationals};
use crate::grassmann::{count_submodules, enumerate_submodules, interpolate_counts};
use crate::hull::{q_w, InjectiveModel};
use crate::linalg::Subspace;
use crate::quiver::Quiver;
use crate::repmod::{IsoSearch, Rep, Subrep};
use crate::weyl::{Multiplicities, Weyl};

const Q: Rationals = Rationals;

pub type IntMatrix = Vec<Vec<i64>>;

/// Status of one weight `omega_w - alpha_v` of the module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightStatus {
    /// The grassmannian is a single point, lifted to the rationals.
    Point(Subrep<Rationals>),
    Empty,
    /// Counts vary with the prime or exceed one point.
    NotFinite { counts: Vec<(u64, u64)> },
}

#[derive(Clone, Debug)]
pub struct WeightEntry {
    pub v: Vec<usize>,
    pub multiplicity: u64,
    pub status: WeightStatus,
}

/// Per-weight census of `Gr(v, q^w)` over all weights of the module.
#[derive(Clone, Debug)]
pub struct PointCensus {
    pub model: InjectiveModel<Rationals>,
    pub entries: Vec<WeightEntry>,
}

/// Finite point sets at every weight, with the operator matrices on the
/// basis of point indicator functions.
#[derive(Clone, Debug)]
pub struct FiniteRealization {
    pub model: InjectiveModel<Rationals>,
    pub points: Vec<(Vec<usize>, Subrep<Rationals>)>,
    pub e: Vec<IntMatrix>,
    pub f: Vec<IntMatrix>,
    pub h: Vec<IntMatrix>,
}

fn as_i64(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

/// Weights `omega_w - alpha_v` with nonzero multiplicity, found by stepping
/// up from `v = 0`; sorted by total degree, then lexicographically.
pub fn weights(q: &Quiver, w: &[usize]) -> Result<Vec<(Vec<usize>, u64)>> {
    let weyl = Weyl::new(q);
    let mut mult = Multiplicities::new(&weyl, &as_i64(w))?;
    let n = q.num_vertices();
    let mut seen = std::collections::BTreeMap::new();
    let mut queue = VecDeque::from([vec![0usize; n]]);
    seen.insert(vec![0usize; n], 1u64);
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let mut u = v.clone();
            u[i] += 1;
            if seen.contains_key(&u) {
                continue;
            }
            let m = mult.get(&as_i64(&u))?;
            if m > 0 {
                seen.insert(u.clone(), m);
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<(Vec<usize>, u64)> = seen.into_iter().collect();
    out.sort_by(|a, b| (a.0.iter().sum::<usize>(), &a.0).cmp(&(b.0.iter().sum::<usize>(), &b.0)));
    Ok(out)
}

/// Unique `F_p` point of `Gr(v, rep)` at every listed prime, lifted to the
/// rationals and certified there; `None` unless every count is one.
fn lift_unique_point(rep: &Rep<Rationals>, v: &[usize], cap: u128) -> Result<Option<Subrep<Rationals>>> {
    let mut solutions = Vec::new();
    for &p in &LIFT_PRIMES {
        let rp = match rep.reduce_mod(p) {
            Ok(r) => r,
            Err(Error::BadPrime { .. }) => continue,
            Err(e) => return Err(e),
        };
        let found = enumerate_submodules(&rp, v, cap)?;
        if found.len() != 1 {
            return Ok(None);
        }
        solutions.push((p, found.into_iter().next().expect("one")));
        if let Some(rows) = crt_reconstruct(&solutions) {
            let spaces: Vec<Subspace<Rationals>> =
                rows.into_iter().zip(rep.dims()).map(|(r, &n)| Subspace::span(&Q, n, r)).collect();
            let s = Subrep::new(spaces);
            if s.dims() == v && s.is_closed_in(rep) {
                // the lift must reduce back to every point it came from
                let agrees = solutions.iter().all(|(p, sp)| s.convert(&fp_of(*p), |x| fp_of(*p).reduce(x)).ok().as_ref() == Some(sp));
                if agrees {
                    return Ok(Some(s));
                }
            }
        }
    }
    Ok(None)
}

fn fp_of(p: u64) -> PrimeField {
    PrimeField::new(p).expect("listed primes are prime")
}

/// Counts of `Gr(v, rep)` at each prime.
fn counts(rep: &Rep<Rationals>, v: &[usize], primes: &[u64], cap: u128) -> Result<Vec<(u64, u64)>> {
    primes.iter().map(|&p| Ok((p, count_submodules(&rep.reduce_mod(p)?, v, cap)?))).collect()
}

/// Census of every weight of `q^w` (finite type).
pub fn finite_points(q: &Quiver, w: &[usize], primes: &[u64], cap: u128) -> Result<PointCensus> {
    let model = q_w(&Q, q, w, None)?;
    census_in(&model, model.rep(), q, w, primes, cap)
}

fn census_in(
    model: &InjectiveModel<Rationals>,
    rep: &Rep<Rationals>,
    q: &Quiver,
    w: &[usize],
    primes: &[u64],
    cap: u128,
) -> Result<PointCensus> {
    let mut entries = Vec::new();
    for (v, multiplicity) in weights(q, w)? {
        let c = counts(rep, &v, primes, cap)?;
        let status = if c.iter().all(|&(_, n)| n == 0) {
            WeightStatus::Empty
        } else if c.iter().all(|&(_, n)| n == 1) {
            match lift_unique_point(rep, &v, cap)? {
                Some(s) => WeightStatus::Point(s),
                None => WeightStatus::NotFinite { counts: c },
            }
        } else {
            WeightStatus::NotFinite { counts: c }
        };
        entries.push(WeightEntry { v, multiplicity, status });
    }
    Ok(PointCensus { model: model.clone(), entries })
}

impl PointCensus {
    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|e| !matches!(e.status, WeightStatus::NotFinite { .. }))
    }

    pub fn realize(&self) -> Result<FiniteRealization> {
        let mut points = Vec::new();
        for e in &self.entries {
            match &e.status {
                WeightStatus::Point(s) => points.push((e.v.clone(), s.clone())),
                WeightStatus::Empty => {}
                WeightStatus::NotFinite { .. } => return Err(Error::NotFiniteRegime(e.v.clone())),
            }
        }
        Ok(operator_matrices(&self.model, points))
    }
}

/// `F_i` sends the indicator of `U` to the sum over `U' > U` with one more
/// dimension at `i`; `E_i` is the reverse containment; `H_i = (w - Cv)_i`.
pub fn operator_matrices(model: &InjectiveModel<Rationals>, points: Vec<(Vec<usize>, Subrep<Rationals>)>) -> FiniteRealization {
    let q = model.rep().quiver();
    let n = q.num_vertices();
    let weyl_c = q.cartan_matrix().matrix;
    let np = points.len();
    let mut e = vec![vec![vec![0i64; np]; np]; n];
    let mut f = vec![vec![vec![0i64; np]; np]; n];
    let mut h = vec![vec![vec![0i64; np]; np]; n];
    for (a, (va, ua)) in points.iter().enumerate() {
        for i in 0..n {
            let cv: i64 = (0..n).map(|j| weyl_c[i][j] * va[j] as i64).sum();
            h[i][a][a] = model.w()[i] as i64 - cv;
        }
        for (b, (vb, ub)) in points.iter().enumerate() {
            for i in 0..n {
                let mut up = va.clone();
                up[i] += 1;
                if *vb == up && ua.is_subrep_of(ub) {
                    f[i][b][a] = 1;
                    e[i][a][b] = 1;
                }
            }
        }
    }
    FiniteRealization { model: model.clone(), points, e, f, h }
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n).map(|i| (0..m).map(|j| (0..b.len()).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

pub fn mat_sub(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

fn commutator(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    mat_sub(&mat_mul(a, b), &mat_mul(b, a))
}

fn is_zero(a: &IntMatrix) -> bool {
    a.iter().flatten().all(|&x| x == 0)
}

/// One named relation and whether it held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Check { name: name.into(), passed }
    }
}

impl FiniteRealization {
    pub fn dim(&self) -> usize {
        self.points.len()
    }

    /// `[E_i, F_j] = delta_ij H_i`, `[H_i, E_j] = C_ij E_j`, Serre relations.
    pub fn relation_checks(&self) -> Vec<Check> {
        let q = self.model.rep().quiver();
        let names = q.vertices();
        let c = q.cartan_matrix().matrix;
        let n = q.num_vertices();
        let np = self.dim();
        let zero = vec![vec![0i64; np]; np];
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { self.h[i].clone() } else { zero.clone() };
                out.push(Check::new(format!("[E{},F{}]", names[i], names[j]), commutator(&self.e[i], &self.f[j]) == want));
            }
            // H_i E_i = E_i (H_i + 2)
            let shifted = self.h[i].iter().enumerate().map(|(r, row)| row.iter().enumerate().map(|(k, x)| x + if r == k { 2 } else { 0 }).collect()).collect();
            out.push(Check::new(format!("H{0} E{0} = E{0} (H{0} + 2)", names[i]), mat_mul(&self.h[i], &self.e[i]) == mat_mul(&self.e[i], &shifted)));
            for j in 0..n {
                let scaled: IntMatrix = self.e[j].iter().map(|r| r.iter().map(|x| x * c[i][j]).collect()).collect();
                out.push(Check::new(format!("[H{},E{}]", names[i], names[j]), commutator(&self.h[i], &self.e[j]) == scaled));
                if i != j {
                    let depth = (1 - c[i][j]) as usize;
                    for (ops, tag) in [(&self.e, "E"), (&self.f, "F")] {
                        let mut x = ops[j].clone();
                        for _ in 0..depth {
                            x = commutator(&ops[i], &x);
                        }
                        out.push(Check::new(format!("(ad {tag}{})^{depth} {tag}{} = 0", names[i], names[j]), is_zero(&x)));
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let q = self.model.rep().quiver();
        let names = q.vertices();
        let points: Vec<Value> = self
            .points
            .iter()
            .enumerate()
            .map(|(k, (v, s))| json!({ "index": k, "v": v, "subrep": s.to_json(self.model.rep()) }))
            .collect();
        let ops: Vec<Value> = (0..names.len())
            .map(|i| json!({ "vertex": names[i], "E": self.e[i], "F": self.f[i], "H": self.h[i] }))
            .collect();
        json!({ "w": self.model.w(), "dim": self.dim(), "points": points, "operators": ops })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

/// Euler characteristic of `{U' > U : dims U' = u + e_i}` (up) or
/// `{U'' < U : dims U'' = u - e_i}` (down), from point counts interpolated
/// with degree `#primes - 2`.
pub fn fiber_euler(
    model: &InjectiveModel<Rationals>,
    u: &Subrep<Rationals>,
    i: usize,
    direction: Direction,
    primes: &[u64],
    cap: u128,
) -> Result<BigInt> {
    if primes.len() < 2 {
        return Err(Error::InsufficientPrimes { needed: 2, given: primes.len() });
    }
    let dims = u.dims();
    let mut c = Vec::with_capacity(primes.len());
    for &p in primes {
        let fp = PrimeField::new(p)?;
        let rep = model.rep().reduce_mod(p)?;
        let up = u.convert(&fp, |x| fp.reduce(x))?;
        let n = match direction {
            Direction::Up => {
                // lines in the vertex-i socle layer of q^w / U
                let (quot, _) = rep.quotient(&up)?;
                let mut e = vec![0; dims.len()];
                e[i] = 1;
                count_submodules(&quot, &e, cap)?
            }
            Direction::Down => {
                if dims[i] == 0 {
                    0
                } else {
                    let (sub, _) = rep.restrict(&up)?;
                    let mut d = dims.clone();
                    d[i] -= 1;
                    count_submodules(&sub, &d, cap)?
                }
            }
        };
        c.push((p, n));
    }
    Ok(interpolate_counts(primes.len() - 2, &c)?.chi())
}

/// Result of [`verify_sl2`].
#[derive(Clone, Debug)]
pub struct Sl2Report {
    pub finite: bool,
    pub total_dim: u64,
    pub checks: Vec<Check>,
}

impl Sl2Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "finite_regime": self.finite,
            "total_dim": self.total_dim,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed })).collect::<Vec<_>>(),
        })
    }
}

/// Relation checks in the finite regime; otherwise the vacuum identity
/// `E_i F_i alpha = w_i alpha` from fiber Euler characteristics, and weight
/// multiplicities read from leading coefficients of point counts.
pub fn verify_sl2(q: &Quiver, w: &[usize], primes: &[u64], cap: u128) -> Result<Sl2Report> {
    let census = finite_points(q, w, primes, cap)?;
    let mut checks = Vec::new();
    let total_dim: u64 = census.entries.iter().map(|e| e.multiplicity).sum();
    let names = q.vertices();
    if census.is_finite() {
        let real = census.realize()?;
        checks.extend(real.relation_checks());
        for e in &census.entries {
            let have = u64::from(matches!(e.status, WeightStatus::Point(_)));
            checks.push(Check::new(format!("dim at v={:?} = {}", e.v, e.multiplicity), have == e.multiplicity));
        }
        return Ok(Sl2Report { finite: true, total_dim, checks });
    }
    let model = &census.model;
    let vacuum = Subrep::zero(model.rep());
    for i in 0..q.num_vertices() {
        let up = fiber_euler(model, &vacuum, i, Direction::Up, primes, cap)?;
        checks.push(Check::new(format!("E{0} F{0} alpha = {1} alpha", names[i], w[i]), up == BigInt::from(w[i])));
    }
    for e in &census.entries {
        let degree = crate::grassmann::expected_dimension(q, w, &e.v).max(0) as usize;
        let ok = match &e.status {
            WeightStatus::Point(_) => e.multiplicity == 1,
            _ if primes.len() < degree + 2 => continue,
            _ => {
                let c = counts(model.rep(), &e.v, primes, cap)?;
                interpolate_counts(degree, &c).map(|cp| cp.leading() == BigInt::from(e.multiplicity)).unwrap_or(false)
            }
        };
        checks.push(Check::new(format!("leading coefficient at v={:?} = {}", e.v, e.multiplicity), ok));
    }
    Ok(Sl2Report { finite: false, total_dim, checks })
}

/// Operators computed inside `q^{w,sigma}` agree with the ambient operators
/// restricted to the points lying in `q^{w,sigma}`.
pub fn restricted_compat(q: &Quiver, w: &[usize], sigma: &[usize], primes: &[u64], cap: u128) -> Result<bool> {
    let census = finite_points(q, w, primes, cap)?;
    let ambient = census.realize()?;
    let chain = demazure_module(&Q, q, w, sigma, None)?;
    let (drep, inclusion) = chain.model.rep().restrict(chain.last())?;
    // points of the Demazure module computed in its own coordinates
    let mut inner_points = Vec::new();
    for e in &census.entries {
        let c = counts(&drep, &e.v, primes, cap)?;
        if c.iter().all(|&(_, n)| n == 0) {
            continue;
        }
        if !c.iter().all(|&(_, n)| n == 1) {
            return Err(Error::NotFiniteRegime(e.v.clone()));
        }
        let s = lift_unique_point(&drep, &e.v, cap)?.ok_or_else(|| Error::NotFiniteRegime(e.v.clone()))?;
        inner_points.push((e.v.clone(), s));
    }
    let inner_model = q_w(&Q, q, w, None)?;
    let inner = operator_matrices(&inner_model, inner_points.clone());
    // identify inner points with ambient ones through the inclusion
    let mut index = Vec::with_capacity(inner_points.len());
    for (_, s) in &inner_points {
        let image = Subrep::new(
            inclusion.blocks.iter().zip(s.spaces()).map(|(m, sp)| Subspace::image(m, sp)).collect(),
        );
        match ambient.points.iter().position(|(_, t)| *t == image) {
            Some(k) => index.push(k),
            None => return Ok(false),
        }
    }
    let inside: Vec<usize> = (0..ambient.dim()).filter(|&k| ambient.points[k].1.is_subrep_of(chain.last())).collect();
    let mut sorted = index.clone();
    sorted.sort_unstable();
    if sorted != inside {
        return Ok(false);
    }
    let restrict = |m: &IntMatrix| -> IntMatrix { index.iter().map(|&r| index.iter().map(|&c| m[r][c]).collect()).collect() };
    Ok((0..q.num_vertices()).all(|i| {
        restrict(&ambient.e[i]) == inner.e[i] && restrict(&ambient.f[i]) == inner.f[i] && restrict(&ambient.h[i]) == inner.h[i]
    }))
}

/// Result of [`chevalley_compare`].
#[derive(Clone, Debug)]
pub struct ChevalleyReport {
    /// `bijection[k]`: index in the `theta(w)` realization of the image of
    /// point `k` of the `w` realization.
    pub bijection: Vec<usize>,
    pub e_to_f: bool,
    pub f_to_e: bool,
    pub h_negated: bool,
}

impl ChevalleyReport {
    pub fn passed(&self) -> bool {
        self.e_to_f && self.f_to_e && self.h_negated
    }
}

/// Compare the `w` and `theta(w)` realizations through `U -> psi(U^perp)`,
/// where `psi: (q^w)^* -> q^{theta(w)}` is an explicit isomorphism.
pub fn chevalley_compare(q: &Quiver, w: &[usize], primes: &[u64], cap: u128) -> Result<ChevalleyReport> {
    let theta = Weyl::new(q).theta()?;
    let tw: Vec<usize> = (0..w.len()).map(|i| w[theta[i]]).collect();
    let rw = finite_points(q, w, primes, cap)?.realize()?;
    let rt = finite_points(q, &tw, primes, cap)?.realize()?;
    let dual = rw.model.rep().dual();
    let psi = match dual.find_isomorphism(rt.model.rep()) {
        IsoSearch::Isomorphic(m) => m,
        IsoSearch::NotIsomorphic => return Err(Error::Internal("dual of q^w is not q^theta(w)".into())),
        IsoSearch::Inconclusive { hom_dim } => return Err(Error::SearchExhausted { hom_dim }),
    };
    let mut bijection = Vec::with_capacity(rw.dim());
    for (_, u) in &rw.points {
        let perp = rw.model.rep().annihilator(u);
        let image = Subrep::new(psi.blocks.iter().zip(perp.spaces()).map(|(m, s)| Subspace::image(m, s)).collect());
        let k = rt
            .points
            .iter()
            .position(|(_, t)| *t == image)
            .ok_or_else(|| Error::Internal("complement is not a point of the dual realization".into()))?;
        bijection.push(k);
    }
    let n = q.num_vertices();
    let same = |a: &IntMatrix, b: &IntMatrix, sign: i64| {
        (0..rw.dim()).all(|r| (0..rw.dim()).all(|c| a[r][c] == sign * b[bijection[r]][bijection[c]]))
    };
    Ok(ChevalleyReport {
        e_to_f: (0..n).all(|i| same(&rw.e[i], &rt.f[i], 1)),
        f_to_e: (0..n).all(|i| same(&rw.f[i], &rt.e[i], 1)),
        h_negated: (0..n).all(|i| same(&rw.h[i], &rt.h[i], -1)),
        bijection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::DEFAULT_CAP;
    use crate::quiver::named::*;

    const PRIMES: [u64; 4] = [2, 3, 5, 7];

    #[test]
    fn minuscule_points() {
        let c = finite_points(&a2(), &[1, 0], &PRIMES, DEFAULT_CAP).unwrap();
        assert!(c.is_finite());
        let r = c.realize().unwrap();
        assert_eq!(r.points.iter().map(|p| p.0.clone()).collect::<Vec<_>>(), vec![vec![0, 0], vec![1, 0], vec![1, 1]]);
        let hs: Vec<(i64, i64)> = (0..3).map(|k| (r.h[0][k][k], r.h[1][k][k])).collect();
        assert_eq!(hs, vec![(1, 0), (-1, 1), (0, -1)]);
        assert!(r.relation_checks().iter().all(|c| c.passed));
        // E kills the vacuum
        assert!((0..2).all(|i| r.e[i].iter().all(|row| row[0] == 0)));
        let r = finite_points(&type_a(3), &[1, 0, 0], &PRIMES, DEFAULT_CAP).unwrap().realize().unwrap();
        assert_eq!(r.dim(), 4);
        assert!(r.relation_checks().iter().all(|c| c.passed));
    }

    #[test]
    fn non_finite_weights() {
        let c = finite_points(&type_a(1), &[2], &PRIMES, DEFAULT_CAP).unwrap();
        assert!(!c.is_finite());
        assert_eq!(c.realize().unwrap_err(), Error::NotFiniteRegime(vec![1]));
    }

    #[test]
    fn fibers() {
        let m = q_w(&Q, &type_a(1), &[2], None).unwrap();
        let zero = Subrep::zero(m.rep());
        assert_eq!(fiber_euler(&m, &zero, 0, Direction::Up, &[2, 3, 5], DEFAULT_CAP).unwrap(), BigInt::from(2));
        assert_eq!(fiber_euler(&m, &zero, 0, Direction::Down, &[2, 3, 5], DEFAULT_CAP).unwrap(), BigInt::from(0));
        let m = q_w(&Q, &a2(), &[1, 0], None).unwrap();
        let socle = m.socle_copy();
        assert_eq!(fiber_euler(&m, &socle, 1, Direction::Up, &[2, 3, 5], DEFAULT_CAP).unwrap(), BigInt::from(1));
    }

    #[test]
    fn sl2_reports() {
        let r = verify_sl2(&a2(), &[1, 0], &PRIMES, DEFAULT_CAP).unwrap();
        assert!(r.finite && r.passed());
        assert_eq!(r.total_dim, 3);
        let r = verify_sl2(&type_a(1), &[2], &PRIMES, DEFAULT_CAP).unwrap();
        assert!(!r.finite && r.passed());
        let r = verify_sl2(&a2(), &[1, 1], &PRIMES, DEFAULT_CAP).unwrap();
        assert!(!r.finite && r.passed());
        assert_eq!(r.total_dim, 8);
    }

    #[test]
    fn restriction() {
        for k in 0..=3 {
            let word = [0, 1, 0];
            assert!(restricted_compat(&a2(), &[1, 0], &word[3 - k..], &PRIMES, DEFAULT_CAP).unwrap(), "{k}");
        }
    }

    #[test]
    fn chevalley() {
        let r = chevalley_compare(&a2(), &[1, 0], &PRIMES, DEFAULT_CAP).unwrap();
        assert!(r.passed());
        assert_eq!(r.bijection, vec![2, 1, 0]);
        let r = chevalley_compare(&type_a(1), &[1], &PRIMES, DEFAULT_CAP).unwrap();
        assert!(r.passed());
    }
}
