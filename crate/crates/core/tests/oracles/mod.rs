//! Brute-force reference computations, written independently of the library
//! algorithms they check. Only quiver structure and raw matrix entries are
//! taken from the library.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use ppalg::field::PrimeField;
use ppalg::quiver::Quiver;
use ppalg::repmod::Rep;

/// Rank of an integer matrix over the rationals.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        let pivot: Vec<BigRational> = m[rank].iter().map(|x| x * &inv).collect();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let k = m[r][c].clone();
                for j in c..cols {
                    let d = &pivot[j] * &k;
                    m[r][j] -= d;
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Rank of a matrix over `F_p`.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let inv = |a: u64| -> u64 {
        let mut acc = 1u64;
        let (mut b, mut e) = (a, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let k = inv(m[rank][c]);
        for j in 0..cols {
            m[rank][j] = m[rank][j] * k % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in 0..cols {
                    m[r][j] = (m[r][j] + p * p - f * m[rank][j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Double-quiver arrows as `(source, target)`: original arrow `k` at `2k`,
/// its reverse at `2k + 1`. The relation at `v` is
/// `sum_{s(a)=v} a.abar - sum_{t(a)=v} abar.a`, walks read left to right.
fn double_arrows(q: &Quiver) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in q.arrows() {
        out.push((a.source, a.target));
        out.push((a.target, a.source));
    }
    out
}

/// All arrow sequences of length `n` traversed head to tail.
fn walks(arrows: &[(usize, usize)], n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut cur: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
    for _ in 1..n {
        cur = cur
            .into_iter()
            .flat_map(|w| {
                let end = arrows[*w.last().expect("nonempty")].1;
                (0..arrows.len()).filter(move |&a| arrows[a].0 == end).map(move |a| [w.clone(), vec![a]].concat())
            })
            .collect();
    }
    cur
}

/// `dims[n][s][t]` = dimension of the degree-`n` part of the preprojective
/// algebra spanned by walks from `s` to `t`, computed as
/// `#walks - rank(two-sided ideal of the relations)`.
pub fn preprojective_dims(q: &Quiver, max_degree: usize) -> Vec<Vec<Vec<usize>>> {
    let nv = q.num_vertices();
    let arrows = double_arrows(q);
    let mut out = Vec::new();
    for n in 0..=max_degree {
        let mut d = vec![vec![0usize; nv]; nv];
        if n == 0 {
            for (v, row) in d.iter_mut().enumerate() {
                row[v] = 1;
            }
            out.push(d);
            continue;
        }
        let ws = walks(&arrows, n);
        let positions: HashMap<&[usize], usize> = ws.iter().enumerate().map(|(i, w)| (w.as_slice(), i)).collect();
        let index = |w: &[usize]| positions[w];
        // relation loops at each vertex
        let rel = |v: usize| -> Vec<(Vec<usize>, i64)> {
            let mut terms = Vec::new();
            for k in 0..q.num_arrows() {
                let (a, abar) = (2 * k, 2 * k + 1);
                if arrows[a].0 == v {
                    terms.push((vec![a, abar], 1));
                }
                if arrows[a].1 == v {
                    terms.push((vec![abar, a], -1));
                }
            }
            terms
        };
        let shorter = |k: usize| -> Vec<Vec<usize>> {
            if k == 0 {
                Vec::new()
            } else {
                walks(&arrows, k)
            }
        };
        for s in 0..nv {
            for t in 0..nv {
                let block: Vec<usize> =
                    (0..ws.len()).filter(|&i| arrows[ws[i][0]].0 == s && arrows[*ws[i].last().unwrap()].1 == t).collect();
                let column: HashMap<usize, usize> = block.iter().enumerate().map(|(c, &i)| (i, c)).collect();
                if block.is_empty() {
                    continue;
                }
                let mut gens: Vec<Vec<i64>> = Vec::new();
                if n >= 2 {
                    for k in 0..=n - 2 {
                        let lefts: Vec<Vec<usize>> = if k == 0 { vec![Vec::new()] } else { shorter(k) };
                        let rights: Vec<Vec<usize>> = if n - 2 - k == 0 { vec![Vec::new()] } else { shorter(n - 2 - k) };
                        for l in &lefts {
                            let v = l.last().map_or(s, |&a| arrows[a].1);
                            if l.first().is_some_and(|&a| arrows[a].0 != s) {
                                continue;
                            }
                            for r in &rights {
                                if r.first().is_some_and(|&a| arrows[a].0 != v) {
                                    continue;
                                }
                                let end = r.last().map_or(v, |&a| arrows[a].1);
                                if end != t {
                                    continue;
                                }
                                let mut row = vec![0i64; block.len()];
                                for (mid, c) in rel(v) {
                                    let w = [l.clone(), mid, r.clone()].concat();
                                    let col = column[&index(&w)];
                                    row[col] += c;
                                }
                                gens.push(row);
                            }
                        }
                    }
                }
                d[s][t] = block.len() - if gens.is_empty() { 0 } else { rational_rank(&gens) };
            }
        }
        out.push(d);
    }
    out
}

pub fn degree_totals(dims: &[Vec<Vec<usize>>]) -> Vec<usize> {
    dims.iter().map(|d| d.iter().flatten().sum()).collect()
}

/// Every `k`-dimensional subspace of `F_p^n`, as reduced echelon bases.
pub fn subspaces(n: usize, k: usize, p: u64) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| ((pivots[r] + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let total = (p as usize).pow(free.len() as u32);
        for mut code in 0..total {
            let mut basis = vec![vec![0u64; n]; k];
            for (r, &c) in pivots.iter().enumerate() {
                basis[r][c] = 1;
            }
            for &(r, c) in &free {
                basis[r][c] = (code % p as usize) as u64;
                code /= p as usize;
            }
            out.push(basis);
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

fn apply(m: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b % p).sum::<u64>() % p).collect()
}

/// Number of submodules of dimension `v`, by testing every tuple of subspaces.
pub fn count_submodules(rep: &Rep<PrimeField>, v: &[usize], p: u64) -> u64 {
    all_submodules(rep, v, p).len() as u64
}

pub fn all_submodules(rep: &Rep<PrimeField>, v: &[usize], p: u64) -> Vec<Vec<Vec<Vec<u64>>>> {
    let dq = rep.quiver();
    let dims = rep.dims();
    if v.iter().zip(dims).any(|(a, b)| a > b) {
        return Vec::new();
    }
    let choices: Vec<Vec<Vec<Vec<u64>>>> = dims.iter().zip(v).map(|(&n, &k)| subspaces(n, k, p)).collect();
    let maps: Vec<Vec<Vec<u64>>> = rep.maps().iter().map(|m| m.to_rows()).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; dims.len()];
    loop {
        let pick: Vec<&Vec<Vec<u64>>> = idx.iter().enumerate().map(|(k, &i)| &choices[k][i]).collect();
        let closed = (0..dq.num_arrows()).all(|a| {
            let (s, t) = (dq.arrow(a).source, dq.arrow(a).target);
            pick[s].iter().all(|b| {
                let img = apply(&maps[a], b, p);
                let mut rows = pick[t].clone();
                let before = rank_mod_p(&rows, p);
                rows.push(img);
                rank_mod_p(&rows, p) == before
            })
        });
        if closed {
            out.push(pick.into_iter().cloned().collect());
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Cartan matrix of `A_n` from its definition.
pub fn cartan_a(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { 2 } else if i.abs_diff(j) == 1 { -1 } else { 0 }).collect()).collect()
}

/// `s_i ._w v` written out: `v_i <- v_i + w_i - (Cv)_i`.
pub fn dot_reflect(c: &[Vec<i64>], w: &[i64], i: usize, v: &[i64]) -> Vec<i64> {
    let cv: i64 = c[i].iter().zip(v).map(|(a, b)| a * b).sum();
    let mut out = v.to_vec();
    out[i] += w[i] - cv;
    out
}

/// Orbit of `0` under the dot action.
pub fn dot_orbit(c: &[Vec<i64>], w: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut seen = BTreeSet::from([vec![0; w.len()]]);
    let mut frontier = vec![vec![0; w.len()]];
    while let Some(v) = frontier.pop() {
        for i in 0..w.len() {
            let u = dot_reflect(c, w, i, &v);
            if seen.insert(u.clone()) {
                frontier.push(u);
            }
        }
    }
    seen
}

/// Weyl dimension formula for `sl_{n+1}` with highest weight `lambda`
/// (fundamental coordinates): product over `i < j` of
/// `(lambda_i + ... + lambda_{j-1} + j - i) / (j - i)`.
pub fn weyl_dimension_a(lambda: &[i64]) -> i64 {
    let n = lambda.len() + 1;
    let mut num = BigRational::one();
    for i in 0..n {
        for j in i + 1..n {
            let s: i64 = lambda[i..j].iter().sum::<i64>() + (j - i) as i64;
            num *= BigRational::new(s.into(), ((j - i) as i64).into());
        }
    }
    assert!(num.is_integer());
    num.to_integer().try_into().expect("small")
}

/// Zero-weight multiplicity of the adjoint representation of `sl_{n+1}`:
/// basis `E_ij` has weight `e_i - e_j`; the traceless diagonal removes one.
pub fn adjoint_zero_weight_a(n: usize) -> usize {
    let m = n + 1;
    (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).filter(|(i, j)| i == j).count() - 1
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..n).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect()).collect()
}

pub fn commutator(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter().zip(&ba).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}
