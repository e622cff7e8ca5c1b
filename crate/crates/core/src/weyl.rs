//! Weyl group words and the shifted action `s_i ._w v = v + (w - Cv)_i e_i`,
//! extremal orbits, the longest element and its diagram involution, Bruhat
//! comparison, and weight multiplicities by Freudenthal's formula.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::quiver::{Kind, Quiver};

/// Simple reflections by vertex index; the last letter acts first.
pub type Word = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weyl {
    cartan: Vec<Vec<i64>>,
    kind: Kind,
}

/// Reachable part of `W ._w 0`, each vector with one shortest word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub entries: BTreeMap<Vec<i64>, Word>,
    /// True when the search ran out of new vectors before the length cap.
    pub complete: bool,
}

impl Weyl {
    pub fn new(q: &Quiver) -> Self {
        let c = q.cartan_matrix();
        Weyl { cartan: c.matrix, kind: c.kind }
    }

    pub fn from_cartan(cartan: Vec<Vec<i64>>, kind: Kind) -> Self {
        Weyl { cartan, kind }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    fn require_finite(&self) -> Result<()> {
        if self.kind == Kind::Finite {
            Ok(())
        } else {
            Err(Error::NotFiniteType)
        }
    }

    fn c_row_dot(&self, i: usize, v: &[i64]) -> i64 {
        self.cartan[i].iter().zip(v).map(|(c, x)| c * x).sum()
    }

    /// `s_i ._w v`.
    pub fn reflect(&self, i: usize, w: &[i64], v: &[i64]) -> Vec<i64> {
        let mut out = v.to_vec();
        out[i] += w[i] - self.c_row_dot(i, v);
        out
    }

    /// `word ._w v`, letters applied right to left.
    pub fn act(&self, word: &[usize], w: &[i64], v: &[i64]) -> Vec<i64> {
        word.iter().rev().fold(v.to_vec(), |acc, &i| self.reflect(i, w, &acc))
    }

    /// `[v, s_{last} v, ..., word v]`: the vectors along the word.
    pub fn stages(&self, word: &[usize], w: &[i64], v: &[i64]) -> Vec<Vec<i64>> {
        let mut out = vec![v.to_vec()];
        for &i in word.iter().rev() {
            let next = self.reflect(i, w, out.last().expect("nonempty"));
            out.push(next);
        }
        out
    }

    /// Breadth-first search of `W ._w 0` up to words of length `length_cap`.
    pub fn extremal_orbit(&self, w: &[i64], length_cap: usize) -> Orbit {
        let n = self.rank();
        let mut entries = BTreeMap::new();
        entries.insert(vec![0; n], Vec::new());
        let mut frontier = vec![(vec![0i64; n], Vec::new())];
        for _ in 0..length_cap {
            let mut next = Vec::new();
            for (v, word) in &frontier {
                for i in 0..n {
                    let u = self.reflect(i, w, v);
                    if !entries.contains_key(&u) {
                        let mut wd = Vec::with_capacity(word.len() + 1);
                        wd.push(i);
                        wd.extend(word);
                        entries.insert(u.clone(), wd.clone());
                        next.push((u, wd));
                    }
                }
            }
            if next.is_empty() {
                return Orbit { entries, complete: true };
            }
            frontier = next;
        }
        let complete = frontier.iter().all(|(v, _)| (0..n).all(|i| entries.contains_key(&self.reflect(i, w, v))));
        Orbit { entries, complete }
    }

    /// Image of the word on the regular vector; equal images mean equal
    /// group elements.
    pub fn element_key(&self, word: &[usize]) -> Vec<i64> {
        self.act(word, &vec![1; self.rank()], &vec![0; self.rank()])
    }

    /// Length of the element represented by `word`, by breadth-first search
    /// no deeper than `word.len()`.
    pub fn length(&self, word: &[usize]) -> usize {
        let target = self.element_key(word);
        let ones = vec![1; self.rank()];
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut frontier = vec![vec![0; self.rank()]];
        seen.insert(frontier[0].clone());
        for depth in 0..=word.len() {
            if frontier.contains(&target) {
                return depth;
            }
            let mut next = Vec::new();
            for v in &frontier {
                for i in 0..self.rank() {
                    let u = self.reflect(i, &ones, v);
                    if seen.insert(u.clone()) {
                        next.push(u);
                    }
                }
            }
            frontier = next;
        }
        unreachable!("a word of length l reaches its element within l steps")
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.length(word) == word.len()
    }

    /// Reduced word for the longest element.
    pub fn longest_element(&self) -> Result<Word> {
        self.require_finite()?;
        let orbit = self.extremal_orbit(&vec![1; self.rank()], usize::MAX);
        let (_, word) = orbit
            .entries
            .iter()
            .max_by_key(|(v, w)| (v.iter().sum::<i64>(), w.len()))
            .expect("orbit contains 0");
        Ok(word.clone())
    }

    /// `s_i` on root-lattice coordinates.
    pub fn reflect_root(&self, i: usize, x: &[i64]) -> Vec<i64> {
        let mut out = x.to_vec();
        out[i] -= self.c_row_dot(i, x);
        out
    }

    pub fn act_root(&self, word: &[usize], x: &[i64]) -> Vec<i64> {
        word.iter().rev().fold(x.to_vec(), |acc, &i| self.reflect_root(i, &acc))
    }

    /// The involution with `sigma_0(alpha_i) = -alpha_theta(i)`.
    pub fn theta(&self) -> Result<Vec<usize>> {
        let w0 = self.longest_element()?;
        let n = self.rank();
        (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                let img = self.act_root(&w0, &e);
                (0..n)
                    .find(|&j| img.iter().enumerate().all(|(k, &x)| x == if k == j { -1 } else { 0 }))
                    .ok_or_else(|| Error::Internal("longest element does not negate a simple root".into()))
            })
            .collect()
    }

    /// `u <= v` in Bruhat order: `u` is a product of a subword of reduced `v`.
    pub fn bruhat_leq(&self, u: &[usize], v: &[usize]) -> Result<bool> {
        if !self.is_reduced(v) {
            return Err(Error::NotReduced(v.iter().map(|i| i.to_string()).collect()));
        }
        let ones = vec![1; self.rank()];
        let mut products: HashSet<Vec<i64>> = HashSet::new();
        products.insert(vec![0; self.rank()]);
        for &i in v.iter().rev() {
            let extra: Vec<Vec<i64>> = products.iter().map(|x| self.reflect(i, &ones, x)).collect();
            products.extend(extra);
        }
        Ok(products.contains(&self.element_key(u)))
    }

    /// Positive roots in simple-root coordinates (finite type).
    pub fn positive_roots(&self) -> Result<Vec<Vec<i64>>> {
        self.require_finite()?;
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(x) = queue.pop_front() {
            for i in 0..n {
                let y = self.reflect_root(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|x| x.iter().all(|&c| c >= 0)).collect();
        pos.sort();
        Ok(pos)
    }

    /// Multiplicity of the weight `omega_w - alpha_v` in the irreducible
    /// highest-weight module of highest weight `omega_w`.
    pub fn weight_multiplicity(&self, w: &[i64], v: &[i64]) -> Result<u64> {
        Multiplicities::new(self, w)?.get(v)
    }
}

/// Memoized Freudenthal recursion for one highest weight.
pub struct Multiplicities<'a> {
    weyl: &'a Weyl,
    w: Vec<i64>,
    roots: Vec<Vec<i64>>,
    memo: HashMap<Vec<i64>, u64>,
}

impl<'a> Multiplicities<'a> {
    pub fn new(weyl: &'a Weyl, w: &[i64]) -> Result<Self> {
        if w.len() != weyl.rank() || w.iter().any(|&x| x < 0) {
            return Err(Error::Validation("highest weight must be a nonnegative vector".into()));
        }
        let roots = weyl.positive_roots()?;
        Ok(Multiplicities { weyl, w: w.to_vec(), roots, memo: HashMap::new() })
    }

    fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        (0..x.len()).map(|i| x[i] * self.weyl.c_row_dot(i, y)).sum()
    }

    /// `m(omega_w - alpha_y)`, with
    /// `m(y) (2 sum y_j (w_j + 1) - y.Cy) = 2 sum_{beta>0, k>=1} m(y - k beta)(w.beta - (y - k beta).C beta)`.
    pub fn get(&mut self, y: &[i64]) -> Result<u64> {
        if y.len() != self.weyl.rank() {
            return Err(Error::ShapeMismatch(format!("{} entries for rank {}", y.len(), self.weyl.rank())));
        }
        if y.iter().any(|&c| c < 0) {
            return Ok(0);
        }
        if y.iter().all(|&c| c == 0) {
            return Ok(1);
        }
        if let Some(&m) = self.memo.get(y) {
            return Ok(m);
        }
        let denom: i64 = 2 * y.iter().zip(&self.w).map(|(a, b)| a * (b + 1)).sum::<i64>() - self.form(y, y);
        let m = if denom == 0 {
            0
        } else {
            let mut num: i64 = 0;
            for r in 0..self.roots.len() {
                let beta = self.roots[r].clone();
                let wb: i64 = self.w.iter().zip(&beta).map(|(a, b)| a * b).sum();
                let mut k = 1;
                loop {
                    let z: Vec<i64> = y.iter().zip(&beta).map(|(a, b)| a - k * b).collect();
                    if z.iter().any(|&c| c < 0) {
                        break;
                    }
                    let mz = self.get(&z)? as i64;
                    num += mz * (wb - self.form(&z, &beta));
                    k += 1;
                }
            }
            let num = 2 * num;
            if num % denom != 0 || num / denom < 0 {
                return Err(Error::Internal(format!("Freudenthal quotient {num}/{denom} at {y:?}")));
            }
            (num / denom) as u64
        };
        self.memo.insert(y.to_vec(), m);
        Ok(m)
    }
}

/// Parse `"1 2 1"` or `"1,2,1"` into vertex indices.
pub fn parse_word(q: &Quiver, s: &str) -> Result<Word> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| q.vertex_index(t))
        .collect()
}

pub fn format_word(q: &Quiver, word: &[usize]) -> Vec<String> {
    word.iter().map(|&i| q.vertices()[i].clone()).collect()
}
