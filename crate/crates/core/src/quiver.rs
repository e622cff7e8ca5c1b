//! Quivers, double quivers, Cartan matrices and finite/affine/wild
//! classification.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Rationals};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite loop-free quiver. Vertex order is the order given at
/// construction and is used for every matrix and basis downstream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    bar: Option<Vec<usize>>,
    index: HashMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub from: String,
    pub to: String,
}

/// On-disk form: `{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bar: Option<Vec<[String; 2]>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Finite,
    Affine,
    Wild,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::Finite => "finite",
            Kind::Affine => "affine",
            Kind::Wild => "wild",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub matrix: Vec<Vec<i64>>,
    pub kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub kind: Kind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl Quiver {
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Quiver>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let spec = QuiverSpec {
            vertices: vertices.into_iter().map(Into::into).collect(),
            arrows: arrows
                .into_iter()
                .map(|(name, from, to)| ArrowSpec { name, from, to })
                .collect(),
            bar: None,
        };
        Quiver::build(&spec)
    }

    /// Validate a spec into a quiver.
    pub fn build(spec: &QuiverSpec) -> Result<Quiver> {
        let mut index = HashMap::new();
        for (i, v) in spec.vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::DuplicateName(v.clone()));
            }
        }
        let mut names = HashMap::new();
        let mut arrows = Vec::with_capacity(spec.arrows.len());
        for (k, a) in spec.arrows.iter().enumerate() {
            let lookup = |v: &String| {
                index.get(v).copied().ok_or_else(|| Error::DanglingEndpoint {
                    arrow: a.name.clone(),
                    vertex: v.clone(),
                })
            };
            let (source, target) = (lookup(&a.from)?, lookup(&a.to)?);
            if source == target {
                return Err(Error::LoopArrow(a.name.clone()));
            }
            if names.insert(a.name.clone(), k).is_some() {
                return Err(Error::DuplicateName(a.name.clone()));
            }
            arrows.push(Arrow { name: a.name.clone(), source, target });
        }
        let bar = match &spec.bar {
            None => None,
            Some(pairs) => {
                let mut bar = vec![usize::MAX; arrows.len()];
                for [a, b] in pairs {
                    let ia = *names.get(a).ok_or_else(|| Error::Validation(format!("bar: unknown arrow {a:?}")))?;
                    let ib = *names.get(b).ok_or_else(|| Error::Validation(format!("bar: unknown arrow {b:?}")))?;
                    if ia == ib || bar[ia] != usize::MAX || bar[ib] != usize::MAX {
                        return Err(Error::Validation(format!("bar pairing {a:?}/{b:?} is not an involution")));
                    }
                    if arrows[ia].source != arrows[ib].target || arrows[ia].target != arrows[ib].source {
                        return Err(Error::Validation(format!("bar({a}) = {b} does not reverse the arrow")));
                    }
                    bar[ia] = ib;
                    bar[ib] = ia;
                }
                if bar.contains(&usize::MAX) {
                    return Err(Error::Validation("bar involution is not defined on every arrow".into()));
                }
                Some(bar)
            }
        };
        Ok(Quiver { vertices: spec.vertices.clone(), arrows, bar, index })
    }

    pub fn from_json(s: &str) -> Result<Quiver> {
        let spec: QuiverSpec = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Quiver::build(&spec)
    }

    pub fn spec(&self) -> QuiverSpec {
        let name = |v: usize| self.vertices[v].clone();
        QuiverSpec {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| ArrowSpec { name: a.name.clone(), from: name(a.source), to: name(a.target) })
                .collect(),
            bar: self.bar.as_ref().map(|bar| {
                (0..self.arrows.len())
                    .filter(|&a| a < bar[a])
                    .map(|a| [self.arrows[a].name.clone(), self.arrows[bar[a]].name.clone()])
                    .collect()
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.spec()).expect("quiver serializes")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }
    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }
    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }
    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::Validation(format!("unknown vertex {name:?}")))
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn is_double(&self) -> bool {
        self.bar.is_some()
    }

    pub fn bar(&self, a: usize) -> Option<usize> {
        self.bar.as_ref().map(|b| b[a])
    }

    /// In a double quiver, an arrow of the original quiver (the member of its
    /// bar pair listed first). Every arrow of an undoubled quiver is original.
    pub fn is_original(&self, a: usize) -> bool {
        match &self.bar {
            Some(b) => a < b[a],
            None => true,
        }
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// The double quiver: original arrows followed by their reverses `a*`.
    pub fn double(&self) -> Result<Quiver> {
        if self.bar.is_some() {
            return Err(Error::AlreadyDoubled);
        }
        let mut spec = self.spec();
        let reversed: Vec<ArrowSpec> = spec
            .arrows
            .iter()
            .map(|a| ArrowSpec { name: format!("{}*", a.name), from: a.to.clone(), to: a.from.clone() })
            .collect();
        spec.bar = Some(
            spec.arrows.iter().zip(&reversed).map(|(a, r)| [a.name.clone(), r.name.clone()]).collect(),
        );
        spec.arrows.extend(reversed);
        Quiver::build(&spec)
    }

    /// The double quiver of `self`, or `self` when already doubled.
    pub fn doubled(&self) -> Quiver {
        if self.is_double() {
            self.clone()
        } else {
            self.double().expect("undoubled quiver doubles")
        }
    }

    /// The same quiver with every arrow reversed (names kept).
    pub fn opposite(&self) -> Result<Quiver> {
        let mut spec = self.spec();
        for a in &mut spec.arrows {
            std::mem::swap(&mut a.from, &mut a.to);
        }
        if let Some(bar) = &mut spec.bar {
            for pair in bar.iter_mut() {
                pair.swap(0, 1);
            }
        }
        Quiver::build(&spec)
    }

    /// Edge multiplicities of the underlying undirected graph.
    pub fn adjacency(&self) -> Vec<Vec<i64>> {
        let n = self.num_vertices();
        let mut adj = vec![vec![0i64; n]; n];
        for (k, a) in self.arrows.iter().enumerate() {
            if self.is_original(k) {
                adj[a.source][a.target] += 1;
                adj[a.target][a.source] += 1;
            }
        }
        adj
    }

    pub fn cartan_matrix(&self) -> CartanData {
        let n = self.num_vertices();
        let adj = self.adjacency();
        let matrix: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 2 } else { -adj[i][j] }).collect())
            .collect();
        let kind = definiteness_kind(&matrix);
        CartanData { matrix, kind }
    }

    pub fn classify(&self) -> Classification {
        let kind = self.cartan_matrix().kind;
        let label = (kind == Kind::Finite).then(|| self.dynkin_label()).flatten();
        Classification { kind, label }
    }

    /// Connected components of the underlying graph, each in vertex order.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for u in 0..n {
                    if adj[v][u] > 0 && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// ADE label of a simply-laced forest, e.g. `A3`, `D4`, `A1+A2`.
    fn dynkin_label(&self) -> Option<String> {
        let adj = self.adjacency();
        let labels = self
            .components()
            .into_iter()
            .map(|comp| dynkin_component_label(&adj, &comp))
            .collect::<Option<Vec<_>>>()?;
        Some(labels.join("+"))
    }
}

fn dynkin_component_label(adj: &[Vec<i64>], comp: &[usize]) -> Option<String> {
    let n = comp.len();
    let edges: i64 = comp.iter().flat_map(|&i| comp.iter().map(move |&j| adj[i][j])).sum::<i64>() / 2;
    if edges != n as i64 - 1 || comp.iter().any(|&i| comp.iter().any(|&j| adj[i][j] > 1)) {
        return None;
    }
    let degree = |v: usize| comp.iter().filter(|&&u| adj[v][u] > 0).count();
    let branch: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => Some(format!("A{n}")),
        [b] if degree(*b) == 3 => {
            let mut arms: Vec<usize> = comp
                .iter()
                .copied()
                .filter(|&u| adj[*b][u] > 0)
                .map(|start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    loop {
                        let next = comp.iter().copied().find(|&u| adj[cur][u] > 0 && u != prev);
                        match next {
                            Some(nx) => {
                                prev = cur;
                                cur = nx;
                                len += 1;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => Some(format!("D{}", k + 3)),
                [1, 2, 2] => Some("E6".into()),
                [1, 2, 3] => Some("E7".into()),
                [1, 2, 4] => Some("E8".into()),
                _ => None,
            }
        }
        _ => None,
    }
}

/// Positive definite -> finite; positive semidefinite with a one-dimensional
/// radical -> affine; anything else -> wild. Exact symmetric elimination.
fn definiteness_kind(c: &[Vec<i64>]) -> Kind {
    let f = Rationals;
    let n = c.len();
    let mut m: Vec<Vec<_>> = c.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
    let mut nullity = 0;
    let mut active: Vec<usize> = (0..n).collect();
    while let Some(&k) = active.first() {
        active.remove(0);
        let d = m[k][k].clone();
        if f.is_zero(&d) {
            if active.iter().any(|&j| !f.is_zero(&m[k][j])) {
                return Kind::Wild;
            }
            nullity += 1;
            continue;
        }
        if d < f.zero() {
            return Kind::Wild;
        }
        for &i in &active {
            let factor = f.div(&m[i][k], &d).expect("nonzero pivot");
            for &j in &active {
                let v = f.sub(&m[i][j], &f.mul(&factor, &m[k][j]));
                m[i][j] = v;
            }
        }
    }
    match nullity {
        0 => Kind::Finite,
        1 => Kind::Affine,
        _ => Kind::Wild,
    }
}

/// Convenience constructors for the quivers used throughout the tests.
pub mod named {
    use super::*;

    fn arrows(list: &[(&str, usize, usize)]) -> Vec<(String, String, String)> {
        list.iter().map(|(n, s, t)| (n.to_string(), (s + 1).to_string(), (t + 1).to_string())).collect()
    }

    fn vertices(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    /// Linearly oriented `A_n`: `a_k : k -> k+1`.
    pub fn type_a(n: usize) -> Quiver {
        let list: Vec<(String, usize, usize)> = (0..n.saturating_sub(1)).map(|k| (format!("a{}", k + 1), k, k + 1)).collect();
        let refs: Vec<(&str, usize, usize)> = list.iter().map(|(s, a, b)| (s.as_str(), *a, *b)).collect();
        Quiver::new(vertices(n), arrows(&refs)).expect("valid A_n")
    }

    /// `A_2` with the single arrow named `a`.
    pub fn a2() -> Quiver {
        Quiver::new(vertices(2), arrows(&[("a", 0, 1)])).expect("valid A2")
    }

    /// `D_n` (n >= 4): a path 1..n-1 with vertex n attached to n-2.
    pub fn type_d(n: usize) -> Quiver {
        assert!(n >= 4);
        let mut list: Vec<(String, usize, usize)> = (0..n - 2).map(|k| (format!("a{}", k + 1), k, k + 1)).collect();
        list.push((format!("a{}", n - 1), n - 3, n - 1));
        let refs: Vec<(&str, usize, usize)> = list.iter().map(|(s, a, b)| (s.as_str(), *a, *b)).collect();
        Quiver::new(vertices(n), arrows(&refs)).expect("valid D_n")
    }

    /// `E_n` (6 <= n <= 8): path 1..n-1, vertex n attached to vertex 3.
    pub fn type_e(n: usize) -> Quiver {
        let mut list: Vec<(String, usize, usize)> = (0..n - 2).map(|k| (format!("a{}", k + 1), k, k + 1)).collect();
        list.push((format!("a{}", n - 1), 2, n - 1));
        let refs: Vec<(&str, usize, usize)> = list.iter().map(|(s, a, b)| (s.as_str(), *a, *b)).collect();
        Quiver::new(vertices(n), arrows(&refs)).expect("valid E_n")
    }

    /// Kronecker quiver: two arrows `a, b : 1 -> 2`.
    pub fn affine_a1() -> Quiver {
        Quiver::new(vertices(2), arrows(&[("a", 0, 1), ("b", 0, 1)])).expect("valid affine A1")
    }

    /// Cyclic affine `A_n` on n+1 vertices.
    pub fn affine_a(n: usize) -> Quiver {
        let m = n + 1;
        let list: Vec<(String, usize, usize)> = (0..m).map(|k| (format!("a{}", k + 1), k, (k + 1) % m)).collect();
        let refs: Vec<(&str, usize, usize)> = list.iter().map(|(s, a, b)| (s.as_str(), *a, *b)).collect();
        Quiver::new(vertices(m), arrows(&refs)).expect("valid affine A_n")
    }

    /// Affine `D_n` (n >= 4) on n+1 vertices.
    pub fn affine_d(n: usize) -> Quiver {
        assert!(n >= 4);
        // spine 3..n-1 (0-based 2..n-2), leaves 1,2 on vertex 3 and n, n+1 on vertex n-1
        let mut list: Vec<(String, usize, usize)> = Vec::new();
        list.push(("l1".into(), 0, 2));
        list.push(("l2".into(), 1, 2));
        for k in 2..n - 2 {
            list.push((format!("s{k}"), k, k + 1));
        }
        list.push(("r1".into(), n - 2, n - 1));
        list.push(("r2".into(), n - 2, n));
        let refs: Vec<(&str, usize, usize)> = list.iter().map(|(s, a, b)| (s.as_str(), *a, *b)).collect();
        Quiver::new(vertices(n + 1), arrows(&refs)).expect("valid affine D_n")
    }

    /// Star with arms of the given lengths around a centre vertex 1.
    pub fn star(arms: &[usize]) -> Quiver {
        let mut list: Vec<(String, usize, usize)> = Vec::new();
        let mut next = 1;
        for (k, &len) in arms.iter().enumerate() {
            let mut prev = 0;
            for step in 0..len {
                list.push((format!("r{}_{}", k + 1, step + 1), prev, next));
                prev = next;
                next += 1;
            }
        }
        let refs: Vec<(&str, usize, usize)> = list.iter().map(|(s, a, b)| (s.as_str(), *a, *b)).collect();
        Quiver::new(vertices(next), arrows(&refs)).expect("valid star")
    }
}

/// Parse a dimension vector, either positional `"1,0,2"` or keyed
/// `"1:1,3:2"` (missing vertices are zero).
pub fn parse_dim_vector(q: &Quiver, s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let n = q.num_vertices();
    if s.is_empty() {
        return Ok(vec![0; n]);
    }
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = |p: &str| Error::Validation(format!("bad dimension entry {p:?}"));
    if parts.iter().any(|p| p.contains(':')) {
        let mut v = vec![0; n];
        let mut seen = BTreeMap::new();
        for p in parts {
            let (k, x) = p.split_once(':').ok_or_else(|| bad(p))?;
            let i = q.vertex_index(k.trim())?;
            if seen.insert(i, ()).is_some() {
                return Err(Error::Validation(format!("vertex {k:?} listed twice")));
            }
            v[i] = x.trim().parse().map_err(|_| bad(p))?;
        }
        Ok(v)
    } else {
        if parts.len() != n {
            return Err(Error::Validation(format!("expected {n} entries, got {}", parts.len())));
        }
        parts.iter().map(|p| p.parse().map_err(|_| bad(p))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn build_a2() {
        let q = a2();
        assert_eq!(q.num_vertices(), 2);
        assert_eq!(q.num_arrows(), 1);
    }

    #[test]
    fn loops_and_duplicates_rejected() {
        let r = Quiver::from_json(r#"{"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"1"}]}"#);
        assert_eq!(r.unwrap_err(), Error::LoopArrow("a".into()));
        let r = Quiver::from_json(
            r#"{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"},{"name":"a","from":"2","to":"1"}]}"#,
        );
        assert_eq!(r.unwrap_err(), Error::DuplicateName("a".into()));
        let r = Quiver::from_json(r#"{"vertices":["1"],"arrows":[{"name":"a","from":"1","to":"7"}]}"#);
        assert!(matches!(r, Err(Error::DanglingEndpoint { .. })));
    }

    #[test]
    fn kronecker_is_valid() {
        let q = affine_a1();
        assert_eq!(q.num_arrows(), 2);
    }

    #[test]
    fn doubling() {
        let d = a2().double().unwrap();
        assert_eq!(d.num_arrows(), 2);
        let bar = d.bar(0).unwrap();
        assert_eq!(d.arrow(bar).name, "a*");
        assert_eq!(d.arrow(bar).source, 1);
        assert_eq!(d.arrow(bar).target, 0);
        assert_eq!(d.bar(bar), Some(0));
        assert_eq!(d.double().unwrap_err(), Error::AlreadyDoubled);
        assert_eq!(type_a(1).double().unwrap().num_arrows(), 0);
        assert_eq!(affine_a1().double().unwrap().num_arrows(), 4);
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let text = r#"{"vertices":["1","2"],"arrows":[{"name":"a","from":"1","to":"2"}]}"#;
        let q = Quiver::from_json(text).unwrap();
        assert_eq!(q.to_json(), text);
        let d = q.double().unwrap();
        let again = Quiver::from_json(&d.to_json()).unwrap();
        assert_eq!(again, d);
        assert_eq!(again.to_json(), d.to_json());
    }

    #[test]
    fn cartan_examples() {
        let c = a2().cartan_matrix();
        assert_eq!(c.matrix, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(c.kind, Kind::Finite);
        let c = affine_a1().cartan_matrix();
        assert_eq!(c.matrix, vec![vec![2, -2], vec![-2, 2]]);
        assert_eq!(c.kind, Kind::Affine);
        // triangle with every edge doubled: C = [[2,-2,-2],...] has eigenvalue -2
        let tri = Quiver::new(
            ["1", "2", "3"],
            [("a", "1", "2"), ("b", "1", "2"), ("c", "2", "3"), ("d", "2", "3"), ("e", "3", "1"), ("f", "3", "1")]
                .map(|(n, s, t)| (n.to_string(), s.to_string(), t.to_string())),
        )
        .unwrap();
        assert_eq!(tri.classify().kind, Kind::Wild);
    }

    #[test]
    fn dynkin_labels() {
        for n in 1..=8 {
            assert_eq!(type_a(n).classify().label.as_deref(), Some(format!("A{n}").as_str()));
        }
        for n in 4..=8 {
            assert_eq!(type_d(n).classify().label.as_deref(), Some(format!("D{n}").as_str()));
        }
        for n in 6..=8 {
            assert_eq!(type_e(n).classify().label.as_deref(), Some(format!("E{n}").as_str()));
        }
        assert_eq!(type_a(3).classify(), Classification { kind: Kind::Finite, label: Some("A3".into()) });
    }

    #[test]
    fn affine_diagrams_are_affine() {
        assert_eq!(affine_a1().classify().kind, Kind::Affine);
        for n in 2..=7 {
            assert_eq!(affine_a(n).classify().kind, Kind::Affine, "affine A{n}");
        }
        for n in 4..=7 {
            assert_eq!(affine_d(n).classify().kind, Kind::Affine, "affine D{n}");
        }
        assert_eq!(star(&[2, 2, 2]).classify().kind, Kind::Affine); // E6~
        assert_eq!(star(&[1, 3, 3]).classify().kind, Kind::Affine); // E7~
        assert_eq!(star(&[1, 2, 5]).classify().kind, Kind::Affine); // E8~
        assert_eq!(star(&[1, 1, 1, 1]).classify().kind, Kind::Affine); // D4~
        assert_eq!(star(&[1, 2, 6]).classify().kind, Kind::Wild);
        assert_eq!(star(&[1, 2, 4]).classify().label.as_deref(), Some("E8"));
    }

    #[test]
    fn cartan_ignores_orientation() {
        for q in [type_a(4), type_d(5), type_e(6), affine_a(3)] {
            assert_eq!(q.cartan_matrix(), q.opposite().unwrap().cartan_matrix());
            assert_eq!(q.cartan_matrix(), q.double().unwrap().cartan_matrix());
        }
    }

    #[test]
    fn dim_vector_syntax() {
        let q = type_a(3);
        assert_eq!(parse_dim_vector(&q, "1,0,2").unwrap(), vec![1, 0, 2]);
        assert_eq!(parse_dim_vector(&q, "3:2,1:1").unwrap(), vec![1, 0, 2]);
        assert!(parse_dim_vector(&q, "1,0").is_err());
        assert!(parse_dim_vector(&q, "9:1").is_err());
    }
}
