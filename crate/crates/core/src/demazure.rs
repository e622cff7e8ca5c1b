//! Demazure submodules `q^{w,sigma}`: the chain along a reduced word, the
//! brute-force fallback that certifies a step by uniqueness, nesting checks,
//! and the search for the point where grassmannian counts stabilize.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{rational_reconstruct, Field, FieldSpec, PrimeField};
use crate::grassmann::{count_submodules, enumerate_submodules};
use crate::hull::{q_w, InjectiveModel};
use crate::linalg::Subspace;
use crate::quiver::{Kind, Quiver};
use crate::repmod::Subrep;
use crate::weyl::{format_word, Weyl, Word};

/// Primes tried, in order, when lifting a fallback step to the rationals.
pub const LIFT_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

/// Largest truncation tried when searching for a sufficient bound.
const MAX_SUGGESTED_TRUNCATION: usize = 256;

/// The chain `0 = q^{w,e} < ... < q^{w,word}`. Stage `k` is the Demazure
/// module of the last `k` letters of the word.
#[derive(Clone, Debug)]
pub struct DemazureChain<F: Field> {
    pub model: InjectiveModel<F>,
    pub word: Word,
    pub stages: Vec<Subrep<F>>,
    pub targets: Vec<Vec<i64>>,
    /// Stages that needed the brute-force fallback.
    pub fallback_stages: Vec<usize>,
}

impl<F: Field> DemazureChain<F> {
    pub fn last(&self) -> &Subrep<F> {
        self.stages.last().expect("chain starts at zero")
    }

    pub fn stage_dims(&self) -> Vec<Vec<usize>> {
        self.stages.iter().map(Subrep::dims).collect()
    }
}

fn as_i64(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

/// `{x in q^w_i : x_a x in U_{t(a)} for all a leaving i}`, other vertices kept.
fn socle_of_quotient<F: Field>(model: &InjectiveModel<F>, u: &Subrep<F>, i: usize) -> Subrep<F> {
    let rep = model.rep();
    let q = rep.quiver();
    let mut spaces = u.spaces().to_vec();
    let mut acc = Subspace::full(rep.field(), rep.dims()[i]);
    for a in q.arrows_from(i) {
        acc = acc.intersect(&Subspace::preimage(rep.map(a), u.space(q.arrow(a).target)));
    }
    spaces[i] = acc;
    Subrep::new(spaces)
}

/// `U'` with `U'/U` the vertex-`i` socle of `q^w/U`, checked against
/// `s_i ._w dims(U)`.
pub fn extend_step<F: Field>(model: &InjectiveModel<F>, weyl: &Weyl, u: &Subrep<F>, i: usize) -> Result<Subrep<F>> {
    let w = as_i64(model.w());
    let dims = as_i64(&u.dims());
    let expected = weyl.reflect(i, &w, &dims);
    if expected[i] < dims[i] {
        return Err(Error::NotExtremalInput(dims));
    }
    let next = socle_of_quotient(model, u, i);
    let got = as_i64(&next.dims());
    if got != expected {
        return Err(Error::DimensionMismatch { expected, got });
    }
    Ok(next)
}

/// The unique submodule of graded dimension `target` containing `U`, found by
/// enumeration over prime fields and lifted to the working field.
pub fn fallback_extend<F: Field>(model: &InjectiveModel<F>, u: &Subrep<F>, target: &[usize]) -> Result<Subrep<F>> {
    let f = model.field();
    let unique_mod = |p: u64| -> Result<Subrep<PrimeField>> {
        let fp = PrimeField::new(p)?;
        let to_p = |x: &F::Elem| fp.reduce(&f.to_rational(x));
        let rep = model.rep().convert(&fp, to_p)?;
        let up = u.convert(&fp, to_p)?;
        let (quot, proj) = rep.quotient(&up)?;
        let rel: Vec<usize> = target
            .iter()
            .zip(up.dims())
            .map(|(t, d)| t.checked_sub(d).ok_or_else(|| Error::Validation("target below U".into())))
            .collect::<Result<_>>()?;
        let found = enumerate_submodules(&quot, &rel, crate::grassmann::DEFAULT_CAP)?;
        if found.len() != 1 {
            return Err(Error::Internal(format!("{} submodules of dims {target:?} contain U over F_{p}", found.len())));
        }
        let spaces = proj.blocks.iter().zip(found[0].spaces()).map(|(m, s)| Subspace::preimage(m, s)).collect();
        Ok(Subrep::new(spaces))
    };
    let lift_rows = |spaces: Vec<Vec<Vec<BigRational>>>| -> Result<Subrep<F>> {
        let subspaces = spaces
            .into_iter()
            .zip(model.dims())
            .map(|(rows, &n)| {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(|x| f.from_rational(x)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Ok(Subspace::span(f, n, rows))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subrep::new(subspaces))
    };
    let certify = |s: Subrep<F>| s.is_closed_in(model.rep()) && u.is_subrep_of(&s) && s.dims() == target;

    if let FieldSpec::PrimeField(p) = f.spec() {
        let s = unique_mod(p)?;
        let rows = s
            .spaces()
            .iter()
            .map(|sp| sp.basis().iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect())
            .collect();
        let lifted = lift_rows(rows)?;
        return if certify(lifted.clone()) { Ok(lifted) } else { Err(Error::Internal("fallback failed to certify".into())) };
    }

    let mut solutions = Vec::new();
    for &p in &LIFT_PRIMES {
        match unique_mod(p) {
            Ok(s) => solutions.push((p, s)),
            Err(Error::BadPrime { .. }) => continue,
            Err(e) => return Err(e),
        }
        if let Some(rows) = crt_reconstruct(&solutions) {
            let lifted = lift_rows(rows)?;
            if certify(lifted.clone()) {
                return Ok(lifted);
            }
        }
    }
    Err(Error::Internal("fallback lift did not certify at any prime".into()))
}

/// Chinese remaindering of echelon bases computed at several primes, then
/// rational reconstruction of every entry. Primes whose pivot pattern differs
/// from the first are skipped. Returns per-vertex basis rows.
pub fn crt_reconstruct(solutions: &[(u64, Subrep<PrimeField>)]) -> Option<Vec<Vec<Vec<BigRational>>>> {
    let (_, first) = solutions.first()?;
    let pattern: Vec<Vec<usize>> = first.spaces().iter().map(|sp| sp.pivots().to_vec()).collect();
    let mut modulus = BigInt::one();
    let mut acc: Vec<Vec<Vec<BigInt>>> =
        first.spaces().iter().map(|sp| sp.basis().iter().map(|r| vec![BigInt::zero(); r.len()]).collect()).collect();
    for (p, s) in solutions {
        if s.spaces().iter().map(|sp| sp.pivots().to_vec()).collect::<Vec<_>>() != pattern {
            continue;
        }
        let bp = BigInt::from(*p);
        let minv = mod_inverse(&(&modulus % &bp), &bp);
        for (va, sp) in acc.iter_mut().zip(s.spaces()) {
            for (ra, rb) in va.iter_mut().zip(sp.basis()) {
                for (a, &b) in ra.iter_mut().zip(rb) {
                    // a mod m and b mod p  ->  a + m ((b - a) m^{-1} mod p)
                    let t = (((BigInt::from(b) - &*a) % &bp + &bp) % &bp * &minv) % &bp;
                    *a += &modulus * t;
                }
            }
        }
        modulus *= &bp;
    }
    acc.iter()
        .map(|rows| rows.iter().map(|r| r.iter().map(|x| rational_reconstruct(x, &modulus)).collect()).collect())
        .collect()
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = num_integer::Integer::extended_gcd(a, p);
    ((e.x % p) + p) % p
}

fn build_chain<F: Field>(model: InjectiveModel<F>, weyl: &Weyl, word: &[usize]) -> Result<DemazureChain<F>> {
    let w = as_i64(model.w());
    let targets = weyl.stages(word, &w, &vec![0; w.len()]);
    let mut stages = vec![Subrep::zero(model.rep())];
    let mut fallback_stages = Vec::new();
    for (k, &i) in word.iter().rev().enumerate() {
        let u = stages.last().expect("nonempty");
        let next = match extend_step(&model, weyl, u, i) {
            Ok(s) => s,
            Err(Error::DimensionMismatch { expected, .. }) => {
                let target: Vec<usize> = expected.iter().map(|&x| x as usize).collect();
                fallback_stages.push(k + 1);
                fallback_extend(&model, u, &target)?
            }
            Err(e) => return Err(e),
        };
        if !model.fits_below_top(&next) {
            return Err(Error::TruncationTooSmall { requested: model.bound(), suggested: None });
        }
        stages.push(next);
    }
    Ok(DemazureChain { model, word: word.to_vec(), stages, targets, fallback_stages })
}

/// Demazure chain of `q^w` along a reduced word.
pub fn demazure_module<F: Field>(field: &F, q: &Quiver, w: &[usize], word: &[usize], trunc: Option<usize>) -> Result<DemazureChain<F>> {
    let weyl = Weyl::new(q);
    if word.iter().any(|&i| i >= q.num_vertices()) {
        return Err(Error::Validation("word letter out of range".into()));
    }
    if !weyl.is_reduced(word) {
        return Err(Error::NotReduced(format_word(q, word)));
    }
    let model = q_w(field, q, w, trunc)?;
    match build_chain(model, &weyl, word) {
        Err(Error::TruncationTooSmall { requested, .. }) => {
            let mut n = requested * 2;
            while n <= MAX_SUGGESTED_TRUNCATION {
                if build_chain(q_w(field, q, w, Some(n))?, &weyl, word).is_ok() {
                    return Err(Error::TruncationTooSmall { requested, suggested: Some(n) });
                }
                n *= 2;
            }
            Err(Error::TruncationTooSmall { requested, suggested: None })
        }
        other => other,
    }
}

/// For Bruhat-comparable words, whether the first final stage lies in the
/// second.
pub fn check_nesting<F: Field>(weyl: &Weyl, c1: &DemazureChain<F>, c2: &DemazureChain<F>) -> Result<bool> {
    if !weyl.bruhat_leq(&c1.word, &c2.word)? {
        return Err(Error::NotBruhatComparable);
    }
    Ok(c1.last().is_subrep_of(c2.last()))
}

/// Number of `F_p` points of `Gr(v, q^w)` for every stage of the chain.
pub fn stage_counts(q: &Quiver, w: &[usize], word: &[usize], p: u64, trunc: Option<usize>, cap: u128) -> Result<Vec<u64>> {
    let f = PrimeField::new(p)?;
    let chain = demazure_module(&f, q, w, word, trunc)?;
    chain.stages.iter().map(|s| count_submodules(chain.model.rep(), &s.dims(), cap)).collect()
}

/// `#Gr(v, q^{w,sigma})(F_p)`.
pub fn demazure_count(q: &Quiver, w: &[usize], sigma: &[usize], v: &[usize], p: u64, trunc: Option<usize>, cap: u128) -> Result<u64> {
    let f = PrimeField::new(p)?;
    let chain = demazure_module(&f, q, w, sigma, trunc)?;
    let (d, _) = chain.model.rep().restrict(chain.last())?;
    count_submodules(&d, v, cap)
}

/// Shortest `sigma` after which the counts of `Gr(v, q^{w,sigma})` stop
/// changing at every test prime. In finite type the comparison is with the
/// full `q^w`; otherwise with every one-step extension `s_i sigma`.
pub fn stabilization_sigma(
    q: &Quiver,
    w: &[usize],
    v: &[usize],
    primes: &[u64],
    trunc: Option<usize>,
    cap: u128,
    length_cap: usize,
) -> Result<Word> {
    if v.iter().all(|&x| x == 0) {
        return Ok(Vec::new());
    }
    let weyl = Weyl::new(q);
    let wi = as_i64(w);
    let orbit = weyl.extremal_orbit(&wi, length_cap);
    let mut candidates: Vec<(&Vec<i64>, &Word)> = orbit.entries.iter().collect();
    candidates.sort_by(|a, b| (a.1.len(), a.1).cmp(&(b.1.len(), b.1)));
    let counts = |sigma: &[usize]| -> Result<Vec<u64>> {
        primes.iter().map(|&p| demazure_count(q, w, sigma, v, p, trunc, cap)).collect()
    };
    if weyl.kind() == Kind::Finite {
        let full: Vec<u64> = primes
            .iter()
            .map(|&p| count_submodules(q_w(&PrimeField::new(p)?, q, w, trunc)?.rep(), v, cap))
            .collect::<Result<_>>()?;
        for (_, word) in candidates {
            if counts(word)? == full {
                return Ok(word.clone());
            }
        }
        return Err(Error::Internal("full Demazure module not reached in the orbit".into()));
    }
    for (vec, word) in candidates {
        let here = counts(word)?;
        if here.iter().all(|&c| c == 0) {
            continue;
        }
        let mut stable = true;
        for i in 0..q.num_vertices() {
            let up = weyl.reflect(i, &wi, vec);
            if up[i] <= vec[i] {
                continue;
            }
            let mut longer = vec![i];
            longer.extend(word);
            if counts(&longer)? != here {
                stable = false;
                break;
            }
        }
        if stable {
            return Ok(word.clone());
        }
    }
    Err(Error::LengthCapExceeded(length_cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::grassmann::DEFAULT_CAP;
    use crate::quiver::named::*;

    const Q: Rationals = Rationals;

    fn dims(chain: &DemazureChain<Rationals>) -> Vec<Vec<usize>> {
        chain.stage_dims()
    }

    #[test]
    fn single_steps() {
        let model = q_w(&Q, &a2(), &[1, 1], None).unwrap();
        let weyl = Weyl::new(&a2());
        let u0 = Subrep::zero(model.rep());
        let u1 = extend_step(&model, &weyl, &u0, 0).unwrap();
        assert_eq!(u1.dims(), vec![1, 0]);
        let u2 = extend_step(&model, &weyl, &u1, 1).unwrap();
        assert_eq!(u2.dims(), vec![1, 2]);
        let u3 = extend_step(&model, &weyl, &u2, 0).unwrap();
        assert_eq!(u3, Subrep::full(model.rep()));
        assert!(matches!(extend_step(&model, &weyl, &u1, 0), Err(Error::NotExtremalInput(_))));
    }

    #[test]
    fn chains() {
        let c = demazure_module(&Q, &a2(), &[1, 1], &[0, 1, 0], None).unwrap();
        assert_eq!(dims(&c), vec![vec![0, 0], vec![1, 0], vec![1, 2], vec![2, 2]]);
        assert!(c.fallback_stages.is_empty());
        let d = demazure_module(&Q, &a2(), &[1, 1], &[1, 0, 1], None).unwrap();
        assert_eq!(dims(&d), vec![vec![0, 0], vec![0, 1], vec![2, 1], vec![2, 2]]);
        assert_eq!(c.last(), d.last());
        let e = demazure_module(&Q, &a2(), &[1, 1], &[], None).unwrap();
        assert_eq!(e.stages.len(), 1);
        assert!(matches!(demazure_module(&Q, &a2(), &[1, 1], &[0, 0], None), Err(Error::NotReduced(_))));
    }

    #[test]
    fn stages_are_stable_nilpotent_and_unique() {
        for (q, w) in [(a2(), vec![1, 1]), (type_a(3), vec![1, 0, 1]), (type_d(4), vec![0, 1, 0, 0])] {
            let weyl = Weyl::new(&q);
            let w0 = weyl.longest_element().unwrap();
            let c = demazure_module(&Q, &q, &w, &w0, None).unwrap();
            assert_eq!(c.last(), &Subrep::full(c.model.rep()));
            for (s, t) in c.stages.iter().zip(&c.targets) {
                assert_eq!(as_i64(&s.dims()), *t);
                let pt = c.model.to_nakajima(s).unwrap();
                assert!(pt.stable && pt.x.is_nilpotent());
            }
            for p in [2, 3] {
                assert!(stage_counts(&q, &w, &w0, p, None, DEFAULT_CAP).unwrap().iter().all(|&n| n == 1));
            }
        }
    }

    #[test]
    fn fallback_agrees_with_direct_step() {
        for f_is_q in [true, false] {
            let (q, w) = (type_a(3), vec![1, 1, 0]);
            let weyl = Weyl::new(&q);
            let w0 = weyl.longest_element().unwrap();
            if f_is_q {
                let c = demazure_module(&Q, &q, &w, &w0, None).unwrap();
                for k in 1..c.stages.len() {
                    let target = c.stages[k].dims();
                    assert_eq!(fallback_extend(&c.model, &c.stages[k - 1], &target).unwrap(), c.stages[k]);
                }
            } else {
                let f = PrimeField::new(5).unwrap();
                let c = demazure_module(&f, &q, &w, &w0, None).unwrap();
                for k in 1..c.stages.len() {
                    let target = c.stages[k].dims();
                    assert_eq!(fallback_extend(&c.model, &c.stages[k - 1], &target).unwrap(), c.stages[k]);
                }
            }
        }
    }

    #[test]
    fn nesting() {
        let weyl = Weyl::new(&a2());
        let c1 = demazure_module(&Q, &a2(), &[1, 1], &[0], None).unwrap();
        let c2 = demazure_module(&Q, &a2(), &[1, 1], &[1, 0], None).unwrap();
        assert!(check_nesting(&weyl, &c1, &c2).unwrap());
        let c3 = demazure_module(&Q, &a2(), &[1, 1], &[1], None).unwrap();
        assert_eq!(check_nesting(&weyl, &c1, &c3).unwrap_err(), Error::NotBruhatComparable);
    }

    #[test]
    fn truncation_is_checked() {
        // affine A1, w = (1,0): the chain along 2 1 2 1 climbs past a small bound
        let q = affine_a1();
        let word = vec![1, 0, 1, 0];
        match demazure_module(&Q, &q, &[1, 0], &word, Some(2)) {
            Err(Error::TruncationTooSmall { requested: 2, suggested: Some(n) }) => {
                assert!(demazure_module(&Q, &q, &[1, 0], &word, Some(n)).is_ok());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn stabilization() {
        assert_eq!(stabilization_sigma(&a2(), &[1, 0], &[1, 1], &[2, 3], None, DEFAULT_CAP, 10).unwrap(), vec![1, 0]);
        assert_eq!(stabilization_sigma(&a2(), &[1, 0], &[0, 0], &[2, 3], None, DEFAULT_CAP, 10).unwrap(), Vec::<usize>::new());
        assert_eq!(stabilization_sigma(&type_a(1), &[2], &[1], &[2, 3], None, DEFAULT_CAP, 10).unwrap(), vec![0]);
    }
}
