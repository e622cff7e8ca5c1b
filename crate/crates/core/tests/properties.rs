//! Randomized invariants across modules.

use num_rational::BigRational;
use ppalg::field::{Field, PrimeField, Rationals};
use ppalg::grassmann::{count_submodules, DEFAULT_CAP};
use ppalg::hull::q_w;
use ppalg::palg::{hilbert, Element, PreprojectiveAlgebra};
use ppalg::quiver::named::{affine_a1, star, type_a, type_d};
use ppalg::quiver::Quiver;
use ppalg::repmod::{Morphism, Subrep};
use ppalg::weyl::Weyl;
use proptest::prelude::*;

fn quiver(k: usize) -> Quiver {
    match k % 4 {
        0 => type_a(3),
        1 => type_d(4),
        2 => affine_a1(),
        _ => star(&[1, 2]),
    }
}

fn element(alg: &PreprojectiveAlgebra, degree: usize, coeffs: &[i64]) -> Element {
    let dim = alg.slice(degree).dim();
    let coords = (0..dim).map(|k| BigRational::from_integer(coeffs[k % coeffs.len()].into())).collect();
    Element { degree, coords }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(
        k in 0usize..4,
        d in prop::array::uniform3(0usize..3),
        c in prop::collection::vec(-3i64..=3, 1..7),
    ) {
        let alg = PreprojectiveAlgebra::new(&quiver(k), 6);
        let x = element(&alg, d[0], &c);
        let y = element(&alg, d[1], &c[1..].iter().chain(&c[..1]).copied().collect::<Vec<_>>());
        let z = element(&alg, d[2], &c.iter().rev().copied().collect::<Vec<_>>());
        let left = alg.multiply(&alg.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = alg.multiply(&x, &alg.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn idempotents_are_units_on_their_corners(k in 0usize..4, d in 0usize..4, c in prop::collection::vec(-3i64..=3, 1..7)) {
        let q = quiver(k);
        let alg = PreprojectiveAlgebra::new(&q, 4);
        let x = element(&alg, d, &c);
        let mut sum: Option<Element> = None;
        for v in 0..q.num_vertices() {
            let part = alg.multiply(&alg.idempotent(v), &x).unwrap();
            sum = Some(match sum {
                None => part,
                Some(s) => Element { degree: d, coords: s.coords.iter().zip(&part.coords).map(|(a, b)| a + b).collect() },
            });
        }
        prop_assert_eq!(sum.unwrap(), x);
    }

    #[test]
    fn orientation_does_not_matter(k in 0usize..4, w in prop::collection::vec(0usize..2, 4)) {
        let q = quiver(k);
        let op = q.opposite().unwrap();
        prop_assert_eq!(hilbert(&q, 6), hilbert(&op, 6));
        let w = &w[..q.num_vertices()];
        if q.classify().kind == ppalg::quiver::Kind::Finite {
            let a = q_w(&Rationals, &q, w, None).unwrap();
            let b = q_w(&Rationals, &op, w, None).unwrap();
            prop_assert_eq!(a.dims(), b.dims());
        }
    }

    #[test]
    fn socle_of_q_w_is_w(k in 0usize..4, w in prop::collection::vec(0usize..3, 4), trunc in 1usize..5) {
        let q = quiver(k);
        let w = &w[..q.num_vertices()];
        let model = q_w(&PrimeField::new(3).unwrap(), &q, w, Some(trunc)).unwrap();
        prop_assert_eq!(model.rep().socle().dims(), w.to_vec());
        prop_assert!(model.rep().is_preprojective() || !model.is_exact());
    }

    /// `U -> U^perp` identifies `Gr(v, q^w)` with `Gr(d - v, (q^w)^*)`, and
    /// the dual of `q^w` is `q^{theta(w)}`.
    #[test]
    fn counts_are_dual(n in 2usize..4, w in prop::collection::vec(0usize..2, 3), v in prop::collection::vec(0usize..3, 3), p in prop::sample::select(vec![2u64, 3])) {
        let q = type_a(n);
        let w = &w[..n];
        let theta = Weyl::new(&q).theta().unwrap();
        let tw: Vec<usize> = (0..n).map(|i| w[theta[i]]).collect();
        let f = PrimeField::new(p).unwrap();
        let a = q_w(&f, &q, w, None).unwrap();
        let b = q_w(&f, &q, &tw, None).unwrap();
        let v: Vec<usize> = v[..n].iter().zip(a.dims()).map(|(x, d)| x % (d + 1)).collect();
        let co: Vec<usize> = a.dims().iter().zip(&v).map(|(d, x)| d - x).collect();
        prop_assert_eq!(count_submodules(a.rep(), &v, DEFAULT_CAP).unwrap(), count_submodules(b.rep(), &co, DEFAULT_CAP).unwrap());
    }

    /// The inclusion of a submodule is the extension of its own projection.
    #[test]
    fn submodules_extend_to_their_inclusion(
        n in 2usize..4,
        w in prop::collection::vec(0usize..2, 3),
        gens in prop::collection::vec((0usize..3, prop::collection::vec(-2i64..=2, 4)), 1..3),
    ) {
        let q = type_a(n);
        let w = &w[..n];
        prop_assume!(w.iter().any(|&x| x > 0));
        let f = Rationals;
        let model = q_w(&f, &q, w, None).unwrap();
        let vectors: Vec<(usize, Vec<BigRational>)> = gens
            .iter()
            .filter(|(v, _)| *v < n && model.dims()[*v] > 0)
            .map(|(v, c)| (*v, (0..model.dims()[*v]).map(|k| f.from_i64(c[k % c.len()])).collect()))
            .collect();
        let u = model.rep().sub_generated(&vectors);
        prop_assume!(!u.is_zero());
        let (sub, inclusion) = model.rep().restrict(&u).unwrap();
        let tau = model.projection().compose(&inclusion);
        let ext = model.extend_to_injective(&sub, &tau).unwrap();
        prop_assert_eq!(&ext.gamma, &inclusion);
        prop_assert!(ext.injective);
        prop_assert_eq!(ext.image, u);
    }

    #[test]
    fn dot_reflections_are_involutions(n in 1usize..5, w in prop::collection::vec(0i64..3, 4), v in prop::collection::vec(-3i64..4, 4), i in 0usize..4) {
        let weyl = Weyl::new(&type_a(n));
        let (w, v, i) = (&w[..n], &v[..n], i % n);
        prop_assert_eq!(weyl.reflect(i, w, &weyl.reflect(i, w, v)), v.to_vec());
    }
}

#[test]
fn zero_morphism_composes_to_zero() {
    let f = Rationals;
    let model = q_w(&f, &type_a(2), &[1, 1], None).unwrap();
    let z = Morphism::zero(&f, model.dims(), model.dims());
    assert!(z.compose(&Morphism::identity(model.rep())).is_zero());
    assert_eq!(z.image(), Subrep::zero(model.rep()));
}
