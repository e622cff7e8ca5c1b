//! Dense univariate polynomials over the rationals, lowest coefficient first:
//! interpolation, characteristic polynomials and rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::{Field, Rationals};
use crate::linalg::Matrix;

pub type Poly = Vec<BigRational>;

pub fn trim(mut f: Poly) -> Poly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(f: &[BigRational]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

pub fn eval(f: &[BigRational], x: &BigRational) -> BigRational {
    f.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

pub fn derivative(f: &[BigRational]) -> Poly {
    trim(f.iter().enumerate().skip(1).map(|(k, c)| c * BigRational::from_integer(BigInt::from(k))).collect())
}

/// Quotient and remainder; panics on a zero divisor.
pub fn divrem(f: &[BigRational], g: &[BigRational]) -> (Poly, Poly) {
    let dg = degree(g).expect("nonzero divisor");
    let mut r = trim(f.to_vec());
    let Some(df) = degree(&r) else { return (Vec::new(), Vec::new()) };
    if df < dg {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); df - dg + 1];
    let lead = g[dg].clone();
    while let Some(dr) = degree(&r) {
        if dr < dg {
            break;
        }
        let c = &r[dr] / &lead;
        for (k, gk) in g.iter().enumerate().take(dg + 1) {
            r[dr - dg + k] = &r[dr - dg + k] - &c * gk;
        }
        q[dr - dg] = c;
        r = trim(r);
    }
    (trim(q), r)
}

/// Monic greatest common divisor.
pub fn gcd(f: &[BigRational], g: &[BigRational]) -> Poly {
    let (mut a, mut b) = (trim(f.to_vec()), trim(g.to_vec()));
    while degree(&b).is_some() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    match degree(&a) {
        Some(d) => {
            let lead = a[d].clone();
            a.iter().map(|c| c / &lead).collect()
        }
        None => a,
    }
}

/// Coefficients of the polynomial through the given points.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Poly {
    let f = Rationals;
    let n = points.len();
    let rows: Vec<Vec<BigRational>> = points
        .iter()
        .map(|(x, _)| (0..n).map(|k| f.pow(x, k as i64).expect("nonnegative power")).collect())
        .collect();
    let m = Matrix::from_rows(&f, n, rows);
    let rhs: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    trim(m.solve(&rhs).expect("distinct nodes"))
}

/// `det(x I - A)` by the Faddeev-LeVerrier recursion.
pub fn charpoly(a: &Matrix<Rationals>) -> Poly {
    let f = Rationals;
    let n = a.rows();
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m = Matrix::zeros(&f, n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&Matrix::identity(&f, n).scale(&c[n - k + 1]));
        let am = a.mul(&m);
        let tr = (0..n).fold(BigRational::zero(), |acc, i| acc + am.get(i, i));
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    c
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &d * &d <= n && d <= limit {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        // either prime, or a product of large primes left unsplit
        factors.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for x in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(x * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

/// Distinct rational roots in increasing order. Roots whose numerator or
/// denominator has two prime factors above `10^6` may be missed.
pub fn rational_roots(f: &[BigRational]) -> Vec<BigRational> {
    let f = trim(f.to_vec());
    if degree(&f).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let (mut g, _) = divrem(&f, &gcd(&f, &derivative(&f)));
    let mut roots = Vec::new();
    if g[0].is_zero() {
        roots.push(BigRational::zero());
        g.remove(0);
    }
    let lcm = g.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = g.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let (a0, an) = (ints[0].clone(), ints[ints.len() - 1].clone());
    if degree(&g).unwrap_or(0) > 0 {
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1, -1] {
                    let x = BigRational::new(BigInt::from(sign) * &p, q.clone());
                    if eval(&g, &x).is_zero() && !roots.contains(&x) {
                        roots.push(x);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
