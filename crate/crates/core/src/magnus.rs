//! Pre-Lie Magnus expansions: the tree-level fixed point, its image in a
//! Rota–Baxter model, the descent-class logarithm of a time-ordered
//! exponential, the `#` product and BCH.

use std::collections::BTreeSet;

use crate::algebra_core::lincomb::GLVector;
use crate::algebra_core::matrix::Matrix;
use crate::algebra_core::poly::Poly;
use crate::algebra_core::scalar::{binomial, factorial, int, Rational};
use crate::algebra_core::tree::Tree;
use crate::combinatorics::{descent_set, Conventions, Permutation};
use crate::error::{Error, Result};
use crate::grossman_larson::{forest_action, gl_exp, gl_log, GLSeries, ProductMode};
use crate::ode::simplex_integral;
use crate::rota_baxter::{left_product, RotaBaxter};

/// Generator name used by [`gl_magnus_fixed_point`].
pub const GENERATOR: &str = "a";

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("truncation order must be at least 1".into()));
    }
    Ok(())
}

/// `x ↶ u` for series, truncated at the common order.
pub fn series_action(x: &GLSeries, u: &GLSeries) -> GLSeries {
    let n = x.truncation();
    let mut out = GLVector::zero();
    for (i, xi) in x.components().iter().enumerate() {
        for (j, uj) in u.components().iter().enumerate() {
            if i + j <= n && !xi.is_zero() && !uj.is_zero() {
                out.add_assign(&forest_action(xi, uj));
            }
        }
    }
    GLSeries::from_vector(&out, n)
}

/// Solves `Ω′ = a ↶ Σ_k B_k/k! Ω′^k` degree by degree, with powers taken in
/// `mode`. `a` must have no degree-0 part.
pub fn pre_lie_magnus(a: &GLSeries, mode: ProductMode, conventions: &Conventions) -> Result<GLSeries> {
    if !a.component(0).is_zero() {
        return Err(Error::Precondition("Magnus needs a series without degree-0 part".into()));
    }
    let n = a.truncation();
    let mut omega = a.clone();
    // each pass fixes at least one more degree
    for _ in 1..n {
        let mut sum = GLSeries::one(n);
        let mut power = GLSeries::one(n);
        for k in 1..n {
            power = power.mul(&omega, mode);
            sum = sum.add(&power.scale(&(conventions.bernoulli(k) / factorial(k))));
        }
        omega = series_action(a, &sum);
    }
    Ok(omega)
}

/// Magnus series of the single-vertex tree `a` up to degree `n`.
pub fn gl_magnus_fixed_point(n: usize) -> Result<GLSeries> {
    gl_magnus_fixed_point_with(n, ProductMode::Star, &Conventions::standard())
}

pub fn gl_magnus_fixed_point_with(n: usize, mode: ProductMode, conventions: &Conventions) -> Result<GLSeries> {
    check_order(n)?;
    let a = GLSeries::from_vector(&GLVector::from_tree(Tree::leaf(GENERATOR)), n);
    pre_lie_magnus(&a, mode, conventions)
}

/// `log^∗(exp(a))`, exponential in the forest product and logarithm in
/// the Grossman–Larson product.
pub fn gl_log_of_exp(n: usize) -> Result<GLSeries> {
    check_order(n)?;
    let a = GLSeries::from_vector(&GLVector::from_tree(Tree::leaf(GENERATOR)), n);
    gl_log(&gl_exp(&a, ProductMode::Commutative)?, ProductMode::Star)
}

/// Homogeneous components `Ω′_1, …, Ω′_n` (index `d − 1` holds degree
/// `d`) of `Ω′ = a + Σ_{k>0} (−1)^k B_k/k! ℓ^k_{Ω′▷}(a)`, `ℓ_u(v) = u ▷ v`.
pub fn magnus_in_model<M: RotaBaxter>(
    m: &M,
    a: &M::Elem,
    n: usize,
    conventions: &Conventions,
) -> Result<Vec<M::Elem>> {
    check_order(n)?;
    m.check(a)?;
    let mut omega: Vec<M::Elem> = vec![a.clone()];
    for d in 2..=n {
        // powers[k][e]: degree-(e+1) part of ℓ^k(a)
        let mut prev: Vec<M::Elem> = vec![a.clone()];
        let mut total = m.zero();
        for k in 1..d {
            let mut next: Vec<M::Elem> = vec![m.zero(); d];
            for (e, x) in prev.iter().enumerate() {
                for (i, w) in omega.iter().enumerate() {
                    let deg = e + i + 2;
                    if deg <= d {
                        next[deg - 1] = m.add(&next[deg - 1], &left_product(m, w, x));
                    }
                }
            }
            let c = conventions.bernoulli(k) / factorial(k);
            let c = if k % 2 == 1 { -c } else { c };
            total = m.add(&total, &m.scale(&next[d - 1], &c));
            prev = next;
        }
        omega.push(total);
    }
    Ok(omega)
}

/// `Σ_{k≥1} x^{∗k}/k!` for graded components (index `d − 1` = degree `d`),
/// product `∗θ`; the exponential without its unit.
pub fn star_exp_minus_one<M: RotaBaxter>(m: &M, xs: &[M::Elem]) -> Vec<M::Elem> {
    let n = xs.len();
    let mut out = xs.to_vec();
    let mut power = xs.to_vec();
    for k in 2..=n {
        let mut next = vec![m.zero(); n];
        for (i, p) in power.iter().enumerate() {
            for (j, x) in xs.iter().enumerate() {
                if i + j + 1 < n {
                    next[i + j + 1] = m.add(&next[i + j + 1], &crate::rota_baxter::star_product(m, p, x));
                }
            }
        }
        let c = int(1) / factorial(k);
        for (o, p) in out.iter_mut().zip(&next) {
            *o = m.add(o, &m.scale(p, &c));
        }
        power = next;
    }
    out
}

/// Graded solution of `x = a + R(x)a` up to degree `n`.
pub fn rb_fixed_point<M: RotaBaxter>(m: &M, a: &M::Elem, n: usize) -> Vec<M::Elem> {
    let mut xs = vec![a.clone()];
    for _ in 1..n {
        let last = xs.last().expect("nonempty");
        xs.push(m.mul(&m.r(last), a));
    }
    xs
}

/// Coefficient `(−1)^{|S|}/n · C(n−1, |S|)^{−1}` of the descent class `S`.
pub fn mps_coefficient(n: usize, descents: usize) -> Rational {
    let sign = if descents.is_multiple_of(2) { int(1) } else { int(-1) };
    sign / (int(n as i64) * binomial(n - 1, descents))
}

/// Components `1..=n` (index `d − 1`) of the descent-class logarithm
/// `Σ_S (−1)^{|S|}/d · C(d−1,|S|)^{−1} Σ_{Desc σ = S} U_σ`.
pub fn mps_log(u: &Matrix<Poly>, n: usize) -> Result<Vec<Matrix<Poly>>> {
    check_order(n)?;
    let mut out = Vec::with_capacity(n);
    for d in 1..=n {
        let us = vec![u.clone(); d];
        let mut classes: Vec<(BTreeSet<usize>, Matrix<Poly>)> = Vec::new();
        for sigma in Permutation::all(d) {
            let s = descent_set(&sigma);
            let x = simplex_integral(&us, &sigma)?;
            match classes.iter_mut().find(|(k, _)| *k == s) {
                Some((_, acc)) => *acc = acc.add(&x),
                None => classes.push((s, x)),
            }
        }
        let mut total = Matrix::zero(u.dim());
        for (s, x) in classes {
            total = total.add(&x.scale(&mps_coefficient(d, s.len())));
        }
        out.push(total);
    }
    Ok(out)
}

/// `x # y = x + e^{r_{↶Ω′(x)}} y` with `r_{↶u}(b) = b ↶ u`.
pub fn sharp_product(x: &GLSeries, y: &GLSeries, conventions: &Conventions) -> Result<GLSeries> {
    let n = x.truncation();
    let omega = pre_lie_magnus(x, ProductMode::Star, conventions)?;
    let mut term = y.clone();
    let mut out = x.add(y);
    for k in 1..=n {
        term = series_action(&term, &omega).scale(&(int(1) / int(k as i64)));
        out = out.add(&term);
    }
    Ok(out)
}

/// `{x; exp(y)}`: the forest action of the commutative exponential.
pub fn brace_with_exp(x: &GLSeries, y: &GLSeries) -> Result<GLSeries> {
    Ok(series_action(x, &gl_exp(y, ProductMode::Commutative)?))
}

/// `log^∗(exp^∗(x) ∗ exp^∗(y))`.
pub fn bch_series(x: &GLSeries, y: &GLSeries) -> Result<GLSeries> {
    let p = gl_exp(x, ProductMode::Star)?.mul(&gl_exp(y, ProductMode::Star)?, ProductMode::Star);
    gl_log(&p, ProductMode::Star)
}

/// `x + y + 1/2[x,y] + 1/12([x,[x,y]] + [y,[y,x]])`, `[u,v] = u↶v − v↶u`.
pub fn bch_formula(x: &GLVector, y: &GLVector) -> GLVector {
    let br = |u: &GLVector, v: &GLVector| forest_action(u, v).sub(&forest_action(v, u));
    let xy = br(x, y);
    let mut out = x.add(y);
    out.add_assign(&xy.scale(&crate::algebra_core::scalar::rat(1, 2)));
    let third = br(x, &xy).add(&br(y, &br(y, x)));
    out.add_assign(&third.scale(&crate::algebra_core::scalar::rat(1, 12)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::expr::parse_element;
    use crate::algebra_core::scalar::rat;
    use crate::algebra_core::tree::Alphabet;
    use crate::rota_baxter::free::letter;
    use crate::rota_baxter::{iota_free, FreeRb, MatrixPoly};

    fn v(s: &str) -> GLVector {
        parse_element(s, &Alphabet::open()).unwrap()
    }

    #[test]
    fn low_degrees() {
        let om = gl_magnus_fixed_point(3).unwrap();
        assert_eq!(om.component(1), &v("a"));
        assert_eq!(om.component(2), &v("-1/2*a[a]"));
        assert_eq!(om.component(3), &v("1/3*a[a[a]] + 1/12*a[a,a]"));
        let forest = gl_magnus_fixed_point_with(3, ProductMode::Commutative, &Conventions::standard()).unwrap();
        assert_eq!(forest.component(3), &v("1/4*a[a[a]] + 1/12*a[a,a]"));
    }

    #[test]
    fn fixed_point_is_log_of_exp() {
        assert_eq!(gl_magnus_fixed_point(5).unwrap(), gl_log_of_exp(5).unwrap());
    }

    #[test]
    fn model_agrees_with_trees() {
        let m = FreeRb;
        let a = letter("a");
        let om = magnus_in_model(&m, &a, 4, &Conventions::standard()).unwrap();
        let trees = gl_magnus_fixed_point(4).unwrap();
        for d in 1..=4 {
            assert_eq!(iota_free(trees.component(d)).unwrap(), om[d - 1], "degree {d}");
        }
        let exp = star_exp_minus_one(&m, &om);
        assert_eq!(exp, rb_fixed_point(&m, &a, 4));
    }

    #[test]
    fn mps_degree_two_and_scalar_collapse() {
        let u = Matrix::parse("[[1 + t]]").unwrap();
        let log = mps_log(&u, 3).unwrap();
        assert_eq!(log[0], u.integrate());
        assert!(log[1].is_zero() && log[2].is_zero());
        assert_eq!(mps_coefficient(2, 1), rat(-1, 2));
        let u = Matrix::parse("[[t, 1],[2, 1 - t]]").unwrap();
        let om = magnus_in_model(&MatrixPoly::new(2), &u, 3, &Conventions::standard()).unwrap();
        let log = mps_log(&u, 3).unwrap();
        for d in 0..3 {
            assert_eq!(log[d], om[d].integrate(), "degree {}", d + 1);
        }
    }

    #[test]
    fn bch_low_degree() {
        let n = 3;
        let (x, y) = (v("x"), v("y"));
        let lhs = bch_series(&GLSeries::from_vector(&x, n), &GLSeries::from_vector(&y, n)).unwrap();
        assert_eq!(lhs.to_vector(), bch_formula(&x, &y));
    }

    #[test]
    fn sharp_and_product_of_exponentials() {
        let n = 4;
        let x = GLSeries::from_vector(&v("x"), n);
        let y = GLSeries::from_vector(&v("y"), n);
        let lhs = gl_exp(&x, ProductMode::Commutative)
            .unwrap()
            .mul(&gl_exp(&y, ProductMode::Commutative).unwrap(), ProductMode::Star);
        let braced = y.add(&brace_with_exp(&x, &y).unwrap());
        assert_eq!(lhs, gl_exp(&braced, ProductMode::Commutative).unwrap());
        let sharp = sharp_product(&y, &x, &Conventions::standard()).unwrap();
        assert_eq!(sharp, braced);
        let zero = GLSeries::zero(n);
        assert_eq!(sharp_product(&x, &zero, &Conventions::standard()).unwrap(), x);
    }
}
