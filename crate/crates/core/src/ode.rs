//! Exact time-ordered exponentials of polynomial matrix functions `U(t)`.
//!
//! Every series is graded by the number of `U` factors; index `k` of a
//! returned vector holds the degree-`k` term.

use crate::algebra_core::matrix::Matrix;
use crate::algebra_core::poly::{MultiPoly, Poly};
use crate::algebra_core::scalar::{factorial, int, to_f64, Rational, Ring};
use crate::combinatorics::{compositions, Conventions, Permutation};
use crate::error::{Error, Result};

/// Which linear equation a series solves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// `Ẏ = UY`: later times stand to the left.
    Left,
    /// `Ẏ = YU`: later times stand to the right.
    Right,
}

fn same_dim(us: &[Matrix<Poly>]) -> Result<usize> {
    let d = us.first().ok_or(Error::Empty("need at least one matrix"))?.dim();
    for u in us {
        if u.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: u.dim() });
        }
    }
    Ok(d)
}

/// `∫_{0≤t_1≤…≤t_n≤t} U_1(t_σ(1)) ⋯ U_n(t_σ(n))`. With all `U_i` equal
/// this is the descent-class integral `U_σ`.
pub fn simplex_integral(us: &[Matrix<Poly>], sigma: &Permutation) -> Result<Matrix<Poly>> {
    let d = same_dim(us)?;
    let n = us.len();
    if sigma.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: sigma.len() });
    }
    // variables t_1..t_n are 0..n-1, the upper limit t is n
    let vars = n + 1;
    let lift = |u: &Matrix<Poly>, var: usize| -> Vec<MultiPoly> {
        u.entries().iter().map(|p| MultiPoly::from_poly(p, vars, var)).collect()
    };
    let mut acc = lift(&us[0], sigma.apply(1) - 1);
    for (j, u) in us.iter().enumerate().skip(1) {
        let rhs = lift(u, sigma.apply(j + 1) - 1);
        let mut next = Vec::with_capacity(d * d);
        for i in 0..d {
            for k in 0..d {
                let mut s = MultiPoly::zero_in(vars);
                for l in 0..d {
                    s = s.add(&acc[i * d + l].mul(&rhs[l * d + k]));
                }
                next.push(s);
            }
        }
        acc = next;
    }
    let entries: Vec<Poly> = acc
        .iter()
        .map(|e| {
            let mut e = e.clone();
            for var in 0..n {
                e = e.integrate_up_to(var, var + 1);
            }
            e.into_poly(n).expect("only the upper limit remains")
        })
        .collect();
    Ok(Matrix::from_fn(d, |i, k| entries[i * d + k].clone()))
}

/// Terms `0..=n` of the time-ordered exponential.
pub fn dyson_series(u: &Matrix<Poly>, n: usize, orientation: Orientation) -> Vec<Matrix<Poly>> {
    let mut out = vec![Matrix::identity(u.dim())];
    for _ in 0..n {
        let prev = out.last().expect("nonempty");
        let integrand = match orientation {
            Orientation::Left => u.mul(prev),
            Orientation::Right => prev.mul(u),
        };
        out.push(integrand.integrate());
    }
    out
}

/// `Σ_σ ∫_{0≤t_1≤…≤t_n≤t} U_σ(1)(t_1) ⋯ U_σ(n)(t_n)`: the integral over
/// `[0,t]^n` of the time-ordered product, earliest time leftmost.
pub fn texp_symmetrized(us: &[Matrix<Poly>]) -> Result<Matrix<Poly>> {
    let d = same_dim(us)?;
    let id = Permutation::identity(us.len());
    let mut out = Matrix::zero(d);
    for sigma in Permutation::all(us.len()) {
        out = out.add(&simplex_integral(&sigma.permute(us), &id)?);
    }
    Ok(out)
}

/// `U^{▷1} = U`, `U^{▷k+1} = [∫U^{▷k}, U]`.
pub fn left_powers(u: &Matrix<Poly>, n: usize) -> Vec<Matrix<Poly>> {
    let mut out = vec![u.clone()];
    for _ in 1..n {
        let last = out.last().expect("nonempty").integrate();
        out.push(last.commutator(u));
    }
    out
}

/// Terms `0..=n` of
/// `1 + Σ_k (1/k!) Σ_{k_1+…+k_l=k} c(k_1,…,k_l) ∫U^{▷k_1} ⋯ ∫U^{▷k_l}`.
pub fn texp_prelie_form(u: &Matrix<Poly>, n: usize, conventions: &Conventions) -> Result<Vec<Matrix<Poly>>> {
    let ints: Vec<Matrix<Poly>> = left_powers(u, n.max(1)).iter().map(Matrix::integrate).collect();
    let mut out = vec![Matrix::identity(u.dim())];
    for k in 1..=n {
        let mut total = Matrix::zero(u.dim());
        for comp in compositions(k) {
            let c = conventions.c_coefficient(&comp)?;
            let prod = comp
                .parts()
                .iter()
                .map(|&p| ints[p - 1].clone())
                .reduce(|a, b| a.mul(&b))
                .expect("compositions are nonempty");
            total = total.add(&prod.scale(&c));
        }
        out.push(total.scale(&(int(1) / factorial(k))));
    }
    Ok(out)
}

/// Graded exponential `Σ X^k/k!` of a series without constant term, given by
/// its components of degree `1..=n` (index `d − 1`).
pub fn graded_exp(xs: &[Matrix<Poly>]) -> Vec<Matrix<Poly>> {
    let n = xs.len();
    let d = xs.first().map_or(0, Matrix::dim);
    let mut out = vec![Matrix::zero(d); n + 1];
    out[0] = Matrix::identity(d);
    let mut power = out.clone();
    for k in 1..=n {
        let mut next = vec![Matrix::zero(d); n + 1];
        for (i, p) in power.iter().enumerate() {
            for (j, x) in xs.iter().enumerate() {
                if i + j < n && !p.is_zero() {
                    next[i + j + 1] = next[i + j + 1].add(&p.mul(x));
                }
            }
        }
        let c = int(1) / factorial(k);
        for (o, p) in out.iter_mut().zip(&next) {
            *o = o.add(&p.scale(&c));
        }
        power = next;
    }
    out
}

/// Sum of the graded terms.
pub fn total(terms: &[Matrix<Poly>]) -> Matrix<Poly> {
    terms.iter().skip(1).fold(terms[0].clone(), |a, b| a.add(b))
}

/// Parses `a:b:steps` into `steps + 1` equally spaced rational points.
pub fn parse_grid(text: &str) -> Result<Vec<Rational>> {
    let parts: Vec<&str> = text.split(':').collect();
    let [a, b, steps] = parts[..] else {
        return Err(Error::syntax(0, "grid must look like a:b:steps"));
    };
    let a = crate::algebra_core::scalar::parse_rational(a)?;
    let b = crate::algebra_core::scalar::parse_rational(b)?;
    let steps: usize = steps.trim().parse().map_err(|_| Error::syntax(0, "steps must be a positive integer"))?;
    if steps == 0 {
        return Err(Error::OutOfRange("grid needs at least one step".into()));
    }
    let h = (&b - &a) / int(steps as i64);
    Ok((0..=steps).map(|i| &a + &h * int(i as i64)).collect())
}

/// Floating-point values of every entry at each grid point.
pub fn float_table(m: &Matrix<Poly>, grid: &[Rational]) -> Vec<(f64, Vec<f64>)> {
    grid.iter()
        .map(|t| (to_f64(t), m.eval(t).entries().iter().map(to_f64).collect()))
        .collect()
}

/// Zero matrix check usable on graded vectors.
pub fn all_zero(xs: &[Matrix<Poly>]) -> bool {
    xs.iter().all(|x| x.entries().iter().all(Ring::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra_core::scalar::rat;

    fn m(s: &str) -> Matrix<Poly> {
        Matrix::parse(s).unwrap()
    }

    #[test]
    fn constant_integrand() {
        let a = m("[[1, 2],[0, 3]]");
        for sigma in Permutation::all(3) {
            let x = simplex_integral(&[a.clone(), a.clone(), a.clone()], &sigma).unwrap();
            let a3 = a.mul(&a).mul(&a);
            let expected = Matrix::from_fn(2, |i, j| Poly::monomial(a3.get(i, j).coeff(0) * rat(1, 6), 3));
            assert_eq!(x, expected);
        }
    }

    #[test]
    fn two_factor_integrals() {
        let u = m("[[t, 1],[1 - t, 2]]");
        let id = Permutation::identity(2);
        let swap = Permutation::new(vec![2, 1]).unwrap();
        let x12 = simplex_integral(&[u.clone(), u.clone()], &id).unwrap();
        let x21 = simplex_integral(&[u.clone(), u.clone()], &swap).unwrap();
        assert_eq!(x12, u.integrate().mul(&u).integrate());
        let r = u.integrate();
        assert_eq!(x12.add(&x21), r.mul(&r));
    }

    #[test]
    fn scalar_exponential() {
        let one = m("[[1]]");
        let terms = dyson_series(&one, 4, Orientation::Left);
        for (k, x) in terms.iter().enumerate() {
            assert_eq!(*x.get(0, 0), Poly::monomial(int(1) / factorial(k), k));
        }
    }

    #[test]
    fn derivative_reproduces_equation() {
        let u = m("[[t, 1],[2, -t]]");
        let left = dyson_series(&u, 5, Orientation::Left);
        let right = dyson_series(&u, 5, Orientation::Right);
        for k in 1..=5 {
            assert_eq!(left[k].derivative(), u.mul(&left[k - 1]));
            assert_eq!(right[k].derivative(), right[k - 1].mul(&u));
        }
    }

    #[test]
    fn symmetrization() {
        let u1 = m("[[t, 1],[0, 2]]");
        let u2 = m("[[1, -t],[t, 1]]");
        let lhs = texp_symmetrized(&[u1.clone(), u2.clone()]).unwrap();
        assert_eq!(lhs, texp_symmetrized(&[u2.clone(), u1.clone()]).unwrap());
        let bracket = u2.integrate().commutator(&u1).integrate();
        assert_eq!(lhs, u1.integrate().mul(&u2.integrate()).add(&bracket));
        let u = m("[[t, 1],[1, 0]]");
        let three = texp_symmetrized(&[u.clone(), u.clone(), u.clone()]).unwrap();
        let right = dyson_series(&u, 3, Orientation::Right);
        assert_eq!(three, right[3].scale(&int(6)));
    }

    #[test]
    fn grid() {
        let g = parse_grid("0:1:4").unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g[1], rat(1, 4));
        assert!(parse_grid("0:1").is_err());
    }
}
