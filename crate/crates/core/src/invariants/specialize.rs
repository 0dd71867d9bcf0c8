//! Specializations of the U-polynomial and the extended U-polynomial.

use num_bigint::BigInt;
use num_integer::binomial;

use crate::equivalence::power_sum;
use crate::error::{Error, Result};
use crate::polyring::{var_minus, var_plus, Family, Monomial, Poly, Var};

/// `z[i,j] -> x[i] (y - 1)^j`.
pub fn ubar_to_u(ubar: &Poly) -> Poly {
    let y1 = var_minus(Var::y(), 1);
    ubar.substitute(|v| {
        (v.family() == Family::Z)
            .then(|| y1.pow(v.second()).mul_monomial(&Monomial::var(Var::x(v.first()))))
    })
}

fn check_u_shape(u: &Poly) -> Result<()> {
    match u
        .variables()
        .into_iter()
        .find(|v| !matches!(v.family(), Family::X | Family::Y))
    {
        Some(v) => Err(Error::Malformed(format!(
            "expected a polynomial in x[i] and y, found {v}"
        ))),
        None => Ok(()),
    }
}

/// Tutte polynomial `(X - 1)^(-k) U(x[i] = X - 1, y = Y)`, with `k` the
/// number of components. The division is exact for genuine U-polynomials.
pub fn u_to_tutte(u: &Poly, k: usize) -> Result<Poly> {
    check_u_shape(u)?;
    let y = Poly::var(Var::tutte_y());
    // X stands for X - 1 until the division is done
    let shifted = Poly::var(Var::tutte_x());
    let substituted = u.substitute(|v| match v.family() {
        Family::X => Some(shifted.clone()),
        Family::Y => Some(y.clone()),
        _ => None,
    });
    let divided = substituted
        .divide_by_power(Var::tutte_x(), k as u32)
        .ok_or_else(|| Error::Malformed(format!("not divisible by (X - 1)^{k}")))?;
    let back = var_minus(Var::tutte_x(), 1);
    Ok(divided.substitute(|v| (v == Var::tutte_x()).then(|| back.clone())))
}

/// Chromatic polynomial `(-1)^(n - k) lambda^k T(1 - lambda, 0)`.
pub fn tutte_to_chromatic(t: &Poly, n: usize, k: usize) -> Poly {
    let one_minus = &Poly::one() - &Poly::var(Var::lambda());
    let p = t
        .substitute(|v| match v.family() {
            Family::TutteX => Some(one_minus.clone()),
            Family::TutteY => Some(Poly::zero()),
            _ => None,
        })
        .mul_monomial(&Monomial::from_factors([(Var::lambda(), k as u32)]));
    if (n - k) % 2 == 1 {
        -p
    } else {
        p
    }
}

/// Chromatic symmetric function `(-1)^n U(x[j] = -p_j, y = 0)` in
/// `x[1..=n_vars]`.
pub fn u_to_chromatic_symmetric(u: &Poly, n: usize, n_vars: usize) -> Poly {
    let out = u.substitute(|v| match v.family() {
        Family::X => Some(-power_sum(v.first(), n_vars)),
        Family::Y => Some(Poly::zero()),
        _ => None,
    });
    if n % 2 == 1 {
        -out
    } else {
        out
    }
}

/// Tutte symmetric function in `x[1..=n_vars]` and the scalar `t`: each
/// `x_tau y^i` becomes `p_tau t^(n - k(tau)) (t + 1)^i`.
pub fn u_to_tutte_symmetric(u: &Poly, n: usize, n_vars: usize) -> Result<Poly> {
    check_u_shape(u)?;
    let t1 = var_plus(Var::t_scalar(), 1);
    let mut out = Poly::zero();
    for (m, c) in u.terms() {
        let mut acc = Poly::constant(c.clone());
        let mut k = 0u32;
        for &(v, e) in m.factors() {
            match v.family() {
                Family::X => {
                    k += e;
                    acc = &acc * &power_sum(v.first(), n_vars).pow(e);
                }
                _ => acc = &acc * &t1.pow(e),
            }
        }
        let shift = (n as u32).checked_sub(k).ok_or_else(|| {
            Error::Malformed(format!("monomial {m} has more than {n} blocks"))
        })?;
        out += acc.mul_monomial(&Monomial::from_factors([(Var::t_scalar(), shift)]));
    }
    Ok(out)
}

/// Stability polynomial `U(x[1] = 1, x[j] = -(-p)^j, y = 0)`.
pub fn u_to_stability(u: &Poly) -> Poly {
    u.substitute(|v| match v.family() {
        Family::X if v.first() == 1 => Some(Poly::one()),
        Family::X => {
            let j = v.first();
            let sign = if j % 2 == 0 { -1 } else { 1 };
            Some(Poly::term(
                Monomial::from_factors([(Var::p(), j)]),
                sign,
            ))
        }
        Family::Y => Some(Poly::zero()),
        _ => None,
    })
}

/// 2-polymatroid rank generating function
/// `U(x[1] = u, x[j] = v^(j - 2), y = v^2 + 1)`.
pub fn u_to_two_polymatroid(u: &Poly) -> Result<Poly> {
    check_u_shape(u)?;
    let vv = Poly::term(Monomial::from_factors([(Var::v(), 2)]), 1);
    let y_image = &vv + &Poly::one();
    Ok(u.substitute(|v| match v.family() {
        Family::X => Some(match v.first() {
            1 => Poly::var(Var::u()),
            j => Poly::term(Monomial::from_factors([(Var::v(), j - 2)]), 1),
        }),
        Family::Y => Some(y_image.clone()),
        _ => None,
    }))
}

/// V-function `Ubar(z[i,j] = sum_k (-1)^(j-k) C(j,k) yk[k])`.
pub fn ubar_to_v_function(ubar: &Poly) -> Poly {
    ubar.substitute(|v| {
        (v.family() == Family::Z).then(|| {
            let j = v.second();
            Poly::from_terms((0..=j).map(|k| {
                let c = binomial(BigInt::from(j), BigInt::from(k));
                let c = if (j - k) % 2 == 1 { -c } else { c };
                (Monomial::var(Var::yk(k)), c)
            }))
        })
    })
}
