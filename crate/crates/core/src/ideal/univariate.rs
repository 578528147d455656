//! Dense univariate helpers over ℚ(i), used for radicals of zero-dimensional
//! ideals.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{GaussianRational, Monomial, Polynomial};

type Dense = Vec<GaussianRational>;

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn rem(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let lead_inv = b.last().expect("nonzero divisor").inv().expect("nonzero");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = &r[r.len() - 1] * &lead_inv;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&q * c);
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn div_exact(a: &Dense, b: &Dense) -> Dense {
    let mut r = a.clone();
    let lead_inv = b.last().expect("nonzero divisor").inv().expect("nonzero");
    let mut q = vec![GaussianRational::zero(); a.len() + 1 - b.len()];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = &r[r.len() - 1] * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&c * bc);
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    trim(q)
}

fn gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn derivative(a: &Dense) -> Dense {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &GaussianRational::from_integer(i as i64))
            .collect(),
    )
}

/// Squarefree part of a polynomial in the single variable `var`.
pub(crate) fn squarefree_part(p: &Polynomial, var: usize) -> Result<Polynomial> {
    let n = p.ctx().arity();
    let deg = p.degree_in(var) as usize;
    let mut dense = vec![GaussianRational::zero(); deg + 1];
    for (m, c) in p.terms() {
        if m.support().any(|v| v != var) {
            return Err(Error::Input("expected a univariate polynomial".into()));
        }
        dense[m.exponent(var) as usize] = c.clone();
    }
    let dense = trim(dense);
    if dense.len() <= 1 {
        return Ok(p.clone());
    }
    let g = gcd(&dense, &derivative(&dense));
    let sqf = if g.len() <= 1 {
        dense
    } else {
        div_exact(&dense, &g)
    };
    let lead = sqf.last().unwrap().inv().unwrap();
    let terms = sqf
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let mut e = vec![0u16; n];
            e[var] = i as u16;
            (Monomial::from_exponents(&e), c * &lead)
        });
    Ok(Polynomial::from_terms(p.ctx(), terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, VariableContext};

    #[test]
    fn squarefree_parts() {
        let c = VariableContext::new(&["x", "y"]).unwrap();
        let p = parse_polynomial("(x - 1)^3*(x + 2)^2*x", &c).unwrap();
        let s = squarefree_part(&p, 0).unwrap();
        assert_eq!(s, parse_polynomial("(x - 1)*(x + 2)*x", &c).unwrap());
        let q = parse_polynomial("y^2 + 1", &c).unwrap();
        assert_eq!(squarefree_part(&q, 1).unwrap(), q);
        assert!(squarefree_part(&parse_polynomial("x*y", &c).unwrap(), 0).is_err());
    }
}
