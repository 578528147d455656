//! Squarefree parts of multivariate polynomials and a partial radical built
//! from them.

use super::budget::Budget;
use super::elimination::intersect;
use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial};

/// `f / d` when `d` divides `f` exactly.
fn div_exact(f: &Polynomial, d: &Polynomial) -> Option<Polynomial> {
    let order = MonomialOrder::GrevLex;
    let (dm, dc) = d.leading_term(&order)?;
    let (dm, dc_inv) = (dm.clone(), dc.inv()?);
    let mut rest = f.clone();
    let mut quotient = Polynomial::zero(f.ctx());
    while let Some((m, c)) = rest.leading_term(&order) {
        let q = m.div(&dm)?;
        let qc = c * &dc_inv;
        let term = Polynomial::monomial(f.ctx(), q, qc);
        rest = &rest - &(&term * d);
        quotient = &quotient + &term;
    }
    Some(quotient)
}

/// Greatest common divisor, from `⟨f⟩ ∩ ⟨g⟩ = ⟨lcm(f, g)⟩`.
fn gcd(f: &Polynomial, g: &Polynomial, budget: &Budget) -> Result<Polynomial> {
    if g.is_zero() {
        return Ok(f.clone());
    }
    if f.is_zero() {
        return Ok(g.clone());
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Polynomial::one(f.ctx()));
    }
    let ctx = f.ctx();
    let meet = intersect(
        &Ideal::new(ctx, vec![f.clone()])?,
        &Ideal::new(ctx, vec![g.clone()])?,
        budget,
    )?;
    let basis = meet.basis(budget)?;
    let [lcm] = basis.as_slice() else {
        return Err(Error::Invariant(
            "intersection of principal ideals is not principal".into(),
        ));
    };
    div_exact(&(f * g), lcm).ok_or_else(|| Error::Invariant("lcm does not divide f·g".into()))
}

/// `f / gcd(f, ∂f/∂x₁, …, ∂f/∂xₙ)`: `f` with every repeated factor reduced
/// to multiplicity one (characteristic zero).
pub fn squarefree_part(f: &Polynomial, budget: &Budget) -> Result<Polynomial> {
    if f.is_constant() {
        return Ok(f.clone());
    }
    let mut g = f.clone();
    for v in 0..f.ctx().arity() {
        if g.is_constant() {
            break;
        }
        g = gcd(&g, &f.partial_derivative(v)?, budget)?;
    }
    let s = div_exact(f, &g).ok_or_else(|| Error::Invariant("gcd does not divide f".into()))?;
    Ok(s.monic(&MonomialOrder::GrevLex))
}

/// An ideal between `I` and `√I`, obtained by adding squarefree parts of
/// reduced basis elements until none is new. It has the same zero set as
/// `I` and coincides with `√I` whenever repeated factors of basis elements
/// are the only obstruction (e.g. monomial ideals, principal ideals).
pub fn partial_radical(ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
    let mut current = ideal.canonical(budget)?;
    loop {
        let mut extra = Vec::new();
        for g in current.basis(budget)?.iter() {
            let s = squarefree_part(g, budget)?;
            if !current.contains(&s, budget)? {
                extra.push(s);
            }
        }
        if extra.is_empty() {
            return Ok(current);
        }
        current = current.with_generators(extra)?.canonical(budget)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, VariableContext};

    #[test]
    fn squarefree_parts() {
        let c = VariableContext::new(&["x", "y", "z"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &c).unwrap();
        let b = Budget::default();
        assert_eq!(squarefree_part(&p("x^3"), &b).unwrap(), p("x"));
        assert_eq!(
            squarefree_part(&p("(x - y)^2*(z + 1)"), &b).unwrap(),
            p("(x - y)*(z + 1)")
        );
        assert_eq!(squarefree_part(&p("x*y"), &b).unwrap(), p("x*y"));
        assert_eq!(
            squarefree_part(&p("(x^2 + y^2)^2*y^3"), &b).unwrap(),
            p("(x^2 + y^2)*y")
        );
    }

    #[test]
    fn partial_radicals() {
        let c = VariableContext::new(&["x", "y", "z"]).unwrap();
        let b = Budget::default();
        let i = Ideal::parse(&c, &["y^2 - x*z", "x*y", "x^2"]).unwrap();
        let r = partial_radical(&i, &b).unwrap();
        assert!(r
            .equals(&Ideal::parse(&c, &["x", "y"]).unwrap(), &b)
            .unwrap());
        let j = Ideal::parse(&c, &["x^3"]).unwrap();
        assert!(partial_radical(&j, &b)
            .unwrap()
            .equals(&Ideal::parse(&c, &["x"]).unwrap(), &b)
            .unwrap());
        let zero = Ideal::zero(&c);
        assert!(partial_radical(&zero, &b).unwrap().is_zero_ideal());
    }
}
