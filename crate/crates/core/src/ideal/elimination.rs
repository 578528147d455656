use num_traits::One;

use super::budget::Budget;
use super::groebner::groebner_basis;
use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{same_ctx, Monomial, MonomialOrder, Polynomial};

/// `I ∩ ℂ[kept variables]`, returned in the context of the kept variables
/// (declaration order preserved). Uses a two-block order with the dropped
/// variables first.
pub fn eliminate(ideal: &Ideal, drop: &[usize], budget: &Budget) -> Result<Ideal> {
    let ctx = ideal.ctx();
    let n = ctx.arity();
    if let Some(&bad) = drop.iter().find(|&&v| v >= n) {
        return Err(Error::Input(format!("variable index {bad} out of range")));
    }
    let keep: Vec<usize> = (0..n).filter(|v| !drop.contains(v)).collect();
    let dropped: Vec<usize> = (0..n).filter(|v| drop.contains(v)).collect();
    let sub = ctx.select(&keep);

    let mut layout = dropped.clone();
    layout.extend(&keep);
    let permuted = ctx.select(&layout);
    let mut to_new = vec![0; n];
    for (pos, &v) in layout.iter().enumerate() {
        to_new[v] = pos;
    }
    let gens: Vec<Polynomial> = ideal
        .nonzero_generators()
        .map(|g| g.embed(&permuted, &to_new))
        .collect();
    let d = dropped.len();
    let order = MonomialOrder::elimination(d);
    let basis = groebner_basis(&gens, &permuted, &order, budget)?;
    let kept_positions: Vec<usize> = (d..n).collect();
    let out: Vec<Polynomial> = basis
        .iter()
        .filter(|g| (0..d).all(|v| !g.uses_var(v)))
        .map(|g| g.restrict(&sub, &kept_positions))
        .collect::<Result<_>>()?;
    Ideal::new(&sub, out)
}

/// `I : x^∞` for a variable `x`.
///
/// For homogeneous generators this divides a grevlex basis (with `x` as the
/// smallest variable) by the largest power of `x`; otherwise it falls back to
/// the auxiliary-variable construction.
pub fn saturate_by_variable(ideal: &Ideal, var: usize, budget: &Budget) -> Result<Ideal> {
    let ctx = ideal.ctx();
    let n = ctx.arity();
    if var >= n {
        return Err(Error::Input(format!("variable index {var} out of range")));
    }
    if !ideal.nonzero_generators().all(|g| g.is_homogeneous()) {
        return saturate_rabinowitsch(ideal, &Polynomial::var(ctx, var), budget);
    }
    // move `var` to the last position
    let mut layout: Vec<usize> = (0..n).filter(|&v| v != var).collect();
    layout.push(var);
    let permuted = ctx.select(&layout);
    let mut to_new = vec![0; n];
    for (pos, &v) in layout.iter().enumerate() {
        to_new[v] = pos;
    }
    let gens: Vec<Polynomial> = ideal
        .nonzero_generators()
        .map(|g| g.embed(&permuted, &to_new))
        .collect();
    let basis = groebner_basis(&gens, &permuted, &MonomialOrder::GrevLex, budget)?;
    let last = n - 1;
    let out: Vec<Polynomial> = basis
        .iter()
        .map(|g| {
            let k = g
                .terms()
                .iter()
                .map(|(m, _)| m.exponent(last))
                .min()
                .unwrap_or(0);
            if k == 0 {
                return g.embed(ctx, &layout);
            }
            let terms = g.terms().iter().map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e[last] -= k;
                (Monomial::from_exponents(&e), c.clone())
            });
            Polynomial::from_terms(&permuted, terms).embed(ctx, &layout)
        })
        .collect();
    Ideal::new(ctx, out)
}

fn saturate_rabinowitsch(ideal: &Ideal, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
    let ctx = ideal.ctx();
    let n = ctx.arity();
    let ext = ctx.extend(&["t"]);
    let map: Vec<usize> = (0..n).collect();
    let t = Polynomial::var(&ext, n);
    let mut gens: Vec<Polynomial> = ideal
        .nonzero_generators()
        .map(|f| f.embed(&ext, &map))
        .collect();
    gens.push(&Polynomial::one(&ext) - &(&t * &g.embed(&ext, &map)));
    let aux = Ideal::new(&ext, gens)?;
    let elim = eliminate(&aux, &[n], budget)?;
    // back into the original context (same names, same order)
    Ok(elim.embed(ctx, &map))
}

/// `I : g^∞` for a single polynomial.
pub fn saturate_by_polynomial(ideal: &Ideal, g: &Polynomial, budget: &Budget) -> Result<Ideal> {
    if !same_ctx(ideal.ctx(), g.ctx()) {
        return Err(Error::ContextMismatch);
    }
    if g.is_zero() {
        return Ok(Ideal::unit(ideal.ctx()));
    }
    if g.is_constant() {
        return Ok(ideal.clone());
    }
    if let [(m, _)] = g.terms() {
        // a monomial: saturate variable by variable
        let mut acc = ideal.clone();
        for v in m.support() {
            acc = saturate_by_variable(&acc, v, budget)?;
        }
        return Ok(acc);
    }
    saturate_rabinowitsch(ideal, g, budget)
}

/// `I : J^∞`, computed generator by generator of `J` and intersected.
pub fn saturate(ideal: &Ideal, by: &Ideal, budget: &Budget) -> Result<Ideal> {
    if !same_ctx(ideal.ctx(), by.ctx()) {
        return Err(Error::ContextMismatch);
    }
    let gens: Vec<&Polynomial> = by.nonzero_generators().collect();
    if gens.is_empty() {
        // J = 0: every element of the ring times 0^n lies in I
        return Ok(Ideal::unit(ideal.ctx()));
    }
    if gens.iter().any(|g| g.is_constant()) {
        return Ok(ideal.clone());
    }
    let mut acc: Option<Ideal> = None;
    for g in gens {
        let s = saturate_by_polynomial(ideal, g, budget)?;
        acc = Some(match acc {
            None => s,
            Some(prev) => intersect(&prev, &s, budget)?,
        });
    }
    acc.unwrap().canonical(budget)
}

/// `I ∩ J` via `t·I + (1 − t)·J` with `t` eliminated.
pub fn intersect(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    if !same_ctx(a.ctx(), b.ctx()) {
        return Err(Error::ContextMismatch);
    }
    if a.is_unit(budget)? {
        return Ok(b.clone());
    }
    if b.is_unit(budget)? {
        return Ok(a.clone());
    }
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(a.ctx()));
    }
    let ctx = a.ctx();
    let n = ctx.arity();
    let ext = ctx.extend(&["t"]);
    let map: Vec<usize> = (0..n).collect();
    let t = Polynomial::var(&ext, n);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for f in a.nonzero_generators() {
        gens.push(&t * &f.embed(&ext, &map));
    }
    for f in b.nonzero_generators() {
        gens.push(&one_minus_t * &f.embed(&ext, &map));
    }
    let elim = eliminate(&Ideal::new(&ext, gens)?, &[n], budget)?;
    Ok(elim.embed(ctx, &map))
}

/// Whether `g` vanishes on `V(I)`: `1 ∈ I + ⟨1 − t·g⟩`.
pub fn radical_membership(g: &Polynomial, ideal: &Ideal, budget: &Budget) -> Result<bool> {
    if !same_ctx(ideal.ctx(), g.ctx()) {
        return Err(Error::ContextMismatch);
    }
    if g.is_zero() {
        return Ok(true);
    }
    let ctx = ideal.ctx();
    let n = ctx.arity();
    let ext = ctx.extend(&["t"]);
    let map: Vec<usize> = (0..n).collect();
    let t = Polynomial::var(&ext, n);
    let mut gens: Vec<Polynomial> = ideal
        .nonzero_generators()
        .map(|f| f.embed(&ext, &map))
        .collect();
    gens.push(&Polynomial::one(&ext) - &(&t * &g.embed(&ext, &map)));
    let basis = groebner_basis(&gens, &ext, &MonomialOrder::GrevLex, budget)?;
    Ok(basis.len() == 1 && basis[0].as_constant().is_some_and(|c| c.is_one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, VariableContext};

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn implicitize_twisted_cubic_projection() {
        let c = VariableContext::new(&["x", "y", "z"]).unwrap();
        let i = Ideal::parse(&c, &["y - x^2", "z - x^3"]).unwrap();
        let e = eliminate(&i, &[0], &b()).unwrap();
        assert_eq!(e.ctx().names(), &["y", "z"]);
        let expect = Ideal::parse(e.ctx(), &["z^2 - y^3"]).unwrap();
        assert!(e.equals(&expect, &b()).unwrap());
    }

    #[test]
    fn eliminate_to_zero() {
        let c = VariableContext::new(&["x", "y"]).unwrap();
        let e = eliminate(&Ideal::parse(&c, &["x"]).unwrap(), &[0], &b()).unwrap();
        assert!(e.is_zero_ideal());
        let e = eliminate(&Ideal::parse(&c, &["x - y"]).unwrap(), &[0], &b()).unwrap();
        assert!(e.is_zero_ideal());
    }

    #[test]
    fn saturation_examples() {
        let c = VariableContext::new(&["x", "y"]).unwrap();
        let i = Ideal::parse(&c, &["x*y"]).unwrap();
        let s = saturate(&i, &Ideal::parse(&c, &["y"]).unwrap(), &b()).unwrap();
        assert!(s.equals(&Ideal::parse(&c, &["x"]).unwrap(), &b()).unwrap());

        let i = Ideal::parse(&c, &["x^2", "x*y"]).unwrap();
        let s = saturate(&i, &Ideal::parse(&c, &["x", "y"]).unwrap(), &b()).unwrap();
        assert!(s.equals(&Ideal::parse(&c, &["x"]).unwrap(), &b()).unwrap());

        let s = saturate(&i, &Ideal::unit(&c), &b()).unwrap();
        assert!(s.equals(&i, &b()).unwrap());
    }

    #[test]
    fn nonhomogeneous_saturation_matches_rabinowitsch() {
        let c = VariableContext::new(&["x", "y", "w"]).unwrap();
        let i = Ideal::parse(&c, &["y*w - x^2", "x*w - x"]).unwrap();
        let a = saturate_by_variable(&i, 2, &b()).unwrap();
        let r = saturate_rabinowitsch(&i, &Polynomial::var(&c, 2), &b()).unwrap();
        assert!(a.equals(&r, &b()).unwrap());
        let hom = Ideal::parse(&c, &["y*w - x^2", "x*w^2 - y^3"]).unwrap();
        let a = saturate_by_variable(&hom, 2, &b()).unwrap();
        let r = saturate_rabinowitsch(&hom, &Polynomial::var(&c, 2), &b()).unwrap();
        assert!(a.equals(&r, &b()).unwrap());
    }

    #[test]
    fn radical_membership_examples() {
        let c = VariableContext::new(&["x", "y"]).unwrap();
        let x = parse_polynomial("x", &c).unwrap();
        let y = parse_polynomial("y", &c).unwrap();
        assert!(radical_membership(&x, &Ideal::parse(&c, &["x^2"]).unwrap(), &b()).unwrap());
        assert!(!radical_membership(&y, &Ideal::parse(&c, &["x"]).unwrap(), &b()).unwrap());
        let s = parse_polynomial("x + y", &c).unwrap();
        let i = Ideal::parse(&c, &["x^2", "y^2"]).unwrap();
        // (x+y)^2 ∉ I but (x+y)^3 ∈ I
        assert!(!i.contains(&s.pow(2), &b()).unwrap());
        assert!(i.contains(&s.pow(3), &b()).unwrap());
        assert!(radical_membership(&s, &i, &b()).unwrap());
    }

    #[test]
    fn intersection_of_axes() {
        let c = VariableContext::new(&["x", "y"]).unwrap();
        let i = intersect(
            &Ideal::parse(&c, &["x"]).unwrap(),
            &Ideal::parse(&c, &["y"]).unwrap(),
            &b(),
        )
        .unwrap();
        assert!(i
            .equals(&Ideal::parse(&c, &["x*y"]).unwrap(), &b())
            .unwrap());
    }
}
