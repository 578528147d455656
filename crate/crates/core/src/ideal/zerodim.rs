use super::budget::Budget;
use super::dimension::dimension;
use super::elimination::eliminate;
use super::univariate::squarefree_part;
use super::Ideal;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder};

/// Vector-space dimension of `ℂ[x]/I` for `dim V(I) ≤ 0`: the number of
/// standard monomials, i.e. the number of points counted with multiplicity.
pub fn zero_dim_count(ideal: &Ideal, budget: &Budget) -> Result<u64> {
    let d = dimension(ideal, budget)?;
    if d < 0 {
        return Ok(0);
    }
    if d > 0 {
        return Err(Error::Input(format!(
            "ideal is positive dimensional (dimension {d})"
        )));
    }
    let n = ideal.ctx().arity();
    let order = MonomialOrder::GrevLex;
    let basis = ideal.basis(budget)?;
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_term(&order).expect("nonzero").0.clone())
        .collect();
    // each variable has a pure power among the leading monomials
    let bounds: Vec<u16> = (0..n)
        .map(|v| {
            lms.iter()
                .filter(|m| m.support().all(|w| w == v))
                .map(|m| m.exponent(v))
                .min()
                .expect("zero-dimensional ideal has a pure power in every variable")
        })
        .collect();
    let mut count = 0u64;
    let mut exps = vec![0u16; n];
    count_standard(&lms, &bounds, 0, &mut exps, &mut count);
    Ok(count)
}

fn count_standard(
    lms: &[Monomial],
    bounds: &[u16],
    v: usize,
    exps: &mut Vec<u16>,
    count: &mut u64,
) {
    if v == bounds.len() {
        let m = Monomial::from_exponents(exps);
        if !lms.iter().any(|l| l.divides(&m)) {
            *count += 1;
        }
        return;
    }
    for e in 0..bounds[v] {
        exps[v] = e;
        // prune: if the partial monomial is already divisible, so is every extension
        let partial = Monomial::from_exponents(exps);
        let blocked = lms
            .iter()
            .any(|l| l.exponents()[v + 1..].iter().all(|&x| x == 0) && l.divides(&partial));
        if blocked {
            break;
        }
        count_standard(lms, bounds, v + 1, exps, count);
    }
    exps[v] = 0;
}

/// Radical of a zero-dimensional ideal: adds the squarefree part of each
/// variable's eliminant (characteristic zero).
pub fn zero_dim_radical(ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
    let d = dimension(ideal, budget)?;
    if d < 0 {
        return Ok(Ideal::unit(ideal.ctx()));
    }
    if d > 0 {
        return Err(Error::Input(format!(
            "ideal is positive dimensional (dimension {d})"
        )));
    }
    let n = ideal.ctx().arity();
    let mut extra = Vec::new();
    for v in 0..n {
        let others: Vec<usize> = (0..n).filter(|&w| w != v).collect();
        let e = eliminate(ideal, &others, budget)?;
        let gen = e.nonzero_generators().next().cloned().ok_or_else(|| {
            Error::Invariant("zero-dimensional ideal with empty eliminant".into())
        })?;
        let sq = squarefree_part(&gen, 0)?;
        // back into the full context: eliminant lives in variable v alone
        extra.push(sq.embed(ideal.ctx(), &[v]));
    }
    ideal.with_generators(extra)?.canonical(budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableContext;

    fn count(vars: &[&str], gens: &[&str]) -> u64 {
        let c = VariableContext::new(vars).unwrap();
        zero_dim_count(&Ideal::parse(&c, gens).unwrap(), &Budget::default()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(count(&["x"], &["x^2 - 1"]), 2);
        assert_eq!(count(&["x", "y"], &["x", "y"]), 1);
        assert_eq!(count(&["x"], &["x^3 - 5"]), 3);
        assert_eq!(count(&["x", "y"], &["1"]), 0);
        assert_eq!(count(&["x", "y"], &["x^2", "y^2"]), 4);
        assert_eq!(count(&["x", "y"], &["x^2 - y", "y^2 - 1"]), 4);
    }

    #[test]
    fn positive_dimension_is_rejected() {
        let c = VariableContext::new(&["x", "y"]).unwrap();
        assert!(zero_dim_count(&Ideal::parse(&c, &["x"]).unwrap(), &Budget::default()).is_err());
    }

    #[test]
    fn radical_counts_distinct_points() {
        let b = Budget::default();
        let c = VariableContext::new(&["x", "y"]).unwrap();
        let i = Ideal::parse(&c, &["x^2", "y^3 - y^2"]).unwrap();
        assert_eq!(zero_dim_count(&i, &b).unwrap(), 6);
        let r = zero_dim_radical(&i, &b).unwrap();
        assert_eq!(zero_dim_count(&r, &b).unwrap(), 2);
    }
}
