use super::budget::Budget;
use super::Ideal;
use crate::error::Result;

/// Krull dimension of `V(I) ⊂ ℂᵐ`; `-1` when `1 ∈ I`.
///
/// The largest set of variables containing the support of no leading
/// monomial of the grevlex basis.
pub fn dimension(ideal: &Ideal, budget: &Budget) -> Result<i64> {
    let basis = ideal.basis(budget)?;
    let n = ideal.ctx().arity();
    if basis.is_empty() {
        return Ok(n as i64);
    }
    if basis.iter().any(|g| g.is_constant()) {
        return Ok(-1);
    }
    let order = crate::poly::MonomialOrder::GrevLex;
    let supports: Vec<u64> = basis
        .iter()
        .map(|g| {
            let (m, _) = g.leading_term(&order).expect("nonzero");
            m.support().fold(0u64, |acc, v| acc | (1 << v))
        })
        .collect();
    Ok(max_independent_set(n, &supports) as i64)
}

/// Size of the largest `S ⊆ {0..n}` with no support mask contained in `S`.
pub(crate) fn max_independent_set(n: usize, supports: &[u64]) -> usize {
    assert!(
        n < 64,
        "dimension computation supports fewer than 64 variables"
    );
    // search hitting sets of increasing size; the complement is independent
    for size in 0..=n {
        if hitting_set_exists(n, supports, size, 0) {
            return n - size;
        }
    }
    0
}

fn hitting_set_exists(n: usize, supports: &[u64], remaining: usize, chosen: u64) -> bool {
    // first support not yet hit
    let Some(&unhit) = supports.iter().find(|&&s| s & chosen == 0) else {
        return true;
    };
    if remaining == 0 {
        return false;
    }
    // some variable of `unhit` must be chosen
    (0..n)
        .filter(|&v| unhit & (1 << v) != 0)
        .any(|v| hitting_set_exists(n, supports, remaining - 1, chosen | (1 << v)))
}
