use super::budget::Budget;
use super::elimination::saturate_by_variable;
use super::{Ideal, Variety};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial};

/// Hilbert series `N(t) / (1 − t)^n` of `S / LT(J)` for a homogeneous `J` in
/// `n` variables, with the derived projective dimension and degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of `N(t)`, lowest degree first.
    pub numerator: Vec<i64>,
    /// Dimension of the projective variety; `-1` when empty.
    pub projective_dim: i64,
    pub degree: u64,
}

type Mono = Vec<u16>;

fn divides(a: &Mono, b: &Mono) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn minimalize(mut gens: Vec<Mono>) -> Vec<Mono> {
    gens.sort_by_key(|m| m.iter().map(|&e| e as u32).sum::<u32>());
    gens.dedup();
    let mut out: Vec<Mono> = Vec::new();
    for g in gens {
        if !out.iter().any(|o| divides(o, &g)) {
            out.push(g);
        }
    }
    out
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

/// Numerator of the Hilbert series of `S / ⟨gens⟩` over `(1 − t)^n`.
fn numerator(gens: Vec<Mono>, n: usize) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return vec![0];
    }
    // pairwise coprime generators: product of (1 - t^deg)
    let coprime = (0..gens.len()).all(|i| {
        (i + 1..gens.len()).all(|j| {
            gens[i]
                .iter()
                .zip(&gens[j])
                .all(|(a, b)| *a == 0 || *b == 0)
        })
    });
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.iter().map(|&e| e as usize).sum::<usize>();
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (i, &c) in acc.iter().enumerate() {
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    }
    // pivot on the variable occurring in the most generators
    let pivot = (0..n)
        .max_by_key(|&v| {
            (
                gens.iter().filter(|g| g[v] > 0).count(),
                std::cmp::Reverse(v),
            )
        })
        .expect("at least one variable");
    // N(I) = N(I + ⟨x⟩) + t · N(I : x)
    let mut plus: Vec<Mono> = gens.iter().filter(|g| g[pivot] == 0).cloned().collect();
    let mut xv = vec![0u16; n];
    xv[pivot] = 1;
    plus.push(xv);
    let colon: Vec<Mono> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[pivot] = h[pivot].saturating_sub(1);
            h
        })
        .collect();
    let mut out = numerator(plus, n);
    poly_add(&mut out, &numerator(colon, n), 1);
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// Hilbert data of a homogeneous ideal, from its grevlex leading terms.
pub fn hilbert_data(ideal: &Ideal, budget: &Budget) -> Result<HilbertData> {
    if !ideal.nonzero_generators().all(|g| g.is_homogeneous()) {
        return Err(Error::Input(
            "Hilbert series requires a homogeneous ideal".into(),
        ));
    }
    let n = ideal.ctx().arity();
    let order = MonomialOrder::GrevLex;
    let basis = ideal.basis(budget)?;
    let lts: Vec<Mono> = basis
        .iter()
        .map(|g| {
            g.leading_term(&order)
                .expect("nonzero")
                .0
                .exponents()
                .to_vec()
        })
        .collect();
    let mut num = numerator(lts, n);
    if num.iter().all(|&c| c == 0) {
        return Ok(HilbertData {
            numerator: num,
            projective_dim: -1,
            degree: 0,
        });
    }
    // divide by (1 - t) while N(1) = 0
    let mut codim = 0usize;
    while num.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - t): q_i = sum_{j <= i} a_j
        let mut q = Vec::with_capacity(num.len() - 1);
        let mut acc = 0i64;
        for &c in &num[..num.len() - 1] {
            acc += c;
            q.push(acc);
        }
        num = q;
        codim += 1;
    }
    let krull = n as i64 - codim as i64;
    let value: i64 = num.iter().sum();
    if krull == 0 {
        // only the irrelevant ideal: empty projective set
        return Ok(HilbertData {
            numerator: num,
            projective_dim: -1,
            degree: 0,
        });
    }
    Ok(HilbertData {
        numerator: num,
        projective_dim: krull - 1,
        degree: value.max(0) as u64,
    })
}

/// Homogenization of all generators with a fresh last variable, saturated by
/// that variable. The returned ideal lives in the extended context.
pub fn projective_closure(ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
    let ctx = ideal.ctx();
    let n = ctx.arity();
    let ext = ctx.extend(&["h0"]);
    let map: Vec<usize> = (0..n).collect();
    let all: Vec<usize> = (0..=n).collect();
    let gens: Vec<Polynomial> = ideal
        .nonzero_generators()
        .map(|g| g.embed(&ext, &map).homogenize_block(&all, n))
        .collect::<Result<_>>()?;
    let hom = Ideal::new(&ext, gens)?;
    saturate_by_variable(&hom, n, budget)
}

/// Degree of the projective closure of `X`.
pub fn degree(x: &Variety, budget: &Budget) -> Result<u64> {
    if x.dim < 0 {
        return Err(Error::Input("degree of the empty set is undefined".into()));
    }
    let closure = projective_closure(&x.ideal, budget)?;
    let h = hilbert_data(&closure, budget)?;
    if h.projective_dim != x.dim {
        return Err(Error::Invariant(format!(
            "projective closure has dimension {} but the affine set has dimension {}",
            h.projective_dim, x.dim
        )));
    }
    Ok(h.degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VariableContext;

    fn deg(vars: &[&str], gens: &[&str]) -> u64 {
        let b = Budget::default();
        let x = Variety::parse(vars, gens, &b).unwrap();
        degree(&x, &b).unwrap()
    }

    #[test]
    fn plane_curve_degrees() {
        assert_eq!(deg(&["x", "y"], &["y - x^2"]), 2);
        assert_eq!(deg(&["x", "y"], &["y^2 - x^3"]), 3);
        assert_eq!(deg(&["x", "y"], &["x*y - 1"]), 2);
        assert_eq!(deg(&["x", "y"], &["y"]), 1);
    }

    #[test]
    fn twisted_cubic_degree() {
        assert_eq!(deg(&["x", "y", "z"], &["y - x^2", "z - x^3"]), 3);
    }

    #[test]
    fn points_and_spaces() {
        assert_eq!(deg(&["x", "y"], &["x^2 - 1", "y"]), 2);
        assert_eq!(deg(&["x", "y", "z"], &["0"]), 1);
    }

    #[test]
    fn numerator_of_complete_intersection() {
        // S/(x^2, y^3) in 2 variables: (1 - t^2)(1 - t^3)
        assert_eq!(
            numerator(vec![vec![2, 0], vec![0, 3]], 2),
            vec![1, 0, -1, -1, 0, 1]
        );
        // S/(xy, xz): 1 - 2t^2 + t^3
        let n = numerator(vec![vec![1, 1, 0], vec![1, 0, 1]], 3);
        assert_eq!(n, vec![1, 0, -2, 1]);
    }

    #[test]
    fn rejects_inhomogeneous() {
        let c = VariableContext::new(&["x", "y"]).unwrap();
        let i = Ideal::parse(&c, &["y - x^2"]).unwrap();
        assert!(hilbert_data(&i, &Budget::default()).is_err());
    }
}
