//! Buchberger's algorithm with the Gebauer–Möller criteria and the sugar
//! selection strategy.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::budget::Budget;
use crate::error::{Error, Result};
use crate::poly::{Ctx, GaussianRational, Monomial, MonomialOrder, Polynomial};

type Term = (Monomial, GaussianRational);

/// Polynomial with terms sorted descending under a fixed order.
#[derive(Clone, Debug)]
pub(crate) struct SortedPoly {
    pub terms: Vec<Term>,
}

impl SortedPoly {
    pub fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<Term> = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        SortedPoly { terms }
    }

    pub fn to_poly(&self, ctx: &Ctx) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Polynomial::from_sorted_terms(ctx, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &GaussianRational {
        &self.terms[0].1
    }

    pub fn make_monic(&mut self) {
        if self.terms.is_empty() || self.lc().is_one() {
            return;
        }
        let inv = self.lc().inv().expect("nonzero");
        for t in &mut self.terms {
            t.1 = &t.1 * &inv;
        }
    }

    /// Total degree of the highest-degree term.
    pub fn degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }
}

/// `a - c * m * b` for descending term lists.
fn sub_scaled(
    a: &[Term],
    c: &GaussianRational,
    m: &Monomial,
    b: &[Term],
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut next_b: Option<Monomial> = b.first().map(|t| t.0.mul(m));
    while i < a.len() {
        let Some(mb) = next_b.as_ref() else { break };
        match order.cmp(&a[i].0, mb) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((next_b.take().unwrap(), -&(c * &b[j].1)));
                j += 1;
                next_b = b.get(j).map(|t| t.0.mul(m));
            }
            Ordering::Equal => {
                let coef = &a[i].1 - &(c * &b[j].1);
                if !coef.is_zero() {
                    out.push((a[i].0.clone(), coef));
                }
                i += 1;
                j += 1;
                next_b = b.get(j).map(|t| t.0.mul(m));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while let Some(mb) = next_b.take() {
        out.push((mb, -&(c * &b[j].1)));
        j += 1;
        next_b = b.get(j).map(|t| t.0.mul(m));
    }
    out
}

pub(crate) struct Reducer<'a> {
    pub polys: Vec<&'a SortedPoly>,
    masks: Vec<u64>,
}

impl<'a> Reducer<'a> {
    pub fn new(polys: Vec<&'a SortedPoly>) -> Self {
        let masks = polys.iter().map(|p| p.lm().support_mask()).collect();
        Reducer { polys, masks }
    }

    fn find(&self, m: &Monomial) -> Option<usize> {
        let mm = m.support_mask();
        (0..self.polys.len()).find(|&k| self.masks[k] & !mm == 0 && self.polys[k].lm().divides(m))
    }

    /// Full reduction (every term); returns the normal form, not normalized.
    pub fn reduce(&self, f: Vec<Term>, order: &MonomialOrder) -> Vec<Term> {
        let mut result: Vec<Term> = Vec::new();
        let mut cur = f;
        let mut pos = 0;
        while pos < cur.len() {
            match self.find(&cur[pos].0) {
                None => {
                    result.push(cur[pos].clone());
                    pos += 1;
                }
                Some(k) => {
                    let g = self.polys[k];
                    let quot = cur[pos].0.div(g.lm()).expect("divisible");
                    let c = &cur[pos].1 / g.lc();
                    cur = sub_scaled(&cur[pos + 1..], &c, &quot, &g.terms[1..], order);
                    pos = 0;
                }
            }
        }
        result
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State<'o> {
    order: &'o MonomialOrder,
    polys: Vec<SortedPoly>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<'o> State<'o> {
    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let (a, b) = (self.polys[i].lm(), self.polys[j].lm());
        let lcm = a.lcm(b);
        let si = self.sugar[i] + lcm.degree() - a.degree();
        let sj = self.sugar[j] + lcm.degree() - b.degree();
        Pair {
            i: i.min(j),
            j: i.max(j),
            lcm,
            sugar: si.max(sj),
        }
    }

    /// Gebauer–Möller installation of the new element `h`.
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().clone();
        let mut cands: Vec<(Pair, bool)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| {
                let coprime = lm_h.is_coprime(self.polys[g].lm());
                (self.make_pair(g, h), coprime)
            })
            .collect();

        // chain criterion among the new pairs
        let mut keep = vec![false; cands.len()];
        for k in 0..cands.len() {
            let (ref p, coprime) = cands[k];
            if coprime {
                keep[k] = true;
                continue;
            }
            let dominated = (0..cands.len()).any(|l| {
                if l == k {
                    return false;
                }
                let q = &cands[l].0;
                if !q.lcm.divides(&p.lcm) {
                    return false;
                }
                if q.lcm != p.lcm {
                    return true;
                }
                // equal lcm: keep exactly one, preferring an already kept or later pair
                l > k || keep[l]
            });
            keep[k] = !dominated;
        }
        // product criterion: coprime leading monomials never need reducing
        let mut new_pairs: Vec<Pair> = Vec::new();
        for (k, (p, coprime)) in cands.drain(..).enumerate() {
            if keep[k] && !coprime {
                new_pairs.push(p);
            }
        }

        // old pairs made redundant by h
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !lm_h.divides(&p.lcm) {
                return true;
            }
            let l1 = polys[p.i].lm().lcm(&lm_h);
            let l2 = polys[p.j].lm().lcm(&lm_h);
            l1 == p.lcm || l2 == p.lcm
        });
        self.pairs.extend(new_pairs);

        for g in 0..h {
            if self.active[g] && lm_h.divides(self.polys[g].lm()) {
                self.active[g] = false;
            }
        }
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.order;
        let best = (0..self.pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&self.pairs[a], &self.pairs[b]);
                p.sugar
                    .cmp(&q.sugar)
                    .then_with(|| order.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> Vec<Term> {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = p.lcm.div(f.lm()).unwrap();
        let mg = p.lcm.div(g.lm()).unwrap();
        // both monic: S = mf*f - mg*g, leading terms cancel
        let a: Vec<Term> = f.terms[1..]
            .iter()
            .map(|(m, c)| (m.mul(&mf), c.clone()))
            .collect();
        sub_scaled(&a, &GaussianRational::one(), &mg, &g.terms[1..], self.order)
    }

    fn active_polys(&self) -> Vec<&SortedPoly> {
        (0..self.polys.len())
            .filter(|&k| self.active[k])
            .map(|k| &self.polys[k])
            .collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, sorted ascending
/// by leading monomial. The zero ideal yields an empty basis.
pub fn groebner_basis(
    gens: &[Polynomial],
    ctx: &Ctx,
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let sorted = groebner_sorted(gens, order, budget)?;
    Ok(sorted.iter().map(|p| p.to_poly(ctx)).collect())
}

pub(crate) fn groebner_sorted(
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Vec<SortedPoly>> {
    let mut inputs: Vec<SortedPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut s = SortedPoly::from_poly(p, order);
            s.make_monic();
            s
        })
        .collect();
    if inputs.iter().any(|p| p.lm().is_one()) {
        let arity = inputs[0].lm().arity();
        return Ok(vec![SortedPoly {
            terms: vec![(Monomial::one(arity), GaussianRational::one())],
        }]);
    }
    inputs.sort_by(|a, b| {
        order
            .cmp(a.lm(), b.lm())
            .then_with(|| a.terms.len().cmp(&b.terms.len()))
    });

    let mut st = State {
        order,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    for f in inputs {
        // reduce against what is already installed
        let reduced = {
            let active = st.active_polys();
            Reducer::new(active).reduce(f.terms, order)
        };
        let mut h = SortedPoly { terms: reduced };
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        if h.lm().is_one() {
            return Ok(vec![h]);
        }
        st.sugar.push(h.degree());
        st.polys.push(h);
        st.active.push(true);
        let idx = st.polys.len() - 1;
        st.update(idx);
    }

    while let Some(pair) = st.select() {
        budget.charge("Gröbner basis")?;
        budget.check_degree(pair.sugar, "Gröbner basis")?;
        let s = st.spoly(&pair);
        if s.is_empty() {
            continue;
        }
        let reduced = Reducer::new(st.active_polys()).reduce(s, order);
        if reduced.is_empty() {
            continue;
        }
        let mut h = SortedPoly { terms: reduced };
        h.make_monic();
        if h.lm().is_one() {
            return Ok(vec![h]);
        }
        st.sugar.push(pair.sugar.max(h.degree()));
        st.polys.push(h);
        st.active.push(true);
        let idx = st.polys.len() - 1;
        st.update(idx);
    }

    let basis = interreduce(st.active_polys().into_iter().cloned().collect(), order);
    if budget.checks_enabled() {
        verify_groebner(&basis, order)?;
    }
    Ok(basis)
}

/// Minimal, fully reduced, monic basis sorted ascending by leading monomial.
pub(crate) fn interreduce(mut basis: Vec<SortedPoly>, order: &MonomialOrder) -> Vec<SortedPoly> {
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for (k, p) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(l, q)| l != k && q.lm().divides(p.lm()) && (q.lm() != p.lm() || l < k));
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, q)| q)
            .collect();
        let head = minimal[k].terms[0].clone();
        let tail = Reducer::new(others).reduce(minimal[k].terms[1..].to_vec(), order);
        let mut terms = vec![head];
        terms.extend(tail);
        let mut p = SortedPoly { terms };
        p.make_monic();
        out.push(p);
    }
    out
}

/// Every S-polynomial reduces to zero and the basis is reduced.
pub(crate) fn verify_groebner(basis: &[SortedPoly], order: &MonomialOrder) -> Result<()> {
    let reducer = Reducer::new(basis.iter().collect());
    for i in 0..basis.len() {
        if !basis[i].lc().is_one() {
            return Err(Error::Invariant("basis element is not monic".into()));
        }
        for j in (i + 1)..basis.len() {
            let (f, g) = (&basis[i], &basis[j]);
            let lcm = f.lm().lcm(g.lm());
            let mf = lcm.div(f.lm()).unwrap();
            let mg = lcm.div(g.lm()).unwrap();
            let a: Vec<Term> = f.terms[1..]
                .iter()
                .map(|(m, c)| (m.mul(&mf), c.clone()))
                .collect();
            let s = sub_scaled(&a, &GaussianRational::one(), &mg, &g.terms[1..], order);
            if !reducer.reduce(s, order).is_empty() {
                return Err(Error::Invariant(format!(
                    "S-polynomial of basis elements {i} and {j} does not reduce to zero"
                )));
            }
        }
    }
    Ok(())
}

/// Normal form of `f` with respect to `basis` (any nonzero polynomials).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let sorted: Vec<SortedPoly> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| SortedPoly::from_poly(p, order))
        .collect();
    let reducer = Reducer::new(sorted.iter().collect());
    let r = reducer.reduce(SortedPoly::from_poly(f, order).terms, order);
    SortedPoly { terms: r }.to_poly(f.ctx())
}

/// Checks the Gröbner property of an arbitrary polynomial list.
pub fn is_groebner_basis(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    let sorted: Vec<SortedPoly> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let mut s = SortedPoly::from_poly(p, order);
            s.make_monic();
            s
        })
        .collect();
    let reducer = Reducer::new(sorted.iter().collect());
    for i in 0..sorted.len() {
        for j in (i + 1)..sorted.len() {
            let (f, g) = (&sorted[i], &sorted[j]);
            let lcm = f.lm().lcm(g.lm());
            let mf = lcm.div(f.lm()).unwrap();
            let mg = lcm.div(g.lm()).unwrap();
            let a: Vec<Term> = f.terms[1..]
                .iter()
                .map(|(m, c)| (m.mul(&mf), c.clone()))
                .collect();
            let s = sub_scaled(&a, &GaussianRational::one(), &mg, &g.terms[1..], order);
            if !reducer.reduce(s, order).is_empty() {
                return false;
            }
        }
    }
    true
}
