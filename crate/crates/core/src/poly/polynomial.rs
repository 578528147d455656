use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::coeff::GaussianRational;
use super::context::Ctx;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial over ℚ(i).
///
/// Terms are kept sorted ascending by the exponent-vector ordering, with no
/// zero coefficients, so structural equality is polynomial equality.
#[derive(Clone)]
pub struct Polynomial {
    ctx: Ctx,
    terms: Vec<(Monomial, GaussianRational)>,
}

pub(crate) fn same_ctx(a: &Ctx, b: &Ctx) -> bool {
    Arc::ptr_eq(a, b) || a.names() == b.names()
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ctx(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ctx: &Ctx) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ctx: &Ctx, c: GaussianRational) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(ctx.arity()), c)]
        };
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, GaussianRational::one())
    }

    pub fn var(ctx: &Ctx, index: usize) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: vec![(Monomial::var(ctx.arity(), index), GaussianRational::one())],
        }
    }

    pub fn monomial(ctx: &Ctx, m: Monomial, c: GaussianRational) -> Self {
        debug_assert_eq!(m.arity(), ctx.arity());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Collects terms, combining duplicates and dropping zeros.
    pub fn from_terms<I>(ctx: &Ctx, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut map: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.arity(), ctx.arity());
            match map.entry(m) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += &c;
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
            }
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Terms already sorted ascending, distinct, nonzero.
    pub(crate) fn from_sorted_terms(ctx: &Ctx, terms: Vec<(Monomial, GaussianRational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, GaussianRational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, GaussianRational)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.as_slice() {
            [] => Some(GaussianRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| GaussianRational::zero())
    }

    /// Total degree; `-1` for zero.
    pub fn total_degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms
            .iter()
            .map(|(m, _)| m.exponent(var))
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(var) > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous with respect to the grading that counts only `vars`.
    pub fn is_homogeneous_in(&self, vars: &[usize]) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree_in(vars));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Largest term under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &GaussianRational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Scales so the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if same_ctx(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        let mut map: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                *map.entry(ma.mul(mb)).or_insert_with(GaussianRational::zero) += &prod;
            }
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        // multiplication by a monomial is order preserving for the exponent ordering
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ctx);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Result<Polynomial> {
        if var >= self.ctx.arity() {
            return Err(Error::Input(format!(
                "variable index {var} out of range for {} variables",
                self.ctx.arity()
            )));
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(var) > 0)
            .map(|(m, c)| {
                let e = m.exponent(var);
                let mut m2 = m.clone();
                m2.exps_mut()[var] = e - 1;
                (m2, c * &GaussianRational::from_integer(e as i64))
            });
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    /// Homogenizes with respect to the grading on `block` (variable indices),
    /// using `hvar` (which must belong to `block` and not occur in `self`).
    pub fn homogenize_block(&self, block: &[usize], hvar: usize) -> Result<Polynomial> {
        if !block.contains(&hvar) {
            return Err(Error::Input(
                "homogenizing variable is not in the block".into(),
            ));
        }
        if self.uses_var(hvar) {
            return Err(Error::Input(format!(
                "homogenizing variable `{}` already occurs",
                self.ctx.name(hvar)
            )));
        }
        let top = self
            .terms
            .iter()
            .map(|(m, _)| m.degree_in(block))
            .max()
            .unwrap_or(0);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut m2 = m.clone();
            m2.exps_mut()[hvar] = (top - m.degree_in(block)) as u16;
            (m2, c.clone())
        });
        Ok(Polynomial::from_terms(&self.ctx, terms))
    }

    /// Substitutes `var := value` where `value` is in the same context.
    pub fn substitute(&self, var: usize, value: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(value)?;
        let images: Vec<Polynomial> = (0..self.ctx.arity())
            .map(|i| {
                if i == var {
                    value.clone()
                } else {
                    Polynomial::var(&self.ctx, i)
                }
            })
            .collect();
        self.compose(&images)
    }

    /// Substitutes a constant for a variable.
    pub fn substitute_constant(&self, var: usize, value: &GaussianRational) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exponent(var);
            let mut m2 = m.clone();
            m2.exps_mut()[var] = 0;
            let c2 = if e == 0 {
                c.clone()
            } else {
                c * &value.pow(e as u32)
            };
            (m2, c2)
        });
        Polynomial::from_terms(&self.ctx, terms)
    }

    /// Composition: variable `i` is replaced by `images[i]`; the result lives
    /// in the images' context.
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ctx.arity() {
            return Err(Error::Input(format!(
                "composition needs {} images, got {}",
                self.ctx.arity(),
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ctx.clone(),
            None => {
                return Err(Error::Input(
                    "composition of a polynomial in zero variables".into(),
                ))
            }
        };
        for p in images {
            if !same_ctx(&p.ctx, &target) {
                return Err(Error::ContextMismatch);
            }
        }
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        let mut acc = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[v];
                if cache.is_empty() {
                    cache.push(Polynomial::one(&target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&images[v]);
                    cache.push(next);
                }
                t = t.mul_unchecked(&cache[e as usize]);
            }
            acc = acc.merge(&t, false);
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `map[i]` of the target context.
    pub fn embed(&self, target: &Ctx, map: &[usize]) -> Polynomial {
        debug_assert_eq!(map.len(), self.ctx.arity());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.permute(map, target.arity()), c.clone()));
        Polynomial::from_terms(target, terms)
    }

    /// Inverse of [`Polynomial::embed`]: `keep[j]` is the source index of
    /// target variable `j`. Fails if a dropped variable occurs.
    pub fn restrict(&self, target: &Ctx, keep: &[usize]) -> Result<Polynomial> {
        let mut inv = vec![usize::MAX; self.ctx.arity()];
        for (j, &i) in keep.iter().enumerate() {
            inv[i] = j;
        }
        for (m, _) in &self.terms {
            for v in m.support() {
                if inv[v] == usize::MAX {
                    return Err(Error::Input(format!(
                        "variable `{}` occurs but is not kept",
                        self.ctx.name(v)
                    )));
                }
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let exps: Vec<u16> = keep.iter().map(|&i| m.exponent(i)).collect();
            (Monomial::from_exponents(&exps), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Result<Complex64> {
        if point.len() != self.ctx.arity() {
            return Err(Error::Input(format!(
                "point has {} coordinates, expected {}",
                point.len(),
                self.ctx.arity()
            )));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_complex64();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= point[v].powu(e as u32);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn eval_exact(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.ctx.arity() {
            return Err(Error::Input(format!(
                "point has {} coordinates, expected {}",
                point.len(),
                self.ctx.arity()
            )));
        }
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = &t * &point[v].pow(e as u32);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Largest coefficient modulus, as a float.
    pub fn max_coeff_modulus(&self) -> f64 {
        self.terms
            .iter()
            .map(|(_, c)| c.to_complex64().norm())
            .fold(0.0, f64::max)
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<&(Monomial, GaussianRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            /// Panics if the contexts differ; use the `try_` variants otherwise.
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                assert!(same_ctx(&self.ctx, &rhs.ctx), "polynomial context mismatch");
                $body(self, rhs)
            }
        }
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Polynomial, b: &Polynomial| a.merge(b, false));
binop!(Sub, sub, |a: &Polynomial, b: &Polynomial| a.merge(b, true));
binop!(Mul, mul, |a: &Polynomial, b: &Polynomial| a
    .mul_unchecked(b));

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Grammar-conformant text, terms in descending grevlex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let order = MonomialOrder::GrevLex;
        for (k, (m, c)) in self.sorted_terms(&order).into_iter().enumerate() {
            let (neg, abs) = if c.is_real() && c.re() < &num_rational::BigRational::zero() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if m.is_one() || !abs.is_one() {
                let s = abs.to_string();
                // a bare `-i` inside a product would need parentheses
                factors.push(if s.starts_with('-') {
                    format!("({s})")
                } else {
                    s
                });
            }
            for (v, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ctx.name(v).to_string()),
                    _ => factors.push(format!("{}^{}", self.ctx.name(v), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
