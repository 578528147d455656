//! Ideals, varieties and the Gröbner-basis operations on them.

mod budget;
mod dimension;
mod elimination;
mod groebner;
mod hilbert;
mod jacobian;
mod radical;
mod univariate;
mod zerodim;

use std::fmt;
use std::sync::{Arc, Mutex};

pub use budget::{Budget, DEFAULT_STEP_BUDGET};
pub use dimension::dimension;
pub use elimination::{
    eliminate, intersect, radical_membership, saturate, saturate_by_polynomial,
    saturate_by_variable,
};
pub use groebner::{groebner_basis, is_groebner_basis, normal_form};
pub use hilbert::{degree, hilbert_data, projective_closure, HilbertData};
pub use jacobian::{critical_minors, jacobian_matrix, minors, singular_locus};
pub use radical::{partial_radical, squarefree_part};
pub use zerodim::{zero_dim_count, zero_dim_radical};

use crate::error::{Error, Result};
use crate::poly::{parse_polynomial, same_ctx, Ctx, MonomialOrder, Polynomial};

type Cache = Arc<Mutex<Vec<(MonomialOrder, Arc<Vec<Polynomial>>)>>>;

/// A finite generating set in a fixed variable context.
///
/// Reduced Gröbner bases are cached per monomial order; the cache is shared
/// between clones and written once per order.
#[derive(Clone)]
pub struct Ideal {
    ctx: Ctx,
    gens: Vec<Polynomial>,
    cache: Cache,
}

impl Ideal {
    pub fn new(ctx: &Ctx, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            if !same_ctx(g.ctx(), ctx) {
                return Err(Error::ContextMismatch);
            }
        }
        let gens = if gens.is_empty() {
            vec![Polynomial::zero(ctx)]
        } else {
            gens
        };
        Ok(Ideal {
            ctx: ctx.clone(),
            gens,
            cache: Arc::default(),
        })
    }

    pub fn parse<S: AsRef<str>>(ctx: &Ctx, gens: &[S]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| parse_polynomial(s.as_ref(), ctx))
            .collect::<Result<_>>()?;
        Self::new(ctx, polys)
    }

    pub fn zero(ctx: &Ctx) -> Self {
        Self::new(ctx, vec![]).expect("same context")
    }

    pub fn unit(ctx: &Ctx) -> Self {
        Self::new(ctx, vec![Polynomial::one(ctx)]).expect("same context")
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Generators with zeros dropped.
    pub fn nonzero_generators(&self) -> impl Iterator<Item = &Polynomial> {
        self.gens.iter().filter(|g| !g.is_zero())
    }

    pub fn groebner(&self, order: &MonomialOrder, budget: &Budget) -> Result<Arc<Vec<Polynomial>>> {
        if let Some((_, b)) = self.cache.lock().unwrap().iter().find(|(o, _)| o == order) {
            return Ok(b.clone());
        }
        let basis = Arc::new(groebner_basis(&self.gens, &self.ctx, order, budget)?);
        let mut cache = self.cache.lock().unwrap();
        if let Some((_, b)) = cache.iter().find(|(o, _)| o == order) {
            return Ok(b.clone());
        }
        cache.push((order.clone(), basis.clone()));
        Ok(basis)
    }

    /// Default (grevlex) reduced Gröbner basis.
    pub fn basis(&self, budget: &Budget) -> Result<Arc<Vec<Polynomial>>> {
        self.groebner(&MonomialOrder::GrevLex, budget)
    }

    /// Normal form with respect to the grevlex basis.
    pub fn reduce(&self, f: &Polynomial, budget: &Budget) -> Result<Polynomial> {
        if !same_ctx(f.ctx(), &self.ctx) {
            return Err(Error::ContextMismatch);
        }
        let b = self.basis(budget)?;
        Ok(normal_form(f, &b, &MonomialOrder::GrevLex))
    }

    pub fn contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        Ok(self.reduce(f, budget)?.is_zero())
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        let b = self.basis(budget)?;
        Ok(b.len() == 1 && b[0].is_constant() && !b[0].is_zero())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        for g in other.nonzero_generators() {
            if !self.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality by mutual reduction.
    pub fn equals(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        Ok(self.contains_ideal(other, budget)? && other.contains_ideal(self, budget)?)
    }

    /// `V(self) = V(other)`, by mutual radical membership of generators.
    pub fn same_variety(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        for g in other.nonzero_generators() {
            if !radical_membership(g, self, budget)? {
                return Ok(false);
            }
        }
        for g in self.nonzero_generators() {
            if !radical_membership(g, other, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ctx(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch);
        }
        let gens = self
            .nonzero_generators()
            .chain(other.nonzero_generators())
            .cloned()
            .collect();
        Ideal::new(&self.ctx, gens)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens: Vec<Polynomial> = self.nonzero_generators().cloned().collect();
        gens.extend(extra);
        Ideal::new(&self.ctx, gens)
    }

    /// The ideal in `target`, with variable `i` sent to `map[i]`.
    pub fn embed(&self, target: &Ctx, map: &[usize]) -> Ideal {
        let gens = self.gens.iter().map(|g| g.embed(target, map)).collect();
        Ideal::new(target, gens).expect("embedded into target")
    }

    /// Homogeneity of the ideal: every element of the reduced grevlex basis is
    /// homogeneous.
    pub fn is_homogeneous(&self, budget: &Budget) -> Result<bool> {
        Ok(self.basis(budget)?.iter().all(|g| g.is_homogeneous()))
    }

    /// Ideal whose generators are the reduced grevlex basis.
    pub fn canonical(&self, budget: &Budget) -> Result<Ideal> {
        let b = self.basis(budget)?;
        let ideal = Ideal::new(&self.ctx, b.to_vec())?;
        ideal
            .cache
            .lock()
            .unwrap()
            .push((MonomialOrder::GrevLex, b));
        Ok(ideal)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "⟨{}⟩ in {:?}", gens.join(", "), self.ctx)
    }
}

/// An affine algebraic set `V(ideal) ⊂ ℂᵐ` with its computed dimension.
///
/// The ideal is assumed radical and equidimensional; this is not certified.
#[derive(Clone, Debug)]
pub struct Variety {
    pub ideal: Ideal,
    pub ambient_dim: usize,
    pub dim: i64,
    pub degree: Option<u64>,
}

impl Variety {
    pub fn new(ideal: Ideal, budget: &Budget) -> Result<Self> {
        let dim = dimension(&ideal, budget)?;
        Ok(Variety {
            ambient_dim: ideal.ctx().arity(),
            ideal,
            dim,
            degree: None,
        })
    }

    pub fn parse<S: AsRef<str>>(vars: &[S], gens: &[S], budget: &Budget) -> Result<Self> {
        let ctx = crate::poly::VariableContext::new(vars)?;
        Self::new(Ideal::parse(&ctx, gens)?, budget)
    }

    pub fn ctx(&self) -> &Ctx {
        self.ideal.ctx()
    }

    /// `k` as an unsigned dimension, failing on the empty set.
    pub fn k(&self) -> Result<usize> {
        usize::try_from(self.dim).map_err(|_| Error::Input("the variety is empty".into()))
    }

    /// Fills in and returns the degree of the projective closure.
    pub fn compute_degree(&mut self, budget: &Budget) -> Result<u64> {
        if let Some(d) = self.degree {
            return Ok(d);
        }
        let d = degree(self, budget)?;
        self.degree = Some(d);
        Ok(d)
    }
}
