use num_traits::{One, Zero};

use super::linalg::{self, Matrix};
use crate::error::{Error, Result};
use crate::ideal::{Budget, Ideal, Variety};
use crate::poly::{parse_constant, Ctx, GaussianRational, Polynomial, VariableContext};

/// A linear subspace of `ℂᵐ` given by linearly independent exact columns.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSubspace {
    ambient: usize,
    basis: Vec<Vec<GaussianRational>>,
}

impl LinearSubspace {
    pub fn new(ambient: usize, basis: Vec<Vec<GaussianRational>>) -> Result<Self> {
        if let Some(c) = basis.iter().find(|c| c.len() != ambient) {
            return Err(Error::Input(format!(
                "basis vector has {} entries but the ambient dimension is {ambient}",
                c.len()
            )));
        }
        if linalg::column_rank(ambient, &basis) != basis.len() {
            return Err(Error::Input("basis vectors are linearly dependent".into()));
        }
        Ok(LinearSubspace { ambient, basis })
    }

    pub fn zero(ambient: usize) -> Self {
        LinearSubspace {
            ambient,
            basis: Vec::new(),
        }
    }

    /// Span of the standard basis vectors `e_j`, `j ∈ indices`.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self> {
        let basis = indices
            .iter()
            .map(|&j| {
                if j >= ambient {
                    return Err(Error::Input(format!("coordinate {j} out of range")));
                }
                Ok(unit_vector(ambient, j))
            })
            .collect::<Result<_>>()?;
        Self::new(ambient, basis)
    }

    /// Parses columns of entry strings such as `"1/2"` or `"1/2+3/4*i"`.
    pub fn parse<S: AsRef<str>>(ambient: usize, columns: &[Vec<S>]) -> Result<Self> {
        let basis = columns
            .iter()
            .map(|col| {
                col.iter()
                    .map(|e| parse_constant(e.as_ref()))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        Self::new(ambient, basis)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<GaussianRational>] {
        &self.basis
    }

    /// Subspace spanned by all basis columns except `skip`.
    pub fn without_column(&self, skip: usize) -> LinearSubspace {
        let basis = self
            .basis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != skip)
            .map(|(_, c)| c.clone());
        LinearSubspace {
            ambient: self.ambient,
            basis: basis.collect(),
        }
    }

    /// A complement spanned by standard basis vectors.
    pub fn standard_complement(&self) -> LinearSubspace {
        let idx = linalg::standard_complement(self.ambient, &self.basis);
        LinearSubspace::coordinate(self.ambient, &idx).expect("indices in range")
    }

    /// `Some(j)` if column `c` is the standard basis vector `e_j`.
    pub fn standard_index(&self, c: usize) -> Option<usize> {
        let col = &self.basis[c];
        let nonzero: Vec<usize> = (0..col.len()).filter(|&j| !col[j].is_zero()).collect();
        match nonzero.as_slice() {
            [j] if col[*j].is_one() => Some(*j),
            _ => None,
        }
    }

    /// Column entries rendered in the input grammar.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.basis
            .iter()
            .map(|c| c.iter().map(|e| e.to_string()).collect())
            .collect()
    }

    /// The linear polynomials `S·λ` in the context `lambda`, one per
    /// ambient coordinate.
    pub(crate) fn parametrize(&self, lambda: &Ctx, offset: usize) -> Vec<Polynomial> {
        (0..self.ambient)
            .map(|r| {
                self.basis
                    .iter()
                    .enumerate()
                    .fold(Polynomial::zero(lambda), |acc, (c, col)| {
                        &acc + &Polynomial::var(lambda, offset + c).scale(&col[r])
                    })
            })
            .collect()
    }
}

pub(crate) fn unit_vector(n: usize, j: usize) -> Vec<GaussianRational> {
    let mut e = vec![GaussianRational::zero(); n];
    e[j] = GaussianRational::one();
    e
}

/// A decomposition `ℂᵐ = V ⊕ W`, with `V` of dimension `k`.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub v: LinearSubspace,
    pub w: LinearSubspace,
    /// Inverse of `[V | W]`: standard coordinates to split coordinates.
    pub change_of_coords: Matrix,
}

impl Splitting {
    pub fn new(v: LinearSubspace, w: LinearSubspace) -> Result<Self> {
        if v.ambient != w.ambient {
            return Err(Error::Input(
                "V and W live in different ambient spaces".into(),
            ));
        }
        let m = v.ambient;
        if v.dim() + w.dim() != m {
            return Err(Error::Input(format!(
                "dim V + dim W = {} + {} differs from the ambient dimension {m}",
                v.dim(),
                w.dim()
            )));
        }
        let cols: Vec<Vec<GaussianRational>> = v.basis.iter().chain(&w.basis).cloned().collect();
        let change_of_coords = linalg::inverse(&linalg::from_columns(m, &cols))
            .ok_or_else(|| Error::Input("V and W are not complementary".into()))?;
        Ok(Splitting {
            v,
            w,
            change_of_coords,
        })
    }

    pub fn ambient(&self) -> usize {
        self.v.ambient
    }

    /// Names for the split coordinates: an original variable name when the
    /// column is a standard basis vector, otherwise a fresh `u<n>` (V) or
    /// `w<n>` (W).
    pub fn coordinate_names(&self, original: &Ctx) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        let columns = (0..self.v.dim())
            .map(|c| (&self.v, c, "u"))
            .chain((0..self.w.dim()).map(|c| (&self.w, c, "w")));
        for (n, (space, c, prefix)) in columns.enumerate() {
            let standard = space
                .standard_index(c)
                .map(|j| original.name(j).to_string());
            let name = match standard {
                Some(s) if !names.contains(&s) => s,
                _ => {
                    let mut s = format!("{prefix}{}", n + 1);
                    while original.index_of(&s).is_some() || names.contains(&s) {
                        s.push('_');
                    }
                    s
                }
            };
            names.push(name);
        }
        names
    }

    /// `X` expressed in split coordinates `(x, y) ∈ V × W`.
    pub fn transform(&self, x: &Variety, budget: &Budget) -> Result<Variety> {
        let ctx = VariableContext::new(&self.coordinate_names(x.ctx()))?;
        let mut cols = self.v.clone();
        cols.basis.extend(self.w.basis.iter().cloned());
        let images = cols.parametrize(&ctx, 0);
        let gens = x
            .ideal
            .nonzero_generators()
            .map(|g| g.compose(&images))
            .collect::<Result<_>>()?;
        Variety::new(Ideal::new(&ctx, gens)?, budget)
    }
}
