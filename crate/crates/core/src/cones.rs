//! The tangent cones at infinity `C₃,∞`, `C₄,∞` and `C₅,∞` as ideals in the
//! direction variables `v₁…v_m`.
//!
//! `C₃,∞` is the affine cone over the points of the projective closure lying
//! on the hyperplane at infinity. `C₄,∞` and `C₅,∞` are images of incidence
//! varieties:
//!
//! * `C₄,∞`: pairs `(p, v)` with `v` tangent to `X` at a smooth point `p`,
//!   closed up in `ℙᵐ × ℂᵐ` and cut with `H∞ × ℂᵐ`;
//! * `C₅,∞`: triples `(x, y, v)` with `x ≠ y` in `X` and `v ∥ x − y`, closed
//!   up in `ℙᵐ × ℙᵐ × ℂᵐ` and cut with `H∞ × H∞ × ℂᵐ`.
//!
//! The open removals (singular points, the diagonal) and the irrelevant loci
//! of each projective factor are handled chart by chart: the removed set is a
//! union of hypersurface complements, and every later step (closure, slice,
//! projection) commutes with finite unions. The cone ideal is the
//! intersection of the chart ideals, all of which live in `v` alone.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{
    dimension, eliminate, intersect, jacobian_matrix, partial_radical, projective_closure,
    radical_membership, saturate_by_polynomial, saturate_by_variable, singular_locus, Budget,
    Ideal, Variety,
};
use crate::poly::{Ctx, GaussianRational, Polynomial, VariableContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConeKind {
    C3,
    C4,
    C5,
}

impl ConeKind {
    pub fn name(self) -> &'static str {
        match self {
            ConeKind::C3 => "c3",
            ConeKind::C4 => "c4",
            ConeKind::C5 => "c5",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c3" => Some(ConeKind::C3),
            "c4" => Some(ConeKind::C4),
            "c5" => Some(ConeKind::C5),
            _ => None,
        }
    }
}

impl fmt::Display for ConeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Equidimensionality of a computed cone, claimed only when certifiable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Purity {
    /// Principal, or generated by linear forms.
    Pure,
    Unknown,
    /// Dimension at most zero.
    Zero,
}

/// Intermediate ideals of an incidence construction, kept for diagnostics.
///
/// Stages with several ideals hold one ideal per chart.
#[derive(Clone, Debug, Default)]
pub struct IncidenceBuild {
    pub stages: Vec<(String, Vec<Ideal>)>,
}

impl IncidenceBuild {
    fn push(&mut self, name: &str, ideals: Vec<Ideal>) {
        self.stages.push((name.to_string(), ideals));
    }

    pub fn stage(&self, name: &str) -> Option<&[Ideal]> {
        self.stages
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_slice())
    }
}

#[derive(Clone, Debug)]
pub struct ConeResult {
    pub which: ConeKind,
    /// Homogeneous ideal in the direction variables, as a reduced basis,
    /// with repeated factors removed.
    pub ideal: Ideal,
    pub dim: i64,
    pub purity: Purity,
    pub warnings: Vec<String>,
    pub build: Option<IncidenceBuild>,
}

/// Direction-variable context `v_<name>` for the variables of `x`.
pub fn direction_context(x: &Variety) -> Ctx {
    let names: Vec<String> = x.ctx().names().iter().map(|n| format!("v_{n}")).collect();
    VariableContext::new(&names).expect("prefixed identifiers are valid")
}

pub(crate) fn purity_of(ideal: &Ideal, dim: i64) -> Purity {
    if dim <= 0 {
        return Purity::Zero;
    }
    let gens: Vec<&Polynomial> = ideal.nonzero_generators().collect();
    if gens.len() <= 1 || gens.iter().all(|g| g.total_degree() == 1) {
        Purity::Pure
    } else {
        Purity::Unknown
    }
}

fn require_unbounded(x: &Variety) -> Result<usize> {
    let k = x.k()?;
    if k == 0 {
        return Err(Error::Input(
            "X is bounded (dimension 0); it has no cone at infinity".into(),
        ));
    }
    Ok(k)
}

fn finish(
    which: ConeKind,
    x: &Variety,
    ideal: Ideal,
    build: Option<IncidenceBuild>,
    budget: &Budget,
) -> Result<ConeResult> {
    let k = x.k()? as i64;
    let m = x.ambient_dim as i64;
    // same zero set, without repeated factors
    let ideal = partial_radical(&ideal, budget)?;
    if !ideal.nonzero_generators().all(|g| g.is_homogeneous()) {
        return Err(Error::Invariant(format!(
            "{which} ideal is not homogeneous: {ideal:?}"
        )));
    }
    if ideal.is_unit(budget)? {
        return Err(Error::Invariant(format!(
            "{which} ideal does not vanish at the origin"
        )));
    }
    let dim = dimension(&ideal, budget)?;
    let mut warnings = Vec::new();
    match which {
        ConeKind::C3 => {
            if dim != k {
                warnings.push(format!(
                    "dim c3 = {dim} differs from dim X = {k}; X may not be pure dimensional"
                ));
            }
        }
        ConeKind::C4 | ConeKind::C5 => {
            let upper = m.min(2 * k + 1);
            if dim < k || dim > upper {
                return Err(Error::Invariant(format!(
                    "dim {which} = {dim} outside the window [{k}, {upper}]"
                )));
            }
        }
    }
    let purity = purity_of(&ideal, dim);
    Ok(ConeResult {
        which,
        ideal,
        dim,
        purity,
        warnings,
        build,
    })
}

/// Intersection of chart ideals; no contributing chart means only the origin.
fn union_of_charts(ctx: &Ctx, charts: Vec<Ideal>, budget: &Budget) -> Result<Ideal> {
    let mut acc: Option<Ideal> = None;
    for c in charts {
        if c.is_unit(budget)? {
            continue;
        }
        acc = Some(match acc {
            None => c,
            Some(prev) => intersect(&prev, &c, budget)?,
        });
    }
    Ok(acc.unwrap_or_else(|| {
        let vars = (0..ctx.arity()).map(|i| Polynomial::var(ctx, i)).collect();
        Ideal::new(ctx, vars).expect("same context")
    }))
}

/// `C₃,∞(X)`: homogenize with a fresh `x₀`, saturate by `x₀`, set `x₀ = 0`.
pub fn c3_infinity(x: &Variety, budget: &Budget) -> Result<ConeResult> {
    require_unbounded(x)?;
    let m = x.ambient_dim;
    let closure =
        projective_closure(&x.ideal, budget).map_err(|e| e.in_stage("projective closure"))?;
    let vctx = direction_context(x);
    let keep: Vec<usize> = (0..m).collect();
    let gens: Vec<Polynomial> = closure
        .nonzero_generators()
        .map(|g| {
            g.substitute_constant(m, &GaussianRational::zero())
                .restrict(&vctx, &keep)
        })
        .collect::<Result<_>>()?;
    finish(ConeKind::C3, x, Ideal::new(&vctx, gens)?, None, budget)
}

/// Saturation of a block-homogeneous slice by the irrelevant ideal of one
/// block, then elimination of that block, done per chart `block_j = 1`.
fn dehomogenized_charts(
    slice: &Ideal,
    blocks: &[Vec<usize>],
    keep: &[usize],
    target: &Ctx,
    symmetric: bool,
    budget: &Budget,
) -> Result<Vec<Ideal>> {
    let one = GaussianRational::from_integer(1);
    let mut charts = Vec::new();
    let mut choice = vec![0usize; blocks.len()];
    loop {
        let skip = symmetric && choice.windows(2).any(|w| w[0] > w[1]);
        if !skip {
            let fixed: Vec<usize> = choice.iter().zip(blocks).map(|(&c, b)| b[c]).collect();
            let gens: Vec<Polynomial> = slice
                .nonzero_generators()
                .map(|g| {
                    fixed
                        .iter()
                        .fold(g.clone(), |acc, &v| acc.substitute_constant(v, &one))
                })
                .collect();
            let chart = Ideal::new(slice.ctx(), gens)?;
            let drop: Vec<usize> = (0..slice.ctx().arity())
                .filter(|v| !keep.contains(v))
                .collect();
            let elim = eliminate(&chart, &drop, budget)?;
            charts.push(elim.embed(target, &(0..keep.len()).collect::<Vec<_>>()));
        }
        // odometer over chart choices
        let mut b = 0;
        loop {
            if b == blocks.len() {
                return Ok(charts);
            }
            choice[b] += 1;
            if choice[b] < blocks[b].len() {
                break;
            }
            choice[b] = 0;
            b += 1;
        }
    }
}

/// `C₄,∞(X)` from the tangent incidence variety over the smooth part.
pub fn c4_infinity(x: &Variety, budget: &Budget) -> Result<ConeResult> {
    require_unbounded(x)?;
    let m = x.ambient_dim;
    let names = x.ctx().names();
    let p_names: Vec<String> = names
        .iter()
        .map(|n| format!("p_{n}"))
        .chain(["p0".to_string()])
        .collect();
    let v_names: Vec<String> = names.iter().map(|n| format!("v_{n}")).collect();
    let ctx = VariableContext::with_blocks(vec![("p".into(), p_names), ("v".into(), v_names)])?;
    let p_of: Vec<usize> = (0..m).collect();
    let p0 = m;
    let v = |j: usize| m + 1 + j;
    let mut build = IncidenceBuild::default();

    // (1) A = I_X(p) + Jac(F)(p) · v
    let gens: Vec<Polynomial> = x.ideal.nonzero_generators().cloned().collect();
    let jac = jacobian_matrix(&gens)?;
    let mut a_gens: Vec<Polynomial> = gens.iter().map(|f| f.embed(&ctx, &p_of)).collect();
    for row in &jac {
        let entry = row
            .iter()
            .enumerate()
            .fold(Polynomial::zero(&ctx), |acc, (j, d)| {
                &acc + &(&d.embed(&ctx, &p_of) * &Polynomial::var(&ctx, v(j)))
            });
        if !entry.is_zero() {
            a_gens.push(entry);
        }
    }
    let a = Ideal::new(&ctx, a_gens)?;
    build.push("A", vec![a.clone()]);

    // (2) remove Sing X × ℂᵐ, one chart per generator of the singular ideal
    let sing = singular_locus(x)?.canonical(budget)?;
    let smooth_charts: Vec<Ideal> = if sing.is_unit(budget)? {
        vec![a.clone()]
    } else {
        sing.nonzero_generators()
            .map(|g| saturate_by_polynomial(&a, &g.embed(&ctx, &p_of), budget))
            .collect::<Result<_>>()
            .map_err(|e| e.in_stage("removal of the singular locus"))?
    };
    build.push("A minus Sing X", smooth_charts.clone());

    // (3) closure in ℙᵐ × ℂᵐ
    let p_block: Vec<usize> = (0..=m).collect();
    let mut closures = Vec::new();
    for chart in &smooth_charts {
        let hom: Vec<Polynomial> = chart
            .nonzero_generators()
            .map(|g| g.homogenize_block(&p_block, p0))
            .collect::<Result<_>>()?;
        let closed = saturate_by_variable(&Ideal::new(&ctx, hom)?, p0, budget)
            .map_err(|e| e.in_stage("closure in projective space"))?;
        closures.push(closed);
    }
    build.push("closure", closures.clone());

    // (4) slice at p0 = 0
    let slices: Vec<Ideal> = closures
        .iter()
        .map(|c| {
            let g = c
                .nonzero_generators()
                .map(|g| g.substitute_constant(p0, &GaussianRational::zero()));
            Ideal::new(&ctx, g.collect())
        })
        .collect::<Result<_>>()?;
    build.push("slice at infinity", slices.clone());

    // (4'), (5) irrelevant locus per chart p_j = 1, then eliminate p
    let vctx = direction_context(x);
    let keep: Vec<usize> = (0..m).map(v).collect();
    let mut charts = Vec::new();
    for s in &slices {
        charts.extend(
            dehomogenized_charts(s, std::slice::from_ref(&p_of), &keep, &vctx, false, budget)
                .map_err(|e| e.in_stage("saturation by irrelevant locus"))?,
        );
    }
    build.push("charts", charts.clone());
    let ideal = union_of_charts(&vctx, charts, budget)?;
    finish(ConeKind::C4, x, ideal, Some(build), budget)
}

/// `C₅,∞(X)` from the secant incidence variety off the diagonal.
pub fn c5_infinity(x: &Variety, budget: &Budget) -> Result<ConeResult> {
    require_unbounded(x)?;
    let m = x.ambient_dim;
    let names = x.ctx().names();
    let xs: Vec<String> = names
        .iter()
        .map(|n| format!("a_{n}"))
        .chain(["a0".to_string()])
        .collect();
    let ys: Vec<String> = names
        .iter()
        .map(|n| format!("b_{n}"))
        .chain(["b0".to_string()])
        .collect();
    let vs: Vec<String> = names.iter().map(|n| format!("v_{n}")).collect();
    let ctx =
        VariableContext::with_blocks(vec![("x".into(), xs), ("y".into(), ys), ("v".into(), vs)])?;
    let xi = |j: usize| j;
    let x0 = m;
    let yi = |j: usize| m + 1 + j;
    let y0 = 2 * m + 1;
    let vi = |j: usize| 2 * m + 2 + j;
    let x_map: Vec<usize> = (0..m).map(xi).collect();
    let y_map: Vec<usize> = (0..m).map(yi).collect();
    let mut build = IncidenceBuild::default();

    // (1) A = I_X(x) + I_X(y) + 2×2 minors of [x − y; v]
    let mut a_gens: Vec<Polynomial> = Vec::new();
    for f in x.ideal.nonzero_generators() {
        a_gens.push(f.embed(&ctx, &x_map));
        a_gens.push(f.embed(&ctx, &y_map));
    }
    let diff = |j: usize| &Polynomial::var(&ctx, xi(j)) - &Polynomial::var(&ctx, yi(j));
    let var = |j: usize| Polynomial::var(&ctx, j);
    for i in 0..m {
        for j in (i + 1)..m {
            a_gens.push(&(&diff(i) * &var(vi(j))) - &(&diff(j) * &var(vi(i))));
        }
    }
    let a = Ideal::new(&ctx, a_gens)?;
    build.push("A", vec![a.clone()]);

    // (2) remove σ⁻¹(Δ): one chart per coordinate x_i − y_i
    let off_diagonal: Vec<Ideal> = (0..m)
        .map(|i| saturate_by_polynomial(&a, &diff(i), budget))
        .collect::<Result<_>>()
        .map_err(|e| e.in_stage("removal of the diagonal"))?;
    build.push("A minus diagonal", off_diagonal.clone());

    // (3) closure in ℙᵐ × ℙᵐ × ℂᵐ
    let x_block: Vec<usize> = (0..=m).collect();
    let y_block: Vec<usize> = (m + 1..=2 * m + 1).collect();
    let mut closures = Vec::new();
    for chart in &off_diagonal {
        if chart.is_unit(budget)? {
            continue;
        }
        let hom: Vec<Polynomial> = chart
            .nonzero_generators()
            .map(|g| {
                g.homogenize_block(&x_block, x0)?
                    .homogenize_block(&y_block, y0)
            })
            .collect::<Result<_>>()?;
        let closed = saturate_by_variable(&Ideal::new(&ctx, hom)?, x0, budget)
            .and_then(|i| saturate_by_variable(&i, y0, budget))
            .map_err(|e| e.in_stage("closure in the product of projective spaces"))?;
        closures.push(closed);
    }
    build.push("closure", closures.clone());

    // (4) slice at x0 = y0 = 0
    let zero = GaussianRational::zero();
    let slices: Vec<Ideal> = closures
        .iter()
        .map(|c| {
            let g = c.nonzero_generators().map(|g| {
                g.substitute_constant(x0, &zero)
                    .substitute_constant(y0, &zero)
            });
            Ideal::new(&ctx, g.collect())
        })
        .collect::<Result<_>>()?;
    build.push("slice at infinity", slices.clone());

    // (4'), (5) irrelevant loci of both factors per chart, eliminate x and y.
    // Swapping x and y preserves every slice, so chart (j, l) equals (l, j).
    let vctx = direction_context(x);
    let keep: Vec<usize> = (0..m).map(vi).collect();
    let y_vars: Vec<usize> = (0..m).map(yi).collect();
    let mut charts = Vec::new();
    for s in &slices {
        charts.extend(
            dehomogenized_charts(
                s,
                &[x_map.clone(), y_vars.clone()],
                &keep,
                &vctx,
                true,
                budget,
            )
            .map_err(|e| e.in_stage("saturation by irrelevant locus"))?,
        );
    }
    build.push("charts", charts.clone());
    let ideal = union_of_charts(&vctx, charts, budget)?;
    finish(ConeKind::C5, x, ideal, Some(build), budget)
}

pub fn compute_cone(which: ConeKind, x: &Variety, budget: &Budget) -> Result<ConeResult> {
    match which {
        ConeKind::C3 => c3_infinity(x, budget),
        ConeKind::C4 => c4_infinity(x, budget),
        ConeKind::C5 => c5_infinity(x, budget),
    }
}

/// One line of an inclusion report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InclusionReport {
    pub k: i64,
    pub m: usize,
    pub dims: [i64; 3],
    pub checks: Vec<CheckLine>,
    pub pass: bool,
}

/// `V(small) ⊆ V(large)`: every generator of `large` vanishes on `V(small)`.
/// Returns the first violating generator.
pub fn variety_contained(
    small: &Ideal,
    large: &Ideal,
    budget: &Budget,
) -> Result<Option<Polynomial>> {
    for g in large.nonzero_generators() {
        if !radical_membership(g, small, budget)? {
            return Ok(Some(g.clone()));
        }
    }
    Ok(None)
}

/// Checks `C₃,∞ ⊆ C₄,∞ ⊆ C₅,∞` and the dimension window on given cones.
pub fn check_inclusions(
    x: &Variety,
    c3: &ConeResult,
    c4: &ConeResult,
    c5: &ConeResult,
    budget: &Budget,
) -> Result<InclusionReport> {
    let k = x.dim;
    let m = x.ambient_dim;
    let mut checks = Vec::new();
    for (name, small, large) in [("c3 ⊆ c4", c3, c4), ("c4 ⊆ c5", c4, c5)] {
        let bad = variety_contained(&small.ideal, &large.ideal, budget)?;
        checks.push(CheckLine {
            name: name.to_string(),
            pass: bad.is_none(),
            detail: match bad {
                None => "every generator of the larger cone vanishes on the smaller".into(),
                Some(g) => format!("generator {g} does not vanish on the smaller cone"),
            },
        });
    }
    checks.push(CheckLine {
        name: "dim c3 = k".into(),
        pass: c3.dim == k,
        detail: format!("dim c3 = {}, k = {k}", c3.dim),
    });
    let upper = (m as i64).min(2 * k + 1);
    let window = k <= c4.dim && c4.dim <= c5.dim && c5.dim <= upper;
    checks.push(CheckLine {
        name: "k ≤ dim c4 ≤ dim c5 ≤ min(m, 2k+1)".into(),
        pass: window,
        detail: format!("{k} ≤ {} ≤ {} ≤ {upper}", c4.dim, c5.dim),
    });
    let pass = checks.iter().all(|c| c.pass);
    Ok(InclusionReport {
        k,
        m,
        dims: [c3.dim, c4.dim, c5.dim],
        checks,
        pass,
    })
}

/// Computes all three cones and checks the inclusion chain.
pub fn verify_inclusions(
    x: &Variety,
    budget: &Budget,
) -> Result<(InclusionReport, [ConeResult; 3])> {
    let c3 = c3_infinity(x, budget)?;
    let c4 = c4_infinity(x, budget)?;
    let c5 = c5_infinity(x, budget)?;
    let report = check_inclusions(x, &c3, &c4, &c5, budget)?;
    Ok((report, [c3, c4, c5]))
}
