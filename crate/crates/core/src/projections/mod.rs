//! Linear projections of an affine set: transversality to the cones at
//! infinity, properness, sheet counts, and checkers for the projection
//! theorems.

pub mod linalg;
mod report;
mod subspace;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use report::{Certificate, Check, CheckStatus, TheoremReport, Verdict};
pub use subspace::{LinearSubspace, Splitting};

use crate::cones::{c3_infinity, c4_infinity, c5_infinity, ConeResult, Purity};
use crate::error::{Error, Result};
use crate::ideal::{
    critical_minors, dimension, eliminate, saturate, singular_locus, zero_dim_count,
    zero_dim_radical, Budget, Ideal, Variety,
};
use crate::poly::{Ctx, GaussianRational, MonomialOrder, Polynomial, VariableContext};

/// Attempts allowed to seeded random searches before giving up.
pub const DEFAULT_RETRIES: u32 = 32;

/// Entries of random matrices and points are Gaussian integers with both
/// parts in `-HEIGHT..=HEIGHT`.
const HEIGHT: i64 = 5;

fn random_entry(rng: &mut ChaCha8Rng) -> GaussianRational {
    let re = rng.gen_range(-HEIGHT..=HEIGHT);
    let im = rng.gen_range(-HEIGHT..=HEIGHT);
    GaussianRational::from_parts((re, 1), (im, 1))
}

fn lambda_context(n: usize) -> Ctx {
    let names: Vec<String> = (1..=n).map(|i| format!("l{i}")).collect();
    VariableContext::new(&names).expect("valid names")
}

fn check_ambient(m: usize, s: &LinearSubspace) -> Result<()> {
    if s.ambient() != m {
        return Err(Error::Input(format!(
            "subspace lives in dimension {} but the variety in dimension {m}",
            s.ambient()
        )));
    }
    Ok(())
}

/// The cone's generators restricted to `S` (substituting `v = S·λ`), with
/// the dimension of the result. Returns `None` for the zero subspace.
pub fn cone_slice(
    cone: &ConeResult,
    s: &LinearSubspace,
    budget: &Budget,
) -> Result<Option<(Ideal, i64)>> {
    check_ambient(cone.ideal.ctx().arity(), s)?;
    if s.dim() == 0 {
        return Ok(None);
    }
    let lambda = lambda_context(s.dim());
    let images = s.parametrize(&lambda, 0);
    let gens = cone
        .ideal
        .nonzero_generators()
        .map(|g| g.compose(&images))
        .collect::<Result<_>>()?;
    let slice = Ideal::new(&lambda, gens)?;
    let d = dimension(&slice, budget)?;
    Ok(Some((slice, d)))
}

/// `cone ∩ S = {0}`. A homogeneous cone meets `S` in a finite set only at
/// the origin, so this is `dim(cone ∩ S) ≤ 0`.
pub fn cone_subspace_trivial(
    cone: &ConeResult,
    s: &LinearSubspace,
    budget: &Budget,
) -> Result<bool> {
    Ok(cone_slice(cone, s, budget)?.is_none_or(|(_, d)| d <= 0))
}

fn slice_check(
    name: &str,
    cone: &ConeResult,
    s: &LinearSubspace,
    budget: &Budget,
) -> Result<Check> {
    Ok(match cone_slice(cone, s, budget)? {
        None => Check::new(name, true, "the subspace is zero"),
        Some((slice, d)) => Check::new(
            name,
            d <= 0,
            format!(
                "{} restricted to the subspace has dimension {d}",
                cone.which
            ),
        )
        .with_certificate(Certificate::of(&slice, d)),
    })
}

/// Seeded search for an `(m − k)`-dimensional `W` with `W ∩ C₃,∞ = {0}`.
pub fn find_transverse_subspace(
    x: &Variety,
    c3: &ConeResult,
    seed: u64,
    retries: u32,
    budget: &Budget,
) -> Result<LinearSubspace> {
    let m = x.ambient_dim;
    let d = m - x.k()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..retries {
        let cols: Vec<Vec<GaussianRational>> = (0..d)
            .map(|_| (0..m).map(|_| random_entry(&mut rng)).collect())
            .collect();
        let Ok(w) = LinearSubspace::new(m, cols) else {
            continue;
        };
        if cone_subspace_trivial(c3, &w, budget)? {
            return Ok(w);
        }
    }
    Err(Error::RetryLimit {
        stage: "search for a transverse subspace".into(),
        tries: retries,
    })
}

fn require_codim(x: &Variety, w: &LinearSubspace) -> Result<usize> {
    check_ambient(x.ambient_dim, w)?;
    let k = x.k()?;
    if w.dim() + k != x.ambient_dim {
        return Err(Error::Input(format!(
            "W has dimension {} but m − k = {}",
            w.dim(),
            x.ambient_dim - k
        )));
    }
    Ok(k)
}

/// Properness of the projection along `W` restricted to `X`.
pub fn check_proper(
    x: &Variety,
    c3: &ConeResult,
    w: &LinearSubspace,
    budget: &Budget,
) -> Result<bool> {
    require_codim(x, w)?;
    cone_subspace_trivial(c3, w, budget)
}

/// One fiber of a sheet count.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FiberSample {
    /// Base point `c` in the standard complement of `W`.
    pub point: Vec<String>,
    /// Distinct points of `X ∩ (c + W)`, `None` if the fiber was not finite.
    pub distinct: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SheetCount {
    pub sheets: u64,
    pub fibers: Vec<FiberSample>,
}

/// The ideal of `X ∩ (c + W)` in coordinates `λ` on `W`.
fn fiber_ideal(x: &Variety, w: &LinearSubspace, c: &[GaussianRational]) -> Result<Ideal> {
    let lambda = lambda_context(w.dim());
    let images: Vec<Polynomial> = w
        .parametrize(&lambda, 0)
        .into_iter()
        .zip(c)
        .map(|(p, ci)| &p + &Polynomial::constant(&lambda, ci.clone()))
        .collect();
    let gens = x
        .ideal
        .nonzero_generators()
        .map(|g| g.compose(&images))
        .collect::<Result<_>>()?;
    Ideal::new(&lambda, gens)
}

/// Counts distinct points in fibers `X ∩ (c + W)` over `samples` random base
/// points and returns the maximum. Non-finite fibers are redrawn, up to
/// `retries` extra draws in total.
pub fn sheet_count(
    x: &Variety,
    w: &LinearSubspace,
    seed: u64,
    samples: u32,
    retries: u32,
    budget: &Budget,
) -> Result<SheetCount> {
    require_codim(x, w)?;
    let m = x.ambient_dim;
    let v = w.standard_complement();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fibers = Vec::new();
    let mut finite = 0;
    let mut redraws = 0;
    while finite < samples {
        let a: Vec<GaussianRational> = (0..v.dim()).map(|_| random_entry(&mut rng)).collect();
        let c: Vec<GaussianRational> = (0..m)
            .map(|r| {
                v.basis()
                    .iter()
                    .zip(&a)
                    .fold(GaussianRational::from_integer(0), |acc, (col, ai)| {
                        acc + &col[r] * ai
                    })
            })
            .collect();
        let distinct = if w.dim() == 0 {
            let on_x = x
                .ideal
                .nonzero_generators()
                .map(|g| g.eval_exact(&c))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .all(|val| val == &GaussianRational::from_integer(0));
            Some(on_x as u64)
        } else {
            let fiber = fiber_ideal(x, w, &c)?;
            if dimension(&fiber, budget)? > 0 {
                None
            } else {
                Some(zero_dim_count(&zero_dim_radical(&fiber, budget)?, budget)?)
            }
        };
        fibers.push(FiberSample {
            point: c.iter().map(|e| e.to_string()).collect(),
            distinct,
        });
        if distinct.is_some() {
            finite += 1;
        } else {
            redraws += 1;
            if redraws > retries {
                return Err(Error::RetryLimit {
                    stage: "sheet count".into(),
                    tries: retries,
                });
            }
        }
    }
    let sheets = fibers.iter().filter_map(|f| f.distinct).max().unwrap_or(0);
    Ok(SheetCount { sheets, fibers })
}

/// `X` together with the maximal minors of `Jac(F)·W`: singular points and
/// smooth points whose tangent space meets `W`.
pub fn critical_locus(x: &Variety, w: &LinearSubspace) -> Result<Ideal> {
    require_codim(x, w)?;
    let gens: Vec<Polynomial> = x.ideal.nonzero_generators().cloned().collect();
    let minors = critical_minors(&gens, w.basis())?;
    x.ideal.with_generators(minors)
}

/// Checks that `Sing X` and the critical set of the projection along `W`
/// agree outside a ball, under the hypothesis `C₄,∞ ∩ W = {0}`.
pub fn verify_theorem_1_2(
    x: &Variety,
    w: &LinearSubspace,
    budget: &Budget,
) -> Result<TheoremReport> {
    require_codim(x, w)?;
    TheoremReport::new("singular locus equals critical locus outside a ball").run(|r| {
        let c4 = c4_infinity(x, budget)?;
        r.hypotheses
            .push(slice_check("c4 ∩ W = {0}", &c4, w, budget)?);

        let critical = critical_locus(x, w)?;
        let sing = singular_locus(x)?;
        let discrepancy = saturate(&critical, &sing, budget)?.canonical(budget)?;
        let d = dimension(&discrepancy, budget)?;
        let mut cert = Certificate::of(&discrepancy, d);
        let detail = if d <= 0 {
            let count = zero_dim_count(&zero_dim_radical(&discrepancy, budget)?, budget)?;
            cert = cert.with_count(count);
            format!("critical locus minus Sing X is finite ({count} points)")
        } else {
            format!("critical locus minus Sing X has dimension {d}")
        };
        r.conclusions
            .push(Check::new("discrepancy is finite", d <= 0, detail).with_certificate(cert));
        Ok(())
    })
}

/// Checks that the projection `π_i` (kernel: the columns of `W` other than
/// the `i`-th, 1-based) maps `X` onto a hypersurface, injectively and
/// properly outside a ball, under the hypothesis `C₅,∞ ∩ Wⁱ = {0}`.
pub fn verify_theorem_1_3(
    x: &Variety,
    split: &Splitting,
    i: usize,
    budget: &Budget,
) -> Result<TheoremReport> {
    let k = x.k()?;
    let m = x.ambient_dim;
    if split.ambient() != m || split.v.dim() != k {
        return Err(Error::Input(format!(
            "splitting must have dim V = k = {k} in ambient dimension {m}"
        )));
    }
    if i == 0 || i > m - k {
        return Err(Error::Input(format!("index {i} outside 1..={}", m - k)));
    }
    let kernel = split.w.without_column(i - 1);
    TheoremReport::new("projection onto a hypersurface, injective outside a ball").run(|r| {
        let c5 = c5_infinity(x, budget)?;
        r.hypotheses
            .push(slice_check("c5 ∩ W^i = {0}", &c5, &kernel, budget)?);

        // split coordinates: V block 0..k, W block k..m; kernel is W minus column i
        let xs = split.transform(x, budget)?;
        let kernel_vars: Vec<usize> = (0..m - k).filter(|&j| j != i - 1).map(|j| k + j).collect();

        // (a) the image is a hypersurface in ℂ^{k+1}
        let image = eliminate(&xs.ideal, &kernel_vars, budget)?.canonical(budget)?;
        let d = dimension(&image, budget)?;
        let gens: Vec<&Polynomial> = image.nonzero_generators().collect();
        let detail = match gens.as_slice() {
            [g] => format!("image is V({g}) of dimension {d} in ℂ^{}", k + 1),
            _ => format!(
                "image has dimension {d} in ℂ^{} ({} generators)",
                k + 1,
                gens.len()
            ),
        };
        r.conclusions.push(
            Check::new(
                "image is a hypersurface",
                d == k as i64 && !gens.is_empty(),
                detail,
            )
            .with_certificate(Certificate::of(&image, d)),
        );

        // (b) pairs p ≠ q with π_i(p) = π_i(q) are finite
        let names = xs.ctx().names();
        let doubled: Vec<String> = names
            .iter()
            .map(|n| format!("p_{n}"))
            .chain(names.iter().map(|n| format!("q_{n}")))
            .collect();
        let pq = VariableContext::new(&doubled)?;
        let p_map: Vec<usize> = (0..m).collect();
        let q_map: Vec<usize> = (m..2 * m).collect();
        let diff = |j: usize| &Polynomial::var(&pq, j) - &Polynomial::var(&pq, m + j);
        let mut pair_gens: Vec<Polynomial> = Vec::new();
        for g in xs.ideal.nonzero_generators() {
            pair_gens.push(g.embed(&pq, &p_map));
            pair_gens.push(g.embed(&pq, &q_map));
        }
        pair_gens.extend((0..m).filter(|j| !kernel_vars.contains(j)).map(diff));
        let pairs = Ideal::new(&pq, pair_gens)?;
        let diagonal = Ideal::new(&pq, (0..m).map(diff).collect())?;
        let off_diagonal = saturate(&pairs, &diagonal, budget)?.canonical(budget)?;
        let d = dimension(&off_diagonal, budget)?;
        r.conclusions.push(
            Check::new(
                "identified pairs are finite",
                d <= 0,
                format!("pairs p ≠ q with equal image form a set of dimension {d}"),
            )
            .with_certificate(Certificate::of(&off_diagonal, d)),
        );

        // (c) properness along the kernel
        let c3 = c3_infinity(x, budget)?;
        r.conclusions
            .push(slice_check("c3 ∩ W^i = {0}", &c3, &kernel, budget)?);
        Ok(())
    })
}

/// Checks that a set whose `C₅,∞` is pure of dimension `k` is an affine
/// subspace. With a splitting, also reports whether `W` meets `C₅,∞` only at
/// the origin.
pub fn check_affine_linearity(
    x: &Variety,
    split: Option<&Splitting>,
    budget: &Budget,
) -> Result<TheoremReport> {
    let k = x.k()? as i64;
    TheoremReport::new("pure k-dimensional c5 forces an affine subspace").run(|r| {
        let c5 = c5_infinity(x, budget)?;
        let mut hyp = Check::new(
            "dim c5 = k, pure",
            c5.dim == k && c5.purity == Purity::Pure,
            format!("dim c5 = {}, k = {k}, purity {:?}", c5.dim, c5.purity).to_lowercase(),
        )
        .with_certificate(Certificate::of(&c5.ideal, c5.dim));
        if c5.dim == k && c5.purity == Purity::Unknown {
            hyp.status = CheckStatus::Uncertified;
        }
        let holds = hyp.passed();
        r.hypotheses.push(hyp);
        if !holds {
            return Ok(());
        }
        let mut xv = x.clone();
        let deg = xv.compute_degree(budget)?;
        r.conclusions
            .push(Check::new("degree 1", deg == 1, format!("deg X = {deg}")));
        let basis = x.ideal.basis(budget)?;
        let linear = basis.iter().all(|g| g.total_degree() == 1);
        let rendered: Vec<String> = basis.iter().map(|g| g.to_string()).collect();
        r.conclusions.push(Check::new(
            "reduced basis is linear",
            linear,
            format!("reduced basis {{{}}}", rendered.join(", ")),
        ));
        if let Some(s) = split {
            check_ambient(x.ambient_dim, &s.w)?;
            r.diagnostics
                .push(slice_check("c5 ∩ W = {0}", &c5, &s.w, budget)?);
        }
        Ok(())
    })
}

/// The image ideal's generator when principal, in the order-independent
/// monic normalization used for comparisons.
pub fn principal_generator(ideal: &Ideal) -> Option<Polynomial> {
    let gens: Vec<&Polynomial> = ideal.nonzero_generators().collect();
    match gens.as_slice() {
        [g] => Some(g.monic(&MonomialOrder::GrevLex)),
        _ => None,
    }
}

#[cfg(test)]
mod tests;
