//! Floating-point witnesses for the cones at infinity and for algebraic
//! regions, sampled along exact polynomial arcs `φ: ℂ → X`.
//!
//! Arcs are validated exactly (`f ∘ φ ≡ 0` for every generator `f`), so the
//! only floating-point error is in evaluating directions and residuals.

use std::f64::consts::TAU;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cones::ConeKind;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, Variety};
use crate::poly::{Ctx, GaussianRational, Polynomial, VariableContext};
use crate::projections::LinearSubspace;

/// Residuals below this are treated as exact zeros (double-precision floor).
pub const RESIDUAL_FLOOR: f64 = 1e-13;
/// Final residual required for membership.
pub const FINAL_TOLERANCE: f64 = 1e-4;
/// Allowed growth between consecutive residuals in the decay check.
pub const MONOTONE_SLACK: f64 = 1.1;

/// A polynomial map `s ↦ (φ₁(s), …, φ_m(s))` whose image lies in `X`.
#[derive(Clone, Debug)]
pub struct WitnessArc {
    target: Ctx,
    components: Vec<Polynomial>,
}

impl WitnessArc {
    /// Validates `f ∘ φ ≡ 0` for each generator of `X` and that the arc is
    /// not constant.
    pub fn new(x: &Variety, components: Vec<Polynomial>) -> Result<Self> {
        let m = x.ambient_dim;
        if components.len() != m {
            return Err(Error::Input(format!(
                "arc has {} components but X lives in ℂ^{m}",
                components.len()
            )));
        }
        let pctx = components[0].ctx().clone();
        if pctx.arity() != 1 || components.iter().any(|c| c.ctx().arity() != 1) {
            return Err(Error::Input(
                "arc components must be polynomials in one parameter".into(),
            ));
        }
        for f in x.ideal.nonzero_generators() {
            let composed = f.compose(&components)?;
            if !composed.is_zero() {
                return Err(Error::Input(format!(
                    "arc is not contained in X: generator {f} gives {composed}"
                )));
            }
        }
        if components.iter().all(|c| c.is_constant()) {
            return Err(Error::Input(
                "arc is constant and does not escape to infinity".into(),
            ));
        }
        Ok(WitnessArc {
            target: x.ctx().clone(),
            components,
        })
    }

    pub fn parse<S: AsRef<str>>(x: &Variety, parameter: &str, components: &[S]) -> Result<Self> {
        let pctx = VariableContext::new(&[parameter])?;
        let polys = components
            .iter()
            .map(|c| crate::poly::parse_polynomial(c.as_ref(), &pctx))
            .collect::<Result<_>>()?;
        Self::new(x, polys)
    }

    pub fn target(&self) -> &Ctx {
        &self.target
    }

    pub fn parameter(&self) -> &str {
        self.components[0].ctx().name(0)
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    fn eval(&self, polys: &[Polynomial], s: Complex64) -> Vec<Complex64> {
        polys
            .iter()
            .map(|p| p.eval_complex(&[s]).expect("one parameter"))
            .collect()
    }

    pub fn point(&self, s: Complex64) -> Vec<Complex64> {
        self.eval(&self.components, s)
    }

    pub fn derivative(&self) -> Vec<Polynomial> {
        self.components
            .iter()
            .map(|c| c.partial_derivative(0).expect("one parameter"))
            .collect()
    }

    /// The arc reparametrized by `s ↦ image(s)`, a polynomial in this arc's
    /// parameter context.
    fn reparametrize(&self, image: &Polynomial) -> Result<Vec<Polynomial>> {
        self.components
            .iter()
            .map(|c| c.compose(std::slice::from_ref(image)))
            .collect()
    }
}

/// How the second arc's parameter follows the first in secant sampling.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "lowercase")]
pub enum Pairing {
    /// `t = s`.
    Same,
    /// `t = s + delta`.
    Shift { delta: String },
    /// `t = center − s`.
    Reflect { center: String },
}

impl Pairing {
    fn image(&self, pctx: &Ctx) -> Result<Polynomial> {
        let s = Polynomial::var(pctx, 0);
        let constant = |text: &str| -> Result<Polynomial> {
            Ok(Polynomial::constant(
                pctx,
                crate::poly::parse_constant(text)?,
            ))
        };
        Ok(match self {
            Pairing::Same => s,
            Pairing::Shift { delta } => &s + &constant(delta)?,
            Pairing::Reflect { center } => &constant(center)? - &s,
        })
    }
}

/// Sampling radii `|s|` with arguments per radius.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleSchedule {
    pub radii: Vec<f64>,
    /// Fixed arguments used at every radius.
    pub angles: Vec<f64>,
    /// Number of extra seeded random arguments per radius.
    pub random_angles: usize,
    pub seed: u64,
    pub pairing: Pairing,
}

impl SampleSchedule {
    pub fn new(
        radii: Vec<f64>,
        angles: Vec<f64>,
        random_angles: usize,
        seed: u64,
        pairing: Pairing,
    ) -> Result<Self> {
        if radii.is_empty() || radii.iter().any(|r| !(r.is_finite() && *r > 0.0)) {
            return Err(Error::Input("radii must be positive and finite".into()));
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Input("radii must be strictly increasing".into()));
        }
        if radii[radii.len() - 1] < 1e3 * radii[0] {
            return Err(Error::Input(
                "the final radius must be at least 1000 times the first".into(),
            ));
        }
        if angles.is_empty() && random_angles == 0 {
            return Err(Error::Input("the schedule has no arguments".into()));
        }
        Ok(SampleSchedule {
            radii,
            angles,
            random_angles,
            seed,
            pairing,
        })
    }

    /// Radii `10², 10^2.5, …, 10⁶`, argument `0` plus one seeded random
    /// argument per radius.
    pub fn standard(seed: u64) -> Self {
        let radii = (0..=8).map(|j| 10f64.powf(2.0 + 0.5 * j as f64)).collect();
        Self::new(radii, vec![0.0], 1, seed, Pairing::Same).expect("valid schedule")
    }

    pub fn with_pairing(mut self, pairing: Pairing) -> Self {
        self.pairing = pairing;
        self
    }

    /// `(radius index, radius, argument, s)` for every sample.
    fn points(&self) -> Vec<(usize, f64, f64, Complex64)> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out = Vec::new();
        for (j, &r) in self.radii.iter().enumerate() {
            let random: Vec<f64> = (0..self.random_angles)
                .map(|_| rng.gen_range(0.0..TAU))
                .collect();
            for &a in self.angles.iter().chain(&random) {
                out.push((j, r, a, Complex64::from_polar(r, a)));
            }
        }
        out
    }
}

/// One sampled unit direction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DirectionSample {
    pub radius: f64,
    pub angle: f64,
    /// Real and imaginary parts of each coordinate.
    pub direction: Vec<[f64; 2]>,
}

impl DirectionSample {
    pub fn vector(&self) -> Vec<Complex64> {
        self.direction
            .iter()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct DirectionSet {
    pub samples: Vec<DirectionSample>,
    pub warnings: Vec<String>,
}

fn hermitian_norm(z: &[Complex64]) -> f64 {
    z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

fn normalized(z: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = hermitian_norm(z);
    (n > 0.0 && n.is_finite()).then(|| z.iter().map(|c| c / n).collect())
}

/// Samples `polys(s)/‖polys(s)‖` along the schedule, skipping zeros.
fn sample_normalized(polys: &[Polynomial], sched: &SampleSchedule, what: &str) -> DirectionSet {
    let mut set = DirectionSet::default();
    for (_, r, a, s) in sched.points() {
        let z: Vec<Complex64> = polys
            .iter()
            .map(|p| p.eval_complex(&[s]).expect("one parameter"))
            .collect();
        match normalized(&z) {
            Some(d) => set.samples.push(DirectionSample {
                radius: r,
                angle: a,
                direction: d.iter().map(|c| [c.re, c.im]).collect(),
            }),
            None => set.warnings.push(format!(
                "{what} vanishes at radius {r:e}, argument {a}; sample skipped"
            )),
        }
    }
    set
}

/// Unit directions `φ(s)/‖φ(s)‖` (c3) or `φ′(s)/‖φ′(s)‖` (c4).
pub fn sample_directions(
    kind: ConeKind,
    arc: &WitnessArc,
    sched: &SampleSchedule,
) -> Result<DirectionSet> {
    match kind {
        ConeKind::C3 => Ok(sample_normalized(&arc.components, sched, "the arc")),
        ConeKind::C4 => Ok(sample_normalized(
            &arc.derivative(),
            sched,
            "the arc derivative",
        )),
        ConeKind::C5 => Err(Error::Input(
            "c5 directions are secants; use sample_secants".into(),
        )),
    }
}

/// Unit secants `(φ(s) − ψ(t))/‖φ(s) − ψ(t)‖` with `t` given by the pairing.
/// The difference is formed exactly before evaluation.
pub fn sample_secants(
    arc1: &WitnessArc,
    arc2: &WitnessArc,
    sched: &SampleSchedule,
) -> Result<DirectionSet> {
    if arc1.target.names() != arc2.target.names() {
        return Err(Error::Input(
            "secant arcs live in different variable contexts".into(),
        ));
    }
    let pctx = arc1.components[0].ctx();
    // express arc2 in arc1's parameter, then reparametrize by the pairing
    let rename: Vec<Polynomial> = arc2
        .components
        .iter()
        .map(|c| c.embed(pctx, &[0]))
        .collect();
    let image = sched.pairing.image(pctx)?;
    let arc2_on_s = WitnessArc {
        target: arc2.target.clone(),
        components: rename,
    }
    .reparametrize(&image)?;
    let diff: Vec<Polynomial> = arc1
        .components
        .iter()
        .zip(&arc2_on_s)
        .map(|(p, q)| p - q)
        .collect();
    if diff.iter().all(|d| d.is_zero()) {
        return Err(Error::Input("paired samples coincide identically".into()));
    }
    Ok(sample_normalized(&diff, sched, "the secant"))
}

/// Directions for `kind` from one arc (c3, c4) or an arc pair (c5). A
/// missing second arc means the first arc paired with itself.
pub fn witness_directions(
    kind: ConeKind,
    arcs: &[WitnessArc],
    sched: &SampleSchedule,
) -> Result<DirectionSet> {
    let first = arcs
        .first()
        .ok_or_else(|| Error::Input("no arc supplied".into()))?;
    match kind {
        ConeKind::C5 => sample_secants(first, arcs.get(1).unwrap_or(first), sched),
        _ => sample_directions(kind, first, sched),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualRow {
    pub radius: f64,
    pub max_residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub rows: Vec<ResidualRow>,
    pub final_residual: f64,
    pub monotone: bool,
    /// Least-squares slope of `log residual` against `log radius`, over
    /// residuals above the floor; `None` when fewer than two remain.
    pub slope: Option<f64>,
    pub pass: bool,
}

/// Max residual of the coefficient-normalized cone generators over the
/// directions at each radius. Passes when residuals do not grow after the
/// first two radii (10% slack) and the final one is below `1e-4`.
pub fn check_cone_membership(cone: &Ideal, dirs: &DirectionSet) -> Result<MembershipReport> {
    if dirs.samples.is_empty() {
        return Err(Error::Input("no directions to check".into()));
    }
    let gens: Vec<&Polynomial> = cone.nonzero_generators().collect();
    let scales: Vec<f64> = gens.iter().map(|g| g.max_coeff_modulus()).collect();
    let mut rows: Vec<ResidualRow> = Vec::new();
    for s in &dirs.samples {
        let v = s.vector();
        let mut worst = 0.0f64;
        for (g, scale) in gens.iter().zip(&scales) {
            worst = worst.max(g.eval_complex(&v)?.norm() / scale);
        }
        match rows.last_mut() {
            Some(row) if row.radius == s.radius => row.max_residual = row.max_residual.max(worst),
            _ => rows.push(ResidualRow {
                radius: s.radius,
                max_residual: worst,
            }),
        }
    }
    let floored: Vec<f64> = rows
        .iter()
        .map(|r| r.max_residual.max(RESIDUAL_FLOOR))
        .collect();
    let monotone = (2..floored.len()).all(|j| floored[j] <= MONOTONE_SLACK * floored[j - 1]);
    let final_residual = rows.last().expect("nonempty").max_residual;
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.max_residual > RESIDUAL_FLOOR)
        .map(|r| (r.radius.ln(), r.max_residual.ln()))
        .collect();
    let slope = fit_slope(&points);
    let pass = monotone && final_residual < FINAL_TOLERANCE;
    Ok(MembershipReport {
        rows,
        final_residual,
        monotone,
        slope,
        pass,
    })
}

/// Least-squares slope through `(x, y)` points.
fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionRow {
    pub radius: f64,
    pub angle: f64,
    pub norm_v1: f64,
    pub norm_v2: f64,
    pub bound: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionReport {
    pub a: f64,
    pub b: f64,
    pub rows: Vec<RegionRow>,
    pub holds: bool,
    /// Fitted exponent: slope of `log ‖z″‖` against `log(1 + ‖z′‖)`.
    pub fitted_b: Option<f64>,
}

fn to_complex_matrix(cols: &[&LinearSubspace], m: usize) -> DMatrix<Complex64> {
    let all: Vec<&Vec<GaussianRational>> = cols.iter().flat_map(|s| s.basis()).collect();
    DMatrix::from_fn(m, all.len(), |r, c| all[c][r].to_complex64())
}

/// Checks `‖z″‖ ≤ A(1 + ‖z′‖)^B` for samples `z = z′ + z″ ∈ V₁ ⊕ V₂` taken
/// along the arcs, and fits the exponent.
pub fn algebraic_region_check(
    arcs: &[WitnessArc],
    sched: &SampleSchedule,
    v1: &LinearSubspace,
    v2: &LinearSubspace,
    a: f64,
    b: f64,
) -> Result<RegionReport> {
    let first = arcs
        .first()
        .ok_or_else(|| Error::Input("no arc supplied".into()))?;
    let m = first.target.arity();
    if v1.ambient() != m || v2.ambient() != m || v1.dim() + v2.dim() != m {
        return Err(Error::Input(format!(
            "V₁ and V₂ must have complementary dimensions in ℂ^{m}"
        )));
    }
    let basis = to_complex_matrix(&[v1, v2], m);
    let lu = basis.clone().lu();
    if !lu.is_invertible() {
        return Err(Error::Input("V₁ and V₂ are not complementary".into()));
    }
    let k = v1.dim();
    let mut rows = Vec::new();
    let mut points = Vec::new();
    for arc in arcs {
        for (_, r, angle, s) in sched.points() {
            let z = DVector::from_vec(arc.point(s));
            let c = lu
                .solve(&z)
                .ok_or_else(|| Error::Input("singular decomposition".into()))?;
            let z1 = basis.columns(0, k) * c.rows(0, k);
            let z2 = basis.columns(k, m - k) * c.rows(k, m - k);
            let (n1, n2) = (z1.norm(), z2.norm());
            let bound = a * (1.0 + n1).powf(b);
            rows.push(RegionRow {
                radius: r,
                angle,
                norm_v1: n1,
                norm_v2: n2,
                bound,
                holds: n2 <= bound,
            });
            if n2 > 0.0 {
                points.push(((1.0 + n1).ln(), n2.ln()));
            }
        }
    }
    let holds = rows.iter().all(|r| r.holds);
    Ok(RegionReport {
        a,
        b,
        rows,
        holds,
        fitted_b: fit_slope(&points),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Budget;

    fn variety(vars: &[&str], gens: &[&str]) -> Variety {
        Variety::parse(vars, gens, &Budget::default()).unwrap()
    }

    fn cone(vars: &[&str], gens: &[&str]) -> Ideal {
        let ctx = VariableContext::new(vars).unwrap();
        Ideal::parse(&ctx, gens).unwrap()
    }

    #[test]
    fn arcs_are_validated_exactly() {
        let p = variety(&["x", "y"], &["y - x^2"]);
        assert!(WitnessArc::parse(&p, "s", &["s", "s^2"]).is_ok());
        let err = WitnessArc::parse(&p, "s", &["s", "s^3"]).unwrap_err();
        assert!(
            err.to_string().contains("y - x^2") || err.to_string().contains("-x^2 + y"),
            "{err}"
        );
        assert!(WitnessArc::parse(&p, "s", &["1", "1"]).is_err());
        assert!(WitnessArc::parse(&p, "s", &["s"]).is_err());
    }

    #[test]
    fn schedule_validation() {
        assert!(SampleSchedule::new(vec![1.0, 10.0], vec![0.0], 0, 0, Pairing::Same).is_err());
        assert!(SampleSchedule::new(vec![10.0, 1.0, 1e4], vec![0.0], 0, 0, Pairing::Same).is_err());
        assert!(SampleSchedule::new(vec![1.0, 1e3], vec![0.0], 0, 0, Pairing::Same).is_ok());
        let s = SampleSchedule::standard(7);
        assert_eq!(s.radii.len(), 9);
        assert_eq!(s.points(), SampleSchedule::standard(7).points());
    }

    #[test]
    fn parabola_c3_directions_converge() {
        let p = variety(&["x", "y"], &["y - x^2"]);
        let arc = WitnessArc::parse(&p, "s", &["s", "s^2"]).unwrap();
        let dirs = sample_directions(ConeKind::C3, &arc, &SampleSchedule::standard(0)).unwrap();
        let last = dirs.samples.last().unwrap().vector();
        assert!(last[0].norm() < 1e-2 && (last[1].norm() - 1.0).abs() < 1e-2);
    }

    #[test]
    fn line_directions_are_constant() {
        let l = variety(&["x", "y"], &["y"]);
        let arc = WitnessArc::parse(&l, "s", &["s", "0"]).unwrap();
        let dirs = sample_directions(ConeKind::C3, &arc, &SampleSchedule::standard(0)).unwrap();
        for d in &dirs.samples {
            let v = d.vector();
            assert!((v[0].norm() - 1.0).abs() < 1e-12 && v[1].norm() == 0.0);
        }
    }

    #[test]
    fn cusp_tangents() {
        let c = variety(&["x", "y"], &["y^2 - x^3"]);
        let arc = WitnessArc::parse(&c, "s", &["s^2", "s^3"]).unwrap();
        let dirs = sample_directions(ConeKind::C4, &arc, &SampleSchedule::standard(0)).unwrap();
        let last = dirs.samples.last().unwrap().vector();
        assert!(last[0].norm() < 1e-5 && (last[1].norm() - 1.0).abs() < 1e-9);
        let report = check_cone_membership(&cone(&["v_x", "v_y"], &["v_x"]), &dirs).unwrap();
        assert!(report.pass);
        assert!(report.slope.unwrap() < -0.9);
    }

    #[test]
    fn membership_controls() {
        let p = variety(&["x", "y"], &["y - x^2"]);
        let arc = WitnessArc::parse(&p, "s", &["s", "s^2"]).unwrap();
        let sched = SampleSchedule::standard(3);
        let tangents = sample_directions(ConeKind::C4, &arc, &sched).unwrap();
        let good = check_cone_membership(&cone(&["v_x", "v_y"], &["v_x"]), &tangents).unwrap();
        assert!(good.pass && good.final_residual < 1e-5);
        // |v_x| of the normalized tangent (1, 2s) is about 1/(2|s|)
        let expected = 1.0 / (2.0 * 1e6);
        assert!((good.final_residual - expected).abs() / expected < 1e-3);
        let wrong = check_cone_membership(&cone(&["v_x", "v_y"], &["v_y"]), &tangents).unwrap();
        assert!(!wrong.pass && wrong.final_residual > 0.99);

        let points = sample_directions(ConeKind::C3, &arc, &sched).unwrap();
        let zero = check_cone_membership(&cone(&["v_x", "v_y"], &["0"]), &points).unwrap();
        assert!(zero.pass && zero.final_residual == 0.0 && zero.slope.is_none());
    }

    #[test]
    fn parabola_secants_follow_the_reflection() {
        let p = variety(&["x", "y"], &["y - x^2"]);
        let phi = WitnessArc::parse(&p, "s", &["s", "s^2"]).unwrap();
        let psi = WitnessArc::parse(&p, "t", &["3 - t", "(3 - t)^2"]).unwrap();
        let dirs = sample_secants(&phi, &psi, &SampleSchedule::standard(0)).unwrap();
        // p − q = (2s − 3)(1, 3)
        for d in &dirs.samples {
            let v = d.vector();
            assert!((v[1] / v[0] - Complex64::new(3.0, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn twisted_cubic_secants_point_up() {
        let x = variety(&["x", "y", "z"], &["y - x^2", "z - x^3"]);
        let arc = WitnessArc::parse(&x, "s", &["s", "s^2", "s^3"]).unwrap();
        for pairing in [
            Pairing::Reflect { center: "1".into() },
            Pairing::Shift { delta: "1".into() },
        ] {
            let sched = SampleSchedule::standard(0).with_pairing(pairing);
            let dirs = sample_secants(&arc, &arc, &sched).unwrap();
            let last = dirs.samples.last().unwrap().vector();
            assert!(
                last[0].norm() < 1e-6
                    && last[1].norm() < 1e-5
                    && (last[2].norm() - 1.0).abs() < 1e-9
            );
            let report =
                check_cone_membership(&cone(&["v_x", "v_y", "v_z"], &["v_x"]), &dirs).unwrap();
            assert!(report.pass);
        }
        assert!(sample_secants(&arc, &arc, &SampleSchedule::standard(0)).is_err());
    }

    #[test]
    fn parabola_region() {
        let p = variety(&["x", "y"], &["y - x^2"]);
        let arc = WitnessArc::parse(&p, "s", &["s", "s^2"]).unwrap();
        let sched = SampleSchedule::standard(0);
        let y = LinearSubspace::coordinate(2, &[1]).unwrap();
        let x = LinearSubspace::coordinate(2, &[0]).unwrap();
        let good =
            algebraic_region_check(std::slice::from_ref(&arc), &sched, &y, &x, 2.0, 0.5).unwrap();
        assert!(good.holds);
        let bhat = good.fitted_b.unwrap();
        assert!((0.45..=0.55).contains(&bhat), "{bhat}");
        let bad = algebraic_region_check(&[arc], &sched, &x, &y, 2.0, 1.0).unwrap();
        assert!(!bad.holds);
    }

    #[test]
    fn oblique_split_of_a_line() {
        let l = variety(&["x", "y"], &["y"]);
        let arc = WitnessArc::parse(&l, "s", &["s", "0"]).unwrap();
        let v1 = LinearSubspace::parse(2, &[vec!["1", "1"]]).unwrap();
        let v2 = LinearSubspace::coordinate(2, &[1]).unwrap();
        let r = algebraic_region_check(&[arc], &SampleSchedule::standard(0), &v1, &v2, 2.0, 1.0)
            .unwrap();
        assert!(r.holds);
    }
}
