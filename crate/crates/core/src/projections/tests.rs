use super::*;
use crate::poly::parse_polynomial;

fn b() -> Budget {
    Budget::default()
}

fn variety(vars: &[&str], gens: &[&str]) -> Variety {
    Variety::parse(vars, gens, &b()).unwrap()
}

fn parabola() -> Variety {
    variety(&["x", "y"], &["y - x^2"])
}

fn twisted() -> Variety {
    variety(&["x", "y", "z"], &["y - x^2", "z - x^3"])
}

fn axis(m: usize, j: usize) -> LinearSubspace {
    LinearSubspace::coordinate(m, &[j]).unwrap()
}

#[test]
fn slices_of_a_line_cone() {
    let c3 = c3_infinity(&parabola(), &b()).unwrap();
    assert!(cone_subspace_trivial(&c3, &axis(2, 0), &b()).unwrap());
    assert!(!cone_subspace_trivial(&c3, &axis(2, 1), &b()).unwrap());
    assert!(cone_subspace_trivial(&c3, &LinearSubspace::zero(2), &b()).unwrap());
}

#[test]
fn twisted_cubic_c5_slices() {
    let c5 = c5_infinity(&twisted(), &b()).unwrap();
    assert!(!cone_subspace_trivial(&c5, &axis(3, 1), &b()).unwrap());
    assert!(cone_subspace_trivial(&c5, &axis(3, 0), &b()).unwrap());
}

#[test]
fn transverse_subspaces_avoid_c3() {
    for x in [parabola(), twisted(), variety(&["x", "y"], &["y"])] {
        let c3 = c3_infinity(&x, &b()).unwrap();
        for seed in 0..3 {
            let w = find_transverse_subspace(&x, &c3, seed, DEFAULT_RETRIES, &b()).unwrap();
            assert_eq!(w.dim(), x.ambient_dim - x.k().unwrap());
            assert!(cone_subspace_trivial(&c3, &w, &b()).unwrap());
            let again = find_transverse_subspace(&x, &c3, seed, DEFAULT_RETRIES, &b()).unwrap();
            assert_eq!(w, again);
        }
    }
}

#[test]
fn properness() {
    let p = parabola();
    let c3 = c3_infinity(&p, &b()).unwrap();
    assert!(check_proper(&p, &c3, &axis(2, 0), &b()).unwrap());
    assert!(!check_proper(&p, &c3, &axis(2, 1), &b()).unwrap());
    let line = variety(&["x", "y"], &["y"]);
    let c3 = c3_infinity(&line, &b()).unwrap();
    assert!(check_proper(&line, &c3, &axis(2, 1), &b()).unwrap());
    assert!(!check_proper(&line, &c3, &axis(2, 0), &b()).unwrap());
    assert!(check_proper(
        &p,
        &c3_infinity(&p, &b()).unwrap(),
        &LinearSubspace::zero(2),
        &b()
    )
    .is_err());
}

#[test]
fn sheet_counts_equal_degrees() {
    let cases = [
        (parabola(), LinearSubspace::coordinate(2, &[0]).unwrap(), 2),
        (
            variety(&["x", "y"], &["y^2 - x^3"]),
            LinearSubspace::coordinate(2, &[0]).unwrap(),
            3,
        ),
        (
            twisted(),
            LinearSubspace::coordinate(3, &[0, 1]).unwrap(),
            3,
        ),
        (
            variety(&["x", "y"], &["y"]),
            LinearSubspace::coordinate(2, &[1]).unwrap(),
            1,
        ),
    ];
    for (x, w, deg) in cases {
        for seed in [1, 2, 3] {
            let s = sheet_count(&x, &w, seed, 3, DEFAULT_RETRIES, &b()).unwrap();
            assert_eq!(s.sheets, deg, "{:?}", x.ideal);
        }
    }
}

#[test]
fn critical_loci() {
    let cusp = variety(&["x", "y"], &["y^2 - x^3"]);
    let crit = critical_locus(&cusp, &axis(2, 0)).unwrap();
    let expect = Ideal::parse(cusp.ctx(), &["y^2 - x^3", "-3*x^2"]).unwrap();
    assert!(crit.equals(&expect, &b()).unwrap());

    let p = parabola();
    let crit = critical_locus(&p, &axis(2, 0)).unwrap();
    let origin = Ideal::parse(p.ctx(), &["x", "y"]).unwrap();
    assert!(crit.equals(&origin, &b()).unwrap());

    let line = variety(&["x", "y"], &["y"]);
    assert!(critical_locus(&line, &axis(2, 1))
        .unwrap()
        .is_unit(&b())
        .unwrap());
}

#[test]
fn singular_locus_coincidence() {
    let cusp = variety(&["x", "y"], &["y^2 - x^3"]);
    let r = verify_theorem_1_2(&cusp, &axis(2, 0), &b()).unwrap();
    assert_eq!(r.verdict, Verdict::Verified);
    assert_eq!(
        r.conclusions[0].certificate.as_ref().unwrap().count,
        Some(0)
    );

    let r = verify_theorem_1_2(&parabola(), &axis(2, 0), &b()).unwrap();
    assert_eq!(r.verdict, Verdict::Verified);
    assert_eq!(
        r.conclusions[0].certificate.as_ref().unwrap().count,
        Some(1)
    );

    let r = verify_theorem_1_2(&parabola(), &axis(2, 1), &b()).unwrap();
    assert_eq!(r.verdict, Verdict::HypothesisNotSatisfied);
}

fn twisted_split() -> Splitting {
    Splitting::new(axis(3, 2), LinearSubspace::coordinate(3, &[0, 1]).unwrap()).unwrap()
}

#[test]
fn hypersurface_projection_of_the_twisted_cubic() {
    let x = twisted();
    let r = verify_theorem_1_3(&x, &twisted_split(), 2, &b()).unwrap();
    assert_eq!(r.verdict, Verdict::Verified, "{r:#?}");
    let cert = r.conclusions[0].certificate.as_ref().unwrap();
    assert_eq!(cert.variables, ["z", "y"]);
    let ctx = VariableContext::new(&cert.variables).unwrap();
    let image = Ideal::parse(&ctx, &cert.generators).unwrap();
    let g = principal_generator(&image).unwrap();
    let expect = parse_polynomial("z^2 - y^3", &ctx)
        .unwrap()
        .monic(&MonomialOrder::GrevLex);
    assert_eq!(g, expect);

    let r = verify_theorem_1_3(&x, &twisted_split(), 1, &b()).unwrap();
    assert_eq!(r.verdict, Verdict::HypothesisNotSatisfied);
    assert!(verify_theorem_1_3(&x, &twisted_split(), 3, &b()).is_err());
}

#[test]
fn hypersurface_projection_of_a_line() {
    let line = variety(&["x", "y"], &["y"]);
    let split = Splitting::new(axis(2, 0), axis(2, 1)).unwrap();
    let r = verify_theorem_1_3(&line, &split, 1, &b()).unwrap();
    assert_eq!(r.verdict, Verdict::Verified, "{r:#?}");
}

#[test]
fn affine_linearity() {
    let line = variety(&["x", "y"], &["y"]);
    assert_eq!(
        check_affine_linearity(&line, None, &b()).unwrap().verdict,
        Verdict::Verified
    );
    let plane = variety(&["x", "y", "z"], &["z"]);
    assert_eq!(
        check_affine_linearity(&plane, None, &b()).unwrap().verdict,
        Verdict::Verified
    );
    for x in [
        parabola(),
        twisted(),
        variety(&["x", "y"], &["x*y - 1"]),
        variety(&["x", "y"], &["y^2 - x^3"]),
    ] {
        let r = check_affine_linearity(&x, None, &b()).unwrap();
        assert_eq!(r.verdict, Verdict::HypothesisNotSatisfied);
    }
    let split = Splitting::new(axis(2, 0), axis(2, 1)).unwrap();
    let r = check_affine_linearity(&line, Some(&split), &b()).unwrap();
    assert!(r.diagnostics[0].passed());
}

#[test]
fn exhausted_budget_becomes_a_verdict() {
    let r = verify_theorem_1_3(&twisted(), &twisted_split(), 2, &Budget::new(10)).unwrap();
    assert_eq!(r.verdict, Verdict::ResourceExceeded);
    assert!(r.error.is_some());
}
