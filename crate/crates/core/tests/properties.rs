use proptest::prelude::*;

use uhg::duality::{dual_of_line, dual_of_point, reflect_line, reflect_point};
use uhg::linalg::form;
use uhg::metric::{quadrance, quadrance_cr, spread};
use uhg::projective::{collinear, incident, join, meet};
use uhg::render::{project, project_line, Projected};
use uhg::script::{evaluate, parse, print};
use uhg::{FieldCtx, ProjLine, ProjPoint};

fn ctxs() -> impl Strategy<Value = FieldCtx> {
    prop_oneof![
        Just(FieldCtx::rational()),
        Just(FieldCtx::prime(7).unwrap()),
        Just(FieldCtx::prime(11).unwrap()),
        Just(FieldCtx::prime(101).unwrap()),
    ]
}

fn triple() -> impl Strategy<Value = [i64; 3]> {
    prop::array::uniform3(-40i64..=40)
}

fn point(ctx: FieldCtx, c: [i64; 3]) -> Option<ProjPoint> {
    ProjPoint::from_ints(ctx, c).ok()
}

fn is_null(p: &ProjPoint) -> bool {
    form(p.coords(), p.coords()).is_zero()
}

proptest! {
    #[test]
    fn join_and_meet_are_incident(ctx in ctxs(), a in triple(), b in triple(), c in triple(), d in triple()) {
        let (Some(a), Some(b)) = (point(ctx, a), point(ctx, b)) else { return Ok(()) };
        prop_assume!(a != b);
        let l = join(&a, &b).unwrap();
        prop_assert!(incident(&a, &l) && incident(&b, &l));
        let (Some(c), Some(d)) = (point(ctx, c), point(ctx, d)) else { return Ok(()) };
        prop_assume!(c != d);
        let m = join(&c, &d).unwrap();
        prop_assume!(l != m);
        let x = meet(&l, &m).unwrap();
        prop_assert!(incident(&x, &l) && incident(&x, &m));
    }

    #[test]
    fn duality_is_an_involution_exchanging_join_and_meet(ctx in ctxs(), a in triple(), b in triple()) {
        let (Some(a), Some(b)) = (point(ctx, a), point(ctx, b)) else { return Ok(()) };
        prop_assume!(a != b);
        prop_assert_eq!(dual_of_line(&dual_of_point(&a)), a.clone());
        let l = join(&a, &b).unwrap();
        prop_assert_eq!(dual_of_line(&l), meet(&dual_of_point(&a), &dual_of_point(&b)).unwrap());
        // Perpendicularity is symmetric.
        prop_assert_eq!(incident(&b, &dual_of_point(&a)), incident(&a, &dual_of_point(&b)));
    }

    #[test]
    fn quadrance_is_symmetric_and_matches_cross_ratio(ctx in ctxs(), a in triple(), b in triple()) {
        let (Some(a), Some(b)) = (point(ctx, a), point(ctx, b)) else { return Ok(()) };
        prop_assume!(a != b && !is_null(&a) && !is_null(&b));
        let q = quadrance(&a, &b).unwrap();
        prop_assert_eq!(&q, &quadrance(&b, &a).unwrap());
        if let Ok(cr) = quadrance_cr(&a, &b) {
            prop_assert_eq!(&q, &cr);
        }
        let (l, m) = (dual_of_point(&a), dual_of_point(&b));
        prop_assert_eq!(spread(&l, &m).unwrap(), q);
    }

    #[test]
    fn reflection_is_an_isometric_involution(ctx in ctxs(), a in triple(), b in triple(), c in triple()) {
        let (Some(a), Some(b), Some(c)) = (point(ctx, a), point(ctx, b), point(ctx, c)) else { return Ok(()) };
        prop_assume!(!is_null(&a) && !is_null(&b) && !is_null(&c) && b != c);
        let (rb, rc) = (reflect_point(&b, &a).unwrap(), reflect_point(&c, &a).unwrap());
        prop_assert_eq!(reflect_point(&rb, &a).unwrap(), b.clone());
        prop_assert_eq!(quadrance(&rb, &rc).unwrap(), quadrance(&b, &c).unwrap());
        prop_assert!(collinear(&a, &b, &rb) || a == b || rb == b);
        let l = join(&b, &c).unwrap();
        prop_assert_eq!(reflect_line(&l, &a).unwrap(), join(&rb, &rc).unwrap());
    }

    #[test]
    fn printed_programs_reparse_and_evaluate_identically(
        a in triple(), b in triple(), n in -9i64..=9, d in 1i64..=9,
    ) {
        prop_assume!(a != [0, 0, 0] && b != [0, 0, 0]);
        let src = format!(
            "p = [{}:{}:{}];\nq = [{}:{}:{}];\nL = join(p, q);\nx = quadrance(p, q) * {n} / {d} - -{n};\nassert incident(p, L);\n",
            a[0], a[1], a[2], b[0], b[1], b[2]
        );
        let program = parse(&src).unwrap();
        let text = print::program(&program);
        prop_assert_eq!(&parse(&text).unwrap(), &program);
        // Positions shift by the printed directive line; everything else agrees.
        let strip = |e: uhg::script::Evaluation| {
            (e.bindings, e.results.into_iter().map(|r| (r.text, r.status)).collect::<Vec<_>>())
        };
        prop_assert_eq!(strip(evaluate(&program)), strip(evaluate(&parse(&text).unwrap())));
    }

    #[test]
    fn projected_incidences_stay_within_tolerance(a in triple(), b in triple(), s in -20i64..=20, t in 1i64..=20) {
        let ctx = FieldCtx::rational();
        let (Some(a), Some(b)) = (point(ctx, a), point(ctx, b)) else { return Ok(()) };
        prop_assume!(a != b);
        let l: ProjLine = join(&a, &b).unwrap();
        // Another exact point of the line: s·a + t·b.
        let c = a.coords().iter().zip(b.coords()).map(|(x, y)| &x.scale(s) + &y.scale(t)).collect::<Vec<_>>();
        let Ok(c) = ProjPoint::new(c[0].clone(), c[1].clone(), c[2].clone()) else { return Ok(()) };
        let Some((la, lb, lc)) = project_line(&l).unwrap() else { return Ok(()) };
        if let Projected::Finite(x, y) = project(&c).unwrap() {
            let scale = 1f64.max(x.abs()).max(y.abs());
            prop_assert!((la * x + lb * y - lc).abs() <= 1e-9 * scale, "{} off {}", c, l);
        }
    }
}
