use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uvt_core::cartan::CartanSpec;
use uvt_core::modules::{rmat, rmat_inv, WeightModule};
use uvt_core::quasir::QuasiR;
use uvt_core::ratfield::{is_t_free, RatFunc};
use uvt_core::tangle::{
    closure, compose, parse, random_word, relations, resolve, tensorw, Crossings, Functor, Sign, SignSeq, TangleWord,
};

fn setups() -> Vec<(QuasiR, WeightModule)> {
    let sl2 = CartanSpec::sl2();
    let sl3 = CartanSpec::sl3();
    vec![
        (QuasiR::new(sl2.clone()), WeightModule::rank1_simple(&sl2, 1).unwrap()),
        (QuasiR::new(sl3.clone()), WeightModule::sl3_natural(&sl3).unwrap()),
    ]
}

fn rank_one() -> (QuasiR, WeightModule) {
    setups().remove(0)
}

fn random_signs(rng: &mut ChaCha8Rng) -> SignSeq {
    let n = rng.gen_range(0..3);
    SignSeq((0..n).map(|_| if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus }).collect())
}

fn word_from(rng: &mut ChaCha8Rng, source: Option<&SignSeq>, max_rows: usize, width: usize) -> TangleWord {
    let s = source.cloned().unwrap_or_else(|| random_signs(rng));
    let rows = rng.gen_range(1..=max_rows);
    random_word(rng, &s, rows, width)
}

/// Random braid-like word on `strands` strands.
fn random_braid(rng: &mut ChaCha8Rng, strands: usize, rows: usize) -> TangleWord {
    let text: Vec<String> = (0..rows)
        .map(|_| {
            let k = rng.gen_range(0..strands - 1);
            let x = if rng.gen_bool(0.5) { "xp" } else { "xm" };
            (0..strands - 1).map(|j| if j == k { x } else { "up" }).collect::<Vec<_>>().join("*")
        })
        .collect();
    parse(&text.join(";")).unwrap()
}

#[test]
fn defining_relations_hold() {
    for (qr, m) in setups() {
        let f = Functor::new(&qr, &m).unwrap();
        for r in relations() {
            let (l, rhs) = (parse(&r.lhs).unwrap(), parse(&r.rhs).unwrap());
            assert_eq!(l.source(), rhs.source(), "{}", r.name);
            assert_eq!(l.target(), rhs.target(), "{}", r.name);
            assert_eq!(f.eval(&l), f.eval(&rhs), "relation {}", r.name);
        }
    }
}

#[test]
fn functor_is_strict() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (qr, m) in setups() {
        let f = Functor::new(&qr, &m).unwrap();
        for _ in 0..50 {
            let b = word_from(&mut rng, None, 2, 4);
            let a = word_from(&mut rng, Some(b.target()), 2, 4);
            let ab = compose(&a, &b).unwrap();
            assert_eq!(f.eval(&ab), f.eval(&a).mul(&f.eval(&b)), "{a} ∘ {b}");

            let x = word_from(&mut rng, None, 4, 2);
            let y = word_from(&mut rng, None, 4, 2);
            assert_eq!(f.eval(&tensorw(&x, &y)), f.eval(&x).kron(&f.eval(&y)), "{x} ⊗ {y}");
        }
    }
}

#[test]
fn invariant_is_a_closure_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (qr, m) = rank_one();
    let f = Functor::new(&qr, &m).unwrap();
    for _ in 0..10 {
        let strands = rng.gen_range(2..4);
        let rows = rng.gen_range(1..4);
        let w = random_braid(&mut rng, strands, rows);
        let g = random_braid(&mut rng, strands, 1);
        let lhs = f.invariant(&compose(&g, &w).unwrap()).unwrap();
        let rhs = f.invariant(&compose(&w, &g).unwrap()).unwrap();
        assert_eq!(lhs, rhs, "{g} around {w}");
    }
}

#[test]
fn rank_one_invariant_values() {
    let (qr, m) = rank_one();
    let f = Functor::new(&qr, &m).unwrap();
    let v = RatFunc::v();
    let unknot = &v + &v.pow(-1);
    let inv = |name: &str| f.invariant(&resolve(name).unwrap()).unwrap();
    assert_eq!(inv("unknot"), unknot);
    assert_eq!(inv("xp"), unknot);
    assert_eq!(inv("xm"), unknot);
    let trefoil = inv("trefoil");
    assert_ne!(trefoil, unknot);
    assert_eq!(inv("mirror-trefoil"), trefoil.bar());
    assert_ne!(trefoil, trefoil.bar());
    let fig8 = inv("figure8");
    assert_eq!(fig8, fig8.bar());
    for name in ["unknot", "trefoil", "mirror-trefoil", "hopf", "figure8"] {
        assert!(is_t_free(&inv(name)), "{name}");
    }
    assert_eq!(f.gen_matrix(uvt_core::tangle::TangleGen::Xp).get(0, 0), v);
}

#[test]
fn sl3_reidemeister_one() {
    let (qr, m) = setups().remove(1);
    let f = Functor::new(&qr, &m).unwrap();
    let unknot = f.invariant(&resolve("unknot").unwrap()).unwrap();
    assert_eq!(f.invariant(&parse("xp").unwrap()).unwrap(), unknot);
    assert_eq!(f.invariant(&parse("xm").unwrap()).unwrap(), unknot);
    assert_ne!(f.invariant(&resolve("trefoil").unwrap()).unwrap(), unknot);
}

#[test]
fn curls_give_the_twist_scalar() {
    for (qr, m) in setups() {
        let raw = Functor::with_crossings(&qr, &m, Crossings::Raw).unwrap();
        let s = raw.twist_scalar();
        let curl = |x: &str| raw.eval(&parse(&format!("up*coqtr ; {x}*dn ; up*qtr")).unwrap());
        assert_eq!(curl("xp"), m.identity().scale(&s));
        assert_eq!(curl("xm"), m.identity().scale(&s.inv().unwrap()));
    }
}

#[test]
fn mixed_crossings_are_r_matrices() {
    for (qr, m) in setups() {
        let raw = Functor::with_crossings(&qr, &m, Crossings::Raw).unwrap();
        let d = m.dual();
        let ev = |w: &str| raw.eval(&parse(w).unwrap());
        let sideways = |x: &str| format!("coev*up*dn ; dn*{x}*dn ; dn*up*qtr");
        let back = |x: &str| format!("dn*up*coqtr ; dn*{x}*dn ; ev*up*dn");
        let reversed =
            |x: &str| format!("dn*dn*coqtr ; dn*dn*up*coqtr*dn ; dn*dn*{x}*dn*dn ; dn*ev*up*dn*dn ; ev*dn*dn");
        assert_eq!(ev(&sideways("xm")), rmat(&qr, &m, &d));
        assert_eq!(ev(&sideways("xp")), rmat_inv(&qr, &d, &m));
        assert_eq!(ev(&back("xm")), rmat(&qr, &d, &m));
        assert_eq!(ev(&back("xp")), rmat_inv(&qr, &m, &d));
        assert_eq!(ev(&reversed("xp")), rmat(&qr, &d, &d));
        assert_eq!(ev(&reversed("xm")), rmat_inv(&qr, &d, &d));
    }
}

#[test]
fn crossing_satisfies_a_quadratic() {
    let (qr, m) = rank_one();
    let f = Functor::new(&qr, &m).unwrap();
    let x = f.eval(&parse("xp").unwrap());
    let p = x.minimal_polynomial();
    assert_eq!(p.len(), 3, "degree two");
    // One root is the highest-weight eigenvalue; the other follows from the trace.
    let r1 = x.get(0, 0);
    let r2 = -(&p[1] + &r1);
    assert_eq!(&(&r1 * &r1) + &(&(&p[1] * &r1) + &p[0]), RatFunc::zero());
    assert_eq!(&r1 * &r2, p[0]);
    println!("roots: {r1}, {r2}");
}

#[test]
fn specialization_commutes_with_evaluation() {
    let one = BigRational::one();
    for (qr, m) in setups() {
        let c1 = qr.cartan().with_t_one();
        let qr1 = QuasiR::new(c1);
        let m1 = m.with_t_one();
        let f = Functor::new(&qr, &m).unwrap();
        let f1 = Functor::new(&qr1, &m1).unwrap();
        for name in ["unknot", "trefoil", "hopf"] {
            let w = resolve(name).unwrap();
            let full = f.invariant(&w).unwrap().specialize(None, Some(&one)).unwrap();
            assert_eq!(f1.invariant(&w).unwrap(), full, "{name}");
        }
    }
}

#[test]
fn closure_rejects_open_tangles() {
    assert!(closure(&parse("up*dn").unwrap()).is_err());
    assert!(closure(&parse("coqtr ; qtr").unwrap()).is_ok());
}
