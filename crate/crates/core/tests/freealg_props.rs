use uvt_core::cartan::{CartanSpec, Degree};
use uvt_core::freealg::{bar, words_of_degree, words_up_to, FElem, FTensor, FreeAlgebra, Word};
use uvt_core::ratfield::RatFunc;

fn algebras() -> Vec<FreeAlgebra> {
    vec![FreeAlgebra::new(CartanSpec::sl2()), FreeAlgebra::new(CartanSpec::sl3())]
}

fn sample(f: &FreeAlgebra, len: usize) -> Vec<FElem> {
    words_up_to(f.cartan().rank(), len).into_iter().map(FElem::basis).collect()
}

#[test]
fn coproduct_is_multiplicative() {
    for f in algebras() {
        for x in sample(&f, 4) {
            assert_eq!(f.coproduct(&x), f.coproduct_by_products(&x), "{x}");
        }
    }
}

#[test]
fn coproducts_are_coassociative() {
    for f in algebras() {
        for x in sample(&f, 4) {
            let r = f.coproduct(&x);
            assert_eq!(f.coproduct_left(&r), f.coproduct_right(&r), "r on {x}");
            let rb = f.coproduct_bar(&x);
            assert_eq!(f.coproduct_bar_left(&rb), f.coproduct_bar_right(&rb), "rbar on {x}");
        }
    }
}

#[test]
fn rbar_closed_formula_matches_conjugation() {
    for f in algebras() {
        for x in sample(&f, 4) {
            let x = &x + &x.scale(&RatFunc::v_pow(3));
            assert_eq!(f.coproduct_bar(&x), f.coproduct_bar_conj(&x), "{x}");
        }
    }
}

#[test]
fn rbar_is_multiplicative_for_bar_product() {
    for f in algebras() {
        let ws = sample(&f, 2);
        for x in &ws {
            for y in &ws {
                let xy = uvt_core::freealg::mul(x, y);
                let lhs = f.coproduct_bar(&xy);
                let rhs = f.tensor_mul_bar(&f.coproduct_bar(x), &f.coproduct_bar(y));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn sigma_compatible_with_coproduct() {
    for f in algebras() {
        for x in sample(&f, 4) {
            let lhs = f.coproduct(&f.sigma(&x));
            let rhs = f.sigma_tensor(&f.rho(&f.coproduct(&x)));
            assert_eq!(lhs, rhs, "{x}");
        }
    }
}

#[test]
fn coproduct_contains_derivation_terms() {
    for f in algebras() {
        let n = f.cartan().rank();
        for x in sample(&f, 4) {
            let r = f.coproduct(&x);
            for i in 0..n {
                let th = Word::letter(i);
                let right: FElem =
                    r.iter().filter(|((_, b), _)| *b == th).map(|((a, _), c)| (a.clone(), c.clone())).collect();
                let left: FElem =
                    r.iter().filter(|((a, _), _)| *a == th).map(|((_, b), c)| (b.clone(), c.clone())).collect();
                assert_eq!(right, f.deriv_r(i, &x));
                assert_eq!(left, f.deriv_l(i, &x));
            }
        }
    }
}

#[test]
fn derivation_product_rules() {
    for f in algebras() {
        let c = f.cartan().clone();
        let ws = words_up_to(c.rank(), 2);
        for x in &ws {
            for y in &ws {
                let (xe, ye) = (FElem::basis(x.clone()), FElem::basis(y.clone()));
                let xy = FElem::basis(x.concat(y));
                for i in 0..c.rank() {
                    let ai = c.alpha(i);
                    let (wx, wy) = (x.weight(c.rank()), y.weight(c.rank()));
                    let r = &uvt_core::freealg::mul(&f.deriv_r(i, &xe), &ye).scale(&c.brace(&ai, &wy))
                        + &uvt_core::freealg::mul(&xe, &f.deriv_r(i, &ye));
                    assert_eq!(f.deriv_r(i, &xy), r);
                    let l = &uvt_core::freealg::mul(&f.deriv_l(i, &xe), &ye)
                        + &uvt_core::freealg::mul(&xe, &f.deriv_l(i, &ye)).scale(&c.brace(&wx, &ai));
                    assert_eq!(f.deriv_l(i, &xy), l);
                }
            }
        }
    }
}

#[test]
fn form_is_symmetric_and_matches_left_peeling() {
    for f in algebras() {
        let ws = words_up_to(f.cartan().rank(), 4);
        for x in &ws {
            for y in &ws {
                if x.degree(f.cartan().rank()) != y.degree(f.cartan().rank()) {
                    continue;
                }
                let a = f.form_words(x, y);
                assert_eq!(a, f.form_words(y, x), "symmetry at {x}, {y}");
                assert_eq!(a, f.form_words_peel_left(x, y), "peeling at {x}, {y}");
            }
        }
    }
}

#[test]
fn form_satisfies_coproduct_rule() {
    // (x, y'y'') = (r(x), y'⊗y'') for every splitting of y
    for f in algebras() {
        let rank = f.cartan().rank();
        for x in words_up_to(rank, 3) {
            for y in words_up_to(rank, 3) {
                if x.degree(rank) != y.degree(rank) {
                    continue;
                }
                for k in 0..=y.len() {
                    let (y1, y2) = (Word(y.0[..k].to_vec()), Word(y.0[k..].to_vec()));
                    let lhs = f.form_words(&x, &y);
                    let rhs = f.form_tensor(&f.coproduct(&FElem::basis(x.clone())), &FTensor::basis((y1, y2)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn serre_elements_lie_in_the_radical() {
    let f = FreeAlgebra::new(CartanSpec::sl3());
    for (i, j) in [(0, 1), (1, 0)] {
        let s = f.serre_element(i, j).unwrap();
        let mut deg = vec![0u32; 2];
        deg[i] = 2;
        deg[j] = 1;
        for y in words_of_degree(&Degree(deg)) {
            assert!(f.form(&s, &FElem::basis(y.clone())).is_zero(), "({i},{j}) against {y}");
        }
    }
    // a non-simply-laced datum: N = 3 for the long index
    let g = FreeAlgebra::new(CartanSpec::from_omega(vec![vec![2, -2], vec![0, 1]]).unwrap());
    for (i, j) in [(0, 1), (1, 0)] {
        let s = g.serre_element(i, j).unwrap();
        let first = s.iter().next().unwrap().0.degree(2);
        for y in words_of_degree(&first) {
            assert!(g.form(&s, &FElem::basis(y)).is_zero(), "({i},{j})");
        }
    }
}

#[test]
fn bar_is_an_involution() {
    let x = FElem::basis(Word::from_indices(&[0, 1])).scale(&(RatFunc::v() + RatFunc::t()));
    assert_eq!(bar(&bar(&x)), x);
}
