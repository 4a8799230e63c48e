use ncpoisson::algebra::{check_associative, check_coherent, check_leibniz, check_lie, standard_poisson, PoissonAlgebra};
use ncpoisson::bialgebra::{check_bialgebra, comults_from_dual, dual_algebra, BialgebraVerdict, Bialgebra};
use ncpoisson::fixtures::{example_3d, example_3d_dot, example_4d, kronecker, r_example_3d, r_example_4d_second};
use ncpoisson::linalg::Matrix;
use ncpoisson::operators::{induced_pre_poisson, is_o_operator, is_rota_baxter, rota_baxter_search, subadjacent, LinearOperator};
use ncpoisson::rep::{dualize, regular_rep, tensor_quasi_rep, RepKind};
use ncpoisson::scalar::{rat, Scalar};
use ncpoisson::yang_baxter::{coboundary_comults, induced_dual, is_pybe, Tensor2};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn nonzero() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| s != &rat(0, 1))
}

fn tensor(n: usize) -> impl Strategy<Value = Tensor2> {
    proptest::collection::vec(scalar(), n * n).prop_map(move |v| Tensor2::from_matrix(Matrix::from_fn(n, n, |i, j| v[i * n + j].clone())).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reference_algebras_are_coherent(a in scalar(), b in scalar(), c in scalar()) {
        for p in [example_3d(&a, &b, &c), example_4d(&a, &b, &c)] {
            prop_assert!(check_associative(p.dot()) && check_lie(p.bracket()) && check_leibniz(p.dot(), p.bracket()));
            prop_assert!(check_coherent(&p));
            prop_assert_eq!(regular_rep(&p).classify().unwrap(), RepKind::FullCoherent);
            prop_assert!(tensor_quasi_rep(&p).classify().is_ok());
        }
    }

    #[test]
    fn dualizing_twice_is_identity(a in scalar(), b in scalar(), c in scalar()) {
        let rep = regular_rep(&example_4d(&a, &b, &c));
        prop_assert_eq!(dualize(&dualize(&rep)), rep);
    }

    #[test]
    fn tensor_parts_decompose(r in tensor(3)) {
        prop_assert_eq!(r.tau().tau(), r.clone());
        prop_assert_eq!(&r.skew_part() + &r.sym_part(), r.clone());
        prop_assert!(r.skew_part().is_skew() && r.sym_part().is_symmetric());
    }

    #[test]
    fn standard_poisson_is_coherent(h in scalar()) {
        let p = standard_poisson(&example_3d_dot(), &h).unwrap();
        prop_assert!(p.is_coherent());
    }

    #[test]
    fn fixture_solutions_give_full_bialgebras(a in scalar(), b in scalar(), c in scalar(), k1 in nonzero(), k2 in nonzero()) {
        for (p, r) in [(example_3d(&a, &b, &c), r_example_3d(&k1, &k2)), (example_4d(&a, &b, &c), r_example_4d_second(&k1, &k2))] {
            prop_assert_eq!(is_pybe(&p, &r), Ok(true));
            let (d, dl) = coboundary_comults(&p, &r);
            let dual = dual_algebra(&d, &dl).unwrap();
            prop_assert_eq!(&dual, &induced_dual(&p, &r).unwrap());
            prop_assert_eq!(comults_from_dual(&dual), (d.clone(), dl.clone()));
            let bialgebra = Bialgebra::new(p.clone(), d, dl).unwrap();
            prop_assert_eq!(check_bialgebra(&bialgebra), BialgebraVerdict::Full);
            // r♯ is an O-operator for the coadjoint-type dual representation
            let rep = dualize(&regular_rep(&p));
            let t = LinearOperator(r.sharp());
            prop_assert!(is_o_operator(&t, &rep));
            let sub = subadjacent(&induced_pre_poisson(&t, &rep).unwrap()).unwrap();
            prop_assert_eq!(sub, dual);
        }
    }

    #[test]
    fn rota_baxter_operators_scale(a in scalar(), b in scalar(), c in scalar(), s in nonzero()) {
        let p = example_3d(&a, &b, &c);
        for op in rota_baxter_search(&p, 2) {
            prop_assert!(is_rota_baxter(&p, &LinearOperator(op.0.scale(&s))));
        }
    }
}

#[test]
fn pseudo_bialgebra_from_non_coherent_dual() {
    let k = kronecker();
    assert!(!k.is_coherent());
    let (d, dl) = comults_from_dual(&k);
    let b = Bialgebra::new(PoissonAlgebra::zero(4), d, dl).unwrap();
    assert_eq!(check_bialgebra(&b), BialgebraVerdict::Pseudo);
}
