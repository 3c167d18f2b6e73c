use std::sync::Arc;

use proptest::prelude::*;
use tempered::family::{family_product, superpose};
use tempered::operator::{generated_family, operator_from_dirac_image};
use tempered::verify::{relative_error, InstanceGen, REASSOCIATION};
use tempered::{Basis64, BasisConfig, Complex, Distribution64, SFamily64, SLinearOperator64, TestFunction64};

fn basis(dim: usize, order: usize) -> Arc<Basis64> {
    Arc::new(Basis64::new(BasisConfig::new(dim, order)).unwrap())
}

fn max_abs(v: &[Complex<f64>]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn operator_commutes_with_superposition(seed in any::<u64>(), order in 2usize..10) {
        let b = basis(1, order);
        let mut g = InstanceGen::new(seed);
        let l: SLinearOperator64 = g.operator(&b, &b);
        let v: SFamily64 = g.family(&b, &b);
        let a: Distribution64 = g.distribution(&b);
        let lhs = l.apply(&superpose(&a, &v).unwrap()).unwrap();
        let rhs = superpose(&a, &l.image_family(&v).unwrap()).unwrap();
        prop_assert!(relative_error(lhs.duals(), rhs.duals()) <= REASSOCIATION);
    }

    #[test]
    fn mixed_associativity(seed in any::<u64>(), order in 2usize..10) {
        let b = basis(1, order);
        let mut g = InstanceGen::new(seed);
        let v = g.family(&b, &b);
        let w = g.family(&b, &b);
        let a = g.distribution(&b);
        let lhs = superpose(&superpose(&a, &v).unwrap(), &w).unwrap();
        let rhs = superpose(&a, &family_product(&v, &w).unwrap()).unwrap();
        prop_assert!(relative_error(lhs.duals(), rhs.duals()) <= REASSOCIATION);
    }

    #[test]
    fn dirac_family_sifts(seed in any::<u64>(), order in 1usize..12) {
        let b = basis(1, order);
        let u = InstanceGen::new(seed).distribution(&b);
        let s = superpose(&u, &SFamily64::dirac(b.clone())).unwrap();
        prop_assert_eq!(s.duals(), u.duals());
    }

    #[test]
    fn member_pairing_matches_apply(seed in any::<u64>(), x in -4.0f64..4.0) {
        let b = basis(1, 12);
        let mut g = InstanceGen::new(seed);
        let v = g.family(&b, &b);
        let phi: TestFunction64 = g.test_function(&b);
        let paired = v.member(&[x]).unwrap().pair(&phi).unwrap();
        let pointwise = v.apply(&phi).unwrap().eval(&[x]).unwrap();
        let scale = 1.0f64.max(max_abs(phi.coeffs()) * max_abs(v.matrix().as_slice()) * b.size() as f64);
        prop_assert!((paired - pointwise).norm() <= 1e-12 * scale);
    }

    #[test]
    fn characterization_is_bitwise(seed in any::<u64>(), order in 1usize..10) {
        let b = basis(1, order);
        let m = InstanceGen::new(seed).matrix::<f64>(b.size(), b.size());
        let v = generated_family(b.clone(), b.clone(), m.clone()).unwrap();
        let l = SLinearOperator64::superposition(&v);
        prop_assert_eq!(operator_from_dirac_image(&l), m);
    }

    #[test]
    fn compose_matches_sequential(seed in any::<u64>(), order in 2usize..8) {
        let b = basis(1, order);
        let mut g = InstanceGen::new(seed);
        let l1 = g.operator(&b, &b);
        let l2 = g.operator(&b, &b);
        let u = g.distribution(&b);
        let seq = l2.apply(&l1.apply(&u).unwrap()).unwrap();
        let comp = SLinearOperator64::compose(&l2, &l1).unwrap().apply(&u).unwrap();
        prop_assert!(relative_error(seq.duals(), comp.duals()) <= REASSOCIATION);
    }
}

#[test]
fn two_dimensional_dirac_sampling_round_trip() {
    let b = basis(2, 6);
    let target = b.clone();
    let (v, residual) = SFamily64::from_samples(b.clone(), b.clone(), move |p| {
        Distribution64::dirac_at(target.clone(), p)
    })
    .unwrap();
    assert!(residual <= 1e-8);
    let err = relative_error(v.matrix().as_slice(), SFamily64::dirac(b).matrix().as_slice());
    assert!(err <= 1e-8, "{err}");
}

#[test]
fn two_dimensional_partials_commute() {
    let b = basis(2, 6);
    let dx = SLinearOperator64::derivative(b.clone(), 0).unwrap();
    let dy = SLinearOperator64::derivative(b.clone(), 1).unwrap();
    let xy = SLinearOperator64::compose(&dx, &dy).unwrap();
    let yx = SLinearOperator64::compose(&dy, &dx).unwrap();
    assert_eq!(xy.b_matrix(), yx.b_matrix());
}
