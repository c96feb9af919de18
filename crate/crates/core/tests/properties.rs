//! Algebraic and discretization properties over random inputs.

use gaugejet::lie::{adjoint, bracket, exp};
use gaugejet::patch::{integrate, partial, Field, Patch, Region};
use gaugejet::{AlgebraElement, CMat, GroupElement, GroupFamily, GroupSpec, Rep, RepVector, C64};
use proptest::prelude::*;

const TOL: f64 = 1e-12;

fn family() -> impl Strategy<Value = GroupFamily> {
    prop_oneof![
        Just(GroupFamily::U1),
        Just(GroupFamily::SU2),
        Just(GroupFamily::SU3),
        Just(GroupFamily::SUN(4)),
    ]
}

fn element(fam: GroupFamily) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec(-1.0..1.0f64, fam.algebra_dim())
        .prop_map(move |c| AlgebraElement::from_coords(fam, &c).unwrap())
}

fn family_and<const K: usize>() -> impl Strategy<Value = (GroupFamily, Vec<AlgebraElement>)> {
    family().prop_flat_map(|fam| (Just(fam), prop::collection::vec(element(fam), K)))
}

fn br(x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
    bracket(x, y).unwrap()
}

/// `exp` through the eigendecomposition of the hermitian matrix `iX`.
fn exp_by_eigen(x: &AlgebraElement) -> CMat {
    let h = x.matrix() * C64::new(0.0, 1.0);
    let eig = h.symmetric_eigen();
    let d = CMat::from_diagonal(&eig.eigenvalues.map(|l| C64::new(0.0, -l).exp()));
    &eig.eigenvectors * d * eig.eigenvectors.adjoint()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn jacobi_identity((_, xs) in family_and::<3>()) {
        let (x, y, z) = (&xs[0], &xs[1], &xs[2]);
        let sum = br(x, &br(y, z)) + br(y, &br(z, x)) + br(z, &br(x, y));
        prop_assert!(sum.norm() <= TOL);
    }

    #[test]
    fn bracket_and_exp_stay_in_the_group((fam, xs) in family_and::<2>()) {
        prop_assert!(br(&xs[0], &xs[1]).deviation(fam) <= TOL);
        prop_assert!(exp(&xs[0]).deviation(fam) <= TOL);
        let product = &exp(&xs[0]) * &exp(&xs[1]);
        prop_assert!(product.deviation(fam) <= TOL);
    }

    #[test]
    fn exp_matches_spectral_oracle((_, xs) in family_and::<1>()) {
        let diff = exp(&xs[0]).matrix() - exp_by_eigen(&xs[0]);
        prop_assert!(diff.norm() <= TOL);
    }

    #[test]
    fn adjoint_is_a_homomorphism((_, xs) in family_and::<4>()) {
        let (g, h) = (exp(&xs[0]), exp(&xs[1]));
        let (x, y) = (&xs[2], &xs[3]);
        let ad = |g: &GroupElement, x: &AlgebraElement| adjoint(g, x).unwrap();
        // Lie algebra automorphism.
        let lhs = ad(&g, &br(x, y));
        let rhs = br(&ad(&g, x), &ad(&g, y));
        prop_assert!(lhs.distance(&rhs) <= TOL);
        // Group homomorphism.
        let gh = &g * &h;
        prop_assert!(ad(&gh, x).distance(&ad(&g, &ad(&h, x))) <= TOL);
    }

    #[test]
    fn representations_are_homomorphisms((fam, xs) in family_and::<2>(), adj in any::<bool>(), seed in prop::collection::vec(-1.0..1.0f64, 32)) {
        let spec = if adj { GroupSpec::adjoint(fam) } else { GroupSpec::fundamental(fam) };
        let rep = Rep::new(spec).unwrap();
        let q = RepVector::new(gaugejet::CVec::from_iterator(
            rep.dim(),
            seed.chunks(2).take(rep.dim()).map(|c| C64::new(c[0], c[1])),
        ));
        let (g, h) = (exp(&xs[0]), exp(&xs[1]));
        let gh = &g * &h;
        let lhs = rep.act(&gh, &q).unwrap();
        let rhs = rep.act(&g, &rep.act(&h, &q).unwrap()).unwrap();
        prop_assert!(lhs.distance(&rhs) <= TOL);
        // Unitary representations preserve the norm.
        prop_assert!((lhs.norm() - q.norm()).abs() <= TOL);
        // The fundamental vector field is the derivative of exp(tX)·q.
        let t = 1e-4;
        let plus = rep.act(&exp(&(&xs[0] * t)), &q).unwrap();
        let minus = rep.act(&exp(&(&xs[0] * -t)), &q).unwrap();
        let fd = (plus.vector() - minus.vector()) / C64::new(2.0 * t, 0.0);
        let exact = rep.fundamental_vector_field(&xs[0], &q).unwrap();
        prop_assert!((fd - exact.vector()).norm() <= 1e-6);
    }

    #[test]
    fn integration_is_additive(a in -2.0..2.0f64, b in -2.0..2.0f64, split in 2usize..18) {
        let patch = Patch::centered(2, 20, 0.05).unwrap();
        let f = Field::from_fn(patch.clone(), |x| (a * x[0]).sin() + x[1] * x[1]);
        let g = Field::from_fn(patch.clone(), |x| (b * x[1]).cos() * x[0]);
        let sum = f.zip_map(&g, |u, v| u + v).unwrap();
        let whole = Region::new(vec![1..19, 1..19]).unwrap();
        let i = |d: &Field<f64>, r: &Region| integrate(d, r).unwrap();
        prop_assert!((i(&sum, &whole) - i(&f, &whole) - i(&g, &whole)).abs() <= TOL);
        let left = Region::new(vec![1..split, 1..19]).unwrap();
        let right = Region::new(vec![split..19, 1..19]).unwrap();
        prop_assert!((i(&f, &whole) - i(&f, &left) - i(&f, &right)).abs() <= TOL);
    }

    #[test]
    fn partial_commutes_with_constant_conjugation((_, xs) in family_and::<3>()) {
        let patch = Patch::centered(2, 9, 0.1).unwrap();
        let (x, y) = (xs[0].clone(), xs[1].clone());
        let field = Field::from_fn(patch, move |p| {
            exp(&(&(&x * p[0]) + &(&y * (p[0] * p[1])))).into_matrix()
        });
        let g = exp(&xs[2]);
        let conj = field.map(|m| g.matrix() * m * g.matrix().adjoint());
        for axis in 0..2 {
            let lhs = partial(&conj, axis).unwrap();
            let rhs = partial(&field, axis).unwrap().map(|m| g.matrix() * m * g.matrix().adjoint());
            for i in lhs.valid_indices() {
                prop_assert!((lhs.at(i) - rhs.at(i)).norm() <= TOL);
            }
        }
    }

    #[test]
    fn mixed_partials_commute(k in prop::collection::vec(-2.0..2.0f64, 3)) {
        let patch = Patch::centered(2, 11, 0.05).unwrap();
        let f = Field::from_fn(patch, |x| (k[0] * x[0] + k[1] * x[1]).sin() * (k[2] * x[0] * x[1]).exp());
        let xy = partial(&partial(&f, 0).unwrap(), 1).unwrap();
        let yx = partial(&partial(&f, 1).unwrap(), 0).unwrap();
        prop_assert_eq!(xy.valid_indices(), yx.valid_indices());
        for i in xy.valid_indices() {
            prop_assert!((xy.at(i) - yx.at(i)).abs() <= 1e-10);
        }
    }
}
