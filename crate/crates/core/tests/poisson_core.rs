use proptest::prelude::*;

use pybx::fixtures::{factorizable_fixtures, poisson_algebras};
use pybx::linear::*;
use pybx::poisson::*;
use pybx::rota_baxter::factorizable_to_qrb;

/// Leibniz residual `[u, v·w] − [u,v]·w − v·[u,w]` from the public operations.
fn leibniz(a: &AlgebraSpec, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Vector {
    let lhs = a.bracket(u, &a.mul(v, w));
    let rhs = vec_add(&a.mul(&a.bracket(u, v), w), &a.mul(v, &a.bracket(u, w)));
    vec_sub(&lhs, &rhs)
}

fn all_algebras() -> Vec<(String, AlgebraSpec)> {
    let mut out = poisson_algebras();
    out.extend(factorizable_fixtures().into_iter().map(|(n, a, _)| (n, a)));
    out
}

#[test]
fn fixtures_are_poisson() {
    for (name, a) in all_algebras() {
        let rep = check_poisson(&a);
        assert!(rep.passed(), "{name}: {:?}", rep.failing_identities());
    }
}

#[test]
fn coadjoint_semidirect_is_poisson() {
    for (name, a) in all_algebras().into_iter().filter(|(_, a)| a.dim() <= 4) {
        let co = coadjoint_rep(&a).unwrap();
        assert!(check_representation(&a, &co).unwrap().passed(), "{name}");
        let s = semidirect_product(&a, &co).unwrap();
        assert_eq!(s.dim(), 2 * a.dim());
        assert!(check_poisson(&s).passed(), "{name}");
        assert!(
            check_representation(&a, &adjoint_rep(&a)).unwrap().passed(),
            "{name}"
        );
    }
}

#[test]
fn asymmetric_bracket_is_reported() {
    let mut a = AlgebraSpec::zero(2);
    a.bracket.set(0, 1, 1, int(1));
    let rep = check_poisson(&a);
    assert!(!rep.passed());
    let v = rep
        .violations()
        .iter()
        .find(|v| v.identity == "antisymmetry")
        .unwrap();
    assert_eq!(v.indices, vec![0, 1]);
    assert_eq!(v.residual, vec_from_i64(&[0, 1]));
}

#[test]
fn noncommutative_product_is_reported() {
    let mut a = AlgebraSpec::zero(2);
    a.product.set(0, 1, 1, int(1));
    let rep = check_poisson(&a);
    assert!(rep.failed("commutativity"));
}

#[test]
fn violations_are_bounded() {
    // Random noise on a 4-dimensional space fails far more than 32 instances.
    let a = AlgebraSpec::new(
        Tensor3::from_fn(4, |i, j, k| int(((i * 7 + j * 3 + k) % 5) as i64 - 2)),
        Tensor3::from_fn(4, |i, j, k| int(((i + j * 5 + k * 2) % 3) as i64 - 1)),
    )
    .unwrap();
    let rep = check_poisson(&a);
    assert!(rep.total_violations() > pybx::report::MAX_VIOLATIONS);
    assert_eq!(rep.violations().len(), pybx::report::MAX_VIOLATIONS);
}

#[test]
fn quadratic_iff_sharp_isomorphism() {
    let mut agree = 0;
    let mut quadratic = 0;
    for (name, a, r) in factorizable_fixtures() {
        let form = factorizable_to_qrb(&a, &r, &int(1)).unwrap().form.unwrap();
        for b in [
            form.b.clone(),
            &form.b + &Matrix::identity(a.dim()),
            form.b.scale(&frac(1, 2)),
        ] {
            let f = BilinearFormData::new(b);
            let q = check_quadratic(&a, &f).passed();
            let iso = bsharp_iso_check(&a, &f.sharp()).passed();
            assert_eq!(q, iso, "{name}");
            quadratic += q as usize;
            agree += 1;
        }
    }
    assert!(quadratic > 0 && quadratic < agree);
}

#[test]
fn dimension_mismatch_is_an_error() {
    let a = AlgebraSpec::zero(2);
    assert!(AlgebraSpec::new(Tensor3::zeros(2), Tensor3::zeros(3)).is_err());
    let rep = check_quadratic(&a, &BilinearFormData::new(Matrix::identity(3)));
    assert!(rep.failed("form_dimension"));
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(-3i64..=3, n).prop_map(|v| vec_from_i64(&v))
}

proptest! {
    #[test]
    fn leibniz_residual_is_multilinear(
        idx in 0usize..11,
        s in -4i64..=4,
        seed in proptest::collection::vec(-2i64..=2, 64),
    ) {
        let (_, a) = &poisson_algebras()[idx];
        let n = a.dim();
        // A random perturbation of the product so the residual is not zero.
        let mut b = a.clone();
        b.product = Tensor3::from_fn(n, |i, j, k| &a.product.get(i, j, k).clone() + &int(seed[(i * 16 + j * 4 + k) % 64]));
        let u = vec_from_i64(&seed[..n]);
        let v = vec_from_i64(&seed[n..2 * n]);
        let w = vec_from_i64(&seed[2 * n..3 * n]);
        let s = int(s);
        let base = leibniz(&b, &u, &v, &w);
        prop_assert_eq!(leibniz(&b, &vec_scale(&s, &u), &v, &w), vec_scale(&s, &base));
        prop_assert_eq!(leibniz(&b, &u, &vec_scale(&s, &v), &w), vec_scale(&s, &base));
        prop_assert_eq!(leibniz(&b, &u, &v, &vec_scale(&s, &w)), vec_scale(&s, &base));
    }

    #[test]
    fn valid_algebras_satisfy_leibniz_everywhere(idx in 0usize..11, seed in proptest::collection::vec(-3i64..=3, 12)) {
        let (_, a) = &poisson_algebras()[idx];
        let n = a.dim();
        let r = leibniz(a, &vec_from_i64(&seed[..n]),
            &vec_from_i64(&seed[4..4 + n]), &vec_from_i64(&seed[8..8 + n]));
        prop_assert!(is_zero_vec(&r));
    }

    #[test]
    fn symmetric_forms_on_abelian_spaces_are_quadratic(v in vector(3), w in vector(3)) {
        let a = AlgebraSpec::zero(3);
        let m = Matrix::from_fn(3, 3, |i, j| &v[i] * &v[j] + &w[i] * &w[j] + if i == j { int(1) } else { int(0) });
        let f = BilinearFormData::new(m);
        prop_assert_eq!(check_quadratic(&a, &f).passed(), f.is_nondegenerate());
    }
}
