use proptest::prelude::*;

use pybx::bialgebra::{classify_r, Label, RMatrixData};
use pybx::error::Error;
use pybx::fixtures::*;
use pybx::linear::*;
use pybx::poisson::{check_poisson, AlgebraSpec};
use pybx::rota_baxter::*;

/// Operators with a known Rota-Baxter property, plus random ones.
fn operators() -> Vec<(String, AlgebraSpec, RotaBaxterData)> {
    let mut out = Vec::new();
    for (name, a, r) in factorizable_fixtures() {
        for w in [int(1), int(-1), int(2)] {
            let rb = factorizable_to_qrb(&a, &r, &w).unwrap();
            out.push((format!("{name}/{}", fmt_scalar(&w)), a.clone(), rb));
        }
        let n = a.dim();
        let noise = Matrix::from_fn(n, n, |i, j| int(((i * 3 + j * 5) % 4) as i64 - 1));
        out.push((
            format!("{name}/noise"),
            a.clone(),
            RotaBaxterData::new(noise, int(1)),
        ));
    }
    for (name, a) in poisson_algebras() {
        let n = a.dim();
        out.push((
            format!("{name}/zero"),
            a.clone(),
            RotaBaxterData::new(Matrix::zeros(n, n), int(3)),
        ));
        out.push((
            format!("{name}/minus_id"),
            a.clone(),
            RotaBaxterData::new(Matrix::identity(n).scale(&int(-3)), int(3)),
        ));
    }
    out
}

#[test]
fn tilde_preserves_rota_baxter() {
    let (mut yes, mut no) = (0, 0);
    for (name, a, rb) in operators() {
        let rep = tilde_equivalence(&a, &rb);
        assert!(rep.passed(), "{name}");
        let t = tilde_operator(&rb);
        let back = tilde_operator(&t);
        assert_eq!(back.p, rb.p, "{name}");
        if check_rb_operator(&a, &rb).passed() {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes > 0 && no > 0);
}

#[test]
fn descendent_is_poisson_with_homomorphism() {
    for (name, a, rb) in operators() {
        if !check_rb_operator(&a, &rb).passed() {
            assert!(
                matches!(check_descendent(&a, &rb), Err(Error::NotRotaBaxter(_))),
                "{name}"
            );
            continue;
        }
        let d = descendent_algebra(&a, &rb).unwrap();
        assert!(check_poisson(&d).passed(), "{name}");
        assert!(check_descendent(&a, &rb).unwrap().passed(), "{name}");
    }
}

#[test]
fn quadratic_data_from_factorizable() {
    for (name, a, r) in factorizable_fixtures() {
        for w in [int(1), int(-1), int(2)] {
            let rb = factorizable_to_qrb(&a, &r, &w).unwrap();
            assert!(check_quadratic_rb(&a, &rb).unwrap().passed(), "{name}");
            let f = rb.form.clone().unwrap();
            assert!(qrbp_residual(&f.b, &rb.p, &w).is_zero());
            let ft = form_tensors(&f).unwrap();
            assert_eq!(&ft.i_b.scale(&-&w), &r.i_r, "{name}");
            assert!(ft.r_b.is_symmetric());
            assert!(
                corollary_isomorphism(&a, &r, &w).unwrap().passed(),
                "{name}"
            );
        }
    }
}

#[test]
fn zero_weight_is_rejected_for_factorizable() {
    let (_, a, r) = factorizable_fixtures().remove(0);
    assert_eq!(
        factorizable_to_qrb(&a, &r, &int(0)).unwrap_err(),
        Error::ZeroWeight
    );
}

#[test]
fn zero_weight_gives_triangular() {
    let a = AlgebraSpec::zero(2);
    let rb = RotaBaxterData::new(Matrix::from_i64(&[&[0, -1], &[1, 0]]), int(0))
        .with_form(Matrix::identity(2));
    assert!(check_quadratic_rb(&a, &rb).unwrap().passed());
    let r = qrb_to_factorizable(&a, &rb).unwrap();
    assert_eq!(classify_r(&a, &r).label, Label::Triangular);
}

#[test]
fn missing_form_is_reported() {
    let a = AlgebraSpec::zero(2);
    let rb = RotaBaxterData::new(Matrix::zeros(2, 2), int(1));
    assert_eq!(check_quadratic_rb(&a, &rb).unwrap_err(), Error::MissingForm);
}

#[test]
fn semidirect_extension_is_quadratic() {
    for (name, a, rb) in operators() {
        if !check_rb_operator(&a, &rb).passed() {
            continue;
        }
        let (ext, ext_rb) = semidirect_rb(&a, &rb).unwrap();
        assert_eq!(ext.dim(), 2 * a.dim());
        assert!(
            check_quadratic_rb(&ext, &ext_rb).unwrap().passed(),
            "{name}"
        );
    }
}

#[test]
fn flip_matches_tilde() {
    for (name, a, r) in factorizable_fixtures() {
        for w in [int(1), int(-1), int(2)] {
            assert!(diagram_check(&a, &r, &w).unwrap().passed(), "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn round_trips_at_any_weight(idx in 0usize..9, num in -6i64..=6, den in 1i64..=4) {
        prop_assume!(num != 0);
        let fixtures = factorizable_fixtures();
        let (_, a, r) = &fixtures[idx % fixtures.len()];
        let w = frac(num, den);
        let rb = factorizable_to_qrb(a, r, &w).unwrap();
        let back = qrb_to_factorizable(a, &rb).unwrap();
        prop_assert_eq!(&back.r, &r.r);
        let again = factorizable_to_qrb(a, &back, &w).unwrap();
        prop_assert_eq!(again.p, rb.p);
        prop_assert_eq!(again.form, rb.form);
    }

    #[test]
    fn rbfna0_is_a_biconditional(idx in 0usize..9, noise in proptest::collection::vec(-1i64..=1, 16), w in prop::sample::select(vec![1i64, -1, 2])) {
        let fixtures = factorizable_fixtures();
        let (_, a, r) = &fixtures[idx % fixtures.len()];
        let n = a.dim();
        let w = int(w);
        let form = factorizable_to_qrb(a, r, &w).unwrap().form.unwrap();
        let m = r.r.matrix() + &Matrix::from_fn(n, n, |i, j| int(noise[i * 4 + j]));
        let rep = rbfna0_check(&form, &RMatrixData::from_matrix(m).unwrap(), &w).unwrap();
        prop_assert!(rep.passed());
    }
}
