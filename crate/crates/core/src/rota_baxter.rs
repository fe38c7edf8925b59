//! Rota-Baxter operators and the correspondence between factorizable
//! r-matrices and quadratic Rota-Baxter data.

use num_traits::{One, Zero};

use crate::bialgebra::{
    check_hom_into, check_poisson_bialgebra, classify_r, coproduct_from_dual, r_dual_algebra,
    transport_isomorphism, BialgebraSpec, Label, RMatrixData,
};
use crate::error::{Error, Result};
use crate::linear::{
    basis_vec, contract_bilinear, vec_add, vec_scale, vec_sub, Matrix, Scalar, Tensor3, TwoTensor,
};
use crate::poisson::{
    check_quadratic, coadjoint_unchecked, semidirect_unchecked, summary, AlgebraSpec,
    BilinearFormData,
};
use crate::report::Report;

/// An operator `P` with weight `λ` and an optional bilinear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterData {
    pub p: Matrix,
    pub weight: Scalar,
    pub form: Option<BilinearFormData>,
}

impl RotaBaxterData {
    pub fn new(p: Matrix, weight: Scalar) -> Self {
        RotaBaxterData {
            p,
            weight,
            form: None,
        }
    }

    pub fn with_form(mut self, b: Matrix) -> Self {
        self.form = Some(BilinearFormData::new(b));
        self
    }
}

fn rb_identity_into(a: &AlgebraSpec, p: &Matrix, weight: &Scalar, report: &mut Report) {
    let n = a.dim();
    for x in 0..n {
        for y in 0..n {
            let (ex, ey) = (basis_vec(n, x), basis_vec(n, y));
            let (px, py) = (p.column(x), p.column(y));
            for (name, t) in [("rb_bracket", &a.bracket), ("rb_product", &a.product)] {
                let op = |u: &[Scalar], v: &[Scalar]| contract_bilinear(t, u, v).expect("dim");
                let lhs = op(&px, &py);
                let inner = vec_add(
                    &vec_add(&op(&px, &ey), &op(&ex, &py)),
                    &vec_scale(weight, t.pair(x, y)),
                );
                report.check(name, &[x, y], vec_sub(&lhs, &p.apply(&inner)));
            }
        }
    }
}

/// Both weighted Rota-Baxter identities over all basis pairs.
pub fn check_rb_operator(a: &AlgebraSpec, rb: &RotaBaxterData) -> Report {
    let mut report = Report::new("rota_baxter");
    if rb.p.rows() != a.dim() || rb.p.cols() != a.dim() {
        report.require("operator_dimension", false);
        return report;
    }
    rb_identity_into(a, &rb.p, &rb.weight, &mut report);
    report
}

/// `[a,b]_P = [Pa,b] + [a,Pb] + λ[a,b]` and likewise for the product.
pub fn descendent_algebra(a: &AlgebraSpec, rb: &RotaBaxterData) -> Result<AlgebraSpec> {
    let rep = check_rb_operator(a, rb);
    if !rep.passed() {
        return Err(Error::NotRotaBaxter(summary(&rep)));
    }
    Ok(descendent_unchecked(a, &rb.p, &rb.weight))
}

fn descendent_unchecked(a: &AlgebraSpec, p: &Matrix, weight: &Scalar) -> AlgebraSpec {
    let n = a.dim();
    let op = |t: &Tensor3| {
        Tensor3::from_op(n, |x, y| {
            let (ex, ey) = (basis_vec(n, x), basis_vec(n, y));
            let f = |u: &[Scalar], v: &[Scalar]| contract_bilinear(t, u, v).expect("dim");
            vec_add(
                &vec_add(&f(&p.column(x), &ey), &f(&ex, &p.column(y))),
                &vec_scale(weight, t.pair(x, y)),
            )
        })
    };
    AlgebraSpec {
        bracket: op(&a.bracket),
        product: op(&a.product),
        basis_names: a.basis_names.clone(),
        commutative: a.commutative,
    }
}

/// The descendent algebra is Poisson and `P` maps it homomorphically onto
/// the original structure.
pub fn check_descendent(a: &AlgebraSpec, rb: &RotaBaxterData) -> Result<Report> {
    let d = descendent_algebra(a, rb)?;
    let mut report = Report::new("descendent");
    report.absorb("poisson", crate::poisson::check_poisson(&d));
    let mut hom = Report::new("hom");
    check_hom_into(&d, a, &rb.p, &mut hom, "");
    report.absorb("hom", hom);
    Ok(report)
}

/// Residual matrix of `𝔅(a,Pb) + 𝔅(Pa,b) + λ𝔅(a,b)`.
pub fn qrbp_residual(b: &Matrix, p: &Matrix, weight: &Scalar) -> Matrix {
    &(&(b * p) + &(&p.transpose() * b)) + &b.scale(weight)
}

/// Quadratic form, Rota-Baxter identities and the compatibility of the two.
pub fn check_quadratic_rb(a: &AlgebraSpec, rb: &RotaBaxterData) -> Result<Report> {
    let form = rb.form.as_ref().ok_or(Error::MissingForm)?;
    let mut report = Report::new("quadratic_rb");
    report.absorb("quadratic", check_quadratic(a, form));
    report.absorb("rb", check_rb_operator(a, rb));
    if form.b.rows() == a.dim() && rb.p.rows() == a.dim() && rb.p.cols() == a.dim() {
        let res = qrbp_residual(&form.b, &rb.p, &rb.weight);
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                report.check("qrbp", &[i, j], vec![res[(i, j)].clone()]);
            }
        }
    }
    Ok(report)
}

/// `P̃ = −λ·id − P`, keeping weight and form.
pub fn tilde_operator(rb: &RotaBaxterData) -> RotaBaxterData {
    let n = rb.p.rows();
    RotaBaxterData {
        p: &Matrix::scalar_identity(n, &(-&rb.weight)) - &rb.p,
        weight: rb.weight.clone(),
        form: rb.form.clone(),
    }
}

/// Checks that `P` and `P̃` are simultaneously Rota-Baxter (and quadratic
/// Rota-Baxter when a form is present).
pub fn tilde_equivalence(a: &AlgebraSpec, rb: &RotaBaxterData) -> Report {
    let t = tilde_operator(rb);
    let mut report = Report::new("tilde");
    let (p_rb, t_rb) = (
        check_rb_operator(a, rb).passed(),
        check_rb_operator(a, &t).passed(),
    );
    report.fact("rb", p_rb);
    report.fact("tilde_rb", t_rb);
    report.require("rb_equivalence", p_rb == t_rb);
    if rb.form.is_some() {
        let p_q = check_quadratic_rb(a, rb)
            .map(|r| r.passed())
            .unwrap_or(false);
        let t_q = check_quadratic_rb(a, &t)
            .map(|r| r.passed())
            .unwrap_or(false);
        report.fact("quadratic_rb", p_q);
        report.fact("tilde_quadratic_rb", t_q);
        report.require("quadratic_rb_equivalence", p_q == t_q);
    }
    report.require("involution", tilde_operator(&t) == *rb);
    report
}

/// `A ⋉_{−ad*,L*} A*` with `𝔅_d` and the operator `P ⊕ P̃*`.
pub fn semidirect_rb(
    a: &AlgebraSpec,
    rb: &RotaBaxterData,
) -> Result<(AlgebraSpec, RotaBaxterData)> {
    let rep = check_rb_operator(a, rb);
    if !rep.passed() {
        return Err(Error::NotRotaBaxter(summary(&rep)));
    }
    crate::poisson::require_poisson(a)?;
    let n = a.dim();
    let double = semidirect_unchecked(a, &coadjoint_unchecked(a));
    let tilde = tilde_operator(rb);
    let p = Matrix::block_diag(&rb.p, &tilde.p.transpose());
    let bd = Matrix::block2(
        &Matrix::zeros(n, n),
        &Matrix::identity(n),
        &Matrix::identity(n),
        &Matrix::zeros(n, n),
    );
    Ok((
        double,
        RotaBaxterData::new(p, rb.weight.clone()).with_form(bd),
    ))
}

/// `I_𝔅: A* → A` and its 2-tensor `r_𝔅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormTensors {
    pub i_b: Matrix,
    pub r_b: TwoTensor,
}

/// `⟨I_𝔅⁻¹a, b⟩ = 𝔅(a, b)` gives `I_𝔅 = (bᵀ)⁻¹`, and `r_𝔅 = b⁻¹`.
pub fn form_tensors(f: &BilinearFormData) -> Result<FormTensors> {
    let i_b = f.b.transpose().inverse()?;
    let r_b = TwoTensor::new(i_b.transpose())?;
    Ok(FormTensors { i_b, r_b })
}

/// For `P_r = r₊∘I_𝔅⁻¹`: compatibility with `𝔅` holds exactly when
/// `r + τ(r) = −λ·r_𝔅`, equivalently `I_r = −λ·I_𝔅`.
pub fn rbfna0_check(f: &BilinearFormData, r: &RMatrixData, weight: &Scalar) -> Result<Report> {
    let ft = form_tensors(f)?;
    let p = &r.r_plus * &f.b.transpose();
    let qrbp = qrbp_residual(&f.b, &p, weight).is_zero();
    let target = ft.r_b.matrix().scale(&-weight);
    let m = r.r.matrix();
    let s_ok = (m + &m.transpose()) == target;
    let mut report = Report::new("rbfna0");
    report.fact("qrbp", qrbp);
    report.fact("i_r_matches", s_ok);
    report.require("equivalence", qrbp == s_ok);
    Ok(report)
}

/// `P = −λ r₊ I_r⁻¹` and `𝔅 = −λ I_r⁻¹` from a factorizable `r`.
pub fn factorizable_to_qrb(
    a: &AlgebraSpec,
    r: &RMatrixData,
    lambda: &Scalar,
) -> Result<RotaBaxterData> {
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let cls = classify_r(a, r);
    if cls.label != Label::Factorizable {
        return Err(Error::NotFactorizable(cls.label.to_string()));
    }
    Ok(factorizable_to_qrb_unchecked(r, lambda))
}

pub(crate) fn factorizable_to_qrb_unchecked(r: &RMatrixData, lambda: &Scalar) -> RotaBaxterData {
    let inv = r.i_r.inverse().expect("factorizable");
    let neg = -lambda;
    let p = (&r.r_plus * &inv).scale(&neg);
    // 𝔅(a, b) = −λ⟨I_r⁻¹a, b⟩ has matrix −λ(I_r⁻¹)ᵀ.
    let b = inv.transpose().scale(&neg);
    RotaBaxterData::new(p, lambda.clone()).with_form(b)
}

/// The 2-tensor of `P∘I_𝔅`, i.e. `r₊ = P·I_𝔅`.
pub fn qrb_to_factorizable(a: &AlgebraSpec, rb: &RotaBaxterData) -> Result<RMatrixData> {
    let rep = check_quadratic_rb(a, rb)?;
    if !rep.passed() {
        return Err(Error::NotQuadraticRB(summary(&rep)));
    }
    let ft = form_tensors(rb.form.as_ref().expect("checked"))?;
    let r = TwoTensor::from_r_plus(&(&rb.p * &ft.i_b))?;
    Ok(RMatrixData::new(r))
}

/// The square relating `τ(r)` with `P̃`: `factorizable_to_qrb(τ(r)) = (𝔅, P̃)`
/// and `qrb_to_factorizable(𝔅, P̃) = τ(r)`.
pub fn diagram_check(a: &AlgebraSpec, r: &RMatrixData, lambda: &Scalar) -> Result<Report> {
    let rb = factorizable_to_qrb(a, r, lambda)?;
    let tau = r.flip();
    let rb_tau = factorizable_to_qrb(a, &tau, lambda)?;
    let tilde = tilde_operator(&rb);
    let mut report = Report::new("diagram");
    report.require("form_preserved", rb_tau.form == rb.form);
    report.require("tau_gives_tilde", rb_tau.p == tilde.p);
    let back = qrb_to_factorizable(a, &tilde)?;
    report.require("tilde_gives_tau", back.r == tau.r);
    let round = qrb_to_factorizable(a, &rb)?;
    report.require("round_trip", round.r == r.r);
    Ok(report)
}

/// `−(1/λ)I_r` carries `(A*, [ , ]_r, ·_r)` onto the descendent algebra of
/// `P = −λr₊I_r⁻¹`, and transports the bialgebra `(A*, A)` onto
/// `((A, [ , ]_P, ·_P), (A*, [ , ]_{I_r}, ·_{I_r}))`.
pub fn corollary_isomorphism(a: &AlgebraSpec, r: &RMatrixData, lambda: &Scalar) -> Result<Report> {
    let rb = factorizable_to_qrb(a, r, lambda)?;
    let desc = descendent_algebra(a, &rb)?;
    let dual = r_dual_algebra(a, r);
    let inv_l = Scalar::one() / lambda;
    let phi = r.i_r.scale(&-&inv_l);
    let mut report = Report::new("corollary");
    let mut hom = Report::new("hom");
    check_hom_into(&dual, &desc, &phi, &mut hom, "");
    report.absorb("hom", hom);

    // The pair (A*, A) with A* carrying the r-structure.
    let pair = BialgebraSpec {
        alg: dual,
        delta: coproduct_from_dual(&a.bracket),
        coproduct: coproduct_from_dual(&a.product),
    };
    report.absorb("source", check_poisson_bialgebra(&pair));
    let moved = transport_isomorphism(&pair, &phi)?;
    report.require(
        "descendent_matches",
        moved.alg.bracket == desc.bracket && moved.alg.product == desc.product,
    );
    // [x, y]_{I_r} = −λ I_r⁻¹([I_r x / λ, I_r y / λ]) computed directly.
    let n = a.dim();
    let i_inv = r.i_r.inverse()?;
    let scaled = r.i_r.scale(&inv_l);
    let direct = |t: &Tensor3| {
        Tensor3::from_op(n, |x, y| {
            let v = contract_bilinear(t, &scaled.column(x), &scaled.column(y)).expect("dim");
            vec_scale(&-lambda, &i_inv.apply(&v))
        })
    };
    let moved_dual = moved.dual_algebra();
    report.require(
        "dual_matches",
        moved_dual.bracket == direct(&a.bracket) && moved_dual.product == direct(&a.product),
    );
    report.absorb("target", check_poisson_bialgebra(&moved));
    Ok(report)
}
