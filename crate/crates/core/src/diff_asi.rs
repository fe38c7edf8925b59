//! Differential associative algebras and coalgebras, differential ASI
//! bialgebras, their r-matrices and Rota-Baxter counterparts, and the
//! Poisson bialgebras induced by a pair of commuting derivations.

use num_traits::{One, Zero};

use crate::bialgebra::{
    ayb_residual, canonical_r, check_hom_into, check_poisson_bialgebra, check_r_dim, classify_r,
    coboundary_cobracket, coboundary_coproduct, coboundary_maps, double_algebra, double_constants,
    dual_constants, factor_with, mat_residual, r_dual_algebra, BialgebraSpec, Classification,
    CoboundaryForm, Label, RMatrixData,
};
use crate::error::{Error, Result};
use crate::linear::{
    basis_vec, contract_bilinear, vec_add, vec_sub, Matrix, Scalar, Tensor3, TwoTensor, Vector,
};
use crate::poisson::{
    check_assoc, left_matrix, right_matrix, summary, AlgebraSpec, BilinearFormData,
};
use crate::report::Report;
use crate::rota_baxter::{
    check_rb_operator, factorizable_to_qrb_unchecked, form_tensors, qrbp_residual, RotaBaxterData,
};

/// An associative algebra with a family of derivations `Φ = {∂_k}`.
///
/// Only `alg.product` is used; the bracket is ignored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffAlgebra {
    pub alg: AlgebraSpec,
    pub phi: Vec<Matrix>,
    pub commutative: bool,
}

impl DiffAlgebra {
    pub fn new(product: Tensor3, phi: Vec<Matrix>, commutative: bool) -> Self {
        let n = product.dim();
        let mut alg = AlgebraSpec::new(Tensor3::zeros(n), product).expect("same dimension");
        alg.commutative = commutative;
        DiffAlgebra {
            alg,
            phi,
            commutative,
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        self.alg = self.alg.with_names(names);
        self
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn m(&self) -> usize {
        self.phi.len()
    }

    fn product(&self) -> &Tensor3 {
        &self.alg.product
    }

    /// The product alone, with zero bracket, for reuse of the Poisson tools.
    fn associative(&self) -> AlgebraSpec {
        let mut a = self.alg.clone();
        a.bracket = Tensor3::zeros(self.dim());
        a
    }
}

/// A coalgebra `Δ` (`Δ(e_k) = Σ delta[k][i][j] e_i⊗e_j`) with a family of
/// coderivations `Ψ = {ð_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffCoalgebra {
    pub coproduct: Tensor3,
    pub psi: Vec<Matrix>,
    pub cocommutative: bool,
}

impl DiffCoalgebra {
    pub fn zero(n: usize, psi: Vec<Matrix>) -> Self {
        DiffCoalgebra {
            coproduct: Tensor3::zeros(n),
            psi,
            cocommutative: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.coproduct.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffASIBialgebra {
    pub diff_alg: DiffAlgebra,
    pub diff_coalg: DiffCoalgebra,
}

impl DiffASIBialgebra {
    pub fn new(diff_alg: DiffAlgebra, diff_coalg: DiffCoalgebra) -> Result<Self> {
        if diff_alg.dim() != diff_coalg.dim() {
            return Err(Error::DimMismatch {
                expected: diff_alg.dim(),
                found: diff_coalg.dim(),
            });
        }
        if diff_alg.m() != diff_coalg.psi.len() {
            return Err(Error::DimMismatch {
                expected: diff_alg.m(),
                found: diff_coalg.psi.len(),
            });
        }
        Ok(DiffASIBialgebra {
            diff_alg,
            diff_coalg,
        })
    }

    /// `Δ = 0` over `d` with coderivations `psi`.
    pub fn trivial(diff_alg: DiffAlgebra, psi: Vec<Matrix>) -> Self {
        let n = diff_alg.dim();
        DiffASIBialgebra {
            diff_alg,
            diff_coalg: DiffCoalgebra::zero(n, psi),
        }
    }

    pub fn dim(&self) -> usize {
        self.diff_alg.dim()
    }
}

/// A symmetric invariant form with the adjoints `∂̂_k` of the derivations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusData {
    pub form: BilinearFormData,
    pub phi_hat: Vec<Matrix>,
}

fn op(t: &Tensor3, u: &[Scalar], v: &[Scalar]) -> Vector {
    contract_bilinear(t, u, v).expect("vector dimension")
}

fn family_fits(ms: &[Matrix], n: usize) -> bool {
    ms.iter().all(|m| m.rows() == n && m.cols() == n)
}

fn commutation_into(ms: &[Matrix], report: &mut Report) {
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            report.check(
                "commutation",
                &[i, j],
                mat_residual(ms[i].commutator(&ms[j])),
            );
        }
    }
}

/// Associativity (and commutativity when flagged), the Leibniz rule for each
/// `∂_k`, and pairwise commutation of the derivations.
pub fn check_diff_algebra(d: &DiffAlgebra) -> Report {
    let mut report = Report::new("diff_algebra");
    let n = d.dim();
    if !family_fits(&d.phi, n) {
        report.require("operator_dimension", false);
        return report;
    }
    check_assoc(d.product(), d.commutative, &mut report, "");
    let t = d.product();
    for (k, der) in d.phi.iter().enumerate() {
        for a in 0..n {
            for b in 0..n {
                let lhs = der.apply(t.pair(a, b));
                let rhs = vec_add(
                    &op(t, &der.column(a), &basis_vec(n, b)),
                    &op(t, &basis_vec(n, a), &der.column(b)),
                );
                report.check("leibniz", &[k, a, b], vec_sub(&lhs, &rhs));
            }
        }
    }
    commutation_into(&d.phi, &mut report);
    report
}

/// `(Δ⊗id)Δ(e_k) − (id⊗Δ)Δ(e_k)` flattened over `[a][b][c]`.
fn coassoc_residual(c: &Tensor3, k: usize) -> Vector {
    let n = c.dim();
    let mut out = Tensor3::zeros(n);
    for ((_, i, cc), v) in c.nonzero().filter(|((kk, _, _), _)| *kk == k) {
        for ((_, a, b), w) in c.nonzero().filter(|((kk, _, _), _)| *kk == i) {
            out.add_at(a, b, cc, &(v * w));
        }
    }
    for ((_, a, j), v) in c.nonzero().filter(|((kk, _, _), _)| *kk == k) {
        for ((_, b, cc), w) in c.nonzero().filter(|((kk, _, _), _)| *kk == j) {
            out.add_at(a, b, cc, &-(v * w));
        }
    }
    out.entries().to_vec()
}

/// Coassociativity (and cocommutativity when flagged), the coderivation
/// identity `Δð = (ð⊗id + id⊗ð)Δ` for each `ð_k`, and pairwise commutation.
pub fn check_diff_coalgebra(c: &DiffCoalgebra) -> Report {
    let mut report = Report::new("diff_coalgebra");
    let n = c.dim();
    if !family_fits(&c.psi, n) {
        report.require("operator_dimension", false);
        return report;
    }
    for k in 0..n {
        report.check("coassociativity", &[k], coassoc_residual(&c.coproduct, k));
        if c.cocommutative {
            let s = c.coproduct.slice(k);
            report.check("cocommutativity", &[k], mat_residual(&s - &s.transpose()));
        }
    }
    for (k, eth) in c.psi.iter().enumerate() {
        for e in 0..n {
            let d = c.coproduct.slice(e);
            let lhs = c.coproduct.slice_combination(&eth.column(e));
            let rhs = &(eth * &d) + &(&d * &eth.transpose());
            report.check("coderivation", &[k, e], mat_residual(&lhs - &rhs));
        }
    }
    commutation_into(&c.psi, &mut report);
    report
}

fn qadm_into(d: &DiffAlgebra, psi: &[Matrix], report: &mut Report) {
    let n = d.dim();
    let t = d.product();
    for (k, (der, eth)) in d.phi.iter().zip(psi).enumerate() {
        for a in 0..n {
            for b in 0..n {
                let (ea, eb) = (basis_vec(n, a), basis_vec(n, b));
                let eth_ab = eth.apply(t.pair(a, b));
                // ð(a)·b − a·∂(b) − ð(ab)
                let r1 = vec_sub(
                    &vec_sub(&op(t, &eth.column(a), &eb), &op(t, &ea, &der.column(b))),
                    &eth_ab,
                );
                report.check("qadm1", &[k, a, b], r1);
                // a·ð(b) − ∂(a)·b − ð(ab)
                let r2 = vec_sub(
                    &vec_sub(&op(t, &ea, &eth.column(b)), &op(t, &der.column(a), &eb)),
                    &eth_ab,
                );
                report.check("qadm2", &[k, a, b], r2);
            }
        }
    }
}

fn psadm_into(phi: &[Matrix], c: &DiffCoalgebra, report: &mut Report) {
    let n = c.dim();
    for (k, (der, eth)) in phi.iter().zip(&c.psi).enumerate() {
        for e in 0..n {
            let d = c.coproduct.slice(e);
            let d_der = c.coproduct.slice_combination(&der.column(e));
            // (∂⊗id)Δ − (id⊗ð)Δ − Δ∂
            let r1 = &(&(der * &d) - &(&d * &eth.transpose())) - &d_der;
            report.check("psadm1", &[k, e], mat_residual(r1));
            // (id⊗∂)Δ − (ð⊗id)Δ − Δ∂
            let r2 = &(&(&d * &der.transpose()) - &(eth * &d)) - &d_der;
            report.check("psadm2", &[k, e], mat_residual(r2));
        }
    }
}

/// The four admissibility families tying `Φ` to `Ψ` through the product and
/// the coproduct.
pub fn admissibility_audit(b: &DiffASIBialgebra) -> Report {
    let mut report = Report::new("admissibility");
    let n = b.dim();
    if b.diff_alg.m() != b.diff_coalg.psi.len()
        || !family_fits(&b.diff_alg.phi, n)
        || !family_fits(&b.diff_coalg.psi, n)
    {
        report.require("operator_dimension", false);
        return report;
    }
    qadm_into(&b.diff_alg, &b.diff_coalg.psi, &mut report);
    psadm_into(&b.diff_alg.phi, &b.diff_coalg, &mut report);
    report
}

/// Both ASI compatibility identities over all basis pairs.
fn asi_into(t: &Tensor3, c: &Tensor3, report: &mut Report) {
    let n = t.dim();
    for a in 0..n {
        for b in 0..n {
            let (ea, eb) = (basis_vec(n, a), basis_vec(n, b));
            let (la, ra) = (left_matrix(t, &ea), right_matrix(t, &ea));
            let (lb, rb) = (left_matrix(t, &eb), right_matrix(t, &eb));
            let (da, db) = (c.slice(a), c.slice(b));
            let d_ab = c.slice_combination(t.pair(a, b));
            let r1 = &(&d_ab - &(&rb * &da)) - &(&db * &la.transpose());
            report.check("asi1", &[a, b], mat_residual(r1));
            let lhs = &(&la * &db) - &(&db * &ra.transpose());
            let rhs = (&(&da * &rb.transpose()) - &(&lb * &da)).transpose();
            report.check("asi2", &[a, b], mat_residual(&lhs - &rhs));
        }
    }
}

/// Every axiom of a differential ASI bialgebra.
pub fn check_diff_asi_bialgebra(b: &DiffASIBialgebra) -> Report {
    let mut report = Report::new("diff_asi_bialgebra");
    if b.diff_alg.dim() != b.diff_coalg.dim() {
        report.require("dimension", false);
        return report;
    }
    report.absorb("algebra", check_diff_algebra(&b.diff_alg));
    report.absorb("coalgebra", check_diff_coalgebra(&b.diff_coalg));
    asi_into(b.diff_alg.product(), &b.diff_coalg.coproduct, &mut report);
    report.absorb("admissibility", admissibility_audit(b));
    report
}

/// `A(r) = 0` together with `(∂_k⊗id − id⊗ð_k)(r) = 0` and
/// `(ð_k⊗id − id⊗∂_k)(r) = 0`; fact `aof` is the operator form
/// `∂_k r₊ = r₊ð_kᵀ`, `∂_k r₋ = r₋ð_kᵀ`, required to agree.
pub fn psi_admissible_aybe(d: &DiffAlgebra, psi: &[Matrix], r: &RMatrixData) -> Report {
    let mut report = Report::new("psi_admissible_aybe");
    let n = d.dim();
    if r.dim() != n || psi.len() != d.m() || !family_fits(psi, n) || !family_fits(&d.phi, n) {
        report.require("dimension", false);
        return report;
    }
    let m = r.r.matrix();
    report.check("aybe", &[], ayb_residual(d.product(), m).entries().to_vec());
    for (k, (der, eth)) in d.phi.iter().zip(psi).enumerate() {
        report.check(
            "pqadm1",
            &[k],
            mat_residual(&(der * m) - &(m * &eth.transpose())),
        );
        report.check(
            "pqadm2",
            &[k],
            mat_residual(&(eth * m) - &(m * &der.transpose())),
        );
    }
    let pq = report.holds("pqadm1") && report.holds("pqadm2") || d.m() == 0;
    let aof = d.phi.iter().zip(psi).all(|(der, eth)| {
        let et = eth.transpose();
        (der * &r.r_plus) == (&r.r_plus * &et) && (der * &r.r_minus) == (&r.r_minus * &et)
    });
    report.fact("pqadm", pq);
    report.fact("aof", aof);
    report.require("aof_equivalence", pq == aof);
    report
}

/// `(L(e_a)⊗id − id⊗R(e_a))(s) = 0` for all basis `e_a`.
fn l_invariance_into(t: &Tensor3, s: &Matrix, report: &mut Report) {
    let n = t.dim();
    for a in 0..n {
        let ea = basis_vec(n, a);
        let res = &(&left_matrix(t, &ea) * s) - &(s * &right_matrix(t, &ea).transpose());
        report.check("l_invariance", &[a], mat_residual(res));
    }
}

/// `x·_r y = R(r₊x)ᵀy + L(r₋y)ᵀx` on `A*`.
pub fn diff_r_dual_product(d: &DiffAlgebra, r: &RMatrixData) -> Tensor3 {
    let n = d.dim();
    let t = d.product();
    Tensor3::from_op(n, |i, j| {
        let (ex, ey) = (basis_vec(n, i), basis_vec(n, j));
        vec_add(
            &right_matrix(t, &r.r_plus.apply(&ex)).transpose().apply(&ey),
            &left_matrix(t, &r.r_minus.apply(&ey)).transpose().apply(&ex),
        )
    })
}

struct DiffCore {
    label: Label,
    a: Tensor3,
    solves: bool,
    s_inv: bool,
    anti: bool,
    rank: usize,
    evidence: Report,
}

fn classify_diff_core(
    d: &DiffAlgebra,
    psi: &[Matrix],
    r: &RMatrixData,
    form: CoboundaryForm,
) -> DiffCore {
    let n = d.dim();
    let mut evidence = Report::new("classify_diff");
    let aybe = psi_admissible_aybe(d, psi, r);
    let solves = aybe.passed();
    evidence.absorb("aybe", aybe);
    let mut adm = Report::new("qadm");
    if psi.len() == d.m() && family_fits(psi, n) {
        qadm_into(d, psi, &mut adm);
    } else {
        adm.require("dimension", false);
    }
    let admissible = adm.passed();
    evidence.fact("psi_admissible_algebra", admissible);
    let s = r.symmetric_part();
    let mut linv = Report::new("l_invariance");
    l_invariance_into(d.product(), &s, &mut linv);
    let s_inv = linv.passed();
    evidence.absorb("", linv);
    let anti = r.r.is_antisymmetric();
    let rank = s.rank();
    let label = if solves && s_inv && admissible {
        if anti {
            Label::Triangular
        } else if rank == n {
            Label::Factorizable
        } else {
            Label::QuasiTriangular
        }
    } else {
        let coproduct = coboundary_coproduct(&d.alg, r.r.matrix(), form);
        let candidate = DiffASIBialgebra {
            diff_alg: d.clone(),
            diff_coalg: DiffCoalgebra {
                coproduct,
                psi: psi.to_vec(),
                cocommutative: false,
            },
        };
        if check_diff_asi_bialgebra(&candidate).passed() {
            Label::CoboundaryOnly
        } else {
            Label::NotSolution
        }
    };
    DiffCore {
        label,
        a: ayb_residual(d.product(), r.r.matrix()),
        solves,
        s_inv,
        anti,
        rank,
        evidence,
    }
}

/// Homomorphism and decomposition checks for a factorizable `r`.
fn fdt_report(d: &DiffAlgebra, psi: &[Matrix], r: &RMatrixData) -> Report {
    let n = d.dim();
    let mut report = Report::new("fdt");
    let dual = DiffAlgebra::new(
        diff_r_dual_product(d, r),
        psi.iter().map(Matrix::transpose).collect(),
        false,
    );
    let (src, dst) = (dual.associative(), d.associative());
    for (name, f) in [("r_plus", &r.r_plus), ("r_minus", &r.r_minus)] {
        let mut hom = Report::new("hom");
        check_hom_into(&src, &dst, f, &mut hom, "");
        report.absorb(name, hom);
        for (k, (der, eth)) in d.phi.iter().zip(psi).enumerate() {
            let res = &(der * f) - &(f * &eth.transpose());
            report.check(&format!("{name}/intertwines"), &[k], mat_residual(res));
        }
    }
    let stacked = Matrix::block2(
        &r.r_plus,
        &Matrix::zeros(n, n),
        &r.r_minus,
        &Matrix::zeros(n, n),
    );
    report.require("embedding_injective", stacked.rank() == n);
    for a in 0..n {
        let ea = basis_vec(n, a);
        let (p, m) = factor_with(r, &ea);
        report.check("decomposition", &[a], vec_sub(&vec_sub(&p, &m), &ea));
    }
    report
}

/// Classifies `r` over `(A, ·, Φ)` with coderivations `Ψ`; `form` selects the
/// coboundary coproduct used for the `CoboundaryOnly` test.
pub fn classify_diff_r(
    d: &DiffAlgebra,
    psi: &[Matrix],
    r: &RMatrixData,
    form: CoboundaryForm,
) -> Classification {
    let core = classify_diff_core(d, psi, r, form);
    let flipped = classify_diff_core(d, psi, &r.flip(), form);
    let tau_consistent = core.label.is_quasi_triangular() == flipped.label.is_quasi_triangular()
        && (core.label == Label::Factorizable) == (flipped.label == Label::Factorizable);
    let mut evidence = core.evidence;
    evidence.fact(&format!("form_{form}"), true);
    evidence.fact("solves_psi_aybe", core.solves);
    evidence.fact("s_l_invariant", core.s_inv);
    evidence.fact("antisymmetric", core.anti);
    evidence.fact("s_nondegenerate", core.rank == d.dim());
    evidence.fact("tau_consistent", tau_consistent);
    if core.label == Label::Factorizable {
        evidence.absorb("fdt", fdt_report(d, psi, r));
    }
    Classification {
        label: core.label,
        cbd: None,
        c_residual: None,
        a_residual: core.a,
        solves_yb: core.solves,
        s_invariant: core.s_inv,
        antisymmetric: core.anti,
        s_rank: core.rank,
        tau_consistent,
        evidence,
    }
}

/// `x = x₊ − x₋` for a factorizable differential r-matrix.
pub fn diff_factorize(
    d: &DiffAlgebra,
    psi: &[Matrix],
    r: &RMatrixData,
    x: &[Scalar],
) -> Result<(Vector, Vector)> {
    check_r_dim(&d.alg, r)?;
    if x.len() != d.dim() {
        return Err(Error::DimMismatch {
            expected: d.dim(),
            found: x.len(),
        });
    }
    let core = classify_diff_core(d, psi, r, CoboundaryForm::LeftLeft);
    if core.label != Label::Factorizable {
        return Err(Error::NotFactorizable(core.label.to_string()));
    }
    Ok(factor_with(r, x))
}

fn diff_double_unchecked(b: &DiffASIBialgebra) -> (DiffASIBialgebra, RMatrixData) {
    let n = b.dim();
    let d = &b.diff_alg;
    let c = &b.diff_coalg;
    let dual_product = dual_constants(&c.coproduct);
    let product = double_constants(
        d.product(),
        &dual_product,
        &Scalar::one(),
        right_matrix,
        left_matrix,
    );
    let mut names = d.alg.basis_names.clone();
    names.extend(d.alg.basis_names.iter().map(|s| format!("{s}*")));
    let phi = d
        .phi
        .iter()
        .zip(&c.psi)
        .map(|(der, eth)| Matrix::block_diag(der, &eth.transpose()))
        .collect();
    let psi: Vec<Matrix> = d
        .phi
        .iter()
        .zip(&c.psi)
        .map(|(der, eth)| Matrix::block_diag(eth, &der.transpose()))
        .collect();
    let commutative = d.commutative && c.cocommutative;
    let diff_alg = DiffAlgebra::new(product, phi, commutative).with_names(names);
    let r = canonical_r(n);
    let coproduct = coboundary_coproduct(&diff_alg.alg, r.r.matrix(), CoboundaryForm::LeftRight);
    let cocommutative = coproduct == coproduct.swap23();
    let double = DiffASIBialgebra {
        diff_alg,
        diff_coalg: DiffCoalgebra {
            coproduct,
            psi,
            cocommutative,
        },
    };
    (double, r)
}

/// The double `A ⊕ A*` with derivations `∂_k ⊕ ð_kᵀ`, coderivations
/// `ð_k ⊕ ∂_kᵀ` and `Δ_r(u) = (id⊗L(u) − R(u)⊗id)(r)` for the canonical `r`.
pub fn diff_drinfeld_double(
    b: &DiffASIBialgebra,
) -> Result<(DiffASIBialgebra, RMatrixData, Classification)> {
    let rep = check_diff_asi_bialgebra(b);
    if !rep.passed() {
        return Err(Error::InvalidBialgebra(summary(&rep)));
    }
    let (double, r) = diff_double_unchecked(b);
    let cls = classify_diff_r(
        &double.diff_alg,
        &double.diff_coalg.psi,
        &r,
        CoboundaryForm::LeftRight,
    );
    Ok((double, r, cls))
}

fn form_invariance_into(t: &Tensor3, f: &BilinearFormData, report: &mut Report) {
    let n = t.dim();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let ec = basis_vec(n, c);
                let ea = basis_vec(n, a);
                let lhs = f.eval(t.pair(a, b), &ec);
                let rhs = f.eval(&ea, t.pair(b, c));
                report.check("invariance", &[a, b, c], vec![lhs - rhs]);
            }
        }
    }
}

/// `∂̂ = B⁻¹∂ᵀB`, the adjoint of `∂` under `𝔅(u, v) = uᵀBv`.
pub fn adjoint_operator(f: &BilinearFormData, der: &Matrix) -> Result<Matrix> {
    let inv = f.b.inverse()?;
    Ok(&(&inv * &der.transpose()) * &f.b)
}

/// Adjoints of the derivations under a symmetric invariant nondegenerate form.
pub fn frobenius_tools(d: &DiffAlgebra, f: &BilinearFormData) -> Result<FrobeniusData> {
    if f.b.rows() != d.dim() || f.b.cols() != d.dim() {
        return Err(Error::DimMismatch {
            expected: d.dim(),
            found: f.b.rows(),
        });
    }
    if !f.is_nondegenerate() {
        return Err(Error::SingularMatrix);
    }
    let mut rep = Report::new("frobenius");
    rep.require("symmetric", f.is_symmetric());
    form_invariance_into(d.product(), f, &mut rep);
    if !rep.passed() {
        return Err(Error::NotInvariant(summary(&rep)));
    }
    let phi_hat = d
        .phi
        .iter()
        .map(|der| adjoint_operator(f, der))
        .collect::<Result<_>>()?;
    Ok(FrobeniusData {
        form: f.clone(),
        phi_hat,
    })
}

/// Adjointness against the operator intertwining `∂_k I_𝔅 = I_𝔅 ψ_kᵀ` for a
/// candidate family `psi`; with `p`, also `∂_kP = P∂_k ⇔ ∂_k r₊ = r₊∂̂_kᵀ`
/// for `r₊ = P·I_𝔅`.
pub fn dfof_check(
    d: &DiffAlgebra,
    f: &BilinearFormData,
    psi: &[Matrix],
    p: Option<&Matrix>,
) -> Result<Report> {
    let frob = frobenius_tools(d, f)?;
    let n = d.dim();
    if psi.len() != d.m() || !family_fits(psi, n) {
        return Err(Error::DimMismatch {
            expected: d.m(),
            found: psi.len(),
        });
    }
    let i_b = form_tensors(f)?.i_b;
    let mut report = Report::new("dfof");
    let mut adjoint = true;
    for (der, cand) in d.phi.iter().zip(psi) {
        for a in 0..n {
            for b in 0..n {
                let lhs = f.eval(&der.column(a), &basis_vec(n, b));
                let rhs = f.eval(&basis_vec(n, a), &cand.column(b));
                adjoint &= lhs == rhs;
            }
        }
    }
    let intertwine = d
        .phi
        .iter()
        .zip(psi)
        .all(|(der, cand)| der * &i_b == &i_b * &cand.transpose());
    report.fact("adjoint", adjoint);
    report.fact("intertwine", intertwine);
    report.require("adjoint_equivalence", adjoint == intertwine);
    for (k, (der, hat)) in d.phi.iter().zip(&frob.phi_hat).enumerate() {
        let res = &(der * &i_b) - &(&i_b * &hat.transpose());
        report.check("dfof_identity", &[k], mat_residual(res));
    }
    if let Some(p) = p {
        let r_plus = p * &i_b;
        let commutes = d.phi.iter().all(|der| der * p == p * der);
        let lifted = d
            .phi
            .iter()
            .zip(&frob.phi_hat)
            .all(|(der, hat)| der * &r_plus == &r_plus * &hat.transpose());
        report.fact("commutes", commutes);
        report.fact("r_plus_intertwine", lifted);
        report.require("commute_equivalence", commutes == lifted);
    }
    Ok(report)
}

/// Verifies a symmetric Rota-Baxter differential Frobenius algebra of weight
/// `lambda`: the differential algebra, the form, the Rota-Baxter identity,
/// compatibility `𝔅P + Pᵀ𝔅 + λ𝔅 = 0` and `∂_kP = P∂_k`.
pub fn check_rb_diff_frobenius(
    d: &DiffAlgebra,
    f: &BilinearFormData,
    p: &Matrix,
    lambda: &Scalar,
) -> Report {
    let mut report = Report::new("rb_diff_frobenius");
    let n = d.dim();
    if f.b.rows() != n || f.b.cols() != n || p.rows() != n || p.cols() != n {
        report.require("dimension", false);
        return report;
    }
    report.absorb("diff_algebra", check_diff_algebra(d));
    let mut form = Report::new("form");
    form.require("symmetric", f.is_symmetric());
    form.require("nondegenerate", f.is_nondegenerate());
    form_invariance_into(d.product(), f, &mut form);
    report.absorb("form", form);
    let rb = RotaBaxterData::new(p.clone(), lambda.clone());
    report.absorb("rb", check_rb_operator(&d.associative(), &rb));
    report.check("qrbp", &[], mat_residual(qrbp_residual(&f.b, p, lambda)));
    for (k, der) in d.phi.iter().enumerate() {
        report.check("commutes", &[k], mat_residual(&(der * p) - &(p * der)));
    }
    report
}

/// `r` with `r₊ = P·I_𝔅` and `Ψ = Φ̂`, classified: triangular for `λ = 0`,
/// factorizable otherwise.
pub fn rb_diff_to_r(
    d: &DiffAlgebra,
    f: &BilinearFormData,
    p: &Matrix,
    lambda: &Scalar,
) -> Result<(RMatrixData, Vec<Matrix>, Classification)> {
    let rep = check_rb_diff_frobenius(d, f, p, lambda);
    if !rep.passed() {
        return Err(Error::NotQuadraticRB(summary(&rep)));
    }
    let frob = frobenius_tools(d, f)?;
    let i_b = form_tensors(f)?.i_b;
    let r = RMatrixData::new(TwoTensor::from_r_plus(&(p * &i_b))?);
    let cls = classify_diff_r(d, &frob.phi_hat, &r, CoboundaryForm::LeftLeft);
    Ok((r, frob.phi_hat, cls))
}

/// `(𝔅, P) = (−λ(I_r⁻¹)ᵀ, −λr₊I_r⁻¹)` from a factorizable `r`; the report
/// confirms `Φ̂ = Ψ` and the Rota-Baxter differential Frobenius axioms.
pub fn diff_r_to_rb(
    d: &DiffAlgebra,
    psi: &[Matrix],
    r: &RMatrixData,
    lambda: &Scalar,
) -> Result<(RotaBaxterData, Report)> {
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    check_r_dim(&d.alg, r)?;
    let core = classify_diff_core(d, psi, r, CoboundaryForm::LeftLeft);
    if core.label != Label::Factorizable {
        return Err(Error::NotFactorizable(core.label.to_string()));
    }
    let rb = factorizable_to_qrb_unchecked(r, lambda);
    let f = rb.form.clone().expect("built with a form");
    let mut report = Report::new("diff_r_to_rb");
    let hats = d
        .phi
        .iter()
        .map(|der| adjoint_operator(&f, der))
        .collect::<Result<Vec<_>>>()?;
    report.require("psi_is_adjoint", hats.as_slice() == psi);
    report.absorb(
        "rb_diff_frobenius",
        check_rb_diff_frobenius(d, &f, &rb.p, lambda),
    );
    Ok((rb, report))
}

/// `[a, b] = ∂₁a·∂₂b − ∂₂a·∂₁b`.
fn induced_bracket(t: &Tensor3, d1: &Matrix, d2: &Matrix) -> Tensor3 {
    let n = t.dim();
    Tensor3::from_op(n, |a, b| {
        vec_sub(
            &op(t, &d1.column(a), &d2.column(b)),
            &op(t, &d2.column(a), &d1.column(b)),
        )
    })
}

/// `δ = (ð₁⊗ð₂ − ð₂⊗ð₁)Δ`.
pub fn induced_cobracket(coproduct: &Tensor3, e1: &Matrix, e2: &Matrix) -> Tensor3 {
    Tensor3::from_slices(coproduct.dim(), |k| {
        let d = coproduct.slice(k);
        &(&(e1 * &d) * &e2.transpose()) - &(&(e2 * &d) * &e1.transpose())
    })
}

fn require_pair(count: usize) -> Result<()> {
    if count != 2 {
        return Err(Error::DimMismatch {
            expected: 2,
            found: count,
        });
    }
    Ok(())
}

/// The Poisson algebra `(A, [ , ], ·)` of a commutative differential algebra
/// with two derivations.
pub fn induced_poisson_algebra(d: &DiffAlgebra) -> Result<AlgebraSpec> {
    require_pair(d.m())?;
    if !d.commutative {
        return Err(Error::NotCommutative(
            "differential algebra not flagged commutative".into(),
        ));
    }
    let mut alg = d.alg.clone();
    alg.bracket = induced_bracket(d.product(), &d.phi[0], &d.phi[1]);
    alg.commutative = true;
    Ok(alg)
}

/// `ð₂∂₁(a)·b = ð₁∂₂(a)·b` over all basis pairs.
pub fn vip_report(d: &DiffAlgebra, psi: &[Matrix]) -> Report {
    let mut report = Report::new("vip");
    if d.m() != 2 || psi.len() != 2 {
        report.require("derivation_count", false);
        return report;
    }
    let n = d.dim();
    let diff = &(&psi[1] * &d.phi[0]) - &(&psi[0] * &d.phi[1]);
    for a in 0..n {
        for b in 0..n {
            report.check(
                "vip",
                &[a, b],
                op(d.product(), &diff.column(a), &basis_vec(n, b)),
            );
        }
    }
    report
}

/// `(ð₂∂₁⊗id)Δ = (ð₁∂₂⊗id)Δ` on every basis vector.
pub fn vip1_report(b: &DiffASIBialgebra) -> Report {
    let mut report = Report::new("vip1");
    let (phi, psi) = (&b.diff_alg.phi, &b.diff_coalg.psi);
    if phi.len() != 2 || psi.len() != 2 {
        report.require("derivation_count", false);
        return report;
    }
    let diff = &(&psi[1] * &phi[0]) - &(&psi[0] * &phi[1]);
    for k in 0..b.dim() {
        report.check(
            "vip1",
            &[k],
            mat_residual(&diff * &b.diff_coalg.coproduct.slice(k)),
        );
    }
    report
}

/// Induces the Poisson bialgebra `(A, [ , ], ·, δ, Δ_r)` with
/// `δ = (ð₁⊗ð₂ − ð₂⊗ð₁)Δ_r`, classifies `r` on it, and checks both
/// commutative squares relating induction with the doubles.
pub fn induce_poisson_bialgebra(
    b: &DiffASIBialgebra,
    r: &RMatrixData,
) -> Result<(BialgebraSpec, Classification, Report)> {
    let d = &b.diff_alg;
    let c = &b.diff_coalg;
    require_pair(d.m())?;
    require_pair(c.psi.len())?;
    check_r_dim(&d.alg, r)?;
    if !d.commutative || !c.cocommutative {
        return Err(Error::NotCommutative(
            "commutative and cocommutative flags are required".into(),
        ));
    }
    let n = d.dim();
    let t = d.product();
    let actual_comm = (0..n).all(|i| (0..n).all(|j| t.pair(i, j) == t.pair(j, i)));
    let actual_cocomm = c.coproduct == c.coproduct.swap23();
    if !actual_comm || !actual_cocomm {
        return Err(Error::NotCommutative(
            "flagged structure fails (co)commutativity".into(),
        ));
    }
    let valid = check_diff_algebra(d);
    if !valid.passed() {
        return Err(Error::InvalidAlgebra(summary(&valid)));
    }
    let vip = vip_report(d, &c.psi);
    if !vip.passed() {
        return Err(Error::VipViolated(summary(&vip)));
    }

    let alg = induced_poisson_algebra(d)?;
    let coproduct = coboundary_coproduct(&alg, r.r.matrix(), CoboundaryForm::LeftLeft);
    let delta = induced_cobracket(&coproduct, &c.psi[0], &c.psi[1]);
    let pb = BialgebraSpec {
        alg,
        delta,
        coproduct,
    };
    let diff_cls = classify_diff_r(d, &c.psi, r, CoboundaryForm::LeftLeft);
    let cls = classify_r(&pb.alg, r);

    let mut diagrams = Report::new("induction");
    diagrams.absorb("", vip);
    diagrams.fact("form_left-left", true);
    diagrams.fact("coproduct_is_coboundary", c.coproduct == pb.coproduct);
    diagrams.fact(
        "delta_is_coboundary",
        pb.delta == coboundary_cobracket(&pb.alg, r.r.matrix()),
    );
    diagrams.fact(&format!("diff_label_{}", diff_cls.label), true);
    diagrams.fact(&format!("poisson_label_{}", cls.label), true);
    if diff_cls.label.is_quasi_triangular() {
        diagrams.absorb("poisson_bialgebra", check_poisson_bialgebra(&pb));
        diagrams.require("label_inherited", cls.label.satisfies(diff_cls.label));
    }

    let square_a = diff_cls.label == Label::Factorizable;
    diagrams.fact("diagram_a_applicable", square_a);
    if square_a {
        diagrams.absorb("diagram_a", image_square(d, &c.psi, r, &pb.alg)?);
    }

    let vip1 = vip1_report(b);
    let base_valid = check_diff_asi_bialgebra(b).passed();
    let square_b = vip1.passed() && base_valid;
    diagrams.absorb("", vip1);
    diagrams.fact("diagram_b_applicable", square_b);
    if square_b {
        diagrams.absorb("diagram_b", double_square(b, &pb.alg)?);
    }
    Ok((pb, cls, diagrams))
}

/// The induced algebra of `(A*, ·_r, Ψᵀ)` is `(A*, [ , ]_r, ·_r)`, and
/// `r₊, r₋` carry it into the induced Poisson algebra.
fn image_square(
    d: &DiffAlgebra,
    psi: &[Matrix],
    r: &RMatrixData,
    induced: &AlgebraSpec,
) -> Result<Report> {
    let mut report = Report::new("image");
    let dual = DiffAlgebra::new(
        diff_r_dual_product(d, r),
        psi.iter().map(Matrix::transpose).collect(),
        true,
    );
    let dual_induced = induced_poisson_algebra(&dual)?;
    let poisson_dual = r_dual_algebra(induced, r);
    report.require("dual_bracket", dual_induced.bracket == poisson_dual.bracket);
    report.require("dual_product", dual_induced.product == poisson_dual.product);
    let mut hom = Report::new("hom");
    check_hom_into(&dual_induced, induced, &r.r_plus, &mut hom, "r_plus/");
    check_hom_into(&dual_induced, induced, &r.r_minus, &mut hom, "r_minus/");
    report.absorb("", hom);
    Ok(report)
}

/// Inducing the differential double agrees with doubling the induced
/// Poisson bialgebra of `b`, including the canonical `r` and `(δ_r, Δ_r)`.
fn double_square(b: &DiffASIBialgebra, induced: &AlgebraSpec) -> Result<Report> {
    let c = &b.diff_coalg;
    let mut report = Report::new("double");
    let base = BialgebraSpec {
        alg: induced.clone(),
        delta: induced_cobracket(&c.coproduct, &c.psi[0], &c.psi[1]),
        coproduct: c.coproduct.clone(),
    };
    let base_report = check_poisson_bialgebra(&base);
    let base_ok = base_report.passed();
    report.absorb("base", base_report);
    if !base_ok {
        return Ok(report);
    }
    let (double, r) = diff_double_unchecked(b);
    let pd = double_algebra(&base);
    let pr = canonical_r(b.dim());
    report.absorb(
        "double_vip",
        vip_report(&double.diff_alg, &double.diff_coalg.psi),
    );
    let dd = &double.diff_alg;
    let induced_double = induced_bracket(&dd.alg.product, &dd.phi[0], &dd.phi[1]);
    report.require("bracket", induced_double == pd.bracket);
    report.require("product", dd.alg.product == pd.product);
    report.require("r", pr == r);
    let (delta_r, cop_r) = coboundary_maps(&pd, &pr)?;
    let dpsi = &double.diff_coalg.psi;
    report.require("coproduct", cop_r == double.diff_coalg.coproduct);
    report.require(
        "cobracket",
        delta_r == induced_cobracket(&double.diff_coalg.coproduct, &dpsi[0], &dpsi[1]),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linear::{frac, int};

    #[test]
    fn zero_derivations_pass() {
        for d in [
            fixtures::upper_triangular_diff(),
            fixtures::dual_numbers_diff(),
        ] {
            let zero = DiffAlgebra::new(
                d.alg.product.clone(),
                vec![Matrix::zeros(d.dim(), d.dim())],
                d.commutative,
            );
            assert!(check_diff_algebra(&zero).passed());
        }
    }

    #[test]
    fn partial_derivatives_break_leibniz_on_truncation() {
        // ∂(x·x²) = 0 while ∂x·x² + x·∂(x²) = 3x².
        let rep = check_diff_algebra(&fixtures::truncated_partials());
        assert!(rep.failed("leibniz"));
        assert!(rep.holds("commutation"));
        let euler = check_diff_algebra(&fixtures::truncated_euler());
        assert!(euler.passed());
    }

    #[test]
    fn noncommuting_derivations_located() {
        let rep = check_diff_algebra(&fixtures::cubic_noncommuting());
        assert!(rep.failed("commutation"));
        let v = rep
            .violations()
            .iter()
            .find(|v| v.identity == "commutation")
            .unwrap();
        assert_eq!(v.indices, vec![0, 1]);
        // [d/dx, x·d/dx] = d/dx as matrices.
        let d = fixtures::cubic_noncommuting();
        assert_eq!(d.phi[0].commutator(&d.phi[1]), d.phi[0]);
    }

    #[test]
    fn dual_of_diff_algebra_is_diff_coalgebra() {
        let d = fixtures::truncated_euler();
        let c = DiffCoalgebra {
            coproduct: crate::bialgebra::coproduct_from_dual(&d.alg.product),
            psi: d.phi.iter().map(Matrix::transpose).collect(),
            cocommutative: true,
        };
        assert!(check_diff_coalgebra(&c).passed());
        let mut bad = c.clone();
        bad.psi[1][(2, 2)] = int(7);
        let rep = check_diff_coalgebra(&bad);
        assert!(rep.failed("coderivation"));
        assert_eq!(rep.first_violation().unwrap().indices[0], 1);
    }

    #[test]
    fn admissibility_examples() {
        let d = fixtures::truncated_euler();
        let minus: Vec<Matrix> = d.phi.iter().map(|m| -m).collect();
        let b = DiffASIBialgebra::trivial(d.clone(), minus);
        assert!(admissibility_audit(&b).passed());
        let zero = vec![Matrix::zeros(6, 6); 2];
        let z = DiffAlgebra::new(d.alg.product.clone(), zero.clone(), true);
        assert!(admissibility_audit(&DiffASIBialgebra::trivial(z, zero)).passed());

        // With ð = ∂ the first residual reduces to −2·a·∂(b).
        let same = DiffASIBialgebra::trivial(d.clone(), d.phi.clone());
        let rep = admissibility_audit(&same);
        let n = d.dim();
        let mut expected = 0;
        for k in 0..2 {
            for a in 0..n {
                for bb in 0..n {
                    let v: Vec<Scalar> = op(&d.alg.product, &basis_vec(n, a), &d.phi[k].column(bb))
                        .iter()
                        .map(|x| x * int(-2))
                        .collect();
                    if v.iter().any(|x| !x.is_zero()) {
                        expected += 1;
                        let found = rep
                            .violations()
                            .iter()
                            .find(|w| w.identity == "qadm1" && w.indices == vec![k, a, bb]);
                        if let Some(w) = found {
                            assert_eq!(w.residual, v);
                        }
                    }
                }
            }
        }
        assert_eq!(rep.counts()["qadm1"], expected);
    }

    #[test]
    fn trivial_diff_asi_and_mutation() {
        let d = fixtures::upper_triangular_diff();
        let d0 = DiffAlgebra::new(d.alg.product.clone(), vec![Matrix::zeros(3, 3)], false);
        let zero = DiffASIBialgebra::trivial(d0, vec![Matrix::zeros(3, 3)]);
        assert!(check_diff_asi_bialgebra(&zero).passed());
        let (double, _, _) = diff_drinfeld_double(&fixtures::upper_triangular_asi()).unwrap();
        assert!(check_diff_asi_bialgebra(&double).passed());
        let mut bad = double.clone();
        let v = bad.diff_coalg.coproduct.get(0, 0, 3).clone();
        bad.diff_coalg.coproduct.set(0, 0, 3, v + int(1));
        let rep = check_diff_asi_bialgebra(&bad);
        assert!(rep.failed("asi1") || rep.failed("asi2"));
    }

    #[test]
    fn double_is_factorizable() {
        for b in fixtures::diff_asi_fixtures() {
            let (double, r, cls) = diff_drinfeld_double(&b).unwrap();
            assert_eq!(
                cls.label,
                Label::Factorizable,
                "{:?}",
                cls.evidence.failing_identities()
            );
            assert!(check_diff_asi_bialgebra(&double).passed());
            assert!(psi_admissible_aybe(&double.diff_alg, &double.diff_coalg.psi, &r).passed());
            commutation_into(&double.diff_alg.phi, &mut Report::new("c"));
        }
        let zero = DiffASIBialgebra::trivial(
            DiffAlgebra::new(Tensor3::zeros(1), vec![Matrix::zeros(1, 1)], true),
            vec![Matrix::zeros(1, 1)],
        );
        let (double, _, cls) = diff_drinfeld_double(&zero).unwrap();
        assert_eq!(double.dim(), 2);
        assert!(double.diff_alg.phi[0].is_zero());
        assert_eq!(cls.label, Label::Factorizable);
    }

    #[test]
    fn zero_r_is_triangular() {
        let d = fixtures::truncated_euler();
        let psi: Vec<Matrix> = d.phi.iter().map(|m| -m).collect();
        let r = RMatrixData::new(TwoTensor::zeros(6));
        assert!(psi_admissible_aybe(&d, &psi, &r).passed());
        assert_eq!(
            classify_diff_r(&d, &psi, &r, CoboundaryForm::LeftLeft).label,
            Label::Triangular
        );
    }

    #[test]
    fn frobenius_adjoints() {
        let d = DiffAlgebra::new(
            Tensor3::zeros(2),
            vec![Matrix::from_i64(&[&[1, 2], &[2, 5]])],
            true,
        );
        let f = BilinearFormData::new(Matrix::identity(2));
        let fr = frobenius_tools(&d, &f).unwrap();
        assert_eq!(fr.phi_hat[0], d.phi[0].transpose());
        let f = BilinearFormData::new(Matrix::from_i64(&[&[2, 1], &[1, 3]]));
        let d = DiffAlgebra::new(
            Tensor3::zeros(2),
            vec![Matrix::from_i64(&[&[1, 4], &[-2, 3]])],
            true,
        );
        let fr = frobenius_tools(&d, &f).unwrap();
        let back = frobenius_tools(
            &DiffAlgebra::new(Tensor3::zeros(2), fr.phi_hat.clone(), true),
            &f,
        )
        .unwrap();
        assert_eq!(back.phi_hat, d.phi);
        let rep = dfof_check(&d, &f, &fr.phi_hat, Some(&Matrix::identity(2))).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.get_fact("adjoint"), Some(true));
        let singular = BilinearFormData::new(Matrix::from_i64(&[&[1, 1], &[1, 1]]));
        assert_eq!(frobenius_tools(&d, &singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn rb_round_trip_and_weight_zero() {
        let b = fixtures::dual_numbers_asi();
        let (double, r, _) = diff_drinfeld_double(&b).unwrap();
        let lambda = int(-1);
        let d = &double.diff_alg;
        let psi = &double.diff_coalg.psi;
        let (rb, rep) = diff_r_to_rb(d, psi, &r, &lambda).unwrap();
        assert!(rep.passed(), "{:?}", rep.failing_identities());
        let f = rb.form.clone().unwrap();
        let (r2, hats, cls) = rb_diff_to_r(d, &f, &rb.p, &lambda).unwrap();
        assert_eq!(r2, r);
        assert_eq!(&hats, psi);
        assert_eq!(cls.label, Label::Factorizable);

        let (d0, f0, p0) = fixtures::weight_zero_rb_diff();
        let (_, _, cls) = rb_diff_to_r(&d0, &f0, &p0, &int(0)).unwrap();
        assert_eq!(cls.label, Label::Triangular);
        assert_eq!(
            diff_r_to_rb(d, psi, &r, &int(0)).unwrap_err(),
            Error::ZeroWeight
        );
        assert!(matches!(
            diff_r_to_rb(
                d,
                psi,
                &RMatrixData::new(TwoTensor::zeros(d.dim())),
                &frac(1, 2)
            ),
            Err(Error::NotFactorizable(_))
        ));
    }

    #[test]
    fn induced_bracket_examples() {
        let e = fixtures::truncated_euler();
        let alg = induced_poisson_algebra(&e).unwrap();
        assert!(crate::poisson::check_poisson(&alg).passed());
        // [x, y] = x·y for Euler derivations.
        assert_eq!(alg.bracket.pair(1, 2), basis_vec(6, 4).as_slice());
        let prop = DiffAlgebra::new(
            e.alg.product.clone(),
            vec![e.phi[0].clone(), e.phi[0].scale(&int(3))],
            true,
        );
        assert!(induced_poisson_algebra(&prop).unwrap().bracket.is_zero());
        // Partial derivatives give [x, y] = 1 but the result is not Poisson.
        let p = induced_poisson_algebra(&fixtures::truncated_partials()).unwrap();
        assert_eq!(p.bracket.pair(1, 2), basis_vec(6, 0).as_slice());
        assert!(!crate::poisson::check_poisson(&p).passed());
    }

    #[test]
    fn induction_errors() {
        let d = fixtures::truncated_partials();
        let minus: Vec<Matrix> = d.phi.iter().map(|m| -m).collect();
        let b = DiffASIBialgebra::trivial(d, minus);
        let r = RMatrixData::new(TwoTensor::zeros(6));
        assert!(matches!(
            induce_poisson_bialgebra(&b, &r),
            Err(Error::InvalidAlgebra(_))
        ));
        let e = fixtures::truncated_euler();
        let bad_psi = vec![Matrix::identity(6), Matrix::zeros(6, 6)];
        let b = DiffASIBialgebra::trivial(e.clone(), bad_psi);
        assert!(matches!(
            induce_poisson_bialgebra(&b, &r),
            Err(Error::VipViolated(_))
        ));
        let mut nc = DiffASIBialgebra::trivial(e, vec![Matrix::zeros(6, 6); 2]);
        nc.diff_alg.commutative = false;
        assert!(matches!(
            induce_poisson_bialgebra(&nc, &r),
            Err(Error::NotCommutative(_))
        ));
    }

    #[test]
    fn induction_on_euler_double() {
        let b = fixtures::truncated_euler_asi();
        let (double, r, _) = diff_drinfeld_double(&b).unwrap();
        let (pb, cls, diagrams) = induce_poisson_bialgebra(&double, &r).unwrap();
        assert_eq!(cls.label, Label::Factorizable);
        assert!(check_poisson_bialgebra(&pb).passed());
        assert!(diagrams.passed(), "{:?}", diagrams.failing_identities());
        assert_eq!(diagrams.get_fact("diagram_a_applicable"), Some(true));
        let (_, cls, diagrams) =
            induce_poisson_bialgebra(&b, &RMatrixData::new(TwoTensor::zeros(6))).unwrap();
        assert_eq!(cls.label, Label::Triangular);
        assert!(diagrams.passed(), "{:?}", diagrams.failing_identities());
        assert_eq!(diagrams.get_fact("diagram_b_applicable"), Some(true));
    }
}
