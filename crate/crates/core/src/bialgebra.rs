//! Poisson bialgebras, coboundary structures and r-matrices.
//!
//! Coproduct-shaped tensors store `δ(e_k) = Σ delta[k][i][j] e_i⊗e_j`, so the
//! dual algebra on `A*` has constants `c*[i][j][k] = delta[k][i][j]`.
//! A 2-tensor acted on by `F⊗G` becomes the matrix `F·r·Gᵀ`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linear::{basis_vec, vec_sub, Matrix, Scalar, Tensor3, TwoTensor, Vector};
use crate::poisson::{
    check_poisson, check_poisson_into, left_matrix, require_poisson, summary, AlgebraSpec,
    BilinearFormData,
};
use crate::report::Report;

/// Constants of the dual operation from a coproduct-shaped tensor.
pub fn dual_constants(co: &Tensor3) -> Tensor3 {
    co.permuted(|i, j, k| (k, i, j))
}

/// Coproduct-shaped tensor from constants of an operation on the dual space.
pub fn coproduct_from_dual(c: &Tensor3) -> Tensor3 {
    c.permuted(|k, i, j| (i, j, k))
}

/// A Poisson algebra with a cobracket `δ` and a coproduct `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraSpec {
    pub alg: AlgebraSpec,
    pub delta: Tensor3,
    pub coproduct: Tensor3,
}

impl BialgebraSpec {
    pub fn new(alg: AlgebraSpec, delta: Tensor3, coproduct: Tensor3) -> Result<Self> {
        for t in [&delta, &coproduct] {
            if t.dim() != alg.dim() {
                return Err(Error::DimMismatch {
                    expected: alg.dim(),
                    found: t.dim(),
                });
            }
        }
        Ok(BialgebraSpec {
            alg,
            delta,
            coproduct,
        })
    }

    /// `δ = Δ = 0`.
    pub fn trivial(alg: AlgebraSpec) -> Self {
        let n = alg.dim();
        BialgebraSpec {
            alg,
            delta: Tensor3::zeros(n),
            coproduct: Tensor3::zeros(n),
        }
    }

    /// Coboundary structure `(δ_r, Δ_r)`.
    pub fn coboundary(alg: AlgebraSpec, r: &TwoTensor) -> Result<Self> {
        let (delta, coproduct) = coboundary_maps(&alg, &RMatrixData::new(r.clone()))?;
        Ok(BialgebraSpec {
            alg,
            delta,
            coproduct,
        })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// `(A*, [ , ]_{A*}, ·_{A*})`.
    pub fn dual_algebra(&self) -> AlgebraSpec {
        AlgebraSpec {
            bracket: dual_constants(&self.delta),
            product: dual_constants(&self.coproduct),
            basis_names: self
                .alg
                .basis_names
                .iter()
                .map(|s| format!("{s}*"))
                .collect(),
            commutative: true,
        }
    }

    /// `δ(x)` as a 2-tensor matrix.
    pub fn cobracket_of(&self, x: &[Scalar]) -> Matrix {
        self.delta.slice_combination(x)
    }

    /// `Δ(x)` as a 2-tensor matrix.
    pub fn coproduct_of(&self, x: &[Scalar]) -> Matrix {
        self.coproduct.slice_combination(x)
    }
}

pub(crate) fn mat_residual(m: Matrix) -> Vector {
    m.entries().to_vec()
}

/// Verifies both Poisson algebras and the four compatibility identities.
pub fn check_poisson_bialgebra(b: &BialgebraSpec) -> Report {
    let mut report = Report::new("poisson_bialgebra");
    let n = b.dim();
    check_poisson_into(&b.alg, &mut report, "");
    let mut dual = Report::new("dual");
    check_poisson_into(&b.dual_algebra(), &mut dual, "");
    report.absorb("dual", dual);

    let a = &b.alg;
    let ads: Vec<Matrix> = (0..n).map(|i| a.ad_basis(i)).collect();
    let ls: Vec<Matrix> = (0..n).map(|i| a.left_basis(i)).collect();
    let rs: Vec<Matrix> = (0..n).map(|i| a.right_basis(i)).collect();
    let es: Vec<Matrix> = (0..n).map(|i| b.delta.slice(i)).collect();
    let ds: Vec<Matrix> = (0..n).map(|i| b.coproduct.slice(i)).collect();
    for i in 0..n {
        for j in 0..n {
            // δ([a,b]) = (ad(a)⊗1 + 1⊗ad(a))δ(b) − (ad(b)⊗1 + 1⊗ad(b))δ(a)
            let lhs = b.cobracket_of(a.bracket.pair(i, j));
            let rhs = &(&(&ads[i] * &es[j]) + &(&es[j] * &ads[i].transpose()))
                - &(&(&ads[j] * &es[i]) + &(&es[i] * &ads[j].transpose()));
            report.check("lie_cocycle", &[i, j], mat_residual(&lhs - &rhs));

            // Δ(ab) = (L(a)⊗1)Δ(b) + (1⊗R(b))Δ(a)
            let lhs = b.coproduct_of(a.product.pair(i, j));
            let rhs = &(&ls[i] * &ds[j]) + &(&ds[i] * &rs[j].transpose());
            report.check("infinitesimal", &[i, j], mat_residual(&lhs - &rhs));

            // δ(ab) = (L(a)⊗1)δ(b) + (L(b)⊗1)δ(a) + (1⊗ad(a))Δ(b) + (1⊗ad(b))Δ(a)
            let lhs = b.cobracket_of(a.product.pair(i, j));
            let rhs = &(&(&ls[i] * &es[j]) + &(&ls[j] * &es[i]))
                + &(&(&ds[j] * &ads[i].transpose()) + &(&ds[i] * &ads[j].transpose()));
            report.check("compat_product", &[i, j], mat_residual(&lhs - &rhs));

            // Δ([a,b]) = (ad(a)⊗1 + 1⊗ad(a))Δ(b) + (L(b)⊗1 − 1⊗L(b))δ(a)
            let lhs = b.coproduct_of(a.bracket.pair(i, j));
            let rhs = &(&(&ads[i] * &ds[j]) + &(&ds[j] * &ads[i].transpose()))
                + &(&(&ls[j] * &es[i]) - &(&es[i] * &ls[j].transpose()));
            report.check("compat_bracket", &[i, j], mat_residual(&lhs - &rhs));
        }
    }
    report
}

/// `[a, b]_φ = φ[φ⁻¹a, φ⁻¹b]` and likewise for the product.
pub fn transport_algebra(a: &AlgebraSpec, phi: &Matrix) -> Result<AlgebraSpec> {
    let n = a.dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(Error::DimMismatch {
            expected: n,
            found: phi.rows(),
        });
    }
    let inv = phi.inverse()?;
    let cols: Vec<Vector> = (0..n).map(|i| inv.column(i)).collect();
    let op = |t: &Tensor3| {
        Tensor3::from_op(n, |i, j| {
            phi.apply(&crate::linear::contract_bilinear(t, &cols[i], &cols[j]).expect("dim"))
        })
    };
    Ok(AlgebraSpec {
        bracket: op(&a.bracket),
        product: op(&a.product),
        basis_names: a.basis_names.clone(),
        commutative: a.commutative,
    })
}

/// Transport of a Poisson bialgebra along `φ: A → B`, with the dual side
/// carried by `(φ*)⁻¹`.
pub fn transport_isomorphism(b: &BialgebraSpec, phi: &Matrix) -> Result<BialgebraSpec> {
    let alg = transport_algebra(&b.alg, phi)?;
    let psi = phi.transpose().inverse()?;
    let dual = transport_algebra(&b.dual_algebra(), &psi)?;
    Ok(BialgebraSpec {
        alg,
        delta: coproduct_from_dual(&dual.bracket),
        coproduct: coproduct_from_dual(&dual.product),
    })
}

/// An r-matrix together with its attached maps `A* → A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrixData {
    pub r: TwoTensor,
    pub r_plus: Matrix,
    pub r_minus: Matrix,
    pub i_r: Matrix,
    pub s_plus: Matrix,
}

impl RMatrixData {
    pub fn new(r: TwoTensor) -> Self {
        let r_plus = r.r_plus();
        let r_minus = r.r_minus();
        let i_r = &r_plus - &r_minus;
        let s_plus = i_r.scale(&Scalar::new(1.into(), 2.into()));
        RMatrixData {
            r,
            r_plus,
            r_minus,
            i_r,
            s_plus,
        }
    }

    pub fn from_matrix(m: Matrix) -> Result<Self> {
        Ok(RMatrixData::new(TwoTensor::new(m)?))
    }

    pub fn dim(&self) -> usize {
        self.r.dim()
    }

    /// `τ(r)`.
    pub fn flip(&self) -> Self {
        RMatrixData::new(self.r.flip())
    }

    pub fn symmetric_part(&self) -> Matrix {
        self.r.symmetric_part().into_matrix()
    }
}

/// Which left/right operators build the coboundary coproduct.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoboundaryForm {
    /// `Δ_r(a) = (id⊗L(a) − L(a)⊗id)(r)`
    LeftLeft,
    /// `Δ_r(a) = (id⊗L(a) − R(a)⊗id)(r)`
    LeftRight,
}

impl fmt::Display for CoboundaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoboundaryForm::LeftLeft => "left-left",
            CoboundaryForm::LeftRight => "left-right",
        })
    }
}

pub(crate) fn coboundary_cobracket(a: &AlgebraSpec, r: &Matrix) -> Tensor3 {
    Tensor3::from_slices(a.dim(), |k| {
        let ad = a.ad_basis(k);
        &(&ad * r) + &(r * &ad.transpose())
    })
}

pub fn coboundary_coproduct(a: &AlgebraSpec, r: &Matrix, form: CoboundaryForm) -> Tensor3 {
    Tensor3::from_slices(a.dim(), |k| {
        let l = a.left_basis(k);
        let first = match form {
            CoboundaryForm::LeftLeft => l.clone(),
            CoboundaryForm::LeftRight => a.right_basis(k),
        };
        &(r * &l.transpose()) - &(&first * r)
    })
}

/// `(δ_r, Δ_r)` on a Poisson algebra.
pub fn coboundary_maps(a: &AlgebraSpec, r: &RMatrixData) -> Result<(Tensor3, Tensor3)> {
    require_poisson(a)?;
    check_r_dim(a, r)?;
    let m = r.r.matrix();
    Ok((
        coboundary_cobracket(a, m),
        coboundary_coproduct(a, m, CoboundaryForm::LeftLeft),
    ))
}

pub(crate) fn check_r_dim(a: &AlgebraSpec, r: &RMatrixData) -> Result<()> {
    if r.dim() != a.dim() {
        return Err(Error::DimMismatch {
            expected: a.dim(),
            found: r.dim(),
        });
    }
    Ok(())
}

/// `X[a][b][c] = Σ_{i,k} r[i][b] r[k][c] t[i][k][a]` (the `r₁₂ ∘ r₁₃` pattern).
fn term_12_13(r: &Matrix, t: &Tensor3) -> Tensor3 {
    let n = t.dim();
    // m[i][c][a] = Σ_k r[k][c] t[i][k][a]
    let mut m = Tensor3::zeros(n);
    for ((i, k, a), v) in t.nonzero() {
        for c in 0..n {
            let rk = &r[(k, c)];
            if !rk.is_zero() {
                m.add_at(i, c, a, &(rk * v));
            }
        }
    }
    let mut out = Tensor3::zeros(n);
    for ((i, c, a), v) in m.nonzero() {
        for b in 0..n {
            let ri = &r[(i, b)];
            if !ri.is_zero() {
                out.add_at(a, b, c, &(ri * v));
            }
        }
    }
    out
}

/// `X[a][b][c] = Σ_{j,l} r[a][j] r[b][l] t[j][l][c]` (the `r₁₃ ∘ r₂₃` pattern).
fn term_13_23(r: &Matrix, t: &Tensor3) -> Tensor3 {
    let n = t.dim();
    // m[j][b][c] = Σ_l r[b][l] t[j][l][c]
    let mut m = Tensor3::zeros(n);
    for ((j, l, c), v) in t.nonzero() {
        for b in 0..n {
            let rb = &r[(b, l)];
            if !rb.is_zero() {
                m.add_at(j, b, c, &(rb * v));
            }
        }
    }
    let mut out = Tensor3::zeros(n);
    for ((j, b, c), v) in m.nonzero() {
        for a in 0..n {
            let ra = &r[(a, j)];
            if !ra.is_zero() {
                out.add_at(a, b, c, &(ra * v));
            }
        }
    }
    out
}

/// `X[a][b][c] = Σ_{j,k} r[a][j] r[k][c] t[j][k][b]` (the `r₁₂ ∘ r₂₃` pattern).
fn term_12_23(r: &Matrix, t: &Tensor3) -> Tensor3 {
    let n = t.dim();
    // m[j][c][b] = Σ_k r[k][c] t[j][k][b]
    let mut m = Tensor3::zeros(n);
    for ((j, k, b), v) in t.nonzero() {
        for c in 0..n {
            let rk = &r[(k, c)];
            if !rk.is_zero() {
                m.add_at(j, c, b, &(rk * v));
            }
        }
    }
    let mut out = Tensor3::zeros(n);
    for ((j, c, b), v) in m.nonzero() {
        for a in 0..n {
            let ra = &r[(a, j)];
            if !ra.is_zero() {
                out.add_at(a, b, c, &(ra * v));
            }
        }
    }
    out
}

/// `C(r) = [r₁₂, r₁₃] + [r₁₃, r₂₃] + [r₁₂, r₂₃]`.
pub fn cyb_residual(bracket: &Tensor3, r: &Matrix) -> Tensor3 {
    term_12_13(r, bracket)
        .add(&term_13_23(r, bracket))
        .add(&term_12_23(r, bracket))
}

/// `A(r) = r₁₂·r₁₃ + r₁₃·r₂₃ − r₂₃·r₁₂`.
pub fn ayb_residual(product: &Tensor3, r: &Matrix) -> Tensor3 {
    term_12_13(r, product)
        .add(&term_13_23(r, product))
        .sub(&term_12_23(r, &product.swap12()))
}

/// `(C(r), A(r))` as coefficient cubes of `A⊗A⊗A`.
pub fn yb_residuals(a: &AlgebraSpec, r: &RMatrixData) -> (Tensor3, Tensor3) {
    let m = r.r.matrix();
    (cyb_residual(&a.bracket, m), ayb_residual(&a.product, m))
}

fn push_invariance(a: &AlgebraSpec, t: &Matrix, report: &mut Report, ad_name: &str, l_name: &str) {
    for i in 0..a.dim() {
        let ad = a.ad_basis(i);
        let l = a.left_basis(i);
        report.check(
            ad_name,
            &[i],
            mat_residual(&(&ad * t) + &(t * &ad.transpose())),
        );
        report.check(
            l_name,
            &[i],
            mat_residual(&(&l * t) - &(t * &l.transpose())),
        );
    }
}

pub(crate) fn invariance_holds(a: &AlgebraSpec, t: &Matrix) -> bool {
    let mut rep = Report::new("invariance");
    push_invariance(a, t, &mut rep, "ad", "l");
    rep.passed()
}

/// `(ad, L)`-invariance of `t`; for symmetric `t` also the two operator
/// reformulations, with fact `characterizations_agree`.
pub fn adl_invariance_audit(a: &AlgebraSpec, t: &TwoTensor) -> Report {
    let mut report = Report::new("adl_invariance");
    let n = a.dim();
    if t.dim() != n {
        report.require("dimension", false);
        return report;
    }
    let m = t.matrix();
    let mut direct = Report::new("direct");
    push_invariance(a, m, &mut direct, "ad_invariant", "l_invariant");
    let direct_ok = direct.passed();
    report.absorb("", direct);
    report.fact("invariant", direct_ok);
    if !t.is_symmetric() {
        return report;
    }
    // S₊ of a symmetric tensor is its matrix.
    let s_plus = m;
    let mut ops = Report::new("operator");
    let mut pairs = Report::new("pairwise");
    for i in 0..n {
        let ad = a.ad_basis(i);
        let l = a.left_basis(i);
        ops.check(
            "adi1",
            &[i],
            mat_residual(&(s_plus * &ad.transpose()) + &(&ad * s_plus)),
        );
        ops.check(
            "adi2",
            &[i],
            mat_residual(&(s_plus * &l.transpose()) - &(&l * s_plus)),
        );
    }
    for x in 0..n {
        for y in 0..n {
            let sx = s_plus.column(x);
            let sy = s_plus.column(y);
            let ex = basis_vec(n, x);
            let ey = basis_vec(n, y);
            let v1 = crate::linear::vec_add(
                &a.ad(&sx).transpose().apply(&ey),
                &a.ad(&sy).transpose().apply(&ex),
            );
            pairs.check("sadi1", &[x, y], v1);
            let v2 = vec_sub(
                &a.left(&sx).transpose().apply(&ey),
                &a.left(&sy).transpose().apply(&ex),
            );
            pairs.check("sadi2", &[x, y], v2);
        }
    }
    let ops_ok = ops.passed();
    let pairs_ok = pairs.passed();
    report.absorb("", ops);
    report.absorb("", pairs);
    report.fact("operator_form", ops_ok);
    report.fact("pairwise_form", pairs_ok);
    report.fact(
        "characterizations_agree",
        direct_ok == ops_ok && ops_ok == pairs_ok,
    );
    report
}

/// Classification labels, weakest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    NotSolution,
    CoboundaryOnly,
    QuasiTriangular,
    Triangular,
    Factorizable,
}

impl Label {
    pub fn is_quasi_triangular(self) -> bool {
        self >= Label::QuasiTriangular
    }

    /// `true` when every property named by `other` also holds for `self`.
    pub fn satisfies(self, other: Label) -> bool {
        match other {
            Label::NotSolution => true,
            Label::CoboundaryOnly => self >= Label::CoboundaryOnly,
            Label::QuasiTriangular => self.is_quasi_triangular(),
            Label::Triangular | Label::Factorizable => self == other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::NotSolution => "NotSolution",
            Label::CoboundaryOnly => "CoboundaryOnly",
            Label::QuasiTriangular => "QuasiTriangular",
            Label::Triangular => "Triangular",
            Label::Factorizable => "Factorizable",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The verdict on an r-matrix with all evidence retained.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub label: Label,
    /// The five coboundary conditions (Poisson classification only).
    pub cbd: Option<[bool; 5]>,
    /// Lie residual `C(r)` (Poisson classification only).
    pub c_residual: Option<Tensor3>,
    /// Associative residual `A(r)`.
    pub a_residual: Tensor3,
    pub solves_yb: bool,
    pub s_invariant: bool,
    pub antisymmetric: bool,
    pub s_rank: usize,
    /// Quasi-triangularity and factorizability agree between `r` and `τ(r)`.
    pub tau_consistent: bool,
    pub evidence: Report,
}

/// The five conditions equivalent to `(δ_r, Δ_r)` being a Poisson bialgebra.
pub fn cbd_conditions(a: &AlgebraSpec, r: &RMatrixData) -> ([bool; 5], Report) {
    let n = a.dim();
    let s = r.symmetric_part();
    let (c, am) = yb_residuals(a, r);
    let mut rep = Report::new("cbd");
    for i in 0..n {
        let ad = a.ad_basis(i);
        let l = a.left_basis(i);
        rep.check(
            "cbd1",
            &[i],
            mat_residual(&(&ad * &s) + &(&s * &ad.transpose())),
        );
        rep.check(
            "cbd2",
            &[i],
            mat_residual(&(&l * &s) - &(&s * &l.transpose())),
        );
        let t3 = c
            .apply_slot(0, &ad)
            .add(&c.apply_slot(1, &ad))
            .add(&c.apply_slot(2, &ad));
        rep.check("cbd3", &[i], t3.entries().to_vec());
        let t4 = am.apply_slot(0, &l).sub(&am.apply_slot(2, &l));
        rep.check("cbd4", &[i], t4.entries().to_vec());
        let t5 = am
            .apply_slot(0, &ad)
            .sub(&c.apply_slot(1, &l).sub(&c.apply_slot(2, &l)));
        rep.check("cbd5", &[i], t5.entries().to_vec());
    }
    let flags = [
        rep.holds("cbd1"),
        rep.holds("cbd2"),
        rep.holds("cbd3"),
        rep.holds("cbd4"),
        rep.holds("cbd5"),
    ];
    let flags = if n == 0 { [true; 5] } else { flags };
    (flags, rep)
}

struct Core {
    label: Label,
    cbd: [bool; 5],
    c: Tensor3,
    a: Tensor3,
    solves: bool,
    s_inv: bool,
    anti: bool,
    rank: usize,
    cbd_report: Report,
}

fn classify_core(a: &AlgebraSpec, r: &RMatrixData) -> Core {
    let (c, am) = yb_residuals(a, r);
    let solves = c.is_zero() && am.is_zero();
    let s = r.symmetric_part();
    let s_inv = invariance_holds(a, &s);
    let anti = r.r.is_antisymmetric();
    let rank = s.rank();
    let (cbd, cbd_report) = cbd_conditions(a, r);
    let label = if solves && s_inv {
        if anti {
            Label::Triangular
        } else if rank == a.dim() {
            Label::Factorizable
        } else {
            Label::QuasiTriangular
        }
    } else if cbd.iter().all(|&f| f) {
        Label::CoboundaryOnly
    } else {
        Label::NotSolution
    };
    Core {
        label,
        cbd,
        c,
        a: am,
        solves,
        s_inv,
        anti,
        rank,
        cbd_report,
    }
}

/// Classifies `r` on a Poisson algebra, strongest applicable label first.
pub fn classify_r(a: &AlgebraSpec, r: &RMatrixData) -> Classification {
    let core = classify_core(a, r);
    let flipped = classify_core(a, &r.flip());
    let tau_consistent = core.label.is_quasi_triangular() == flipped.label.is_quasi_triangular()
        && (core.label == Label::Factorizable) == (flipped.label == Label::Factorizable);
    let mut evidence = Report::new("classify");
    evidence.absorb("", core.cbd_report);
    evidence.fact("solves_pybe", core.solves);
    evidence.fact("s_invariant", core.s_inv);
    evidence.fact("antisymmetric", core.anti);
    evidence.fact("s_nondegenerate", core.rank == a.dim());
    evidence.fact("tau_consistent", tau_consistent);
    for (i, f) in core.cbd.iter().enumerate() {
        evidence.fact(&format!("cbd{}", i + 1), *f);
    }
    Classification {
        label: core.label,
        cbd: Some(core.cbd),
        c_residual: Some(core.c),
        a_residual: core.a,
        solves_yb: core.solves,
        s_invariant: core.s_inv,
        antisymmetric: core.anti,
        s_rank: core.rank,
        tau_consistent,
        evidence,
    }
}

/// `f(op_src(e_i, e_j)) = op_dst(f e_i, f e_j)` for both operations.
pub(crate) fn check_hom_into(
    src: &AlgebraSpec,
    dst: &AlgebraSpec,
    f: &Matrix,
    report: &mut Report,
    prefix: &str,
) {
    let n = src.dim();
    let images: Vec<Vector> = (0..n).map(|i| f.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(src.bracket.pair(i, j));
            let rhs = dst.bracket(&images[i], &images[j]);
            report.check(
                &format!("{prefix}bracket_hom"),
                &[i, j],
                vec_sub(&lhs, &rhs),
            );
            let lhs = f.apply(src.product.pair(i, j));
            let rhs = dst.mul(&images[i], &images[j]);
            report.check(
                &format!("{prefix}product_hom"),
                &[i, j],
                vec_sub(&lhs, &rhs),
            );
        }
    }
}

/// `[x*, y*]` and `x*·y*` built from `r` through `(first, second)`:
/// `op(x, y) = s·M(first·x)ᵀy + M(second·y)ᵀx` with `M` from `t`.
fn dual_op(
    t: &Tensor3,
    first: &Matrix,
    second: &Matrix,
    s: &Scalar,
    mult: impl Fn(&Tensor3, &[Scalar]) -> Matrix,
) -> Tensor3 {
    let n = t.dim();
    Tensor3::from_op(n, |i, j| {
        let ex = basis_vec(n, i);
        let ey = basis_vec(n, j);
        let a = mult(t, &first.apply(&ex)).transpose().apply(&ey);
        let b = mult(t, &second.apply(&ey)).transpose().apply(&ex);
        crate::linear::vec_add(&crate::linear::vec_scale(s, &a), &b)
    })
}

/// The induced structure `(A*, [ , ]_r, ·_r)`.
pub fn r_dual_algebra(a: &AlgebraSpec, r: &RMatrixData) -> AlgebraSpec {
    let minus = -Scalar::one();
    let bracket = dual_op(&a.bracket, &r.r_plus, &r.r_minus, &minus, left_matrix);
    let product = dual_op(
        &a.product,
        &r.r_plus,
        &r.r_minus,
        &Scalar::one(),
        left_matrix,
    );
    AlgebraSpec {
        bracket,
        product,
        basis_names: a.basis_names.iter().map(|s| format!("{s}*")).collect(),
        commutative: true,
    }
}

/// Builds `(A*, [ , ]_r, ·_r)` and checks that it is Poisson with `r₊, r₋`
/// homomorphisms exactly when `r` solves the Poisson Yang-Baxter equation.
pub fn dual_products_and_homs(a: &AlgebraSpec, r: &RMatrixData) -> Result<(AlgebraSpec, Report)> {
    check_r_dim(a, r)?;
    let s = r.symmetric_part();
    let mut inv = Report::new("s_invariance");
    push_invariance(a, &s, &mut inv, "ad_invariant", "l_invariant");
    if !inv.passed() {
        return Err(Error::NotInvariant(summary(&inv)));
    }
    let dual = r_dual_algebra(a, r);
    let mut report = Report::new("dual_homs");
    let dual_rep = check_poisson(&dual);
    let dual_ok = dual_rep.passed();
    report.absorb("dual", dual_rep);
    let mut plus = Report::new("r_plus");
    check_hom_into(&dual, a, &r.r_plus, &mut plus, "");
    let mut minus = Report::new("r_minus");
    check_hom_into(&dual, a, &r.r_minus, &mut minus, "");
    let (plus_ok, minus_ok) = (plus.passed(), minus.passed());
    report.absorb("r_plus", plus);
    report.absorb("r_minus", minus);
    let (c, am) = yb_residuals(a, r);
    let pybe = c.is_zero() && am.is_zero();
    report.fact("dual_poisson", dual_ok);
    report.fact("r_plus_hom", plus_ok);
    report.fact("r_minus_hom", minus_ok);
    report.fact("pybe", pybe);
    report.require("equivalence", pybe == (dual_ok && plus_ok && minus_ok));
    Ok((dual, report))
}

/// The four equivalent statements about `r`: PYBE for `r`, for `τ(r)`, the
/// `r₊` identities and the `r₋` identities. Facts record each; `agree` holds
/// when the four booleans coincide.
pub fn randtr_conditions(a: &AlgebraSpec, r: &RMatrixData) -> Report {
    let n = a.dim();
    let mut report = Report::new("randtr");
    let (c, am) = yb_residuals(a, r);
    let pybe = c.is_zero() && am.is_zero();
    let (ct, at) = yb_residuals(a, &r.flip());
    let pybe_tau = ct.is_zero() && at.is_zero();
    let minus = -Scalar::one();
    let one = Scalar::one();
    let br_plus = dual_op(&a.bracket, &r.r_plus, &r.r_minus, &minus, left_matrix);
    let pr_plus = dual_op(&a.product, &r.r_plus, &r.r_minus, &one, left_matrix);
    let br_minus = dual_op(&a.bracket, &r.r_minus, &r.r_plus, &minus, left_matrix);
    let pr_minus = dual_op(&a.product, &r.r_minus, &r.r_plus, &one, left_matrix);
    let mut plus = Report::new("plus");
    let mut minus_rep = Report::new("minus");
    for x in 0..n {
        for y in 0..n {
            for (rep, map, br, pr, names) in [
                (&mut plus, &r.r_plus, &br_plus, &pr_plus, ("bb1", "bb2")),
                (
                    &mut minus_rep,
                    &r.r_minus,
                    &br_minus,
                    &pr_minus,
                    ("bb1_minus", "bb2_minus"),
                ),
            ] {
                let (ux, uy) = (map.column(x), map.column(y));
                let lhs = a.bracket(&ux, &uy);
                let rhs = map.apply(br.pair(x, y));
                rep.check(names.0, &[x, y], vec_sub(&lhs, &rhs));
                let lhs = a.mul(&ux, &uy);
                let rhs = map.apply(pr.pair(x, y));
                rep.check(names.1, &[x, y], vec_sub(&lhs, &rhs));
            }
        }
    }
    let (plus_ok, minus_ok) = (plus.passed() || n == 0, minus_rep.passed() || n == 0);
    report.fact("pybe", pybe);
    report.fact("pybe_tau", pybe_tau);
    report.fact("plus_identities", plus_ok);
    report.fact("minus_identities", minus_ok);
    report.fact("flip_c", ct == c.swap13().neg());
    report.fact("flip_a", at == am.swap13());
    report.require(
        "agree",
        pybe == pybe_tau && pybe == plus_ok && pybe == minus_ok,
    );
    report
}

/// Checks the two weighted identities for `P = r₊∘I_𝔅⁻¹` on a quadratic
/// Poisson algebra; `equivalence` requires them to hold exactly when `r`
/// solves the Poisson Yang-Baxter equation.
pub fn modified_rb_identities(
    a: &AlgebraSpec,
    b: &BilinearFormData,
    r: &RMatrixData,
) -> Result<Report> {
    check_r_dim(a, r)?;
    let q = crate::poisson::check_quadratic(a, b);
    if q.failed("form_dimension") {
        return Err(Error::DimMismatch {
            expected: a.dim(),
            found: b.b.rows(),
        });
    }
    if !b.is_nondegenerate() {
        return Err(Error::SingularMatrix);
    }
    if !q.passed() {
        return Err(Error::NotInvariant(summary(&q)));
    }
    let n = a.dim();
    // I_𝔅⁻¹ has matrix 𝔅ᵀ.
    let ib_inv = b.b.transpose();
    let p = &r.r_plus * &ib_inv;
    let j = &r.i_r * &ib_inv;
    let mut identities = Report::new("identities");
    for x in 0..n {
        for y in 0..n {
            let (ex, ey) = (basis_vec(n, x), basis_vec(n, y));
            let (px, py, jy) = (p.column(x), p.column(y), j.column(y));
            for (name, t) in [("rb_bracket", &a.bracket), ("rb_product", &a.product)] {
                let op = |u: &[Scalar], v: &[Scalar]| {
                    crate::linear::contract_bilinear(t, u, v).expect("dim")
                };
                let lhs = op(&px, &py);
                let inner = vec_sub(
                    &crate::linear::vec_add(&op(&px, &ey), &op(&ex, &py)),
                    &op(&ex, &jy),
                );
                identities.check(name, &[x, y], vec_sub(&lhs, &p.apply(&inner)));
            }
        }
    }
    let (c, am) = yb_residuals(a, r);
    let pybe = c.is_zero() && am.is_zero();
    let ident_ok = identities.passed();
    let mut report = Report::new("modified_rb");
    report.absorb("", identities);
    report.fact("identities", ident_ok);
    report.fact("pybe", pybe);
    report.require("equivalence", ident_ok == pybe);
    Ok(report)
}

/// `x = x₊ − x₋` with `x₊ = r₊I_r⁻¹x` and `x₋ = r₋I_r⁻¹x`.
pub fn factorize(a: &AlgebraSpec, r: &RMatrixData, x: &[Scalar]) -> Result<(Vector, Vector)> {
    check_r_dim(a, r)?;
    if x.len() != a.dim() {
        return Err(Error::DimMismatch {
            expected: a.dim(),
            found: x.len(),
        });
    }
    let cls = classify_r(a, r);
    if cls.label != Label::Factorizable {
        return Err(Error::NotFactorizable(cls.label.to_string()));
    }
    Ok(factor_with(r, x))
}

pub(crate) fn factor_with(r: &RMatrixData, x: &[Scalar]) -> (Vector, Vector) {
    let inv = r.i_r.inverse().expect("factorizable");
    let pre = inv.apply(x);
    (r.r_plus.apply(&pre), r.r_minus.apply(&pre))
}

/// Constants of an operation on `A ⊕ A*`:
/// `((a,x),(b,y)) ↦ (t(a,b) + s·F*(x)ᵀb + G*(y)ᵀa, t*(x,y) + s·F(a)ᵀy + G(b)ᵀx)`
/// where `F`, `G` are the operator builders `first`, `second`.
pub(crate) fn double_constants(
    t: &Tensor3,
    td: &Tensor3,
    s: &Scalar,
    first: fn(&Tensor3, &[Scalar]) -> Matrix,
    second: fn(&Tensor3, &[Scalar]) -> Matrix,
) -> Tensor3 {
    let n = t.dim();
    let e = |i: usize| basis_vec(n, i);
    Tensor3::from_op(2 * n, |i, j| {
        let mut out = vec![Scalar::zero(); 2 * n];
        let (lo, hi) = out.split_at_mut(n);
        match (i < n, j < n) {
            (true, true) => lo.clone_from_slice(t.pair(i, j)),
            (false, false) => hi.clone_from_slice(td.pair(i - n, j - n)),
            (true, false) => {
                // a = e_i, y = e_{j-n}*
                let y = e(j - n);
                let a = e(i);
                lo.clone_from_slice(&second(td, &y).transpose().apply(&a));
                hi.clone_from_slice(&crate::linear::vec_scale(
                    s,
                    &first(t, &a).transpose().apply(&y),
                ));
            }
            (false, true) => {
                // x = e_{i-n}*, b = e_j
                let x = e(i - n);
                let b = e(j);
                lo.clone_from_slice(&crate::linear::vec_scale(
                    s,
                    &first(td, &x).transpose().apply(&b),
                ));
                hi.clone_from_slice(&second(t, &b).transpose().apply(&x));
            }
        }
        out
    })
}

/// `Σ e_i ⊗ e_i*` on `A ⊕ A*`.
pub fn canonical_r(n: usize) -> RMatrixData {
    let m = Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i < n && j == n + i {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    RMatrixData::new(TwoTensor::new(m).expect("square"))
}

/// The block swap `(x*, a) ↦ (a, x*)`.
pub fn block_swap(n: usize) -> Matrix {
    Matrix::block2(
        &Matrix::zeros(n, n),
        &Matrix::identity(n),
        &Matrix::identity(n),
        &Matrix::zeros(n, n),
    )
}

/// The Drinfeld classical double on `A ⊕ A*` with its canonical r-matrix.
pub fn drinfeld_double(b: &BialgebraSpec) -> Result<(AlgebraSpec, RMatrixData, Classification)> {
    let rep = check_poisson_bialgebra(b);
    if !rep.passed() {
        return Err(Error::InvalidBialgebra(summary(&rep)));
    }
    let double = double_algebra(b);
    let r = canonical_r(b.dim());
    let cls = classify_r(&double, &r);
    Ok((double, r, cls))
}

pub(crate) fn double_algebra(b: &BialgebraSpec) -> AlgebraSpec {
    let dual = b.dual_algebra();
    let minus = -Scalar::one();
    let bracket = double_constants(
        &b.alg.bracket,
        &dual.bracket,
        &minus,
        left_matrix,
        left_matrix,
    );
    let product = double_constants(
        &b.alg.product,
        &dual.product,
        &Scalar::one(),
        left_matrix,
        left_matrix,
    );
    let mut names = b.alg.basis_names.clone();
    names.extend(dual.basis_names);
    AlgebraSpec {
        bracket,
        product,
        basis_names: names,
        commutative: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;

    fn nonabelian2() -> AlgebraSpec {
        AlgebraSpec::from_entries(2, &[(0, 1, 1, int(1)), (1, 0, 1, int(-1))], &[])
    }

    #[test]
    fn trivial_bialgebra_passes() {
        for a in [nonabelian2(), AlgebraSpec::zero(3)] {
            assert!(check_poisson_bialgebra(&BialgebraSpec::trivial(a)).passed());
        }
    }

    #[test]
    fn coboundary_examples() {
        let a = nonabelian2();
        let zero = RMatrixData::new(TwoTensor::zeros(2));
        let (d, dd) = coboundary_maps(&a, &zero).unwrap();
        assert!(d.is_zero() && dd.is_zero());
        let ab = AlgebraSpec::zero(2);
        let r = RMatrixData::new(TwoTensor::from_i64(&[&[1, 2], &[3, 4]]));
        let (d, dd) = coboundary_maps(&ab, &r).unwrap();
        assert!(d.is_zero() && dd.is_zero());

        // r = e1⊗e2: δ(e1) = e1⊗[e1,e2] + [e1,e1]⊗e2 = e1⊗e2
        let r = RMatrixData::new(TwoTensor::from_i64(&[&[0, 1], &[0, 0]]));
        let (d, _) = coboundary_maps(&a, &r).unwrap();
        let e1 = basis_vec(2, 0);
        let e2 = basis_vec(2, 1);
        let mut oracle = Matrix::zeros(2, 2);
        // (id⊗ad(e1) + ad(e1)⊗id)(e1⊗e2), term by term
        let right = a.bracket(&e1, &e2);
        let left = a.bracket(&e1, &e1);
        for i in 0..2 {
            for j in 0..2 {
                oracle[(i, j)] = &e1[i] * &right[j] + &left[i] * &e2[j];
            }
        }
        assert_eq!(d.slice(0), oracle);
        assert_eq!(oracle, Matrix::from_i64(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn residuals_zero_cases() {
        let a = nonabelian2();
        let (c, am) = yb_residuals(&a, &RMatrixData::new(TwoTensor::zeros(2)));
        assert!(c.is_zero() && am.is_zero());
        let (c, am) = yb_residuals(
            &AlgebraSpec::zero(3),
            &RMatrixData::new(TwoTensor::from_i64(&[&[1, 2, 0], &[0, 1, 5], &[1, 1, 1]])),
        );
        assert!(c.is_zero() && am.is_zero());
    }

    /// Direct expansion of `C(r)` and `A(r)` over pairs of simple tensors.
    fn naive_residuals(a: &AlgebraSpec, r: &Matrix) -> (Tensor3, Tensor3) {
        let n = a.dim();
        let mut c = Tensor3::zeros(n);
        let mut am = Tensor3::zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let w = &r[(i, j)] * &r[(k, l)];
                        if w.is_zero() {
                            continue;
                        }
                        let (ei, ej, ek, el) = (
                            basis_vec(n, i),
                            basis_vec(n, j),
                            basis_vec(n, k),
                            basis_vec(n, l),
                        );
                        // [r12, r13] = [e_i, e_k] ⊗ e_j ⊗ e_l
                        let v = a.bracket(&ei, &ek);
                        let p = a.mul(&ei, &ek);
                        for x in 0..n {
                            c.add_at(x, j, l, &(&w * &v[x]));
                            am.add_at(x, j, l, &(&w * &p[x]));
                        }
                        // [r13, r23] = e_i ⊗ e_k ⊗ [e_j, e_l]
                        let v = a.bracket(&ej, &el);
                        let p = a.mul(&ej, &el);
                        for x in 0..n {
                            c.add_at(i, k, x, &(&w * &v[x]));
                            am.add_at(i, k, x, &(&w * &p[x]));
                        }
                        // [r12, r23] = e_i ⊗ [e_j, e_k] ⊗ e_l
                        let v = a.bracket(&ej, &ek);
                        for x in 0..n {
                            c.add_at(i, x, l, &(&w * &v[x]));
                        }
                        // r23·r12 = e_k ⊗ e_i·e_l ⊗ e_j
                        let p = a.mul(&ei, &el);
                        for x in 0..n {
                            am.add_at(k, x, j, &(-(&w * &p[x])));
                        }
                    }
                }
            }
        }
        (c, am)
    }

    fn heisenberg_like() -> AlgebraSpec {
        // [e1,e2] = e3 with e1·e1 = e3 (a nilpotent Poisson algebra)
        AlgebraSpec::from_entries(
            3,
            &[(0, 1, 2, int(1)), (1, 0, 2, int(-1))],
            &[(0, 0, 2, int(1))],
        )
    }

    #[test]
    fn residuals_match_naive_expansion() {
        let a = heisenberg_like();
        assert!(check_poisson(&a).passed());
        let r = Matrix::from_i64(&[&[1, 2, -1], &[0, 3, 1], &[2, -1, 1]]);
        let (c, am) = yb_residuals(&a, &RMatrixData::from_matrix(r.clone()).unwrap());
        assert_eq!((c, am), naive_residuals(&a, &r));
    }

    #[test]
    fn flip_identities() {
        let a = heisenberg_like();
        let r = RMatrixData::new(TwoTensor::from_i64(&[&[1, 0, 2], &[1, 1, 0], &[0, -3, 1]]));
        let (c, am) = yb_residuals(&a, &r);
        let (ct, at) = yb_residuals(&a, &r.flip());
        assert_eq!(ct, c.swap13().neg());
        assert_eq!(at, am.swap13());
        assert!(!c.is_zero() || !am.is_zero());
    }

    #[test]
    fn zero_r_is_triangular() {
        let a = nonabelian2();
        let cls = classify_r(&a, &RMatrixData::new(TwoTensor::zeros(2)));
        assert_eq!(cls.label, Label::Triangular);
        assert!(cls.tau_consistent);
        assert_eq!(cls.cbd, Some([true; 5]));
    }

    #[test]
    fn double_is_factorizable() {
        let b = BialgebraSpec::trivial(AlgebraSpec::zero(1));
        let (d, r, cls) = drinfeld_double(&b).unwrap();
        assert_eq!(d.dim(), 2);
        assert!(d.bracket.is_zero() && d.product.is_zero());
        assert_eq!(r.r, TwoTensor::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(cls.label, Label::Factorizable);
        assert_eq!(r.i_r, block_swap(1));

        let (d, r, cls) = drinfeld_double(&BialgebraSpec::trivial(nonabelian2())).unwrap();
        assert!(check_poisson(&d).passed());
        assert_eq!(cls.label, Label::Factorizable, "{:?}", cls.evidence);
        assert_eq!(r.i_r, block_swap(2));
        assert!(check_poisson_bialgebra(&BialgebraSpec::coboundary(d, &r.r).unwrap()).passed());
    }

    #[test]
    fn factorize_on_trivial_double() {
        let n = 2;
        let (d, r, _) = drinfeld_double(&BialgebraSpec::trivial(nonabelian2())).unwrap();
        // x = (b, y*) → x₊ = (0, y*), x₋ = −(b, 0)
        let x = crate::linear::vec_from_i64(&[3, -1, 2, 5]);
        let (xp, xm) = factorize(&d, &r, &x).unwrap();
        assert_eq!(xp, crate::linear::vec_from_i64(&[0, 0, 2, 5]));
        assert_eq!(xm, crate::linear::vec_from_i64(&[-3, 1, 0, 0]));
        assert_eq!(vec_sub(&xp, &xm), x);
        let (z1, z2) = factorize(&d, &r, &crate::linear::zero_vec(2 * n)).unwrap();
        assert!(crate::linear::is_zero_vec(&z1) && crate::linear::is_zero_vec(&z2));
        let zero = RMatrixData::new(TwoTensor::zeros(4));
        assert!(matches!(
            factorize(&d, &zero, &x),
            Err(Error::NotFactorizable(_))
        ));
    }

    #[test]
    fn transport_scaling() {
        let a = nonabelian2();
        let r = RMatrixData::new(TwoTensor::from_i64(&[&[0, 1], &[-1, 0]]));
        let b = BialgebraSpec::coboundary(a, &r.r).unwrap();
        assert!(check_poisson_bialgebra(&b).passed());
        assert_eq!(transport_isomorphism(&b, &Matrix::identity(2)).unwrap(), b);
        let t = transport_isomorphism(&b, &Matrix::scalar_identity(2, &int(2))).unwrap();
        let half = Scalar::new(1.into(), 2.into());
        assert_eq!(t.alg.bracket, b.alg.bracket.scale(&half));
        assert_eq!(t.delta, b.delta.scale(&int(2)));
        assert!(check_poisson_bialgebra(&t).passed());
        assert!(transport_isomorphism(&b, &Matrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn corrupted_coproduct_located() {
        let e = AlgebraSpec::from_entries(1, &[], &[(0, 0, 0, int(1))]);
        let (d, r, _) = drinfeld_double(&BialgebraSpec::trivial(e)).unwrap();
        let mut b = BialgebraSpec::coboundary(d, &r.r).unwrap();
        assert!(check_poisson_bialgebra(&b).passed());
        b.coproduct.add_at(0, 0, 0, &int(1));
        let rep = check_poisson_bialgebra(&b);
        assert!(!rep.passed());
        assert!(
            rep.failed("infinitesimal"),
            "{:?}",
            rep.failing_identities()
        );
    }

    #[test]
    fn invariance_audit_examples() {
        let a = AlgebraSpec::zero(2);
        let rep = adl_invariance_audit(&a, &TwoTensor::from_i64(&[&[1, 2], &[2, 0]]));
        assert!(rep.passed());
        assert_eq!(rep.get_fact("characterizations_agree"), Some(true));
        let a = nonabelian2();
        let rep = adl_invariance_audit(&a, &TwoTensor::from_i64(&[&[1, 0], &[0, 0]]));
        assert!(!rep.passed());
        assert_eq!(rep.get_fact("characterizations_agree"), Some(true));
    }

    #[test]
    fn dual_homs_zero_and_double() {
        let a = nonabelian2();
        let (dual, rep) =
            dual_products_and_homs(&a, &RMatrixData::new(TwoTensor::zeros(2))).unwrap();
        assert!(dual.bracket.is_zero() && dual.product.is_zero());
        assert!(rep.passed());
        let (d, r, _) = drinfeld_double(&BialgebraSpec::trivial(a)).unwrap();
        let (_, rep) = dual_products_and_homs(&d, &r).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let bad = RMatrixData::new(TwoTensor::from_i64(&[&[1, 0], &[0, 0]]));
        assert!(matches!(
            dual_products_and_homs(&nonabelian2(), &bad),
            Err(Error::NotInvariant(_))
        ));
    }

    #[test]
    fn randtr_on_double() {
        let (d, r, _) = drinfeld_double(&BialgebraSpec::trivial(nonabelian2())).unwrap();
        let rep = randtr_conditions(&d, &r);
        assert!(rep.passed());
        assert_eq!(rep.get_fact("pybe"), Some(true));
        assert_eq!(rep.get_fact("plus_identities"), Some(true));
    }

    #[test]
    fn modified_rb_zero_r() {
        let a = AlgebraSpec::zero(2);
        let b = BilinearFormData::new(Matrix::identity(2));
        let rep = modified_rb_identities(&a, &b, &RMatrixData::new(TwoTensor::zeros(2))).unwrap();
        assert!(rep.passed());
    }

    #[test]
    fn label_satisfies() {
        assert!(Label::Factorizable.satisfies(Label::QuasiTriangular));
        assert!(!Label::QuasiTriangular.satisfies(Label::Factorizable));
        assert!(Label::Triangular.satisfies(Label::Triangular));
        assert!(!Label::Factorizable.satisfies(Label::Triangular));
        assert!(Label::NotSolution.satisfies(Label::NotSolution));
    }
}
