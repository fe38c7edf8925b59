//! Poisson algebras given by structure constants, their representations,
//! semidirect products and invariant bilinear forms.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linear::{
    axpy, basis_vec, contract_bilinear, dot, vec_sub, zero_vec, Matrix, Scalar, Tensor3, Vector,
};
use crate::report::Report;

/// A bracket and a product on `K^n` by structure constants.
///
/// The constants are stored raw; whether they form a Poisson algebra is
/// decided by [`check_poisson`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub bracket: Tensor3,
    pub product: Tensor3,
    pub basis_names: Vec<String>,
    /// Declares the product commutative (used by the differential checks).
    pub commutative: bool,
}

impl AlgebraSpec {
    pub fn new(bracket: Tensor3, product: Tensor3) -> Result<Self> {
        if bracket.dim() != product.dim() {
            return Err(Error::DimMismatch {
                expected: bracket.dim(),
                found: product.dim(),
            });
        }
        let n = bracket.dim();
        Ok(AlgebraSpec {
            bracket,
            product,
            basis_names: default_names(n),
            commutative: true,
        })
    }

    pub fn zero(n: usize) -> Self {
        AlgebraSpec::new(Tensor3::zeros(n), Tensor3::zeros(n)).expect("same dimension")
    }

    /// Builds constants from sparse `(i, j, k, value)` entries.
    pub fn from_entries(
        n: usize,
        bracket: &[(usize, usize, usize, Scalar)],
        product: &[(usize, usize, usize, Scalar)],
    ) -> Self {
        let mut a = AlgebraSpec::zero(n);
        for (i, j, k, v) in bracket {
            a.bracket.add_at(*i, *j, *k, v);
        }
        for (i, j, k, v) in product {
            a.product.add_at(*i, *j, *k, v);
        }
        a
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim());
        self.basis_names = names;
        self
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        contract_bilinear(&self.bracket, u, v).expect("vector dimension")
    }

    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        contract_bilinear(&self.product, u, v).expect("vector dimension")
    }

    /// `ad(x)`, the matrix of `v ↦ [x, v]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        left_matrix(&self.bracket, x)
    }

    /// `L(x)`, the matrix of `v ↦ x·v`.
    pub fn left(&self, x: &[Scalar]) -> Matrix {
        left_matrix(&self.product, x)
    }

    /// `R(x)`, the matrix of `v ↦ v·x`.
    pub fn right(&self, x: &[Scalar]) -> Matrix {
        right_matrix(&self.product, x)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        self.ad(&basis_vec(self.dim(), i))
    }

    pub fn left_basis(&self, i: usize) -> Matrix {
        self.left(&basis_vec(self.dim(), i))
    }

    pub fn right_basis(&self, i: usize) -> Matrix {
        self.right(&basis_vec(self.dim(), i))
    }

    /// Direct sum `A ⊕ B` with basis `(A, B)`.
    pub fn direct_sum(&self, other: &AlgebraSpec) -> AlgebraSpec {
        let (n, m) = (self.dim(), other.dim());
        let embed = |t1: &Tensor3, t2: &Tensor3| {
            Tensor3::from_fn(n + m, |i, j, k| match (i < n, j < n, k < n) {
                (true, true, true) => t1.get(i, j, k).clone(),
                (false, false, false) => t2.get(i - n, j - n, k - n).clone(),
                _ => Scalar::zero(),
            })
        };
        let mut names = self.basis_names.clone();
        names.extend(other.basis_names.iter().cloned());
        AlgebraSpec {
            bracket: embed(&self.bracket, &other.bracket),
            product: embed(&self.product, &other.product),
            basis_names: names,
            commutative: self.commutative && other.commutative,
        }
    }
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// Matrix of `v ↦ op(x, v)`.
pub(crate) fn left_matrix(t: &Tensor3, x: &[Scalar]) -> Matrix {
    let n = t.dim();
    assert_eq!(x.len(), n);
    let mut m = Matrix::zeros(n, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for j in 0..n {
            for k in 0..n {
                let c = t.get(i, j, k);
                if !c.is_zero() {
                    m[(k, j)] += xi * c;
                }
            }
        }
    }
    m
}

/// Matrix of `v ↦ op(v, x)`.
pub(crate) fn right_matrix(t: &Tensor3, x: &[Scalar]) -> Matrix {
    let n = t.dim();
    assert_eq!(x.len(), n);
    let mut m = Matrix::zeros(n, n);
    for (i, xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        for j in 0..n {
            for k in 0..n {
                let c = t.get(j, i, k);
                if !c.is_zero() {
                    m[(k, j)] += xi * c;
                }
            }
        }
    }
    m
}

/// `op(op(x, y), z)` on basis elements through the constants.
fn op_left_nested(t: &Tensor3, outer: &Tensor3, a: usize, b: usize, c: usize) -> Vector {
    // outer(inner(e_a, e_b), e_c)
    let n = t.dim();
    let mut out = zero_vec(n);
    for (m, coef) in t.pair(a, b).iter().enumerate() {
        axpy(&mut out, coef, outer.pair(m, c));
    }
    out
}

fn op_right_nested(t: &Tensor3, outer: &Tensor3, a: usize, b: usize, c: usize) -> Vector {
    // outer(e_a, inner(e_b, e_c))
    let n = t.dim();
    let mut out = zero_vec(n);
    for (m, coef) in t.pair(b, c).iter().enumerate() {
        axpy(&mut out, coef, outer.pair(a, m));
    }
    out
}

/// Lie algebra axioms of a bracket: antisymmetry and Jacobi.
pub(crate) fn check_lie(t: &Tensor3, report: &mut Report, prefix: &str) {
    let n = t.dim();
    for i in 0..n {
        for j in i..n {
            let mut r = t.pair(i, j).to_vec();
            axpy(&mut r, &Scalar::one(), t.pair(j, i));
            report.check(&format!("{prefix}antisymmetry"), &[i, j], r);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut r = op_right_nested(t, t, a, b, c);
                let one = Scalar::one();
                axpy(&mut r, &one, &op_right_nested(t, t, b, c, a));
                axpy(&mut r, &one, &op_right_nested(t, t, c, a, b));
                report.check(&format!("{prefix}jacobi"), &[a, b, c], r);
            }
        }
    }
}

/// Associativity of a product, and commutativity when requested.
pub(crate) fn check_assoc(t: &Tensor3, commutative: bool, report: &mut Report, prefix: &str) {
    let n = t.dim();
    if commutative {
        for i in 0..n {
            for j in i + 1..n {
                report.check(
                    &format!("{prefix}commutativity"),
                    &[i, j],
                    vec_sub(t.pair(i, j), t.pair(j, i)),
                );
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let r = vec_sub(
                    &op_left_nested(t, t, a, b, c),
                    &op_right_nested(t, t, a, b, c),
                );
                report.check(&format!("{prefix}associativity"), &[a, b, c], r);
            }
        }
    }
}

/// Checks every Poisson algebra axiom over all basis triples.
pub fn check_poisson(a: &AlgebraSpec) -> Report {
    let mut report = Report::new("poisson");
    check_poisson_into(a, &mut report, "");
    report
}

pub(crate) fn check_poisson_into(a: &AlgebraSpec, report: &mut Report, prefix: &str) {
    let n = a.dim();
    check_lie(&a.bracket, report, prefix);
    check_assoc(&a.product, true, report, prefix);
    // [a, b·c] − [a,b]·c − b·[a,c]
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut r = op_right_nested(&a.product, &a.bracket, x, y, z);
                let minus = -Scalar::one();
                axpy(
                    &mut r,
                    &minus,
                    &op_left_nested(&a.bracket, &a.product, x, y, z),
                );
                // b·[a,c]
                let mut t = zero_vec(n);
                for (m, coef) in a.bracket.pair(x, z).iter().enumerate() {
                    axpy(&mut t, coef, a.product.pair(y, m));
                }
                axpy(&mut r, &minus, &t);
                report.check(&format!("{prefix}leibniz"), &[x, y, z], r);
            }
        }
    }
}

pub(crate) fn require_poisson(a: &AlgebraSpec) -> Result<()> {
    let rep = check_poisson(a);
    if rep.passed() {
        Ok(())
    } else {
        Err(Error::InvalidAlgebra(summary(&rep)))
    }
}

pub(crate) fn summary(rep: &Report) -> String {
    match rep.first_violation() {
        Some(v) => format!(
            "{} violation(s); first: {} at {:?}",
            rep.total_violations(),
            v.identity,
            v.indices
        ),
        None => "no violations".to_string(),
    }
}

/// `(ad(x), L(x), R(x))`.
pub fn multiplication_operators(a: &AlgebraSpec, x: &[Scalar]) -> Result<(Matrix, Matrix, Matrix)> {
    if x.len() != a.dim() {
        return Err(Error::DimMismatch {
            expected: a.dim(),
            found: x.len(),
        });
    }
    Ok((a.ad(x), a.left(x), a.right(x)))
}

/// A pair of actions `ρ, μ: A → End(V)` given on the basis of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dim_v: usize,
    pub rho: Vec<Matrix>,
    pub mu: Vec<Matrix>,
}

impl Representation {
    pub fn zero(n: usize, dim_v: usize) -> Self {
        Representation {
            dim_v,
            rho: vec![Matrix::zeros(dim_v, dim_v); n],
            mu: vec![Matrix::zeros(dim_v, dim_v); n],
        }
    }

    fn combine(ms: &[Matrix], dim_v: usize, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(dim_v, dim_v);
        for (m, xi) in ms.iter().zip(x) {
            if !xi.is_zero() {
                out = &out + &m.scale(xi);
            }
        }
        out
    }

    pub fn rho_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.rho, self.dim_v, x)
    }

    pub fn mu_of(&self, x: &[Scalar]) -> Matrix {
        Self::combine(&self.mu, self.dim_v, x)
    }
}

/// Verifies the Lie, associative and mixed representation conditions.
pub fn check_representation(a: &AlgebraSpec, v: &Representation) -> Result<Report> {
    require_poisson(a)?;
    let n = a.dim();
    if v.rho.len() != n || v.mu.len() != n {
        return Err(Error::DimMismatch {
            expected: n,
            found: v.rho.len().min(v.mu.len()),
        });
    }
    let mut report = Report::new("representation");
    for i in 0..n {
        for j in 0..n {
            let (ri, rj) = (&v.rho[i], &v.rho[j]);
            let (mi, mj) = (&v.mu[i], &v.mu[j]);
            let br = v.rho_of(a.bracket.pair(i, j));
            let pr_rho = v.rho_of(a.product.pair(i, j));
            let pr_mu = v.mu_of(a.product.pair(i, j));
            let br_mu = v.mu_of(a.bracket.pair(i, j));
            report.check(
                "lie_action",
                &[i, j],
                (&br - &ri.commutator(rj)).entries().to_vec(),
            );
            report.check(
                "assoc_action",
                &[i, j],
                (&pr_mu - &(mi * mj)).entries().to_vec(),
            );
            report.check(
                "rho_of_product",
                &[i, j],
                (&pr_rho - &(&(mj * ri) + &(mi * rj))).entries().to_vec(),
            );
            report.check(
                "mu_of_bracket",
                &[i, j],
                (&br_mu - &(&(ri * mj) - &(mj * ri))).entries().to_vec(),
            );
        }
    }
    Ok(report)
}

/// The adjoint representation `(A, ad, L)`.
pub fn adjoint_rep(a: &AlgebraSpec) -> Representation {
    let n = a.dim();
    Representation {
        dim_v: n,
        rho: (0..n).map(|i| a.ad_basis(i)).collect(),
        mu: (0..n).map(|i| a.left_basis(i)).collect(),
    }
}

/// The coadjoint representation `(A*, −ad*, L*)`.
pub fn coadjoint_rep(a: &AlgebraSpec) -> Result<Representation> {
    require_poisson(a)?;
    Ok(coadjoint_unchecked(a))
}

pub(crate) fn coadjoint_unchecked(a: &AlgebraSpec) -> Representation {
    let n = a.dim();
    Representation {
        dim_v: n,
        rho: (0..n).map(|i| -&a.ad_basis(i).transpose()).collect(),
        mu: (0..n).map(|i| a.left_basis(i).transpose()).collect(),
    }
}

/// `A ⋉_{ρ,μ} V` on the basis `(A, V)`.
pub fn semidirect_product(a: &AlgebraSpec, v: &Representation) -> Result<AlgebraSpec> {
    let rep = check_representation(a, v)?;
    if !rep.passed() {
        return Err(Error::InvalidRepresentation(summary(&rep)));
    }
    Ok(semidirect_unchecked(a, v))
}

pub(crate) fn semidirect_unchecked(a: &AlgebraSpec, v: &Representation) -> AlgebraSpec {
    let n = a.dim();
    let m = v.dim_v;
    let total = n + m;
    let mut out = AlgebraSpec::zero(total);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.bracket.set(i, j, k, a.bracket.get(i, j, k).clone());
                out.product.set(i, j, k, a.product.get(i, j, k).clone());
            }
        }
        for j in 0..m {
            for k in 0..m {
                let r = &v.rho[i][(k, j)];
                let u = &v.mu[i][(k, j)];
                // [e_i, v_j] = ρ(e_i)v_j, [v_j, e_i] = −ρ(e_i)v_j
                out.bracket.set(i, n + j, n + k, r.clone());
                out.bracket.set(n + j, i, n + k, -r);
                out.product.set(i, n + j, n + k, u.clone());
                out.product.set(n + j, i, n + k, u.clone());
            }
        }
    }
    let mut names = a.basis_names.clone();
    names.extend((1..=m).map(|j| format!("v{j}")));
    out.basis_names = names;
    out
}

/// A bilinear form `B(e_i, e_j) = b[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearFormData {
    pub b: Matrix,
}

impl BilinearFormData {
    pub fn new(b: Matrix) -> Self {
        BilinearFormData { b }
    }

    pub fn is_symmetric(&self) -> bool {
        self.b.is_symmetric()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.b.is_square() && self.b.rank() == self.b.rows()
    }

    pub fn eval(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        dot(u, &self.b.apply(v))
    }

    /// `𝔅♯: A → A*`, `⟨𝔅♯(a), b⟩ = 𝔅(a, b)`.
    pub fn sharp(&self) -> Matrix {
        self.b.transpose()
    }
}

/// `𝔅(x, y) = xᵀ b y` evaluated on three basis-indexed products.
fn invariance_into(a: &AlgebraSpec, b: &Matrix, report: &mut Report) {
    let n = a.dim();
    let form = |u: &[Scalar], v: &[Scalar]| dot(u, &b.apply(v));
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let ex = basis_vec(n, x);
                let ez = basis_vec(n, z);
                let lb = form(a.bracket.pair(x, y), &ez);
                let rb = form(&ex, a.bracket.pair(y, z));
                report.check("bracket_invariance", &[x, y, z], vec![lb - rb]);
                let lp = form(a.product.pair(x, y), &ez);
                let rp = form(&ex, a.product.pair(y, z));
                report.check("product_invariance", &[x, y, z], vec![lp - rp]);
            }
        }
    }
}

/// Symmetry, nondegeneracy and invariance of `f` on `a`. The fact
/// `sharp_intertwines` records whether `𝔅♯` is a morphism from the adjoint
/// to the coadjoint representation.
pub fn check_quadratic(a: &AlgebraSpec, f: &BilinearFormData) -> Report {
    let mut report = Report::new("quadratic");
    let n = a.dim();
    if f.b.rows() != n || f.b.cols() != n {
        report.require("form_dimension", false);
        return report;
    }
    report.require("symmetric", f.is_symmetric());
    report.require("nondegenerate", f.is_nondegenerate());
    invariance_into(a, &f.b, &mut report);
    let iso = bsharp_iso_check(a, &f.sharp());
    report.fact(
        "sharp_intertwines",
        iso.holds("intertwines_ad") && iso.holds("intertwines_l"),
    );
    report.fact("sharp_invertible", iso.holds("invertible"));
    report
}

/// Checks that `i: A → A*` intertwines `(ad, L)` with `(−ad*, L*)` and is
/// invertible; then rebuilds `𝔅(a, b) = ⟨i(a), b⟩` and checks it is a
/// nondegenerate invariant form (under `converse/`).
pub fn bsharp_iso_check(a: &AlgebraSpec, i: &Matrix) -> Report {
    let mut report = Report::new("sharp_iso");
    let n = a.dim();
    if i.rows() != n || i.cols() != n {
        report.require("map_dimension", false);
        return report;
    }
    for x in 0..n {
        let ad = a.ad_basis(x);
        let l = a.left_basis(x);
        let lhs = i * &ad;
        let rhs = -&(&ad.transpose() * i);
        report.check("intertwines_ad", &[x], (&lhs - &rhs).entries().to_vec());
        let lhs = i * &l;
        let rhs = &l.transpose() * i;
        report.check("intertwines_l", &[x], (&lhs - &rhs).entries().to_vec());
    }
    report.require("invertible", i.rank() == n);
    let b = i.transpose();
    let mut converse = Report::new("converse");
    converse.require("nondegenerate", b.rank() == n);
    invariance_into(a, &b, &mut converse);
    report.fact("converse_form_valid", converse.passed());
    report.absorb("converse", converse);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{int, vec_from_i64};

    /// Two-dimensional `[e1, e2] = e2`, zero product.
    fn nonabelian2() -> AlgebraSpec {
        AlgebraSpec::from_entries(2, &[(0, 1, 1, int(1)), (1, 0, 1, int(-1))], &[])
    }

    fn idempotent1() -> AlgebraSpec {
        AlgebraSpec::from_entries(1, &[], &[(0, 0, 0, int(1))])
    }

    #[test]
    fn abelian_is_poisson() {
        for n in 1..4 {
            assert!(check_poisson(&AlgebraSpec::zero(n)).passed());
        }
    }

    #[test]
    fn nonabelian2_brute_force() {
        let a = nonabelian2();
        let rep = check_poisson(&a);
        assert!(rep.passed(), "{rep:?}");
        // independent oracle: Jacobi by explicit vector arithmetic
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    let (ex, ey, ez) = (basis_vec(2, x), basis_vec(2, y), basis_vec(2, z));
                    let j1 = a.bracket(&ex, &a.bracket(&ey, &ez));
                    let j2 = a.bracket(&ey, &a.bracket(&ez, &ex));
                    let j3 = a.bracket(&ez, &a.bracket(&ex, &ey));
                    let s: Vector = (0..2).map(|k| &j1[k] + &j2[k] + &j3[k]).collect();
                    assert!(s.iter().all(Zero::is_zero));
                }
            }
        }
    }

    #[test]
    fn self_bracket_fails_antisymmetry() {
        let a = AlgebraSpec::from_entries(1, &[(0, 0, 0, int(1))], &[]);
        let rep = check_poisson(&a);
        assert!(rep.failed("antisymmetry"));
        let v = rep.first_violation().unwrap();
        assert_eq!(v.indices, vec![0, 0]);
        assert_eq!(v.residual, vec![int(2)]);
    }

    #[test]
    fn operators() {
        let a = nonabelian2();
        let (ad, l, r) = multiplication_operators(&a, &basis_vec(2, 0)).unwrap();
        // column-by-column: ad(e1)e1 = 0, ad(e1)e2 = e2
        let expect = Matrix::from_columns(
            2,
            &[
                a.bracket(&basis_vec(2, 0), &basis_vec(2, 0)),
                a.bracket(&basis_vec(2, 0), &basis_vec(2, 1)),
            ],
        );
        assert_eq!(ad, expect);
        assert_eq!(ad, Matrix::from_i64(&[&[0, 0], &[0, 1]]));
        assert!(l.is_zero() && r.is_zero());
        let (ad0, l0, r0) = multiplication_operators(&a, &zero_vec(2)).unwrap();
        assert!(ad0.is_zero() && l0.is_zero() && r0.is_zero());
        let (_, l1, _) = multiplication_operators(&idempotent1(), &basis_vec(1, 0)).unwrap();
        assert_eq!(l1, Matrix::identity(1));
        assert!(multiplication_operators(&a, &zero_vec(3)).is_err());
    }

    #[test]
    fn adjoint_and_coadjoint_are_representations() {
        for a in [nonabelian2(), idempotent1(), AlgebraSpec::zero(2)] {
            assert!(check_representation(&a, &adjoint_rep(&a)).unwrap().passed());
            let co = coadjoint_rep(&a).unwrap();
            assert!(check_representation(&a, &co).unwrap().passed());
            assert!(check_representation(&a, &Representation::zero(a.dim(), 3))
                .unwrap()
                .passed());
        }
        let co = coadjoint_rep(&nonabelian2()).unwrap();
        assert_eq!(
            co.rho[0],
            -&Matrix::from_i64(&[&[0, 0], &[0, 1]]).transpose()
        );
        let abelian = coadjoint_rep(&AlgebraSpec::zero(3)).unwrap();
        assert_eq!(abelian, Representation::zero(3, 3));
    }

    #[test]
    fn representation_requires_valid_algebra() {
        let bad = AlgebraSpec::from_entries(1, &[(0, 0, 0, int(1))], &[]);
        assert!(matches!(
            check_representation(&bad, &Representation::zero(1, 1)),
            Err(Error::InvalidAlgebra(_))
        ));
    }

    #[test]
    fn semidirect_examples() {
        let a = nonabelian2();
        let s = semidirect_product(&a, &coadjoint_rep(&a).unwrap()).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(check_poisson(&s).passed());

        let zero = semidirect_product(&a, &Representation::zero(2, 1)).unwrap();
        assert_eq!(
            zero,
            a.direct_sum(&AlgebraSpec::zero(1))
                .with_names(zero.basis_names.clone())
        );

        // e·e = e acting on itself through (ad, L): (a1,v1)(a2,v2) = (a1a2, a1v2 + a2v1)
        let e = idempotent1();
        let s = semidirect_product(&e, &adjoint_rep(&e)).unwrap();
        let mut expect = Tensor3::zeros(2);
        expect.set(0, 0, 0, int(1));
        expect.set(0, 1, 1, int(1));
        expect.set(1, 0, 1, int(1));
        assert_eq!(s.product, expect);
        assert!(s.bracket.is_zero());
    }

    #[test]
    fn semidirect_rejects_bad_rep() {
        let a = idempotent1();
        let mut v = Representation::zero(1, 1);
        v.mu[0] = Matrix::from_i64(&[&[2]]);
        assert!(matches!(
            semidirect_product(&a, &v),
            Err(Error::InvalidRepresentation(_))
        ));
    }

    #[test]
    fn quadratic_examples() {
        let a = AlgebraSpec::zero(3);
        let f = BilinearFormData::new(Matrix::identity(3));
        let rep = check_quadratic(&a, &f);
        assert!(rep.passed());
        assert_eq!(rep.get_fact("sharp_intertwines"), Some(true));

        let degenerate =
            check_quadratic(&idempotent1(), &BilinearFormData::new(Matrix::zeros(1, 1)));
        assert!(degenerate.failed("nondegenerate"));

        let ok = check_quadratic(&idempotent1(), &BilinearFormData::new(Matrix::identity(1)));
        assert!(ok.passed());
    }

    #[test]
    fn double_form_on_coadjoint_semidirect() {
        let a = nonabelian2();
        let d = semidirect_product(&a, &coadjoint_rep(&a).unwrap()).unwrap();
        let bd = Matrix::block2(
            &Matrix::zeros(2, 2),
            &Matrix::identity(2),
            &Matrix::identity(2),
            &Matrix::zeros(2, 2),
        );
        let rep = check_quadratic(&d, &BilinearFormData::new(bd.clone()));
        assert!(rep.passed(), "{rep:?}");
        let iso = bsharp_iso_check(&d, &bd);
        assert!(iso.passed(), "{iso:?}");
    }

    #[test]
    fn sharp_iso_examples() {
        let a = AlgebraSpec::zero(2);
        assert!(bsharp_iso_check(&a, &Matrix::identity(2)).passed());
        let zero = bsharp_iso_check(&a, &Matrix::zeros(2, 2));
        assert!(zero.failed("invertible"));
    }

    #[test]
    fn leibniz_residual_scales() {
        // residual of a non-Poisson algebra is multilinear in each input
        let a = AlgebraSpec::from_entries(
            2,
            &[(0, 1, 1, int(1)), (1, 0, 1, int(-1))],
            &[(0, 0, 0, int(1))],
        );
        let leib = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| {
            let lhs = a.bracket(x, &a.mul(y, z));
            let r1 = a.mul(&a.bracket(x, y), z);
            let r2 = a.mul(y, &a.bracket(x, z));
            vec_sub(&vec_sub(&lhs, &r1), &r2)
        };
        let x = vec_from_i64(&[1, 2]);
        let y = vec_from_i64(&[-1, 3]);
        let z = vec_from_i64(&[2, 1]);
        let base = leib(&x, &y, &z);
        assert!(base.iter().any(|v| !v.is_zero()));
        let s = int(5);
        let sx: Vector = x.iter().map(|v| v * &s).collect();
        let scaled = leib(&sx, &y, &z);
        assert_eq!(scaled, base.iter().map(|v| v * &s).collect::<Vector>());
        assert!(check_poisson(&a).failed("leibniz"));
    }
}
