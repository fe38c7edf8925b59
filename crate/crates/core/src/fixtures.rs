//! Curated algebras, bialgebras and r-matrices used by the tests, the
//! acceptance suite and the CLI examples.

use crate::bialgebra::{
    canonical_r, coboundary_coproduct, double_algebra, BialgebraSpec, CoboundaryForm, RMatrixData,
};
use crate::diff_asi::{DiffASIBialgebra, DiffAlgebra, DiffCoalgebra};
use crate::linear::{int, Matrix, Tensor3, TwoTensor};
use crate::poisson::{AlgebraSpec, BilinearFormData};

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// `[e1, e2] = e2`, zero product.
pub fn nonabelian2() -> AlgebraSpec {
    AlgebraSpec::from_entries(2, &[(0, 1, 1, int(1)), (1, 0, 1, int(-1))], &[])
}

/// `e·e = e`, zero bracket.
pub fn idempotent1() -> AlgebraSpec {
    AlgebraSpec::from_entries(1, &[], &[(0, 0, 0, int(1))])
}

/// `[e1, e2] = e3` and `e1·e1 = e3`.
pub fn heisenberg_like() -> AlgebraSpec {
    AlgebraSpec::from_entries(
        3,
        &[(0, 1, 2, int(1)), (1, 0, 2, int(-1))],
        &[(0, 0, 2, int(1))],
    )
}

/// `sl(2)` on `(h, e, f)` with zero product.
pub fn sl2() -> AlgebraSpec {
    AlgebraSpec::from_entries(
        3,
        &[
            (0, 1, 1, int(2)),
            (1, 0, 1, int(-2)),
            (0, 2, 2, int(-2)),
            (2, 0, 2, int(2)),
            (1, 2, 0, int(1)),
            (2, 1, 0, int(-1)),
        ],
        &[],
    )
    .with_names(names(&["h", "e", "f"]))
}

/// `K[ε]/(ε²)` with zero bracket.
pub fn dual_numbers() -> AlgebraSpec {
    AlgebraSpec::from_entries(
        2,
        &[],
        &[(0, 0, 0, int(1)), (0, 1, 1, int(1)), (1, 0, 1, int(1))],
    )
    .with_names(names(&["1", "eps"]))
}

/// `K × K` with zero bracket.
pub fn split2() -> AlgebraSpec {
    AlgebraSpec::from_entries(2, &[], &[(0, 0, 0, int(1)), (1, 1, 1, int(1))])
}

/// `K[x,y]/(x², y²)` with the bracket induced by the Euler derivations:
/// `[x, y] = xy`.
pub fn euler_plane() -> AlgebraSpec {
    let basis = [(0, 0), (1, 0), (0, 1), (1, 1)];
    let mut a = AlgebraSpec::zero(4).with_names(names(&["1", "x", "y", "xy"]));
    a.product = monomial_product(&basis);
    a.bracket.set(1, 2, 3, int(1));
    a.bracket.set(2, 1, 3, int(-1));
    a
}

/// Poisson algebras of dimension 1 to 4.
pub fn poisson_algebras() -> Vec<(String, AlgebraSpec)> {
    let mut out: Vec<(String, AlgebraSpec)> = (1..=4)
        .map(|n| (format!("abelian{n}"), AlgebraSpec::zero(n)))
        .collect();
    out.extend([
        ("nonabelian2".to_string(), nonabelian2()),
        ("idempotent1".to_string(), idempotent1()),
        ("heisenberg_like".to_string(), heisenberg_like()),
        ("sl2".to_string(), sl2()),
        ("dual_numbers".to_string(), dual_numbers()),
        ("split2".to_string(), split2()),
        ("euler_plane".to_string(), euler_plane()),
    ]);
    out
}

/// `r = e1⊗e2 − e2⊗e1` on [`nonabelian2`].
pub fn nonabelian2_triangular() -> RMatrixData {
    RMatrixData::new(TwoTensor::from_i64(&[&[0, 1], &[-1, 0]]))
}

/// Valid Poisson bialgebras of dimension at most 4: every algebra of
/// [`poisson_algebras`] with zero cobracket and coproduct, plus coboundary
/// and double-derived ones.
pub fn bialgebra_fixtures() -> Vec<(String, BialgebraSpec)> {
    let mut out: Vec<(String, BialgebraSpec)> = poisson_algebras()
        .into_iter()
        .map(|(name, a)| (format!("{name}/trivial"), BialgebraSpec::trivial(a)))
        .collect();
    let cob = BialgebraSpec::coboundary(nonabelian2(), &nonabelian2_triangular().r)
        .expect("valid algebra");
    out.push(("nonabelian2/triangular".to_string(), cob));
    for (name, a) in [
        ("idempotent1", idempotent1()),
        ("nonabelian2", nonabelian2()),
    ] {
        let d = double_algebra(&BialgebraSpec::trivial(a));
        let b = BialgebraSpec::coboundary(d, &canonical_r(d_dim(name)).r).expect("valid algebra");
        out.push((format!("{name}/double_coboundary"), b));
    }
    out
}

fn d_dim(name: &str) -> usize {
    if name == "idempotent1" {
        1
    } else {
        2
    }
}

/// Factorizable `(algebra, r)` pairs of dimension at most 4.
pub fn factorizable_fixtures() -> Vec<(String, AlgebraSpec, RMatrixData)> {
    let mut out = Vec::new();
    for (name, b) in bialgebra_fixtures() {
        if b.dim() <= 2 {
            out.push((
                format!("{name}/double"),
                double_algebra(&b),
                canonical_r(b.dim()),
            ));
        }
    }
    out.push((
        "abelian2/nondegenerate".to_string(),
        AlgebraSpec::zero(2),
        RMatrixData::new(TwoTensor::from_i64(&[&[1, 2], &[0, 3]])),
    ));
    out
}

/// `(algebra, r)` pairs of dimension 2 to 4, including mutants whose
/// coboundary structure fails.
pub fn r_pairs() -> Vec<(String, AlgebraSpec, RMatrixData)> {
    let mut out = Vec::new();
    for (name, a, r) in factorizable_fixtures() {
        let mut m = r.r.matrix().clone();
        let i = m.rows() - 1;
        m[(0, i)] = &m[(0, i)] + int(1);
        m[(i, 1)] = &m[(i, 1)] - int(2);
        out.push((
            format!("{name}/mutant"),
            a.clone(),
            RMatrixData::from_matrix(m).expect("square"),
        ));
        out.push((name, a, r));
    }
    out.push((
        "nonabelian2/triangular".to_string(),
        nonabelian2(),
        nonabelian2_triangular(),
    ));
    out.push((
        "nonabelian2/e1e1".to_string(),
        nonabelian2(),
        RMatrixData::new(TwoTensor::from_i64(&[&[1, 0], &[0, 0]])),
    ));
    out.push((
        "nonabelian2/e2e2".to_string(),
        nonabelian2(),
        RMatrixData::new(TwoTensor::from_i64(&[&[0, 0], &[0, 1]])),
    ));
    out.push((
        "sl2/casimir".to_string(),
        sl2(),
        RMatrixData::new(TwoTensor::from_i64(&[&[1, 0, 0], &[0, 0, 2], &[0, 2, 0]])),
    ));
    out.push((
        "sl2/standard".to_string(),
        sl2(),
        RMatrixData::new(TwoTensor::from_i64(&[&[1, 0, 0], &[0, 0, 4], &[0, 0, 0]])),
    ));
    out.push((
        "heisenberg_like/e3e3".to_string(),
        heisenberg_like(),
        RMatrixData::new(TwoTensor::from_i64(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 1]])),
    ));
    out.push((
        "heisenberg_like/e1e2".to_string(),
        heisenberg_like(),
        RMatrixData::new(TwoTensor::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]])),
    ));
    out.push((
        "euler_plane/xy".to_string(),
        euler_plane(),
        RMatrixData::new(TwoTensor::from_i64(&[
            &[0, 0, 0, 0],
            &[0, 0, 1, 0],
            &[0, -1, 0, 0],
            &[0, 0, 0, 0],
        ])),
    ));
    out.push((
        "dual_numbers/eps".to_string(),
        dual_numbers(),
        RMatrixData::new(TwoTensor::from_i64(&[&[0, 0], &[0, 1]])),
    ));
    out
}

/// Monomial algebra on exponent vectors, truncated to the listed monomials.
fn monomial_product(basis: &[(usize, usize)]) -> Tensor3 {
    let n = basis.len();
    let mut t = Tensor3::zeros(n);
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let e = (a.0 + b.0, a.1 + b.1);
            if let Some(k) = basis.iter().position(|&m| m == e) {
                t.set(i, j, k, int(1));
            }
        }
    }
    t
}

/// `m ↦ Σ coef(m)·shift(m)` on monomials, as a matrix.
fn monomial_operator(
    basis: &[(usize, usize)],
    f: impl Fn((usize, usize)) -> Option<(i64, (usize, usize))>,
) -> Matrix {
    let n = basis.len();
    let mut m = Matrix::zeros(n, n);
    for (j, &b) in basis.iter().enumerate() {
        if let Some((c, e)) = f(b) {
            if let Some(i) = basis.iter().position(|&x| x == e) {
                m[(i, j)] = int(c);
            }
        }
    }
    m
}

const TRUNCATED: [(usize, usize); 6] = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];

fn truncated_names() -> Vec<String> {
    ["1", "x", "y", "x2", "xy", "y2"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}

/// `K[x,y]` modulo monomials of degree at least 3 with `∂/∂x, ∂/∂y`.
///
/// The truncation is not stable under these operators, so Leibniz fails at
/// degree 3 (e.g. `∂(x·x²) = 0 ≠ 3x²`).
pub fn truncated_partials() -> DiffAlgebra {
    let dx = monomial_operator(&TRUNCATED, |(a, b)| (a > 0).then(|| (a as i64, (a - 1, b))));
    let dy = monomial_operator(&TRUNCATED, |(a, b)| (b > 0).then(|| (b as i64, (a, b - 1))));
    DiffAlgebra::new(monomial_product(&TRUNCATED), vec![dx, dy], true).with_names(truncated_names())
}

/// The same truncated algebra with the Euler derivations `x∂/∂x, y∂/∂y`,
/// which preserve the truncation.
pub fn truncated_euler() -> DiffAlgebra {
    let ex = monomial_operator(&TRUNCATED, |(a, b)| (a > 0).then_some((a as i64, (a, b))));
    let ey = monomial_operator(&TRUNCATED, |(a, b)| (b > 0).then_some((b as i64, (a, b))));
    DiffAlgebra::new(monomial_product(&TRUNCATED), vec![ex, ey], true).with_names(truncated_names())
}

/// [`truncated_euler`] with `Δ = 0` and `Ψ = −Φ`.
pub fn truncated_euler_asi() -> DiffASIBialgebra {
    let d = truncated_euler();
    let psi = d.phi.iter().map(|m| -m).collect();
    DiffASIBialgebra::trivial(d, psi)
}

/// `K[x]/(x³)` with `d/dx` and `x·d/dx`, which do not commute.
pub fn cubic_noncommuting() -> DiffAlgebra {
    let basis = [(0, 0), (1, 0), (2, 0)];
    let d1 = monomial_operator(&basis, |(a, b)| (a > 0).then(|| (a as i64, (a - 1, b))));
    let d2 = monomial_operator(&basis, |(a, b)| (a > 0).then_some((a as i64, (a, b))));
    DiffAlgebra::new(monomial_product(&basis), vec![d1, d2], true).with_names(vec![
        "1".into(),
        "x".into(),
        "x2".into(),
    ])
}

/// Dual numbers `K[ε]/(ε²)` with `ε↦ε`.
pub fn dual_numbers_diff() -> DiffAlgebra {
    let basis = [(0, 0), (1, 0)];
    let d = monomial_operator(&basis, |(a, b)| (a > 0).then_some((1, (a, b))));
    DiffAlgebra::new(monomial_product(&basis), vec![d], true)
        .with_names(vec!["1".into(), "eps".into()])
}

pub fn dual_numbers_asi() -> DiffASIBialgebra {
    let d = dual_numbers_diff();
    let psi = d.phi.iter().map(|m| -m).collect();
    DiffASIBialgebra::trivial(d, psi)
}

/// Upper triangular 2×2 matrices `(E11, E12, E22)` with the inner
/// derivation `[E11, ·]`.
pub fn upper_triangular_diff() -> DiffAlgebra {
    let mut t = Tensor3::zeros(3);
    t.set(0, 0, 0, int(1));
    t.set(0, 1, 1, int(1));
    t.set(1, 2, 1, int(1));
    t.set(2, 2, 2, int(1));
    let d = Matrix::from_i64(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    DiffAlgebra::new(t, vec![d], false).with_names(vec!["E11".into(), "E12".into(), "E22".into()])
}

pub fn upper_triangular_asi() -> DiffASIBialgebra {
    let d = upper_triangular_diff();
    let psi = d.phi.iter().map(|m| -m).collect();
    DiffASIBialgebra::trivial(d, psi)
}

/// Zero product on `K²` with commuting diagonal derivations and
/// independent diagonal coderivations.
pub fn abelian_diff_asi() -> DiffASIBialgebra {
    let phi = vec![Matrix::from_i64(&[&[1, 0], &[0, 2]])];
    let psi = vec![Matrix::from_i64(&[&[3, 0], &[0, -1]])];
    DiffASIBialgebra::trivial(DiffAlgebra::new(Tensor3::zeros(2), phi, true), psi)
}

/// Coboundary `Δ_r` over `d` with zero derivations and coderivations.
fn coboundary_without_derivations(
    product: Tensor3,
    commutative: bool,
    r: &RMatrixData,
) -> DiffASIBialgebra {
    let n = product.dim();
    let d = DiffAlgebra::new(product, vec![Matrix::zeros(n, n)], commutative);
    let coproduct = coboundary_coproduct(&d.alg, r.r.matrix(), CoboundaryForm::LeftRight);
    let cocommutative = coproduct == coproduct.swap23();
    DiffASIBialgebra {
        diff_alg: d,
        diff_coalg: DiffCoalgebra {
            coproduct,
            psi: vec![Matrix::zeros(n, n)],
            cocommutative,
        },
    }
}

/// `r = E11⊗E12 − E12⊗E11` on the upper triangular matrices.
pub fn upper_triangular_r() -> RMatrixData {
    RMatrixData::new(TwoTensor::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]))
}

/// `r = 1⊗ε` on the dual numbers, factorizable.
pub fn dual_numbers_r() -> RMatrixData {
    RMatrixData::new(TwoTensor::from_i64(&[&[0, 1], &[0, 0]]))
}

/// Valid differential ASI bialgebras of dimension at most 3.
pub fn diff_asi_fixtures() -> Vec<DiffASIBialgebra> {
    vec![
        dual_numbers_asi(),
        upper_triangular_asi(),
        abelian_diff_asi(),
        DiffASIBialgebra::trivial(
            DiffAlgebra::new(
                upper_triangular_diff().alg.product,
                vec![Matrix::zeros(3, 3)],
                false,
            ),
            vec![Matrix::zeros(3, 3)],
        ),
        coboundary_without_derivations(
            upper_triangular_diff().alg.product,
            false,
            &upper_triangular_r(),
        ),
        coboundary_without_derivations(dual_numbers_diff().alg.product, true, &dual_numbers_r()),
    ]
}

/// A weight-0 symmetric Rota-Baxter differential Frobenius algebra on the
/// zero algebra `K²`: `𝔅 = id`, `P` a rotation generator, `∂ = id`.
pub fn weight_zero_rb_diff() -> (DiffAlgebra, BilinearFormData, Matrix) {
    let d = DiffAlgebra::new(Tensor3::zeros(2), vec![Matrix::identity(2)], true);
    let f = BilinearFormData::new(Matrix::identity(2));
    let p = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
    (d, f, p)
}
