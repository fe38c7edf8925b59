//! The flat-file workbench: a sparse text format for structure constants,
//! command dispatch over the library, and report rendering.
//!
//! # Text format
//!
//! One directive per line, `#` starts a comment. Indices are 0-based.
//!
//! ```text
//! field rational
//! structure poisson          # or: differential
//! dim 2
//! names e1 e2
//! commutative true
//! cocommutative false
//! form left-left             # or: left-right
//! weight -1/2
//! derivations 1
//! bracket 0 1 1 1            # [e_0, e_1] = 1·e_1
//! product 0 0 0 1
//! delta 1 0 1 1              # δ(e_1) ∋ 1·e_0⊗e_1
//! coproduct 1 0 1 1
//! r 0 1 1                    # r ∋ 1·e_0⊗e_1
//! P 0 0 1
//! B 0 1 1
//! phi 0 1 1 1                # ∂_0 e_1 ∋ 1·e_1
//! psi 0 1 1 -1
//! ```
//!
//! A bare `r`, `P` or `B` line declares that matrix as present and zero.
//! Repeated entries are summed with a warning.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::bialgebra::{
    check_poisson_bialgebra, classify_r, coboundary_maps, drinfeld_double, BialgebraSpec,
    Classification, CoboundaryForm, Label, RMatrixData,
};
use crate::diff_asi::{
    check_diff_asi_bialgebra, check_rb_diff_frobenius, classify_diff_r, diff_drinfeld_double,
    diff_r_to_rb, induce_poisson_bialgebra, rb_diff_to_r, DiffASIBialgebra, DiffAlgebra,
    DiffCoalgebra,
};
use crate::error::{Error, Result};
use crate::linear::{fmt_scalar, parse_scalar, Matrix, Scalar, Tensor3};
use crate::poisson::{check_poisson, check_quadratic, AlgebraSpec, BilinearFormData};
use crate::report::Report;
use crate::rota_baxter::{
    check_quadratic_rb, check_rb_operator, diagram_check, factorizable_to_qrb, qrb_to_factorizable,
    tilde_equivalence, tilde_operator, RotaBaxterData,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    Poisson,
    Differential,
}

/// Parsed contents of a spec file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorkbenchSpec {
    pub structure: Structure,
    pub dim: usize,
    pub names: Vec<String>,
    pub bracket: Tensor3,
    pub product: Tensor3,
    pub delta: Tensor3,
    pub coproduct: Tensor3,
    pub r: Option<Matrix>,
    pub p: Option<Matrix>,
    pub b: Option<Matrix>,
    pub phi: Vec<Matrix>,
    pub psi: Vec<Matrix>,
    pub weight: Option<Scalar>,
    pub commutative: bool,
    pub cocommutative: bool,
    pub form: CoboundaryForm,
}

impl WorkbenchSpec {
    pub fn new(structure: Structure, dim: usize) -> Self {
        WorkbenchSpec {
            structure,
            dim,
            names: (1..=dim).map(|i| format!("e{i}")).collect(),
            bracket: Tensor3::zeros(dim),
            product: Tensor3::zeros(dim),
            delta: Tensor3::zeros(dim),
            coproduct: Tensor3::zeros(dim),
            r: None,
            p: None,
            b: None,
            phi: Vec::new(),
            psi: Vec::new(),
            weight: None,
            commutative: false,
            cocommutative: false,
            form: CoboundaryForm::LeftLeft,
        }
    }

    pub fn from_bialgebra(b: &BialgebraSpec) -> Self {
        let mut s = WorkbenchSpec::new(Structure::Poisson, b.dim());
        s.names = sanitize_names(&b.alg.basis_names);
        s.bracket = b.alg.bracket.clone();
        s.product = b.alg.product.clone();
        s.delta = b.delta.clone();
        s.coproduct = b.coproduct.clone();
        s.commutative = true;
        s.cocommutative = b.coproduct == b.coproduct.swap23();
        s
    }

    pub fn from_diff(b: &DiffASIBialgebra) -> Self {
        let mut s = WorkbenchSpec::new(Structure::Differential, b.dim());
        s.names = sanitize_names(&b.diff_alg.alg.basis_names);
        s.product = b.diff_alg.alg.product.clone();
        s.coproduct = b.diff_coalg.coproduct.clone();
        s.phi = b.diff_alg.phi.clone();
        s.psi = b.diff_coalg.psi.clone();
        s.commutative = b.diff_alg.commutative;
        s.cocommutative = b.diff_coalg.cocommutative;
        s
    }

    pub fn with_r(mut self, r: &RMatrixData) -> Self {
        self.r = Some(r.r.matrix().clone());
        self
    }

    pub fn algebra(&self) -> AlgebraSpec {
        let mut a = AlgebraSpec::new(self.bracket.clone(), self.product.clone())
            .expect("same dimension")
            .with_names(self.names.clone());
        a.commutative = self.commutative;
        a
    }

    pub fn bialgebra(&self) -> BialgebraSpec {
        BialgebraSpec {
            alg: self.algebra(),
            delta: self.delta.clone(),
            coproduct: self.coproduct.clone(),
        }
    }

    pub fn diff_bialgebra(&self) -> DiffASIBialgebra {
        DiffASIBialgebra {
            diff_alg: DiffAlgebra::new(self.product.clone(), self.phi.clone(), self.commutative)
                .with_names(self.names.clone()),
            diff_coalg: DiffCoalgebra {
                coproduct: self.coproduct.clone(),
                psi: self.psi.clone(),
                cocommutative: self.cocommutative,
            },
        }
    }

    fn r_data(&self) -> Result<RMatrixData> {
        let m = self
            .r
            .clone()
            .ok_or_else(|| Error::MissingInput("r".into()))?;
        RMatrixData::from_matrix(m)
    }

    fn weight_or(&self, over: Option<&Scalar>) -> Result<Scalar> {
        over.cloned()
            .or_else(|| self.weight.clone())
            .ok_or_else(|| Error::MissingInput("weight".into()))
    }

    fn need(&self, m: &Option<Matrix>, name: &str) -> Result<Matrix> {
        m.clone().ok_or_else(|| Error::MissingInput(name.into()))
    }
}

fn sanitize_names(names: &[String]) -> Vec<String> {
    names
        .iter()
        .map(|s| {
            let t: String = s
                .chars()
                .map(|c| {
                    if c.is_whitespace() || c == '#' {
                        '_'
                    } else {
                        c
                    }
                })
                .collect();
            if t.is_empty() {
                "_".to_string()
            } else {
                t
            }
        })
        .collect()
}

/// A non-fatal diagnostic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Warning {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loaded {
    pub spec: WorkbenchSpec,
    pub warnings: Vec<Warning>,
}

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in body.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &body[s..i],
                    col: body[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &body[s..],
            col: body[..s].chars().count() + 1,
        });
    }
    out
}

struct Parser {
    line: usize,
    spec: Option<WorkbenchSpec>,
    structure: Structure,
    field_seen: bool,
    derivations: Option<usize>,
    headers: BTreeMap<&'static str, usize>,
    seen: BTreeMap<String, usize>,
    warnings: Vec<Warning>,
}

impl Parser {
    fn err(&self, col: usize, reason: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col,
            reason: reason.into(),
        }
    }

    fn header(&mut self, key: &'static str, col: usize) -> Result<()> {
        if let Some(prev) = self.headers.insert(key, self.line) {
            return Err(self.err(col, format!("`{key}` already given on line {prev}")));
        }
        Ok(())
    }

    fn spec(&mut self, col: usize) -> Result<&mut WorkbenchSpec> {
        if self.spec.is_none() {
            return Err(self.err(col, "`dim` must precede entries"));
        }
        Ok(self.spec.as_mut().expect("checked"))
    }

    fn index(&self, t: &Token, bound: usize) -> Result<usize> {
        let i: usize = t
            .text
            .parse()
            .map_err(|_| self.err(t.col, format!("expected an index, found `{}`", t.text)))?;
        if i >= bound {
            return Err(Error::IndexOutOfRange {
                line: self.line,
                col: t.col,
                index: i,
                dim: bound,
            });
        }
        Ok(i)
    }

    fn scalar(&self, t: &Token) -> Result<Scalar> {
        parse_scalar(t.text)
            .ok_or_else(|| self.err(t.col, format!("expected a rational, found `{}`", t.text)))
    }

    fn flag(&self, t: &Token) -> Result<bool> {
        match t.text {
            "true" => Ok(true),
            "false" => Ok(false),
            other => Err(self.err(t.col, format!("expected true or false, found `{other}`"))),
        }
    }

    fn arity(&self, toks: &[Token], n: usize) -> Result<()> {
        if toks.len() != n + 1 {
            let col = toks.get(n + 1).or(toks.last()).map_or(1, |t| t.col);
            return Err(self.err(
                col,
                format!(
                    "`{}` takes {n} argument(s), found {}",
                    toks[0].text,
                    toks.len() - 1
                ),
            ));
        }
        Ok(())
    }

    fn duplicate(&mut self, key: String, col: usize) {
        if let Some(prev) = self.seen.insert(key.clone(), self.line) {
            self.warnings.push(Warning {
                line: self.line,
                col,
                message: format!("duplicate entry `{key}` (first on line {prev}); values summed"),
            });
        }
    }

    fn directive(&mut self, toks: &[Token]) -> Result<()> {
        let head = &toks[0];
        let col = head.col;
        match head.text {
            "field" => {
                self.header("field", col)?;
                self.arity(toks, 1)?;
                if toks[1].text != "rational" {
                    return Err(
                        self.err(toks[1].col, format!("unsupported field `{}`", toks[1].text))
                    );
                }
                self.field_seen = true;
            }
            "structure" => {
                self.header("structure", col)?;
                self.arity(toks, 1)?;
                self.structure = match toks[1].text {
                    "poisson" => Structure::Poisson,
                    "differential" => Structure::Differential,
                    other => {
                        return Err(self.err(toks[1].col, format!("unknown structure `{other}`")))
                    }
                };
                if let Some(s) = self.spec.as_mut() {
                    s.structure = self.structure;
                }
            }
            "dim" => {
                self.header("dim", col)?;
                self.arity(toks, 1)?;
                let n: usize = toks[1]
                    .text
                    .parse()
                    .map_err(|_| self.err(toks[1].col, "expected a dimension"))?;
                if n == 0 {
                    return Err(self.err(toks[1].col, "dimension must be positive"));
                }
                self.spec = Some(WorkbenchSpec::new(self.structure, n));
            }
            "names" => {
                self.header("names", col)?;
                let n = self.spec(col)?.dim;
                if toks.len() - 1 != n {
                    return Err(
                        self.err(col, format!("expected {n} names, found {}", toks.len() - 1))
                    );
                }
                self.spec(col)?.names = toks[1..].iter().map(|t| t.text.to_string()).collect();
            }
            "commutative" | "cocommutative" => {
                let key = if head.text == "commutative" {
                    "commutative"
                } else {
                    "cocommutative"
                };
                self.header(key, col)?;
                self.arity(toks, 1)?;
                let v = self.flag(&toks[1])?;
                let s = self.spec(col)?;
                if key == "commutative" {
                    s.commutative = v;
                } else {
                    s.cocommutative = v;
                }
            }
            "form" => {
                self.header("form", col)?;
                self.arity(toks, 1)?;
                let f = match toks[1].text {
                    "left-left" => CoboundaryForm::LeftLeft,
                    "left-right" => CoboundaryForm::LeftRight,
                    other => return Err(self.err(toks[1].col, format!("unknown form `{other}`"))),
                };
                self.spec(col)?.form = f;
            }
            "weight" => {
                self.header("weight", col)?;
                self.arity(toks, 1)?;
                let w = self.scalar(&toks[1])?;
                self.spec(col)?.weight = Some(w);
            }
            "derivations" => {
                self.header("derivations", col)?;
                self.arity(toks, 1)?;
                let m: usize = toks[1]
                    .text
                    .parse()
                    .map_err(|_| self.err(toks[1].col, "expected a count"))?;
                let n = self.spec(col)?.dim;
                let s = self.spec(col)?;
                s.phi = vec![Matrix::zeros(n, n); m];
                s.psi = vec![Matrix::zeros(n, n); m];
                self.derivations = Some(m);
            }
            "bracket" | "product" | "delta" | "coproduct" => {
                let n = self.spec(col)?.dim;
                self.arity(toks, 4)?;
                let (i, j, k) = (
                    self.index(&toks[1], n)?,
                    self.index(&toks[2], n)?,
                    self.index(&toks[3], n)?,
                );
                let v = self.scalar(&toks[4])?;
                self.duplicate(format!("{} {i} {j} {k}", head.text), col);
                let s = self.spec(col)?;
                let t = match head.text {
                    "bracket" => &mut s.bracket,
                    "product" => &mut s.product,
                    "delta" => &mut s.delta,
                    _ => &mut s.coproduct,
                };
                t.add_at(i, j, k, &v);
            }
            "r" | "P" | "B" => {
                let n = self.spec(col)?.dim;
                if toks.len() == 1 {
                    let s = self.spec(col)?;
                    let slot = matrix_slot(s, head.text);
                    slot.get_or_insert_with(|| Matrix::zeros(n, n));
                    return Ok(());
                }
                self.arity(toks, 3)?;
                let (i, j) = (self.index(&toks[1], n)?, self.index(&toks[2], n)?);
                let v = self.scalar(&toks[3])?;
                self.duplicate(format!("{} {i} {j}", head.text), col);
                let s = self.spec(col)?;
                let m = matrix_slot(s, head.text).get_or_insert_with(|| Matrix::zeros(n, n));
                m[(i, j)] = &m[(i, j)] + &v;
            }
            "phi" | "psi" => {
                let n = self.spec(col)?.dim;
                let m = self
                    .derivations
                    .ok_or_else(|| self.err(col, "`derivations` must precede phi/psi entries"))?;
                self.arity(toks, 4)?;
                let k = self.index(&toks[1], m)?;
                let (i, j) = (self.index(&toks[2], n)?, self.index(&toks[3], n)?);
                let v = self.scalar(&toks[4])?;
                self.duplicate(format!("{} {k} {i} {j}", head.text), col);
                let s = self.spec(col)?;
                let fam = if head.text == "phi" {
                    &mut s.phi
                } else {
                    &mut s.psi
                };
                fam[k][(i, j)] = &fam[k][(i, j)] + &v;
            }
            other => return Err(self.err(col, format!("unknown directive `{other}`"))),
        }
        Ok(())
    }
}

fn matrix_slot<'a>(s: &'a mut WorkbenchSpec, key: &str) -> &'a mut Option<Matrix> {
    match key {
        "r" => &mut s.r,
        "P" => &mut s.p,
        _ => &mut s.b,
    }
}

/// Parses a spec; every error carries its line and column.
pub fn load_spec(text: &str) -> Result<Loaded> {
    let mut p = Parser {
        line: 0,
        spec: None,
        structure: Structure::Poisson,
        field_seen: false,
        derivations: None,
        headers: BTreeMap::new(),
        seen: BTreeMap::new(),
        warnings: Vec::new(),
    };
    for (i, line) in text.lines().enumerate() {
        p.line = i + 1;
        let toks = tokens(line);
        if toks.is_empty() {
            continue;
        }
        p.directive(&toks)?;
    }
    p.line += 1;
    if !p.field_seen {
        return Err(p.err(1, "missing `field rational` header"));
    }
    let spec = p
        .spec
        .take()
        .ok_or_else(|| p.err(1, "missing `dim` header"))?;
    Ok(Loaded {
        spec,
        warnings: p.warnings,
    })
}

pub fn load_spec_file(path: &std::path::Path) -> Result<Loaded> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    load_spec(&text)
}

/// Canonical text: fixed header order, entries in lexicographic index order,
/// zero entries omitted.
pub fn serialize_spec(s: &WorkbenchSpec) -> String {
    let mut out = String::new();
    let structure = match s.structure {
        Structure::Poisson => "poisson",
        Structure::Differential => "differential",
    };
    let _ = writeln!(out, "field rational");
    let _ = writeln!(out, "structure {structure}");
    let _ = writeln!(out, "dim {}", s.dim);
    let _ = writeln!(out, "names {}", sanitize_names(&s.names).join(" "));
    let _ = writeln!(out, "commutative {}", s.commutative);
    let _ = writeln!(out, "cocommutative {}", s.cocommutative);
    let _ = writeln!(out, "form {}", s.form);
    if let Some(w) = &s.weight {
        let _ = writeln!(out, "weight {}", fmt_scalar(w));
    }
    if !s.phi.is_empty() || !s.psi.is_empty() {
        let _ = writeln!(out, "derivations {}", s.phi.len().max(s.psi.len()));
    }
    for (key, t) in [
        ("bracket", &s.bracket),
        ("product", &s.product),
        ("delta", &s.delta),
        ("coproduct", &s.coproduct),
    ] {
        for ((i, j, k), v) in t.nonzero() {
            let _ = writeln!(out, "{key} {i} {j} {k} {}", fmt_scalar(v));
        }
    }
    for (key, m) in [("r", &s.r), ("P", &s.p), ("B", &s.b)] {
        if let Some(m) = m {
            if m.is_zero() {
                let _ = writeln!(out, "{key}");
            }
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    if !m[(i, j)].is_zero() {
                        let _ = writeln!(out, "{key} {i} {j} {}", fmt_scalar(&m[(i, j)]));
                    }
                }
            }
        }
    }
    for (key, fam) in [("phi", &s.phi), ("psi", &s.psi)] {
        for (k, m) in fam.iter().enumerate() {
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    if !m[(i, j)].is_zero() {
                        let _ = writeln!(out, "{key} {k} {i} {j} {}", fmt_scalar(&m[(i, j)]));
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Check,
    Classify,
    Double,
    Convert,
    Induce,
    Report,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Classify => "classify",
            Command::Double => "double",
            Command::Convert => "convert",
            Command::Induce => "induce",
            Command::Report => "report",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Rb2Fact,
    Fact2Rb,
    Tilde,
    Tau,
}

impl Direction {
    pub fn as_str(self) -> &'static str {
        match self {
            Direction::Rb2Fact => "rb2fact",
            Direction::Fact2Rb => "fact2rb",
            Direction::Tilde => "tilde",
            Direction::Tau => "tau",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub direction: Option<Direction>,
    /// Overrides the spec's `weight`.
    pub weight: Option<Scalar>,
}

/// Label plus the properties behind it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationSummary {
    pub label: Label,
    pub form: Option<CoboundaryForm>,
    pub properties: BTreeMap<String, String>,
    pub evidence: Report,
}

impl ClassificationSummary {
    fn new(c: &Classification, form: Option<CoboundaryForm>) -> Self {
        let mut properties = BTreeMap::new();
        properties.insert("solves_yb".to_string(), c.solves_yb.to_string());
        properties.insert("s_invariant".to_string(), c.s_invariant.to_string());
        properties.insert("antisymmetric".to_string(), c.antisymmetric.to_string());
        properties.insert("s_rank".to_string(), c.s_rank.to_string());
        properties.insert("tau_consistent".to_string(), c.tau_consistent.to_string());
        if let Some(cbd) = c.cbd {
            let flags: Vec<String> = cbd.iter().map(bool::to_string).collect();
            properties.insert("cbd".to_string(), flags.join(","));
        }
        ClassificationSummary {
            label: c.label,
            form,
            properties,
            evidence: c.evidence.clone(),
        }
    }
}

/// Everything a command produced. The verdict is fixed at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportDocument {
    pub command: String,
    pub direction: Option<String>,
    pub input_digest: String,
    pub checks: Vec<(String, Report)>,
    pub classification: Option<ClassificationSummary>,
    pub emitted: Option<WorkbenchSpec>,
    pub warnings: Vec<String>,
    pub verdict: bool,
}

/// SHA-256 of the canonical serialization.
pub fn spec_digest(s: &WorkbenchSpec) -> String {
    hex::encode(Sha256::digest(serialize_spec(s).as_bytes()))
}

struct Builder {
    doc: ReportDocument,
}

impl Builder {
    fn new(cmd: Command, spec: &WorkbenchSpec) -> Self {
        Builder {
            doc: ReportDocument {
                command: cmd.as_str().to_string(),
                direction: None,
                input_digest: spec_digest(spec),
                checks: Vec::new(),
                classification: None,
                emitted: None,
                warnings: Vec::new(),
                verdict: true,
            },
        }
    }

    fn check(&mut self, name: &str, r: Report) {
        self.doc.checks.push((name.to_string(), r));
    }

    fn classify(&mut self, c: &Classification, form: Option<CoboundaryForm>) {
        self.doc.classification = Some(ClassificationSummary::new(c, form));
    }

    fn finish(mut self) -> ReportDocument {
        let checks_ok = self.doc.checks.iter().all(|(_, r)| r.passed());
        let label_ok = self
            .doc
            .classification
            .as_ref()
            .is_none_or(|c| c.label != Label::NotSolution);
        self.doc.verdict = checks_ok && label_ok;
        self.doc
    }
}

fn check_suites(spec: &WorkbenchSpec, opts: &RunOptions, out: &mut Builder) -> Result<()> {
    match spec.structure {
        Structure::Poisson => {
            let a = spec.algebra();
            out.check("poisson", check_poisson(&a));
            out.check(
                "poisson_bialgebra",
                check_poisson_bialgebra(&spec.bialgebra()),
            );
            if let Some(b) = &spec.b {
                out.check(
                    "quadratic",
                    check_quadratic(&a, &BilinearFormData::new(b.clone())),
                );
            }
            if let Some(p) = &spec.p {
                let rb = RotaBaxterData::new(p.clone(), spec.weight_or(opts.weight.as_ref())?);
                out.check("rota_baxter", check_rb_operator(&a, &rb));
                if let Some(b) = &spec.b {
                    out.check(
                        "quadratic_rb",
                        check_quadratic_rb(&a, &rb.with_form(b.clone()))?,
                    );
                }
            }
        }
        Structure::Differential => {
            let b = spec.diff_bialgebra();
            out.check("diff_asi_bialgebra", check_diff_asi_bialgebra(&b));
            if let (Some(p), Some(f)) = (&spec.p, &spec.b) {
                let w = spec.weight_or(opts.weight.as_ref())?;
                let f = BilinearFormData::new(f.clone());
                out.check(
                    "rb_diff_frobenius",
                    check_rb_diff_frobenius(&b.diff_alg, &f, p, &w),
                );
            }
        }
    }
    Ok(())
}

fn classify_into(spec: &WorkbenchSpec, out: &mut Builder) -> Result<()> {
    let r = spec.r_data()?;
    check_dims(spec, &r)?;
    match spec.structure {
        Structure::Poisson => out.classify(&classify_r(&spec.algebra(), &r), None),
        Structure::Differential => {
            let b = spec.diff_bialgebra();
            let c = classify_diff_r(&b.diff_alg, &b.diff_coalg.psi, &r, spec.form);
            out.classify(&c, Some(spec.form));
        }
    }
    Ok(())
}

fn check_dims(spec: &WorkbenchSpec, r: &RMatrixData) -> Result<()> {
    if r.dim() != spec.dim {
        return Err(Error::DimMismatch {
            expected: spec.dim,
            found: r.dim(),
        });
    }
    Ok(())
}

fn poisson_emit(a: &AlgebraSpec, r: &RMatrixData) -> Result<WorkbenchSpec> {
    let (delta, coproduct) = coboundary_maps(a, r)?;
    let b = BialgebraSpec {
        alg: a.clone(),
        delta,
        coproduct,
    };
    Ok(WorkbenchSpec::from_bialgebra(&b).with_r(r))
}

fn double_into(spec: &WorkbenchSpec, out: &mut Builder) -> Result<()> {
    match spec.structure {
        Structure::Poisson => {
            let (d, r, cls) = drinfeld_double(&spec.bialgebra())?;
            out.classify(&cls, None);
            out.doc.emitted = Some(poisson_emit(&d, &r)?);
        }
        Structure::Differential => {
            let (d, r, cls) = diff_drinfeld_double(&spec.diff_bialgebra())?;
            out.classify(&cls, Some(CoboundaryForm::LeftRight));
            let mut e = WorkbenchSpec::from_diff(&d).with_r(&r);
            e.form = CoboundaryForm::LeftRight;
            out.doc.emitted = Some(e);
        }
    }
    Ok(())
}

fn convert_into(spec: &WorkbenchSpec, opts: &RunOptions, out: &mut Builder) -> Result<()> {
    let dir = opts
        .direction
        .ok_or_else(|| Error::MissingInput("direction".into()))?;
    out.doc.direction = Some(dir.as_str().to_string());
    let mut emitted = spec.clone();
    match (dir, spec.structure) {
        (Direction::Rb2Fact, Structure::Poisson) => {
            let w = spec.weight_or(opts.weight.as_ref())?;
            let rb = RotaBaxterData::new(spec.need(&spec.p, "P")?, w.clone())
                .with_form(spec.need(&spec.b, "B")?);
            let a = spec.algebra();
            out.check("quadratic_rb", check_quadratic_rb(&a, &rb)?);
            let r = qrb_to_factorizable(&a, &rb)?;
            out.classify(&classify_r(&a, &r), None);
            emitted.r = Some(r.r.matrix().clone());
            emitted.weight = Some(w);
        }
        (Direction::Rb2Fact, Structure::Differential) => {
            let w = spec.weight_or(opts.weight.as_ref())?;
            let f = BilinearFormData::new(spec.need(&spec.b, "B")?);
            let d = spec.diff_bialgebra().diff_alg;
            let (r, psi, cls) = rb_diff_to_r(&d, &f, &spec.need(&spec.p, "P")?, &w)?;
            out.classify(&cls, Some(CoboundaryForm::LeftLeft));
            emitted.r = Some(r.r.matrix().clone());
            emitted.psi = psi;
            emitted.weight = Some(w);
        }
        (Direction::Fact2Rb, Structure::Poisson) => {
            let w = spec.weight_or(opts.weight.as_ref())?;
            let r = spec.r_data()?;
            check_dims(spec, &r)?;
            let a = spec.algebra();
            let rb = factorizable_to_qrb(&a, &r, &w)?;
            let back = qrb_to_factorizable(&a, &rb)?;
            let mut trip = Report::new("round_trip");
            trip.require("r_recovered", back.r == r.r);
            out.check("round_trip", trip);
            emitted.p = Some(rb.p.clone());
            emitted.b = rb.form.map(|f| f.b);
            emitted.weight = Some(w);
        }
        (Direction::Fact2Rb, Structure::Differential) => {
            let w = spec.weight_or(opts.weight.as_ref())?;
            let r = spec.r_data()?;
            check_dims(spec, &r)?;
            let b = spec.diff_bialgebra();
            let (rb, rep) = diff_r_to_rb(&b.diff_alg, &b.diff_coalg.psi, &r, &w)?;
            out.check("diff_r_to_rb", rep);
            emitted.p = Some(rb.p.clone());
            emitted.b = rb.form.map(|f| f.b);
            emitted.weight = Some(w);
        }
        (Direction::Tilde, _) => {
            let w = spec.weight_or(opts.weight.as_ref())?;
            let mut rb = RotaBaxterData::new(spec.need(&spec.p, "P")?, w.clone());
            if let Some(b) = &spec.b {
                rb = rb.with_form(b.clone());
            }
            let mut a = spec.algebra();
            if spec.structure == Structure::Differential {
                a.bracket = Tensor3::zeros(spec.dim);
            }
            out.check("tilde_equivalence", tilde_equivalence(&a, &rb));
            emitted.p = Some(tilde_operator(&rb).p);
            emitted.weight = Some(w);
        }
        (Direction::Tau, s) => {
            let r = spec.r_data()?;
            check_dims(spec, &r)?;
            let tau = r.flip();
            let (cls, cls_tau) = match s {
                Structure::Poisson => (
                    classify_r(&spec.algebra(), &r),
                    classify_r(&spec.algebra(), &tau),
                ),
                Structure::Differential => {
                    let b = spec.diff_bialgebra();
                    (
                        classify_diff_r(&b.diff_alg, &b.diff_coalg.psi, &r, spec.form),
                        classify_diff_r(&b.diff_alg, &b.diff_coalg.psi, &tau, spec.form),
                    )
                }
            };
            let mut rep = Report::new("tau");
            rep.fact(&format!("label_r_{}", cls.label), true);
            rep.require("tau_consistent", cls.tau_consistent);
            out.check("tau", rep);
            let w = opts.weight.clone().or_else(|| spec.weight.clone());
            if let (Some(w), Structure::Poisson, Label::Factorizable) = (w, s, cls.label) {
                if !w.is_zero() {
                    out.check("diagram", diagram_check(&spec.algebra(), &r, &w)?);
                }
            }
            let form = (s == Structure::Differential).then_some(spec.form);
            out.classify(&cls_tau, form);
            emitted.r = Some(tau.r.matrix().clone());
        }
    }
    out.doc.emitted = Some(emitted);
    Ok(())
}

fn induce_into(spec: &WorkbenchSpec, out: &mut Builder) -> Result<()> {
    if spec.structure != Structure::Differential {
        return Err(Error::MissingInput("structure differential".into()));
    }
    let r = spec.r_data()?;
    check_dims(spec, &r)?;
    let (pb, cls, diagrams) = induce_poisson_bialgebra(&spec.diff_bialgebra(), &r)?;
    out.check("induction", diagrams);
    out.check("poisson_bialgebra", check_poisson_bialgebra(&pb));
    out.classify(&cls, None);
    out.doc.emitted = Some(WorkbenchSpec::from_bialgebra(&pb).with_r(&r));
    Ok(())
}

/// Dispatches `cmd` on `spec`.
pub fn run_command(
    cmd: Command,
    spec: &WorkbenchSpec,
    opts: &RunOptions,
) -> Result<ReportDocument> {
    let mut out = Builder::new(cmd, spec);
    if spec.structure == Structure::Poisson && (!spec.phi.is_empty() || !spec.psi.is_empty()) {
        out.doc
            .warnings
            .push("phi/psi ignored for a poisson structure".to_string());
    }
    if spec.structure == Structure::Differential
        && (!spec.bracket.is_zero() || !spec.delta.is_zero())
    {
        out.doc
            .warnings
            .push("bracket/delta ignored for a differential structure".to_string());
    }
    match cmd {
        Command::Check => check_suites(spec, opts, &mut out)?,
        Command::Classify => classify_into(spec, &mut out)?,
        Command::Double => double_into(spec, &mut out)?,
        Command::Convert => convert_into(spec, opts, &mut out)?,
        Command::Induce => induce_into(spec, &mut out)?,
        Command::Report => {
            check_suites(spec, opts, &mut out)?;
            if spec.r.is_some() {
                classify_into(spec, &mut out)?;
            }
        }
    }
    Ok(out.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

fn report_json(r: &Report) -> Value {
    let violations: Vec<Value> = r
        .violations()
        .iter()
        .map(|v| {
            json!({
                "identity": v.identity,
                "indices": v.indices,
                "residual": v.residual.iter().map(fmt_scalar).collect::<Vec<_>>(),
            })
        })
        .collect();
    let counts: Map<String, Value> = r
        .counts()
        .iter()
        .map(|(k, v)| (k.clone(), json!(v)))
        .collect();
    let facts: Map<String, Value> = r
        .facts()
        .iter()
        .map(|(k, v)| (k.clone(), json!(v)))
        .collect();
    json!({
        "passed": r.passed(),
        "violations_total": r.total_violations(),
        "counts": counts,
        "facts": facts,
        "violations": violations,
    })
}

fn machine(doc: &ReportDocument) -> String {
    let checks: Vec<Value> = doc
        .checks
        .iter()
        .map(|(name, r)| {
            let mut v = report_json(r);
            v["name"] = json!(name);
            v
        })
        .collect();
    let classification = doc.classification.as_ref().map_or(Value::Null, |c| {
        json!({
            "label": c.label.as_str(),
            "form": c.form.map(|f| f.to_string()),
            "properties": c.properties,
            "evidence": report_json(&c.evidence),
        })
    });
    let v = json!({
        "format": "pybx-report/1",
        "command": doc.command,
        "direction": doc.direction,
        "input_sha256": doc.input_digest,
        "verdict": if doc.verdict { "pass" } else { "fail" },
        "checks": checks,
        "classification": classification,
        "emitted_spec": doc.emitted.as_ref().map(serialize_spec),
        "warnings": doc.warnings,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn human(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let verdict = if doc.verdict { "PASS" } else { "FAIL" };
    let cmd = match &doc.direction {
        Some(d) => format!("{} --direction {d}", doc.command),
        None => doc.command.clone(),
    };
    let _ = writeln!(out, "command  {cmd}");
    let _ = writeln!(out, "input    sha256:{}", doc.input_digest);
    let _ = writeln!(out, "verdict  {verdict}");
    for w in &doc.warnings {
        let _ = writeln!(out, "warning  {w}");
    }
    if !doc.checks.is_empty() {
        let _ = writeln!(out);
        let width = doc
            .checks
            .iter()
            .map(|(n, _)| n.len())
            .max()
            .unwrap_or(0)
            .max(5);
        let _ = writeln!(out, "{:<width$}  {:<6}  violations", "check", "status");
        for (name, r) in &doc.checks {
            let st = if r.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{name:<width$}  {st:<6}  {}", r.total_violations());
        }
        for (name, r) in &doc.checks {
            if let Some(v) = r.first_violation() {
                let res: Vec<String> = v.residual.iter().map(fmt_scalar).collect();
                let _ = writeln!(
                    out,
                    "first violation in {name}: {} at {:?} residual [{}]",
                    v.identity,
                    v.indices,
                    res.join(", ")
                );
            }
        }
    }
    if let Some(c) = &doc.classification {
        let _ = writeln!(out);
        match c.form {
            Some(f) => {
                let _ = writeln!(out, "classification  {} (coproduct form {f})", c.label);
            }
            None => {
                let _ = writeln!(out, "classification  {}", c.label);
            }
        }
        for (k, v) in &c.properties {
            let _ = writeln!(out, "  {k:<16}{v}");
        }
    }
    if let Some(e) = &doc.emitted {
        let _ = writeln!(out);
        let _ = writeln!(out, "emitted spec:");
        out.push_str(&serialize_spec(e));
    }
    out
}

/// Renders a document; both formats are deterministic.
pub fn emit_report(doc: &ReportDocument, format: Format) -> String {
    match format {
        Format::Human => human(doc),
        Format::Machine => machine(doc),
    }
}

/// Process exit status: 0 pass, 1 fail.
pub fn exit_status(doc: &ReportDocument) -> i32 {
    if doc.verdict {
        0
    } else {
        1
    }
}

/// Whether an error is a usage or input-format problem (exit status 2).
pub fn is_usage_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Parse { .. } | Error::IndexOutOfRange { .. } | Error::MissingInput(_) | Error::Io(_)
    )
}

/// Convenience for emitting fixtures: an r-matrix spec over a Poisson algebra.
pub fn poisson_spec(a: &AlgebraSpec, r: Option<&RMatrixData>) -> WorkbenchSpec {
    let mut s = WorkbenchSpec::from_bialgebra(&BialgebraSpec::trivial(a.clone()));
    s.commutative = true;
    if let Some(r) = r {
        s.r = Some(r.r.matrix().clone());
    }
    s
}
