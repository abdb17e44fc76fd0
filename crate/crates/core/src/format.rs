//! The algebra file format: a JSON document describing a Hopf algebra, an
//! R-matrix and named objects (algebras or brackets) by structure constants.
//!
//! Scalars are written as strings (`"1/2"`, `"b^2 - 1"`), matrices as lists of
//! rows, and products as sparse `[i, j, k, "coefficient"]` entries with
//! 0-based basis indices. [`print_algebra_file`] emits a canonical layout and
//! `print(parse(text)) == text` for any file already in that layout.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use json_spanned_value::Spanned;
use serde::Deserialize;
use thiserror::Error;

use crate::bihom::{BiHomAlgebra, BiHomLie};
use crate::hmod::HModule;
use crate::hopf::{group_algebra, HopfAlgebra, RMatrix};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Rational, Scalar, ScalarError};
use crate::tensor::Tensor3;

/// `(i, j, k, c)`: coefficient `c` of basis `k` in the product of `i` and `j`.
pub type Entry = (usize, usize, usize, Scalar);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Located {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for Located {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

fn join_located(errors: &[Located]) -> String {
    errors.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("parse error:\n{}", join_located(.0))]
    Parse(Vec<Located>),
    #[error("validation error:\n{}", join_located(.0))]
    Validation(Vec<Located>),
    #[error("no object named `{0}`")]
    UnknownObject(String),
    #[error("object `{name}` is {found}, expected {expected}")]
    WrongKind {
        name: String,
        found: ObjectKind,
        expected: ObjectKind,
    },
    #[error("cannot build `{0}`: {1}")]
    Build(String, String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl FormatError {
    pub fn located(&self) -> &[Located] {
        match self {
            FormatError::Parse(v) | FormatError::Validation(v) => v,
            _ => &[],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    Associative,
    Lie,
}

impl ObjectKind {
    fn table_field(self) -> &'static str {
        match self {
            ObjectKind::Associative => "mult",
            ObjectKind::Lie => "bracket",
        }
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectKind::Associative => "associative",
            ObjectKind::Lie => "lie",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HopfSpec {
    /// Group algebra given by element names and a Cayley table of indices.
    Group {
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
    },
    Raw {
        basis: Vec<String>,
        mult: Vec<Entry>,
        unit: Vector,
        /// `(i, j, k, c)`: coefficient of `e_j ⊗ e_k` in the coproduct of `e_i`.
        comult: Vec<Entry>,
        counit: Vector,
        antipode: Matrix,
    },
}

impl HopfSpec {
    pub fn basis(&self) -> &[String] {
        match self {
            HopfSpec::Group { elements, .. } => elements,
            HopfSpec::Raw { basis, .. } => basis,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectSpec {
    pub name: String,
    pub kind: ObjectKind,
    pub basis: Vec<String>,
    /// One matrix per Hopf basis element; `None` means the trivial action `h ↦ ε(h)·id`.
    pub action: Option<Vec<Matrix>>,
    pub table: Vec<Entry>,
    pub alpha: Matrix,
    pub beta: Matrix,
    pub unit: Option<Vector>,
    pub twist: Option<(Matrix, Matrix)>,
    /// Externally supplied values of the derived bracket, compared informationally.
    pub reference_bracket: Option<Vec<Entry>>,
}

impl ObjectSpec {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn table_tensor(&self) -> Tensor3 {
        Tensor3::from_sparse(self.dim(), self.table.iter().cloned())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub parameters: Vec<String>,
    pub hopf: HopfSpec,
    pub rmatrix: Option<Matrix>,
    pub objects: Vec<ObjectSpec>,
}

/// A file's objects built into checked structures.
#[derive(Debug, Clone)]
pub struct Instance {
    pub hopf: Arc<HopfAlgebra>,
    pub rmatrix: RMatrix,
}

impl AlgebraFile {
    pub fn object(&self, name: &str) -> Result<&ObjectSpec, FormatError> {
        self.objects
            .iter()
            .find(|o| o.name == name)
            .ok_or_else(|| FormatError::UnknownObject(name.to_string()))
    }

    pub fn build_hopf(&self) -> Result<Arc<HopfAlgebra>, FormatError> {
        let h = match &self.hopf {
            HopfSpec::Group { elements, table } => {
                let identity = identity_of(table).expect("validated");
                group_algebra(elements.clone(), table, identity)
            }
            HopfSpec::Raw {
                basis,
                mult,
                unit,
                comult,
                counit,
                antipode,
            } => {
                let d = basis.len();
                HopfAlgebra::new(
                    basis.clone(),
                    Tensor3::from_sparse(d, mult.iter().cloned()),
                    unit.clone(),
                    Tensor3::from_sparse(d, comult.iter().cloned()),
                    counit.clone(),
                    antipode.clone(),
                )
            }
        };
        h.map(Arc::new).map_err(|e| FormatError::Build("hopf".into(), e.to_string()))
    }

    /// Hopf algebra and R-matrix (`1⊗1` when the file gives none).
    pub fn instance(&self) -> Result<Instance, FormatError> {
        let hopf = self.build_hopf()?;
        let rmatrix = match &self.rmatrix {
            Some(m) => RMatrix::new(&hopf, m.clone()).map_err(|e| FormatError::Build("rmatrix".into(), e.to_string()))?,
            None => RMatrix::trivial(&hopf),
        };
        Ok(Instance { hopf, rmatrix })
    }

    pub fn build_module(&self, hopf: &Arc<HopfAlgebra>, obj: &ObjectSpec) -> Result<HModule, FormatError> {
        let built = match &obj.action {
            Some(action) => HModule::new(hopf.clone(), obj.basis.clone(), action.clone()),
            None => Ok(HModule::trivial(hopf.clone(), obj.basis.clone())),
        };
        built.map_err(|e| FormatError::Build(obj.name.clone(), e.to_string()))
    }

    fn expect_kind<'a>(&'a self, name: &str, kind: ObjectKind) -> Result<&'a ObjectSpec, FormatError> {
        let obj = self.object(name)?;
        if obj.kind != kind {
            return Err(FormatError::WrongKind {
                name: name.into(),
                found: obj.kind,
                expected: kind,
            });
        }
        Ok(obj)
    }

    pub fn build_algebra(&self, inst: &Instance, name: &str) -> Result<BiHomAlgebra, FormatError> {
        let obj = self.expect_kind(name, ObjectKind::Associative)?;
        let module = self.build_module(&inst.hopf, obj)?;
        BiHomAlgebra::new(
            module,
            obj.table_tensor(),
            obj.alpha.clone(),
            obj.beta.clone(),
            obj.unit.clone(),
        )
        .map_err(|e| FormatError::Build(name.into(), e.to_string()))
    }

    pub fn build_lie(&self, inst: &Instance, name: &str) -> Result<BiHomLie, FormatError> {
        let obj = self.expect_kind(name, ObjectKind::Lie)?;
        let module = self.build_module(&inst.hopf, obj)?;
        BiHomLie::new(
            module,
            obj.table_tensor(),
            obj.alpha.clone(),
            obj.beta.clone(),
            inst.rmatrix.clone(),
        )
        .map_err(|e| FormatError::Build(name.into(), e.to_string()))
    }

    /// Substitutes rational values for parameters throughout the file; bound
    /// names are dropped from the parameter list.
    pub fn substitute(&self, bindings: &BTreeMap<String, Rational>) -> Result<AlgebraFile, FormatError> {
        for name in bindings.keys() {
            if !self.parameters.contains(name) {
                return Err(FormatError::Scalar(ScalarError::UnboundParameter(name.clone())));
            }
        }
        let f = |s: &Scalar| s.substitute_partial(bindings);
        let mat = |m: &Matrix| m.map_entries(f);
        let vec = |v: &Vector| v.iter().map(f).collect::<Result<Vector, _>>();
        let entries = |es: &[Entry]| {
            es.iter()
                .map(|(i, j, k, c)| Ok((*i, *j, *k, f(c)?)))
                .collect::<Result<Vec<Entry>, ScalarError>>()
        };
        let hopf = match &self.hopf {
            HopfSpec::Group { .. } => self.hopf.clone(),
            HopfSpec::Raw {
                basis,
                mult,
                unit,
                comult,
                counit,
                antipode,
            } => HopfSpec::Raw {
                basis: basis.clone(),
                mult: entries(mult)?,
                unit: vec(unit)?,
                comult: entries(comult)?,
                counit: vec(counit)?,
                antipode: mat(antipode)?,
            },
        };
        let mut objects = Vec::new();
        for o in &self.objects {
            objects.push(ObjectSpec {
                name: o.name.clone(),
                kind: o.kind,
                basis: o.basis.clone(),
                action: o.action.as_ref().map(|a| a.iter().map(mat).collect()).transpose()?,
                table: entries(&o.table)?,
                alpha: mat(&o.alpha)?,
                beta: mat(&o.beta)?,
                unit: o.unit.as_ref().map(vec).transpose()?,
                twist: o
                    .twist
                    .as_ref()
                    .map(|(a, b)| Ok::<_, ScalarError>((mat(a)?, mat(b)?)))
                    .transpose()?,
                reference_bracket: o.reference_bracket.as_deref().map(entries).transpose()?,
            });
        }
        Ok(AlgebraFile {
            parameters: self
                .parameters
                .iter()
                .filter(|p| !bindings.contains_key(*p))
                .cloned()
                .collect(),
            hopf,
            rmatrix: self.rmatrix.as_ref().map(mat).transpose()?,
            objects,
        })
    }
}

fn identity_of(table: &[Vec<usize>]) -> Option<usize> {
    (0..table.len()).find(|&i| table[i].iter().enumerate().all(|(j, &v)| v == j))
}

// Raw, span-carrying form of the document.

type SpStr = Spanned<String>;
type RawMatrix = Spanned<Vec<Vec<SpStr>>>;
type RawEntries = Vec<Spanned<(usize, usize, usize, String)>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    #[serde(default)]
    parameters: Vec<SpStr>,
    hopf: Spanned<RawHopf>,
    #[serde(default)]
    rmatrix: Option<RawMatrix>,
    #[serde(default)]
    objects: Vec<Spanned<RawObject>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHopf {
    group: Option<Spanned<RawGroup>>,
    basis: Option<Vec<SpStr>>,
    mult: Option<RawEntries>,
    unit: Option<Spanned<Vec<SpStr>>>,
    comult: Option<RawEntries>,
    counit: Option<Spanned<Vec<SpStr>>>,
    antipode: Option<RawMatrix>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    elements: Vec<SpStr>,
    table: Spanned<Vec<Vec<SpStr>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTwist {
    alpha: RawMatrix,
    beta: RawMatrix,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawObject {
    name: SpStr,
    kind: SpStr,
    dim: Spanned<usize>,
    basis: Spanned<Vec<SpStr>>,
    action: Option<Spanned<BTreeMap<String, RawMatrix>>>,
    mult: Option<RawEntries>,
    bracket: Option<RawEntries>,
    alpha: Option<RawMatrix>,
    beta: Option<RawMatrix>,
    unit: Option<Spanned<Vec<SpStr>>>,
    twist: Option<Spanned<RawTwist>>,
    reference_bracket: Option<RawEntries>,
}

struct Validator<'t> {
    text: &'t str,
    parameters: Vec<String>,
    errors: Vec<Located>,
}

impl<'t> Validator<'t> {
    fn position(&self, offset: usize) -> (usize, usize) {
        let before = &self.text[..offset.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
        (line, column)
    }

    fn error(&mut self, offset: usize, message: impl Into<String>) {
        let (line, column) = self.position(offset);
        self.errors.push(Located {
            line,
            column,
            message: message.into(),
        });
    }

    fn scalar(&mut self, offset: usize, text: &str) -> Scalar {
        match text.parse::<Scalar>() {
            Ok(s) => {
                if let Some(v) = s.variables().into_iter().find(|v| !self.parameters.contains(v)) {
                    self.error(offset, format!("unknown parameter `{v}` in \"{text}\""));
                }
                s
            }
            Err(e) => {
                self.error(offset, format!("bad scalar \"{text}\": {e}"));
                Scalar::zero()
            }
        }
    }

    fn vector(&mut self, v: &Spanned<Vec<SpStr>>, len: usize, what: &str) -> Vector {
        if v.len() != len {
            self.error(v.start(), format!("{what} has length {}, expected {len}", v.len()));
        }
        v.iter().map(|s| self.scalar(s.start(), s)).collect()
    }

    fn matrix(&mut self, m: &RawMatrix, n: usize, what: &str) -> Matrix {
        let rows: Vec<Vec<Scalar>> = m
            .iter()
            .map(|row| row.iter().map(|s| self.scalar(s.start(), s)).collect())
            .collect();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            self.error(m.start(), format!("{what} must be {n}x{n}"));
            return Matrix::zeros(n, n);
        }
        Matrix::from_rows(rows).expect("square rows")
    }

    fn entries(&mut self, es: &RawEntries, dim: usize, what: &str) -> Vec<Entry> {
        let mut out = Vec::new();
        for e in es {
            let (i, j, k, c) = e.get_ref();
            if *i >= dim || *j >= dim || *k >= dim {
                self.error(
                    e.start(),
                    format!("{what} entry [{i}, {j}, {k}, \"{c}\"] references a basis index out of range (dim {dim})"),
                );
                continue;
            }
            let s = self.scalar(e.start(), c);
            out.push((*i, *j, *k, s));
        }
        out
    }

    fn names(&mut self, names: &[SpStr], what: &str) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for n in names {
            if out.contains(n.get_ref()) {
                self.error(n.start(), format!("duplicate {what} name `{}`", n.get_ref()));
            }
            out.push(n.get_ref().clone());
        }
        out
    }

    fn hopf(&mut self, raw: &Spanned<RawHopf>) -> Option<HopfSpec> {
        match (&raw.group, &raw.basis) {
            (Some(g), None) => {
                if raw.mult.is_some() || raw.unit.is_some() || raw.comult.is_some() || raw.counit.is_some() || raw.antipode.is_some()
                {
                    self.error(raw.start(), "hopf: `group` excludes explicit structure tensors");
                }
                let elements = self.names(&g.elements, "group element");
                let n = elements.len();
                if n == 0 {
                    self.error(g.start(), "group has no elements");
                    return None;
                }
                let mut table = Vec::new();
                for row in g.table.iter() {
                    let mut r = Vec::new();
                    for cell in row {
                        match elements.iter().position(|e| e == cell.get_ref()) {
                            Some(p) => r.push(p),
                            None => {
                                self.error(cell.start(), format!("unknown group element `{}`", cell.get_ref()));
                                r.push(0);
                            }
                        }
                    }
                    table.push(r);
                }
                if table.len() != n || table.iter().any(|r| r.len() != n) {
                    self.error(g.table.start(), format!("group table must be {n}x{n}"));
                    return None;
                }
                if identity_of(&table).is_none() {
                    self.error(g.table.start(), "group table has no identity element");
                    return None;
                }
                if let Err(e) = group_algebra(elements.clone(), &table, identity_of(&table).unwrap()) {
                    self.error(g.table.start(), e.to_string());
                    return None;
                }
                Some(HopfSpec::Group { elements, table })
            }
            (None, Some(basis)) => {
                let basis = self.names(basis, "hopf basis");
                let d = basis.len();
                let missing = |v: &mut Self, field: &str| v.error(raw.start(), format!("hopf: {field} required"));
                let (Some(mult), Some(unit), Some(comult), Some(counit), Some(antipode)) =
                    (&raw.mult, &raw.unit, &raw.comult, &raw.counit, &raw.antipode)
                else {
                    for (field, present) in [
                        ("mult", raw.mult.is_some()),
                        ("unit", raw.unit.is_some()),
                        ("comult", raw.comult.is_some()),
                        ("counit", raw.counit.is_some()),
                        ("antipode", raw.antipode.is_some()),
                    ] {
                        if !present {
                            missing(self, field);
                        }
                    }
                    return None;
                };
                Some(HopfSpec::Raw {
                    mult: self.entries(mult, d, "hopf mult"),
                    unit: self.vector(unit, d, "hopf unit"),
                    comult: self.entries(comult, d, "hopf comult"),
                    counit: self.vector(counit, d, "hopf counit"),
                    antipode: self.matrix(antipode, d, "hopf antipode"),
                    basis,
                })
            }
            _ => {
                self.error(raw.start(), "hopf: give exactly one of `group` or `basis` with structure tensors");
                None
            }
        }
    }

    fn object(&mut self, raw: &Spanned<RawObject>, hopf_basis: &[String]) -> Option<ObjectSpec> {
        let start = raw.start();
        let name = raw.name.get_ref().clone();
        let kind = match raw.kind.as_str() {
            "associative" => ObjectKind::Associative,
            "lie" => ObjectKind::Lie,
            other => {
                self.error(raw.kind.start(), format!("kind must be \"associative\" or \"lie\", got \"{other}\""));
                return None;
            }
        };
        let basis = self.names(&raw.basis, "basis");
        let d = *raw.dim.get_ref();
        if basis.len() != d {
            self.error(raw.basis.start(), format!("{} basis names for dim {d}", basis.len()));
            return None;
        }
        let action = raw.action.as_ref().map(|a| {
            for key in a.keys() {
                if !hopf_basis.contains(key) {
                    self.error(a.start(), format!("action given for unknown Hopf basis element `{key}`"));
                }
            }
            hopf_basis
                .iter()
                .map(|h| match a.get(h) {
                    Some(m) => self.matrix(m, d, &format!("action of `{h}`")),
                    None => {
                        self.error(a.start(), format!("action of `{h}` required"));
                        Matrix::identity(d)
                    }
                })
                .collect()
        });
        let field = kind.table_field();
        let (wanted, unwanted) = match kind {
            ObjectKind::Associative => (&raw.mult, &raw.bracket),
            ObjectKind::Lie => (&raw.bracket, &raw.mult),
        };
        if unwanted.is_some() {
            let other = if field == "mult" { "bracket" } else { "mult" };
            self.error(start, format!("`{other}` not allowed for a {kind} object"));
        }
        let table = match wanted {
            Some(es) => self.entries(es, d, field),
            None => {
                self.error(start, format!("{field} required"));
                Vec::new()
            }
        };
        let mut map = |m: &Option<RawMatrix>, what: &str| match m {
            Some(m) => Some(self.matrix(m, d, what)),
            None => {
                self.error(start, format!("{what} required"));
                None
            }
        };
        let alpha = map(&raw.alpha, "alpha");
        let beta = map(&raw.beta, "beta");
        let unit = raw.unit.as_ref().map(|u| self.vector(u, d, "unit"));
        if unit.is_some() && kind == ObjectKind::Lie {
            self.error(start, "unit not allowed for a lie object");
        }
        let twist = raw.twist.as_ref().map(|t| {
            (
                self.matrix(&t.alpha, d, "twist alpha"),
                self.matrix(&t.beta, d, "twist beta"),
            )
        });
        let reference_bracket = raw
            .reference_bracket
            .as_ref()
            .map(|es| self.entries(es, d, "reference_bracket"));
        Some(ObjectSpec {
            name,
            kind,
            basis,
            action,
            table,
            alpha: alpha?,
            beta: beta?,
            unit,
            twist,
            reference_bracket,
        })
    }
}

pub fn parse_algebra_file(text: &str) -> Result<AlgebraFile, FormatError> {
    let raw: RawFile = json_spanned_value::from_str(text).map_err(|e| {
        FormatError::Parse(vec![Located {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }])
    })?;
    let mut v = Validator {
        text,
        parameters: Vec::new(),
        errors: Vec::new(),
    };
    let parameters = v.names(&raw.parameters, "parameter");
    for p in &raw.parameters {
        let ok = p.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && p.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            v.error(p.start(), format!("`{}` is not a valid parameter name", p.get_ref()));
        }
    }
    v.parameters = parameters.clone();
    let hopf = v.hopf(&raw.hopf);
    let hopf_basis: Vec<String> = hopf.as_ref().map(|h| h.basis().to_vec()).unwrap_or_default();
    let dh = hopf_basis.len();
    let rmatrix = raw.rmatrix.as_ref().map(|m| v.matrix(m, dh, "rmatrix"));
    let mut objects = Vec::new();
    let mut seen: Vec<String> = Vec::new();
    for o in &raw.objects {
        if seen.contains(o.name.get_ref()) {
            v.error(o.name.start(), format!("duplicate object name `{}`", o.name.get_ref()));
        }
        seen.push(o.name.get_ref().clone());
        if let Some(obj) = v.object(o, &hopf_basis) {
            objects.push(obj);
        }
    }
    if !v.errors.is_empty() {
        return Err(FormatError::Validation(v.errors));
    }
    Ok(AlgebraFile {
        parameters,
        hopf: hopf.expect("no errors"),
        rmatrix,
        objects,
    })
}

// Canonical printer.

fn q(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

fn str_list(items: &[String]) -> String {
    let parts: Vec<String> = items.iter().map(|s| q(s)).collect();
    format!("[{}]", parts.join(", "))
}

fn scalar_list(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|s| q(&s.to_string())).collect();
    format!("[{}]", parts.join(", "))
}

fn matrix_inline(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|r| scalar_list(m.row(r))).collect();
    format!("[{}]", rows.join(", "))
}

fn entries_block(out: &mut String, indent: &str, es: &[Entry]) {
    if es.is_empty() {
        out.push_str("[]");
        return;
    }
    out.push_str("[\n");
    for (n, (i, j, k, c)) in es.iter().enumerate() {
        let sep = if n + 1 == es.len() { "" } else { "," };
        let _ = writeln!(out, "{indent}  [{i}, {j}, {k}, {}]{sep}", q(&c.to_string()));
    }
    out.push_str(indent);
    out.push(']');
}

fn fields(out: &mut String, indent: &str, items: Vec<(&str, String)>) {
    out.push_str("{\n");
    let n = items.len();
    for (idx, (key, value)) in items.into_iter().enumerate() {
        let sep = if idx + 1 == n { "" } else { "," };
        let _ = writeln!(out, "{indent}  {}: {value}{sep}", q(key));
    }
    out.push_str(indent);
    out.push('}');
}

fn print_hopf(h: &HopfSpec) -> String {
    let mut out = String::new();
    match h {
        HopfSpec::Group { elements, table } => {
            let rows: Vec<String> = table
                .iter()
                .map(|r| {
                    let names: Vec<String> = r.iter().map(|&i| elements[i].clone()).collect();
                    format!("        {}", str_list(&names))
                })
                .collect();
            let table = format!("[\n{}\n      ]", rows.join(",\n"));
            let mut group = String::new();
            fields(
                &mut group,
                "    ",
                vec![("elements", str_list(elements)), ("table", table)],
            );
            fields(&mut out, "  ", vec![("group", group)]);
        }
        HopfSpec::Raw {
            basis,
            mult,
            unit,
            comult,
            counit,
            antipode,
        } => {
            let mut m = String::new();
            entries_block(&mut m, "    ", mult);
            let mut c = String::new();
            entries_block(&mut c, "    ", comult);
            fields(
                &mut out,
                "  ",
                vec![
                    ("basis", str_list(basis)),
                    ("mult", m),
                    ("unit", scalar_list(unit)),
                    ("comult", c),
                    ("counit", scalar_list(counit)),
                    ("antipode", matrix_inline(antipode)),
                ],
            );
        }
    }
    out
}

fn print_object(o: &ObjectSpec, hopf_basis: &[String]) -> String {
    let ind = "      ";
    let mut items: Vec<(&str, String)> = vec![
        ("name", q(&o.name)),
        ("kind", q(&o.kind.to_string())),
        ("dim", o.dim().to_string()),
        ("basis", str_list(&o.basis)),
    ];
    if let Some(action) = &o.action {
        let mut a = String::new();
        fields(
            &mut a,
            ind,
            hopf_basis
                .iter()
                .zip(action)
                .map(|(h, m)| (h.as_str(), matrix_inline(m)))
                .collect(),
        );
        items.push(("action", a));
    }
    let mut t = String::new();
    entries_block(&mut t, ind, &o.table);
    items.push((o.kind.table_field(), t));
    items.push(("alpha", matrix_inline(&o.alpha)));
    items.push(("beta", matrix_inline(&o.beta)));
    if let Some(u) = &o.unit {
        items.push(("unit", scalar_list(u)));
    }
    if let Some((a, b)) = &o.twist {
        let mut t = String::new();
        fields(
            &mut t,
            ind,
            vec![("alpha", matrix_inline(a)), ("beta", matrix_inline(b))],
        );
        items.push(("twist", t));
    }
    if let Some(r) = &o.reference_bracket {
        let mut t = String::new();
        entries_block(&mut t, ind, r);
        items.push(("reference_bracket", t));
    }
    let mut out = String::new();
    fields(&mut out, "    ", items);
    out
}

pub fn print_algebra_file(f: &AlgebraFile) -> String {
    let mut items = vec![
        ("parameters", str_list(&f.parameters)),
        ("hopf", print_hopf(&f.hopf)),
    ];
    if let Some(r) = &f.rmatrix {
        items.push(("rmatrix", matrix_inline(r)));
    }
    let objects: Vec<String> = f
        .objects
        .iter()
        .map(|o| format!("    {}", print_object(o, f.hopf.basis())))
        .collect();
    let objects = if objects.is_empty() {
        "[]".to_string()
    } else {
        format!("[\n{}\n  ]", objects.join(",\n"))
    };
    items.push(("objects", objects));
    let mut out = String::new();
    fields(&mut out, "", items);
    out.push('\n');
    out
}

/// Structure constants of a tensor as sparse entries in `(i, j, k)` order.
pub fn entries_of(t: &Tensor3) -> Vec<Entry> {
    t.nonzero_entries()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{
  "parameters": ["b"],
  "hopf": {
    "group": {
      "elements": ["e", "g"],
      "table": [
        ["e", "g"],
        ["g", "e"]
      ]
    }
  },
  "rmatrix": [["1/2", "1/2"], ["1/2", "-1/2"]],
  "objects": [
    {
      "name": "a",
      "kind": "associative",
      "dim": 2,
      "basis": ["x1", "x2"],
      "action": {
        "e": [["1", "0"], ["0", "1"]],
        "g": [["1", "0"], ["0", "-1"]]
      },
      "mult": [
        [0, 0, 0, "1"],
        [0, 1, 1, "b"],
        [1, 0, 1, "-1"]
      ],
      "alpha": [["1", "0"], ["0", "-1"]],
      "beta": [["1", "0"], ["0", "b"]],
      "unit": ["1", "0"]
    }
  ]
}
"#;

    #[test]
    fn round_trip() {
        let f = parse_algebra_file(SMALL).unwrap();
        assert_eq!(print_algebra_file(&f), SMALL);
        assert_eq!(f.objects[0].table.len(), 3);
    }

    #[test]
    fn index_out_of_range_names_the_triple() {
        let text = SMALL.replace("[0, 1, 1, \"b\"]", "[0, 1, 5, \"b\"]");
        let err = parse_algebra_file(&text).unwrap_err();
        let FormatError::Validation(errs) = err else { panic!("{err:?}") };
        assert_eq!(errs.len(), 1);
        assert!(errs[0].message.contains("[0, 1, 5, \"b\"]"), "{}", errs[0]);
        assert_eq!(errs[0].line, 25);
    }

    #[test]
    fn missing_beta() {
        let text = SMALL.replace("      \"beta\": [[\"1\", \"0\"], [\"0\", \"b\"]],\n", "");
        let err = parse_algebra_file(&text).unwrap_err();
        assert!(err.located().iter().any(|e| e.message == "beta required"), "{err}");
    }

    #[test]
    fn unknown_parameter_and_bad_scalar() {
        let text = SMALL.replace("\"0\", \"b\"]", "\"0\", \"c\"]").replace("\"-1\"]", "\"1/\"]");
        let err = parse_algebra_file(&text).unwrap_err();
        let msgs: Vec<&str> = err.located().iter().map(|e| e.message.as_str()).collect();
        assert!(msgs.iter().any(|m| m.contains("unknown parameter `c`")), "{msgs:?}");
        assert!(msgs.iter().any(|m| m.contains("bad scalar")), "{msgs:?}");
    }

    #[test]
    fn syntax_errors_are_located() {
        let err = parse_algebra_file("{\n  \"parameters\": [,]\n}").unwrap_err();
        let FormatError::Parse(errs) = err else { panic!() };
        assert_eq!(errs[0].line, 2);
    }

    #[test]
    fn substitution_binds_parameters() {
        let f = parse_algebra_file(SMALL).unwrap();
        let mut b = BTreeMap::new();
        b.insert("b".to_string(), Rational::from_integer(3.into()));
        let g = f.substitute(&b).unwrap();
        assert!(g.parameters.is_empty());
        assert_eq!(g.objects[0].table[1].3, Scalar::from_int(3));
        assert!(f.substitute(&BTreeMap::from([("z".to_string(), Rational::from_integer(1.into()))])).is_err());
    }

    #[test]
    fn builds_structures() {
        let f = parse_algebra_file(SMALL).unwrap();
        let inst = f.instance().unwrap();
        let a = f.build_algebra(&inst, "a").unwrap();
        assert!(crate::bihom::check_bihom_associative(&a).passed());
        assert!(matches!(f.build_lie(&inst, "a"), Err(FormatError::WrongKind { .. })));
        assert!(matches!(f.build_lie(&inst, "zz"), Err(FormatError::UnknownObject(_))));
    }
}
