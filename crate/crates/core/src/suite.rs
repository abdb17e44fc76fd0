//! Orchestration over algebra files: verification suites, constructions and
//! structure computations, each producing a [`CheckReport`].

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};
use thiserror::Error;

use crate::bihom::{
    check_bihom_associative, check_derivation_identities, check_generalized_bihom_lie, check_module_algebra,
    commutator_bracket, format_combination, reference_diff, table_rows, twist_bracket, BiHomError, BiHomLie,
    TwistedStructure,
};
use crate::format::{entries_of, AlgebraFile, FormatError, Instance, ObjectKind, ObjectSpec};
use crate::hmod::{
    check_braiding_naturality, check_braiding_symmetry, check_equivariant_product, check_hexagons, check_module,
    HModule, ModuleMap,
};
use crate::hopf::{check_hopf_axioms, check_quasitriangular, check_r_normalization, is_triangular};
use crate::linalg::{Subspace, Vector};
use crate::report::{skipped, AxiomCheck, CheckReport, InfoEntry, Toolchain};
use crate::scalar::Scalar;
use crate::structure::{
    center, check_ideal_in_normalizer, check_proper_ideals_of_derived, derived_series,
    format_subspace, ideal_closure, is_h_bihom_ideal, is_h_bihom_lie_ideal, lower_central_series,
    simplicity_certificate, Certificate, ClosureKind, PrimeVerdict, SemiprimeVerdict, SeriesResult,
    SimplicityVerdict, DEFAULT_MAX_STEPS, DEFAULT_PROBES,
};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Format(#[from] FormatError),
    /// The input is well-formed but the requested operation does not apply.
    #[error("refused: {0}")]
    Precondition(String),
    #[error("{0}")]
    Input(String),
}

impl From<BiHomError> for SuiteError {
    fn from(e: BiHomError) -> Self {
        SuiteError::Precondition(e.to_string())
    }
}

impl From<crate::linalg::LinalgError> for SuiteError {
    fn from(e: crate::linalg::LinalgError) -> Self {
        SuiteError::Input(e.to_string())
    }
}

macro_rules! named_enum {
    ($name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq)]
        pub enum $name {
            $($variant),+
        }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $($name::$variant => $text),+
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                $name::ALL
                    .iter()
                    .copied()
                    .find(|v| v.as_str() == s)
                    .ok_or_else(|| {
                        let names: Vec<&str> = $name::ALL.iter().map(|v| v.as_str()).collect();
                        format!("unknown value `{s}`, expected one of: {}", names.join(", "))
                    })
            }
        }
    };
}

named_enum!(Suite {
    Hopf => "hopf",
    Module => "module",
    ModuleAlgebra => "module-algebra",
    BiHomAssoc => "bihom-assoc",
    BiHomLie => "bihom-lie",
    Lemma31 => "lemma31",
    Structure => "structure",
    All => "all",
});

named_enum!(Construction {
    Commutator => "commutator",
    Twist => "twist",
});

named_enum!(StructureOp {
    Center => "center",
    DerivedSeries => "derived-series",
    Lcs => "lcs",
    IdealCheck => "ideal-check",
    Closure => "closure",
    Certificate => "certificate",
});

#[derive(Debug, Clone)]
pub struct Options {
    /// Restrict to one object; all objects when `None`.
    pub object: Option<String>,
    pub max_steps: usize,
    pub probe_seed: u64,
    pub probes: usize,
    /// Generators for `ideal-check`, `closure` and `lcs`: vectors of scalars,
    /// or basis names standing for basis vectors.
    pub vectors: Vec<Vec<String>>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            object: None,
            max_steps: DEFAULT_MAX_STEPS,
            probe_seed: 0,
            probes: DEFAULT_PROBES,
            vectors: Vec::new(),
        }
    }
}

fn toolchain(opts: &Options) -> Toolchain {
    Toolchain {
        version: env!("CARGO_PKG_VERSION").to_string(),
        probe_seed: opts.probe_seed,
    }
}

fn selected<'a>(file: &'a AlgebraFile, opts: &Options) -> Result<Vec<&'a ObjectSpec>, SuiteError> {
    match &opts.object {
        Some(name) => Ok(vec![file.object(name)?]),
        None => Ok(file.objects.iter().collect()),
    }
}

fn hopf_suite(inst: &Instance) -> CheckReport {
    let mut report = CheckReport::new("hopf");
    report.absorb("hopf", check_hopf_axioms(&inst.hopf));
    match check_quasitriangular(&inst.hopf, &inst.rmatrix) {
        Ok(qt) => report.absorb("rmatrix", qt),
        Err(e) => report.push(skipped("rmatrix/qt", "R invertible", &format!("refused: {e}"))),
    }
    report.absorb("rmatrix", check_r_normalization(&inst.hopf, &inst.rmatrix));
    let triangular = is_triangular(&inst.hopf, &inst.rmatrix);
    report.info.push(InfoEntry {
        topic: "triangular".into(),
        message: if triangular {
            "R⁻¹ = flip(R): the braiding is symmetric".into()
        } else {
            "R⁻¹ != flip(R): the braiding is not symmetric".into()
        },
        rows: vec![],
    });
    report
}

fn module_suite(file: &AlgebraFile, inst: &Instance, objects: &[&ObjectSpec]) -> Result<CheckReport, SuiteError> {
    let mut report = CheckReport::new("module");
    for obj in objects {
        let m = file.build_module(&inst.hopf, obj)?;
        let mut sub = check_module(&m);
        if let Ok(e) = check_braiding_naturality(&m, &m, &inst.rmatrix) {
            sub.push(e);
        }
        if let Ok(h) = check_hexagons(&m, &m, &m, &inst.rmatrix) {
            sub.absorb("", h);
        }
        if is_triangular(&inst.hopf, &inst.rmatrix) {
            let mut sym = AxiomCheck::new("braiding-symmetric", "τ∘τ = id");
            let ok = check_braiding_symmetry(&m, &inst.rmatrix);
            sym.record(Vec::new, vec![if ok { Scalar::zero() } else { Scalar::one() }]);
            sub.push(sym.finish());
        }
        report.absorb(&obj.name, sub);
    }
    Ok(report)
}

fn module_algebra_suite(file: &AlgebraFile, inst: &Instance, objects: &[&ObjectSpec]) -> Result<CheckReport, SuiteError> {
    let mut report = CheckReport::new("module-algebra");
    for obj in objects {
        match obj.kind {
            ObjectKind::Associative => {
                let a = file.build_algebra(inst, &obj.name)?;
                report.absorb(&obj.name, check_module_algebra(&a));
            }
            ObjectKind::Lie => {
                let m = file.build_module(&inst.hopf, obj)?;
                report.push(check_equivariant_product(
                    &format!("{}/bracket-h-linear", obj.name),
                    "h·[a,b] = [h1·a, h2·b]",
                    &m,
                    &obj.table_tensor(),
                ));
            }
        }
    }
    Ok(report)
}

fn bihom_assoc_suite(file: &AlgebraFile, inst: &Instance, objects: &[&ObjectSpec]) -> Result<CheckReport, SuiteError> {
    let mut report = CheckReport::new("bihom-assoc");
    for obj in objects.iter().filter(|o| o.kind == ObjectKind::Associative) {
        let a = file.build_algebra(inst, &obj.name)?;
        report.absorb(&obj.name, check_bihom_associative(&a));
    }
    Ok(report)
}

fn twist_of(obj: &ObjectSpec, l: &BiHomLie) -> Result<Option<BiHomLie>, SuiteError> {
    let Some((alpha, beta)) = &obj.twist else {
        return Ok(None);
    };
    let module = l.module();
    let to_map = |m: &crate::linalg::Matrix, which: &str| {
        ModuleMap::endomorphism(module, m.clone())
            .map_err(|e| SuiteError::Precondition(format!("twist {which} of `{}`: {e}", obj.name)))
    };
    let (a, b) = (to_map(alpha, "alpha")?, to_map(beta, "beta")?);
    Ok(Some(twist_bracket(l, &a, &b)?))
}

fn bihom_lie_suite(file: &AlgebraFile, inst: &Instance, objects: &[&ObjectSpec]) -> Result<CheckReport, SuiteError> {
    let mut report = CheckReport::new("bihom-lie");
    for obj in objects {
        match obj.kind {
            ObjectKind::Lie => {
                let l = file.build_lie(inst, &obj.name)?;
                report.absorb(&obj.name, check_generalized_bihom_lie(&l));
                match twist_of(obj, &l) {
                    Ok(Some(t)) => report.absorb(&format!("{}/twist", obj.name), check_generalized_bihom_lie(&t)),
                    Ok(None) => {}
                    Err(e) => report.push(skipped(&format!("{}/twist", obj.name), "[x, y]' = [alpha(x), beta(y)]", &e.to_string())),
                }
            }
            ObjectKind::Associative => {
                let a = file.build_algebra(inst, &obj.name)?;
                let prefix = format!("{}/commutator", obj.name);
                match commutator_bracket(&a, &inst.rmatrix) {
                    Ok(l) => {
                        report.absorb(&prefix, check_generalized_bihom_lie(&l));
                        report.info.push(InfoEntry {
                            topic: format!("{prefix}/table"),
                            message: "commutator bracket, nonzero entries".into(),
                            rows: table_rows(l.basis_names(), l.bracket()),
                        });
                        if let Some(r) = &obj.reference_bracket {
                            let reference = crate::tensor::Tensor3::from_sparse(obj.dim(), r.iter().cloned());
                            let mut diff = reference_diff(&l, &reference);
                            diff.topic = format!("{}/reference-bracket", obj.name);
                            report.info.push(diff);
                        }
                    }
                    Err(e) => report.push(skipped(
                        &prefix,
                        "[a,b] = ab - (R²·alpha⁻¹beta(b))(R¹·alpha beta⁻¹(a))",
                        &format!("construction refused: {e}"),
                    )),
                }
            }
        }
    }
    Ok(report)
}

fn lemma31_suite(file: &AlgebraFile, inst: &Instance, objects: &[&ObjectSpec]) -> Result<CheckReport, SuiteError> {
    let mut report = CheckReport::new("lemma31");
    for obj in objects.iter().filter(|o| o.kind == ObjectKind::Associative) {
        let a = file.build_algebra(inst, &obj.name)?;
        match check_derivation_identities(&a, &inst.rmatrix) {
            Ok(r) => report.absorb(&obj.name, r),
            Err(e) => report.push(skipped(
                &format!("{}/bracket-derivation", obj.name),
                "derivation identities of the commutator bracket",
                &format!("construction refused: {e}"),
            )),
        }
    }
    Ok(report)
}

/// Series terms are stable under the structure maps and the action.
fn series_stability(s: &impl TwistedStructure, axiom: &str, series: &SeriesResult) -> crate::report::CheckEntry {
    let mut check = AxiomCheck::new(axiom, "alpha(V), beta(V), H·V ⊆ V for every series term V");
    for (n, t) in series.terms.iter().enumerate() {
        let mut residual = Vec::new();
        for v in t.basis_vectors() {
            let mut images = vec![s.alpha().apply(&v), s.beta().apply(&v)];
            images.extend(s.module().actions().iter().map(|a| a.apply(&v)));
            for img in images {
                residual.push(if t.contains_vector(&img) { Scalar::zero() } else { Scalar::one() });
            }
        }
        check.record(|| vec![format!("term {n}")], residual);
    }
    check.finish()
}

fn structure_suite(
    file: &AlgebraFile,
    inst: &Instance,
    objects: &[&ObjectSpec],
    opts: &Options,
) -> Result<CheckReport, SuiteError> {
    let mut report = CheckReport::new("structure");
    for obj in objects {
        let mut sub = CheckReport::new("structure");
        match obj.kind {
            ObjectKind::Lie => {
                let l = file.build_lie(inst, &obj.name)?;
                structure_properties(&l, &mut sub, opts)?;
            }
            ObjectKind::Associative => {
                let a = file.build_algebra(inst, &obj.name)?;
                structure_properties(&a, &mut sub, opts)?;
                let (p, s) = (opts.probes, opts.probe_seed);
                sub.push(check_proper_ideals_of_derived(&a, &inst.rmatrix, p, s, opts.max_steps)?);
                for reading in ["prime", "simple"] {
                    sub.push(check_ideal_in_normalizer(&a, &inst.rmatrix, reading, p, s, opts.max_steps)?);
                }
            }
        }
        report.absorb(&obj.name, sub);
    }
    Ok(report)
}

fn center_entry(s: &impl TwistedStructure, z: &Subspace) -> crate::report::CheckEntry {
    let d = s.dim();
    let mut check = AxiomCheck::new("center-annihilates", "[z, v] = 0 for z in the center");
    for zv in z.basis_vectors() {
        for j in 0..d {
            let e = crate::linalg::unit_vector(d, j);
            check.record(
                || vec![format_combination(s.basis_names(), &zv), s.basis_names()[j].clone()],
                s.apply_product(&zv, &e),
            );
        }
    }
    check.finish()
}

fn structure_properties(s: &impl TwistedStructure, report: &mut CheckReport, opts: &Options) -> Result<(), SuiteError> {
    let d = s.dim();
    report.push(center_entry(s, &center(s)));
    let ds = derived_series(s, opts.max_steps)?;
    report.push(series_stability(s, "derived-series-stable", &ds));
    let lcs = lower_central_series(s, &Subspace::full(d), opts.max_steps)?;
    report.push(series_stability(s, "lower-central-series-stable", &lcs));
    Ok(())
}

/// Runs a verification suite over the file's objects (or the one in `opts.object`).
pub fn run_suite(file: &AlgebraFile, suite: Suite, opts: &Options) -> Result<CheckReport, SuiteError> {
    let inst = file.instance()?;
    let objects = selected(file, opts)?;
    let mut report = match suite {
        Suite::Hopf => hopf_suite(&inst),
        Suite::Module => module_suite(file, &inst, &objects)?,
        Suite::ModuleAlgebra => module_algebra_suite(file, &inst, &objects)?,
        Suite::BiHomAssoc => bihom_assoc_suite(file, &inst, &objects)?,
        Suite::BiHomLie => bihom_lie_suite(file, &inst, &objects)?,
        Suite::Lemma31 => lemma31_suite(file, &inst, &objects)?,
        Suite::Structure => structure_suite(file, &inst, &objects, opts)?,
        Suite::All => {
            let mut all = CheckReport::new("all");
            for s in Suite::ALL.iter().filter(|s| **s != Suite::All) {
                let r = run_suite(file, *s, opts)?;
                all.absorb(s.as_str(), r);
            }
            all
        }
    };
    report.toolchain = Some(toolchain(opts));
    Ok(report)
}

/// Builds a new file holding the derived bracket as a `lie` object.
pub fn run_construction(file: &AlgebraFile, what: Construction, object: Option<&str>) -> Result<AlgebraFile, SuiteError> {
    let inst = file.instance()?;
    let wanted = match what {
        Construction::Commutator => ObjectKind::Associative,
        Construction::Twist => ObjectKind::Lie,
    };
    let obj = match object {
        Some(name) => file.object(name)?,
        None => file
            .objects
            .iter()
            .find(|o| o.kind == wanted && (what == Construction::Commutator || o.twist.is_some()))
            .ok_or_else(|| SuiteError::Input(format!("no suitable {wanted} object for {what}")))?,
    };
    let (name, l) = match what {
        Construction::Commutator => {
            let a = file.build_algebra(&inst, &obj.name)?;
            (format!("{}-commutator", obj.name), commutator_bracket(&a, &inst.rmatrix)?)
        }
        Construction::Twist => {
            let l = file.build_lie(&inst, &obj.name)?;
            let t = twist_of(obj, &l)?
                .ok_or_else(|| SuiteError::Input(format!("object `{}` has no twist maps", obj.name)))?;
            (format!("{}-twisted", obj.name), t)
        }
    };
    let spec = ObjectSpec {
        name,
        kind: ObjectKind::Lie,
        basis: obj.basis.clone(),
        action: obj.action.clone(),
        table: entries_of(l.bracket()),
        alpha: l.alpha().clone(),
        beta: l.beta().clone(),
        unit: None,
        twist: None,
        reference_bracket: None,
    };
    Ok(AlgebraFile {
        parameters: file.parameters.clone(),
        hopf: file.hopf.clone(),
        rmatrix: file.rmatrix.clone(),
        objects: vec![spec],
    })
}

fn parse_vector(names: &[String], items: &[String]) -> Result<Vector, SuiteError> {
    let d = names.len();
    if items.len() == d && items.iter().all(|t| !names.contains(t)) {
        return items
            .iter()
            .map(|t| t.parse::<Scalar>().map_err(|e| SuiteError::Input(format!("bad scalar `{t}`: {e}"))))
            .collect();
    }
    let mut v = vec![Scalar::zero(); d];
    for t in items {
        let i = names
            .iter()
            .position(|n| n == t)
            .ok_or_else(|| SuiteError::Input(format!("`{t}` is not a basis name, and {} scalars were not given", d)))?;
        v[i] = Scalar::one();
    }
    Ok(v)
}

fn subspace_json(names: &[String], s: &Subspace) -> Value {
    json!({
        "span": format_subspace(names, s),
        "dim": s.dim(),
        "basis": s.basis_vectors().iter().map(|v| v.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn series_json(names: &[String], s: &SeriesResult, full_dim: usize) -> Value {
    let terms: Vec<String> = s
        .terms
        .iter()
        .map(|t| if t.dim() == full_dim && full_dim > 0 { "L".to_string() } else { format_subspace(names, t) })
        .collect();
    json!({
        "terms": terms,
        "verdict": serde_json::to_value(&s.verdict).expect("verdict serializes"),
        "reaches_zero": s.reaches_zero(),
    })
}

fn certificate_json(names: &[String], c: &Certificate) -> Value {
    let simple = match &c.simple {
        SimplicityVerdict::CertifiedNonsimple { ideal, generator } => json!({
            "verdict": "certified-nonsimple",
            "ideal": format_subspace(names, ideal),
            "generator": format_combination(names, generator),
        }),
        SimplicityVerdict::NoCounterexampleFound => json!({ "verdict": "no-counterexample-found" }),
    };
    let semiprime = match &c.semiprime {
        SemiprimeVerdict::CertifiedNotSemiprime { ideal } => json!({
            "verdict": "certified-not-semiprime",
            "nilpotent_ideal": format_subspace(names, ideal),
        }),
        SemiprimeVerdict::NoCounterexampleFound => json!({ "verdict": "no-counterexample-found" }),
    };
    let prime = match &c.prime {
        PrimeVerdict::CertifiedNotPrime { first, second } => json!({
            "verdict": "certified-not-prime",
            "ideals": [format_subspace(names, first), format_subspace(names, second)],
        }),
        PrimeVerdict::NoCounterexampleFound => json!({ "verdict": "no-counterexample-found" }),
    };
    json!({
        "kind": c.kind,
        "simple": simple,
        "semiprime": semiprime,
        "prime": prime,
        "ideals_found": c.ideals.iter().map(|i| format_subspace(names, i)).collect::<Vec<_>>(),
        "probes": c.probes,
        "seed": c.seed,
        "note": "no-counterexample-found is not a proof",
    })
}

fn structure_on(
    s: &impl TwistedStructure,
    kind: ClosureKind,
    what: StructureOp,
    opts: &Options,
    ideal_check: impl Fn(&Subspace) -> Result<crate::structure::IdealVerdict, crate::linalg::LinalgError>,
) -> Result<CheckReport, SuiteError> {
    let names = s.basis_names().to_vec();
    let d = s.dim();
    let seeds: Vec<Vector> = opts
        .vectors
        .iter()
        .map(|v| parse_vector(&names, v))
        .collect::<Result<_, _>>()?;
    let given = || Subspace::span(d, &seeds);
    let mut report = CheckReport::new(format!("structure/{what}"));
    let results = match what {
        StructureOp::Center => {
            let z = center(s);
            report.push(center_entry(s, &z));
            subspace_json(&names, &z)
        }
        StructureOp::DerivedSeries => {
            let ds = derived_series(s, opts.max_steps)?;
            report.push(series_stability(s, "derived-series-stable", &ds));
            let mut v = series_json(&names, &ds, d);
            v["solvable"] = json!(ds.reaches_zero());
            v
        }
        StructureOp::Lcs => {
            let start = if seeds.is_empty() { Subspace::full(d) } else { given() };
            let lcs = lower_central_series(s, &start, opts.max_steps)?;
            report.push(series_stability(s, "lower-central-series-stable", &lcs));
            let mut v = series_json(&names, &lcs, d);
            v["nilpotent"] = json!(lcs.reaches_zero());
            v
        }
        StructureOp::IdealCheck => {
            if seeds.is_empty() {
                return Err(SuiteError::Input("ideal-check needs --vector or --basis".into()));
            }
            let u = given();
            let verdict = ideal_check(&u)?;
            let mut check = AxiomCheck::new("ideal", &verdict.form);
            let residual = verdict.witness.as_ref().map(|w| w.vector.clone()).unwrap_or_default();
            check.record(
                || verdict.witness.iter().map(|w| format!("{}: {}", w.condition, w.detail)).collect(),
                residual,
            );
            report.push(check.finish());
            json!({
                "candidate": format_subspace(&names, &u),
                "holds": verdict.holds,
                "form": verdict.form,
                "witness": verdict.witness.as_ref().map(|w| json!({"condition": w.condition, "detail": w.detail})),
            })
        }
        StructureOp::Closure => {
            let c = ideal_closure(s, &given(), kind, None)?;
            json!({ "seed": format_subspace(&names, &given()), "kind": kind, "closure": subspace_json(&names, &c) })
        }
        StructureOp::Certificate => {
            let c = simplicity_certificate(s, kind, opts.probes, opts.probe_seed, opts.max_steps)?;
            let mut check = AxiomCheck::new("certificate-ideals", "every reported ideal passes the ideal check");
            for ideal in &c.ideals {
                let verdict = ideal_check(ideal)?;
                let residual = verdict.witness.map(|w| w.vector).unwrap_or_default();
                check.record(|| vec![format_subspace(&names, ideal)], residual);
            }
            report.push(check.finish());
            certificate_json(&names, &c)
        }
    };
    report.results = Some(results);
    report.toolchain = Some(toolchain(opts));
    Ok(report)
}

/// Runs one structure-theory computation on a single object.
pub fn run_structure(file: &AlgebraFile, what: StructureOp, opts: &Options) -> Result<CheckReport, SuiteError> {
    let inst = file.instance()?;
    let obj = match &opts.object {
        Some(name) => file.object(name)?,
        None => file.objects.first().ok_or_else(|| SuiteError::Input("file has no objects".into()))?,
    };
    let mut report = match obj.kind {
        ObjectKind::Lie => {
            let l = file.build_lie(&inst, &obj.name)?;
            structure_on(&l, ClosureKind::Lie, what, opts, |u| is_h_bihom_lie_ideal(&l, u))?
        }
        ObjectKind::Associative => {
            let a = file.build_algebra(&inst, &obj.name)?;
            structure_on(&a, ClosureKind::Associative, what, opts, |u| is_h_bihom_ideal(&a, u))?
        }
    };
    if let Some(Value::Object(map)) = report.results.as_mut() {
        map.insert("object".into(), json!(obj.name));
    }
    Ok(report)
}

/// The module of an object, for callers that need its basis names.
pub fn object_module(file: &AlgebraFile, name: &str) -> Result<HModule, SuiteError> {
    let inst = file.instance()?;
    Ok(file.build_module(&inst.hopf, file.object(name)?)?)
}
