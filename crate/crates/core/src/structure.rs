//! Ideals, center, closures, derived and lower central series, relative sets
//! and nonsimplicity certificates for structures given by structure constants.
//!
//! Simplicity, primeness and semiprimeness are only semi-decided: a
//! certificate names an explicit ideal, and the absence of one proves nothing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bihom::{commutator_bracket, format_combination, BiHomAlgebra, BiHomLie, TwistedStructure};
use crate::hopf::RMatrix;
use crate::linalg::{is_zero_vector, unit_vector, LinalgError, Matrix, Subspace, Vector};
use crate::report::{skipped, CheckEntry, Status};
use crate::scalar::Scalar;

pub const DEFAULT_MAX_STEPS: usize = 16;
pub const DEFAULT_PROBES: usize = 8;

/// Which products an ideal must absorb.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClosureKind {
    /// `[U, L] ⊆ U`.
    Lie,
    /// `LU ⊆ U` and `UL ⊆ U`.
    Associative,
}

/// A subspace paired with the structure it is meant to be an ideal of.
#[derive(Debug, Clone)]
pub struct IdealCandidate<'a, S: TwistedStructure> {
    ambient: &'a S,
    space: Subspace,
}

impl<'a, S: TwistedStructure> IdealCandidate<'a, S> {
    pub fn new(ambient: &'a S, space: Subspace) -> Result<Self, LinalgError> {
        if space.ambient_dim() != ambient.dim() {
            return Err(LinalgError::AmbientMismatch(space.ambient_dim(), ambient.dim()));
        }
        Ok(IdealCandidate { ambient, space })
    }

    pub fn ambient(&self) -> &S {
        self.ambient
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }
}

/// Renders a subspace by its RREF basis, e.g. `span(x1, x3)`.
pub fn format_subspace(names: &[String], s: &Subspace) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let parts: Vec<String> = s
        .basis_vectors()
        .iter()
        .map(|v| format_combination(names, v))
        .collect();
    format!("span({})", parts.join(", "))
}

fn check_ambient(s: &impl TwistedStructure, u: &Subspace) -> Result<(), LinalgError> {
    if u.ambient_dim() != s.dim() {
        return Err(LinalgError::AmbientMismatch(u.ambient_dim(), s.dim()));
    }
    Ok(())
}

/// Span of all products `u_i * v_j` of basis vectors.
pub fn bracket_of_subspaces(s: &impl TwistedStructure, u: &Subspace, v: &Subspace) -> Result<Subspace, LinalgError> {
    check_ambient(s, u)?;
    check_ambient(s, v)?;
    let vs = v.basis_vectors();
    let mut products = Vec::new();
    for x in u.basis_vectors() {
        for y in &vs {
            let p = s.apply_product(&x, y);
            if !is_zero_vector(&p) {
                products.push(p);
            }
        }
    }
    Ok(Subspace::span(s.dim(), &products))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealWitness {
    /// The violated condition, e.g. `[U, L] ⊆ U`.
    pub condition: String,
    /// The offending element written out, e.g. `[x1, x2] = x3`.
    pub detail: String,
    pub vector: Vector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealVerdict {
    pub holds: bool,
    /// Which form of the ideal condition was checked.
    pub form: String,
    pub witness: Option<IdealWitness>,
}

fn first_escape(
    u: &Subspace,
    condition: &str,
    candidates: impl IntoIterator<Item = (String, Vector)>,
) -> Option<IdealWitness> {
    candidates.into_iter().find_map(|(detail, v)| {
        (!u.contains_vector(&v)).then(|| IdealWitness {
            condition: condition.to_string(),
            detail,
            vector: v,
        })
    })
}

fn stability_witness(s: &impl TwistedStructure, u: &Subspace) -> Option<IdealWitness> {
    let names = s.basis_names();
    let module = s.module();
    let basis = u.basis_vectors();
    for (label, map) in [("alpha", s.alpha()), ("beta", s.beta())] {
        let cond = format!("{label}(U) ⊆ U");
        let found = first_escape(
            u,
            &cond,
            basis.iter().map(|v| {
                let img = map.apply(v);
                (
                    format!("{label}({}) = {}", format_combination(names, v), format_combination(names, &img)),
                    img,
                )
            }),
        );
        if found.is_some() {
            return found;
        }
    }
    for (i, act) in module.actions().iter().enumerate() {
        let h = &module.hopf().basis_names()[i];
        let found = first_escape(
            u,
            "H·U ⊆ U",
            basis.iter().map(|v| {
                let img = act.apply(v);
                (
                    format!("{h}·({}) = {}", format_combination(names, v), format_combination(names, &img)),
                    img,
                )
            }),
        );
        if found.is_some() {
            return found;
        }
    }
    None
}

fn product_detail(names: &[String], kind: ClosureKind, x: &[Scalar], y: &[Scalar], p: &[Scalar]) -> String {
    let (x, y, p) = (
        format_combination(names, x),
        format_combination(names, y),
        format_combination(names, p),
    );
    match kind {
        ClosureKind::Lie => format!("[{x}, {y}] = {p}"),
        ClosureKind::Associative => format!("({x})({y}) = {p}"),
    }
}

fn absorption_witness(
    s: &impl TwistedStructure,
    u: &Subspace,
    against: &Subspace,
    kind: ClosureKind,
) -> Option<IdealWitness> {
    let names = s.basis_names();
    let basis = u.basis_vectors();
    let others = against.basis_vectors();
    if kind == ClosureKind::Associative {
        let left = first_escape(
            u,
            "AU ⊆ U",
            others.iter().flat_map(|y| {
                basis.iter().map(move |x| {
                    let p = s.apply_product(y, x);
                    (product_detail(names, kind, y, x, &p), p)
                })
            }),
        );
        if left.is_some() {
            return left;
        }
    }
    first_escape(
        u,
        if kind == ClosureKind::Lie { "[U, L] ⊆ U" } else { "UA ⊆ U" },
        basis.iter().flat_map(|x| {
            others.iter().map(move |y| {
                let p = s.apply_product(x, y);
                (product_detail(names, kind, x, y, &p), p)
            })
        }),
    )
}

/// `alpha(U) ⊆ U`, `beta(U) ⊆ U`, `H·U ⊆ U` and `[U, L] ⊆ U`.
pub fn is_h_bihom_lie_ideal(l: &BiHomLie, u: &Subspace) -> Result<IdealVerdict, LinalgError> {
    check_ambient(l, u)?;
    let witness = stability_witness(l, u)
        .or_else(|| absorption_witness(l, u, &Subspace::full(l.dim()), ClosureKind::Lie));
    Ok(IdealVerdict {
        holds: witness.is_none(),
        form: "alpha(U), beta(U), H·U ⊆ U and [U, L] ⊆ U".into(),
        witness,
    })
}

/// Two-sided form: `alpha(U), beta(U), H·U ⊆ U` and `AU ⊆ U`, `UA ⊆ U`.
pub fn is_h_bihom_ideal(a: &BiHomAlgebra, u: &Subspace) -> Result<IdealVerdict, LinalgError> {
    check_ambient(a, u)?;
    let witness = stability_witness(a, u)
        .or_else(|| absorption_witness(a, u, &Subspace::full(a.dim()), ClosureKind::Associative));
    Ok(IdealVerdict {
        holds: witness.is_none(),
        form: "alpha(U), beta(U), H·U ⊆ U and AU ⊆ U, UA ⊆ U".into(),
        witness,
    })
}

/// Matrix of `x ↦ x * e_j` (left slot varies).
fn right_multiplication(s: &impl TwistedStructure, y: &[Scalar]) -> Matrix {
    let d = s.dim();
    let cols: Vec<Vector> = (0..d).map(|i| s.apply_product(&unit_vector(d, i), y)).collect();
    Matrix::from_columns(d, &cols)
}

/// Matrix of `x ↦ y * x`.
fn left_multiplication(s: &impl TwistedStructure, y: &[Scalar]) -> Matrix {
    let d = s.dim();
    let cols: Vec<Vector> = (0..d).map(|i| s.apply_product(y, &unit_vector(d, i))).collect();
    Matrix::from_columns(d, &cols)
}

fn stacked_kernel(d: usize, blocks: impl IntoIterator<Item = Matrix>) -> Subspace {
    let mut stacked = Matrix::zeros(0, d);
    for b in blocks {
        stacked = stacked.vstack(&b);
    }
    stacked.kernel()
}

/// `{ l : [l, L] = 0 }`.
pub fn center(l: &impl TwistedStructure) -> Subspace {
    let d = l.dim();
    stacked_kernel(d, (0..d).map(|j| right_multiplication(l, &unit_vector(d, j))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelativeKind {
    /// `{ x : [x, L] ⊆ U }`.
    Normalizer,
    /// `{ l : [l, L] ⊆ V }`, the same condition under its other name.
    Transporter,
    /// `{ x : xI = Ix = 0 }`.
    Annihilator,
}

pub fn relative_set(s: &impl TwistedStructure, u: &Subspace, kind: RelativeKind) -> Result<Subspace, LinalgError> {
    check_ambient(s, u)?;
    let d = s.dim();
    Ok(match kind {
        RelativeKind::Normalizer | RelativeKind::Transporter => {
            let project = u.membership_test();
            stacked_kernel(
                d,
                (0..d).map(|j| project.mul(&right_multiplication(s, &unit_vector(d, j)))),
            )
        }
        RelativeKind::Annihilator => {
            let basis = u.basis_vectors();
            stacked_kernel(
                d,
                basis
                    .iter()
                    .flat_map(|v| [right_multiplication(s, v), left_multiplication(s, v)]),
            )
        }
    })
}

/// One round of enlargement: `U + alpha(U) + beta(U) + H·U + products with `against``.
fn closure_step(s: &impl TwistedStructure, u: &Subspace, against: &Subspace, kind: ClosureKind) -> Subspace {
    let mut vectors = u.basis_vectors();
    let basis = u.basis_vectors();
    for v in &basis {
        vectors.push(s.alpha().apply(v));
        vectors.push(s.beta().apply(v));
        for act in s.module().actions() {
            vectors.push(act.apply(v));
        }
        for w in against.basis_vectors() {
            vectors.push(s.apply_product(v, &w));
            if kind == ClosureKind::Associative {
                vectors.push(s.apply_product(&w, v));
            }
        }
    }
    vectors.retain(|v| !is_zero_vector(v));
    Subspace::span(s.dim(), &vectors)
}

/// Least subspace containing `seed` and stable under `alpha`, `beta`, the
/// `H`-action and products with `against` (the whole space when `None`).
pub fn ideal_closure(
    s: &impl TwistedStructure,
    seed: &Subspace,
    kind: ClosureKind,
    against: Option<&Subspace>,
) -> Result<Subspace, LinalgError> {
    check_ambient(s, seed)?;
    let full = Subspace::full(s.dim());
    let against = against.unwrap_or(&full);
    check_ambient(s, against)?;
    let mut current = seed.clone();
    loop {
        let next = closure_step(s, &current, against, kind);
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SeriesVerdict {
    /// The term with index `step` is zero.
    TerminatesAtZero { step: usize },
    /// The term with index `step` equals its predecessor and is nonzero.
    StabilizesNonzero { step: usize },
    /// The step cap was reached first.
    CapReached { steps: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesResult {
    /// Distinct terms, starting with the initial space.
    pub terms: Vec<Subspace>,
    pub verdict: SeriesVerdict,
}

impl SeriesResult {
    pub fn reaches_zero(&self) -> bool {
        matches!(self.verdict, SeriesVerdict::TerminatesAtZero { .. })
    }

    pub fn render(&self, names: &[String]) -> Vec<String> {
        self.terms.iter().map(|t| format_subspace(names, t)).collect()
    }
}

fn iterate_series(
    start: Subspace,
    max_steps: usize,
    mut next: impl FnMut(&Subspace) -> Result<Subspace, LinalgError>,
) -> Result<SeriesResult, LinalgError> {
    let mut terms = vec![start];
    if terms[0].is_zero() {
        return Ok(SeriesResult {
            terms,
            verdict: SeriesVerdict::TerminatesAtZero { step: 0 },
        });
    }
    for step in 1..=max_steps.max(1) {
        let last = terms.last().expect("nonempty");
        let t = next(last)?;
        if t == *last {
            return Ok(SeriesResult {
                terms,
                verdict: SeriesVerdict::StabilizesNonzero { step },
            });
        }
        let zero = t.is_zero();
        terms.push(t);
        if zero {
            return Ok(SeriesResult {
                terms,
                verdict: SeriesVerdict::TerminatesAtZero { step },
            });
        }
    }
    Ok(SeriesResult {
        terms,
        verdict: SeriesVerdict::CapReached { steps: max_steps.max(1) },
    })
}

/// `L⁽⁰⁾ = start`, `L⁽ⁱ⁾ = [L⁽ⁱ⁻¹⁾, L⁽ⁱ⁻¹⁾]`.
pub fn derived_series_of(s: &impl TwistedStructure, start: &Subspace, max_steps: usize) -> Result<SeriesResult, LinalgError> {
    check_ambient(s, start)?;
    iterate_series(start.clone(), max_steps, |t| bracket_of_subspaces(s, t, t))
}

pub fn derived_series(s: &impl TwistedStructure, max_steps: usize) -> Result<SeriesResult, LinalgError> {
    derived_series_of(s, &Subspace::full(s.dim()), max_steps)
}

/// `V₁ = start`, `Vₖ₊₁ = [Vₖ, start]`.
pub fn lower_central_series(
    s: &impl TwistedStructure,
    start: &Subspace,
    max_steps: usize,
) -> Result<SeriesResult, LinalgError> {
    check_ambient(s, start)?;
    iterate_series(start.clone(), max_steps, |t| bracket_of_subspaces(s, t, start))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplicityVerdict {
    CertifiedNonsimple { ideal: Subspace, generator: Vector },
    NoCounterexampleFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemiprimeVerdict {
    /// A nonzero ideal whose lower central series reaches zero.
    CertifiedNotSemiprime { ideal: Subspace },
    NoCounterexampleFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeVerdict {
    /// Two nonzero ideals with zero product.
    CertifiedNotPrime { first: Subspace, second: Subspace },
    NoCounterexampleFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: ClosureKind,
    pub simple: SimplicityVerdict,
    pub semiprime: SemiprimeVerdict,
    pub prime: PrimeVerdict,
    /// Distinct nonzero closures found, in discovery order.
    pub ideals: Vec<Subspace>,
    pub probes: usize,
    pub seed: u64,
}

/// Basis vectors followed by `probes` seeded pseudo-random vectors with small
/// integer coordinates.
pub fn probe_vectors(dim: usize, probes: usize, seed: u64) -> Vec<Vector> {
    let mut out: Vec<Vector> = (0..dim).map(|i| unit_vector(dim, i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..probes {
        out.push((0..dim).map(|_| Scalar::from_int(rng.gen_range(-3..=3))).collect());
    }
    out
}

/// Distinct nonzero closures of the probe vectors, with the generator of each.
fn discover_ideals(
    s: &impl TwistedStructure,
    kind: ClosureKind,
    against: Option<&Subspace>,
    generators: &[Vector],
) -> Result<Vec<(Subspace, Vector)>, LinalgError> {
    let mut found: Vec<(Subspace, Vector)> = Vec::new();
    for g in generators {
        let seed = Subspace::span(s.dim(), std::slice::from_ref(g));
        if seed.is_zero() {
            continue;
        }
        let closure = ideal_closure(s, &seed, kind, against)?;
        if !found.iter().any(|(f, _)| *f == closure) {
            found.push((closure, g.clone()));
        }
    }
    Ok(found)
}

pub fn simplicity_certificate(
    s: &impl TwistedStructure,
    kind: ClosureKind,
    probes: usize,
    seed: u64,
    max_steps: usize,
) -> Result<Certificate, LinalgError> {
    let d = s.dim();
    let generators = probe_vectors(d, probes, seed);
    let mut found = discover_ideals(s, kind, None, &generators)?;
    let full = Subspace::full(d);
    if d > 0 && !found.iter().any(|(f, _)| *f == full) {
        found.push((full, vec![]));
    }

    let simple = found
        .iter()
        .filter(|(f, _)| !f.is_full())
        .min_by_key(|(f, _)| f.dim())
        .map(|(f, g)| SimplicityVerdict::CertifiedNonsimple {
            ideal: f.clone(),
            generator: g.clone(),
        })
        .unwrap_or(SimplicityVerdict::NoCounterexampleFound);

    let mut by_dim: Vec<&Subspace> = found.iter().map(|(f, _)| f).collect();
    by_dim.sort_by_key(|f| f.dim());

    let mut semiprime = SemiprimeVerdict::NoCounterexampleFound;
    for f in &by_dim {
        if lower_central_series(s, f, max_steps)?.reaches_zero() {
            semiprime = SemiprimeVerdict::CertifiedNotSemiprime { ideal: (*f).clone() };
            break;
        }
    }

    let mut prime = PrimeVerdict::NoCounterexampleFound;
    'outer: for (i, f) in by_dim.iter().enumerate() {
        for g in &by_dim[i..] {
            if bracket_of_subspaces(s, f, g)?.is_zero() && bracket_of_subspaces(s, g, f)?.is_zero() {
                prime = PrimeVerdict::CertifiedNotPrime {
                    first: (*f).clone(),
                    second: (*g).clone(),
                };
                break 'outer;
            }
        }
    }

    Ok(Certificate {
        kind,
        simple,
        semiprime,
        prime,
        ideals: found.into_iter().map(|(f, _)| f).collect(),
        probes,
        seed,
    })
}

/// Largest two-sided `H`-BiHom-ideal contained in `w`.
pub fn largest_ideal_within(a: &BiHomAlgebra, w: &Subspace) -> Result<Subspace, LinalgError> {
    check_ambient(a, w)?;
    let d = a.dim();
    let mut current = w.clone();
    loop {
        let project = current.membership_test();
        let mut blocks = vec![current.membership_test()];
        blocks.push(project.mul(a.alpha()));
        blocks.push(project.mul(a.beta()));
        for act in a.module().actions() {
            blocks.push(project.mul(act));
        }
        for j in 0..d {
            let e = unit_vector(d, j);
            blocks.push(project.mul(&right_multiplication(a, &e)));
            blocks.push(project.mul(&left_multiplication(a, &e)));
        }
        let next = stacked_kernel(d, blocks);
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

fn commutator_or_skip(a: &BiHomAlgebra, r: &RMatrix, axiom: &str, citation: &str) -> Result<BiHomLie, CheckEntry> {
    if a.unit().is_none() {
        return Err(skipped(axiom, citation, "hypotheses not met: algebra has no unit"));
    }
    commutator_bracket(a, r).map_err(|e| skipped(axiom, citation, &format!("hypotheses not met: {e}")))
}

fn verdict_entry(axiom: &str, citation: &str, checked: usize, failure: Option<String>, note: String) -> CheckEntry {
    CheckEntry {
        axiom: axiom.into(),
        status: if failure.is_some() { Status::Fail } else { Status::Pass },
        citation: citation.into(),
        checked,
        failures: usize::from(failure.is_some()),
        witness: None,
        note: Some(failure.unwrap_or(note)),
    }
}

/// For a simple unital algebra: every proper `H`-BiHom-Lie ideal `V` of
/// `[L, L]` is solvable within three steps and `[V, V]` is nilpotent.
///
/// Simplicity is taken to mean that no nonsimplicity certificate was found;
/// candidate ideals `V` are the closures of probe vectors inside `[L, L]`.
pub fn check_proper_ideals_of_derived(
    a: &BiHomAlgebra,
    r: &RMatrix,
    probes: usize,
    seed: u64,
    max_steps: usize,
) -> Result<CheckEntry, LinalgError> {
    let axiom = "derived-ideals-solvable";
    let citation = "L simple unital, V proper H-BiHom-Lie ideal of [L,L] => V solvable, [V,V] nilpotent";
    let cert = simplicity_certificate(a, ClosureKind::Associative, probes, seed, max_steps)?;
    if let SimplicityVerdict::CertifiedNonsimple { ideal, .. } = &cert.simple {
        let note = format!(
            "hypotheses not met: nonsimple, ideal {}",
            format_subspace(a.basis_names(), ideal)
        );
        return Ok(skipped(axiom, citation, &note));
    }
    let l = match commutator_or_skip(a, r, axiom, citation) {
        Ok(l) => l,
        Err(entry) => return Ok(entry),
    };
    let d = l.dim();
    let full = Subspace::full(d);
    let derived = bracket_of_subspaces(&l, &full, &full)?;
    let generators: Vec<Vector> = derived
        .basis_vectors()
        .into_iter()
        .chain(probe_vectors(d, probes, seed).into_iter().skip(d))
        .filter(|v| derived.contains_vector(v))
        .collect();
    let mut candidates: Vec<Subspace> = vec![Subspace::zero(d)];
    for (v, _) in discover_ideals(&l, ClosureKind::Lie, Some(&derived), &generators)? {
        if v != derived {
            candidates.push(v);
        }
    }
    let names = l.basis_names();
    for v in &candidates {
        let series = derived_series_of(&l, v, 3)?;
        if !series.reaches_zero() {
            return Ok(verdict_entry(
                axiom,
                citation,
                candidates.len(),
                Some(format!("V = {} is not solvable within 3 steps", format_subspace(names, v))),
                String::new(),
            ));
        }
        let vv = bracket_of_subspaces(&l, v, v)?;
        if !lower_central_series(&l, &vv, max_steps)?.reaches_zero() {
            return Ok(verdict_entry(
                axiom,
                citation,
                candidates.len(),
                Some(format!("[V, V] = {} is not nilpotent", format_subspace(names, &vv))),
                String::new(),
            ));
        }
    }
    Ok(verdict_entry(
        axiom,
        citation,
        candidates.len(),
        None,
        format!("{} candidate ideals of [L, L] = {}", candidates.len(), format_subspace(names, &derived)),
    ))
}

/// For a unital algebra (prime or simple, per `reading`): every
/// `H`-BiHom-Lie ideal `U` with `[U, U] ≠ 0` admits an `H`-BiHom-ideal `I` with
/// `0 ≠ [I, L] ⊆ U`.
///
/// For each candidate `U` the test is exact: any such `I` lies in the largest
/// ideal inside `N_L(U)`, so it suffices to bracket that ideal with `L`.
pub fn check_ideal_in_normalizer(
    a: &BiHomAlgebra,
    r: &RMatrix,
    reading: &str,
    probes: usize,
    seed: u64,
    max_steps: usize,
) -> Result<CheckEntry, LinalgError> {
    let axiom = format!("ideal-inside-normalizer/{reading}");
    let citation = format!("L {reading} unital, U H-BiHom-Lie ideal, [U,U] != 0 => exists I with 0 != [I,L] ⊆ U");
    let cert = simplicity_certificate(a, ClosureKind::Associative, probes, seed, max_steps)?;
    let names = a.basis_names();
    let refuted = match (reading, &cert.simple, &cert.prime) {
        ("simple", SimplicityVerdict::CertifiedNonsimple { ideal, .. }, _) => {
            Some(format!("nonsimple, ideal {}", format_subspace(names, ideal)))
        }
        ("prime", _, PrimeVerdict::CertifiedNotPrime { first, second }) => Some(format!(
            "not prime, {} * {} = 0",
            format_subspace(names, first),
            format_subspace(names, second)
        )),
        _ => None,
    };
    if let Some(why) = refuted {
        return Ok(skipped(&axiom, &citation, &format!("hypotheses not met: {why}")));
    }
    let l = match commutator_or_skip(a, r, &axiom, &citation) {
        Ok(l) => l,
        Err(entry) => return Ok(entry),
    };
    let d = l.dim();
    let full = Subspace::full(d);
    let mut candidates = vec![full.clone()];
    for (u, _) in discover_ideals(&l, ClosureKind::Lie, None, &probe_vectors(d, probes, seed))? {
        if u != full {
            candidates.push(u);
        }
    }
    let mut checked = 0;
    for u in &candidates {
        if bracket_of_subspaces(&l, u, u)?.is_zero() {
            continue;
        }
        checked += 1;
        let normalizer = relative_set(&l, u, RelativeKind::Normalizer)?;
        let core = largest_ideal_within(a, &normalizer)?;
        if bracket_of_subspaces(&l, &core, &full)?.is_zero() {
            return Ok(verdict_entry(
                &axiom,
                &citation,
                checked,
                Some(format!(
                    "U = {}: every ideal I with [I, L] ⊆ U has [I, L] = 0",
                    format_subspace(names, u)
                )),
                String::new(),
            ));
        }
    }
    Ok(verdict_entry(
        &axiom,
        &citation,
        checked,
        None,
        format!("{checked} Lie ideals with [U, U] != 0 examined"),
    ))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::bihom::commutator_bracket;
    use crate::hmod::HModule;
    use crate::hopf::{cyclic_table, group_algebra, trivial_hopf};
    use crate::tensor::Tensor3;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn diag(entries: &[&str]) -> Matrix {
        Matrix::diagonal(&entries.iter().map(|e| s(e)).collect::<Vec<_>>())
    }

    fn r0(h: &crate::hopf::HopfAlgebra) -> RMatrix {
        let half = Scalar::ratio(1, 2);
        RMatrix::new(
            h,
            Matrix::from_rows(vec![vec![half.clone(), half.clone()], vec![half.clone(), -half]]).unwrap(),
        )
        .unwrap()
    }

    fn heisenberg() -> BiHomLie {
        let h = Arc::new(group_algebra(vec!["e".into(), "g".into()], &cyclic_table(2), 0).unwrap());
        let module = HModule::new(
            h.clone(),
            vec!["x1".into(), "x2".into(), "x3".into()],
            vec![Matrix::identity(3), diag(&["-1", "-1", "1"])],
        )
        .unwrap();
        let one = Scalar::one();
        let bracket = Tensor3::from_sparse(3, [(0, 1, 2, one.clone()), (1, 0, 2, one)]);
        BiHomLie::new(module, bracket, Matrix::identity(3), Matrix::identity(3), r0(&h)).unwrap()
    }

    fn example24() -> (BiHomAlgebra, RMatrix) {
        let h = Arc::new(group_algebra(vec!["e".into(), "g".into()], &cyclic_table(2), 0).unwrap());
        let module = HModule::new(
            h.clone(),
            vec!["x1".into(), "x2".into()],
            vec![Matrix::identity(2), diag(&["1", "-1"])],
        )
        .unwrap();
        let mult = Tensor3::from_sparse(2, [(0, 0, 0, s("1")), (0, 1, 1, s("b")), (1, 0, 1, s("-1"))]);
        let a = BiHomAlgebra::new(module, mult, diag(&["1", "-1"]), diag(&["1", "b"]), Some(vec![s("1"), s("0")])).unwrap();
        (a, r0(&h))
    }

    fn x(i: usize) -> Subspace {
        Subspace::coordinate(3, &[i])
    }

    #[test]
    fn heisenberg_brackets_of_subspaces() {
        let l = heisenberg();
        let full = Subspace::full(3);
        assert_eq!(bracket_of_subspaces(&l, &full, &Subspace::zero(3)).unwrap(), Subspace::zero(3));
        assert_eq!(bracket_of_subspaces(&l, &full, &full).unwrap(), x(2));
        assert!(bracket_of_subspaces(&l, &x(2), &full).unwrap().is_zero());
    }

    #[test]
    fn heisenberg_lie_ideals() {
        let l = heisenberg();
        assert!(is_h_bihom_lie_ideal(&l, &Subspace::full(3)).unwrap().holds);
        assert!(is_h_bihom_lie_ideal(&l, &x(2)).unwrap().holds);
        let v = is_h_bihom_lie_ideal(&l, &x(0)).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.detail, "[x1, x2] = x3");
        assert_eq!(w.condition, "[U, L] ⊆ U");
    }

    #[test]
    fn example24_ideals() {
        let (a, _) = example24();
        assert!(is_h_bihom_ideal(&a, &Subspace::zero(2)).unwrap().holds);
        assert!(is_h_bihom_ideal(&a, &Subspace::coordinate(2, &[1])).unwrap().holds);
        let v = is_h_bihom_ideal(&a, &Subspace::coordinate(2, &[0])).unwrap();
        assert_eq!(v.witness.unwrap().detail, "(x2)(x1) = -x2");
    }

    #[test]
    fn centers() {
        let l = heisenberg();
        assert_eq!(center(&l), x(2));
        let abelian = l.with_maps(Matrix::identity(3), Matrix::identity(3)).unwrap();
        let zero = BiHomLie::new(
            abelian.module().clone(),
            Tensor3::zeros(3),
            Matrix::identity(3),
            Matrix::identity(3),
            abelian.rmatrix().clone(),
        )
        .unwrap();
        assert!(center(&zero).is_full());
    }

    #[test]
    fn closures() {
        let l = heisenberg();
        let c = ideal_closure(&l, &x(0), ClosureKind::Lie, None).unwrap();
        assert_eq!(c, Subspace::coordinate(3, &[0, 2]));
        assert!(ideal_closure(&l, &Subspace::zero(3), ClosureKind::Lie, None).unwrap().is_zero());
        let (a, _) = example24();
        let seed = Subspace::coordinate(2, &[1]);
        assert_eq!(ideal_closure(&a, &seed, ClosureKind::Associative, None).unwrap(), seed);
    }

    #[test]
    fn heisenberg_series() {
        let l = heisenberg();
        let ds = derived_series(&l, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(ds.terms, vec![Subspace::full(3), x(2), Subspace::zero(3)]);
        assert_eq!(ds.verdict, SeriesVerdict::TerminatesAtZero { step: 2 });
        let lcs = lower_central_series(&l, &Subspace::full(3), DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(lcs.terms, ds.terms);
        let zero = lower_central_series(&l, &Subspace::zero(3), 4).unwrap();
        assert_eq!(zero.verdict, SeriesVerdict::TerminatesAtZero { step: 0 });
    }

    #[test]
    fn relative_sets_on_heisenberg() {
        let l = heisenberg();
        let full = Subspace::full(3);
        assert!(relative_set(&l, &full, RelativeKind::Normalizer).unwrap().is_full());
        assert!(relative_set(&l, &x(2), RelativeKind::Transporter).unwrap().is_full());
        assert_eq!(relative_set(&l, &Subspace::zero(3), RelativeKind::Transporter).unwrap(), center(&l));
        assert_eq!(relative_set(&l, &full, RelativeKind::Annihilator).unwrap(), x(2));
    }

    #[test]
    fn certificates() {
        let l = heisenberg();
        let c = simplicity_certificate(&l, ClosureKind::Lie, DEFAULT_PROBES, 7, DEFAULT_MAX_STEPS).unwrap();
        assert!(matches!(&c.simple, SimplicityVerdict::CertifiedNonsimple { ideal, .. } if *ideal == x(2)));
        assert!(matches!(c.semiprime, SemiprimeVerdict::CertifiedNotSemiprime { .. }));
        assert!(matches!(c.prime, PrimeVerdict::CertifiedNotPrime { .. }));

        let (a, _) = example24();
        let c = simplicity_certificate(&a, ClosureKind::Associative, DEFAULT_PROBES, 7, DEFAULT_MAX_STEPS).unwrap();
        assert!(
            matches!(&c.simple, SimplicityVerdict::CertifiedNonsimple { ideal, .. } if *ideal == Subspace::coordinate(2, &[1]))
        );

        let h = Arc::new(trivial_hopf());
        let one = BiHomLie::new(
            HModule::trivial(h.clone(), vec!["x".into()]),
            Tensor3::zeros(1),
            Matrix::identity(1),
            Matrix::identity(1),
            RMatrix::trivial(&h),
        )
        .unwrap();
        let c = simplicity_certificate(&one, ClosureKind::Lie, 4, 1, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(c.simple, SimplicityVerdict::NoCounterexampleFound);
    }

    #[test]
    fn example24_is_skipped_by_instance_checks() {
        let (a, r) = example24();
        let e = check_proper_ideals_of_derived(&a, &r, 4, 1, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(e.status, Status::Skipped);
        let e = check_ideal_in_normalizer(&a, &r, "simple", 4, 1, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(e.status, Status::Skipped);
    }

    fn matrix_algebra() -> (BiHomAlgebra, RMatrix) {
        // 2x2 matrices with basis E11, E12, E21, E22.
        let h = Arc::new(trivial_hopf());
        let names = ["e11", "e12", "e21", "e22"].iter().map(|n| n.to_string()).collect();
        let module = HModule::trivial(h.clone(), names);
        let mut entries = Vec::new();
        for (i, (a, b)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
            for (j, (c, d)) in [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
                if b == c {
                    entries.push((i, j, 2 * a + d, Scalar::one()));
                }
            }
        }
        let mult = Tensor3::from_sparse(4, entries);
        let unit = vec![s("1"), s("0"), s("0"), s("1")];
        let a = BiHomAlgebra::new(module, mult, Matrix::identity(4), Matrix::identity(4), Some(unit)).unwrap();
        (a, RMatrix::trivial(&h))
    }

    #[test]
    fn matrix_algebra_instance_checks_pass() {
        let (a, r) = matrix_algebra();
        let l = commutator_bracket(&a, &r).unwrap();
        let full = Subspace::full(4);
        assert_eq!(bracket_of_subspaces(&l, &full, &full).unwrap().dim(), 3);
        for reading in ["prime", "simple"] {
            let e = check_ideal_in_normalizer(&a, &r, reading, 4, 1, DEFAULT_MAX_STEPS).unwrap();
            assert_eq!(e.status, Status::Pass, "{e:?}");
            assert!(e.checked > 0);
        }
        let e = check_proper_ideals_of_derived(&a, &r, 4, 1, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!(e.status, Status::Pass, "{e:?}");
    }
}
