//! BiHom-associative algebras and generalized BiHom-Lie algebras in the
//! category of modules over a quasitriangular Hopf algebra.
//!
//! Both structures carry an `H`-module, a structure-constant tensor and two
//! twisting maps `alpha`, `beta`. Every axiom is checked exhaustively over
//! basis tuples.

use thiserror::Error;

use crate::hmod::{
    braided_apply, braiding, check_equivariant_product, check_h_linear, HModule, ModuleMap,
};
use crate::hopf::{is_triangular, RMatrix};
use crate::linalg::{add_vectors, is_zero_vector, sub_vectors, unit_vector, Matrix, Vector};
use crate::report::{skipped, AxiomCheck, CheckEntry, CheckReport, InfoEntry};
use crate::scalar::Scalar;
use crate::tensor::Tensor3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiHomError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("`{0}` is not bijective")]
    NotBijective(&'static str),
    #[error("the R-matrix is not triangular")]
    NotTriangular,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("`{map}` is not an endomorphism of the bracket: {reason}")]
    NotEndomorphism { map: &'static str, reason: String },
    #[error("twisting requires an input with identity structure maps")]
    TwistInputNotPlain,
}

/// Read access shared by algebras and Lie algebras given by structure constants.
pub trait TwistedStructure {
    fn module(&self) -> &HModule;
    /// The multiplication (algebras) or bracket (Lie algebras).
    fn product(&self) -> &Tensor3;
    fn alpha(&self) -> &Matrix;
    fn beta(&self) -> &Matrix;

    fn dim(&self) -> usize {
        self.module().dim()
    }

    fn basis_names(&self) -> &[String] {
        self.module().basis_names()
    }

    fn apply_product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.product().apply(x, y)
    }
}

fn check_shapes(module: &HModule, product: &Tensor3, alpha: &Matrix, beta: &Matrix) -> Result<(), BiHomError> {
    let d = module.dim();
    if product.dim() != d {
        return Err(BiHomError::DimensionMismatch(format!(
            "structure constants have dim {}, module has dim {d}",
            product.dim()
        )));
    }
    for (name, m) in [("alpha", alpha), ("beta", beta)] {
        if m.rows() != d || m.cols() != d {
            return Err(BiHomError::DimensionMismatch(format!("{name} is not {d}x{d}")));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiHomAlgebra {
    module: HModule,
    mult: Tensor3,
    alpha: Matrix,
    beta: Matrix,
    unit: Option<Vector>,
    multiplicative: bool,
}

impl BiHomAlgebra {
    pub fn new(
        module: HModule,
        mult: Tensor3,
        alpha: Matrix,
        beta: Matrix,
        unit: Option<Vector>,
    ) -> Result<Self, BiHomError> {
        check_shapes(&module, &mult, &alpha, &beta)?;
        if let Some(u) = &unit {
            if u.len() != module.dim() {
                return Err(BiHomError::DimensionMismatch("unit vector length".into()));
            }
        }
        Ok(BiHomAlgebra {
            module,
            mult,
            alpha,
            beta,
            unit,
            multiplicative: true,
        })
    }

    /// Whether `alpha` and `beta` are required to be multiplicative (default true).
    pub fn with_multiplicative(mut self, flag: bool) -> Self {
        self.multiplicative = flag;
        self
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicative
    }

    pub fn with_maps(&self, alpha: Matrix, beta: Matrix) -> Result<Self, BiHomError> {
        check_shapes(&self.module, &self.mult, &alpha, &beta)?;
        Ok(BiHomAlgebra {
            alpha,
            beta,
            ..self.clone()
        })
    }
}

impl TwistedStructure for BiHomAlgebra {
    fn module(&self) -> &HModule {
        &self.module
    }
    fn product(&self) -> &Tensor3 {
        &self.mult
    }
    fn alpha(&self) -> &Matrix {
        &self.alpha
    }
    fn beta(&self) -> &Matrix {
        &self.beta
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiHomLie {
    module: HModule,
    bracket: Tensor3,
    alpha: Matrix,
    beta: Matrix,
    rmatrix: RMatrix,
}

impl BiHomLie {
    pub fn new(
        module: HModule,
        bracket: Tensor3,
        alpha: Matrix,
        beta: Matrix,
        rmatrix: RMatrix,
    ) -> Result<Self, BiHomError> {
        check_shapes(&module, &bracket, &alpha, &beta)?;
        if rmatrix.dim() != module.hopf().dim() {
            return Err(BiHomError::DimensionMismatch("R-matrix size".into()));
        }
        Ok(BiHomLie {
            module,
            bracket,
            alpha,
            beta,
            rmatrix,
        })
    }

    pub fn bracket(&self) -> &Tensor3 {
        &self.bracket
    }

    pub fn rmatrix(&self) -> &RMatrix {
        &self.rmatrix
    }

    pub fn apply_bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.bracket.apply(x, y)
    }

    pub fn with_maps(&self, alpha: Matrix, beta: Matrix) -> Result<Self, BiHomError> {
        check_shapes(&self.module, &self.bracket, &alpha, &beta)?;
        Ok(BiHomLie {
            alpha,
            beta,
            ..self.clone()
        })
    }
}

impl TwistedStructure for BiHomLie {
    fn module(&self) -> &HModule {
        &self.module
    }
    fn product(&self) -> &Tensor3 {
        &self.bracket
    }
    fn alpha(&self) -> &Matrix {
        &self.alpha
    }
    fn beta(&self) -> &Matrix {
        &self.beta
    }
}

fn flatten(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

fn commuting_maps(s: &impl TwistedStructure) -> CheckEntry {
    let mut check = AxiomCheck::new("commuting-maps", "alpha∘beta = beta∘alpha");
    let diff = s.alpha().mul(s.beta()).sub(&s.beta().mul(s.alpha()));
    check.record(|| vec!["alpha".into(), "beta".into()], flatten(&diff));
    check.finish()
}

fn multiplicative(s: &impl TwistedStructure, which: &'static str) -> CheckEntry {
    let f = if which == "alpha" { s.alpha() } else { s.beta() };
    let axiom = format!("{which}-multiplicative");
    let citation = format!("{which}(xy) = {which}(x){which}(y)");
    let mut check = AxiomCheck::new(&axiom, &citation);
    let d = s.dim();
    for i in 0..d {
        for j in 0..d {
            let left = f.apply(s.product().slice(i, j));
            let right = s.apply_product(&f.column(i), &f.column(j));
            check.record(|| s.module().names(&[i, j]), sub_vectors(&left, &right));
        }
    }
    check.finish()
}

/// The multiplication is a morphism of `H`-modules.
pub fn check_module_algebra(a: &BiHomAlgebra) -> CheckReport {
    let mut report = CheckReport::new("module-algebra");
    report.push(check_equivariant_product(
        "module-algebra",
        "h·(ab) = (h1·a)(h2·b)",
        &a.module,
        &a.mult,
    ));
    report
}

pub fn check_bihom_associative(a: &BiHomAlgebra) -> CheckReport {
    let d = a.dim();
    let mut report = CheckReport::new("bihom-assoc");
    report.push(commuting_maps(a));
    report.push(check_h_linear("alpha-h-linear", &a.module, &a.alpha));
    report.push(check_h_linear("beta-h-linear", &a.module, &a.beta));

    let mut assoc = AxiomCheck::new("bihom-associativity", "alpha(a)(bc) = (ab)beta(c)");
    for i in 0..d {
        let ai = a.alpha.column(i);
        for j in 0..d {
            for k in 0..d {
                let left = a.mult.apply(&ai, a.mult.slice(j, k));
                let right = a.mult.apply(a.mult.slice(i, j), &a.beta.column(k));
                assoc.record(|| a.module.names(&[i, j, k]), sub_vectors(&left, &right));
            }
        }
    }
    report.push(assoc.finish());

    for which in ["alpha", "beta"] {
        if a.multiplicative {
            report.push(multiplicative(a, which));
        } else {
            report.push(skipped(
                &format!("{which}-multiplicative"),
                &format!("{which}(xy) = {which}(x){which}(y)"),
                "algebra not flagged multiplicative",
            ));
        }
    }

    match &a.unit {
        Some(u) => {
            let mut check = AxiomCheck::new("unit", "1a = beta(a), a1 = alpha(a)");
            for i in 0..d {
                let left = sub_vectors(&a.mult.apply(u, &unit_vector(d, i)), &a.beta.column(i));
                let right = sub_vectors(&a.mult.apply(&unit_vector(d, i), u), &a.alpha.column(i));
                let mut res = left;
                res.extend(right);
                check.record(|| a.module.names(&[i]), res);
            }
            report.push(check.finish());
        }
        None => report.push(skipped("unit", "1a = beta(a), a1 = alpha(a)", "no unit given")),
    }

    report.absorb("", check_module_algebra(a));
    report
}

/// `(R²·b)(R¹·a) = ab` for all basis pairs.
pub fn is_h_commutative(a: &BiHomAlgebra, r: &RMatrix) -> bool {
    crate::hmod::is_braided_commutative(&a.module, &a.mult, r)
}

/// Precomputed `[beta²(e_p), [beta(e_q), alpha(e_r)]]` for all basis triples.
fn jacobi_table(l: &BiHomLie, outer: &Matrix, middle: &Matrix, inner: &Matrix) -> Vec<Vector> {
    let d = l.dim();
    let mut table = Vec::with_capacity(d * d * d);
    for p in 0..d {
        let x = outer.column(p);
        for q in 0..d {
            let y = middle.column(q);
            for r in 0..d {
                let yz = l.apply_bracket(&y, &inner.column(r));
                table.push(l.apply_bracket(&x, &yz));
            }
        }
    }
    table
}

/// Applies `τ` to the factors `(slot, slot + 1)` of a dense element of `L⊗L⊗L`.
fn braid_slots(tau: &Matrix, d: usize, x: &[Scalar], slot: usize) -> Vector {
    let mut out = vec![Scalar::zero(); d * d * d];
    for (idx, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = [idx / (d * d), (idx / d) % d, idx % d];
        let col = t[slot] * d + t[slot + 1];
        for row in 0..d * d {
            let v = tau.get(row, col);
            if v.is_zero() {
                continue;
            }
            let mut u = t;
            u[slot] = row / d;
            u[slot + 1] = row % d;
            out[(u[0] * d + u[1]) * d + u[2]] += c * v;
        }
    }
    out
}

/// Braided cyclic sum `{t} + {(τ⊗1)(1⊗τ)t} + {(1⊗τ)(τ⊗1)t}` of a trilinear
/// form given on basis triples.
fn braided_cyclic_sum(l: &BiHomLie, tau: &Matrix, table: &[Vector], triple: (usize, usize, usize)) -> Vector {
    let d = l.dim();
    let mut t0 = vec![Scalar::zero(); d * d * d];
    t0[(triple.0 * d + triple.1) * d + triple.2] = Scalar::one();
    let t1 = braid_slots(tau, d, &braid_slots(tau, d, &t0, 1), 0);
    let t2 = braid_slots(tau, d, &braid_slots(tau, d, &t0, 0), 1);
    let mut out = vec![Scalar::zero(); d];
    for t in [&t0, &t1, &t2] {
        for (idx, c) in t.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, v) in out.iter_mut().zip(&table[idx]) {
                if !v.is_zero() {
                    *slot += c * v;
                }
            }
        }
    }
    out
}

pub fn check_generalized_bihom_lie(l: &BiHomLie) -> CheckReport {
    let d = l.dim();
    let r = &l.rmatrix;
    let mut report = CheckReport::new("bihom-lie");
    report.push(commuting_maps(l));
    report.push(check_h_linear("alpha-h-linear", &l.module, &l.alpha));
    report.push(check_h_linear("beta-h-linear", &l.module, &l.beta));
    report.push(check_equivariant_product(
        "bracket-h-linear",
        "h·[a,b] = [h1·a, h2·b]",
        &l.module,
        &l.bracket,
    ));
    report.push(multiplicative(l, "alpha"));
    report.push(multiplicative(l, "beta"));

    let mut skew = AxiomCheck::new(
        "braided-skew-symmetry",
        "[beta(x), alpha(y)] = -[R²·beta(y), R¹·alpha(x)]",
    );
    for i in 0..d {
        for j in 0..d {
            let left = l.apply_bracket(&l.beta.column(i), &l.alpha.column(j));
            let right = braided_apply(&l.module, r, &l.bracket, &l.beta.column(j), &l.alpha.column(i));
            skew.record(|| l.module.names(&[i, j]), add_vectors(&left, &right));
        }
    }
    report.push(skew.finish());

    let tau = braiding(&l.module, &l.module, r);
    let beta2 = l.beta.mul(&l.beta);
    let table = jacobi_table(l, &beta2, &l.beta, &l.alpha);
    let mut jacobi = AxiomCheck::new(
        "braided-jacobi",
        "{x⊗y⊗z} + {(τ⊗1)(1⊗τ)(x⊗y⊗z)} + {(1⊗τ)(τ⊗1)(x⊗y⊗z)} = 0, {x⊗y⊗z} = [beta²(x), [beta(y), alpha(z)]]",
    );
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let res = braided_cyclic_sum(l, &tau, &table, (a, b, c));
                jacobi.record(|| l.module.names(&[a, b, c]), res);
            }
        }
    }
    report.push(jacobi.finish());
    report
}

/// Axioms of a generalized Hom-Lie algebra, using `alpha` only:
/// `[x,y] = -[R²·y, R¹·x]` and the braided Hom-Jacobi identity
/// with `{x⊗y⊗z} = [alpha(x), [y, z]]`.
pub fn check_generalized_hom_lie(l: &BiHomLie) -> CheckReport {
    let d = l.dim();
    let r = &l.rmatrix;
    let mut report = CheckReport::new("hom-lie");
    report.push(check_h_linear("alpha-h-linear", &l.module, &l.alpha));
    report.push(check_equivariant_product(
        "bracket-h-linear",
        "h·[a,b] = [h1·a, h2·b]",
        &l.module,
        &l.bracket,
    ));
    report.push(multiplicative(l, "alpha"));

    let mut skew = AxiomCheck::new("braided-skew-symmetry", "[x, y] = -[R²·y, R¹·x]");
    for i in 0..d {
        for j in 0..d {
            let left = l.bracket.slice(i, j).to_vec();
            let right = braided_apply(&l.module, r, &l.bracket, &unit_vector(d, j), &unit_vector(d, i));
            skew.record(|| l.module.names(&[i, j]), add_vectors(&left, &right));
        }
    }
    report.push(skew.finish());

    let tau = braiding(&l.module, &l.module, r);
    let id = Matrix::identity(d);
    let table = jacobi_table(l, &l.alpha, &id, &id);
    let mut jacobi = AxiomCheck::new("braided-hom-jacobi", "braided cyclic sum of [alpha(x), [y, z]] = 0");
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let res = braided_cyclic_sum(l, &tau, &table, (a, b, c));
                jacobi.record(|| l.module.names(&[a, b, c]), res);
            }
        }
    }
    report.push(jacobi.finish());
    report
}

fn invert_map(m: &Matrix, name: &'static str) -> Result<Matrix, BiHomError> {
    m.invert().map_err(|_| BiHomError::NotBijective(name))
}

/// `[a,b] = ab - (R²·alpha⁻¹beta(b))(R¹·alpha beta⁻¹(a))`.
///
/// Refuses when `alpha` or `beta` is singular, when `R` is not triangular, or
/// when the input fails its BiHom-associative or module-algebra checks.
pub fn commutator_bracket(a: &BiHomAlgebra, r: &RMatrix) -> Result<BiHomLie, BiHomError> {
    let h = a.module.hopf();
    if r.dim() != h.dim() {
        return Err(BiHomError::DimensionMismatch("R-matrix size".into()));
    }
    let alpha_inv = invert_map(&a.alpha, "alpha")?;
    let beta_inv = invert_map(&a.beta, "beta")?;
    if !is_triangular(h, r) {
        return Err(BiHomError::NotTriangular);
    }
    let pre = check_bihom_associative(a);
    if let Some(bad) = pre.entries.iter().find(|e| e.status == crate::report::Status::Fail) {
        return Err(BiHomError::PreconditionFailed(format!(
            "input fails `{}` ({})",
            bad.axiom, bad.citation
        )));
    }
    let left_twist = alpha_inv.mul(&a.beta);
    let right_twist = a.alpha.mul(&beta_inv);
    let d = a.dim();
    let bracket = Tensor3::from_fn(d, |i, j| {
        let braided = braided_apply(
            &a.module,
            r,
            &a.mult,
            &left_twist.column(j),
            &right_twist.column(i),
        );
        sub_vectors(a.mult.slice(i, j), &braided)
    });
    BiHomLie::new(
        a.module.clone(),
        bracket,
        a.alpha.clone(),
        a.beta.clone(),
        r.clone(),
    )
}

/// `[x, y]' = [alpha(x), beta(y)]` on a bracket whose own structure maps are the identity.
pub fn twist_bracket(l: &BiHomLie, alpha: &ModuleMap, beta: &ModuleMap) -> Result<BiHomLie, BiHomError> {
    let d = l.dim();
    if !l.alpha.is_identity() || !l.beta.is_identity() {
        return Err(BiHomError::TwistInputNotPlain);
    }
    let (am, bm) = (alpha.matrix(), beta.matrix());
    for (name, m) in [("alpha", am), ("beta", bm)] {
        if m.rows() != d || m.cols() != d {
            return Err(BiHomError::DimensionMismatch(format!("{name} is not {d}x{d}")));
        }
        if let Some((i, _)) = crate::hmod::h_linearity_defect(&l.module, &l.module, m) {
            return Err(BiHomError::NotEndomorphism {
                map: name,
                reason: format!("does not commute with the action of `{}`", l.module.hopf_name(i)),
            });
        }
        for i in 0..d {
            for j in 0..d {
                let left = m.apply(l.bracket.slice(i, j));
                let right = l.apply_bracket(&m.column(i), &m.column(j));
                if !is_zero_vector(&sub_vectors(&left, &right)) {
                    let names = l.module.names(&[i, j]);
                    return Err(BiHomError::NotEndomorphism {
                        map: name,
                        reason: format!("{name}([{0},{1}]) != [{name}({0}), {name}({1})]", names[0], names[1]),
                    });
                }
            }
        }
    }
    if am.mul(bm) != bm.mul(am) {
        return Err(BiHomError::NotEndomorphism {
            map: "alpha",
            reason: "alpha and beta do not commute".into(),
        });
    }
    let bracket = Tensor3::from_fn(d, |i, j| l.apply_bracket(&am.column(i), &bm.column(j)));
    BiHomLie::new(l.module.clone(), bracket, am.clone(), bm.clone(), l.rmatrix.clone())
}

/// The two derivation identities of the commutator bracket, over all basis triples:
///
/// * `[αβ(a), bc] = [β(a), b]β(c) + (R²·β(b))[R¹·α(a), c]`
/// * `[ab, αβ(c)] = α(a)[b, α(c)] + [a, R²·β(c)](R¹·α(b))`
pub fn check_derivation_identities(a: &BiHomAlgebra, r: &RMatrix) -> Result<CheckReport, BiHomError> {
    let l = commutator_bracket(a, r)?;
    let d = a.dim();
    let module = &a.module;
    let ab = a.alpha.mul(&a.beta);
    let mut report = CheckReport::new("lemma31");

    let mut first = AxiomCheck::new(
        "bracket-derivation-right",
        "[alpha beta(a), bc] = [beta(a), b]beta(c) + (R²·beta(b))[R¹·alpha(a), c]",
    );
    let mut second = AxiomCheck::new(
        "bracket-derivation-left",
        "[ab, alpha beta(c)] = alpha(a)[b, alpha(c)] + [a, R²·beta(c)](R¹·alpha(b))",
    );
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let (ea, eb, ec) = (unit_vector(d, i), unit_vector(d, j), unit_vector(d, k));
                let names = || module.names(&[i, j, k]);

                let lhs = l.apply_bracket(&ab.apply(&ea), a.mult.slice(j, k));
                let mut rhs = a.mult.apply(
                    &l.apply_bracket(&a.beta.apply(&ea), &eb),
                    &a.beta.apply(&ec),
                );
                for (p, q, c) in r.terms() {
                    let left_factor = module.action(q).apply(&a.beta.apply(&eb));
                    let inner = l.apply_bracket(&module.action(p).apply(&a.alpha.apply(&ea)), &ec);
                    let term = a.mult.apply(&left_factor, &inner);
                    rhs = add_vectors(&rhs, &crate::linalg::scale_vector(&term, &c));
                }
                first.record(names, sub_vectors(&lhs, &rhs));

                let lhs = l.apply_bracket(a.mult.slice(i, j), &ab.apply(&ec));
                let mut rhs = a.mult.apply(
                    &a.alpha.apply(&ea),
                    &l.apply_bracket(&eb, &a.alpha.apply(&ec)),
                );
                for (p, q, c) in r.terms() {
                    let inner = l.apply_bracket(&ea, &module.action(q).apply(&a.beta.apply(&ec)));
                    let right_factor = module.action(p).apply(&a.alpha.apply(&eb));
                    let term = a.mult.apply(&inner, &right_factor);
                    rhs = add_vectors(&rhs, &crate::linalg::scale_vector(&term, &c));
                }
                second.record(names, sub_vectors(&lhs, &rhs));
            }
        }
    }
    report.push(first.finish());
    report.push(second.finish());
    Ok(report)
}

/// Renders a coordinate vector as a linear combination of basis names.
pub fn format_combination(names: &[String], v: &[Scalar]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let neg = -c;
        let (sign, mag) = if !c.to_string().starts_with('-') {
            ("+", c.clone())
        } else {
            ("-", neg)
        };
        let coeff = if mag.is_one() {
            String::new()
        } else {
            let s = mag.to_string();
            if s.contains(' ') || s.contains('(') {
                format!("({s})*")
            } else {
                format!("{s}*")
            }
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&coeff);
        out.push_str(name);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Compares a computed table against reference values; one row per differing pair.
pub fn table_diff(names: &[String], computed: &Tensor3, reference: &Tensor3) -> Vec<String> {
    let d = computed.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let (c, r) = (computed.slice(i, j), reference.slice(i, j));
            if c != r {
                rows.push(format!(
                    "[{}, {}]: computed {}, reference {}",
                    names[i],
                    names[j],
                    format_combination(names, c),
                    format_combination(names, r)
                ));
            }
        }
    }
    rows
}

/// Informational comparison of a computed bracket with a reference table.
pub fn reference_diff(l: &BiHomLie, reference: &Tensor3) -> InfoEntry {
    let rows = table_diff(l.basis_names(), &l.bracket, reference);
    let message = if rows.is_empty() {
        "computed bracket matches the reference table".to_string()
    } else {
        format!("computed bracket differs from the reference table in {} entries", rows.len())
    };
    InfoEntry {
        topic: "reference-bracket".into(),
        message,
        rows,
    }
}

/// Nonzero entries of a structure table, `[x, y] = ...` per line.
pub fn table_rows(names: &[String], t: &Tensor3) -> Vec<String> {
    let d = t.dim();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let v = t.slice(i, j);
            if !is_zero_vector(v) {
                rows.push(format!("[{}, {}] = {}", names[i], names[j], format_combination(names, v)));
            }
        }
    }
    rows
}
