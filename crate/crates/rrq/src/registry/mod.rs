//! Catalog of verifiable q-series identities and congruence claims.
//!
//! Every record pairs two sides — expression strings in the CLI grammar,
//! dissections of such expressions, or a handful of special builders the
//! grammar cannot express — with an exact or modular relation and a default
//! verification depth. Where a source display is suspected of a misprint,
//! the catalog carries *all* candidate readings as variant records sharing a
//! base id (suffix `@...`); verification reports which variant holds and how
//! the others deviate, rather than silently normalizing.

mod data;

use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::expr::{eval, parse};
use crate::oracle::{beta_coefficients, beta_coefficients_mod};
use crate::products::{expand_e, expand_e_negative, psi, psi_neg};
use crate::series::{ReductionContext, Series};

use data::{EtaTerm, RTerm};

/// Where a record sits in the catalog's layering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    Lemma,
    Derived,
    Theorem,
    ProofStep,
}

impl Tier {
    pub fn name(self) -> &'static str {
        match self {
            Tier::Lemma => "lemma",
            Tier::Derived => "derived",
            Tier::Theorem => "theorem",
            Tier::ProofStep => "proof-step",
        }
    }
}

/// The relation asserted between the two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Exact,
    Congruent(u64),
}

/// Series builders for the few forms outside the expression grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialForm {
    /// The defining sum of the sixth-order mock theta series `beta(q)`.
    BetaSum,
    /// `3q + psi(-q)^2 / psi(-q^5)^2`.
    PsiNegRatioPlus3Q,
    /// `psi(-q)^2 / psi(-q^5)^2 + q`.
    PsiNegRatioPlusQ,
    /// `psi(-q)^2 + q * psi(-q^5)^2`.
    PsiNegSquareSum,
    /// `(-q^n; -q^n)_inf` for odd `n`.
    NegativePochhammer(usize),
    /// `E_2 * E_{-5}^3 / (E_{-1} * E_{10})`.
    NegativePochhammerQuotient,
}

impl SpecialForm {
    pub fn describe(self) -> String {
        match self {
            SpecialForm::BetaSum => "beta(q) defining sum".to_string(),
            SpecialForm::PsiNegRatioPlus3Q => "3*q + psi(-q)^2/psi(-q^5)^2".to_string(),
            SpecialForm::PsiNegRatioPlusQ => "psi(-q)^2/psi(-q^5)^2 + q".to_string(),
            SpecialForm::PsiNegSquareSum => "psi(-q)^2 + q*psi(-q^5)^2".to_string(),
            SpecialForm::NegativePochhammer(n) => format!("(-q^{n}; -q^{n})_inf"),
            SpecialForm::NegativePochhammerQuotient => {
                "E2*Eneg5^3/(Eneg1*E10)".to_string()
            }
        }
    }

    pub fn expand(self, order: usize) -> Result<Series, String> {
        let err = |e: crate::series::SeriesError| e.to_string();
        match self {
            SpecialForm::BetaSum => Ok(beta_coefficients(order)),
            SpecialForm::PsiNegRatioPlus3Q | SpecialForm::PsiNegRatioPlusQ => {
                let ratio = psi_neg_square_ratio(order).map_err(err)?;
                let (c, e) = if self == SpecialForm::PsiNegRatioPlus3Q {
                    (3, 1)
                } else {
                    (1, 1)
                };
                if order > e {
                    Ok(ratio.add(&Series::monomial(c, e, order).map_err(err)?))
                } else {
                    Ok(ratio)
                }
            }
            SpecialForm::PsiNegSquareSum => {
                let p1 = psi_neg(order);
                let p5 = psi_neg_inflated5(order);
                let mut sum = p1.mul(&p1);
                if order > 1 {
                    let q = Series::monomial(1, 1, order).map_err(err)?;
                    sum = sum.add(&q.mul(&p5.mul(&p5)));
                }
                Ok(sum)
            }
            SpecialForm::NegativePochhammer(n) => expand_e_negative(n, order).map_err(err),
            SpecialForm::NegativePochhammerQuotient => {
                let e2 = expand_e(2, order);
                let e10 = expand_e(10, order);
                let n5 = expand_e_negative(5, order).map_err(err)?;
                let n1 = expand_e_negative(1, order).map_err(err)?;
                Ok(e2
                    .mul(&n5.pow(3).map_err(err)?)
                    .mul(&n1.invert().map_err(err)?)
                    .mul(&e10.invert().map_err(err)?))
            }
        }
    }
}

fn psi_neg_inflated5(order: usize) -> Series {
    psi(order.div_ceil(5))
        .inflate(5)
        .truncate(order)
        .pipe_negate_odd()
}

fn psi_neg_square_ratio(order: usize) -> Result<Series, crate::series::SeriesError> {
    let p1 = psi_neg(order);
    let p5 = psi_neg_inflated5(order);
    let den = p5.mul(&p5).invert()?;
    Ok(p1.mul(&p1).mul(&den))
}

trait NegateOdd {
    fn pipe_negate_odd(&self) -> Series;
}

impl NegateOdd for Series {
    fn pipe_negate_odd(&self) -> Series {
        crate::products::negate_odd_exponents(self)
    }
}

/// One side of a record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Side {
    /// An expression in the CLI grammar, parsed at evaluation time.
    Expr(String),
    /// Coefficient extraction along `step*n + residue` of an expression.
    Dissect {
        expr: String,
        step: usize,
        residue: usize,
    },
    /// A builder outside the grammar.
    Special(SpecialForm),
    /// Coefficient extraction from a builder.
    SpecialDissect {
        form: SpecialForm,
        step: usize,
        residue: usize,
    },
}

impl Side {
    pub fn expr(s: impl Into<String>) -> Side {
        Side::Expr(s.into())
    }

    pub fn dissect(s: impl Into<String>, step: usize, residue: usize) -> Side {
        Side::Dissect {
            expr: s.into(),
            step,
            residue,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Side::Expr(s) => s.clone(),
            Side::Dissect {
                expr,
                step,
                residue,
            } => format!("[q^({step}n+{residue})] {{ {expr} }}"),
            Side::Special(f) => f.describe(),
            Side::SpecialDissect {
                form,
                step,
                residue,
            } => format!("[q^({step}n+{residue})] {{ {} }}", form.describe()),
        }
    }
}

/// A catalog entry: two sides, a relation, a tier, and a default depth.
#[derive(Debug, Clone)]
pub struct IdentityRecord {
    pub id: String,
    pub tier: Tier,
    pub relation: Relation,
    /// Short neutral description of what the record asserts.
    pub anchor: &'static str,
    pub default_depth: usize,
    pub lhs: Side,
    pub rhs: Side,
}

impl IdentityRecord {
    /// Id with any `@variant` suffix removed.
    pub fn base_id(&self) -> &str {
        self.id.split('@').next().unwrap_or(&self.id)
    }
}

/// Witness for a failed comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub id: String,
    pub depth: usize,
    pub pass: bool,
    pub mismatch: Option<Mismatch>,
    pub elapsed_ms: u128,
    /// Set when variant selection occurred: names the passing variant and
    /// how rejected variants deviate.
    pub note: Option<String>,
}

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("unknown registry id `{0}`")]
    UnknownId(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("depth budget exceeded: {needed} coefficients needed, budget {budget}")]
    DepthBudgetExceeded { needed: usize, budget: usize },
    #[error("record `{id}`: {message}")]
    Evaluation { id: String, message: String },
}

fn eval_side(side: &Side, order: usize, modulus: Option<u64>) -> Result<Series, String> {
    let ctx = match modulus {
        Some(m) => ReductionContext::modulo(m).map_err(|e| e.to_string())?,
        None => ReductionContext::exact(),
    };
    let eval_expr = |text: &str, order: usize| -> Result<Series, String> {
        let ast = parse(text).map_err(|e| e.to_string())?;
        eval(&ast, order, &ctx).map_err(|e| e.to_string())
    };
    match side {
        Side::Expr(s) => eval_expr(s, order),
        Side::Dissect {
            expr,
            step,
            residue,
        } => {
            let source_order = step * (order - 1) + residue + 1;
            let src = eval_expr(expr, source_order)?;
            Ok(src
                .dissect(*step, *residue)
                .map_err(|e| e.to_string())?
                .truncate(order))
        }
        Side::Special(form) => {
            let s = form.expand(order)?;
            match modulus {
                Some(m) => s.reduce_mod(m).map_err(|e| e.to_string()),
                None => Ok(s),
            }
        }
        Side::SpecialDissect {
            form,
            step,
            residue,
        } => {
            let source_order = step * (order - 1) + residue + 1;
            let src = form.expand(source_order)?;
            let src = match modulus {
                Some(m) => src.reduce_mod(m).map_err(|e| e.to_string())?,
                None => src,
            };
            Ok(src
                .dissect(*step, *residue)
                .map_err(|e| e.to_string())?
                .truncate(order))
        }
    }
}

/// Verify a single record at the given depth.
pub fn evaluate(record: &IdentityRecord, order: usize) -> Result<VerificationReport, RegistryError> {
    let started = Instant::now();
    let modulus = match record.relation {
        Relation::Exact => None,
        Relation::Congruent(m) => Some(m),
    };
    let fail = |message: String| RegistryError::Evaluation {
        id: record.id.clone(),
        message,
    };
    let lhs = eval_side(&record.lhs, order, modulus).map_err(fail)?;
    let rhs = eval_side(&record.rhs, order, modulus).map_err(|message| RegistryError::Evaluation {
        id: record.id.clone(),
        message,
    })?;
    let n = order.min(lhs.order()).min(rhs.order());
    let mismatch_at = lhs
        .equal_up_to(&rhs, n)
        .map_err(|e| RegistryError::Evaluation {
            id: record.id.clone(),
            message: e.to_string(),
        })?;
    let mismatch = mismatch_at.map(|e| Mismatch {
        exponent: e,
        lhs: lhs.coeff(e).map(|c| c.to_string()).unwrap_or_default(),
        rhs: rhs.coeff(e).map(|c| c.to_string()).unwrap_or_default(),
    });
    Ok(VerificationReport {
        id: record.id.clone(),
        depth: n,
        pass: mismatch.is_none(),
        mismatch,
        elapsed_ms: started.elapsed().as_millis(),
        note: None,
    })
}

/// Verify a base id, resolving variant records: the check passes if at least
/// one variant holds, and the report documents the selection.
pub fn verify(base_id: &str, depth: Option<usize>) -> Result<VerificationReport, RegistryError> {
    let records = variants_of(base_id);
    if records.is_empty() {
        return Err(RegistryError::UnknownId(base_id.to_string()));
    }
    if records.len() == 1 {
        let r = records[0];
        return evaluate(r, depth.unwrap_or(r.default_depth));
    }
    let started = Instant::now();
    let mut reports = Vec::new();
    for r in &records {
        reports.push(evaluate(r, depth.unwrap_or(r.default_depth))?);
    }
    let passing: Vec<&VerificationReport> = reports.iter().filter(|r| r.pass).collect();
    let mut note_parts = Vec::new();
    for rep in &reports {
        if rep.pass {
            note_parts.push(format!("variant `{}` holds", rep.id));
        } else if let Some(m) = &rep.mismatch {
            note_parts.push(format!(
                "variant `{}` deviates at exponent {} ({} vs {})",
                rep.id, m.exponent, m.lhs, m.rhs
            ));
        }
    }
    let pass = !passing.is_empty();
    let mismatch = if pass {
        None
    } else {
        reports.first().and_then(|r| r.mismatch.clone())
    };
    Ok(VerificationReport {
        id: base_id.to_string(),
        depth: reports.first().map(|r| r.depth).unwrap_or(0),
        pass,
        mismatch,
        elapsed_ms: started.elapsed().as_millis(),
        note: Some(note_parts.join("; ")),
    })
}

/// All records whose id equals `base` or is a `base@...` variant.
pub fn variants_of(base: &str) -> Vec<&'static IdentityRecord> {
    registry_contents()
        .iter()
        .filter(|r| r.id == base || r.base_id() == base)
        .collect()
}

/// Record with the exact id (including any variant suffix).
pub fn lookup(id: &str) -> Option<&'static IdentityRecord> {
    registry_contents().iter().find(|r| r.id == id)
}

/// Unique base ids, in catalog order.
pub fn base_ids() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for r in registry_contents() {
        let b = r.base_id();
        if out.last() != Some(&b) && !out.contains(&b) {
            out.push(r.id.split('@').next().unwrap());
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Combinator definitions (R-power forms) and their builders.
// ---------------------------------------------------------------------------

/// R-power definition of the degree-5 combinator at inflation `k`.
pub fn a_definition(k: usize) -> String {
    format!("R({k})^5-q^{}/R({k})^5", 2 * k)
}

/// R-power definition of the `R(q^k)^2/R(q^{2k})` combinator.
pub fn b_definition(k: usize) -> String {
    let k2 = 2 * k;
    format!("R({k})^2/R({k2})-R({k2})/R({k})^2")
}

/// R-power definitions of the ten `R(q), R(q^3)` combinators.
pub fn c_definition(i: usize) -> &'static str {
    match i {
        1 => "R(1)^3/R(3)+R(3)/R(1)^3",
        2 => "R(1)*R(3)^3+q^4/(R(1)*R(3)^3)",
        3 => "R(1)^2*R(3)-R(3)^2/R(1)+q^2*R(1)/R(3)^2-q^2/(R(1)^2*R(3))",
        4 => "R(3)^3/R(1)^4-q^2*R(1)^4/R(3)^3",
        5 => "R(1)^3*R(3)^4-q^6/(R(1)^3*R(3)^4)",
        6 => "R(1)^4*R(3)^2+q^4*R(1)^2/R(3)^4+R(3)^4/R(1)^2+q^4/(R(1)^4*R(3)^2)",
        7 => "R(3)^7/R(1)-q^2*R(1)^7*R(3)-q^6/(R(1)^7*R(3))+q^8*R(1)/R(3)^7",
        8 => "R(1)*R(3)^8-q^4*R(1)^8/R(3)+q^6*R(3)/R(1)^8-q^10/(R(1)*R(3)^8)",
        9 => "R(1)^4*R(3)^7-q^4*R(3)^4/R(1)^7+q^6*R(1)^7/R(3)^4-q^10/(R(1)^4*R(3)^7)",
        10 => "R(1)^7*R(3)^6+q^2*R(3)^7/R(1)^6-q^8*R(1)^6/R(3)^7-q^10/(R(1)^7*R(3)^6)",
        _ => panic!("C-combinator index must be 1..=10"),
    }
}

/// R-power definitions of the eight `R(q), R(q^4)` combinators.
pub fn d_definition(i: usize) -> &'static str {
    match i {
        1 => "R(1)*R(4)+q^2/(R(1)*R(4))",
        2 => "R(1)^4/R(4)-R(4)/R(1)^4",
        3 => "R(4)^2/R(1)^3-q^2*R(1)^3/R(4)^2",
        4 => "R(4)^3/R(1)^2-q^4*R(1)^2/R(4)^3",
        5 => "R(4)^4/R(1)-q^6*R(1)/R(4)^4",
        6 => "R(1)^2*R(4)^2+q^4/(R(1)^2*R(4)^2)",
        7 => "R(1)^3*R(4)^3+q^6/(R(1)^3*R(4)^3)",
        8 => "R(1)^4*R(4)^4+q^8/(R(1)^4*R(4)^4)",
        _ => panic!("D-combinator index must be 1..=8"),
    }
}

/// R-power definition of the `R(q)^2 R(q^2) / R(q^4)` combinator.
pub fn f_definition() -> &'static str {
    "R(1)^2*R(2)/R(4)+R(4)/(R(1)^2*R(2))"
}

fn build_definition(text: &str, order: usize) -> Series {
    let ast = parse(text).expect("combinator definitions are well-formed");
    eval(&ast, order, &ReductionContext::exact()).expect("combinator definitions evaluate")
}

/// Expand the degree-5 combinator at inflation `k` from its R-power form.
/// The matching closed form is catalogued as a registry record.
pub fn build_a(k: usize, order: usize) -> Series {
    build_definition(&a_definition(k), order)
}

/// Expand the `R(q^k)^2/R(q^{2k})` combinator from its R-power form.
pub fn build_b(k: usize, order: usize) -> Series {
    build_definition(&b_definition(k), order)
}

/// Expand the i-th `R(q), R(q^3)` combinator from its R-power form.
pub fn build_c(i: usize, order: usize) -> Series {
    build_definition(c_definition(i), order)
}

/// Expand the i-th `R(q), R(q^4)` combinator from its R-power form.
pub fn build_d(i: usize, order: usize) -> Series {
    build_definition(d_definition(i), order)
}

/// Expand the `R(q)^2 R(q^2) / R(q^4)` combinator from its R-power form.
pub fn build_f(order: usize) -> Series {
    build_definition(f_definition(), order)
}

// ---------------------------------------------------------------------------
// Expression-string assembly from term-list data.
// ---------------------------------------------------------------------------

fn paren(s: impl AsRef<str>) -> String {
    format!("({})", s.as_ref())
}

/// Render `sum c * q^e * R(1)^a * R(companion)^b` in the CLI grammar.
fn r_poly(companion: u32, terms: &[RTerm]) -> String {
    let mut out = String::new();
    for (idx, &(c, e, a, b)) in terms.iter().enumerate() {
        let neg = c < 0;
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mut factors: Vec<String> = Vec::new();
        if e > 0 {
            factors.push(if e == 1 { "q".into() } else { format!("q^{e}") });
        }
        if a != 0 {
            factors.push(if a == 1 {
                "R(1)".into()
            } else {
                format!("R(1)^{a}")
            });
        }
        if b != 0 {
            factors.push(if b == 1 {
                format!("R({companion})")
            } else {
                format!("R({companion})^{b}")
            });
        }
        let mag = c.unsigned_abs();
        if mag != 1 || factors.is_empty() {
            factors.insert(0, mag.to_string());
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Render `sum c * q^e * prod E_n^p / prod E_n^p` in the CLI grammar.
fn eta_poly(terms: &[EtaTerm]) -> String {
    let mut out = String::new();
    for (idx, &(c, e, num, den)) in terms.iter().enumerate() {
        let neg = c < 0;
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mut factors: Vec<String> = Vec::new();
        if e > 0 {
            factors.push(if e == 1 { "q".into() } else { format!("q^{e}") });
        }
        for &(n, p) in num {
            factors.push(if p == 1 {
                format!("E{n}")
            } else {
                format!("E{n}^{p}")
            });
        }
        let mag = c.unsigned_abs();
        if mag != 1 || factors.is_empty() {
            factors.insert(0, mag.to_string());
        }
        let mut term = factors.join("*");
        if !den.is_empty() {
            let dens: Vec<String> = den
                .iter()
                .map(|&(n, p)| {
                    if p == 1 {
                        format!("E{n}")
                    } else {
                        format!("E{n}^{p}")
                    }
                })
                .collect();
            term.push_str(&format!("/({})", dens.join("*")));
        }
        out.push_str(&term);
    }
    out
}

// ---------------------------------------------------------------------------
// The catalog.
// ---------------------------------------------------------------------------

/// The full identity catalog.
pub fn registry_contents() -> &'static [IdentityRecord] {
    static CATALOG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

fn build_catalog() -> Vec<IdentityRecord> {
    let mut out = Vec::new();
    let mut rec = |id: &str,
                   tier: Tier,
                   relation: Relation,
                   anchor: &'static str,
                   default_depth: usize,
                   lhs: Side,
                   rhs: Side| {
        out.push(IdentityRecord {
            id: id.to_string(),
            tier,
            relation,
            anchor,
            default_depth,
            lhs,
            rhs,
        });
    };

    let a = paren(a_definition(1));
    let a3 = paren(a_definition(3));
    let b = paren(b_definition(1));
    let b2 = paren(b_definition(2));
    let f = paren(f_definition());
    let c: Vec<String> = (0..=10)
        .map(|i| if i == 0 { String::new() } else { paren(c_definition(i)) })
        .collect();
    let d: Vec<String> = (0..=8)
        .map(|i| if i == 0 { String::new() } else { paren(d_definition(i)) })
        .collect();

    // ---- Lemma tier -------------------------------------------------------
    rec(
        "L-2.1-E1",
        Tier::Lemma,
        Relation::Exact,
        "five-dissection of E1 through R(q^5)",
        500,
        Side::expr("E1"),
        Side::expr("E25*(R(5)-q-q^2/R(5))"),
    );
    rec(
        "L-2.1-1byE1",
        Tier::Lemma,
        Relation::Exact,
        "five-dissection of 1/E1 through R(q^5)",
        500,
        Side::expr("1/E1"),
        Side::expr(
            "E25^5/E5^6*(R(5)^4+q*R(5)^3+2*q^2*R(5)^2+3*q^3*R(5)+5*q^4\
             -3*q^5/R(5)+2*q^6/R(5)^2-q^7/R(5)^3+q^8/R(5)^4)",
        ),
    );
    rec(
        "L-2.2-A",
        Tier::Lemma,
        Relation::Exact,
        "degree-5 R-combinator equals its eta closed form",
        500,
        Side::expr(a_definition(1)),
        Side::expr("11*q+E1^6/E5^6"),
    );
    rec(
        "L-2.2-B",
        Tier::Lemma,
        Relation::Exact,
        "R(q),R(q^2) combinator equals its eta closed form",
        500,
        Side::expr(b_definition(1)),
        Side::expr("4*q*E1*E10^5/(E2*E5^5)"),
    );
    rec(
        "L-2.3-C1",
        Tier::Lemma,
        Relation::Exact,
        "first R(q),R(q^3) combinator closed form",
        500,
        Side::expr(c_definition(1)),
        Side::expr("2+9*q^2*E1*E15^5/(E3*E5^5)"),
    );
    rec(
        "L-2.3-C2",
        Tier::Lemma,
        Relation::Exact,
        "second R(q),R(q^3) combinator closed form",
        500,
        Side::expr(c_definition(2)),
        Side::expr("E3*E5^5/(E1*E15^5)-2*q^2"),
    );
    rec(
        "L-2.3-C3",
        Tier::Lemma,
        Relation::Exact,
        "third R(q),R(q^3) combinator collapses to 3q",
        500,
        Side::expr(c_definition(3)),
        Side::expr("3*q"),
    );
    rec(
        "L-2.4-D1",
        Tier::Lemma,
        Relation::Exact,
        "R(q),R(q^4) product combinator closed form",
        500,
        Side::expr(d_definition(1)),
        Side::expr("2*q+E1*E4*E10^10/(E2^2*E5^5*E20^5)"),
    );
    rec(
        "STEP-2.13",
        Tier::Lemma,
        Relation::Exact,
        "R(q)R(q^4) combinator via a psi(-q) ratio",
        500,
        Side::expr(d_definition(1)),
        Side::Special(SpecialForm::PsiNegRatioPlus3Q),
    );
    rec(
        "L-2.4-psi",
        Tier::Lemma,
        Relation::Exact,
        "psi as an eta quotient",
        500,
        Side::expr("psi"),
        Side::expr("E2^2/E1"),
    );
    rec(
        "STEP-2.15",
        Tier::Lemma,
        Relation::Exact,
        "psi(-q) square combination as a signed-index eta quotient",
        500,
        Side::Special(SpecialForm::PsiNegSquareSum),
        Side::Special(SpecialForm::NegativePochhammerQuotient),
    );
    rec(
        "STEP-2.16-n1",
        Tier::Lemma,
        Relation::Exact,
        "signed-index product at n=1 as an eta quotient",
        500,
        Side::Special(SpecialForm::NegativePochhammer(1)),
        Side::expr("E2^3/(E1*E4)"),
    );
    rec(
        "STEP-2.16-n5",
        Tier::Lemma,
        Relation::Exact,
        "signed-index product at n=5 as an eta quotient",
        500,
        Side::Special(SpecialForm::NegativePochhammer(5)),
        Side::expr("E10^3/(E5*E20)"),
    );
    rec(
        "STEP-2.17",
        Tier::Lemma,
        Relation::Exact,
        "psi(-q) square ratio plus q as an eta quotient",
        500,
        Side::Special(SpecialForm::PsiNegRatioPlusQ),
        Side::expr("E1*E4*E10^10/(E2^2*E5^5*E20^5)"),
    );
    rec(
        "L-2.5-F",
        Tier::Lemma,
        Relation::Exact,
        "R(q),R(q^2),R(q^4) combinator closed form",
        500,
        Side::expr(f_definition()),
        Side::expr("2+4*q^2*E2*E20^5/(E4*E10^5)"),
    );
    rec(
        "ZS-3n1",
        Tier::Lemma,
        Relation::Exact,
        "beta coefficients on 3n+1 as an eta quotient",
        200,
        Side::SpecialDissect {
            form: SpecialForm::BetaSum,
            step: 3,
            residue: 1,
        },
        Side::expr("E3^3/E1^2"),
    );
    rec(
        "ZS-9n5",
        Tier::Lemma,
        Relation::Exact,
        "beta coefficients on 9n+5 as an eta quotient",
        100,
        Side::SpecialDissect {
            form: SpecialForm::BetaSum,
            step: 9,
            residue: 5,
        },
        Side::expr("3*E3^6/E1^5"),
    );
    rec(
        "L-4-recall",
        Tier::Lemma,
        Relation::Exact,
        "two-term split of a degree-5 eta quotient",
        500,
        Side::expr("E5^5/(E1^4*E10^3)"),
        Side::expr("E5/(E2^2*E10)+4*q*E10^2/(E1^3*E2)"),
    );

    // ---- Derived tier -----------------------------------------------------
    let der = |i: usize| -> &'static str {
        match i {
            4 => "fourth R(q),R(q^3) combinator",
            5 => "fifth R(q),R(q^3) combinator",
            6 => "sixth R(q),R(q^3) combinator",
            7 => "seventh R(q),R(q^3) combinator",
            8 => "eighth R(q),R(q^3) combinator",
            9 => "ninth R(q),R(q^3) combinator",
            10 => "tenth R(q),R(q^3) combinator",
            _ => unreachable!(),
        }
    };
    rec(
        "DER-C4",
        Tier::Derived,
        Relation::Exact,
        der(4),
        500,
        Side::expr(c_definition(4)),
        Side::expr(format!("{a}-{}*({}+1)", c[3], c[1])),
    );
    rec(
        "DER-C4-eta",
        Tier::Derived,
        Relation::Exact,
        der(4),
        500,
        Side::expr(c_definition(4)),
        Side::expr("E1^6/E5^6+2*q-27*q^3*E15^5*E1/(E3*E5^5)"),
    );
    rec(
        "DER-C5",
        Tier::Derived,
        Relation::Exact,
        der(5),
        500,
        Side::expr(c_definition(5)),
        Side::expr(format!("{a3}+({}-q^2)*{}", c[2], c[3])),
    );
    rec(
        "DER-C5-eta",
        Tier::Derived,
        Relation::Exact,
        der(5),
        500,
        Side::expr(c_definition(5)),
        Side::expr("E3^6/E15^6+3*q*E5^5*E3/(E1*E15^5)+2*q^3"),
    );
    rec(
        "DER-C6",
        Tier::Derived,
        Relation::Exact,
        der(6),
        500,
        Side::expr(c_definition(6)),
        Side::expr(format!("{}*{}", c[1], c[2])),
    );
    rec(
        "DER-C6-eta",
        Tier::Derived,
        Relation::Exact,
        der(6),
        500,
        Side::expr(c_definition(6)),
        Side::expr("2*E3*E5^5/(E1*E15^5)+5*q^2-18*q^4*E1*E15^5/(E3*E5^5)"),
    );
    rec(
        "DER-C7",
        Tier::Derived,
        Relation::Exact,
        der(7),
        500,
        Side::expr(c_definition(7)),
        Side::expr(format!("{}*{}", c[4], c[5])),
    );
    rec(
        "DER-C8",
        Tier::Derived,
        Relation::Exact,
        der(8),
        500,
        Side::expr(c_definition(8)),
        Side::expr(format!("{a3}*{}+q^4*({}-{a}*{})", c[2], c[3], c[1])),
    );
    rec(
        "DER-C9",
        Tier::Derived,
        Relation::Exact,
        der(9),
        500,
        Side::expr(c_definition(9)),
        Side::expr(format!("{}*{}-q^4*({}*{}+{})", c[2], c[5], c[1], c[4], c[3])),
    );
    rec(
        "DER-C10@as-printed",
        Tier::Derived,
        Relation::Exact,
        der(10),
        500,
        Side::expr(c_definition(10)),
        Side::expr(format!(
            "{}*({}-{}+q^2*{})-q^2*{a3}+q^4*({}-{a})",
            c[6], c[5], c[8], c[4], c[3]
        )),
    );
    rec(
        "DER-C10@derived",
        Tier::Derived,
        Relation::Exact,
        der(10),
        500,
        Side::expr(c_definition(10)),
        Side::expr(format!(
            "{}*(R(1)^4*R(3)^2+q^4/(R(1)^4*R(3)^2))\
             +q^2*{}*(R(3)^4/R(1)^2+q^4*R(1)^2/R(3)^4)+q^4*{}",
            c[5], c[4], c[3]
        )),
    );
    rec(
        "DER-D2",
        Tier::Derived,
        Relation::Exact,
        "second R(q),R(q^4) combinator",
        500,
        Side::expr(d_definition(2)),
        Side::expr(format!("{b}*{f}+{b2}")),
    );
    rec(
        "DER-D2-eta",
        Tier::Derived,
        Relation::Exact,
        "second R(q),R(q^4) combinator, eta closed form",
        500,
        Side::expr(d_definition(2)),
        Side::expr(
            "8*q*E1*E10^5/(E2*E5^5)+4*q^2*E2*E20^5/(E4*E10^5)+16*q^3*E1*E20^5/(E4*E5^5)",
        ),
    );
    rec(
        "DER-D3",
        Tier::Derived,
        Relation::Exact,
        "third R(q),R(q^4) combinator",
        500,
        Side::expr(d_definition(3)),
        Side::expr(format!("{a}-{}*{}", d[1], d[2])),
    );
    rec(
        "DER-D4",
        Tier::Derived,
        Relation::Exact,
        "fourth R(q),R(q^4) combinator",
        500,
        Side::expr(d_definition(4)),
        Side::expr(format!("{}*{}+q^2*{}", d[1], d[3], d[2])),
    );
    rec(
        "DER-D5",
        Tier::Derived,
        Relation::Exact,
        "fifth R(q),R(q^4) combinator",
        500,
        Side::expr(d_definition(5)),
        Side::expr(format!("{}*{}-q^2*{}", d[1], d[4], d[3])),
    );
    rec(
        "DER-D6",
        Tier::Derived,
        Relation::Exact,
        "sixth R(q),R(q^4) combinator",
        500,
        Side::expr(d_definition(6)),
        Side::expr(format!("{}^2-2*q^2", d[1])),
    );
    rec(
        "DER-D7",
        Tier::Derived,
        Relation::Exact,
        "seventh R(q),R(q^4) combinator",
        500,
        Side::expr(d_definition(7)),
        Side::expr(format!("{}^3-3*q^2*{}", d[1], d[1])),
    );
    rec(
        "DER-D8",
        Tier::Derived,
        Relation::Exact,
        "eighth R(q),R(q^4) combinator",
        500,
        Side::expr(d_definition(8)),
        Side::expr(format!("{}^2-2*q^4", d[6])),
    );

    // ---- Theorem tier -----------------------------------------------------
    rec(
        "THM-1.1",
        Tier::Theorem,
        Relation::Exact,
        "3-core generating function on 5n+3",
        300,
        Side::dissect("E3^3/E1", 5, 3),
        Side::expr("q*E15^3/E5"),
    );
    rec(
        "THM-1.3a",
        Tier::Theorem,
        Relation::Exact,
        "one-colored pair partition function on 5n+1",
        300,
        Side::dissect("1/(E1*E3)", 5, 1),
        Side::expr(eta_poly(data::RHS_COLORGEN1)),
    );
    rec(
        "THM-1.3b@as-printed",
        Tier::Theorem,
        Relation::Exact,
        "two-colored pair partition function on 5n+2, source reading",
        300,
        Side::dissect("1/(E1^2*E3^2)", 5, 2),
        Side::expr(format!("5*({})", eta_poly(data::RHS_COLORGEN2_PRINTED))),
    );
    rec(
        "THM-1.3b@corrected",
        Tier::Theorem,
        Relation::Exact,
        "two-colored pair partition function on 5n+2, corrected reading",
        300,
        Side::dissect("1/(E1^2*E3^2)", 5, 2),
        Side::expr(format!("5*({})", eta_poly(data::RHS_COLORGEN2_CORRECTED))),
    );
    rec(
        "THM-1.3c",
        Tier::Theorem,
        Relation::Exact,
        "three-colored pair partition function on 5n+3",
        300,
        Side::dissect("1/(E1^3*E3^3)", 5, 3),
        Side::expr(eta_poly(data::RHS_COLORGEN3)),
    );
    rec(
        "THM-1.8",
        Tier::Theorem,
        Relation::Exact,
        "4-regular partition function on 5n+3",
        300,
        Side::dissect("E4/E1", 5, 3),
        Side::expr(eta_poly(data::RHS_ELL1)),
    );
    rec(
        "THM-1.9@printed24",
        Tier::Theorem,
        Relation::Exact,
        "4-core generating function on 5n, coefficient-24 reading",
        300,
        Side::dissect("E4^4/E1", 5, 0),
        Side::expr(eta_poly(data::RHS_THM19_PRINTED24)),
    );
    rec(
        "THM-1.9@printed72",
        Tier::Theorem,
        Relation::Exact,
        "4-core generating function on 5n, coefficient-72 reading",
        300,
        Side::dissect("E4^4/E1", 5, 0),
        Side::expr(eta_poly(data::RHS_THM19_PRINTED72)),
    );
    rec(
        "THM-1.9@corrected",
        Tier::Theorem,
        Relation::Exact,
        "4-core generating function on 5n, corrected reading",
        300,
        Side::dissect("E4^4/E1", 5, 0),
        Side::expr(eta_poly(data::RHS_THM19_CORRECTED)),
    );

    // ---- Proof-step tier: exact records ----------------------------------
    let br_3core = paren(r_poly(3, data::BR_3COREGENEVE1));
    rec(
        "STEP-3coregeneve1@as-printed",
        Tier::ProofStep,
        Relation::Exact,
        "3-core extraction in mixed R/eta form, source prefactor",
        200,
        Side::dissect("E3^3/E1", 5, 3),
        Side::expr(format!("E5^5*E15^5/E1^6*{br_3core}")),
    );
    rec(
        "STEP-3coregeneve1@corrected",
        Tier::ProofStep,
        Relation::Exact,
        "3-core extraction in mixed R/eta form, corrected prefactor",
        200,
        Side::dissect("E3^3/E1", 5, 3),
        Side::expr(format!("E5^5*E15^3/E1^6*{br_3core}")),
    );
    rec(
        "STEP-C4b",
        Tier::ProofStep,
        Relation::Exact,
        "symmetric R(q),R(q^3) product rewritten through lower combinators",
        200,
        Side::expr("R(1)^4*R(3)^2+q^4/(R(1)^4*R(3)^2)"),
        Side::expr(format!(
            "{}-({}-2)*q^2+{}*(R(1)^2*R(3)-q^2/(R(1)^2*R(3)))",
            c[2], c[1], c[3]
        )),
    );
    rec(
        "STEP-C4c",
        Tier::ProofStep,
        Relation::Exact,
        "symmetric R(q),R(q^3) product minus its antisymmetric partner",
        200,
        Side::expr("R(1)^4*R(3)^2+q^4/(R(1)^4*R(3)^2)-3*q*(R(3)^2/R(1)-q^2*R(1)/R(3)^2)"),
        Side::expr("E3*E5^5/(E1*E15^5)+7*q^2-9*q^4*E1*E15^5/(E3*E5^5)"),
    );
    rec(
        "STEP-colgen1eve1@as-printed",
        Tier::ProofStep,
        Relation::Exact,
        "one-colored extraction in R-bracket form, source reading",
        200,
        Side::dissect("1/(E1*E3)", 5, 1),
        Side::expr(format!(
            "E5^5*E15^5/(E1^6*E3^6)*{}",
            paren(r_poly(3, data::BR_COLGEN1EVE1_PRINTED))
        )),
    );
    rec(
        "STEP-colgen1eve1@corrected",
        Tier::ProofStep,
        Relation::Exact,
        "one-colored extraction in R-bracket form, corrected reading",
        200,
        Side::dissect("1/(E1*E3)", 5, 1),
        Side::expr(format!(
            "E5^5*E15^5/(E1^6*E3^6)*{}",
            paren(r_poly(3, data::BR_COLGEN1EVE1_CORRECTED))
        )),
    );
    rec(
        "STEP-p1232@as-printed",
        Tier::ProofStep,
        Relation::Exact,
        "two-colored extraction in R-bracket form, source reading",
        200,
        Side::dissect("1/(E1^2*E3^2)", 5, 2),
        Side::expr(format!(
            "5*E5^10*E15^10/(E1^12*E3^12)*{}",
            paren(r_poly(3, data::BR_P1232_PRINTED))
        )),
    );
    rec(
        "STEP-p1232@corrected",
        Tier::ProofStep,
        Relation::Exact,
        "two-colored extraction in R-bracket form, corrected reading",
        200,
        Side::dissect("1/(E1^2*E3^2)", 5, 2),
        Side::expr(format!(
            "5*E5^10*E15^10/(E1^12*E3^12)*{}",
            paren(r_poly(3, data::BR_P1232_CORRECTED))
        )),
    );
    rec(
        "STEP-beta-eq@inner",
        Tier::ProofStep,
        Relation::Exact,
        "beta extraction in R-bracket form, trailing term inside the bracket",
        200,
        Side::dissect("E3^3/E1^2", 5, 2),
        Side::expr(format!(
            "5*E5^10*E15^3/E1^12*{}",
            paren(r_poly(3, data::BR_BETAEQ_CORE_INNER))
        )),
    );
    rec(
        "STEP-beta-eq@outer",
        Tier::ProofStep,
        Relation::Exact,
        "beta extraction in R-bracket form, trailing term outside the bracket",
        200,
        Side::dissect("E3^3/E1^2", 5, 2),
        Side::expr(format!(
            "5*E5^10*E15^3/E1^12*{}+12*q^2*{}",
            paren(r_poly(3, data::BR_BETAEQ_CORE)),
            paren(r_poly(3, data::BR_BETAEQ_TAIL))
        )),
    );
    rec(
        "STEP-b",
        Tier::ProofStep,
        Relation::Exact,
        "4-regular extraction in R-bracket form",
        200,
        Side::dissect("E4/E1", 5, 3),
        Side::expr(format!(
            "E5^5*E20/E1^6*{}",
            paren(r_poly(4, data::BR_B_STEP))
        )),
    );
    rec(
        "STEP-b4gen",
        Tier::ProofStep,
        Relation::Exact,
        "4-regular extraction as a five-term eta sum",
        200,
        Side::dissect("E4/E1", 5, 3),
        Side::expr(eta_poly(data::RHS_B4GEN)),
    );
    rec(
        "STEP-b4gen-factored",
        Tier::ProofStep,
        Relation::Exact,
        "4-regular extraction in factored eta form",
        200,
        Side::dissect("E4/E1", 5, 3),
        Side::expr(
            "(E10^5/(E2^4*E20^3)-4*q^2*E20^2/(E2^3*E4))\
             *(3*E2^2*E4*E10^5/(E1^5*E20)+q*E2^4*E5^5*E20^4/(E1^6*E10^5)\
             +4*q^2*E2^3*E20^4/E1^5)",
        ),
    );
    rec(
        "STEP-c@as-printed",
        Tier::ProofStep,
        Relation::Exact,
        "4-core extraction in R-bracket form, source reading",
        200,
        Side::dissect("E4^4/E1", 5, 0),
        Side::expr(format!(
            "E5^5*E20^4/E1^6*{}",
            paren(r_poly(4, data::BR_C_STEP_PRINTED))
        )),
    );
    rec(
        "STEP-c@corrected",
        Tier::ProofStep,
        Relation::Exact,
        "4-core extraction in R-bracket form, corrected reading",
        200,
        Side::dissect("E4^4/E1", 5, 0),
        Side::expr(format!(
            "E5^5*E20^4/E1^6*{}",
            paren(r_poly(4, data::BR_C_STEP_CORRECTED))
        )),
    );

    // ---- Proof-step tier: congruence records ------------------------------
    rec(
        "STEP-100",
        Tier::ProofStep,
        Relation::Congruent(25),
        "one-colored extraction reduced mod 25",
        200,
        Side::dissect("1/(E1*E3)", 5, 1),
        Side::expr(eta_poly(data::RHS_STEP100)),
    );
    rec(
        "STEP-Doneinseparate1",
        Tier::ProofStep,
        Relation::Congruent(25),
        "first summand on 5n+4, mod 25",
        200,
        Side::dissect("E5^5/(E1^6*E15)", 5, 4),
        Side::expr("315*E1^3*E5^4/E3"),
    );
    rec(
        "STEP-Doneinseparate2",
        Tier::ProofStep,
        Relation::Congruent(25),
        "second summand on 5n+4 vanishes mod 25",
        200,
        Side::dissect("10*q*E5^9/(E1^2*E15)", 5, 4),
        Side::expr("0"),
    );
    rec(
        "STEP-Doneinseparate3",
        Tier::ProofStep,
        Relation::Congruent(25),
        "third summand on 5n+4, mod 25",
        200,
        Side::dissect("q^2*E15^5/(E3^6*E5)", 5, 4),
        Side::expr("315*q^2*E3^3*E15^4/E1"),
    );
    rec(
        "STEP-Doneinseparate4",
        Tier::ProofStep,
        Relation::Congruent(25),
        "fourth summand on 5n+4, mod 25",
        200,
        Side::dissect("45*q^3*E5^4*E15^4/(E1*E3)", 5, 4),
        Side::expr("45*(E1^3*E5^4/E3+q^2*E3^3*E15^4/E1)"),
    );
    rec(
        "STEP-Doneinseparate5",
        Tier::ProofStep,
        Relation::Congruent(25),
        "fifth summand on 5n+4 vanishes mod 25",
        200,
        Side::dissect("-90*q^5*E15^9/(E3^2*E5)", 5, 4),
        Side::expr("0"),
    );
    rec(
        "STEP-25n21",
        Tier::ProofStep,
        Relation::Congruent(25),
        "one-colored coefficients on 25n+21, mod 25",
        200,
        Side::dissect("1/(E1*E3)", 25, 21),
        Side::expr("10*(E1^3*E5^4/E3+q^2*E3^3*E15^4/E1)"),
    );
    rec(
        "STEP-colgen1-mod5",
        Tier::ProofStep,
        Relation::Congruent(5),
        "one-colored extraction reduced mod 5",
        200,
        Side::dissect("1/(E1*E3)", 5, 1),
        Side::expr("E5^4/(E1*E15)+q^2*E15^4/(E3*E5)"),
    );
    rec(
        "STEP-125n21",
        Tier::ProofStep,
        Relation::Congruent(25),
        "one-colored coefficients on 125n+21, mod 25",
        200,
        Side::dissect("1/(E1*E3)", 125, 21),
        Side::expr("10*(E5^4/(E1*E15)+q^2*E15^4/(E3*E5))"),
    );
    rec(
        "STEP-125n21-R@as-printed",
        Tier::ProofStep,
        Relation::Congruent(25),
        "one-colored 125n+21 display in two R-brackets, source reading",
        200,
        Side::dissect("1/(E1*E3)", 125, 21),
        Side::expr(format!(
            "10*(E1^4*E5^3*E15^5/E3^6*{}-q*E3^4*E5^5*E15^3/E1^6*{})",
            paren(r_poly(3, data::BR_125N21_A_PRINTED)),
            paren(r_poly(3, data::BR_125N21_B_PRINTED))
        )),
    );
    rec(
        "STEP-125n21-R@derived",
        Tier::ProofStep,
        Relation::Congruent(25),
        "one-colored 125n+21 display in two R-brackets, derived reading",
        200,
        Side::dissect("1/(E1*E3)", 125, 21),
        Side::expr(format!(
            "10*(E1^4*E5^3*E15^5/E3^6*{}+E3^4*E5^5*E15^3/E1^6*{})",
            paren(r_poly(3, data::BR_125N21_A_DERIVED)),
            paren(r_poly(3, data::BR_125N21_B_DERIVED))
        )),
    );
    rec(
        "STEP-1byE1sq",
        Tier::ProofStep,
        Relation::Congruent(5),
        "1/E1^2 vanishes on 5n+3 mod 5",
        200,
        Side::dissect("1/E1^2", 5, 3),
        Side::expr("0"),
    );
    rec(
        "STEP-1byE3sq",
        Tier::ProofStep,
        Relation::Congruent(5),
        "1/E3^2 vanishes on 5n+4 mod 5",
        200,
        Side::dissect("1/E3^2", 5, 4),
        Side::expr("0"),
    );
    rec(
        "STEP-start",
        Tier::ProofStep,
        Relation::Congruent(25),
        "two-colored extraction reduced mod 25",
        200,
        Side::dissect("1/(E1^2*E3^2)", 5, 2),
        Side::expr(
            "5*E5^8/(E1^2*E15^2)+10*q^2*E5^3*E15^3/(E1*E3)+5*q^4*E15^8/(E3^2*E5^2)",
        ),
    );
    rec(
        "STEP-Reach",
        Tier::ProofStep,
        Relation::Congruent(25),
        "two-colored coefficients on 25n+17, mod 25",
        200,
        Side::dissect("1/(E1^2*E3^2)", 25, 17),
        Side::expr("10*(E1^2*E3^3*E5^4/E15+q^2*E1^3*E3^2*E15^4/E5)"),
    );
    rec(
        "STEP-Reach-R",
        Tier::ProofStep,
        Relation::Congruent(25),
        "two-colored 25n+17 display in R-bracket form, mod 25",
        200,
        Side::dissect("1/(E1^2*E3^2)", 25, 17),
        Side::expr(format!(
            "10*E5^5*E15^5/(E1^3*E3^3)*{}",
            paren(r_poly(3, data::BR_REACH_R))
        )),
    );
    rec(
        "STEP-125n42",
        Tier::ProofStep,
        Relation::Congruent(25),
        "two-colored coefficients on 125n+42, mod 25",
        200,
        Side::dissect("1/(E1^2*E3^2)", 125, 42),
        Side::expr(
            "20*(4*E5^8/(E1^2*E15^2)+3*q^2*E5^3*E15^3/(E1*E3)+4*q^4*E15^8/(E3^2*E5^2))",
        ),
    );
    rec(
        "STEP-Final",
        Tier::ProofStep,
        Relation::Congruent(25),
        "two-colored coefficients on 625n+417 return to the 25n+17 form",
        200,
        Side::dissect("1/(E1^2*E3^2)", 625, 417),
        Side::expr("10*(E1^2*E3^3*E5^4/E15+q^2*E1^3*E3^2*E15^4/E5)"),
    );
    rec(
        "STEP-cg3-rewrite",
        Tier::ProofStep,
        Relation::Congruent(5),
        "three-colored generating function rewritten mod 5",
        200,
        Side::expr("1/(E1^3*E3^3)"),
        Side::expr("E1^2*E3^2/(E5*E15)"),
    );
    rec(
        "STEP-cg3-extract",
        Tier::ProofStep,
        Relation::Congruent(5),
        "E1^2 E3^2 vanishes on 5n+3 mod 5",
        200,
        Side::dissect("E1^2*E3^2", 5, 3),
        Side::expr("0"),
    );
    rec(
        "STEP-beta-9n5-mod5",
        Tier::ProofStep,
        Relation::Congruent(5),
        "beta coefficients on 9n+5 reduced mod 5",
        200,
        Side::SpecialDissect {
            form: SpecialForm::BetaSum,
            step: 9,
            residue: 5,
        },
        Side::expr("3*E15*E3/E5"),
    );
    rec(
        "STEP-beta-mod5@as-printed",
        Tier::ProofStep,
        Relation::Congruent(5),
        "mod-5 beta form re-expanded through R(q^15), source sign",
        200,
        Side::expr("3*E15*E3/E5"),
        Side::expr("3*E15*E75/E5*(R(15)-q^3+q^6/R(15))"),
    );
    rec(
        "STEP-beta-mod5@corrected",
        Tier::ProofStep,
        Relation::Congruent(5),
        "mod-5 beta form re-expanded through R(q^15), corrected sign",
        200,
        Side::expr("3*E15*E3/E5"),
        Side::expr("3*E15*E75/E5*(R(15)-q^3-q^6/R(15))"),
    );

    out
}

// ---------------------------------------------------------------------------
// Congruence claims.
// ---------------------------------------------------------------------------

/// What a claim asserts about the progression coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimKind {
    /// All coefficients on the progression vanish (exactly or mod M).
    Vanishes,
    /// Coefficients equal those of a second progression (exactly or mod M).
    EqualsProgression { step: u64, offset: u64 },
}

/// A coefficient-progression claim about a series family.
#[derive(Debug, Clone)]
pub struct CongruenceClaim {
    pub id: String,
    pub family: String,
    pub step: u64,
    pub offset: u64,
    /// `None` for exact (integer) claims.
    pub modulus: Option<u64>,
    pub kind: ClaimKind,
    pub default_count: usize,
    /// True for claims checked as numerical evidence only.
    pub evidence_only: bool,
    /// Count of coefficients this claim has been verified for so far.
    pub verified_to: usize,
}

impl CongruenceClaim {
    #[allow(clippy::too_many_arguments)]
    fn new(
        id: &str,
        family: &str,
        step: u64,
        offset: u64,
        modulus: Option<u64>,
        kind: ClaimKind,
        default_count: usize,
        evidence_only: bool,
    ) -> CongruenceClaim {
        assert!(offset < step, "claim offset must satisfy 0 <= B < A");
        if let Some(m) = modulus {
            assert!(m >= 2, "claim modulus must be at least 2");
        }
        CongruenceClaim {
            id: id.to_string(),
            family: family.to_string(),
            step,
            offset,
            modulus,
            kind,
            default_count,
            evidence_only,
            verified_to: 0,
        }
    }
}

/// The built-in claims, in catalog order.
pub fn claims_catalog() -> Vec<CongruenceClaim> {
    use ClaimKind::*;
    let mut v = Vec::new();
    for (id, b) in [
        ("COR-1.2-r0", 3),
        ("COR-1.2-r2", 13),
        ("COR-1.2-r3", 18),
        ("COR-1.2-r4", 23),
    ] {
        v.push(CongruenceClaim::new(id, "a3", 25, b, None, Vanishes, 200, false));
    }
    v.push(CongruenceClaim::new(
        "COR-1.2-self",
        "a3",
        25,
        8,
        None,
        EqualsProgression { step: 1, offset: 0 },
        200,
        false,
    ));
    v.push(CongruenceClaim::new(
        "COR-1.4a", "p_1131", 25, 21, Some(5), Vanishes, 400, false,
    ));
    v.push(CongruenceClaim::new(
        "COR-1.4b", "p_1131", 625, 521, Some(25), Vanishes, 20, false,
    ));
    v.push(CongruenceClaim::new(
        "COR-1.6a", "p_1232", 5, 2, Some(5), Vanishes, 1000, false,
    ));
    v.push(CongruenceClaim::new(
        "COR-1.6b",
        "p_1232",
        625,
        417,
        Some(25),
        EqualsProgression {
            step: 25,
            offset: 17,
        },
        15,
        false,
    ));
    v.push(CongruenceClaim::new(
        "COR-1.6-rem", "p_1333", 5, 3, Some(5), Vanishes, 500, false,
    ));
    v.push(CongruenceClaim::new(
        "THM-1.7a", "p_beta", 15, 7, Some(5), Vanishes, 200, false,
    ));
    v.push(CongruenceClaim::new(
        "THM-1.7b", "p_beta", 45, 23, Some(15), Vanishes, 200, false,
    ));
    v.push(CongruenceClaim::new(
        "THM-1.7c", "p_beta", 45, 41, Some(15), Vanishes, 200, false,
    ));
    for (k, claim) in conjecture_instances(3).into_iter().enumerate() {
        let _ = k;
        v.push(claim);
    }
    for b in [22, 52, 67] {
        v.push(CongruenceClaim::new(
            &format!("ZS-75n{b}"),
            "p_beta",
            75,
            b,
            Some(25),
            Vanishes,
            40,
            true,
        ));
    }
    for b in [547, 1297, 1672] {
        v.push(CongruenceClaim::new(
            &format!("ZS-1875n{b}"),
            "p_beta",
            1875,
            b,
            Some(125),
            Vanishes,
            3,
            true,
        ));
    }
    v
}

/// The one-colored power-of-25 progression instances for k = 1..=k_max:
/// step 25^k, offset (5^(2k+1)+1)/6, modulus 5^k.
pub fn conjecture_instances(k_max: usize) -> Vec<CongruenceClaim> {
    let mut v = Vec::new();
    for k in 1..=k_max {
        let step = 25u64.pow(k as u32);
        let offset = (5 * step + 1) / 6;
        let modulus = 5u64.pow(k as u32);
        let default_count = match k {
            1 => 400,
            2 => 20,
            _ => 3,
        };
        v.push(CongruenceClaim::new(
            &format!("CONJ-1.5-k{k}"),
            "p_1131",
            step,
            offset,
            Some(modulus),
            ClaimKind::Vanishes,
            default_count,
            k >= 3,
        ));
    }
    v
}

/// Find a claim by id in the built-in catalog.
pub fn claim_by_id(id: &str) -> Option<CongruenceClaim> {
    claims_catalog().into_iter().find(|c| c.id == id)
}

/// The generating expression for a series family, if it is an eta quotient.
pub fn family_expr(name: &str) -> Option<&'static str> {
    match name {
        "a3" => Some("E3^3/E1"),
        "a4" => Some("E4^4/E1"),
        "b4" => Some("E4/E1"),
        "p_1131" => Some("1/(E1*E3)"),
        "p_1232" => Some("1/(E1^2*E3^2)"),
        "p_1333" => Some("1/(E1^3*E3^3)"),
        _ => None,
    }
}

/// All family names the claims machinery understands.
pub fn family_names() -> &'static [&'static str] {
    &["a3", "a4", "b4", "p_1131", "p_1232", "p_1333", "p_beta"]
}

/// Expand a family's coefficients to `order`, reduced when a modulus is given.
pub fn family_coefficients(
    name: &str,
    order: usize,
    modulus: Option<u64>,
) -> Result<Vec<BigInt>, RegistryError> {
    let fail = |message: String| RegistryError::Evaluation {
        id: format!("family {name}"),
        message,
    };
    if name == "p_beta" {
        let series = match modulus {
            Some(m) => beta_coefficients_mod(order, m)
                .map_err(|e| fail(e.to_string()))?
                .to_series(),
            None => beta_coefficients(order),
        };
        return Ok(series.coeffs().to_vec());
    }
    let text = family_expr(name).ok_or_else(|| RegistryError::UnknownFamily(name.to_string()))?;
    let ast = parse(text).map_err(|e| fail(e.to_string()))?;
    let ctx = match modulus {
        Some(m) => ReductionContext::modulo(m).map_err(|e| fail(e.to_string()))?,
        None => ReductionContext::exact(),
    };
    let series = eval(&ast, order, &ctx).map_err(|e| fail(e.to_string()))?;
    Ok(series.coeffs().to_vec())
}

/// Check the first `count` progression coefficients of a claim, updating its
/// `verified_to` on success. `budget` bounds the series depth.
pub fn check_claim(
    claim: &mut CongruenceClaim,
    count: usize,
    budget: usize,
) -> Result<VerificationReport, RegistryError> {
    let started = Instant::now();
    assert!(count >= 1, "count must be positive");
    let main_depth = claim.step as usize * (count - 1) + claim.offset as usize + 1;
    let needed = match claim.kind {
        ClaimKind::Vanishes => main_depth,
        ClaimKind::EqualsProgression { step, offset } => {
            main_depth.max(step as usize * (count - 1) + offset as usize + 1)
        }
    };
    if needed > budget {
        return Err(RegistryError::DepthBudgetExceeded { needed, budget });
    }
    let coeffs = family_coefficients(&claim.family, needed, claim.modulus)?;
    let mut mismatch = None;
    for n in 0..count {
        let idx = claim.step as usize * n + claim.offset as usize;
        let lhs = &coeffs[idx];
        let ok = match claim.kind {
            ClaimKind::Vanishes => lhs.is_zero(),
            ClaimKind::EqualsProgression { step, offset } => {
                let other = &coeffs[step as usize * n + offset as usize];
                match claim.modulus {
                    // Reduced coefficients are canonical residues.
                    Some(m) => ((lhs - other) % BigInt::from(m)).is_zero(),
                    None => lhs == other,
                }
            }
        };
        if !ok {
            let rhs = match claim.kind {
                ClaimKind::Vanishes => "0".to_string(),
                ClaimKind::EqualsProgression { step, offset } => {
                    coeffs[step as usize * n + offset as usize].to_string()
                }
            };
            mismatch = Some(Mismatch {
                exponent: n,
                lhs: lhs.to_string(),
                rhs,
            });
            break;
        }
    }
    let pass = mismatch.is_none();
    if pass {
        claim.verified_to = claim.verified_to.max(count);
    }
    Ok(VerificationReport {
        id: claim.id.clone(),
        depth: count,
        pass,
        mismatch,
        elapsed_ms: started.elapsed().as_millis(),
        note: claim
            .evidence_only
            .then(|| format!("candidate — verified to {count}; numerical evidence, not a proof")),
    })
}

/// Scan every residue class of `family` modulo `step` for vanishing
/// progressions, exactly (no modulus) or mod `modulus`. Returns the passing
/// residues as candidate claims tagged as evidence.
pub fn scan_family(
    family: &str,
    step: u64,
    modulus: Option<u64>,
    count: usize,
    budget: usize,
) -> Result<Vec<CongruenceClaim>, RegistryError> {
    assert!(step >= 1 && count >= 1);
    let needed = step as usize * count + step as usize;
    if needed > budget {
        return Err(RegistryError::DepthBudgetExceeded { needed, budget });
    }
    let coeffs = family_coefficients(family, needed, modulus)?;
    let mut found = Vec::new();
    for b in 0..step {
        let all_zero = (0..count).all(|n| coeffs[step as usize * n + b as usize].is_zero());
        if all_zero {
            let mod_tag = match modulus {
                Some(m) => format!("mod{m}"),
                None => "exact".to_string(),
            };
            let mut claim = CongruenceClaim::new(
                &format!("scan-{family}-{step}n+{b}-{mod_tag}"),
                family,
                step,
                b,
                modulus,
                ClaimKind::Vanishes,
                count,
                true,
            );
            claim.verified_to = count;
            found.push(claim);
        }
    }
    Ok(found)
}
