//! Command payloads and the computations behind each subcommand.
//!
//! Every command takes a JSON payload. Flags are turned into the same
//! payload, so schema validation happens in one place, before any
//! arithmetic.

use std::collections::BTreeMap;
use std::path::PathBuf;

use hodgesig_core::arith::{hilbert, prime_power, Place, Prime, Rational};
use hodgesig_core::interval::Iv;
use hodgesig_core::norms::{
    classify_extension, decide_p_isomorphic, is_norm, period_norm_class, ExtensionKind, LocalQuadExtension,
};
use hodgesig_core::quadform::{locally_isomorphic, BinaryForm};
use hodgesig_core::signature::{
    fourfold_signature_report_at_depth, honda_tate_invariant, predict_definiteness, verify_qz_when_known,
    MotiveDescriptor,
};
use hodgesig_core::weil::{
    enumerate_branch, first_coefficients, newton_slopes, tate_class_count, Branch, RootSystem, StructureReport,
    WeilPolynomial,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::Config;
use crate::doc::Status;
use crate::error::{CliError, CliResult};
use crate::record::{ingest_lmfdb, WeilRecord};

pub const ANALYZE_DEGREE_MESSAGE: &str = "degree must be 8 for analyze; use slopes/tate subcommands";

/// An integer or a rational written as `"a/b"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Text(String),
}

impl Num {
    pub fn to_rational(&self) -> CliResult<Rational> {
        match self {
            Num::Int(n) => Ok(Rational::from_integer(BigInt::from(*n))),
            Num::Text(s) => {
                s.trim().parse::<Rational>().map_err(|_| CliError::Usage(format!("not a rational number: {s:?}")))
            }
        }
    }
}

/// Parses a payload against a command's schema.
pub fn parse_payload<T: DeserializeOwned>(command: &str, payload: &Value) -> CliResult<T> {
    serde_json::from_value(payload.clone()).map_err(|e| CliError::Usage(format!("{command} payload: {e}")))
}

fn big(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn rat(x: &Rational) -> Value {
    json!(x.to_string())
}

fn prime(p: u64) -> CliResult<Prime> {
    Ok(Prime::from_u64(p)?)
}

// ---------------------------------------------------------------- analyze

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyzeBatch {
    pub records: Vec<WeilRecord>,
}

fn enclosure(iv: &Iv, digits: usize) -> Value {
    let (mid, radius) = iv.to_decimal(digits);
    json!({ "mid": mid, "radius": radius })
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Upper => "upper",
        Branch::Lower => "lower",
        Branch::Real => "real",
    }
}

fn eigenvalues(rs: &RootSystem, cfg: &Config) -> Vec<Value> {
    let digits = cfg.report.digits;
    let bits = cfg.precision.initial_bits.max(4 * digits as u32 + 16);
    let enc = rs.enclosures(bits);
    rs.values()
        .iter()
        .enumerate()
        .map(|(id, v)| {
            let (factor, beta_mult) = rs.beta_factor(v.beta);
            json!({
                "id": id,
                "branch": branch_name(v.branch),
                "multiplicity": v.multiplicity,
                "conjugate": rs.conj(id),
                "real_part_factor": factor.to_string(),
                "real_part_index": v.beta,
                "real_part_multiplicity": beta_mult,
                "re": enclosure(&enc[id].re, digits),
                "im": enclosure(&enc[id].im, digits),
            })
        })
        .collect()
}

fn structure_doc(s: &StructureReport) -> Value {
    json!({
        "count": s.count,
        "ok": s.is_ok(),
        "violations": s.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "eigenvalue_q_after_squaring": s.eigenvalue_q_after_squaring,
    })
}

fn slopes_doc(w: &WeilPolynomial) -> Value {
    let s = newton_slopes(w);
    json!({
        "slopes": s.0.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "p_rank": s.p_rank(),
        "ordinary": s.is_ordinary(),
        "supersingular": s.is_supersingular(),
    })
}

fn record_doc(rec: &WeilRecord, w: &WeilPolynomial) -> CliResult<Value> {
    let canonical = WeilRecord::from_weil(w, rec.label.clone())?;
    Ok(serde_json::to_value(canonical).expect("records serialize"))
}

/// The fourfold report for one degree-8 record.
pub fn analyze_record(rec: &WeilRecord, cfg: &Config) -> CliResult<(Value, Status)> {
    let w = rec.to_weil()?;
    if w.degree() != 8 {
        return Err(CliError::Input(ANALYZE_DEGREE_MESSAGE.into()));
    }
    let report = fourfold_signature_report_at_depth(&w, cfg.precision(), cfg.report.stable_depth)?;
    let rs = RootSystem::new(&w);
    let exotic: Vec<Value> = report
        .exotic_subsets
        .iter()
        .map(|e| {
            let c = &e.certificate;
            json!({
                "values": e.values.ids(),
                "certificate": {
                    "size": c.k,
                    "weight": c.w,
                    "exact_multiplicity": big(&c.exact_multiplicity),
                    "weighted_candidates": big(&c.weighted_candidates),
                    "precision_bits": c.precision_bits,
                },
            })
        })
        .collect();
    let stable: Vec<&[usize]> = report.stable_exotic_subsets.iter().map(|m| m.ids()).collect();
    let status = if report.structure.is_ok() { Status::Ok } else { Status::StructureViolation };
    let (s_plus, s_minus) = report.predicted_signature;
    let doc = json!({
        "record": record_doc(rec, &w)?,
        "slopes": slopes_doc(&w),
        "eigenvalues": eigenvalues(&rs, cfg),
        "rho1": report.rho1,
        "rho2_tate": report.rho2_tate,
        "exotic_count": report.exotic_count,
        "exotic_subsets": exotic,
        "stable_depth": report.stable_depth,
        "stable_exotic_subsets": stable,
        "structure": structure_doc(&report.structure),
        "predicted_signature": { "s_plus": s_plus, "s_minus": s_minus },
        "conditionality": {
            "rho1_tate_conditional": report.conditionality.rho1_conditional,
            "rho2_tate_conditional": report.conditionality.rho2_conditional,
            "exotic_dimension_tate_conditional": true,
        },
    });
    Ok((doc, status))
}

/// Analyzes records in parallel; items keep input order. Per-record
/// failures become error items; the status is the worst seen.
pub fn analyze_batch(batch: &AnalyzeBatch, cfg: &Config) -> (Value, Status, i32) {
    let items: Vec<(Value, i32)> = batch
        .records
        .par_iter()
        .enumerate()
        .map(|(i, rec)| match analyze_record(rec, cfg) {
            Ok((doc, st)) => {
                (json!({ "index": i, "label": rec.label, "status": st.as_str(), "result": doc }), st.exit_code())
            }
            Err(e) => (
                json!({
                    "index": i,
                    "label": rec.label,
                    "status": "error",
                    "error": { "kind": e.kind(), "exit_code": e.exit_code(), "message": e.to_string() },
                }),
                e.exit_code(),
            ),
        })
        .collect();
    let code = items.iter().map(|(_, c)| *c).max().unwrap_or(0);
    let status = if items.iter().any(|(v, _)| v["status"] == "structure_violation") {
        Status::StructureViolation
    } else {
        Status::Ok
    };
    let docs: Vec<Value> = items.into_iter().map(|(v, _)| v).collect();
    (json!({ "count": docs.len(), "items": docs }), status, code)
}

// -------------------------------------------------------------- enumerate

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumeratePayload {
    pub q: u64,
    pub g: usize,
    #[serde(default)]
    pub ordinary: bool,
    #[serde(default)]
    pub supersingular: bool,
    /// Keep only products of Weil polynomials of genus at most this.
    #[serde(default)]
    pub compose_max_genus: Option<usize>,
}

/// `a_1, ..., a_{2g}` for `P = x^{2g} + a_1 x^{2g-1} + ... + a_{2g}`.
fn lex_key(w: &WeilPolynomial) -> Vec<BigInt> {
    w.coeffs().iter().rev().skip(1).cloned().collect()
}

fn full_enumeration(q: &BigInt, g: usize) -> Vec<WeilPolynomial> {
    let branches: Vec<Vec<WeilPolynomial>> = first_coefficients(q, g)
        .par_iter()
        .map(|b1| {
            let mut out = Vec::new();
            enumerate_branch(q, g, b1, |w| out.push(w));
            out
        })
        .collect();
    let mut all: Vec<WeilPolynomial> = branches.into_iter().flatten().collect();
    all.sort_by_cached_key(lex_key);
    all
}

/// All products of Weil polynomials of genus `<= max_genus` with total genus
/// `g`, without repetition, in lexicographic order.
pub fn composed_enumeration(q: &BigInt, g: usize, max_genus: usize) -> CliResult<Vec<WeilPolynomial>> {
    let factors: Vec<WeilPolynomial> = (1..=max_genus.min(g)).flat_map(|k| full_enumeration(q, k)).collect();
    let mut out: BTreeMap<Vec<BigInt>, WeilPolynomial> = BTreeMap::new();
    let mut stack: Vec<(usize, usize, Option<WeilPolynomial>)> = vec![(0, g, None)];
    while let Some((start, remaining, acc)) = stack.pop() {
        if remaining == 0 {
            let w = acc.expect("g is positive");
            out.entry(lex_key(&w)).or_insert(w);
            continue;
        }
        for (j, f) in factors.iter().enumerate().skip(start) {
            if f.g() > remaining {
                continue;
            }
            let next = match &acc {
                None => f.clone(),
                Some(a) => a.mul(f)?,
            };
            stack.push((j, remaining - f.g(), Some(next)));
        }
    }
    Ok(out.into_values().collect())
}

pub fn enumerate_records(pl: &EnumeratePayload, cfg: &Config) -> CliResult<Vec<WeilRecord>> {
    let b = &cfg.enumeration;
    if pl.q > b.max_q {
        return Err(CliError::Bound(format!(
            "q = {} exceeds the enumeration bound max_q = {}; raise [enumeration] max_q in the config to go further",
            pl.q, b.max_q
        )));
    }
    if pl.g == 0 || pl.g > b.max_g || pl.g > 4 {
        return Err(CliError::Bound(format!(
            "g = {} is outside 1..={}; degree 2g is limited to 8",
            pl.g,
            b.max_g.min(4)
        )));
    }
    let q = BigInt::from(pl.q);
    if prime_power(&q).is_none() {
        return Err(CliError::Input(format!("q = {} is not a prime power", pl.q)));
    }
    let polys = match pl.compose_max_genus {
        None => full_enumeration(&q, pl.g),
        Some(0) => return Err(CliError::Usage("compose_max_genus must be at least 1".into())),
        Some(m) => composed_enumeration(&q, pl.g, m)?,
    };
    polys
        .iter()
        .filter(|w| {
            let s = newton_slopes(w);
            (!pl.ordinary || s.is_ordinary()) && (!pl.supersingular || s.is_supersingular())
        })
        .map(|w| WeilRecord::from_weil(w, None))
        .collect()
}

// ------------------------------------------------------------------ forms

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormsPayload {
    /// Gram entries `[g11, g12, g22]` of `g11 x^2 + 2 g12 x y + g22 y^2`.
    pub f1: [Num; 3],
    #[serde(default)]
    pub f2: Option<[Num; 3]>,
    /// `"real"` or a prime. Defaults to the product-formula support.
    #[serde(default)]
    pub places: Option<Vec<String>>,
}

fn form(g: &[Num; 3]) -> CliResult<BinaryForm> {
    Ok(BinaryForm::new(g[0].to_rational()?, g[1].to_rational()?, g[2].to_rational()?)?)
}

pub fn parse_place(s: &str) -> CliResult<Place> {
    match s.trim() {
        "real" | "inf" | "infinity" => Ok(Place::Real),
        t => {
            let n: BigInt = t.parse().map_err(|_| CliError::Usage(format!("not a place: {t:?}")))?;
            Ok(Place::finite(n)?)
        }
    }
}

fn form_doc(f: &BinaryForm, places: &[Place]) -> Value {
    let g = f.gram();
    let sig = f.real_signature();
    json!({
        "gram": [rat(&g[0][0]), rat(&g[0][1]), rat(&g[1][1])],
        "determinant": rat(&f.determinant()),
        "definiteness": f.definiteness().as_str(),
        "real_signature": { "s_plus": sig.s_plus, "s_minus": sig.s_minus },
        "product_formula_support": f.product_formula_support().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "product_formula_holds": f.product_formula_check(),
        "local": places.iter().map(|v| json!({
            "place": v.to_string(),
            "epsilon": f.epsilon(v),
            "disc_class": f.discriminant_class(v).to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn forms(pl: &FormsPayload) -> CliResult<Value> {
    let f1 = form(&pl.f1)?;
    let f2 = pl.f2.as_ref().map(form).transpose()?;
    let places: Vec<Place> = match &pl.places {
        Some(ps) => ps.iter().map(|s| parse_place(s)).collect::<CliResult<_>>()?,
        None => {
            let mut ps = f1.product_formula_support();
            if let Some(f2) = &f2 {
                ps.extend(f2.product_formula_support());
            }
            ps.sort();
            ps.dedup();
            ps
        }
    };
    let mut docs = vec![form_doc(&f1, &places)];
    let mut out = json!({ "places": places.iter().map(|p| p.to_string()).collect::<Vec<_>>() });
    if let Some(f2) = &f2 {
        docs.push(form_doc(f2, &places));
        let cmp: Vec<Value> = places
            .iter()
            .map(|v| json!({ "place": v.to_string(), "isomorphic": locally_isomorphic(&f1, f2, v) }))
            .collect();
        let all = places.iter().all(|v| locally_isomorphic(&f1, f2, v));
        out["comparison"] = json!(cmp);
        out["isomorphic_at_all_listed"] = json!(all);
    }
    out["forms"] = json!(docs);
    Ok(out)
}

// ------------------------------------------------------------------- norm

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormPayload {
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(default)]
    pub x: Option<Num>,
    #[serde(default)]
    pub d: Option<Num>,
    #[serde(default)]
    pub i: Option<u32>,
    #[serde(default)]
    pub kind: Option<String>,
}

fn parse_kind(k: &str) -> CliResult<ExtensionKind> {
    ExtensionKind::parse(k).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown extension kind {k:?}; expected split, unramified, tame_ramified, wild_Q2_sqrt_minus1 or wild_Q2_sqrt3"
        ))
    })
}

/// `p` may be left out for the wild kinds, which only live over `Q_2`.
fn resolve_p(p: Option<u64>, kind: Option<&str>) -> CliResult<Prime> {
    match (p, kind.map(parse_kind).transpose()?) {
        (Some(p), _) => prime(p),
        (None, Some(ExtensionKind::WildQ2SqrtMinus1 | ExtensionKind::WildQ2Sqrt3)) => Ok(Prime::two()),
        (None, _) => Err(CliError::Usage("p is required".into())),
    }
}

fn extension(p: &Prime, kind: Option<&str>, d: Option<&Num>) -> CliResult<Option<LocalQuadExtension>> {
    match (kind, d) {
        (Some(_), Some(_)) => Err(CliError::Usage("give the extension by kind or by d, not both".into())),
        (Some(k), None) => Ok(Some(LocalQuadExtension::of_kind(parse_kind(k)?, p)?)),
        (None, Some(d)) => Ok(Some(classify_extension(&d.to_rational()?, p)?)),
        (None, None) => Ok(None),
    }
}

fn extension_doc(e: &LocalQuadExtension) -> Value {
    json!({
        "p": big(e.p().value()),
        "d": rat(e.d()),
        "kind": e.kind().as_str(),
        "description": e.to_string(),
    })
}

pub fn norm(pl: &NormPayload) -> CliResult<Value> {
    if pl.x.is_none() && pl.i.is_none() {
        return Err(CliError::Usage("norm needs x (membership) or i (period parity)".into()));
    }
    let p = resolve_p(pl.p, pl.kind.as_deref())?;
    let ext = extension(&p, pl.kind.as_deref(), pl.d.as_ref())?;
    let mut out = json!({ "p": big(p.value()) });
    if let Some(e) = &ext {
        out["extension"] = extension_doc(e);
    }
    if let Some(x) = &pl.x {
        let e = ext.as_ref().ok_or_else(|| CliError::Usage("norm membership needs d or kind".into()))?;
        let x = x.to_rational()?;
        out["membership"] = json!({
            "x": rat(&x),
            "hilbert_symbol": hilbert(&x, e.d(), &Place::Finite(p.clone()))?,
            "is_norm": is_norm(&x, e)?,
        });
    }
    if let Some(i) = pl.i {
        let iso = decide_p_isomorphic(i, ext.as_ref())?;
        let mut parity = json!({ "i": i, "i_even": i % 2 == 0, "p_isomorphic": iso });
        if i > 0 {
            let e = ext.as_ref().expect("decide_p_isomorphic checked the extension");
            let c = period_norm_class(i, e)?;
            parity["period_norm_class"] = rat(&c);
            parity["period_is_norm"] = json!(is_norm(&c, e)?);
        }
        out["parity"] = parity;
    }
    Ok(out)
}

// -------------------------------------------------------------- signature

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignaturePayload {
    pub i: u32,
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(default)]
    pub kind: Option<String>,
    #[serde(default)]
    pub d: Option<Num>,
    #[serde(default)]
    pub qb: Option<[Num; 3]>,
    #[serde(default)]
    pub qz: Option<[Num; 3]>,
    #[serde(default)]
    pub witnesses: Vec<u64>,
}

pub fn signature(pl: &SignaturePayload) -> CliResult<Value> {
    let p = resolve_p(pl.p, pl.kind.as_deref())?;
    let ext = extension(&p, pl.kind.as_deref(), pl.d.as_ref())?;
    let m = match &pl.qb {
        None if pl.qz.is_none() => MotiveDescriptor::standard(pl.i, p.clone(), ext.clone())?,
        qb => {
            let q_b = match qb {
                Some(g) => form(g)?,
                None => {
                    let s = Num::Int(if pl.i.is_multiple_of(2) { 1 } else { -1 });
                    form(&[s.clone(), Num::Int(0), s])?
                }
            };
            let q_z = pl.qz.as_ref().map(form).transpose()?;
            MotiveDescriptor::new(pl.i, p.clone(), ext.clone(), q_b, q_z)?
        }
    };
    let predicted = predict_definiteness(&m)?;
    let g = m.q_b().gram();
    let mut out = json!({
        "hodge_gap": pl.i,
        "p": big(p.value()),
        "extension": ext.as_ref().map(extension_doc),
        "q_b": [rat(&g[0][0]), rat(&g[0][1]), rat(&g[1][1])],
        "p_isomorphic": decide_p_isomorphic(pl.i, ext.as_ref())?,
        "predicted_definiteness": predicted.as_str(),
    });
    if m.q_z().is_some() {
        let witnesses: Vec<Prime> = pl.witnesses.iter().map(|&l| prime(l)).collect::<CliResult<_>>()?;
        let r = verify_qz_when_known(&m, &witnesses)?;
        out["consistency"] = json!({
            "consistent": r.is_consistent(),
            "predicted": r.predicted.as_str(),
            "observed": r.observed.as_str(),
            "p_isomorphic_predicted": r.p_isomorphic_predicted,
            "p_isomorphic_observed": r.p_isomorphic_observed,
            "witnesses": r.witnesses.iter().map(|(l, iso)| json!({ "prime": big(l.value()), "isomorphic": iso })).collect::<Vec<_>>(),
            "issues": r.issues,
        });
    }
    Ok(out)
}

// --------------------------------------------------------- slopes / tate

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TatePayload {
    #[serde(flatten)]
    pub record: WeilRecord,
    pub n: usize,
}

pub fn slopes(rec: &WeilRecord) -> CliResult<Value> {
    let w = rec.to_weil()?;
    let mut out = slopes_doc(&w);
    out["record"] = record_doc(rec, &w)?;
    Ok(out)
}

pub fn tate(pl: &TatePayload, cfg: &Config) -> CliResult<Value> {
    let w = pl.record.to_weil()?;
    if pl.n == 0 || pl.n > w.g() {
        return Err(CliError::Input(format!("n must lie in 1..={}", w.g())));
    }
    let count = tate_class_count(&w, pl.n, cfg.precision())?;
    Ok(json!({
        "record": record_doc(&pl.record, &w)?,
        "n": pl.n,
        "tate_class_count": big(&count),
        "tate_conditional": pl.n > 1,
    }))
}

// ----------------------------------------------------------------- ingest

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IngestPayload {
    pub path: PathBuf,
}

pub fn ingest(pl: &IngestPayload) -> CliResult<Value> {
    let r = ingest_lmfdb(&pl.path)?;
    Ok(json!({
        "accepted": r.records.len(),
        "rejected": r.rejects.len(),
        "records": r.records,
        "rejects": r.rejects,
    }))
}

// --------------------------------------------------------------- selftest

fn check(name: &str, pass: bool, detail: String) -> Value {
    json!({ "name": name, "pass": pass, "detail": detail })
}

fn selftest_checks(cfg: &Config) -> CliResult<Vec<Value>> {
    let two = Place::Finite(Prime::two());
    let r = |n: i64| Rational::from_integer(BigInt::from(n));
    let mut out = Vec::new();

    let h1 = hilbert(&r(-9), &r(-1), &two)?;
    let h2 = hilbert(&r(-9), &r(3), &two)?;
    out.push(check("wild non-norm -9", h1 == -1 && h2 == -1, format!("(-9,-1)_2 = {h1}, (-9,3)_2 = {h2}")));

    let mut bad = Vec::new();
    for n in 2..=100u64 {
        let Ok(p) = Prime::from_u64(n) else { continue };
        let e = LocalQuadExtension::of_kind(ExtensionKind::Unramified, &p)?;
        if is_norm(&Rational::new(BigInt::from(1), BigInt::from(n)), &e)? {
            bad.push(n);
        }
    }
    out.push(check("1/p is not an unramified norm, p <= 100", bad.is_empty(), format!("failures: {bad:?}")));

    let mut parity_bad = Vec::new();
    let mut positive_bad = Vec::new();
    for n in [2u64, 3, 5, 7, 11] {
        let p = prime(n)?;
        for kind in [
            ExtensionKind::Unramified,
            ExtensionKind::TameRamified,
            ExtensionKind::WildQ2SqrtMinus1,
            ExtensionKind::WildQ2Sqrt3,
        ] {
            let Ok(e) = LocalQuadExtension::of_kind(kind, &p) else { continue };
            for i in 0..=20u32 {
                if i > 0 && decide_p_isomorphic(i, Some(&e))? != (i % 2 == 0) {
                    parity_bad.push(format!("{kind} p={n} i={i}"));
                }
                let m = MotiveDescriptor::standard(i, p.clone(), Some(e.clone()))?;
                if predict_definiteness(&m)? != hodgesig_core::quadform::Definiteness::Positive {
                    positive_bad.push(format!("{kind} p={n} i={i}"));
                }
            }
        }
    }
    out.push(check("parity: p-isomorphic iff i even", parity_bad.is_empty(), format!("failures: {parity_bad:?}")));
    out.push(check(
        "predicted definiteness is positive",
        positive_bad.is_empty(),
        format!("failures: {positive_bad:?}"),
    ));

    // (x^2 + 2)^4 over F_2.
    let w = WeilPolynomial::from_i64(&[16, 0, 32, 0, 24, 0, 8, 0, 1], 2)?;
    let rep = fourfold_signature_report_at_depth(&w, cfg.precision(), cfg.report.stable_depth)?;
    let got = (rep.rho1, rep.rho2_tate, rep.exotic_count, rep.predicted_signature);
    out.push(check("(x^2+2)^4 fourfold report", got == (16, 38, 2, (23, 15)), format!("{got:?}")));

    let q = |a: i64, b: i64| Rational::new(BigInt::from(a), BigInt::from(b));
    let ht = [
        honda_tate_invariant(&q(1, 4), &r(1), 4)?,
        honda_tate_invariant(&q(1, 2), &r(1), 1)?,
        honda_tate_invariant(&q(1, 2), &r(1), 2)?,
    ];
    let want = [r(0), q(1, 2), r(0)];
    out.push(check("local invariants", ht == want, format!("{}, {}, {}", ht[0], ht[1], ht[2])));

    let ell = |n: u64| -> CliResult<usize> {
        Ok(enumerate_records(&EnumeratePayload { q: n, g: 1, ..Default::default() }, cfg)?.len())
    };
    let (c2, c3) = (ell(2)?, ell(3)?);
    out.push(check("elliptic isogeny classes over F_2 and F_3", (c2, c3) == (5, 7), format!("{c2}, {c3}")));
    Ok(out)
}

pub fn selftest(cfg: &Config) -> CliResult<(Value, Status)> {
    let checks = selftest_checks(cfg)?;
    let pass = checks.iter().all(|c| c["pass"] == true);
    let status = if pass { Status::Ok } else { Status::Failed };
    Ok((json!({ "passed": pass, "checks": checks }), status))
}
