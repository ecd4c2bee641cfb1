//! Subcommand bodies. Each returns the full stdout text and an exit code;
//! nothing is printed from here.

use std::io::Read;
use std::path::Path;

use num_bigint::BigInt;
use rayon::prelude::*;
use rbar_core::{
    c_series_per_flat, c_series_total, cumulative_series, poincare_from_exponents, poincare_polynomial, rbar_series_par,
    series_from_exponents, try_factor_exponents, Arrangement, BivariateSeries, ExponentsProfile, Flat, FractionGenerator,
    Lattice, LinearForm, Oracle, OracleError, Rational,
};
use serde_json::{json, Value};

use crate::error::{CliError, EXIT_MISMATCH};
use crate::expr::parse_polynomial;
use crate::render::{self, big, grid_table, series_json, table, text_header, to_json_string};
use crate::spec_file::{family, parse_exponents_flag, parse_spec, ArrangementSpec, FAMILIES};
use crate::Source;

pub struct Output {
    pub body: String,
    pub exit: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, exit: 0 }
    }
}

fn read_source(source: &Source) -> Result<ArrangementSpec, CliError> {
    match (&source.file, &source.family) {
        (Some(path), _) => {
            let mut text = String::new();
            let io = |e| CliError::Io {
                path: path.display().to_string(),
                source: e,
            };
            if path.as_os_str() == "-" {
                std::io::stdin().read_to_string(&mut text).map_err(io)?;
            } else {
                text = std::fs::read_to_string(path).map_err(io)?;
            }
            parse_spec(&text)
        }
        (None, Some(name)) => family(name, source.ell.unwrap_or(0)),
        (None, None) => Err(CliError::NoSource),
    }
}

/// `--exponents` wins over exponents carried by the input.
fn exponents_for(spec: &ArrangementSpec, flag: Option<&str>) -> Result<Option<ExponentsProfile>, CliError> {
    match flag {
        Some(text) => parse_exponents_flag(text, spec.arrangement.ell()).map(Some),
        None => Ok(spec.exponents.clone()),
    }
}

fn describe_flat(flat: &Flat<Rational>) -> String {
    if flat.codim() == 0 {
        return "V".into();
    }
    let eqs: Vec<String> = flat
        .rref()
        .row_vectors()
        .into_iter()
        .map(|row| format!("{} = 0", LinearForm::new(row).expect("rref rows are nonzero")))
        .collect();
    eqs.join(", ")
}

fn forms_list(flat: &Flat<Rational>) -> String {
    let v: Vec<String> = flat.forms().iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn forms_json_indices(flat: &Flat<Rational>) -> Value {
    Value::Array(flat.forms().iter().map(|i| json!(i + 1)).collect())
}

fn emit(source: &Source, spec: &ArrangementSpec, text: String, doc: impl FnOnce() -> Value) -> String {
    if source.json {
        to_json_string(&doc())
    } else {
        format!("{}{text}", text_header(spec))
    }
}

pub fn lattice(source: &Source) -> Result<Output, CliError> {
    let spec = read_source(source)?;
    let lattice = Lattice::new(&spec.arrangement);
    let flats = lattice.flats();
    let mu = lattice.moebius();

    let mut rows = vec![vec!["flat".into(), "codim".into(), "dim".into(), "mu".into(), "forms".into(), "equations".into()]];
    for (i, f) in flats.iter().enumerate() {
        rows.push(vec![
            i.to_string(),
            f.codim().to_string(),
            f.dim().to_string(),
            mu[i].to_string(),
            forms_list(f),
            describe_flat(f),
        ]);
    }
    let text = format!("{} flats, rank {}\n{}", flats.len(), lattice.rank(), table(&rows));
    let body = emit(source, &spec, text, || {
        json!({
            "meta": render::meta("lattice", &spec, json!({"rank": lattice.rank()})),
            "flats": flats.iter().enumerate().map(|(i, f)| json!({
                "index": i,
                "codim": f.codim(),
                "dim": f.dim(),
                "moebius": mu[i],
                "forms": forms_json_indices(f),
                "equations": f.rref().row_vectors().iter()
                    .map(|r| Value::Array(r.iter().map(render::rational).collect()))
                    .collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    });
    Ok(Output::ok(body))
}

pub fn poincare(source: &Source) -> Result<Output, CliError> {
    let spec = read_source(source)?;
    let lattice = Lattice::new(&spec.arrangement);
    let poly = poincare_polynomial(&lattice);
    let factored = try_factor_exponents(&poly, spec.arrangement.ell());

    if source.json {
        let doc = json!({
            "meta": render::meta("poincare", &spec, json!({})),
            "polynomial": {
                "coefficients": poly.coeffs().iter().map(big).collect::<Vec<_>>(),
                "text": poly.to_string(),
                "exponents": factored.as_ref().map(|e| e.0.clone()),
            },
        });
        return Ok(Output::ok(to_json_string(&doc)));
    }
    // the polynomial itself is the first line so that scripts can `head -1`
    let mut body = format!("{poly}\n");
    match &factored {
        Some(e) => body.push_str(&format!("exponents: {}\n", join(&e.0))),
        None => body.push_str("exponents: none (does not factor into linear factors over the integers)\n"),
    }
    Ok(Output::ok(body))
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Cells where two series disagree, as `(p, q, left, right)`.
fn series_diff(a: &BivariateSeries, b: &BivariateSeries) -> Vec<(usize, usize, BigInt, BigInt)> {
    let mut out = Vec::new();
    for p in 0..=a.max_p() {
        for q in 0..=a.max_q() {
            if a[(p, q)] != b[(p, q)] {
                out.push((p, q, a[(p, q)].clone(), b[(p, q)].clone()));
            }
        }
    }
    out
}

pub fn series(
    source: &Source,
    max_p: usize,
    max_q: usize,
    cumulative: bool,
    exponents: Option<&str>,
) -> Result<Output, CliError> {
    let spec = read_source(source)?;
    let exps = exponents_for(&spec, exponents)?;
    let lattice = Lattice::new(&spec.arrangement);
    let rbar = rbar_series_par(&lattice, max_p, max_q);
    let cum = cumulative.then(|| cumulative_series(&lattice, max_p, max_q));
    let mismatches = exps
        .as_ref()
        .map(|e| series_diff(&rbar, &series_from_exponents(e, max_p, max_q)));
    let exit = match &mismatches {
        Some(m) if !m.is_empty() => EXIT_MISMATCH,
        _ => 0,
    };

    let mut text = grid_table("dim Rbar^p_q (rows p, columns q)", max_p, max_q, |p, q| &rbar[(p, q)]);
    if let Some(cum) = &cum {
        text.push('\n');
        text.push_str(&grid_table("dim R^p_q (rows p, columns q)", max_p, max_q, |p, q| &cum[(p, q)]));
    }
    if let (Some(e), Some(m)) = (&exps, &mismatches) {
        text.push('\n');
        if m.is_empty() {
            text.push_str(&format!("exponents {}: product formula agrees on every cell\n", join(&e.0)));
        } else {
            text.push_str(&format!("exponents {}: product formula disagrees on {} cells\n", join(&e.0), m.len()));
            text.push_str(&diff_table(m.iter().map(|(p, q, a, b)| ("exponents", *p, *q, a.to_string(), b.to_string()))));
        }
    }
    let body = emit(source, &spec, text, || {
        let mut doc = json!({
            "meta": render::meta("series", &spec, json!({"max_p": max_p, "max_q": max_q})),
            "grid": {"rbar": series_json(&rbar)},
        });
        if let Some(cum) = &cum {
            doc["grid"]["r"] = series_json(cum);
        }
        if let (Some(e), Some(m)) = (&exps, &mismatches) {
            doc["grid"]["exponents"] = json!({"exponents": e.0, "agrees": m.is_empty()});
        }
        doc
    });
    Ok(Output { body, exit })
}

pub fn cseries(source: &Source, max_q: usize) -> Result<Output, CliError> {
    let spec = read_source(source)?;
    let lattice = Lattice::new(&spec.arrangement);
    let rows = c_series_per_flat(&lattice, max_q);
    let total = c_series_total(&lattice, max_q);

    let mut t = vec![["flat", "codim", "mu"].iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    t[0].extend((0..=max_q).map(|q| format!("q={q}")));
    for r in &rows {
        let mut line = vec![r.flat.to_string(), r.codim.to_string(), r.moebius.to_string()];
        line.extend(r.coeffs.iter().map(ToString::to_string));
        t.push(line);
    }
    let mut line = vec!["total".to_string(), String::new(), String::new()];
    line.extend(total.iter().map(ToString::to_string));
    t.push(line);
    let text = format!("dim C_q per flat\n{}", table(&t));
    let body = emit(source, &spec, text, || {
        json!({
            "meta": render::meta("cseries", &spec, json!({"max_q": max_q})),
            "grid": {
                "flats": rows.iter().map(|r| json!({
                    "flat": r.flat,
                    "codim": r.codim,
                    "moebius": r.moebius,
                    "coefficients": r.coeffs.iter().map(big).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "total": total.iter().map(big).collect::<Vec<_>>(),
            },
        })
    });
    Ok(Output::ok(body))
}

fn parse_cell(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Malformed(format!("--cell expects \"p,q\", got {text:?}"));
    let (p, q) = text.split_once(',').ok_or_else(bad)?;
    Ok((p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?))
}

fn fraction_json(f: &FractionGenerator, arr: &Arrangement) -> Value {
    json!({
        "numerator": f.numerator.to_string(),
        "denominator": f.denominator.indices().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "text": f.display(arr).to_string(),
    })
}

pub fn dims(source: &Source, max_p: usize, max_q: usize, cell: Option<&str>) -> Result<Output, CliError> {
    let spec = read_source(source)?;
    let cell = cell.map(parse_cell).transpose()?;
    let oracle = Oracle::new(&spec.arrangement);
    let table_ = oracle.dim_table(max_p, max_q);

    let mut text = grid_table("dim R^p_q by rank", max_p, max_q, |p, q| table_.dim_r[p][q]);
    text.push('\n');
    text.push_str(&grid_table("dim Rbar^p_q by rank", max_p, max_q, |p, q| table_.dim_rbar[p][q]));

    let detail = cell.map(|(p, q)| {
        let rows = oracle.dims_by_flat(p, q);
        let basis = oracle.basis_rbar(p, q);
        (p, q, rows, basis)
    });
    if let Some((p, q, rows, basis)) = &detail {
        let flats = oracle.lattice().flats();
        let mut t = vec![["flat", "codim", "dim S^p", "dim C_q", "product"].iter().map(|s| s.to_string()).collect::<Vec<_>>()];
        let mut sum = BigInt::from(0);
        for r in rows {
            sum += &r.contribution;
            t.push(vec![
                r.flat.to_string(),
                flats[r.flat].codim().to_string(),
                r.dim_s.to_string(),
                r.dim_c.to_string(),
                r.contribution.to_string(),
            ]);
        }
        t.push(vec!["total".into(), String::new(), String::new(), String::new(), sum.to_string()]);
        text.push_str(&format!("\ncell (p, q) = ({p}, {q}) split over flats\n{}", table(&t)));
        text.push_str(&format!("\nbasis of Rbar^{p}_{q} ({} elements)\n", basis.len()));
        for (i, b) in basis.iter().enumerate() {
            text.push_str(&format!("{:>4}  {}\n", i + 1, b.display(&spec.arrangement)));
        }
    }
    let body = emit(source, &spec, text, || {
        let to_json = |g: &Vec<Vec<usize>>| json!(g.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
        let mut doc = json!({
            "meta": render::meta("dims", &spec, json!({"max_p": max_p, "max_q": max_q})),
            "grid": {"r": to_json(&table_.dim_r), "rbar": to_json(&table_.dim_rbar)},
        });
        if let Some((p, q, rows, basis)) = &detail {
            doc["grid"]["cell"] = json!({
                "p": p,
                "q": q,
                "flats": rows.iter().map(|r| json!({
                    "flat": r.flat,
                    "dim_s": big(&r.dim_s),
                    "dim_c": r.dim_c.to_string(),
                    "product": big(&r.contribution),
                })).collect::<Vec<_>>(),
                "basis": basis.iter().map(|b| fraction_json(b, &spec.arrangement)).collect::<Vec<_>>(),
            });
        }
        doc
    });
    Ok(Output::ok(body))
}

fn diff_table<'a>(rows: impl Iterator<Item = (&'a str, usize, usize, String, String)>) -> String {
    let mut t = vec![["check", "p", "q", "expected", "found"].iter().map(|s| s.to_string()).collect::<Vec<_>>()];
    for (check, p, q, a, b) in rows {
        t.push(vec![check.to_string(), p.to_string(), q.to_string(), a, b]);
    }
    table(&t)
}

struct Mismatch {
    check: &'static str,
    p: usize,
    q: usize,
    expected: String,
    found: String,
}

pub fn verify(source: &Source, max_p: usize, max_q: usize, exponents: Option<&str>) -> Result<Output, CliError> {
    let spec = read_source(source)?;
    let exps = exponents_for(&spec, exponents)?;
    let oracle = Oracle::new(&spec.arrangement);
    let lattice = oracle.lattice();
    let formula = rbar_series_par(lattice, max_p, max_q);
    let dims = oracle.dim_table(max_p, max_q);

    let mut mismatches = Vec::new();
    let mut summary = Vec::new();

    let mut cells = 0;
    for p in 0..=max_p {
        for q in 0..=max_q {
            cells += 1;
            let found = BigInt::from(dims.dim_rbar[p][q]);
            if formula[(p, q)] != found {
                mismatches.push(Mismatch {
                    check: "rbar",
                    p,
                    q,
                    expected: formula[(p, q)].to_string(),
                    found: found.to_string(),
                });
            }
        }
    }
    summary.push(("rbar: closed form vs rank", cells));

    // per-flat dim C_q; `p` is reported as the flat index
    let c_rows = c_series_per_flat(lattice, max_q);
    let work: Vec<(usize, usize)> = (0..lattice.len()).flat_map(|f| (0..=max_q).map(move |q| (f, q))).collect();
    let ranks: Vec<usize> = work.par_iter().map(|&(f, q)| oracle.dim_c_flat(q, f)).collect();
    for (&(f, q), rank) in work.iter().zip(&ranks) {
        let expected = &c_rows[f].coeffs[q];
        if *expected != BigInt::from(*rank) {
            mismatches.push(Mismatch {
                check: "c-flat",
                p: f,
                q,
                expected: expected.to_string(),
                found: rank.to_string(),
            });
        }
    }
    summary.push(("dim C_q per flat: closed form vs rank", work.len()));

    if let Some(e) = &exps {
        let product = series_from_exponents(e, max_p, max_q);
        for (p, q, a, b) in series_diff(&product, &formula) {
            mismatches.push(Mismatch {
                check: "exponents",
                p,
                q,
                expected: a.to_string(),
                found: b.to_string(),
            });
        }
        let poin = poincare_polynomial(lattice);
        let from_e = poincare_from_exponents(e);
        if poin != from_e {
            mismatches.push(Mismatch {
                check: "poincare",
                p: 0,
                q: 0,
                expected: from_e.to_string(),
                found: poin.to_string(),
            });
        }
        summary.push(("exponents: product formula vs closed form", cells + 1));
    }

    let pass = mismatches.is_empty();
    let exit = if pass { 0 } else { EXIT_MISMATCH };
    let mut text = String::new();
    let mut t = vec![vec!["check".to_string(), "compared".to_string()]];
    t.extend(summary.iter().map(|(name, n)| vec![name.to_string(), n.to_string()]));
    text.push_str(&table(&t));
    if !pass {
        text.push_str(&format!("\n{} mismatches (for c-flat, p is the flat index)\n", mismatches.len()));
        text.push_str(&diff_table(
            mismatches.iter().map(|m| (m.check, m.p, m.q, m.expected.clone(), m.found.clone())),
        ));
    }
    text.push_str(&format!("verdict: {}\n", if pass { "pass" } else { "fail" }));

    let body = emit(source, &spec, text, || {
        json!({
            "meta": render::meta("verify", &spec, json!({
                "max_p": max_p,
                "max_q": max_q,
                "exponents": exps.as_ref().map(|e| e.0.clone()),
            })),
            "report": {
                "verdict": if pass { "pass" } else { "fail" },
                "checks": summary.iter().map(|(n, c)| json!({"check": n, "compared": c})).collect::<Vec<_>>(),
                "mismatches": mismatches.iter().map(|m| json!({
                    "check": m.check, "p": m.p, "q": m.q, "expected": m.expected, "found": m.found,
                })).collect::<Vec<_>>(),
            },
        })
    });
    Ok(Output { body, exit })
}

fn read_basis_file(path: &Path, oracle: &Oracle<'_>) -> Result<Vec<FractionGenerator>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| CliError::Malformed(format!("basis file: {e}")))?;
    let items = doc
        .as_array()
        .ok_or_else(|| CliError::Malformed("basis file must be a JSON array".into()))?;
    let ell = oracle.arrangement().ell();
    items
        .iter()
        .enumerate()
        .map(|(i, item)| {
            let field = |key: &str| {
                item.get(key).and_then(Value::as_str).ok_or_else(|| {
                    CliError::Malformed(format!("basis entry {}: missing string {key:?}", i + 1))
                })
            };
            let num = parse_polynomial(field("numerator")?, ell)?;
            let den = parse_polynomial(field("denominator")?, ell)?;
            Ok(oracle.fraction(num, &den)?)
        })
        .collect()
}

pub fn decompose(
    source: &Source,
    numerator: &str,
    denominator: &str,
    p: Option<usize>,
    q: Option<usize>,
    basis_file: Option<&Path>,
) -> Result<Output, CliError> {
    let spec = read_source(source)?;
    let ell = spec.arrangement.ell();
    let oracle = Oracle::new(&spec.arrangement);
    let phi = oracle.fraction(parse_polynomial(numerator, ell)?, &parse_polynomial(denominator, ell)?)?;
    let p = p.unwrap_or_else(|| phi.numerator_degree());
    let q = q.unwrap_or_else(|| phi.denominator.len());
    let (basis, user_basis) = match basis_file {
        Some(path) => (read_basis_file(path, &oracle)?, true),
        None => (oracle.basis_rbar(p, q), false),
    };
    let coords = match oracle.decompose_class(&phi, p, q, &basis) {
        Err(OracleError::NotInCell { p, q }) if user_basis => return Err(CliError::NotInSpan { p, q }),
        other => other?,
    };

    let mut t = vec![vec!["#".to_string(), "coefficient".to_string(), "basis element".to_string()]];
    for (i, (c, b)) in coords.iter().zip(&basis).enumerate() {
        t.push(vec![(i + 1).to_string(), c.to_string(), b.display(&spec.arrangement).to_string()]);
    }
    let text = format!(
        "phi = {}\nclass in Rbar^{p}_{q} (modulo R^{}_{q} + R^{p}_{}):\n{}",
        phi.display(&spec.arrangement),
        p as i64 - 1,
        q as i64 - 1,
        table(&t)
    );
    let body = emit(source, &spec, text, || {
        json!({
            "meta": render::meta("decompose", &spec, json!({"p": p, "q": q})),
            "report": {
                "phi": fraction_json(&phi, &spec.arrangement),
                "coordinates": coords.iter().map(render::rational).collect::<Vec<_>>(),
                "basis": basis.iter().map(|b| fraction_json(b, &spec.arrangement)).collect::<Vec<_>>(),
            },
        })
    });
    Ok(Output::ok(body))
}

pub fn family_list(json: bool) -> Output {
    if json {
        let doc = json!({
            "meta": {"command": "family-list"},
            "families": FAMILIES.iter().map(|(n, d)| json!({"name": n, "description": d})).collect::<Vec<_>>(),
        });
        return Output::ok(to_json_string(&doc));
    }
    let rows: Vec<Vec<String>> = FAMILIES.iter().map(|(n, d)| vec![n.to_string(), d.to_string()]).collect();
    let mut body = String::new();
    for r in rows {
        body.push_str(&format!("{:<8}  {}\n", r[0], r[1]));
    }
    Output::ok(body)
}
