use std::fmt::Display;

use num_bigint::BigInt;
use rbar_core::{Arrangement, BivariateSeries, Rational};
use serde_json::{json, Value};

use crate::spec_file::ArrangementSpec;

fn is_numeric(cell: &str) -> bool {
    cell.chars().all(|c| c.is_ascii_digit() || c == '-' || c == '/')
}

/// Aligned text table; the first row is the header. Numeric columns are
/// right-aligned, the rest left-aligned.
pub fn table(rows: &[Vec<String>]) -> String {
    let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..ncols)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    let numeric: Vec<bool> = (0..ncols)
        .map(|j| rows.iter().skip(1).filter_map(|r| r.get(j)).all(|c| is_numeric(c)))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if numeric[j] {
                    format!("{:>w$}", c, w = widths[j])
                } else {
                    format!("{:<w$}", c, w = widths[j])
                }
            })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Grid with `p` down the rows and `q` across the columns.
pub fn grid_table<T: Display>(title: &str, max_p: usize, max_q: usize, cell: impl Fn(usize, usize) -> T) -> String {
    let mut rows = Vec::with_capacity(max_p + 2);
    let mut header = vec![r"p\q".to_string()];
    header.extend((0..=max_q).map(|q| q.to_string()));
    rows.push(header);
    for p in 0..=max_p {
        let mut row = vec![p.to_string()];
        row.extend((0..=max_q).map(|q| cell(p, q).to_string()));
        rows.push(row);
    }
    format!("{title}\n{}", table(&rows))
}

pub fn series_json(s: &BivariateSeries) -> Value {
    Value::Array(
        s.grid()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(|v| big(&v)).collect()))
            .collect(),
    )
}

/// Arbitrary-precision integers are always emitted as strings.
pub fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

pub fn rational(v: &Rational) -> Value {
    Value::String(v.to_string())
}

pub fn forms_json(a: &Arrangement) -> Value {
    Value::Array(
        a.forms()
            .iter()
            .map(|f| Value::Array(f.coeffs().iter().map(rational).collect()))
            .collect(),
    )
}

pub fn meta(command: &str, spec: &ArrangementSpec, extra: Value) -> Value {
    let mut m = json!({
        "command": command,
        "name": spec.name,
        "ell": spec.arrangement.ell(),
        "forms": forms_json(&spec.arrangement),
    });
    if let (Value::Object(m), Value::Object(extra)) = (&mut m, extra) {
        m.extend(extra);
    }
    m
}

pub fn text_header(spec: &ArrangementSpec) -> String {
    let name = spec.name.as_deref().unwrap_or("arrangement");
    let forms: Vec<String> = spec.arrangement.forms().iter().map(|f| f.to_string()).collect();
    format!("# {name}: ell = {}, {} forms [{}]\n", spec.arrangement.ell(), forms.len(), forms.join(", "))
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligned_table() {
        let t = table(&[vec!["a".into(), "bb".into()], vec!["ccc".into(), "7".into()]]);
        assert_eq!(t, "a    bb\nccc   7\n");
    }

    #[test]
    fn grid_layout() {
        let g = grid_table("g", 1, 1, |p, q| p * 10 + q);
        assert_eq!(g, "g\np\\q   0   1\n  0   0   1\n  1  10  11\n");
    }
}
