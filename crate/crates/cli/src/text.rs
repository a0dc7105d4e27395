//! Plain-text renderings. Every number in the JSON form appears here too,
//! laid out as whitespace-separated grids that are easy to read back.

use std::collections::BTreeMap;
use std::fmt::Write;

use blowup_core::report::{ClassifyReport, InputEcho, TableRow};

fn set(nodes: &[usize]) -> String {
    let inner: Vec<String> = nodes.iter().map(usize::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn keyed(map: &BTreeMap<usize, i64>) -> String {
    let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    parts.join(",")
}

/// Columns padded to their widest cell; the first column is left-aligned.
fn grid(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (j, cell) in row.iter().enumerate() {
            if j == 0 {
                let _ = write!(line, "{cell:<w$}", w = widths[0]);
            } else {
                let _ = write!(line, "  {cell:>w$}", w = widths[j]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn header(input: &InputEcho) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "type:        {}{}", input.family, input.rank);
    let _ = writeln!(out, "parabolic:   {}", set(&input.parabolic));
    let _ = writeln!(out, "complement:  {}", set(&input.complement));
    let _ = writeln!(out, "dim:         {}", input.dim);
    if let Some(c) = input.codim {
        let _ = writeln!(out, "codim:       {c}");
    }
    out
}

fn labels(prefix: &str, nodes: &[usize]) -> Vec<String> {
    nodes.iter().map(|a| format!("{prefix}{a}")).collect()
}

fn cells(values: impl IntoIterator<Item = i64>) -> Vec<String> {
    values.into_iter().map(|v| v.to_string()).collect()
}

pub fn classify(r: &ClassifyReport) -> String {
    let nodes = &r.input.complement;
    let mut out = header(&r.input);
    out.push('\n');

    let mut rows = vec![vec!["node".to_string(), "beta".into(), "margin".into()]];
    for &a in nodes {
        rows.push(cells([a as i64, r.betas[&a], r.margins[&a]]));
    }
    out.push_str(&grid(&rows));
    out.push('\n');

    let _ = writeln!(out, "verdict:            {}", r.verdict);
    let _ = writeln!(out, "anticanonical_big:  {}", r.anticanonical_big.as_str());
    out.push('\n');

    let b1 = &r.anticanonical.basis1;
    let mut head = vec!["-K".to_string()];
    head.extend(labels("Bl*D_", nodes));
    head.push("E_Z".into());
    let mut row = vec!["basis1".to_string()];
    row.extend(cells(b1.pullback.values().copied().chain([b1.exceptional])));
    out.push_str(&grid(&[head, row]));

    let b2 = &r.anticanonical.basis2;
    let mut head = vec!["-K".to_string()];
    head.extend(labels("Bl*D_", nodes));
    head.push("H-E_Z".into());
    let mut row = vec!["basis2".to_string()];
    row.extend(cells(b2.nef.values().copied().chain([b2.h_minus_e])));
    out.push_str(&grid(&[head, row]));
    out.push('\n');

    let _ = writeln!(out, "gg_equals_nef:      {}", r.facts.gg_equals_nef);
    let _ = writeln!(out, "h_minus_e_big:      {}", r.facts.h_minus_e_big);
    out
}

pub fn cones(r: &ClassifyReport) -> String {
    let cones = r.cones.as_ref().expect("cones requested");
    let nodes = &r.input.complement;
    let mut out = header(&r.input);
    out.push('\n');

    let nef_names: Vec<String> = labels("Bl*D_", nodes)
        .into_iter()
        .chain(["H-E_Z".into()])
        .collect();
    let mori_names: Vec<String> = labels("C~_", nodes)
        .into_iter()
        .chain(["e".into()])
        .collect();

    let mut head = vec!["nef".to_string()];
    head.extend(labels("Bl*D_", nodes));
    head.push("E_Z".into());
    let mut rows = vec![head];
    for (name, g) in nef_names.iter().zip(&cones.nef_generators) {
        let mut row = vec![name.clone()];
        row.extend(cells(g.pullback.values().copied().chain([g.exceptional])));
        rows.push(row);
    }
    out.push_str(&grid(&rows));
    out.push('\n');

    let mut head = vec!["mori".to_string()];
    head.extend(labels("C~_", nodes));
    head.push("e".into());
    let mut rows = vec![head];
    for (name, g) in mori_names.iter().zip(&cones.mori_generators) {
        let mut row = vec![name.clone()];
        row.extend(cells(g.tilde.values().copied().chain([g.e])));
        rows.push(row);
    }
    out.push_str(&grid(&rows));
    out.push('\n');

    let mut head = vec!["pairing".to_string()];
    head.extend(mori_names.iter().cloned());
    let mut rows = vec![head];
    for (name, line) in nef_names.iter().zip(&cones.intersection_matrix) {
        let mut row = vec![name.clone()];
        row.extend(cells(line.iter().copied()));
        rows.push(row);
    }
    out.push_str(&grid(&rows));
    out
}

pub fn table(rows: &[TableRow]) -> String {
    let mut cellrows = vec![vec![
        "type".to_string(),
        "S_P".into(),
        "complement".into(),
        "dim".into(),
        "betas".into(),
        "fano_max_c".into(),
        "weak_fano_c".into(),
    ]];
    for row in rows {
        cellrows.push(vec![
            format!("{}{}", row.input.family, row.input.rank),
            set(&row.input.parabolic),
            set(&row.input.complement),
            row.input.dim.to_string(),
            keyed(&row.betas),
            row.fano_max_codim.to_string(),
            row.weak_fano_boundary.to_string(),
        ]);
    }
    let mut out = grid(&cellrows);
    let _ = writeln!(
        out,
        "\nFano for 2 <= c <= fano_max_c; weak-Fano but not Fano at c = weak_fano_c; rows: {}",
        rows.len()
    );
    out
}
