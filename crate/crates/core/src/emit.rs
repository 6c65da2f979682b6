//! Rendering of command payloads as JSON, Graphviz DOT, or fixed-column
//! tables. Output depends only on the payload, so identical inputs give
//! byte-identical text.

use std::fmt::Write;

use serde::Serialize;

use crate::spectrum::{mask_points, FiniteTopology};
use crate::stone::{Compactification, StonePoint};
use crate::verify::Report;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Table,
}

/// Something a command can print.
pub trait Payload: Serialize {
    fn table(&self) -> String;

    /// Graph view, if the payload has one.
    fn dot(&self) -> Option<String> {
        None
    }
}

pub fn emit<P: Payload + ?Sized>(format: Format, payload: &P) -> Result<String> {
    match format {
        Format::Json => json(payload),
        Format::Table => Ok(payload.table()),
        Format::Dot => payload.dot().ok_or_else(|| {
            Error::invalid("this output has no graph form; use --format json or table")
        }),
    }
}

pub fn json<T: Serialize + ?Sized>(payload: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(payload).map_err(|e| Error::invalid(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Left-aligned columns separated by two spaces, with a rule under the
/// header.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = line(headers.to_vec());
    out.push('\n');
    out.push_str(&line(
        widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    ));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn list(points: &[usize]) -> String {
    let items: Vec<String> = points.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// Opens as sorted point lists, one per line.
pub fn topology_lines(t: &FiniteTopology) -> String {
    t.to_lists().iter().map(|o| list(o) + "\n").collect()
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram of the specialization order: an edge `y -> x` when `x`
/// is a closed point below `y` with nothing strictly between.
pub fn topology_dot(name: &str, t: &FiniteTopology, labels: &[String]) -> String {
    let n = t.points();
    let below = |x: usize, y: usize| x != y && t.in_closure_of(x, y) && !t.in_closure_of(y, x);
    let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", escape(name));
    for x in 0..n {
        let label = labels.get(x).cloned().unwrap_or_else(|| x.to_string());
        let _ = writeln!(out, "  p{x} [label=\"{}\"];", escape(&label));
    }
    for y in 0..n {
        for x in 0..n {
            if below(x, y) && !(0..n).any(|z| below(x, z) && below(z, y)) {
                let _ = writeln!(out, "  p{x} -> p{y};");
            }
        }
        // points with the same closure are topologically indistinguishable
        for x in y + 1..n {
            if t.in_closure_of(x, y) && t.in_closure_of(y, x) {
                let _ = writeln!(out, "  p{x} -> p{y} [dir=both, style=dashed];");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// The naturals below `window`, the points at infinity (double circles),
/// and an edge from each natural to the point at infinity of its atom.
pub fn compactification_dot(c: &Compactification, window: usize) -> String {
    let mut out = String::from("graph compactification {\n");
    let atoms = c.infinity_atoms();
    for (i, a) in atoms.iter().enumerate() {
        let _ = writeln!(
            out,
            "  inf{i} [label=\"∞ {}\", shape=doublecircle];",
            escape(&a.to_string())
        );
    }
    for x in 0..window {
        let _ = writeln!(out, "  n{x} [label=\"{x}\", shape=circle];");
        if let Some(i) = atoms.iter().position(|a| a.contains(x)) {
            let _ = writeln!(out, "  n{x} -- inf{i} [style=dotted];");
        }
    }
    out.push_str("}\n");
    out
}

pub fn point_label(p: &StonePoint) -> String {
    match p {
        StonePoint::Principal(x) => format!("m_{x}"),
        StonePoint::Infinity(c) => format!("∞ {c}"),
        StonePoint::Explicit(f) => f.to_string(),
    }
}

pub fn mask_list(mask: u64) -> String {
    list(&mask_points(mask))
}

impl Payload for Report {
    fn table(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .records
            .iter()
            .map(|r| {
                vec![
                    if r.pass { "PASS" } else { "FAIL" }.to_string(),
                    r.suite.clone(),
                    r.property.clone(),
                    r.instance.clone(),
                ]
            })
            .collect();
        let mut out = table(&["result", "suite", "property", "instance"], &rows);
        for r in self.failures() {
            let _ = writeln!(out, "\nFAIL {} / {}: {}", r.suite, r.instance, r.witness);
            if let Some(input) = &r.reproduce {
                let _ = writeln!(out, "reproduce with: {input}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "\n{} suites, {} checks, {} passed, {} failed",
            s.suites, s.checks, s.passed, s.failed
        );
        out
    }

    fn dot(&self) -> Option<String> {
        let mut suites: Vec<(&str, usize, usize)> = Vec::new();
        for r in &self.records {
            match suites.last_mut() {
                Some(last) if last.0 == r.suite => {
                    last.1 += usize::from(r.pass);
                    last.2 += usize::from(!r.pass);
                }
                _ => suites.push((&r.suite, usize::from(r.pass), usize::from(!r.pass))),
            }
        }
        let mut out = String::from("digraph report {\n  report [shape=box];\n");
        for (i, (id, pass, fail)) in suites.iter().enumerate() {
            let color = if *fail == 0 { "darkgreen" } else { "red" };
            let _ = writeln!(
                out,
                "  s{i} [label=\"{id}\\n{pass} pass, {fail} fail\", color={color}];"
            );
            let _ = writeln!(out, "  report -> s{i};");
        }
        out.push_str("}\n");
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_columns() {
        let t = table(
            &["a", "long header"],
            &[
                vec!["xyz".into(), "1".into()],
                vec!["q".into(), "22".into()],
            ],
        );
        assert_eq!(t, "a    long header\n---  -----------\nxyz  1\nq    22\n");
    }

    #[test]
    fn sierpinski_dot_has_one_edge() {
        let s = FiniteTopology::from_opens(2, [0b00, 0b10, 0b11]).unwrap();
        let d = topology_dot("s", &s, &[]);
        assert!(d.contains("p0 -> p1;"));
        assert_eq!(d.matches("->").count(), 1);
    }

    #[test]
    fn infinity_nodes_are_marked() {
        let c = crate::stone::compactify(vec![crate::boolring::UpSet::evens()]).unwrap();
        let d = compactification_dot(&c, 4);
        assert_eq!(d.matches("doublecircle").count(), 2);
        assert_eq!(d.matches(" -- ").count(), 4);
    }
}
