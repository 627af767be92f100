use serde_json::json;

use crate::args::Output;
use crate::commands::Report;

pub fn render(report: &Report, format: Output) -> String {
    match format {
        Output::Json => {
            let doc = json!({
                "tool": "qsp",
                "version": env!("CARGO_PKG_VERSION"),
                "command": report.command,
                "params": report.params,
                "results": report.results,
                "pass": report.pass,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("values serialize");
            s.push('\n');
            s
        }
        Output::Tsv => {
            let mut s = report.header.join("\t");
            s.push('\n');
            for row in &report.rows {
                s.push_str(&row.join("\t"));
                s.push('\n');
            }
            s
        }
        Output::Text => match &report.text {
            Some(lines) => lines.iter().map(|l| format!("{l}\n")).collect(),
            None => aligned(report),
        },
    }
}

fn aligned(report: &Report) -> String {
    let mut widths: Vec<usize> = report.header.iter().map(|h| h.chars().count()).collect();
    for row in &report.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut s = line(report.header.clone());
    for row in &report.rows {
        s.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    s.push_str(&format!("pass: {}\n", report.pass));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report() -> Report {
        Report {
            command: "dims",
            params: json!({"n": 3}),
            results: json!([]),
            pass: true,
            header: vec!["kind", "dim"],
            rows: vec![vec!["∧+".into(), "1".into()], vec!["S-".into(), "10".into()]],
            text: None,
        }
    }

    #[test]
    fn tsv_and_text_layouts() {
        let r = report();
        assert_eq!(render(&r, Output::Tsv), "kind\tdim\n∧+\t1\nS-\t10\n");
        assert_eq!(render(&r, Output::Text), "kind  dim\n∧+    1\nS-    10\npass: true\n");
    }

    #[test]
    fn json_envelope_order() {
        let s = render(&report(), Output::Json);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["tool", "version", "command", "params", "results", "pass"]);
        assert!(s.ends_with("}\n"));
    }
}
