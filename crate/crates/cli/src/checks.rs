use std::fmt::Write as _;

/// One row of a pass/fail table.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub expected: String,
    pub computed: String,
    pub tolerance: String,
    pub pass: bool,
}

impl Check {
    pub fn new(
        name: &'static str,
        expected: impl Into<String>,
        computed: impl Into<String>,
        tolerance: impl Into<String>,
        pass: bool,
    ) -> Self {
        Self {
            name,
            expected: expected.into(),
            computed: computed.into(),
            tolerance: tolerance.into(),
            pass,
        }
    }

    /// A row that records an error from the library instead of a value.
    pub fn failed(name: &'static str, expected: impl Into<String>, err: impl std::fmt::Display) -> Self {
        Self::new(name, expected, format!("error: {err}"), "-", false)
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

pub fn render_table(first_column: &str, checks: &[Check]) -> String {
    let headers = [first_column, "paper_value", "computed_value", "tolerance", "status"];
    let rows: Vec<[&str; 5]> = checks
        .iter()
        .map(|c| {
            [
                c.name,
                c.expected.as_str(),
                c.computed.as_str(),
                c.tolerance.as_str(),
                if c.pass { "PASS" } else { "FAIL" },
            ]
        })
        .collect();
    let mut widths = headers.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[&str; 5]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let _ = write!(s, "{cell:<w$}  ");
            }
        }
        out.push_str(&s);
        out.push('\n');
    };
    line(&headers);
    for row in &rows {
        line(row);
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let _ = writeln!(out, "{passed}/{} checks passed", checks.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment_and_summary() {
        let rows = [
            Check::new("a", "1", "1.0", "0", true),
            Check::new("longer_name", "2", "3", "0.5", false),
        ];
        let t = render_table("check_name", &rows);
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("check_name   paper_value"));
        assert!(lines[1].ends_with("PASS"));
        assert!(lines[2].starts_with("longer_name  2"));
        assert!(lines[2].ends_with("FAIL"));
        assert_eq!(lines[3], "1/2 checks passed");
        assert!(!all_pass(&rows));
    }
}
