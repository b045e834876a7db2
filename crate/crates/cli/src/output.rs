//! Text and machine renderings of a [`Report`].

use stabcat::{Report, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// Exit status for a finished report: 0 when nothing failed, 1 otherwise.
pub fn exit_code(r: &Report) -> i32 {
    if r.passed() {
        0
    } else {
        1
    }
}

pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Machine => {
            let mut s = serde_json::to_string_pretty(r).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(r),
    }
}

fn count(r: &Report, s: Status) -> usize {
    r.checks.iter().filter(|c| c.status == s).count()
}

fn text(r: &Report) -> String {
    let mut out = format!("{}\n", r.command);
    if !r.facts.is_empty() {
        let width = r.facts.iter().map(|f| f.key.chars().count()).max().unwrap_or(0);
        for f in &r.facts {
            out.push_str(&format!("  {:<width$}  {}\n", f.key, f.value));
        }
    }
    for c in &r.checks {
        out.push_str(&format!("  {:<7} {}\n", c.status.as_str().to_uppercase(), c.name));
        for w in &c.witnesses {
            out.push_str(&format!("          {w}\n"));
        }
        for cv in &c.caveats {
            out.push_str(&format!("          caveat: {cv}\n"));
        }
    }
    if !r.checks.is_empty() {
        out.push_str(&format!("{} pass, {} fail, {} vacuous\n", count(r, Status::Pass), count(r, Status::Fail), count(r, Status::Vacuous)));
    }
    match r.first_failure() {
        Some(f) => out.push_str(&format!("FAIL {}: {}\n", f.name, f.witnesses.first().map(String::as_str).unwrap_or("no witness"))),
        None => out.push_str("OK\n"),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn final_line_summarizes_the_first_failure() {
        let mut r = Report::new("demo");
        r.pass("a");
        assert_eq!(exit_code(&r), 0);
        assert!(emit_report(&r, Format::Text).ends_with("OK\n"));
        r.fail("b", "S -> S");
        r.fail("c", "other");
        assert_eq!(exit_code(&r), 1);
        let t = emit_report(&r, Format::Text);
        assert_eq!(t.lines().last(), Some("FAIL b: S -> S"));
    }

    #[test]
    fn machine_output_round_trips() {
        let mut r = Report::new("demo");
        r.fail("b", "w");
        r.fact("k", 2);
        let s = emit_report(&r, Format::Machine);
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
