//! Check reports shared by every verification routine and the command line.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub caveats: Vec<String>,
}

/// A computed value worth printing alongside the checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fact {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckRecord>,
    pub facts: Vec<Fact>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), checks: Vec::new(), facts: Vec::new() }
    }

    pub fn push(&mut self, name: impl Into<String>, status: Status, witnesses: Vec<String>) -> &mut CheckRecord {
        self.checks.push(CheckRecord { name: name.into(), status, witnesses, caveats: Vec::new() });
        self.checks.last_mut().expect("just pushed")
    }

    pub fn pass(&mut self, name: impl Into<String>) -> &mut CheckRecord {
        self.push(name, Status::Pass, Vec::new())
    }

    pub fn vacuous(&mut self, name: impl Into<String>) -> &mut CheckRecord {
        self.push(name, Status::Vacuous, Vec::new())
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) -> &mut CheckRecord {
        self.push(name, Status::Fail, vec![witness.into()])
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> &mut CheckRecord {
        if ok {
            self.pass(name)
        } else {
            self.fail(name, witness())
        }
    }

    /// Pass when `failures` is empty and `checked > 0`, vacuous when nothing was checked.
    pub fn tally(&mut self, name: impl Into<String>, checked: usize, failures: Vec<String>) -> &mut CheckRecord {
        if !failures.is_empty() {
            self.push(name, Status::Fail, failures)
        } else if checked == 0 {
            self.vacuous(name)
        } else {
            let rec = self.pass(name);
            rec.witnesses.push(format!("{} instances", checked));
            rec
        }
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.push(Fact { key: key.into(), value: value.to_string() });
    }

    pub fn fact_value(&self, key: &str) -> Option<&str> {
        self.facts.iter().find(|f| f.key == key).map(|f| f.value.as_str())
    }

    /// Appends another report's checks and facts, prefixing names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}/{}", prefix, c.name);
            self.checks.push(c);
        }
        for mut f in other.facts {
            f.key = format!("{}/{}", prefix, f.key);
            self.facts.push(f);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.status == Status::Fail)
    }

    pub fn check_named(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_and_absorb() {
        let mut r = Report::new("x");
        r.tally("empty", 0, vec![]);
        r.tally("ok", 3, vec![]);
        assert!(r.passed());
        let mut s = Report::new("y");
        s.fail("bad", "w");
        s.fact("k", 1);
        r.absorb("y", s);
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().name, "y/bad");
        assert_eq!(r.fact_value("y/k"), Some("1"));
        assert_eq!(r.check_named("empty").unwrap().status, Status::Vacuous);
    }
}
