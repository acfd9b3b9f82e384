use std::fmt;

/// One exact comparison made during verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub stage: u64,
    pub expected: String,
    pub got: String,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        stage: u64,
        expected: impl ToString,
        got: impl ToString,
    ) -> Self {
        Check {
            name: name.into(),
            stage,
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.got
    }
}

impl fmt::Display for Check {
    /// `PASS|FAIL <check-name> stage=<n> expected=<v> got=<v>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} stage={} expected={} got={}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.stage,
            self.expected,
            self.got
        )
    }
}

/// Ordered list of checks, printed one per line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// Prefixes every check name, e.g. to tag a trial.
    pub fn prefixed(mut self, prefix: &str) -> Report {
        for c in &mut self.checks {
            c.name = format!("{prefix}.{}", c.name);
        }
        self
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let ok = Check::new("corner-order", 8, 6, 6);
        assert_eq!(ok.to_string(), "PASS corner-order stage=8 expected=6 got=6");
        let bad = Check::new("relative-rank", 4, "3/4", "1/2");
        assert_eq!(
            bad.to_string(),
            "FAIL relative-rank stage=4 expected=3/4 got=1/2"
        );
        let report = Report {
            checks: vec![ok, bad],
        }
        .prefixed("t0");
        assert!(!report.all_passed());
        assert_eq!(report.failures().count(), 1);
        assert_eq!(
            report.to_string().lines().next(),
            Some("PASS t0.corner-order stage=8 expected=6 got=6")
        );
    }
}
