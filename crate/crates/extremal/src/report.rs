//! Pass/fail check lists returned by verification routines.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

/// An ordered list of named checks; it passes iff every check passes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Record a comparison of an expected and an actual value.
    pub fn expect<T: ToString + PartialEq>(
        &mut self,
        name: impl Into<String>,
        expected: T,
        actual: T,
    ) -> bool {
        let pass = expected == actual;
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
        pass
    }

    /// Record a boolean condition.
    pub fn assert(&mut self, name: impl Into<String>, ok: bool) -> bool {
        self.expect(name, true, ok)
    }

    /// Record a check with free-form descriptions.
    pub fn push(
        &mut self,
        name: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        pass: bool,
    ) {
        self.checks.push(Check {
            name: name.into(),
            expected: expected.into(),
            actual: actual.into(),
            pass,
        });
    }

    /// Append another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.checks.push(c);
        }
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            writeln!(
                f,
                "  [{mark}] {}: expected {}, got {}",
                c.name, c.expected, c.actual
            )?;
        }
        Ok(())
    }
}
