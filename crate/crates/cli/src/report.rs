use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Checks in the order they were run, plus free-form notes.
#[derive(Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, cs: Vec<Check>) {
        self.checks.extend(cs);
    }

    pub fn note(&mut self, n: String) {
        self.notes.push(n);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(if c.passed { "PASS\t" } else { "FAIL\t" });
            out.push_str(&c.name);
            if !c.detail.is_empty() {
                out.push('\t');
                out.push_str(&c.detail);
            }
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(&format!("note\t{n}\n"));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.checks.len(),
            failed
        ));
        out
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}
