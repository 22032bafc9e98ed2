use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual_terms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Self {
            name: name.into(),
            pass,
            residual_terms: None,
            detail: None,
        }
    }

    pub fn residual(name: impl Into<String>, residual_terms: usize) -> Self {
        Self {
            residual_terms: Some(residual_terms),
            ..Self::new(name, residual_terms == 0)
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub seconds: f64,
}

/// The uniform output of every verb.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub verb: String,
    pub inputs: Value,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    /// Human-readable rendering of `result` for the text format.
    #[serde(skip)]
    pub text: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
    pub engine_version: String,
}

impl Report {
    pub fn new(verb: &str, inputs: Value) -> Self {
        Self {
            verb: verb.to_string(),
            inputs,
            checks: Vec::new(),
            pass: true,
            result: None,
            text: Vec::new(),
            timing: None,
            engine_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn check(&mut self, c: Check) {
        self.pass &= c.pass;
        self.checks.push(c);
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("qz {}: {}\n", self.verb, if self.pass { "PASS" } else { "FAIL" });
        for c in &self.checks {
            out.push_str(&format!("  [{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name));
            if let Some(r) = c.residual_terms {
                out.push_str(&format!(" (residual {r} terms)"));
            }
            if let Some(d) = &c.detail {
                out.push_str(&format!(": {d}"));
            }
            out.push('\n');
        }
        for l in &self.text {
            out.push_str(l);
            out.push('\n');
        }
        if let Some(t) = &self.timing {
            out.push_str(&format!("time: {:.3}s\n", t.seconds));
        }
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_failing_check_fails_the_report() {
        let mut r = Report::new("verify", serde_json::json!({}));
        r.check(Check::residual("a", 0));
        r.check(Check::residual("b", 3));
        assert!(!r.pass);
        let text = r.render_text();
        assert!(text.starts_with("qz verify: FAIL"));
        assert!(text.contains("[FAIL] b (residual 3 terms)"));
    }
}
