use std::fmt::Display;
use std::path::Path;

use anyhow::Context;

/// A line-oriented `key: value` report. Lines marked `detail` go to the
/// `--out` file only.
pub struct Report {
    lines: Vec<(String, String, bool)>,
}

impl Report {
    pub fn new(command: &str, args: &[String]) -> Self {
        let mut r = Report { lines: Vec::new() };
        r.detail("report", "e510");
        r.detail("engine", concat!("e510 ", env!("CARGO_PKG_VERSION")));
        r.detail("command", command);
        r.detail("args", args.join(" "));
        r
    }

    pub fn line(&mut self, key: &str, value: impl Display) {
        self.lines.push((key.to_string(), value.to_string(), false));
    }

    pub fn detail(&mut self, key: &str, value: impl Display) {
        self.lines.push((key.to_string(), value.to_string(), true));
    }

    pub fn print(&self) {
        for (k, v, detail) in &self.lines {
            if !detail {
                println!("{k}: {v}");
            }
        }
    }

    pub fn render(&self) -> String {
        self.lines
            .iter()
            .map(|(k, v, _)| format!("{k}: {v}\n"))
            .collect()
    }

    pub fn write(&self, path: Option<&Path>) -> anyhow::Result<()> {
        if let Some(p) = path {
            std::fs::write(p, self.render()).with_context(|| format!("writing {}", p.display()))?;
        }
        Ok(())
    }
}
