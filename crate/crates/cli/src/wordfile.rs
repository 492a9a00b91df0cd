use std::path::Path;

use anyhow::{bail, Context, Result};
use grs_core::{Fe, Field};

/// A header line `q n` followed by one line of `n` symbols in `[0, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordFile {
    pub q: u32,
    pub symbols: Vec<u32>,
}

impl WordFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().context("missing header line `q n`")?;
        let head: Vec<&str> = header.split_whitespace().collect();
        let [q, n] = head[..] else { bail!("header must be `q n`, got `{header}`") };
        let q: u32 = q.parse().with_context(|| format!("bad field order `{q}`"))?;
        let n: usize = n.parse().with_context(|| format!("bad length `{n}`"))?;
        let symbols = lines
            .flat_map(str::split_whitespace)
            .map(|t| t.parse::<u32>().with_context(|| format!("bad symbol `{t}`")))
            .collect::<Result<Vec<_>>>()?;
        if symbols.len() != n {
            bail!("header announces {n} symbols, found {}", symbols.len());
        }
        if let Some(bad) = symbols.iter().find(|&&s| s >= q) {
            bail!("symbol {bad} is not below q = {q}");
        }
        Ok(WordFile { q, symbols })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn from_elems(field: &Field, v: &[Fe]) -> Self {
        WordFile { q: field.order(), symbols: v.iter().map(|e| e.index()).collect() }
    }

    /// Symbols as elements of `field`, checking `q` and the expected length.
    pub fn to_elems(&self, field: &Field, expected_len: usize) -> Result<Vec<Fe>> {
        if self.q != field.order() {
            bail!("word is over q = {}, code is over q = {}", self.q, field.order());
        }
        if self.symbols.len() != expected_len {
            bail!("expected {expected_len} symbols, got {}", self.symbols.len());
        }
        Ok(self.symbols.iter().map(|&s| field.elem(s as u64).expect("checked against q")).collect())
    }

    pub fn render(&self) -> String {
        let body: Vec<String> = self.symbols.iter().map(u32::to_string).collect();
        format!("{} {}\n{}\n", self.q, self.symbols.len(), body.join(" "))
    }
}
