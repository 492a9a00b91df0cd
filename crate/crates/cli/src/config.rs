use std::path::Path;

use anyhow::{bail, Context, Result};
use grs_core::{Field, FieldSpec, GrsCode};
use serde::Deserialize;

/// Code description read from TOML.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeConfig {
    pub field: FieldConfig,
    pub n: usize,
    pub k: usize,
    /// Locator indices; defaults to `g^0, …, g^(n−1)`.
    pub alphas: Option<Vec<u64>>,
    /// Column multiplier indices; default all 1.
    pub vprimes: Option<Vec<u64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldConfig {
    pub p: u32,
    #[serde(default = "one")]
    pub m: u32,
    #[serde(default)]
    pub modulus: Vec<u32>,
}

fn one() -> u32 {
    1
}

impl CodeConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn build(&self) -> Result<GrsCode> {
        let spec = if self.field.m == 1 {
            FieldSpec::prime(self.field.p)
        } else {
            FieldSpec::extension(self.field.p, self.field.m, self.field.modulus.clone())
        };
        let field = Field::new(spec)?;
        let code = match (&self.alphas, &self.vprimes) {
            (None, None) => GrsCode::from_generator_powers(&field, self.n, self.k)?,
            (alphas, vprimes) => {
                let alphas = match alphas {
                    Some(a) => elems(&field, a)?,
                    None => field.nonzero_elements().take(self.n).collect(),
                };
                let vprimes = match vprimes {
                    Some(v) => elems(&field, v)?,
                    None => vec![grs_core::Fe::ONE; self.n],
                };
                if alphas.len() != self.n || vprimes.len() != self.n {
                    bail!("config lists {} locators and {} multipliers for n = {}", alphas.len(), vprimes.len(), self.n);
                }
                GrsCode::new(&field, self.k, alphas, vprimes)?
            }
        };
        Ok(code)
    }
}

fn elems(field: &Field, raw: &[u64]) -> Result<Vec<grs_core::Fe>> {
    raw.iter().map(|&v| field.elem(v).map_err(Into::into)).collect()
}
