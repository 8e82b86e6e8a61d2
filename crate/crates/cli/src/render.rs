//! Post-processing (specialization, variable substitution) and rendering of
//! results as text or JSON.

use std::collections::BTreeMap;
use std::fmt::Display;

use anyhow::Result;
use serde::Serialize;
use serde_json::Value;

use plethyra::coeffring::LaurentPoly;
use plethyra::genfun::{CharSeries, PolySeries};
use plethyra::symfunc::SymFunc;

use crate::input::Specialization;

/// A rendered result in both output formats.
pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn of<T: Display + Serialize>(x: &T) -> Result<Self> {
        Ok(Self { text: x.to_string(), json: serde_json::to_value(x)? })
    }

    /// One `key: value` line per entry, in key order.
    pub fn map<V: Display + Serialize>(entries: &BTreeMap<String, V>) -> Result<Self> {
        let text = if entries.is_empty() {
            "0".to_string()
        } else {
            entries.iter().map(|(k, v)| format!("{k}: {v}")).collect::<Vec<_>>().join("\n")
        };
        Ok(Self { text, json: serde_json::to_value(entries)? })
    }
}

/// Applies the `--specialize` and `--set` options to outputs.
pub struct Post {
    pub specialization: Option<Specialization>,
    pub assignment: BTreeMap<String, LaurentPoly>,
}

impl Post {
    pub fn poly(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        if self.assignment.is_empty() {
            return Ok(p.clone());
        }
        Ok(p.specialize(&self.assignment)?)
    }

    pub fn poly_series(&self, s: &PolySeries) -> Result<PolySeries> {
        Ok(s.try_map_coeffs(|c| p_result(self.poly(c)))?)
    }

    fn symfunc_coeffs(&self, f: &SymFunc<LaurentPoly>) -> Result<SymFunc<LaurentPoly>> {
        let terms = f.terms().map(|(l, c)| Ok((l.clone(), self.poly(c)?))).collect::<Result<Vec<_>>>()?;
        Ok(SymFunc::from_terms(terms))
    }

    pub fn symfunc(&self, f: &SymFunc<LaurentPoly>) -> Result<Report> {
        match &self.specialization {
            Some(s) => Report::of(&self.poly(&s.apply(f)?)?),
            None => Report::of(&self.symfunc_coeffs(f)?),
        }
    }

    pub fn char_series(&self, s: &CharSeries) -> Result<Report> {
        match &self.specialization {
            Some(spec) => {
                let coeffs = s.coeffs().iter().map(|f| self.poly(&spec.apply(f)?)).collect::<Result<Vec<_>>>()?;
                Report::of(&PolySeries::new(s.max_degree(), coeffs))
            }
            None => {
                let coeffs = s.coeffs().iter().map(|f| self.symfunc_coeffs(f)).collect::<Result<Vec<_>>>()?;
                Report::of(&CharSeries::new(s.max_degree(), coeffs))
            }
        }
    }
}

/// Bridges `anyhow` errors into the engine's error type for `try_map_coeffs`.
fn p_result(r: Result<LaurentPoly>) -> plethyra::error::Result<LaurentPoly> {
    r.map_err(|e| plethyra::error::Error::Parse(format!("{e:#}")))
}
