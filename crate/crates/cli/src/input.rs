//! Parsing of command-line values: inline JSON or `@file`, and the short
//! forms for characters, subgroups, groups and symmetric functions.

use std::collections::BTreeMap;
use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use plethyra::characters::{ClassFunction, SubgroupProfile};
use plethyra::coeffring::{HodgeNumber, LaurentPoly};
use plethyra::equivariant::FiniteGroupData;
use plethyra::genfun::{CharSeries, PolySeries, SpaceDescriptor};
use plethyra::partition::Partition;
use plethyra::series::TruncatedSeries;
use plethyra::symfunc::{e_basis, h_basis, schur, PSpecialization, SymFunc};

/// Reads `@path` from disk and passes anything else through.
pub fn load_text(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(arg.to_string()),
    }
}

/// JSON inline, from `@path`, or from a plain path naming an existing file.
pub fn parse_json<T: DeserializeOwned>(arg: &str, what: &str) -> Result<T> {
    let looks_inline = arg.trim_start().starts_with(['{', '[', '"']);
    let text = if !looks_inline && !arg.starts_with('@') && std::path::Path::new(arg).is_file() {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        load_text(arg)?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing {what}"))
}

pub fn parse_poly(s: &str) -> Result<LaurentPoly> {
    s.trim().parse::<LaurentPoly>().map_err(|e| anyhow!("parsing polynomial `{s}`: {e}"))
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| anyhow!("expected a non-negative integer for {what}, got `{s}`"))
}

fn parse_partition(s: &str) -> Result<Partition> {
    let parts = s
        .trim_matches(|c| c == '[' || c == ']')
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_usize(t, "a partition part"))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts).map_err(|e| anyhow!("{e}"))
}

/// The space arguments shared by most subcommands; exactly one must be given.
#[derive(Clone, Debug, Default, clap::Args)]
pub struct SpaceArgs {
    /// Betti numbers as JSON, e.g. '{"0":1,"2":1}'
    #[arg(long, group = "space_input")]
    pub betti: Option<String>,
    /// Hodge numbers as JSON, e.g. '[{"p":0,"q":0,"k":0,"dim":1}]'
    #[arg(long, group = "space_input")]
    pub hodge: Option<String>,
    /// Poincaré or Hodge polynomial, e.g. '1+z^2'
    #[arg(long, group = "space_input")]
    pub poly: Option<String>,
    /// Space descriptor JSON or @file
    #[arg(long, group = "space_input")]
    pub space: Option<String>,
}

impl SpaceArgs {
    pub fn descriptor(&self) -> Result<SpaceDescriptor> {
        if let Some(b) = &self.betti {
            let betti: BTreeMap<i64, i64> = parse_json(b, "Betti numbers")?;
            return SpaceDescriptor::from_betti("X", &betti).map_err(Into::into);
        }
        if let Some(h) = &self.hodge {
            let hodge: Vec<HodgeNumber> = parse_json(h, "Hodge numbers")?;
            return SpaceDescriptor::from_hodge("X", &hodge).map_err(Into::into);
        }
        if let Some(p) = &self.poly {
            return Ok(SpaceDescriptor::new("X", parse_poly(&load_text(p)?)?));
        }
        if let Some(s) = &self.space {
            return parse_json(s, "space descriptor");
        }
        bail!("no space given: use one of --betti, --hodge, --poly, --space")
    }
}

/// `triv:n | sign:n | regular:n | irr:2,1 | @file | JSON`.
pub fn parse_character(arg: &str) -> Result<ClassFunction> {
    if let Some((kind, rest)) = arg.split_once(':') {
        return match kind {
            "triv" => Ok(ClassFunction::trivial(parse_usize(rest, "the degree")?)),
            "sign" => Ok(ClassFunction::sign(parse_usize(rest, "the degree")?)),
            "regular" => Ok(ClassFunction::regular(parse_usize(rest, "the degree")?)),
            "irr" => Ok(ClassFunction::irreducible(&parse_partition(rest)?)),
            _ => bail!("unknown character `{kind}`; expected triv, sign, regular or irr"),
        };
    }
    parse_json(arg, "class function")
}

/// `trivial:n | sym:n | cyclic:n | @file | JSON`.
pub fn parse_subgroup(arg: &str) -> Result<SubgroupProfile> {
    if let Some((kind, rest)) = arg.split_once(':') {
        let n = parse_usize(rest, "the degree")?;
        return match kind {
            "trivial" => Ok(SubgroupProfile::trivial(n)),
            "sym" => Ok(SubgroupProfile::full(n)),
            "cyclic" => Ok(SubgroupProfile::cyclic(n)),
            _ => bail!("unknown subgroup `{kind}`; expected trivial, sym or cyclic"),
        };
    }
    parse_json(arg, "subgroup profile")
}

/// `trivial | cyclic:n | sym:n | @file | JSON`.
pub fn parse_group(arg: &str, max_degree: usize) -> Result<FiniteGroupData> {
    if arg == "trivial" {
        return Ok(FiniteGroupData::trivial());
    }
    if let Some((kind, rest)) = arg.split_once(':') {
        let n = parse_usize(rest, "the group parameter")?;
        return match kind {
            "cyclic" if n > 0 => Ok(FiniteGroupData::cyclic(n as u64)),
            "sym" => Ok(FiniteGroupData::symmetric(n, max_degree)),
            _ => bail!("unknown group `{arg}`; expected trivial, cyclic:n or sym:n"),
        };
    }
    parse_json(arg, "group data")
}

/// `p:2,1 | h:n | e:n | s:2,1 | <polynomial> | @file | JSON`.
pub fn parse_symfunc(arg: &str) -> Result<SymFunc<LaurentPoly>> {
    if let Some((kind, rest)) = arg.split_once(':') {
        match kind {
            "p" => return Ok(SymFunc::p(parse_partition(rest)?)),
            "h" => return Ok(h_basis(parse_usize(rest, "the degree")?)),
            "e" => return Ok(e_basis(parse_usize(rest, "the degree")?)),
            "s" => return Ok(schur(&parse_partition(rest)?)),
            _ => {}
        }
    }
    let text = load_text(arg)?;
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(&text).context("parsing symmetric function");
    }
    Ok(SymFunc::constant(parse_poly(&text)?))
}

/// A series argument over either coefficient ring.
pub enum SeriesInput {
    Poly(PolySeries),
    Char(CharSeries),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SeriesWire {
    Poly(PolySeries),
    Char(CharSeries),
    PolyList(Vec<LaurentPoly>),
}

/// Parses a series and truncates it to at most `max_degree`. A bare JSON
/// array of polynomials is a polynomial in `t`, padded to `max_degree`.
pub fn parse_series(arg: &str, max_degree: usize) -> Result<SeriesInput> {
    let wire: SeriesWire = parse_json(arg, "series")?;
    Ok(match wire {
        SeriesWire::Poly(s) => SeriesInput::Poly(s.truncated(max_degree.min(s.max_degree()))),
        SeriesWire::Char(s) => SeriesInput::Char(s.truncated(max_degree.min(s.max_degree()))),
        SeriesWire::PolyList(c) => SeriesInput::Poly(TruncatedSeries::new(max_degree, c)),
    })
}

/// Specialization of the power sums applied to symmetric-function output.
#[derive(Clone, Debug, PartialEq)]
pub enum Specialization {
    Standard(PSpecialization),
    /// Values of `p_1, p_2, …`; power sums beyond the list are unspecified.
    Custom(Vec<LaurentPoly>),
}

impl Specialization {
    pub fn parse(s: &str) -> Result<Self> {
        let value = s.strip_prefix("p=").ok_or_else(|| anyhow!("specialization must start with `p=`"))?;
        Ok(match value {
            "1" => Self::Standard(PSpecialization::Invariant),
            "alt" => Self::Standard(PSpecialization::Alternating),
            "forget" => Self::Standard(PSpecialization::Forget),
            list if list.starts_with('[') && list.ends_with(']') => Self::Custom(
                list[1..list.len() - 1]
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(parse_poly)
                    .collect::<Result<_>>()?,
            ),
            other => bail!("unknown specialization `p={other}`; expected p=1, p=alt, p=forget or p=[v1,v2,...]"),
        })
    }

    pub fn apply(&self, f: &SymFunc<LaurentPoly>) -> Result<LaurentPoly> {
        match self {
            Self::Standard(s) => Ok(s.apply(f)),
            Self::Custom(values) => f.specialize_p(|r| values.get(r - 1).cloned()).map_err(Into::into),
        }
    }
}

/// `z=1`, `y=x=1` and the like: every name left of the last `=` gets the value.
pub fn parse_assignment(s: &str, into: &mut BTreeMap<String, LaurentPoly>) -> Result<()> {
    let mut pieces: Vec<&str> = s.split('=').collect();
    if pieces.len() < 2 {
        bail!("expected var=value, got `{s}`");
    }
    let value = parse_poly(pieces.pop().unwrap_or_default())?;
    for var in pieces {
        let var = var.trim();
        if var.is_empty() || !var.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            bail!("bad variable name `{var}` in `{s}`");
        }
        into.insert(var.to_string(), value.clone());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_specs() {
        assert_eq!(parse_character("triv:3").unwrap(), ClassFunction::trivial(3));
        assert_eq!(
            parse_character("irr:2,1").unwrap(),
            ClassFunction::irreducible(&Partition::new(vec![2, 1]).unwrap())
        );
        assert!(parse_character("bogus:2").is_err());
        assert!(parse_character("irr:1,2,x").is_err());
    }

    #[test]
    fn assignments_share_value() {
        let mut m = BTreeMap::new();
        parse_assignment("y=x=1", &mut m).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m["x"], LaurentPoly::from_int(1));
        assert!(parse_assignment("z", &mut m).is_err());
    }

    #[test]
    fn specialization_forms() {
        assert_eq!(Specialization::parse("p=alt").unwrap(), Specialization::Standard(PSpecialization::Alternating));
        let custom = Specialization::parse("p=[2,0]").unwrap();
        let f: SymFunc<LaurentPoly> = SymFunc::p(Partition::new(vec![1, 1]).unwrap());
        assert_eq!(custom.apply(&f).unwrap(), LaurentPoly::from_int(4));
        assert!(custom.apply(&SymFunc::power_sum(3)).is_err());
        assert!(Specialization::parse("q=1").is_err());
    }

    #[test]
    fn series_shorthand() {
        match parse_series(r#"["1","z","z^2"]"#, 12).unwrap() {
            SeriesInput::Poly(s) => {
                assert_eq!(s.max_degree(), 12);
                assert_eq!(s.coeff(3).num_terms(), 0);
            }
            SeriesInput::Char(_) => panic!("expected polynomial series"),
        }
    }
}
