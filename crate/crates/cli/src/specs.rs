//! Text specs for quandles, actions, cochains and knots.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use quandle_cocycle::braid::{parse_braid, BraidWord};
use quandle_cocycle::cocycle::{builtin_cochain_file, s5_section, CochainFile, SectionCocycle, VectorCochain, BUILTIN_COCHAINS};
use quandle_cocycle::knots::KnotTable;
use quandle_cocycle::module::ModuleAction;
use quandle_cocycle::quandle::{alexander, alexander_scalar, dihedral, transpositions, trivial, FiniteQuandle, QuandleFile};

pub const QUANDLE_FORMS: &str = "dihedral:N, trivial:N, alexander:N:T, alexander:N:h0,h1,.., transpositions:N or a JSON file";

fn number<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| anyhow!("{what} must be a number, got {s:?}"))
}

/// `dihedral:3`, `alexander:5:2`, `alexander:2:1,1,1`, or a path.
pub fn quandle(spec: &str) -> Result<FiniteQuandle> {
    let parts: Vec<&str> = spec.split(':').collect();
    let q = match parts.as_slice() {
        ["dihedral", n] => dihedral(number(n, "order")?)?,
        ["trivial", n] => trivial(number(n, "order")?)?,
        ["transpositions", n] => transpositions(number(n, "degree")?)?,
        ["alexander", n, h] if h.contains(',') => {
            let coeffs: Vec<i64> = h.split(',').map(|c| number(c, "coefficient")).collect::<Result<_>>()?;
            alexander(number(n, "modulus")?, &coeffs)?
        }
        ["alexander", n, t] => alexander_scalar(number(n, "modulus")?, number(t, "t")?)?,
        _ if Path::new(spec).exists() => {
            let text = fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
            let file: QuandleFile = serde_json::from_str(&text).with_context(|| format!("parsing quandle file {spec}"))?;
            file.into_quandle()?
        }
        _ => bail!("unknown quandle {spec:?}; expected {QUANDLE_FORMS}"),
    };
    Ok(q)
}

/// `wreath` or `alexander:T` over `Z_q` (`q = 0` for the integers).
pub fn action(spec: &str, x: &FiniteQuandle, q: u64) -> Result<ModuleAction> {
    let parts: Vec<&str> = spec.split(':').collect();
    Ok(match parts.as_slice() {
        ["wreath"] => ModuleAction::wreath(x, q)?,
        ["alexander", t] => ModuleAction::alexander(x, q, number(t, "t")?)?,
        _ => bail!("unknown action {spec:?}; expected wreath or alexander:T"),
    })
}

/// A vector cochain with the action it lives over.
pub struct LoadedCochain {
    pub quandle_spec: String,
    pub action: ModuleAction,
    pub cochain: VectorCochain,
}

/// `builtin:NAME` or a cochain file. The action is `action_spec` over the
/// file's quandle and modulus.
pub fn cochain(spec: &str, action_spec: &str, quandle_override: Option<&str>) -> Result<LoadedCochain> {
    let file: CochainFile = match spec.strip_prefix("builtin:") {
        Some(name) => builtin_cochain_file(name)
            .map_err(|_| anyhow!("unknown builtin cochain {name:?}; available: {}", BUILTIN_COCHAINS.join(", ")))?,
        None => {
            let text = fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
            serde_json::from_str(&text).with_context(|| format!("parsing cochain file {spec}"))?
        }
    };
    let quandle_spec = quandle_override.unwrap_or(&file.quandle).to_string();
    let x = quandle(&quandle_spec)?;
    let action = action(action_spec, &x, file.modulus)?;
    let cochain = file.into_cochain(x.size())?;
    if cochain.rank() != action.rank() {
        bail!("cochain rank {} does not match the {} action of rank {}", cochain.rank(), action_spec, action.rank());
    }
    Ok(LoadedCochain { quandle_spec, action, cochain })
}

/// `builtin:s5-section`.
pub fn beta(spec: &str) -> Result<SectionCocycle> {
    match spec {
        "builtin:s5-section" => Ok(s5_section()?),
        _ => bail!("unknown 2-cocycle {spec:?}; available: builtin:s5-section"),
    }
}

/// `q1=1,q2=2` against the cochain's parameter names, in order.
pub fn bindings(spec: &str, params: &[String]) -> Result<Vec<i64>> {
    let mut values = vec![None; params.len()];
    for pair in spec.split(',').filter(|s| !s.trim().is_empty()) {
        let (name, value) = pair.split_once('=').ok_or_else(|| anyhow!("binding {pair:?} is not name=value"))?;
        let i = params
            .iter()
            .position(|p| p == name.trim())
            .ok_or_else(|| anyhow!("unknown parameter {name:?}; parameters are {}", params.join(", ")))?;
        values[i] = Some(number(value, name)?);
    }
    values
        .into_iter()
        .zip(params)
        .map(|(v, p)| v.ok_or_else(|| anyhow!("parameter {p} is not bound")))
        .collect()
}

pub fn knot_table(path: Option<&Path>) -> Result<KnotTable> {
    match path {
        None => Ok(KnotTable::bundled()),
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            Ok(KnotTable::from_json(&text)?)
        }
    }
}

/// A named knot from the table, or a literal braid word.
pub fn knot(name: Option<&str>, word: Option<&str>, strands: Option<usize>, table: Option<&Path>) -> Result<(String, BraidWord)> {
    match (name, word) {
        (Some(n), None) => {
            let w = knot_table(table)?.braid(n)?;
            let w = match strands {
                Some(k) => w.with_strands(k)?,
                None => w,
            };
            Ok((n.to_string(), w))
        }
        (None, Some(text)) => {
            let w = parse_braid(text, strands)?;
            Ok((format!("braid({text})"), w))
        }
        _ => bail!("give exactly one of --knot and --braid"),
    }
}
