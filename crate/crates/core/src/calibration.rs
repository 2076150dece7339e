//! Anchor rows that pin down the crossing convention and the twist-spin
//! configuration, and the sweep over all candidates.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::braid::{closure_colorings, BraidWord, Convention, LaidOutBraid};
use crate::cocycle::{r3_example2, r3_example3};
use crate::error::{Error, Result};
use crate::invariant::{cocycle2_invariant, module_invariant, twistspin_invariant, Orientation, TwistConfig};
use crate::knots::KnotTable;
use crate::linform::{render_vec, vec_scaled, CoeffVec};
use crate::module::ModuleAction;
use crate::quandle::dihedral;
use crate::tables::{bundled_table, RowOutcome, TableRow};

/// Module rows as `(table, knot)`; table 1 is over `R_3`, table 2 over `R_5`.
pub const MODULE_ANCHORS: [(u8, &str); 5] = [(1, "3_1"), (2, "5_1"), (2, "4_1"), (1, "8_18"), (1, "8_19")];

/// Knots whose 2-cocycle invariant is checked against table 7.
pub const CLASSICAL_ANCHORS: [&str; 5] = ["3_1", "6_1", "8_18", "8_19", "8_20"];

/// Twist-spin rows as `(table, knot)`; table 3 is forward, table 5 reversed.
pub const TWISTSPIN_ANCHORS: [(u8, &str); 7] =
    [(3, "3_1"), (3, "8_18"), (3, "8_19"), (3, "8_20"), (5, "3_1"), (5, "8_20"), (5, "8_19")];

const CAP: u128 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnchorResult {
    pub name: String,
    pub ok: bool,
    /// Rendered computed value.
    pub detail: String,
}

fn render(m: &BTreeMap<String, usize>) -> String {
    m.iter().map(|(v, c)| format!("{c}x{v}")).collect::<Vec<_>>().join(" ")
}

fn render_vectors(m: &BTreeMap<CoeffVec, usize>, params: &[String]) -> String {
    render(&m.iter().map(|(v, c)| (render_vec(v, params), *c)).collect())
}

fn knot(name: &str) -> Result<BraidWord> {
    KnotTable::bundled().braid(name)
}

/// Computes the invariant behind reference table `number` for one row.
pub fn reproduce_row(number: u8, row: &TableRow, w: &BraidWord, conv: Convention, cfg: TwistConfig) -> Result<(RowOutcome, String)> {
    let b = LaidOutBraid::new(w, conv);
    match number {
        1 | 2 => {
            let x = dihedral(if number == 1 { 3 } else { 5 })?;
            let action = ModuleAction::wreath(&x, 0)?;
            let m = module_invariant(&b, &closure_colorings(&b, &x, CAP)?, &action)?;
            let shown: BTreeMap<String, usize> = m.values().into_iter().map(|(v, c)| (v.to_string(), c)).collect();
            Ok((row.compare_modules(&m), render(&shown)))
        }
        3..=6 => {
            let (action, kappa) = r3_example3()?;
            let orientation = if number <= 4 { Orientation::Forward } else { Orientation::Reversed };
            let cs = closure_colorings(&b, action.quandle(), CAP)?;
            let m = twistspin_invariant(&b, &cs, &action, &kappa, 2, orientation, cfg)?;
            Ok((row.compare_vectors(&m), render_vectors(&m.values(), kappa.params())))
        }
        7 => {
            let (action, kappa) = r3_example2()?;
            let cs = closure_colorings(&b, action.quandle(), CAP)?;
            let m = cocycle2_invariant(&b, &cs, &action, &kappa)?;
            Ok((row.compare_vectors(&m), render_vectors(&m.values(), &[])))
        }
        _ => Err(Error::Input(format!("no table {number}; tables are 1 to 7"))),
    }
}

fn anchor(t: u8, name: &str, conv: Convention, cfg: TwistConfig) -> Result<AnchorResult> {
    let table = bundled_table(t)?;
    let row = table.row(name).expect("anchor row present");
    let (outcome, detail) = reproduce_row(t, row, &knot(name)?, conv, cfg)?;
    Ok(AnchorResult { name: format!("table {t} {name}"), ok: outcome == RowOutcome::Match, detail })
}

/// Module invariant rows under `conv`.
pub fn module_anchors(conv: Convention) -> Result<Vec<AnchorResult>> {
    MODULE_ANCHORS.iter().map(|&(t, name)| anchor(t, name, conv, TwistConfig::DEFAULT)).collect()
}

/// Negation mod 3 swaps the values 1 and 2.
fn swapped(v: &CoeffVec) -> CoeffVec {
    vec_scaled(v, -1).iter().map(|f| f.reduced(3)).collect()
}

/// 2-cocycle rows under `conv`, plus the mirror rule for each knot.
pub fn classical_anchors(conv: Convention) -> Result<Vec<AnchorResult>> {
    let (action, kappa) = r3_example2()?;
    let table = bundled_table(7)?;
    let x = action.quandle().clone();
    let mut out = Vec::new();
    for name in CLASSICAL_ANCHORS {
        let w = match knot(name) {
            Ok(w) => w,
            Err(_) => continue,
        };
        let row = table.row(name).expect("anchor row present");
        let b = LaidOutBraid::new(&w, conv);
        let m = cocycle2_invariant(&b, &closure_colorings(&b, &x, CAP)?, &action, &kappa)?;
        out.push(AnchorResult {
            name: format!("table 7 {name}"),
            ok: row.compare_vectors(&m) == RowOutcome::Match,
            detail: render_vectors(&m.values(), &[]),
        });
        let mb = LaidOutBraid::new(&w.mirror(), conv);
        let mm = cocycle2_invariant(&mb, &closure_colorings(&mb, &x, CAP)?, &action, &kappa)?;
        let mut expect = BTreeMap::new();
        for (v, c) in m.values() {
            *expect.entry(swapped(&v)).or_insert(0) += c;
        }
        out.push(AnchorResult {
            name: format!("mirror {name}"),
            ok: mm.values() == expect,
            detail: render_vectors(&mm.values(), &[]),
        });
    }
    Ok(out)
}

/// Twist-spin rows under `conv` and `cfg`.
pub fn twistspin_anchors(conv: Convention, cfg: TwistConfig) -> Result<Vec<AnchorResult>> {
    TWISTSPIN_ANCHORS.iter().map(|&(t, name)| anchor(t, name, conv, cfg)).collect()
}

/// One candidate pair with its anchor results.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub convention: Convention,
    pub twist: TwistConfig,
    pub results: Vec<AnchorResult>,
}

impl Candidate {
    pub fn passes(&self) -> bool {
        self.results.iter().all(|r| r.ok)
    }

    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| !r.ok).count()
    }
}

/// Runs every anchor for one pair.
pub fn evaluate(conv: Convention, cfg: TwistConfig) -> Result<Candidate> {
    let mut results = module_anchors(conv)?;
    results.extend(classical_anchors(conv)?);
    results.extend(twistspin_anchors(conv, cfg)?);
    Ok(Candidate { convention: conv, twist: cfg, results })
}

/// Every convention paired with every twist configuration.
pub fn sweep() -> Result<Vec<Candidate>> {
    let pairs: Vec<(Convention, TwistConfig)> =
        Convention::all().into_iter().flat_map(|c| TwistConfig::all().into_iter().map(move |t| (c, t))).collect();
    pairs.into_par_iter().map(|(c, t)| evaluate(c, t)).collect()
}
