//! Reference values of the invariants for small knots, parsed from the
//! bundled `data/tables.txt`.
//!
//! Tables 1 and 2 hold module invariants over `R_3` and `R_5`. Tables 3 to 6
//! hold 3-cocycle invariants of 2-twist-spun knots (3 and 4 forward, 5 and 6
//! reversed). Table 7 holds the 2-cocycle invariant over `R_3` mod 3.

use std::collections::BTreeMap;

use crate::braid::ColoringType;
use crate::error::{Error, Result};
use crate::invariant::Multiset;
use crate::linalg::ModulePresentation;
use crate::linform::{parse_vec, CoeffVec};

const BUNDLED: &str = include_str!("../data/tables.txt");

/// Expected values of one row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expected {
    Modules(Multiset<ModulePresentation>),
    /// Vector invariants carry no coloring types.
    Vectors(BTreeMap<CoeffVec, usize>),
}

impl Expected {
    pub fn total(&self) -> usize {
        match self {
            Expected::Modules(m) => m.total(),
            Expected::Vectors(v) => v.values().sum(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub knot: String,
    /// Printed values are internally inconsistent; never scored.
    pub caution: bool,
    pub expected: Expected,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceTable {
    pub number: u8,
    pub title: String,
    /// Parameter names of the vector entries.
    pub params: Vec<String>,
    pub rows: Vec<TableRow>,
}

impl ReferenceTable {
    pub fn row(&self, knot: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.knot == knot)
    }
}

/// Outcome of comparing a computed value with a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowOutcome {
    Match,
    Mismatch,
    /// Mismatch on a caution row.
    Caution,
}

impl RowOutcome {
    pub fn label(self) -> &'static str {
        match self {
            RowOutcome::Match => "match",
            RowOutcome::Mismatch => "MISMATCH",
            RowOutcome::Caution => "caution",
        }
    }
}

impl TableRow {
    pub fn compare_modules(&self, computed: &Multiset<ModulePresentation>) -> RowOutcome {
        let ok = matches!(&self.expected, Expected::Modules(m) if m == computed);
        self.outcome(ok)
    }

    pub fn compare_vectors(&self, computed: &Multiset<CoeffVec>) -> RowOutcome {
        let ok = matches!(&self.expected, Expected::Vectors(v) if *v == computed.values());
        self.outcome(ok)
    }

    fn outcome(&self, ok: bool) -> RowOutcome {
        match (ok, self.caution) {
            (true, _) => RowOutcome::Match,
            (false, false) => RowOutcome::Mismatch,
            (false, true) => RowOutcome::Caution,
        }
    }
}

/// Parameter names used by a table.
fn params_for(number: u8) -> Vec<String> {
    match number {
        3..=6 => vec!["q1".into(), "q2".into()],
        _ => vec![],
    }
}

fn parse_module_item(item: &str) -> Result<(ModulePresentation, ColoringType, usize)> {
    let bad = || Error::Input(format!("bad module entry {item:?}"));
    let (head, rest) = item.split_once('[').ok_or_else(bad)?;
    let head = head.trim();
    let (count, kind) = match head.chars().last() {
        Some('T') => (&head[..head.len() - 1], ColoringType::Trivial),
        Some('N') => (&head[..head.len() - 1], ColoringType::Nontrivial),
        _ => return Err(bad()),
    };
    let count: usize = count.parse().map_err(|_| bad())?;
    let (torsion, rank) = rest.split_once(']').ok_or_else(bad)?;
    let torsion: Vec<u64> = torsion
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    let rank: usize = rank.trim().strip_prefix('r').ok_or_else(bad)?.parse().map_err(|_| bad())?;
    Ok((ModulePresentation::new(torsion, rank), kind, count))
}

fn parse_vector_item(item: &str, names: &[String]) -> Result<(CoeffVec, usize)> {
    let item = item.trim();
    match item.split_once("x(") {
        Some((count, rest)) => {
            let count = count.parse().map_err(|_| Error::Input(format!("bad multiplicity in {item:?}")))?;
            Ok((parse_vec(&format!("({rest}"), names)?, count))
        }
        None => Ok((parse_vec(item, names)?, 1)),
    }
}

/// Parses the table text format.
pub fn parse_tables(text: &str) -> Result<Vec<ReferenceTable>> {
    let mut tables: Vec<ReferenceTable> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let ctx = |e: Error| Error::Input(format!("tables line {}: {e}", lineno + 1));
        if let Some(h) = line.strip_prefix("[table ").and_then(|r| r.strip_suffix(']')) {
            let number: u8 = h.trim().parse().map_err(|_| Error::Input(format!("bad table header {line:?}")))?;
            tables.push(ReferenceTable { number, title: String::new(), params: params_for(number), rows: vec![] });
            continue;
        }
        let table = tables.last_mut().ok_or_else(|| Error::Input("row before any table header".into()))?;
        if let Some(t) = line.strip_prefix("title =") {
            table.title = t.trim().to_string();
            continue;
        }
        let (knot, body) = line.split_once('|').ok_or_else(|| ctx(Error::Input(format!("missing '|' in {line:?}"))))?;
        let knot = knot.trim();
        let (caution, knot) = match knot.strip_prefix('!') {
            Some(k) => (true, k.trim()),
            None => (false, knot),
        };
        let items = body.split(';').map(str::trim).filter(|s| !s.is_empty());
        let expected = if table.number <= 2 {
            let mut m = Multiset::new();
            for item in items {
                let (v, k, c) = parse_module_item(item).map_err(ctx)?;
                m.insert(v, k, c);
            }
            Expected::Modules(m)
        } else {
            let mut m = BTreeMap::new();
            for item in items {
                let (v, c) = parse_vector_item(item, &table.params).map_err(ctx)?;
                *m.entry(v).or_insert(0) += c;
            }
            Expected::Vectors(m)
        };
        table.rows.push(TableRow { knot: knot.to_string(), caution, expected });
    }
    Ok(tables)
}

/// All bundled tables.
pub fn bundled_tables() -> Vec<ReferenceTable> {
    parse_tables(BUNDLED).expect("bundled tables parse")
}

pub fn bundled_table(number: u8) -> Result<ReferenceTable> {
    bundled_tables()
        .into_iter()
        .find(|t| t.number == number)
        .ok_or_else(|| Error::Input(format!("no table {number}; tables are 1 to 7")))
}

/// Number of closure colorings a knot has over `R_3` and `R_5`, read off
/// tables 1 and 2. A knot absent from a table has only trivial colorings.
pub fn expected_coloring_counts(knot: &str) -> (usize, usize) {
    let tables = bundled_tables();
    let count = |n: u8, default: usize| {
        tables
            .iter()
            .find(|t| t.number == n)
            .and_then(|t| t.row(knot))
            .map_or(default, |r| r.expected.total())
    };
    (count(1, 3), count(2, 5))
}
