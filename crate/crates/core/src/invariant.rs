//! Knot and surface invariants built from colorings and cocycles: the
//! conjugacy invariant, the 2-cocycle invariant of closed braids and the
//! 3-cocycle invariant of twist-spun knots.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{propagate, BraidWord, ClosureColoring, ColorGrid, ColoringType, Convention, CrossingRule, LaidOutBraid};
use crate::cocycle::{NonAbelianTwoCocycle, VectorCochain};
use crate::error::{Error, Result};
use crate::linalg::{solve_affine, IntMatrix, ModulePresentation};
use crate::linform::{render_vec, CoeffVec, LinForm};
use crate::module::{braid_matrix, Mat, ModuleAction};

/// A multiset of invariant values tagged by coloring type, kept in
/// canonical (sorted) order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiset<V: Ord> {
    entries: BTreeMap<(V, ColoringType), usize>,
}

impl<V: Ord + Clone> Multiset<V> {
    pub fn new() -> Self {
        Multiset { entries: BTreeMap::new() }
    }

    pub fn insert(&mut self, v: V, kind: ColoringType, count: usize) {
        *self.entries.entry((v, kind)).or_insert(0) += count;
    }

    /// `(value, type, count)` in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (&V, ColoringType, usize)> {
        self.entries.iter().map(|((v, k), &c)| (v, *k, c))
    }

    /// Counts per value, ignoring coloring types.
    pub fn values(&self) -> BTreeMap<V, usize> {
        let mut out = BTreeMap::new();
        for ((v, _), c) in &self.entries {
            *out.entry(v.clone()).or_insert(0) += c;
        }
        out
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn map<W: Ord + Clone>(&self, f: impl Fn(&V) -> W) -> Multiset<W> {
        let mut out = Multiset::new();
        for ((v, k), &c) in &self.entries {
            out.insert(f(v), *k, c);
        }
        out
    }
}

impl<V: Ord + Clone> Default for Multiset<V> {
    fn default() -> Self {
        Self::new()
    }
}

impl<V: Ord + Clone> FromIterator<(V, ColoringType)> for Multiset<V> {
    fn from_iter<I: IntoIterator<Item = (V, ColoringType)>>(iter: I) -> Self {
        let mut m = Multiset::new();
        for (v, k) in iter {
            m.insert(v, k, 1);
        }
        m
    }
}

/// One line of a serialized result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub value: serde_json::Value,
    pub count: usize,
    pub coloring_type: ColoringType,
}

/// Serialized invariant result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub knot: String,
    pub invariant: String,
    pub params: Vec<String>,
    pub entries: Vec<ReportEntry>,
}

impl InvariantReport {
    pub fn from_module(knot: &str, m: &Multiset<ModulePresentation>) -> Self {
        let entries = m
            .entries()
            .map(|(v, k, c)| ReportEntry {
                value: serde_json::json!({ "torsion": v.torsion, "free_rank": v.free_rank }),
                count: c,
                coloring_type: k,
            })
            .collect();
        InvariantReport { knot: knot.into(), invariant: "module".into(), params: vec![], entries }
    }

    pub fn from_conjugacy(knot: &str, m: &Multiset<Vec<String>>) -> Self {
        let entries =
            m.entries().map(|(v, k, c)| ReportEntry { value: serde_json::json!(v), count: c, coloring_type: k }).collect();
        InvariantReport { knot: knot.into(), invariant: "conjugacy".into(), params: vec![], entries }
    }

    pub fn from_vectors(knot: &str, invariant: &str, params: &[String], m: &Multiset<CoeffVec>) -> Self {
        let entries = m
            .entries()
            .map(|(v, k, c)| ReportEntry { value: serde_json::json!(render_vec(v, params)), count: c, coloring_type: k })
            .collect();
        InvariantReport { knot: knot.into(), invariant: invariant.into(), params: params.to_vec(), entries }
    }

    /// Rebuilds the vector multiset from a serialized `cocycle2` or
    /// `twistspin` report.
    pub fn vectors(&self) -> Result<Multiset<CoeffVec>> {
        let mut m = Multiset::new();
        for e in &self.entries {
            let text = e.value.as_str().ok_or_else(|| Error::Input("vector entries are strings".into()))?;
            m.insert(crate::linform::parse_vec(text, &self.params)?, e.coloring_type, e.count);
        }
        Ok(m)
    }

    /// Rebuilds a module multiset from a serialized `module` report.
    pub fn modules(&self) -> Result<Multiset<ModulePresentation>> {
        let mut m = Multiset::new();
        for e in &self.entries {
            let torsion: Vec<u64> = serde_json::from_value(e.value["torsion"].clone())
                .map_err(|err| Error::Input(format!("bad torsion entry: {err}")))?;
            let rank = e.value["free_rank"].as_u64().ok_or_else(|| Error::Input("missing free_rank".into()))?;
            m.insert(ModulePresentation::new(torsion, rank as usize), e.coloring_type, e.count);
        }
        Ok(m)
    }

    /// Aligned text in the `⊔n value` style.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} [{}]\n", self.knot, self.invariant);
        let width = self.entries.iter().map(|e| e.count.to_string().len()).max().unwrap_or(1);
        for e in &self.entries {
            let v = match &e.value {
                serde_json::Value::String(s) => s.clone(),
                serde_json::Value::Object(o) if o.contains_key("torsion") => {
                    let torsion: Vec<u64> = serde_json::from_value(o["torsion"].clone()).unwrap_or_default();
                    let rank = o["free_rank"].as_u64().unwrap_or(0) as usize;
                    ModulePresentation::new(torsion, rank).to_string()
                }
                serde_json::Value::Array(a) => {
                    let parts: Vec<String> = a.iter().map(|x| x.as_str().map_or_else(|| x.to_string(), String::from)).collect();
                    format!("([{}])", parts.join("], ["))
                }
                other => other.to_string(),
            };
            out.push_str(&format!("  ⊔{:<width$} {}  ({})\n", e.count, v, e.coloring_type));
        }
        out
    }
}

fn grids(b: &LaidOutBraid, action_quandle: &crate::quandle::FiniteQuandle, cs: &[ClosureColoring]) -> Result<Vec<ColorGrid>> {
    cs.par_iter().map(|c| propagate(b, action_quandle, &c.colors)).collect()
}

/// The module invariant as a canonical multiset.
pub fn module_invariant(b: &LaidOutBraid, cs: &[ClosureColoring], action: &ModuleAction) -> Result<Multiset<ModulePresentation>> {
    Ok(crate::module::module_invariant(b, cs, action)?.into_iter().collect())
}

// ---------------------------------------------------------------------------
// Conjugacy invariant

/// An under-crossing met while walking a component downward.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnderPass {
    pub crossing: usize,
    /// Top position of the walking strand at this crossing.
    pub pos: usize,
}

/// A closure component: its smallest top position and its under-passes in
/// walking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub start: usize,
    pub unders: Vec<UnderPass>,
}

/// Components of the closure ordered by smallest strand, each walked
/// downward from the top of that strand.
pub fn components(b: &LaidOutBraid) -> Vec<Component> {
    let n = b.strands;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut unders = Vec::new();
        let mut pos = start;
        loop {
            seen[pos] = true;
            for (s, c) in b.crossings.iter().enumerate() {
                if pos != c.pos && pos != c.pos + 1 {
                    continue;
                }
                let under_pos = match c.rule {
                    CrossingRule::Inverse => c.pos,
                    CrossingRule::Standard => c.pos + 1,
                };
                if pos == under_pos {
                    unders.push(UnderPass { crossing: s, pos });
                }
                pos = if pos == c.pos { c.pos + 1 } else { c.pos };
            }
            if pos == start {
                break;
            }
        }
        out.push(Component { start, unders });
    }
    out
}

/// `(x, y, ε)` at a crossing: under-arc color before the action, over-arc
/// color and sign.
pub fn crossing_colors(b: &LaidOutBraid, g: &ColorGrid, s: usize) -> (usize, usize, i8) {
    let c = b.crossings[s];
    let j = c.pos;
    match c.rule {
        CrossingRule::Inverse => (g.c(s, j), g.c(s, j + 1), 1),
        CrossingRule::Standard => (g.c(s + 1, j), g.c(s, j), -1),
    }
}

/// Raw products `Ψ_i` for one coloring, one per component.
pub fn conjugacy_products(b: &LaidOutBraid, g: &ColorGrid, beta: &NonAbelianTwoCocycle) -> Vec<usize> {
    let h = beta.group();
    components(b)
        .iter()
        .map(|comp| {
            comp.unders.iter().fold(h.identity(), |acc, u| {
                let (x, y, e) = crossing_colors(b, g, u.crossing);
                let w = beta.beta(x, y);
                h.mul(acc, if e > 0 { w } else { h.inv(w) })
            })
        })
        .collect()
}

/// The conjugacy invariant: per coloring, the tuple of canonical class
/// representatives (rendered by label).
pub fn conjugacy_invariant(b: &LaidOutBraid, cs: &[ClosureColoring], beta: &NonAbelianTwoCocycle) -> Result<Multiset<Vec<String>>> {
    if !beta.verify().is_ok() {
        return Err(Error::CocycleCondition(format!("β fails verification: {:?}", beta.verify())));
    }
    let h = beta.group();
    let gs = grids(b, beta.quandle(), cs)?;
    Ok(gs
        .iter()
        .zip(cs)
        .map(|(g, c)| {
            let t = conjugacy_products(b, g, beta)
                .into_iter()
                .map(|p| h.label(h.class_representative(p)).to_string())
                .collect::<Vec<_>>();
            (t, c.kind)
        })
        .collect())
}

// ---------------------------------------------------------------------------
// 2-cocycle invariant of closed braids

fn add_into(acc: &mut CoeffVec, m: &Mat, v: &CoeffVec, sign: i64, q: u64) {
    let w = m.apply_forms(v, q);
    for (a, b) in acc.iter_mut().zip(&w) {
        a.add_scaled(b, sign);
        *a = a.reduced(q);
    }
}

/// Product of element matrices for strands `hi` down to `lo` (inclusive)
/// at level `s`, the `hi` factor leftmost.
fn prefix(g: &ColorGrid, s: usize, hi: usize, lo: usize, exponent: i8) -> Vec<(usize, i8)> {
    if lo > hi {
        return vec![];
    }
    (lo..=hi).rev().map(|i| (g.c(s, i), exponent)).collect()
}

/// The weight of crossing `s` for a 2-cochain.
pub fn crossing_weight(b: &LaidOutBraid, g: &ColorGrid, s: usize, action: &ModuleAction, kappa: &VectorCochain) -> CoeffVec {
    let n = b.strands;
    let c = b.crossings[s];
    let j = c.pos;
    let q = action.modulus();
    let word = if j + 2 <= n - 1 { prefix(g, s, n - 1, j + 2, 1) } else { vec![] };
    let m = action.word_matrix(&word);
    let mut acc = vec![LinForm::zero(kappa.params().len()); action.rank()];
    match c.rule {
        CrossingRule::Inverse => add_into(&mut acc, &m, kappa.get(&[g.c(s, j), g.c(s, j + 1)]), 1, q),
        CrossingRule::Standard => add_into(&mut acc, &m, kappa.get(&[g.c(s + 1, j), g.c(s, j)]), -1, q),
    }
    acc
}

/// Sum of crossing weights for one coloring.
pub fn cocycle2_contribution(b: &LaidOutBraid, g: &ColorGrid, action: &ModuleAction, kappa: &VectorCochain) -> CoeffVec {
    let q = action.modulus();
    let mut acc = vec![LinForm::zero(kappa.params().len()); action.rank()];
    for s in 0..b.height() {
        for (a, w) in acc.iter_mut().zip(crossing_weight(b, g, s, action, kappa)) {
            a.add_assign(&w);
            *a = a.reduced(q);
        }
    }
    acc
}

fn check_cochain(kappa: &VectorCochain, action: &ModuleAction, degree: usize) -> Result<()> {
    if kappa.degree() != degree {
        return Err(Error::Input(format!("a degree-{degree} cochain is required, got degree {}", kappa.degree())));
    }
    if kappa.size() != action.quandle().size() || kappa.rank() != action.rank() || kappa.modulus() != action.modulus() {
        return Err(Error::Dimension("cochain and action do not match".into()));
    }
    Ok(())
}

/// Per-coloring contributions of the 2-cocycle invariant, in coloring order.
pub fn cocycle2_contributions(
    b: &LaidOutBraid,
    cs: &[ClosureColoring],
    action: &ModuleAction,
    kappa: &VectorCochain,
) -> Result<Vec<CoeffVec>> {
    check_cochain(kappa, action, 2)?;
    let gs = grids(b, action.quandle(), cs)?;
    Ok(gs.par_iter().map(|g| cocycle2_contribution(b, g, action, kappa)).collect())
}

/// The 2-cocycle invariant `Φ_κ` as a canonical multiset.
pub fn cocycle2_invariant(b: &LaidOutBraid, cs: &[ClosureColoring], action: &ModuleAction, kappa: &VectorCochain) -> Result<Multiset<CoeffVec>> {
    let v = cocycle2_contributions(b, cs, action, kappa)?;
    Ok(v.into_iter().zip(cs).map(|(v, c)| (v, c.kind)).collect())
}

/// Whether the coloring lifts to the extension by `κ`: the system
/// `(M - I) a = -affine` is solvable.
pub fn extension_coloring_check(b: &LaidOutBraid, g: &ColorGrid, action: &ModuleAction, kappa: &VectorCochain) -> Result<bool> {
    check_cochain(kappa, action, 2)?;
    if !kappa.params().is_empty() {
        return Err(Error::Input("extension check needs a numeric cochain".into()));
    }
    let f = |x: usize, y: usize| kappa.get(&[x, y]).clone();
    let map = braid_matrix(b, g, action, Some(&f), 0)?;
    let n = map.linear.rows();
    let a = map.linear.sub(&IntMatrix::identity(n))?;
    let rhs: Vec<BigInt> = map.affine.iter().map(|f| BigInt::from(-f.coeffs()[0])).collect();
    Ok(solve_affine(&a, &rhs, action.modulus())?.is_some())
}

// ---------------------------------------------------------------------------
// Twist-spun knots

/// Orientation of the twist-spun surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Reversed,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Forward => "forward",
            Orientation::Reversed => "reversed",
        })
    }
}

/// Which strand of the braid the spinning axis passes through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    First,
    Last,
}

/// Conventions of the twist-spin weights that the formulas leave open.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistConfig {
    pub axis: Axis,
    /// The `u`-th twist acts on cocycle arguments by `* A^(u - 1 + offset)`.
    pub offset: u32,
}

impl TwistConfig {
    /// The calibrated default.
    pub const DEFAULT: TwistConfig = TwistConfig { axis: Axis::Last, offset: 1 };

    pub fn all() -> [TwistConfig; 4] {
        [
            TwistConfig { axis: Axis::Last, offset: 1 },
            TwistConfig { axis: Axis::Last, offset: 0 },
            TwistConfig { axis: Axis::First, offset: 1 },
            TwistConfig { axis: Axis::First, offset: 0 },
        ]
    }

    pub fn id(&self) -> String {
        let a = match self.axis {
            Axis::First => "first",
            Axis::Last => "last",
        };
        format!("{a}/u{}", if self.offset == 1 { "" } else { "-1" })
    }
}

impl Default for TwistConfig {
    fn default() -> Self {
        TwistConfig::DEFAULT
    }
}

/// Contribution of one coloring to `Φ_κ(Tw^ℓ(K))`.
pub fn twistspin_contribution(
    b: &LaidOutBraid,
    g: &ColorGrid,
    action: &ModuleAction,
    kappa: &VectorCochain,
    twists: u32,
    orientation: Orientation,
    cfg: TwistConfig,
) -> CoeffVec {
    let x = action.quandle();
    let n = b.strands;
    let q = action.modulus();
    let axis = match cfg.axis {
        Axis::First => 0,
        Axis::Last => n - 1,
    };
    let a = g.c(0, axis);
    let p = kappa.params().len();
    let mut acc = vec![LinForm::zero(p); action.rank()];
    for s in 0..b.height() {
        let c = b.crossings[s];
        let j = c.pos;
        let positive = c.rule == CrossingRule::Inverse;
        // (prefix word, left triple, left sign, right triple, right sign)
        let (word, left, ls, right, rs) = match orientation {
            Orientation::Forward => {
                let mut word = vec![(a, -1i8)];
                if j + 2 < n {
                    word.extend(prefix(g, s, n - 1, j + 2, 1));
                }
                let f = (j..n).rev().fold(a, |acc, i| x.inv_op(acc, g.c(s, i)));
                if positive {
                    (word, [f, g.c(s, j), g.c(s, j + 1)], -1, [g.c(s, j), g.c(s, j + 1), a], 1)
                } else {
                    (word, [f, g.c(s + 1, j), g.c(s, j)], 1, [g.c(s + 1, j), g.c(s, j), a], -1)
                }
            }
            Orientation::Reversed => {
                let word = prefix(g, s, n - 1, j, -1);
                let f = (j + 2..n).rev().fold(a, |acc, i| x.op(acc, g.c(s, i)));
                if positive {
                    (word, [f, g.c(s + 1, j + 1), g.c(s, j + 1)], 1, [g.c(s + 1, j + 1), g.c(s, j + 1), a], -1)
                } else {
                    (word, [f, g.c(s, j + 1), g.c(s, j)], -1, [g.c(s, j + 1), g.c(s, j), a], 1)
                }
            }
        };
        let m = action.word_matrix(&word);
        for u in 1..=twists {
            let e = (u - 1 + cfg.offset) as i64;
            let act = |t: [usize; 3]| t.map(|v| x.op_pow(v, a, e));
            add_into(&mut acc, &m, kappa.get(&act(left)), ls, q);
            add_into(&mut acc, &m, kappa.get(&act(right)), rs, q);
        }
    }
    acc
}

/// Per-coloring twist-spin contributions, in coloring order.
#[allow(clippy::too_many_arguments)]
pub fn twistspin_contributions(
    b: &LaidOutBraid,
    cs: &[ClosureColoring],
    action: &ModuleAction,
    kappa: &VectorCochain,
    twists: u32,
    orientation: Orientation,
    cfg: TwistConfig,
) -> Result<Vec<CoeffVec>> {
    check_cochain(kappa, action, 3)?;
    if twists < 1 {
        return Err(Error::Input("the number of twists must be at least 1".into()));
    }
    let gs = grids(b, action.quandle(), cs)?;
    Ok(gs.par_iter().map(|g| twistspin_contribution(b, g, action, kappa, twists, orientation, cfg)).collect())
}

/// `Φ_κ(Tw^ℓ(K))` as a canonical multiset.
pub fn twistspin_invariant(
    b: &LaidOutBraid,
    cs: &[ClosureColoring],
    action: &ModuleAction,
    kappa: &VectorCochain,
    twists: u32,
    orientation: Orientation,
    cfg: TwistConfig,
) -> Result<Multiset<CoeffVec>> {
    let v = twistspin_contributions(b, cs, action, kappa, twists, orientation, cfg)?;
    Ok(v.into_iter().zip(cs).map(|(v, c)| (v, c.kind)).collect())
}

/// Whether `Tw^{2k}` equals `k` times `Tw^2`, coloring by coloring.
pub fn twist_scaling_check(
    b: &LaidOutBraid,
    cs: &[ClosureColoring],
    action: &ModuleAction,
    kappa: &VectorCochain,
    k: u32,
    cfg: TwistConfig,
) -> Result<bool> {
    let base = twistspin_contributions(b, cs, action, kappa, 2, Orientation::Forward, cfg)?;
    let big = twistspin_contributions(b, cs, action, kappa, 2 * k, Orientation::Forward, cfg)?;
    let q = action.modulus();
    Ok(base.iter().zip(&big).all(|(u, v)| u.iter().zip(v).all(|(a, b)| a.scaled(k as i64).reduced(q) == *b)))
}

/// Outcome of comparing an invariant with its counterpart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Detection {
    Detected,
    Inconclusive,
}

/// Forward and reversed multisets with the verdict.
#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub first: Multiset<CoeffVec>,
    pub second: Multiset<CoeffVec>,
    pub verdict: Detection,
}

fn compare(first: Multiset<CoeffVec>, second: Multiset<CoeffVec>) -> ComparisonReport {
    let verdict = if first.values() != second.values() { Detection::Detected } else { Detection::Inconclusive };
    ComparisonReport { first, second, verdict }
}

/// Compares forward and reversed twist-spin invariants.
pub fn invertibility_report(
    w: &BraidWord,
    conv: Convention,
    cs: &[ClosureColoring],
    action: &ModuleAction,
    kappa: &VectorCochain,
    twists: u32,
    cfg: TwistConfig,
) -> Result<ComparisonReport> {
    let b = LaidOutBraid::new(w, conv);
    let f = twistspin_invariant(&b, cs, action, kappa, twists, Orientation::Forward, cfg)?;
    let r = twistspin_invariant(&b, cs, action, kappa, twists, Orientation::Reversed, cfg)?;
    Ok(compare(f, r))
}

/// Compares the 2-cocycle invariant of a closed braid with its mirror.
pub fn chirality_report(w: &BraidWord, conv: Convention, action: &ModuleAction, kappa: &VectorCochain, cap: u128) -> Result<ComparisonReport> {
    let x = action.quandle();
    let b = LaidOutBraid::new(w, conv);
    let cs = crate::braid::closure_colorings(&b, x, cap)?;
    let mb = LaidOutBraid::new(&w.mirror(), conv);
    let mcs = crate::braid::closure_colorings(&mb, x, cap)?;
    Ok(compare(cocycle2_invariant(&b, &cs, action, kappa)?, cocycle2_invariant(&mb, &mcs, action, kappa)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{closure_colorings, parse_braid};
    use crate::quandle::dihedral;

    #[test]
    fn hopf_components() {
        let w = parse_braid("1 1", None).unwrap();
        for conv in Convention::all() {
            let b = LaidOutBraid::new(&w, conv);
            let cs = components(&b);
            assert_eq!(cs.len(), 2);
            assert_eq!(cs[0].unders.len() + cs[1].unders.len(), 2);
        }
        let t = LaidOutBraid::new(&parse_braid("1 1 1", None).unwrap(), Convention::DEFAULT);
        let cs = components(&t);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].unders.len(), 3);
    }

    #[test]
    fn multiset_values_merge_types() {
        let m: Multiset<i32> = [(1, ColoringType::Trivial), (1, ColoringType::Nontrivial), (2, ColoringType::Trivial)]
            .into_iter()
            .collect();
        assert_eq!(m.total(), 3);
        assert_eq!(m.values()[&1], 2);
    }

    #[test]
    fn trivial_cochain_gives_zero() {
        let x = dihedral(3).unwrap();
        let action = ModuleAction::wreath(&x, 3).unwrap();
        let zero = VectorCochain::zero(2, 3, 3, 3, vec![]);
        let b = LaidOutBraid::new(&parse_braid("1 1 1", None).unwrap(), Convention::DEFAULT);
        let cs = closure_colorings(&b, &x, 1000).unwrap();
        let m = cocycle2_invariant(&b, &cs, &action, &zero).unwrap();
        assert_eq!(m.values().len(), 1);
        assert_eq!(m.total(), 9);
    }

    #[test]
    fn report_round_trip() {
        let p = vec!["q1".to_string()];
        let mut m = Multiset::new();
        m.insert(vec![LinForm::param(1, 0), LinForm::zero(1), LinForm::param(1, 0).scaled(-1)], ColoringType::Nontrivial, 6);
        let r = InvariantReport::from_vectors("k", "twistspin", &p, &m);
        let text = serde_json::to_string(&r).unwrap();
        let back: InvariantReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.vectors().unwrap(), m);
        assert!(r.to_text().contains("(q1,0,-q1)"));
    }
}
