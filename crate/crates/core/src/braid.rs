//! Braid words, crossing conventions, color propagation and closure
//! colorings.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quandle::FiniteQuandle;

/// Default cap on brute-force candidate vectors.
pub const DEFAULT_COLORING_CAP: u128 = 100_000_000;

/// A braid word on `strands` strings. Letter `(j, +1)` is `σ_j`, `(j, -1)`
/// its inverse; positions are 1-based. The first letter is the topmost
/// crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidSize(0));
        }
        for (i, &(j, e)) in letters.iter().enumerate() {
            if j == 0 || j >= strands {
                return Err(Error::Parse { index: i, message: format!("generator {j} out of range for {strands} strands") });
            }
            if e != 1 && e != -1 {
                return Err(Error::Parse { index: i, message: format!("exponent {e} is not +1 or -1") });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters in reverse order with the same signs.
    pub fn reversed(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().copied().collect() }
    }

    /// The inverse braid: reversed order, flipped signs.
    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|&(j, e)| (j, -e)).collect() }
    }

    /// Mirror image: every sign flipped.
    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|&(j, e)| (j, -e)).collect() }
    }

    /// `g^-1 w g` as a word.
    pub fn conjugate(&self, g: &BraidWord) -> Result<BraidWord> {
        if g.strands != self.strands {
            return Err(Error::StrandMismatch(self.strands, g.strands));
        }
        let mut letters = g.inverse().letters;
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&g.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `w σ_k^{±1}` on `k + 1` strands.
    pub fn stabilize(&self, sign: i8) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push((self.strands, if sign < 0 { -1 } else { 1 }));
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Same letters on more strands.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Strand permutation of the closure: `perm[i]` is the bottom position
    /// reached from top position `i`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        // follow each top position down through the letters
        for &(j, _) in &self.letters {
            for p in perm.iter_mut() {
                if *p == j - 1 {
                    *p = j;
                } else if *p == j {
                    *p = j - 1;
                }
            }
        }
        perm
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|&(j, e)| format!("{}", j as i64 * e as i64)).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parses whitespace-separated nonzero integers, with optional
/// parenthesized groups raised to a power: `(1 -2)^4`.
///
/// The strand count is `max |j| + 1` unless `strands` is given.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let tokens = tokenize(text)?;
    let mut pos = 0;
    let ints = parse_seq(&tokens, &mut pos, 0)?;
    if pos != tokens.len() {
        return Err(Error::Parse { index: pos, message: "unbalanced ')'".into() });
    }
    let mut letters = Vec::with_capacity(ints.len());
    for (index, v) in ints {
        if v == 0 {
            return Err(Error::Parse { index, message: "generator 0 is not allowed".into() });
        }
        letters.push((v.unsigned_abs() as usize, if v > 0 { 1 } else { -1 }));
    }
    let needed = letters.iter().map(|&(j, _)| j + 1).max().unwrap_or(1);
    let k = match strands {
        Some(k) => {
            if let Some(i) = letters.iter().position(|&(j, _)| j >= k) {
                return Err(Error::Parse { index: i, message: format!("|{}| needs at least {} strands", letters[i].0, letters[i].0 + 1) });
            }
            k
        }
        None => needed,
    };
    BraidWord::new(k, letters)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i64),
    Open,
    Close(u32),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let spaced = text.replace('(', " ( ").replace(')', " ) ").replace('^', " ^ ");
    let raw: Vec<&str> = spaced.split_whitespace().collect();
    let mut i = 0;
    while i < raw.len() {
        let t = raw[i];
        let index = out.len();
        match t {
            "(" => out.push((index, Tok::Open)),
            ")" => {
                let mut power = 1u32;
                if raw.get(i + 1) == Some(&"^") {
                    let p = raw.get(i + 2).ok_or(Error::Parse { index, message: "missing exponent".into() })?;
                    power = p.parse().map_err(|_| Error::Parse { index, message: format!("bad exponent {p:?}") })?;
                    i += 2;
                }
                out.push((index, Tok::Close(power)));
            }
            _ => {
                let v: i64 = t.parse().map_err(|_| Error::Parse { index, message: format!("not an integer: {t:?}") })?;
                out.push((index, Tok::Int(v)));
            }
        }
        i += 1;
    }
    Ok(out)
}

fn parse_seq(tokens: &[(usize, Tok)], pos: &mut usize, depth: usize) -> Result<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    while *pos < tokens.len() {
        let (index, tok) = &tokens[*pos];
        match tok {
            Tok::Int(v) => {
                out.push((*index, *v));
                *pos += 1;
            }
            Tok::Open => {
                *pos += 1;
                let inner = parse_seq(tokens, pos, depth + 1)?;
                match tokens.get(*pos) {
                    Some((_, Tok::Close(p))) => {
                        for _ in 0..*p {
                            out.extend_from_slice(&inner);
                        }
                        *pos += 1;
                    }
                    _ => return Err(Error::Parse { index: *index, message: "unclosed '('".into() }),
                }
            }
            Tok::Close(_) => {
                if depth == 0 {
                    return Err(Error::Parse { index: *index, message: "unbalanced ')'".into() });
                }
                return Ok(out);
            }
        }
    }
    Ok(out)
}

/// How a crossing relates the colors below it to the colors above it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CrossingRule {
    /// Below `(a, b)`, above `(b, a * b)`. The under-strand enters from
    /// the top at position `j + 1`.
    Standard,
    /// Below `(a, b)`, above `(b ∗̄ a, a)`; equivalently above `(a, b)`,
    /// below `(b, a * b)`. The under-strand enters from the top at `j`.
    Inverse,
}

impl CrossingRule {
    pub fn flipped(self) -> Self {
        match self {
            CrossingRule::Standard => CrossingRule::Inverse,
            CrossingRule::Inverse => CrossingRule::Standard,
        }
    }

    /// Sign of the crossing for downward-oriented strands: `Inverse`
    /// crossings are positive.
    pub fn sign(self) -> i8 {
        match self {
            CrossingRule::Standard => -1,
            CrossingRule::Inverse => 1,
        }
    }
}

/// Order in which word letters are laid out from top to bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reading {
    /// First letter is the topmost crossing.
    TopDown,
    /// First letter is the bottom crossing.
    BottomUp,
}

/// Maps letters of a word to geometric crossings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Convention {
    pub positive_letter: CrossingRule,
    pub reading: Reading,
}

impl Convention {
    /// The calibrated default (see the `calibration` module).
    pub const DEFAULT: Convention = Convention { positive_letter: CrossingRule::Inverse, reading: Reading::TopDown };

    pub fn all() -> [Convention; 4] {
        [
            Convention { positive_letter: CrossingRule::Standard, reading: Reading::TopDown },
            Convention { positive_letter: CrossingRule::Inverse, reading: Reading::TopDown },
            Convention { positive_letter: CrossingRule::Standard, reading: Reading::BottomUp },
            Convention { positive_letter: CrossingRule::Inverse, reading: Reading::BottomUp },
        ]
    }

    /// Short identifier: `std-td`, `inv-td`, `std-bu`, `inv-bu`.
    pub fn id(&self) -> &'static str {
        match (self.positive_letter, self.reading) {
            (CrossingRule::Standard, Reading::TopDown) => "std-td",
            (CrossingRule::Inverse, Reading::TopDown) => "inv-td",
            (CrossingRule::Standard, Reading::BottomUp) => "std-bu",
            (CrossingRule::Inverse, Reading::BottomUp) => "inv-bu",
        }
    }

    pub fn from_id(id: &str) -> Result<Self> {
        Convention::all()
            .into_iter()
            .find(|c| c.id() == id)
            .ok_or_else(|| Error::Input(format!("unknown convention {id:?}; expected std-td, inv-td, std-bu or inv-bu")))
    }

    /// The crossings of `w` from top to bottom as `(0-based position j,
    /// rule)`, acting on strands `j, j + 1`.
    pub fn crossings(&self, w: &BraidWord) -> Vec<Crossing> {
        let rule = |e: i8| if e > 0 { self.positive_letter } else { self.positive_letter.flipped() };
        let map = |&(j, e): &(usize, i8)| Crossing { pos: j - 1, rule: rule(e) };
        match self.reading {
            Reading::TopDown => w.letters().iter().map(map).collect(),
            Reading::BottomUp => w.letters().iter().rev().map(map).collect(),
        }
    }
}

impl Default for Convention {
    fn default() -> Self {
        Convention::DEFAULT
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One crossing between strands `pos` and `pos + 1` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub pos: usize,
    pub rule: CrossingRule,
}

/// A braid laid out top to bottom under a convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaidOutBraid {
    pub strands: usize,
    pub crossings: Vec<Crossing>,
}

impl LaidOutBraid {
    pub fn new(w: &BraidWord, conv: Convention) -> Self {
        LaidOutBraid { strands: w.strands(), crossings: conv.crossings(w) }
    }

    pub fn height(&self) -> usize {
        self.crossings.len()
    }
}

/// Colors of every level: `levels[0]` is the top, `levels[h]` the bottom;
/// `levels[s]` holds the colors immediately above crossing `s` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorGrid {
    pub levels: Vec<Vec<usize>>,
}

impl ColorGrid {
    /// Color of string `i` immediately above crossing `s` (both 0-based).
    #[inline]
    pub fn c(&self, s: usize, i: usize) -> usize {
        self.levels[s][i]
    }

    pub fn top(&self) -> &[usize] {
        &self.levels[0]
    }

    pub fn bottom(&self) -> &[usize] {
        self.levels.last().expect("grid has at least one level")
    }
}

/// Colors above a crossing given the colors below it.
#[inline]
pub fn cross_up(x: &FiniteQuandle, rule: CrossingRule, a: usize, b: usize) -> (usize, usize) {
    match rule {
        CrossingRule::Standard => (b, x.op(a, b)),
        CrossingRule::Inverse => (x.inv_op(b, a), a),
    }
}

/// Colors below a crossing given the colors above it.
#[inline]
pub fn cross_down(x: &FiniteQuandle, rule: CrossingRule, a: usize, b: usize) -> (usize, usize) {
    match rule {
        CrossingRule::Standard => (x.inv_op(b, a), a),
        CrossingRule::Inverse => (b, x.op(a, b)),
    }
}

/// Propagates bottom colors upward through every crossing.
pub fn propagate(b: &LaidOutBraid, x: &FiniteQuandle, bottom: &[usize]) -> Result<ColorGrid> {
    if bottom.len() != b.strands {
        return Err(Error::StrandMismatch(b.strands, bottom.len()));
    }
    if let Some(&bad) = bottom.iter().find(|&&c| c >= x.size()) {
        return Err(Error::Input(format!("color {bad} out of range")));
    }
    let h = b.height();
    let mut levels = vec![Vec::new(); h + 1];
    levels[h] = bottom.to_vec();
    for s in (0..h).rev() {
        let mut row = levels[s + 1].clone();
        let Crossing { pos, rule } = b.crossings[s];
        let (u, v) = cross_up(x, rule, row[pos], row[pos + 1]);
        row[pos] = u;
        row[pos + 1] = v;
        levels[s] = row;
    }
    Ok(ColorGrid { levels })
}

/// Propagates top colors downward.
pub fn propagate_down(b: &LaidOutBraid, x: &FiniteQuandle, top: &[usize]) -> Result<Vec<usize>> {
    if top.len() != b.strands {
        return Err(Error::StrandMismatch(b.strands, top.len()));
    }
    let mut row = top.to_vec();
    for c in &b.crossings {
        let (u, v) = cross_down(x, c.rule, row[c.pos], row[c.pos + 1]);
        row[c.pos] = u;
        row[c.pos + 1] = v;
    }
    Ok(row)
}

fn top_from_bottom(b: &LaidOutBraid, x: &FiniteQuandle, row: &mut [usize]) {
    for c in b.crossings.iter().rev() {
        let (u, v) = cross_up(x, c.rule, row[c.pos], row[c.pos + 1]);
        row[c.pos] = u;
        row[c.pos + 1] = v;
    }
}

/// Whether a closure coloring is monochromatic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColoringType {
    Trivial,
    Nontrivial,
}

impl fmt::Display for ColoringType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColoringType::Trivial => "trivial",
            ColoringType::Nontrivial => "nontrivial",
        })
    }
}

/// A bottom color vector fixed by the braid.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClosureColoring {
    pub colors: Vec<usize>,
    pub kind: ColoringType,
}

impl ClosureColoring {
    fn new(colors: Vec<usize>) -> Self {
        let kind = if colors.iter().all(|&c| c == colors[0]) { ColoringType::Trivial } else { ColoringType::Nontrivial };
        ClosureColoring { colors, kind }
    }
}

/// All bottom vectors `x` with `w · x = x`, in lexicographic order.
///
/// Alexander quandles use the linear fast path; everything else is brute
/// force over `|X|^k`, refused above `cap` candidates.
pub fn closure_colorings(b: &LaidOutBraid, x: &FiniteQuandle, cap: u128) -> Result<Vec<ClosureColoring>> {
    if x.alexander_data().is_some() {
        return closure_colorings_linear(b, x);
    }
    closure_colorings_brute(b, x, cap)
}

/// Brute-force enumeration, parallel over the first color.
pub fn closure_colorings_brute(b: &LaidOutBraid, x: &FiniteQuandle, cap: u128) -> Result<Vec<ClosureColoring>> {
    let n = x.size();
    let k = b.strands;
    let candidates = (n as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if candidates > cap {
        return Err(Error::TooLarge { candidates, cap });
    }
    let found: Vec<Vec<Vec<usize>>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut v = vec![0usize; k];
            v[0] = first;
            let mut row = vec![0usize; k];
            loop {
                row.copy_from_slice(&v);
                top_from_bottom(b, x, &mut row);
                if row == v {
                    out.push(v.clone());
                }
                // odometer over positions 1..k, last position fastest
                let mut i = k;
                loop {
                    if i == 1 {
                        return out;
                    }
                    i -= 1;
                    v[i] += 1;
                    if v[i] < n {
                        break;
                    }
                    v[i] = 0;
                }
            }
        })
        .collect();
    Ok(found.into_iter().flatten().map(ClosureColoring::new).collect())
}

/// Fixed vectors of an Alexander quandle coloring, found by solving the
/// linear system `(T - I) v = 0` over `Z_n`, where `T` is the action of the
/// braid on `(Z_n[t]/(h))^k` viewed as `k d` coordinates.
pub fn closure_colorings_linear(b: &LaidOutBraid, x: &FiniteQuandle) -> Result<Vec<ClosureColoring>> {
    use crate::linalg::{diagonalize_with_transforms, IntMatrix};
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{ToPrimitive, Zero};

    let data = x.alexander_data().ok_or_else(|| Error::Input("not an Alexander quandle".into()))?.clone();
    let (n, d, k) = (data.modulus as i64, data.degree, b.strands);
    let dim = k * d;
    let t = |v: &[i64]| -> Vec<i64> {
        (0..d).map(|r| (0..d).map(|c| data.t_matrix[r * d + c] * v[c]).sum::<i64>().rem_euclid(n)).collect()
    };
    // columns: images of basis vectors under the upward braid map; every
    // crossing map is linear because a * b = t a + (1 - t) b
    let mut cols = Vec::with_capacity(dim);
    for e in 0..dim {
        let mut row: Vec<Vec<i64>> = (0..k).map(|_| vec![0; d]).collect();
        row[e / d][e % d] = 1;
        for c in b.crossings.iter().rev() {
            let (a, bb) = (row[c.pos].clone(), row[c.pos + 1].clone());
            let (ta, tb) = (t(&a), t(&bb));
            match c.rule {
                CrossingRule::Standard => {
                    // (a, b) -> (b, t a + b - t b)
                    row[c.pos] = bb.clone();
                    row[c.pos + 1] = (0..d).map(|i| (ta[i] + bb[i] - tb[i]).rem_euclid(n)).collect();
                }
                CrossingRule::Inverse => {
                    // b ∗̄ a = t^-1 (b - a) + a
                    let diff: Vec<i64> = (0..d).map(|i| (bb[i] - a[i]).rem_euclid(n)).collect();
                    let tinv;
                    // t has finite order on the finite module
                    let mut prev = diff.clone();
                    loop {
                        let next = t(&prev);
                        if next == diff {
                            tinv = prev;
                            break;
                        }
                        prev = next;
                    }
                    row[c.pos] = (0..d).map(|i| (tinv[i] + a[i]).rem_euclid(n)).collect();
                    row[c.pos + 1] = a;
                }
            }
        }
        cols.push(row.concat());
    }
    let a = IntMatrix::from_fn(dim, dim + dim, |i, j| {
        if j < dim {
            BigInt::from(cols[j][i] - if i == j { 1 } else { 0 })
        } else if j - dim == i {
            BigInt::from(n)
        } else {
            BigInt::zero()
        }
    });
    // kernel of [A | nI] over Z, projected to the first block and reduced
    let dg = diagonalize_with_transforms(&a);
    let nb = BigInt::from(n);
    let mut gens: Vec<Vec<i64>> = Vec::new();
    for j in 0..a.cols() {
        let dj = dg.diagonal.get(j).cloned().unwrap_or_else(BigInt::zero);
        if dj.is_zero() {
            let g: Vec<i64> =
                (0..dim).map(|i| dg.v.get(i, j).mod_floor(&nb).to_i64().expect("reduced entry")).collect();
            gens.push(g);
        }
    }
    // span of generators over Z_n by closure
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(vec![0i64; dim]);
    let mut frontier = vec![vec![0i64; dim]];
    while let Some(v) = frontier.pop() {
        for g in &gens {
            let w: Vec<i64> = v.iter().zip(g).map(|(a, b)| (a + b).rem_euclid(n)).collect();
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    let mut out: Vec<Vec<usize>> =
        seen.into_iter().map(|v| (0..k).map(|s| data.encode(&v[s * d..(s + 1) * d])).collect()).collect();
    out.sort();
    Ok(out.into_iter().map(ClosureColoring::new).collect())
}

/// Cycles of the closure permutation, each listed from its smallest strand
/// (0-based), ordered by smallest strand.
pub fn closure_components(w: &BraidWord) -> Vec<Vec<usize>> {
    let perm = w.permutation();
    let mut seen = vec![false; w.strands()];
    let mut out = Vec::new();
    for start in 0..w.strands() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        out.push(cycle);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quandle::{alexander_scalar, dihedral, trivial};

    #[test]
    fn parse_examples() {
        let t = parse_braid("1 1 1", None).unwrap();
        assert_eq!(t.strands(), 2);
        assert_eq!(t.letters(), &[(1, 1), (1, 1), (1, 1)]);
        let f = parse_braid("1 -2 1 -2", None).unwrap();
        assert_eq!(f.strands(), 3);
        assert_eq!(f.letters()[1], (2, -1));
        assert!(matches!(parse_braid("0", None), Err(Error::Parse { index: 0, .. })));
        assert!(matches!(parse_braid("1 x", None), Err(Error::Parse { index: 1, .. })));
        assert!(matches!(parse_braid("1 3", Some(3)), Err(Error::Parse { index: 1, .. })));
        assert_eq!(parse_braid("", Some(1)).unwrap().strands(), 1);
    }

    #[test]
    fn parse_powers() {
        let w = parse_braid("(1 -2)^4", None).unwrap();
        assert_eq!(w.to_string(), "1 -2 1 -2 1 -2 1 -2");
        let w = parse_braid("1 (2 (3)^2)^2", None).unwrap();
        assert_eq!(w.to_string(), "1 2 3 3 2 3 3");
        assert!(parse_braid("(1 2", None).is_err());
        assert!(parse_braid("1 2)", None).is_err());
    }

    #[test]
    fn markov_helpers() {
        let t = parse_braid("1 1 1", None).unwrap();
        assert_eq!(t.stabilize(1).to_string(), "1 1 1 2");
        assert_eq!(t.stabilize(1).strands(), 3);
        assert_eq!(t.conjugate(&BraidWord::empty(2).unwrap()).unwrap(), t);
        assert_eq!(parse_braid("1 -2", None).unwrap().mirror().to_string(), "-1 2");
        assert!(t.conjugate(&BraidWord::empty(3).unwrap()).is_err());
    }

    #[test]
    fn propagate_trivia() {
        let r3 = dihedral(3).unwrap();
        for conv in Convention::all() {
            let e = LaidOutBraid::new(&BraidWord::empty(3).unwrap(), conv);
            assert_eq!(propagate(&e, &r3, &[0, 1, 2]).unwrap().top(), &[0, 1, 2]);
            let w = LaidOutBraid::new(&parse_braid("1 -2 1 2 2", None).unwrap(), conv);
            assert_eq!(propagate(&w, &r3, &[1, 1, 1]).unwrap().top(), &[1, 1, 1]);
        }
    }

    #[test]
    fn trefoil_coloring_by_hand() {
        // (0,1) -> (1, 0*1=2) -> (2, 1*2=0) -> (0, 2*0=1)
        let r3 = dihedral(3).unwrap();
        let conv = Convention { positive_letter: CrossingRule::Standard, reading: Reading::TopDown };
        let w = LaidOutBraid::new(&parse_braid("1 1 1", None).unwrap(), conv);
        let g = propagate(&w, &r3, &[0, 1]).unwrap();
        assert_eq!(g.levels, vec![vec![0, 1], vec![2, 0], vec![1, 2], vec![0, 1]]);
    }

    #[test]
    fn down_inverts_up() {
        let r5 = dihedral(5).unwrap();
        let w = LaidOutBraid::new(&parse_braid("1 -2 3 -1 2", None).unwrap(), Convention::DEFAULT);
        let g = propagate(&w, &r5, &[0, 3, 1, 4]).unwrap();
        assert_eq!(propagate_down(&w, &r5, g.top()).unwrap(), vec![0, 3, 1, 4]);
    }

    #[test]
    fn coloring_counts() {
        let r3 = dihedral(3).unwrap();
        let r5 = dihedral(5).unwrap();
        for conv in Convention::all() {
            let t = LaidOutBraid::new(&parse_braid("1 1 1", None).unwrap(), conv);
            let cs = closure_colorings(&t, &r3, DEFAULT_COLORING_CAP).unwrap();
            assert_eq!(cs.len(), 9);
            assert_eq!(cs.iter().filter(|c| c.kind == ColoringType::Trivial).count(), 3);
            let f = LaidOutBraid::new(&parse_braid("1 -2 1 -2", None).unwrap(), conv);
            assert_eq!(closure_colorings(&f, &r5, DEFAULT_COLORING_CAP).unwrap().len(), 25);
            assert_eq!(closure_colorings(&f, &r3, DEFAULT_COLORING_CAP).unwrap().len(), 3);
        }
        let one = trivial(1).unwrap();
        let w = LaidOutBraid::new(&parse_braid("1 2 -1 3", None).unwrap(), Convention::DEFAULT);
        assert_eq!(closure_colorings(&w, &one, DEFAULT_COLORING_CAP).unwrap().len(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let r5 = dihedral(5).unwrap();
        let w = LaidOutBraid::new(&parse_braid("1 2 3", None).unwrap(), Convention::DEFAULT);
        assert!(matches!(closure_colorings(&w, &r5, 100), Err(Error::TooLarge { candidates: 625, cap: 100 })));
    }

    #[test]
    fn linear_path_matches_brute_force() {
        let a = alexander_scalar(5, 2).unwrap();
        for text in ["1 1 1", "1 -2 1 -2", "1 1 1 1 1", "1 2 -1 2"] {
            let w = LaidOutBraid::new(&parse_braid(text, None).unwrap(), Convention::DEFAULT);
            assert_eq!(
                closure_colorings_linear(&w, &a).unwrap(),
                closure_colorings_brute(&w, &a, DEFAULT_COLORING_CAP).unwrap(),
                "{text}"
            );
        }
    }

    #[test]
    fn components() {
        assert_eq!(closure_components(&parse_braid("1 1", None).unwrap()).len(), 2);
        assert_eq!(closure_components(&parse_braid("1 1 1", None).unwrap()).len(), 1);
        assert_eq!(closure_components(&BraidWord::empty(3).unwrap()).len(), 3);
        assert_eq!(closure_components(&parse_braid("1 2", None).unwrap()), vec![vec![0, 2, 1]]);
    }
}
