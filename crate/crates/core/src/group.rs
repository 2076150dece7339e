//! Permutations and finite groups given by multiplication tables.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored by images.
///
/// Products compose right to left: `(p * q)(x) = p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of degree `n` from 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::InvalidPermutation(format!("{cycle:?} on {n} points")));
                }
                images[a - 1] = b - 1;
            }
        }
        Perm::from_images(images)
    }

    /// Parses cycle notation such as `(1 2)(3 4 5)` or `()`; points are 1-based.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let bad = || Error::InvalidPermutation(text.to_string());
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        if rest == "id" || rest == "1" {
            return Ok(Perm::identity(n));
        }
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = open.find(')').ok_or_else(bad)?;
            let body = &open[..close];
            let cycle = body
                .split(|c: char| c == ' ' || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Perm::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self * other * self^-1`.
    pub fn conjugate(&self, other: &Perm) -> Perm {
        self.compose(other).compose(&self.inverse())
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle notation with points shifted by `offset` (use 1 for the usual
    /// 1-based display).
    pub fn cycle_string(&self, offset: usize) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|x| (x + offset).to_string()).collect();
                format!("({})", body.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string(1))
    }
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    size: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
    perms: Option<Vec<Perm>>,
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, checking the axioms.
    pub fn from_table(mult: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let size = mult.len();
        if size == 0 {
            return Err(Error::InvalidSize(0));
        }
        let mut flat = Vec::with_capacity(size * size);
        for row in &mult {
            if row.len() != size || row.iter().any(|&v| v >= size) {
                return Err(Error::MalformedTable("group multiplication table".into()));
            }
            flat.extend_from_slice(row);
        }
        let identity = (0..size)
            .find(|&e| (0..size).all(|a| flat[e * size + a] == a && flat[a * size + e] == a))
            .ok_or_else(|| Error::GroupAxiom("no identity element".into()))?;
        let mut inv = vec![usize::MAX; size];
        for a in 0..size {
            inv[a] = (0..size)
                .find(|&b| flat[a * size + b] == identity && flat[b * size + a] == identity)
                .ok_or_else(|| Error::GroupAxiom(format!("element {a} has no inverse")))?;
        }
        for a in 0..size {
            for b in 0..size {
                let ab = flat[a * size + b];
                for c in 0..size {
                    if flat[ab * size + c] != flat[a * size + flat[b * size + c]] {
                        return Err(Error::GroupAxiom(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let labels = labels.unwrap_or_else(|| (0..size).map(|i| i.to_string()).collect());
        Ok(FiniteGroup { size, mult: flat, inv, identity, labels, perms: None })
    }

    /// The group formed by a list of permutations that is closed under
    /// composition. Element order follows the list.
    pub fn from_permutations(elements: Vec<Perm>, offset: usize) -> Result<Self> {
        let size = elements.len();
        let index: HashMap<&Perm, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        if index.len() != size {
            return Err(Error::GroupAxiom("duplicate permutations".into()));
        }
        let mut mult = Vec::with_capacity(size * size);
        for a in &elements {
            for b in &elements {
                let ab = a.compose(b);
                let k = *index
                    .get(&ab)
                    .ok_or_else(|| Error::GroupAxiom(format!("{a} * {b} is not in the set")))?;
                mult.push(k);
            }
        }
        let identity = elements
            .iter()
            .position(|p| p.is_identity())
            .ok_or_else(|| Error::GroupAxiom("identity missing".into()))?;
        let inv = elements.iter().map(|p| index[&p.inverse()]).collect();
        let labels = elements.iter().map(|p| p.cycle_string(offset)).collect();
        Ok(FiniteGroup { size, mult, inv, identity, labels, perms: Some(elements) })
    }

    /// The symmetric group on `n` points, elements in lexicographic order of
    /// their image lists (so the identity is element 0).
    pub fn symmetric(n: usize) -> Self {
        Self::symmetric_with_offset(n, 1)
    }

    /// Symmetric group whose display labels name the points `offset..offset+n`.
    pub fn symmetric_with_offset(n: usize, offset: usize) -> Self {
        let mut elements = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            elements.push(Perm(current.clone()));
            if !next_permutation(&mut current) {
                break;
            }
        }
        FiniteGroup::from_permutations(elements, offset).expect("symmetric group is closed")
    }

    /// The opposite group, with `a · b` computed as `b * a`. For permutation
    /// groups this reads products left to right.
    pub fn opposite(&self) -> Self {
        let n = self.size;
        let mut mult = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mult[a * n + b] = self.mult[b * n + a];
            }
        }
        FiniteGroup { mult, ..self.clone() }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.size + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, e: i32) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        (0..e.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    /// `g a g^-1`.
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn perms(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub fn index_of_perm(&self, p: &Perm) -> Option<usize> {
        self.perms.as_ref()?.iter().position(|q| q == p)
    }

    /// Canonical conjugacy-class representative. Permutation groups use the
    /// least cycle notation, so `(3 4)` stands for every transposition;
    /// other groups use the smallest element index.
    pub fn class_representative(&self, a: usize) -> usize {
        let class = (0..self.size).map(|g| self.conjugate(g, a));
        match &self.perms {
            Some(_) => class.min_by(|x, y| self.labels[*x].cmp(&self.labels[*y]).then(x.cmp(y))).unwrap_or(a),
            None => class.min().unwrap_or(a),
        }
    }

    /// Table mapping each element to its class representative.
    pub fn class_representatives(&self) -> Vec<usize> {
        (0..self.size).map(|a| self.class_representative(a)).collect()
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_orders() {
        assert_eq!(FiniteGroup::symmetric(3).size(), 6);
        assert_eq!(FiniteGroup::symmetric(5).size(), 120);
        assert_eq!(FiniteGroup::symmetric(1).size(), 1);
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[&[2, 3]]).unwrap();
        // (1 2)(2 3) sends 3 -> 2 -> 1
        assert_eq!(a.compose(&b).apply(2), 0);
        assert_eq!(a.compose(&b).to_string(), "(1 2 3)");
    }

    #[test]
    fn parse_round_trip() {
        let p = Perm::parse_cycles("(1 4)(2 3 5)", 5).unwrap();
        assert_eq!(p.to_string(), "(1 4)(2 3 5)");
        assert!(Perm::parse_cycles("()", 4).unwrap().is_identity());
        assert!(Perm::parse_cycles("(1 6)", 5).is_err());
    }

    #[test]
    fn class_representatives_of_s3() {
        let g = FiniteGroup::symmetric(3);
        let reps = g.class_representatives();
        let mut distinct = reps.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 3);
        assert_eq!(reps[g.identity()], g.identity());
        let t = g.index_of_perm(&Perm::parse_cycles("(2 3)", 3).unwrap()).unwrap();
        assert_eq!(g.label(reps[t]), "(1 2)");
    }

    #[test]
    fn table_rejects_non_associative() {
        // a 2-element loop without associativity cannot be built from a valid
        // table, so use a table with no identity instead
        let bad = vec![vec![1, 0], vec![1, 1]];
        assert!(FiniteGroup::from_table(bad, None).is_err());
    }
}
