//! Finite quandles: construction, axiom verification, inner automorphisms
//! and dynamical extensions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Perm};

/// Outcome of an exhaustive axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verification {
    Ok,
    /// Axiom I: `a * a != a`.
    Idempotence { a: usize },
    /// Axiom II: the right translation by `b` is not injective, `a1 * b == a2 * b`.
    RightInvertibility { a1: usize, a2: usize, b: usize },
    /// Axiom III: `(a*b)*c != (a*c)*(b*c)`.
    SelfDistributivity { a: usize, b: usize, c: usize },
}

impl Verification {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verification::Ok)
    }

    /// Axiom number violated, `None` if all axioms hold.
    pub fn axiom(&self) -> Option<u8> {
        match self {
            Verification::Ok => None,
            Verification::Idempotence { .. } => Some(1),
            Verification::RightInvertibility { .. } => Some(2),
            Verification::SelfDistributivity { .. } => Some(3),
        }
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verification::Ok => write!(f, "ok"),
            Verification::Idempotence { a } => write!(f, "axiom I fails: {a}*{a} != {a}"),
            Verification::RightInvertibility { a1, a2, b } => {
                write!(f, "axiom II fails: {a1}*{b} == {a2}*{b}")
            }
            Verification::SelfDistributivity { a, b, c } => {
                write!(f, "axiom III fails at ({a}, {b}, {c})")
            }
        }
    }
}

/// Exhaustive check of the three quandle axioms on a row-major table, with
/// early exit on the first violation in lexicographic order.
pub fn verify_quandle(op: &[Vec<usize>]) -> Result<Verification> {
    let n = op.len();
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    for (a, row) in op.iter().enumerate() {
        if row.len() != n {
            return Err(Error::MalformedTable(format!("row {a} has length {}", row.len())));
        }
        if let Some(b) = row.iter().position(|&v| v >= n) {
            return Err(Error::MalformedTable(format!("entry ({a}, {b}) = {} out of range", row[b])));
        }
    }
    for a in 0..n {
        if op[a][a] != a {
            return Ok(Verification::Idempotence { a });
        }
    }
    for b in 0..n {
        let mut preimage = vec![usize::MAX; n];
        for a in 0..n {
            let v = op[a][b];
            if preimage[v] != usize::MAX {
                return Ok(Verification::RightInvertibility { a1: preimage[v], a2: a, b });
            }
            preimage[v] = a;
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = op[a][b];
            for c in 0..n {
                if op[ab][c] != op[op[a][c]][op[b][c]] {
                    return Ok(Verification::SelfDistributivity { a, b, c });
                }
            }
        }
    }
    Ok(Verification::Ok)
}

/// Linear data of an Alexander quandle `Z_n[t, t^-1]/(h)`, used by the
/// linear coloring fast path. Elements are coefficient vectors in `(Z_n)^d`
/// with index `sum v_i n^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderData {
    pub modulus: u64,
    pub degree: usize,
    /// Matrix of multiplication by `t`, row-major `degree x degree`.
    pub t_matrix: Vec<i64>,
}

impl AlexanderData {
    pub fn decode(&self, index: usize) -> Vec<i64> {
        let n = self.modulus as usize;
        let mut v = Vec::with_capacity(self.degree);
        let mut r = index;
        for _ in 0..self.degree {
            v.push((r % n) as i64);
            r /= n;
        }
        v
    }

    pub fn encode(&self, v: &[i64]) -> usize {
        let n = self.modulus as i64;
        v.iter().rev().fold(0usize, |acc, &c| acc * n as usize + c.rem_euclid(n) as usize)
    }
}

/// A finite quandle with its operation table and the derived inverse
/// operation `a ∗̄ b` (the unique `c` with `c * b = a`).
#[derive(Clone, Debug)]
pub struct FiniteQuandle {
    name: String,
    size: usize,
    op: Vec<usize>,
    inv_op: Vec<usize>,
    labels: Option<Vec<String>>,
    perms: Option<Vec<Perm>>,
    alexander: Option<AlexanderData>,
}

impl PartialEq for FiniteQuandle {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.op == other.op
    }
}

impl FiniteQuandle {
    /// Builds a quandle from a row-major table (`op[a][b] = a * b`),
    /// rejecting tables that violate an axiom.
    pub fn from_table(name: impl Into<String>, op: Vec<Vec<usize>>) -> Result<Self> {
        match verify_quandle(&op)? {
            Verification::Ok => {}
            v => {
                return Err(Error::QuandleAxiom { axiom: v.axiom().unwrap_or(0), witness: v.to_string() })
            }
        }
        let size = op.len();
        let flat: Vec<usize> = op.into_iter().flatten().collect();
        let mut inv_op = vec![0; size * size];
        for a in 0..size {
            for b in 0..size {
                inv_op[flat[a * size + b] * size + b] = a;
            }
        }
        Ok(FiniteQuandle {
            name: name.into(),
            size,
            op: flat,
            inv_op,
            labels: None,
            perms: None,
            alexander: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::Dimension(format!("{} labels for {} elements", labels.len(), self.size)));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Attaches a permutation realization; labels become cycle notation.
    pub fn with_permutations(mut self, perms: Vec<Perm>) -> Result<Self> {
        if perms.len() != self.size {
            return Err(Error::Dimension(format!("{} permutations for {} elements", perms.len(), self.size)));
        }
        for a in 0..self.size {
            for b in 0..self.size {
                if perms[b].conjugate(&perms[a]) != perms[self.op(a, b)] {
                    return Err(Error::Construction(format!(
                        "permutation labels do not realize {a} * {b} by conjugation"
                    )));
                }
            }
        }
        self.labels = Some(perms.iter().map(|p| p.to_string()).collect());
        self.perms = Some(perms);
        Ok(self)
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.op[a * self.size + b]
    }

    /// `a ∗̄ b`.
    #[inline]
    pub fn inv_op(&self, a: usize, b: usize) -> usize {
        self.inv_op[a * self.size + b]
    }

    /// `a * b^e`: `e`-fold right action, negative powers use `∗̄`.
    pub fn op_pow(&self, a: usize, b: usize, e: i64) -> usize {
        let mut x = a;
        for _ in 0..e.unsigned_abs() {
            x = if e > 0 { self.op(x, b) } else { self.inv_op(x, b) };
        }
        x
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.op.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn perms(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub fn alexander_data(&self) -> Option<&AlexanderData> {
        self.alexander.as_ref()
    }

    /// `op(a, b) == a` for all pairs.
    pub fn is_trivial(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.op(a, b) == a))
    }

    /// `a ∗̄ b == a * b` for all pairs.
    pub fn is_involutory(&self) -> bool {
        self.op == self.inv_op
    }

    pub fn verify(&self) -> Verification {
        verify_quandle(&self.table()).expect("stored table is well formed")
    }

    /// The inner automorphism `x -> x * y`.
    pub fn inner_automorphism(&self, y: usize) -> Result<Vec<usize>> {
        if y >= self.size {
            return Err(Error::Input(format!("element {y} out of range")));
        }
        Ok((0..self.size).map(|x| self.op(x, y)).collect())
    }

    /// Searches for a relabeling `f` with `f(a*b) = f(a)*f(b)`; returns it as
    /// an image list.
    pub fn isomorphism_to(&self, other: &FiniteQuandle) -> Option<Vec<usize>> {
        if self.size != other.size {
            return None;
        }
        let n = self.size;
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn consistent(q: &FiniteQuandle, r: &FiniteQuandle, map: &[usize], upto: usize) -> bool {
            for a in 0..=upto {
                for b in 0..=upto {
                    let ab = q.op(a, b);
                    if ab <= upto && r.op(map[a], map[b]) != map[ab] {
                        return false;
                    }
                }
            }
            true
        }
        fn go(q: &FiniteQuandle, r: &FiniteQuandle, k: usize, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            if k == q.size {
                return true;
            }
            for c in 0..r.size {
                if used[c] {
                    continue;
                }
                map[k] = c;
                used[c] = true;
                if consistent(q, r, map, k) && go(q, r, k + 1, map, used) {
                    return true;
                }
                used[c] = false;
            }
            map[k] = usize::MAX;
            false
        }
        if go(self, other, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }
}

/// Dihedral quandle `R_n`: `i * j = 2j - i mod n`, realized as reflections
/// `k -> 2i - k` of `{0..n-1}` inside `Σ_n`.
///
/// For `n = 3` the labels are `(2 3), (1 3), (1 2)` for elements `0, 1, 2`.
pub fn dihedral(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    let op = (0..n)
        .map(|i| (0..n).map(|j| (2 * j + n - i % n) % n).collect())
        .collect();
    let q = FiniteQuandle::from_table(format!("R{n}"), op)?;
    let perms = (0..n)
        .map(|i| Perm::from_images((0..n).map(|k| (2 * i + n - k) % n).collect()))
        .collect::<Result<Vec<_>>>()?;
    q.with_permutations(perms)
}

/// Trivial quandle on `n` elements: `a * b = a`.
pub fn trivial(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    FiniteQuandle::from_table(format!("T{n}"), (0..n).map(|a| vec![a; n]).collect())
}

fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    let (mut r0, mut r1) = (a.rem_euclid(n), n);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 == 1 || n == 1 {
        Some(s0.rem_euclid(n))
    } else {
        None
    }
}

/// Alexander quandle `Z_n[t, t^-1]/(h(t))` with `a * b = t a + (1 - t) b`.
///
/// `h` lists coefficients from the constant term upward. Leading and trailing
/// nonzero coefficients must be units mod `n`.
pub fn alexander(n: u64, h: &[i64]) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    let ni = n as i64;
    let mut coeffs: Vec<i64> = h.iter().map(|c| c.rem_euclid(ni)).collect();
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    let low = coeffs.iter().position(|&c| c != 0);
    let Some(low) = low else {
        return Err(Error::NotFinite("h is zero modulo n".into()));
    };
    let coeffs = coeffs[low..].to_vec();
    let lead = *coeffs.last().unwrap();
    let lead_inv = mod_inverse(lead, ni)
        .ok_or_else(|| Error::NotFinite(format!("leading coefficient {lead} is not a unit mod {n}")))?;
    if mod_inverse(coeffs[0], ni).is_none() {
        return Err(Error::NotFinite(format!("trailing coefficient {} is not a unit mod {n}", coeffs[0])));
    }
    let monic: Vec<i64> = coeffs.iter().map(|c| (c * lead_inv).rem_euclid(ni)).collect();
    let d = monic.len() - 1;
    // multiplication by t: e_i -> e_{i+1}, e_{d-1} -> -sum h_i e_i
    let mut t = vec![0i64; d * d];
    for i in 0..d {
        if i + 1 < d {
            t[(i + 1) * d + i] = 1;
        }
        t[i * d + (d - 1)] = (-monic[i]).rem_euclid(ni);
    }
    let data = AlexanderData { modulus: n, degree: d, t_matrix: t.clone() };
    let size = (n as usize).pow(d as u32);
    let apply_t = |v: &[i64]| -> Vec<i64> {
        (0..d).map(|r| (0..d).map(|c| t[r * d + c] * v[c]).sum::<i64>().rem_euclid(ni)).collect()
    };
    let mut op = vec![vec![0usize; size]; size];
    for a in 0..size {
        let va = data.decode(a);
        let ta = apply_t(&va);
        for b in 0..size {
            let vb = data.decode(b);
            let tb = apply_t(&vb);
            let r: Vec<i64> = (0..d).map(|i| ta[i] + vb[i] - tb[i]).collect();
            op[a][b] = data.encode(&r);
        }
    }
    let poly: Vec<String> = h.iter().map(|c| c.to_string()).collect();
    let mut q = FiniteQuandle::from_table(format!("Alexander(Z{n}[t]/({}))", poly.join(",")), op)?;
    let labels = (0..size)
        .map(|a| {
            let v = data.decode(a);
            if d == 1 {
                v[0].to_string()
            } else {
                format!("{v:?}")
            }
        })
        .collect();
    q = q.with_labels(labels)?;
    q.alexander = Some(data);
    Ok(q)
}

/// Alexander quandle on `Z_n` with scalar `t`: `a * b = t a + (1 - t) b`.
pub fn alexander_scalar(n: u64, t: i64) -> Result<FiniteQuandle> {
    alexander(n, &[-t, 1]).map(|q| q.renamed(format!("Alexander(Z{n}, t={t})")))
}

/// The subquandle of `Conj(G)` on `subset`, with `a * b = b a b^-1`
/// (`exponent = 1`) or `b^-1 a b` (`exponent = -1`).
pub fn conj_subquandle(g: &FiniteGroup, subset: &[usize], exponent: i32) -> Result<FiniteQuandle> {
    if subset.is_empty() {
        return Err(Error::InvalidSize(0));
    }
    if exponent != 1 && exponent != -1 {
        return Err(Error::Input(format!("exponent must be 1 or -1, got {exponent}")));
    }
    let n = subset.len();
    let index = |e: usize| subset.iter().position(|&s| s == e);
    let mut op = vec![vec![0; n]; n];
    for (i, &a) in subset.iter().enumerate() {
        for (j, &b) in subset.iter().enumerate() {
            let c = if exponent == 1 { g.conjugate(b, a) } else { g.conjugate(g.inv(b), a) };
            op[i][j] = index(c).ok_or_else(|| {
                Error::NotClosed(format!("{} * {} = {} is outside the subset", g.label(a), g.label(b), g.label(c)))
            })?;
        }
    }
    let q = FiniteQuandle::from_table("Conj", op)?;
    match g.perms() {
        Some(perms) if exponent == 1 => q.with_permutations(subset.iter().map(|&s| perms[s].clone()).collect()),
        _ => q.with_labels(subset.iter().map(|&s| g.label(s).to_string()).collect()),
    }
}

/// The quandle of transpositions of `Σ_n`, ordered `(1 2), (1 3), .., (n-1 n)`.
pub fn transpositions(n: usize) -> Result<FiniteQuandle> {
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    let mut perms = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            perms.push(Perm::from_cycles(n, &[&[i, j]])?);
        }
    }
    let size = perms.len();
    let mut op = vec![vec![0; size]; size];
    for a in 0..size {
        for b in 0..size {
            let c = perms[b].conjugate(&perms[a]);
            op[a][b] = perms.iter().position(|p| *p == c).expect("transpositions are closed");
        }
    }
    FiniteQuandle::from_table(format!("Transpositions(S{n})"), op)?.with_permutations(perms)
}

/// A dynamical cocycle `α_{x,y}(a, b)` on a fiber `S = {0..fiber}`.
#[derive(Clone, Debug)]
pub struct DynamicalCocycle {
    base: FiniteQuandle,
    fiber: usize,
    alpha: Vec<usize>,
}

impl DynamicalCocycle {
    /// `alpha(x, y, a, b)` supplies `α_{x,y}(a, b)`.
    pub fn from_fn(base: FiniteQuandle, fiber: usize, alpha: impl Fn(usize, usize, usize, usize) -> usize) -> Result<Self> {
        if fiber == 0 {
            return Err(Error::InvalidSize(0));
        }
        let n = base.size();
        let mut table = Vec::with_capacity(n * n * fiber * fiber);
        for x in 0..n {
            for y in 0..n {
                for a in 0..fiber {
                    for b in 0..fiber {
                        let v = alpha(x, y, a, b);
                        if v >= fiber {
                            return Err(Error::MalformedTable(format!("α_{{{x},{y}}}({a},{b}) = {v} out of range")));
                        }
                        table.push(v);
                    }
                }
            }
        }
        Ok(DynamicalCocycle { base, fiber, alpha: table })
    }

    pub fn base(&self) -> &FiniteQuandle {
        &self.base
    }

    pub fn fiber(&self) -> usize {
        self.fiber
    }

    #[inline]
    pub fn alpha(&self, x: usize, y: usize, a: usize, b: usize) -> usize {
        let n = self.base.size();
        let s = self.fiber;
        self.alpha[((x * n + y) * s + a) * s + b]
    }

    /// Checks the three dynamical cocycle conditions; the error names the
    /// first failing condition and a witness.
    pub fn verify(&self) -> Result<()> {
        let n = self.base.size();
        let s = self.fiber;
        for x in 0..n {
            for a in 0..s {
                if self.alpha(x, x, a, a) != a {
                    return Err(Error::DynamicalCondition { condition: 1, witness: format!("x={x}, a={a}") });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for b in 0..s {
                    let mut seen = vec![false; s];
                    for a in 0..s {
                        let v = self.alpha(x, y, a, b);
                        if seen[v] {
                            return Err(Error::DynamicalCondition {
                                condition: 2,
                                witness: format!("x={x}, y={y}, b={b}"),
                            });
                        }
                        seen[v] = true;
                    }
                }
            }
        }
        let q = &self.base;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (xy, xz, yz) = (q.op(x, y), q.op(x, z), q.op(y, z));
                    for a in 0..s {
                        for b in 0..s {
                            let ab = self.alpha(x, y, a, b);
                            for c in 0..s {
                                let lhs = self.alpha(xy, z, ab, c);
                                let rhs = self.alpha(xz, yz, self.alpha(x, z, a, c), self.alpha(y, z, b, c));
                                if lhs != rhs {
                                    return Err(Error::DynamicalCondition {
                                        condition: 3,
                                        witness: format!("x={x}, y={y}, z={z}, a={a}, b={b}, c={c}"),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Index of the pair `(a, x)` in a dynamical extension.
pub fn extension_index(fiber: usize, a: usize, x: usize) -> usize {
    x * fiber + a
}

/// The extension `S ×_α X` with `(a, x) * (b, y) = (α_{x,y}(a, b), x * y)`.
/// Element `(a, x)` has index `x * |S| + a`.
pub fn dynamical_extension(alpha: &DynamicalCocycle) -> Result<FiniteQuandle> {
    alpha.verify()?;
    let q = alpha.base();
    let (n, s) = (q.size(), alpha.fiber());
    let size = n * s;
    let mut op = vec![vec![0; size]; size];
    for x in 0..n {
        for a in 0..s {
            for y in 0..n {
                for b in 0..s {
                    op[extension_index(s, a, x)][extension_index(s, b, y)] =
                        extension_index(s, alpha.alpha(x, y, a, b), q.op(x, y));
                }
            }
        }
    }
    let labels = (0..size).map(|i| format!("({},{})", i % s, q.label(i / s))).collect();
    FiniteQuandle::from_table(format!("{}-extension of {}", s, q.name()), op)?.with_labels(labels)
}

/// On-disk quandle description.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuandleFile {
    pub name: String,
    pub size: usize,
    pub op: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl QuandleFile {
    pub fn from_quandle(q: &FiniteQuandle) -> Self {
        QuandleFile {
            name: q.name().to_string(),
            size: q.size(),
            op: q.table(),
            labels: q.labels().map(|l| l.to_vec()),
        }
    }

    /// Builds the quandle. Labels that parse as permutations (cycle notation)
    /// of a common degree are attached as a permutation realization.
    pub fn into_quandle(self) -> Result<FiniteQuandle> {
        if self.op.len() != self.size {
            return Err(Error::MalformedTable(format!("size {} but {} rows", self.size, self.op.len())));
        }
        let q = FiniteQuandle::from_table(self.name, self.op)?;
        match self.labels {
            None => Ok(q),
            Some(labels) => {
                if let Some(perms) = parse_permutation_labels(&labels) {
                    if let Ok(with) = q.clone().with_permutations(perms) {
                        return Ok(with);
                    }
                }
                q.with_labels(labels)
            }
        }
    }
}

fn parse_permutation_labels(labels: &[String]) -> Option<Vec<Perm>> {
    let degree = labels
        .iter()
        .flat_map(|l| l.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse::<usize>().ok()))
        .max()?;
    labels.iter().map(|l| Perm::parse_cycles(l, degree).ok()).collect()
}
