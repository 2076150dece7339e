//! Non-abelian 2-cocycles, vector-valued cochains with module coefficients,
//! coboundaries and cocycle search.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Perm};
use crate::linalg::{is_prime, kernel_mod_p, rank_mod_p, rref_mod_p};
use crate::linform::{CoeffVec, LinForm};
use crate::module::{Mat, ModuleAction};
use crate::quandle::{conj_subquandle, dihedral, transpositions, FiniteQuandle};

/// Outcome of a non-abelian 2-cocycle check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonAbelianReport {
    Ok,
    Rack { x: usize, y: usize, z: usize },
    Quandle { x: usize },
}

impl NonAbelianReport {
    pub fn is_ok(&self) -> bool {
        *self == NonAbelianReport::Ok
    }
}

/// `β: X × X → H`, stored row-major.
#[derive(Clone, Debug)]
pub struct NonAbelianTwoCocycle {
    quandle: FiniteQuandle,
    group: FiniteGroup,
    beta: Vec<usize>,
}

impl NonAbelianTwoCocycle {
    pub fn from_fn(quandle: FiniteQuandle, group: FiniteGroup, beta: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = quandle.size();
        let table: Vec<usize> = (0..n * n).map(|i| beta(i / n, i % n)).collect();
        if table.iter().any(|&h| h >= group.size()) {
            return Err(Error::MalformedTable("β value outside the group".into()));
        }
        Ok(NonAbelianTwoCocycle { quandle, group, beta: table })
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn beta(&self, x: usize, y: usize) -> usize {
        self.beta[x * self.quandle.size() + y]
    }

    /// Checks `β(x,y) β(x*y,z) = β(x,z) β(x*z,y*z)` and `β(x,x) = 1`,
    /// reporting the first failure in lexicographic order.
    pub fn verify(&self) -> NonAbelianReport {
        let (x_, h) = (&self.quandle, &self.group);
        let n = x_.size();
        for x in 0..n {
            if self.beta(x, x) != h.identity() {
                return NonAbelianReport::Quandle { x };
            }
        }
        let bad = (0..n * n * n).into_par_iter().find_first(|&i| {
            let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
            let l = h.mul(self.beta(x, y), self.beta(x_.op(x, y), z));
            let r = h.mul(self.beta(x, z), self.beta(x_.op(x, z), x_.op(y, z)));
            l != r
        });
        match bad {
            Some(i) => NonAbelianReport::Rack { x: i / (n * n), y: (i / n) % n, z: i % n },
            None => NonAbelianReport::Ok,
        }
    }

    /// `β'(x,y) = γ(x)^-1 β(x,y) γ(x*y)`.
    pub fn coboundary_modified(&self, gamma: &[usize]) -> Result<Self> {
        let n = self.quandle.size();
        if gamma.len() != n || gamma.iter().any(|&g| g >= self.group.size()) {
            return Err(Error::Input("γ must assign a group element to each quandle element".into()));
        }
        let h = &self.group;
        Self::from_fn(self.quandle.clone(), h.clone(), |x, y| {
            h.mul(h.mul(h.inv(gamma[x]), self.beta(x, y)), gamma[self.quandle.op(x, y)])
        })
    }
}

/// A non-abelian cocycle built from a section `s: X → G` together with the
/// data needed to recompute it.
#[derive(Clone, Debug)]
pub struct SectionCocycle {
    /// Ambient group; `X` sits inside it and `x * y = y^-1 x y`.
    pub group: FiniteGroup,
    pub embed: Vec<usize>,
    pub base: usize,
    pub section: Vec<usize>,
    /// `ρ` on every element of the ambient group where it is defined.
    pub rho: Vec<Option<usize>>,
    pub cocycle: NonAbelianTwoCocycle,
}

impl SectionCocycle {
    /// `t(x, y) = s(x) φ_y s(x*y)^-1`.
    pub fn t(&self, x: usize, y: usize) -> usize {
        let g = &self.group;
        let xy = self.cocycle.quandle.op(x, y);
        g.mul(g.mul(self.section[x], self.embed[y]), g.inv(self.section[xy]))
    }
}

/// Builds `β = ρ ∘ t` from a section of `X ⊂ G` through the base point.
pub fn cocycle_from_section(
    quandle: &FiniteQuandle,
    group: &FiniteGroup,
    embed: &[usize],
    base: usize,
    section: &[usize],
    target: &FiniteGroup,
    rho: impl Fn(usize) -> Option<usize>,
) -> Result<SectionCocycle> {
    let n = quandle.size();
    if embed.len() != n || section.len() != n || base >= n {
        return Err(Error::Construction("embedding and section must cover the quandle".into()));
    }
    let g = group;
    let right_conj = |a: usize, b: usize| g.mul(g.mul(g.inv(b), a), b);
    for x in 0..n {
        for y in 0..n {
            if embed[quandle.op(x, y)] != right_conj(embed[x], embed[y]) {
                return Err(Error::Construction(format!("x * y is not conjugation at ({x}, {y})")));
            }
        }
    }
    let x0 = embed[base];
    for x in 0..n {
        if right_conj(x0, section[x]) != embed[x] {
            return Err(Error::Construction(format!("section does not carry the base point to {}", quandle.label(x))));
        }
    }
    let rho_table: Vec<Option<usize>> = (0..g.size()).map(&rho).collect();
    let mut beta = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let t = g.mul(g.mul(section[x], embed[y]), g.inv(section[quandle.op(x, y)]));
            if right_conj(x0, t) != x0 {
                return Err(Error::Construction(format!("t({x}, {y}) does not fix the base point")));
            }
            beta[x * n + y] = rho_table[t]
                .ok_or_else(|| Error::Construction(format!("ρ is undefined on t({x}, {y}) = {}", g.label(t))))?;
        }
    }
    let cocycle = NonAbelianTwoCocycle::from_fn(quandle.clone(), target.clone(), |x, y| beta[x * n + y])?;
    Ok(SectionCocycle { group: g.clone(), embed: embed.to_vec(), base, section: section.to_vec(), rho: rho_table, cocycle })
}

/// The cocycle on the transpositions of `Σ_5` with base point `(1 2)`,
/// section `s(i j) = (1 i)(2 j)` and `ρ` the projection of the stabilizer
/// onto the symmetric group of `{3, 4, 5}`. Products read left to right.
pub fn s5_section() -> Result<SectionCocycle> {
    let x = transpositions(5)?;
    let g = FiniteGroup::symmetric(5).opposite();
    let tperms = x.perms().expect("transpositions carry permutations").to_vec();
    let embed: Vec<usize> = tperms.iter().map(|p| g.index_of_perm(p).expect("in S5")).collect();
    let section: Vec<usize> = tperms
        .iter()
        .map(|p| {
            let c = &p.cycles()[0];
            let (i, j) = (c[0] + 1, c[1] + 1);
            let a = if i == 1 { Perm::identity(5) } else { Perm::from_cycles(5, &[&[1, i]]).expect("valid") };
            let b = if j == 2 { Perm::identity(5) } else { Perm::from_cycles(5, &[&[2, j]]).expect("valid") };
            g.index_of_perm(&a.compose(&b)).expect("in S5")
        })
        .collect();
    let stab: Vec<Perm> = FiniteGroup::symmetric(5)
        .perms()
        .expect("permutation group")
        .iter()
        .filter(|p| p.apply(0) == 0 && p.apply(1) == 1)
        .cloned()
        .collect();
    let h = FiniteGroup::from_permutations(stab, 1)?.opposite();
    let gp = g.perms().expect("permutation group").to_vec();
    let rho = |e: usize| {
        let p = &gp[e];
        if p.apply(0) > 1 || p.apply(1) > 1 {
            return None;
        }
        let mut img = p.images().to_vec();
        img[0] = 0;
        img[1] = 1;
        h.index_of_perm(&Perm::from_images(img).ok()?)
    };
    cocycle_from_section(&x, &g, &embed, 0, &section, &h, rho)
}

/// A vector-valued cochain of degree `d` on `X` with coefficients in
/// `(Z_q)^m`, each coordinate a linear form in named parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorCochain {
    degree: usize,
    size: usize,
    rank: usize,
    modulus: u64,
    params: Vec<String>,
    values: Vec<CoeffVec>,
}

/// Outcome of a vector cocycle check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleReport {
    Ok,
    Degenerate(Vec<usize>),
    Condition(Vec<usize>),
}

impl CocycleReport {
    pub fn is_ok(&self) -> bool {
        *self == CocycleReport::Ok
    }
}

fn tuple_of(mut i: usize, n: usize, d: usize) -> Vec<usize> {
    let mut t = vec![0; d];
    for k in (0..d).rev() {
        t[k] = i % n;
        i /= n;
    }
    t
}

fn index_of(t: &[usize], n: usize) -> usize {
    t.iter().fold(0, |acc, &v| acc * n + v)
}

fn is_degenerate(t: &[usize]) -> bool {
    t.windows(2).any(|w| w[0] == w[1])
}

impl VectorCochain {
    pub fn zero(degree: usize, size: usize, rank: usize, modulus: u64, params: Vec<String>) -> Self {
        let count = size.pow(degree as u32);
        let p = params.len();
        VectorCochain { degree, size, rank, modulus, params, values: vec![vec![LinForm::zero(p); rank]; count] }
    }

    pub fn from_fn(
        degree: usize,
        size: usize,
        rank: usize,
        modulus: u64,
        params: Vec<String>,
        f: impl Fn(&[usize]) -> CoeffVec,
    ) -> Result<Self> {
        let mut c = Self::zero(degree, size, rank, modulus, params);
        for i in 0..c.values.len() {
            let v = f(&tuple_of(i, size, degree));
            c.set_index(i, v)?;
        }
        Ok(c)
    }

    /// Numeric cochain from integer vectors.
    pub fn from_numeric(degree: usize, size: usize, rank: usize, modulus: u64, f: impl Fn(&[usize]) -> Vec<i64>) -> Result<Self> {
        Self::from_fn(degree, size, rank, modulus, vec![], |t| f(t).into_iter().map(|c| LinForm::constant(0, c)).collect())
    }

    fn set_index(&mut self, i: usize, v: CoeffVec) -> Result<()> {
        if v.len() != self.rank || v.iter().any(|f| f.params() != self.params.len()) {
            return Err(Error::Dimension(format!("cochain value has the wrong shape at {:?}", tuple_of(i, self.size, self.degree))));
        }
        self.values[i] = v.into_iter().map(|f| f.reduced(self.modulus)).collect();
        Ok(())
    }

    pub fn set(&mut self, t: &[usize], v: CoeffVec) -> Result<()> {
        if t.len() != self.degree || t.iter().any(|&x| x >= self.size) {
            return Err(Error::Input(format!("bad cochain index {t:?}")));
        }
        self.set_index(index_of(t, self.size), v)
    }

    pub fn get(&self, t: &[usize]) -> &CoeffVec {
        &self.values[index_of(t, self.size)]
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.iter().all(LinForm::is_zero))
    }

    /// Nonzero entries in lexicographic tuple order.
    pub fn support(&self) -> Vec<(Vec<usize>, &CoeffVec)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.iter().any(|f| !f.is_zero()))
            .map(|(i, v)| (tuple_of(i, self.size, self.degree), v))
            .collect()
    }

    pub fn add(&self, other: &VectorCochain) -> Result<VectorCochain> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (a, b) in out.values.iter_mut().zip(&other.values) {
            for (x, y) in a.iter_mut().zip(b) {
                x.add_assign(y);
                *x = x.reduced(self.modulus);
            }
        }
        Ok(out)
    }

    fn same_shape(&self, other: &VectorCochain) -> Result<()> {
        if (self.degree, self.size, self.rank, self.modulus, &self.params)
            != (other.degree, other.size, other.rank, other.modulus, &other.params)
        {
            return Err(Error::Dimension("cochains of different shapes".into()));
        }
        Ok(())
    }

    /// Substitutes numeric parameter values, leaving a numeric cochain.
    pub fn bind(&self, values: &[i64]) -> VectorCochain {
        let vals = self
            .values
            .iter()
            .map(|v| v.iter().map(|f| LinForm::constant(0, f.eval(values)).reduced(self.modulus)).collect())
            .collect();
        VectorCochain { params: vec![], values: vals, ..self.clone() }
    }

    /// The same cochain regarded modulo `q`.
    pub fn with_modulus(&self, q: u64) -> VectorCochain {
        let values = self.values.iter().map(|v| v.iter().map(|f| f.reduced(q)).collect()).collect();
        VectorCochain { modulus: q, values, ..self.clone() }
    }

    fn check_action(&self, action: &ModuleAction) -> Result<()> {
        if action.quandle().size() != self.size || action.rank() != self.rank || action.modulus() != self.modulus {
            return Err(Error::Dimension(format!(
                "cochain (|X|={}, rank {}, q={}) does not match action (|X|={}, rank {}, q={})",
                self.size,
                self.rank,
                self.modulus,
                action.quandle().size(),
                action.rank(),
                action.modulus()
            )));
        }
        Ok(())
    }
}

/// `δζ` one degree up:
///
/// `δζ(x_1..x_{n+1}) = Σ_{i≥2} (-1)^{i+n+1} η_{a_i,b_i} ζ(.. x̂_i ..)
///  + Σ_{i≥2} (-1)^{i+n} ζ(x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, ..)
///  - (-1)^n τ_{a_2,b_2} ζ(x_2..x_{n+1})`,
///
/// with `a_i` the product of all `x_j` except `x_i` and `b_i = x_i * .. * x_{n+1}`.
pub fn coboundary(zeta: &VectorCochain, action: &ModuleAction) -> Result<VectorCochain> {
    zeta.check_action(action)?;
    let x = action.quandle();
    let n = zeta.degree;
    let q = zeta.modulus;
    let p = zeta.params.len();
    let chain = |t: &[usize]| t.iter().skip(1).fold(t[0], |acc, &v| x.op(acc, v));
    let size = zeta.size;
    let values: Vec<CoeffVec> = (0..size.pow(n as u32 + 1))
        .into_par_iter()
        .map(|idx| {
            let t = tuple_of(idx, size, n + 1);
            let mut acc = vec![LinForm::zero(p); zeta.rank];
            let mut add = |m: Option<&Mat>, v: &CoeffVec, sign: i64| {
                let w = match m {
                    Some(m) => m.apply_forms(v, q),
                    None => v.clone(),
                };
                for (a, b) in acc.iter_mut().zip(&w) {
                    a.add_scaled(b, sign);
                }
            };
            for i in 1..=n {
                let dropped: Vec<usize> = t.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
                let a = chain(&dropped);
                let b = chain(&t[i..]);
                let s_eta = if (i + n) % 2 == 0 { 1 } else { -1 };
                add(Some(action.eta(a, b)), zeta.get(&dropped), s_eta);
                let acted: Vec<usize> =
                    t.iter().enumerate().filter(|&(k, _)| k != i).map(|(k, &v)| if k < i { x.op(v, t[i]) } else { v }).collect();
                add(None, zeta.get(&acted), -s_eta);
            }
            let mut rest = vec![t[0]];
            rest.extend_from_slice(&t[2..]);
            let (a, b) = (chain(&rest), chain(&t[1..]));
            let s_tau = if n % 2 == 0 { -1 } else { 1 };
            add(Some(action.tau(a, b)), zeta.get(&t[1..]), s_tau);
            acc.into_iter().map(|f| f.reduced(q)).collect()
        })
        .collect();
    Ok(VectorCochain { degree: n + 1, values, ..zeta.clone() })
}

/// Checks the quandle conditions and `δκ = 0` identically in the
/// parameters, reporting the first failing tuple.
pub fn verify_cocycle(kappa: &VectorCochain, action: &ModuleAction) -> Result<CocycleReport> {
    kappa.check_action(action)?;
    for (i, v) in kappa.values.iter().enumerate() {
        let t = tuple_of(i, kappa.size, kappa.degree);
        if is_degenerate(&t) && v.iter().any(|f| !f.is_zero()) {
            return Ok(CocycleReport::Degenerate(t));
        }
    }
    let d = coboundary(kappa, action)?;
    Ok(match d.values.iter().position(|v| v.iter().any(|f| !f.is_zero())) {
        Some(i) => CocycleReport::Condition(tuple_of(i, d.size, d.degree)),
        None => CocycleReport::Ok,
    })
}

/// Bases of the cocycle space and of the coboundary subspace mod a prime.
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    pub degree: usize,
    pub modulus: u64,
    pub cocycles: Vec<VectorCochain>,
    pub coboundaries: Vec<VectorCochain>,
}

impl CocycleSpace {
    /// Whether a numeric cochain lies in the span of the cocycle basis.
    pub fn contains(&self, kappa: &VectorCochain) -> Result<bool> {
        let p = self.modulus;
        let rows: Vec<Vec<i64>> = self.cocycles.iter().map(flatten_numeric).collect::<Result<_>>()?;
        let cols = self.cocycles.first().map_or(0, |c| c.values.len() * c.rank);
        let r0 = rank_mod_p(&rows, cols, p)?;
        let mut with = rows;
        with.push(flatten_numeric(&kappa.with_modulus(p))?);
        Ok(rank_mod_p(&with, cols, p)? == r0)
    }
}

fn flatten_numeric(c: &VectorCochain) -> Result<Vec<i64>> {
    if !c.params.is_empty() {
        return Err(Error::Input("numeric cochain expected".into()));
    }
    Ok(c.values.iter().flat_map(|v| v.iter().map(|f| f.coeffs()[0])).collect())
}

/// The cochain whose free coordinates on non-degenerate tuples are
/// independent parameters.
fn generic_cochain(degree: usize, size: usize, rank: usize, q: u64) -> (VectorCochain, usize) {
    let count = size.pow(degree as u32);
    let free: Vec<usize> = (0..count).filter(|&i| !is_degenerate(&tuple_of(i, size, degree))).collect();
    let nvars = free.len() * rank;
    let names: Vec<String> = (0..nvars).map(|i| format!("v{i}")).collect();
    let mut c = VectorCochain::zero(degree, size, rank, q, names);
    for (k, &i) in free.iter().enumerate() {
        c.values[i] = (0..rank).map(|r| LinForm::param(nvars, k * rank + r)).collect();
    }
    (c, nvars)
}

fn cochain_from_vector(degree: usize, size: usize, rank: usize, q: u64, v: &[i64]) -> VectorCochain {
    let (g, _) = generic_cochain(degree, size, rank, q);
    let values = g
        .values
        .iter()
        .map(|cv| cv.iter().map(|f| LinForm::constant(0, f.eval(v)).reduced(q)).collect())
        .collect();
    VectorCochain { degree, size, rank, modulus: q, params: vec![], values }
}

/// Finds bases of quandle `degree`-cocycles and coboundaries mod a prime
/// `q`, for degrees 2 and 3.
pub fn search_cocycles(action: &ModuleAction, degree: usize) -> Result<CocycleSpace> {
    let q = action.modulus();
    if !is_prime(q) {
        return Err(Error::UnsupportedModulus(q, "cocycle search needs a prime modulus".into()));
    }
    if !(2..=3).contains(&degree) {
        return Err(Error::Input(format!("cocycle search supports degrees 2 and 3, not {degree}")));
    }
    let (n, m) = (action.quandle().size(), action.rank());
    let (generic, nvars) = generic_cochain(degree, n, m, q);
    let d = coboundary(&generic, action)?;
    let rows: Vec<Vec<i64>> = d
        .values
        .iter()
        .flat_map(|v| v.iter().map(|f| f.coeffs()[..nvars].to_vec()))
        .filter(|r| r.iter().any(|&c| c != 0))
        .collect();
    let kernel = kernel_mod_p(&rows, nvars, q)?;
    let cocycles = kernel.iter().map(|v| cochain_from_vector(degree, n, m, q, v)).collect();

    let (lower, lvars) = generic_cochain(degree - 1, n, m, q);
    let image = coboundary(&lower, action)?;
    // columns of the image are the coboundaries of basis cochains
    let (_, target_vars) = generic_cochain(degree, n, m, q);
    let free: Vec<usize> =
        (0..n.pow(degree as u32)).filter(|&i| !is_degenerate(&tuple_of(i, n, degree))).collect();
    let mut gens: Vec<Vec<i64>> = (0..lvars)
        .map(|k| free.iter().flat_map(|&i| image.values[i].iter().map(move |f| f.coeffs()[k])).collect())
        .collect();
    let pivots = rref_mod_p(&mut gens, target_vars, q as i64);
    let coboundaries =
        gens.iter().take(pivots.len()).map(|v| cochain_from_vector(degree, n, m, q, v)).collect();
    Ok(CocycleSpace { degree, modulus: q, cocycles, coboundaries })
}

/// One cochain value in a file: either a list of linear-form coefficient
/// lists, or plain integers when there are no parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FileValue {
    Numeric(Vec<i64>),
    Forms(Vec<Vec<i64>>),
}

/// JSON cochain file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CochainFile {
    pub quandle: String,
    pub degree: usize,
    pub rank: usize,
    pub modulus: u64,
    #[serde(default)]
    pub params: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index_base: Option<usize>,
    pub values: BTreeMap<String, FileValue>,
}

impl CochainFile {
    pub fn from_cochain(c: &VectorCochain, quandle: &str) -> Self {
        let values = c
            .support()
            .into_iter()
            .map(|(t, v)| {
                let key = t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                let val = if c.params.is_empty() {
                    FileValue::Numeric(v.iter().map(|f| f.coeffs()[0]).collect())
                } else {
                    FileValue::Forms(v.iter().map(|f| f.coeffs().to_vec()).collect())
                };
                (key, val)
            })
            .collect();
        CochainFile {
            quandle: quandle.to_string(),
            degree: c.degree,
            rank: c.rank,
            modulus: c.modulus,
            params: c.params.clone(),
            index_base: None,
            values,
        }
    }

    /// Builds the cochain over a quandle with `size` elements.
    pub fn into_cochain(&self, size: usize) -> Result<VectorCochain> {
        let base = self.index_base.unwrap_or(0);
        let p = self.params.len();
        let mut c = VectorCochain::zero(self.degree, size, self.rank, self.modulus, self.params.clone());
        for (key, val) in &self.values {
            let t: Vec<usize> = key
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .ok()
                        .and_then(|v| v.checked_sub(base))
                        .ok_or_else(|| Error::Input(format!("bad cochain key {key:?}")))
                })
                .collect::<Result<_>>()?;
            let v: CoeffVec = match val {
                FileValue::Numeric(xs) if p == 0 => xs.iter().map(|&x| LinForm::constant(0, x)).collect(),
                FileValue::Numeric(_) => {
                    return Err(Error::Input(format!("value at {key:?} needs coefficient lists for {p} parameters")))
                }
                FileValue::Forms(fs) => fs
                    .iter()
                    .map(|f| {
                        if f.len() != p + 1 {
                            return Err(Error::Input(format!("value at {key:?} needs {} coefficients", p + 1)));
                        }
                        LinForm::from_coeffs(f.clone())
                    })
                    .collect::<Result<_>>()?,
            };
            c.set(&t, v)?;
        }
        Ok(c)
    }
}

const R3_EXAMPLE2: &str = include_str!("../data/r3_example2.json");
const R3_EXAMPLE3: &str = include_str!("../data/r3_example3.json");

/// Names of the bundled vector cochains.
pub const BUILTIN_COCHAINS: [&str; 2] = ["r3-example2", "r3-example3"];

/// A bundled cochain file by name.
pub fn builtin_cochain_file(name: &str) -> Result<CochainFile> {
    let text = match name {
        "r3-example2" => R3_EXAMPLE2,
        "r3-example3" => R3_EXAMPLE3,
        _ => return Err(Error::Input(format!("unknown builtin cochain {name:?}"))),
    };
    serde_json::from_str(text).map_err(|e| Error::Input(format!("builtin {name}: {e}")))
}

/// The bundled 2-cocycle on `R_3` with the wreath action mod 3.
pub fn r3_example2() -> Result<(ModuleAction, VectorCochain)> {
    let r3 = dihedral(3)?;
    let action = ModuleAction::wreath(&r3, 3)?;
    Ok((action, builtin_cochain_file("r3-example2")?.into_cochain(3)?))
}

/// The bundled 3-cocycle on `R_3` with the wreath action over `Z`, in
/// parameters `q1`, `q2`.
pub fn r3_example3() -> Result<(ModuleAction, VectorCochain)> {
    let r3 = dihedral(3)?;
    let action = ModuleAction::wreath(&r3, 0)?;
    Ok((action, builtin_cochain_file("r3-example3")?.into_cochain(3)?))
}

/// A module over a finite group: `(Z_q)^m` with each element acting by a
/// matrix.
#[derive(Clone, Debug)]
pub struct GroupModule {
    pub group: FiniteGroup,
    pub modulus: u64,
    pub action: Vec<Mat>,
}

impl GroupModule {
    pub fn new(group: FiniteGroup, modulus: u64, action: Vec<Mat>) -> Result<Self> {
        if action.len() != group.size() {
            return Err(Error::InvalidAction("one matrix per group element expected".into()));
        }
        let action: Vec<Mat> = action.into_iter().map(|m| m.reduced(modulus)).collect();
        for a in 0..group.size() {
            for b in 0..group.size() {
                if action[group.mul(a, b)] != action[a].mul(&action[b], modulus) {
                    return Err(Error::InvalidAction(format!("not a homomorphism at ({a}, {b})")));
                }
            }
        }
        Ok(GroupModule { group, modulus, action })
    }

    /// Trivial action on `(Z_q)^m`.
    pub fn trivial(group: FiniteGroup, modulus: u64, rank: usize) -> Self {
        let action = vec![Mat::identity(rank); group.size()];
        GroupModule { group, modulus, action }
    }

    pub fn rank(&self) -> usize {
        self.action.first().map_or(0, Mat::size)
    }

    fn reduce(&self, v: Vec<i64>) -> Vec<i64> {
        if self.modulus == 0 {
            v
        } else {
            v.into_iter().map(|c| c.rem_euclid(self.modulus as i64)).collect()
        }
    }

    /// `θ(x,y) + θ(xy,z) = x θ(y,z) + θ(x,yz)` for all triples; returns the
    /// first failing triple.
    pub fn verify_2cocycle(&self, theta: &[Vec<i64>]) -> Option<(usize, usize, usize)> {
        let g = &self.group;
        let n = g.size();
        let q = self.modulus;
        let th = |a: usize, b: usize| &theta[a * n + b];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let l: Vec<i64> = th(x, y).iter().zip(th(g.mul(x, y), z)).map(|(a, b)| a + b).collect();
                    let xr = self.action[x].apply(th(y, z), q);
                    let r: Vec<i64> = xr.iter().zip(th(x, g.mul(y, z))).map(|(a, b)| a + b).collect();
                    if self.reduce(l) != self.reduce(r) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// `δγ(x, y) = γ(xy) - γ(x) - x γ(y)`.
    pub fn coboundary(&self, gamma: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let g = &self.group;
        let n = g.size();
        let q = self.modulus;
        (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                let xg = self.action[x].apply(&gamma[y], q);
                let v = (0..self.rank()).map(|k| gamma[g.mul(x, y)][k] - gamma[x][k] - xg[k]).collect();
                self.reduce(v)
            })
            .collect()
    }
}

/// The quandle-module data induced on `X ⊂ Conj(H)` by a group 2-cocycle:
/// `κ_{x,y} = θ(y, x) - θ(y x y^-1, y)`.
pub fn kappa_from_group_cocycle(
    module: &GroupModule,
    subset: &[usize],
    theta: &[Vec<i64>],
) -> Result<(ModuleAction, VectorCochain)> {
    let g = &module.group;
    let n = g.size();
    if theta.len() != n * n || theta.iter().any(|v| v.len() != module.rank()) {
        return Err(Error::Dimension("θ must have one vector per ordered pair".into()));
    }
    if let Some((x, y, z)) = module.verify_2cocycle(theta) {
        return Err(Error::CocycleCondition(format!(
            "group 2-cocycle condition fails at ({}, {}, {})",
            g.label(x),
            g.label(y),
            g.label(z)
        )));
    }
    let x = conj_subquandle(g, subset, 1)?;
    let elements: Vec<Mat> = subset.iter().map(|&s| module.action[s].clone()).collect();
    let action = ModuleAction::from_group_module("group module", x, module.modulus, elements)?;
    let th = |a: usize, b: usize| &theta[a * n + b];
    let kappa = VectorCochain::from_numeric(2, subset.len(), module.rank(), module.modulus, |t| {
        let (a, b) = (subset[t[0]], subset[t[1]]);
        let c = g.conjugate(b, a);
        th(b, a).iter().zip(th(c, b)).map(|(u, v)| u - v).collect()
    })?;
    Ok((action, kappa))
}

/// The longer expression `θ(y,x) - yx θ(y^-1, y) + θ(yx, y^-1)`, equal to
/// the lifted κ for normalized θ.
pub fn kappa_cross_check(module: &GroupModule, subset: &[usize], theta: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let g = &module.group;
    let n = g.size();
    let q = module.modulus;
    let th = |a: usize, b: usize| &theta[a * n + b];
    let mut out = Vec::new();
    for &a in subset {
        for &b in subset {
            let yx = g.mul(b, a);
            let mid = module.action[yx].apply(th(g.inv(b), b), q);
            let v: Vec<i64> = (0..module.rank()).map(|k| th(b, a)[k] - mid[k] + th(yx, g.inv(b))[k]).collect();
            out.push(module.reduce(v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn section_cocycle_example_value() {
        let sc = s5_section().unwrap();
        let x = sc.cocycle.quandle();
        let find = |s: &str| x.labels().unwrap().iter().position(|l| l == s).unwrap();
        let b = sc.cocycle.beta(find("(1 4)"), find("(2 3)"));
        assert_eq!(sc.cocycle.group().label(b), "(3 4)");
        assert!(sc.cocycle.verify().is_ok());
        assert_eq!(x.size(), 10);
    }

    #[test]
    fn identity_cocycle_is_ok() {
        let x = dihedral(3).unwrap();
        let h = FiniteGroup::symmetric(3);
        let id = h.identity();
        let c = NonAbelianTwoCocycle::from_fn(x, h, |_, _| id).unwrap();
        assert!(c.verify().is_ok());
    }

    #[test]
    fn example_two_cocycle_verifies() {
        let (action, kappa) = r3_example2().unwrap();
        assert_eq!(verify_cocycle(&kappa, &action).unwrap(), CocycleReport::Ok);
        assert_eq!(kappa.support().len(), 6);
        // file label 3 is index 2, label 1 is index 0
        let v: Vec<i64> = kappa.get(&[2, 0]).iter().map(|f| f.coeffs()[0]).collect();
        assert_eq!(v, vec![1, 2, 1]);
    }

    #[test]
    fn example_three_cocycle_verifies() {
        let (action, kappa) = r3_example3().unwrap();
        assert_eq!(kappa.params(), &["q1".to_string(), "q2".to_string()]);
        assert_eq!(verify_cocycle(&kappa, &action).unwrap(), CocycleReport::Ok);
    }

    #[test]
    fn degenerate_values_are_rejected() {
        let x = dihedral(3).unwrap();
        let action = ModuleAction::wreath(&x, 3).unwrap();
        let k = VectorCochain::from_numeric(2, 3, 3, 3, |t| if t[0] == t[1] && t[0] == 1 { vec![1, 0, 0] } else { vec![0; 3] })
            .unwrap();
        assert_eq!(verify_cocycle(&k, &action).unwrap(), CocycleReport::Degenerate(vec![1, 1]));
    }

    #[test]
    fn search_finds_example() {
        let (action, kappa) = r3_example2().unwrap();
        let space = search_cocycles(&action, 2).unwrap();
        assert!(space.contains(&kappa).unwrap());
        for c in space.cocycles.iter().chain(&space.coboundaries) {
            assert!(verify_cocycle(c, &action).unwrap().is_ok());
        }
        assert!(space.coboundaries.len() <= space.cocycles.len());
    }

    #[test]
    fn search_rejects_composite() {
        let x = dihedral(3).unwrap();
        let action = ModuleAction::wreath(&x, 4).unwrap();
        assert!(matches!(search_cocycles(&action, 2), Err(Error::UnsupportedModulus(4, _))));
    }

    #[test]
    fn file_round_trip() {
        let (_, kappa) = r3_example3().unwrap();
        let f = CochainFile::from_cochain(&kappa, "dihedral:3");
        let text = serde_json::to_string(&f).unwrap();
        let back: CochainFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_cochain(3).unwrap(), kappa);
    }
}
