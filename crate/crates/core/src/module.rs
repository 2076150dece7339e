//! Quandle-module actions `(η, τ)`, colored braid maps `M(w, x)` and the
//! quandle module invariant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::braid::{ClosureColoring, ColorGrid, ColoringType, CrossingRule, LaidOutBraid};
use crate::error::{Error, Result};
use crate::linalg::{cokernel, IntMatrix, ModulePresentation};
use crate::linform::{CoeffVec, LinForm};
use crate::quandle::{DynamicalCocycle, FiniteQuandle};

/// Small dense square integer matrix, entries reduced mod `q` when `q > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    n: usize,
    data: Vec<i64>,
}

impl Mat {
    pub fn zero(n: usize) -> Self {
        Mat { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(n: usize, c: i64) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("matrix must be square".into()));
        }
        Ok(Mat { n, data: rows.concat() })
    }

    /// Permutation matrix with `P e_i = e_{images[i]}`.
    pub fn permutation(images: &[usize]) -> Self {
        let n = images.len();
        let mut m = Self::zero(n);
        for (i, &j) in images.iter().enumerate() {
            m.data[j * n + i] = 1;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).take(self.n).collect()
    }

    pub fn reduced(&self, q: u64) -> Mat {
        if q == 0 {
            return self.clone();
        }
        Mat { n: self.n, data: self.data.iter().map(|v| v.rem_euclid(q as i64)).collect() }
    }

    pub fn mul(&self, other: &Mat, q: u64) -> Mat {
        let n = self.n;
        let mut out = Mat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out.reduced(q)
    }

    pub fn add(&self, other: &Mat, q: u64) -> Mat {
        Mat { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect() }.reduced(q)
    }

    pub fn sub(&self, other: &Mat, q: u64) -> Mat {
        Mat { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }.reduced(q)
    }

    pub fn neg(&self, q: u64) -> Mat {
        Mat { n: self.n, data: self.data.iter().map(|a| -a).collect() }.reduced(q)
    }

    pub fn apply(&self, v: &[i64], q: u64) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let s: i64 = (0..n).map(|j| self.data[i * n + j] * v[j]).sum();
                if q > 0 {
                    s.rem_euclid(q as i64)
                } else {
                    s
                }
            })
            .collect()
    }

    /// Applies the matrix to a vector of linear forms.
    pub fn apply_forms(&self, v: &[LinForm], q: u64) -> CoeffVec {
        let n = self.n;
        let params = v.first().map_or(0, |f| f.params());
        (0..n)
            .map(|i| {
                let mut acc = LinForm::zero(params);
                for j in 0..n {
                    acc.add_scaled(&v[j], self.data[i * n + j]);
                }
                acc.reduced(q)
            })
            .collect()
    }

    /// Inverse over `Z` (`q = 0`) or `Z_q`; `None` if the matrix is not
    /// invertible there.
    pub fn inverse(&self, q: u64) -> Option<Mat> {
        let n = self.n;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..2 * n)
                    .map(|j| {
                        let v = if j < n { self.get(i, j) } else if j - n == i { 1 } else { 0 };
                        BigRational::from_integer(BigInt::from(v))
                    })
                    .collect()
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].is_zero())?;
            a.swap(c, p);
            let inv = a[c][c].recip();
            for v in a[c].iter_mut() {
                *v = &*v * &inv;
            }
            for r in 0..n {
                if r != c && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for j in 0..2 * n {
                        let t = &a[c][j] * &f;
                        a[r][j] = &a[r][j] - t;
                    }
                }
            }
        }
        let mut data = Vec::with_capacity(n * n);
        for row in &a {
            for v in &row[n..] {
                let num = v.numer();
                let den = v.denom();
                if q == 0 {
                    if !den.is_one() {
                        return None;
                    }
                    data.push(num.to_i64()?);
                } else {
                    let qb = BigInt::from(q);
                    let d = den.mod_floor(&qb).to_i64()?;
                    let dinv = crate::linalg::inv_mod(d, q as i64)?;
                    let nm = num.mod_floor(&qb).to_i64()?;
                    data.push((nm * dinv).rem_euclid(q as i64));
                }
            }
        }
        let m = Mat { n, data };
        (m.mul(self, q) == Mat::identity(n).reduced(q)).then_some(m)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }
}

/// A quandle module structure on `(Z_q)^m` (`q = 0` means `Z^m`), together
/// with the action of each element on the coefficients as a group element
/// of the enveloping group (used for weight prefixes).
#[derive(Clone, Debug)]
pub struct ModuleAction {
    name: String,
    quandle: FiniteQuandle,
    rank: usize,
    modulus: u64,
    eta: Vec<Mat>,
    eta_inv: Vec<Mat>,
    tau: Vec<Mat>,
    element: Vec<Mat>,
    element_inv: Vec<Mat>,
}

/// Outcome of checking the quandle algebra relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationCheck {
    Ok,
    Fails { relation: u8, x: usize, y: usize, z: usize },
}

impl ModuleAction {
    /// Builds an action from explicit `η`, `τ` tables (indexed `x * n + y`)
    /// and per-element matrices, checking invertibility and the relations.
    pub fn from_tables(
        name: impl Into<String>,
        quandle: FiniteQuandle,
        modulus: u64,
        eta: Vec<Mat>,
        tau: Vec<Mat>,
        element: Vec<Mat>,
    ) -> Result<Self> {
        let n = quandle.size();
        if eta.len() != n * n || tau.len() != n * n || element.len() != n {
            return Err(Error::InvalidAction("table sizes do not match the quandle".into()));
        }
        let rank = eta.first().map_or(0, Mat::size);
        if eta.iter().chain(&tau).chain(&element).any(|m| m.size() != rank) {
            return Err(Error::InvalidAction("matrices of different sizes".into()));
        }
        let eta: Vec<Mat> = eta.into_iter().map(|m| m.reduced(modulus)).collect();
        let tau: Vec<Mat> = tau.into_iter().map(|m| m.reduced(modulus)).collect();
        let element: Vec<Mat> = element.into_iter().map(|m| m.reduced(modulus)).collect();
        let invert = |m: &Mat, what: String| m.inverse(modulus).ok_or(Error::InvalidAction(format!("{what} is not invertible")));
        let eta_inv = eta
            .iter()
            .enumerate()
            .map(|(i, m)| invert(m, format!("η_{{{},{}}}", i / n, i % n)))
            .collect::<Result<Vec<_>>>()?;
        let element_inv =
            element.iter().enumerate().map(|(i, m)| invert(m, format!("element {i}"))).collect::<Result<Vec<_>>>()?;
        let action = ModuleAction { name: name.into(), quandle, rank, modulus, eta, eta_inv, tau, element, element_inv };
        match action.check_relations() {
            RelationCheck::Ok => Ok(action),
            RelationCheck::Fails { relation, x, y, z } => {
                Err(Error::InvalidAction(format!("relation {relation} fails at ({x}, {y}, {z})")))
            }
        }
    }

    /// The action induced by a module over the enveloping group in which
    /// element `y` acts by `element[y]`: `η_{x,y} = y`, `τ_{x,y} = 1 - x*y`.
    pub fn from_group_module(name: impl Into<String>, quandle: FiniteQuandle, modulus: u64, element: Vec<Mat>) -> Result<Self> {
        let n = quandle.size();
        if element.len() != n {
            return Err(Error::InvalidAction(format!("{} element matrices for {n} elements", element.len())));
        }
        let rank = element.first().map_or(0, Mat::size);
        let id = Mat::identity(rank);
        let mut eta = Vec::with_capacity(n * n);
        let mut tau = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                eta.push(element[y].clone());
                tau.push(id.sub(&element[quandle.op(x, y)], modulus));
            }
        }
        Self::from_tables(name, quandle, modulus, eta, tau, element)
    }

    /// Wreath product action: elements are permutations acting on `(Z_q)^n`
    /// by permuting coordinates.
    pub fn wreath(quandle: &FiniteQuandle, modulus: u64) -> Result<Self> {
        let perms = quandle
            .perms()
            .ok_or_else(|| Error::Construction(format!("{} carries no permutation labels", quandle.name())))?;
        let element = perms.iter().map(|p| Mat::permutation(p.images())).collect();
        Self::from_group_module(format!("wreath(q={modulus})"), quandle.clone(), modulus, element)
    }

    /// Rank-one Alexander action `η = t`, `τ = 1 - t`.
    pub fn alexander(quandle: &FiniteQuandle, modulus: u64, t: i64) -> Result<Self> {
        let unit = if modulus == 0 { t == 1 || t == -1 } else { crate::linalg::inv_mod(t, modulus as i64).is_some() };
        if !unit {
            return Err(Error::InvalidAction(format!("t = {t} is not a unit mod {modulus}")));
        }
        let n = quandle.size();
        let element = vec![Mat::scalar(1, t); n];
        let eta = vec![Mat::scalar(1, t); n * n];
        let tau = vec![Mat::scalar(1, 1 - t); n * n];
        Self::from_tables(format!("alexander(q={modulus}, t={t})"), quandle.clone(), modulus, eta, tau, element)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn eta(&self, x: usize, y: usize) -> &Mat {
        &self.eta[x * self.quandle.size() + y]
    }

    #[inline]
    pub fn eta_inv(&self, x: usize, y: usize) -> &Mat {
        &self.eta_inv[x * self.quandle.size() + y]
    }

    #[inline]
    pub fn tau(&self, x: usize, y: usize) -> &Mat {
        &self.tau[x * self.quandle.size() + y]
    }

    /// `η̄_{z,y} = η^{-1}_{z ∗̄ y, y}`.
    pub fn eta_bar(&self, z: usize, y: usize) -> &Mat {
        self.eta_inv(self.quandle.inv_op(z, y), y)
    }

    /// `τ̄_{z,y} = -η̄_{z,y} τ_{z ∗̄ y, y}`.
    pub fn tau_bar(&self, z: usize, y: usize) -> Mat {
        self.eta_bar(z, y).mul(self.tau(self.quandle.inv_op(z, y), y), self.modulus).neg(self.modulus)
    }

    /// Matrix by which element `y` acts on coefficients.
    pub fn element(&self, y: usize) -> &Mat {
        &self.element[y]
    }

    pub fn element_inv(&self, y: usize) -> &Mat {
        &self.element_inv[y]
    }

    /// Product of signed element matrices, leftmost factor applied last.
    pub fn word_matrix(&self, word: &[(usize, i8)]) -> Mat {
        let mut m = Mat::identity(self.rank).reduced(self.modulus);
        for &(y, e) in word {
            let f = if e > 0 { self.element(y) } else { self.element_inv(y) };
            m = m.mul(f, self.modulus);
        }
        m
    }

    /// Exhaustive check of the four quandle algebra relations and of the
    /// compatibility `E(x*y) = E(y) E(x) E(y)^-1` of element matrices.
    pub fn check_relations(&self) -> RelationCheck {
        let q = self.modulus;
        let x_ = &self.quandle;
        let n = x_.size();
        let id = Mat::identity(self.rank).reduced(q);
        for x in 0..n {
            if self.tau(x, x).add(self.eta(x, x), q) != id {
                return RelationCheck::Fails { relation: 4, x, y: x, z: x };
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = x_.op(x, y);
                for z in 0..n {
                    let (xz, yz) = (x_.op(x, z), x_.op(y, z));
                    let l1 = self.eta(xy, z).mul(self.eta(x, y), q);
                    let r1 = self.eta(xz, yz).mul(self.eta(x, z), q);
                    if l1 != r1 {
                        return RelationCheck::Fails { relation: 1, x, y, z };
                    }
                    let l2 = self.eta(xy, z).mul(self.tau(x, y), q);
                    let r2 = self.tau(xz, yz).mul(self.eta(y, z), q);
                    if l2 != r2 {
                        return RelationCheck::Fails { relation: 2, x, y, z };
                    }
                    let r3 = self.eta(xz, yz).mul(self.tau(x, z), q).add(&self.tau(xz, yz).mul(self.tau(y, z), q), q);
                    if *self.tau(xy, z) != r3 {
                        return RelationCheck::Fails { relation: 3, x, y, z };
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                let lhs = self.element(x_.op(x, y));
                let rhs = self.element(y).mul(self.element(x), q).mul(self.element_inv(y), q);
                if *lhs != rhs {
                    return RelationCheck::Fails { relation: 5, x, y, z: y };
                }
            }
        }
        RelationCheck::Ok
    }

    /// JSON view of all matrices, for inspection.
    pub fn to_json(&self) -> serde_json::Value {
        let n = self.quandle.size();
        let table = |v: &[Mat]| -> serde_json::Value {
            serde_json::Value::Array(
                (0..n)
                    .map(|x| serde_json::Value::Array((0..n).map(|y| serde_json::json!(v[x * n + y].rows())).collect()))
                    .collect(),
            )
        };
        serde_json::json!({
            "name": self.name,
            "quandle": self.quandle.name(),
            "rank": self.rank,
            "modulus": self.modulus,
            "eta": table(&self.eta),
            "tau": table(&self.tau),
            "element": self.element.iter().map(|m| m.rows()).collect::<Vec<_>>(),
        })
    }

    /// The dynamical cocycle `α_{x,y}(a, b) = η_{x,y} a + τ_{x,y} b + κ_{x,y}`
    /// on the fiber `(Z_q)^m`, with `κ` given numerically (`kappa(x, y)`).
    pub fn dynamical_cocycle(&self, kappa: impl Fn(usize, usize) -> Vec<i64>) -> Result<DynamicalCocycle> {
        let q = self.modulus;
        if q == 0 {
            return Err(Error::UnsupportedModulus(0, "the fiber must be finite".into()));
        }
        let m = self.rank;
        let fiber = (q as usize).checked_pow(m as u32).ok_or_else(|| Error::Construction("fiber too large".into()))?;
        let decode = |mut i: usize| -> Vec<i64> {
            let mut v = vec![0; m];
            for c in v.iter_mut() {
                *c = (i % q as usize) as i64;
                i /= q as usize;
            }
            v
        };
        let encode = |v: &[i64]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * q as usize + c.rem_euclid(q as i64) as usize) };
        DynamicalCocycle::from_fn(self.quandle.clone(), fiber, |x, y, a, b| {
            let ea = self.eta(x, y).apply(&decode(a), q);
            let tb = self.tau(x, y).apply(&decode(b), q);
            let k = kappa(x, y);
            let sum: Vec<i64> = (0..m).map(|i| ea[i] + tb[i] + k[i]).collect();
            encode(&sum)
        })
    }
}

/// Linear part and affine part of the bead map `b = M(w, x) a + κ-terms`,
/// from bottom beads to top beads.
#[derive(Clone, Debug)]
pub struct ColoredBraidMap {
    pub linear: IntMatrix,
    pub affine: CoeffVec,
}

/// Builds `M(w, x)` by propagating beads upward through every crossing.
///
/// `kappa(x, y)` returns the 2-cochain value; pass `None` for `κ = 0`.
pub fn braid_matrix(
    b: &LaidOutBraid,
    grid: &ColorGrid,
    action: &ModuleAction,
    kappa: Option<&dyn Fn(usize, usize) -> CoeffVec>,
    params: usize,
) -> Result<ColoredBraidMap> {
    let m = action.rank();
    let k = b.strands;
    let q = action.modulus();
    let x = action.quandle();
    if grid.levels.len() != b.height() + 1 {
        return Err(Error::Dimension("grid does not match the braid".into()));
    }
    // state: block row i of `rows` is the linear map giving bead i
    let dim = k * m;
    let mut rows: Vec<Vec<BigInt>> = (0..dim).map(|i| (0..dim).map(|j| BigInt::from((i == j) as i64)).collect()).collect();
    let mut aff: CoeffVec = vec![LinForm::zero(params); dim];
    let qb = BigInt::from(q);
    let reduce = |v: &mut Vec<BigInt>| {
        if q > 0 {
            for e in v.iter_mut() {
                *e = e.mod_floor(&qb);
            }
        }
    };
    let combine = |mat: &Mat, src: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        (0..m)
            .map(|i| {
                (0..dim)
                    .map(|c| (0..m).map(|l| BigInt::from(mat.get(i, l)) * &src[l][c]).sum::<BigInt>())
                    .collect()
            })
            .collect()
    };
    let add_blocks = |a: Vec<Vec<BigInt>>, b: Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
        a.into_iter().zip(b).map(|(r, s)| r.into_iter().zip(s).map(|(u, v)| u + v).collect()).collect()
    };
    let add_aff = |a: CoeffVec, b: &[LinForm]| -> CoeffVec {
        a.into_iter()
            .zip(b)
            .map(|(mut u, v)| {
                u.add_assign(v);
                u.reduced(q)
            })
            .collect()
    };
    let zero_k = vec![LinForm::zero(params); m];
    for s in (0..b.height()).rev() {
        let c = b.crossings[s];
        let j = c.pos;
        let (bc, bd) = (grid.levels[s + 1][j], grid.levels[s + 1][j + 1]);
        let old_j: Vec<Vec<BigInt>> = rows[j * m..(j + 1) * m].to_vec();
        let old_k: Vec<Vec<BigInt>> = rows[(j + 1) * m..(j + 2) * m].to_vec();
        let aff_j: CoeffVec = aff[j * m..(j + 1) * m].to_vec();
        let aff_k: CoeffVec = aff[(j + 1) * m..(j + 2) * m].to_vec();
        let (new_j, new_k, naff_j, naff_k) = match c.rule {
            CrossingRule::Standard => {
                let eta = action.eta(bc, bd);
                let tau = action.tau(bc, bd);
                let kap = kappa.map(|f| f(bc, bd)).unwrap_or_else(|| zero_k.clone());
                let nk = add_blocks(combine(eta, &old_j), combine(tau, &old_k));
                let ak = add_aff(add_aff(eta.apply_forms(&aff_j, q), &tau.apply_forms(&aff_k, q)), &kap);
                (old_k, nk, aff_k, ak)
            }
            CrossingRule::Inverse => {
                let eb = action.eta_bar(bd, bc).clone();
                let tb = action.tau_bar(bd, bc);
                let kap = kappa.map(|f| f(x.inv_op(bd, bc), bc)).unwrap_or_else(|| zero_k.clone());
                let shift: CoeffVec = eb.apply_forms(&kap, q).iter().map(|f| f.scaled(-1).reduced(q)).collect();
                let nj = add_blocks(combine(&eb, &old_k), combine(&tb, &old_j));
                let aj = add_aff(add_aff(eb.apply_forms(&aff_k, q), &tb.apply_forms(&aff_j, q)), &shift);
                (nj, old_j, aj, aff_j)
            }
        };
        for (i, mut r) in new_j.into_iter().enumerate() {
            reduce(&mut r);
            rows[j * m + i] = r;
        }
        for (i, mut r) in new_k.into_iter().enumerate() {
            reduce(&mut r);
            rows[(j + 1) * m + i] = r;
        }
        aff.splice(j * m..(j + 1) * m, naff_j);
        aff.splice((j + 1) * m..(j + 2) * m, naff_k);
    }
    let linear = IntMatrix::from_fn(dim, dim, |i, j| rows[i][j].clone());
    Ok(ColoredBraidMap { linear, affine: aff })
}

/// The cokernel of `M(w, x) - I` for one closure coloring.
pub fn coloring_module(b: &LaidOutBraid, grid: &ColorGrid, action: &ModuleAction) -> Result<ModulePresentation> {
    let map = braid_matrix(b, grid, action, None, 0)?;
    let n = map.linear.rows();
    let a = map.linear.sub(&IntMatrix::identity(n))?;
    cokernel(&a, action.modulus())
}

/// One module presentation per closure coloring, in coloring order.
pub fn module_invariant(
    b: &LaidOutBraid,
    colorings: &[ClosureColoring],
    action: &ModuleAction,
) -> Result<Vec<(ModulePresentation, ColoringType)>> {
    colorings
        .par_iter()
        .map(|c| {
            let grid = crate::braid::propagate(b, action.quandle(), &c.colors)?;
            Ok((coloring_module(b, &grid, action)?, c.kind))
        })
        .collect()
}

/// `WS_x(a) = Σ_i u_i a_i` with `u_i = x_k ⋯ x_{i+1}` acting on
/// coefficients.
pub fn weighted_sum(colors: &[usize], beads: &[CoeffVec], action: &ModuleAction) -> Result<CoeffVec> {
    let k = colors.len();
    if beads.len() != k {
        return Err(Error::StrandMismatch(k, beads.len()));
    }
    let q = action.modulus();
    let params = beads.first().and_then(|b| b.first()).map_or(0, LinForm::params);
    let mut acc = vec![LinForm::zero(params); action.rank()];
    let mut u = Mat::identity(action.rank()).reduced(q);
    for i in (0..k).rev() {
        let term = u.apply_forms(&beads[i], q);
        for (a, t) in acc.iter_mut().zip(&term) {
            a.add_assign(t);
            *a = a.reduced(q);
        }
        u = u.mul(action.element(colors[i]), q);
    }
    Ok(acc)
}

/// Applies a colored braid map to numeric bottom beads.
pub fn apply_map(map: &ColoredBraidMap, beads: &[i64], q: u64) -> Vec<LinForm> {
    let dim = map.linear.rows();
    let params = map.affine.first().map_or(0, LinForm::params);
    (0..dim)
        .map(|i| {
            let lin: BigInt = (0..dim).map(|j| map.linear.get(i, j) * BigInt::from(beads[j])).sum();
            let lin = if q > 0 { lin.mod_floor(&BigInt::from(q)) } else { lin };
            let mut f = LinForm::constant(params, lin.to_i64().expect("bead value fits"));
            f.add_assign(&map.affine[i]);
            f.reduced(q)
        })
        .collect()
}

/// True when `v` is the zero vector modulo `q`.
pub fn is_zero_mod(v: &[BigInt], q: u64) -> bool {
    v.iter().all(|x| if q == 0 { x.is_zero() } else { x.mod_floor(&BigInt::from(q)).is_zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{parse_braid, propagate, Convention};
    use crate::quandle::{alexander_scalar, dihedral, dynamical_extension};

    #[test]
    fn wreath_r3_is_rank_three() {
        let r3 = dihedral(3).unwrap();
        let a = ModuleAction::wreath(&r3, 0).unwrap();
        assert_eq!(a.rank(), 3);
        // element 0 = (2 3) swaps the last two coordinates
        assert_eq!(a.eta(1, 0).rows(), vec![vec![1, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]);
        for x in 0..3 {
            assert_eq!(a.tau(x, x).add(a.eta(x, x), 0), Mat::identity(3));
        }
        assert_eq!(ModuleAction::wreath(&dihedral(5).unwrap(), 0).unwrap().rank(), 5);
    }

    #[test]
    fn wreath_needs_permutations() {
        let a = alexander_scalar(5, 2).unwrap();
        assert!(matches!(ModuleAction::wreath(&a, 0), Err(Error::Construction(_))));
    }

    #[test]
    fn alexander_actions() {
        let r3 = dihedral(3).unwrap();
        let triv = ModuleAction::alexander(&r3, 7, 1).unwrap();
        assert!(triv.tau(0, 1).is_zero());
        assert!(ModuleAction::alexander(&r3, 0, 2).is_err());
        assert!(ModuleAction::alexander(&r3, 0, -1).is_ok());
        assert!(ModuleAction::alexander(&r3, 5, 2).is_ok());
        assert!(ModuleAction::alexander(&r3, 6, 2).is_err());
    }

    #[test]
    fn bar_matrices_undo_crossings() {
        let r3 = dihedral(3).unwrap();
        let a = ModuleAction::wreath(&r3, 0).unwrap();
        for z in 0..3 {
            for y in 0..3 {
                let w = r3.inv_op(z, y);
                assert_eq!(a.eta_bar(z, y).mul(a.eta(w, y), 0), Mat::identity(3));
            }
        }
    }

    #[test]
    fn monochromatic_crossing_block() {
        let r3 = dihedral(3).unwrap();
        let a = ModuleAction::wreath(&r3, 0).unwrap();
        let conv = Convention { positive_letter: CrossingRule::Standard, reading: crate::braid::Reading::TopDown };
        let b = LaidOutBraid::new(&parse_braid("1", None).unwrap(), conv);
        let g = propagate(&b, &r3, &[2, 2]).unwrap();
        let m = braid_matrix(&b, &g, &a, None, 0).unwrap();
        let w = a.eta(2, 2);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.linear.get(i, j).to_i64().unwrap(), 0);
                assert_eq!(m.linear.get(i, 3 + j).to_i64().unwrap(), (i == j) as i64);
                assert_eq!(m.linear.get(3 + i, j).to_i64().unwrap(), w.get(i, j));
                assert_eq!(m.linear.get(3 + i, 3 + j).to_i64().unwrap(), (i == j) as i64 - w.get(i, j));
            }
        }
    }

    #[test]
    fn crossing_and_inverse_cancel() {
        let r3 = dihedral(3).unwrap();
        let a = ModuleAction::wreath(&r3, 0).unwrap();
        let b = LaidOutBraid::new(&parse_braid("1 -1", None).unwrap(), Convention::DEFAULT);
        for bottom in [[0, 1], [2, 2], [1, 0]] {
            let g = propagate(&b, &r3, &bottom).unwrap();
            let m = braid_matrix(&b, &g, &a, None, 0).unwrap();
            assert_eq!(m.linear, IntMatrix::identity(6));
        }
    }

    #[test]
    fn braid_relation_holds() {
        let r3 = dihedral(3).unwrap();
        let a = ModuleAction::wreath(&r3, 0).unwrap();
        for conv in Convention::all() {
            let b1 = LaidOutBraid::new(&parse_braid("1 2 1", None).unwrap(), conv);
            let b2 = LaidOutBraid::new(&parse_braid("2 1 2", None).unwrap(), conv);
            for x in 0..27 {
                let bottom = [x % 3, (x / 3) % 3, x / 9];
                let g1 = propagate(&b1, &r3, &bottom).unwrap();
                let g2 = propagate(&b2, &r3, &bottom).unwrap();
                assert_eq!(g1.top(), g2.top());
                let m1 = braid_matrix(&b1, &g1, &a, None, 0).unwrap();
                let m2 = braid_matrix(&b2, &g2, &a, None, 0).unwrap();
                assert_eq!(m1.linear, m2.linear);
            }
        }
    }

    #[test]
    fn unknot_invariant() {
        let r3 = dihedral(3).unwrap();
        let a = ModuleAction::wreath(&r3, 0).unwrap();
        let w = parse_braid("", Some(1)).unwrap();
        let b = LaidOutBraid::new(&w, Convention::DEFAULT);
        let cs = crate::braid::closure_colorings(&b, &r3, 1000).unwrap();
        let inv = module_invariant(&b, &cs, &a).unwrap();
        assert_eq!(inv.len(), 3);
        assert!(inv.iter().all(|(p, _)| *p == ModulePresentation::new(vec![], 3)));
    }

    #[test]
    fn weighted_sum_examples() {
        let r3 = dihedral(3).unwrap();
        let a = ModuleAction::wreath(&r3, 0).unwrap();
        let bead = |v: [i64; 3]| -> CoeffVec { v.iter().map(|&c| LinForm::constant(0, c)).collect() };
        assert_eq!(weighted_sum(&[1], &[bead([1, 2, 3])], &a).unwrap(), bead([1, 2, 3]));
        // P((2 3)) (1,2,3) + (4,5,6)
        let ws = weighted_sum(&[0, 0], &[bead([1, 2, 3]), bead([4, 5, 6])], &a).unwrap();
        assert_eq!(ws, bead([5, 8, 8]));
    }

    #[test]
    fn wreath_extension_is_a_quandle() {
        let r3 = dihedral(3).unwrap();
        let a = ModuleAction::wreath(&r3, 3).unwrap();
        let alpha = a.dynamical_cocycle(|_, _| vec![0, 0, 0]).unwrap();
        let e = dynamical_extension(&alpha).unwrap();
        assert_eq!(e.size(), 81);
        assert!(e.verify().is_ok());
    }

    #[test]
    fn inverse_mod_q() {
        let m = Mat::from_rows(&[vec![2, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.inverse(0).unwrap().rows(), vec![vec![1, -1], vec![-1, 2]]);
        let two = Mat::scalar(1, 2);
        assert!(two.inverse(0).is_none());
        assert_eq!(two.inverse(5).unwrap().rows(), vec![vec![3]]);
        assert!(two.inverse(4).is_none());
    }
}
