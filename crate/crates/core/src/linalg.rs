//! Exact integer matrices, Smith normal form and cokernel invariants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.iter().flatten().map(|&v| BigInt::from(v)).collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if self.cols != v.len() {
            return Err(Error::Dimension(format!("{} columns, vector of length {}", self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect())
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension("subtraction of different shapes".into()));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows {
            return Err(Error::Dimension("hconcat with different row counts".into()));
        }
        Ok(IntMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_i64()).collect())
            .collect()
    }

    /// Nested JSON arrays of decimal strings (entries may exceed 64 bits).
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    serde_json::Value::Array(
                        (0..self.cols)
                            .map(|j| match self.get(i, j).to_i64() {
                                Some(v) => serde_json::Value::from(v),
                                None => serde_json::Value::from(self.get(i, j).to_string()),
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * f;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * f;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// A diagonalization `U A V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug)]
pub struct Diagonalization {
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal of `D`, length `min(rows, cols)`, non-negative. Not
    /// necessarily a divisibility chain.
    pub diagonal: Vec<BigInt>,
}

/// Reduces `a` to diagonal form by unimodular row and column operations,
/// always pivoting on the smallest nonzero entry of the active block.
/// Transforms are tracked only when `track` is set.
fn diagonalize(a: &IntMatrix, track: bool) -> Diagonalization {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut u = if track { IntMatrix::identity(rows) } else { IntMatrix::zeros(0, 0) };
    let mut v = if track { IntMatrix::identity(cols) } else { IntMatrix::zeros(0, 0) };
    let steps = rows.min(cols);
    for t in 0..steps {
        loop {
            // pivot: smallest nonzero absolute value in the block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let e = m.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if m.get(bi, bj).abs() <= e.abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(m, u, v, steps);
            };
            m.swap_rows(t, pi);
            m.swap_cols(t, pj);
            if track {
                u.swap_rows(t, pi);
                v.swap_cols(t, pj);
            }
            let mut clean = true;
            let p = m.get(t, t).clone();
            for i in t + 1..rows {
                if m.get(i, t).is_zero() {
                    continue;
                }
                let q = -m.get(i, t).div_floor(&p);
                m.add_row(i, t, &q);
                if track {
                    u.add_row(i, t, &q);
                }
                if !m.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m.get(t, j).is_zero() {
                    continue;
                }
                let q = -m.get(t, j).div_floor(&p);
                m.add_col(j, t, &q);
                if track {
                    v.add_col(j, t, &q);
                }
                if !m.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if m.get(t, t).is_negative() {
            m.negate_row(t);
            if track {
                u.negate_row(t);
            }
        }
    }
    finish(m, u, v, steps)
}

fn finish(m: IntMatrix, u: IntMatrix, v: IntMatrix, steps: usize) -> Diagonalization {
    let diagonal = (0..steps).map(|i| m.get(i, i).abs()).collect();
    Diagonalization { u, v, diagonal }
}

/// Diagonal with transforms: `u * a * v` is diagonal with entries `diagonal`.
pub fn diagonalize_with_transforms(a: &IntMatrix) -> Diagonalization {
    diagonalize(a, true)
}

/// Turns any diagonal into the invariant-factor chain `d_1 | d_2 | ...`.
/// Zeros are moved to the end.
pub fn invariant_factors(diagonal: &[BigInt]) -> Vec<BigInt> {
    let mut d: Vec<BigInt> = diagonal.iter().map(|x| x.abs()).collect();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (d[i].clone(), d[j].clone());
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let g = a.gcd(&b);
            let l = if a.is_zero() || b.is_zero() { BigInt::zero() } else { a.lcm(&b) };
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Smith normal form diagonal `d_1 | d_2 | ...` of length `min(rows, cols)`.
pub fn smith_normal_form(a: &IntMatrix) -> Vec<BigInt> {
    invariant_factors(&diagonalize(a, false).diagonal)
}

/// A finitely generated abelian group `Z_{t_1} + .. + Z_{t_r} + Z^rank`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ModulePresentation {
    pub torsion: Vec<u64>,
    pub free_rank: usize,
}

impl ModulePresentation {
    pub fn new(mut torsion: Vec<u64>, free_rank: usize) -> Self {
        torsion.retain(|&t| t > 1);
        torsion.sort_unstable();
        ModulePresentation { torsion, free_rank }
    }
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z_{t}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn to_u64(v: &BigInt) -> u64 {
    v.to_u64().expect("torsion coefficient fits in 64 bits")
}

/// Invariants of `Z^N / im(A)` (`q = 0`) or `(Z_q)^N / im(A)` (`q > 0`).
pub fn cokernel(a: &IntMatrix, q: u64) -> Result<ModulePresentation> {
    let n = a.rows();
    if q == 0 {
        let d = smith_normal_form(a);
        let zeros = d.iter().filter(|x| x.is_zero()).count() + n.saturating_sub(d.len());
        let torsion = d.iter().filter(|x| !x.is_zero()).map(to_u64).collect();
        Ok(ModulePresentation::new(torsion, zeros))
    } else {
        let qi = IntMatrix::from_fn(n, n, |i, j| if i == j { BigInt::from(q) } else { BigInt::zero() });
        let d = smith_normal_form(&a.hconcat(&qi)?);
        Ok(ModulePresentation::new(d.iter().map(to_u64).collect(), 0))
    }
}

/// One solution of `A x = b` over `Z` (`q = 0`) or over `Z_q`, or `None`
/// when the system is inconsistent.
pub fn solve_affine(a: &IntMatrix, b: &[BigInt], q: u64) -> Result<Option<Vec<BigInt>>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!("{} rows, right-hand side of length {}", a.rows(), b.len())));
    }
    let n = a.cols();
    let system = if q == 0 {
        a.clone()
    } else {
        let rows = a.rows();
        a.hconcat(&IntMatrix::from_fn(rows, rows, |i, j| if i == j { BigInt::from(q) } else { BigInt::zero() }))?
    };
    let dg = diagonalize_with_transforms(&system);
    // D y = U b, x = V y
    let ub = dg.u.mul_vec(b)?;
    let mut y = vec![BigInt::zero(); system.cols()];
    for (i, c) in ub.iter().enumerate() {
        let d = dg.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero);
        if d.is_zero() {
            if !c.is_zero() {
                return Ok(None);
            }
        } else {
            let (quo, rem) = c.div_rem(&d);
            if !rem.is_zero() {
                return Ok(None);
            }
            y[i] = quo;
        }
    }
    let x = dg.v.mul_vec(&y)?;
    let mut x: Vec<BigInt> = x.into_iter().take(n).collect();
    if q > 0 {
        let qb = BigInt::from(q);
        for v in &mut x {
            *v = v.mod_floor(&qb);
        }
    }
    Ok(Some(x))
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn inv_mod(a: i64, p: i64) -> Option<i64> {
    let (g, x, _) = ext_gcd(a.rem_euclid(p), p);
    (g == 1).then(|| x.rem_euclid(p))
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Reduced row echelon form over `Z_p`; returns the pivot columns.
pub fn rref_mod_p(rows: &mut [Vec<i64>], cols: usize, p: i64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c].rem_euclid(p) != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p).expect("p is prime");
        for v in rows[r].iter_mut() {
            *v = (*v * inv).rem_euclid(p);
        }
        for i in 0..rows.len() {
            if i != r {
                let f = rows[i][c].rem_euclid(p);
                if f != 0 {
                    for j in 0..cols {
                        rows[i][j] = (rows[i][j] - f * rows[r][j]).rem_euclid(p);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Null space basis of `A` over `Z_p`, one vector per free column, each with
/// a 1 in its free coordinate.
pub fn kernel_mod_p(a: &[Vec<i64>], cols: usize, p: u64) -> Result<Vec<Vec<i64>>> {
    if !is_prime(p) {
        return Err(Error::UnsupportedModulus(p, "kernel computation needs a prime".into()));
    }
    let pi = p as i64;
    if a.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension("ragged matrix".into()));
    }
    let mut rows: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|v| v.rem_euclid(pi)).collect()).collect();
    let pivots = rref_mod_p(&mut rows, cols, pi);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0i64; cols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (-rows[r][free]).rem_euclid(pi);
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Rank of `A` over `Z_p`.
pub fn rank_mod_p(a: &[Vec<i64>], cols: usize, p: u64) -> Result<usize> {
    if !is_prime(p) {
        return Err(Error::UnsupportedModulus(p, "rank computation needs a prime".into()));
    }
    let pi = p as i64;
    let mut rows: Vec<Vec<i64>> = a.iter().map(|r| r.iter().map(|v| v.rem_euclid(pi)).collect()).collect();
    Ok(rref_mod_p(&mut rows, cols, pi).len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_normal_form(&IntMatrix::identity(3)), big(&[1, 1, 1]));
        let a = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]).unwrap();
        assert_eq!(smith_normal_form(&a), big(&[2, 4]));
        assert_eq!(smith_normal_form(&IntMatrix::zeros(2, 3)), big(&[0, 0]));
        assert!(smith_normal_form(&IntMatrix::zeros(0, 0)).is_empty());
    }

    #[test]
    fn snf_needs_divisibility_fix() {
        let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(smith_normal_form(&a), big(&[1, 6]));
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let a = IntMatrix::from_rows(&[vec![3, -1, 4], vec![1, 5, -9], vec![2, 6, 5]]).unwrap();
        let dg = diagonalize_with_transforms(&a);
        let d = dg.u.mul(&a).unwrap().mul(&dg.v).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(d.get(i, j).is_zero());
                } else {
                    assert_eq!(d.get(i, i).abs(), dg.diagonal[i]);
                }
            }
        }
    }

    #[test]
    fn cokernel_examples() {
        let z = IntMatrix::zeros(3, 3);
        assert_eq!(cokernel(&z, 0).unwrap(), ModulePresentation::new(vec![], 3));
        let d = IntMatrix::from_rows(&[vec![2, 0], vec![0, 0]]).unwrap();
        assert_eq!(cokernel(&d, 4).unwrap(), ModulePresentation::new(vec![2, 4], 0));
        assert_eq!(cokernel(&d, 0).unwrap(), ModulePresentation::new(vec![2], 1));
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_mod_p(&[vec![1, 0], vec![0, 1]], 2, 3).unwrap().is_empty());
        assert_eq!(kernel_mod_p(&[vec![1, 1]], 2, 3).unwrap(), vec![vec![2, 1]]);
        assert!(matches!(kernel_mod_p(&[vec![1]], 1, 4), Err(Error::UnsupportedModulus(4, _))));
    }

    #[test]
    fn affine_examples() {
        let zero = IntMatrix::zeros(2, 2);
        assert_eq!(solve_affine(&zero, &big(&[0, 0]), 0).unwrap(), Some(big(&[0, 0])));
        let id = IntMatrix::identity(2);
        assert_eq!(solve_affine(&id, &big(&[2, 7]), 3).unwrap(), Some(big(&[2, 1])));
        let two = IntMatrix::from_rows(&[vec![2]]).unwrap();
        assert_eq!(solve_affine(&two, &big(&[1]), 4).unwrap(), None);
        assert_eq!(solve_affine(&two, &big(&[1]), 0).unwrap(), None);
        assert_eq!(solve_affine(&two, &big(&[1]), 3).unwrap(), Some(big(&[2])));
    }

    #[test]
    fn presentation_display() {
        assert_eq!(ModulePresentation::new(vec![3, 1], 3).to_string(), "Z_3 + Z^3");
        assert_eq!(ModulePresentation::new(vec![], 0).to_string(), "0");
    }
}
