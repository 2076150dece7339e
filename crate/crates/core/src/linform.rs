//! Integer linear forms in symbolic parameters, used as coefficients of
//! cocycle values and invariant entries.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `c_1 p_1 + .. + c_k p_k + c_0`, stored as `[c_1, .., c_k, c_0]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinForm(Vec<i64>);

impl LinForm {
    pub fn zero(params: usize) -> Self {
        LinForm(vec![0; params + 1])
    }

    pub fn constant(params: usize, c: i64) -> Self {
        let mut v = vec![0; params + 1];
        v[params] = c;
        LinForm(v)
    }

    /// The form equal to parameter `i`.
    pub fn param(params: usize, i: usize) -> Self {
        let mut v = vec![0; params + 1];
        v[i] = 1;
        LinForm(v)
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Input("a linear form needs at least the constant term".into()));
        }
        Ok(LinForm(coeffs))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn params(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add_assign(&mut self, other: &LinForm) {
        debug_assert_eq!(self.0.len(), other.0.len());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    pub fn add_scaled(&mut self, other: &LinForm, f: i64) {
        if f == 0 {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += f * b;
        }
    }

    pub fn scaled(&self, f: i64) -> LinForm {
        LinForm(self.0.iter().map(|c| c * f).collect())
    }

    /// Reduces every coefficient into `[0, q)`; `q = 0` leaves it unchanged.
    pub fn reduced(&self, q: u64) -> LinForm {
        if q == 0 {
            return self.clone();
        }
        LinForm(self.0.iter().map(|c| c.rem_euclid(q as i64)).collect())
    }

    /// Numeric value with the parameters bound.
    pub fn eval(&self, values: &[i64]) -> i64 {
        let k = self.params();
        (0..k).map(|i| self.0[i] * values.get(i).copied().unwrap_or(0)).sum::<i64>() + self.0[k]
    }

    /// Text form with the given parameter names, e.g. `-2q1+q2`.
    pub fn render(&self, names: &[String]) -> String {
        let k = self.params();
        let mut out = String::new();
        for i in 0..=k {
            let c = self.0[i];
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            let mag = c.unsigned_abs();
            if i == k {
                out.push_str(&format!("{sign}{mag}"));
            } else {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("p{}", i + 1));
                if mag == 1 {
                    out.push_str(&format!("{sign}{name}"));
                } else {
                    out.push_str(&format!("{sign}{mag}{name}"));
                }
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    /// Parses expressions such as `0`, `q1`, `-2q1+q2`, `2 q1 + q2 - 3`.
    pub fn parse(text: &str, names: &[String]) -> Result<Self> {
        let bad = |m: &str| Error::Input(format!("cannot parse linear form {text:?}: {m}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad("empty"));
        }
        let mut form = LinForm::zero(names.len());
        let bytes: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == '+' || bytes[i] == '-' {
                if bytes[i] == '-' {
                    sign = -1;
                }
                i += 1;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mag: Option<i64> = if i > start {
                Some(bytes[start..i].iter().collect::<String>().parse().map_err(|_| bad("number"))?)
            } else {
                None
            };
            let nstart = i;
            while i < bytes.len() && bytes[i] != '+' && bytes[i] != '-' {
                i += 1;
            }
            let name: String = bytes[nstart..i].iter().collect::<String>().trim_start_matches('*').to_string();
            if name.is_empty() {
                let m = mag.ok_or_else(|| bad("dangling sign"))?;
                form.0[names.len()] += sign * m;
            } else {
                let idx = names.iter().position(|n| *n == name).ok_or_else(|| bad(&format!("unknown parameter {name}")))?;
                form.0[idx] += sign * mag.unwrap_or(1);
            }
        }
        Ok(form)
    }
}

/// A coefficient vector: one linear form per coordinate.
pub type CoeffVec = Vec<LinForm>;

pub fn zero_vec(rank: usize, params: usize) -> CoeffVec {
    vec![LinForm::zero(params); rank]
}

pub fn vec_is_zero(v: &[LinForm]) -> bool {
    v.iter().all(LinForm::is_zero)
}

pub fn vec_add_assign(a: &mut [LinForm], b: &[LinForm]) {
    for (x, y) in a.iter_mut().zip(b) {
        x.add_assign(y);
    }
}

pub fn vec_scaled(a: &[LinForm], f: i64) -> CoeffVec {
    a.iter().map(|x| x.scaled(f)).collect()
}

pub fn vec_reduced(a: &[LinForm], q: u64) -> CoeffVec {
    a.iter().map(|x| x.reduced(q)).collect()
}

/// `(f1, f2, ..)` with parameter names.
pub fn render_vec(v: &[LinForm], names: &[String]) -> String {
    let parts: Vec<String> = v.iter().map(|f| f.render(names)).collect();
    format!("({})", parts.join(","))
}

/// Parses `(a,b,c)` where each entry is a linear form.
pub fn parse_vec(text: &str, names: &[String]) -> Result<CoeffVec> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Input(format!("vector must be parenthesized: {text:?}")))?;
    inner.split(',').map(|p| LinForm::parse(p, names)).collect()
}

impl fmt::Display for LinForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["q1".into(), "q2".into()]
    }

    #[test]
    fn parse_and_render() {
        let n = names();
        for s in ["0", "q1", "-q1", "2q1+q2", "-2q1-q2", "q1-q2+3", "-3"] {
            assert_eq!(LinForm::parse(s, &n).unwrap().render(&n), s);
        }
        assert_eq!(LinForm::parse("- q_1".replace('_', "").as_str(), &n).unwrap().coeffs(), &[-1, 0, 0]);
        assert_eq!(LinForm::parse("q2 - q2", &n).unwrap(), LinForm::zero(2));
        assert!(LinForm::parse("q3", &n).is_err());
    }

    #[test]
    fn vector_parse() {
        let n = names();
        let v = parse_vec("(q1, 0, -q1)", &n).unwrap();
        assert_eq!(render_vec(&v, &n), "(q1,0,-q1)");
    }

    #[test]
    fn reduction_and_eval() {
        let f = LinForm::from_coeffs(vec![4, -1, 5]).unwrap();
        assert_eq!(f.reduced(3).coeffs(), &[1, 2, 2]);
        assert_eq!(f.eval(&[1, 2]), 7);
    }
}
