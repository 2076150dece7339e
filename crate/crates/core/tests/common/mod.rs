//! Checks shared by the property suites and the acceptance harness.
//!
//! Every check returns `Err(reason)` on a counterexample so that proptest
//! and the seeded loops report the same thing.

#![allow(dead_code)]

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use quandle_cocycle::braid::{closure_colorings, propagate, BraidWord, Convention, LaidOutBraid};
use quandle_cocycle::cocycle::{coboundary, r3_example2, r3_example3, s5_section, SectionCocycle, VectorCochain};
use quandle_cocycle::invariant::{
    cocycle2_contribution, cocycle2_invariant, components, conjugacy_invariant, conjugacy_products,
    extension_coloring_check, module_invariant,
};
use quandle_cocycle::linalg::{cokernel, IntMatrix};
use quandle_cocycle::linform::{vec_is_zero, CoeffVec, LinForm};
use quandle_cocycle::module::{apply_map, braid_matrix, weighted_sum, ModuleAction};
use quandle_cocycle::quandle::dihedral;

pub const CAP: u128 = 1 << 22;

pub type Check = std::result::Result<(), String>;

pub struct Fixtures {
    pub wreath3: ModuleAction,
    pub wreath5: ModuleAction,
    pub two: (ModuleAction, VectorCochain),
    pub three: (ModuleAction, VectorCochain),
    pub section: SectionCocycle,
}

pub fn fixtures() -> &'static Fixtures {
    static F: OnceLock<Fixtures> = OnceLock::new();
    F.get_or_init(|| Fixtures {
        wreath3: ModuleAction::wreath(&dihedral(3).unwrap(), 0).unwrap(),
        wreath5: ModuleAction::wreath(&dihedral(5).unwrap(), 0).unwrap(),
        two: r3_example2().unwrap(),
        three: r3_example3().unwrap(),
        section: s5_section().unwrap(),
    })
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn word(strands: usize, letters: &[(usize, i8)]) -> BraidWord {
    BraidWord::new(strands, letters.to_vec()).unwrap()
}

fn laid(w: &BraidWord) -> LaidOutBraid {
    LaidOutBraid::new(w, Convention::DEFAULT)
}

/// Module, 2-cocycle and (for at most four strands) conjugacy invariants
/// agree on two words.
pub fn markov_agrees(w: &BraidWord, v: &BraidWord) -> Check {
    let f = fixtures();
    let (bw, bv) = (laid(w), laid(v));
    for action in [&f.wreath3, &f.wreath5] {
        let x = action.quandle();
        let a = module_invariant(&bw, &closure_colorings(&bw, x, CAP).map_err(err)?, action).map_err(err)?;
        let b = module_invariant(&bv, &closure_colorings(&bv, x, CAP).map_err(err)?, action).map_err(err)?;
        if a != b {
            return Err(format!("module invariant over {} differs: {w} vs {v}", x.name()));
        }
    }
    let (action, kappa) = &f.two;
    let x = action.quandle();
    let a = cocycle2_invariant(&bw, &closure_colorings(&bw, x, CAP).map_err(err)?, action, kappa).map_err(err)?;
    let b = cocycle2_invariant(&bv, &closure_colorings(&bv, x, CAP).map_err(err)?, action, kappa).map_err(err)?;
    if a != b {
        return Err(format!("2-cocycle invariant differs: {w} vs {v}"));
    }
    if w.strands().max(v.strands()) <= 4 {
        let beta = &f.section.cocycle;
        let x = beta.quandle();
        let mut a = conjugacy_invariant(&bw, &closure_colorings(&bw, x, CAP).map_err(err)?, beta).map_err(err)?;
        let mut b = conjugacy_invariant(&bv, &closure_colorings(&bv, x, CAP).map_err(err)?, beta).map_err(err)?;
        // component order may change under conjugation; compare sorted tuples
        a = a.map(|t| sorted(t.clone()));
        b = b.map(|t| sorted(t.clone()));
        if a != b {
            return Err(format!("conjugacy invariant differs: {w} vs {v}"));
        }
    }
    Ok(())
}

fn sorted(mut t: Vec<String>) -> Vec<String> {
    t.sort();
    t
}

/// `Φ_{κ+δλ} = Φ_κ` for the bundled 2-cocycle and a numeric 1-cochain.
pub fn coboundary_invisible(w: &BraidWord, lambda: &[[i64; 3]; 3]) -> Check {
    let (action, kappa) = &fixtures().two;
    let l = VectorCochain::from_numeric(1, 3, 3, action.modulus(), |t| lambda[t[0]].to_vec()).map_err(err)?;
    let shifted = kappa.add(&coboundary(&l, action).map_err(err)?).map_err(err)?;
    let b = laid(w);
    let cs = closure_colorings(&b, action.quandle(), CAP).map_err(err)?;
    let a = cocycle2_invariant(&b, &cs, action, kappa).map_err(err)?;
    let c = cocycle2_invariant(&b, &cs, action, &shifted).map_err(err)?;
    if a != c {
        return Err(format!("κ + δλ changes the invariant of {w} (λ = {lambda:?})"));
    }
    Ok(())
}

/// A conjugate-coboundary change of `β` keeps every class of `Ψ`.
pub fn beta_coboundary_invisible(w: &BraidWord, gamma: &[usize]) -> Check {
    let beta = &fixtures().section.cocycle;
    let h = beta.group();
    let gamma: Vec<usize> = gamma.iter().map(|g| g % h.size()).collect();
    let moved = beta.coboundary_modified(&gamma).map_err(err)?;
    let b = laid(w);
    let cs = closure_colorings(&b, beta.quandle(), CAP).map_err(err)?;
    let a = conjugacy_invariant(&b, &cs, beta).map_err(err)?;
    let c = conjugacy_invariant(&b, &cs, &moved).map_err(err)?;
    if a != c {
        return Err(format!("γ-modified β changes Ψ on {w}"));
    }
    Ok(())
}

/// `WS_top(b) - WS_bottom(a) = -Σ B` for beads `a` pushed up through the
/// braid with the bundled 2-cocycle.
pub fn defect_identity(w: &BraidWord, coloring: usize, beads: &[i64]) -> Check {
    let (action, kappa) = &fixtures().two;
    let q = action.modulus();
    let b = laid(w);
    let cs = closure_colorings(&b, action.quandle(), CAP).map_err(err)?;
    let c = &cs[coloring % cs.len()];
    let grid = propagate(&b, action.quandle(), &c.colors).map_err(err)?;
    let k = kappa.clone();
    let f = move |x: usize, y: usize| k.get(&[x, y]).clone();
    let map = braid_matrix(&b, &grid, action, Some(&f), 0).map_err(err)?;
    let m = action.rank();
    let a: Vec<i64> = (0..b.strands * m).map(|i| beads[i % beads.len()].rem_euclid(q as i64)).collect();
    let top = apply_map(&map, &a, q);
    let bottom_beads: Vec<CoeffVec> = a.chunks(m).map(|ch| ch.iter().map(|&v| LinForm::constant(0, v)).collect()).collect();
    let top_beads: Vec<CoeffVec> = top.chunks(m).map(|ch| ch.to_vec()).collect();
    let ws_top = weighted_sum(grid.top(), &top_beads, action).map_err(err)?;
    let ws_bottom = weighted_sum(grid.bottom(), &bottom_beads, action).map_err(err)?;
    let total = cocycle2_contribution(&b, &grid, action, kappa);
    for i in 0..m {
        let mut d = ws_top[i].clone();
        d.add_scaled(&ws_bottom[i], -1);
        d.add_assign(&total[i]);
        if !d.reduced(q).is_zero() {
            return Err(format!("defect differs from -ΣB on {w}, coloring {:?}", c.colors));
        }
    }
    Ok(())
}

/// `Ψ_i = ρ(s(x) φ_{y_1}^{ε_1} .. φ_{y_m}^{ε_m} s(x)^-1)` with `x` the
/// starting color of the component, for every coloring.
pub fn longitude_oracle(w: &BraidWord) -> Check {
    let sc = &fixtures().section;
    let beta = &sc.cocycle;
    let g = &sc.group;
    let b = laid(w);
    let cs = closure_colorings(&b, beta.quandle(), CAP).map_err(err)?;
    let comps = components(&b);
    for c in &cs {
        let grid = propagate(&b, beta.quandle(), &c.colors).map_err(err)?;
        let psi = conjugacy_products(&b, &grid, beta);
        for (comp, &got) in comps.iter().zip(&psi) {
            let x = grid.c(0, comp.start);
            let mut acc = sc.section[x];
            for u in &comp.unders {
                let cr = b.crossings[u.crossing];
                let over = match cr.rule {
                    quandle_cocycle::braid::CrossingRule::Inverse => grid.c(u.crossing, cr.pos + 1),
                    quandle_cocycle::braid::CrossingRule::Standard => grid.c(u.crossing, cr.pos),
                };
                let y = sc.embed[over];
                let y = if cr.rule.sign() > 0 { y } else { g.inv(y) };
                acc = g.mul(acc, y);
            }
            acc = g.mul(acc, g.inv(sc.section[x]));
            let expected = sc.rho[acc].ok_or_else(|| format!("longitude leaves the stabilizer on {w}"))?;
            if expected != got {
                return Err(format!("Ψ on {w} for {:?}: product {} vs longitude {}", c.colors, beta.group().label(got), beta.group().label(expected)));
            }
        }
    }
    Ok(())
}

/// Every coloring that lifts to the extension contributes zero. Returns
/// the number of lifting colorings.
pub fn extension_zero(w: &BraidWord) -> std::result::Result<usize, String> {
    let (action, kappa) = &fixtures().two;
    let b = laid(w);
    let cs = closure_colorings(&b, action.quandle(), CAP).map_err(err)?;
    let mut lifted = 0;
    for c in &cs {
        let grid = propagate(&b, action.quandle(), &c.colors).map_err(err)?;
        if extension_coloring_check(&b, &grid, action, kappa).map_err(err)? {
            lifted += 1;
            if !vec_is_zero(&cocycle2_contribution(&b, &grid, action, kappa)) {
                return Err(format!("lifting coloring {:?} of {w} has a nonzero contribution", c.colors));
            }
        }
    }
    Ok(lifted)
}

fn span(gens: &[Vec<i64>], q: i64, r: usize) -> std::collections::HashSet<Vec<i64>> {
    let mut seen = std::collections::HashSet::new();
    seen.insert(vec![0; r]);
    let mut frontier = vec![vec![0; r]];
    while let Some(v) = frontier.pop() {
        for g in gens {
            let s: Vec<i64> = v.iter().zip(g).map(|(a, b)| (a + b).rem_euclid(q)).collect();
            if seen.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    seen
}

/// `(Z_q)^r / im(A)` from the Smith form against a direct enumeration:
/// for every divisor `d` of `q`, the number of classes killed by `d`.
pub fn cokernel_brute(rows: &[Vec<i64>], q: u64) -> Check {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    let a = IntMatrix::from_rows(rows).map_err(err)?;
    let p = cokernel(&a, q).map_err(err)?;
    let qi = q as i64;
    let gens: Vec<Vec<i64>> = (0..c).map(|j| (0..r).map(|i| rows[i][j].rem_euclid(qi)).collect()).collect();
    let image = span(&gens, qi, r);
    let total = (q as usize).pow(r as u32);
    for d in (1..=q).filter(|d| q % d == 0) {
        let mut killed = 0usize;
        for idx in 0..total {
            let v: Vec<i64> = (0..r).map(|i| ((idx / (q as usize).pow(i as u32)) % q as usize) as i64).collect();
            let dv: Vec<i64> = v.iter().map(|x| (x * d as i64).rem_euclid(qi)).collect();
            if image.contains(&dv) {
                killed += 1;
            }
        }
        let brute = killed / image.len();
        let predicted: u64 = p.torsion.iter().map(|&t| num_integer::gcd(t, d)).product();
        if brute as u64 != predicted {
            return Err(format!("cokernel of {rows:?} mod {q}: {p} predicts {predicted} classes killed by {d}, found {brute}"));
        }
    }
    Ok(())
}

/// `U A V = D` with `D` diagonal, and the invariant factors divide in chain.
pub fn smith_transforms(rows: &[Vec<i64>]) -> Check {
    use quandle_cocycle::linalg::{diagonalize_with_transforms, smith_normal_form};
    let a = IntMatrix::from_rows(rows).map_err(err)?;
    let dg = diagonalize_with_transforms(&a);
    let d = dg.u.mul(&a).map_err(err)?.mul(&dg.v).map_err(err)?;
    for i in 0..d.rows() {
        for j in 0..d.cols() {
            let want = if i == j { dg.diagonal[i].clone() } else { BigInt::zero() };
            if d.get(i, j).clone() != want && !(i == j && d.get(i, j).clone() == -want.clone()) {
                return Err(format!("U A V is not the reported diagonal for {rows:?}"));
            }
        }
    }
    let s = smith_normal_form(&a);
    for w in s.windows(2) {
        if !w[0].is_zero() && !(&w[1] % &w[0]).is_zero() {
            return Err(format!("invariant factors {s:?} do not divide in chain"));
        }
        if w[0].is_zero() && !w[1].is_zero() {
            return Err(format!("zero factor before a nonzero one in {s:?}"));
        }
    }
    Ok(())
}

/// Knot words that pass the coloring-count gate.
pub fn validated_words() -> Vec<(String, BraidWord)> {
    let t = quandle_cocycle::knots::KnotTable::bundled();
    t.usable().into_iter().map(|n| (n.clone(), t.braid(&n).unwrap())).collect()
}

/// Bundled 2- and 3-cocycles verify exhaustively, and so does the section
/// cocycle.
pub fn bundled_cocycles_verify() -> Check {
    use quandle_cocycle::cocycle::verify_cocycle;
    let f = fixtures();
    for (name, (action, kappa)) in [("2-cocycle", &f.two), ("3-cocycle", &f.three)] {
        let r = verify_cocycle(kappa, action).map_err(err)?;
        if !r.is_ok() {
            return Err(format!("bundled {name} fails: {r:?}"));
        }
    }
    let r = f.section.cocycle.verify();
    if !r.is_ok() {
        return Err(format!("section cocycle fails: {r:?}"));
    }
    Ok(())
}
