//! The sets `W(M,M′)` and `W•_{M,M′}`, and exhaustive checks of the two
//! parabolic sign cancellations used when inverting `L`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_datum::RootDatum;

/// `(−1)^{rank(Λ) − |J|}`.
pub fn parabolic_sign(rd: &RootDatum, j: &[usize]) -> i64 {
    if (rd.rank - j.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Action of every Weyl element on the positive roots: `w·β_r = ±β_{r'}`.
struct RootAction<'a> {
    rd: &'a RootDatum,
    /// `act[w][r] = (r', positive)`.
    act: Vec<Vec<(usize, bool)>>,
    simple: Vec<usize>,
}

impl<'a> RootAction<'a> {
    fn new(rd: &'a RootDatum) -> Self {
        let act = rd
            .weyl
            .iter()
            .map(|w| {
                rd.positive_roots
                    .iter()
                    .map(|r| {
                        let x = w.act_dual(r);
                        (rd.root_position(&x).expect("W permutes roots"), rd.root_sign(&x) == Some(true))
                    })
                    .collect()
            })
            .collect();
        let simple = rd.simple_roots.iter().map(|r| rd.root_position(r).expect("simple roots are roots")).collect();
        RootAction { rd, act, simple }
    }

    fn positive_on(&self, w: usize, roots: &[usize]) -> bool {
        roots.iter().all(|&r| self.act[w][r].1)
    }

    /// Simple indices `i` with `w⁻¹α̌_i` satisfying `pred(root index, positive)`.
    fn simple_preimages(&self, w: usize, pred: impl Fn(usize, bool) -> bool) -> BTreeSet<usize> {
        let wi = self.rd.inverse(w);
        (0..self.simple.len()).filter(|&i| {
            let (r, s) = self.act[wi][self.simple[i]];
            pred(r, s)
        }).collect()
    }
}

/// `W(M,M′) = {w : w⁻¹ > 0 on Φ̌⁺_{M′}, w(Δ̌_M) ⊆ Δ̌_{M′}}`.
pub fn w_set(rd: &RootDatum, j: &[usize], jp: &[usize]) -> Vec<usize> {
    let ra = RootAction::new(rd);
    w_set_with(&ra, j, jp)
}

fn w_set_with(ra: &RootAction, j: &[usize], jp: &[usize]) -> Vec<usize> {
    let rd = ra.rd;
    let mp = rd.roots_in(jp);
    let target: BTreeSet<usize> = jp.iter().map(|&i| ra.simple[i]).collect();
    (0..rd.weyl.len())
        .filter(|&w| {
            ra.positive_on(rd.inverse(w), &mp)
                && j.iter().all(|&i| {
                    let (r, s) = ra.act[w][ra.simple[i]];
                    s && target.contains(&r)
                })
        })
        .collect()
}

/// `W•_{M,M′} = {w : w > 0 on Φ̌⁺_M, w⁻¹ > 0 on Φ̌⁺_{M′}}`.
pub fn w_bullet_set(rd: &RootDatum, j: &[usize], jp: &[usize]) -> Vec<usize> {
    w_bullet_with(&RootAction::new(rd), j, jp)
}

fn w_bullet_with(ra: &RootAction, j: &[usize], jp: &[usize]) -> Vec<usize> {
    let rd = ra.rd;
    let m = rd.roots_in(j);
    let mp = rd.roots_in(jp);
    (0..rd.weyl.len()).filter(|&w| ra.positive_on(w, &m) && ra.positive_on(rd.inverse(w), &mp)).collect()
}

/// Double cosets `W_{M′} \ W / W_M`, by orbit enumeration.
pub fn double_cosets(rd: &RootDatum, j: &[usize], jp: &[usize]) -> Vec<BTreeSet<usize>> {
    let wm = rd.subgroup(j);
    let wmp = rd.subgroup(jp);
    let mut seen = vec![false; rd.weyl.len()];
    let mut out = vec![];
    for w in 0..rd.weyl.len() {
        if seen[w] {
            continue;
        }
        let mut orbit = BTreeSet::new();
        for &a in &wmp {
            for &b in &wm {
                orbit.insert(rd.compose(rd.compose(a, w), b));
            }
        }
        for &x in &orbit {
            seen[x] = true;
        }
        out.push(orbit);
    }
    out
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub identity: String,
    pub checked: usize,
    pub nonvanishing: usize,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: &str) -> Self {
        Report { identity: name.into(), ..Default::default() }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < 20 {
            self.failures.push(msg);
        }
    }
}

fn check_rank(rd: &RootDatum) -> Result<()> {
    if rd.n_simple() > 4 {
        return Err(Error::Precondition(format!("semisimple rank {} exceeds 4", rd.n_simple())));
    }
    Ok(())
}

fn word(rd: &RootDatum, w: usize) -> String {
    let s: Vec<String> = rd.weyl[w].word.iter().map(|i| format!("s{}", i + 1)).collect();
    if s.is_empty() {
        "e".into()
    } else {
        s.join("")
    }
}

fn one_based(j: &[usize]) -> Vec<usize> {
    j.iter().map(|i| i + 1).collect()
}

/// For each `J` and `w′`: `Σ_{J′} (−1)^{rank−|J′|}` over
/// `Δ̌ ∩ w′Φ̌_M ⊆ J′ ⊆ Δ̌ ∩ w′Φ̌⁻` vanishes unless `w′ = w₀^M`, in which case
/// `J′ = J` is the only term.
pub fn verify_vanishing_a(rd: &RootDatum) -> Result<Report> {
    check_rank(rd)?;
    let ra = RootAction::new(rd);
    let mut rep = Report::new("vanishing_A");
    for j in rd.all_parabolic_subsets() {
        let m: BTreeSet<usize> = rd.roots_in(&j).into_iter().collect();
        let wm: BTreeSet<usize> = rd.subgroup(&j).into_iter().collect();
        let w0m = rd.longest_in(&j);
        for w in 0..rd.weyl.len() {
            rep.checked += 1;
            let lower = ra.simple_preimages(w, |r, _| m.contains(&r));
            let upper = ra.simple_preimages(w, |_, s| !s);
            let mut sum = 0i64;
            let mut terms = vec![];
            if lower.is_subset(&upper) {
                let free: Vec<usize> = upper.difference(&lower).copied().collect();
                for mask in 0..1u32 << free.len() {
                    let mut jp: Vec<usize> = lower.iter().copied().collect();
                    jp.extend(free.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i));
                    jp.sort();
                    sum += parabolic_sign(rd, &jp);
                    terms.push(jp);
                }
            }
            let no_simple = ra.simple_preimages(w, |r, s| !s && !m.contains(&r)).is_empty();
            if no_simple != wm.contains(&w) {
                rep.fail(format!("J={:?} w'={}: no simple roots in w'(Φ⁻−Φ_M) is {no_simple}, w' ∈ W_M is {}", one_based(&j), word(rd, w), wm.contains(&w)));
            }
            if sum != 0 {
                rep.nonvanishing += 1;
                if !no_simple {
                    rep.fail(format!("J={:?} w'={}: sum {sum} but w'(Φ⁻−Φ_M) has simple roots", one_based(&j), word(rd, w)));
                }
                if w != w0m || terms != vec![j.clone()] {
                    rep.fail(format!("J={:?} w'={}: nonvanishing sum {sum} away from w0^M", one_based(&j), word(rd, w)));
                }
            } else if w == w0m {
                rep.fail(format!("J={:?}: sum vanishes at w0^M", one_based(&j)));
            }
        }
    }
    Ok(rep)
}

/// (i) For fixed `M′`, `w` and `M₁`, the sum of `(−1)^{rank−|J|}` over `J` with
/// `w ∈ W•_{J,J′}` and `Φ̌_J ∩ w⁻¹Φ̌_{J′} = Φ̌_{J₁}` vanishes unless
/// `w = w₀^{M′}w₀`. (ii) `Σ_{J ⊇ J₂} (−1)^{rank−|J|}` vanishes unless `J₂` is
/// everything.
pub fn verify_vanishing_b(rd: &RootDatum) -> Result<Report> {
    check_rank(rd)?;
    let ra = RootAction::new(rd);
    let mut rep = Report::new("vanishing_B");
    let subsets = rd.all_parabolic_subsets();
    let w0 = rd.w0();
    for jp in &subsets {
        let mp: BTreeSet<usize> = rd.roots_in(jp).into_iter().collect();
        let special = rd.compose(rd.longest_in(jp), w0);
        let mut sums: BTreeMap<(usize, Vec<usize>), i64> = BTreeMap::new();
        for j in &subsets {
            for w in w_bullet_with(&ra, j, jp) {
                let inter: BTreeSet<usize> = rd.roots_in(j).into_iter().filter(|&r| mp.contains(&ra.act[w][r].0)).collect();
                let j1: Vec<usize> = j.iter().copied().filter(|&i| inter.contains(&ra.simple[i])).collect();
                if rd.roots_in(&j1).into_iter().collect::<BTreeSet<_>>() != inter {
                    rep.fail(format!("J={:?} J'={:?} w={}: M ∩ w⁻¹M'w is not standard", one_based(j), one_based(jp), word(rd, w)));
                }
                *sums.entry((w, j1)).or_default() += parabolic_sign(rd, j);
            }
        }
        for ((w, j1), s) in sums {
            rep.checked += 1;
            if s == 0 {
                continue;
            }
            rep.nonvanishing += 1;
            let no_simple = ra.simple_preimages(rd.inverse(w), |r, pos| pos && !mp.contains(&r)).is_empty();
            if w != special || !no_simple {
                rep.fail(format!("J'={:?} w={} J1={:?}: inner sum {s} with w ≠ w0^M' w0", one_based(jp), word(rd, w), one_based(&j1)));
            }
        }
    }
    let all = rd.all_simple();
    for j2 in &subsets {
        rep.checked += 1;
        let s: i64 = subsets.iter().filter(|j| j2.iter().all(|i| j.contains(i))).map(|j| parabolic_sign(rd, j)).sum();
        if s != 0 {
            rep.nonvanishing += 1;
        }
        if (s != 0) != (*j2 == all) {
            rep.fail(format!("Möbius sum from J2={:?} is {s}", one_based(j2)));
        }
    }
    Ok(rep)
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetReport {
    pub j: Vec<usize>,
    pub jp: Vec<usize>,
    pub w_set: usize,
    pub w_bullet: usize,
    pub double_cosets: usize,
    /// Each double coset contains exactly one element of `W•`.
    pub representatives: bool,
    /// Members re-checked against the defining conditions.
    pub conditions: bool,
}

/// Checks `W(M,M′)` and `W•_{M,M′}` for every pair of parabolics.
pub fn coset_reports(rd: &RootDatum) -> Result<Vec<CosetReport>> {
    check_rank(rd)?;
    let ra = RootAction::new(rd);
    let subsets = rd.all_parabolic_subsets();
    let mut out = vec![];
    for j in &subsets {
        for jp in &subsets {
            let ws = w_set_with(&ra, j, jp);
            let wb = w_bullet_with(&ra, j, jp);
            let dc = double_cosets(rd, j, jp);
            let representatives = dc.iter().all(|c| wb.iter().filter(|w| c.contains(w)).count() == 1);
            let m = rd.roots_in(j);
            let mp = rd.roots_in(jp);
            let simple_target: BTreeSet<Vec<i64>> = jp.iter().map(|&i| rd.simple_roots[i].clone()).collect();
            let conditions = wb.iter().all(|&w| {
                let e = &rd.weyl[w];
                let ei = &rd.weyl[rd.inverse(w)];
                m.iter().all(|&r| rd.root_sign(&e.act_dual(&rd.positive_roots[r])) == Some(true))
                    && mp.iter().all(|&r| rd.root_sign(&ei.act_dual(&rd.positive_roots[r])) == Some(true))
            }) && ws.iter().all(|&w| {
                let e = &rd.weyl[w];
                let ei = &rd.weyl[rd.inverse(w)];
                mp.iter().all(|&r| rd.root_sign(&ei.act_dual(&rd.positive_roots[r])) == Some(true))
                    && j.iter().all(|&i| simple_target.contains(&e.act_dual(&rd.simple_roots[i])))
            });
            out.push(CosetReport {
                j: one_based(j),
                jp: one_based(jp),
                w_set: ws.len(),
                w_bullet: wb.len(),
                double_cosets: dc.len(),
                representatives,
                conditions,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::preset;

    #[test]
    fn a2_counts() {
        let rd = preset("A2");
        assert_eq!(w_set(&rd, &[], &[0]).len(), 3);
        assert_eq!(w_bullet_set(&rd, &[], &[]).len(), 6);
        assert!(w_bullet_set(&rd, &[0], &[1]).contains(&rd.identity_index()));
    }

    #[test]
    fn a1_vanishing() {
        let rd = preset("A1");
        let a = verify_vanishing_a(&rd).unwrap();
        assert!(a.pass(), "{:?}", a.failures);
        assert!(verify_vanishing_b(&rd).unwrap().pass());
    }

    #[test]
    fn b2_cosets() {
        let rd = preset("B2");
        for r in coset_reports(&rd).unwrap() {
            assert!(r.representatives && r.conditions && r.w_bullet == r.double_cosets, "{r:?}");
        }
    }
}
