//! Characters of the dual Levi and their graded completion.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, dot_i, Q};
use crate::qfield::RatFunc;
use crate::root_datum::{Coweight, Parabolic, RootDatum};
use crate::series::LatticeSeries;

/// Finitely supported integer multiplicities on `Λ`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WeightFunction {
    pub mult: BTreeMap<Coweight, i64>,
}

impl WeightFunction {
    pub fn unit(rank: usize) -> Self {
        WeightFunction { mult: BTreeMap::from([(vec![0; rank], 1)]) }
    }

    pub fn from_weights<'a>(ws: impl IntoIterator<Item = &'a Coweight>) -> Self {
        let mut f = WeightFunction::default();
        for w in ws {
            f.add(w.clone(), 1);
        }
        f
    }

    pub fn add(&mut self, w: Coweight, m: i64) {
        let v = self.mult.remove(&w).unwrap_or(0) + m;
        if v != 0 {
            self.mult.insert(w, v);
        }
    }

    pub fn get(&self, w: &[i64]) -> i64 {
        self.mult.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn sub(&self, o: &WeightFunction, k: i64) -> WeightFunction {
        let mut f = self.clone();
        for (w, m) in &o.mult {
            f.add(w.clone(), -k * m);
        }
        f
    }

    /// Product of characters (convolution of multiplicities).
    pub fn mul(&self, o: &WeightFunction) -> WeightFunction {
        let mut f = WeightFunction::default();
        for (a, m) in &self.mult {
            for (b, n) in &o.mult {
                f.add(a.iter().zip(b).map(|(x, y)| x + y).collect(), m * n);
            }
        }
        f
    }

    /// Constant on `W_M`-orbits.
    pub fn is_invariant(&self, rd: &RootDatum, p: &Parabolic) -> bool {
        self.mult.iter().all(|(w, m)| p.weyl_m.iter().all(|&x| self.get(&rd.weyl[x].act(w)) == *m))
    }
}

/// The weights of `gr^i(ǔ_P)`: positive coroots outside `M` at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    /// `⟨ρ̌_P, α⟩` for the weights of the piece.
    pub level: Q,
    pub weights: Vec<Coweight>,
}

impl GradedPiece {
    /// `2·level`, the height `⟨2ρ̌_P, α⟩`, which is integral.
    pub fn twice_level(&self) -> i64 {
        (&self.level * linalg::q(2)).to_integer().try_into().expect("small level")
    }
}

pub fn u_p_graded_pieces(rd: &RootDatum, p: &Parabolic) -> Result<Vec<GradedPiece>> {
    let mut by: BTreeMap<i64, Vec<Coweight>> = BTreeMap::new();
    for c in p.u_coroots(rd) {
        let h = p.height(&c);
        if h <= 0 {
            return Err(Error::Computation(format!("coroot {c:?} outside M has nonpositive level")));
        }
        by.entry(h).or_default().push(c);
    }
    Ok(by.into_iter().map(|(h, weights)| GradedPiece { level: Q::new(h.into(), 2.into()), weights }).collect())
}

/// Series in the completed character ring, graded by the class in `Λ_{G,P}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharSeries {
    pub j: Vec<usize>,
    pub projection: Vec<Vec<i64>>,
    pub series: LatticeSeries,
}

impl GradedCharSeries {
    pub fn new(p: &Parabolic, series: LatticeSeries) -> Self {
        GradedCharSeries { j: p.j.clone(), projection: p.projection.clone(), series }
    }

    pub fn unit(p: &Parabolic, h: i64) -> Self {
        GradedCharSeries::new(p, LatticeSeries::unit(p.two_rho_p.clone(), h))
    }

    pub fn height(&self) -> i64 {
        self.series.height
    }

    fn check(&self, o: &GradedCharSeries) -> Result<()> {
        if self.j != o.j {
            return Err(Error::Mismatch(format!("parabolics {:?} and {:?}", self.j, o.j)));
        }
        Ok(())
    }

    pub fn mul(&self, o: &GradedCharSeries) -> Result<Self> {
        self.check(o)?;
        Ok(GradedCharSeries { series: self.series.mul(&o.series)?, ..self.clone() })
    }

    pub fn invert(&self) -> Result<Self> {
        Ok(GradedCharSeries { series: self.series.invert()?, ..self.clone() })
    }

    pub fn agrees_with(&self, o: &GradedCharSeries) -> bool {
        self.j == o.j && self.series.agrees_with(&o.series)
    }

    pub fn is_unit(&self) -> bool {
        self.series.is_unit()
    }

    /// Components keyed by class in `Λ_{G,P}`; each is a `Q(q)`-valued weight function.
    pub fn components(&self) -> BTreeMap<Vec<i64>, BTreeMap<Coweight, RatFunc>> {
        let mut out: BTreeMap<Vec<i64>, BTreeMap<Coweight, RatFunc>> = BTreeMap::new();
        for (w, c) in self.series.terms() {
            let class = linalg::mat_vec_i(&self.projection, w);
            out.entry(class).or_default().insert(w.clone(), c.clone());
        }
        out
    }
}

/// `Λ(t, V) = Σ (−t)^n [∧^n V] = ∏_w (1 − t·e^w)`, truncated at height `h`.
pub fn lambda_series(p: &Parabolic, t: &RatFunc, piece: &GradedPiece, h: i64) -> Result<GradedCharSeries> {
    let g = p.two_rho_p.clone();
    let mut s = LatticeSeries::unit(g.clone(), h);
    for w in &piece.weights {
        let mut f = LatticeSeries::unit(g.clone(), h);
        f.add_term(w.clone(), &-t.clone());
        s = s.mul(&f)?;
    }
    Ok(GradedCharSeries::new(p, s))
}

/// `S(τ, V) = Σ τ^n [Sym^n V] = ∏_w (1 − τ·e^w)^{-1}`, truncated at height `h`.
pub fn sym_series(p: &Parabolic, tau: &RatFunc, piece: &GradedPiece, h: i64) -> Result<GradedCharSeries> {
    let g = p.two_rho_p.clone();
    let mut s = LatticeSeries::unit(g.clone(), h);
    for w in &piece.weights {
        let hw = dot_i(&g, w);
        if hw <= 0 {
            return Err(Error::Computation(format!("weight {w:?} has nonpositive height; Sym series does not converge")));
        }
        let mut f = LatticeSeries::unit(g.clone(), h);
        let mut tk = RatFunc::one();
        let mut k = 1;
        while k * hw <= h {
            tk = &tk * tau;
            f.add_term(w.iter().map(|x| x * k).collect(), &tk);
            k += 1;
        }
        s = s.mul(&f)?;
    }
    Ok(GradedCharSeries::new(p, s))
}

/// The character of `∧^n V` for `V` with the piece's weights.
pub fn exterior_power(piece: &GradedPiece, n: usize, rank: usize) -> WeightFunction {
    fn go(ws: &[Coweight], n: usize, start: usize, acc: &mut Vec<i64>, out: &mut WeightFunction) {
        if n == 0 {
            out.add(acc.clone(), 1);
            return;
        }
        for i in start..ws.len() {
            for (a, x) in acc.iter_mut().zip(&ws[i]) {
                *a += x;
            }
            go(ws, n - 1, i + 1, acc, out);
            for (a, x) in acc.iter_mut().zip(&ws[i]) {
                *a -= x;
            }
        }
    }
    let mut out = WeightFunction::default();
    go(&piece.weights, n, 0, &mut vec![0; rank], &mut out);
    out
}

/// The character of `Sym^n V`.
pub fn symmetric_power(piece: &GradedPiece, n: usize, rank: usize) -> WeightFunction {
    fn go(ws: &[Coweight], n: usize, start: usize, acc: &mut Vec<i64>, out: &mut WeightFunction) {
        if n == 0 {
            out.add(acc.clone(), 1);
            return;
        }
        for i in start..ws.len() {
            for (a, x) in acc.iter_mut().zip(&ws[i]) {
                *a += x;
            }
            go(ws, n - 1, i, acc, out);
            for (a, x) in acc.iter_mut().zip(&ws[i]) {
                *a -= x;
            }
        }
    }
    let mut out = WeightFunction::default();
    go(&piece.weights, n, 0, &mut vec![0; rank], &mut out);
    out
}

/// W_M-invariant bilinear form `Σ_{β ∈ Φ⁺_M} ⟨β,x⟩⟨β,y⟩` on `Λ_Q`.
fn levi_form(rd: &RootDatum, p: &Parabolic, x: &[Q], y: &[Q]) -> Q {
    let mut acc = Q::zero();
    for &r in &p.m_roots {
        let b = &rd.positive_roots[r];
        acc += crate::root_datum::pair_q(b, x) * crate::root_datum::pair_q(b, y);
    }
    acc
}

/// Character of the irreducible representation of the dual Levi with highest
/// weight `lambda`, by Freudenthal's formula.
pub fn irreducible_character(rd: &RootDatum, p: &Parabolic, lambda: &[i64]) -> Result<WeightFunction> {
    if p.j.iter().any(|&i| dot_i(&rd.simple_roots[i], lambda) < 0) {
        return Err(Error::Precondition(format!("{lambda:?} is not M-dominant")));
    }
    let simple: Vec<&Coweight> = p.j.iter().map(|&i| &rd.simple_coroots[i]).collect();
    let low = rd.weyl[p.w0_m].act(lambda);
    let diff: Vec<Q> = lambda.iter().zip(&low).map(|(a, b)| linalg::q(a - b)).collect();
    let cols: Vec<Vec<Q>> = linalg::transpose(&simple.iter().map(|c| linalg::to_q(c)).collect::<Vec<_>>());
    let bounds: Vec<i64> = if simple.is_empty() {
        vec![]
    } else {
        let m = linalg::solve(&cols, &diff).ok_or_else(|| Error::Computation("weight box".into()))?;
        m.iter().map(|x| x.to_integer().try_into().expect("small")).collect()
    };
    let rho: Vec<Q> = {
        let mut r = vec![Q::zero(); rd.rank];
        for c in p.m_coroots(rd) {
            for (a, &x) in r.iter_mut().zip(&c) {
                *a += Q::new(x.into(), 2.into());
            }
        }
        r
    };
    let shift = |v: &[i64]| -> Vec<Q> { v.iter().zip(&rho).map(|(&a, r)| linalg::q(a) + r).collect() };
    let lr = shift(lambda);
    let top = levi_form(rd, p, &lr, &lr);
    // candidates λ − Σ n_j α_j with 0 ≤ n_j ≤ bounds_j, by increasing depth
    let mut boxes: Vec<Vec<i64>> = vec![vec![]];
    for &b in &bounds {
        boxes = boxes.into_iter().flat_map(|v| (0..=b).map(move |k| [v.clone(), vec![k]].concat())).collect();
    }
    boxes.sort_by_key(|n| n.iter().sum::<i64>());
    let pos: Vec<Coweight> = p.m_coroots(rd);
    let mut mult: BTreeMap<Coweight, Q> = BTreeMap::new();
    for n in boxes {
        let mu: Coweight = (0..rd.rank).map(|r| lambda[r] - n.iter().zip(&simple).map(|(k, c)| k * c[r]).sum::<i64>()).collect();
        if n.iter().all(|&k| k == 0) {
            mult.insert(mu, linalg::q(1));
            continue;
        }
        let mr = shift(&mu);
        let denom = &top - levi_form(rd, p, &mr, &mr);
        if denom.is_zero() {
            continue;
        }
        let mut acc = Q::zero();
        for a in &pos {
            let aq = linalg::to_q(a);
            let mut k = 1;
            loop {
                let up: Coweight = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                let Some(m) = mult.get(&up) else { break };
                acc += levi_form(rd, p, &linalg::to_q(&up), &aq) * m;
                k += 1;
            }
        }
        let m = acc * linalg::q(2) / denom;
        if !m.is_zero() {
            mult.insert(mu, m);
        }
    }
    let mut out = WeightFunction::default();
    for (w, m) in mult {
        if !m.is_integer() || m.is_negative() {
            return Err(Error::Computation(format!("non-integral multiplicity {m} at {w:?}")));
        }
        out.add(w, m.to_integer().try_into().expect("small"));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub terms: Vec<(Coweight, i64)>,
    /// Some multiplicity is negative.
    pub is_virtual: bool,
}

/// Strip highest weights until nothing is left.
pub fn decompose_into_irreducibles(rd: &RootDatum, p: &Parabolic, f: &WeightFunction) -> Result<Decomposition> {
    if !f.is_invariant(rd, p) {
        return Err(Error::Precondition("character is not W_M-invariant".into()));
    }
    let mut rest = f.clone();
    let mut terms = vec![];
    let cap = 10_000;
    while !rest.is_zero() {
        if terms.len() >= cap {
            return Err(Error::Computation("decomposition did not terminate".into()));
        }
        let top = rest
            .mult
            .keys()
            .max_by(|a, b| dot_i(&p.two_rho_m, a).cmp(&dot_i(&p.two_rho_m, b)).then(a.cmp(b)))
            .cloned()
            .unwrap();
        let m = rest.get(&top);
        let ch = irreducible_character(rd, p, &top)?;
        rest = rest.sub(&ch, m);
        terms.push((top, m));
    }
    terms.sort();
    let is_virtual = terms.iter().any(|(_, m)| *m < 0);
    Ok(Decomposition { terms, is_virtual })
}

/// Sum of `m·χ(λ)` over the terms.
pub fn reconstruct(rd: &RootDatum, p: &Parabolic, d: &Decomposition) -> Result<WeightFunction> {
    let mut f = WeightFunction::default();
    for (w, m) in &d.terms {
        f = f.sub(&irreducible_character(rd, p, w)?, -m);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::preset;

    #[test]
    fn a2_pieces() {
        let rd = preset("A2");
        let b = rd.parabolic(&[]).unwrap();
        let ps = u_p_graded_pieces(&rd, &b).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].level, linalg::q(1));
        assert_eq!(ps[0].weights.len(), 2);
        assert_eq!(ps[1].weights, vec![vec![1, 1]]);
        let m1 = rd.parabolic(&[0]).unwrap();
        let ps = u_p_graded_pieces(&rd, &m1).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].level, Q::new(3.into(), 2.into()));
    }

    #[test]
    fn adjoint_of_sl3() {
        let rd = preset("A2");
        let g = rd.parabolic(&[0, 1]).unwrap();
        let ch = irreducible_character(&rd, &g, &[1, 1]).unwrap();
        assert_eq!(ch.get(&[0, 0]), 2);
        assert_eq!(ch.mult.len(), 7);
        assert!(ch.mult.iter().all(|(w, m)| w.iter().all(|&x| x == 0) || *m == 1));
        let d = decompose_into_irreducibles(&rd, &g, &ch).unwrap();
        assert_eq!(d.terms, vec![(vec![1, 1], 1)]);
    }

    #[test]
    fn kostant_value() {
        let rd = preset("A2");
        let b = rd.parabolic(&[]).unwrap();
        let piece = GradedPiece { level: linalg::q(1), weights: b.u_coroots(&rd) };
        let s = sym_series(&b, &RatFunc::one(), &piece, 8).unwrap();
        assert_eq!(s.series.coeff(&[1, 1]), RatFunc::from_int(2));
    }
}
