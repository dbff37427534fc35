//! The K-invariant intertwining operator, its inverse, and the asymptotics of
//! the delta function, acting on functions on the coweight lattice.
//!
//! A function is either finitely supported, or known on a window: it vanishes
//! off `tops − Λ^pos_U` and its values are exact on every `m` with
//! `max_t ⟨2ρ̌_P, t − m⟩ ≤ height`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hecke::GradedSeries;
use crate::qfield::RatFunc;
use crate::root_datum::{Coweight, Parabolic, RootDatum};
use crate::series::monoid_points;

/// `δ_P(λ) = q^{−⟨2ρ̌_P, λ⟩}`.
pub fn delta_p(p: &Parabolic, lambda: &[i64]) -> RatFunc {
    RatFunc::q_pow(-p.height(lambda))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalFunction {
    pub j: Vec<usize>,
    pub values: BTreeMap<Coweight, RatFunc>,
    /// Upper envelope of the support.
    pub tops: Vec<Coweight>,
    /// `None` for a finitely supported function.
    pub window: Option<i64>,
}

impl SphericalFunction {
    pub fn finite(p: &Parabolic, terms: impl IntoIterator<Item = (Coweight, RatFunc)>) -> Self {
        let mut values = BTreeMap::new();
        for (x, c) in terms {
            let v: RatFunc = values.remove(&x).unwrap_or_default() + c;
            if !v.is_zero() {
                values.insert(x, v);
            }
        }
        let tops = values.keys().cloned().collect();
        SphericalFunction { j: p.j.clone(), values, tops, window: None }
    }

    pub fn indicator(p: &Parabolic, x: Coweight) -> Self {
        SphericalFunction::finite(p, [(x, RatFunc::one())])
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Height needed below `m`: `max_t ⟨2ρ̌_P, t − m⟩`.
    pub fn depth(&self, p: &Parabolic, m: &[i64]) -> i64 {
        self.tops.iter().map(|t| p.height(t) - p.height(m)).max().unwrap_or(i64::MIN)
    }

    /// Value at `x`, or an error if `x` is outside the known window.
    pub fn value(&self, p: &Parabolic, x: &[i64]) -> Result<RatFunc> {
        if let Some(h) = self.window {
            if self.depth(p, x) > h {
                return Err(Error::Truncation(format!("point {x:?} lies outside the known window (depth {} > {h})", self.depth(p, x))));
            }
        }
        Ok(self.values.get(x).cloned().unwrap_or_default())
    }

    /// Points of `tops − Λ^pos_U` within depth `h`.
    pub fn window_points(&self, rd: &RootDatum, p: &Parabolic, h: i64) -> Result<Vec<Coweight>> {
        let cone = monoid_points(&p.u_coroots(rd), &p.two_rho_p, h)?;
        let mut out = std::collections::BTreeSet::new();
        for t in &self.tops {
            for c in &cone {
                let m: Coweight = t.iter().zip(c).map(|(a, b)| a - b).collect();
                if self.depth(p, &m) <= h {
                    out.insert(m);
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    pub fn restrict_agrees(&self, o: &SphericalFunction, pts: &[Coweight]) -> bool {
        pts.iter().all(|x| self.values.get(x).cloned().unwrap_or_default() == o.values.get(x).cloned().unwrap_or_default())
    }
}

fn check(p: &Parabolic, s: &GradedSeries, phi: &SphericalFunction) -> Result<()> {
    if s.j != p.j || phi.j != p.j {
        return Err(Error::Mismatch("parabolic of series, function and operator differ".into()));
    }
    Ok(())
}

/// Evaluates `m ↦ pre(m)·Σ_{λ} inner(λ+m)·φ(λ+m)·s(λ)` on every `m` of `pts`.
fn twisted_convolution(
    rd: &RootDatum,
    p: &Parabolic,
    s: &GradedSeries,
    phi: &SphericalFunction,
    pts: &[Coweight],
    pre: impl Fn(&[i64]) -> RatFunc,
    inner: impl Fn(&[i64]) -> RatFunc,
) -> Result<BTreeMap<Coweight, RatFunc>> {
    let need = pts.iter().map(|m| phi.depth(p, m)).max().unwrap_or(0);
    if need > s.height() {
        return Err(Error::Truncation(format!("series known to height {}, output needs height {need}", s.height())));
    }
    let cone = monoid_points(&p.u_coroots(rd), &p.two_rho_p, need.max(0))?;
    let mut out = BTreeMap::new();
    for m in pts {
        let d = phi.depth(p, m);
        let mut acc = RatFunc::zero();
        for lam in cone.iter().take_while(|l| p.height(l) <= d) {
            let c = s.indicator_coeff(lam);
            if c.is_zero() {
                continue;
            }
            let x: Coweight = lam.iter().zip(m).map(|(a, b)| a + b).collect();
            let v = phi.value(p, &x)?;
            if !v.is_zero() {
                acc += &(&(&inner(&x) * &v) * &c);
            }
        }
        let v = &pre(m) * &acc;
        if !v.is_zero() {
            out.insert(m.clone(), v);
        }
    }
    Ok(out)
}

fn output_points(rd: &RootDatum, p: &Parabolic, s: &GradedSeries, phi: &SphericalFunction, at: Option<&[Coweight]>) -> Result<(Vec<Coweight>, i64)> {
    let h = phi.window.map_or(s.height(), |w| w.min(s.height()));
    let pts = match at {
        Some(pts) => pts.to_vec(),
        None => phi.window_points(rd, p, h)?,
    };
    Ok((pts, h))
}

/// `R(φ)(m) = δ_P(m)⁻¹ Σ_λ φ(λ+m) μ(λ)`, on `at` or on the full window.
pub fn apply_r_k(rd: &RootDatum, p: &Parabolic, mu: &GradedSeries, phi: &SphericalFunction, at: Option<&[Coweight]>) -> Result<SphericalFunction> {
    check(p, mu, phi)?;
    let (pts, h) = output_points(rd, p, mu, phi, at)?;
    let values = twisted_convolution(rd, p, mu, phi, &pts, |m| delta_p(p, m).inv().expect("nonzero"), |_| RatFunc::one())?;
    Ok(SphericalFunction { j: p.j.clone(), values, tops: phi.tops.clone(), window: Some(h) })
}

/// `R⁻¹(φ)(m) = Σ_λ δ_P(λ+m) φ(λ+m) ν(λ)`.
pub fn apply_r_inverse_k(rd: &RootDatum, p: &Parabolic, nu: &GradedSeries, phi: &SphericalFunction, at: Option<&[Coweight]>) -> Result<SphericalFunction> {
    check(p, nu, phi)?;
    let (pts, h) = output_points(rd, p, nu, phi, at)?;
    let values = twisted_convolution(rd, p, nu, phi, &pts, |_| RatFunc::one(), |x| delta_p(p, x))?;
    Ok(SphericalFunction { j: p.j.clone(), values, tops: phi.tops.clone(), window: Some(h) })
}

/// `Asymp_P(δ_K)(λ) = ν(λ)`.
pub fn asymp_delta_k(nu: &GradedSeries, lambda: &[i64]) -> Result<RatFunc> {
    let h = nu.ht(lambda);
    if h > nu.height() {
        return Err(Error::Truncation(format!("{lambda:?} has height {h}, ν known to {}", nu.height())));
    }
    Ok(nu.indicator_coeff(lambda))
}

#[derive(Clone, Debug, Serialize)]
pub struct RoundTrip {
    pub points: usize,
    pub inverse_after_r: bool,
    pub r_after_inverse: bool,
}

/// Both composites on the window of a finitely supported `φ`.
pub fn round_trip(rd: &RootDatum, p: &Parabolic, mu: &GradedSeries, nu: &GradedSeries, phi: &SphericalFunction) -> Result<RoundTrip> {
    let r = apply_r_k(rd, p, mu, phi, None)?;
    let back = apply_r_inverse_k(rd, p, nu, &r, None)?;
    let ri = apply_r_inverse_k(rd, p, nu, phi, None)?;
    let fwd = apply_r_k(rd, p, mu, &ri, None)?;
    let h = r.window.unwrap_or(0);
    let pts = phi.window_points(rd, p, h)?;
    Ok(RoundTrip {
        points: pts.len(),
        inverse_after_r: back.restrict_agrees(phi, &pts),
        r_after_inverse: fwd.restrict_agrees(phi, &pts),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{gk_mu, nu};
    use crate::root_datum::preset;

    #[test]
    fn a1_indicator() {
        let rd = preset("A1");
        let b = rd.parabolic(&[]).unwrap();
        let mu = gk_mu(&rd, &b, 10).unwrap();
        let phi = SphericalFunction::indicator(&b, vec![0]);
        let r = apply_r_k(&rd, &b, &mu, &phi, None).unwrap();
        for n in 0..=5i64 {
            let want = &RatFunc::q_pow(-2 * n) * &mu.indicator_coeff(&[n]);
            assert_eq!(r.values.get(&vec![-n]).cloned().unwrap_or_default(), want);
        }
        let nv = nu(&rd, &b, 10).unwrap();
        let rt = round_trip(&rd, &b, &mu, &nv, &phi).unwrap();
        assert!(rt.inverse_after_r && rt.r_after_inverse);
    }

    #[test]
    fn truncation_is_an_error() {
        let rd = preset("A1");
        let b = rd.parabolic(&[]).unwrap();
        let mu = gk_mu(&rd, &b, 4).unwrap();
        let phi = SphericalFunction::indicator(&b, vec![0]);
        assert!(apply_r_k(&rd, &b, &mu, &phi, Some(&[vec![-3]])).is_err());
    }
}
