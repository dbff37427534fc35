//! Sparse formal series on a lattice, truncated by a linear height.
//!
//! Supports are required to lie in a pointed monoid on which the height is
//! positive away from the apex, so every height slab is finite.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::dot_i;
use crate::qfield::RatFunc;
use crate::root_datum::Coweight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSeries {
    /// Height covector; terms of height above `height` are dropped.
    pub grading: Vec<i64>,
    pub height: i64,
    coeffs: BTreeMap<Coweight, RatFunc>,
}

impl LatticeSeries {
    pub fn zero(grading: Vec<i64>, height: i64) -> Self {
        LatticeSeries { grading, height, coeffs: BTreeMap::new() }
    }

    pub fn unit(grading: Vec<i64>, height: i64) -> Self {
        let mut s = LatticeSeries::zero(grading, height);
        let n = s.grading.len();
        s.coeffs.insert(vec![0; n], RatFunc::one());
        s
    }

    pub fn rank(&self) -> usize {
        self.grading.len()
    }

    pub fn ht(&self, x: &[i64]) -> i64 {
        dot_i(&self.grading, x)
    }

    /// Add `c·e^x`; terms above the truncation height are dropped.
    pub fn add_term(&mut self, x: Coweight, c: &RatFunc) {
        if c.is_zero() || self.ht(&x) > self.height {
            return;
        }
        let v = self.coeffs.remove(&x).unwrap_or_default() + c;
        if !v.is_zero() {
            self.coeffs.insert(x, v);
        }
    }

    pub fn coeff(&self, x: &[i64]) -> RatFunc {
        self.coeffs.get(x).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, h: i64) -> Self {
        let mut s = LatticeSeries::zero(self.grading.clone(), h.min(self.height));
        for (x, c) in &self.coeffs {
            s.add_term(x.clone(), c);
        }
        s
    }

    pub fn map_coeffs(&self, f: impl Fn(&Coweight, &RatFunc) -> RatFunc) -> Self {
        let mut s = LatticeSeries::zero(self.grading.clone(), self.height);
        for (x, c) in &self.coeffs {
            s.add_term(x.clone(), &f(x, c));
        }
        s
    }

    fn check_compatible(&self, o: &LatticeSeries) -> Result<()> {
        if self.grading != o.grading {
            return Err(Error::Mismatch("series graded by different heights".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &LatticeSeries) -> Result<Self> {
        self.check_compatible(o)?;
        let mut s = self.truncate(self.height.min(o.height));
        for (x, c) in &o.coeffs {
            s.add_term(x.clone(), c);
        }
        Ok(s)
    }

    pub fn scale(&self, a: &RatFunc) -> Self {
        self.map_coeffs(|_, c| c * a)
    }

    /// Cauchy product truncated at the smaller height.
    pub fn mul(&self, o: &LatticeSeries) -> Result<Self> {
        self.check_compatible(o)?;
        let h = self.height.min(o.height);
        let mut acc: BTreeMap<Coweight, RatFunc> = BTreeMap::new();
        for (x, a) in &self.coeffs {
            let hx = self.ht(x);
            if hx > h {
                continue;
            }
            for (y, b) in &o.coeffs {
                if hx + o.ht(y) > h {
                    continue;
                }
                let z: Coweight = x.iter().zip(y).map(|(u, v)| u + v).collect();
                *acc.entry(z).or_default() += &(a * b);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(LatticeSeries { grading: self.grading.clone(), height: h, coeffs: acc })
    }

    /// Convolution inverse by recursion on height.
    pub fn invert(&self) -> Result<Self> {
        let n = self.rank();
        let c0 = self.coeff(&vec![0; n]);
        if c0.is_zero() {
            return Err(Error::Computation("constant term is zero; series is not a unit".into()));
        }
        let inv0 = c0.inv()?;
        let gens: Vec<Coweight> = self.coeffs.keys().filter(|x| x.iter().any(|&v| v != 0)).cloned().collect();
        let points = monoid_points(&gens, &self.grading, self.height)?;
        let mut out: BTreeMap<Coweight, RatFunc> = BTreeMap::new();
        out.insert(vec![0; n], inv0.clone());
        for lam in points.iter().skip(1) {
            let mut acc = RatFunc::zero();
            for (k, s) in &self.coeffs {
                if k.iter().all(|&v| v == 0) {
                    continue;
                }
                let rest: Coweight = lam.iter().zip(k).map(|(a, b)| a - b).collect();
                if let Some(v) = out.get(&rest) {
                    acc += &(s * v);
                }
            }
            if !acc.is_zero() {
                out.insert(lam.clone(), -(&inv0 * &acc));
            }
        }
        Ok(LatticeSeries { grading: self.grading.clone(), height: self.height, coeffs: out })
    }

    /// Coefficients agree up to the smaller truncation height.
    pub fn agrees_with(&self, o: &LatticeSeries) -> bool {
        let h = self.height.min(o.height);
        self.grading == o.grading && self.truncate(h).coeffs == o.truncate(h).coeffs
    }

    pub fn is_unit(&self) -> bool {
        self.agrees_with(&LatticeSeries::unit(self.grading.clone(), self.height))
    }
}

/// Points of the monoid generated by `gens` with height at most `h`, ordered by
/// height then lexicographically; the apex comes first.
pub fn monoid_points(gens: &[Coweight], grading: &[i64], h: i64) -> Result<Vec<Coweight>> {
    if let Some(g) = gens.iter().find(|g| dot_i(grading, g) <= 0) {
        return Err(Error::Computation(format!("generator {g:?} has nonpositive height; slabs would be infinite")));
    }
    let n = grading.len();
    let mut seen: BTreeMap<Coweight, i64> = BTreeMap::new();
    seen.insert(vec![0; n], 0);
    let mut frontier = vec![vec![0; n]];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y: Coweight = x.iter().zip(g).map(|(a, b)| a + b).collect();
            let hy = dot_i(grading, &y);
            if hy <= h && !seen.contains_key(&y) {
                seen.insert(y.clone(), hy);
                frontier.push(y);
            }
        }
    }
    let mut pts: Vec<(i64, Coweight)> = seen.into_iter().map(|(x, hx)| (hx, x)).collect();
    pts.sort();
    Ok(pts.into_iter().map(|(_, x)| x).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        let mut s = LatticeSeries::unit(vec![2], 10);
        s.add_term(vec![1], &RatFunc::from_int(-1));
        let inv = s.invert().unwrap();
        for k in 0..=5 {
            assert_eq!(inv.coeff(&[k]), RatFunc::one());
        }
        assert!(s.mul(&inv).unwrap().is_unit());
    }

    #[test]
    fn nonpositive_generator_rejected() {
        assert!(monoid_points(&[vec![1, -1]], &[1, 1], 4).is_err());
    }
}
