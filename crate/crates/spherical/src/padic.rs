//! Brute-force Gindikin–Karpelevich measure over `F_p((ϖ))` for SL2 and SL3.
//!
//! `U` is the upper unipotent radical with matrix-entry coordinates. The torus
//! part of `g = k·t·u⁻` is read off from valuations of the minors supported on
//! the last `r` columns: their minimum is `Σ_{i>n−r} v(t_i)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_datum::Coweight;

pub const CELL_CAP: u64 = 10_000_000;

/// Precision of structural entries known exactly.
pub const EXACT: i64 = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Group {
    SL2,
    SL3,
}

impl Group {
    pub fn n(self) -> usize {
        match self {
            Group::SL2 => 2,
            Group::SL3 => 3,
        }
    }

    pub fn dim_u(self) -> usize {
        let n = self.n();
        n * (n - 1) / 2
    }

    /// The root datum with the same coweight coordinates.
    pub fn datum_name(self) -> &'static str {
        match self {
            Group::SL2 => "A1",
            Group::SL3 => "A2",
        }
    }
}

impl std::str::FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "SL2" => Ok(Group::SL2),
            "SL3" => Ok(Group::SL3),
            _ => Err(Error::Usage(format!("unknown group '{s}' (expected SL2 or SL3)"))),
        }
    }
}

/// Valuation of an element known modulo `ϖ^prec`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Val {
    Exact(i64),
    AtLeast(i64),
}

/// `Σ_k c_k ϖ^{low+k}` modulo `ϖ^prec`, coefficients in `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentElement {
    pub p: u64,
    pub low: i64,
    pub coeffs: Vec<u64>,
    pub prec: i64,
}

impl LaurentElement {
    pub fn new(p: u64, low: i64, coeffs: Vec<u64>, prec: i64) -> Self {
        let mut e = LaurentElement { p, low, coeffs: coeffs.into_iter().map(|c| c % p).collect(), prec };
        e.normalize();
        e
    }

    pub fn constant(p: u64, c: u64, prec: i64) -> Self {
        LaurentElement::new(p, 0, vec![c], prec)
    }

    /// `c·ϖ^k`.
    pub fn monomial(p: u64, c: u64, k: i64, prec: i64) -> Self {
        LaurentElement::new(p, k, vec![c], prec)
    }

    fn normalize(&mut self) {
        let keep = (self.prec - self.low).max(0) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn valuation(&self) -> Val {
        match self.coeffs.iter().position(|&c| c != 0) {
            Some(k) => Val::Exact(self.low + k as i64),
            None => Val::AtLeast(self.prec),
        }
    }

    fn lower_bound(&self) -> i64 {
        match self.valuation() {
            Val::Exact(v) => v,
            Val::AtLeast(v) => v,
        }
    }

    fn coeff(&self, e: i64) -> u64 {
        let k = e - self.low;
        if k < 0 {
            0
        } else {
            self.coeffs.get(k as usize).copied().unwrap_or(0)
        }
    }

    pub fn add(&self, o: &LaurentElement) -> LaurentElement {
        let low = self.low.min(o.low);
        let prec = self.prec.min(o.prec);
        let high = (self.low + self.coeffs.len() as i64).max(o.low + o.coeffs.len() as i64).min(prec);
        let len = (high - low).max(0);
        let c = (0..len).map(|k| (self.coeff(low + k) + o.coeff(low + k)) % self.p).collect();
        LaurentElement::new(self.p, low, c, prec)
    }

    pub fn neg(&self) -> LaurentElement {
        let c = self.coeffs.iter().map(|&c| (self.p - c) % self.p).collect();
        LaurentElement::new(self.p, self.low, c, self.prec)
    }

    pub fn sub(&self, o: &LaurentElement) -> LaurentElement {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &LaurentElement) -> LaurentElement {
        let prec = (self.prec + o.lower_bound()).min(o.prec + self.lower_bound()).min(EXACT);
        let low = self.low + o.low;
        let mut c = vec![0u64; self.coeffs.len() + o.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        LaurentElement::new(self.p, low, c, prec)
    }
}

/// Minimum of valuations, when it is determined.
fn min_val(vals: &[Val]) -> Result<i64> {
    let exact = vals.iter().filter_map(|v| if let Val::Exact(x) = v { Some(*x) } else { None }).min();
    let bound = vals.iter().filter_map(|v| if let Val::AtLeast(x) = v { Some(*x) } else { None }).min();
    match (exact, bound) {
        (Some(e), None) => Ok(e),
        (Some(e), Some(b)) if e <= b => Ok(e),
        _ => Err(Error::Precision("minimum valuation of minors is not determined at this precision".into())),
    }
}

fn det(m: &[Vec<LaurentElement>], rows: &[usize], cols: &[usize]) -> LaurentElement {
    if rows.len() == 1 {
        return m[rows[0]][cols[0]].clone();
    }
    let mut acc: Option<LaurentElement> = None;
    for (k, &r) in rows.iter().enumerate() {
        let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let term = m[r][cols[0]].mul(&det(m, &rest, &cols[1..]));
        let term = if k % 2 == 1 { term.neg() } else { term };
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.unwrap()
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == r).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

/// The coweight `λ = Σ c_k α_k` with `g ∈ K·ϖ^λ·U⁻`, where `c_k = −v_{n−k}`.
pub fn iwasawa_ord(group: Group, g: &[Vec<LaurentElement>]) -> Result<Coweight> {
    let n = group.n();
    if g.len() != n || g.iter().any(|r| r.len() != n) {
        return Err(Error::Usage(format!("expected a {n}x{n} matrix")));
    }
    let mut v = vec![0i64; n + 1];
    for (r, slot) in v.iter_mut().enumerate().skip(1) {
        let cols: Vec<usize> = (n - r..n).collect();
        let vals: Vec<Val> = subsets(n, r).iter().map(|rows| det(g, rows, &cols).valuation()).collect();
        *slot = min_val(&vals)?;
    }
    if v[n] != 0 {
        return Err(Error::Precondition(format!("determinant has valuation {}, not in SL_{n}", v[n])));
    }
    Ok((1..n).map(|k| -v[n - k]).collect())
}

fn unipotent(group: Group, p: u64, coords: &[LaurentElement]) -> Vec<Vec<LaurentElement>> {
    let n = group.n();
    let mut m = vec![vec![LaurentElement::constant(p, 0, EXACT); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = LaurentElement::constant(p, 1, EXACT);
    }
    // coordinates in row-major order above the diagonal
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            m[i][j] = coords[k].clone();
            k += 1;
        }
    }
    m
}

#[derive(Clone, Debug, Serialize)]
pub struct Histogram {
    pub group: Group,
    pub q: u64,
    /// Coordinates range over `ϖ^{−window}𝔬 / ϖ^{precision}𝔬`.
    pub window: i64,
    pub precision: i64,
    pub cells: u64,
    /// Measure of the part of the window mapping to `λ`; this is the full
    /// measure of `{u : ord(u) = λ}` when `⟨ρ̌, λ⟩ ≤ window`.
    #[serde(serialize_with = "ser_measures")]
    pub measures: BTreeMap<Coweight, BigRational>,
    #[serde(serialize_with = "ser_rational")]
    pub total: BigRational,
}

fn ser_rational<S: serde::Serializer>(x: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn ser_measures<S: serde::Serializer>(m: &BTreeMap<Coweight, BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.len()))?;
    for (k, v) in m {
        seq.serialize_element(&(k, v.to_string()))?;
    }
    seq.end()
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Number of cells for a window/precision pair, or `None` on overflow.
pub fn cell_count(group: Group, q: u64, window: i64, precision: i64) -> Option<u64> {
    let digits = u32::try_from(window + precision).ok()?.checked_mul(group.dim_u() as u32)?;
    q.checked_pow(digits)
}

/// Pushes Haar measure on the window forward along `ord`, cell by cell.
pub fn mu_histogram(group: Group, q: u64, window: i64, precision: i64) -> Result<Histogram> {
    if !is_prime(q) {
        return Err(Error::Usage(format!("q = {q} must be prime for the oracle")));
    }
    if window < 0 || precision < 0 {
        return Err(Error::Usage("window and precision must be nonnegative".into()));
    }
    let cells = cell_count(group, q, window, precision)
        .filter(|&c| c <= CELL_CAP)
        .ok_or_else(|| Error::Precondition(format!("more than {CELL_CAP} cells; refusing to enumerate")))?;
    let digits = (window + precision) as usize;
    let d = group.dim_u();
    let decode = |mut idx: u64| -> Vec<LaurentElement> {
        (0..d)
            .map(|_| {
                let mut c = Vec::with_capacity(digits);
                for _ in 0..digits {
                    c.push(idx % q);
                    idx /= q;
                }
                LaurentElement::new(q, -window, c, precision)
            })
            .collect()
    };
    let counts = (0..cells)
        .into_par_iter()
        .try_fold(BTreeMap::<Coweight, u64>::new, |mut acc, idx| {
            let u = unipotent(group, q, &decode(idx));
            *acc.entry(iwasawa_ord(group, &u)?).or_default() += 1;
            Ok::<_, Error>(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            Ok(a)
        })?;
    let cell = BigRational::new(BigInt::one(), BigInt::from(q).pow((precision as u32) * d as u32));
    let mut measures = BTreeMap::new();
    let mut total = BigRational::zero();
    for (k, c) in counts {
        let m = &cell * BigInt::from(c);
        total += &m;
        measures.insert(k, m);
    }
    Ok(Histogram { group, q, window, precision, cells, measures, total })
}

impl Histogram {
    /// Entries whose fibre lies entirely inside the window.
    pub fn complete(&self) -> impl Iterator<Item = (&Coweight, &BigRational)> {
        // ⟨ρ̌, λ⟩ in coroot coordinates is the coefficient sum
        self.measures.iter().filter(|(k, _)| k.iter().sum::<i64>() <= self.window)
    }

    /// Haar measure of the window, `q^{window·dim U}`.
    pub fn window_measure(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.q).pow((self.window as u32) * self.group.dim_u() as u32))
    }
}

/// Measure of `{u ∈ U : ord(u) = λ}`.
pub fn mu_oracle(group: Group, lambda: &[i64], q: u64, precision: i64) -> Result<BigRational> {
    if lambda.len() != group.n() - 1 {
        return Err(Error::Usage(format!("coweight must have {} coordinates", group.n() - 1)));
    }
    if lambda.iter().any(|&c| c < 0) {
        // ord(U) lies in the positive cone
        return Ok(BigRational::zero());
    }
    let window: i64 = lambda.iter().sum();
    let h = mu_histogram(group, q, window, precision)?;
    let m = h.complete().find(|(k, _)| k.as_slice() == lambda).map(|(_, v)| v.clone()).unwrap_or_default();
    Ok(m)
}

/// Smallest precision at which every cell of the window is valuation-determined.
pub fn default_precision(group: Group, window: i64) -> i64 {
    match group {
        Group::SL2 => 1,
        Group::SL3 => window.max(1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(p: u64, low: i64, c: &[u64], prec: i64) -> LaurentElement {
        LaurentElement::new(p, low, c.to_vec(), prec)
    }

    #[test]
    fn sl2_examples() {
        let p = 2;
        let one = el(p, 0, &[1], EXACT);
        let zero = el(p, 0, &[], EXACT);
        let id = vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]];
        assert_eq!(iwasawa_ord(Group::SL2, &id).unwrap(), vec![0]);
        let u = vec![vec![one.clone(), el(p, -1, &[1], 5)], vec![zero.clone(), one.clone()]];
        assert_eq!(iwasawa_ord(Group::SL2, &u).unwrap(), vec![1]);
        let t = vec![vec![el(p, -1, &[1], 5), zero.clone()], vec![zero, el(p, 1, &[1], 5)]];
        assert_eq!(iwasawa_ord(Group::SL2, &t).unwrap(), vec![-1]);
    }

    #[test]
    fn sl2_measures() {
        let r = |a: i64| BigRational::from_integer(a.into());
        assert_eq!(mu_oracle(Group::SL2, &[0], 5, 1).unwrap(), r(1));
        assert_eq!(mu_oracle(Group::SL2, &[1], 2, 1).unwrap(), r(1));
        assert_eq!(mu_oracle(Group::SL2, &[2], 3, 1).unwrap(), r(6));
    }

    #[test]
    fn precision_shortfall_detected() {
        assert!(matches!(mu_histogram(Group::SL3, 2, 2, 0), Err(Error::Precision(_))));
    }

    #[test]
    fn conservation() {
        let h = mu_histogram(Group::SL3, 2, 2, 2).unwrap();
        assert_eq!(h.total, h.window_measure());
    }
}

#[cfg(test)]
mod agreement {
    use super::*;
    use crate::hecke::gk_mu;
    use crate::root_datum::preset;

    #[test]
    fn sl3_matches_product_formula() {
        let h = mu_histogram(Group::SL3, 2, 2, 2).unwrap();
        let rd = preset("A2");
        let mu = gk_mu(&rd, &rd.parabolic(&[]).unwrap(), 8).unwrap();
        let two = BigRational::from_integer(2.into());
        let mut n = 0;
        for (k, m) in h.complete() {
            assert_eq!(mu.indicator_coeff(k).eval(&two).unwrap(), *m, "{k:?}");
            n += 1;
        }
        assert!(n >= 4);
    }
}
