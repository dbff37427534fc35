//! Completed Hecke algebras in the Satake model, and the Gindikin–Karpelevich
//! measure with its inverse.

use crate::charring::{lambda_series, sym_series, u_p_graded_pieces, GradedCharSeries};
use crate::error::{Error, Result};
use crate::qfield::RatFunc;
use crate::root_datum::{Coweight, Parabolic, RootDatum};
use crate::series::LatticeSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Monomials `e^λ`.
    E,
    /// Indicators `1_λ`, with `e^λ = q^{⟨ρ̌_P,λ⟩}·1_λ`.
    Indicator,
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e" => Ok(Basis::E),
            "indicator" | "1" => Ok(Basis::Indicator),
            _ => Err(Error::Usage(format!("unknown basis '{s}' (expected e or indicator)"))),
        }
    }
}

/// Element of `H⁺_T` supported on the positive cone of `U_P`, stored in the
/// e-basis, truncated at `⟨2ρ̌_P, λ⟩ ≤ height`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    pub j: Vec<usize>,
    pub e: LatticeSeries,
}

impl GradedSeries {
    pub fn unit(p: &Parabolic, h: i64) -> Self {
        GradedSeries { j: p.j.clone(), e: LatticeSeries::unit(p.two_rho_p.clone(), h) }
    }

    pub fn zero(p: &Parabolic, h: i64) -> Self {
        GradedSeries { j: p.j.clone(), e: LatticeSeries::zero(p.two_rho_p.clone(), h) }
    }

    pub fn height(&self) -> i64 {
        self.e.height
    }

    pub fn ht(&self, x: &[i64]) -> i64 {
        self.e.ht(x)
    }

    /// Series with the given coefficients in the chosen basis.
    pub fn from_terms(p: &Parabolic, h: i64, basis: Basis, terms: &[(Coweight, RatFunc)]) -> Self {
        let mut s = GradedSeries::zero(p, h);
        for (x, c) in terms {
            let c = match basis {
                Basis::E => c.clone(),
                Basis::Indicator => c * &RatFunc::s_pow(-s.ht(x)),
            };
            s.e.add_term(x.clone(), &c);
        }
        s
    }

    pub fn e_coeff(&self, x: &[i64]) -> RatFunc {
        self.e.coeff(x)
    }

    pub fn indicator_coeff(&self, x: &[i64]) -> RatFunc {
        &self.e.coeff(x) * &RatFunc::s_pow(self.ht(x))
    }

    pub fn coeff(&self, basis: Basis, x: &[i64]) -> RatFunc {
        match basis {
            Basis::E => self.e_coeff(x),
            Basis::Indicator => self.indicator_coeff(x),
        }
    }

    /// Nonzero terms in the chosen basis, ordered by height then lexicographically.
    pub fn terms(&self, basis: Basis) -> Vec<(Coweight, RatFunc)> {
        let mut v: Vec<(i64, Coweight, RatFunc)> =
            self.e.terms().map(|(x, _)| (self.ht(x), x.clone(), self.coeff(basis, x))).collect();
        v.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        v.into_iter().map(|(_, x, c)| (x, c)).collect()
    }

    pub fn convolve(&self, o: &GradedSeries) -> Result<Self> {
        if self.j != o.j {
            return Err(Error::Mismatch(format!("parabolics {:?} and {:?}", self.j, o.j)));
        }
        Ok(GradedSeries { j: self.j.clone(), e: self.e.mul(&o.e)? })
    }

    pub fn invert(&self) -> Result<Self> {
        Ok(GradedSeries { j: self.j.clone(), e: self.e.invert()? })
    }

    pub fn agrees_with(&self, o: &GradedSeries) -> bool {
        self.j == o.j && self.e.agrees_with(&o.e)
    }

    pub fn is_unit(&self) -> bool {
        self.e.is_unit()
    }

    /// e-basis coefficients are constant on `W_M`-orbits (up to truncation).
    pub fn is_invariant(&self, rd: &RootDatum, p: &Parabolic) -> bool {
        // W_M preserves ⟨2ρ̌_P, ·⟩, so orbits never straddle the truncation.
        self.e.terms().all(|(x, c)| p.weyl_m.iter().all(|&w| &self.e.coeff(&rd.weyl[w].act(x)) == c))
    }
}

/// `∏_{α ∈ Φ⁺_G − Φ_M} (1 − q⁻¹e^α)/(1 − e^α)` expanded to height `h`.
pub fn gk_mu(rd: &RootDatum, p: &Parabolic, h: i64) -> Result<GradedSeries> {
    if h < 0 {
        return Err(Error::Usage("height must be nonnegative".into()));
    }
    let g = p.two_rho_p.clone();
    let c = RatFunc::one() - RatFunc::q_pow(-1);
    let mut acc = LatticeSeries::unit(g.clone(), h);
    for a in p.u_coroots(rd) {
        let ha = crate::linalg::dot_i(&g, &a);
        if ha <= 0 {
            return Err(Error::Computation(format!("coroot {a:?} has nonpositive height")));
        }
        let mut f = LatticeSeries::unit(g.clone(), h);
        let mut k = 1;
        while k * ha <= h {
            f.add_term(a.iter().map(|x| x * k).collect(), &c);
            k += 1;
        }
        acc = acc.mul(&f)?;
    }
    Ok(GradedSeries { j: p.j.clone(), e: acc })
}

/// Convolution inverse of `gk_mu`.
pub fn nu(rd: &RootDatum, p: &Parabolic, h: i64) -> Result<GradedSeries> {
    let n = gk_mu(rd, p, h)?.invert()?;
    if !n.e_coeff(&vec![0; rd.rank]).is_one() {
        return Err(Error::Computation("constant term of ν is not 1".into()));
    }
    Ok(n)
}

/// The algebra map to the completed character ring: `e^λ` becomes the weight
/// `λ` scaled by `q^{⟨ρ̌_P,λ⟩}`.
pub fn satake_character_bridge(rd: &RootDatum, p: &Parabolic, s: &GradedSeries) -> Result<GradedCharSeries> {
    if s.j != p.j {
        return Err(Error::Mismatch(format!("series for {:?}, parabolic {:?}", s.j, p.j)));
    }
    if !s.is_invariant(rd, p) {
        return Err(Error::Precondition("series is not W_M-invariant".into()));
    }
    let series = s.e.map_coeffs(|x, c| c * &RatFunc::s_pow(s.ht(x)));
    Ok(GradedCharSeries::new(p, series))
}

/// `q^{level}` with the level possibly half-integral.
fn q_level(twice: i64) -> RatFunc {
    RatFunc::s_pow(twice)
}

/// `∏_i Λ(q^{−1+a_i}, gr^i)·S(q^{a_i}, gr^i)`.
pub fn satake_mu_product(rd: &RootDatum, p: &Parabolic, h: i64) -> Result<GradedCharSeries> {
    let mut acc = GradedCharSeries::unit(p, h);
    for piece in u_p_graded_pieces(rd, p)? {
        let a2 = piece.twice_level();
        acc = acc.mul(&lambda_series(p, &q_level(a2 - 2), &piece, h)?)?;
        acc = acc.mul(&sym_series(p, &q_level(a2), &piece, h)?)?;
    }
    Ok(acc)
}

/// `∏_i Λ(q^{a_i}, gr^i)·S(q^{−1+a_i}, gr^i)`.
pub fn satake_nu_product(rd: &RootDatum, p: &Parabolic, h: i64) -> Result<GradedCharSeries> {
    let mut acc = GradedCharSeries::unit(p, h);
    for piece in u_p_graded_pieces(rd, p)? {
        let a2 = piece.twice_level();
        acc = acc.mul(&lambda_series(p, &q_level(a2), &piece, h)?)?;
        acc = acc.mul(&sym_series(p, &q_level(a2 - 2), &piece, h)?)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct BridgeReport {
    pub mu_matches: bool,
    pub nu_matches: bool,
    pub product_is_unit: bool,
    pub lprod: bool,
}

impl BridgeReport {
    pub fn all(&self) -> bool {
        self.mu_matches && self.nu_matches && self.product_is_unit && self.lprod
    }
}

/// Checks `𝒮(μ)` and `𝒮(ν)` against the product formulas and `𝒮(μ)𝒮(ν) = 1`.
pub fn satake_report(rd: &RootDatum, p: &Parabolic, h: i64) -> Result<BridgeReport> {
    let mu = gk_mu(rd, p, h)?;
    let nv = nu(rd, p, h)?;
    let smu = satake_character_bridge(rd, p, &mu)?;
    let snu = satake_character_bridge(rd, p, &nv)?;
    Ok(BridgeReport {
        mu_matches: smu.agrees_with(&satake_mu_product(rd, p, h)?),
        nu_matches: snu.agrees_with(&satake_nu_product(rd, p, h)?),
        product_is_unit: smu.mul(&snu)?.is_unit(),
        lprod: verify_lprod(rd, p, h)?,
    })
}

/// `Λ(q^a)/Λ(q^{−1+a}) = Λ(q^a)·S(q^{−1+a})` termwise for every graded piece.
pub fn verify_lprod(rd: &RootDatum, p: &Parabolic, h: i64) -> Result<bool> {
    for piece in u_p_graded_pieces(rd, p)? {
        let a2 = piece.twice_level();
        let num = lambda_series(p, &q_level(a2), &piece, h)?;
        let den = lambda_series(p, &q_level(a2 - 2), &piece, h)?;
        let lhs = num.mul(&den.invert()?)?;
        let rhs = num.mul(&sym_series(p, &q_level(a2 - 2), &piece, h)?)?;
        if !lhs.agrees_with(&rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::parse_ratfunc;
    use crate::root_datum::preset;

    #[test]
    fn a1_values() {
        let rd = preset("A1");
        let b = rd.parabolic(&[]).unwrap();
        let mu = gk_mu(&rd, &b, 12).unwrap();
        let nv = nu(&rd, &b, 12).unwrap();
        for n in 1..=6i64 {
            let want = RatFunc::q_pow(n) - RatFunc::q_pow(n - 1);
            assert_eq!(mu.indicator_coeff(&[n]), want);
            assert_eq!(nv.indicator_coeff(&[n]), parse_ratfunc("1-q").unwrap());
        }
    }

    #[test]
    fn a2_value() {
        let rd = preset("A2");
        let b = rd.parabolic(&[]).unwrap();
        let mu = gk_mu(&rd, &b, 4).unwrap();
        assert_eq!(mu.indicator_coeff(&[1, 1]), parse_ratfunc("2*q^2 - 3*q + 1").unwrap());
        assert!(mu.convolve(&nu(&rd, &b, 4).unwrap()).unwrap().is_unit());
    }

    #[test]
    fn half_integer_levels() {
        let rd = preset("A2");
        let p = rd.parabolic(&[0]).unwrap();
        assert!(satake_report(&rd, &p, 9).unwrap().all());
    }
}
