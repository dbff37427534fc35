//! Rational cones on the coweight lattice: membership, duality, boundedness
//! and the Langlands retraction.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, dot, Q};
use crate::lp;
use crate::root_datum::{pair_q, Parabolic, RationalCoweight, RootDatum};

/// Rank bound for exact double-description conversions.
pub const MAX_CONVERSION_RANK: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConeId {
    PosG,
    NegPosG,
    PosU(Vec<usize>),
    NegPosU(Vec<usize>),
    DomM(Vec<usize>),
    PosGP(Vec<usize>),
    NegPosGP(Vec<usize>),
}

impl fmt::Display for ConeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let js = |j: &[usize]| j.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
        match self {
            ConeId::PosG => write!(f, "pos_G"),
            ConeId::NegPosG => write!(f, "neg_pos_G"),
            ConeId::PosU(j) => write!(f, "pos_U({})", js(j)),
            ConeId::NegPosU(j) => write!(f, "neg_pos_U({})", js(j)),
            ConeId::DomM(j) => write!(f, "dom_M({})", js(j)),
            ConeId::PosGP(j) => write!(f, "pos_GP({})", js(j)),
            ConeId::NegPosGP(j) => write!(f, "neg_pos_GP({})", js(j)),
        }
    }
}

impl ConeId {
    /// Parse a tag such as `pos_U`; `j` holds 0-based simple indices.
    pub fn parse(tag: &str, j: Vec<usize>) -> Result<Self> {
        Ok(match tag {
            "pos_G" => ConeId::PosG,
            "neg_pos_G" => ConeId::NegPosG,
            "pos_U" => ConeId::PosU(j),
            "neg_pos_U" => ConeId::NegPosU(j),
            "dom_M" => ConeId::DomM(j),
            "pos_GP" => ConeId::PosGP(j),
            "neg_pos_GP" => ConeId::NegPosGP(j),
            _ => return Err(Error::Usage(format!("unknown cone `{tag}`"))),
        })
    }
}

/// A cone given by generators: `{Σ a_i r_i + Σ b_k l_k : a ≥ 0}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Cone {
    pub rays: Vec<Vec<Q>>,
    pub lineality: Vec<Vec<Q>>,
}

impl Cone {
    pub fn from_rays(rays: Vec<Vec<Q>>) -> Self {
        Cone { rays, lineality: vec![] }
    }

    fn all_generators(&self) -> Vec<Vec<Q>> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(l.iter().map(|x| -x).collect());
        }
        g
    }

    /// Nonnegative coefficients expressing `x` in `all_generators` order.
    pub fn certificate(&self, x: &[Q]) -> Option<Vec<Q>> {
        lp::nonneg_combination(&self.all_generators(), x)
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.certificate(x).is_some()
    }

    /// Every generator of `other` lies in `self`.
    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.all_generators().iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &Cone) -> bool {
        self.contains_cone(other) && other.contains_cone(self)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(0, n, k, &mut vec![], &mut out);
    out
}

fn canonical_ray(v: &[Q]) -> Vec<BigInt> {
    linalg::primitive(v)
}

/// Extreme rays and lineality of `{x : a·x ≥ 0 for a in ineqs, e·x = 0 for e in eqs}`.
pub fn hrep_to_vrep(n: usize, ineqs: &[Vec<Q>], eqs: &[Vec<Q>]) -> Cone {
    let all: Vec<Vec<Q>> = ineqs.iter().chain(eqs).cloned().collect();
    let lineality = if all.is_empty() {
        (0..n).map(|i| (0..n).map(|j| linalg::q(i64::from(i == j))).collect()).collect()
    } else {
        linalg::nullspace(&all, n)
    };
    let mut base: Vec<Vec<Q>> = eqs.to_vec();
    base.extend(lineality.iter().cloned());
    let r0 = linalg::rank(&base, n);
    let mut rays: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    if r0 < n {
        let k = n - 1 - r0;
        for s in combinations(ineqs.len(), k) {
            let mut rows = base.clone();
            rows.extend(s.iter().map(|&i| ineqs[i].clone()));
            let ns = linalg::nullspace(&rows, n);
            if ns.len() != 1 {
                continue;
            }
            let v = &ns[0];
            let neg: Vec<Q> = v.iter().map(|x| -x).collect();
            if ineqs.iter().all(|a| !dot(a, v).is_negative()) {
                rays.insert(canonical_ray(v));
            } else if ineqs.iter().all(|a| !dot(a, &neg).is_negative()) {
                rays.insert(canonical_ray(&neg));
            }
        }
    }
    Cone { rays: rays.iter().map(|r| linalg::ints_to_q(r)).collect(), lineality }
}

/// Generators of the dual cone `{ℓ : ℓ·c ≥ 0 for all c in cone}`.
pub fn dual_cone(n: usize, cone: &Cone) -> Cone {
    hrep_to_vrep(n, &cone.rays, &cone.lineality)
}

/// Inequalities and equations cutting out a cone given by generators.
pub fn vrep_to_hrep(n: usize, cone: &Cone) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
    let d = dual_cone(n, cone);
    (d.rays, d.lineality)
}

fn to_q_all(vs: &[Vec<i64>]) -> Vec<Vec<Q>> {
    vs.iter().map(|v| linalg::to_q(v)).collect()
}

fn neg_all(vs: &[Vec<Q>]) -> Vec<Vec<Q>> {
    vs.iter().map(|v| v.iter().map(|x| -x).collect()).collect()
}

pub fn cone_generators(rd: &RootDatum, id: &ConeId) -> Result<Cone> {
    let simple = to_q_all(&rd.simple_coroots);
    Ok(match id {
        ConeId::PosG => Cone::from_rays(simple),
        ConeId::NegPosG => Cone::from_rays(neg_all(&simple)),
        ConeId::PosU(j) => Cone::from_rays(to_q_all(&rd.parabolic(j)?.u_coroots(rd))),
        ConeId::NegPosU(j) => Cone::from_rays(neg_all(&to_q_all(&rd.parabolic(j)?.u_coroots(rd)))),
        ConeId::DomM(j) => {
            let rows: Vec<Vec<Q>> = j.iter().map(|&i| linalg::to_q(&rd.simple_roots[i])).collect();
            rd.parabolic(j)?;
            hrep_to_vrep(rd.rank, &rows, &[])
        }
        ConeId::PosGP(j) | ConeId::NegPosGP(j) => {
            rd.parabolic(j)?;
            let rays = if matches!(id, ConeId::PosGP(_)) { simple.clone() } else { neg_all(&simple) };
            Cone { rays, lineality: j.iter().map(|&i| simple[i].clone()).collect() }
        }
    })
}

pub fn cone_member(rd: &RootDatum, id: &ConeId, x: &[Q]) -> Result<bool> {
    Ok(cone_generators(rd, id)?.contains(x))
}

/// Sets `{θ + c : θ ∈ base, c ∈ cone}`.
#[derive(Clone, Debug)]
pub struct SupportShape {
    pub base: Vec<RationalCoweight>,
    pub cone: ConeId,
}

impl SupportShape {
    pub fn new(mut base: Vec<RationalCoweight>, cone: ConeId) -> Self {
        base.sort();
        base.dedup();
        SupportShape { base, cone }
    }

    pub fn contains(&self, rd: &RootDatum, x: &[Q]) -> Result<bool> {
        let c = cone_generators(rd, &self.cone)?;
        Ok(self.base.iter().any(|b| {
            let d: Vec<Q> = x.iter().zip(b).map(|(a, b)| a - b).collect();
            c.contains(&d)
        }))
    }
}

/// Generators of the dominant weight cone in `Λ̌_Q`.
pub fn dominant_weight_cone(rd: &RootDatum) -> Cone {
    hrep_to_vrep(rd.rank, &to_q_all(&rd.simple_coroots), &[])
}

/// Every dominant weight is bounded above on the shape.
pub fn bounded_above(rd: &RootDatum, shape: &SupportShape) -> Result<bool> {
    let dom = dominant_weight_cone(rd);
    let c = cone_generators(rd, &shape.cone)?;
    let ok_ray = |r: &Vec<Q>| {
        c.rays.iter().all(|g| !dot(r, g).is_positive()) && c.lineality.iter().all(|l| dot(r, l).is_zero())
    };
    let ok_lin = |r: &Vec<Q>| c.rays.iter().chain(&c.lineality).all(|g| dot(r, g).is_zero());
    Ok(dom.rays.iter().all(ok_ray) && dom.lineality.iter().all(ok_lin))
}

/// The mirror statement: every dominant weight is bounded below on the shape.
pub fn bounded_below(rd: &RootDatum, shape: &SupportShape) -> Result<bool> {
    let dom = dominant_weight_cone(rd);
    let c = cone_generators(rd, &shape.cone)?;
    let ok_ray = |r: &Vec<Q>| {
        c.rays.iter().all(|g| !dot(r, g).is_negative()) && c.lineality.iter().all(|l| dot(r, l).is_zero())
    };
    let ok_lin = |r: &Vec<Q>| c.rays.iter().chain(&c.lineality).all(|g| dot(r, g).is_zero());
    Ok(dom.rays.iter().all(ok_ray) && dom.lineality.iter().all(ok_lin))
}

fn check_rank(rd: &RootDatum) -> Result<()> {
    if rd.rank > MAX_CONVERSION_RANK {
        return Err(Error::Precondition(format!("rank {} exceeds conversion bound {MAX_CONVERSION_RANK}", rd.rank)));
    }
    Ok(())
}

/// `Λ^pos_U = ⋂_{w ∈ W_M} w(Λ^pos_G)` by a cone-equality certificate.
pub fn check_pos_u_intersection(rd: &RootDatum, j: &[usize]) -> Result<bool> {
    check_rank(rd)?;
    let p = rd.parabolic(j)?;
    let pos_g = cone_generators(rd, &ConeId::PosG)?;
    let (ineqs, eqs) = vrep_to_hrep(rd.rank, &pos_g);
    let mut all_i = vec![];
    let mut all_e = vec![];
    for &w in &p.weyl_m {
        // x ∈ w(C) iff w⁻¹x ∈ C iff (a ∘ w⁻¹)·x ≥ 0
        let we = &rd.weyl[w];
        all_i.extend(ineqs.iter().map(|a| we.act_dual_q(a)));
        all_e.extend(eqs.iter().map(|a| we.act_dual_q(a)));
    }
    let inter = hrep_to_vrep(rd.rank, &all_i, &all_e);
    let pos_u = cone_generators(rd, &ConeId::PosU(p.j.clone()))?;
    Ok(inter.equals(&pos_u))
}

/// `Λ^pos_U ∩ (−Λ^+_M) = Λ^pos_G ∩ (−Λ^+_M)`.
pub fn check_pos_u_levi_clause(rd: &RootDatum, j: &[usize]) -> Result<bool> {
    check_rank(rd)?;
    let p = rd.parabolic(j)?;
    let anti: Vec<Vec<Q>> = p.j.iter().map(|&i| rd.simple_roots[i].iter().map(|&x| linalg::q(-x)).collect()).collect();
    let cut = |c: &Cone| {
        let (mut i, e) = vrep_to_hrep(rd.rank, c);
        i.extend(anti.iter().cloned());
        hrep_to_vrep(rd.rank, &i, &e)
    };
    let a = cut(&cone_generators(rd, &ConeId::PosU(p.j.clone()))?);
    let b = cut(&cone_generators(rd, &ConeId::PosG)?);
    Ok(a.equals(&b))
}

/// `W_M · Λ̌^+_G` equals the dual of `Λ^pos_U`, by double inclusion.
pub fn check_dual_cone(rd: &RootDatum, j: &[usize]) -> Result<bool> {
    check_rank(rd)?;
    let p = rd.parabolic(j)?;
    let u: Vec<Vec<Q>> = to_q_all(&p.u_coroots(rd));
    let dom = dominant_weight_cone(rd);
    // W_M · dominant chamber lands in the dual of Λ^pos_U
    for &w in &p.weyl_m {
        let we = &rd.weyl[w];
        for r in &dom.rays {
            let wr = we.act_dual_q(r);
            if u.iter().any(|g| dot(&wr, g).is_negative()) {
                return Ok(false);
            }
        }
        for l in &dom.lineality {
            let wl = we.act_dual_q(l);
            if u.iter().any(|g| !dot(&wl, g).is_zero()) {
                return Ok(false);
            }
        }
    }
    // the dual is W_M-stable: W_M permutes the generators of Λ^pos_U
    let gens: BTreeSet<Vec<i64>> = p.u_coroots(rd).into_iter().collect();
    for &w in &p.weyl_m {
        let img: BTreeSet<Vec<i64>> = gens.iter().map(|g| rd.weyl[w].act(g)).collect();
        if img != gens {
            return Ok(false);
        }
    }
    // its M-dominant part lies in the G-dominant chamber
    let mut rows = u.clone();
    rows.extend(p.j.iter().map(|&i| linalg::to_q(&rd.simple_coroots[i])));
    let piece = hrep_to_vrep(rd.rank, &rows, &[]);
    let dom_ok = |v: &Vec<Q>| rd.simple_coroots.iter().all(|c| !dot(v, &linalg::to_q(c)).is_negative());
    let lin_ok = |v: &Vec<Q>| rd.simple_coroots.iter().all(|c| dot(v, &linalg::to_q(c)).is_zero());
    Ok(piece.rays.iter().all(dom_ok) && piece.lineality.iter().all(lin_ok))
}

/// The Langlands retraction: the least dominant rational coweight `≥ λ`, with
/// the linearity domain `J` on which `𝔏(λ) = λ + Σ_{j∈J} c_j α_j`, `c_j > 0`.
pub fn langlands_retraction(rd: &RootDatum, lambda: &[Q]) -> Result<(RationalCoweight, Vec<usize>)> {
    let mut found: Vec<(RationalCoweight, Vec<usize>)> = vec![];
    for j in rd.all_parabolic_subsets() {
        let a: Vec<Vec<Q>> = j.iter().map(|&r| j.iter().map(|&c| linalg::q(rd.cartan[r][c])).collect()).collect();
        let b: Vec<Q> = j.iter().map(|&r| -pair_q(&rd.simple_roots[r], lambda)).collect();
        let Some(c) = (if j.is_empty() { Some(vec![]) } else { linalg::solve(&a, &b) }) else { continue };
        if c.iter().any(|x| !x.is_positive()) {
            continue;
        }
        let mut l = lambda.to_vec();
        for (k, &i) in j.iter().enumerate() {
            for (x, &a) in l.iter_mut().zip(&rd.simple_coroots[i]) {
                *x += &c[k] * linalg::q(a);
            }
        }
        if rd.is_dominant_q(&l) {
            found.push((l, j));
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::Computation("no linearity domain admits a solution".into())),
        _ => Err(Error::Computation("several linearity domains admit a solution".into())),
    }
}

/// `λ ≤ μ` in the rational positive coroot cone of `G`.
pub fn majorizes(rd: &RootDatum, mu: &[Q], lambda: &[Q]) -> bool {
    let d: Vec<Q> = mu.iter().zip(lambda).map(|(a, b)| a - b).collect();
    lp::nonneg_combination(&to_q_all(&rd.simple_coroots), &d).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractionReport {
    pub dominant: bool,
    pub majorizes: bool,
    pub minimal: bool,
    pub idempotent: bool,
}

impl RetractionReport {
    pub fn all(&self) -> bool {
        self.dominant && self.majorizes && self.minimal && self.idempotent
    }
}

/// Dominance, majorization, a minimality probe and idempotence for `𝔏(λ)`.
pub fn retraction_report(rd: &RootDatum, lambda: &[Q]) -> Result<RetractionReport> {
    let (l, _) = langlands_retraction(rd, lambda)?;
    let dominant = rd.is_dominant_q(&l);
    let maj = majorizes(rd, &l, lambda);
    let mut minimal = true;
    for (i, r) in rd.simple_roots.iter().enumerate() {
        let v = pair_q(r, &l);
        if v.is_positive() {
            let eps = v / linalg::q(2);
            let probe: Vec<Q> = l.iter().zip(&rd.simple_coroots[i]).map(|(x, &a)| x - &eps * linalg::q(a)).collect();
            if rd.is_dominant_q(&probe) && majorizes(rd, &probe, lambda) {
                minimal = false;
            }
        }
    }
    let (l2, j2) = langlands_retraction(rd, &l)?;
    Ok(RetractionReport { dominant, majorizes: maj, minimal, idempotent: l2 == l && j2.is_empty() })
}

/// For M-dominant `λ`: `𝔏(λ) − λ ∈ Λ^{pos,Q}_U ∩ (−Λ^{+,Q}_M)`.
pub fn check_retraction_property(rd: &RootDatum, p: &Parabolic, lambda: &[Q]) -> Result<bool> {
    if !p.is_m_dominant_q(rd, lambda) {
        return Err(Error::Precondition("coweight is not M-dominant".into()));
    }
    let (l, _) = langlands_retraction(rd, lambda)?;
    let d: Vec<Q> = l.iter().zip(lambda).map(|(a, b)| a - b).collect();
    let in_u = cone_member(rd, &ConeId::PosU(p.j.clone()), &d)?;
    let anti = p.j.iter().all(|&i| !pair_q(&rd.simple_roots[i], &d).is_positive());
    Ok(in_u && anti)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::to_q;
    use crate::root_datum::preset;

    #[test]
    fn membership_examples() {
        let rd = preset("A2");
        assert!(cone_member(&rd, &ConeId::PosU(vec![0]), &to_q(&[1, 1])).unwrap());
        assert!(!cone_member(&rd, &ConeId::PosU(vec![0]), &to_q(&[1, 0])).unwrap());
        assert!(cone_member(&rd, &ConeId::DomM(vec![0]), &to_q(&[0, 0])).unwrap());
    }

    #[test]
    fn retraction_examples() {
        let a1 = preset("A1");
        assert_eq!(langlands_retraction(&a1, &to_q(&[-1])).unwrap(), (to_q(&[0]), vec![0]));
        let a2 = preset("A2");
        assert_eq!(langlands_retraction(&a2, &to_q(&[-1, 0])).unwrap(), (to_q(&[0, 0]), vec![0]));
        assert_eq!(langlands_retraction(&a2, &to_q(&[1, 1])).unwrap(), (to_q(&[1, 1]), vec![]));
    }

    #[test]
    fn boundedness_examples() {
        let rd = preset("A2");
        let z = vec![to_q(&[0, 0])];
        assert!(bounded_above(&rd, &SupportShape::new(z.clone(), ConeId::NegPosG)).unwrap());
        assert!(!bounded_above(&rd, &SupportShape::new(z, ConeId::PosG)).unwrap());
        assert!(bounded_above(&rd, &SupportShape::new(vec![to_q(&[1, 0])], ConeId::NegPosU(vec![0]))).unwrap());
    }

    #[test]
    fn certificates_small() {
        for n in ["A1", "A2", "B2", "G2", "GL2"] {
            let rd = preset(n);
            for j in rd.all_parabolic_subsets() {
                assert!(check_pos_u_intersection(&rd, &j).unwrap(), "{n} {j:?}");
                assert!(check_dual_cone(&rd, &j).unwrap(), "{n} {j:?}");
                assert!(check_pos_u_levi_clause(&rd, &j).unwrap(), "{n} {j:?}");
            }
        }
    }
}
