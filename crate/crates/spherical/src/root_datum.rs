//! Split based root data, standard parabolics and finite Weyl groups.
//!
//! Coweights live in `Λ = Z^rank`; roots are covectors in `Λ̌`. The Cartan
//! matrix is `cartan[i][j] = ⟨α̌_i, α_j⟩` with `α̌_i` a simple root and `α_j` a
//! simple coroot. Simple indices are 0-based.

use std::collections::{BTreeMap, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::linalg::{self, dot_i, mat_mul_i, mat_vec_i, Q};
use crate::lp;

pub type Coweight = Vec<i64>;
pub type RationalCoweight = Vec<Q>;

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

pub const PRESET_NAMES: [&str; 8] = ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "GL2"];

const PRESETS: [(&str, &str); 8] = [
    ("A1", include_str!("../presets/A1.toml")),
    ("A2", include_str!("../presets/A2.toml")),
    ("B2", include_str!("../presets/B2.toml")),
    ("G2", include_str!("../presets/G2.toml")),
    ("A3", include_str!("../presets/A3.toml")),
    ("B3", include_str!("../presets/B3.toml")),
    ("C3", include_str!("../presets/C3.toml")),
    ("GL2", include_str!("../presets/GL2.toml")),
];

/// Environment variable naming an extra directory of `NAME.toml` data files.
pub const PRESET_DIR_ENV: &str = "SPHERICAL_DATA_DIR";

/// The textual config of a root datum.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DatumConfig {
    pub name: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
    pub simple_roots: Vec<Vec<i64>>,
}

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Action on `Λ` (columns are images of basis vectors).
    pub mat: Vec<Vec<i64>>,
    pub inv: Vec<Vec<i64>>,
    /// A reduced word in simple reflections.
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn act(&self, x: &[i64]) -> Coweight {
        mat_vec_i(&self.mat, x)
    }

    pub fn act_q(&self, x: &[Q]) -> RationalCoweight {
        self.mat
            .iter()
            .map(|r| r.iter().zip(x).fold(Q::from_integer(0.into()), |a, (m, v)| a + v * Q::from_integer((*m).into())))
            .collect()
    }

    /// Contragredient action on a covector: `ℓ ↦ ℓ ∘ w⁻¹`.
    pub fn act_dual(&self, l: &[i64]) -> Vec<i64> {
        (0..l.len()).map(|c| (0..l.len()).map(|r| l[r] * self.inv[r][c]).sum()).collect()
    }

    pub fn act_dual_q(&self, l: &[Q]) -> Vec<Q> {
        (0..l.len())
            .map(|c| (0..l.len()).fold(Q::from_integer(0.into()), |a, r| a + &l[r] * Q::from_integer(self.inv[r][c].into())))
            .collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }
}

#[derive(Clone, Debug)]
pub struct RootDatum {
    pub config: DatumConfig,
    pub name: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Coweight>,
    pub simple_roots: Vec<Vec<i64>>,
    /// Positive coroots, index-aligned with `positive_roots`.
    pub positive_coroots: Vec<Coweight>,
    pub positive_roots: Vec<Vec<i64>>,
    /// Coefficients of each positive coroot in the simple coroots.
    pub coroot_coeffs: Vec<Vec<i64>>,
    /// Coefficients of each positive root in the simple roots.
    pub root_coeffs: Vec<Vec<i64>>,
    root_index: BTreeMap<Vec<i64>, (usize, bool)>,
    pub weyl: Vec<WeylElement>,
    weyl_index: BTreeMap<Vec<Vec<i64>>, usize>,
}

impl RootDatum {
    pub fn n_simple(&self) -> usize {
        self.simple_coroots.len()
    }

    pub fn all_simple(&self) -> Vec<usize> {
        (0..self.n_simple()).collect()
    }

    pub fn pair(&self, root: &[i64], x: &[i64]) -> i64 {
        dot_i(root, x)
    }

    pub fn two_rho(&self) -> Vec<i64> {
        sum_vecs(self.rank, self.positive_roots.iter())
    }

    /// Sign of a root covector: `Some(true)` positive, `Some(false)` negative.
    pub fn root_sign(&self, l: &[i64]) -> Option<bool> {
        self.root_index.get(l).map(|&(_, p)| p)
    }

    pub fn is_root(&self, l: &[i64]) -> bool {
        self.root_index.contains_key(l)
    }

    /// Index of `±root` among the positive roots.
    pub fn root_position(&self, l: &[i64]) -> Option<usize> {
        self.root_index.get(l).map(|&(i, _)| i)
    }

    /// All roots, positive ones first.
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(|r| r.iter().map(|x| -x).collect()));
        out
    }

    pub fn all_coroots(&self) -> Vec<Coweight> {
        let mut out = self.positive_coroots.clone();
        out.extend(self.positive_coroots.iter().map(|r| r.iter().map(|x| -x).collect()));
        out
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, mat: &[Vec<i64>]) -> Option<usize> {
        self.weyl_index.get(mat).copied()
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        let m = mat_mul_i(&self.weyl[a].mat, &self.weyl[b].mat);
        self.weyl_index[&m]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.weyl_index[&self.weyl[a].inv]
    }

    /// The longest element of the subgroup `W_J`.
    pub fn longest_in(&self, j: &[usize]) -> usize {
        let members = self.subgroup(j);
        let m_pos: Vec<usize> = self.roots_in(j);
        *members
            .iter()
            .find(|&&w| m_pos.iter().all(|&r| self.root_sign(&self.weyl[w].act_dual(&self.positive_roots[r])) == Some(false)))
            .expect("longest element exists")
    }

    pub fn w0(&self) -> usize {
        self.longest_in(&self.all_simple())
    }

    /// Indices `w` of the subgroup generated by the simple reflections in `j`.
    pub fn subgroup(&self, j: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.weyl.len()];
        let mut out = vec![0usize];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let gens: Vec<usize> = j.iter().map(|&i| self.weyl_index[&self.simple_reflection(i)]).collect();
        while let Some(w) = queue.pop_front() {
            for &g in &gens {
                let x = self.compose(w, g);
                if !seen[x] {
                    seen[x] = true;
                    out.push(x);
                    queue.push_back(x);
                }
            }
        }
        out.sort();
        out
    }

    /// Positive root indices whose support lies in `j`.
    pub fn roots_in(&self, j: &[usize]) -> Vec<usize> {
        (0..self.positive_roots.len())
            .filter(|&r| self.root_coeffs[r].iter().enumerate().all(|(i, &c)| c == 0 || j.contains(&i)))
            .collect()
    }

    pub fn simple_reflection(&self, i: usize) -> Vec<Vec<i64>> {
        simple_reflection(&self.simple_coroots[i], &self.simple_roots[i], self.rank)
    }

    pub fn is_dominant(&self, x: &[i64]) -> bool {
        self.simple_roots.iter().all(|r| dot_i(r, x) >= 0)
    }

    pub fn is_dominant_q(&self, x: &[Q]) -> bool {
        self.simple_roots.iter().all(|r| pair_q(r, x) >= Q::from_integer(0.into()))
    }

    /// Stable hash of the datum config.
    pub fn hash(&self) -> String {
        let s = serde_json::to_string(&self.config).expect("serializable");
        format!("{:x}", Sha256::digest(s.as_bytes()))
    }

    pub fn parabolic(&self, j: &[usize]) -> Result<Parabolic> {
        Parabolic::new(self, j)
    }

    /// Parabolic from 1-based indices as written on a command line.
    pub fn parabolic_one_based(&self, j: &[usize]) -> Result<Parabolic> {
        if j.iter().any(|&i| i == 0) {
            return Err(Error::Usage("parabolic indices are 1-based".into()));
        }
        let zero: Vec<usize> = j.iter().map(|i| i - 1).collect();
        Parabolic::new(self, &zero)
    }

    /// Every subset of simple indices, ordered by size then lexicographically.
    pub fn all_parabolic_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.n_simple();
        let mut out: Vec<Vec<usize>> = (0..1u32 << n).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect();
        out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// `J = ∅` and the maximal ones.
    pub fn borel_and_maximal_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.n_simple();
        let mut out = vec![vec![]];
        if n > 1 {
            for i in 0..n {
                out.push((0..n).filter(|&k| k != i).collect());
            }
        }
        out
    }
}

pub fn pair_q(root: &[i64], x: &[Q]) -> Q {
    root.iter().zip(x).fold(Q::from_integer(0.into()), |a, (r, v)| a + v * Q::from_integer((*r).into()))
}

fn sum_vecs<'a>(n: usize, it: impl Iterator<Item = &'a Vec<i64>>) -> Vec<i64> {
    let mut out = vec![0; n];
    for v in it {
        for (o, x) in out.iter_mut().zip(v) {
            *o += x;
        }
    }
    out
}

fn simple_reflection(coroot: &[i64], root: &[i64], n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|r| (0..n).map(|c| i64::from(r == c) - coroot[r] * root[c]).collect()).collect()
}

/// A standard parabolic `P = MU`, given by the simple indices `J` of `M`.
#[derive(Clone, Debug)]
pub struct Parabolic {
    pub j: Vec<usize>,
    /// Positive coroots of `M` (indices into the datum's positive lists).
    pub m_roots: Vec<usize>,
    /// `Φ⁺_G − Φ_M`.
    pub u_roots: Vec<usize>,
    pub two_rho_p: Vec<i64>,
    pub two_rho_m: Vec<i64>,
    pub weyl_m: Vec<usize>,
    pub w0_m: usize,
    /// Rows span the covectors vanishing on the coroots of `M`; `Λ → Λ_{G,P}`.
    pub projection: Vec<Vec<i64>>,
}

impl Parabolic {
    pub fn new(rd: &RootDatum, j: &[usize]) -> Result<Self> {
        let mut j = j.to_vec();
        j.sort();
        j.dedup();
        if let Some(&bad) = j.iter().find(|&&i| i >= rd.n_simple()) {
            return Err(Error::Usage(format!("simple index {} out of range for {}", bad + 1, rd.name)));
        }
        let m_roots = rd.roots_in(&j);
        let u_roots: Vec<usize> = (0..rd.positive_roots.len()).filter(|r| !m_roots.contains(r)).collect();
        let two_rho_p = sum_vecs(rd.rank, u_roots.iter().map(|&r| &rd.positive_roots[r]));
        let two_rho_m = sum_vecs(rd.rank, m_roots.iter().map(|&r| &rd.positive_roots[r]));
        let weyl_m = rd.subgroup(&j);
        let w0_m = rd.longest_in(&j);
        let m_cols: Vec<Vec<Q>> = j.iter().map(|&i| linalg::to_q(&rd.simple_coroots[i])).collect();
        let projection = linalg::nullspace(&m_cols, rd.rank)
            .iter()
            .map(|v| linalg::primitive(v).iter().map(|x| i64::try_from(x).expect("small")).collect())
            .collect();
        let p = Parabolic { j, m_roots, u_roots, two_rho_p, two_rho_m, weyl_m, w0_m, projection };
        for &i in &p.j {
            if dot_i(&p.two_rho_p, &rd.simple_coroots[i]) != 0 {
                return Err(Error::InvalidDatum("2ρ̌_P does not vanish on a coroot of M".into()));
            }
        }
        let w = &rd.weyl[p.w0_m];
        if mat_mul_i(&w.mat, &w.mat) != linalg::identity_i(rd.rank) {
            return Err(Error::InvalidDatum("w0^M is not an involution".into()));
        }
        Ok(p)
    }

    pub fn is_borel(&self) -> bool {
        self.j.is_empty()
    }

    /// `⟨2ρ̌_P, λ⟩`.
    pub fn height(&self, x: &[i64]) -> i64 {
        dot_i(&self.two_rho_p, x)
    }

    pub fn class_of(&self, x: &[i64]) -> Vec<i64> {
        mat_vec_i(&self.projection, x)
    }

    pub fn u_coroots(&self, rd: &RootDatum) -> Vec<Coweight> {
        self.u_roots.iter().map(|&r| rd.positive_coroots[r].clone()).collect()
    }

    pub fn m_coroots(&self, rd: &RootDatum) -> Vec<Coweight> {
        self.m_roots.iter().map(|&r| rd.positive_coroots[r].clone()).collect()
    }

    pub fn is_m_dominant_q(&self, rd: &RootDatum, x: &[Q]) -> bool {
        self.j.iter().all(|&i| pair_q(&rd.simple_roots[i], x) >= Q::from_integer(0.into()))
    }

    /// `(−1)^{dim Z(M)}` with `dim Z(M) = rank − |J|`.
    pub fn sign(&self, rd: &RootDatum) -> i64 {
        if (rd.rank - self.j.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// `λ ≤_M μ`: `μ − λ` lies in the rational cone of positive coroots of `M`.
pub fn dominance_leq(rd: &RootDatum, p: &Parabolic, lambda: &[Q], mu: &[Q]) -> bool {
    let diff: Vec<Q> = mu.iter().zip(lambda).map(|(a, b)| a - b).collect();
    let cols: Vec<Vec<Q>> = p.m_coroots(rd).iter().map(|c| linalg::to_q(c)).collect();
    lp::nonneg_combination(&cols, &diff).is_some()
}

pub fn parse_config(text: &str) -> Result<DatumConfig> {
    toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
}

pub fn load_root_datum(text: &str) -> Result<RootDatum> {
    RootDatum::from_config(parse_config(text)?, DEFAULT_WEYL_CAP)
}

/// A shipped preset, a file in the data directory, or a path to a file.
pub fn resolve_datum(name: &str) -> Result<RootDatum> {
    if let Some((_, text)) = PRESETS.iter().find(|(n, _)| n.eq_ignore_ascii_case(name)) {
        return load_root_datum(text);
    }
    if let Ok(dir) = std::env::var(PRESET_DIR_ENV) {
        let p = Path::new(&dir).join(format!("{name}.toml"));
        if p.exists() {
            return load_root_datum(&read(&p)?);
        }
    }
    let p = Path::new(name);
    if p.exists() {
        return load_root_datum(&read(p)?);
    }
    Err(Error::Usage(format!("unknown root datum `{name}`")))
}

fn read(p: &Path) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| Error::Config(format!("{}: {e}", p.display())))
}

pub fn preset(name: &str) -> RootDatum {
    resolve_datum(name).expect("shipped presets are valid")
}

impl RootDatum {
    pub fn from_config(cfg: DatumConfig, weyl_cap: usize) -> Result<Self> {
        let n = cfg.simple_coroots.len();
        let bad = |m: String| Err(Error::InvalidDatum(m));
        if cfg.rank == 0 {
            return bad("rank must be positive".into());
        }
        if cfg.simple_roots.len() != n || cfg.cartan.len() != n || cfg.cartan.iter().any(|r| r.len() != n) {
            return bad("cartan, simple_roots and simple_coroots disagree in size".into());
        }
        if cfg.simple_coroots.iter().chain(&cfg.simple_roots).any(|v| v.len() != cfg.rank) {
            return bad("vector length differs from rank".into());
        }
        for i in 0..n {
            if cfg.cartan[i][i] != 2 {
                return bad(format!("diagonal Cartan entry {} is {}, expected 2", i + 1, cfg.cartan[i][i]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let v = dot_i(&cfg.simple_roots[i], &cfg.simple_coroots[j]);
                if v != cfg.cartan[i][j] {
                    return bad(format!("pairing of root {} with coroot {} is {v}, cartan says {}", i + 1, j + 1, cfg.cartan[i][j]));
                }
                if i != j && (cfg.cartan[i][j] > 0 || (cfg.cartan[i][j] == 0) != (cfg.cartan[j][i] == 0)) {
                    return bad("off-diagonal Cartan entries must be nonpositive and symmetric in vanishing".into());
                }
            }
        }
        for m in 1u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            let sub: Vec<Vec<Q>> = idx.iter().map(|&i| idx.iter().map(|&j| linalg::q(cfg.cartan[i][j])).collect()).collect();
            if linalg::det(&sub) <= linalg::q(0) {
                return bad("Cartan matrix is not of finite type".into());
            }
        }
        let as_q = |vs: &[Vec<i64>]| vs.iter().map(|v| linalg::to_q(v)).collect::<Vec<_>>();
        if linalg::rank(&as_q(&cfg.simple_coroots), cfg.rank) != n || linalg::rank(&as_q(&cfg.simple_roots), cfg.rank) != n {
            return bad("simple roots or coroots are linearly dependent".into());
        }

        // roots and coroots by closure under simple reflections
        let mut pairs: Vec<(Vec<i64>, Vec<i64>, Vec<i64>, Vec<i64>)> = Vec::new();
        let mut seen: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            let item = (cfg.simple_roots[i].clone(), cfg.simple_coroots[i].clone(), e.clone(), e);
            seen.insert(item.0.clone(), pairs.len());
            pairs.push(item.clone());
            queue.push_back(item);
        }
        while let Some((r, c, rc, cc)) = queue.pop_front() {
            for i in 0..n {
                let k = dot_i(&r, &cfg.simple_coroots[i]);
                let kc = dot_i(&cfg.simple_roots[i], &c);
                let r2: Vec<i64> = r.iter().zip(&cfg.simple_roots[i]).map(|(a, b)| a - k * b).collect();
                let c2: Vec<i64> = c.iter().zip(&cfg.simple_coroots[i]).map(|(a, b)| a - kc * b).collect();
                let mut rc2 = rc.clone();
                rc2[i] -= k;
                let mut cc2 = cc.clone();
                cc2[i] -= kc;
                if !seen.contains_key(&r2) {
                    if seen.len() > 4 * weyl_cap {
                        return bad("root closure exceeds cap".into());
                    }
                    seen.insert(r2.clone(), pairs.len());
                    let item = (r2, c2, rc2, cc2);
                    pairs.push(item.clone());
                    queue.push_back(item);
                }
            }
        }
        let mut pos: Vec<_> = pairs.into_iter().filter(|p| p.2.iter().all(|&x| x >= 0)).collect();
        // order by height, then lexicographic coefficients
        pos.sort_by(|a, b| a.3.iter().sum::<i64>().cmp(&b.3.iter().sum::<i64>()).then(b.3.cmp(&a.3)));
        let mut root_index = BTreeMap::new();
        for (k, p) in pos.iter().enumerate() {
            root_index.insert(p.0.clone(), (k, true));
            root_index.insert(p.0.iter().map(|x| -x).collect(), (k, false));
        }

        // Weyl group by breadth-first closure
        let rank = cfg.rank;
        let gens: Vec<Vec<Vec<i64>>> = (0..n).map(|i| simple_reflection(&cfg.simple_coroots[i], &cfg.simple_roots[i], rank)).collect();
        let id = linalg::identity_i(rank);
        let mut weyl = vec![WeylElement { mat: id.clone(), inv: id.clone(), word: vec![] }];
        let mut weyl_index = BTreeMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < weyl.len() {
            for (i, g) in gens.iter().enumerate() {
                let m = mat_mul_i(&weyl[head].mat, g);
                if !weyl_index.contains_key(&m) {
                    if weyl.len() >= weyl_cap {
                        return Err(Error::InvalidDatum(format!("Weyl group exceeds cap of {weyl_cap} elements")));
                    }
                    let inv = mat_mul_i(g, &weyl[head].inv);
                    let mut word = weyl[head].word.clone();
                    word.push(i);
                    weyl_index.insert(m.clone(), weyl.len());
                    weyl.push(WeylElement { mat: m, inv, word });
                }
            }
            head += 1;
        }

        Ok(RootDatum {
            name: cfg.name.clone(),
            rank,
            cartan: cfg.cartan.clone(),
            simple_coroots: cfg.simple_coroots.clone(),
            simple_roots: cfg.simple_roots.clone(),
            positive_roots: pos.iter().map(|p| p.0.clone()).collect(),
            positive_coroots: pos.iter().map(|p| p.1.clone()).collect(),
            root_coeffs: pos.iter().map(|p| p.2.clone()).collect(),
            coroot_coeffs: pos.iter().map(|p| p.3.clone()).collect(),
            root_index,
            weyl,
            weyl_index,
            config: cfg,
        })
    }
}

pub fn weyl_elements(rd: &RootDatum) -> Vec<Vec<Vec<i64>>> {
    rd.weyl.iter().map(|w| w.mat.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_orders() {
        for (n, k) in [("A1", 2), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48), ("C3", 48), ("GL2", 2)] {
            assert_eq!(preset(n).weyl_order(), k, "{n}");
        }
    }

    #[test]
    fn a2_positive_coroots() {
        let rd = preset("A2");
        let mut pc = rd.positive_coroots.clone();
        pc.sort();
        assert_eq!(pc, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn bad_configs() {
        let bad = "name='X'\nrank=1\ncartan=[[3]]\nsimple_coroots=[[1]]\nsimple_roots=[[3]]\n";
        assert!(matches!(load_root_datum(bad), Err(Error::InvalidDatum(_))));
        let affine = "name='X'\nrank=2\ncartan=[[2,-2],[-2,2]]\nsimple_coroots=[[1,0],[0,1]]\nsimple_roots=[[2,-2],[-2,2]]\n";
        assert!(matches!(load_root_datum(affine), Err(Error::InvalidDatum(_))));
        let mismatch = "name='X'\nrank=1\ncartan=[[2]]\nsimple_coroots=[[1]]\nsimple_roots=[[1]]\n";
        assert!(load_root_datum(mismatch).is_err());
        assert!(matches!(load_root_datum("rank = "), Err(Error::Config(_))));
    }

    #[test]
    fn longest_elements() {
        let rd = preset("A2");
        let w0 = &rd.weyl[rd.w0()];
        assert_eq!(w0.length(), 3);
        for c in &rd.positive_coroots {
            let img = w0.act(c);
            assert!(rd.positive_coroots.contains(&img.iter().map(|x| -x).collect()));
        }
    }

    #[test]
    fn dominance() {
        let rd = preset("A2");
        let full = rd.parabolic(&[0, 1]).unwrap();
        let m1 = rd.parabolic(&[0]).unwrap();
        let z = linalg::to_q(&[0, 0]);
        assert!(dominance_leq(&rd, &full, &z, &linalg::to_q(&[1, 1])));
        assert!(!dominance_leq(&rd, &m1, &z, &linalg::to_q(&[0, 1])));
        let third = vec![Q::new(2.into(), 3.into()), Q::new(1.into(), 3.into())];
        assert!(dominance_leq(&rd, &full, &z, &third));
    }
}
