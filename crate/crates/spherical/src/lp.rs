//! Exact feasibility for `A x = b, x >= 0` by phase-one simplex with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::linalg::Q;

/// A nonnegative solution of `cols * x = b` where `cols[j]` is the j-th column.
pub fn nonneg_combination(cols: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let m = b.len();
    let k = cols.len();
    if m == 0 {
        return Some(vec![Q::zero(); k]);
    }
    let width = k + m + 1;
    let mut t: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let flip = b[i].is_negative();
            let sgn = |x: &Q| if flip { -x.clone() } else { x.clone() };
            let mut row: Vec<Q> = cols.iter().map(|c| sgn(&c[i])).collect();
            row.extend((0..m).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row.push(sgn(&b[i]));
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..k + m).collect();
    // reduced costs of the phase-one objective (sum of artificials)
    let mut d: Vec<Q> = (0..width)
        .map(|j| if (k..k + m).contains(&j) { Q::zero() } else { -t.iter().fold(Q::zero(), |a, r| a + &r[j]) })
        .collect();
    loop {
        let Some(enter) = (0..k + m).find(|&j| d[j].is_negative()) else { break };
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                leave = match leave {
                    None => Some(i),
                    Some(l) => {
                        let cur = &t[l][width - 1] / &t[l][enter];
                        if ratio < cur || (ratio == cur && basis[i] < basis[l]) {
                            Some(i)
                        } else {
                            Some(l)
                        }
                    }
                };
            }
        }
        let Some(r) = leave else { break };
        let inv = t[r][enter].recip();
        for x in t[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m {
            if i != r && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..width {
                    let v = &f * &t[r][j];
                    t[i][j] -= v;
                }
            }
        }
        if !d[enter].is_zero() {
            let f = d[enter].clone();
            for j in 0..width {
                let v = &f * &t[r][j];
                d[j] -= v;
            }
        }
        basis[r] = enter;
    }
    if !d[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (i, &bj) in basis.iter().enumerate() {
        if bj < k {
            x[bj] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, to_q};

    #[test]
    fn feasible_and_infeasible() {
        let cols = vec![to_q(&[0, 1]), to_q(&[1, 1])];
        let x = nonneg_combination(&cols, &to_q(&[1, 1])).unwrap();
        assert_eq!(x, vec![q(0), q(1)]);
        assert!(nonneg_combination(&cols, &to_q(&[1, 0])).is_none());
        assert!(nonneg_combination(&cols, &to_q(&[0, -1])).is_none());
        assert!(nonneg_combination(&cols, &to_q(&[0, 0])).is_some());
    }
}
