//! Tableau statistics attached to the triples: local charge, symmetrized
//! offset, dominance, the δ-vector and the shift ω on tableaux.

use crate::error::{Error, Result};
use crate::tabloid::Tabloid;

/// Local charge in row `i` (1-based, `1 <= i < l(T)`): the smallest `d >= 0`
/// with `a_{l-d} < b_l` for all `l` in `[d+1, t]`, where `a = T_i` and
/// `b = T_{i+1}` has length `t`.
pub fn local_charge(t: &Tabloid, i: usize) -> Result<usize> {
    if i == 0 || i >= t.num_rows() {
        return Err(Error::IndexOutOfRange(i));
    }
    let a = t.row(i);
    let b = t.row(i + 1);
    let ok = |d: usize| (d + 1..=b.len()).all(|l| a.get(l - d - 1).is_some_and(|&x| x < b[l - 1]));
    Ok((0..=b.len()).find(|&d| ok(d)).expect("d = t always works"))
}

fn check_same_shape(p: &Tabloid, q: &Tabloid) -> Result<Vec<usize>> {
    let sp = p.shape();
    if sp != q.shape() || sp.parts().windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::ShapeMismatch);
    }
    Ok(sp.parts().to_vec())
}

/// Symmetrized offset constants `s_{P,Q}`.
pub fn symmetrized_offset(p: &Tabloid, q: &Tabloid) -> Result<Vec<i64>> {
    let shape = check_same_shape(p, q)?;
    let mut s = vec![0i64; shape.len()];
    for i in 1..shape.len() {
        if shape[i - 1] == shape[i] {
            s[i] = s[i - 1] + local_charge(p, i)? as i64 - local_charge(q, i)? as i64;
        }
    }
    Ok(s)
}

/// `ρ_{i-1} - s_{i-1} <= ρ_i - s_i` whenever `λ_{i-1} = λ_i`.
pub fn is_dominant(rho: &[i64], p: &Tabloid, q: &Tabloid) -> Result<bool> {
    let shape = check_same_shape(p, q)?;
    if rho.len() != shape.len() {
        return Err(Error::ShapeMismatch);
    }
    let s = symmetrized_offset(p, q)?;
    Ok((1..shape.len()).all(|i| shape[i - 1] != shape[i] || rho[i - 1] - s[i - 1] <= rho[i] - s[i]))
}

/// `•ρ = ρ - s_{P,Q}`.
pub fn reduced_weight(rho: &[i64], p: &Tabloid, q: &Tabloid) -> Result<Vec<i64>> {
    let s = symmetrized_offset(p, q)?;
    if s.len() != rho.len() {
        return Err(Error::ShapeMismatch);
    }
    Ok(rho.iter().zip(&s).map(|(r, s)| r - s).collect())
}

/// `δ(T, s)`: with `s` in row `a`, `δ_i = 1` iff `λ_{a-1} > λ_a = λ_i`.
pub fn delta_vector(t: &Tabloid, s: usize) -> Result<Vec<i64>> {
    let a = t.row_of(s).ok_or(Error::EntryNotFound(s))?;
    let shape = t.shape();
    let lam = shape.parts();
    let above = if a == 1 { usize::MAX } else { lam[a - 2] };
    Ok(lam.iter().map(|&li| i64::from(above > lam[a - 1] && lam[a - 1] == li)).collect())
}

/// Replaces every entry `i` by `i + 1` (and `n` by `1`), re-sorting rows.
pub fn omega_tabloid(t: &Tabloid) -> Tabloid {
    let n = t.size();
    let mut out =
        Tabloid::new(t.rows().iter().map(|r| r.iter().map(|&v| if v == n { 1 } else { v + 1 }).collect()).collect());
    out.sort_rows();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tabloid {
        s.parse().unwrap()
    }

    /// Direct search over all shifts, without the early exit.
    fn local_charge_oracle(a: &[usize], b: &[usize]) -> usize {
        let mut best = usize::MAX;
        for d in (0..=b.len()).rev() {
            let good = (d..b.len()).all(|l| l >= d && l - d < a.len() && a[l - d] < b[l]);
            if good {
                best = d;
            }
        }
        best
    }

    #[test]
    fn local_charge_examples() {
        assert_eq!(local_charge(&t("((3,5,7,8),(1,2,4,6))"), 1).unwrap(), 2);
        assert_eq!(local_charge(&t("((1,2),(3,4))"), 1).unwrap(), 0);
        assert_eq!(local_charge(&t("((2,3),(1,4))"), 1).unwrap(), 1);
        assert_eq!(local_charge(&t("((1,2))"), 1), Err(Error::IndexOutOfRange(1)));
    }

    #[test]
    fn local_charge_matches_oracle() {
        for tab in Tabloid::all_rsyt(6) {
            for i in 1..tab.num_rows() {
                assert_eq!(
                    local_charge(&tab, i).unwrap(),
                    local_charge_oracle(tab.row(i), tab.row(i + 1)),
                    "{tab} row {i}"
                );
            }
        }
    }

    #[test]
    fn offsets_and_dominance() {
        let p = t("((1,3,10),(2,5,6),(4,7,9),(8))");
        let q = t("((3,5,6),(7,8,9),(1,4,10),(2))");
        assert_eq!(symmetrized_offset(&p, &q).unwrap(), vec![0, 1, -1, 0]);
        assert!(is_dominant(&[2, 3, 2, 0], &p, &q).unwrap());
        assert!(!is_dominant(&[3, 2, 2, 0], &p, &q).unwrap());
        assert_eq!(reduced_weight(&[2, 3, 2, 0], &p, &q).unwrap(), vec![2, 2, 3, 0]);
        let a = t("((3,5,8,10),(1,4,9),(2,6),(7))");
        let b = t("((4,5,8,10),(1,2,3),(6,9),(7))");
        assert_eq!(symmetrized_offset(&a, &b).unwrap(), vec![0; 4]);
        assert!(is_dominant(&[9, -9, 3, 0], &a, &b).unwrap());
        assert_eq!(symmetrized_offset(&p, &p).unwrap(), vec![0; 4]);
        assert_eq!(symmetrized_offset(&p, &a), Err(Error::ShapeMismatch));
    }

    #[test]
    fn delta_examples() {
        let x = t("((3,5,8,10),(1,4,9),(2,6),(7))");
        assert_eq!(delta_vector(&x, 7).unwrap(), vec![0, 0, 0, 1]);
        let y = t("((1,3),(2,4))");
        assert_eq!(delta_vector(&y, 3).unwrap(), vec![1, 1]);
        assert_eq!(delta_vector(&y, 4).unwrap(), vec![0, 0]);
        assert_eq!(delta_vector(&y, 9), Err(Error::EntryNotFound(9)));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_tabloid(&t("((4,5,8,10),(1,2,3),(6,9),(7))")), t("((1,5,6,9),(2,3,4),(7,10),(8))"));
        assert_eq!(omega_tabloid(&t("((3,5,8,10),(1,4,9),(2,6),(7))")), t("((1,4,6,9),(2,5,10),(3,7),(8))"));
        let x = t("((2,5),(1,3),(4))");
        let mut y = x.clone();
        for _ in 0..5 {
            y = omega_tabloid(&y);
        }
        assert_eq!(y, x);
    }
}
