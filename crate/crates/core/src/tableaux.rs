//! RSK on tabloids, crystal reflections, combinatorial R-matrices, the
//! standardization maps `θ`, and the classes `Υ_𝔔`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::ambc::{psi, AmbcTriple};
use crate::error::{Error, Result};
use crate::sign::sign_q;
use crate::tabloid::{Composition, Tabloid};

/// Columns of an RSK input: `top` weakly increasing row labels, `bottom`
/// the reading word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoRowArray {
    pub top: Vec<usize>,
    pub bottom: Vec<usize>,
}

/// Row `i` of `T` (of `l` stored rows) is labelled `l + 1 - i`.
pub fn to_two_row(t: &Tabloid) -> TwoRowArray {
    let l = t.num_rows();
    let mut top = Vec::new();
    let mut bottom = Vec::new();
    for (i, row) in t.rows().iter().enumerate().rev() {
        for &v in row {
            top.push(l - i);
            bottom.push(v);
        }
    }
    TwoRowArray { top, bottom }
}

/// Row-inserts `v`, returning the row index where the new cell was created.
fn row_insert(p: &mut Vec<Vec<usize>>, mut v: usize) -> usize {
    for (r, row) in p.iter_mut().enumerate() {
        match row.iter().position(|&x| x > v) {
            Some(k) => v = std::mem::replace(&mut row[k], v),
            None => {
                row.push(v);
                return r;
            }
        }
    }
    p.push(vec![v]);
    p.len() - 1
}

/// RSK of a tabloid with increasing rows: `(RSK_P, RSK_Q)`.
pub fn rsk(t: &Tabloid) -> (Tabloid, Tabloid) {
    let a = to_two_row(t);
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (&label, &v) in a.top.iter().zip(&a.bottom) {
        let r = row_insert(&mut p, v);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(label);
    }
    (Tabloid::new(p), Tabloid::new(q))
}

/// Inverse of [`rsk`] producing a tabloid with `rows` rows.
pub fn rsk_inverse(p: &Tabloid, q: &Tabloid, rows: usize) -> Result<Tabloid> {
    if p.shape() != q.shape() || !q.is_semistandard() {
        return Err(Error::ShapeMismatch);
    }
    let max_label = q.rows().iter().flatten().copied().max().unwrap_or(0);
    if max_label > rows {
        return Err(Error::Validation(format!("recording labels exceed {rows} rows")));
    }
    let mut pp: Vec<Vec<usize>> = p.rows().to_vec();
    let mut qq: Vec<Vec<usize>> = q.rows().to_vec();
    let mut cols: Vec<(usize, usize)> = Vec::new();
    while qq.iter().any(|r| !r.is_empty()) {
        // Largest label; ties resolved by the rightmost cell.
        let (r, _) = qq
            .iter()
            .enumerate()
            .filter(|(_, row)| !row.is_empty())
            .max_by_key(|(_, row)| (row[row.len() - 1], row.len()))
            .expect("nonempty");
        let label = qq[r].pop().expect("nonempty row");
        let mut v = pp[r].pop().expect("same shape");
        for row in pp[..r].iter_mut().rev() {
            let k = row.iter().rposition(|&x| x < v).expect("reverse bump target exists");
            v = std::mem::replace(&mut row[k], v);
        }
        // Column strictness puts the largest label in a bottom cell, so
        // only the last row can become empty.
        if qq[r].is_empty() {
            qq.pop();
            pp.pop();
        }
        cols.push((label, v));
    }
    cols.reverse();
    let mut out = vec![Vec::new(); rows];
    for (label, v) in cols {
        out[rows - label].push(v);
    }
    for r in &mut out {
        r.sort_unstable();
    }
    Ok(Tabloid::new(out))
}

/// Refills the shape of `shape_of` with `word` read as a reading word.
fn refill(shape_of: &Tabloid, word: &[usize]) -> Tabloid {
    let mut it = word.iter().copied();
    let mut rows: Vec<Vec<usize>> = shape_of.rows().iter().map(|r| vec![0; r.len()]).collect();
    for row in rows.iter_mut().rev() {
        for slot in row.iter_mut() {
            *slot = it.next().expect("word fills the shape");
        }
    }
    Tabloid::new(rows)
}

/// Crystal reflection on a word for letters `i, i+1`: each `i+1` is paired
/// with a later unpaired `i`; the unpaired letters read `i^a (i+1)^b` and
/// become `i^b (i+1)^a`.
pub fn crystal_reflection_word(word: &[usize], i: usize) -> Vec<usize> {
    let mut out = word.to_vec();
    let mut open: Vec<usize> = Vec::new();
    let mut paired = vec![false; word.len()];
    for (k, &v) in word.iter().enumerate() {
        if v == i + 1 {
            open.push(k);
        } else if v == i {
            if let Some(j) = open.pop() {
                paired[j] = true;
                paired[k] = true;
            }
        }
    }
    let free: Vec<usize> = (0..word.len()).filter(|&k| !paired[k] && (word[k] == i || word[k] == i + 1)).collect();
    let a = free.iter().filter(|&&k| word[k] == i).count();
    let b = free.len() - a;
    for (idx, &k) in free.iter().enumerate() {
        out[k] = if idx < b { i } else { i + 1 };
    }
    out
}

/// Crystal reflection `s_i` on a semistandard tableau.
pub fn crystal_reflection(u: &Tabloid, i: usize) -> Tabloid {
    refill(u, &crystal_reflection_word(&u.reading_word(), i))
}

/// Combinatorial R-matrix `R_i` on a tabloid with increasing rows.
pub fn r_matrix(t: &Tabloid, i: usize) -> Result<Tabloid> {
    let l = t.num_rows();
    if i == 0 || i >= l {
        return Err(Error::IndexOutOfRange(i));
    }
    let (p, q) = rsk(t);
    rsk_inverse(&p, &crystal_reflection(&q, l - i), l)
}

/// Content of `u` padded to at least `len` parts.
fn padded_content(u: &Tabloid, len: usize) -> Vec<usize> {
    let mut c = u.content().parts().to_vec();
    if c.len() < len {
        c.resize(len, 0);
    }
    c
}

/// Adjacent transpositions (1-based `s_i`) turning `from` into `to`.
fn sorting_swaps(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut cur = from.to_vec();
    let mut swaps = Vec::new();
    for (j, want) in to.iter().enumerate() {
        let k = (j..cur.len()).find(|&k| cur[k] == *want).expect("same multiset");
        for m in (j..k).rev() {
            cur.swap(m, m + 1);
            swaps.push(m + 1);
        }
    }
    swaps
}

/// One step of a `θ` path: a rearrangement or a rightmost `1 -> 2` move.
fn theta_step(u: &Tabloid, from: &[usize], to: &[usize]) -> Result<Tabloid> {
    let mut a = from.to_vec();
    let mut b = to.to_vec();
    let len = a.len().max(b.len());
    a.resize(len, 0);
    b.resize(len, 0);
    let mut sa = a.clone();
    let mut sb = b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa == sb {
        let mut cur = u.clone();
        for i in sorting_swaps(&a, &b) {
            cur = crystal_reflection(&cur, i);
        }
        return Ok(cur);
    }
    let elementary = len >= 2 && a[2..] == b[2..] && b[0] + 1 == a[0] && a[0] > b[1] && b[1] == a[1] + 1;
    if !elementary {
        return Err(Error::Validation(format!("{from:?} -> {to:?} is not a θ step")));
    }
    let mut rows = u.rows().to_vec();
    let first = rows.first_mut().ok_or(Error::Validation("empty tableau".into()))?;
    let k = first.iter().rposition(|&v| v == 1).ok_or(Error::Validation("no letter 1".into()))?;
    first[k] = 2;
    Ok(Tabloid::new(rows))
}

/// Applies `θ` along an explicit path of compositions, starting at the
/// content of `u`. Every step must be a rearrangement or an elementary move.
pub fn theta_along(u: &Tabloid, path: &[Composition]) -> Result<Tabloid> {
    let mut cur = u.clone();
    for target in path {
        let from = padded_content(&cur, target.padded_len());
        cur = theta_step(&cur, &from, target.parts())?;
    }
    Ok(cur)
}

fn dominates(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    for k in 0..a.len().max(b.len()) {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    sa == sb
}

fn sorted_desc(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable_by(|x, y| y.cmp(x));
    s
}

/// The canonical `θ` path from `alpha` to `beta` (both padded to one length).
///
/// While the sorted parts differ, a box moves from the first part `a` to
/// the last part `b <= a - 2` that keeps the result dominating `β⁺`; `a` is
/// brought to position 1 and `b` to position 2 by rearrangement, then the
/// elementary move is taken. A final rearrangement reaches `β`.
pub fn canonical_theta_path(alpha: &[usize], beta: &[usize]) -> Result<Vec<Composition>> {
    let len = alpha.len().max(beta.len());
    let mut cur = alpha.to_vec();
    cur.resize(len, 0);
    let mut target = beta.to_vec();
    target.resize(len, 0);
    let beta_plus = sorted_desc(&target);
    if cur.iter().sum::<usize>() != target.iter().sum::<usize>() || !dominates(&sorted_desc(&cur), &beta_plus) {
        return Err(Error::DominanceViolated);
    }
    let mut path = Vec::new();
    while sorted_desc(&cur) != beta_plus {
        let mut choice = None;
        'search: for ia in 0..len {
            for ib in (0..len).rev() {
                if ia == ib || cur[ia] < cur[ib] + 2 {
                    continue;
                }
                let mut next = cur.clone();
                next[ia] -= 1;
                next[ib] += 1;
                if dominates(&sorted_desc(&next), &beta_plus) {
                    choice = Some((ia, ib));
                    break 'search;
                }
            }
        }
        let (ia, ib) = choice.ok_or_else(|| Error::Internal("no dominance step found".into()))?;
        let (a, b) = (cur[ia], cur[ib]);
        // Rearrange so that a sits first and b second.
        let mut rest: Vec<usize> = cur.clone();
        rest.remove(ia.max(ib));
        rest.remove(ia.min(ib));
        let mut arranged = vec![a, b];
        arranged.extend(rest);
        if arranged != cur {
            path.push(Composition::new(arranged.clone()));
        }
        arranged[0] -= 1;
        arranged[1] += 1;
        path.push(Composition::new(arranged.clone()));
        cur = arranged;
    }
    if cur != target {
        path.push(Composition::new(target));
    }
    Ok(path)
}

/// `θ_α^β(U)` with `α` the content of `U`, along the canonical path.
pub fn theta(u: &Tabloid, beta: &Composition) -> Result<Tabloid> {
    if !u.is_semistandard() {
        return Err(Error::Validation(format!("{u} is not semistandard")));
    }
    let alpha = padded_content(u, beta.parts().len());
    let path = canonical_theta_path(&alpha, beta.parts())?;
    theta_along(u, &path)
}

/// `Υ_𝔔` for all `𝔔`: every row-standard tableau `T` of size `n` grouped by
/// `sgn_𝔔` of a representative of its left cell, namely `Ψ(T, T, 0)`.
pub fn upsilon_classes(n: usize) -> Result<BTreeMap<Vec<usize>, Vec<Tabloid>>> {
    let mut out: BTreeMap<Vec<usize>, Vec<Tabloid>> = BTreeMap::new();
    for t in Tabloid::all_rsyt(n) {
        let rho = vec![0; t.num_rows()];
        let w = psi(&AmbcTriple::new(t.clone(), t.clone(), rho)?)?;
        out.entry(sign_q(&w)?).or_default().push(t);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tabloid {
        s.parse().unwrap()
    }

    #[test]
    fn two_row_examples() {
        let a = to_two_row(&t("((2),(),(3,5,6),(1,4))"));
        assert_eq!(a.top, vec![1, 1, 2, 2, 2, 4]);
        assert_eq!(a.bottom, vec![1, 4, 3, 5, 6, 2]);
        let a = to_two_row(&t("((1,2,3))"));
        assert_eq!((a.top, a.bottom), (vec![1, 1, 1], vec![1, 2, 3]));
        let a = to_two_row(&t("((2,3),(1),(4))"));
        assert_eq!((a.top, a.bottom), (vec![1, 2, 3, 3], vec![4, 1, 2, 3]));
    }

    #[test]
    fn rsk_examples() {
        let x = t("((2,3),(1),(4))");
        let (p, q) = rsk(&x);
        assert_eq!(p, t("((1,2,3),(4))"));
        assert_eq!(q, t("((1,3,3),(2))"));
        assert_eq!(rsk_inverse(&p, &q, 3).unwrap(), x);
        let (p, q) = rsk(&t("((1,2,3))"));
        assert_eq!((p, q), (t("((1,2,3))"), t("((1,1,1))")));
    }

    #[test]
    fn rsk_round_trips_on_all_tabloids() {
        for shape in [vec![2, 0, 1, 1], vec![1, 3], vec![2, 2, 1], vec![0, 3, 2], vec![1, 1, 1, 1, 1]] {
            for x in Tabloid::all_row_standard(&shape) {
                let (p, q) = rsk(&x);
                assert!(q.is_semistandard());
                let rev: Vec<usize> = shape.iter().rev().copied().collect();
                assert_eq!(q.content(), Composition::new(rev));
                assert_eq!(rsk_inverse(&p, &q, shape.len()).unwrap(), x);
            }
        }
    }

    #[test]
    fn crystal_reflection_examples() {
        assert_eq!(crystal_reflection(&t("((1,1,2))"), 1), t("((1,2,2))"));
        let u = t("((1,1,2,3),(2,3))");
        for i in 1..=3 {
            assert_eq!(crystal_reflection(&crystal_reflection(&u, i), i), u);
        }
    }

    #[test]
    fn r_matrix_examples() {
        // Oracle: the unique shape-(2,1) tabloid with the prescribed RSK image.
        let x = t("((2),(1,3))");
        let (p, q) = rsk(&x);
        let target_q = crystal_reflection(&q, 1);
        let oracle: Vec<Tabloid> = Tabloid::all_row_standard(&[2, 1])
            .into_iter()
            .filter(|y| rsk(y) == (p.clone(), target_q.clone()))
            .collect();
        assert_eq!(oracle, vec![t("((1,2),(3))")]);
        assert_eq!(r_matrix(&x, 1).unwrap(), oracle[0]);
        let y = t("((1,4),(2,3))");
        assert_eq!(r_matrix(&y, 1).unwrap(), y);
        assert_eq!(r_matrix(&r_matrix(&x, 1).unwrap(), 1).unwrap(), x);
    }

    #[test]
    fn theta_chain() {
        let a = theta(&t("((1,3,3),(2))"), &Composition::new(vec![2, 0, 1, 1])).unwrap();
        assert_eq!(a, t("((1,1,4),(3))"));
        let b = theta(&a, &Composition::new(vec![1, 1, 1, 1])).unwrap();
        assert_eq!(b, t("((1,2,4),(3))"));
        let u = t("((1,1,2),(2))");
        assert_eq!(theta(&u, &Composition::new(vec![2, 2])).unwrap(), u);
        assert_eq!(theta(&t("((1,2,3))"), &Composition::new(vec![3])), Err(Error::DominanceViolated));
    }

    #[test]
    fn upsilon_small() {
        let classes = upsilon_classes(3).unwrap();
        assert_eq!(classes.len(), 6);
        assert_eq!(classes.values().map(Vec::len).sum::<usize>(), Tabloid::all_rsyt(3).len());
    }
}
