//! Bounded enumeration of cells through dominant triples.

use ambc_core::ambc::symmetrized_offset;
use ambc_core::{psi, AmbcTriple, Partition, Tabloid, Window};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::Tally;
use crate::HarnessError;

/// Largest `n` enumerated without `force`.
pub const MAX_N: usize = 6;

/// Which slice of which two-sided cells to enumerate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerationSpec {
    pub n: usize,
    pub lambda_filter: Option<Partition>,
    /// Every `ρ_i` lies in `[-rho_bound, rho_bound]`.
    pub rho_bound: i64,
    pub seed: u64,
    pub jobs: usize,
    pub force: bool,
    /// Keep each triple independently with this probability (seeded).
    pub sample: Option<f64>,
}

impl EnumerationSpec {
    pub fn new(n: usize, rho_bound: i64) -> Self {
        EnumerationSpec { n, lambda_filter: None, rho_bound, seed: 0, jobs: 1, force: false, sample: None }
    }

    pub fn with_lambda(mut self, lambda: Partition) -> Self {
        self.lambda_filter = Some(lambda);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_sample(mut self, rate: f64) -> Self {
        self.sample = Some(rate);
        self
    }

    pub fn check(&self) -> Result<(), HarnessError> {
        if self.n > MAX_N && !self.force {
            return Err(HarnessError::TooLarge(self.n));
        }
        if let Some(l) = &self.lambda_filter {
            if l.size() != self.n {
                return Err(HarnessError::Usage(format!("partition {l} is not a partition of {}", self.n)));
            }
        }
        Ok(())
    }

    /// Partitions selected by the filter.
    pub fn shapes(&self) -> Vec<Partition> {
        match &self.lambda_filter {
            Some(l) => vec![l.clone()],
            None => Partition::all(self.n),
        }
    }
}

/// All `ρ` in `[-b, b]^l` that are dominant for the offsets `s` and shape `lambda`.
pub fn dominant_weights(lambda: &[usize], s: &[i64], b: i64) -> Vec<Vec<i64>> {
    fn go(i: usize, lambda: &[usize], s: &[i64], b: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == lambda.len() {
            out.push(cur.clone());
            return;
        }
        let lo = if i > 0 && lambda[i - 1] == lambda[i] { (cur[i - 1] - s[i - 1] + s[i]).max(-b) } else { -b };
        for r in lo..=b {
            cur.push(r);
            go(i + 1, lambda, s, b, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, lambda, s, b, &mut Vec::new(), &mut out);
    out
}

/// All pairs `(P, Q)` of row-standard tableaux of shape `lambda`.
pub fn tableau_pairs(lambda: &Partition) -> Vec<(Tabloid, Tabloid)> {
    let all = Tabloid::all_row_standard(lambda.parts());
    all.iter().flat_map(|p| all.iter().map(move |q| (p.clone(), q.clone()))).collect()
}

/// One `(P, Q)` pair of a two-sided cell with the weights to visit.
#[derive(Clone, Debug)]
pub struct Slice {
    pub lambda: Partition,
    pub p: Tabloid,
    pub q: Tabloid,
    pub weights: Vec<Vec<i64>>,
}

impl Slice {
    pub fn triples(&self) -> impl Iterator<Item = AmbcTriple> + '_ {
        self.weights.iter().map(|rho| AmbcTriple { p: self.p.clone(), q: self.q.clone(), rho: rho.clone() })
    }
}

/// Every `(P, Q)` slice within the bounds, in a fixed order.
pub fn slices(spec: &EnumerationSpec) -> Result<Vec<Slice>, HarnessError> {
    spec.check()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::new();
    for lambda in spec.shapes() {
        for (p, q) in tableau_pairs(&lambda) {
            let s = symmetrized_offset(&p, &q)?;
            let mut weights = dominant_weights(lambda.parts(), &s, spec.rho_bound);
            if let Some(rate) = spec.sample {
                weights.retain(|_| rng.gen_bool(rate.clamp(0.0, 1.0)));
            }
            out.push(Slice { lambda: lambda.clone(), p, q, weights });
        }
    }
    Ok(out)
}

/// Every dominant triple within the bounds, in a fixed order.
pub fn cell_triples(spec: &EnumerationSpec) -> Result<Vec<AmbcTriple>, HarnessError> {
    Ok(slices(spec)?.iter().flat_map(|s| s.triples().collect::<Vec<_>>()).collect())
}

/// Every dominant triple within the bounds paired with its window.
pub fn enumerate_cells(spec: &EnumerationSpec) -> Result<Vec<(Window, AmbcTriple)>, HarnessError> {
    let triples = cell_triples(spec)?;
    let windows: Vec<Result<Window, _>> = triples.par_iter().map(psi).collect();
    triples.into_iter().zip(windows).map(|(t, w)| Ok((w?, t))).collect()
}

/// Visits every enumerated `(window, triple)`, one tally per slice, merged
/// in slice order.
pub fn fold_cells<F>(spec: &EnumerationSpec, f: F) -> Result<Tally, HarnessError>
where
    F: Fn(&Window, &AmbcTriple, &mut Tally) + Sync,
{
    let slices = slices(spec)?;
    let tallies: Vec<Result<Tally, HarnessError>> = slices
        .par_iter()
        .map(|slice| {
            let mut tally = Tally::new();
            for t in slice.triples() {
                let w = psi(&t)?;
                f(&w, &t, &mut tally);
            }
            Ok(tally)
        })
        .collect();
    tallies.into_iter().try_fold(Tally::new(), |acc, t| Ok(acc.merge(t?)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let one = enumerate_cells(&EnumerationSpec::new(1, 2)).unwrap();
        assert_eq!(one.len(), 5);
        let vals: Vec<i64> = one.iter().map(|(w, _)| w.get(1).unwrap()).collect();
        assert_eq!(vals, vec![-1, 0, 1, 2, 3]);

        let spec = EnumerationSpec::new(4, 1).with_lambda("4".parse().unwrap());
        assert_eq!(enumerate_cells(&spec).unwrap().len(), 3);

        // With ρ = 0 only the dominant pairs survive.
        let zero = cell_triples(&EnumerationSpec::new(4, 0)).unwrap();
        let oracle: usize = Partition::all(4)
            .iter()
            .flat_map(tableau_pairs)
            .filter(|(p, q)| ambc_core::ambc::is_dominant(&vec![0; p.num_rows()], p, q).unwrap())
            .count();
        assert_eq!(zero.len(), oracle);
    }

    #[test]
    fn too_large() {
        assert!(matches!(cell_triples(&EnumerationSpec::new(7, 0)), Err(HarnessError::TooLarge(7))));
    }
}
