//! The verification suites behind `verify`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::time::Instant;

use ambc_core::ambc::{
    canonical_channels, channel_distance, channel_numbering, find_channels, greene_kleitman_brute, is_stream, psi_with,
    symmetrized_offset, ScanOrder,
};
use ambc_core::group::{left_star, omega_left};
use ambc_core::rotations::{diamond_complete, ipr, is_proper_ipr, is_proper_pr, pr, DiamondMove};
use ambc_core::sign::{build_w_tn, sign_insert, sign_q};
use ambc_core::tableaux::{
    canonical_theta_path, crystal_reflection, r_matrix, rsk, theta, theta_along, upsilon_classes,
};
use ambc_core::{phi, psi, AmbcTriple, Composition, Error, Partition, Tabloid, Window};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::enumerate::{dominant_weights, fold_cells, slices, EnumerationSpec};
use crate::report::{Tally, VerifyReport};
use crate::{fixtures, golden, HarnessError};

/// Every suite name accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "roundtrip",
    "gk-oracle",
    "distances",
    "blasiak",
    "rho-theorem",
    "nesw",
    "diamond",
    "sgnq-invariance",
    "connectivity",
    "upsilon",
    "theta",
    "braid",
    "golden",
];

/// Number of random windows checked by `gk-oracle` beyond the enumeration.
pub const RANDOM_GK_WINDOWS: usize = 1000;

/// Runs the named suite with a thread pool of `spec.jobs` workers.
pub fn run_suite(name: &str, spec: &EnumerationSpec) -> Result<VerifyReport, HarnessError> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs.max(1))
        .build()
        .map_err(|e| HarnessError::Usage(e.to_string()))?;
    let tally = pool.install(|| match name {
        "roundtrip" => roundtrip(spec),
        "gk-oracle" => gk_oracle(spec),
        "distances" => distances(spec),
        "blasiak" => sign_determines_left_cell(spec),
        "rho-theorem" => rho_theorem(spec),
        "nesw" => nesw(spec),
        "diamond" => diamond(spec),
        "sgnq-invariance" => sgnq_invariance(spec),
        "connectivity" => connectivity(spec),
        "upsilon" => upsilon(spec),
        "theta" => theta_paths(spec),
        "braid" => braid(spec),
        "golden" => Ok(golden::golden()),
        other => Err(HarnessError::UnknownSuite(other.to_string())),
    })?;
    Ok(VerifyReport::from_tally(name, tally, start.elapsed()))
}

fn describe(w: &Window, t: &AmbcTriple) -> String {
    format!("{w} = Ψ{t}")
}

fn roundtrip(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    // Φ∘Ψ = id on every triple already forces Ψ to be injective.
    fold_cells(spec, |w, t, tally| {
        let back = phi(w);
        tally.check("phi-psi", back.as_ref() == Ok(t), || describe(w, t), || format!("{back:?}"));
        let dec = psi_with(t, ScanOrder::Decreasing);
        tally.check("scan-order", dec.as_ref() == Ok(w), || describe(w, t), || format!("{dec:?}"));
    })
}

/// A seeded random total window with entries shifted by up to two periods.
pub fn random_window(n: usize, rng: &mut impl Rng) -> Window {
    let mut perm: Vec<i64> = (1..=n as i64).collect();
    perm.shuffle(rng);
    let vals: Vec<i64> = perm.iter().map(|&v| v + n as i64 * rng.gen_range(-2..=2)).collect();
    Window::from_values(&vals).expect("a permutation of residues")
}

fn gk_oracle(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    let mut tally = fold_cells(spec, |w, t, tally| {
        let brute = greene_kleitman_brute(w);
        tally.check("enumerated", brute == t.shape(), || describe(w, t), || format!("brute force {brute}"));
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let windows: Vec<Window> = (0..RANDOM_GK_WINDOWS).map(|k| random_window(6 + k % 2, &mut rng)).collect();
    let results: Vec<(Window, Partition, Result<AmbcTriple, Error>)> = windows
        .into_par_iter()
        .map(|w| {
            let brute = greene_kleitman_brute(&w);
            let t = phi(&w);
            (w, brute, t)
        })
        .collect();
    for (w, brute, t) in results {
        let ok = t.as_ref().map(|t| t.shape() == brute).unwrap_or(false);
        tally.check("random", ok, || w.to_string(), || format!("brute force {brute}, Φ {t:?}"));
    }
    Ok(tally)
}

fn distances(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    fold_cells(spec, |w, t, tally| {
        let seq = canonical_channels(w);
        let red = t.reduced_rho();
        for i in 1..seq.channels.len() {
            let h = channel_distance(w, seq.channels[i - 1].window(), seq.channels[i].window());
            let expect = red[i] - red[i - 1];
            tally.check(
                "h-equals-rho-gap",
                h == Ok(expect),
                || describe(w, t),
                || format!("i={i}: h={h:?}, expected {expect}"),
            );
        }
        for c in find_channels(w) {
            let d = channel_numbering(w, c.window());
            let ok = d.as_ref().map(|d| d.is_monotone()).unwrap_or(false);
            tally.check("numbering-monotone", ok, || format!("{} channel {c}", describe(w, t)), || format!("{d:?}"));
        }
    })
}

fn unit(len: usize, r: usize, sign: i64) -> Vec<i64> {
    let mut e = vec![0; len];
    e[r] = sign;
    e
}

fn rho_theorem(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    fold_cells(spec, |w, t, tally| {
        let seq = canonical_channels(w);
        for (r, c) in seq.channels.iter().enumerate() {
            let c = c.window();
            for (inverse, sign) in [(false, 1i64), (true, -1)] {
                let proper = if inverse { is_proper_ipr(w, c) } else { is_proper_pr(w, c) };
                if !proper {
                    continue;
                }
                let moved = if inverse { ipr(w, c) } else { pr(w, c) };
                let expect_rho: Vec<i64> = t.rho.iter().zip(unit(t.rho.len(), r, sign)).map(|(a, b)| a + b).collect();
                let expect = AmbcTriple { p: t.p.clone(), q: t.q.clone(), rho: expect_rho };
                let got = moved.as_ref().map_err(Clone::clone).and_then(phi);
                let name = if inverse { "proper-ipr" } else { "proper-pr" };
                tally.check(
                    name,
                    got.as_ref() == Ok(&expect),
                    || format!("{} channel {}", describe(w, t), r + 1),
                    || format!("{got:?}"),
                );
            }
        }
        // The last canonical channel of each river admits a proper pr.
        for &end in &seq.river_breaks[1..] {
            let ne = seq.channels[end - 1].window();
            tally.check("river-end-proper", is_proper_pr(w, ne), || describe(w, t), || ne.to_string());
        }
    })
}

fn nesw(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    fold_cells(spec, |w, t, tally| {
        let shape = t.shape();
        for c in find_channels(w) {
            let c = c.window();
            for inverse in [false, true] {
                let proper = if inverse { is_proper_ipr(w, c) } else { is_proper_pr(w, c) };
                let moved = if inverse { ipr(w, c) } else { pr(w, c) };
                let same = moved.as_ref().map(|m| phi(m).map(|x| x.shape()) == Ok(shape.clone())).unwrap_or(false);
                let name = match (inverse, proper) {
                    (false, true) => "proper-pr-keeps-cell",
                    (false, false) => "improper-pr-leaves-cell",
                    (true, true) => "proper-ipr-keeps-cell",
                    (true, false) => "improper-ipr-leaves-cell",
                };
                tally.check(
                    name,
                    same == proper,
                    || format!("{} channel {c}", describe(w, t)),
                    || format!("{moved:?}"),
                );
            }
        }
    })
}

/// The two sign words of a window and its description.
type SignedWindow = (Vec<i64>, Vec<usize>, String);

fn sign_determines_left_cell(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    let mut tally = Tally::new();
    for lambda in spec.shapes() {
        let spec = EnumerationSpec { lambda_filter: Some(lambda.clone()), ..spec.clone() };
        let per_slice: Vec<Result<(Tabloid, Vec<SignedWindow>), HarnessError>> = slices(&spec)?
            .par_iter()
            .map(|slice| {
                let mut out = Vec::new();
                for t in slice.triples() {
                    let w = psi(&t)?;
                    let (sp, sq) = sign_insert(&w)?;
                    out.push((sp, sq, describe(&w, &t)));
                }
                Ok((slice.q.clone(), out))
            })
            .collect();
        let mut by_q: BTreeMap<Tabloid, BTreeSet<Vec<usize>>> = BTreeMap::new();
        let mut pairs: HashMap<(Vec<i64>, Vec<usize>), String> = HashMap::new();
        for item in per_slice {
            let (q, words) = item?;
            for (sp, sq, input) in words {
                by_q.entry(q.clone()).or_default().insert(sq.clone());
                let dup = pairs.insert((sp, sq), input.clone());
                tally.check("sign-injective", dup.is_none(), || input.clone(), || format!("same signs as {dup:?}"));
            }
        }
        let mut owner: HashMap<Vec<usize>, Tabloid> = HashMap::new();
        for (q, words) in &by_q {
            tally.check(
                "constant-on-left-cell",
                words.len() == 1,
                || format!("λ={lambda}, Q={q}"),
                || format!("{words:?}"),
            );
            for word in words {
                let prev = owner.insert(word.clone(), q.clone());
                tally.check(
                    "distinct-across-left-cells",
                    prev.is_none(),
                    || format!("λ={lambda}, Q={q}"),
                    || format!("shared with {prev:?}"),
                );
            }
        }
    }
    Ok(tally)
}

fn diamond(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    fold_cells(spec, |w, t, tally| {
        let seq = canonical_channels(w);
        for p in 1..=w.n() {
            for (q, c) in seq.channels.iter().enumerate().map(|(k, c)| (k + 1, c.window())) {
                for inverse in [false, true] {
                    // Improper channels fall outside the hypotheses.
                    if !(if inverse { is_proper_ipr(w, c) } else { is_proper_pr(w, c) }) {
                        continue;
                    }
                    for mv in [DiamondMove::Star, DiamondMove::Omega] {
                        let name = match mv {
                            DiamondMove::Star => "star",
                            DiamondMove::Omega => "omega",
                        };
                        match diamond_complete(w, p, q, inverse, mv) {
                            Err(Error::StarUndefined) | Err(Error::NotProper) => {}
                            Ok(d) => {
                                let rotated = if inverse {
                                    ipr(&d.w_star, d.s_star.window())
                                } else {
                                    pr(&d.w_star, d.s_star.window())
                                };
                                let proper = if inverse {
                                    is_proper_ipr(&d.w_star, d.s_star.window())
                                } else {
                                    is_proper_pr(&d.w_star, d.s_star.window())
                                };
                                let ok = proper && rotated.as_ref() == Ok(&d.w_tilde_star);
                                tally.check(
                                    name,
                                    ok,
                                    || format!("{} p={p} q={q} inverse={inverse}", describe(w, t)),
                                    || format!("{d:?}"),
                                );
                            }
                            Err(e) => {
                                tally.check(
                                    name,
                                    false,
                                    || format!("{} p={p} q={q} inverse={inverse}", describe(w, t)),
                                    || e.to_string(),
                                );
                            }
                        }
                    }
                }
            }
        }
    })
}

/// Smallest `N` from the retry ladder `2n, 4n` for which `holds` is true.
fn with_large_n(n: usize, holds: impl Fn(i64) -> Result<bool, Error>) -> Result<Option<i64>, Error> {
    for big in [2 * n as i64, 4 * n as i64] {
        if holds(big)? {
            return Ok(Some(big));
        }
    }
    Ok(None)
}

/// All weak compositions of `n` with exactly `len` parts.
pub fn weak_compositions(n: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in weak_compositions(n - first, len - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn sgnq_invariance(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    let mut tally = fold_cells(spec, |w, t, tally| {
        let Ok((sp, sq)) = sign_insert(w) else {
            tally.assert("sign-insertion", false, &describe(w, t));
            return;
        };
        let sp_window = Window::from_values(&sp);
        // Sign insertion only uses right star moves and right multiplication
        // by the shift, so the insertion word keeps the P tableau.
        let same_p = sp_window.as_ref().ok().and_then(|x| phi(x).ok()).map(|x| x.p == t.p);
        tally.check("sgn-p-keeps-p", same_p == Some(true), || describe(w, t), || format!("{sp:?}"));
        let left_omega = omega_left(w).ok().and_then(|x| sign_q(&x).ok());
        tally.check("omega-left", left_omega.as_ref() == Some(&sq), || describe(w, t), || format!("{left_omega:?}"));
        for i in 1..=w.n() {
            if let Ok(x) = left_star(w, i) {
                let got = sign_q(&x);
                tally.check(
                    "left-star",
                    got.as_ref() == Ok(&sq),
                    || format!("{} i={i}", describe(w, t)),
                    || format!("{got:?}"),
                );
            }
        }
        for c in &canonical_channels(w).channels {
            let c = c.window();
            for inverse in [false, true] {
                let proper = if inverse { is_proper_ipr(w, c) } else { is_proper_pr(w, c) };
                if proper {
                    let moved = if inverse { ipr(w, c) } else { pr(w, c) };
                    let got = moved.and_then(|x| sign_q(&x));
                    tally.check(
                        "proper-rotation",
                        got.as_ref() == Ok(&sq),
                        || format!("{} channel {c}", describe(w, t)),
                        || format!("{got:?}"),
                    );
                }
            }
        }
    })?;
    // Tabloids related by an R-matrix give left-cell representatives with
    // the same sign recording word once N is large.
    let n = spec.n;
    for len in 2..=4.min(n.max(2)) {
        for shape in weak_compositions(n, len) {
            for t in Tabloid::all_row_standard(&shape) {
                for i in 1..len {
                    let s = r_matrix(&t, i)?;
                    let found =
                        with_large_n(n, |big| Ok(sign_q(&build_w_tn(&t, big)?)? == sign_q(&build_w_tn(&s, big)?)?))?;
                    tally.check(
                        "r-matrix-w-tn",
                        found.is_some(),
                        || format!("T={t} i={i} R(T)={s}"),
                        || "no N in {2n, 4n} works".into(),
                    );
                }
            }
        }
    }
    Ok(tally)
}

/// All sub-streams of `w`, by position set.
pub fn substreams(w: &Window) -> Vec<Window> {
    let pos: Vec<usize> = w.positions().collect();
    (1u32..1 << pos.len())
        .map(|mask| {
            let keep: Vec<usize> =
                pos.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
            w.restrict(&keep)
        })
        .filter(is_stream)
        .collect()
}

fn connectivity(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    spec.check()?;
    let margin = spec.n as i64;
    let work: Vec<(Partition, Tabloid, Tabloid)> = spec
        .shapes()
        .into_iter()
        .flat_map(|l| crate::enumerate::tableau_pairs(&l).into_iter().map(move |(p, q)| (l.clone(), p, q)))
        .collect();
    let tallies: Vec<Result<Tally, HarnessError>> = work
        .par_iter()
        .map(|(lambda, p, q)| {
            let mut tally = Tally::new();
            let s = symmetrized_offset(p, q)?;
            let mut universe: HashMap<Window, Vec<i64>> = HashMap::new();
            let mut interior = Vec::new();
            for rho in dominant_weights(lambda.parts(), &s, spec.rho_bound + margin) {
                let w = psi(&AmbcTriple { p: p.clone(), q: q.clone(), rho: rho.clone() })?;
                if rho.iter().all(|r| r.abs() <= spec.rho_bound) {
                    interior.push(w.clone());
                }
                universe.insert(w, rho);
            }
            let Some(start) = interior.first() else { return Ok(tally) };
            let mut seen: HashSet<Window> = HashSet::from([start.clone()]);
            let mut queue = VecDeque::from([start.clone()]);
            while let Some(w) = queue.pop_front() {
                for s in substreams(&w) {
                    for next in [pr(&w, &s), ipr(&w, &s)].into_iter().flatten() {
                        if universe.contains_key(&next) && !seen.contains(&next) {
                            seen.insert(next.clone());
                            queue.push_back(next);
                        }
                    }
                }
            }
            let missing: Vec<&Vec<i64>> =
                interior.iter().filter(|w| !seen.contains(*w)).map(|w| &universe[w]).collect();
            tally.check(
                "interior-connected",
                missing.is_empty(),
                || format!("P={p} Q={q} B={} margin={margin}", spec.rho_bound),
                || format!("unreached weights {missing:?}"),
            );
            Ok(tally)
        })
        .collect();
    tallies.into_iter().try_fold(Tally::new(), |acc, t| Ok(acc.merge(t?)))
}

fn reversed_shape(t: &Tabloid) -> Composition {
    let mut parts = t.shape().parts().to_vec();
    parts.reverse();
    Composition::new(parts)
}

fn upsilon(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    let n = spec.n;
    let mut tally = Tally::new();
    let classes = upsilon_classes(n)?;
    let factorial: usize = (1..=n).product();
    tally.check(
        "class-count",
        classes.len() == factorial,
        || format!("n={n}"),
        || format!("{} classes", classes.len()),
    );
    for (word, class) in &classes {
        let input = || format!("Υ{word:?}");
        let ps: BTreeSet<Tabloid> = class.iter().map(|t| rsk(t).0).collect();
        tally.check("single-rsk-p", ps.len() == 1, input, || format!("{ps:?}"));
        let shapes: Vec<Partition> = class.iter().map(|t| t.shape().sorted()).collect();
        let distinct: BTreeSet<&Partition> = shapes.iter().collect();
        tally.check("one-per-shape", distinct.len() == class.len(), input, || format!("{shapes:?}"));
        // Every partition below a member's shape is represented.
        for top in &shapes {
            for mu in Partition::all(n) {
                if top.dominates(&mu) {
                    tally.check("downward-closed", distinct.contains(&mu), input, || {
                        format!("missing {mu} below {top}")
                    });
                }
            }
        }
        for s in class {
            for t in class {
                if s.shape().sorted().dominates(&t.shape().sorted()) {
                    let got = theta(&rsk(s).1, &reversed_shape(t));
                    let want = rsk(t).1;
                    tally.check(
                        "theta-links-rsk-q",
                        got.as_ref() == Ok(&want),
                        || format!("{} S={s} T={t}", input()),
                        || format!("{got:?}"),
                    );
                }
            }
        }
    }
    if n == 4 {
        let expected = fixtures::upsilon_n4();
        let got: BTreeMap<Vec<usize>, BTreeSet<Tabloid>> =
            classes.iter().map(|(k, v)| (k.clone(), v.iter().cloned().collect())).collect();
        tally.check("matches-n4-table", got == expected, || "n=4".into(), || format!("{got:?}"));
    }
    Ok(tally)
}

fn sorted_desc(v: &[usize]) -> Vec<usize> {
    let mut s = v.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

fn dominates(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    (0..a.len().max(b.len())).all(|k| {
        sa += a.get(k).copied().unwrap_or(0);
        sb += b.get(k).copied().unwrap_or(0);
        sa >= sb
    })
}

/// A random legal path of compositions from `alpha` to `beta`.
pub fn random_theta_path(alpha: &[usize], beta: &[usize], rng: &mut impl Rng) -> Vec<Composition> {
    let len = alpha.len().max(beta.len());
    let mut cur = alpha.to_vec();
    cur.resize(len, 0);
    let mut target = beta.to_vec();
    target.resize(len, 0);
    let beta_plus = sorted_desc(&target);
    let mut path = Vec::new();
    while sorted_desc(&cur) != beta_plus {
        let mut moves = Vec::new();
        for ia in 0..len {
            for ib in 0..len {
                if ia != ib && cur[ia] >= cur[ib] + 2 {
                    let mut next = cur.clone();
                    next[ia] -= 1;
                    next[ib] += 1;
                    if dominates(&sorted_desc(&next), &beta_plus) {
                        moves.push((ia, ib));
                    }
                }
            }
        }
        let &(ia, ib) = moves.choose(rng).expect("a dominance step exists");
        let (a, b) = (cur[ia], cur[ib]);
        let mut rest = cur.clone();
        rest.remove(ia.max(ib));
        rest.remove(ia.min(ib));
        rest.shuffle(rng);
        let mut arranged = vec![a, b];
        arranged.extend(rest);
        path.push(Composition::new(arranged.clone()));
        arranged[0] -= 1;
        arranged[1] += 1;
        path.push(Composition::new(arranged.clone()));
        cur = arranged;
        if rng.gen_bool(0.5) {
            cur.shuffle(rng);
            path.push(Composition::new(cur.clone()));
        }
    }
    path.push(Composition::new(target));
    path
}

/// All semistandard tableaux of size `n` with entries at most `n`.
pub fn all_ssyt(n: usize) -> BTreeSet<Tabloid> {
    weak_compositions(n, n.max(1))
        .into_iter()
        .flat_map(|shape| Tabloid::all_row_standard(&shape).into_iter().map(|t| rsk(&t).1))
        .collect()
}

fn theta_paths(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    let n = spec.n;
    let len = n.max(1);
    let betas = weak_compositions(n, len);
    let tableaux: Vec<Tabloid> = all_ssyt(n).into_iter().collect();
    let tallies: Vec<Tally> = tableaux
        .par_iter()
        .enumerate()
        .map(|(k, u)| {
            let mut tally = Tally::new();
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            let mut alpha = u.content().parts().to_vec();
            alpha.resize(len, 0);
            for beta in &betas {
                if !dominates(&sorted_desc(&alpha), &sorted_desc(beta)) {
                    continue;
                }
                let input = || format!("U={u} β={beta:?}");
                let canonical = canonical_theta_path(&alpha, beta).and_then(|p| theta_along(u, &p));
                let ok = canonical.as_ref().is_ok_and(|v| {
                    v.is_semistandard() && v.shape() == u.shape() && v.content() == Composition::new(beta.clone())
                });
                tally.check("canonical-valid", ok, input, || format!("{canonical:?}"));
                for _ in 0..2 {
                    let path = random_theta_path(&alpha, beta, &mut rng);
                    let other = theta_along(u, &path);
                    tally.check("path-independent", other == canonical, input, || format!("{path:?} gives {other:?}"));
                }
            }
            tally
        })
        .collect();
    Ok(tallies.into_iter().fold(Tally::new(), Tally::merge))
}

fn braid(spec: &EnumerationSpec) -> Result<Tally, HarnessError> {
    let mut tally = Tally::new();
    for n in 1..=spec.n {
        for len in 2..=4 {
            for shape in weak_compositions(n, len) {
                for t in Tabloid::all_row_standard(&shape) {
                    let input = || format!("T={t}");
                    for i in 1..len {
                        let r = r_matrix(&t, i)?;
                        let want_shape = Composition::new(shape.clone()).swapped(i);
                        tally.check("r-shape", r.shape().padded_eq(&want_shape), input, || format!("R_{i} = {r}"));
                        tally.check("r-involution", r_matrix(&r, i)? == t, input, || format!("i={i}"));
                        if i + 1 < len {
                            let lhs = r_matrix(&r_matrix(&r, i + 1)?, i)?;
                            let rhs = r_matrix(&r_matrix(&r_matrix(&t, i + 1)?, i)?, i + 1)?;
                            tally.check("r-braid", lhs == rhs, input, || format!("i={i}: {lhs} vs {rhs}"));
                        }
                        for j in i + 2..len {
                            let lhs = r_matrix(&r, j)?;
                            let rhs = r_matrix(&r_matrix(&t, j)?, i)?;
                            tally.check("r-commute", lhs == rhs, input, || format!("i={i} j={j}"));
                        }
                    }
                }
            }
        }
        for u in all_ssyt(n) {
            let input = || format!("U={u}");
            let top = 4.min(n.max(2));
            for i in 1..top {
                let s = crystal_reflection(&u, i);
                let want = u.content().swapped(i);
                tally.check("crystal-content", s.content() == want, input, || format!("s_{i} = {s}"));
                tally.check("crystal-involution", crystal_reflection(&s, i) == u, input, || format!("i={i}"));
                if i + 1 < top {
                    let lhs = crystal_reflection(&crystal_reflection(&s, i + 1), i);
                    let rhs = crystal_reflection(&crystal_reflection(&crystal_reflection(&u, i + 1), i), i + 1);
                    tally.check("crystal-braid", lhs == rhs, input, || format!("i={i}"));
                }
            }
        }
    }
    Ok(tally)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weak_composition_counts() {
        assert_eq!(weak_compositions(3, 2).len(), 4);
        assert_eq!(weak_compositions(5, 5).len(), 126);
        assert_eq!(weak_compositions(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn substreams_of_identity_are_all_subsets() {
        assert_eq!(substreams(&Window::identity(3)).len(), 7);
        assert_eq!(substreams(&"[2,1]".parse().unwrap()).len(), 2);
    }

    #[test]
    fn ssyt_counts() {
        // Number of SSYT of size 3 with entries in [1,3]: s_(3)+s_(2,1)+s_(1,1,1) at 1^3 = 10+8+1.
        assert_eq!(all_ssyt(3).len(), 19);
    }

    #[test]
    fn random_paths_end_at_target() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let path = random_theta_path(&[3, 1, 0], &[1, 1, 2], &mut rng);
        assert_eq!(path.last().unwrap().parts(), &[1, 1, 2]);
    }

    #[test]
    fn small_suites_pass() {
        for name in SUITES {
            if *name == "golden" {
                continue;
            }
            let r = run_suite(name, &EnumerationSpec::new(3, 1)).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(matches!(run_suite("nope", &EnumerationSpec::new(3, 1)), Err(HarnessError::UnknownSuite(_))));
    }
}
