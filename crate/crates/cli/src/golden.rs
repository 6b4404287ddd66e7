//! Replay of the worked examples with known answers.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use ambc_core::ambc::{canonical_channels, channel_distance, channel_numbering, find_channels, symmetrized_offset};
use ambc_core::group::{left_star, omega_left, omega_right_inverse, right_star};
use ambc_core::rotations::{diamond_complete, ipr, pr, DiamondMove};
use ambc_core::sign::{build_w_tn, sign_insert, sign_trace};
use ambc_core::tableaux::{rsk, theta, upsilon_classes};
use ambc_core::{phi, AmbcTriple, Composition, Stream, Tabloid, Window};

use crate::fixtures;
use crate::report::Tally;

const EX3: &str = "[1,6,8,14,17,5,0,19,3,22]";
const EX51: &str = "[8,1,19,14,16,2,25,13,10,27]";
const EX57: &str = "[6,1,18,3,19,24,12,15,17,10]";

fn w(s: &str) -> Window {
    s.parse().expect("literal window")
}

fn triple(p: &str, q: &str, rho: &[i64]) -> AmbcTriple {
    AmbcTriple { p: p.parse().expect("literal tableau"), q: q.parse().expect("literal tableau"), rho: rho.to_vec() }
}

fn check_phi(tally: &mut Tally, name: &str, x: Result<Window, ambc_core::Error>, expect: AmbcTriple) {
    let got = x.and_then(|x| phi(&x));
    tally.check(name, got.as_ref() == Ok(&expect), || name.to_string(), || format!("got {got:?}, expected {expect}"));
}

fn check_eq<T: PartialEq + std::fmt::Debug>(tally: &mut Tally, name: &str, got: T, expect: T) {
    let ok = got == expect;
    tally.check(name, ok, || name.to_string(), || format!("got {got:?}, expected {expect:?}"));
}

fn trace_of(x: &str) -> Vec<String> {
    sign_trace(&w(x)).map(|t| t.iter().map(ToString::to_string).collect()).unwrap_or_default()
}

fn windows_of(streams: &[Stream]) -> Vec<Window> {
    streams.iter().map(|s| s.window().clone()).collect()
}

fn class_images(
    classes: &BTreeMap<Vec<usize>, Vec<Tabloid>>,
    f: impl Fn(&Tabloid) -> Tabloid,
) -> BTreeMap<Vec<usize>, BTreeSet<Tabloid>> {
    classes.iter().map(|(k, v)| (k.clone(), v.iter().map(&f).collect())).collect()
}

/// Runs every example check.
pub fn golden() -> Tally {
    let mut tally = Tally::new();
    let t = &mut tally;
    let x = w(EX3);

    let p3 = "((3,5,8,10),(1,4,9),(2,6),(7))";
    let q3 = "((4,5,8,10),(1,2,3),(6,9),(7))";
    check_phi(t, "phi-window", Ok(x.clone()), triple(p3, q3, &[4, 0, 0, 0]));
    check_phi(t, "phi-left-star", left_star(&x, 2), triple("((2,5,8,10),(1,4,9),(3,6),(7))", q3, &[4, 0, 0, 0]));
    check_phi(t, "phi-right-star", right_star(&x, 10), triple(p3, "((1,4,5,8),(2,3,10),(6,9),(7))", &[3, 1, 0, 0]));
    check_phi(t, "phi-omega-left", omega_left(&x), triple("((1,4,6,9),(2,5,10),(3,7),(8))", q3, &[5, 0, 0, 0]));
    check_phi(
        t,
        "phi-omega-right-inverse",
        omega_right_inverse(&x),
        triple(p3, "((1,5,6,9),(2,3,4),(7,10),(8))", &[3, 0, 0, 0]),
    );

    check_eq(t, "sign-trace-short", trace_of("[17,13,4,20,9,24]"), fixtures::trace_lines(fixtures::SIGN_TRACE_SHORT));
    check_eq(t, "sign-trace-window", trace_of(EX57), fixtures::trace_lines(fixtures::SIGN_TRACE_WINDOW));
    check_eq(
        t,
        "sign-trace-rotated",
        trace_of("[6,1,18,3,19,24,15,17,22,10]"),
        fixtures::trace_lines(fixtures::SIGN_TRACE_ROTATED),
    );

    let ex51 = w(EX51);
    let (c1, c2, c3) = (w("[_,1,_,_,_,2,_,_,10,_]"), w("[8,_,_,14,16,_,_,_,_,_]"), w("[_,_,19,_,_,_,25,_,_,27]"));
    let found: HashSet<Window> = windows_of(&find_channels(&ex51)).into_iter().collect();
    check_eq(t, "channels", found, HashSet::from([c1.clone(), c2.clone(), c3.clone()]));
    let labels = |c: &Window| -> Option<Vec<i64>> {
        channel_numbering(&ex51, c).ok().and_then(|d| d.labels().iter().copied().collect())
    };
    check_eq(t, "numbering-1", labels(&c1), Some(vec![0, 0, 2, 1, 2, 1, 3, 2, 2, 4]));
    check_eq(t, "numbering-2", labels(&c2), Some(vec![1, 0, 3, 2, 3, 1, 4, 2, 2, 5]));
    check_eq(t, "numbering-3", labels(&c3), Some(vec![1, 0, 4, 2, 3, 1, 5, 2, 2, 6]));
    let h = [(&c1, &c2), (&c2, &c3), (&c1, &c3)].map(|(a, b)| channel_distance(&ex51, a, b).ok());
    check_eq(t, "distances", h, [Some(1), Some(1), Some(2)]);

    let x = w(EX57);
    let seq = canonical_channels(&x);
    let (f1, f2, f3) = (w("[_,1,_,3,_,_,_,_,_,10]"), w("[_,_,_,_,_,_,12,15,17,_]"), w("[_,_,18,_,19,24,_,_,_,_]"));
    check_eq(t, "canonical-channels", windows_of(&seq.channels), vec![f1.clone(), f2.clone(), f3]);
    check_eq(t, "river-breaks", seq.river_breaks.clone(), vec![0, 2, 3]);

    let p57 = "((1,3,10),(2,5,6),(4,7,9),(8))";
    let q57 = "((3,5,6),(7,8,9),(1,4,10),(2))";
    let t57 = triple(p57, q57, &[2, 3, 2, 0]);
    check_phi(t, "phi-rotation-example", Ok(x.clone()), t57.clone());
    check_eq(t, "offsets", symmetrized_offset(&t57.p, &t57.q).ok(), Some(vec![0, 1, -1, 0]));
    check_eq(t, "reduced-weight", t57.reduced_rho(), vec![2, 2, 3, 0]);
    let ipr1 = ipr(&x, &f1);
    check_eq(t, "ipr-c1", ipr1.clone().ok(), Some(w("[6,0,18,1,19,24,12,15,17,3]")));
    check_phi(t, "phi-ipr-c1", ipr1, triple(p57, q57, &[1, 3, 2, 0]));
    let pr2 = pr(&x, &f2);
    check_eq(t, "pr-c2", pr2.clone().ok(), Some(w("[6,1,18,3,19,24,15,17,22,10]")));
    check_phi(t, "phi-pr-c2", pr2, triple(p57, q57, &[2, 4, 2, 0]));

    // Improper rotations leave the cell.
    let c2b = w("[6,_,_,_,_,_,12,15,_,_]");
    let p58 = "((1,3,6,10),(2,5,9),(4,7),(8))";
    let q58 = "((3,5,6,9),(4,7,8),(1,10),(2))";
    let pr1 = pr(&x, &f1);
    check_eq(t, "pr-c1", pr1.clone().ok(), Some(w("[6,3,18,10,19,24,12,15,17,11]")));
    check_phi(t, "phi-pr-c1", pr1, triple(p58, q58, &[3, 4, 1, 0]));
    let ipr2 = ipr(&x, &f2);
    check_eq(t, "ipr-c2", ipr2.clone().ok(), Some(w("[6,1,18,3,19,24,7,12,15,10]")));
    let p2 = "((1,3,7,10),(2,5,6),(4,8,9))";
    let q2 = "((1,3,5,6),(7,8,9),(2,4,10))";
    check_phi(t, "phi-ipr-c2", ipr2, triple(p2, q2, &[1, 3, 2]));
    let pr2b = pr(&x, &c2b);
    check_eq(t, "pr-c2-other", pr2b.clone().ok(), Some(w("[12,1,18,3,19,24,15,16,17,10]")));
    check_phi(t, "phi-pr-c2-other", pr2b, triple(p2, q2, &[3, 3, 2]));
    let ipr2b = ipr(&x, &c2b);
    check_eq(t, "ipr-c2-other", ipr2b.clone().ok(), Some(w("[5,1,18,3,19,24,6,12,17,10]")));
    check_phi(t, "phi-ipr-c2-other", ipr2b, triple(p58, q58, &[1, 4, 1, 0]));

    let d = diamond_complete(&x, 7, 2, false, DiamondMove::Star).ok();
    let corners = d.map(|d| (d.w_star, d.w_tilde, d.w_tilde_star, d.s_star.into_window()));
    check_eq(
        t,
        "diamond",
        corners,
        Some((
            w("[6,1,18,3,19,12,24,15,17,10]"),
            w("[6,1,18,3,19,24,15,17,22,10]"),
            w("[6,1,18,3,19,15,24,17,22,10]"),
            w("[_,_,_,_,_,12,_,15,17,_]"),
        )),
    );

    let tab: Tabloid = "((3,6,7,9),(4,8,10),(1,5),(2))".parse().expect("literal tableau");
    let wt = build_w_tn(&tab, 10);
    check_eq(t, "w-tn", wt.clone().ok(), Some(w("[102,1,307,204,103,308,309,205,310,206]")));
    let sgn_p = |x: &Window| sign_insert(x).ok().map(|s| s.0);
    check_eq(
        t,
        "w-tn-sgn-p",
        wt.as_ref().ok().and_then(sgn_p),
        Some(vec![1, 103, 112, 206, 214, 215, 318, 319, 320, 327]),
    );
    // The second window rotates each row of the tableau as a stream.
    let mut wtilde = wt.clone();
    for (row, times) in tab.rows().iter().zip([35, 28, 19, 10]).rev() {
        for _ in 0..times {
            wtilde = wtilde.and_then(|y| pr(&y, &y.restrict(row)));
        }
    }
    check_eq(t, "w-tilde", wtilde.clone().ok(), Some(w("[193,101,390,295,202,397,398,296,399,304]")));
    check_eq(
        t,
        "w-tilde-sgn-p",
        wtilde.as_ref().ok().and_then(sgn_p),
        Some(vec![101, 202, 203, 304, 305, 306, 407, 408, 409, 410]),
    );
    check_phi(
        t,
        "phi-w-tilde",
        wtilde,
        triple("((1,3,6,10),(2,5,9),(4,8),(7))", "((3,6,7,9),(4,8,10),(1,5),(2))", &[155, 88, 39, 10]),
    );

    match upsilon_classes(4) {
        Ok(classes) => {
            check_eq(t, "upsilon-n4", class_images(&classes, Clone::clone), fixtures::upsilon_n4());
            check_eq(
                t,
                "upsilon-n4-rsk-p",
                class_images(&classes, |x| rsk(x).0),
                fixtures::parse_class_table(fixtures::UPSILON_N4_RSK_P),
            );
            check_eq(
                t,
                "upsilon-n4-rsk-q",
                class_images(&classes, |x| rsk(x).1),
                fixtures::parse_class_table(fixtures::UPSILON_N4_RSK_Q),
            );
        }
        Err(e) => t.check("upsilon-n4", false, || "n=4".into(), || e.to_string()),
    }

    let u: Tabloid = "((1,3,3),(2))".parse().expect("literal tableau");
    let step1 = theta(&u, &Composition::new(vec![2, 0, 1, 1]));
    check_eq(t, "theta-chain-1", step1.clone().ok(), "((1,1,4),(3))".parse().ok());
    let step2 = step1.and_then(|v| theta(&v, &Composition::new(vec![1, 1, 1, 1])));
    check_eq(t, "theta-chain-2", step2.ok(), "((1,2,4),(3))".parse().ok());

    tally
}

#[cfg(test)]
mod tests {
    #[test]
    fn golden_passes() {
        let t = super::golden();
        assert!(t.failures.is_empty(), "{:#?}", t.failures);
        assert!(t.checks.len() > 40);
    }
}
