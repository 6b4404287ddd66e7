use ambc_core::ambc::{greene_kleitman, greene_kleitman_brute};
use ambc_core::group::{compose, inverse, left_star, omega_left, omega_left_inverse, right_star, rotate_r};
use ambc_core::sign::{sign_insert, sign_q};
use ambc_core::tableaux::{rsk, rsk_inverse};
use ambc_core::{phi, psi, Tabloid, Window};
use proptest::prelude::*;

fn window(n: usize) -> impl Strategy<Value = Window> {
    (Just((1..=n as i64).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(-2i64..=2, n)).prop_map(
        move |(perm, shifts)| {
            let vals: Vec<i64> = perm.iter().zip(shifts).map(|(v, k)| v + k * n as i64).collect();
            Window::from_values(&vals).unwrap()
        },
    )
}

fn any_window() -> impl Strategy<Value = Window> {
    (1usize..=7).prop_flat_map(window)
}

fn tabloid() -> impl Strategy<Value = Tabloid> {
    (1usize..=7, 1usize..=4).prop_flat_map(|(n, rows)| {
        prop::collection::vec(0..rows, n).prop_map(move |assign| {
            let mut r = vec![Vec::new(); rows];
            for (v, row) in assign.into_iter().enumerate() {
                r[row].push(v + 1);
            }
            Tabloid::new(r)
        })
    })
}

proptest! {
    #[test]
    fn ambc_round_trip(w in any_window()) {
        let t = phi(&w).unwrap();
        prop_assert!(t.is_dominant());
        prop_assert_eq!(psi(&t).unwrap(), w.clone());
        prop_assert_eq!(t.shape(), greene_kleitman_brute(&w));
        prop_assert_eq!(greene_kleitman(&w), t.shape());
    }

    #[test]
    fn group_laws(u in window(5), v in window(5)) {
        let uv = compose(&u, &v).unwrap();
        prop_assert_eq!(compose(&uv, &inverse(&v).unwrap()).unwrap(), u.clone());
        prop_assert_eq!(rotate_r(&rotate_r(&u)), u.clone());
        prop_assert_eq!(omega_left_inverse(&omega_left(&u).unwrap()).unwrap(), u);
    }

    #[test]
    fn star_moves_keep_one_tableau(w in window(5), i in 1usize..=5) {
        let t = phi(&w).unwrap();
        if let Ok(x) = right_star(&w, i) {
            prop_assert_eq!(phi(&x).unwrap().p, t.p.clone());
        }
        if let Ok(x) = left_star(&w, i) {
            prop_assert_eq!(phi(&x).unwrap().q, t.q.clone());
            prop_assert_eq!(sign_q(&x).unwrap(), sign_q(&w).unwrap());
        }
    }

    #[test]
    fn sign_words_are_increasing(w in any_window()) {
        let (p, q) = sign_insert(&w).unwrap();
        prop_assert_eq!(p.len(), w.n());
        prop_assert!(p.windows(2).all(|x| x[0] < x[1]));
        prop_assert!(q.windows(2).all(|x| x[0] < x[1]));
        prop_assert!(Window::from_values(&p).is_ok());
    }

    #[test]
    fn rsk_round_trip(t in tabloid()) {
        let (p, q) = rsk(&t);
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert!(q.is_semistandard());
        prop_assert_eq!(rsk_inverse(&p, &q, t.num_rows()).unwrap(), t);
    }
}
