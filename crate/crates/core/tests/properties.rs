use cy5_core::engine::with_large_stack;
use cy5_core::exact::{frac, int, Rational};
use cy5_core::geometry::{GwInput, GwRow};
use cy5_core::localp2::localp2_geometry;
use cy5_core::{CurveClass, Engine, Geometry, MemoStore};
use proptest::prelude::*;

fn c(d: u32) -> CurveClass {
    CurveClass::new(d).unwrap()
}

fn check_symmetries(g: &Geometry, max_total: u32) {
    with_large_stack(|| {
        let memo = MemoStore::new();
        let e = Engine::new(g, &memo);
        let h = g.ring().h(1);
        for total in 2..=max_total {
            for b1 in 1..total {
                let b2 = total - b1;
                assert_eq!(
                    e.n2b(c(b1), c(b2), &h).unwrap(),
                    e.n2b(c(b2), c(b1), &h).unwrap(),
                    "n2B({b1},{b2})"
                );
            }
        }
        for total in 3..=max_total {
            for b1 in 1..total - 1 {
                for b2 in 1..total - b1 {
                    let b3 = total - b1 - b2;
                    assert_eq!(
                        e.m3(c(b1), c(b2), c(b3)).unwrap(),
                        e.m3(c(b3), c(b2), c(b1)).unwrap(),
                        "m3({b1},{b2},{b3})"
                    );
                }
            }
        }
    })
}

#[test]
fn local_p2_meeting_numbers_are_symmetric() {
    let g = localp2_geometry(10).unwrap();
    check_symmetries(&g, 10);
}

#[test]
fn local_p2_chains_are_integral() {
    let g = localp2_geometry(10).unwrap();
    let memo = MemoStore::new();
    let e = Engine::new(&g, &memo);
    for b1 in 1..=4 {
        for b2 in 1..=3 {
            for b3 in 1..=3 {
                assert!(e.m3(c(b1), c(b2), c(b3)).unwrap().is_integer());
            }
        }
    }
}

#[test]
fn gamma2_asymmetry_is_explained_by_its_first_terms() {
    let g = localp2_geometry(8).unwrap();
    let memo = MemoStore::new();
    let e = Engine::new(&g, &memo);
    let c2 = g.c2().clone();
    let head =
        |a: u32, b: u32| e.n2a(c(a), c(b), &c2).unwrap() + int(2) * e.n2e(c(a), c(b)).unwrap();
    for a in 1..=4 {
        for b in 1..=4 {
            let lhs = e.gamma2(c(a), c(b)).unwrap() - e.gamma2(c(b), c(a)).unwrap();
            assert_eq!(lhs, head(a, b) - head(b, a), "gamma2({a},{b})");
        }
    }
    assert_ne!(e.gamma2(c(1), c(2)).unwrap(), e.gamma2(c(2), c(1)).unwrap());
}

#[test]
fn fresh_memos_give_identical_values() {
    let g = localp2_geometry(10).unwrap();
    let run = || {
        let memo = MemoStore::new();
        let e = Engine::new(&g, &memo);
        for d in (1..=10).rev() {
            e.chern_integral(c(d)).unwrap();
        }
        memo.entries()
    };
    let first = with_large_stack(run);
    let second = with_large_stack(run);
    assert_eq!(first, second);
    assert!(first.len() > 100);
}

#[test]
fn zero_input_gives_zero_everything() {
    let g = localp2_geometry(8).unwrap().zeroed();
    let memo = MemoStore::new();
    let e = Engine::new(&g, &memo);
    let h = g.ring().h(1);
    for d in 1..=8 {
        assert_eq!(e.chern_integral(c(d)).unwrap(), int(0));
    }
    assert_eq!(e.n2b(c(3), c(4), &h).unwrap(), int(0));
    assert!(memo.entries().iter().all(|(_, v)| *v == int(0)));
}

fn random_hypersurface(rows: Vec<(i64, i64, i64)>) -> Geometry {
    let input = GwInput {
        t5: int(7),
        c2: int(21),
        c3: int(-112),
        rows: rows
            .into_iter()
            .map(|(a, b, g)| GwRow {
                one_point: frac(a, 3),
                two_point: frac(b, 5),
                genus1: int(g),
            })
            .collect(),
    };
    let max = input.max_degree();
    input.to_geometry(max).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hypersurface_meeting_numbers_are_symmetric(
        rows in proptest::collection::vec((-50i64..50, -50i64..50, -5i64..5), 6)
    ) {
        let g = random_hypersurface(rows);
        check_symmetries(&g, 6);
    }

    #[test]
    fn counts_are_linear_in_insertions(
        x in -20i64..20, y in 1i64..20, d1 in 1u32..4, d2 in 1u32..4
    ) {
        let g = localp2_geometry(8).unwrap();
        let memo = MemoStore::new();
        let e = Engine::new(&g, &memo);
        let ring = g.ring();
        let s = frac(x, y);
        let h = ring.h(1);
        let h2 = ring.h(2);
        let sh = h.scale(&s);
        let sh2 = h2.scale(&s);
        let n2b: Rational = e.n2b(c(d1), c(d2), &h).unwrap();
        prop_assert_eq!(e.n2b(c(d1), c(d2), &sh).unwrap(), &s * n2b);
        let n2d = e.n2d(c(d1), c(d2), &h).unwrap();
        prop_assert_eq!(e.n2d(c(d1), c(d2), &sh).unwrap(), &s * n2d);
        let n2a = e.n2a(c(d1), c(d2), &h2).unwrap();
        prop_assert_eq!(e.n2a(c(d1), c(d2), &sh2).unwrap(), &s * n2a);
        let sum = &h + &sh;
        let n1e = e.n1e(c(d1 + d2), &h).unwrap();
        prop_assert_eq!(e.n1e(c(d1 + d2), &sum).unwrap(), (int(1) + &s) * n1e);
    }
}
