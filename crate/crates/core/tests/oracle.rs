use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use agpoly_core::fermionic::{andrews_gordon_lhs_terms, fermionic_terms};
use agpoly_core::polyhedral::{degree_bounds, enumerate_basis, hilbert_by_enumeration};
use agpoly_core::quotient::{
    graded_dimension, graded_piece, hilbert_by_quotient, ideal_generators, rank_exact, rank_mod_p, PRIME,
};
use agpoly_core::Params;

fn small_grid() -> impl Iterator<Item = Params> {
    (2..=4).flat_map(|n| {
        (0..=2).flat_map(move |k| {
            (0..=k).flat_map(move |l| (0..=k).map(move |r| Params::new(n, k, l, r).unwrap()))
        })
    })
}

#[test]
fn prime_field_rank_matches_exact_rank_on_sample() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut sampled = 0;
    for par in small_grid() {
        let ideal = ideal_generators(&par).unwrap();
        let (maxdeg_q, _) = degree_bounds(&par).unwrap();
        for i in 0..=maxdeg_q + 1 {
            for j in 0..=i {
                if !rng.gen_bool(0.2) {
                    continue;
                }
                let piece = graded_piece(&ideal, i, j);
                assert_eq!(
                    rank_mod_p(&piece.rows, PRIME),
                    rank_exact(&piece.rows),
                    "{par} at ({i},{j})"
                );
                sampled += 1;
            }
        }
    }
    assert!(sampled > 50);
}

#[test]
fn graded_dimension_edges() {
    for par in small_grid() {
        assert_eq!(graded_dimension(&par, 0, 0).unwrap(), 1);
        for i in 0..4 {
            assert_eq!(graded_dimension(&par, i, i + 1).unwrap(), 0, "{par}");
        }
        if par.k == 0 {
            for i in 1..5 {
                for j in 1..=i {
                    assert_eq!(graded_dimension(&par, i, j).unwrap(), 0);
                }
            }
        }
    }
}

#[test]
fn quotient_matches_enumeration_beyond_top_degree() {
    for par in small_grid() {
        let (maxdeg_q, _) = degree_bounds(&par).unwrap();
        assert_eq!(
            hilbert_by_quotient(&par, maxdeg_q + 2).unwrap(),
            hilbert_by_enumeration(&par).unwrap(),
            "{par}"
        );
    }
}

#[test]
fn fermionic_summands_at_full_bounds_match_identity_left_side() {
    for n in 2..=5 {
        for k in 0..=3 {
            let par = Params::new(n, k, k, k).unwrap();
            assert_eq!(fermionic_terms(&par).unwrap(), andrews_gordon_lhs_terms(n, k), "{par}");
        }
    }
}

#[test]
fn enumeration_bounds_are_sound() {
    // Every admissible vector lies in [0, k]^N, so a box search with a
    // margin finds nothing new.
    for n in 2..=4 {
        for k in 0..=2 {
            for l in 0..=k {
                for r in 0..=k {
                    let par = Params::new(n, k, l, r).unwrap();
                    let basis = enumerate_basis(&par).unwrap();
                    let side = (k + 2) as usize;
                    let mut count = 0;
                    let mut a = vec![0usize; n as usize];
                    'odometer: loop {
                        let v: Vec<i64> = a.iter().map(|&x| x as i64).collect();
                        let ok = v[0] <= l
                            && v[v.len() - 1] <= r
                            && v.windows(2).all(|w| w[0] + w[1] <= k);
                        if ok {
                            count += 1;
                        }
                        for slot in a.iter_mut() {
                            *slot += 1;
                            if *slot < side {
                                continue 'odometer;
                            }
                            *slot = 0;
                        }
                        break;
                    }
                    assert_eq!(basis.len(), count, "{par}");
                }
            }
        }
    }
}
