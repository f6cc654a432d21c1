mod common;

use common::part;
use weylhom::{
    build_psi, carter_payne_witnesses, check_nonvanishing, check_stability, hom_space, hom_space_with, hom_stats,
    in_lambda_g, in_p, is_hom, lp, partitions, sweep_dk, sweep_dk_with, Limits, Partition, Weight,
};

const BUDGET: Limits = Limits { monomial_cap: 200_000 };

#[test]
fn documented_examples() {
    let v = check_stability(&part("11,10,7,3,3"), &part("14,10,7,3"), &part("9,9,9"), 3).unwrap();
    assert!(v.applicable && v.failed_conditions.is_empty());
    let v = check_stability(&part("4,3,2,2"), &part("5,5,1"), &part("6,3"), 3).unwrap();
    assert!(!v.applicable);
    assert!(v.failed_conditions.iter().any(|f| f.contains("P(mu)")));
    let v = check_stability(&part("5,4,1,1"), &part("8,2,1"), &part("4,2"), 2).unwrap();
    assert!(!v.applicable);
    assert!(v.failed_conditions.iter().any(|f| f.contains("Lambda+_g")));

    assert!(check_nonvanishing(&part("20,14,4,4,4,4"), &part("24,16,10"), 5).unwrap().applicable);
    for p in [2, 3, 5, 7, 11] {
        assert!(check_nonvanishing(&part("2,1"), &part("2,1"), p).unwrap().applicable);
    }
    assert!(!check_nonvanishing(&part("1,1"), &part("2"), 3).unwrap().applicable);

    assert_eq!(carter_payne_witnesses(&part("1,1"), &part("2"), 2).unwrap(), [(1, 2, 1)]);
    assert!(carter_payne_witnesses(&part("1,1"), &part("2"), 3).unwrap().is_empty());
    assert_eq!(carter_payne_witnesses(&part("3,2,1"), &part("4,2"), 5).unwrap(), [(1, 3, 1)]);
}

#[test]
fn verdicts_are_consistent() {
    for r in 1..=6 {
        let parts = partitions(r, 4);
        for lambda in &parts {
            for mu in &parts {
                for p in [2, 3] {
                    let v = check_nonvanishing(lambda, mu, p).unwrap();
                    assert_eq!(v.applicable, v.failed_conditions.is_empty());
                    for gamma in ["", "1", "2,1", "3,3"] {
                        let v = check_stability(lambda, mu, &part(gamma), p).unwrap();
                        assert_eq!(v.applicable, v.failed_conditions.is_empty());
                    }
                }
            }
        }
    }
}

/// The smallest partition `gamma` of length `g` whose parts are multiples of
/// `p^{l_p(e_s)}` (the last part of `p^{l_p(max(c_{g-1}, e_g))}`), plus
/// `extra` more multiples on each part.
fn admissible_gamma(e: &[i64], c: &[i64], p: u64, extra: u32) -> Option<Partition> {
    let g = e.len();
    let mut parts = vec![0u32; g];
    let mut floor = 1u32;
    for s in (0..g).rev() {
        if e[s] < 0 {
            return None;
        }
        let bound = if s + 1 == g && g >= 2 { e[s].max(c[g - 2]) } else { e[s] };
        let step = p.pow(lp(bound as u64, p).unwrap()) as u32;
        let least = floor.div_ceil(step) * step;
        parts[s] = least + extra * step;
        floor = parts[s];
    }
    Partition::new(parts).ok()
}

#[test]
fn stability_is_sound() {
    let mut compared = 0;
    for r in 2..=7 {
        let parts = partitions(r, 4);
        for lambda in &parts {
            for mu in parts.iter().filter(|mu| mu.len() >= 2) {
                if !in_p(&Weight::new(lambda.parts().to_vec()), mu).unwrap() {
                    continue;
                }
                for g in (1..mu.len()).filter(|&g| in_lambda_g(mu, g).unwrap()) {
                    let stats = hom_stats(lambda, mu, g).unwrap();
                    for p in [2, 3] {
                        for extra in 0..2 {
                            let Some(gamma) = admissible_gamma(&stats.e, &stats.c, p, extra) else { continue };
                            if gamma.size() > 14 {
                                continue;
                            }
                            let v = check_stability(lambda, mu, &gamma, p).unwrap();
                            assert!(v.applicable, "({lambda}), ({mu}), ({gamma}): {:?}", v.failed_conditions);
                            let base = hom_space_with(lambda, mu, p, BUDGET);
                            let shifted = hom_space_with(&lambda.add(&gamma), &mu.add(&gamma), p, BUDGET);
                            let (Ok(base), Ok(shifted)) = (base, shifted) else { continue };
                            assert_eq!(base.dim, shifted.dim, "({lambda}) -> ({mu}) shifted by ({gamma}) at p={p}");
                            compared += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(compared > 100, "only {compared} instances compared");
}

#[test]
fn last_part_needs_the_previous_partial_sum() {
    // e_2 = min(lambda_3, c_2) = 0 alone would allow gamma_2 = 1, but the
    // dimensions differ; c_1 = 1 forces gamma_2 even.
    let (lambda, mu) = (part("3,3,2"), part("4,2,2"));
    assert_eq!(hom_stats(&lambda, &mu, 2).unwrap().e, [1, 0]);
    assert_eq!(hom_space(&lambda, &mu, 2).unwrap().dim, 1);
    assert_eq!(hom_space(&part("5,4,2"), &part("6,3,2"), 2).unwrap().dim, 0);
    assert_eq!(hom_space(&part("5,5,2"), &part("6,4,2"), 2).unwrap().dim, 1);
    assert!(!check_stability(&lambda, &mu, &part("2,1"), 2).unwrap().applicable);
    assert!(check_stability(&lambda, &mu, &part("2,2"), 2).unwrap().applicable);
    let (lambda, mu) = (part("2,2,2,1"), part("3,2,1,1"));
    assert_eq!(hom_space(&lambda, &mu, 2).unwrap().dim, 0);
    assert_eq!(hom_space(&part("4,4,3,1"), &part("5,4,2,1"), 2).unwrap().dim, 1);
    assert!(!check_stability(&lambda, &mu, &part("2,2,1"), 2).unwrap().applicable);
}

#[test]
fn nonvanishing_is_sound() {
    let mut applicable = 0;
    for r in 1..=8 {
        let parts = partitions(r, 4);
        for lambda in &parts {
            for mu in &parts {
                for p in [2, 3, 5] {
                    if !check_nonvanishing(lambda, mu, p).unwrap().applicable {
                        continue;
                    }
                    let psi = build_psi(lambda, mu, p).unwrap();
                    assert!(!psi.is_zero(), "psi({lambda}, {mu}) is zero");
                    assert!(is_hom(&psi).unwrap(), "psi({lambda}, {mu}) at p={p} is not a homomorphism");
                    assert!(hom_space(lambda, mu, p).unwrap().dim >= 1);
                    applicable += 1;
                }
            }
        }
    }
    assert!(applicable > 50, "only {applicable} applicable instances");
}

#[test]
fn carter_payne_is_sound() {
    for r in 1..=8 {
        let parts = partitions(r, 4);
        for lambda in &parts {
            for mu in &parts {
                for p in [2, 3, 5] {
                    if !carter_payne_witnesses(lambda, mu, p).unwrap().is_empty() {
                        assert!(hom_space(lambda, mu, p).unwrap().dim >= 1, "({lambda}) -> ({mu}) at p={p}");
                    }
                }
            }
        }
    }
}

#[test]
fn sequence_stabilizes_at_powers_of_p() {
    // mu has distinct parts and lies in Lambda+_{m-1}; lambda moves q boxes
    // from the first row to a new last row.
    let (mu, lambda, q) = (part("3,2,1"), part("2,2,1,1"), 1u64);
    assert!(in_lambda_g(&mu, 2).unwrap());
    for (p, nu, powers) in [(2u64, "2,1", 3u32), (3, "1", 3)] {
        let start = lp(q, p).unwrap();
        let kmax = p.pow(powers) as usize;
        let sweep = sweep_dk(&lambda, &mu, &part(nu), p, kmax).unwrap();
        assert!(sweep.failure.is_none());
        let at: Vec<usize> = (start..=powers).map(|n| sweep.values[p.pow(n) as usize]).collect();
        assert!(at.windows(2).all(|w| w[0] == w[1]), "p={p}, nu=({nu}): {at:?}");
        assert_eq!(sweep.values[0], hom_space(&lambda, &mu, p).unwrap().dim);
    }
}

#[test]
fn sweep_reports_the_failing_point() {
    let s = sweep_dk(&part("3"), &part("2,1"), &part(""), 2, 3).unwrap();
    assert_eq!(s.values, [0, 0, 0, 0]);
    let s = sweep_dk_with(&part("2,1,1"), &part("3,1"), &part("3,1"), 2, 6, Limits { monomial_cap: 4 }).unwrap();
    let (k, err) = s.failure.expect("cap should be hit");
    assert_eq!(s.values.len(), k);
    assert!(err.is_resource());
}
