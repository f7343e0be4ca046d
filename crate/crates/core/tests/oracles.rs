//! Library results checked against independent oracles.

mod common;

use approx::assert_abs_diff_eq;
use bmscheme::polyprops::{lagrange_identity_check, lrs_ratios, qpoly_criterion_main};
use bmscheme::scheme::{adjacency_from_edges, validate_axioms};
use bmscheme::spectral::{krein_parameters, primitive_idempotents, SpectralBasis};
use bmscheme::{catalog, RelationTable};
use common::*;

fn basis(table: &RelationTable) -> SpectralBasis {
    let tensor = validate_axioms(table).unwrap();
    primitive_idempotents(table, &tensor, 1e-8).unwrap()
}

#[test]
fn petersen_brute_force_spectrum() {
    let table = catalog::petersen().table;
    let brute = BruteSpectrum::new(&table);
    let eigs: Vec<f64> = brute.spaces.iter().map(|(v, _)| *v).collect();
    for (got, want) in eigs.iter().zip([3.0, 1.0, -2.0]) {
        assert_abs_diff_eq!(*got, want, epsilon = 1e-9);
    }
    assert_eq!(brute.multiplicities(), vec![1, 5, 4]);
    let b = basis(&table);
    assert_eq!(b.multiplicities(), brute.multiplicities());
    for j in 0..3 {
        assert_abs_diff_eq!(b.p(1, j), eigs[j], epsilon = 1e-9);
    }
}

#[test]
fn petersen_and_cube_ratios_against_brute_force() {
    // Petersen: E_1 is the eigenvalue-1 space, the last Q-index is the -2 space
    let table = catalog::petersen().table;
    let brute = BruteSpectrum::new(&table);
    let theta = brute.dual_row(&table, 1);
    for (got, want) in theta.iter().zip([5.0, 5.0 / 3.0, -5.0 / 3.0]) {
        assert_abs_diff_eq!(*got, want, epsilon = 1e-9);
    }
    let k = ratio_oracle(&theta);
    let minus_p: Vec<f64> = (1..=2).map(|i| -brute.eigenvalue(&table, i, 2)).collect();
    for ((kv, pv), want) in k.iter().zip(&minus_p).zip([2.0, -1.0]) {
        assert_abs_diff_eq!(*kv, want, epsilon = 1e-9);
        assert_abs_diff_eq!(*pv, want, epsilon = 1e-9);
    }
    let lib = qpoly_criterion_main(&basis(&table), 1, 1e-8).unwrap();
    assert_eq!(lib.l_witness, Some(2));
    for (a, b) in lib.k.iter().zip(&k) {
        assert_abs_diff_eq!(*a, *b, epsilon = 1e-9);
    }

    let table = catalog::hamming(3, 2).unwrap().table;
    let brute = BruteSpectrum::new(&table);
    let theta = brute.dual_row(&table, 1);
    for (got, want) in theta.iter().zip([3.0, 1.0, -1.0, -3.0]) {
        assert_abs_diff_eq!(*got, want, epsilon = 1e-9);
    }
    let k = ratio_oracle(&theta);
    for i in 1..=3 {
        assert_abs_diff_eq!(k[i - 1], -brute.eigenvalue(&table, i, 3), epsilon = 1e-9);
        assert_abs_diff_eq!(k[i - 1], -krawtchouk(3, 2, i as i64, 3), epsilon = 1e-9);
    }
    let lib = qpoly_criterion_main(&basis(&table), 1, 1e-8).unwrap();
    assert_eq!(lib.l_witness, Some(3));
    for (a, b) in lib.k.iter().zip([3.0, -3.0, 1.0]) {
        assert_abs_diff_eq!(*a, b, epsilon = 1e-9);
    }
}

#[test]
fn hamming_matches_krawtchouk() {
    for (d, q) in [(2, 2), (3, 2), (4, 2), (2, 3)] {
        let table = catalog::hamming(d, q).unwrap().table;
        let b = basis(&table);
        // default order sorts by descending eigenvalue of A_1, which is
        // Krawtchouk order j = 0..d
        for i in 0..=d {
            for j in 0..=d {
                let want = krawtchouk(d as i64, q as i64, i as i64, j as i64);
                assert_abs_diff_eq!(b.p(i, j), want, epsilon = 1e-8);
                // H(d, q) is formally self-dual
                assert_abs_diff_eq!(b.q(i, j), want, epsilon = 1e-8);
            }
        }
    }
}

#[test]
fn krein_trace_formula_matches_classical_formula() {
    for entry in catalog::reference_entries() {
        let table = &entry.table;
        let b = basis(table);
        let krein = krein_parameters(&b).unwrap();
        let mult = b.multiplicities();
        let val = b.valencies().to_vec();
        let w = table.d() + 1;
        for i in 0..w {
            for j in 0..w {
                for k in 0..w {
                    let classical = krein_from_eigenmatrix(|h, s| b.p(h, s), &mult, &val, table.n(), i, j, k);
                    assert_abs_diff_eq!(krein.get(i, j, k), classical, epsilon = 1e-7);
                }
            }
        }
    }
}

#[test]
fn krein_column_sums_are_multiplicities() {
    for entry in catalog::reference_entries() {
        let b = basis(&entry.table);
        let krein = krein_parameters(&b).unwrap();
        let w = entry.table.d() + 1;
        for i in 0..w {
            for k in 0..w {
                let s: f64 = (0..w).map(|j| krein.get(i, j, k)).sum();
                assert_abs_diff_eq!(s, b.multiplicities()[i] as f64, epsilon = 1e-7);
                assert_abs_diff_eq!(krein.get(i, k, 0), krein.get(k, i, 0), epsilon = 1e-12);
            }
        }
    }
}

#[test]
fn petersen_valencies_by_bfs() {
    let subsets: Vec<u32> = (0u32..32).filter(|s| s.count_ones() == 2).collect();
    let mut edges = Vec::new();
    for a in 0..10 {
        for b in a + 1..10 {
            if subsets[a] & subsets[b] == 0 {
                edges.push((a, b));
            }
        }
    }
    let adj = adjacency_from_edges(10, &edges).unwrap();
    assert_eq!(bfs_valencies(&adj), vec![1, 3, 6]);
    let tensor = validate_axioms(&catalog::petersen().table).unwrap();
    assert_eq!(tensor.valencies(), &[1, 3, 6]);
}

#[test]
fn icosahedron_valencies_by_bfs() {
    let entry = catalog::icosahedron();
    let n = entry.table.n();
    let adj: Vec<Vec<u8>> = (0..n).map(|x| (0..n).map(|y| u8::from(entry.table.get(x, y) == 1)).collect()).collect();
    assert_eq!(bfs_valencies(&adj), vec![1, 5, 5, 1]);
}

#[test]
fn lagrange_hand_example() {
    // betas (3, 1, -1, -3), j = 2, x = 0: basis values at 0 are
    // (-1/16, 9/16, 9/16, -1/16); 9*(-1/16)*2 + 1*(9/16)*2 = 0
    let betas = [3.0f64, 1.0, -1.0, -3.0];
    let mut sum = 0.0;
    for i in 0..4 {
        let mut l = 1.0;
        for k in 0..4 {
            if k != i {
                l *= (0.0 - betas[k]) / (betas[i] - betas[k]);
            }
        }
        sum += betas[i].powi(2) * l;
    }
    assert_abs_diff_eq!(sum, 0.0, epsilon = 1e-15);
    assert!(lagrange_identity_check(&betas, 2, 0.0, 1e-12).unwrap());
}

#[test]
fn ratios_match_oracle_on_random_sequences() {
    use proptest::prelude::*;
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    runner
        .run(&prop::collection::vec(-20.0f64..20.0, 3..=7), |raw| {
            let mut theta = raw;
            theta.sort_by(f64::total_cmp);
            for i in 1..theta.len() {
                if theta[i] - theta[i - 1] < 0.5 {
                    theta[i] = theta[i - 1] + 0.5;
                }
            }
            let got = lrs_ratios(&theta, 1e-8).unwrap();
            for (a, b) in got.iter().zip(ratio_oracle(&theta)) {
                prop_assert!((a - b).abs() <= 1e-9 * b.abs().max(1.0));
            }
            Ok(())
        })
        .unwrap();
}
