//! Random matrix corpora shared by the integration tests.

#![allow(dead_code)]

use qclc::ExponentMatrix;
use rand::rngs::StdRng;
use rand::Rng;

/// Single-edge, c <= 4, d <= 6, N <= 16, with some empty cells.
pub fn random_se(rng: &mut StdRng) -> ExponentMatrix {
    let c = rng.gen_range(2..=4);
    let d = rng.gen_range(3..=6);
    let n = rng.gen_range(5..=16);
    let rows = (0..c)
        .map(|_| {
            (0..d)
                .map(|_| {
                    if rng.gen_bool(0.15) {
                        Vec::new()
                    } else {
                        vec![rng.gen_range(0..n as u32)]
                    }
                })
                .collect()
        })
        .collect();
    ExponentMatrix::new(n, rows).unwrap()
}

pub fn random_me(rng: &mut StdRng) -> ExponentMatrix {
    let c = rng.gen_range(1..=3);
    let d = rng.gen_range(1..=4);
    let n = rng.gen_range(3..=16);
    let rows = (0..c)
        .map(|_| {
            (0..d)
                .map(|_| {
                    let w = rng.gen_range(0..=2);
                    let mut cell: Vec<u32> = Vec::new();
                    while cell.len() < w {
                        let s = rng.gen_range(0..n as u32);
                        if !cell.contains(&s) {
                            cell.push(s);
                        }
                    }
                    cell
                })
                .collect()
        })
        .collect();
    ExponentMatrix::new(n, rows).unwrap()
}

/// Full single-edge with `c` rows.
pub fn random_full_se(rng: &mut StdRng, c: usize) -> ExponentMatrix {
    let d = rng.gen_range(3..=6);
    let n = rng.gen_range(5..=16);
    let rows: Vec<Vec<u32>> = (0..c)
        .map(|_| (0..d).map(|_| rng.gen_range(0..n as u32)).collect())
        .collect();
    ExponentMatrix::from_shifts(n, &rows).unwrap()
}

/// Full single-edge `c x d` with shifts in `0..n`.
pub fn random_lift(rng: &mut StdRng, c: usize, d: usize, n: usize) -> ExponentMatrix {
    let rows: Vec<Vec<u32>> = (0..c)
        .map(|_| (0..d).map(|_| rng.gen_range(0..n as u32)).collect())
        .collect();
    ExponentMatrix::from_shifts(n, &rows).unwrap()
}
