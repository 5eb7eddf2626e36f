#![allow(dead_code)]

use num_bigint::BigInt;
use rand::Rng;
use trisect::diagram::{synthesize_diagram, Diagram};
use trisect::intlin::IntMatrix;
use trisect::invariants::{e8, hyperbolic};
use trisect::standardize::{handle_map, Move, Target};

pub fn m(rows: &[&[i64]]) -> IntMatrix {
    let n = rows.first().map_or(0, |r| r.len());
    IntMatrix::from_rows_with_cols(rows, n)
}

pub fn empty() -> IntMatrix {
    IntMatrix::zeros(0, 0)
}

pub fn forms() -> Vec<(&'static str, IntMatrix)> {
    vec![
        ("[]", empty()),
        ("[1]", m(&[&[1]])),
        ("[-1]", m(&[&[-1]])),
        ("H", hyperbolic()),
        ("E8", e8()),
        ("diag(1,1,-1)", IntMatrix::diagonal(&[1, 1, -1])),
    ]
}

/// Monodromy blocks with the `(p, b)` that makes them `l x l`.
pub fn monodromies() -> Vec<(&'static str, IntMatrix, usize, usize)> {
    vec![("[]", empty(), 0, 1), ("[[1]]", m(&[&[1]]), 0, 2), ("[[1,1],[0,1]]", m(&[&[1, 1], &[0, 1]]), 1, 1)]
}

pub struct Base {
    pub name: String,
    pub q: IntMatrix,
    pub b: IntMatrix,
    pub extra: usize,
    pub diagram: Diagram,
}

pub fn base_cases() -> Vec<Base> {
    let mut out = Vec::new();
    for (qn, q) in forms() {
        for (bn, b, p, bd) in monodromies() {
            for extra in 0..3 {
                let k = b.rows() + extra;
                let diagram = synthesize_diagram(&q, &b, k, p, bd).expect("synthesis");
                out.push(Base { name: format!("Q={qn} B={bn} k-l={extra}"), q: q.clone(), b: b.clone(), extra, diagram });
            }
        }
    }
    out
}

/// Random unimodular matrix from a few signed transvections, swaps and sign flips.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return u;
    }
    for _ in 0..n + 2 {
        match rng.gen_range(0..6) {
            0 => u.negate_col(rng.gen_range(0..n)),
            1 if n > 1 => {
                let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
                u.swap_cols(i, j);
            }
            _ if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = (i + rng.gen_range(1..n)) % n;
                let f = [-2, -1, 1, 2][rng.gen_range(0..4)];
                u.add_col_multiple(i, j, &BigInt::from(f));
            }
            _ => {}
        }
    }
    u
}

pub fn gamma_scramble(d: &Diagram, rng: &mut impl Rng) -> Diagram {
    let u = random_unimodular(rng, d.params.curves());
    let mut out = d.clone();
    out.gamma = &d.gamma * &u;
    out
}

/// A handle map on the first `g - p` handles followed by rebasis of all
/// three systems: every class moves, the lattices stay valid.
pub fn full_scramble(d: &Diagram, rng: &mut impl Rng) -> Diagram {
    let h = d.params.curves();
    let w = random_unimodular(rng, h);
    let (absolute, relative) = handle_map(&d.surface, &w).expect("handle map");
    let mut out = d.clone();
    Move::SurfaceMap { absolute, relative }.apply(&mut out).expect("fits");
    for target in [Target::Alpha, Target::Beta, Target::Gamma] {
        Move::Rebasis { target, matrix: random_unimodular(rng, h) }.apply(&mut out).expect("fits");
    }
    out
}
