#![allow(dead_code)]

use std::path::PathBuf;

use pertinax::action::{group_generate, FiniteGroup, LinearAuto};
use pertinax::algebra::{make_commutative, make_downup, make_quantum_affine, GradedAlgebra};
use pertinax::scalar::Scalar;

pub const P: i64 = 1_000_003;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixtures_dir().join(name)).unwrap()
}

pub fn fixture_names() -> Vec<String> {
    let mut v: Vec<String> = std::fs::read_dir(fixtures_dir())
        .unwrap()
        .filter_map(|e| {
            let n = e.ok()?.file_name().into_string().ok()?;
            n.ends_with(".pax").then_some(n)
        })
        .collect();
    v.sort();
    v
}

fn inv_mod(a: i64) -> i64 {
    let (mut r, mut b, mut e) = (1i64, a.rem_euclid(P), P - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Rank over F_p by plain Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c].rem_euclid(P) != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = inv_mod(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = x.rem_euclid(P) * inv % P;
        }
        let pivot = rows[rank].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && r[c].rem_euclid(P) != 0 {
                let f = r[c].rem_euclid(P);
                for (x, y) in r.iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(P);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dimensions of `k<x,y>/(r1, r2)` for the down-up relations, degree by
/// degree, from the span of all `u r v` inside the free algebra.
pub fn downup_dims_bruteforce(alpha: i64, beta: i64, max_degree: u32) -> Vec<usize> {
    let word_index = |w: &[u8]| w.iter().fold(0usize, |acc, &l| acc * 2 + l as usize);
    let rels: Vec<Vec<(Vec<u8>, i64)>> = vec![
        vec![(vec![0, 0, 1], 1), (vec![0, 1, 0], -alpha), (vec![1, 0, 0], -beta)],
        vec![(vec![0, 1, 1], 1), (vec![1, 0, 1], -alpha), (vec![1, 1, 0], -beta)],
    ];
    (0..=max_degree)
        .map(|d| {
            let n = 1usize << d;
            if d < 3 {
                return n;
            }
            let mut rows = Vec::new();
            for left_len in 0..=(d - 3) {
                let right_len = d - 3 - left_len;
                for u in 0..(1usize << left_len) {
                    for v in 0..(1usize << right_len) {
                        for rel in &rels {
                            let mut row = vec![0i64; n];
                            for (w, c) in rel {
                                let mut word = Vec::new();
                                for i in (0..left_len).rev() {
                                    word.push(((u >> i) & 1) as u8);
                                }
                                word.extend(w);
                                for i in (0..right_len).rev() {
                                    word.push(((v >> i) & 1) as u8);
                                }
                                row[word_index(&word)] += c;
                            }
                            rows.push(row);
                        }
                    }
                }
            }
            n - rank_mod_p(rows)
        })
        .collect()
}

/// Sort a word into increasing letters, swapping `x_j x_i -> q_ij x_i x_j`
/// for `i < j`.
pub fn straighten(word: &[u8], q: &[Vec<Scalar>]) -> (Vec<u8>, Scalar) {
    let mut w = word.to_vec();
    let mut c = Scalar::one();
    let mut swapped = true;
    while swapped {
        swapped = false;
        for k in 0..w.len().saturating_sub(1) {
            let (j, i) = (w[k], w[k + 1]);
            if j > i {
                c = &c * &q[i as usize][j as usize];
                w.swap(k, k + 1);
                swapped = true;
            }
        }
    }
    (w, c)
}

pub fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn skew_matrix(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { -Scalar::one() }).collect())
        .collect()
}

pub fn skew(n: usize, d: u32) -> GradedAlgebra {
    make_quantum_affine(&skew_matrix(n), d).unwrap()
}

pub fn diag(entries: &[Scalar]) -> LinearAuto {
    LinearAuto::diagonal(entries.to_vec())
}

pub fn ints(xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| Scalar::from_int(x)).collect()
}

pub fn omega() -> Scalar {
    Scalar::root_of_unity(3, 1)
}

pub struct Fixture {
    pub name: &'static str,
    pub alg: GradedAlgebra,
    pub group: FiniteGroup,
}

/// The worked examples as library objects, at truncation `d`.
pub fn fixtures(d: u32) -> Vec<Fixture> {
    let mk = |name, alg: GradedAlgebra, gens: Vec<LinearAuto>| {
        let group = group_generate(&alg, &gens, 64).unwrap();
        Fixture { name, alg, group }
    };
    let w = omega();
    vec![
        mk("swap_plane", make_commutative(2, d).unwrap(), vec![LinearAuto::permutation(&[1, 0])]),
        mk("skew_plane_swap", skew(2, d), vec![LinearAuto::permutation(&[1, 0])]),
        mk("sign_plane", make_commutative(2, d).unwrap(), vec![diag(&ints(&[-1, -1]))]),
        mk("skew_space_sign", skew(3, d), vec![diag(&ints(&[1, -1, -1]))]),
        mk("skew_space_order3", skew(3, d), vec![diag(&[Scalar::one(), w.clone(), &w * &w])]),
    ]
}

pub fn downup_fixture(d: u32) -> Fixture {
    let alg = make_downup(&Scalar::one(), &Scalar::from_int(-1), d).unwrap();
    let group = group_generate(&alg, &[LinearAuto::permutation(&[1, 0])], 64).unwrap();
    Fixture { name: "downup", alg, group }
}

pub fn cyclic3_fixture(d: u32) -> Fixture {
    let alg = skew(3, d);
    let group = group_generate(&alg, &[LinearAuto::permutation(&[1, 2, 0])], 64).unwrap();
    Fixture { name: "totient_cyclic3", alg, group }
}

pub struct Instance {
    pub label: String,
    pub alg: GradedAlgebra,
    pub group: FiniteGroup,
    pub conductor: pertinax::scalar::Conductor,
    pub max_degree: u32,
}

/// A commutative or quantum-affine algebra on two or three generators with
/// a diagonal or permutation group of order at most 6.
pub fn random_instance<R: rand::Rng>(rng: &mut R) -> Instance {
    use pertinax::scalar::Conductor;
    loop {
        let n = rng.gen_range(2..=3usize);
        let d = rng.gen_range(4..=6u32);
        let quantum = rng.gen_bool(0.5);
        let (alg, alabel) = if quantum {
            let choices = [Scalar::from_int(-1), Scalar::from_int(2), Scalar::one()];
            let mut q = vec![vec![Scalar::one(); n]; n];
            for i in 0..n {
                for j in i + 1..n {
                    let c = choices[rng.gen_range(0..choices.len())].clone();
                    q[j][i] = c.inv().unwrap();
                    q[i][j] = c;
                }
            }
            let label = format!("q{:?}", q);
            (make_quantum_affine(&q, d).unwrap(), label)
        } else {
            (make_commutative(n, d).unwrap(), format!("k[{n}]"))
        };
        let (gens, conductor, glabel) = if rng.gen_bool(0.5) {
            let k = [2u32, 3, 4, 6][rng.gen_range(0..4)];
            let e: Vec<i64> = (0..n).map(|_| rng.gen_range(0..k as i64)).collect();
            if e.iter().all(|&x| x == 0) {
                continue;
            }
            let entries: Vec<Scalar> = e.iter().map(|&x| Scalar::root_of_unity(k, x)).collect();
            (vec![diag(&entries)], Conductor::new(k).unwrap(), format!("diag z{k}^{e:?}"))
        } else {
            let mut p: Vec<usize> = (0..n).collect();
            let mut gens = Vec::new();
            let count = if n == 3 { rng.gen_range(1..=2) } else { 1 };
            for _ in 0..count {
                for i in (1..n).rev() {
                    p.swap(i, rng.gen_range(0..=i));
                }
                gens.push(LinearAuto::permutation(&p));
            }
            if gens.iter().all(|g| g.is_identity()) {
                continue;
            }
            (gens, Conductor::new(6).unwrap(), format!("perm {p:?} x{count}"))
        };
        let group = match group_generate(&alg, &gens, 6) {
            Ok(g) => g,
            Err(_) => continue,
        };
        return Instance {
            label: format!("{alabel} / {glabel} / D={d}"),
            alg,
            group,
            conductor,
            max_degree: d,
        };
    }
}
