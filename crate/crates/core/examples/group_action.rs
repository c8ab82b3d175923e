//! Finite groups of graded automorphisms, eigenspaces and Molien counts.

use pertinax::action::{eigenspace, group_generate, LinearAuto};
use pertinax::algebra::make_quantum_affine;
use pertinax::invariant::{fixed_space, molien_count};
use pertinax::scalar::Scalar;

fn main() -> pertinax::Result<()> {
    let m = |i: usize, j: usize| if i == j { Scalar::one() } else { Scalar::from_int(-1) };
    let q: Vec<Vec<Scalar>> = (0..3).map(|i| (0..3).map(|j| m(i, j)).collect()).collect();
    let r = make_quantum_affine(&q, 6)?;

    let cycle = LinearAuto::permutation(&[1, 2, 0]);
    cycle.verify(&r)?;
    let g = group_generate(&r, &[cycle], 16)?;
    println!("|G| = {}", g.order());

    let w = Scalar::root_of_unity(3, 1);
    for v in eigenspace(&r, &g, 1, 1, &w) {
        println!("eigenvector for w: {}", r.render(&v));
    }
    let xy = r.mul(&r.gen(0), &r.gen(1))?;
    println!("cycle(xy) = {}", r.render(&g.act(1, &xy)));

    for d in 0..=6 {
        println!("degree {d}: Molien {} fixed {}", molien_count(&r, &g, d), fixed_space(&r, &g, d).len());
    }
    Ok(())
}
