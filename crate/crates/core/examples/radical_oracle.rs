//! The G-radical computed degree by degree inside the skew group algebra.

use pertinax::action::{group_generate, LinearAuto};
use pertinax::algebra::{make_commutative, make_quantum_affine};
use pertinax::scalar::Scalar;
use pertinax::skew::oracle_radical;

fn main() -> pertinax::Result<()> {
    let swap = LinearAuto::permutation(&[1, 0]);

    let r = make_commutative(2, 8)?;
    let g = group_generate(&r, &[swap.clone()], 8)?;
    let t = oracle_radical(&r, &g, 8)?;
    println!("k[x,y], swap: dim r_d = {:?}", t.dims());
    println!("  quotient = {:?}", t.quotient_dims());
    for f in t.minimal_generators(&r) {
        println!("  generator {}", r.render(&f));
    }

    let q = vec![vec![Scalar::one(), Scalar::from_int(-1)], vec![Scalar::from_int(-1), Scalar::one()]];
    let r = make_quantum_affine(&q, 8)?;
    let g = group_generate(&r, &[swap], 8)?;
    let t = oracle_radical(&r, &g, 8)?;
    println!("k_-1[x,y], swap: quotient = {:?}", t.quotient_dims());
    for f in t.minimal_generators(&r) {
        println!("  generator {}", r.render(&f));
    }
    Ok(())
}
