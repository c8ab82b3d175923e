//! Building pertinent pairs by hand and with the constructions, then
//! checking their values against the oracle.

use pertinax::action::{eigenspace, group_generate, LinearAuto};
use pertinax::algebra::make_quantum_affine;
use pertinax::radical::{gen_eigen_product, pair_scale, pair_translate, verify_pertinent};
use pertinax::scalar::Scalar;
use pertinax::skew::oracle_radical;

fn main() -> pertinax::Result<()> {
    let m = |i: usize, j: usize| if i == j { Scalar::one() } else { Scalar::from_int(-1) };
    let q: Vec<Vec<Scalar>> = (0..3).map(|i| (0..3).map(|j| m(i, j)).collect()).collect();
    let r = make_quantum_affine(&q, 6)?;
    let g = group_generate(&r, &[LinearAuto::permutation(&[1, 2, 0])], 16)?;
    let rad = oracle_radical(&r, &g, 6)?;

    let w = Scalar::root_of_unity(3, 1);
    let v = eigenspace(&r, &g, 1, 1, &w).remove(0);
    let p = gen_eigen_product(&r, &g, 1, &[v.clone(), v.clone(), v])?;
    let val = p.value(&r)?;
    println!("eigen product value {} in radical: {}", r.render(&val), rad.contains(&r, &val));

    let moved = pair_scale(&r, &r.gen(0), &r.gen(2), &pair_translate(&g, 2, &p))?;
    let val = moved.value(&r)?;
    println!("after moves: degree {} in radical: {}", val.degree(), rad.contains(&r, &val));

    match verify_pertinent(&r, &g, vec![r.gen(0)], vec![r.gen(1)]) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("([x],[y]) rejected: {e}"),
    }
    Ok(())
}
