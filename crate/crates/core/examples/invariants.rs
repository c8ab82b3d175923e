//! Invariant rings, cofinality of the radical with its invariant part, and
//! normal elements.

use pertinax::action::{group_generate, LinearAuto};
use pertinax::algebra::make_quantum_affine;
use pertinax::invariant::{cofinality_check, invariants_basis, normality_check};
use pertinax::scalar::Scalar;

fn main() -> pertinax::Result<()> {
    let m = |i: usize, j: usize| if i == j { Scalar::one() } else { Scalar::from_int(-1) };
    let q: Vec<Vec<Scalar>> = (0..3).map(|i| (0..3).map(|j| m(i, j)).collect()).collect();
    let r = make_quantum_affine(&q, 10)?;
    let w = Scalar::root_of_unity(3, 1);
    let g = group_generate(&r, &[LinearAuto::diagonal(vec![Scalar::one(), w.clone(), w.pow(2)?])], 8)?;

    let inv = invariants_basis(&r, &g, 10);
    let gens: Vec<String> = inv.generators.iter().map(|f| r.render(f)).collect();
    println!("invariants generated by {gens:?}");
    println!("dims {:?}", inv.basis.dims());

    let c = cofinality_check(&r, &g, 10, 3, 8)?;
    println!("aR = Ra: {}", c.certificate.a_r_eq_r_a);
    for (s, e) in &c.certificate.table {
        println!("  s = {s}: {e:?}");
    }

    let yz = r.mul(&r.gen(1), &r.gen(2))?;
    for v in normality_check(&r, Some(&g), &[r.gen(0), yz], 10) {
        println!("{} normal in R: {}, in A: {:?}", v.poly, v.in_r, v.in_a);
    }
    Ok(())
}
