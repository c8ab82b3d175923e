//! Truncated Gröbner bases and normal forms in the free algebra.

use pertinax::free::{Alphabet, FreePoly};
use pertinax::gb::gb_complete;
use pertinax::scalar::Scalar;

fn main() -> pertinax::Result<()> {
    let a = Alphabet::standard(2)?;
    let (x, y) = (a.gen(0), a.gen(1));
    // down-up relations with alpha = 1, beta = -1
    let r1 = x.mul(&x).mul(&y).sub(&x.mul(&y).mul(&x)).add(&y.mul(&x).mul(&x));
    let r2 = x.mul(&y).mul(&y).sub(&y.mul(&x).mul(&y)).add(&y.mul(&y).mul(&x));
    let gb = gb_complete(&a, &[r1, r2], 8)?;
    println!("complete up to degree {}", gb.complete_upto());
    for rel in gb.dump() {
        println!("  {rel}");
    }
    println!("Hilbert function: {:?}", gb.quotient_basis().dims());

    let w = y.mul(&y).mul(&x).mul(&x).add(&FreePoly::constant(Scalar::from_int(3)));
    println!("NF({}) = {}", w.render(&a), gb.normal_form(&w)?.render(&a));
    Ok(())
}
