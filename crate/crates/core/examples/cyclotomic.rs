//! Exact arithmetic with roots of unity.

use pertinax::scalar::{Conductor, Scalar};

fn main() -> pertinax::Result<()> {
    let c = Conductor::new(12)?;
    let w = c.primitive_root(3)?;
    let i = c.primitive_root(4)?;
    println!("w = {w}, i = {i}");
    println!("1 + w + w^2 = {}", Scalar::one() + w.clone() + w.pow(2)?);
    println!("(w + i)^-1 = {}", (w.clone() + i.clone()).inv()?);

    // values from smaller fields lift on contact
    let w3 = Scalar::root_of_unity(3, 1);
    println!("w3 == w: {}", w3 == w);
    println!("w3 * i = {} (conductor {})", w3.clone() * i.clone(), (w3 * i).conductor());

    match Conductor::new(6)?.primitive_root(4) {
        Err(e) => println!("conductor 6 has no 4th roots: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
