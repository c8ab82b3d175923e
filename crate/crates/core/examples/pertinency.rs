//! Pertinency from Hilbert data of the pertinency algebra.

use pertinax::action::{group_generate, LinearAuto};
use pertinax::algebra::{make_commutative, make_downup};
use pertinax::dimension::{pertinency, RadicalSource};
use pertinax::radical::ConstructiveOptions;
use pertinax::scalar::{Conductor, Scalar};

fn main() -> pertinax::Result<()> {
    let swap = LinearAuto::permutation(&[1, 0]);

    let r = make_downup(&Scalar::one(), &Scalar::from_int(-1), 8)?;
    let g = group_generate(&r, &[swap.clone()], 8)?;
    let p = pertinency(&r, &g, 8, &RadicalSource::Oracle, 4)?;
    println!("down-up: p = {} ({:?}), quotient {:?}", p.value, p.kind, p.hilbert_quotient.dims);

    let r = make_commutative(2, 10)?;
    let g = group_generate(&r, &[swap], 8)?;
    let p = pertinency(&r, &g, 10, &RadicalSource::Oracle, 4)?;
    println!("k[x,y]: p = {} ({:?}), window {:?}", p.value, p.kind, p.gk_quotient.window);

    let opts = ConstructiveOptions { conductor: Conductor::new(2)?, ..Default::default() };
    let p = pertinency(&r, &g, 10, &RadicalSource::Constructive(opts), 4)?;
    println!("k[x,y], constructive: p >= {} ({:?})", p.value, p.kind);
    Ok(())
}
