//! Triangular product of two representations, written out in the
//! representation file format.
//!
//!     cargo run --example triangular_product

use varkit::exact::Domain;
use varkit::matrep::{aug_image_nilpotency, group_closure, triangular_product, ut_natural, RepFile};
use varkit::Limits;

fn main() -> varkit::Result<()> {
    let f2 = Domain::prime(2)?;
    let a = ut_natural(2, f2, &[f2.one()])?;
    let b = ut_natural(3, f2, &[f2.one()])?;
    let tp = triangular_product(&a, &b, None)?;
    print!("{}", RepFile::Matrix(tp.clone()));

    let order = group_closure(&tp, &Limits::default())?.order();
    println!("# group order {order}");
    // nilpotency levels add up: 2 + 3
    for n in 4..=5 {
        println!("# nilpotent at level {n}: {}", aug_image_nilpotency(&tp, n)?);
    }
    Ok(())
}
