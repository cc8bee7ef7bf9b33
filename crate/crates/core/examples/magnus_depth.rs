//! Magnus expansion of a few commutators and the depth at which each one
//! leaves the augmentation filtration.
//!
//!     cargo run --example magnus_depth

use varkit::freegrp::Word;
use varkit::magnus::{dimension_degree, in_free_dimension_subgroup, magnus_embed};
use varkit::Limits;

fn main() -> varkit::Result<()> {
    let limits = Limits::default();
    let words = [
        "comm(x1,x2)",
        "comm(comm(x1,x2),x2)",
        "comm(x1,x2)^2 x1",
        "comm(comm(x1,x2),comm(x1,x2^-1))",
    ];
    for text in words {
        let w: Word = text.parse()?;
        let depth = dimension_degree(&w, 2, 6, &limits)?;
        let in_d3 = in_free_dimension_subgroup(&w, 3, 2, &limits)?;
        println!("{text:<36} degree {depth:<4} in D_3: {in_d3}");
    }

    let w: Word = "comm(x1,x2)".parse()?;
    println!("\nM({w}) up to degree 3:\n{}", magnus_embed(&w, 2, 3, &limits)?);
    Ok(())
}
