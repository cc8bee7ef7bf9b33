//! Fox derivatives of a relator and the fundamental formula
//! `w - 1 = sum_i (dw/dx_i)(x_i - 1)`.
//!
//!     cargo run --example fox_calculus

use varkit::exact::Domain;
use varkit::freegrp::Word;
use varkit::grpalg::{augmentation, fox_derivative, s_n_identity_element, GroupAlgebraElement};

fn main() -> varkit::Result<()> {
    let z = Domain::Integer;
    let w: Word = "x1 x2 x1^-1 x2^-1 x1^3".parse()?;
    let mut rhs = GroupAlgebraElement::zero(z);
    for i in 1..=2 {
        let d = fox_derivative(&w, i);
        println!("d/dx{i} ({w}) = {d}");
        rhs = rhs.add(&d.multiply(&GroupAlgebraElement::generator_minus_one(z, i))?)?;
    }
    let lhs = GroupAlgebraElement::from_word(z, w).sub(&GroupAlgebraElement::one(z))?;
    println!("fundamental formula holds: {}", lhs == rhs);

    let s3 = s_n_identity_element(3)?;
    println!("\n(y1-1)(y2-1)(y3-1) = {s3}");
    println!("augmentation: {}", augmentation(&s3));
    Ok(())
}
