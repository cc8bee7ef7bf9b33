//! Unitriangular groups satisfy `(y1-1)...(yn-1)` as an identity of
//! action, while the group of units `lambda I + N` has the same enveloping
//! algebra but no such identity.
//!
//!     cargo run --example nilpotency

use varkit::exact::Domain;
use varkit::grpalg::s_n_identity_element;
use varkit::matrep::{
    aug_image_nilpotency, check_action_identity, enveloping_subspace, find_action_witness, group_closure,
    units_of_scalar_plus_nilpotent, ut_natural,
};
use varkit::Limits;

fn main() -> varkit::Result<()> {
    let limits = Limits::default();
    let f2 = Domain::prime(2)?;
    let rep = ut_natural(3, f2, &[f2.one()])?;
    let table = group_closure(&rep, &limits)?;
    println!("UT3(F2) has order {}", table.order());
    for n in 1..=3 {
        let u = s_n_identity_element(n)?;
        println!(
            "  n = {n}: nilpotency {}, exhaustive check {}",
            aug_image_nilpotency(&rep, n as usize)?,
            check_action_identity(&rep, &u, &table, &limits)?
        );
    }
    let u = s_n_identity_element(2)?;
    if let Some(w) = find_action_witness(&rep, &u, &table, &limits)? {
        let asg: Vec<String> = w
            .assignment
            .iter()
            .map(|(v, &e)| format!("y{v} = {}", table.element(e)))
            .collect();
        println!("  witness for n = 2: {}, basis vector e{}", asg.join(", "), w.row + 1);
    }

    let q = Domain::Rational;
    let units = units_of_scalar_plus_nilpotent(3, q, &q.from_i64(2))?;
    let ut = ut_natural(3, q, &[q.one()])?;
    println!(
        "\nunits rep and UT3(Q) share an enveloping algebra: {}",
        enveloping_subspace(&units)? == enveloping_subspace(&ut)?
    );
    for k in 1..=5 {
        println!(
            "  units rep nilpotent at level {k}: {}",
            aug_image_nilpotency(&units, k)?
        );
    }
    Ok(())
}
