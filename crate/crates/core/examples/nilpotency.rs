//! Nilpotency of the Frobenius action on the quotient attached to a member.

use fstable::{CISetup, NilpotencyStatus, PolyRing};

fn main() -> fstable::Result<()> {
    // a double line: Frobenius kills everything above (x)
    let s = CISetup::parse(PolyRing::new(2, &["x", "y"])?, &["x^2"])?;
    let v = s.nilpotency(&s.parse_ideal(&["x"])?, 5)?;
    println!("u = x^2, L = (x): {:?}", v.status);

    // u = x^3 y: the chain W_e descends from (x) to (x^2) and stops
    let s = CISetup::parse(PolyRing::new(2, &["x", "y"])?, &["x^3*y"])?;
    for gens in [&["x"][..], &["x^2"], &["x^3"], &["y"]] {
        let member = s.closure(&s.parse_ideal(gens)?)?;
        let v = s.nilpotency(&member, 5)?;
        let chain: Vec<String> = v.chain.iter().map(|w| w.to_string_with(s.ring()).unwrap()).collect();
        println!("u = x^3 y, L = {}: {:?}, W = {}", member.to_string_with(s.ring())?, v.status, chain.join(" ⊇ "));
    }

    // F-pure rings have W_1 = R, so no proper member is nilpotent
    let s = CISetup::parse(PolyRing::new(2, &["x", "y", "z"])?, &["x^2*y + x*y*z + z^3"])?;
    let v = s.nilpotency(&s.maximal_ideal(), 5)?;
    assert_eq!(v.status, NilpotencyStatus::NotNilpotent);
    println!("F-pure cubic, L = m: {:?}, W_1 = {}", v.status, v.chain[0].to_string_with(s.ring())?);
    Ok(())
}
