//! An F-pure but not F-rational surface whose test ideal is `(x, z)`.

use fstable::ci::variable_pool;
use fstable::frobenius::is_f_pure;
use fstable::{CISetup, FRationality, PolyRing};

fn main() -> fstable::Result<()> {
    let s = CISetup::parse(PolyRing::new(2, &["x", "y", "z"])?, &["x^2*y + x*y*z + z^3"])?;
    println!("F-pure: {}", is_f_pure(&s)?);

    for gens in [&["x", "z"][..], &["x", "y", "z"], &["y"]] {
        let v = s.check_member(&s.parse_ideal(gens)?)?;
        print!("{:<12} member: {}", v.ideal.to_string_with(s.ring())?, v.member);
        if let Some(w) = v.witness {
            print!("  (u*{} leaves {})", s.ring().display(&w.generator), s.ring().display(&w.normal_form));
        }
        println!();
    }

    let lattice = s.enumerate(&variable_pool(s.ring()))?;
    for m in &lattice.members {
        println!("  {} height {:?} {:?}", m.ideal.to_string_with(s.ring())?, m.height, m.nilpotency);
    }
    let t = s.test_ideal(&lattice)?;
    println!("test ideal: {}", t.ideal.to_string_with(s.ring())?);
    if let FRationality::NotFRational { witness } = s.f_rationality(&lattice)? {
        println!("not F-rational, witness {}", witness.to_string_with(s.ring())?);
    }
    Ok(())
}
