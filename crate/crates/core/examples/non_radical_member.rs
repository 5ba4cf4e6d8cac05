//! A non-radical F-stable ideal: `(x, y, a^2)` for `u = x^2 a - y^2 b`.

use fstable::{CISetup, PolyRing};

fn main() -> fstable::Result<()> {
    let s = CISetup::parse(PolyRing::new(2, &["x", "y", "a", "b"])?, &["x^2*a - y^2*b"])?;
    let i = s.parse_ideal(&["x", "y", "a^2"])?;
    let v = s.check_member(&i)?;
    println!("{} member: {}", v.ideal.to_string_with(s.ring())?, v.member);

    // its radical (x, y, a) is a member as well
    let rad = s.parse_ideal(&["x", "y", "a"])?;
    println!("(x, y, a) member: {}", s.check_member(&rad)?.member);
    println!("closure of (a^2): {}", s.closure(&s.parse_ideal(&["a^2"])?)?.to_string_with(s.ring())?);
    Ok(())
}
