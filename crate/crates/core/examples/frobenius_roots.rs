//! Frobenius powers, Frobenius roots and Fedder's criterion.

use fstable::frobenius::{bracket_power, fedder_colon, fedder_hypersurface, frobenius_root};
use fstable::{Ideal, PolyRing};

fn main() -> fstable::Result<()> {
    let r = PolyRing::new(2, &["x", "y", "z"])?;

    let i = Ideal::parse(&r, &["x + y", "x*z"])?;
    println!("I        = {}", i.to_string_with(&r)?);
    println!("I^[2]    = {}", bracket_power(&i, 1)?.to_string_with(&r)?);
    println!("I^[4]    = {}", bracket_power(&i, 2)?.to_string_with(&r)?);

    // roots undo Frobenius powers
    let back = frobenius_root(&bracket_power(&i, 2)?, 2)?;
    println!("(I^[4])^[1/4] = I: {}", back.equals(&i)?);

    let mono = Ideal::parse(&r, &["x^2*y^3"])?;
    println!("(x^2 y^3)^[1/2] = {}", frobenius_root(&mono, 1)?.to_string_with(&r)?);

    let cubic = Ideal::parse(&r, &["x^3 + y^3 + z^3 + x*y*z"])?;
    println!("(cubic)^[1/2]   = {}", frobenius_root(&cubic, 1)?.to_string_with(&r)?);

    for u in ["x^2*y + x*y*z + z^3", "x^3 + y^3 + z^3 + x*y*z", "x^2 + y^3", "x*y*z"] {
        let ideal = Ideal::parse(&r, &[u])?;
        println!(
            "F-pure R/({u}): colon form {}, hypersurface form {}",
            fedder_colon(&ideal)?,
            fedder_hypersurface(&ideal)?
        );
    }
    Ok(())
}
