//! The cubic `x^3 + y^3 + z^3 + xyz` over F_2, a line times a conic.
//!
//! Seeding with every linear form plus the conic finds all the F-stable
//! ideals needed to pin down the test ideal, which turns out to be the
//! ideal of the singular locus.

use fstable::ci::linear_pool;
use fstable::{CISetup, PolyRing};

fn main() -> fstable::Result<()> {
    let r = PolyRing::new(2, &["x", "y", "z"])?;
    let s = CISetup::parse(r.clone(), &["x^3 + y^3 + z^3 + x*y*z"])?;

    let mut pool = linear_pool(&r).expect("8 linear forms");
    pool.push(r.parse("x^2 + y^2 + z^2 + x*y + x*z + y*z")?);
    let lattice = s.enumerate(&pool)?;
    println!("{} members from a pool of {}:", lattice.members.len(), lattice.pool_size);
    for m in &lattice.members {
        let h = m.height.map_or("unit".to_string(), |h| h.to_string());
        println!("  [{h}] {}", m.ideal.to_string_with(&r)?);
    }

    let l1 = s.parse_ideal(&["x + z", "y + z"])?;
    let l2 = s.parse_ideal(&["x + y + z", "y^2 + y*z + z^2"])?;
    let j = l1.intersect(&l2)?;
    println!("(x+z, y+z) ∩ (x+y+z, y^2+yz+z^2) = {}", j.to_string_with(&r)?);
    let singular = s.parse_ideal(&["x^3 + y^3 + z^3 + x*y*z", "x^2 + y*z", "y^2 + x*z", "z^2 + x*y"])?;
    println!("equals the singular-locus ideal: {}", j.equals(&singular)?);

    let t = s.test_ideal(&lattice)?;
    println!("test ideal: {}", t.ideal.to_string_with(&r)?);
    Ok(())
}
