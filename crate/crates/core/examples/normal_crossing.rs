//! The node `xy = 0`: four proper F-stable ideals in every characteristic.

use fstable::ci::variable_pool;
use fstable::{CISetup, PolyRing};

fn main() -> fstable::Result<()> {
    for p in [2, 3, 5] {
        let s = CISetup::parse(PolyRing::new(p, &["x", "y"])?, &["x*y"])?;
        let lattice = s.enumerate(&variable_pool(s.ring()))?;
        println!("p = {p}:");
        for m in &lattice.members {
            let h = m.height.map_or("unit".to_string(), |h| h.to_string());
            println!("  {:<10} height {h}", m.ideal.to_string_with(s.ring())?);
        }
        let t = s.test_ideal(&lattice)?;
        println!("  test ideal {}", t.ideal.to_string_with(s.ring())?);
    }
    Ok(())
}
