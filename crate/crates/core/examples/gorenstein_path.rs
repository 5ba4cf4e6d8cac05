//! The Gorenstein setting: an explicit generating morphism `ε`.

use fstable::ci::variable_pool;
use fstable::{CISetup, Error, GorSetup, PolyRing};

fn main() -> fstable::Result<()> {
    let r = PolyRing::new(2, &["x", "y", "z"])?;
    let u = "x^2*y + x*y*z + z^3";

    let ci = CISetup::parse(r.clone(), &[u])?;
    let gor = GorSetup::from_ci(&ci)?;
    let k = gor.k_u()?;
    println!("K_u = {} (stable from e = {})", k.k_u.to_string_with(&r)?, k.stable_at);

    let pool = variable_pool(&r);
    let t_ci = ci.test_ideal(&ci.enumerate(&pool)?)?;
    let t_gor = gor.test_ideal(&gor.enumerate(&pool)?)?;
    println!("test ideal, complete-intersection path: {}", t_ci.ideal.to_string_with(&r)?);
    println!("test ideal, Gorenstein path:            {}", t_gor.ideal.to_string_with(&r)?);

    // ε only matters up to a unit
    let scaled = GorSetup::parse(PolyRing::new(3, &["x", "y"])?, &["x*y"], "2*x^2*y^2")?;
    let j = scaled.parse_ideal(&["x"])?;
    println!("p = 3, ε = 2(xy)^2: (x) member: {}", scaled.check_member(&j)?.member);

    // a constant ε makes the colon chain descend, which is reported
    let bad = GorSetup::parse(PolyRing::new(2, &["x", "y"])?, &["x*y"], "1")?;
    match bad.k_u() {
        Err(e @ Error::KuNotAscending { .. }) => println!("ε = 1: {e}"),
        other => println!("ε = 1: unexpected {other:?}"),
    }
    Ok(())
}
