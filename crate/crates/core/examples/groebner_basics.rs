//! Gröbner bases and the ideal calculus over a prime field.

use fstable::{Ideal, MonomialOrder, PolyRing};

fn main() -> fstable::Result<()> {
    let r = PolyRing::new(7, &["x", "y", "z"])?;

    // the twisted cubic, parametrized by (t, t^2, t^3)
    let cubic = Ideal::parse(&r, &["x^2 - y", "x^3 - z"])?;
    for order in [MonomialOrder::Lex, MonomialOrder::Grevlex] {
        let gb = cubic.groebner_basis_in(order)?;
        let shown: Vec<String> = gb.iter().map(|g| r.display_in(g, order)).collect();
        println!("{:>8}: ({})", order.to_string(), shown.join(", "));
    }
    println!("dim R/I = {}", cubic.krull_dim()?);

    let a = Ideal::parse(&r, &["x", "y"])?;
    let b = Ideal::parse(&r, &["y", "z"])?;
    println!("(x, y) + (y, z)   = {}", a.sum(&b)?.to_string_with(&r)?);
    println!("(x, y) * (y, z)   = {}", a.product(&b)?.to_string_with(&r)?);
    println!("(x, y) ∩ (y, z)   = {}", a.intersect(&b)?.to_string_with(&r)?);
    let xz = r.parse("x*z")?;
    println!("((x, y) ∩ (y, z)) : xz = {}", a.intersect(&b)?.colon(&xz)?.to_string_with(&r)?);

    let f = r.parse("x^4 - z*x")?;
    println!("x^4 - xz in I: {}", cubic.contains(&f)?);
    println!("normal form of x^5: {}", r.display(&cubic.normal_form(&r.parse("x^5")?)?));
    Ok(())
}
