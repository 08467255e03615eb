//! Straighten rsym(t) for a non-semistandard t into semistandard coordinates
//! and check the certificate.
use weylkit::powers::SymLowerElement;
use weylkit::weyl::straighten;
use weylkit::{render, Ring, Tableau};

fn main() -> weylkit::Result<()> {
    let t = Tableau::from_rows(vec![vec![2, 3, 3], vec![1, 1, 2]])?;
    let x = SymLowerElement::basis(Ring::Integers, &t);
    let cert = straighten(&x)?;
    println!("input  {}", render::text(&cert.input));
    println!("coords {}", render::text(&cert.coords));
    for (label, c) in &cert.gamma {
        println!("  snake {label} x {c}");
    }
    println!("certificate holds: {}", cert.verify()?);

    // the same element modulo 2
    let cert2 = straighten(&x.change_ring(Ring::IntegersMod(2))?)?;
    println!("over ℤ/2: {} (holds: {})", render::text(&cert2.coords), cert2.verify()?);
    Ok(())
}
