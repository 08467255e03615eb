//! The semistandard copolytabloids as a basis of the image of Λ, and the
//! check that dual snake relations span its kernel.
use weylkit::weyl::{verify_weyl_kernel, weyl_basis};
use weylkit::{render, Partition, Ring};

fn main() -> weylkit::Result<()> {
    let shape: Partition = "2,1".parse()?;
    for (t, v) in weyl_basis(&shape, 3) {
        println!("ə({}) = {}", t.short(), render::text(&v));
    }
    for ring in [Ring::Rationals, Ring::IntegersMod(2), Ring::IntegersMod(3), Ring::Integers] {
        let r = verify_weyl_kernel(&"3,2".parse()?, 3, ring)?;
        let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        println!("(3,2) m=3 over {ring}: ok={} ranks={:?} failed={failed:?}", r.ok, r.ranks);
    }
    Ok(())
}
