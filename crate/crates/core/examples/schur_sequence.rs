//! Exactness of GR → Λ → Sym: the Garnir relations are the kernel of e and
//! the image has the semistandard count as rank.
use weylkit::schur::verify_schur_ses;
use weylkit::{Partition, Ring};

fn main() -> weylkit::Result<()> {
    for (shape, m) in [("2,1", 2), ("2,2", 3), ("3,1", 3), ("2,1,1", 3)] {
        let shape: Partition = shape.parse()?;
        for ring in [Ring::Integers, Ring::IntegersMod(2)] {
            let r = verify_schur_ses(&shape, m, ring)?;
            println!("{shape} m={m} over {ring}: ok={} dims={:?} ranks={:?}", r.ok, r.dims, r.ranks);
            if let Some(d) = r.elementary_divisors.as_ref().filter(|d| !d.is_empty()) {
                println!("  elementary divisors of the Garnir lattice: {}", d.join(" "));
            }
        }
    }
    Ok(())
}
