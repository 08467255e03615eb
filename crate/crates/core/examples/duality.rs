//! Pairing with duals of row tabloids recovers the copolytabloids, while
//! dualising the polytabloid basis does not.
use weylkit::duality::{find_dual_basis_witness, pairing_image};
use weylkit::tableaux::enumerate;
use weylkit::weyl::copolytabloid;
use weylkit::{render, Partition, TableauClass};

fn main() -> weylkit::Result<()> {
    let shape: Partition = "2,2".parse()?;
    for t in enumerate(&shape, 2, TableauClass::RowSemistandard) {
        let p = pairing_image(&t, 2);
        assert_eq!(p, copolytabloid(&t));
        println!("{}  ->  {}", t.short(), render::text(&p));
    }

    let small: Vec<(Partition, u32)> = vec![("2,1".parse()?, 2), ("2,1".parse()?, 3), ("2,2".parse()?, 2), ("2,2".parse()?, 3)];
    println!("witness among (2,1),(2,2) with m<=3: {}", find_dual_basis_witness(&small).is_some());
    let wide = vec![("3,2".parse()?, 3)];
    if let Some(w) = find_dual_basis_witness(&wide) {
        println!("shape {} m={} at {}:", w.shape, w.entries, w.tableau.short());
        println!("  dual of e(s)  = {}", render::text(&w.dual_of_polytabloid));
        println!("  ə(s)          = {}", render::text(&w.copolytabloid));
    }
    Ok(())
}
