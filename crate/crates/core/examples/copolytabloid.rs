//! The dual Garnir relation of 11/22 with A = {(1,1),(1,2)} and B = {(2,1)},
//! its image under Λ, and the weighted versus unweighted sums.
use weylkit::weyl::{copolytabloid, dual_garnir, lambda_map, variant_relation, Variant};
use weylkit::{render, CellSet, Ring, Tableau};

fn main() -> weylkit::Result<()> {
    let t = Tableau::from_rows(vec![vec![1, 1], vec![2, 2]])?;
    let a = CellSet::from_pairs(&[(1, 1), (1, 2)]);
    let b = CellSet::from_pairs(&[(2, 1)]);

    let rel = dual_garnir(&t, &a, &b)?;
    println!("dual Garnir     = {}", render::text(&rel.element));
    println!("Λ(dual Garnir)  = {}", render::text(&lambda_map(&rel.element)));

    let s = Tableau::from_rows(vec![vec![2, 1], vec![1, 2]])?;
    println!("ə({})      = {}", s.short(), render::text(&copolytabloid(&s)));
    println!("ə({})      = {}", t.short(), render::text(&copolytabloid(&t)));

    let star = variant_relation(&t, &a, &b, Variant::Star)?;
    let lam = lambda_map(&star.element);
    println!("γ*              = {}", render::text(&star.element));
    println!("Λ(γ*) over ℤ    = {}", render::text(&lam));
    println!("Λ(γ*) over ℤ/3  = {}", render::text(&lam.change_ring(Ring::IntegersMod(3))?));
    let star2 = variant_relation(&t, &a, &b, Variant::StarStar)?;
    println!("γ**             = {}", render::text(&star2.element));
    Ok(())
}
