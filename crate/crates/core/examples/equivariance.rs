//! Λ and e commute with matrices acting on entries; here a random
//! unimodular matrix over ℤ and an elementary one over ℤ/3.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weylkit::duality::{entry_action, equivariance_check, random_unimodular, EntryMatrix, Which};
use weylkit::powers::SymLowerElement;
use weylkit::weyl::lambda_map;
use weylkit::{render, Partition, Ring, Tableau};

fn main() -> weylkit::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = random_unimodular(Ring::Integers, 3, 6, &mut rng);
    println!("g =\n{g}");
    let shape: Partition = "2,1".parse()?;
    for which in [Which::LambdaMap, Which::PolytabloidMap] {
        println!("{which:?} commutes with g: {}", equivariance_check(&shape, 3, &g, which)?);
    }

    let h = EntryMatrix::from_ints(Ring::IntegersMod(3), &[vec![1, 1], vec![0, 1]])?;
    let x = SymLowerElement::basis(Ring::IntegersMod(3), &Tableau::from_rows(vec![vec![2, 2], vec![1]])?);
    let hx = entry_action(&x, &h)?;
    println!("h·rsym(22/1)    = {}", render::text(&hx));
    println!("Λ(h·x)          = {}", render::text(&lambda_map(&hx)));
    println!("h·Λ(x)          = {}", render::text(&entry_action(&lambda_map(&x), &h)?));
    Ok(())
}
