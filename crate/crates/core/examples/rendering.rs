//! One element in the three output formats, and the JSON round trip.
use weylkit::powers::SymLowerElement;
use weylkit::render::{self, Format};
use weylkit::{CellSet, Tableau};

fn main() -> weylkit::Result<()> {
    let t = Tableau::from_rows(vec![vec![1, 1], vec![2, 2]])?;
    let rel = weylkit::weyl::dual_garnir(&t, &CellSet::from_pairs(&[(1, 1), (1, 2)]), &CellSet::from_pairs(&[(2, 1)]))?;
    for f in [Format::Text, Format::Latex, Format::Json] {
        println!("{}", render::render(&rel.element, f));
    }
    let back: SymLowerElement = render::parse(&render::json(&rel.element))?;
    assert_eq!(back, rel.element);
    let u = Tableau::from_rows(vec![vec![1, 2], vec![1, 2]])?;
    println!("rsym(12/12) = {}", render::text(&weylkit::powers::rsym(&u)));
    let wide = Tableau::from_rows(vec![vec![10, 12], vec![11]])?;
    println!("{}", render::ytableau(&wide));
    Ok(())
}
