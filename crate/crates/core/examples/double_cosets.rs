//! The dual Garnir relation computed from the closed-form index and from
//! explicit double cosets agree.
use weylkit::weyl::{double_coset_classes, dual_garnir, dual_garnir_dc, dual_garnir_labels};
use weylkit::tableaux::enumerate;
use weylkit::{render, Partition, TableauClass};

fn main() -> weylkit::Result<()> {
    let shape: Partition = "3,2".parse()?;
    let mut checked = 0;
    for t in enumerate(&shape, 2, TableauClass::RowSemistandard) {
        for (a, b) in dual_garnir_labels(&shape) {
            assert_eq!(dual_garnir(&t, &a, &b)?.element, dual_garnir_dc(&t, &a, &b)?.element);
            checked += 1;
        }
    }
    println!("{checked} relations agree on shape {shape}");

    let t = weylkit::Tableau::from_rows(vec![vec![1, 2, 2], vec![1, 2]])?;
    let (a, b) = dual_garnir_labels(&shape).into_iter().next().unwrap();
    let classes = double_coset_classes(&t, &a, &b)?;
    println!("{} double cosets, sizes {:?}", classes.len(), classes.iter().map(Vec::len).collect::<Vec<_>>());
    println!("{}", render::text(&dual_garnir(&t, &a, &b)?.element));
    Ok(())
}
