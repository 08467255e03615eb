//! Enumerate tableaux of shape (2,1) with entries in {1,2}, sort columns,
//! and compare tableaux in the column and row orders.
use weylkit::tableaux::{count_column_standard, count_row_semistandard, enumerate};
use weylkit::{Partition, Tableau, TableauClass};

fn main() -> weylkit::Result<()> {
    let shape: Partition = "2,1".parse()?;
    for class in [TableauClass::Semistandard, TableauClass::RowSemistandard, TableauClass::ColumnStandard] {
        let ts = enumerate(&shape, 2, class);
        let names: Vec<String> = ts.iter().map(Tableau::short).collect();
        println!("{class:?} ({}): {}", ts.len(), names.join("  "));
    }
    println!("row semistandard count = {}, column standard count = {}", count_row_semistandard(&shape, 2), count_column_standard(&shape, 2));

    let t = Tableau::from_rows(vec![vec![2, 1], vec![1, 2]])?;
    match t.sort_columns() {
        Some((sign, s)) => println!("sort_columns({}) = {sign} * {}", t.short(), s.short()),
        None => println!("sort_columns({}) = 0", t.short()),
    }
    let dup = Tableau::from_rows(vec![vec![1, 2], vec![1, 3]])?;
    println!("sort_columns({}) = {:?}", dup.short(), dup.sort_columns());

    let a = Tableau::from_rows(vec![vec![1, 1], vec![2, 2]])?;
    let b = Tableau::from_rows(vec![vec![1, 2], vec![1, 2]])?;
    println!("{} vs {}: rows {:?}, columns {:?}", a.short(), b.short(), a.compare_rows(&b)?, a.compare_columns(&b)?);
    Ok(())
}
