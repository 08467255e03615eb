use rayon::prelude::*;
use serde_json::json;

use crate::coeffs::{LinComb, Ring};
use crate::error::{Error, Result};
use crate::linalg;
use crate::places::oracle::MAX_BOXES;
use crate::report::{Check, InstanceReport};
use crate::tableaux::{enumerate, OrderVerdict, Partition, Tableau, TableauClass};

use super::relations::{dual_garnir, dual_garnir_dc, dual_garnir_labels, dual_snake, snake_labels, WeylRelation};
use super::{copolytabloid, lambda_map};

fn field_or_integers(ring: Ring) -> Result<()> {
    match ring {
        Ring::Integers | Ring::Rationals => Ok(()),
        _ if ring.is_field() => Ok(()),
        _ => Err(Error::NotAField(ring.to_string())),
    }
}

/// `ə(s)` has `|s|` with coefficient 1 and otherwise only labels `<_c`-greater
/// than `s`. Returns the first semistandard `s` where this fails.
pub fn check_unitriangular(shape: &Partition, m: u32) -> Option<Tableau> {
    enumerate(shape, m, TableauClass::Semistandard).into_iter().find(|s| {
        let c = copolytabloid(s);
        !c.coeff(s).is_one()
            || c.labels().any(|u| u != s && s.compare_columns(u).ok() != Some(OrderVerdict::Less))
    })
}

/// All dual snakes on row-semistandard labels.
pub fn all_snakes(shape: &Partition, m: u32) -> Vec<WeylRelation> {
    let labels = snake_labels(shape);
    enumerate(shape, m, TableauClass::RowSemistandard)
        .par_iter()
        .flat_map_iter(|t| labels.iter().map(move |&(i, j, j2)| dual_snake(t, i, j, j2).expect("valid snake")))
        .collect()
}

/// Rank of `Λ` is `|SSYT|`, the dual snakes lie in `ker Λ` and span a
/// submodule of rank `|RSSYT| − |SSYT|`, and the semistandard copolytabloids
/// are unitriangular. Over ℤ the ranks are over ℚ and the elementary
/// divisors of the snake matrix are reported as well.
pub fn verify_weyl_kernel(shape: &Partition, m: u32, ring: Ring) -> Result<InstanceReport> {
    field_or_integers(ring)?;
    let mut report = InstanceReport::new(shape, m, ring);
    let rssyt = enumerate(shape, m, TableauClass::RowSemistandard);
    let ssyt = enumerate(shape, m, TableauClass::Semistandard);
    let csyt = enumerate(shape, m, TableauClass::ColumnStandard);
    report.dims.insert("rssyt".into(), rssyt.len() as u64);
    report.dims.insert("ssyt".into(), ssyt.len() as u64);
    report.dims.insert("csyt".into(), csyt.len() as u64);

    let images: Vec<LinComb<Tableau>> = rssyt.par_iter().map(|t| copolytabloid(t).into_lincomb()).collect();
    let rank_lambda = linalg::rank(&images, ring)?;
    report.ranks.insert("lambda".into(), rank_lambda as u64);
    report.push(Check::expect(
        "lambda_rank_equals_ssyt",
        rank_lambda == ssyt.len(),
        format!("rank Λ = {rank_lambda}, |SSYT| = {}", ssyt.len()),
    ));

    let snakes = all_snakes(shape, m);
    report.dims.insert("snake_labels".into(), snakes.len() as u64);
    let offender = snakes.par_iter().find_first(|r| {
        !lambda_map(&r.element.change_ring(ring).expect("integral")).is_zero()
    });
    report.push(Check::from_search(
        "snakes_in_kernel_of_lambda",
        offender.map(|r| json!({ "relation": r, "image": lambda_map(&r.element) })),
    ));

    let generators: Vec<LinComb<Tableau>> =
        snakes.iter().filter(|r| !r.element.is_zero()).map(|r| r.element.as_lincomb().clone()).collect();
    let rank_snakes = linalg::rank(&generators, ring)?;
    let nullity = rssyt.len() - rank_lambda;
    report.ranks.insert("snakes".into(), rank_snakes as u64);
    report.ranks.insert("kernel".into(), nullity as u64);
    report.push(Check::expect(
        "snakes_span_kernel_of_lambda",
        rank_snakes == rssyt.len() - ssyt.len() && rank_snakes == nullity,
        format!("rank of snakes = {rank_snakes}, |RSSYT| − |SSYT| = {}, nullity = {nullity}", rssyt.len() - ssyt.len()),
    ));

    let bad = check_unitriangular(shape, m);
    report.push(Check::from_search(
        "semistandard_copolytabloids_unitriangular",
        bad.map(|s| json!({ "tableau": s, "copolytabloid": copolytabloid(&s) })),
    ));

    if ring == Ring::Integers {
        let divisors = linalg::elementary_divisors(&generators)?;
        let unit = divisors.iter().all(|d| *d == 1.into());
        report.elementary_divisors = Some(divisors.iter().map(|d| d.to_string()).collect());
        report.push(Check::expect("snake_lattice_saturated", unit, format!("{} elementary divisors", divisors.len())));
    }
    Ok(report)
}

/// `Λ` kills every dual Garnir relation on tableaux of `shape` with entries
/// at most `m`, reduced into `ring`.
pub fn verify_dual_garnir_kernel(shape: &Partition, m: u32, ring: Ring) -> Result<InstanceReport> {
    let mut report = InstanceReport::new(shape, m, ring);
    let labels = dual_garnir_labels(shape);
    let tableaux = enumerate(shape, m, TableauClass::All);
    report.dims.insert("tableaux".into(), tableaux.len() as u64);
    report.dims.insert("labels".into(), labels.len() as u64);
    let offender = tableaux.par_iter().find_map_first(|t| {
        labels.iter().find_map(|(a, b)| {
            let rel = dual_garnir(t, a, b).expect("valid label");
            let image = lambda_map(&rel.element.change_ring(ring).expect("integral"));
            (!image.is_zero()).then(|| json!({ "relation": rel, "image": image }))
        })
    });
    report.push(Check::from_search("dual_garnir_in_kernel_of_lambda", offender));
    Ok(report)
}

/// The double-coset form agrees with the orbit form on every label with
/// `|A⊔B| ≤ max_boxes`.
pub fn verify_double_coset_form(shape: &Partition, m: u32, max_boxes: usize) -> Result<InstanceReport> {
    let mut report = InstanceReport::new(shape, m, Ring::Integers);
    let labels: Vec<_> =
        dual_garnir_labels(shape).into_iter().filter(|(a, b)| a.len() + b.len() <= max_boxes.min(MAX_BOXES)).collect();
    let tableaux = enumerate(shape, m, TableauClass::All);
    report.dims.insert("labels".into(), (labels.len() * tableaux.len()) as u64);
    let offender = tableaux.par_iter().find_map_first(|t| {
        labels.iter().find_map(|(a, b)| {
            let orbit = dual_garnir(t, a, b).expect("valid label");
            let dc = dual_garnir_dc(t, a, b).expect("oracle within bounds");
            (orbit.element != dc.element).then(|| json!({ "orbit_form": orbit, "double_coset_form": dc.element }))
        })
    });
    report.push(Check::from_search("double_coset_form_agrees", offender));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_two_over_several_rings() {
        let lam = Partition::new(vec![2, 2]).unwrap();
        for ring in [Ring::Rationals, Ring::IntegersMod(2), Ring::IntegersMod(3), Ring::Integers] {
            let r = verify_weyl_kernel(&lam, 2, ring).unwrap();
            assert!(r.ok, "{r:?}");
            assert_eq!(r.dims["rssyt"], 9);
            assert_eq!(r.dims["ssyt"], 1);
            assert_eq!(r.ranks["snakes"], 8);
        }
        assert!(verify_weyl_kernel(&lam, 2, Ring::IntegersMod(4)).is_err());
    }

    #[test]
    fn single_box_is_injective() {
        let r = verify_weyl_kernel(&Partition::new(vec![1]).unwrap(), 3, Ring::Rationals).unwrap();
        assert!(r.ok);
        assert_eq!(r.ranks["kernel"], 0);
        assert_eq!(r.dims["snake_labels"], 0);
    }

    #[test]
    fn small_sweeps() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        assert!(verify_dual_garnir_kernel(&lam, 3, Ring::IntegersMod(3)).unwrap().ok);
        assert!(verify_double_coset_form(&lam, 3, 5).unwrap().ok);
        assert!(check_unitriangular(&Partition::new(vec![3, 2]).unwrap(), 3).is_none());
    }
}
