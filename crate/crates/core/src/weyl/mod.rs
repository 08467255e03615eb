//! Copolytabloids, dual Garnir and dual snake relations, straightening, and
//! the sequence `0 → coGR^λ → Sym_λ → Δ^λ → 0`.

mod relations;
mod straighten;
mod verify;

pub use relations::{
    double_coset_classes, dual_garnir, dual_garnir_dc, dual_garnir_labels, dual_snake, snake_labels, variant_relation,
    RelationKind, SnakeLabel, Variant, WeylRelation,
};
pub use straighten::{straighten, StraighteningCertificate};
pub use verify::{check_unitriangular, verify_double_coset_form, verify_dual_garnir_kernel, verify_weyl_kernel};

use crate::powers::{rsym, wedge_project, ColumnTabloidElement, SymLowerElement};
use crate::tableaux::{enumerate, Partition, Tableau, TableauClass};

/// `ə(t) = Λ(rsym(t))`, over ℤ.
pub fn copolytabloid(t: &Tableau) -> ColumnTabloidElement {
    wedge_project(&rsym(t))
}

/// `Λ : Sym_λ → Λ^{λ'}`.
pub fn lambda_map(x: &SymLowerElement) -> ColumnTabloidElement {
    x.map(copolytabloid)
}

/// The semistandard copolytabloids.
pub fn weyl_basis(shape: &Partition, m: u32) -> Vec<(Tableau, ColumnTabloidElement)> {
    enumerate(shape, m, TableauClass::Semistandard)
        .into_iter()
        .map(|s| {
            let c = copolytabloid(&s);
            (s, c)
        })
        .collect()
}
