use weylkit::schur::verify_schur_ses;
use weylkit::weyl::verify_weyl_kernel;
use weylkit::{Partition, Ring};

fn sweep(max_boxes: usize) -> impl Iterator<Item = (Partition, u32)> {
    Partition::all_up_to(max_boxes).into_iter().filter(|p| p.size() > 0).flat_map(|p| (2..=3).map(move |m| (p.clone(), m)))
}

#[test]
fn integral_schur_sequences() {
    for (shape, m) in sweep(5) {
        let r = verify_schur_ses(&shape, m, Ring::Integers).unwrap();
        assert!(r.ok, "{shape:?} m={m}: {:?}", r.failures().collect::<Vec<_>>());
        assert!(r.checks.iter().any(|c| c.name == "garnir_lattice_saturated"));
    }
}

#[test]
fn integral_weyl_kernels() {
    for (shape, m) in sweep(5) {
        let r = verify_weyl_kernel(&shape, m, Ring::Integers).unwrap();
        assert!(r.ok, "{shape:?} m={m}: {:?}", r.failures().collect::<Vec<_>>());
        assert!(r.checks.iter().any(|c| c.name == "snake_lattice_saturated"));
    }
}
