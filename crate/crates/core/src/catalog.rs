//! The fixture catalog: the groups every verification pass runs over,
//! plus the standard higher-dimensional example algebras.

use crate::error::Result;
use crate::gfa::{pushforward_group_ring, GFrobeniusAlgebra};
use crate::groups::{make_group, Group, GroupHom, GroupSpec};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub group: Group,
}

const FIXTURE_SPECS: &[&str] = &[
    "cyclic 1",
    "cyclic 2",
    "cyclic 3",
    "cyclic 4",
    "cyclic 6",
    "cyclic 8",
    "cyclic 12",
    "product(cyclic 2, cyclic 2)",
    "product(cyclic 2, product(cyclic 2, cyclic 2))",
    "product(cyclic 2, cyclic 4)",
    "symmetric 3",
    "dihedral 4",
    "quaternion",
];

/// All fixture groups, ordered by size.
pub fn fixture_groups() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = FIXTURE_SPECS
        .iter()
        .map(|name| Fixture {
            name,
            group: Arc::new(
                make_group(&GroupSpec::parse(name).expect("catalog specs parse"))
                    .expect("catalog specs build"),
            ),
        })
        .collect();
    out.sort_by_key(|f| f.group.size);
    out
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixture_groups().into_iter().find(|f| f.name == name)
}

/// A two-dimensional-per-sector example over the Klein four group: the
/// pushforward of the group ring of Z/2 x Z/4 along reduction mod 2 in
/// the second factor. The kernel {0} x {0, 2} is central, so the
/// pushforward is defined, and the base carries nontrivial cohomology.
pub fn pushforward_fixture() -> Result<GFrobeniusAlgebra> {
    let src = Arc::new(make_group(&GroupSpec::parse("product(cyclic 2, cyclic 4)")?)?);
    let k4 = Arc::new(make_group(&GroupSpec::parse("product(cyclic 2, cyclic 2)")?)?);
    // Generators in enumeration order: (1,0) at index 1, (0,1) at index 2.
    let pi = GroupHom::from_generator_images(src, k4, &[(1, 1), (2, 2)])?;
    pushforward_group_ring(&pi)
}
