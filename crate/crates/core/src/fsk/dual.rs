//! Duality `i ↦ m-1-i`: reverses the order of leaves (and of tensor
//! factors), reverses morphisms, and exchanges shrink with swell.

use super::object::FskObject;
use crate::ordmaps::MonotoneMap;
use crate::tamari::Lbf;

/// `(ord m^op, u^op, S^op)`, where `S^op` has lbf `j ↦ (m-1) - r_S(m-1-j)`.
pub fn dual_object(o: &FskObject) -> FskObject {
    let top = o.m() - 1;
    let mut u: Vec<usize> = o.u().iter().map(|&j| top - j).collect();
    u.reverse();
    let r = o.s().to_rbf();
    let values = (0..=top).map(|j| top - r.get(top - j)).collect();
    let s = Lbf::new(values).expect("a reflected rbf is an lbf");
    FskObject::new(o.m(), u, s).expect("reflection preserves validity")
}

/// `j ↦ (m-1) - φ*(n-1-j)` for `φ: ord m -> ord n`; `None` when `φ` has no
/// right adjoint.
pub fn dual_map(map: &MonotoneMap) -> Option<MonotoneMap> {
    let star = map.right_adjoint().ok()?;
    let (m, n) = (map.dom(), map.cod());
    let images = (0..n).map(|j| (m - 1) - star.apply(n - 1 - j)).collect();
    Some(MonotoneMap::new(images, m).expect("reflected adjoint is monotone"))
}

/// The dual of `φ: src -> dst`, as a triple `dual(dst) -> dual(src)`.
pub fn dual_triple(
    src: &FskObject,
    dst: &FskObject,
    map: &MonotoneMap,
) -> Option<(FskObject, FskObject, MonotoneMap)> {
    Some((dual_object(dst), dual_object(src), dual_map(map)?))
}
