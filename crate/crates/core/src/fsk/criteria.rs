//! Membership criteria for the morphism classes, on raw
//! `(source, target, underlying map)` triples.
//!
//! Two families live here. The explicit criteria decide each class by a
//! pointwise inequality. The search-based ones decide it from the
//! existential definitions by enumerating the intermediate bracketings;
//! they are exponential and exist to cross-check the explicit ones.

use serde::{Deserialize, Serialize};

use super::dual::dual_triple;
use super::object::FskObject;
use crate::ordmaps::MonotoneMap;
use crate::tamari::{conjugate_inj, enumerate_tamari, Lbf};

/// Which decision procedure [`is_morphism`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MembershipMode {
    /// Wherever `φ(j) < φ(j+1)`: `φ(ℓ_S(j)) = 0`, or `r_T(φ(p)) >= φ(j+1)`
    /// for some `p` in `[ℓ_S(j), j]`.
    Direct,
    /// `σ ℓ_S σ* <= ℓ_{δ*Tδ}` through the epi-mono factorization.
    ViaFactor,
    /// An Fsk-surjection followed by an Fsk-injection through some middle
    /// bracketing, found by exhaustive search.
    ViaSearch,
}

fn dims_match(src: &FskObject, dst: &FskObject, map: &MonotoneMap) -> bool {
    map.dom() == src.m() && map.cod() == dst.m()
}

/// `φ` and `φ*` restrict to mutually inverse bijections `u ≅ v`.
pub(crate) fn restricts_to_bijection(
    src: &FskObject,
    dst: &FskObject,
    map: &MonotoneMap,
    star: &MonotoneMap,
) -> bool {
    src.grade() == dst.grade()
        && src.u().iter().all(|&j| {
            let image = map.apply(j);
            dst.contains(image) && star.apply(image) == j
        })
        && dst.u().iter().all(|&i| {
            let back = star.apply(i);
            src.contains(back) && map.apply(back) == i
        })
}

pub fn is_morphism(
    src: &FskObject,
    dst: &FskObject,
    map: &MonotoneMap,
    mode: MembershipMode,
) -> bool {
    if !dims_match(src, dst, map) || !map.preserves_bottom() {
        return false;
    }
    match mode {
        MembershipMode::Direct => direct(src, dst, map),
        MembershipMode::ViaFactor => via_factor(src, dst, map),
        MembershipMode::ViaSearch => via_search(src, dst, map),
    }
}

fn direct(src: &FskObject, dst: &FskObject, map: &MonotoneMap) -> bool {
    let star = map.right_adjoint().expect("bottom-preserving");
    if !restricts_to_bijection(src, dst, map, &star) {
        return false;
    }
    let (ls, rt) = (src.s(), dst.s().to_rbf());
    (0..src.m() - 1).all(|j| {
        let next = map.apply(j + 1);
        let start = ls.get(j);
        map.apply(j) == next
            || map.apply(start) == 0
            || (start..=j).any(|p| rt.get(map.apply(p)) >= next)
    })
}

fn via_factor(src: &FskObject, dst: &FskObject, map: &MonotoneMap) -> bool {
    let star = map.right_adjoint().expect("bottom-preserving");
    if !restricts_to_bijection(src, dst, map, &star) {
        return false;
    }
    let (sigma, delta) = map.epi_mono_factorize();
    let sigma_star = sigma.right_adjoint().expect("surjection");
    let Ok(middle) = conjugate_inj(&delta, dst.s()) else {
        return false;
    };
    (0..sigma.cod()).all(|h| sigma.apply(src.s().get(sigma_star.apply(h))) <= middle.get(h))
}

fn via_search(src: &FskObject, dst: &FskObject, map: &MonotoneMap) -> bool {
    let (sigma, delta) = map.epi_mono_factorize();
    let mut image_u: Vec<usize> = src.u().iter().map(|&j| sigma.apply(j)).collect();
    image_u.dedup();
    // The u ≅ v conditions do not involve the bracketings.
    let probe = FskObject::new(sigma.cod(), image_u.clone(), Lbf::top(sigma.cod()))
        .expect("image of u lies in the image ordinal");
    if !bijective_on_generators(src, &probe, &sigma)
        || !bijective_on_generators(&probe, dst, &delta)
    {
        return false;
    }
    enumerate_tamari(sigma.cod()).into_iter().any(|r| {
        let Ok(middle) = FskObject::new(sigma.cod(), image_u.clone(), r) else {
            return false;
        };
        is_fsk_surjection_by_search(src, &middle, &sigma)
            && is_fsk_injection_by_search(&middle, dst, &delta)
    })
}

/// Identity underlying map between objects differing only in bracketing,
/// with `S <= T`.
pub fn is_tamari(src: &FskObject, dst: &FskObject, map: &MonotoneMap) -> bool {
    dims_match(src, dst, map)
        && map.is_identity()
        && src.u() == dst.u()
        && src.s().leq(dst.s()).unwrap_or(false)
}

/// The three shrink conditions, with the third in the form
/// "if `j < σ*σ(j)` then `σ(ℓ_S(j)) = σ(j)`".
pub fn is_shrink(src: &FskObject, dst: &FskObject, sigma: &MonotoneMap) -> bool {
    if !dims_match(src, dst, sigma) || !sigma.is_surjective() {
        return false;
    }
    let star = sigma.right_adjoint().expect("surjection");
    restricts_to_bijection(src, dst, sigma, &star)
        && (0..dst.m()).all(|h| sigma.apply(src.s().get(star.apply(h))) == dst.s().get(h))
        && (0..src.m()).all(|j| {
            j >= star.apply(sigma.apply(j)) || sigma.apply(src.s().get(j)) == sigma.apply(j)
        })
}

/// A shrink morphism between the dual objects, applied to `δ*`.
pub fn is_swell(src: &FskObject, dst: &FskObject, delta: &MonotoneMap) -> bool {
    if !dims_match(src, dst, delta) || !delta.is_injective() || !delta.preserves_bottom() {
        return false;
    }
    let (dsrc, ddst, dmap) = dual_triple(src, dst, delta).expect("bottom-preserving");
    is_shrink(&dsrc, &ddst, &dmap)
}

/// Surjection, restriction to `u ≅ v`, and `σ ℓ_S σ* <= ℓ_T`.
pub fn is_fsk_surjection(src: &FskObject, dst: &FskObject, sigma: &MonotoneMap) -> bool {
    if !dims_match(src, dst, sigma) || !sigma.is_surjective() {
        return false;
    }
    let star = sigma.right_adjoint().expect("surjection");
    restricts_to_bijection(src, dst, sigma, &star)
        && (0..dst.m()).all(|h| sigma.apply(src.s().get(star.apply(h))) <= dst.s().get(h))
}

/// Bottom-preserving injection, restriction to `v ≅ u`, and
/// `r_T <= δ* r_S δ` (source bracketing `T`, target `S`).
pub fn is_fsk_injection(src: &FskObject, dst: &FskObject, delta: &MonotoneMap) -> bool {
    if !dims_match(src, dst, delta) || !delta.is_injective() || !delta.preserves_bottom() {
        return false;
    }
    let star = delta.right_adjoint().expect("bottom-preserving");
    let (r_src, r_dst) = (src.s().to_rbf(), dst.s().to_rbf());
    restricts_to_bijection(src, dst, delta, &star)
        && (0..src.m()).all(|j| r_src.get(j) <= star.apply(r_dst.get(delta.apply(j))))
}

/// A Tamari morphism into some `(m, u, S')` followed by a shrink morphism.
pub fn is_fsk_surjection_by_search(src: &FskObject, dst: &FskObject, sigma: &MonotoneMap) -> bool {
    shrink_witnesses(src, dst, sigma)
        .into_iter()
        .any(|s| src.s().leq(&s).unwrap_or(false))
}

/// The definition read through duality: `δ*` is an Fsk-surjection between
/// the dual objects.
pub fn is_fsk_injection_by_search(src: &FskObject, dst: &FskObject, delta: &MonotoneMap) -> bool {
    if !dims_match(src, dst, delta) || !delta.is_injective() || !delta.preserves_bottom() {
        return false;
    }
    let (dsrc, ddst, dmap) = dual_triple(src, dst, delta).expect("bottom-preserving");
    is_fsk_surjection_by_search(&dsrc, &ddst, &dmap)
}

fn bijective_on_generators(src: &FskObject, dst: &FskObject, map: &MonotoneMap) -> bool {
    map.right_adjoint()
        .is_ok_and(|star| restricts_to_bijection(src, dst, map, &star))
}

/// Every `S'` on `ord m` for which `σ: (m, u, S') -> dst` is a shrink morphism.
pub fn shrink_witnesses(src: &FskObject, dst: &FskObject, sigma: &MonotoneMap) -> Vec<Lbf> {
    if !dims_match(src, dst, sigma) || !bijective_on_generators(src, dst, sigma) {
        return Vec::new();
    }
    enumerate_tamari(src.m())
        .into_iter()
        .filter(|s| {
            let candidate = src.with_bracketing(s.clone()).expect("same ordinal");
            is_shrink(&candidate, dst, sigma)
        })
        .collect()
}

/// Every `S''` on `ord m` for which `δ: src -> (m, u, S'')` is a swell morphism.
pub fn swell_witnesses(src: &FskObject, dst: &FskObject, delta: &MonotoneMap) -> Vec<Lbf> {
    if !dims_match(src, dst, delta) || !bijective_on_generators(src, dst, delta) {
        return Vec::new();
    }
    enumerate_tamari(dst.m())
        .into_iter()
        .filter(|s| {
            let candidate = dst.with_bracketing(s.clone()).expect("same ordinal");
            is_swell(src, &candidate, delta)
        })
        .collect()
}
