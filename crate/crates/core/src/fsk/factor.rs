//! Canonical factorizations of Fsk-surjections, Fsk-injections and general
//! morphisms.

use serde::Serialize;

use super::criteria;
use super::morphism::FskMorphism;
use super::object::FskObject;
use crate::error::{Error, Result};
use crate::ordmaps::MonotoneMap;
use crate::tamari::{base_change_inj, base_change_surj, conjugate_inj, conjugate_surj};

/// The two canonical middles of an Fsk-surjection `σ: (m,u,S) -> (n,v,T)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurjectionFactors {
    /// `(m, u, S ∨ T^σ)`: Tamari morphism, then the greatest shrink.
    pub max_middle: FskObject,
    /// `(n, v, σSσ*)`: Fsk-surjection, then a Tamari morphism.
    pub alt_middle: FskObject,
}

/// The two canonical middles of an Fsk-injection `δ: (n,v,T) -> (m,u,S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectionFactors {
    /// `(m, u, T^δ ∧ S)`: the least swell, then a Tamari morphism.
    pub min_middle: FskObject,
    /// `(n, v, δ*Sδ)`: a Tamari morphism, then an Fsk-injection.
    pub alt_middle: FskObject,
}

/// The factorization of a general morphism through the image of its map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralFactors {
    pub surj: FskMorphism,
    pub middle: FskObject,
    pub inj: FskMorphism,
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(what()))
    }
}

pub fn factor_surjection(f: &FskMorphism) -> Result<SurjectionFactors> {
    let (src, dst, sigma) = (f.src(), f.dst(), f.map());
    if !criteria::is_fsk_surjection(src, dst, sigma) {
        return Err(Error::Precondition(format!("{f} is not an Fsk-surjection")));
    }
    let lifted = base_change_surj(sigma, dst.s())?;
    let max_middle = src.with_bracketing(src.s().join(&lifted)?)?;
    let alt_middle = dst.with_bracketing(conjugate_surj(sigma, src.s())?)?;

    let id = MonotoneMap::identity(src.m());
    check(criteria::is_tamari(src, &max_middle, &id), || {
        format!("{src} -> {max_middle} is not a Tamari morphism")
    })?;
    check(criteria::is_shrink(&max_middle, dst, sigma), || {
        format!("{max_middle} -> {dst} is not a shrink morphism")
    })?;
    check(criteria::is_fsk_surjection(src, &alt_middle, sigma), || {
        format!("{src} -> {alt_middle} is not an Fsk-surjection")
    })?;
    check(
        criteria::is_tamari(&alt_middle, dst, &MonotoneMap::identity(dst.m())),
        || format!("{alt_middle} -> {dst} is not a Tamari morphism"),
    )?;
    Ok(SurjectionFactors {
        max_middle,
        alt_middle,
    })
}

pub fn factor_injection(f: &FskMorphism) -> Result<InjectionFactors> {
    let (src, dst, delta) = (f.src(), f.dst(), f.map());
    if !criteria::is_fsk_injection(src, dst, delta) {
        return Err(Error::Precondition(format!("{f} is not an Fsk-injection")));
    }
    let pushed = base_change_inj(delta, &src.s().to_rbf())?.to_lbf()?;
    let min_middle = dst.with_bracketing(pushed.meet(dst.s())?)?;
    let alt_middle = src.with_bracketing(conjugate_inj(delta, dst.s())?)?;

    check(criteria::is_swell(src, &min_middle, delta), || {
        format!("{src} -> {min_middle} is not a swell morphism")
    })?;
    check(
        criteria::is_tamari(&min_middle, dst, &MonotoneMap::identity(dst.m())),
        || format!("{min_middle} -> {dst} is not a Tamari morphism"),
    )?;
    check(
        criteria::is_tamari(src, &alt_middle, &MonotoneMap::identity(src.m())),
        || format!("{src} -> {alt_middle} is not a Tamari morphism"),
    )?;
    check(criteria::is_fsk_injection(&alt_middle, dst, delta), || {
        format!("{alt_middle} -> {dst} is not an Fsk-injection")
    })?;
    Ok(InjectionFactors {
        min_middle,
        alt_middle,
    })
}

/// `f = inj ∘ surj` through `(|im φ|, φ(u), δ*Tδ)`.
pub fn factor_general(f: &FskMorphism) -> Result<GeneralFactors> {
    let (src, dst, phi) = (f.src(), f.dst(), f.map());
    let (sigma, delta) = phi.epi_mono_factorize();
    // φ(u), indexed inside the image ordinal.
    let mut middle_u: Vec<usize> = src.u().iter().map(|&j| sigma.apply(j)).collect();
    middle_u.dedup();
    let middle = FskObject::new(sigma.cod(), middle_u, conjugate_inj(&delta, dst.s())?)?;

    check(criteria::is_fsk_surjection(src, &middle, &sigma), || {
        format!("{src} -> {middle} is not an Fsk-surjection")
    })?;
    check(criteria::is_fsk_injection(&middle, dst, &delta), || {
        format!("{middle} -> {dst} is not an Fsk-injection")
    })?;
    let surj = FskMorphism::new(src.clone(), middle.clone(), sigma)?;
    let inj = FskMorphism::new(middle.clone(), dst.clone(), delta)?;
    check(inj.after(&surj)? == *f, || {
        format!("factors of {f} do not recompose")
    })?;
    Ok(GeneralFactors { surj, middle, inj })
}
