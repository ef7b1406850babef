use std::fmt;

use serde::{Deserialize, Serialize};

use super::criteria::{self, is_morphism, MembershipMode};
use super::dual::{dual_map, dual_object};
use super::object::FskObject;
use crate::error::{Error, Result};
use crate::ordmaps::MonotoneMap;

/// A morphism of the free skew monoidal category.
///
/// The functor to bottom-preserving ordinal maps is faithful, so a morphism
/// is exactly its `(src, dst, map)` triple and equality is equality of
/// triples. Construction always validates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMorphism", into = "RawMorphism")]
pub struct FskMorphism {
    src: FskObject,
    dst: FskObject,
    map: MonotoneMap,
}

#[derive(Serialize, Deserialize)]
struct RawMorphism {
    src: FskObject,
    dst: FskObject,
    map: MonotoneMap,
}

impl TryFrom<RawMorphism> for FskMorphism {
    type Error = Error;
    fn try_from(raw: RawMorphism) -> Result<Self> {
        FskMorphism::new(raw.src, raw.dst, raw.map)
    }
}

impl From<FskMorphism> for RawMorphism {
    fn from(f: FskMorphism) -> Self {
        RawMorphism {
            src: f.src,
            dst: f.dst,
            map: f.map,
        }
    }
}

/// Which of the named classes a morphism belongs to.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MorphismClass {
    pub is_tamari: bool,
    pub is_shrink: bool,
    pub is_swell: bool,
    pub is_fsk_surjection: bool,
    pub is_fsk_injection: bool,
}

impl FskMorphism {
    pub fn new(src: FskObject, dst: FskObject, map: MonotoneMap) -> Result<Self> {
        if map.dom() != src.m() || map.cod() != dst.m() {
            return Err(Error::Dimension(format!(
                "map {} -> {} between objects on ord {} and ord {}",
                map.dom(),
                map.cod(),
                src.m(),
                dst.m()
            )));
        }
        if !is_morphism(&src, &dst, &map, MembershipMode::Direct) {
            return Err(Error::NotAMorphism {
                src: src.to_string(),
                dst: dst.to_string(),
                map: map.to_string(),
            });
        }
        Ok(FskMorphism { src, dst, map })
    }

    /// For triples already known to be valid.
    pub(crate) fn trusted(src: FskObject, dst: FskObject, map: MonotoneMap) -> Self {
        debug_assert!(is_morphism(&src, &dst, &map, MembershipMode::Direct));
        FskMorphism { src, dst, map }
    }

    pub fn identity(o: &FskObject) -> Self {
        FskMorphism {
            src: o.clone(),
            dst: o.clone(),
            map: MonotoneMap::identity(o.m()),
        }
    }

    pub fn src(&self) -> &FskObject {
        &self.src
    }

    pub fn dst(&self) -> &FskObject {
        &self.dst
    }

    pub fn map(&self) -> &MonotoneMap {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && self.map.is_identity()
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &FskMorphism) -> Result<FskMorphism> {
        compose(self, f)
    }

    pub fn tensor(&self, other: &FskMorphism) -> FskMorphism {
        FskMorphism::new(
            self.src.tensor(&other.src),
            self.dst.tensor(&other.dst),
            self.map.ordinal_sum(&other.map),
        )
        .expect("tensor of morphisms is a morphism")
    }

    pub fn classify(&self) -> MorphismClass {
        let (s, d, m) = (&self.src, &self.dst, &self.map);
        MorphismClass {
            is_tamari: criteria::is_tamari(s, d, m),
            is_shrink: criteria::is_shrink(s, d, m),
            is_swell: criteria::is_swell(s, d, m),
            is_fsk_surjection: criteria::is_fsk_surjection(s, d, m),
            is_fsk_injection: criteria::is_fsk_injection(s, d, m),
        }
    }

    /// `dual(dst) -> dual(src)` with the reflected right adjoint as its map.
    pub fn dual(&self) -> FskMorphism {
        let map = dual_map(&self.map).expect("morphisms preserve the bottom");
        FskMorphism::new(dual_object(&self.dst), dual_object(&self.src), map)
            .expect("duality preserves morphisms")
    }

    /// Parses `SRC -> DST ; IMAGES`, e.g. `(I X) -> X ; 0,0`.
    pub fn parse(text: &str) -> Result<Self> {
        let (objects, images) = text.split_once(';').ok_or_else(|| Error::Parse {
            offset: text.len(),
            message: "expected ';' before the map images".into(),
        })?;
        let (src, dst) = objects.split_once("->").ok_or_else(|| Error::Parse {
            offset: 0,
            message: "expected '->' between source and target".into(),
        })?;
        let src = FskObject::parse(src)?;
        let dst = FskObject::parse(dst)?;
        let map = MonotoneMap::parse(images, dst.m())?;
        FskMorphism::new(src, dst, map)
    }
}

pub fn compose(g: &FskMorphism, f: &FskMorphism) -> Result<FskMorphism> {
    if f.dst != g.src {
        return Err(Error::Dimension(format!(
            "cannot compose: target {} of the first morphism is not the source {} of the second",
            f.dst, g.src
        )));
    }
    let map = g.map.after(&f.map)?;
    if !is_morphism(&f.src, &g.dst, &map, MembershipMode::Direct) {
        return Err(Error::Internal(format!(
            "composite {map} of morphisms {} -> {} is not a morphism",
            f.src, g.dst
        )));
    }
    Ok(FskMorphism {
        src: f.src.clone(),
        dst: g.dst.clone(),
        map,
    })
}

/// `α: (ab)c -> a(bc)`, a Tamari morphism.
pub fn alpha(a: &FskObject, b: &FskObject, c: &FskObject) -> FskMorphism {
    let src = a.tensor(b).tensor(c);
    let dst = a.tensor(&b.tensor(c));
    let map = MonotoneMap::identity(src.m());
    assert!(
        criteria::is_tamari(&src, &dst, &map),
        "associator {src} -> {dst} is not a Tamari morphism"
    );
    FskMorphism::trusted(src, dst, map)
}

/// `λ: Ia -> a`, a shrink morphism collapsing the unit onto leaf 0.
pub fn lambda(a: &FskObject) -> FskMorphism {
    let src = FskObject::unit().tensor(a);
    let images = (0..src.m()).map(|j| j.saturating_sub(1)).collect();
    let map = MonotoneMap::new(images, a.m()).expect("monotone");
    assert!(
        criteria::is_shrink(&src, a, &map),
        "left unitor {src} -> {a} is not a shrink morphism"
    );
    FskMorphism::trusted(src, a.clone(), map)
}

/// `ρ: a -> aI`, a swell morphism including `a` as an initial segment.
pub fn rho(a: &FskObject) -> FskMorphism {
    let dst = a.tensor(&FskObject::unit());
    let map = MonotoneMap::new((0..a.m()).collect(), dst.m()).expect("monotone");
    assert!(
        criteria::is_swell(a, &dst, &map),
        "right unitor {a} -> {dst} is not a swell morphism"
    );
    FskMorphism::trusted(a.clone(), dst, map)
}

/// All morphisms `a -> b`, in lexicographic order of their maps.
pub fn hom(a: &FskObject, b: &FskObject) -> Vec<FskMorphism> {
    if a.grade() != b.grade() {
        return Vec::new();
    }
    MonotoneMap::enumerate_bottom_preserving(a.m(), b.m())
        .into_iter()
        .filter(|map| is_morphism(a, b, map, MembershipMode::Direct))
        .map(|map| FskMorphism::trusted(a.clone(), b.clone(), map))
        .collect()
}

impl fmt::Display for FskMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} ; {}", self.src, self.dst, self.map)
    }
}
