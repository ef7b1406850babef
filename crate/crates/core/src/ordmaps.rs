//! Finite ordinals `ord n = {0, .., n-1}` and the order-preserving maps
//! between them.
//!
//! An ordinal is represented only by its size. Maps are dense image vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An order-preserving function `ord dom -> ord cod`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMap", into = "RawMap")]
pub struct MonotoneMap {
    cod: usize,
    images: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawMap {
    dom: usize,
    cod: usize,
    images: Vec<usize>,
}

impl TryFrom<RawMap> for MonotoneMap {
    type Error = Error;

    fn try_from(raw: RawMap) -> Result<Self> {
        if raw.dom != raw.images.len() {
            return Err(Error::Dimension(format!(
                "dom {} but {} images",
                raw.dom,
                raw.images.len()
            )));
        }
        MonotoneMap::new(raw.images, raw.cod)
    }
}

impl From<MonotoneMap> for RawMap {
    fn from(map: MonotoneMap) -> Self {
        RawMap {
            dom: map.images.len(),
            cod: map.cod,
            images: map.images,
        }
    }
}

impl MonotoneMap {
    pub fn new(images: Vec<usize>, cod: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidMap {
            images: images.clone(),
            cod,
            reason,
        };
        if images.is_empty() {
            return Err(invalid("empty domain"));
        }
        if cod == 0 {
            return Err(invalid("empty codomain"));
        }
        if images.windows(2).any(|w| w[0] > w[1]) {
            return Err(invalid("not weakly increasing"));
        }
        if images.iter().any(|&v| v >= cod) {
            return Err(invalid("image out of range"));
        }
        Ok(MonotoneMap { cod, images })
    }

    /// Parses the comma-separated text form `0,0,1`.
    pub fn parse(text: &str, cod: usize) -> Result<Self> {
        Self::new(parse_list(text)?, cod)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "ordinals are non-empty");
        MonotoneMap {
            cod: n,
            images: (0..n).collect(),
        }
    }

    pub fn dom(&self) -> usize {
        self.images.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `φ(i)` with the virtual top extension `φ(dom) = cod`.
    pub fn apply_extended(&self, i: usize) -> usize {
        if i == self.dom() {
            self.cod
        } else {
            self.images[i]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.cod == self.dom() && self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn preserves_bottom(&self) -> bool {
        self.images[0] == 0
    }

    pub fn is_surjective(&self) -> bool {
        self.images[0] == 0
            && *self.images.last().unwrap() == self.cod - 1
            && self.images.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    pub fn is_injective(&self) -> bool {
        self.images.windows(2).all(|w| w[0] < w[1])
    }

    /// `g ∘ f`, written `g.after(f)`.
    pub fn after(&self, f: &MonotoneMap) -> Result<MonotoneMap> {
        compose(self, f)
    }

    /// `φ*(j) = max{i : φ(i) <= j}`; exists iff `φ(0) = 0`.
    pub fn right_adjoint(&self) -> Result<MonotoneMap> {
        if !self.preserves_bottom() {
            return Err(Error::NoAdjoint(format!(
                "{self} does not preserve the bottom element"
            )));
        }
        // Walk j upwards; the pointer only ever moves right.
        let mut images = Vec::with_capacity(self.cod);
        let mut i = 0;
        for j in 0..self.cod {
            while i + 1 < self.dom() && self.images[i + 1] <= j {
                i += 1;
            }
            images.push(i);
        }
        Ok(MonotoneMap {
            cod: self.dom(),
            images,
        })
    }

    /// The right adjoint `φ_*` of `φ*`, by the case formula
    ///
    /// ```text
    /// φ_*(i) = φ(i+1) - 1   if φ(i) < φ(i+1)
    ///          φ(i) - 1     otherwise
    /// ```
    ///
    /// where `φ(dom)` reads as `cod`. Defined iff `φ(0) = 0` and `φ(1) != 0`.
    pub fn second_right_adjoint(&self) -> Result<MonotoneMap> {
        if !self.preserves_bottom() {
            return Err(Error::NoAdjoint(format!(
                "{self} does not preserve the bottom element"
            )));
        }
        if self.dom() >= 2 && self.images[1] == 0 {
            return Err(Error::NoAdjoint(format!(
                "{self} sends 1 to 0, so its right adjoint has no right adjoint"
            )));
        }
        let images = (0..self.dom())
            .map(|i| {
                let here = self.images[i];
                let next = self.apply_extended(i + 1);
                if here < next {
                    next - 1
                } else {
                    here - 1
                }
            })
            .collect();
        Ok(MonotoneMap {
            cod: self.cod,
            images,
        })
    }

    /// The unique factorization `φ = δ ∘ σ` with `σ` surjective onto
    /// `ord |im φ|` and `δ` injective.
    pub fn epi_mono_factorize(&self) -> (MonotoneMap, MonotoneMap) {
        let mut image = self.images.clone();
        image.dedup();
        let mut rank = 0;
        let sigma = self
            .images
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                if i > 0 && v != self.images[i - 1] {
                    rank += 1;
                }
                rank
            })
            .collect();
        let k = image.len();
        (
            MonotoneMap {
                cod: k,
                images: sigma,
            },
            MonotoneMap {
                cod: self.cod,
                images: image,
            },
        )
    }

    /// Ordinal sum: `φ` on the first block, `ψ` shifted by `φ.cod` on the
    /// second.
    pub fn ordinal_sum(&self, other: &MonotoneMap) -> MonotoneMap {
        let images = self
            .images
            .iter()
            .copied()
            .chain(other.images.iter().map(|&v| v + self.cod))
            .collect();
        MonotoneMap {
            cod: self.cod + other.cod,
            images,
        }
    }

    /// Every weakly increasing map `ord dom -> ord cod` with `φ(0) = 0`, in
    /// lexicographic order.
    pub fn enumerate_bottom_preserving(dom: usize, cod: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        if dom == 0 || cod == 0 {
            return out;
        }
        let mut current = vec![0; dom];
        fn fill(pos: usize, current: &mut Vec<usize>, cod: usize, out: &mut Vec<MonotoneMap>) {
            if pos == current.len() {
                out.push(MonotoneMap {
                    cod,
                    images: current.clone(),
                });
                return;
            }
            for v in current[pos - 1]..cod {
                current[pos] = v;
                fill(pos + 1, current, cod, out);
            }
        }
        fill(1, &mut current, cod, &mut out);
        out
    }

    /// Order-preserving surjections `ord dom -> ord cod`.
    pub fn enumerate_surjections(dom: usize, cod: usize) -> Vec<MonotoneMap> {
        Self::enumerate_bottom_preserving(dom, cod)
            .into_iter()
            .filter(MonotoneMap::is_surjective)
            .collect()
    }

    /// Bottom-preserving order-preserving injections `ord dom -> ord cod`.
    pub fn enumerate_injections(dom: usize, cod: usize) -> Vec<MonotoneMap> {
        Self::enumerate_bottom_preserving(dom, cod)
            .into_iter()
            .filter(MonotoneMap::is_injective)
            .collect()
    }
}

pub fn compose(g: &MonotoneMap, f: &MonotoneMap) -> Result<MonotoneMap> {
    if f.cod != g.dom() {
        return Err(Error::Dimension(format!(
            "cannot compose {g} after {f}: codomain {} vs domain {}",
            f.cod,
            g.dom()
        )));
    }
    Ok(MonotoneMap {
        cod: g.cod,
        images: f.images.iter().map(|&i| g.images[i]).collect(),
    })
}

/// Pointwise `f(i) <= g(i)` for two endofunctions given as slices.
pub(crate) fn pointwise_le(f: &[usize], g: &[usize]) -> bool {
    f.len() == g.len() && f.iter().zip(g).all(|(a, b)| a <= b)
}

/// Parses comma-separated naturals; surrounding whitespace is ignored.
pub fn parse_list(text: &str) -> Result<Vec<usize>> {
    let mut offset = 0;
    let mut out = Vec::new();
    for piece in text.split(',') {
        let trimmed = piece.trim();
        let value = trimmed.parse::<usize>().map_err(|_| Error::Parse {
            offset,
            message: format!("expected a natural number, found {trimmed:?}"),
        })?;
        out.push(value);
        offset += piece.len() + 1;
    }
    Ok(out)
}

pub(crate) fn format_list(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_list(&self.images))
    }
}
