use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tamari::{enumerate_tamari, Lbf};
use crate::word::Word;

/// An object `(ord m, u, S)` of the free skew monoidal category: `m` leaves,
/// the generator `X` at the positions in `u` and the unit `I` elsewhere,
/// bracketed according to `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawObject", into = "RawObject")]
pub struct FskObject {
    m: usize,
    u: Vec<usize>,
    s: Lbf,
}

#[derive(Serialize, Deserialize)]
struct RawObject {
    m: usize,
    u: Vec<usize>,
    s: Lbf,
}

impl TryFrom<RawObject> for FskObject {
    type Error = Error;
    fn try_from(raw: RawObject) -> Result<Self> {
        FskObject::new(raw.m, raw.u, raw.s)
    }
}

impl From<FskObject> for RawObject {
    fn from(o: FskObject) -> Self {
        RawObject {
            m: o.m,
            u: o.u,
            s: o.s,
        }
    }
}

impl FskObject {
    pub fn new(m: usize, u: Vec<usize>, s: Lbf) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidObject("ordinals are non-empty".into()));
        }
        if s.m() != m {
            return Err(Error::InvalidObject(format!(
                "bracketing on ord {} for an object on ord {m}",
                s.m()
            )));
        }
        if u.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidObject(format!(
                "generator positions {u:?} must be strictly increasing"
            )));
        }
        if u.last().is_some_and(|&x| x >= m) {
            return Err(Error::InvalidObject(format!(
                "generator positions {u:?} out of range for ord {m}"
            )));
        }
        Ok(FskObject { m, u, s })
    }

    /// The generator `X = (ord 1, {0}, ⊥)`.
    pub fn generator() -> Self {
        FskObject {
            m: 1,
            u: vec![0],
            s: Lbf::bottom(1),
        }
    }

    /// The unit `I = (ord 1, ∅, ⊥)`.
    pub fn unit() -> Self {
        FskObject {
            m: 1,
            u: vec![],
            s: Lbf::bottom(1),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn u(&self) -> &[usize] {
        &self.u
    }

    pub fn s(&self) -> &Lbf {
        &self.s
    }

    /// The number of generator occurrences `|u|`.
    pub fn grade(&self) -> usize {
        self.u.len()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.u.binary_search(&j).is_ok()
    }

    pub fn with_bracketing(&self, s: Lbf) -> Result<Self> {
        FskObject::new(self.m, self.u.clone(), s)
    }

    pub fn from_word(word: &Word) -> Self {
        let labels = word.labels();
        let u = labels
            .iter()
            .enumerate()
            .filter_map(|(i, &x)| x.then_some(i))
            .collect();
        FskObject {
            m: labels.len(),
            u,
            s: word.shape().to_lbf(),
        }
    }

    pub fn to_word(&self) -> Word {
        let labels: Vec<bool> = (0..self.m).map(|j| self.contains(j)).collect();
        Word::from_shape(&self.s.to_tree(), &labels)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::from_word(&text.parse()?))
    }

    /// `a ⊗ b`: the two words paired under a new root.
    pub fn tensor(&self, other: &FskObject) -> FskObject {
        FskObject::from_word(&Word::pair(self.to_word(), other.to_word()))
    }

    /// Every object on `ord m`: all subsets times all of `Tam_m`.
    pub fn enumerate(m: usize) -> Vec<FskObject> {
        let tam = enumerate_tamari(m);
        let mut out = Vec::with_capacity(tam.len() << m);
        for mask in 0u32..(1 << m) {
            let u: Vec<usize> = (0..m).filter(|&j| mask & (1 << j) != 0).collect();
            for s in &tam {
                out.push(FskObject {
                    m,
                    u: u.clone(),
                    s: s.clone(),
                });
            }
        }
        out
    }
}

impl FromStr for FskObject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for FskObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}
