//! The operads in play at object level: `S` (through Fsk objects graded by
//! `|u|`), the operad `L` of λ-algebras, and the terminal operad `N`
//! (arities). The strict morphisms `P: S -> N`, `Q: S -> L`, `R: L -> N`,
//! the extremal objects of each grade, and the left adjoint `H` of `Q`
//! together with its counit and colax structure maps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fsk::{hom, FskMorphism, FskObject};
use crate::tamari::Lbf;
use crate::word::Word;

/// `ℓ <= t` in each arity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LKind {
    #[serde(rename = "l")]
    Ell,
    T,
}

/// An element of `L_n`: `L_0 = {ℓ}` and `L_n = {ℓ <= t}` for `n > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawL", into = "RawL")]
pub struct LElement {
    arity: usize,
    kind: LKind,
}

#[derive(Serialize, Deserialize)]
struct RawL {
    arity: usize,
    kind: LKind,
}

impl TryFrom<RawL> for LElement {
    type Error = Error;
    fn try_from(raw: RawL) -> Result<Self> {
        LElement::new(raw.arity, raw.kind)
    }
}

impl From<LElement> for RawL {
    fn from(x: LElement) -> Self {
        RawL {
            arity: x.arity,
            kind: x.kind,
        }
    }
}

impl LElement {
    pub fn new(arity: usize, kind: LKind) -> Result<Self> {
        if arity == 0 && kind == LKind::T {
            return Err(Error::Precondition("L_0 has no element t".into()));
        }
        Ok(LElement { arity, kind })
    }

    pub fn ell(arity: usize) -> Self {
        LElement {
            arity,
            kind: LKind::Ell,
        }
    }

    /// Panics for `arity == 0`.
    pub fn t(arity: usize) -> Self {
        assert!(arity > 0, "L_0 has no element t");
        LElement {
            arity,
            kind: LKind::T,
        }
    }

    /// The operad unit `t_1`.
    pub fn unit() -> Self {
        Self::t(1)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn kind(&self) -> LKind {
        self.kind
    }

    /// The order of `L_n`; elements of different arities are incomparable.
    pub fn leq(&self, other: &LElement) -> bool {
        self.arity == other.arity && self.kind <= other.kind
    }

    /// Every element of `L_n`, least first.
    pub fn all(arity: usize) -> Vec<LElement> {
        if arity == 0 {
            vec![Self::ell(0)]
        } else {
            vec![Self::ell(arity), Self::t(arity)]
        }
    }
}

impl fmt::Display for LElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            LKind::Ell => 'l',
            LKind::T => 't',
        };
        write!(f, "{k}{}", self.arity)
    }
}

impl FromStr for LElement {
    type Err = Error;

    /// `t3`, `l0`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |message: &str| Error::Parse {
            offset: 0,
            message: format!("{message} in {s:?}; expected e.g. t3 or l0"),
        };
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('t') => LKind::T,
            Some('l') | Some('ℓ') => LKind::Ell,
            _ => return Err(bad("unknown kind")),
        };
        let arity = chars.as_str().parse().map_err(|_| bad("bad arity"))?;
        LElement::new(arity, kind)
    }
}

/// `x(x_1, .., x_n)`: arity is the sum, kind is `t` iff `x` and `x_1` are.
pub fn l_substitute(x: &LElement, xs: &[LElement]) -> Result<LElement> {
    if xs.len() != x.arity {
        return Err(Error::Arity {
            expected: x.arity,
            found: xs.len(),
        });
    }
    if x.arity == 0 {
        return Ok(*x);
    }
    let arity = xs.iter().map(|y| y.arity).sum();
    let kind = if x.kind == LKind::T && xs[0].kind == LKind::T {
        LKind::T
    } else {
        LKind::Ell
    };
    Ok(LElement { arity, kind })
}

/// `x ∘_i y`, with 1-based `i` and the unit in every other slot.
pub fn l_compose_at(x: &LElement, i: usize, y: &LElement) -> Result<LElement> {
    check_position(i, x.arity)?;
    let mut xs = vec![LElement::unit(); x.arity];
    xs[i - 1] = *y;
    l_substitute(x, &xs)
}

fn check_position(position: usize, arity: usize) -> Result<()> {
    if position == 0 || position > arity {
        return Err(Error::Position { position, arity });
    }
    Ok(())
}

/// `Q(m, u, S)`: `t_|u|` if `0 ∈ u`, else `ℓ_|u|`.
pub fn q_of(o: &FskObject) -> LElement {
    if o.contains(0) {
        LElement::t(o.grade())
    } else {
        LElement::ell(o.grade())
    }
}

pub fn p_of(o: &FskObject) -> usize {
    o.grade()
}

pub fn r_of(x: &LElement) -> usize {
    x.arity
}

/// `g(f_1, .., f_n)` on objects: the `i`-th `X` leaf of `g` is replaced by
/// the word of `f_i`.
pub fn s_substitute_objects(g: &FskObject, fs: &[FskObject]) -> Result<FskObject> {
    let fillers: Vec<Word> = fs.iter().map(FskObject::to_word).collect();
    Ok(FskObject::from_word(&g.to_word().graft(&fillers)?))
}

/// `g ∘_i f` on objects, 1-based.
pub fn s_compose_at(g: &FskObject, i: usize, f: &FskObject) -> Result<FskObject> {
    check_position(i, g.grade())?;
    let mut fs = vec![FskObject::generator(); g.grade()];
    fs[i - 1] = f.clone();
    s_substitute_objects(g, &fs)
}

/// `(m+1, {1..m}, ⊥)`, the word `(((I X) X) .. X)`.
pub fn initial_in_grade(m: usize) -> FskObject {
    FskObject::new(m + 1, (1..=m).collect(), Lbf::bottom(m + 1)).expect("valid")
}

/// `(m+1, {0..m-1}, ⊤)`, the word `(X (X .. (X I)))`.
pub fn terminal_in_grade(m: usize) -> FskObject {
    FskObject::new(m + 1, (0..m).collect(), Lbf::top(m + 1)).expect("valid")
}

/// The left adjoint of `Q` on objects: `H t_m = (m, ord m, ⊥)` and
/// `H ℓ_m` is the initial object of grade `m`.
pub fn h_of(x: &LElement) -> FskObject {
    match x.kind {
        LKind::T => {
            FskObject::new(x.arity, (0..x.arity).collect(), Lbf::bottom(x.arity)).expect("valid")
        }
        LKind::Ell => initial_in_grade(x.arity),
    }
}

fn unique_morphism(src: &FskObject, dst: &FskObject) -> Result<FskMorphism> {
    let mut all = hom(src, dst);
    if all.len() != 1 {
        return Err(Error::Internal(format!(
            "expected exactly one morphism {src} -> {dst}, found {}",
            all.len()
        )));
    }
    Ok(all.pop().unwrap())
}

/// `H` applied to `ℓ_n <= t_n`.
pub fn h_of_lambda(n: usize) -> Result<FskMorphism> {
    if n == 0 {
        return Err(Error::Precondition("L_0 has a single element".into()));
    }
    unique_morphism(&h_of(&LElement::ell(n)), &h_of(&LElement::t(n)))
}

/// The counit `H Q a -> a`; unique, and always an Fsk-injection.
pub fn counit_at(a: &FskObject) -> Result<FskMorphism> {
    let f = unique_morphism(&h_of(&q_of(a)), a)?;
    if !f.classify().is_fsk_injection {
        return Err(Error::Internal(format!(
            "counit {f} is not an Fsk-injection"
        )));
    }
    Ok(f)
}

/// The colax structure map `H(x ∘_i y) -> H(x) ∘_i H(y)`.
///
/// The unit of `H ⊣ Q` is the identity, so this is the counit at
/// `H(x) ∘_i H(y)`.
pub fn h_colax(x: &LElement, i: usize, y: &LElement) -> Result<FskMorphism> {
    check_position(i, x.arity)?;
    let source = h_of(&l_compose_at(x, i, y)?);
    let target = s_compose_at(&h_of(x), i, &h_of(y))?;
    let f = counit_at(&target)?;
    if f.src() != &source {
        return Err(Error::Internal(format!(
            "counit at {target} starts at {}, not at {source}",
            f.src()
        )));
    }
    Ok(f)
}
