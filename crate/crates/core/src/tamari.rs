//! Left and right bracketing functions and the Tamari lattice `Tam_m`.
//!
//! An element of `Tam_m` is a binary bracketing of `m` letters
//! `x0 .. x(m-1)`. It is stored as its left bracketing function (lbf); the
//! right bracketing function (rbf) is derived on demand.
//!
//! Tree convention: for every internal node, let `c` be the leftmost leaf of
//! its right child. Then `ℓ(c-1)` is the leftmost leaf of the node and
//! `r(c)` is its rightmost leaf. The remaining entries are fixed,
//! `ℓ(m-1) = m-1` and `r(0) = 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ordmaps::{format_list, parse_list, pointwise_le, MonotoneMap};

/// Checks the three lbf conditions.
pub fn validate_lbf(values: &[usize]) -> bool {
    let m = values.len();
    if m == 0 || values[m - 1] != m - 1 {
        return false;
    }
    values
        .iter()
        .enumerate()
        .all(|(j, &lj)| lj <= j && (lj..j).all(|i| lj <= values[i]))
}

/// Checks the rbf conditions (the lbf conditions read in `ord m^op`).
pub fn validate_rbf(values: &[usize]) -> bool {
    let m = values.len();
    if m == 0 || values[0] != 0 {
        return false;
    }
    values
        .iter()
        .enumerate()
        .all(|(j, &rj)| rj >= j && rj < m && (j + 1..=rj).all(|i| values[i] <= rj))
}

/// A left bracketing function on `ord m`, identified with the element of
/// `Tam_m` it encodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Lbf(Vec<usize>);

/// A right bracketing function on `ord m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Rbf(Vec<usize>);

impl TryFrom<Vec<usize>> for Lbf {
    type Error = Error;
    fn try_from(values: Vec<usize>) -> Result<Self> {
        Lbf::new(values)
    }
}

impl From<Lbf> for Vec<usize> {
    fn from(l: Lbf) -> Self {
        l.0
    }
}

impl TryFrom<Vec<usize>> for Rbf {
    type Error = Error;
    fn try_from(values: Vec<usize>) -> Result<Self> {
        Rbf::new(values)
    }
}

impl From<Rbf> for Vec<usize> {
    fn from(r: Rbf) -> Self {
        r.0
    }
}

impl Lbf {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if validate_lbf(&values) {
            Ok(Lbf(values))
        } else {
            Err(Error::InvalidLbf(values))
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_list(text)?)
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, j: usize) -> usize {
        self.0[j]
    }

    /// Left bracketing `((x0 x1) x2) ..`: the least element.
    pub fn bottom(m: usize) -> Self {
        assert!(m >= 1);
        let mut values = vec![0; m];
        values[m - 1] = m - 1;
        Lbf(values)
    }

    /// Right bracketing `x0 (x1 (x2 ..))`: the greatest element.
    pub fn top(m: usize) -> Self {
        assert!(m >= 1);
        Lbf((0..m).collect())
    }

    /// `r(0) = 0` and `r(i) = min{j : ℓ(j) < i <= j}`, or `m-1` when that
    /// set is empty.
    pub fn to_rbf(&self) -> Rbf {
        let m = self.m();
        let values = (0..m)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    (i..m).find(|&j| self.0[j] < i).unwrap_or(m - 1)
                }
            })
            .collect();
        Rbf(values)
    }

    pub fn leq(&self, other: &Lbf) -> Result<bool> {
        same_size(self, other)?;
        Ok(pointwise_le(&self.0, &other.0))
    }

    /// Pointwise maximum.
    pub fn join(&self, other: &Lbf) -> Result<Lbf> {
        same_size(self, other)?;
        let values: Vec<usize> = self
            .0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| *a.max(b))
            .collect();
        debug_assert!(validate_lbf(&values));
        Ok(Lbf(values))
    }

    /// The join of every common lower bound.
    pub fn meet(&self, other: &Lbf) -> Result<Lbf> {
        same_size(self, other)?;
        let mut acc = Lbf::bottom(self.m());
        for candidate in enumerate_tamari(self.m()) {
            if pointwise_le(&candidate.0, &self.0) && pointwise_le(&candidate.0, &other.0) {
                acc = acc.join(&candidate)?;
            }
        }
        Ok(acc)
    }

    pub fn to_tree(&self) -> BracketTree {
        fn build(l: &[usize], lo: usize, hi: usize) -> BracketTree {
            if lo == hi {
                return BracketTree::Leaf;
            }
            // Outermost node on the left spine starting at `lo`.
            let c = (lo + 1..=hi)
                .rev()
                .find(|&c| l[c - 1] == lo)
                .expect("valid lbf always splits");
            BracketTree::node(build(l, lo, c - 1), build(l, c, hi))
        }
        build(&self.0, 0, self.m() - 1)
    }
}

impl Rbf {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if validate_rbf(&values) {
            Ok(Rbf(values))
        } else {
            Err(Error::InvalidRbf(values))
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(parse_list(text)?)
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, j: usize) -> usize {
        self.0[j]
    }

    /// Inverse of [`Lbf::to_rbf`], via the mirror image: the reflected rbf
    /// is an lbf of the mirrored tree.
    pub fn to_lbf(&self) -> Result<Lbf> {
        let mirrored = Lbf::new(reflect(&self.0)).map_err(|_| Error::InvalidRbf(self.0.clone()))?;
        let lbf = mirrored.to_tree().mirror().to_lbf();
        if lbf.to_rbf() != *self {
            return Err(Error::InvalidRbf(self.0.clone()));
        }
        Ok(lbf)
    }
}

fn reflect(values: &[usize]) -> Vec<usize> {
    let top = values.len() - 1;
    (0..=top).map(|j| top - values[top - j]).collect()
}

fn same_size(a: &Lbf, b: &Lbf) -> Result<()> {
    if a.m() != b.m() {
        return Err(Error::Dimension(format!(
            "Tamari elements on ord {} and ord {}",
            a.m(),
            b.m()
        )));
    }
    Ok(())
}

/// All of `Tam_m` in lexicographic order of the lbf values.
pub fn enumerate_tamari(m: usize) -> Vec<Lbf> {
    assert!(m >= 1);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    fn extend(current: &mut Vec<usize>, m: usize, out: &mut Vec<Lbf>) {
        let j = current.len();
        if j == m {
            out.push(Lbf(current.clone()));
            return;
        }
        let choices = if j == m - 1 { j..=j } else { 0..=j };
        for v in choices {
            if (v..j).all(|i| v <= current[i]) {
                current.push(v);
                extend(current, m, out);
                current.pop();
            }
        }
    }
    extend(&mut current, m, &mut out);
    out
}

/// An unlabeled binary bracketing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BracketTree {
    Leaf,
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn node(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            BracketTree::Leaf => 1,
            BracketTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn mirror(&self) -> BracketTree {
        match self {
            BracketTree::Leaf => BracketTree::Leaf,
            BracketTree::Node(l, r) => BracketTree::node(r.mirror(), l.mirror()),
        }
    }

    pub fn to_lbf(&self) -> Lbf {
        fn walk(t: &BracketTree, start: usize, l: &mut [usize]) -> usize {
            match t {
                BracketTree::Leaf => 1,
                BracketTree::Node(left, right) => {
                    let nl = walk(left, start, l);
                    let c = start + nl;
                    l[c - 1] = start;
                    nl + walk(right, c, l)
                }
            }
        }
        let m = self.leaves();
        let mut values = vec![0; m];
        walk(self, 0, &mut values);
        values[m - 1] = m - 1;
        debug_assert!(validate_lbf(&values));
        Lbf(values)
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &BracketTree, next: &mut usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match t {
                BracketTree::Leaf => {
                    write!(f, "x{next}")?;
                    *next += 1;
                    Ok(())
                }
                BracketTree::Node(l, r) => {
                    write!(f, "(")?;
                    go(l, next, f)?;
                    go(r, next, f)?;
                    write!(f, ")")
                }
            }
        }
        go(self, &mut 0, f)
    }
}

impl FromStr for Lbf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl FromStr for Rbf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for Lbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_list(&self.0))
    }
}

impl fmt::Display for Rbf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_list(&self.0))
    }
}

fn require_surjection(sigma: &MonotoneMap) -> Result<()> {
    if !sigma.is_surjective() {
        return Err(Error::Precondition(format!("{sigma} is not a surjection")));
    }
    Ok(())
}

fn require_bottom_injection(delta: &MonotoneMap) -> Result<()> {
    if !delta.is_injective() || !delta.preserves_bottom() {
        return Err(Error::Precondition(format!(
            "{delta} is not a bottom-preserving injection"
        )));
    }
    Ok(())
}

/// `ℓ^σ`: `σ*ℓσ(j)` where `j = σ*σ(j)`, and `j` elsewhere.
pub fn base_change_surj(sigma: &MonotoneMap, l: &Lbf) -> Result<Lbf> {
    require_surjection(sigma)?;
    if l.m() != sigma.cod() {
        return Err(Error::Dimension(format!(
            "lbf on ord {} but surjection onto ord {}",
            l.m(),
            sigma.cod()
        )));
    }
    let star = sigma.right_adjoint()?;
    let values = (0..sigma.dom())
        .map(|j| {
            let s = sigma.apply(j);
            if star.apply(s) == j {
                star.apply(l.get(s))
            } else {
                j
            }
        })
        .collect();
    Lbf::new(values).map_err(|e| Error::Internal(format!("ℓ^σ is not an lbf: {e}")))
}

/// `r^δ`: `δrδ*(j)` where `j = δδ*(j)`, and `j` elsewhere.
pub fn base_change_inj(delta: &MonotoneMap, r: &Rbf) -> Result<Rbf> {
    require_bottom_injection(delta)?;
    if r.m() != delta.dom() {
        return Err(Error::Dimension(format!(
            "rbf on ord {} but injection from ord {}",
            r.m(),
            delta.dom()
        )));
    }
    let star = delta.right_adjoint()?;
    let values = (0..delta.cod())
        .map(|j| {
            let back = star.apply(j);
            if delta.apply(back) == j {
                delta.apply(r.get(back))
            } else {
                j
            }
        })
        .collect();
    Rbf::new(values).map_err(|e| Error::Internal(format!("r^δ is not an rbf: {e}")))
}

/// `σSσ*`, the pointwise composite `σ ∘ ℓ_S ∘ σ*` on the codomain of `σ`.
pub fn conjugate_surj(sigma: &MonotoneMap, s: &Lbf) -> Result<Lbf> {
    require_surjection(sigma)?;
    if s.m() != sigma.dom() {
        return Err(Error::Dimension(format!(
            "lbf on ord {} but surjection from ord {}",
            s.m(),
            sigma.dom()
        )));
    }
    let star = sigma.right_adjoint()?;
    let values = (0..sigma.cod())
        .map(|i| sigma.apply(s.get(star.apply(i))))
        .collect();
    Lbf::new(values).map_err(|e| Error::Internal(format!("σSσ* is not an lbf: {e}")))
}

/// `δ*Sδ`: the element with rbf `δ* ∘ r_S ∘ δ`.
///
/// The rbf is computed twice: directly, and as the reflection of `σSσ*`
/// where `σ` is `δ*` read as a surjection `ord m^op -> ord n^op` and `S` is
/// replaced by its reflected rbf. The two must agree.
///
/// The lbf is not `δ* ∘ ℓ_S ∘ δ_*` in general: that reading ignores the
/// values of `ℓ_S` strictly inside the gaps of `δ`.
pub fn conjugate_inj(delta: &MonotoneMap, s: &Lbf) -> Result<Lbf> {
    require_bottom_injection(delta)?;
    if s.m() != delta.cod() {
        return Err(Error::Dimension(format!(
            "lbf on ord {} but injection into ord {}",
            s.m(),
            delta.cod()
        )));
    }
    let (m, n) = (delta.cod(), delta.dom());
    let star = delta.right_adjoint()?;
    let r_s = s.to_rbf();
    let direct: Vec<usize> = (0..n)
        .map(|j| star.apply(r_s.get(delta.apply(j))))
        .collect();

    let op_sigma = MonotoneMap::new((0..m).map(|j| (n - 1) - star.apply(m - 1 - j)).collect(), n)?;
    let op_s = Lbf::new(reflect(r_s.values()))
        .map_err(|e| Error::Internal(format!("reflected rbf is not an lbf: {e}")))?;
    let dual = reflect(conjugate_surj(&op_sigma, &op_s)?.values());
    if direct != dual {
        return Err(Error::Internal(format!(
            "δ*Sδ disagrees: rbf route gives {}, dual route gives {}",
            format_list(&direct),
            format_list(&dual)
        )));
    }
    Rbf::new(direct)
        .and_then(|r| r.to_lbf())
        .map_err(|e| Error::Internal(format!("δ*r_Sδ is not an rbf: {e}")))
}
