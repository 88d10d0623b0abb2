//! Braid words for purely multiplicative morphisms on a single atom.
//!
//! A word built from `⊗`, `α⊗`, `γ⊗`, identities, inverses and composition
//! over one atom `x` is a braid on `n` strands, where `n` is the number of
//! `x` factors in its source. Two such words are equal in every braided
//! monoidal category exactly when their braids are equal, and braid
//! equality is decided here by the Artin action on the free group.

use std::fmt;

use thiserror::Error;

use crate::diagram::{Diagram, Orientation};
use crate::expr::{MorphExpr, ObjectExpr};

/// `σ_index` (1-based) or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub index: usize,
    pub positive: bool,
}

impl Crossing {
    pub fn sigma(index: usize) -> Self {
        Self {
            index,
            positive: true,
        }
    }

    pub fn sigma_inv(index: usize) -> Self {
        Self {
            index,
            positive: false,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            index: self.index,
            positive: !self.positive,
        }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index)?;
        if !self.positive {
            f.write_str("'")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub crossings: Vec<Crossing>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            crossings: Vec::new(),
        }
    }

    pub fn new(strands: usize, crossings: Vec<Crossing>) -> Result<Self, BraidError> {
        if let Some(c) = crossings
            .iter()
            .find(|c| c.index == 0 || c.index >= strands)
        {
            return Err(BraidError::CrossingOutOfRange {
                index: c.index,
                strands,
            });
        }
        Ok(Self { strands, crossings })
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            crossings: self.crossings.iter().rev().map(|c| c.inverse()).collect(),
        }
    }

    /// First this braid, then `other`.
    pub fn then(&self, other: &BraidWord) -> Result<Self, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut crossings = self.crossings.clone();
        crossings.extend_from_slice(&other.crossings);
        Ok(Self {
            strands: self.strands,
            crossings,
        })
    }

    /// Images of the free generators `x_1 … x_n` under the Artin action.
    pub fn artin_images(&self) -> Vec<FreeWord> {
        let mut images: Vec<FreeWord> = (1..=self.strands).map(FreeWord::generator).collect();
        for c in &self.crossings {
            let i = c.index - 1;
            let (left, right) = (images[i].clone(), images[i + 1].clone());
            if c.positive {
                images[i] = left.concat(&right).concat(&left.inverse());
                images[i + 1] = left;
            } else {
                images[i] = right.clone();
                images[i + 1] = right.inverse().concat(&left).concat(&right);
            }
        }
        images
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self.crossings.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A freely reduced word in the free group on `x_1, x_2, …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<(usize, bool)>);

impl FreeWord {
    pub fn generator(g: usize) -> Self {
        Self(vec![(g, false)])
    }

    /// `(generator, inverted)` letters.
    pub fn letters(&self) -> &[(usize, bool)] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|&(g, inv)| (g, !inv)).collect())
    }

    /// Reduced product.
    pub fn concat(&self, other: &FreeWord) -> Self {
        let mut out = self.0.clone();
        for &(g, inv) in &other.0 {
            match out.last() {
                Some(&(h, hinv)) if h == g && hinv != inv => {
                    out.pop();
                }
                _ => out.push((g, inv)),
            }
        }
        Self(out)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (g, inv) in &self.0 {
            write!(f, "x{g}")?;
            if *inv {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("braids on {left} and {right} strands cannot be compared or composed")]
    StrandMismatch { left: usize, right: usize },
    #[error("crossing s{index} does not exist on {strands} strands")]
    CrossingOutOfRange { index: usize, strands: usize },
    #[error("`{0}` is outside the multiplicative fragment")]
    UnsupportedNode(String),
    #[error("atom `{found}` where only `{expected}` may appear")]
    ForeignAtom { expected: String, found: String },
    #[error("composite of {left} and {right} strands")]
    IllTyped { left: usize, right: usize },
}

/// Equality of braids: same strand count and same Artin action.
pub fn braid_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool, BraidError> {
    if w1.strands != w2.strands {
        return Err(BraidError::StrandMismatch {
            left: w1.strands,
            right: w2.strands,
        });
    }
    Ok(w1.artin_images() == w2.artin_images())
}

/// Number of `x` factors in an object built from `x` and `⊗` only.
pub fn strand_count(o: &ObjectExpr, x: &str) -> Result<usize, BraidError> {
    match o {
        ObjectExpr::Atom(name) if name == x => Ok(1),
        ObjectExpr::Atom(name) => Err(BraidError::ForeignAtom {
            expected: x.to_string(),
            found: name.clone(),
        }),
        ObjectExpr::Prod(l, r) => Ok(strand_count(l, x)? + strand_count(r, x)?),
        other => Err(BraidError::UnsupportedNode(other.to_string())),
    }
}

/// `x^{⊗a}`, bracketed to the left.
pub fn tensor_power(x: &ObjectExpr, a: usize) -> ObjectExpr {
    assert!(a >= 1, "tensor power needs at least one factor");
    (1..a).fold(x.clone(), |acc, _| acc.times(x))
}

/// The braid of a multiplicative word over the single atom `x`.
pub fn strict_image(m: &MorphExpr, x: &str) -> Result<BraidWord, BraidError> {
    let (n, crossings) = image_at(m, x, 0)?;
    Ok(BraidWord {
        strands: n,
        crossings,
    })
}

/// Returns the strand count of `m` and its crossings, shifted by `offset`.
fn image_at(m: &MorphExpr, x: &str, offset: usize) -> Result<(usize, Vec<Crossing>), BraidError> {
    match m {
        MorphExpr::Id(o) => Ok((strand_count(o, x)?, Vec::new())),
        MorphExpr::AlphaTimes(a, b, c) => Ok((
            strand_count(a, x)? + strand_count(b, x)? + strand_count(c, x)?,
            Vec::new(),
        )),
        MorphExpr::GammaTimes(a, b) => {
            let (p, q) = (strand_count(a, x)?, strand_count(b, x)?);
            // Each strand of the left block crosses over the whole right
            // block, starting with the last one.
            let mut cs = Vec::with_capacity(p * q);
            for i in (1..=p).rev() {
                for j in 0..q {
                    cs.push(Crossing::sigma(offset + i + j));
                }
            }
            Ok((p + q, cs))
        }
        MorphExpr::Inv(f) => {
            let (n, cs) = image_at(f, x, offset)?;
            Ok((n, cs.into_iter().rev().map(Crossing::inverse).collect()))
        }
        MorphExpr::Comp(f, g) => {
            let (nf, mut cf) = image_at(f, x, offset)?;
            let (ng, cg) = image_at(g, x, offset)?;
            if nf != ng {
                return Err(BraidError::IllTyped {
                    left: nf,
                    right: ng,
                });
            }
            cf.extend(cg);
            Ok((nf, cf))
        }
        MorphExpr::ProdM(f, g) => {
            let (nf, mut cf) = image_at(f, x, offset)?;
            let (ng, cg) = image_at(g, x, offset + nf)?;
            cf.extend(cg);
            Ok((nf + ng, cf))
        }
        other => Err(BraidError::UnsupportedNode(other.to_string())),
    }
}

/// Whether the loop of a multiplicative diagram over `x` is the trivial
/// braid, i.e. the diagram commutes in every braided monoidal category.
pub fn loop_is_trivial(d: &Diagram, x: &str) -> Result<bool, BraidError> {
    let word = d
        .loop_morphism(0, Orientation::Clockwise)
        .expect("vertex 0 always exists");
    let b = strict_image(&word, x)?;
    braid_equal(&b, &BraidWord::identity(b.strands))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::beta;

    fn w(n: usize, cs: &[i64]) -> BraidWord {
        BraidWord::new(
            n,
            cs.iter()
                .map(|&c| Crossing {
                    index: c.unsigned_abs() as usize,
                    positive: c > 0,
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn braid_relation() {
        assert!(braid_equal(&w(3, &[1, 2, 1]), &w(3, &[2, 1, 2])).unwrap());
        assert!(!braid_equal(&w(3, &[1, 2]), &w(3, &[2, 1])).unwrap());
    }

    #[test]
    fn far_commutation() {
        assert!(braid_equal(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
    }

    #[test]
    fn full_twist_is_not_trivial() {
        assert!(!braid_equal(&w(2, &[1, 1]), &BraidWord::identity(2)).unwrap());
        assert!(braid_equal(&w(2, &[1, -1]), &BraidWord::identity(2)).unwrap());
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        assert!(matches!(
            braid_equal(&w(2, &[]), &w(3, &[])),
            Err(BraidError::StrandMismatch { .. })
        ));
        assert!(BraidWord::new(2, vec![Crossing::sigma(2)]).is_err());
    }

    #[test]
    fn gamma_images() {
        let x = ObjectExpr::atom("x");
        let xx = x.times(&x);
        let g = |a: &ObjectExpr, b: &ObjectExpr| MorphExpr::GammaTimes(a.clone(), b.clone());
        assert_eq!(strict_image(&g(&x, &xx), "x").unwrap(), w(3, &[1, 2]));
        assert_eq!(strict_image(&g(&xx, &x), "x").unwrap(), w(3, &[2, 1]));
        assert_eq!(strict_image(&beta(&x, &x), "x").unwrap(), w(2, &[1, 1]));
        let shifted = MorphExpr::prod(MorphExpr::id(x.clone()), MorphExpr::inv(g(&x, &x)));
        assert_eq!(strict_image(&shifted, "x").unwrap(), w(3, &[-2]));
    }

    #[test]
    fn rejects_additive_structure() {
        let x = ObjectExpr::atom("x");
        assert!(matches!(
            strict_image(&MorphExpr::GammaPlus(x.clone(), x), "x"),
            Err(BraidError::UnsupportedNode(_))
        ));
        assert!(matches!(
            strict_image(&MorphExpr::id(ObjectExpr::atom("y")), "x"),
            Err(BraidError::ForeignAtom { .. })
        ));
    }

    #[test]
    fn free_reduction() {
        let a = FreeWord::generator(1);
        assert_eq!(a.concat(&a.inverse()), FreeWord::default());
        assert_eq!(a.to_string(), "x1");
    }

    #[test]
    fn tensor_powers() {
        let x = ObjectExpr::atom("x");
        assert_eq!(strand_count(&tensor_power(&x, 3), "x").unwrap(), 3);
    }
}
