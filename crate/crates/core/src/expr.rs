//! Formal objects and structural morphisms.
//!
//! Objects are terms over atoms, `0`, `1`, `⊕` and `⊗`. Morphisms are words
//! built from identities, the ten primitive isomorphism families, inverses,
//! composition, and the two bifunctors applied to morphisms. Composition is
//! written left to right: `Comp(f, g)` means "first `f`, then `g`".
//!
//! Equality of objects is purely structural. `(A⊕B)⊕C` and `A⊕(B⊕C)` are
//! different objects, exactly as they are different vertices of a diagram.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectExpr {
    Zero,
    One,
    Atom(String),
    Sum(Box<ObjectExpr>, Box<ObjectExpr>),
    Prod(Box<ObjectExpr>, Box<ObjectExpr>),
}

impl ObjectExpr {
    pub fn atom(name: impl Into<String>) -> Self {
        ObjectExpr::Atom(name.into())
    }

    pub fn sum(left: ObjectExpr, right: ObjectExpr) -> Self {
        ObjectExpr::Sum(Box::new(left), Box::new(right))
    }

    pub fn prod(left: ObjectExpr, right: ObjectExpr) -> Self {
        ObjectExpr::Prod(Box::new(left), Box::new(right))
    }

    /// `self ⊕ other`, cloning both operands.
    pub fn plus(&self, other: &ObjectExpr) -> Self {
        ObjectExpr::sum(self.clone(), other.clone())
    }

    /// `self ⊗ other`, cloning both operands.
    pub fn times(&self, other: &ObjectExpr) -> Self {
        ObjectExpr::prod(self.clone(), other.clone())
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            ObjectExpr::Zero | ObjectExpr::One => {}
            ObjectExpr::Atom(name) => {
                out.insert(name.clone());
            }
            ObjectExpr::Sum(l, r) | ObjectExpr::Prod(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            ObjectExpr::Sum(..) => 1,
            ObjectExpr::Prod(..) => 2,
            _ => 3,
        }
    }
}

/// Prints in the text syntax accepted by the CLI parser: `+` for `⊕`, `*`
/// for `⊗`, `*` binding tighter. A nested operand of the same operator is
/// always parenthesized so that the bracketing stays visible.
impl fmt::Display for ObjectExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(f: &mut fmt::Formatter<'_>, o: &ObjectExpr, min: u8) -> fmt::Result {
            if o.precedence() <= min {
                write!(f, "({o})")
            } else {
                write!(f, "{o}")
            }
        }
        match self {
            ObjectExpr::Zero => f.write_str("0"),
            ObjectExpr::One => f.write_str("1"),
            ObjectExpr::Atom(name) => f.write_str(name),
            ObjectExpr::Sum(l, r) => {
                operand(f, l, 1)?;
                f.write_str("+")?;
                operand(f, r, 1)
            }
            ObjectExpr::Prod(l, r) => {
                operand(f, l, 2)?;
                f.write_str("*")?;
                operand(f, r, 2)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MorphExpr {
    Id(ObjectExpr),
    /// `(A⊕B)⊕C → A⊕(B⊕C)`
    AlphaPlus(ObjectExpr, ObjectExpr, ObjectExpr),
    /// `0⊕A → A`
    LambdaPlus(ObjectExpr),
    /// `A⊕0 → A`
    RhoPlus(ObjectExpr),
    /// `A⊕B → B⊕A`
    GammaPlus(ObjectExpr, ObjectExpr),
    /// `(A⊗B)⊗C → A⊗(B⊗C)`
    AlphaTimes(ObjectExpr, ObjectExpr, ObjectExpr),
    /// `1⊗A → A`
    LambdaTimes(ObjectExpr),
    /// `A⊗1 → A`
    RhoTimes(ObjectExpr),
    /// `A⊗B → B⊗A`
    GammaTimes(ObjectExpr, ObjectExpr),
    /// `A⊗(B⊕C) → (A⊗B)⊕(A⊗C)`
    Delta(ObjectExpr, ObjectExpr, ObjectExpr),
    /// `A⊗0 → 0`
    Epsilon(ObjectExpr),
    Inv(Box<MorphExpr>),
    /// First `.0`, then `.1`.
    Comp(Box<MorphExpr>, Box<MorphExpr>),
    SumM(Box<MorphExpr>, Box<MorphExpr>),
    ProdM(Box<MorphExpr>, Box<MorphExpr>),
}

/// One step from a node to a child in a [`MorphExpr`] tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathStep {
    Inverse,
    First,
    Then,
    Left,
    Right,
}

impl fmt::Display for PathStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathStep::Inverse => "inv",
            PathStep::First => "first",
            PathStep::Then => "then",
            PathStep::Left => "left",
            PathStep::Right => "right",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NodePath(pub Vec<PathStep>);

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root")?;
        for step in &self.0 {
            write!(f, ".{step}")?;
        }
        Ok(())
    }
}

/// A composite whose first factor ends somewhere other than where the
/// second factor starts.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("type mismatch at {path}: `{found}` vs `{expected}` (codomain of first factor vs domain of second)")]
pub struct TypeError {
    pub path: NodePath,
    /// Domain of the second factor.
    pub expected: ObjectExpr,
    /// Codomain of the first factor.
    pub found: ObjectExpr,
}

impl MorphExpr {
    pub fn id(o: ObjectExpr) -> Self {
        MorphExpr::Id(o)
    }

    pub fn inv(m: MorphExpr) -> Self {
        MorphExpr::Inv(Box::new(m))
    }

    /// Unchecked composite, first `first` and then `then`.
    pub fn comp(first: MorphExpr, then: MorphExpr) -> Self {
        MorphExpr::Comp(Box::new(first), Box::new(then))
    }

    pub fn sum(f: MorphExpr, g: MorphExpr) -> Self {
        MorphExpr::SumM(Box::new(f), Box::new(g))
    }

    pub fn prod(f: MorphExpr, g: MorphExpr) -> Self {
        MorphExpr::ProdM(Box::new(f), Box::new(g))
    }

    /// Source and target, checking every composite on the way.
    pub fn typecheck(&self) -> Result<(ObjectExpr, ObjectExpr), TypeError> {
        let mut path = Vec::new();
        self.boundary(&mut path)
    }

    pub fn dom(&self) -> Result<ObjectExpr, TypeError> {
        self.typecheck().map(|(d, _)| d)
    }

    pub fn cod(&self) -> Result<ObjectExpr, TypeError> {
        self.typecheck().map(|(_, c)| c)
    }

    fn boundary(&self, path: &mut Vec<PathStep>) -> Result<(ObjectExpr, ObjectExpr), TypeError> {
        use ObjectExpr as O;
        let pair = match self {
            MorphExpr::Id(a) => (a.clone(), a.clone()),
            MorphExpr::AlphaPlus(a, b, c) => (a.plus(b).plus(c), a.plus(&b.plus(c))),
            MorphExpr::LambdaPlus(a) => (O::Zero.plus(a), a.clone()),
            MorphExpr::RhoPlus(a) => (a.plus(&O::Zero), a.clone()),
            MorphExpr::GammaPlus(a, b) => (a.plus(b), b.plus(a)),
            MorphExpr::AlphaTimes(a, b, c) => (a.times(b).times(c), a.times(&b.times(c))),
            MorphExpr::LambdaTimes(a) => (O::One.times(a), a.clone()),
            MorphExpr::RhoTimes(a) => (a.times(&O::One), a.clone()),
            MorphExpr::GammaTimes(a, b) => (a.times(b), b.times(a)),
            MorphExpr::Delta(a, b, c) => (a.times(&b.plus(c)), a.times(b).plus(&a.times(c))),
            MorphExpr::Epsilon(a) => (a.times(&O::Zero), O::Zero),
            MorphExpr::Inv(m) => {
                path.push(PathStep::Inverse);
                let (d, c) = m.boundary(path)?;
                path.pop();
                (c, d)
            }
            MorphExpr::Comp(f, g) => {
                path.push(PathStep::First);
                let (fd, fc) = f.boundary(path)?;
                path.pop();
                path.push(PathStep::Then);
                let (gd, gc) = g.boundary(path)?;
                path.pop();
                if fc != gd {
                    return Err(TypeError {
                        path: NodePath(path.clone()),
                        expected: gd,
                        found: fc,
                    });
                }
                (fd, gc)
            }
            MorphExpr::SumM(f, g) | MorphExpr::ProdM(f, g) => {
                path.push(PathStep::Left);
                let (fd, fc) = f.boundary(path)?;
                path.pop();
                path.push(PathStep::Right);
                let (gd, gc) = g.boundary(path)?;
                path.pop();
                if matches!(self, MorphExpr::SumM(..)) {
                    (O::sum(fd, gd), O::sum(fc, gc))
                } else {
                    (O::prod(fd, gd), O::prod(fc, gc))
                }
            }
        };
        Ok(pair)
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        let mut objects = |os: &[&ObjectExpr]| {
            for o in os {
                o.collect_atoms(out);
            }
        };
        match self {
            MorphExpr::Id(a)
            | MorphExpr::LambdaPlus(a)
            | MorphExpr::RhoPlus(a)
            | MorphExpr::LambdaTimes(a)
            | MorphExpr::RhoTimes(a)
            | MorphExpr::Epsilon(a) => objects(&[a]),
            MorphExpr::GammaPlus(a, b) | MorphExpr::GammaTimes(a, b) => objects(&[a, b]),
            MorphExpr::AlphaPlus(a, b, c)
            | MorphExpr::AlphaTimes(a, b, c)
            | MorphExpr::Delta(a, b, c) => objects(&[a, b, c]),
            MorphExpr::Inv(m) => m.collect_atoms(out),
            MorphExpr::Comp(f, g) | MorphExpr::SumM(f, g) | MorphExpr::ProdM(f, g) => {
                f.collect_atoms(out);
                g.collect_atoms(out);
            }
        }
    }

    /// Number of nodes in the word.
    pub fn size(&self) -> usize {
        match self {
            MorphExpr::Inv(m) => 1 + m.size(),
            MorphExpr::Comp(f, g) | MorphExpr::SumM(f, g) | MorphExpr::ProdM(f, g) => {
                1 + f.size() + g.size()
            }
            _ => 1,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            MorphExpr::Comp(..) => 1,
            MorphExpr::SumM(..) => 2,
            MorphExpr::ProdM(..) => 3,
            _ => 4,
        }
    }
}

/// Text syntax: primitives as `gT(A,B)` and friends, `;` for left-to-right
/// composition, `(+)` and `(x)` for the bifunctors on morphisms. Chains of
/// composites nested to the right print flat.
impl fmt::Display for MorphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(f: &mut fmt::Formatter<'_>, m: &MorphExpr, parens: bool) -> fmt::Result {
            if parens {
                write!(f, "({m})")
            } else {
                write!(f, "{m}")
            }
        }
        match self {
            MorphExpr::Id(a) => write!(f, "id({a})"),
            MorphExpr::AlphaPlus(a, b, c) => write!(f, "aP({a},{b},{c})"),
            MorphExpr::LambdaPlus(a) => write!(f, "lP({a})"),
            MorphExpr::RhoPlus(a) => write!(f, "rP({a})"),
            MorphExpr::GammaPlus(a, b) => write!(f, "gP({a},{b})"),
            MorphExpr::AlphaTimes(a, b, c) => write!(f, "aT({a},{b},{c})"),
            MorphExpr::LambdaTimes(a) => write!(f, "lT({a})"),
            MorphExpr::RhoTimes(a) => write!(f, "rT({a})"),
            MorphExpr::GammaTimes(a, b) => write!(f, "gT({a},{b})"),
            MorphExpr::Delta(a, b, c) => write!(f, "delta({a},{b},{c})"),
            MorphExpr::Epsilon(a) => write!(f, "eps({a})"),
            MorphExpr::Inv(m) => write!(f, "inv({m})"),
            MorphExpr::Comp(a, b) => {
                operand(f, a, a.precedence() <= 1)?;
                f.write_str(" ; ")?;
                operand(f, b, b.precedence() < 1)
            }
            MorphExpr::SumM(a, b) => {
                operand(f, a, a.precedence() <= 2)?;
                f.write_str(" (+) ")?;
                operand(f, b, b.precedence() <= 2)
            }
            MorphExpr::ProdM(a, b) => {
                operand(f, a, a.precedence() <= 3)?;
                f.write_str(" (x) ")?;
                operand(f, b, b.precedence() <= 3)
            }
        }
    }
}

/// Composite with a boundary check: `cod(f)` must equal `dom(g)`.
/// No rewriting is performed.
pub fn compose(f: MorphExpr, g: MorphExpr) -> Result<MorphExpr, TypeError> {
    let fc = f.cod()?;
    let gd = g.dom()?;
    if fc != gd {
        return Err(TypeError {
            path: NodePath::default(),
            expected: gd,
            found: fc,
        });
    }
    Ok(MorphExpr::comp(f, g))
}

/// Right-nested composite of a non-empty sequence, read left to right.
/// Returns `None` for an empty sequence.
pub fn chain<I>(morphs: I) -> Option<MorphExpr>
where
    I: IntoIterator<Item = MorphExpr>,
    I::IntoIter: DoubleEndedIterator,
{
    morphs
        .into_iter()
        .rev()
        .reduce(|acc, m| MorphExpr::comp(m, acc))
}

/// `β_{X,Y} = γ⊗_{X,Y} ; γ⊗_{Y,X}`, an automorphism of `X⊗Y`.
pub fn beta(x: &ObjectExpr, y: &ObjectExpr) -> MorphExpr {
    MorphExpr::comp(
        MorphExpr::GammaTimes(x.clone(), y.clone()),
        MorphExpr::GammaTimes(y.clone(), x.clone()),
    )
}

/// Right distributivity `(A⊕B)⊗C → (A⊗C)⊕(B⊗C)`, defined as
/// `γ⊗_{A⊕B,C} ; δ_{C,A,B} ; (γ⊗_{A,C} ⊕ γ⊗_{B,C})⁻¹`.
pub fn delta_sharp(a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> MorphExpr {
    chain([
        MorphExpr::GammaTimes(a.plus(b), c.clone()),
        MorphExpr::Delta(c.clone(), a.clone(), b.clone()),
        MorphExpr::inv(MorphExpr::sum(
            MorphExpr::GammaTimes(a.clone(), c.clone()),
            MorphExpr::GammaTimes(b.clone(), c.clone()),
        )),
    ])
    .expect("non-empty")
}

/// The same right distributivity written with the opposite braidings:
/// `(γ⊗_{C,A⊕B})⁻¹ ; δ_{C,A,B} ; (γ⊗_{C,A} ⊕ γ⊗_{C,B})`.
pub fn delta_sharp_alt(a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> MorphExpr {
    chain([
        MorphExpr::inv(MorphExpr::GammaTimes(c.clone(), a.plus(b))),
        MorphExpr::Delta(c.clone(), a.clone(), b.clone()),
        MorphExpr::sum(
            MorphExpr::GammaTimes(c.clone(), a.clone()),
            MorphExpr::GammaTimes(c.clone(), b.clone()),
        ),
    ])
    .expect("non-empty")
}

/// [`delta_sharp`] with the inverse of the sum split into a sum of inverses.
pub fn delta_sharp_split(a: &ObjectExpr, b: &ObjectExpr, c: &ObjectExpr) -> MorphExpr {
    chain([
        MorphExpr::GammaTimes(a.plus(b), c.clone()),
        MorphExpr::Delta(c.clone(), a.clone(), b.clone()),
        MorphExpr::sum(
            MorphExpr::inv(MorphExpr::GammaTimes(a.clone(), c.clone())),
            MorphExpr::inv(MorphExpr::GammaTimes(b.clone(), c.clone())),
        ),
    ])
    .expect("non-empty")
}

/// `0⊗A → 0`, defined as `γ⊗_{0,A} ; ε_A`.
pub fn lambda_star(a: &ObjectExpr) -> MorphExpr {
    MorphExpr::comp(
        MorphExpr::GammaTimes(ObjectExpr::Zero, a.clone()),
        MorphExpr::Epsilon(a.clone()),
    )
}

/// `(γ⊗_{A,0})⁻¹ ; ε_A`.
pub fn lambda_star_alt(a: &ObjectExpr) -> MorphExpr {
    MorphExpr::comp(
        MorphExpr::inv(MorphExpr::GammaTimes(a.clone(), ObjectExpr::Zero)),
        MorphExpr::Epsilon(a.clone()),
    )
}
