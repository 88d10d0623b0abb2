//! The concrete braided model: integer-graded free modules with chosen
//! bases over `ℤ[q, q⁻¹]`.
//!
//! Every object is interpreted as an ordered list of basis degrees. `⊕`
//! concatenates bases and `⊗` takes the lexicographic product (left factor
//! outer) with degrees added. The braiding sends `x⊗y` to
//! `q^{deg x · deg y}·(y⊗x)`, which squares to the identity only when the
//! exponents vanish, so the model is braided and not symmetric for generic
//! `q`. Associators and unitors are identity matrices under these
//! orderings.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::expr::{MorphExpr, ObjectExpr, TypeError};
use crate::laurent::LaurentPoly;
use crate::matrix::{MatrixError, PolyMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedBasis(Vec<i64>);

impl GradedBasis {
    pub fn new(degrees: Vec<i64>) -> Self {
        Self(degrees)
    }

    /// Basis of `0`.
    pub fn zero() -> Self {
        Self(Vec::new())
    }

    /// Basis of `1`: one vector of degree 0.
    pub fn unit() -> Self {
        Self(vec![0])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn concat(&self, other: &GradedBasis) -> GradedBasis {
        let mut d = self.0.clone();
        d.extend_from_slice(&other.0);
        GradedBasis(d)
    }

    pub fn tensor(&self, other: &GradedBasis) -> GradedBasis {
        GradedBasis(
            self.0
                .iter()
                .flat_map(|a| other.0.iter().map(move |b| a + b))
                .collect(),
        )
    }
}

impl fmt::Display for GradedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Atom name to graded basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Assignment(BTreeMap<String, GradedBasis>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, atom: impl Into<String>, degrees: Vec<i64>) -> Self {
        self.insert(atom, GradedBasis::new(degrees));
        self
    }

    pub fn insert(&mut self, atom: impl Into<String>, basis: GradedBasis) {
        self.0.insert(atom.into(), basis);
    }

    pub fn get(&self, atom: &str) -> Option<&GradedBasis> {
        self.0.get(atom)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &GradedBasis)> {
        self.0.iter()
    }

    pub fn covers<'a>(
        &self,
        atoms: impl IntoIterator<Item = &'a String>,
    ) -> Result<(), ModelError> {
        for a in atoms {
            if !self.0.contains_key(a) {
                return Err(ModelError::UnassignedAtom(a.clone()));
            }
        }
        Ok(())
    }
}

impl FromIterator<(String, GradedBasis)> for Assignment {
    fn from_iter<T: IntoIterator<Item = (String, GradedBasis)>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("atom `{0}` has no assigned basis")]
    UnassignedAtom(String),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("internal shape error: {0}")]
    InternalShape(#[from] MatrixError),
}

/// How the braiding scalar is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum QParam {
    /// `q` stays an indeterminate.
    #[default]
    Generic,
    /// `q := 1`; the braiding becomes a plain symmetry.
    One,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GradedModel {
    pub q: QParam,
}

impl GradedModel {
    pub fn generic() -> Self {
        Self { q: QParam::Generic }
    }

    pub fn symmetric() -> Self {
        Self { q: QParam::One }
    }

    fn braid_scalar(&self, exponent: i64) -> LaurentPoly {
        match self.q {
            QParam::Generic => LaurentPoly::q_pow(exponent),
            QParam::One => LaurentPoly::one(),
        }
    }

    pub fn interpret_object(
        &self,
        o: &ObjectExpr,
        a: &Assignment,
    ) -> Result<GradedBasis, ModelError> {
        Ok(match o {
            ObjectExpr::Zero => GradedBasis::zero(),
            ObjectExpr::One => GradedBasis::unit(),
            ObjectExpr::Atom(name) => a
                .get(name)
                .cloned()
                .ok_or_else(|| ModelError::UnassignedAtom(name.clone()))?,
            ObjectExpr::Sum(l, r) => self
                .interpret_object(l, a)?
                .concat(&self.interpret_object(r, a)?),
            ObjectExpr::Prod(l, r) => self
                .interpret_object(l, a)?
                .tensor(&self.interpret_object(r, a)?),
        })
    }

    /// Exact matrix of a well-typed word. The word is typechecked first.
    pub fn interpret_morphism(
        &self,
        m: &MorphExpr,
        a: &Assignment,
    ) -> Result<PolyMatrix, ModelError> {
        m.typecheck()?;
        self.eval(m, a)
    }

    fn eval(&self, m: &MorphExpr, a: &Assignment) -> Result<PolyMatrix, ModelError> {
        let obj = |o: &ObjectExpr| self.interpret_object(o, a);
        let dim = |o: &ObjectExpr| obj(o).map(|b| b.dim());
        Ok(match m {
            MorphExpr::Id(x) | MorphExpr::LambdaPlus(x) | MorphExpr::RhoPlus(x) => {
                PolyMatrix::identity(dim(x)?)
            }
            MorphExpr::LambdaTimes(x) | MorphExpr::RhoTimes(x) => PolyMatrix::identity(dim(x)?),
            MorphExpr::AlphaPlus(x, y, z) => PolyMatrix::identity(dim(x)? + dim(y)? + dim(z)?),
            MorphExpr::AlphaTimes(x, y, z) => PolyMatrix::identity(dim(x)? * dim(y)? * dim(z)?),
            MorphExpr::GammaPlus(x, y) => gamma_plus_matrix(dim(x)?, dim(y)?),
            MorphExpr::GammaTimes(x, y) => self.gamma_times_matrix(&obj(x)?, &obj(y)?),
            MorphExpr::Delta(x, y, z) => delta_matrix(dim(x)?, dim(y)?, dim(z)?),
            MorphExpr::Epsilon(x) => {
                // A⊗0 and 0 are both empty whatever A is; still resolve A so
                // unassigned atoms are reported.
                obj(x)?;
                PolyMatrix::zeros(0, 0)
            }
            MorphExpr::Inv(f) => self.eval(f, a)?.inverse()?,
            MorphExpr::Comp(f, g) => self.eval(f, a)?.then(&self.eval(g, a)?)?,
            MorphExpr::SumM(f, g) => self.eval(f, a)?.direct_sum(&self.eval(g, a)?),
            MorphExpr::ProdM(f, g) => self.eval(f, a)?.kron(&self.eval(g, a)?),
        })
    }

    /// Braiding `X⊗Y → Y⊗X`: basis vector `(x, y)` goes to
    /// `q^{deg x · deg y}·(y, x)`.
    pub fn gamma_times_matrix(&self, x: &GradedBasis, y: &GradedBasis) -> PolyMatrix {
        let (nx, ny) = (x.dim(), y.dim());
        let mut m = PolyMatrix::zeros(nx * ny, nx * ny);
        for (i, dx) in x.degrees().iter().enumerate() {
            for (j, dy) in y.degrees().iter().enumerate() {
                m.set(j * nx + i, i * ny + j, self.braid_scalar(dx * dy));
            }
        }
        m
    }
}

/// `X⊕Y → Y⊕X` as a block swap.
pub fn gamma_plus_matrix(nx: usize, ny: usize) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(nx + ny, nx + ny);
    for i in 0..nx {
        m.set(ny + i, i, LaurentPoly::one());
    }
    for j in 0..ny {
        m.set(j, nx + j, LaurentPoly::one());
    }
    m
}

/// `A⊗(B⊕C) → (A⊗B)⊕(A⊗C)`: the source is ordered `a`-major with the
/// summands of `B⊕C` inside; the target lists all `(a, b)` and then all
/// `(a, c)`.
pub fn delta_matrix(na: usize, nb: usize, nc: usize) -> PolyMatrix {
    let n = na * (nb + nc);
    let mut m = PolyMatrix::zeros(n, n);
    for i in 0..na {
        for s in 0..nb + nc {
            let src = i * (nb + nc) + s;
            let dst = if s < nb {
                i * nb + s
            } else {
                na * nb + i * nc + (s - nb)
            };
            m.set(dst, src, LaurentPoly::one());
        }
    }
    m
}

/// Projection `p_i : X₁⊕X₂ → X_i` (`index` is 1 or 2).
pub fn projection(x1: &GradedBasis, x2: &GradedBasis, index: u8) -> PolyMatrix {
    let (n1, n2) = (x1.dim(), x2.dim());
    let (rows, offset) = match index {
        1 => (n1, 0),
        2 => (n2, n1),
        _ => panic!("summand index must be 1 or 2, got {index}"),
    };
    let mut m = PolyMatrix::zeros(rows, n1 + n2);
    for r in 0..rows {
        m.set(r, offset + r, LaurentPoly::one());
    }
    m
}

/// Injection `u_i : X_i → X₁⊕X₂` (`index` is 1 or 2).
pub fn injection(x1: &GradedBasis, x2: &GradedBasis, index: u8) -> PolyMatrix {
    let (n1, n2) = (x1.dim(), x2.dim());
    let (cols, offset) = match index {
        1 => (n1, 0),
        2 => (n2, n1),
        _ => panic!("summand index must be 1 or 2, got {index}"),
    };
    let mut m = PolyMatrix::zeros(n1 + n2, cols);
    for c in 0..cols {
        m.set(offset + c, c, LaurentPoly::one());
    }
    m
}

/// True when every nonzero entry connects basis vectors of equal degree,
/// i.e. the matrix is a morphism of graded modules.
pub fn is_degree_preserving(m: &PolyMatrix, source: &GradedBasis, target: &GradedBasis) -> bool {
    m.shape() == (target.dim(), source.dim())
        && (0..target.dim()).all(|r| {
            (0..source.dim())
                .all(|c| m.get(r, c).is_zero() || target.degrees()[r] == source.degrees()[c])
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{beta, MorphExpr as M, ObjectExpr as O};

    fn atoms(a: Vec<i64>, b: Vec<i64>, c: Vec<i64>) -> Assignment {
        Assignment::new().with("A", a).with("B", b).with("C", c)
    }

    fn abc() -> (O, O, O) {
        (O::atom("A"), O::atom("B"), O::atom("C"))
    }

    fn one_hot(rows: usize, cols: usize, ones: &[(usize, usize)]) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(rows, cols);
        for &(r, c) in ones {
            m.set(r, c, LaurentPoly::one());
        }
        m
    }

    #[test]
    fn objects_interpret_to_ordered_bases() {
        let model = GradedModel::generic();
        let asg = atoms(vec![0, 1], vec![2], vec![]);
        let (a, b, _) = abc();
        assert_eq!(
            model.interpret_object(&a.plus(&b), &asg).unwrap().degrees(),
            &[0, 1, 2]
        );
        assert_eq!(
            model
                .interpret_object(&a.times(&b), &asg)
                .unwrap()
                .degrees(),
            &[2, 3]
        );
        assert_eq!(
            model
                .interpret_object(&a.times(&O::Zero), &asg)
                .unwrap()
                .dim(),
            0
        );
        assert_eq!(
            model.interpret_object(&O::One, &asg).unwrap().degrees(),
            &[0]
        );
        assert_eq!(
            model.interpret_object(&O::atom("Z"), &asg),
            Err(ModelError::UnassignedAtom("Z".into()))
        );
    }

    #[test]
    fn braiding_one_dimensional_degree_one() {
        let model = GradedModel::generic();
        let asg = atoms(vec![1], vec![1], vec![]);
        let (a, b, _) = abc();
        let m = model
            .interpret_morphism(&M::GammaTimes(a, b), &asg)
            .unwrap();
        assert_eq!(m, PolyMatrix::from_rows(vec![vec![LaurentPoly::q_pow(1)]]));
    }

    #[test]
    fn beta_squares_the_monomial() {
        let model = GradedModel::generic();
        let (a, b, _) = abc();
        for (m, n) in [(1, 1), (2, 3), (-1, 2), (0, 5)] {
            let asg = atoms(vec![m], vec![n], vec![]);
            let got = model.interpret_morphism(&beta(&a, &b), &asg).unwrap();
            assert_eq!(
                got,
                PolyMatrix::from_rows(vec![vec![LaurentPoly::q_pow(2 * m * n)]])
            );
        }
    }

    #[test]
    fn delta_is_interleave_to_block_permutation() {
        // source order (a1 b, a1 c, a2 b, a2 c), target (a1 b, a2 b, a1 c, a2 c)
        let model = GradedModel::generic();
        let asg = atoms(vec![0, 0], vec![0], vec![0]);
        let (a, b, c) = abc();
        let got = model.interpret_morphism(&M::Delta(a, b, c), &asg).unwrap();
        let expected = one_hot(4, 4, &[(0, 0), (2, 1), (1, 2), (3, 3)]);
        assert_eq!(got, expected);
    }

    #[test]
    fn delta_matches_projection_reconstruction() {
        // δ ; p_{AB,AC,i} = 1_A ⊗ p_{B,C,i}
        let asg = atoms(vec![0, 1], vec![2, 0], vec![1]);
        let model = GradedModel::generic();
        let (a, b, c) = abc();
        let ba = model.interpret_object(&a, &asg).unwrap();
        let bb = model.interpret_object(&b, &asg).unwrap();
        let bc = model.interpret_object(&c, &asg).unwrap();
        let d = model.interpret_morphism(&M::Delta(a, b, c), &asg).unwrap();
        let ab = ba.tensor(&bb);
        let ac = ba.tensor(&bc);
        for i in [1, 2] {
            let lhs = d.then(&projection(&ab, &ac, i)).unwrap();
            let rhs = PolyMatrix::identity(ba.dim()).kron(&projection(&bb, &bc, i));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn epsilon_is_empty() {
        let model = GradedModel::generic();
        let asg = atoms(vec![0, 1], vec![], vec![]);
        let m = model
            .interpret_morphism(&M::Epsilon(O::atom("A")), &asg)
            .unwrap();
        assert_eq!(m.shape(), (0, 0));
    }

    #[test]
    fn gamma_plus_block_swap() {
        let m = gamma_plus_matrix(2, 1);
        assert_eq!(m, one_hot(3, 3, &[(1, 0), (2, 1), (0, 2)]));
        assert!(gamma_plus_matrix(2, 1)
            .then(&gamma_plus_matrix(1, 2))
            .unwrap()
            .is_identity());
    }

    #[test]
    fn sum_equations() {
        let x1 = GradedBasis::new(vec![0, 2]);
        let x2 = GradedBasis::new(vec![1]);
        for i in [1u8, 2] {
            for j in [1u8, 2] {
                let uij = injection(&x1, &x2, i)
                    .then(&projection(&x1, &x2, j))
                    .unwrap();
                if i == j {
                    assert!(uij.is_identity());
                } else {
                    assert!(all_zero(&uij));
                }
            }
        }
        let total = projection(&x1, &x2, 1)
            .then(&injection(&x1, &x2, 1))
            .unwrap()
            .add(
                &projection(&x1, &x2, 2)
                    .then(&injection(&x1, &x2, 2))
                    .unwrap(),
            )
            .unwrap();
        assert!(total.is_identity());
    }

    #[test]
    fn symmetric_specialization_drops_exponents() {
        let asg = atoms(vec![1], vec![1], vec![]);
        let (a, b, _) = abc();
        let m = GradedModel::symmetric()
            .interpret_morphism(&beta(&a, &b), &asg)
            .unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn ill_typed_words_are_rejected() {
        let asg = atoms(vec![1], vec![1], vec![]);
        let bad = M::comp(M::Epsilon(O::atom("A")), M::LambdaPlus(O::atom("B")));
        assert!(matches!(
            GradedModel::generic().interpret_morphism(&bad, &asg),
            Err(ModelError::Type(_))
        ));
    }

    fn all_zero(m: &PolyMatrix) -> bool {
        (0..m.rows()).all(|r| (0..m.cols()).all(|c| m.get(r, c).is_zero()))
    }
}
