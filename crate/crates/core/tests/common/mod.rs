#![allow(dead_code)]

//! Shared test support: random well-typed words and an independent
//! evaluator that pushes individual basis elements through a word.

use braidist_core::expr::{MorphExpr as M, ObjectExpr as O};
use braidist_core::graded::{Assignment, GradedBasis, QParam};
use braidist_core::laurent::LaurentPoly;
use braidist_core::matrix::PolyMatrix;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub const ATOMS: [&str; 4] = ["A", "B", "C", "D"];

/// Random assignment for `atoms` with dimensions in `dims` and degrees in
/// `degrees`.
pub fn random_assignment(
    rng: &mut StdRng,
    atoms: &[&str],
    dims: std::ops::RangeInclusive<usize>,
    degrees: &[i64],
) -> Assignment {
    let mut a = Assignment::new();
    for name in atoms {
        let n = rng.gen_range(dims.clone());
        let degs = (0..n)
            .map(|_| degrees[rng.gen_range(0..degrees.len())])
            .collect();
        a.insert(*name, GradedBasis::new(degs));
    }
    a
}

pub fn random_object(rng: &mut StdRng, depth: u32, atoms: &[&str]) -> O {
    if depth == 0 || rng.gen_bool(0.2) {
        return match rng.gen_range(0..10) {
            0 => O::Zero,
            1 => O::One,
            _ => O::atom(atoms[rng.gen_range(0..atoms.len())]),
        };
    }
    let l = random_object(rng, depth - 1, atoms);
    let r = random_object(rng, depth - 1, atoms);
    if rng.gen_bool(0.5) {
        O::sum(l, r)
    } else {
        O::prod(l, r)
    }
}

/// Random word with source `x`, built only from moves whose boundary is
/// known to fit, so the result always typechecks.
pub fn random_word(rng: &mut StdRng, x: &O, depth: u32, atoms: &[&str]) -> M {
    if depth == 0 {
        return primitive_from(rng, x, atoms);
    }
    match rng.gen_range(0..10) {
        0..=2 => {
            let f = random_word(rng, x, depth - 1, atoms);
            let y = f.cod().expect("generated words typecheck");
            let g = random_word(rng, &y, depth - 1, atoms);
            M::comp(f, g)
        }
        3 => {
            // (g⁻¹ ; f⁻¹)⁻¹ has source x and nests inverses around composites.
            let f = random_word(rng, x, depth - 1, atoms);
            let y = f.cod().expect("generated words typecheck");
            let g = random_word(rng, &y, depth - 1, atoms);
            M::inv(M::comp(M::inv(g), M::inv(f)))
        }
        4..=6 => match x {
            O::Sum(l, r) => M::sum(
                random_word(rng, l, depth - 1, atoms),
                random_word(rng, r, depth - 1, atoms),
            ),
            O::Prod(l, r) => M::prod(
                random_word(rng, l, depth - 1, atoms),
                random_word(rng, r, depth - 1, atoms),
            ),
            _ => primitive_from(rng, x, atoms),
        },
        _ => primitive_from(rng, x, atoms),
    }
}

fn primitive_from(rng: &mut StdRng, x: &O, atoms: &[&str]) -> M {
    let c = |o: &O| o.clone();
    let mut options: Vec<M> = vec![M::id(c(x))];
    match x {
        O::Sum(l, r) => {
            options.push(M::GammaPlus(c(l), c(r)));
            if let O::Sum(a, b) = &**l {
                options.push(M::AlphaPlus(c(a), c(b), c(r)));
            }
            if let O::Sum(b, cc) = &**r {
                options.push(M::inv(M::AlphaPlus(c(l), c(b), c(cc))));
            }
            if **l == O::Zero {
                options.push(M::LambdaPlus(c(r)));
            }
            if **r == O::Zero {
                options.push(M::RhoPlus(c(l)));
            }
            if let (O::Prod(a1, b), O::Prod(a2, cc)) = (&**l, &**r) {
                if a1 == a2 {
                    options.push(M::inv(M::Delta(c(a1), c(b), c(cc))));
                }
            }
        }
        O::Prod(l, r) => {
            options.push(M::GammaTimes(c(l), c(r)));
            options.push(M::inv(M::GammaTimes(c(r), c(l))));
            if let O::Prod(a, b) = &**l {
                options.push(M::AlphaTimes(c(a), c(b), c(r)));
            }
            if let O::Prod(b, cc) = &**r {
                options.push(M::inv(M::AlphaTimes(c(l), c(b), c(cc))));
            }
            if **l == O::One {
                options.push(M::LambdaTimes(c(r)));
            }
            if **r == O::One {
                options.push(M::RhoTimes(c(l)));
            }
            if let O::Sum(b, cc) = &**r {
                options.push(M::Delta(c(l), c(b), c(cc)));
            }
            if **r == O::Zero {
                options.push(M::Epsilon(c(l)));
            }
        }
        O::Zero => {
            let a = O::atom(atoms[rng.gen_range(0..atoms.len())]);
            options.push(M::inv(M::Epsilon(a)));
        }
        _ => {}
    }
    // Unit insertions grow the object; keep them rare.
    if rng.gen_bool(0.1) {
        options.push(M::inv(M::LambdaPlus(c(x))));
        options.push(M::inv(M::RhoTimes(c(x))));
    }
    let i = rng.gen_range(0..options.len());
    options.swap_remove(i)
}

/// A basis element of an interpreted object, kept as a tree that mirrors
/// the object rather than as an index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elem {
    Unit,
    Atom(String, usize),
    Inl(Box<Elem>),
    Inr(Box<Elem>),
    Pair(Box<Elem>, Box<Elem>),
}

use Elem::*;

fn inl(e: Elem) -> Elem {
    Inl(Box::new(e))
}

fn inr(e: Elem) -> Elem {
    Inr(Box::new(e))
}

fn pair(a: Elem, b: Elem) -> Elem {
    Pair(Box::new(a), Box::new(b))
}

/// Basis elements in the order the model is expected to use: left summand
/// first, left tensor factor outer.
pub fn basis(o: &O, a: &Assignment) -> Vec<Elem> {
    match o {
        O::Zero => vec![],
        O::One => vec![Unit],
        O::Atom(n) => (0..a.get(n).expect("assigned").dim())
            .map(|i| Atom(n.clone(), i))
            .collect(),
        O::Sum(l, r) => basis(l, a)
            .into_iter()
            .map(inl)
            .chain(basis(r, a).into_iter().map(inr))
            .collect(),
        O::Prod(l, r) => {
            let rb = basis(r, a);
            basis(l, a)
                .into_iter()
                .flat_map(|x| rb.iter().map(move |y| pair(x.clone(), y.clone())))
                .collect()
        }
    }
}

pub fn degree(e: &Elem, a: &Assignment) -> i64 {
    match e {
        Unit => 0,
        Atom(n, i) => a.get(n).unwrap().degrees()[*i],
        Inl(x) | Inr(x) => degree(x, a),
        Pair(x, y) => degree(x, a) + degree(y, a),
    }
}

fn bad(m: &M, e: &Elem) -> ! {
    panic!("oracle: {m} cannot act on {e:?}")
}

/// Image of one basis element: `(q exponent, element)`.
pub fn apply(m: &M, e: Elem, a: &Assignment) -> (i64, Elem) {
    match (m, e) {
        (M::Id(_), e) => (0, e),
        (M::AlphaPlus(..), Inl(x)) => match *x {
            Inl(p) => (0, Inl(p)),
            Inr(q) => (0, inr(Inl(q))),
            e => bad(m, &e),
        },
        (M::AlphaPlus(..), Inr(z)) => (0, inr(Inr(z))),
        (M::LambdaPlus(_), Inr(x)) => (0, *x),
        (M::RhoPlus(_), Inl(x)) => (0, *x),
        (M::GammaPlus(..), Inl(x)) => (0, Inr(x)),
        (M::GammaPlus(..), Inr(x)) => (0, Inl(x)),
        (M::AlphaTimes(..), Pair(xy, z)) => match *xy {
            Pair(x, y) => (0, Pair(x, Box::new(Pair(y, z)))),
            e => bad(m, &e),
        },
        (M::LambdaTimes(_), Pair(u, x)) if *u == Unit => (0, *x),
        (M::RhoTimes(_), Pair(x, u)) if *u == Unit => (0, *x),
        (M::GammaTimes(..), Pair(x, y)) => (degree(&x, a) * degree(&y, a), Pair(y, x)),
        (M::Delta(..), Pair(x, s)) => match *s {
            Inl(b) => (0, Inl(Box::new(Pair(x, b)))),
            Inr(c) => (0, Inr(Box::new(Pair(x, c)))),
            e => bad(m, &e),
        },
        (M::Inv(f), e) => apply_inverse(f, e, a),
        (M::Comp(f, g), e) => {
            let (e1, x) = apply(f, e, a);
            let (e2, y) = apply(g, x, a);
            (e1 + e2, y)
        }
        (M::SumM(f, _), Inl(x)) => {
            let (k, y) = apply(f, *x, a);
            (k, inl(y))
        }
        (M::SumM(_, g), Inr(x)) => {
            let (k, y) = apply(g, *x, a);
            (k, inr(y))
        }
        (M::ProdM(f, g), Pair(x, y)) => {
            let (k1, x) = apply(f, *x, a);
            let (k2, y) = apply(g, *y, a);
            (k1 + k2, pair(x, y))
        }
        (m, e) => bad(m, &e),
    }
}

/// Preimage of one basis element.
pub fn apply_inverse(m: &M, e: Elem, a: &Assignment) -> (i64, Elem) {
    match (m, e) {
        (M::Id(_), e) => (0, e),
        (M::AlphaPlus(..), Inl(x)) => (0, inl(Inl(x))),
        (M::AlphaPlus(..), Inr(yz)) => match *yz {
            Inl(y) => (0, inl(Inr(y))),
            Inr(z) => (0, Inr(z)),
            e => bad(m, &e),
        },
        (M::LambdaPlus(_), x) => (0, inr(x)),
        (M::RhoPlus(_), x) => (0, inl(x)),
        (M::GammaPlus(..), Inl(x)) => (0, Inr(x)),
        (M::GammaPlus(..), Inr(x)) => (0, Inl(x)),
        (M::AlphaTimes(..), Pair(x, yz)) => match *yz {
            Pair(y, z) => (0, Pair(Box::new(Pair(x, y)), z)),
            e => bad(m, &e),
        },
        (M::LambdaTimes(_), x) => (0, pair(Unit, x)),
        (M::RhoTimes(_), x) => (0, pair(x, Unit)),
        // γ(x⊗y) = q^{|x||y|} y⊗x, so γ⁻¹(y⊗x) = q^{-|x||y|} x⊗y.
        (M::GammaTimes(..), Pair(y, x)) => (-(degree(&x, a) * degree(&y, a)), Pair(x, y)),
        (M::Delta(..), Inl(xb)) => match *xb {
            Pair(x, b) => (0, Pair(x, Box::new(Inl(b)))),
            e => bad(m, &e),
        },
        (M::Delta(..), Inr(xc)) => match *xc {
            Pair(x, c) => (0, Pair(x, Box::new(Inr(c)))),
            e => bad(m, &e),
        },
        (M::Inv(f), e) => apply(f, e, a),
        (M::Comp(f, g), e) => {
            let (e1, x) = apply_inverse(g, e, a);
            let (e2, y) = apply_inverse(f, x, a);
            (e1 + e2, y)
        }
        (M::SumM(f, _), Inl(x)) => {
            let (k, y) = apply_inverse(f, *x, a);
            (k, inl(y))
        }
        (M::SumM(_, g), Inr(x)) => {
            let (k, y) = apply_inverse(g, *x, a);
            (k, inr(y))
        }
        (M::ProdM(f, g), Pair(x, y)) => {
            let (k1, x) = apply_inverse(f, *x, a);
            let (k2, y) = apply_inverse(g, *y, a);
            (k1 + k2, pair(x, y))
        }
        (m, e) => bad(m, &e),
    }
}

/// Matrix of a well-typed word computed element by element.
pub fn oracle_matrix(m: &M, a: &Assignment, q: QParam) -> PolyMatrix {
    let (dom, cod) = m.typecheck().expect("oracle needs a well-typed word");
    let src = basis(&dom, a);
    let dst = basis(&cod, a);
    let mut out = PolyMatrix::zeros(dst.len(), src.len());
    for (col, e) in src.into_iter().enumerate() {
        let (k, img) = apply(m, e, a);
        let row = dst
            .iter()
            .position(|d| *d == img)
            .unwrap_or_else(|| panic!("oracle: image {img:?} is not a basis element of {cod}"));
        let coeff = match q {
            QParam::Generic => LaurentPoly::q_pow(k),
            QParam::One => LaurentPoly::one(),
        };
        out.set(row, col, coeff);
    }
    out
}

/// Random matrix `source → target` that only connects basis vectors of
/// equal degree, with small Laurent polynomial entries.
pub fn random_graded_map(
    rng: &mut StdRng,
    source: &GradedBasis,
    target: &GradedBasis,
) -> PolyMatrix {
    PolyMatrix::from_fn(target.dim(), source.dim(), |r, c| {
        if target.degrees()[r] != source.degrees()[c] || rng.gen_bool(0.3) {
            return LaurentPoly::zero();
        }
        let terms: Vec<(i64, i64)> = (0..rng.gen_range(1..=2))
            .map(|_| (rng.gen_range(-2..=2), rng.gen_range(-3..=3)))
            .collect();
        LaurentPoly::from_terms(terms)
    })
}
