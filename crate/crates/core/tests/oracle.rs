mod common;

use braidist_core::conditions::{default_assignment, ConditionName};
use braidist_core::diagram::Orientation;
use braidist_core::graded::{GradedModel, QParam};
use braidist_core::matrix::PolyMatrix;
use common::*;

#[test]
fn interpreter_agrees_with_element_oracle() {
    let mut r = rng(7);
    let mut nontrivial = 0;
    for i in 0..300 {
        let dims = if i % 4 == 0 { 0..=2 } else { 1..=2 };
        let asg = random_assignment(&mut r, &ATOMS, dims, &[-1, 0, 1, 2]);
        let x = random_object(&mut r, 3, &ATOMS);
        let w = random_word(&mut r, &x, 6, &ATOMS);
        for (model, q) in [
            (GradedModel::generic(), QParam::Generic),
            (GradedModel::symmetric(), QParam::One),
        ] {
            let got = model.interpret_morphism(&w, &asg).unwrap();
            let want = oracle_matrix(&w, &asg, q);
            assert_eq!(got, want, "case {i}: {w} under {asg}");
        }
        let m = GradedModel::generic().interpret_morphism(&w, &asg).unwrap();
        if m.rows() > 1 && !m.is_identity() {
            nontrivial += 1;
        }
    }
    // the generator should not collapse to identities on tiny objects
    assert!(nontrivial > 80, "only {nontrivial} non-trivial words");
}

#[test]
fn every_catalogue_loop_agrees_with_oracle() {
    let asg = default_assignment();
    let model = GradedModel::generic();
    for &name in ConditionName::ALL {
        let d = name.build(&name.default_atoms()).unwrap();
        for o in [Orientation::Clockwise, Orientation::Counterclockwise] {
            let w = d.loop_morphism(0, o).unwrap();
            let got = model.interpret_morphism(&w, &asg).unwrap();
            assert_eq!(got, oracle_matrix(&w, &asg, QParam::Generic), "{name} {o}");
        }
    }
}

#[test]
fn inverse_words_invert() {
    let mut r = rng(11);
    let model = GradedModel::generic();
    for _ in 0..100 {
        let asg = random_assignment(&mut r, &ATOMS, 0..=2, &[0, 1, 2]);
        let x = random_object(&mut r, 3, &ATOMS);
        let w = random_word(&mut r, &x, 4, &ATOMS);
        let round =
            braidist_core::expr::MorphExpr::comp(w.clone(), braidist_core::expr::MorphExpr::inv(w));
        let m = model.interpret_morphism(&round, &asg).unwrap();
        assert_eq!(m, PolyMatrix::identity(m.rows()));
    }
}
