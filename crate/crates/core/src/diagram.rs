//! Closed diagrams of structural isomorphisms.
//!
//! A diagram is a single simple cycle: every vertex is an object and every
//! edge is labelled by a morphism whose source and target are exactly the
//! endpoint objects. Edges may point either way around the cycle; walking
//! an edge against its arrow uses the inverse of its label. The diagram
//! commutes when the composite once around the cycle is the identity.

use std::fmt;

use thiserror::Error;

use crate::expr::{MorphExpr, ObjectExpr, TypeError};
use crate::graded::{Assignment, GradedModel, ModelError};
use crate::matrix::{Mismatch, PolyMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: MorphExpr,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("diagram has no vertices")]
    Empty,
    #[error("edge {edge} refers to vertex {vertex}, but there are only {count} vertices")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        count: usize,
    },
    #[error("edge {edge} label is ill-typed: {source}")]
    LabelType { edge: usize, source: TypeError },
    #[error("edge {edge} label runs `{found}`, but the edge needs `{expected}`")]
    LabelBoundary {
        edge: usize,
        expected: String,
        found: String,
    },
    #[error("not a simple cycle: {0}")]
    NotACycle(String),
    #[error("vertex {vertex} out of range ({count} vertices)")]
    NoSuchVertex { vertex: usize, count: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// The direction of the canonical walk: start at vertex 0 and leave
    /// along its lowest-numbered edge.
    Clockwise,
    Counterclockwise,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::Counterclockwise,
            Orientation::Counterclockwise => Orientation::Clockwise,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Clockwise => "clockwise",
            Orientation::Counterclockwise => "counterclockwise",
        })
    }
}

/// One step of the canonical walk: which edge, and whether the walk
/// follows its arrow.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Step {
    pub edge: usize,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    name: String,
    vertices: Vec<ObjectExpr>,
    edges: Vec<Edge>,
    /// `order[k]` is the k-th vertex of the canonical walk, `order[0] == 0`.
    order: Vec<usize>,
    /// `steps[k]` leads from `order[k]` to `order[k + 1]` (cyclically).
    steps: Vec<Step>,
    /// Inverse of `order`.
    position: Vec<usize>,
}

impl Diagram {
    /// Checks that every label has exactly the endpoint objects as its
    /// boundary and that the edges form one simple cycle through all
    /// vertices.
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<ObjectExpr>,
        edges: Vec<Edge>,
    ) -> Result<Self, DiagramError> {
        let n = vertices.len();
        if n == 0 {
            return Err(DiagramError::Empty);
        }
        for (i, e) in edges.iter().enumerate() {
            for v in [e.src, e.dst] {
                if v >= n {
                    return Err(DiagramError::VertexOutOfRange {
                        edge: i,
                        vertex: v,
                        count: n,
                    });
                }
            }
            let (dom, cod) = e
                .label
                .typecheck()
                .map_err(|source| DiagramError::LabelType { edge: i, source })?;
            if dom != vertices[e.src] || cod != vertices[e.dst] {
                return Err(DiagramError::LabelBoundary {
                    edge: i,
                    expected: format!("{} -> {}", vertices[e.src], vertices[e.dst]),
                    found: format!("{dom} -> {cod}"),
                });
            }
        }
        if edges.len() != n {
            return Err(DiagramError::NotACycle(format!(
                "{n} vertices but {} edges",
                edges.len()
            )));
        }
        let mut degree = vec![0usize; n];
        for e in &edges {
            degree[e.src] += 1;
            degree[e.dst] += 1;
        }
        if let Some(v) = degree.iter().position(|&d| d != 2) {
            return Err(DiagramError::NotACycle(format!(
                "vertex {v} has degree {}",
                degree[v]
            )));
        }

        let incident = |v: usize, skip: Option<usize>| {
            edges
                .iter()
                .enumerate()
                .find(|(i, e)| Some(*i) != skip && (e.src == v || e.dst == v))
                .map(|(i, _)| i)
        };
        let mut order = Vec::with_capacity(n);
        let mut steps = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        let mut current = 0;
        let mut previous = None;
        for _ in 0..n {
            if seen[current] {
                return Err(DiagramError::NotACycle(format!(
                    "walk from vertex 0 closes after {} vertices",
                    order.len()
                )));
            }
            seen[current] = true;
            order.push(current);
            let edge = incident(current, previous).expect("degree 2 guarantees a next edge");
            let e = &edges[edge];
            let forward = e.src == current;
            steps.push(Step { edge, forward });
            current = if forward { e.dst } else { e.src };
            previous = Some(edge);
        }
        if current != 0 {
            return Err(DiagramError::NotACycle(
                "walk does not return to vertex 0".into(),
            ));
        }
        let mut position = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            position[v] = k;
        }
        Ok(Self {
            name: name.into(),
            vertices,
            edges,
            order,
            steps,
            position,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vertices(&self) -> &[ObjectExpr] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Vertices in canonical walk order.
    pub fn cycle_order(&self) -> &[usize] {
        &self.order
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    fn check_vertex(&self, v: usize) -> Result<(), DiagramError> {
        if v < self.vertices.len() {
            Ok(())
        } else {
            Err(DiagramError::NoSuchVertex {
                vertex: v,
                count: self.vertices.len(),
            })
        }
    }

    fn step_morphism(&self, k: usize, orientation: Orientation) -> MorphExpr {
        let step = self.steps[k];
        let label = self.edges[step.edge].label.clone();
        let along_arrow = match orientation {
            Orientation::Clockwise => step.forward,
            Orientation::Counterclockwise => !step.forward,
        };
        if along_arrow {
            label
        } else {
            MorphExpr::inv(label)
        }
    }

    /// Step indices walked going `count` steps from position `start`.
    fn walk(&self, start: usize, count: usize, orientation: Orientation) -> Vec<usize> {
        let n = self.order.len();
        (0..count)
            .map(|i| match orientation {
                Orientation::Clockwise => (start + i) % n,
                Orientation::Counterclockwise => (start + n - 1 - i) % n,
            })
            .collect()
    }

    fn composite(&self, base: usize, steps: Vec<usize>, orientation: Orientation) -> MorphExpr {
        crate::expr::chain(
            steps
                .into_iter()
                .map(|k| self.step_morphism(k, orientation)),
        )
        .unwrap_or_else(|| MorphExpr::id(self.vertices[base].clone()))
    }

    /// Composite along the cycle from `x` to `y`, right-nested and read
    /// left to right. `x == y` gives the identity.
    pub fn path_morphism(
        &self,
        x: usize,
        y: usize,
        orientation: Orientation,
    ) -> Result<MorphExpr, DiagramError> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        let n = self.order.len();
        let (px, py) = (self.position[x], self.position[y]);
        let count = match orientation {
            Orientation::Clockwise => (py + n - px) % n,
            Orientation::Counterclockwise => (px + n - py) % n,
        };
        Ok(self.composite(x, self.walk(px, count, orientation), orientation))
    }

    /// The full turn `base → base`.
    pub fn loop_morphism(
        &self,
        base: usize,
        orientation: Orientation,
    ) -> Result<MorphExpr, DiagramError> {
        self.check_vertex(base)?;
        let n = self.order.len();
        Ok(self.composite(
            base,
            self.walk(self.position[base], n, orientation),
            orientation,
        ))
    }

    /// Loop from vertex 0 in the canonical direction.
    pub fn check_commutes(
        &self,
        model: &GradedModel,
        assignment: &Assignment,
    ) -> Result<CommuteReport, ModelError> {
        self.check_commutes_from(model, assignment, 0, Orientation::Clockwise)
    }

    pub fn check_commutes_from(
        &self,
        model: &GradedModel,
        assignment: &Assignment,
        base: usize,
        orientation: Orientation,
    ) -> Result<CommuteReport, ModelError> {
        let word = self
            .loop_morphism(base, orientation)
            .expect("base vertex must belong to the diagram");
        let m = model.interpret_morphism(&word, assignment)?;
        let id = PolyMatrix::identity(m.rows());
        let verdict = match m.first_mismatch(&id) {
            None => Verdict::Commutes,
            Some(w) => Verdict::Fails(w),
        };
        Ok(CommuteReport {
            diagram: self.name.clone(),
            base_vertex: base,
            orientation,
            verdict,
            vacuity: self.vacuity(model, assignment)?,
            dims: self.vertex_dims(model, assignment)?,
        })
    }

    /// Compares the two arcs from `x` to `y` directly. Agrees with the loop
    /// check because every label is invertible.
    pub fn compare_arcs(
        &self,
        model: &GradedModel,
        assignment: &Assignment,
        x: usize,
        y: usize,
    ) -> Result<Verdict, ModelError> {
        let cw = self
            .path_morphism(x, y, Orientation::Clockwise)
            .expect("vertex must belong to the diagram");
        let ccw = self
            .path_morphism(x, y, Orientation::Counterclockwise)
            .expect("vertex must belong to the diagram");
        let lhs = model.interpret_morphism(&cw, assignment)?;
        let rhs = model.interpret_morphism(&ccw, assignment)?;
        Ok(match lhs.first_mismatch(&rhs) {
            None => Verdict::Commutes,
            Some(w) => Verdict::Fails(w),
        })
    }

    pub fn vertex_dims(
        &self,
        model: &GradedModel,
        assignment: &Assignment,
    ) -> Result<Vec<usize>, ModelError> {
        self.vertices
            .iter()
            .map(|v| model.interpret_object(v, assignment).map(|b| b.dim()))
            .collect()
    }

    /// Whether a pass under this assignment says anything at all.
    pub fn vacuity(
        &self,
        model: &GradedModel,
        assignment: &Assignment,
    ) -> Result<Vacuity, ModelError> {
        if self.vertex_dims(model, assignment)?.iter().all(|&d| d == 0) {
            return Ok(Vacuity::Empty);
        }
        for e in &self.edges {
            if !model
                .interpret_morphism(&e.label, assignment)?
                .is_identity()
            {
                return Ok(Vacuity::NonVacuous);
            }
        }
        Ok(Vacuity::IdentityOnly)
    }

    /// Largest vertex dimension under `assignment`.
    pub fn max_dim(
        &self,
        model: &GradedModel,
        assignment: &Assignment,
    ) -> Result<usize, ModelError> {
        Ok(self
            .vertex_dims(model, assignment)?
            .into_iter()
            .max()
            .unwrap_or(0))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Commutes,
    /// First entry, in row-major order, where the loop differs from the
    /// identity; `left` is the loop entry.
    Fails(Mismatch),
}

impl Verdict {
    pub fn commutes(&self) -> bool {
        matches!(self, Verdict::Commutes)
    }

    pub fn witness(&self) -> Option<&Mismatch> {
        match self {
            Verdict::Commutes => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// How much a commuting verdict tells you.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vacuity {
    NonVacuous,
    /// Every edge is interpreted as an identity matrix, so the diagram
    /// commutes in this model no matter what.
    IdentityOnly,
    /// Every vertex is the zero module.
    Empty,
}

impl Vacuity {
    pub fn is_vacuous(self) -> bool {
        self != Vacuity::NonVacuous
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommuteReport {
    pub diagram: String,
    pub base_vertex: usize,
    pub orientation: Orientation,
    pub verdict: Verdict,
    pub vacuity: Vacuity,
    pub dims: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::ObjectExpr as O;
    use crate::laurent::LaurentPoly;

    fn symmetry(a: &O, b: &O) -> Diagram {
        Diagram::new(
            "symmetry",
            vec![a.times(b), b.times(a)],
            vec![
                Edge {
                    src: 0,
                    dst: 1,
                    label: MorphExpr::GammaTimes(a.clone(), b.clone()),
                },
                Edge {
                    src: 1,
                    dst: 0,
                    label: MorphExpr::GammaTimes(b.clone(), a.clone()),
                },
            ],
        )
        .unwrap()
    }

    #[test]
    fn two_cycle_walk() {
        let d = symmetry(&O::atom("A"), &O::atom("B"));
        assert_eq!(d.cycle_order(), &[0, 1]);
        assert_eq!(
            d.steps(),
            &[
                Step {
                    edge: 0,
                    forward: true
                },
                Step {
                    edge: 1,
                    forward: true
                }
            ]
        );
    }

    #[test]
    fn braided_symmetry_fails_with_monomial_witness() {
        let d = symmetry(&O::atom("A"), &O::atom("B"));
        let asg = Assignment::new().with("A", vec![1]).with("B", vec![1]);
        let r = d.check_commutes(&GradedModel::generic(), &asg).unwrap();
        let w = r.verdict.witness().unwrap();
        assert_eq!((w.row, w.col), (0, 0));
        assert_eq!(w.left, LaurentPoly::q_pow(2));
        assert_eq!(w.right, LaurentPoly::one());
        assert_eq!(r.vacuity, Vacuity::NonVacuous);

        let r1 = d.check_commutes(&GradedModel::symmetric(), &asg).unwrap();
        assert!(r1.verdict.commutes());
    }

    #[test]
    fn counterclockwise_uses_inverses() {
        let (a, b) = (O::atom("A"), O::atom("B"));
        let d = symmetry(&a, &b);
        let ccw = d.loop_morphism(0, Orientation::Counterclockwise).unwrap();
        let expected = MorphExpr::comp(
            MorphExpr::inv(MorphExpr::GammaTimes(b.clone(), a.clone())),
            MorphExpr::inv(MorphExpr::GammaTimes(a.clone(), b.clone())),
        );
        assert_eq!(ccw, expected);
        assert_eq!(
            d.path_morphism(1, 1, Orientation::Clockwise).unwrap(),
            MorphExpr::id(b.times(&a))
        );
    }

    #[test]
    fn single_vertex_loop() {
        let a = O::atom("A");
        let d = Diagram::new(
            "loop",
            vec![a.plus(&a)],
            vec![Edge {
                src: 0,
                dst: 0,
                label: MorphExpr::GammaPlus(a.clone(), a.clone()),
            }],
        )
        .unwrap();
        assert_eq!(
            d.loop_morphism(0, Orientation::Clockwise).unwrap(),
            MorphExpr::GammaPlus(a.clone(), a.clone())
        );
        assert_eq!(
            d.loop_morphism(0, Orientation::Counterclockwise).unwrap(),
            MorphExpr::inv(MorphExpr::GammaPlus(a.clone(), a))
        );
    }

    #[test]
    fn rejects_non_cycles() {
        let a = O::atom("A");
        let path = Diagram::new(
            "path",
            vec![a.clone(), a.clone(), a.clone()],
            vec![
                Edge {
                    src: 0,
                    dst: 1,
                    label: MorphExpr::id(a.clone()),
                },
                Edge {
                    src: 1,
                    dst: 2,
                    label: MorphExpr::id(a.clone()),
                },
            ],
        );
        assert!(matches!(path, Err(DiagramError::NotACycle(_))));

        // two disjoint digons
        let id = |s, d| Edge {
            src: s,
            dst: d,
            label: MorphExpr::id(a.clone()),
        };
        let split = Diagram::new(
            "split",
            vec![a.clone(); 4],
            vec![id(0, 1), id(1, 0), id(2, 3), id(3, 2)],
        );
        assert!(matches!(split, Err(DiagramError::NotACycle(_))));
    }

    #[test]
    fn rejects_mislabelled_edges() {
        let (a, b) = (O::atom("A"), O::atom("B"));
        let bad = Diagram::new(
            "bad",
            vec![a.times(&b), b.times(&a)],
            vec![
                Edge {
                    src: 0,
                    dst: 1,
                    label: MorphExpr::GammaTimes(b.clone(), a.clone()),
                },
                Edge {
                    src: 1,
                    dst: 0,
                    label: MorphExpr::GammaTimes(b.clone(), a.clone()),
                },
            ],
        );
        assert!(matches!(
            bad,
            Err(DiagramError::LabelBoundary { edge: 0, .. })
        ));
    }

    #[test]
    fn arcs_agree_with_loop() {
        let d = symmetry(&O::atom("A"), &O::atom("B"));
        let asg = Assignment::new().with("A", vec![0, 1]).with("B", vec![2]);
        let model = GradedModel::generic();
        assert!(!d.compare_arcs(&model, &asg, 0, 1).unwrap().commutes());
        let asg0 = Assignment::new().with("A", vec![0]).with("B", vec![2]);
        assert!(d.compare_arcs(&model, &asg0, 0, 1).unwrap().commutes());
    }
}
