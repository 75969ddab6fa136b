//! The invariant engine: level-by-level lifting of arc assignments along the
//! diagram walks, walk defects, detection of the first non-vanishing degree,
//! and recovery of the longitude class from the defect.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::diagram::Diagram;
use crate::lattice::{tensor_coords, SpanSolver};
use crate::lyndon::{self, Decomposition};
use crate::matrix::UniMatrix;
use crate::tensor::{bracket, CentralTensor, IntervalTensor};
use crate::word::IndexWord;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("defect of component {component} at level {level} is not central (entry {i},{j})")]
    NonCentralDefect { component: usize, level: usize, i: usize, j: usize },
    #[error("refusing to lift past a non-vanishing defect (component {component}, degree {degree})")]
    ObstructedLift { component: usize, degree: usize },
    #[error("Wirtinger relation fails at crossing {crossing} at level {level}")]
    WirtingerFailure { crossing: usize, level: usize },
    #[error("defect of component {component} is not a commutator image")]
    NotInImage { component: usize },
}

/// Arc-to-matrix assignment at a fixed level `h`: one size-`h` matrix per
/// arc, base arcs mapped to their generator matrices.
#[derive(Clone)]
pub struct ArcAssignment {
    level: usize,
    matrices: Vec<UniMatrix>,
}

impl ArcAssignment {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn matrix(&self, arc: usize) -> &UniMatrix {
        &self.matrices[arc]
    }
}

/// The abelianization assignment: every arc of component `j` goes to the
/// size-2 generator matrix of `x_j`.
pub fn base_assignment(diagram: &Diagram) -> ArcAssignment {
    let matrices = diagram
        .arcs()
        .iter()
        .map(|arc| UniMatrix::generator(arc.component as u8, 2))
        .collect();
    ArcAssignment { level: 2, matrices }
}

/// Walk component `j` one size up: conjugate the lifted generator matrix
/// through the component's under-passages. Returns the size-`h+1` matrices
/// for the arcs of component `j` (in walk order) and the defect matrix
/// measuring the failure of the walk to close up.
pub fn walk_defect(
    diagram: &Diagram,
    assignment: &ArcAssignment,
    j: usize,
) -> (Vec<(usize, UniMatrix)>, UniMatrix) {
    let size = assignment.level + 1;
    let generator = UniMatrix::generator(j as u8, size);
    let walk = diagram.walk(j);
    let mut arc_matrices = Vec::with_capacity(walk.len().max(1));
    let mut current = generator.clone();
    if walk.is_empty() {
        // Fully-over component: single closed arc, trivially closed walk.
        arc_matrices.push((diagram.base_arc(j), generator.clone()));
        return (arc_matrices, UniMatrix::identity(size));
    }
    let mut lifted: BTreeMap<usize, UniMatrix> = BTreeMap::new();
    for (k, step) in walk.iter().enumerate() {
        arc_matrices.push((step.alpha, current.clone()));
        let over = lifted
            .entry(step.beta)
            .or_insert_with(|| assignment.matrix(step.beta).section_lift());
        current = current.conjugate_by(over, step.epsilon);
        let _ = k;
    }
    let defect = generator.inv().mul(&current);
    (arc_matrices, defect)
}

/// The walk defect reduced to its central tensor. Fails when defects at
/// lower levels did not vanish, so the defect matrix is not central.
pub fn psi(
    diagram: &Diagram,
    assignment: &ArcAssignment,
    j: usize,
) -> Result<CentralTensor, EngineError> {
    let (_, defect) = walk_defect(diagram, assignment, j);
    defect.central_part().map_err(|(i, jj)| EngineError::NonCentralDefect {
        component: j,
        level: assignment.level,
        i,
        j: jj,
    })
}

/// Outcome of walking every component at one level.
pub struct LevelWalk {
    /// Defect matrices, one per component, of size `level + 1`.
    pub defects: Vec<UniMatrix>,
    /// The assembled size-`level + 1` assignment (coset representatives when
    /// defects do not vanish).
    pub next: ArcAssignment,
}

/// Walk all components at the assignment's level.
pub fn walk_all(diagram: &Diagram, assignment: &ArcAssignment) -> LevelWalk {
    let size = assignment.level + 1;
    let mut matrices = vec![UniMatrix::identity(size); diagram.num_arcs()];
    let mut defects = Vec::with_capacity(diagram.num_components());
    for j in 1..=diagram.num_components() {
        let (arc_matrices, defect) = walk_defect(diagram, assignment, j);
        for (arc, m) in arc_matrices {
            matrices[arc] = m;
        }
        defects.push(defect);
    }
    LevelWalk { defects, next: ArcAssignment { level: size, matrices } }
}

/// Lift the assignment one level. Refuses when some defect is non-zero and
/// re-verifies the Wirtinger relation at every crossing of the lifted
/// assignment.
pub fn lift(diagram: &Diagram, assignment: &ArcAssignment) -> Result<ArcAssignment, EngineError> {
    let walk = walk_all(diagram, assignment);
    for (idx, defect) in walk.defects.iter().enumerate() {
        if !defect.is_identity() {
            return Err(EngineError::ObstructedLift {
                component: idx + 1,
                degree: assignment.level,
            });
        }
    }
    verify_wirtinger(diagram, &walk.next)?;
    Ok(walk.next)
}

fn verify_wirtinger(diagram: &Diagram, assignment: &ArcAssignment) -> Result<(), EngineError> {
    for (ci, crossing) in diagram.crossings().iter().enumerate() {
        let expected = assignment
            .matrix(crossing.under_in_arc)
            .conjugate_by(assignment.matrix(crossing.over_arc), crossing.sign);
        if &expected != assignment.matrix(crossing.under_out_arc) {
            return Err(EngineError::WirtingerFailure { crossing: ci, level: assignment.level });
        }
    }
    Ok(())
}

/// The first non-vanishing invariant of a diagram.
pub struct InvariantResult {
    /// First non-vanishing degree `m`.
    pub degree: usize,
    /// Per component: the walk defect tensor (degree `m`).
    pub psi: Vec<CentralTensor>,
    /// Per component: the longitude class recovered through the commutator
    /// map (degree `m - 1`).
    pub longitude: Vec<CentralTensor>,
}

impl InvariantResult {
    /// The classical coefficient table: for each component, the longitude
    /// class coefficients indexed by words of length `m - 1`.
    pub fn mu_numbers(&self) -> Vec<BTreeMap<IndexWord, BigInt>> {
        self.longitude
            .iter()
            .map(|t| t.terms().map(|(w, c)| (w.clone(), c.clone())).collect())
            .collect()
    }

    /// Lyndon decompositions of the per-component defect tensors.
    pub fn psi_decompositions(&self, q: u8) -> Vec<Decomposition> {
        self.psi.iter().map(|t| lyndon::decompose(t, q)).collect()
    }
}

pub enum Outcome {
    Found(InvariantResult),
    /// All defects vanish through the given degree.
    TrivialUpTo(usize),
}

/// Iterate base assignment, defect, lift until some defect is non-zero or
/// `max_degree` is exhausted.
pub fn first_nonvanishing(diagram: &Diagram, max_degree: usize) -> Result<Outcome, EngineError> {
    assert!(max_degree >= 2, "max degree must be at least 2");
    let q = diagram.num_components() as u8;
    let mut assignment = base_assignment(diagram);
    loop {
        let walk = walk_all(diagram, &assignment);
        let mut psis = Vec::with_capacity(walk.defects.len());
        for (idx, defect) in walk.defects.iter().enumerate() {
            let tensor = defect.central_part().map_err(|(i, jj)| {
                EngineError::NonCentralDefect {
                    component: idx + 1,
                    level: assignment.level,
                    i,
                    j: jj,
                }
            })?;
            psis.push(tensor);
        }
        if psis.iter().any(|t| !t.is_zero()) {
            let degree = assignment.level;
            let longitude = psis
                .iter()
                .enumerate()
                .map(|(idx, t)| invert_commutator_map(t, (idx + 1) as u8, q))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Outcome::Found(InvariantResult { degree, psi: psis, longitude }));
        }
        if assignment.level >= max_degree {
            return Ok(Outcome::TrivialUpTo(max_degree));
        }
        verify_wirtinger(diagram, &walk.next)?;
        assignment = walk.next;
    }
}

/// Invert the additive map `ω ↦ [λ^{(j)}, ω]` on a degree-`m` defect tensor:
/// the unique degree-`m-1` Lie tensor mapping onto it (unique up to the
/// meridian direction `λ^{(j)}` itself when `m = 2`, which is excluded).
pub fn invert_commutator_map(
    defect: &CentralTensor,
    j: u8,
    q: u8,
) -> Result<CentralTensor, EngineError> {
    let m = defect.degree() as usize;
    assert!(m >= 2, "defect tensors have degree at least 2");
    if defect.is_zero() {
        return Ok(IntervalTensor::zero(1, (m - 1) as u32));
    }
    let meridian = IntervalTensor::generator(1, j);
    let basis = lyndon::basis(q, m - 1);
    let usable: Vec<&(IndexWord, CentralTensor)> = basis
        .iter()
        .filter(|(w, _)| !(w.len() == 1 && w[0] == j))
        .collect();
    let images: Vec<Vec<BigInt>> =
        usable.iter().map(|(_, b)| tensor_coords(&bracket(&meridian, b), q)).collect();
    let solver = SpanSolver::new((q as usize).pow(m as u32), &images);
    let coeffs = solver
        .solve(&tensor_coords(defect, q))
        .ok_or(EngineError::NotInImage { component: j as usize })?;
    let mut out = IntervalTensor::zero(1, (m - 1) as u32);
    for ((_, b), c) in usable.iter().zip(&coeffs) {
        out = &out + &b.scale(c);
    }
    Ok(out)
}

/// Rough size of the dense coefficient space a degree-`d` computation over
/// `q` components can touch, in coefficient slots; callers may want to warn
/// before launching `d ≥ 10` with `q ≥ 3`.
pub fn coefficient_slots(q: u8, degree: usize) -> u128 {
    let base = q as u128;
    let mut per_degree = 1u128;
    let mut total = 0u128;
    for d in 1..=degree as u32 {
        per_degree = per_degree.saturating_mul(base);
        total = total.saturating_add(per_degree.saturating_mul(degree as u128 + 1 - d as u128));
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{build, parse_pd};
    use crate::tensor::left_collecting_bracket;

    fn diagram(text: &str) -> Diagram {
        build(&parse_pd(text).unwrap()).unwrap()
    }

    #[test]
    fn base_assignment_is_generators() {
        let d = diagram("X(1,3,2,4) X(3,1,4,2)");
        let a = base_assignment(&d);
        for (idx, arc) in d.arcs().iter().enumerate() {
            assert_eq!(a.matrix(idx), &UniMatrix::generator(arc.component as u8, 2));
        }
        verify_wirtinger(&d, &a).unwrap();
    }

    #[test]
    fn hopf_first_invariant_is_the_linking_number() {
        let d = diagram("X(1,3,2,4) X(3,1,4,2)");
        let lk = d.linking_number().unwrap();
        let result = match first_nonvanishing(&d, 8).unwrap() {
            Outcome::Found(r) => r,
            Outcome::TrivialUpTo(_) => panic!("Hopf link has linking number ±1"),
        };
        assert_eq!(result.degree, 2);
        let expected1 = left_collecting_bracket(&[1, 2]).scale(&BigInt::from(lk));
        assert_eq!(result.psi[0], expected1);
        // ψ(2) from the other component: lk·[λ^{(2)}, λ^{(1)}].
        let expected2 = left_collecting_bracket(&[2, 1]).scale(&BigInt::from(lk));
        assert_eq!(result.psi[1], expected2);
        // Longitude classes: lk·λ^{(other)}.
        assert_eq!(result.longitude[0], IntervalTensor::generator(1, 2).scale(&BigInt::from(lk)));
        assert_eq!(result.longitude[1], IntervalTensor::generator(1, 1).scale(&BigInt::from(lk)));
    }

    #[test]
    fn knots_are_trivial_at_every_degree() {
        let d = diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        match first_nonvanishing(&d, 6).unwrap() {
            Outcome::TrivialUpTo(6) => {}
            _ => panic!("a knot has no non-vanishing Milnor invariant"),
        }
    }

    #[test]
    fn split_unknots_lift_forever() {
        // Two kinked unknots side by side: no inter-component crossings.
        let d = diagram("X(1,2,2,1) X(3,4,4,3)");
        assert_eq!(d.num_components(), 2);
        let mut a = base_assignment(&d);
        for _ in 0..5 {
            a = lift(&d, &a).unwrap();
        }
        assert_eq!(a.level(), 7);
    }

    #[test]
    fn lift_refuses_at_the_obstruction() {
        let d = diagram("X(1,3,2,4) X(3,1,4,2)");
        let a = base_assignment(&d);
        match lift(&d, &a) {
            Err(EngineError::ObstructedLift { degree: 2, .. }) => {}
            _ => panic!("expected a refused lift at degree 2"),
        }
    }

    #[test]
    fn invert_commutator_map_round_trips() {
        for (j, q) in [(1u8, 2u8), (2, 2), (1, 3), (3, 3)] {
            for n in 1..=4usize {
                let basis = lyndon::basis(q, n);
                // A haphazard integer combination of basis tensors, with the
                // meridian direction excluded at degree 1.
                let mut omega = IntervalTensor::zero(1, n as u32);
                for (k, (w, b)) in basis.iter().enumerate() {
                    if n == 1 && w[0] == j {
                        continue;
                    }
                    omega = &omega + &b.scale(&BigInt::from(2 * k as i64 - 3));
                }
                let image = bracket(&IntervalTensor::generator(1, j), &omega);
                let recovered = invert_commutator_map(&image, j, q).unwrap();
                assert_eq!(recovered, omega, "j={j} q={q} n={n}");
            }
        }
        let zero = IntervalTensor::zero(1, 3);
        assert!(invert_commutator_map(&zero, 1, 2).unwrap().is_zero());
    }

    #[test]
    fn non_image_tensors_are_rejected() {
        // λ^{(1)}λ^{(1)} is not in the image of ω ↦ [λ^{(1)}, ω].
        let mut t = IntervalTensor::zero(1, 2);
        t.add_term(&[1, 1], &BigInt::from(1));
        assert!(matches!(
            invert_commutator_map(&t, 1, 2),
            Err(EngineError::NotInImage { .. })
        ));
    }
}
