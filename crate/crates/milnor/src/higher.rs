//! Refined higher invariants: defect ledgers above the first non-vanishing
//! degree, the inductively generated indeterminacy lattices, and canonical
//! reduction modulo them.
//!
//! Above the first obstruction the walk matrices are only coset
//! representatives, so the raw defect tensors are not canonical; the public
//! contract is their HNF-canonical reduction modulo the degree's lattice.

use num_bigint::BigInt;

use crate::diagram::Diagram;
use crate::engine::{base_assignment, walk_all, EngineError};
use crate::lattice::{tensor_coords, tensor_from_coords, IntLattice};
use crate::lyndon;
use crate::tensor::{bracket, CentralTensor};

/// Integer lattice of degree-`d` central tensors, with canonical HNF basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaLattice {
    degree: usize,
    q: u8,
    generators: Vec<CentralTensor>,
    lattice: IntLattice,
}

impl DeltaLattice {
    /// The zero lattice at the first non-vanishing degree.
    pub fn initial(degree: usize, q: u8) -> Self {
        DeltaLattice {
            degree,
            q,
            generators: Vec::new(),
            lattice: IntLattice::empty((q as usize).pow(degree as u32)),
        }
    }

    pub fn from_generators(degree: usize, q: u8, generators: Vec<CentralTensor>) -> Self {
        let generators: Vec<CentralTensor> =
            generators.into_iter().filter(|t| !t.is_zero()).collect();
        for g in &generators {
            assert_eq!(g.degree() as usize, degree, "generator degree mismatch");
            assert_eq!(g.start_level(), 1, "generators are central tensors");
        }
        let vectors: Vec<Vec<BigInt>> = generators.iter().map(|g| tensor_coords(g, q)).collect();
        let lattice = IntLattice::from_generators((q as usize).pow(degree as u32), &vectors);
        DeltaLattice { degree, q, generators, lattice }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[CentralTensor] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        self.lattice.elementary_divisors()
    }

    /// Canonical representative of `t` modulo the lattice.
    pub fn reduce(&self, t: &CentralTensor) -> CentralTensor {
        assert_eq!(t.degree() as usize, self.degree, "degree mismatch");
        let reduced = self.lattice.reduce(&tensor_coords(t, self.q));
        tensor_from_coords(1, self.degree as u32, self.q, &reduced)
    }

    pub fn contains(&self, t: &CentralTensor) -> bool {
        self.reduce(t).is_zero()
    }

    /// Equality as subgroups: same degree and identical HNF basis.
    pub fn lattice_equal(&self, other: &DeltaLattice) -> bool {
        self.degree == other.degree && self.lattice == other.lattice
    }
}

/// Ledger entry at one degree: raw and reduced defect tensors per component.
#[derive(Clone, Debug)]
pub struct DegreeEntry {
    pub degree: usize,
    /// Non-canonical walk defects (depend on the zero-padded section).
    pub raw: Vec<CentralTensor>,
    /// Canonical representatives modulo the degree's lattice.
    pub reduced: Vec<CentralTensor>,
}

/// Defect ledger from the first non-vanishing degree up to a chosen bound.
pub struct DefectLedger {
    pub q: u8,
    /// First non-vanishing degree `m`.
    pub first_degree: usize,
    /// Entries for degrees `m ..= max`.
    pub entries: Vec<DegreeEntry>,
    /// Lattices for the same degrees; the one at `m` is zero.
    pub lattices: Vec<DeltaLattice>,
}

impl DefectLedger {
    pub fn entry(&self, degree: usize) -> Option<&DegreeEntry> {
        self.entries.iter().find(|e| e.degree == degree)
    }

    pub fn lattice(&self, degree: usize) -> Option<&DeltaLattice> {
        self.lattices.iter().find(|l| l.degree() == degree)
    }

    /// Two ledgers agree at a degree iff the difference of their raw values
    /// reduces to zero modulo this ledger's lattice.
    pub fn values_agree(&self, degree: usize, other: &DefectLedger) -> bool {
        match (self.entry(degree), other.entry(degree), self.lattice(degree)) {
            (Some(a), Some(b), Some(lat)) => a
                .raw
                .iter()
                .zip(&b.raw)
                .all(|(x, y)| lat.contains(&(x - y))),
            _ => false,
        }
    }
}

/// Advance the lattice chain one degree: bracket every recorded defect and
/// every earlier lattice generator with the full Lyndon basis of the
/// complementary degree.
pub fn delta_next(
    q: u8,
    target_degree: usize,
    recorded: &[DegreeEntry],
    lattices: &[DeltaLattice],
) -> DeltaLattice {
    let mut generators: Vec<CentralTensor> = Vec::new();
    let mut extend = |v: &CentralTensor| {
        let d = v.degree() as usize;
        if v.is_zero() || d >= target_degree {
            return;
        }
        for (_, eta) in lyndon::basis(q, target_degree - d).iter() {
            generators.push(bracket(v, eta));
        }
    };
    for entry in recorded {
        for raw in &entry.raw {
            extend(raw);
        }
    }
    for lattice in lattices {
        for g in lattice.generators() {
            extend(g);
        }
    }
    DeltaLattice::from_generators(target_degree, q, generators)
}

/// Walk the diagram to `max_degree`, recording raw defects and reducing them
/// modulo the inductively built lattices. Returns `None` when every defect
/// vanishes through `max_degree`.
pub fn higher_mu(
    diagram: &Diagram,
    max_degree: usize,
) -> Result<Option<DefectLedger>, EngineError> {
    assert!(max_degree >= 2);
    let q = diagram.num_components() as u8;
    let mut assignment = base_assignment(diagram);
    let mut first_degree = None;
    let mut entries: Vec<DegreeEntry> = Vec::new();
    let mut lattices: Vec<DeltaLattice> = Vec::new();
    // Per component: a word whose represented image is the accumulated
    // product of honest sections of everything recorded so far. Multiplying
    // the defect by its inverse image yields a central representative whose
    // top entry is well defined modulo the degree's lattice.
    let mut witness: Vec<crate::word::GroupWord> =
        vec![crate::word::GroupWord::identity(); diagram.num_components()];
    // Integer relations among recorded same-degree values produce central
    // elements of the section closure beyond the bracket span: the relation
    // word (product of the value witnesses) stays central at every later
    // size, and its tops must be absorbed into the lattices.
    let mut relation_words: Vec<crate::word::GroupWord> = Vec::new();
    loop {
        let level = assignment.level();
        let walk = walk_all(diagram, &assignment);
        let mut centered = Vec::with_capacity(walk.defects.len());
        for (idx, defect) in walk.defects.iter().enumerate() {
            let matrix = if witness[idx].is_identity() {
                defect.clone()
            } else {
                let section = crate::matrix::UniMatrix::represent_word(&witness[idx], level + 1);
                defect.mul(&section.inv())
            };
            let tensor = matrix.central_part().map_err(|(i, jj)| {
                EngineError::NonCentralDefect { component: idx + 1, level, i, j: jj }
            })?;
            centered.push(tensor);
        }
        let record = match first_degree {
            None if centered.iter().any(|t| !t.is_zero()) => {
                first_degree = Some(level);
                Some(DeltaLattice::initial(level, q))
            }
            None => None,
            Some(_) => Some(delta_next(q, level, &entries, &lattices)),
        };
        if let Some(lattice) = record {
            // Tops of the tracked relation words join the lattice at this
            // degree, and the words are re-centered for the next one.
            let mut relation_tops = Vec::with_capacity(relation_words.len());
            for (t, word) in relation_words.iter_mut().enumerate() {
                let image = crate::matrix::UniMatrix::represent_word(word, level + 1);
                let top = image.central_part().map_err(|(i, jj)| {
                    EngineError::NonCentralDefect { component: q as usize + t + 1, level, i, j: jj }
                })?;
                if !top.is_zero() {
                    let v = lyndon::witness_for_tensor(&top, q)
                        .ok_or(EngineError::NotInImage { component: 0 })?;
                    *word = word.mul(&v.inverse());
                    relation_tops.push(top);
                }
            }
            let lattice = if relation_tops.is_empty() {
                lattice
            } else {
                let mut generators = lattice.generators().to_vec();
                generators.extend(relation_tops);
                DeltaLattice::from_generators(level, q, generators)
            };
            let value_witnesses: Vec<crate::word::GroupWord> = centered
                .iter()
                .enumerate()
                .map(|(idx, z)| {
                    lyndon::witness_for_tensor(z, q)
                        .ok_or(EngineError::NotInImage { component: idx + 1 })
                })
                .collect::<Result<_, _>>()?;
            // New relation words from the integer kernel of this degree's
            // raw values.
            let vectors: Vec<Vec<num_bigint::BigInt>> =
                centered.iter().map(|z| tensor_coords(z, q)).collect();
            let dim = (q as usize).pow(level as u32);
            for kernel in crate::lattice::integer_kernel(dim, &vectors) {
                let mut word = crate::word::GroupWord::identity();
                for (v, n) in value_witnesses.iter().zip(&kernel) {
                    let exp = i32::try_from(n).expect("kernel coefficients stay small");
                    word = word.mul(&v.pow(exp));
                }
                if !word.is_identity() {
                    relation_words.push(word);
                }
            }
            for (idx, v) in value_witnesses.into_iter().enumerate() {
                witness[idx] = v.mul(&witness[idx]);
            }
            entries.push(DegreeEntry {
                degree: level,
                reduced: centered.iter().map(|t| lattice.reduce(t)).collect(),
                raw: centered,
            });
            lattices.push(lattice);
        }
        if level >= max_degree {
            break;
        }
        assignment = walk.next;
    }
    Ok(first_degree.map(|m| DefectLedger { q, first_degree: m, entries, lattices }))
}

/// Build a comparison lattice from explicit generators plus an integer
/// multiple of the whole Lyndon span of that degree (the `⟨n, …⟩`
/// presentations used for reporting).
pub fn span_with_scaled_basis(
    degree: usize,
    q: u8,
    scale: i64,
    extra: Vec<CentralTensor>,
) -> DeltaLattice {
    let mut generators: Vec<CentralTensor> = lyndon::basis(q, degree)
        .iter()
        .map(|(_, b)| b.scale(&BigInt::from(scale)))
        .collect();
    generators.extend(extra);
    DeltaLattice::from_generators(degree, q, generators)
}

/// `lk(L) · value ∈ Δ` for every recorded degree above the first: the
/// annihilation check used by the verification suites.
pub fn annihilated_by(ledger: &DefectLedger, n: i64) -> bool {
    ledger
        .entries
        .iter()
        .zip(&ledger.lattices)
        .skip(1)
        .all(|(entry, lattice)| {
            entry.raw.iter().all(|t| lattice.contains(&t.scale(&BigInt::from(n))))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{build, parse_pd};
    use crate::engine::Outcome;
    use crate::tensor::{left_collecting_bracket, IntervalTensor};

    fn diagram(text: &str) -> Diagram {
        build(&parse_pd(text).unwrap()).unwrap()
    }

    #[test]
    fn initial_lattice_is_zero() {
        let l = DeltaLattice::initial(4, 2);
        let t = left_collecting_bracket(&[1, 2, 1, 2]);
        assert_eq!(l.reduce(&t), t);
        assert!(l.contains(&IntervalTensor::zero(1, 4)));
        assert_eq!(l.generator_count(), 0);
    }

    #[test]
    fn reduce_is_idempotent_and_congruent() {
        let gens = vec![
            left_collecting_bracket(&[1, 2, 1]).scale(&BigInt::from(2)),
            left_collecting_bracket(&[1, 2, 2]),
        ];
        let l = DeltaLattice::from_generators(3, 2, gens.clone());
        let t = left_collecting_bracket(&[1, 1, 2]);
        let r = l.reduce(&t);
        assert_eq!(l.reduce(&r), r);
        assert!(l.contains(&(&t - &r)));
        for g in &gens {
            assert!(l.contains(g));
            assert!(l.reduce(g).is_zero());
        }
    }

    #[test]
    fn lattice_equality_is_by_span() {
        let a = DeltaLattice::from_generators(2, 2, vec![left_collecting_bracket(&[1, 2])]);
        let b = DeltaLattice::from_generators(
            2,
            2,
            vec![
                left_collecting_bracket(&[1, 2]),
                left_collecting_bracket(&[1, 2]).scale(&BigInt::from(3)),
            ],
        );
        assert!(a.lattice_equal(&b));
        let doubled =
            DeltaLattice::from_generators(2, 2, vec![left_collecting_bracket(&[1, 2]).scale(&BigInt::from(2))]);
        assert!(!a.lattice_equal(&doubled));
    }

    #[test]
    fn hopf_ledger_is_annihilated_by_lk() {
        let d = diagram("X(1,3,2,4) X(3,1,4,2)");
        let ledger = higher_mu(&d, 5).unwrap().expect("Hopf is non-trivial");
        assert_eq!(ledger.first_degree, 2);
        assert_eq!(ledger.entries.len(), 4);
        // lk(Hopf) = ±1, so everything above degree 2 reduces to zero.
        assert!(annihilated_by(&ledger, 1));
        for entry in ledger.entries.iter().skip(1) {
            for t in &entry.reduced {
                assert!(t.is_zero(), "degree {} not annihilated", entry.degree);
            }
        }
    }

    #[test]
    fn knots_have_no_ledger() {
        let d = diagram("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        assert!(higher_mu(&d, 5).unwrap().is_none());
    }

    #[test]
    fn ledger_raw_defects_project_consistently() {
        // The first entry of the ledger agrees with the engine's psi.
        let d = diagram("X(1,3,2,4) X(3,1,4,2)");
        let ledger = higher_mu(&d, 4).unwrap().unwrap();
        match crate::engine::first_nonvanishing(&d, 8).unwrap() {
            Outcome::Found(r) => {
                assert_eq!(r.degree, ledger.first_degree);
                assert_eq!(r.psi, ledger.entries[0].raw);
            }
            Outcome::TrivialUpTo(_) => panic!("Hopf is non-trivial"),
        }
    }
}
