//! Cliques of generator subsets, clique polynomials, and the minimal
//! closure set.
//!
//! A finite subset of the monoid is a clique when it admits a right LCM.
//! For subsets of atoms the decision is by the parabolic criterion: the
//! subset spans a clique exactly when its Coxeter submatrix is of
//! spherical type (standard Brieskorn–Saito theory); reversing validates
//! the decision and produces the LCM witness.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::presentation::{CoxeterMatrix, GeneratorId, MonoidPresentation};
use crate::reversing::{self, SetLcm};
use crate::word::Word;

/// Default cap on closure rounds when computing the minimal set.
pub const DEFAULT_PINF_ITERATION_CAP: usize = 64;

const MAX_ENUMERATED_SUBSETS: usize = 20;

/// A subset of the monoid together with its right LCM.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    pub members: Vec<Word>,
    pub lcm: Word,
    pub lcm_length: usize,
}

/// The sub-presentation spanned by a set of generators.
pub fn subpresentation(pres: &MonoidPresentation, gens: &[GeneratorId]) -> MonoidPresentation {
    let rows: Vec<Vec<u32>> = gens
        .iter()
        .map(|&i| gens.iter().map(|&j| pres.m(i, j).unwrap_or(0)).collect())
        .collect();
    let names = gens
        .iter()
        .map(|&g| pres.generators[g.index()].clone())
        .collect();
    MonoidPresentation::new(
        format!("{}|sub", pres.name),
        names,
        CoxeterMatrix::new(rows).expect("submatrix of a valid matrix"),
        None,
    )
    .expect("sub-presentation of a valid presentation")
}

/// Parabolic criterion: a set of atoms has a right LCM exactly when its
/// Coxeter submatrix is of finite type.
pub fn is_clique_of_atoms(pres: &MonoidPresentation, gens: &[GeneratorId]) -> bool {
    if gens.len() <= 1 {
        return true;
    }
    subpresentation(pres, gens).classify().finite_type
}

fn subsets(n: usize) -> impl Iterator<Item = u32> {
    0..(1u32 << n)
}

/// All cliques contained in a set of atoms, each with its LCM.
///
/// The parabolic criterion decides cliquehood; reversing computes the LCM
/// and validates the decision. A contradiction between the two is a
/// defect, reported as an error rather than a value.
pub fn cliques_of(
    pres: &MonoidPresentation,
    j: &[GeneratorId],
    step_cap: usize,
) -> Result<Vec<Clique>> {
    if j.len() > MAX_ENUMERATED_SUBSETS {
        return Err(Error::FamilyTooLarge {
            size: j.len(),
            max: MAX_ENUMERATED_SUBSETS,
        });
    }
    let mut out = Vec::new();
    for mask in subsets(j.len()) {
        let gens: Vec<GeneratorId> = (0..j.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| j[k])
            .collect();
        let members: Vec<Word> = gens.iter().map(|&g| Word::single(g)).collect();
        let spherical = is_clique_of_atoms(pres, &gens);
        if gens.is_empty() {
            out.push(Clique {
                members,
                lcm: Word::identity(),
                lcm_length: 0,
            });
            continue;
        }
        let reversal = reversing::lcm_set(pres, &members, step_cap);
        match (spherical, reversal) {
            (true, SetLcm::Lcm(lcm)) => {
                let lcm_length = lcm.len();
                out.push(Clique {
                    members,
                    lcm,
                    lcm_length,
                });
            }
            (true, SetLcm::NoCommonMultiple) => {
                return Err(Error::CliqueDisagreement(format!(
                    "criterion says clique, reversing found no common multiple for {:?}",
                    gens
                )))
            }
            (true, SetLcm::Inconclusive { steps_used }) => {
                return Err(Error::Inconclusive(format!(
                    "reversing hit the step cap ({steps_used} steps) on a spherical subset"
                )))
            }
            (false, SetLcm::Lcm(lcm)) => {
                return Err(Error::CliqueDisagreement(format!(
                    "criterion says no clique, reversing found {:?} for {:?}",
                    lcm, gens
                )))
            }
            // a non-spherical subset has no LCM; reversing either certifies
            // that or runs out of budget, both consistent
            (false, _) => {}
        }
    }
    Ok(out)
}

/// The polynomial `Σ_{K ∈ cl(J)} (-1)^{|K|} t^{ℓ(∨K)}` for a set of
/// atoms, with cliquehood decided by the parabolic criterion so that
/// non-spherical subsets are skipped without running reversing on them.
pub fn atom_subset_polynomial(
    pres: &MonoidPresentation,
    j: &[GeneratorId],
    step_cap: usize,
) -> Result<IntPoly> {
    let mut poly = IntPoly::zero();
    for c in cliques_of(pres, j, step_cap)? {
        let sign = if c.members.len() % 2 == 0 { 1 } else { -1 };
        poly.add_term(sign, c.lcm_length);
    }
    Ok(poly)
}

/// The clique polynomial `h(t) = Σ_{K ∈ cl(S)} (-1)^{|K|} t^{ℓ(∨K)}`
/// over all cliques of the full atom set.
pub fn clique_polynomial(pres: &MonoidPresentation, step_cap: usize) -> Result<IntPoly> {
    if !pres.uniform_weights() {
        return Err(Error::NonUniformWeights);
    }
    let atoms: Vec<GeneratorId> = pres.atoms().collect();
    atom_subset_polynomial(pres, &atoms, step_cap)
}

/// The polynomial `g_J(t) = Σ_{K ∈ cl(J)} (-1)^{|K|} t^{ℓ(∨K)}` for a set
/// `J` of arbitrary non-identity elements; non-clique subsets contribute 0.
pub fn subset_polynomial(
    pres: &MonoidPresentation,
    j: &[Word],
    step_cap: usize,
) -> Result<IntPoly> {
    let mut elems: BTreeSet<Word> = BTreeSet::new();
    for w in j {
        if w.is_identity() {
            return Err(Error::IdentityEntry);
        }
        let canon = reversing::canonicalize(pres, w, step_cap).ok_or_else(|| {
            Error::Inconclusive("canonicalization hit the reversing step cap".into())
        })?;
        elems.insert(canon);
    }
    let elems: Vec<Word> = elems.into_iter().collect();
    if elems.len() > MAX_ENUMERATED_SUBSETS {
        return Err(Error::FamilyTooLarge {
            size: elems.len(),
            max: MAX_ENUMERATED_SUBSETS,
        });
    }
    let mut poly = IntPoly::zero();
    for mask in subsets(elems.len()) {
        let subset: Vec<Word> = (0..elems.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| elems[k].clone())
            .collect();
        let sign = if subset.len().is_multiple_of(2) {
            1
        } else {
            -1
        };
        if subset.is_empty() {
            poly.add_term(sign, 0);
            continue;
        }
        match reversing::lcm_set(pres, &subset, step_cap) {
            SetLcm::Lcm(lcm) => poly.add_term(sign, lcm.len()),
            SetLcm::NoCommonMultiple => {}
            SetLcm::Inconclusive { steps_used } => {
                return Err(Error::Inconclusive(format!(
                    "lcm of a subset hit the step cap after {steps_used} steps"
                )))
            }
        }
    }
    Ok(poly)
}

/// The minimal set: closure of the atoms under `p ↦ x\p = x^{-1}(x ∨ p)`
/// for atoms `x`, excluding identity results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinfSet {
    pub elements: Vec<Word>,
    pub saturated: bool,
    pub iterations_used: usize,
}

impl PinfSet {
    pub fn contains(&self, w: &Word) -> bool {
        self.elements.binary_search(w).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub fn pinf(pres: &MonoidPresentation, iteration_cap: usize, step_cap: usize) -> Result<PinfSet> {
    let mut set: BTreeSet<Word> = pres.atoms().map(Word::single).collect();
    let mut frontier: Vec<Word> = set.iter().cloned().collect();
    let mut iterations = 0usize;
    let mut conclusive = true;
    while !frontier.is_empty() && iterations < iteration_cap {
        iterations += 1;
        let mut next = Vec::new();
        for p in &frontier {
            for x in pres.atoms() {
                let x_word = Word::single(x);
                match reversing::complement(pres, &x_word, p, step_cap) {
                    reversing::Reversal::Complete { left, .. } => {
                        if left.is_empty() {
                            continue; // x^{-1}(x ∨ p) = e is excluded
                        }
                        let canon = match reversing::canonicalize(pres, &left, step_cap) {
                            Some(c) => c,
                            None => {
                                conclusive = false;
                                continue;
                            }
                        };
                        if set.insert(canon.clone()) {
                            next.push(canon);
                        }
                    }
                    reversing::Reversal::NoCommonMultiple => {}
                    reversing::Reversal::Inconclusive { .. } => {
                        conclusive = false;
                    }
                }
            }
        }
        frontier = next;
    }
    let saturated = conclusive && frontier.is_empty();
    Ok(PinfSet {
        elements: set.into_iter().collect(),
        saturated,
        iterations_used: iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const CAP: usize = 100_000;

    fn w(pres: &MonoidPresentation, s: &str) -> Word {
        pres.parse_word(s).unwrap()
    }

    #[test]
    fn all_subsets_are_cliques_in_b4() {
        let b4 = fixtures::b4();
        let atoms: Vec<GeneratorId> = b4.atoms().collect();
        let cliques = cliques_of(&b4, &atoms, CAP).unwrap();
        assert_eq!(cliques.len(), 8);
        let full = cliques.iter().find(|c| c.members.len() == 3).unwrap();
        assert_eq!(full.lcm_length, 6);
    }

    #[test]
    fn free_monoid_has_only_trivial_cliques() {
        let f2 = fixtures::free_monoid(2);
        let atoms: Vec<GeneratorId> = f2.atoms().collect();
        let cliques = cliques_of(&f2, &atoms, CAP).unwrap();
        assert_eq!(cliques.len(), 3); // empty set and two singletons
    }

    #[test]
    fn affine_triple_is_not_a_clique() {
        let a2t = fixtures::a2_tilde();
        let atoms: Vec<GeneratorId> = a2t.atoms().collect();
        let cliques = cliques_of(&a2t, &atoms, 20_000).unwrap();
        // all pairs are cliques, the full triple is not
        assert_eq!(cliques.len(), 1 + 3 + 3);
        assert!(cliques.iter().all(|c| c.members.len() <= 2));
    }

    #[test]
    fn clique_polynomials_of_the_braid_monoids() {
        let b3 = fixtures::b3();
        assert_eq!(
            clique_polynomial(&b3, CAP).unwrap(),
            IntPoly::from_i64(&[1, -2, 0, 1])
        );
        let b4 = fixtures::b4();
        assert_eq!(
            clique_polynomial(&b4, CAP).unwrap(),
            IntPoly::from_i64(&[1, -3, 1, 2, 0, 0, -1])
        );
        let n = fixtures::free_monoid(1);
        assert_eq!(
            clique_polynomial(&n, CAP).unwrap(),
            IntPoly::from_i64(&[1, -1])
        );
    }

    #[test]
    fn subset_polynomial_examples() {
        let b3 = fixtures::b3();
        let g = subset_polynomial(&b3, &[w(&b3, "s1"), w(&b3, "s2")], CAP).unwrap();
        assert_eq!(g, IntPoly::from_i64(&[1, -2, 0, 1]));

        let b4 = fixtures::b4();
        let g13 = subset_polynomial(&b4, &[w(&b4, "s1"), w(&b4, "s3")], CAP).unwrap();
        assert_eq!(g13, IntPoly::from_i64(&[1, -2, 1]));

        let single = subset_polynomial(&b3, &[w(&b3, "s1.s2.s1")], CAP).unwrap();
        assert_eq!(single, IntPoly::from_i64(&[1, 0, 0, -1]));

        assert!(matches!(
            subset_polynomial(&b3, &[Word::identity()], CAP),
            Err(Error::IdentityEntry)
        ));
    }

    #[test]
    fn subset_polynomial_dedupes_equal_elements() {
        let b3 = fixtures::b3();
        let g = subset_polynomial(&b3, &[w(&b3, "s1.s2.s1"), w(&b3, "s2.s1.s2")], CAP).unwrap();
        assert_eq!(g, IntPoly::from_i64(&[1, 0, 0, -1]));
    }

    #[test]
    fn pinf_of_b3() {
        let b3 = fixtures::b3();
        let p = pinf(&b3, DEFAULT_PINF_ITERATION_CAP, CAP).unwrap();
        assert!(p.saturated);
        let expect: Vec<Word> = vec![w(&b3, "s1"), w(&b3, "s2"), w(&b3, "s1.s2"), w(&b3, "s2.s1")]
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(p.elements, expect);
    }

    #[test]
    fn pinf_of_right_angled_is_atoms() {
        let raam = fixtures::raam_rank3();
        let p = pinf(&raam, DEFAULT_PINF_ITERATION_CAP, CAP).unwrap();
        assert!(p.saturated);
        assert_eq!(p.elements.len(), 3);
        assert!(p.elements.iter().all(|e| e.len() == 1));
    }

    #[test]
    fn pinf_of_single_generator() {
        let n = fixtures::free_monoid(1);
        let p = pinf(&n, DEFAULT_PINF_ITERATION_CAP, CAP).unwrap();
        assert!(p.saturated);
        assert_eq!(p.elements, vec![Word::single(GeneratorId(0))]);
    }

    #[test]
    fn pinf_of_b4_strictly_contains_atoms_and_saturates() {
        let b4 = fixtures::b4();
        let p = pinf(&b4, DEFAULT_PINF_ITERATION_CAP, CAP).unwrap();
        assert!(p.saturated);
        assert!(p.len() > 3);
        for g in b4.atoms() {
            assert!(p.contains(&Word::single(g)));
        }
    }
}
