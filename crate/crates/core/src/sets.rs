//! Symbolic computation in the algebra of subsets of the monoid.
//!
//! The basic set is a cell `pΩ_K = {pw : k ≰ w for all k ∈ K}` given by a
//! prefix and a finite set of blockers; `K = ∅` is the principal ideal
//! `pP`, and a blocker `e` makes the cell empty. Symbolic sets are finite
//! disjoint unions of cells. Every operation here is constructive; the
//! bounded-ball checker decides extensional questions up to a radius and
//! is the safety net for all of them.

use std::collections::BTreeSet;

use crate::cliques::{self, PinfSet};
use crate::error::{Error, Result};
use crate::presentation::MonoidPresentation;
use crate::reversing::{self, Reversal};
use crate::word::{self, Ball, Word};

pub const DEFAULT_REWRITE_DEPTH_CAP: usize = 10_000;

/// A cell `pΩ_K`: the left translate by `p` of the set of elements not
/// right-divisible by any blocker in `K`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell {
    pub prefix: Word,
    pub blockers: Vec<Word>,
}

impl Cell {
    /// Build a cell with canonical, deduplicated, domination-free blockers.
    ///
    /// If a blocker divides another, the larger one is redundant and is
    /// dropped. An identity blocker makes the cell empty; that is left to
    /// membership semantics and not normalized away here.
    pub fn normalized(
        pres: &MonoidPresentation,
        prefix: &Word,
        blockers: &[Word],
        step_cap: usize,
    ) -> Result<Cell> {
        let canon_prefix = reversing::canonicalize(pres, prefix, step_cap)
            .ok_or_else(|| inconclusive("prefix canonicalization"))?;
        let mut canon: BTreeSet<Word> = BTreeSet::new();
        for b in blockers {
            canon.insert(
                reversing::canonicalize(pres, b, step_cap)
                    .ok_or_else(|| inconclusive("blocker canonicalization"))?,
            );
        }
        let list: Vec<Word> = canon.into_iter().collect();
        let mut keep = vec![true; list.len()];
        for j in 0..list.len() {
            for i in 0..list.len() {
                if i != j && keep[i] && keep[j] {
                    match reversing::divides(pres, &list[i], &list[j], step_cap) {
                        Some(true) => {
                            if list[i] != list[j] {
                                keep[j] = false;
                            }
                        }
                        Some(false) => {}
                        None => return Err(inconclusive("blocker domination check")),
                    }
                }
            }
        }
        let blockers = list
            .into_iter()
            .zip(keep)
            .filter_map(|(w, k)| k.then_some(w))
            .collect();
        Ok(Cell {
            prefix: canon_prefix,
            blockers,
        })
    }

    pub fn principal(prefix: Word) -> Cell {
        Cell {
            prefix,
            blockers: Vec::new(),
        }
    }
}

fn inconclusive(what: &str) -> Error {
    Error::Inconclusive(format!("{what} hit the reversing step cap"))
}

/// A finite disjoint union of cells. Disjointness comes from the
/// constructive provenance of each operation and is spot-checked on balls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicSet {
    pub cells: Vec<Cell>,
}

impl SymbolicSet {
    pub fn new(mut cells: Vec<Cell>) -> SymbolicSet {
        cells.sort();
        SymbolicSet { cells }
    }

    pub fn empty() -> SymbolicSet {
        SymbolicSet { cells: Vec::new() }
    }
}

/// Membership of a word in a cell: `p ≤ w` and `pk ≰ w` for every blocker.
///
/// An identity blocker blocks everything that passed the prefix test, so
/// a cell with `e ∈ K` is empty.
pub fn member(pres: &MonoidPresentation, w: &Word, cell: &Cell, class_cap: usize) -> Result<bool> {
    if !word::left_divides(pres, &cell.prefix, w, class_cap)? {
        return Ok(false);
    }
    for k in &cell.blockers {
        if word::left_divides(pres, &cell.prefix.concat(k), w, class_cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of cells of the set containing `w`; more than one is a
/// disjointness violation.
pub fn multiplicity(
    pres: &MonoidPresentation,
    w: &Word,
    set: &SymbolicSet,
    class_cap: usize,
) -> Result<usize> {
    let mut n = 0;
    for c in &set.cells {
        if member(pres, w, c, class_cap)? {
            n += 1;
        }
    }
    Ok(n)
}

pub fn member_set(
    pres: &MonoidPresentation,
    w: &Word,
    set: &SymbolicSet,
    class_cap: usize,
) -> Result<bool> {
    Ok(multiplicity(pres, w, set, class_cap)? > 0)
}

/// The complement of a principal ideal as a disjoint union of cells:
/// for `p = s_1 ⋯ s_k` canonical,
/// `P∖pP = (P∖s_1P) ⊔ s_1(P∖s_2P) ⊔ … ⊔ s_1⋯s_{k-1}(P∖s_kP)`.
pub fn complement_principal(
    pres: &MonoidPresentation,
    p: &Word,
    step_cap: usize,
) -> Result<SymbolicSet> {
    if p.is_identity() {
        return Err(Error::IdentityArgument);
    }
    let canon = reversing::canonicalize(pres, p, step_cap)
        .ok_or_else(|| inconclusive("canonicalization"))?;
    let mut cells = Vec::with_capacity(canon.len());
    for i in 0..canon.len() {
        cells.push(Cell {
            prefix: canon.prefix(i),
            blockers: vec![Word::single(canon.letters()[i])],
        });
    }
    Ok(SymbolicSet::new(cells))
}

/// Outcome of a exact cell intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellIntersection {
    Cell(Cell),
    Empty,
    Inconclusive,
}

/// Exact intersection of two cells.
///
/// With `r = p1 ∨ p2`, the intersection is `rΩ_{K'}` where `K'` collects
/// the shifts `r^{-1}(p_i k ∨ r)` of both blocker sets; shifts without a
/// common multiple impose no constraint, and a shift equal to `e` empties
/// the cell.
pub fn intersect_cells(
    pres: &MonoidPresentation,
    c1: &Cell,
    c2: &Cell,
    step_cap: usize,
) -> Result<CellIntersection> {
    let r = match reversing::complement(pres, &c1.prefix, &c2.prefix, step_cap) {
        Reversal::Complete { left, .. } => c1.prefix.concat(&left),
        Reversal::NoCommonMultiple => return Ok(CellIntersection::Empty),
        Reversal::Inconclusive { .. } => return Ok(CellIntersection::Inconclusive),
    };
    let mut blockers = Vec::new();
    for (owner, ks) in [(&c1.prefix, &c1.blockers), (&c2.prefix, &c2.blockers)] {
        for k in ks {
            let shifted = owner.concat(k);
            match reversing::complement(pres, &r, &shifted, step_cap) {
                Reversal::Complete { left, .. } => {
                    if left.is_empty() {
                        // p_i k divides r: everything in rP is blocked
                        return Ok(CellIntersection::Empty);
                    }
                    blockers.push(left);
                }
                Reversal::NoCommonMultiple => {}
                Reversal::Inconclusive { .. } => return Ok(CellIntersection::Inconclusive),
            }
        }
    }
    Ok(CellIntersection::Cell(Cell::normalized(
        pres, &r, &blockers, step_cap,
    )?))
}

/// Target family for blocker rewriting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteTarget {
    Atoms,
    Pinf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RewriteOutcome {
    Set(SymbolicSet),
    /// The recursion hit the depth cap; for the atom target this happens
    /// whenever the presentation does not have the required closure
    /// property.
    Inconclusive,
}

struct Rewriter<'a> {
    pres: &'a MonoidPresentation,
    target: RewriteTarget,
    pinf: Option<PinfSet>,
    step_cap: usize,
}

impl<'a> Rewriter<'a> {
    fn in_target(&self, w: &Word) -> bool {
        match self.target {
            RewriteTarget::Atoms => w.len() == 1,
            RewriteTarget::Pinf => self
                .pinf
                .as_ref()
                .expect("pinf computed for the pinf target")
                .contains(w),
        }
    }

    /// Normalize a blocker set; `None` marks a provably empty cell
    /// (identity blocker).
    fn normalize(&self, blockers: &BTreeSet<Word>) -> Result<Option<Vec<Word>>> {
        if blockers.iter().any(Word::is_identity) {
            return Ok(None);
        }
        let list: Vec<Word> = blockers.iter().cloned().collect();
        let cell = Cell::normalized(self.pres, &Word::identity(), &list, self.step_cap)?;
        Ok(Some(cell.blockers))
    }

    /// Decompose `Ω_K` into cells whose blockers lie in the target family.
    fn rewrite(&self, blockers: &BTreeSet<Word>, depth: usize) -> Result<Option<Vec<Cell>>> {
        let Some(k) = self.normalize(blockers)? else {
            return Ok(Some(Vec::new())); // empty set
        };
        match k.iter().find(|w| !self.in_target(w)) {
            None => Ok(Some(vec![Cell {
                prefix: Word::identity(),
                blockers: k,
            }])),
            Some(q) => {
                let q = q.clone();
                let rest: BTreeSet<Word> = k.into_iter().filter(|w| *w != q).collect();
                self.reduce(&q, &rest, depth)
            }
        }
    }

    /// Decompose `Ω_{{q} ∪ rest}` by peeling the first atom of the
    /// designated blocker `q ∉ target`:
    /// `Ω_{{q}∪rest} = Ω_{{s}∪rest} ⊔ s[(P∖q'P) ∩ Ω_{s\rest}]` for `q = sq'`.
    fn reduce(&self, q: &Word, rest: &BTreeSet<Word>, depth: usize) -> Result<Option<Vec<Cell>>> {
        if depth == 0 {
            return Ok(None);
        }
        let s = q.letters()[0];
        let s_word = Word::single(s);
        let q_tail = q.suffix_from(1);

        // first part: the designated blocker replaced by its leading atom
        let mut with_atom = rest.clone();
        with_atom.insert(s_word.clone());
        let Some(mut cells) = self.rewrite(&with_atom, depth - 1)? else {
            return Ok(None);
        };

        // second part: shift the remaining blockers into sP
        let mut inner: BTreeSet<Word> = BTreeSet::new();
        inner.insert(q_tail.clone());
        let mut empty_branch = false;
        for k in rest {
            match reversing::complement(self.pres, &s_word, k, self.step_cap) {
                Reversal::Complete { left, .. } => {
                    if left.is_empty() {
                        // k = s blocks all of sP
                        empty_branch = true;
                        break;
                    }
                    let canon = reversing::canonicalize(self.pres, &left, self.step_cap)
                        .ok_or_else(|| inconclusive("shift canonicalization"))?;
                    inner.insert(canon);
                }
                Reversal::NoCommonMultiple => {}
                Reversal::Inconclusive { .. } => {
                    return Err(inconclusive("blocker shift"));
                }
            }
        }
        if !empty_branch {
            // keep the designated element's descendant designated: if the
            // tail is already in the target we may re-enter the generic
            // rewrite, otherwise reduce it directly
            let branch = if self.in_target(&q_tail) || q_tail.is_identity() {
                self.rewrite(&inner, depth - 1)?
            } else {
                let Some(norm) = self.normalize(&inner)? else {
                    return Ok(Some(cells));
                };
                if norm.contains(&q_tail) {
                    let rest2: BTreeSet<Word> = norm.into_iter().filter(|w| *w != q_tail).collect();
                    self.reduce(&q_tail, &rest2, depth - 1)?
                } else {
                    // the tail got absorbed by domination; restart generically
                    self.rewrite(&inner, depth - 1)?
                }
            };
            let Some(branch) = branch else {
                return Ok(None);
            };
            for cell in branch {
                let prefix =
                    reversing::canonicalize(self.pres, &s_word.concat(&cell.prefix), self.step_cap)
                        .ok_or_else(|| inconclusive("prefix canonicalization"))?;
                cells.push(Cell {
                    prefix,
                    blockers: cell.blockers,
                });
            }
        }
        Ok(Some(cells))
    }
}

/// Rewrite `Ω_K` as a disjoint union of cells whose blockers all lie in
/// the target family.
///
/// For the `Pinf` target the recursion terminates whenever the closure
/// saturates; for `Atoms` it terminates exactly when the atom algebra is
/// closed, and reports `Inconclusive` at the depth cap otherwise.
pub fn rewrite_blockers(
    pres: &MonoidPresentation,
    target: RewriteTarget,
    blockers: &[Word],
    depth_cap: usize,
    step_cap: usize,
    pinf_iteration_cap: usize,
) -> Result<RewriteOutcome> {
    let mut canon: BTreeSet<Word> = BTreeSet::new();
    for b in blockers {
        if b.is_identity() {
            return Err(Error::IdentityEntry);
        }
        canon.insert(
            reversing::canonicalize(pres, b, step_cap)
                .ok_or_else(|| inconclusive("blocker canonicalization"))?,
        );
    }
    let pinf = match target {
        RewriteTarget::Atoms => None,
        RewriteTarget::Pinf => {
            let p = cliques::pinf(pres, pinf_iteration_cap, step_cap)?;
            if !p.saturated {
                return Err(Error::UnsaturatedPinf);
            }
            Some(p)
        }
    };
    let rewriter = Rewriter {
        pres,
        target,
        pinf,
        step_cap,
    };
    match rewriter.rewrite(&canon, depth_cap)? {
        Some(cells) => Ok(RewriteOutcome::Set(SymbolicSet::new(cells))),
        None => Ok(RewriteOutcome::Inconclusive),
    }
}

/// Report of a bounded-ball extensional comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub equal: bool,
    pub counterexample: Option<Word>,
    pub left_disjoint: bool,
    pub right_disjoint: bool,
    pub overlap_witness: Option<Word>,
    pub elements_checked: usize,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.equal && self.left_disjoint && self.right_disjoint
    }
}

/// Compare two symbolic sets on every element of length at most `radius`,
/// also verifying that each side's cells are pairwise disjoint there.
pub fn verify_equal(
    pres: &MonoidPresentation,
    left: &SymbolicSet,
    right: &SymbolicSet,
    radius: usize,
    class_cap: usize,
    ball_cap: usize,
) -> Result<VerifyReport> {
    let ball = Ball::build(pres, radius, class_cap, ball_cap)?;
    verify_equal_on(pres, left, right, &ball, class_cap)
}

/// Same as [`verify_equal`] over an already-built ball.
pub fn verify_equal_on(
    pres: &MonoidPresentation,
    left: &SymbolicSet,
    right: &SymbolicSet,
    ball: &Ball,
    class_cap: usize,
) -> Result<VerifyReport> {
    let mut report = VerifyReport {
        equal: true,
        counterexample: None,
        left_disjoint: true,
        right_disjoint: true,
        overlap_witness: None,
        elements_checked: ball.len(),
    };
    for w in ball.words() {
        let m_left = multiplicity(pres, w, left, class_cap)?;
        let m_right = multiplicity(pres, w, right, class_cap)?;
        if m_left > 1 {
            report.left_disjoint = false;
            report.overlap_witness.get_or_insert_with(|| w.clone());
        }
        if m_right > 1 {
            report.right_disjoint = false;
            report.overlap_witness.get_or_insert_with(|| w.clone());
        }
        if (m_left > 0) != (m_right > 0) {
            if report.equal {
                report.counterexample = Some(w.clone());
            }
            report.equal = false;
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleOutcome {
    Success,
    Inconclusive,
    Mismatch { witness: Word },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSample {
    pub atom: Word,
    pub translate: Word,
    pub blockers: Vec<Word>,
    pub outcome: SampleOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub samples: Vec<ClosureSample>,
    pub successes: usize,
    pub inconclusive: usize,
    pub mismatches: usize,
}

impl ClosureReport {
    pub fn all_ok(&self) -> bool {
        self.mismatches == 0 && self.inconclusive == 0
    }
}

/// Experimental check that `(P∖sP) ∩ qΩ_K` stays inside the atom-blocker
/// algebra: for systematically enumerated `(s, q, K ⊆ atoms)`, intersect,
/// rewrite to atoms, and verify the decomposition on a ball.
pub fn algebra_closure_check(
    pres: &MonoidPresentation,
    sample_cap: usize,
    radius: usize,
    depth_cap: usize,
    step_cap: usize,
    class_cap: usize,
    ball_cap: usize,
) -> Result<ClosureReport> {
    let ball = Ball::build(pres, radius, class_cap, ball_cap)?;
    let translate_ball = Ball::build(pres, 3.min(radius), class_cap, ball_cap)?;
    let atoms: Vec<Word> = pres.atoms().map(Word::single).collect();
    let mut samples = Vec::new();
    'outer: for q in translate_ball.words() {
        for s in &atoms {
            for mask in 0..(1u32 << atoms.len().min(16)) {
                if samples.len() >= sample_cap {
                    break 'outer;
                }
                let blockers: Vec<Word> = atoms
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, a)| a.clone())
                    .collect();
                let outcome =
                    closure_sample(pres, s, q, &blockers, &ball, depth_cap, step_cap, class_cap)?;
                samples.push(ClosureSample {
                    atom: s.clone(),
                    translate: q.clone(),
                    blockers,
                    outcome,
                });
            }
        }
    }
    let successes = samples
        .iter()
        .filter(|s| s.outcome == SampleOutcome::Success)
        .count();
    let inconclusive = samples
        .iter()
        .filter(|s| s.outcome == SampleOutcome::Inconclusive)
        .count();
    let mismatches = samples.len() - successes - inconclusive;
    Ok(ClosureReport {
        samples,
        successes,
        inconclusive,
        mismatches,
    })
}

#[allow(clippy::too_many_arguments)]
fn closure_sample(
    pres: &MonoidPresentation,
    s: &Word,
    q: &Word,
    blockers: &[Word],
    ball: &Ball,
    depth_cap: usize,
    step_cap: usize,
    class_cap: usize,
) -> Result<SampleOutcome> {
    let lhs_cell = Cell {
        prefix: Word::identity(),
        blockers: vec![s.clone()],
    };
    let rhs_cell = Cell::normalized(pres, q, blockers, step_cap)?;
    let decomposition = match intersect_cells(pres, &lhs_cell, &rhs_cell, step_cap)? {
        CellIntersection::Empty => SymbolicSet::empty(),
        CellIntersection::Inconclusive => return Ok(SampleOutcome::Inconclusive),
        CellIntersection::Cell(cell) => {
            match rewrite_blockers(
                pres,
                RewriteTarget::Atoms,
                &cell.blockers,
                depth_cap,
                step_cap,
                cliques::DEFAULT_PINF_ITERATION_CAP,
            )? {
                RewriteOutcome::Inconclusive => return Ok(SampleOutcome::Inconclusive),
                RewriteOutcome::Set(set) => SymbolicSet::new(
                    set.cells
                        .into_iter()
                        .map(|c| {
                            let prefix = reversing::canonicalize(
                                pres,
                                &cell.prefix.concat(&c.prefix),
                                step_cap,
                            )
                            .ok_or_else(|| inconclusive("prefix canonicalization"))?;
                            Ok(Cell {
                                prefix,
                                blockers: c.blockers,
                            })
                        })
                        .collect::<Result<Vec<Cell>>>()?,
                ),
            }
        }
    };
    // direct membership: w ∉ sP and w ∈ qΩ_K
    for w in ball.words() {
        let direct =
            !word::left_divides(pres, s, w, class_cap)? && member(pres, w, &rhs_cell, class_cap)?;
        let symbolic = member_set(pres, w, &decomposition, class_cap)?;
        if direct != symbolic {
            return Ok(SampleOutcome::Mismatch { witness: w.clone() });
        }
    }
    Ok(SampleOutcome::Success)
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
    fn membership_semantics() {
        let b3 = fixtures::b3();
        // s1s2s1 lies in s1·Ω_{s1}: s1 divides it, s1s1 does not
        let cell = Cell {
            prefix: w(&b3, "s1"),
            blockers: vec![w(&b3, "s1")],
        };
        assert!(member(&b3, &w(&b3, "s1.s2.s1"), &cell, CAP).unwrap());
        // the identity lies in eΩ_∅ = P
        assert!(member(
            &b3,
            &Word::identity(),
            &Cell::principal(Word::identity()),
            CAP
        )
        .unwrap());
        // an identity blocker empties the cell
        let empty = Cell {
            prefix: Word::identity(),
            blockers: vec![Word::identity()],
        };
        for probe in ["", "s1", "s1.s2"] {
            assert!(!member(&b3, &w(&b3, probe), &empty, CAP).unwrap());
        }
    }

    #[test]
    fn complement_of_principal_ideal() {
        let b3 = fixtures::b3();
        let set = complement_principal(&b3, &w(&b3, "s1.s2"), CAP).unwrap();
        assert_eq!(
            set.cells,
            vec![
                Cell {
                    prefix: Word::identity(),
                    blockers: vec![w(&b3, "s1")]
                },
                Cell {
                    prefix: w(&b3, "s1"),
                    blockers: vec![w(&b3, "s2")]
                },
            ]
        );
        assert!(matches!(
            complement_principal(&b3, &Word::identity(), CAP),
            Err(Error::IdentityArgument)
        ));
    }

    #[test]
    fn complement_partitions_the_ball() {
        let b3 = fixtures::b3();
        let p = w(&b3, "s1.s2");
        let complement = complement_principal(&b3, &p, CAP).unwrap();
        let ball = Ball::build(&b3, 6, CAP, CAP).unwrap();
        for x in ball.words() {
            let in_ideal = word::left_divides(&b3, &p, x, CAP).unwrap();
            let m = multiplicity(&b3, x, &complement, CAP).unwrap();
            assert_eq!(m > 0, !in_ideal, "element {x}");
            assert!(m <= 1, "cells overlap at {x}");
        }
    }

    #[test]
    fn complement_in_b4_uses_the_canonical_word() {
        // s1s3 = s3s1; both complements describe the same set on a ball
        let b4 = fixtures::b4();
        let c1 = complement_principal(&b4, &w(&b4, "s1.s3"), CAP).unwrap();
        let c2 = complement_principal(&b4, &w(&b4, "s3.s1"), CAP).unwrap();
        let report = verify_equal(&b4, &c1, &c2, 6, CAP, CAP).unwrap();
        assert!(report.ok(), "counterexample: {:?}", report.counterexample);
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let b3 = fixtures::b3();
        let c1 = Cell::principal(w(&b3, "s1"));
        let c2 = Cell::principal(w(&b3, "s2"));
        match intersect_cells(&b3, &c1, &c2, CAP).unwrap() {
            CellIntersection::Cell(c) => {
                assert_eq!(c.prefix, w(&b3, "s1.s2.s1"));
                assert!(c.blockers.is_empty());
            }
            other => panic!("expected a cell, got {other:?}"),
        }
    }

    #[test]
    fn intersection_is_idempotent() {
        let b3 = fixtures::b3();
        let c = Cell::normalized(&b3, &w(&b3, "s1"), &[w(&b3, "s2"), w(&b3, "s2")], CAP).unwrap();
        match intersect_cells(&b3, &c, &c, CAP).unwrap() {
            CellIntersection::Cell(d) => assert_eq!(c, d),
            other => panic!("expected a cell, got {other:?}"),
        }
    }

    #[test]
    fn intersection_example_with_blockers() {
        let b3 = fixtures::b3();
        let c1 = Cell {
            prefix: Word::identity(),
            blockers: vec![w(&b3, "s1")],
        };
        let c2 = Cell::principal(w(&b3, "s2"));
        match intersect_cells(&b3, &c1, &c2, CAP).unwrap() {
            CellIntersection::Cell(c) => {
                assert_eq!(c.prefix, w(&b3, "s2"));
                assert_eq!(c.blockers, vec![w(&b3, "s1.s2")]);
            }
            other => panic!("expected a cell, got {other:?}"),
        }
    }

    #[test]
    fn free_prefixes_intersect_empty() {
        let f2 = fixtures::free_monoid(2);
        let c1 = Cell::principal(w(&f2, "a1"));
        let c2 = Cell::principal(w(&f2, "a2"));
        assert_eq!(
            intersect_cells(&f2, &c1, &c2, CAP).unwrap(),
            CellIntersection::Empty
        );
    }

    #[test]
    fn intersection_matches_membership_on_ball() {
        let b3 = fixtures::b3();
        let cells = [
            Cell::principal(Word::identity()),
            Cell::principal(w(&b3, "s1")),
            Cell {
                prefix: Word::identity(),
                blockers: vec![w(&b3, "s1")],
            },
            Cell {
                prefix: w(&b3, "s2"),
                blockers: vec![w(&b3, "s1.s2")],
            },
            Cell {
                prefix: w(&b3, "s1"),
                blockers: vec![w(&b3, "s1"), w(&b3, "s2")],
            },
        ];
        let ball = Ball::build(&b3, 6, CAP, CAP).unwrap();
        for c1 in &cells {
            for c2 in &cells {
                let inter = intersect_cells(&b3, c1, c2, CAP).unwrap();
                for x in ball.words() {
                    let direct =
                        member(&b3, x, c1, CAP).unwrap() && member(&b3, x, c2, CAP).unwrap();
                    let symbolic = match &inter {
                        CellIntersection::Cell(c) => member(&b3, x, c, CAP).unwrap(),
                        CellIntersection::Empty => false,
                        CellIntersection::Inconclusive => panic!("unexpected inconclusive"),
                    };
                    assert_eq!(direct, symbolic, "cells {c1:?} ∩ {c2:?} at {x}");
                }
            }
        }
    }

    #[test]
    fn rewrite_to_atoms_in_b3() {
        let b3 = fixtures::b3();
        for blocker in ["s1.s2", "s1.s2.s1", "s2.s1.s2.s2"] {
            let k = vec![w(&b3, blocker)];
            let outcome = rewrite_blockers(
                &b3,
                RewriteTarget::Atoms,
                &k,
                DEFAULT_REWRITE_DEPTH_CAP,
                CAP,
                cliques::DEFAULT_PINF_ITERATION_CAP,
            )
            .unwrap();
            let RewriteOutcome::Set(set) = outcome else {
                panic!("rewrite was inconclusive for {blocker}")
            };
            assert!(set
                .cells
                .iter()
                .all(|c| c.blockers.iter().all(|b| b.len() == 1)));
            // extensional check against the original single-blocker cell
            let original = SymbolicSet::new(vec![Cell {
                prefix: Word::identity(),
                blockers: k.clone(),
            }]);
            let report = verify_equal(&b3, &set, &original, 7, CAP, CAP).unwrap();
            assert!(report.ok(), "mismatch at {:?}", report.counterexample);
        }
    }

    #[test]
    fn rewrite_with_target_blockers_is_identity() {
        let b3 = fixtures::b3();
        let k = vec![w(&b3, "s1"), w(&b3, "s2")];
        let outcome = rewrite_blockers(
            &b3,
            RewriteTarget::Atoms,
            &k,
            DEFAULT_REWRITE_DEPTH_CAP,
            CAP,
            cliques::DEFAULT_PINF_ITERATION_CAP,
        )
        .unwrap();
        assert_eq!(
            outcome,
            RewriteOutcome::Set(SymbolicSet::new(vec![Cell {
                prefix: Word::identity(),
                blockers: k,
            }]))
        );
    }

    #[test]
    fn rewrite_to_pinf_in_b3() {
        let b3 = fixtures::b3();
        let k = vec![w(&b3, "s1.s2")];
        let outcome = rewrite_blockers(
            &b3,
            RewriteTarget::Pinf,
            &k,
            DEFAULT_REWRITE_DEPTH_CAP,
            CAP,
            cliques::DEFAULT_PINF_ITERATION_CAP,
        )
        .unwrap();
        let RewriteOutcome::Set(set) = outcome else {
            panic!("inconclusive")
        };
        // s1s2 already lies in the minimal set, so the cell is untouched
        assert_eq!(
            set.cells,
            vec![Cell {
                prefix: Word::identity(),
                blockers: k.clone(),
            }]
        );
        // a longer blocker gets decomposed into minimal-set cells
        let pinf = cliques::pinf(&b3, cliques::DEFAULT_PINF_ITERATION_CAP, CAP).unwrap();
        let k2 = vec![w(&b3, "s1.s2.s1.s2")];
        let RewriteOutcome::Set(set2) = rewrite_blockers(
            &b3,
            RewriteTarget::Pinf,
            &k2,
            DEFAULT_REWRITE_DEPTH_CAP,
            CAP,
            cliques::DEFAULT_PINF_ITERATION_CAP,
        )
        .unwrap() else {
            panic!("inconclusive")
        };
        assert!(set2
            .cells
            .iter()
            .all(|c| c.blockers.iter().all(|b| pinf.contains(b))));
        let original = SymbolicSet::new(vec![Cell {
            prefix: Word::identity(),
            blockers: k2,
        }]);
        let report = verify_equal(&b3, &set2, &original, 7, CAP, CAP).unwrap();
        assert!(report.ok(), "mismatch at {:?}", report.counterexample);
    }

    #[test]
    fn closure_check_succeeds_for_b3() {
        let b3 = fixtures::b3();
        let report =
            algebra_closure_check(&b3, 24, 5, DEFAULT_REWRITE_DEPTH_CAP, CAP, CAP, CAP).unwrap();
        assert!(report.all_ok(), "{report:?}");
        assert_eq!(report.samples.len(), 24);
    }
}
