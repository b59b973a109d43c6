//! Finite lists over the monoid (with ∞ entries), the two-child branching
//! step, the tree it generates, and the inclusion–exclusion polynomial.
//!
//! A list is a leaf when every entry is an atom or ∞, or when some entry
//! is the identity (the only unit here). A non-leaf list branches into
//! `λ1` (the first factorizable entry `pq` replaced by its leading atom
//! `p`) and `λ2` (every entry shifted by `x ↦ p^{-1}(p ∨ x)`). The exact
//! recursion `Z(λ) = Z(λ1) + t^{ℓ(p)}·Z(λ2)` is the engine behind the
//! reduction of positivity checks to atoms, and is property-tested rather
//! than assumed.

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::presentation::{GeneratorId, MonoidPresentation};
use crate::reversing::{self, Reversal, SetLcm};
use crate::word::{self, Word};

pub const DEFAULT_DEPTH_CAP: usize = 10_000;
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

/// One entry of a list: a monoid element or ∞.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entry {
    Element(Word),
    Infinity,
}

impl Entry {
    pub fn word(&self) -> Option<&Word> {
        match self {
            Entry::Element(w) => Some(w),
            Entry::Infinity => None,
        }
    }
}

/// A finite list `λ: I_n → P ∪ {∞}`; entries are kept canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaList {
    entries: Vec<Entry>,
}

impl LambdaList {
    /// Build a list, canonicalizing every element entry.
    pub fn new(
        pres: &MonoidPresentation,
        entries: Vec<Entry>,
        step_cap: usize,
    ) -> Result<LambdaList> {
        let mut canon = Vec::with_capacity(entries.len());
        for e in entries {
            match e {
                Entry::Infinity => canon.push(Entry::Infinity),
                Entry::Element(w) => {
                    let c = reversing::canonicalize(pres, &w, step_cap).ok_or_else(|| {
                        Error::Inconclusive("canonicalization hit the reversing step cap".into())
                    })?;
                    canon.push(Entry::Element(c));
                }
            }
        }
        Ok(LambdaList { entries: canon })
    }

    pub fn from_words(
        pres: &MonoidPresentation,
        words: &[Word],
        step_cap: usize,
    ) -> Result<LambdaList> {
        LambdaList::new(
            pres,
            words.iter().map(|w| Entry::Element(w.clone())).collect(),
            step_cap,
        )
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of entry lengths, with `ℓ(∞) = 0`.
    pub fn total_length(&self) -> usize {
        self.entries
            .iter()
            .filter_map(|e| e.word().map(Word::len))
            .sum()
    }

    pub fn contains_identity(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.word().is_some_and(Word::is_identity))
    }
}

/// A list is a leaf when all entries are atoms or ∞, or some entry is the
/// identity.
pub fn is_leaf(lambda: &LambdaList) -> bool {
    if lambda.contains_identity() {
        return true;
    }
    lambda
        .entries
        .iter()
        .all(|e| e.word().is_none_or(|w| w.len() == 1))
}

/// A factorization choice for the branching step: entry `index` is split
/// as `p·q` with `p` the given atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepChoice {
    pub index: usize,
    pub atom: GeneratorId,
}

/// The deterministic choice: leftmost entry of length ≥ 2, split at the
/// first letter of its canonical representative.
pub fn default_choice(lambda: &LambdaList) -> Option<StepChoice> {
    for (i, e) in lambda.entries.iter().enumerate() {
        if let Some(w) = e.word() {
            if w.len() >= 2 {
                return Some(StepChoice {
                    index: i,
                    atom: w.letters()[0],
                });
            }
        }
    }
    None
}

/// Atom left-divisors of a word, for randomized factorization choices.
pub fn atom_divisors(
    pres: &MonoidPresentation,
    w: &Word,
    step_cap: usize,
) -> Result<Vec<GeneratorId>> {
    let mut out = Vec::new();
    for g in pres.atoms() {
        match reversing::divides(pres, &Word::single(g), w, step_cap) {
            Some(true) => out.push(g),
            Some(false) => {}
            None => {
                return Err(Error::Inconclusive(
                    "atom divisibility hit the reversing step cap".into(),
                ))
            }
        }
    }
    Ok(out)
}

/// Branch a non-leaf list into `(λ1, λ2)` with the deterministic choice.
pub fn step(
    pres: &MonoidPresentation,
    lambda: &LambdaList,
    step_cap: usize,
) -> Result<(LambdaList, LambdaList)> {
    let choice = default_choice(lambda).ok_or(Error::LeafInput)?;
    step_with(pres, lambda, choice, step_cap)
}

/// Branch with an explicit factorization choice. The recursion identity
/// holds for any atom left-divisor of the chosen entry, which the test
/// suite exploits with a randomized chooser.
pub fn step_with(
    pres: &MonoidPresentation,
    lambda: &LambdaList,
    choice: StepChoice,
    step_cap: usize,
) -> Result<(LambdaList, LambdaList)> {
    if is_leaf(lambda) {
        return Err(Error::LeafInput);
    }
    let entry = lambda
        .entries
        .get(choice.index)
        .and_then(Entry::word)
        .ok_or(Error::LeafInput)?;
    if entry.len() < 2 {
        return Err(Error::LeafInput);
    }
    let p = Word::single(choice.atom);
    // q with entry = p·q; for the canonical first letter this is just the
    // suffix, otherwise reversing cancels the chosen atom
    let q = if entry.letters()[0] == choice.atom {
        entry.suffix_from(1)
    } else {
        reversing::left_quotient(pres, &p, entry, step_cap)?.ok_or_else(|| {
            Error::MalformedInput(format!(
                "atom {} does not divide the chosen entry",
                choice.atom.0
            ))
        })?
    };

    let mut lambda1 = lambda.entries.clone();
    lambda1[choice.index] = Entry::Element(p.clone());

    let mut lambda2 = Vec::with_capacity(lambda.len());
    for (j, e) in lambda.entries.iter().enumerate() {
        if j == choice.index {
            lambda2.push(Entry::Element(q.clone()));
            continue;
        }
        match e {
            Entry::Infinity => lambda2.push(Entry::Infinity),
            Entry::Element(u) => match reversing::complement(pres, &p, u, step_cap) {
                Reversal::Complete { left, .. } => lambda2.push(Entry::Element(left)),
                Reversal::NoCommonMultiple => lambda2.push(Entry::Infinity),
                Reversal::Inconclusive { steps_used } => {
                    return Err(Error::Inconclusive(format!(
                        "shift by {} hit the step cap after {steps_used} steps",
                        choice.atom.0
                    )))
                }
            },
        }
    }
    Ok((
        LambdaList::new(pres, lambda1, step_cap)?,
        LambdaList::new(pres, lambda2, step_cap)?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeVerdict {
    Finite,
    Inconclusive,
}

/// Exhaustive expansion report of the branching tree rooted at a list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeReport {
    pub verdict: TreeVerdict,
    pub node_count: usize,
    pub leaf_count: usize,
    pub max_depth: usize,
    /// On `Inconclusive`, the 1/2-branch prefix that hit a cap.
    pub witness_branch: Option<String>,
}

/// Expand the tree depth-first until every branch reaches a leaf or a cap
/// is hit.
pub fn build_tree(
    pres: &MonoidPresentation,
    root: &LambdaList,
    depth_cap: usize,
    node_cap: usize,
    step_cap: usize,
) -> Result<TreeReport> {
    let mut node_count = 0usize;
    let mut leaf_count = 0usize;
    let mut max_depth = 0usize;
    // stack of (list, depth, path); path entries are the branch digits
    let mut stack: Vec<(LambdaList, usize, Vec<u8>)> = vec![(root.clone(), 0, Vec::new())];
    while let Some((node, depth, path)) = stack.pop() {
        node_count += 1;
        max_depth = max_depth.max(depth);
        if node_count > node_cap || depth > depth_cap {
            return Ok(TreeReport {
                verdict: TreeVerdict::Inconclusive,
                node_count,
                leaf_count,
                max_depth,
                witness_branch: Some(branch_string(&path)),
            });
        }
        if is_leaf(&node) {
            leaf_count += 1;
            continue;
        }
        match step(pres, &node, step_cap) {
            Ok((l1, l2)) => {
                let mut p2 = path.clone();
                p2.push(2);
                let mut p1 = path;
                p1.push(1);
                stack.push((l2, depth + 1, p2));
                stack.push((l1, depth + 1, p1));
            }
            Err(Error::Inconclusive(_)) => {
                return Ok(TreeReport {
                    verdict: TreeVerdict::Inconclusive,
                    node_count,
                    leaf_count,
                    max_depth,
                    witness_branch: Some(branch_string(&path)),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(TreeReport {
        verdict: TreeVerdict::Finite,
        node_count,
        leaf_count,
        max_depth,
        witness_branch: None,
    })
}

fn branch_string(path: &[u8]) -> String {
    path.iter().map(|d| char::from(b'0' + d)).collect()
}

/// The inclusion–exclusion polynomial
/// `Z(λ)(t) = Σ_{U ⊆ I_n} (-1)^{|U|} t^{ℓ(∨λ(U))}`,
/// with subsets through ∞ or without a common multiple contributing 0.
///
/// Entries must not be the identity; see [`z_poly_with_units`] for the
/// extension used by the recursion tests.
pub fn z_poly(pres: &MonoidPresentation, lambda: &LambdaList, step_cap: usize) -> Result<IntPoly> {
    if lambda.contains_identity() {
        return Err(Error::IdentityEntry);
    }
    z_poly_with_units(pres, lambda, step_cap)
}

/// The same inclusion–exclusion sum without the identity-entry guard.
/// A list containing the identity always sums to the zero polynomial.
pub fn z_poly_with_units(
    pres: &MonoidPresentation,
    lambda: &LambdaList,
    step_cap: usize,
) -> Result<IntPoly> {
    let n = lambda.len();
    if n > 24 {
        return Err(Error::FamilyTooLarge { size: n, max: 24 });
    }
    let mut poly = IntPoly::zero();
    'subset: for mask in 0..(1u32 << n) {
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        if mask == 0 {
            poly.add_term(sign, 0);
            continue;
        }
        let mut selected: Vec<Word> = Vec::new();
        for k in 0..n {
            if mask >> k & 1 == 1 {
                match &lambda.entries[k] {
                    Entry::Infinity => continue 'subset,
                    Entry::Element(w) => selected.push(w.clone()),
                }
            }
        }
        match reversing::lcm_set(pres, &selected, step_cap) {
            SetLcm::Lcm(l) => poly.add_term(sign, l.len()),
            SetLcm::NoCommonMultiple => {}
            SetLcm::Inconclusive { steps_used } => {
                return Err(Error::Inconclusive(format!(
                    "lcm over a subset hit the step cap after {steps_used} steps"
                )))
            }
        }
    }
    Ok(poly)
}

/// Repeatedly delete entries that are right multiples of another entry;
/// the inclusion–exclusion polynomial is invariant under this. Decided by
/// the rewriting-closure divisibility from [`word`].
pub fn remove_dominated(
    pres: &MonoidPresentation,
    lambda: &LambdaList,
    class_cap: usize,
) -> Result<LambdaList> {
    let mut entries: Vec<Entry> = lambda.entries.clone();
    'restart: loop {
        for j in 0..entries.len() {
            let Some(wj) = entries[j].word() else {
                continue;
            };
            for i in 0..entries.len() {
                if i == j {
                    continue;
                }
                let Some(wi) = entries[i].word() else {
                    continue;
                };
                if word::left_divides(pres, wi, wj, class_cap)? {
                    entries.remove(j);
                    continue 'restart;
                }
            }
        }
        return Ok(LambdaList { entries });
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const CAP: usize = 100_000;

    fn list(pres: &MonoidPresentation, spec: &[&str]) -> LambdaList {
        let entries = spec
            .iter()
            .map(|s| {
                if *s == "inf" {
                    Entry::Infinity
                } else {
                    Entry::Element(pres.parse_word(s).unwrap())
                }
            })
            .collect();
        LambdaList::new(pres, entries, CAP).unwrap()
    }

    #[test]
    fn leaf_detection() {
        let b3 = fixtures::b3();
        assert!(is_leaf(&list(&b3, &["s1", "inf", "s2"])));
        assert!(!is_leaf(&list(&b3, &["s1.s2", "s1"])));
        assert!(is_leaf(&list(&b3, &["s1.s2", ""])));
    }

    #[test]
    fn step_example_in_b3() {
        let b3 = fixtures::b3();
        let lambda = list(&b3, &["s1.s2", "s1"]);
        let (l1, l2) = step(&b3, &lambda, CAP).unwrap();
        assert_eq!(l1, list(&b3, &["s1", "s1"]));
        assert_eq!(l2, list(&b3, &["s2", ""]));
    }

    #[test]
    fn step_example_in_free_monoid() {
        let f2 = fixtures::free_monoid(2);
        let lambda = list(&f2, &["a1.a1", "a2"]);
        let (l1, l2) = step(&f2, &lambda, CAP).unwrap();
        assert_eq!(l1, list(&f2, &["a1", "a2"]));
        assert_eq!(l2, list(&f2, &["a1", "inf"]));
    }

    #[test]
    fn step_shift_via_lcm() {
        let b3 = fixtures::b3();
        let lambda = list(&b3, &["s2.s1", "s1.s2"]);
        let (l1, l2) = step(&b3, &lambda, CAP).unwrap();
        assert_eq!(l1, list(&b3, &["s2", "s1.s2"]));
        // s2 ∨ s1s2 = s2s1s2, so the shift of s1s2 is s1s2
        assert_eq!(l2, list(&b3, &["s1", "s1.s2"]));
    }

    #[test]
    fn step_on_leaf_errors() {
        let b3 = fixtures::b3();
        assert!(matches!(
            step(&b3, &list(&b3, &["s1", "s2"]), CAP),
            Err(Error::LeafInput)
        ));
    }

    #[test]
    fn tree_of_the_b3_example() {
        let b3 = fixtures::b3();
        let report = build_tree(&b3, &list(&b3, &["s1.s2", "s1"]), 100, 1000, CAP).unwrap();
        assert_eq!(report.verdict, TreeVerdict::Finite);
        assert_eq!(report.node_count, 3);
        assert_eq!(report.leaf_count, 2);
        assert_eq!(report.max_depth, 1);
    }

    #[test]
    fn tree_of_a_leaf_is_one_node() {
        let b3 = fixtures::b3();
        let report = build_tree(&b3, &list(&b3, &["s1", "inf"]), 100, 1000, CAP).unwrap();
        assert_eq!(report.verdict, TreeVerdict::Finite);
        assert_eq!(report.node_count, 1);
    }

    #[test]
    fn tree_is_finite_for_finite_type_input() {
        let b4 = fixtures::b4();
        let report = build_tree(
            &b4,
            &list(&b4, &["s1.s2.s3", "s2.s1"]),
            DEFAULT_DEPTH_CAP,
            DEFAULT_NODE_CAP,
            CAP,
        )
        .unwrap();
        assert_eq!(report.verdict, TreeVerdict::Finite);
    }

    #[test]
    fn tree_caps_report_inconclusive() {
        let b4 = fixtures::b4();
        let report = build_tree(&b4, &list(&b4, &["s1.s2.s3", "s2.s1"]), 2, 1000, CAP).unwrap();
        assert_eq!(report.verdict, TreeVerdict::Inconclusive);
        assert!(report.witness_branch.is_some());
    }

    #[test]
    fn z_poly_examples() {
        let b3 = fixtures::b3();
        assert_eq!(
            z_poly(&b3, &list(&b3, &["s1", "s2"]), CAP).unwrap(),
            IntPoly::from_i64(&[1, -2, 0, 1])
        );
        assert_eq!(
            z_poly(&b3, &list(&b3, &["inf"]), CAP).unwrap(),
            IntPoly::from_i64(&[1])
        );
        // duplicate entries matter: (s1, s1) gives 1 - 2t + t = 1 - t
        assert_eq!(
            z_poly(&b3, &list(&b3, &["s1", "s1"]), CAP).unwrap(),
            IntPoly::from_i64(&[1, -1])
        );
        assert!(matches!(
            z_poly(&b3, &list(&b3, &["s1", ""]), CAP),
            Err(Error::IdentityEntry)
        ));
    }

    #[test]
    fn z_with_units_vanishes() {
        let b3 = fixtures::b3();
        assert_eq!(
            z_poly_with_units(&b3, &list(&b3, &["s2", ""]), CAP).unwrap(),
            IntPoly::zero()
        );
        assert_eq!(
            z_poly_with_units(&b3, &list(&b3, &["s1.s2", "", "inf"]), CAP).unwrap(),
            IntPoly::zero()
        );
    }

    #[test]
    fn remove_dominated_examples() {
        let b3 = fixtures::b3();
        assert_eq!(
            remove_dominated(&b3, &list(&b3, &["s1", "s1.s2"]), CAP).unwrap(),
            list(&b3, &["s1"])
        );
        let f2 = fixtures::free_monoid(2);
        assert_eq!(
            remove_dominated(&f2, &list(&f2, &["a1", "a2"]), CAP).unwrap(),
            list(&f2, &["a1", "a2"])
        );
        // s1 divides s2s1s2 = s1s2s1
        assert_eq!(
            remove_dominated(&b3, &list(&b3, &["s1", "s2.s1.s2"]), CAP).unwrap(),
            list(&b3, &["s1"])
        );
        // duplicates collapse to one entry
        assert_eq!(
            remove_dominated(&b3, &list(&b3, &["s2", "s2"]), CAP).unwrap(),
            list(&b3, &["s2"])
        );
    }

    #[test]
    fn recursion_identity_on_the_examples() {
        let b3 = fixtures::b3();
        for spec in [
            vec!["s1.s2", "s1"],
            vec!["s2.s1", "s1.s2"],
            vec!["s1.s2.s1", "s2", "inf"],
            vec!["s2.s2", "s1"],
        ] {
            let lambda = list(&b3, &spec);
            let (l1, l2) = step(&b3, &lambda, CAP).unwrap();
            let p_len = 1; // the split atom
            let lhs = z_poly_with_units(&b3, &lambda, CAP).unwrap();
            let rhs = z_poly_with_units(&b3, &l1, CAP).unwrap().add(
                &IntPoly::monomial(1.into(), p_len).mul(&z_poly_with_units(&b3, &l2, CAP).unwrap()),
            );
            assert_eq!(lhs, rhs, "recursion identity failed for {spec:?}");
        }
    }
}
