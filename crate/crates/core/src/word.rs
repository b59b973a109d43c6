//! Exact word arithmetic by homogeneous rewriting.
//!
//! Everything here is the brute-force route: equality, divisibility and
//! enumeration are decided by exhaustively closing words under single
//! applications of the braid relations. The relations preserve length, so
//! every equivalence class is finite and the closure always terminates
//! (subject to the explicit caps). The reversing module provides the fast
//! route; the two are cross-checked against each other in the test suites.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::presentation::{GeneratorId, MonoidPresentation};

/// Default cap on the size of one equivalence class.
pub const DEFAULT_CLASS_CAP: usize = 100_000;
/// Default cap on the number of elements in a ball.
pub const DEFAULT_BALL_CAP: usize = 1_000_000;

/// A word in the generators; the empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<GeneratorId>);

impl Word {
    pub fn new(letters: Vec<GeneratorId>) -> Word {
        Word(letters)
    }

    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn single(g: GeneratorId) -> Word {
        Word(vec![g])
    }

    pub fn letters(&self) -> &[GeneratorId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, g: GeneratorId) {
        self.0.push(g);
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word(self.0[..k].to_vec())
    }

    pub fn suffix_from(&self, k: usize) -> Word {
        Word(self.0[k..].to_vec())
    }

    /// The alternating product `⟨st⟩^m = sts...` of length `m`.
    pub fn alternating(s: GeneratorId, t: GeneratorId, m: u32) -> Word {
        let mut v = Vec::with_capacity(m as usize);
        for k in 0..m {
            v.push(if k % 2 == 0 { s } else { t });
        }
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // total order by (length, lexicographic); within one equivalence
        // class all lengths agree, so class-minimal means lex-minimal
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.0.iter().map(|g| format!("g{}", g.0)).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// One full equivalence class of words, with its lexicographically least
/// member as representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivClass {
    pub representative: Word,
    pub members: Vec<Word>,
}

impl EquivClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

/// The defining relations as unordered word pairs, both directions usable.
fn relations(pres: &MonoidPresentation) -> Vec<(Word, Word)> {
    let mut rels = Vec::new();
    let n = pres.rank() as u32;
    for i in 0..n {
        for j in (i + 1)..n {
            let (s, t) = (GeneratorId(i), GeneratorId(j));
            if let Some(m) = pres.m(s, t) {
                rels.push((Word::alternating(s, t, m), Word::alternating(t, s, m)));
            }
        }
    }
    rels
}

fn validate_word(pres: &MonoidPresentation, w: &Word) -> Result<()> {
    for g in w.letters() {
        if g.index() >= pres.rank() {
            return Err(Error::MalformedInput(format!(
                "generator index {} out of range",
                g.0
            )));
        }
    }
    Ok(())
}

/// Close `w` under single relation-subword replacements.
///
/// Errors with `CapExceeded` when the class would grow past `cap`.
pub fn equivalence_class(pres: &MonoidPresentation, w: &Word, cap: usize) -> Result<EquivClass> {
    validate_word(pres, w)?;
    let rels = relations(pres);
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(cur) = queue.pop_front() {
        for (lhs, rhs) in &rels {
            for (pat, rep) in [(lhs, rhs), (rhs, lhs)] {
                let m = pat.len();
                if cur.len() < m {
                    continue;
                }
                for start in 0..=(cur.len() - m) {
                    if &cur.letters()[start..start + m] == pat.letters() {
                        let mut next = cur.letters().to_vec();
                        next[start..start + m].copy_from_slice(rep.letters());
                        let next = Word::new(next);
                        debug_assert_eq!(next.len(), cur.len());
                        if seen.insert(next.clone()) {
                            if seen.len() > cap {
                                return Err(Error::CapExceeded {
                                    what: "equivalence class size",
                                    cap,
                                });
                            }
                            queue.push_back(next);
                        }
                    }
                }
            }
        }
    }
    let mut members: Vec<Word> = seen.into_iter().collect();
    members.sort();
    let representative = members[0].clone();
    Ok(EquivClass {
        representative,
        members,
    })
}

/// Lexicographically least word of the class of `w`.
pub fn canonical_rep(pres: &MonoidPresentation, w: &Word, cap: usize) -> Result<Word> {
    Ok(equivalence_class(pres, w, cap)?.representative)
}

/// Whether `u` and `v` represent the same monoid element.
pub fn equal(pres: &MonoidPresentation, u: &Word, v: &Word, cap: usize) -> Result<bool> {
    if u.len() != v.len() {
        validate_word(pres, u)?;
        validate_word(pres, v)?;
        return Ok(false);
    }
    Ok(equivalence_class(pres, u, cap)?.contains(v))
}

/// Whether `p` left-divides `q`, i.e. `q = p·r` for some `r`.
pub fn left_divides(pres: &MonoidPresentation, p: &Word, q: &Word, cap: usize) -> Result<bool> {
    Ok(left_cancel(pres, p, q, cap)?.is_some())
}

/// The quotient `p^{-1} q` when `p` left-divides `q` (canonical), else `None`.
///
/// Scans the class of `q` for a member whose prefix lies in the class of
/// `p`; Artin monoids are left cancellative, so the suffix is well defined
/// as an element.
pub fn left_cancel(
    pres: &MonoidPresentation,
    p: &Word,
    q: &Word,
    cap: usize,
) -> Result<Option<Word>> {
    validate_word(pres, p)?;
    validate_word(pres, q)?;
    if p.len() > q.len() {
        return Ok(None);
    }
    if p.is_empty() {
        return Ok(Some(canonical_rep(pres, q, cap)?));
    }
    let p_class = equivalence_class(pres, p, cap)?;
    let q_class = equivalence_class(pres, q, cap)?;
    let k = p.len();
    let mut best: Option<Word> = None;
    for member in &q_class.members {
        if p_class.contains(&member.prefix(k)) {
            let suffix = canonical_rep(pres, &member.suffix_from(k), cap)?;
            if best.as_ref().is_none_or(|b| suffix < *b) {
                best = Some(suffix);
            }
        }
    }
    Ok(best)
}

/// A ball of the monoid: all elements of length at most `radius` as
/// canonical representatives, together with the right-multiplication graph.
///
/// Elements are indexed in increasing (length, lex) order, so ids sort by
/// length. Built once, this is the shared engine behind enumeration
/// oracles.
pub struct Ball {
    radius: usize,
    rank: usize,
    words: Vec<Word>,
    index: HashMap<Word, u32>,
    layer_start: Vec<usize>,
    trans: Vec<Vec<Option<u32>>>,
}

impl Ball {
    pub fn build(
        pres: &MonoidPresentation,
        radius: usize,
        class_cap: usize,
        ball_cap: usize,
    ) -> Result<Ball> {
        let rank = pres.rank();
        let mut words: Vec<Word> = vec![Word::identity()];
        let mut index: HashMap<Word, u32> = HashMap::new();
        index.insert(Word::identity(), 0);
        let mut trans: Vec<Vec<Option<u32>>> = vec![vec![None; rank]];
        let mut layer_start = vec![0usize];
        let mut layer_from = 0usize;
        for _len in 1..=radius {
            let layer_to = words.len();
            layer_start.push(layer_to);
            for id in layer_from..layer_to {
                for g in 0..rank {
                    let mut cand = words[id].clone();
                    cand.push(GeneratorId(g as u32));
                    let target = match index.get(&cand) {
                        Some(&t) => t,
                        None => {
                            let class = equivalence_class(pres, &cand, class_cap)?;
                            match index.get(&class.representative) {
                                Some(&t) => {
                                    index.insert(cand, t);
                                    t
                                }
                                None => {
                                    let t = words.len() as u32;
                                    if words.len() + 1 > ball_cap {
                                        return Err(Error::CapExceeded {
                                            what: "ball size",
                                            cap: ball_cap,
                                        });
                                    }
                                    words.push(class.representative.clone());
                                    trans.push(vec![None; rank]);
                                    index.insert(class.representative, t);
                                    if cand != words[t as usize] {
                                        index.insert(cand, t);
                                    }
                                    t
                                }
                            }
                        }
                    };
                    trans[id][g] = Some(target);
                }
            }
            layer_from = layer_to;
        }
        layer_start.push(words.len());
        // Keep only canonical words in the index to bound memory.
        index.retain(|w, &mut id| words[id as usize] == *w);
        index.shrink_to_fit();
        Ok(Ball {
            radius,
            rank,
            words,
            index,
            layer_start,
            trans,
        })
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, id: u32) -> &Word {
        &self.words[id as usize]
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Ids of all elements with length exactly `len`.
    pub fn layer(&self, len: usize) -> std::ops::Range<u32> {
        if len + 1 >= self.layer_start.len() && len > self.radius {
            return 0..0;
        }
        let a = self.layer_start[len] as u32;
        let b = if len + 1 < self.layer_start.len() {
            self.layer_start[len + 1] as u32
        } else {
            self.words.len() as u32
        };
        a..b
    }

    /// Ids of all elements with length at most `len`.
    pub fn ids_up_to(&self, len: usize) -> std::ops::Range<u32> {
        let len = len.min(self.radius);
        0..(self.layer_start[len + 1] as u32)
    }

    /// Id of a canonical word, if in the ball.
    pub fn id_of_canonical(&self, w: &Word) -> Option<u32> {
        self.index.get(w).copied()
    }

    /// Canonicalize an arbitrary word by walking the right Cayley graph.
    /// `None` when the element is outside the ball.
    pub fn canonical_id(&self, w: &Word) -> Option<u32> {
        let mut cur = 0u32;
        for g in w.letters() {
            cur = self.trans[cur as usize][g.index()]?;
        }
        Some(cur)
    }

    /// Right multiplication by a generator inside the ball.
    pub fn step(&self, id: u32, g: GeneratorId) -> Option<u32> {
        self.trans[id as usize][g.index()]
    }

    /// Elements per length, `counts[k] = #{p : ℓ(p) = k}`.
    pub fn growth_coefficients(&self) -> Vec<usize> {
        (0..=self.radius).map(|k| self.layer(k).len()).collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Canonical representatives of all elements of length at most `radius`.
pub fn ball(
    pres: &MonoidPresentation,
    radius: usize,
    class_cap: usize,
    ball_cap: usize,
) -> Result<Vec<Word>> {
    Ok(Ball::build(pres, radius, class_cap, ball_cap)?
        .words
        .clone())
}

/// Element counts per length, `0..=radius`.
pub fn growth_coefficients(
    pres: &MonoidPresentation,
    radius: usize,
    class_cap: usize,
    ball_cap: usize,
) -> Result<Vec<usize>> {
    Ok(Ball::build(pres, radius, class_cap, ball_cap)?.growth_coefficients())
}

/// Dense bitsets recording, for every ball element, its set of left
/// divisors within the ball.
pub struct DivisorTable {
    blocks_per_row: usize,
    bits: Vec<u64>,
}

impl DivisorTable {
    /// For each element `r` of the ball, mark every `p` with `p ≤ r`.
    /// Built by forward reachability in the right Cayley graph.
    pub fn build(ball: &Ball) -> DivisorTable {
        let n = ball.len();
        let blocks_per_row = n.div_ceil(64);
        let mut bits = vec![0u64; blocks_per_row * n];
        let mut stack: Vec<u32> = Vec::new();
        let mut visited = vec![false; n];
        for p in 0..n as u32 {
            // every element reachable from p is a right multiple of p
            stack.clear();
            visited.iter_mut().for_each(|v| *v = false);
            stack.push(p);
            visited[p as usize] = true;
            while let Some(r) = stack.pop() {
                let row = r as usize * blocks_per_row;
                bits[row + (p as usize >> 6)] |= 1u64 << (p as usize & 63);
                for g in 0..ball.rank {
                    if let Some(next) = ball.trans[r as usize][g] {
                        if !visited[next as usize] {
                            visited[next as usize] = true;
                            stack.push(next);
                        }
                    }
                }
            }
        }
        DivisorTable {
            blocks_per_row,
            bits,
        }
    }

    pub fn divides(&self, p: u32, r: u32) -> bool {
        let row = r as usize * self.blocks_per_row;
        self.bits[row + (p as usize >> 6)] >> (p as usize & 63) & 1 == 1
    }
}
