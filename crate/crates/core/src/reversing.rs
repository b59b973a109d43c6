//! Right LCMs and complements by subword reversing.
//!
//! The complement table on atoms is `s\t = ⟨ts⟩^{m-1}` (so that
//! `s·(s\t) = ⟨st⟩^m = s∨t`), extended to words by the reversing grid
//! recursion. Reaching an ∞ entry is reported as `NoCommonMultiple`; for
//! Artin presentations the braid-relation complement is complete, so this
//! is a certificate, and the enumeration oracle cross-checks it on balls.
//! Reversing is not known to terminate for every Coxeter matrix, so all
//! entry points take a step cap and return `Inconclusive` when it runs out.

use crate::error::{Error, Result};
use crate::presentation::{GeneratorId, MonoidPresentation};
use crate::word::{self, Ball, DivisorTable, Word};

/// Default cap on atom-level reversing steps for one query.
pub const DEFAULT_STEP_CAP: usize = 1_000_000;

/// Outcome of reversing a pair of words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reversal {
    /// Both complements exist: `u·left = v·right = u∨v`.
    Complete {
        left: Word,
        right: Word,
    },
    NoCommonMultiple,
    Inconclusive {
        steps_used: usize,
    },
}

/// Outcome of a binary LCM computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LcmResult {
    Lcm {
        /// Canonical representative of `p ∨ q`.
        lcm: Word,
        /// `p\q`, with `p·comp_left = p∨q`.
        comp_left: Word,
        /// `q\p`, with `q·comp_right = p∨q`.
        comp_right: Word,
    },
    NoCommonMultiple,
    Inconclusive {
        steps_used: usize,
    },
}

impl LcmResult {
    pub fn lcm_word(&self) -> Option<&Word> {
        match self {
            LcmResult::Lcm { lcm, .. } => Some(lcm),
            _ => None,
        }
    }
}

/// Outcome of an LCM over a nonempty collection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetLcm {
    Lcm(Word),
    NoCommonMultiple,
    Inconclusive { steps_used: usize },
}

impl SetLcm {
    pub fn lcm_word(&self) -> Option<&Word> {
        match self {
            SetLcm::Lcm(w) => Some(w),
            _ => None,
        }
    }
}

/// `s\t` on atoms: `e` if `s = t`, the alternating word `⟨ts⟩^{m-1}` when
/// `m = m(s,t)` is finite, and `None` when `m = ∞`.
pub fn atom_complement(pres: &MonoidPresentation, s: GeneratorId, t: GeneratorId) -> Option<Word> {
    if s == t {
        return Some(Word::identity());
    }
    pres.m(s, t).map(|m| Word::alternating(t, s, m - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Signed {
    Pos(GeneratorId),
    Neg(GeneratorId),
}

/// Reverse the pair `(u, v)` to the complements `(u\v, v\u)`.
///
/// Works on the signed word `u^{-1}v`, repeatedly rewriting a factor
/// `y^{-1}x` into `(y\x)(x\y)^{-1}` until the word has the terminal shape
/// `(u\v)(v\u)^{-1}`. Two stacks keep the scan linear: the processed
/// prefix is always in terminal shape (positives before negatives), so a
/// rewrite can only fire at the boundary.
pub fn complement(pres: &MonoidPresentation, u: &Word, v: &Word, step_cap: usize) -> Reversal {
    let mut pending: Vec<Signed> = Vec::with_capacity(u.len() + v.len());
    // pending is a stack: push v reversed, then u; tops pop in word order
    for &g in v.letters().iter().rev() {
        pending.push(Signed::Pos(g));
    }
    for &g in u.letters() {
        pending.push(Signed::Neg(g));
    }
    let mut done: Vec<Signed> = Vec::new();
    let mut steps = 0usize;
    while let Some(next) = pending.pop() {
        match (done.last().copied(), next) {
            (Some(Signed::Neg(y)), Signed::Pos(x)) => {
                steps += 1;
                if steps > step_cap {
                    return Reversal::Inconclusive { steps_used: steps };
                }
                done.pop();
                if x == y {
                    continue;
                }
                let Some(m) = pres.m(y, x) else {
                    return Reversal::NoCommonMultiple;
                };
                // y^{-1}x -> (y\x)(x\y)^{-1}; push the replacement so its
                // letters pop in order and get re-examined
                let y_under_x = Word::alternating(x, y, m - 1); // y\x
                let x_under_y = Word::alternating(y, x, m - 1); // x\y
                for &g in x_under_y.letters() {
                    pending.push(Signed::Neg(g));
                }
                for &g in y_under_x.letters().iter().rev() {
                    pending.push(Signed::Pos(g));
                }
            }
            _ => done.push(next),
        }
    }
    // done = positives then negatives: (u\v) then (v\u) reversed
    let split = done
        .iter()
        .position(|l| matches!(l, Signed::Neg(_)))
        .unwrap_or(done.len());
    let left = Word::new(
        done[..split]
            .iter()
            .map(|l| match l {
                Signed::Pos(g) => *g,
                Signed::Neg(_) => unreachable!(),
            })
            .collect(),
    );
    let right = Word::new(
        done[split..]
            .iter()
            .rev()
            .map(|l| match l {
                Signed::Neg(g) => *g,
                Signed::Pos(_) => unreachable!("terminal shape has no positive after a negative"),
            })
            .collect(),
    );
    Reversal::Complete { left, right }
}

/// Right LCM of two words via reversing; the `lcm` field is canonical.
pub fn lcm(pres: &MonoidPresentation, p: &Word, q: &Word, step_cap: usize) -> LcmResult {
    match complement(pres, p, q, step_cap) {
        Reversal::Complete { left, right } => {
            let raw = p.concat(&left);
            match canonicalize(pres, &raw, step_cap) {
                Some(canon) => LcmResult::Lcm {
                    lcm: canon,
                    comp_left: left,
                    comp_right: right,
                },
                None => LcmResult::Inconclusive {
                    steps_used: step_cap,
                },
            }
        }
        Reversal::NoCommonMultiple => LcmResult::NoCommonMultiple,
        Reversal::Inconclusive { steps_used } => LcmResult::Inconclusive { steps_used },
    }
}

/// Right LCM of a nonempty collection, folding the binary LCM.
pub fn lcm_set(pres: &MonoidPresentation, items: &[Word], step_cap: usize) -> SetLcm {
    assert!(!items.is_empty(), "lcm_set needs a nonempty collection");
    let mut acc = items[0].clone();
    for item in &items[1..] {
        match complement(pres, &acc, item, step_cap) {
            Reversal::Complete { left, .. } => {
                acc = acc.concat(&left);
            }
            Reversal::NoCommonMultiple => return SetLcm::NoCommonMultiple,
            Reversal::Inconclusive { steps_used } => return SetLcm::Inconclusive { steps_used },
        }
    }
    match canonicalize(pres, &acc, step_cap) {
        Some(canon) => SetLcm::Lcm(canon),
        None => SetLcm::Inconclusive {
            steps_used: step_cap,
        },
    }
}

/// Divisibility by reversing: `p ≤ q` iff `q\p = e`.
/// `None` when the reversing step cap runs out.
pub fn divides(pres: &MonoidPresentation, p: &Word, q: &Word, step_cap: usize) -> Option<bool> {
    match complement(pres, q, p, step_cap) {
        Reversal::Complete { left, .. } => Some(left.is_empty()),
        Reversal::NoCommonMultiple => Some(false),
        Reversal::Inconclusive { .. } => None,
    }
}

/// Left quotient `p^{-1} q` when `p ≤ q`; `Ok(None)` when `p` does not
/// divide `q`.
pub fn left_quotient(
    pres: &MonoidPresentation,
    p: &Word,
    q: &Word,
    step_cap: usize,
) -> Result<Option<Word>> {
    match complement(pres, q, p, step_cap) {
        Reversal::Complete { left, right } => {
            if left.is_empty() {
                Ok(Some(right))
            } else {
                Ok(None)
            }
        }
        Reversal::NoCommonMultiple => Ok(None),
        Reversal::Inconclusive { steps_used } => Err(Error::Inconclusive(format!(
            "reversing hit the step cap after {steps_used} steps"
        ))),
    }
}

/// Lexicographically least representative by reversing alone, greedily:
/// the first letter of the least word is the least atom dividing the
/// element. `None` when some divisibility probe hits the step cap, which
/// can happen off spherical type.
pub fn canonicalize_strict(pres: &MonoidPresentation, w: &Word, step_cap: usize) -> Option<Word> {
    let mut out = Vec::with_capacity(w.len());
    let mut cur = w.clone();
    'outer: while !cur.is_empty() {
        for g in pres.atoms() {
            let probe = Word::single(g);
            match complement(pres, &cur, &probe, step_cap) {
                Reversal::Complete { left, right } => {
                    if left.is_empty() {
                        // g divides cur; right = g\cur is the quotient
                        out.push(g);
                        cur = right;
                        continue 'outer;
                    }
                }
                Reversal::NoCommonMultiple => {}
                Reversal::Inconclusive { .. } => return None,
            }
        }
        unreachable!("a nonempty word is divisible by its first letter");
    }
    Some(Word::new(out))
}

/// Lexicographically least representative. Uses the greedy reversing
/// route and falls back to the always-terminating rewriting closure when
/// a probe is inconclusive (the closure is exhaustive on the finite
/// equivalence class, so it cannot diverge, only exceed its cap).
pub fn canonicalize(pres: &MonoidPresentation, w: &Word, step_cap: usize) -> Option<Word> {
    canonicalize_strict(pres, w, step_cap)
        .or_else(|| word::canonical_rep(pres, w, word::DEFAULT_CLASS_CAP).ok())
}

/// Independent brute-force LCM oracle over an enumerated ball.
///
/// Holds a ball of radius `length_cap` with its divisor table; the LCM of
/// `p` and `q` is the first element, in length order, that both divide.
/// Cannot certify the absence of a common multiple, only report that none
/// exists within the cap.
pub struct LcmOracle {
    ball: Ball,
    divisors: DivisorTable,
}

impl LcmOracle {
    pub fn build(
        pres: &MonoidPresentation,
        length_cap: usize,
        class_cap: usize,
        ball_cap: usize,
    ) -> Result<LcmOracle> {
        let ball = Ball::build(pres, length_cap, class_cap, ball_cap)?;
        let divisors = DivisorTable::build(&ball);
        Ok(LcmOracle { ball, divisors })
    }

    pub fn ball(&self) -> &Ball {
        &self.ball
    }

    /// Minimal-length common right multiple of two ball elements, by id.
    pub fn minimal_common_multiple(&self, p: u32, q: u32) -> Option<u32> {
        (0..self.ball.len() as u32)
            .find(|&r| self.divisors.divides(p, r) && self.divisors.divides(q, r))
    }

    /// All common right multiples of `p` and `q` within the ball.
    pub fn common_multiples(&self, p: u32, q: u32) -> Vec<u32> {
        (0..self.ball.len() as u32)
            .filter(|&r| self.divisors.divides(p, r) && self.divisors.divides(q, r))
            .collect()
    }

    pub fn divides(&self, p: u32, q: u32) -> bool {
        self.divisors.divides(p, q)
    }

    pub fn lcm(
        &self,
        pres: &MonoidPresentation,
        p: &Word,
        q: &Word,
        class_cap: usize,
    ) -> Result<LcmResult> {
        let (Some(pid), Some(qid)) = (self.ball.canonical_id(p), self.ball.canonical_id(q)) else {
            return Ok(LcmResult::Inconclusive {
                steps_used: self.ball.len(),
            });
        };
        match self.minimal_common_multiple(pid, qid) {
            Some(rid) => {
                let lcm = self.ball.word(rid).clone();
                let comp_left = word::left_cancel(pres, p, &lcm, class_cap)?
                    .expect("oracle found p dividing the multiple");
                let comp_right = word::left_cancel(pres, q, &lcm, class_cap)?
                    .expect("oracle found q dividing the multiple");
                Ok(LcmResult::Lcm {
                    lcm,
                    comp_left,
                    comp_right,
                })
            }
            None => Ok(LcmResult::Inconclusive {
                steps_used: self.ball.len(),
            }),
        }
    }
}

/// One-shot brute-force LCM: enumerate common right multiples by
/// increasing length and take the least. `Inconclusive` when no common
/// multiple of length at most `length_cap` exists.
pub fn oracle_lcm(
    pres: &MonoidPresentation,
    p: &Word,
    q: &Word,
    length_cap: usize,
    class_cap: usize,
    ball_cap: usize,
) -> Result<LcmResult> {
    let oracle = LcmOracle::build(pres, length_cap, class_cap, ball_cap)?;
    oracle.lcm(pres, p, q, class_cap)
}
