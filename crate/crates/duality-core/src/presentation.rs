//! Relator verification and coset enumeration for the presented groups.
//!
//! The relators common to all `n` are `X_i^2`, `(X_i X_j)^3` and
//! `(X_i X_j X_i X_k)^4`; for `n = 4` two further relators of lengths 24
//! and 32 follow from the kernel product identities `AK = P` and
//! `AD = MQ`. Coset enumeration over the trivial subgroup certifies the
//! order of the presented group; with the two long relators omitted the
//! enumeration exceeds any reasonable coset cap, consistent with that
//! quotient being infinite.

use alloc::vec::Vec;

use crate::group::{eval_word, DualityElement, Word};

/// A set of relator words; every relator is expected to evaluate to the
/// identity in the graph/permutation model (checked, not assumed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSet {
    pub relators: Vec<Word>,
}

/// The relators `X_i^2`, `(X_i X_j)^3` for `i < j`, and
/// `(X_i X_j X_i X_k)^4` for all `i` and unordered `{j, k}`; for `n = 4`
/// the two long relators derived from `AK = P` (length 24) and `AD = MQ`
/// (length 32) are appended.
pub fn standard_relators(n: u8) -> RelationSet {
    assert!(n >= 2);
    let mut relators = Vec::new();
    for i in 1..=n {
        relators.push(Word::new(alloc::vec![i, i]));
    }
    for i in 1..=n {
        for j in (i + 1)..=n {
            relators.push(Word::new(alloc::vec![i, j]).repeat(3));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            for k in (j + 1)..=n {
                if j == i || k == i {
                    continue;
                }
                relators.push(Word::new(alloc::vec![i, j, i, k]).repeat(4));
            }
        }
    }
    if n == 4 {
        // A·K·P = 1 and A·D·Q·M = 1 in the kernel catalogue, spelled with
        // the square words (1213)^2, (1413)^2, (4243)^2 and (1213)^2,
        // (1214)^2, (2434)^2, (1434)^2.
        relators.push(Word::parse("121312131413141342434243").unwrap());
        relators.push(Word::parse("12131213121412142434243414341434").unwrap());
    }
    RelationSet { relators }
}

/// Result of checking every relator against the graph/permutation model.
#[derive(Debug, Clone)]
pub struct RelatorReport {
    pub checked: usize,
    /// Relators that failed, with their non-identity images.
    pub failures: Vec<(Word, DualityElement)>,
}

impl RelatorReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluate every relator of [`standard_relators`] and report any that do
/// not map to the identity.
pub fn verify_relators(n: u8) -> RelatorReport {
    assert!(n <= 6, "relator verification intended for n <= 6");
    let rels = standard_relators(n);
    let mut failures = Vec::new();
    for w in &rels.relators {
        let image = eval_word(w, n).unwrap();
        if !image.is_identity() {
            failures.push((w.clone(), image));
        }
    }
    RelatorReport {
        checked: rels.relators.len(),
        failures,
    }
}

/// Outcome of a coset enumeration run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CosetOutcome {
    /// Table closed; the live coset count is the group order.
    Completed { cosets: usize, total_defined: usize },
    /// The cap on defined cosets was exceeded: either the presented group
    /// is infinite or the cap is too small.
    Diverged { cap: usize },
}

/// One line of the optional enumeration trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetEvent {
    Define {
        coset: usize,
        generator: u8,
        new: usize,
    },
    Coincide {
        kept: usize,
        removed: usize,
    },
}

/// Coset enumeration over the trivial subgroup for involutive generators.
///
/// Relator-scanning strategy with deterministic definition order: cosets
/// are processed in index order, every relator is scanned and filled at
/// each live coset, then the remaining undefined entries of that row are
/// defined lowest generator first. Since every generator is an involution
/// (the squares are among the relators), each generator is its own inverse
/// column.
pub struct CosetEnumerator<'a> {
    num_gens: usize,
    relators: Vec<Vec<usize>>,
    cap: usize,
    trace: Option<&'a mut dyn FnMut(CosetEvent)>,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    total_defined: usize,
}

impl<'a> CosetEnumerator<'a> {
    pub fn new(n: u8, relators: &RelationSet, cap: usize) -> CosetEnumerator<'a> {
        let words: Vec<Vec<usize>> = relators
            .relators
            .iter()
            .map(|w| w.letters().iter().map(|&l| (l - 1) as usize).collect())
            .collect();
        CosetEnumerator {
            num_gens: n as usize,
            relators: words,
            cap,
            trace: None,
            table: alloc::vec![alloc::vec![None; n as usize]],
            parent: alloc::vec![0],
            total_defined: 1,
        }
    }

    pub fn with_trace(mut self, trace: &'a mut dyn FnMut(CosetEvent)) -> CosetEnumerator<'a> {
        self.trace = Some(trace);
        self
    }

    fn rep(&mut self, coset: usize) -> usize {
        let mut root = coset;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut walk = coset;
        while self.parent[walk] != walk {
            let next = self.parent[walk];
            self.parent[walk] = root;
            walk = next;
        }
        root
    }

    fn define(&mut self, coset: usize, g: usize) -> usize {
        let fresh = self.table.len();
        self.table.push(alloc::vec![None; self.num_gens]);
        self.parent.push(fresh);
        self.table[coset][g] = Some(fresh);
        self.table[fresh][g] = Some(coset);
        self.total_defined += 1;
        if let Some(trace) = self.trace.as_mut() {
            trace(CosetEvent::Define {
                coset,
                generator: g as u8 + 1,
                new: fresh,
            });
        }
        fresh
    }

    fn merge(&mut self, queue: &mut Vec<usize>, a: usize, b: usize) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (keep, drop) = (ra.min(rb), ra.max(rb));
            self.parent[drop] = keep;
            queue.push(drop);
            if let Some(trace) = self.trace.as_mut() {
                trace(CosetEvent::Coincide {
                    kept: keep,
                    removed: drop,
                });
            }
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(&mut queue, a, b);
        let mut next = 0usize;
        while next < queue.len() {
            let dead = queue[next];
            next += 1;
            for g in 0..self.num_gens {
                if let Some(target) = self.table[dead][g] {
                    // Remove the mirror pointer so no live row reaches the
                    // dead coset, then transfer the edge to representatives.
                    self.table[target][g] = None;
                    let (d, t) = (self.rep(dead), self.rep(target));
                    match (self.table[d][g], self.table[t][g]) {
                        (Some(x), _) => self.merge(&mut queue, t, x),
                        (None, Some(y)) => self.merge(&mut queue, d, y),
                        (None, None) => {
                            self.table[d][g] = Some(t);
                            self.table[t][g] = Some(d);
                        }
                    }
                }
            }
        }
    }

    /// Scan `word` at `coset`, defining cosets to close the gap.
    fn scan_and_fill(&mut self, coset: usize, word_index: usize) -> bool {
        let word = core::mem::take(&mut self.relators[word_index]);
        let mut forward = coset;
        let mut backward = coset;
        let mut lo = 0usize;
        let mut hi = word.len();
        let closed = loop {
            while lo < hi {
                match self.table[forward][word[lo]] {
                    Some(next) => {
                        forward = next;
                        lo += 1;
                    }
                    None => break,
                }
            }
            if lo == hi {
                if forward != backward {
                    self.coincidence(forward, backward);
                }
                break true;
            }
            while hi > lo {
                match self.table[backward][word[hi - 1]] {
                    Some(next) => {
                        backward = next;
                        hi -= 1;
                    }
                    None => break,
                }
            }
            if hi == lo {
                self.coincidence(forward, backward);
                break true;
            }
            if hi - lo == 1 {
                // Deduction closes the scan.
                let g = word[lo];
                self.table[forward][g] = Some(backward);
                self.table[backward][g] = Some(forward);
                break true;
            }
            if self.total_defined > self.cap {
                break false;
            }
            self.define(forward, word[lo]);
        };
        self.relators[word_index] = word;
        closed
    }

    /// Run to completion or until the cap on defined cosets is exceeded.
    pub fn run(mut self) -> CosetOutcome {
        let mut coset = 0usize;
        while coset < self.table.len() {
            if self.rep(coset) == coset {
                for w in 0..self.relators.len() {
                    if self.rep(coset) != coset {
                        break;
                    }
                    if !self.scan_and_fill(coset, w) {
                        return CosetOutcome::Diverged { cap: self.cap };
                    }
                }
                if self.rep(coset) == coset {
                    for g in 0..self.num_gens {
                        if self.table[coset][g].is_none() {
                            if self.total_defined > self.cap {
                                return CosetOutcome::Diverged { cap: self.cap };
                            }
                            self.define(coset, g);
                        }
                    }
                }
            }
            coset += 1;
        }
        let live = (0..self.table.len())
            .filter(|&c| self.parent[c] == c)
            .count();
        CosetOutcome::Completed {
            cosets: live,
            total_defined: self.total_defined,
        }
    }
}

/// Enumerate cosets of the trivial subgroup in the group presented by
/// `relators` on `n` involutive generators.
pub fn coset_enumerate(n: u8, relators: &RelationSet, cap: usize) -> CosetOutcome {
    CosetEnumerator::new(n, relators, cap).run()
}

/// Default cap on defined cosets.
pub const DEFAULT_COSET_CAP: usize = 1_000_000;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_counts() {
        let r2 = standard_relators(2);
        assert_eq!(r2.relators.len(), 3); // 1², 2², (12)³
        let r4 = standard_relators(4);
        // 4 squares + 6 braids + 4·3 square words + 2 long relators.
        assert_eq!(r4.relators.len(), 4 + 6 + 12 + 2);
    }

    #[test]
    fn relators_hold_in_the_model() {
        for n in 2..=6u8 {
            let report = verify_relators(n);
            assert!(report.all_pass(), "n = {n}: {:?}", report.failures);
            assert!(report.checked > 0);
        }
    }

    #[test]
    fn odd_power_square_word_is_not_a_relator() {
        // (X_1 X_2 X_1 X_3)^3 has a non-identity permutation image.
        let w = Word::parse("1213").unwrap().repeat(3);
        let image = eval_word(&w, 4).unwrap();
        assert!(!image.is_identity());
        assert!(!image.perm.is_identity());
    }

    #[test]
    fn symmetric_group_on_three_symbols() {
        let outcome = coset_enumerate(2, &standard_relators(2), 10_000);
        assert_eq!(
            match outcome {
                CosetOutcome::Completed { cosets, .. } => cosets,
                _ => 0,
            },
            6
        );
    }

    #[test]
    fn triple_case_order() {
        let outcome = coset_enumerate(3, &standard_relators(3), 100_000);
        match outcome {
            CosetOutcome::Completed { cosets, .. } => assert_eq!(cosets, 96),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn quadruple_case_order_certified() {
        let outcome = coset_enumerate(4, &standard_relators(4), DEFAULT_COSET_CAP);
        match outcome {
            CosetOutcome::Completed { cosets, .. } => assert_eq!(cosets, 3840),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn trace_reports_definitions() {
        let mut defines = 0usize;
        let mut trace = |event: CosetEvent| {
            if matches!(event, CosetEvent::Define { .. }) {
                defines += 1;
            }
        };
        let enumerator =
            CosetEnumerator::new(2, &standard_relators(2), 1000).with_trace(&mut trace);
        let outcome = enumerator.run();
        assert!(matches!(outcome, CosetOutcome::Completed { .. }));
        assert!(defines >= 5);
    }
}
