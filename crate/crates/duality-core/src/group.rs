//! The semidirect product `Gra(n+1) ⋊ S_{n+1}` and the image of the duality
//! group inside it.
//!
//! The generator `X_i` maps to `(e_{0i}, (0 i))`. Multiplication is
//! `(g1, s1)·(g2, s2) = (g1 + s1·g2, s1∘s2)` with right-to-left permutation
//! composition and the vertex-relabeling action on graphs; this convention
//! reproduces `X_i X_j X_i = (e_{0i} + e_{ij} + e_{0j}, (i j))` and is
//! pinned by the unit tests.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{square_graph, LabeledGraph};
use crate::perm::Perm;
use crate::{Error, Result, MAX_N};

/// An element of `Gra(n+1) ⋊ S_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualityElement {
    pub graph: LabeledGraph,
    pub perm: Perm,
}

impl DualityElement {
    pub fn identity(n: u8) -> DualityElement {
        DualityElement {
            graph: LabeledGraph::empty(n),
            perm: Perm::identity(n),
        }
    }

    pub fn n(&self) -> u8 {
        self.graph.n()
    }

    pub fn is_identity(&self) -> bool {
        self.graph.is_empty() && self.perm.is_identity()
    }

    pub fn multiply(&self, rhs: &DualityElement) -> DualityElement {
        debug_assert_eq!(self.n(), rhs.n());
        DualityElement {
            graph: self.graph ^ rhs.graph.relabel(&self.perm),
            perm: self.perm.compose(&rhs.perm),
        }
    }

    pub fn inverse(&self) -> DualityElement {
        let inv = self.perm.inverse();
        DualityElement {
            graph: self.graph.relabel(&inv),
            perm: inv,
        }
    }
}

/// A word in the generators `X_1, …, X_n`; letters are generator indices.
/// The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn new(letters: Vec<u8>) -> Word {
        Word { letters }
    }

    /// Parse a digit string such as `"1213"`; `0` is not a generator.
    pub fn parse(text: &str) -> Result<Word> {
        let mut letters = Vec::with_capacity(text.len());
        for ch in text.chars() {
            match ch.to_digit(10) {
                Some(d) if d >= 1 => letters.push(d as u8),
                _ => return Err(Error::Parse("word letters are digits 1-9")),
            }
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn repeat(&self, times: usize) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        Word { letters }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(self.letters.len());
        for &l in &self.letters {
            debug_assert!(l <= 9, "digit notation covers generators 1-9 only");
            s.push((b'0' + l) as char);
        }
        f.write_str(&s)
    }
}

/// `Ψ(X_i) = (e_{0i}, (0 i))`.
pub fn psi_generator(i: u8, n: u8) -> Result<DualityElement> {
    if i < 1 || i > n {
        return Err(Error::GeneratorOutOfRange { index: i, n });
    }
    Ok(DualityElement {
        graph: LabeledGraph::single_edge(n, 0, i)?,
        perm: Perm::transposition(n, 0, i),
    })
}

/// Product of generator images in the order written; the empty word is the
/// identity. The rightmost letter acts first under the permutation action.
pub fn eval_word(word: &Word, n: u8) -> Result<DualityElement> {
    let mut acc = DualityElement::identity(n);
    for &letter in word.letters() {
        acc = acc.multiply(&psi_generator(letter, n)?);
    }
    Ok(acc)
}

/// `|DG_n| = 2^{(n+1)(n-2)/2} (n+1)!`, with overflow detected.
pub fn dg_order(n: u8) -> Result<u128> {
    assert!((2..=MAX_N).contains(&n));
    let exp = (n as u32 + 1) * (n as u32 - 2) / 2;
    let mut order: u128 = 1u128.checked_shl(exp).ok_or(Error::Overflow)?;
    for k in 2..=(n as u128 + 1) {
        order = order.checked_mul(k).ok_or(Error::Overflow)?;
    }
    Ok(order)
}

/// Largest `n` enumerated without the opt-in (order 368 640).
pub const BFS_PLAIN_LIMIT: u8 = 5;
/// Hard enumeration limit; `n = 6` already has ~8.2e7 elements.
pub const BFS_HARD_LIMIT: u8 = 6;

/// Closure of the generator set under multiplication, i.e. all of
/// `Ψ(DG_n)`, in a canonical order (graph bits, then permutation image).
/// Generators are involutions, so no inverses are needed.
pub fn bfs_enumerate(n: u8) -> Result<Vec<DualityElement>> {
    bfs_enumerate_with(n, false)
}

pub fn bfs_enumerate_with(n: u8, allow_large: bool) -> Result<Vec<DualityElement>> {
    let keys = bfs_keys(n, allow_large)?;
    Ok(keys.into_iter().map(|key| decode_key(n, key)).collect())
}

/// Group order by closure of the generators, without materializing the
/// elements; this is what keeps `n = 6` (~8.2e7 elements) affordable.
pub fn bfs_order(n: u8, allow_large: bool) -> Result<u128> {
    Ok(bfs_keys(n, allow_large)?.len() as u128)
}

// Packed element key: edge bits above, permutation image below with
// image[0] most significant, so key order is the canonical (graph, perm)
// order.
fn perm_bits(n: u8) -> u32 {
    3 * (n as u32 + 1)
}

fn encode_key(n: u8, el: &DualityElement) -> u64 {
    let mut key = (el.graph.bits() as u64) << perm_bits(n);
    for v in 0..=n {
        key |= (el.perm.apply(v) as u64) << (3 * (n - v) as u32);
    }
    key
}

fn decode_key(n: u8, key: u64) -> DualityElement {
    let mut image = Vec::with_capacity(n as usize + 1);
    for v in 0..=n {
        image.push(((key >> (3 * (n - v) as u32)) & 7) as u8);
    }
    DualityElement {
        graph: LabeledGraph::from_bits(n, (key >> perm_bits(n)) as u128),
        perm: Perm::from_image(image).unwrap(),
    }
}

/// Sorted packed keys of the whole group. Frontier products are generated
/// in bounded chunks and merged into the sorted universe, keeping peak
/// memory at a small multiple of the final key vector.
fn bfs_keys(n: u8, allow_large: bool) -> Result<Vec<u64>> {
    if !(2..=BFS_HARD_LIMIT).contains(&n) || (n > BFS_PLAIN_LIMIT && !allow_large) {
        return Err(Error::EnumerationTooLarge { n });
    }
    const CHUNK: usize = 1 << 20;

    let generators: Vec<DualityElement> = (1..=n).map(|i| psi_generator(i, n).unwrap()).collect();

    let mut all: Vec<u64> = Vec::new();
    all.push(encode_key(n, &DualityElement::identity(n)));
    let mut frontier: Vec<u64> = all.clone();
    while !frontier.is_empty() {
        // New keys discovered this round, kept sorted and deduplicated.
        let mut next: Vec<u64> = Vec::new();
        for chunk in frontier.chunks(CHUNK) {
            let mut batch: Vec<u64> = Vec::with_capacity(chunk.len() * n as usize);
            for &key in chunk {
                let el = decode_key(n, key);
                for g in &generators {
                    batch.push(encode_key(n, &el.multiply(g)));
                }
            }
            batch.sort_unstable();
            batch.dedup();
            batch.retain(|k| all.binary_search(k).is_err() && next.binary_search(k).is_err());
            next = merge_sorted(&next, &batch);
        }
        all = merge_sorted(&all, &next);
        frontier = next;
    }
    Ok(all)
}

/// Merge two sorted, disjoint key vectors.
fn merge_sorted(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// A word whose permutation image is `sigma`: each cycle is split into
/// transpositions `(a b)`, and `(a b)` becomes `b` or the conjugate `a b a`.
pub fn transposition_word(sigma: &Perm) -> Word {
    let mut letters = Vec::new();
    for cycle in sigma.cycles() {
        // (v1 v2 … vr) = (v1 vr)(v1 v_{r-1})⋯(v1 v2), rightmost first.
        let v1 = cycle[0];
        for idx in (1..cycle.len()).rev() {
            let b = cycle[idx];
            if v1 == 0 {
                letters.push(b);
            } else {
                letters.extend_from_slice(&[v1, b, v1]);
            }
        }
    }
    Word::new(letters)
}

/// Membership of an arbitrary pair in `Ψ(DG_n)`: divide out any word with
/// the same permutation image and test the leftover graph against the
/// kernel parity conditions. The answer does not depend on the chosen word.
pub fn element_of_dg(x: &DualityElement) -> bool {
    let word = transposition_word(&x.perm);
    let h = eval_word(&word, x.n()).unwrap();
    debug_assert_eq!(h.perm, x.perm);
    (x.graph ^ h.graph).is_kernel_graph()
}

/// `|Z(DG_n)|` by the structural argument: the only `S_{n+1}`-invariant
/// graphs are the empty and complete ones, and the complete graph lies in
/// the kernel exactly when its valency `n` and edge count `n(n+1)/2` are
/// both even, i.e. when `4 | n`.
pub fn centre_order(n: u8) -> u128 {
    assert!(n >= 2);
    if LabeledGraph::complete(n).is_kernel_graph() {
        2
    } else {
        1
    }
}

/// Brute-force centralizer over the full enumeration; elements commuting
/// with every generator.
pub fn centre_order_brute(n: u8) -> Result<usize> {
    let elements = bfs_enumerate(n)?;
    let generators: Vec<DualityElement> = (1..=n).map(|i| psi_generator(i, n).unwrap()).collect();
    Ok(elements
        .iter()
        .filter(|x| generators.iter().all(|g| x.multiply(g) == g.multiply(x)))
        .count())
}

/// Outcome of the splitting-witness construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplittingOutcome {
    /// All witness graphs lie in the kernel and the three relation families
    /// hold, so the section `X_j ↦ (γ_{0j}, (0 j))` splits the extension.
    SplitWitnessFound,
    /// This particular witness fails; says nothing about other sections.
    WitnessCriterionFails,
    /// `n = 3`: the extension is known to be non-split.
    KnownNonSplit,
}

impl fmt::Display for SplittingOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplittingOutcome::SplitWitnessFound => "SPLIT_WITNESS_FOUND",
            SplittingOutcome::WitnessCriterionFails => "WITNESS_CRITERION_FAILS",
            SplittingOutcome::KnownNonSplit => "KNOWN_NONSPLIT",
        })
    }
}

#[derive(Debug, Clone)]
pub struct SplittingReport {
    pub n: u8,
    /// `γ_{0j}` = complete graph on `{0,…,n} \ {0, j}`, for `j = 1..=n`.
    pub witness_graphs: Vec<LabeledGraph>,
    pub gamma_in_kernel: Vec<bool>,
    /// `(squares, braids, square-word graphs)` relation families, checked
    /// only when every witness graph lies in the kernel.
    pub relations_hold: Option<(bool, bool, bool)>,
    pub outcome: SplittingOutcome,
}

/// Splitting analysis via the section `Φ(X_j) = (γ_{0j}, (0 j))` with
/// `γ_{ij}` the complete graph on the complementary vertices.
///
/// Checks (a) `γ_{0j}` kernel membership, and when that holds, (b) the
/// relation families `Φ(X_i)^2 = 1`, `(Φ(X_i)Φ(X_j))^3 = 1`, and
/// `(Φ(X_i)Φ(X_j)Φ(X_i)Φ(X_k))^2 = (square graph, id)`.
pub fn verify_splitting(n: u8) -> SplittingReport {
    assert!(n >= 3);
    let ground = crate::combinatorics::ground_mask(n);
    let witness_graphs: Vec<LabeledGraph> = (1..=n)
        .map(|j| LabeledGraph::complete_on(n, ground & !(1 << j) & !1))
        .collect();
    let gamma_in_kernel: Vec<bool> = witness_graphs.iter().map(|g| g.is_kernel_graph()).collect();

    let phi = |j: u8| -> DualityElement {
        DualityElement {
            graph: witness_graphs[j as usize - 1],
            perm: Perm::transposition(n, 0, j),
        }
    };

    let mut relations_hold = None;
    let mut outcome = SplittingOutcome::WitnessCriterionFails;
    if gamma_in_kernel.iter().all(|&b| b) {
        let mut squares = true;
        let mut braids = true;
        let mut square_words = true;
        for i in 1..=n {
            if !phi(i).multiply(&phi(i)).is_identity() {
                squares = false;
            }
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let ij = phi(i).multiply(&phi(j));
                if !ij.multiply(&ij).multiply(&ij).is_identity() {
                    braids = false;
                }
                for k in 1..=n {
                    if k == i || k == j {
                        continue;
                    }
                    let w = phi(i).multiply(&phi(j)).multiply(&phi(i)).multiply(&phi(k));
                    let sq = w.multiply(&w);
                    let expected = DualityElement {
                        graph: square_graph(i, j, k, n).unwrap(),
                        perm: Perm::identity(n),
                    };
                    if sq != expected {
                        square_words = false;
                    }
                }
            }
        }
        relations_hold = Some((squares, braids, square_words));
        if squares && braids && square_words {
            outcome = SplittingOutcome::SplitWitnessFound;
        }
    }
    if n == 3 {
        outcome = SplittingOutcome::KnownNonSplit;
    }

    SplittingReport {
        n,
        witness_graphs,
        gamma_in_kernel,
        relations_hold,
        outcome,
    }
}
