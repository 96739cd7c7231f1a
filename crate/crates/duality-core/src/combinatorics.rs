//! Hops, runs, and partitions of `{0, …, n}`.
//!
//! A *hop* across an index set is a set of pairwise-disjoint nonempty
//! subsets; a *run* is a hop with a single subset, and we identify it with
//! that subset. A complete hop is a partition. Partitions into three or more
//! blocks index the multilinear components acted on in [`crate::theta`].
//!
//! Subsets are bit masks over `{0, …, n}` (`n ≤ 14`, so masks fit `u16`).
//! Text notation follows the digit-concatenation convention: `"03,1,2"` is
//! the partition `{{0,3},{1},{2}}`, blocks ordered by minimum element. The
//! parser only accepts single-digit vertices, so text I/O is limited to
//! `n ≤ 9`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result, MAX_ENUM_N, MAX_N};

/// Full vertex mask `{0, …, n}`.
pub fn ground_mask(n: u8) -> u16 {
    debug_assert!(n <= MAX_N);
    ((1u32 << (n + 1)) - 1) as u16
}

/// A run: a nonempty subset of `{0, …, n}`, stored as a bit mask.
///
/// The derived `Ord` (numeric on the mask) is used only for map keys; the
/// canonical block order of hops and partitions is by minimum element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Run(pub u16);

impl Run {
    pub fn from_elements(elements: &[u8]) -> Run {
        let mut mask = 0u16;
        for &e in elements {
            debug_assert!(e <= MAX_N);
            mask |= 1 << e;
        }
        Run(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, v: u8) -> bool {
        self.0 & (1 << v) != 0
    }

    pub fn min_element(self) -> u8 {
        debug_assert!(!self.is_empty());
        self.0.trailing_zeros() as u8
    }

    /// Complement within `{0, …, n}`.
    pub fn complement(self, n: u8) -> Run {
        Run(!self.0 & ground_mask(n))
    }

    pub fn elements(self) -> impl Iterator<Item = u8> {
        let mask = self.0;
        (0..16u8).filter(move |v| mask & (1 << v) != 0)
    }

    /// Image under a vertex relabeling given as a one-line image table.
    pub fn relabel(self, image: &[u8]) -> Run {
        let mut out = 0u16;
        for v in self.elements() {
            out |= 1 << image[v as usize];
        }
        Run(out)
    }

    pub fn to_text(self) -> String {
        let mut s = String::new();
        for v in self.elements() {
            debug_assert!(v <= 9, "text notation is single-digit only");
            s.push((b'0' + v) as char);
        }
        s
    }
}

/// Element-list lexicographic comparison of two blocks.
///
/// Blocks compare as their sorted element sequences, so `{0,1,2} < {0,3}`
/// and a proper prefix comes first.
pub fn block_lex_cmp(a: u16, b: u16) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let low = (a ^ b).trailing_zeros();
    if b & (1 << low) != 0 {
        // `b` owns the first differing element; `a` either ran out (prefix)
        // or its next element is larger.
        if a >> low == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if b >> low == 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// A hop across `{0, …, n}`: pairwise-disjoint nonempty blocks, canonically
/// ordered by minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hop {
    n: u8,
    blocks: Vec<u16>,
}

impl Hop {
    pub fn new(n: u8, mut blocks: Vec<u16>) -> Result<Hop> {
        assert!(n <= MAX_N, "n capped at {MAX_N}");
        let ground = ground_mask(n);
        let mut seen = 0u16;
        for &b in &blocks {
            if b == 0 {
                return Err(Error::Parse("empty block"));
            }
            if b & !ground != 0 {
                return Err(Error::VertexNotCovered {
                    vertex: (15 - b.leading_zeros()) as u8,
                });
            }
            if b & seen != 0 {
                return Err(Error::Parse("blocks overlap"));
            }
            seen |= b;
        }
        blocks.sort_unstable_by_key(|b| b.trailing_zeros());
        Ok(Hop { n, blocks })
    }

    pub fn from_blocks(n: u8, blocks: &[&[u8]]) -> Result<Hop> {
        Hop::new(n, blocks.iter().map(|b| Run::from_elements(b).0).collect())
    }

    /// Parse the comma convention, e.g. `"13,4"` for `{{1,3},{4}}`.
    pub fn parse(text: &str, n: u8) -> Result<Hop> {
        let mut blocks = Vec::new();
        for part in text.split(',') {
            if part.is_empty() {
                return Err(Error::Parse("empty block in hop text"));
            }
            let mut mask = 0u16;
            for ch in part.chars() {
                let d = ch.to_digit(10).ok_or(Error::Parse("expected digit 0-9"))? as u16;
                if mask & (1 << d) != 0 {
                    return Err(Error::Parse("repeated vertex in block"));
                }
                mask |= 1 << d;
            }
            blocks.push(mask);
        }
        Hop::new(n, blocks)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn blocks(&self) -> &[u16] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn covers(&self, v: u8) -> bool {
        self.blocks.iter().any(|&b| b & (1 << v) != 0)
    }

    pub fn block_containing(&self, v: u8) -> Option<u16> {
        self.blocks.iter().copied().find(|&b| b & (1 << v) != 0)
    }

    pub fn covered_mask(&self) -> u16 {
        self.blocks.iter().fold(0, |acc, &b| acc | b)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, &b) in self.blocks.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&Run(b).to_text());
        }
        s
    }
}

impl fmt::Display for Hop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `i` and `j` are together in `H` when one block contains both.
///
/// Errors when the vertices coincide or either is not covered by `H`.
pub fn together(i: u8, j: u8, hop: &Hop) -> Result<bool> {
    if i == j {
        return Err(Error::VerticesEqual { vertex: i });
    }
    let bi = hop
        .block_containing(i)
        .ok_or(Error::VertexNotCovered { vertex: i })?;
    let bj = hop
        .block_containing(j)
        .ok_or(Error::VertexNotCovered { vertex: j })?;
    Ok(bi == bj)
}

pub fn separate(i: u8, j: u8, hop: &Hop) -> Result<bool> {
    together(i, j, hop).map(|t| !t)
}

/// A partition of `{0, …, n}`: a complete hop. Blocks ordered by minimum
/// element; partitions totally ordered block-list-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: u8,
    blocks: Vec<u16>,
}

impl Partition {
    pub fn new(n: u8, blocks: Vec<u16>) -> Result<Partition> {
        let hop = Hop::new(n, blocks)?;
        if hop.covered_mask() != ground_mask(n) {
            return Err(Error::Parse("blocks do not cover {0..n}"));
        }
        Ok(Partition {
            n,
            blocks: hop.blocks,
        })
    }

    pub fn from_blocks(n: u8, blocks: &[&[u8]]) -> Result<Partition> {
        Partition::new(n, blocks.iter().map(|b| Run::from_elements(b).0).collect())
    }

    /// Parse `"03,1,2"`, inferring `n` from the largest vertex present.
    pub fn parse(text: &str) -> Result<Partition> {
        let mut max = 0u8;
        for ch in text.chars() {
            if let Some(d) = ch.to_digit(10) {
                max = max.max(d as u8);
            } else if ch != ',' {
                return Err(Error::Parse("expected digit 0-9 or comma"));
            }
        }
        let hop = Hop::parse(text, max)?;
        Partition::new(max, hop.blocks)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn blocks(&self) -> &[u16] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_containing(&self, v: u8) -> u16 {
        debug_assert!(v <= self.n);
        self.blocks
            .iter()
            .copied()
            .find(|&b| b & (1 << v) != 0)
            .unwrap()
    }

    pub fn position_of_block(&self, mask: u16) -> Option<usize> {
        self.blocks.iter().position(|&b| b == mask)
    }

    pub fn contains_block(&self, mask: u16) -> bool {
        self.position_of_block(mask).is_some()
    }

    /// Infallible form of [`together`]: a partition covers every vertex.
    pub fn together(&self, i: u8, j: u8) -> bool {
        debug_assert!(i != j && i <= self.n && j <= self.n);
        self.block_containing(i) == self.block_containing(j)
    }

    pub fn as_hop(&self) -> Hop {
        Hop {
            n: self.n,
            blocks: self.blocks.clone(),
        }
    }

    /// Image under a vertex relabeling (one-line image table of length n+1).
    pub fn relabel(&self, image: &[u8]) -> Partition {
        debug_assert_eq!(image.len(), self.n as usize + 1);
        let blocks = self
            .blocks
            .iter()
            .map(|&b| Run(b).relabel(image).0)
            .collect();
        Partition::new(self.n, blocks).unwrap()
    }

    pub fn to_text(&self) -> String {
        self.as_hop().to_text()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.blocks.iter().zip(other.blocks.iter()) {
            match block_lex_cmp(*a, *b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.blocks.len().cmp(&other.blocks.len())
    }
}

/// All partitions of `{0, …, n}` into at least `min_blocks` blocks, in
/// canonical order. Enumerating twice yields identical sequences.
pub fn enumerate_partitions(n: u8, min_blocks: usize) -> Vec<Partition> {
    assert!(n >= 1 && min_blocks >= 2, "need n >= 1 and min_blocks >= 2");
    assert!(
        n <= MAX_ENUM_N,
        "partition enumeration capped at n = {MAX_ENUM_N}"
    );
    let mut out = Vec::new();
    let mut blocks: Vec<u16> = Vec::new();
    assign(n, 0, &mut blocks, min_blocks, &mut out);
    out.sort_unstable();
    out
}

fn assign(n: u8, v: u8, blocks: &mut Vec<u16>, min_blocks: usize, out: &mut Vec<Partition>) {
    if v == n + 1 {
        if blocks.len() >= min_blocks {
            out.push(Partition::new(n, blocks.clone()).unwrap());
        }
        return;
    }
    for i in 0..blocks.len() {
        blocks[i] |= 1 << v;
        assign(n, v + 1, blocks, min_blocks, out);
        blocks[i] &= !(1 << v);
    }
    // Remaining vertices can open at most the missing number of blocks.
    let remaining = (n + 1 - v) as usize;
    if blocks.len() + remaining >= min_blocks {
        blocks.push(1 << v);
        assign(n, v + 1, blocks, min_blocks, out);
        blocks.pop();
    }
}

/// Stirling number of the second kind: partitions of an `m`-set into `k`
/// nonempty blocks.
pub fn stirling2(m: u32, k: u32) -> u128 {
    assert!(m >= k, "need m >= k");
    if k == 0 {
        return if m == 0 { 1 } else { 0 };
    }
    // S(m, k) = k S(m-1, k) + S(m-1, k-1), one row at a time.
    let mut row: Vec<u128> = alloc::vec![0; k as usize + 1];
    row[0] = 1;
    for _ in 1..=m {
        for j in (1..=k as usize).rev() {
            row[j] = (j as u128)
                .checked_mul(row[j])
                .and_then(|x| x.checked_add(row[j - 1]))
                .expect("Stirling number overflow");
        }
        row[0] = 0;
    }
    row[k as usize]
}

/// The unique block `I ∈ P` with `I^C ∈ Q`, when the partitions are
/// compatible. Uniqueness holds because a second such block would force `Q`
/// to have only two blocks; asserted anyway.
pub fn compatible_through(p: &Partition, q: &Partition) -> Option<Run> {
    debug_assert_eq!(p.n(), q.n());
    let n = p.n();
    let mut found: Option<Run> = None;
    for &b in p.blocks() {
        if q.contains_block(Run(b).complement(n).0) {
            assert!(found.is_none(), "compatibility block must be unique");
            found = Some(Run(b));
        }
    }
    found
}

/// Composition `P ∘ Q`: drop `I` from `P` and `I^C` from `Q`, keep the rest.
pub fn compose_partitions(p: &Partition, q: &Partition) -> Result<Partition> {
    let i = compatible_through(p, q).ok_or(Error::NotCompatible)?;
    let ic = i.complement(p.n()).0;
    let blocks: Vec<u16> = p
        .blocks()
        .iter()
        .copied()
        .filter(|&b| b != i.0)
        .chain(q.blocks().iter().copied().filter(|&b| b != ic))
        .collect();
    Partition::new(p.n(), blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    #[test]
    fn together_and_separate_in_a_hop() {
        let hop = Hop::parse("13,4", 4).unwrap();
        assert!(together(1, 3, &hop).unwrap());
        assert!(!together(1, 4, &hop).unwrap());
        assert!(separate(1, 4, &hop).unwrap());
        assert_eq!(
            together(1, 1, &hop),
            Err(Error::VerticesEqual { vertex: 1 })
        );
        assert_eq!(
            together(2, 3, &hop),
            Err(Error::VertexNotCovered { vertex: 2 })
        );
    }

    #[test]
    fn together_xor_separate() {
        let hop = Hop::parse("03,12,4", 4).unwrap();
        for i in 0..=4u8 {
            for j in 0..=4u8 {
                if i == j {
                    continue;
                }
                assert_ne!(together(i, j, &hop).unwrap(), separate(i, j, &hop).unwrap());
            }
        }
    }

    #[test]
    fn partition_text_roundtrip_and_canonical_block_order() {
        let p = Partition::parse("1,2,03").unwrap();
        assert_eq!(p.to_text(), "03,1,2");
        assert_eq!(p.n(), 3);
        assert_eq!(p.block_count(), 3);
        let q = Partition::from_blocks(3, &[&[2], &[0, 3], &[1]]).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_rejects_malformed_text() {
        assert!(Partition::parse("03,1").is_err()); // 2 not covered
        assert!(Partition::parse("01,12").is_err()); // overlap
        assert!(Partition::parse("0,,1").is_err());
        assert!(Partition::parse("0x,1").is_err());
    }

    #[test]
    fn enumerate_counts_match_reported_values() {
        assert_eq!(enumerate_partitions(3, 3).len(), 7);
        assert_eq!(enumerate_partitions(4, 3).len(), 36);
        assert_eq!(enumerate_partitions(5, 3).len(), 171);
        assert_eq!(enumerate_partitions(6, 3).len(), 813);
    }

    #[test]
    fn only_partition_of_three_points_into_three_blocks_is_discrete() {
        let ps = enumerate_partitions(2, 3);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].to_text(), "0,1,2");
    }

    #[test]
    fn enumeration_is_deterministic_and_strictly_sorted() {
        let a = enumerate_partitions(4, 2);
        let b = enumerate_partitions(4, 2);
        assert_eq!(a, b);
        for w in a.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn canonical_order_on_the_seven_n3_partitions() {
        let texts: Vec<String> = enumerate_partitions(3, 3)
            .iter()
            .map(|p| p.to_text())
            .collect();
        assert_eq!(
            texts,
            vec!["0,1,2,3", "0,1,23", "0,12,3", "0,13,2", "01,2,3", "02,1,3", "03,1,2"]
        );
    }

    /// Independent brute-force partition counter: canonicalized block-index
    /// strings over all k^m assignments.
    fn brute_force_partitions(m: u32, k: u32) -> u128 {
        let mut seen = BTreeSet::new();
        let total = (k as u64).pow(m);
        for mut code in 0..total {
            let mut assignment = Vec::new();
            for _ in 0..m {
                assignment.push((code % k as u64) as u8);
                code /= k as u64;
            }
            // Relabel blocks by first occurrence to canonicalize.
            let mut map = [u8::MAX; 16];
            let mut next = 0u8;
            let mut canon = Vec::new();
            for &a in &assignment {
                if map[a as usize] == u8::MAX {
                    map[a as usize] = next;
                    next += 1;
                }
                canon.push(map[a as usize]);
            }
            if next == k as u8 {
                seen.insert(canon);
            }
        }
        seen.len() as u128
    }

    #[test]
    fn stirling_matches_brute_force_enumeration() {
        // Frozen values computed by the brute-force oracle.
        assert_eq!(brute_force_partitions(5, 3), 25);
        assert_eq!(brute_force_partitions(4, 2), 7);
        assert_eq!(stirling2(5, 3), 25);
        assert_eq!(stirling2(4, 2), 7);
        for m in 0..=7u32 {
            for k in 0..=m {
                assert_eq!(stirling2(m, k), brute_force_partitions(m, k), "S({m},{k})");
            }
        }
    }

    #[test]
    fn stirling_diagonal_is_one() {
        for m in 0..=10 {
            assert_eq!(stirling2(m, m), 1);
        }
    }

    #[test]
    fn enumerate_agrees_with_stirling_per_block_count() {
        for n in 1..=6u8 {
            let all = enumerate_partitions(n, 2);
            for k in 2..=(n as usize + 1) {
                let count = all.iter().filter(|p| p.block_count() == k).count();
                assert_eq!(count as u128, stirling2(n as u32 + 1, k as u32));
            }
        }
    }

    #[test]
    fn partition_counts_sum_formula() {
        for (n, expected) in [(3u8, 7u128), (4, 36), (5, 171), (6, 813)] {
            let sum: u128 = (3..=n as u32 + 1).map(|k| stirling2(n as u32 + 1, k)).sum();
            assert_eq!(sum, expected);
            assert_eq!(enumerate_partitions(n, 3).len() as u128, expected);
        }
    }

    #[test]
    fn compatible_through_worked_example() {
        let p = Partition::parse("1,2,03").unwrap();
        let q = Partition::parse("0,3,12").unwrap();
        assert_eq!(
            compatible_through(&p, &q),
            Some(Run::from_elements(&[0, 3]))
        );
    }

    #[test]
    fn discrete_partition_not_self_compatible() {
        let p = Partition::parse("0,1,2,3").unwrap();
        assert_eq!(compatible_through(&p, &p), None);
    }

    #[test]
    fn compatible_through_direct_set_check() {
        let p = Partition::parse("12,0,34").unwrap();
        let q = Partition::parse("034,1,2").unwrap();
        assert_eq!(
            compatible_through(&p, &q),
            Some(Run::from_elements(&[1, 2]))
        );
    }

    #[test]
    fn compose_worked_example() {
        let p = Partition::parse("1,2,03").unwrap();
        let q = Partition::parse("0,3,12").unwrap();
        assert_eq!(compose_partitions(&p, &q).unwrap().to_text(), "0,1,2,3");
    }

    #[test]
    fn compose_incompatible_is_an_error() {
        let p = Partition::parse("0,1,23").unwrap();
        let q = Partition::parse("0,1,23").unwrap();
        assert_eq!(compose_partitions(&p, &q), Err(Error::NotCompatible));
    }

    #[test]
    fn compose_second_example_and_block_count() {
        let p = Partition::parse("04,2,13").unwrap();
        let q = Partition::parse("1,3,024").unwrap();
        let r = compose_partitions(&p, &q).unwrap();
        assert_eq!(r.to_text(), "04,1,2,3");
        assert_eq!(r.block_count(), p.block_count() + q.block_count() - 2);
    }

    #[test]
    fn compose_block_count_over_all_compatible_pairs() {
        let all = enumerate_partitions(4, 3);
        let mut checked = 0;
        for p in &all {
            for q in &all {
                if compatible_through(p, q).is_some() {
                    let r = compose_partitions(p, q).unwrap();
                    assert_eq!(r.block_count(), p.block_count() + q.block_count() - 2);
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn relabel_by_transposition() {
        let p = Partition::parse("03,1,2").unwrap();
        // swap 0 and 1
        let image = [1u8, 0, 2, 3];
        assert_eq!(p.relabel(&image).to_text(), "0,13,2");
    }
}
