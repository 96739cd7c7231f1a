//! Subgraphs of the complete graph on vertices `{0, …, n}`.
//!
//! Under symmetric difference these form an elementary abelian 2-group
//! `Gra(n+1)`; the edge set is a bit vector indexed by the lexicographic
//! rank of `(i, j)` with `i < j`. The kernel of the duality group's
//! surjection onto `S_{n+1}` is realized as the subgroup of graphs in which
//! every vertex has even valency and the total number of edges is even.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitXor, BitXorAssign};

use crate::perm::Perm;
use crate::{Error, Result, MAX_N};

/// Lexicographic rank of the edge `(i, j)`, `i < j`, among all edges on
/// `{0, …, n}`.
pub fn edge_index(n: u8, i: u8, j: u8) -> usize {
    debug_assert!(i < j && j <= n);
    let (n, i, j) = (n as usize, i as usize, j as usize);
    // Edges (0,_), (1,_), … precede (i,_); then (i, i+1) … (i, j).
    i * (2 * n - i + 1) / 2 + (j - i - 1)
}

pub fn edge_count_total(n: u8) -> usize {
    (n as usize + 1) * n as usize / 2
}

/// An element of `Gra(n+1)`: group law is XOR, every element squares to the
/// empty graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledGraph {
    n: u8,
    bits: u128,
}

impl LabeledGraph {
    pub fn empty(n: u8) -> LabeledGraph {
        assert!(n <= MAX_N, "n capped at {MAX_N}");
        LabeledGraph { n, bits: 0 }
    }

    pub fn complete(n: u8) -> LabeledGraph {
        let mut g = LabeledGraph::empty(n);
        g.bits = if edge_count_total(n) == 0 {
            0
        } else {
            (1u128 << edge_count_total(n)) - 1
        };
        g
    }

    /// Complete graph on the vertex subset given by `mask`.
    pub fn complete_on(n: u8, mask: u16) -> LabeledGraph {
        let mut g = LabeledGraph::empty(n);
        for i in 0..n {
            for j in (i + 1)..=n {
                if mask & (1 << i) != 0 && mask & (1 << j) != 0 {
                    g.bits |= 1u128 << edge_index(n, i, j);
                }
            }
        }
        g
    }

    pub fn single_edge(n: u8, i: u8, j: u8) -> Result<LabeledGraph> {
        if i == j {
            return Err(Error::IndicesNotDistinct);
        }
        if i > n || j > n {
            return Err(Error::VertexNotCovered { vertex: i.max(j) });
        }
        let mut g = LabeledGraph::empty(n);
        let (a, b) = (i.min(j), i.max(j));
        g.bits = 1u128 << edge_index(n, a, b);
        Ok(g)
    }

    pub fn from_bits(n: u8, bits: u128) -> LabeledGraph {
        assert!(n <= MAX_N);
        debug_assert!(bits >> edge_count_total(n) == 0);
        LabeledGraph { n, bits }
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn edge_count(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn has_edge(&self, i: u8, j: u8) -> bool {
        debug_assert!(i != j);
        let (a, b) = (i.min(j), i.max(j));
        self.bits & (1u128 << edge_index(self.n, a, b)) != 0
    }

    pub fn valency(&self, v: u8) -> u32 {
        (0..=self.n)
            .filter(|&w| w != v && self.has_edge(v, w))
            .count() as u32
    }

    pub fn edges(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::with_capacity(self.edge_count() as usize);
        for i in 0..self.n {
            for j in (i + 1)..=self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Image under the vertex action of `sigma`: edge `{a, b}` goes to
    /// `{sigma(a), sigma(b)}`.
    pub fn relabel(&self, sigma: &Perm) -> LabeledGraph {
        debug_assert_eq!(sigma.n(), self.n);
        let mut out = LabeledGraph::empty(self.n);
        for (a, b) in self.edges() {
            let (x, y) = (sigma.apply(a), sigma.apply(b));
            let (x, y) = (x.min(y), x.max(y));
            out.bits |= 1u128 << edge_index(self.n, x, y);
        }
        out
    }

    /// Kernel membership: every vertex of even valency and an even number
    /// of edges in total.
    pub fn is_kernel_graph(&self) -> bool {
        self.edge_count() % 2 == 0 && (0..=self.n).all(|v| self.valency(v) % 2 == 0)
    }

    /// Edge-list text, `"01,02,13,23"`: each edge as `min max` digits, list
    /// sorted lexicographically (= edge index order).
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            debug_assert!(j <= 9, "text notation is single-digit only");
            if k > 0 {
                s.push(',');
            }
            s.push((b'0' + i) as char);
            s.push((b'0' + j) as char);
        }
        s
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("(empty)")
        } else {
            f.write_str(&self.to_text())
        }
    }
}

impl BitXor for LabeledGraph {
    type Output = LabeledGraph;
    fn bitxor(self, rhs: LabeledGraph) -> LabeledGraph {
        assert_eq!(self.n, rhs.n);
        LabeledGraph {
            n: self.n,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl BitXorAssign for LabeledGraph {
    fn bitxor_assign(&mut self, rhs: LabeledGraph) {
        assert_eq!(self.n, rhs.n);
        self.bits ^= rhs.bits;
    }
}

/// The 4-cycle through `0, i, k, j`: edges `0i, 0j, ki, kj`. This is the
/// graph realizing the kernel element `(X_i X_j X_i X_k)^2`.
pub fn square_graph(i: u8, j: u8, k: u8, n: u8) -> Result<LabeledGraph> {
    if i == j || j == k || i == k {
        return Err(Error::IndicesNotDistinct);
    }
    for &v in &[i, j, k] {
        if v < 1 || v > n {
            return Err(Error::GeneratorOutOfRange { index: v, n });
        }
    }
    let mut g = LabeledGraph::empty(n);
    g ^= LabeledGraph::single_edge(n, 0, i)?;
    g ^= LabeledGraph::single_edge(n, 0, j)?;
    g ^= LabeledGraph::single_edge(n, k, i)?;
    g ^= LabeledGraph::single_edge(n, k, j)?;
    Ok(g)
}

/// Dimension of the kernel subspace: `(n+1)(n-2)/2` for `n ≥ 2`.
pub fn kernel_dimension(n: u8) -> usize {
    assert!(n >= 2);
    (n as usize + 1) * (n as usize - 2) / 2
}

/// Reduced row echelon form over GF(2); zero rows dropped, rows ordered by
/// pivot column (lowest bit index first).
pub fn gf2_rref(rows: &[u128]) -> Vec<u128> {
    let mut rows: Vec<u128> = rows.iter().copied().filter(|&r| r != 0).collect();
    let mut out: Vec<u128> = Vec::new();
    for col in 0..128u32 {
        let Some(pos) = rows.iter().position(|r| r & (1u128 << col) != 0) else {
            continue;
        };
        let pivot = rows.swap_remove(pos);
        for r in rows.iter_mut() {
            if *r & (1u128 << col) != 0 {
                *r ^= pivot;
            }
        }
        for r in out.iter_mut() {
            if *r & (1u128 << col) != 0 {
                *r ^= pivot;
            }
        }
        out.push(pivot);
        rows.retain(|&r| r != 0);
        if rows.is_empty() {
            break;
        }
    }
    out.sort_unstable_by_key(|r| r.trailing_zeros());
    out
}

pub fn gf2_rank(rows: &[u128]) -> usize {
    gf2_rref(rows).len()
}

/// Is `v` in the GF(2) span of `basis` (rows in RREF)?
pub fn gf2_in_span(basis: &[u128], mut v: u128) -> bool {
    for &b in basis {
        let pivot = 1u128 << b.trailing_zeros();
        if v & pivot != 0 {
            v ^= b;
        }
    }
    v == 0
}

/// A GF(2) basis of the kernel subspace `{g : even valencies, even edge
/// count}`, in reduced row-echelon order on edge bit vectors.
///
/// Asserts the dimension formula and that the subspace coincides with the
/// span of all relabeled square graphs (all 4-cycles).
pub fn kernel_basis(n: u8) -> Vec<LabeledGraph> {
    assert!((2..=MAX_N).contains(&n));
    let e = edge_count_total(n);

    // Parity constraint matrix: one row per vertex valency, one for the
    // total edge count. Columns are edges.
    let mut constraints: Vec<u128> = Vec::new();
    for v in 0..=n {
        let mut row = 0u128;
        for w in 0..=n {
            if w != v {
                let (a, b) = (v.min(w), v.max(w));
                row |= 1u128 << edge_index(n, a, b);
            }
        }
        constraints.push(row);
    }
    constraints.push(if e == 0 { 0 } else { (1u128 << e) - 1 });

    // Null space from the RREF: one basis vector per free column.
    let rref = gf2_rref(&constraints);
    let mut pivot_cols: Vec<u32> = rref.iter().map(|r| r.trailing_zeros()).collect();
    pivot_cols.sort_unstable();
    let mut basis_bits: Vec<u128> = Vec::new();
    for col in 0..e as u32 {
        if pivot_cols.binary_search(&col).is_ok() {
            continue;
        }
        let mut v = 1u128 << col;
        for r in &rref {
            if r & (1u128 << col) != 0 {
                v |= 1u128 << r.trailing_zeros();
            }
        }
        basis_bits.push(v);
    }
    let basis_bits = gf2_rref(&basis_bits);
    assert_eq!(
        basis_bits.len(),
        kernel_dimension(n),
        "kernel dimension formula"
    );

    // The kernel must equal the span of all 4-cycles.
    let mut cycles: Vec<u128> = Vec::new();
    for a in 0..=n {
        for b in (a + 1)..=n {
            for c in (b + 1)..=n {
                for d in (c + 1)..=n {
                    // The three 4-cycles on {a, b, c, d}.
                    for (x, y) in [(b, c), (c, d), (b, d)] {
                        let rest: Vec<u8> = [a, b, c, d]
                            .iter()
                            .copied()
                            .filter(|&v| v != x && v != y)
                            .collect();
                        let (p, q) = (rest[0], rest[1]);
                        let mut g = LabeledGraph::empty(n);
                        g ^= LabeledGraph::single_edge(n, p.min(x), p.max(x)).unwrap();
                        g ^= LabeledGraph::single_edge(n, p.min(y), p.max(y)).unwrap();
                        g ^= LabeledGraph::single_edge(n, q.min(x), q.max(x)).unwrap();
                        g ^= LabeledGraph::single_edge(n, q.min(y), q.max(y)).unwrap();
                        cycles.push(g.bits());
                    }
                }
            }
        }
    }
    for &c in &cycles {
        assert!(
            LabeledGraph::from_bits(n, c).is_kernel_graph(),
            "4-cycles satisfy the parity conditions"
        );
        assert!(gf2_in_span(&basis_bits, c), "4-cycle outside kernel span");
    }
    assert_eq!(
        gf2_rank(&cycles),
        basis_bits.len(),
        "4-cycles span the whole kernel"
    );

    basis_bits
        .into_iter()
        .map(|b| LabeledGraph::from_bits(n, b))
        .collect()
}

/// Every element of the kernel subspace, ordered by edge bit pattern.
/// Intended for small `n`; the count is `2^((n+1)(n-2)/2)`.
pub fn kernel_elements(n: u8) -> Vec<LabeledGraph> {
    let basis = kernel_basis(n);
    assert!(basis.len() <= 20, "kernel listing capped at dimension 20");
    let mut out = Vec::with_capacity(1 << basis.len());
    for combo in 0u32..(1 << basis.len()) {
        let mut bits = 0u128;
        for (i, b) in basis.iter().enumerate() {
            if combo & (1 << i) != 0 {
                bits ^= b.bits();
            }
        }
        out.push(LabeledGraph::from_bits(n, bits));
    }
    out.sort_unstable();
    out.dedup();
    assert_eq!(out.len(), 1 << basis.len());
    out
}
