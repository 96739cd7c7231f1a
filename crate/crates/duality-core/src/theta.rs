//! The action of dualization words on statomorphism parameters, over a
//! point base, in exact integer arithmetic.
//!
//! A statomorphism of a decomposed bundle is determined by one multilinear
//! component per partition of `{0, …, n}` into three or more blocks (a
//! *tomo*); the direct sum of these component spaces is the parameter space
//! acted on here. With the base a point, every building bundle is an
//! integer coordinate space and every check below is exact multilinear
//! algebra.
//!
//! The generator action on a component at partition `P` is: copy when `0`
//! and `k` lie in one block of `P`; otherwise an alternating sum over
//! factorization chains of `P`,
//!
//! ```text
//! sum_j (-1)^j  sum_{P = Q_1 ∘ … ∘ Q_j}  phi_{Q_1} ∘ … ∘ phi_{Q_j},
//! ```
//!
//! where consecutive factors compose through the block of `Q_i` containing
//! `0` against the block of `Q_{i+1}` containing `k`. That orientation
//! makes each ordered tuple contribute exactly once; it is forced by the
//! duality pairing and is cross-checked by [`verify_pairing`] and by the
//! graph sign action. The resulting component is then filed under the
//! partition with `0` and `k` swapped, so that word actions are plain
//! compositions of generator actions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::combinatorics::{compose_partitions, enumerate_partitions, ground_mask, Partition, Run};
use crate::graph::LabeledGraph;
use crate::group::Word;
use crate::perm::Perm;
use crate::rng::SplitMix64;
use crate::{Error, Result};

/// Dimensions of the building bundles: one positive integer per nonempty
/// run over `{1, …, n}`. Runs containing `0` take the dimension of their
/// complement (dual space).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleAssignment {
    n: u8,
    dims: BTreeMap<Run, usize>,
}

impl BundleAssignment {
    /// Every building bundle of dimension `d`.
    pub fn uniform(n: u8, d: usize) -> BundleAssignment {
        BundleAssignment::from_fn(n, |_| d)
    }

    /// Dimension chosen per run by `f`; must be positive.
    pub fn from_fn(n: u8, mut f: impl FnMut(Run) -> usize) -> BundleAssignment {
        assert!(n >= 1);
        let mut dims = BTreeMap::new();
        let hop_mask = ground_mask(n) & !1;
        for mask in 1..=hop_mask {
            if mask & !hop_mask != 0 {
                continue;
            }
            let run = Run(mask);
            let d = f(run);
            assert!(d >= 1, "bundle dimensions are positive");
            dims.insert(run, d);
        }
        BundleAssignment { n, dims }
    }

    /// Dimension depending only on the run's size; `sizes[m-1]` is the
    /// dimension of every size-`m` run. Requires the palindrome condition
    /// `sizes[m-1] == sizes[n-m]`, which makes the assignment invariant
    /// under every vertex relabeling.
    pub fn by_size(n: u8, sizes: &[usize]) -> BundleAssignment {
        assert_eq!(sizes.len(), n as usize);
        for m in 1..=n as usize {
            assert_eq!(
                sizes[m - 1],
                sizes[n as usize - m],
                "sizes must be palindromic"
            );
        }
        BundleAssignment::from_fn(n, |run| sizes[run.len() as usize - 1])
    }

    /// Seeded palindromic size assignment with entries in `1..=max_dim`.
    pub fn random_symmetric(n: u8, max_dim: usize, rng: &mut SplitMix64) -> BundleAssignment {
        let mut sizes = alloc::vec![1usize; n as usize];
        for m in 1..=(n as usize + 1) / 2 {
            let d = rng.below(max_dim as u64) as usize + 1;
            sizes[m - 1] = d;
            sizes[n as usize - m] = d;
        }
        BundleAssignment::by_size(n, &sizes)
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// Dimension of the bundle indexed by any nonempty proper run over
    /// `{0, …, n}`.
    pub fn dim(&self, run: Run) -> usize {
        debug_assert!(!run.is_empty() && run.0 != ground_mask(self.n));
        if run.contains(0) {
            self.dims[&run.complement(self.n)]
        } else {
            self.dims[&run]
        }
    }

    /// Is every run's dimension unchanged by swapping `0` and `k`?
    pub fn is_swap_invariant(&self, k: u8) -> bool {
        let ground = ground_mask(self.n);
        let mut image: Vec<u8> = (0..=self.n).collect();
        image.swap(0, k as usize);
        for mask in 1..ground {
            let run = Run(mask);
            if self.dim(run) != self.dim(run.relabel(&image)) {
                return false;
            }
        }
        true
    }
}

/// A dense integer multi-array, row-major, one axis per partition block in
/// canonical block order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    shape: Vec<usize>,
    data: Vec<i64>,
}

impl Tensor {
    pub fn zeros(shape: Vec<usize>) -> Tensor {
        let len = shape.iter().product();
        Tensor {
            shape,
            data: alloc::vec![0; len],
        }
    }

    pub fn from_data(shape: Vec<usize>, data: Vec<i64>) -> Result<Tensor> {
        if shape.iter().product::<usize>() != data.len() {
            return Err(Error::DimensionMismatch);
        }
        Ok(Tensor { shape, data })
    }

    /// One-entry tensor for all-dims-one component spaces.
    pub fn scalar(axes: usize, value: i64) -> Tensor {
        Tensor {
            shape: alloc::vec![1; axes],
            data: alloc::vec![value],
        }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    fn offset(&self, index: &[usize]) -> usize {
        debug_assert_eq!(index.len(), self.shape.len());
        let mut off = 0;
        for (i, &ix) in index.iter().enumerate() {
            debug_assert!(ix < self.shape[i]);
            off = off * self.shape[i] + ix;
        }
        off
    }

    pub fn get(&self, index: &[usize]) -> i64 {
        self.data[self.offset(index)]
    }

    pub fn set(&mut self, index: &[usize], value: i64) {
        let off = self.offset(index);
        self.data[off] = value;
    }

    pub fn add_assign_scaled(&mut self, other: &Tensor, scale: i64) {
        assert_eq!(self.shape, other.shape);
        for (a, &b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += scale * b;
        }
    }
}

/// Visit all multi-indices of `shape` in row-major order.
pub fn for_each_index(shape: &[usize], mut f: impl FnMut(&[usize])) {
    if shape.contains(&0) {
        return;
    }
    let mut index = alloc::vec![0usize; shape.len()];
    loop {
        f(&index);
        let mut axis = shape.len();
        loop {
            if axis == 0 {
                return;
            }
            axis -= 1;
            index[axis] += 1;
            if index[axis] < shape[axis] {
                break;
            }
            index[axis] = 0;
        }
    }
}

/// Axis lengths of the component space at `partition`.
pub fn component_shape(partition: &Partition, dims: &BundleAssignment) -> Vec<usize> {
    partition
        .blocks()
        .iter()
        .map(|&b| dims.dim(Run(b)))
        .collect()
}

/// A single multilinear component: a partition with three or more blocks
/// and an integer tensor with one axis per block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tomo {
    pub partition: Partition,
    pub tensor: Tensor,
}

impl Tomo {
    pub fn new(partition: Partition, tensor: Tensor, dims: &BundleAssignment) -> Result<Tomo> {
        if tensor.shape() != component_shape(&partition, dims).as_slice() {
            return Err(Error::DimensionMismatch);
        }
        Ok(Tomo { partition, tensor })
    }
}

/// An element of the parameter space: one tensor per partition into three
/// or more blocks; absent components are zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamVector {
    components: BTreeMap<Partition, Tensor>,
}

impl ParamVector {
    pub fn zero() -> ParamVector {
        ParamVector {
            components: BTreeMap::new(),
        }
    }

    pub fn get(&self, partition: &Partition) -> Option<&Tensor> {
        self.components.get(partition)
    }

    pub fn components(&self) -> impl Iterator<Item = (&Partition, &Tensor)> {
        self.components.iter()
    }

    pub fn support(&self) -> BTreeSet<Partition> {
        self.components.keys().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// Insert, replacing any existing component; zero tensors are dropped.
    pub fn set(&mut self, partition: Partition, tensor: Tensor) {
        if tensor.is_zero() {
            self.components.remove(&partition);
        } else {
            self.components.insert(partition, tensor);
        }
    }

    pub fn add(&mut self, partition: Partition, tensor: &Tensor, scale: i64) {
        match self.components.get_mut(&partition) {
            Some(existing) => {
                existing.add_assign_scaled(tensor, scale);
                if existing.is_zero() {
                    self.components.remove(&partition);
                }
            }
            None => {
                let mut fresh = Tensor::zeros(tensor.shape().to_vec());
                fresh.add_assign_scaled(tensor, scale);
                self.set(partition, fresh);
            }
        }
    }

    pub fn validate(&self, dims: &BundleAssignment) -> Result<()> {
        for (p, t) in &self.components {
            if t.shape() != component_shape(p, dims).as_slice() {
                return Err(Error::DimensionMismatch);
            }
        }
        Ok(())
    }

    /// Seeded dense random vector with entries in `-3..=3`, one component
    /// per partition of `{0, …, n}` into at least three blocks.
    pub fn random(n: u8, dims: &BundleAssignment, rng: &mut SplitMix64) -> ParamVector {
        let mut out = ParamVector::zero();
        for p in enumerate_partitions(n, 3) {
            let shape = component_shape(&p, dims);
            let mut t = Tensor::zeros(shape);
            for v in t.data.iter_mut() {
                *v = rng.small_int();
            }
            out.set(p, t);
        }
        out
    }
}

/// Contraction of two tomos through their compatibility block: the axis of
/// `phi` at `I` is paired coordinate-wise against the axis of `psi` at
/// `I^C`, and the result lives on the composed partition.
pub fn compose_tomos(phi: &Tomo, psi: &Tomo, dims: &BundleAssignment) -> Result<Tomo> {
    let p = &phi.partition;
    let q = &psi.partition;
    let i = crate::combinatorics::compatible_through(p, q).ok_or(Error::NotCompatible)?;
    let ic = i.complement(p.n());
    let out_partition = compose_partitions(p, q)?;

    if phi.tensor.shape() != component_shape(p, dims).as_slice()
        || psi.tensor.shape() != component_shape(q, dims).as_slice()
    {
        return Err(Error::DimensionMismatch);
    }

    let p_axis = p.position_of_block(i.0).unwrap();
    let q_axis = q.position_of_block(ic.0).unwrap();
    let contract_dim = dims.dim(i);

    // Each output axis pulls from an axis of phi or of psi.
    let sources: Vec<(bool, usize)> = out_partition
        .blocks()
        .iter()
        .map(|&b| match p.position_of_block(b) {
            Some(ax) => (true, ax),
            None => (false, q.position_of_block(b).unwrap()),
        })
        .collect();

    let out_shape = component_shape(&out_partition, dims);
    let mut out = Tensor::zeros(out_shape.clone());
    let mut p_index = alloc::vec![0usize; p.block_count()];
    let mut q_index = alloc::vec![0usize; q.block_count()];
    for_each_index(&out_shape, |index| {
        for (pos, &(from_p, ax)) in sources.iter().enumerate() {
            if from_p {
                p_index[ax] = index[pos];
            } else {
                q_index[ax] = index[pos];
            }
        }
        let mut sum = 0i64;
        for a in 0..contract_dim {
            p_index[p_axis] = a;
            q_index[q_axis] = a;
            sum += phi.tensor.get(&p_index) * psi.tensor.get(&q_index);
        }
        out.set(index, sum);
    });

    Ok(Tomo {
        partition: out_partition,
        tensor: out,
    })
}

/// All ordered factorization tuples `(Q_1, …, Q_j)`, `j ≥ 1`, composing to
/// `p`, with `a` and `b` separate in every factor and each composition
/// consuming the `a`-block of `Q_i` against the `b`-block of `Q_{i+1}`.
///
/// The consumed blocks are forced by `a` and `b`, so every valid ordered
/// tuple appears exactly once; the evaluator asserts distinctness in tests.
pub fn factorization_chains(p: &Partition, a: u8, b: u8) -> Vec<Vec<Partition>> {
    debug_assert!(!p.together(a, b));
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    chains_rec(p, a, b, &mut prefix, &mut out);
    out
}

fn chains_rec(
    p: &Partition,
    a: u8,
    b: u8,
    prefix: &mut Vec<Partition>,
    out: &mut Vec<Vec<Partition>>,
) {
    if p.block_count() >= 3 {
        let mut chain = prefix.clone();
        chain.push(p.clone());
        out.push(chain);
    }
    let n = p.n();
    let a_block = p.block_containing(a);
    let b_block = p.block_containing(b);
    let others: Vec<u16> = p
        .blocks()
        .iter()
        .copied()
        .filter(|&blk| blk != a_block && blk != b_block)
        .collect();

    // First factor keeps the b-block plus a nonempty set of other blocks;
    // its a-block is everything else merged into one.
    for pick in 1u32..(1u32 << others.len()) {
        let mut survivors = alloc::vec![b_block];
        for (idx, &blk) in others.iter().enumerate() {
            if pick & (1 << idx) != 0 {
                survivors.push(blk);
            }
        }
        let merged: u16 = survivors
            .iter()
            .fold(ground_mask(n), |acc, &blk| acc & !blk);
        let mut q1_blocks = survivors.clone();
        q1_blocks.push(merged);
        let q1 = Partition::new(n, q1_blocks).unwrap();

        // Remainder target: the consumed complement plus the blocks that
        // stayed behind.
        let mut rest_blocks = alloc::vec![Run(merged).complement(n).0, a_block];
        for (idx, &blk) in others.iter().enumerate() {
            if pick & (1 << idx) == 0 {
                rest_blocks.push(blk);
            }
        }
        let rest = Partition::new(n, rest_blocks).unwrap();

        prefix.push(q1);
        chains_rec(&rest, a, b, prefix, out);
        prefix.pop();
    }
}

/// Single-generator transform of the components, indexed as the dualized
/// decomposition sees them (no relabeling applied): the closed form whose
/// statomorphism matches the original one under the duality pairing. This
/// is the variant [`verify_pairing`] feeds to the dual-side statomorphism.
pub fn theta_dual_components(
    k: u8,
    phi: &ParamVector,
    dims: &BundleAssignment,
) -> Result<ParamVector> {
    let n = dims.n();
    if k < 1 || k > n {
        return Err(Error::GeneratorOutOfRange { index: k, n });
    }
    phi.validate(dims)?;
    let support = phi.support();
    let mut out = ParamVector::zero();
    for p in enumerate_partitions(n, 3) {
        if p.together(0, k) {
            if let Some(t) = phi.get(&p) {
                out.add(p, t, 1);
            }
            continue;
        }
        let shape = component_shape(&p, dims);
        let mut acc = Tensor::zeros(shape);
        for chain in factorization_chains(&p, 0, k) {
            if chain.iter().any(|q| !support.contains(q)) {
                continue;
            }
            let sign = if chain.len() % 2 == 1 { -1 } else { 1 };
            // Right-nested product phi_{Q_1} ∘ (phi_{Q_2} ∘ (…)).
            let last = chain.last().unwrap();
            let mut value = Tomo {
                partition: last.clone(),
                tensor: phi.get(last).unwrap().clone(),
            };
            for q in chain[..chain.len() - 1].iter().rev() {
                let factor = Tomo {
                    partition: q.clone(),
                    tensor: phi.get(q).unwrap().clone(),
                };
                value = compose_tomos(&factor, &value, dims)?;
            }
            debug_assert_eq!(&value.partition, &p);
            acc.add_assign_scaled(&value.tensor, sign);
        }
        if !acc.is_zero() {
            out.add(p, &acc, 1);
        }
    }
    Ok(out)
}

/// Move a tensor along a vertex relabeling: the axis for block `J` becomes
/// the axis for the image block. Requires matching dimensions.
pub fn relabel_tomo(tomo: &Tomo, image: &[u8], dims: &BundleAssignment) -> Result<Tomo> {
    let p = &tomo.partition;
    let q = p.relabel(image);
    let target_positions: Vec<usize> = p
        .blocks()
        .iter()
        .map(|&blk| q.position_of_block(Run(blk).relabel(image).0).unwrap())
        .collect();
    let out_shape = component_shape(&q, dims);
    for (axis, &pos) in target_positions.iter().enumerate() {
        if tomo.tensor.shape()[axis] != out_shape[pos] {
            return Err(Error::DimensionMismatch);
        }
    }
    let mut out = Tensor::zeros(out_shape);
    let mut moved = alloc::vec![0usize; target_positions.len()];
    for_each_index(tomo.tensor.shape(), |index| {
        for (axis, &pos) in target_positions.iter().enumerate() {
            moved[pos] = index[axis];
        }
        out.set(&moved, tomo.tensor.get(index));
    });
    Ok(Tomo {
        partition: q,
        tensor: out,
    })
}

/// Relabel a full parameter vector along a permutation of the vertices.
pub fn relabel_param_vector(
    phi: &ParamVector,
    sigma: &Perm,
    dims: &BundleAssignment,
) -> Result<ParamVector> {
    let mut out = ParamVector::zero();
    for (p, t) in phi.components() {
        let moved = relabel_tomo(
            &Tomo {
                partition: p.clone(),
                tensor: t.clone(),
            },
            sigma.image(),
            dims,
        )?;
        out.add(moved.partition, &moved.tensor, 1);
    }
    Ok(out)
}

/// The action of the generator `X_k` on the parameter space: the closed
/// form of [`theta_dual_components`] followed by the `0 ↔ k` relabeling,
/// so a component at `P` lands at the swapped partition. Words then act by
/// plain composition and satisfy the defining relations.
///
/// Requires dimensions invariant under swapping `0` and `k`.
pub fn theta_generator(k: u8, phi: &ParamVector, dims: &BundleAssignment) -> Result<ParamVector> {
    let n = dims.n();
    if k < 1 || k > n {
        return Err(Error::GeneratorOutOfRange { index: k, n });
    }
    if !dims.is_swap_invariant(k) {
        return Err(Error::DimsNotRelabelable { k });
    }
    let dual = theta_dual_components(k, phi, dims)?;
    let sigma = Perm::transposition(n, 0, k);
    relabel_param_vector(&dual, &sigma, dims)
}

/// Word action: generator actions composed with the rightmost letter first,
/// matching the multiplication order of [`crate::group::eval_word`].
pub fn theta_word(word: &Word, phi: &ParamVector, dims: &BundleAssignment) -> Result<ParamVector> {
    let mut acc = phi.clone();
    for &letter in word.letters().iter().rev() {
        acc = theta_generator(letter, &acc, dims)?;
    }
    Ok(acc)
}

/// Number of edges of `g` whose endpoints lie in different blocks of `p`.
pub fn separating_edge_count(g: &LabeledGraph, p: &Partition) -> u32 {
    g.edges()
        .into_iter()
        .filter(|&(i, j)| !p.together(i, j))
        .count() as u32
}

/// The sign action of a graph: each component at `P` is multiplied by
/// `(-1)^(number of edges of g separating P)`.
pub fn sign_action(g: &LabeledGraph, phi: &ParamVector) -> ParamVector {
    let mut out = ParamVector::zero();
    for (p, t) in phi.components() {
        let sign = if separating_edge_count(g, p) % 2 == 0 {
            1
        } else {
            -1
        };
        out.add(p.clone(), t, sign);
    }
    out
}

/// Coordinates of a decomposed element: one integer vector per nonempty
/// run over `{0, …, n}` minus one excluded index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecomposedElement {
    n: u8,
    excluded: u8,
    coords: BTreeMap<Run, Vec<i64>>,
}

impl DecomposedElement {
    pub fn zeros(n: u8, excluded: u8, dims: &BundleAssignment) -> DecomposedElement {
        assert!(excluded <= n);
        let mut coords = BTreeMap::new();
        let allowed = ground_mask(n) & !(1 << excluded);
        for mask in 1..=allowed {
            if mask & !allowed != 0 {
                continue;
            }
            let run = Run(mask);
            coords.insert(run, alloc::vec![0i64; dims.dim(run)]);
        }
        DecomposedElement {
            n,
            excluded,
            coords,
        }
    }

    pub fn random(
        n: u8,
        excluded: u8,
        dims: &BundleAssignment,
        rng: &mut SplitMix64,
    ) -> DecomposedElement {
        let mut e = DecomposedElement::zeros(n, excluded, dims);
        for v in e.coords.values_mut() {
            for x in v.iter_mut() {
                *x = rng.small_int();
            }
        }
        e
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    /// The index missing from every run: `0` for the plain decomposed form,
    /// `k` for the form dualized in direction `k`.
    pub fn excluded(&self) -> u8 {
        self.excluded
    }

    pub fn get(&self, run: Run) -> &[i64] {
        &self.coords[&run]
    }

    pub fn set(&mut self, run: Run, values: Vec<i64>) -> Result<()> {
        match self.coords.get_mut(&run) {
            Some(slot) if slot.len() == values.len() => {
                *slot = values;
                Ok(())
            }
            _ => Err(Error::DimensionMismatch),
        }
    }

    pub fn runs(&self) -> impl Iterator<Item = Run> + '_ {
        self.coords.keys().copied()
    }
}

/// Apply the statomorphism with parameters `phi` to `e`.
///
/// `e` must exclude index `k` (`k = 0` for the plain decomposed form). For
/// each partition `P` carrying a component, the block of `P` containing
/// `k` names the corrected coordinate: the component is contracted against
/// the coordinates of the remaining blocks and added to it.
pub fn apply_statomorphism(
    k: u8,
    phi: &ParamVector,
    e: &DecomposedElement,
    dims: &BundleAssignment,
) -> Result<DecomposedElement> {
    if e.excluded() != k || e.n() != dims.n() {
        return Err(Error::DimensionMismatch);
    }
    phi.validate(dims)?;
    let mut out = e.clone();
    for (p, t) in phi.components() {
        let k_block = p.block_containing(k);
        let out_axis = p.position_of_block(k_block).unwrap();
        let target = Run(k_block).complement(p.n());

        // Contract every non-output axis with the matching coordinates.
        let arguments: Vec<Option<&[i64]>> = p
            .blocks()
            .iter()
            .map(|&blk| {
                if blk == k_block {
                    None
                } else {
                    Some(e.get(Run(blk)))
                }
            })
            .collect();
        let mut add = alloc::vec![0i64; t.shape()[out_axis]];
        for_each_index(t.shape(), |index| {
            let mut prod = t.get(index);
            if prod == 0 {
                return;
            }
            for (axis, arg) in arguments.iter().enumerate() {
                if let Some(values) = arg {
                    prod *= values[index[axis]];
                    if prod == 0 {
                        return;
                    }
                }
            }
            add[index[out_axis]] += prod;
        });

        let slot = out
            .coords
            .get_mut(&target)
            .ok_or(Error::DimensionMismatch)?;
        if slot.len() != add.len() {
            return Err(Error::DimensionMismatch);
        }
        for (s, a) in slot.iter_mut().zip(add.iter()) {
            *s += a;
        }
    }
    Ok(out)
}

/// The pairing of the decomposed form and its `k`-dual: the sum over runs
/// `S` containing `0` (and avoiding `k`) of the dot product of the
/// complementary coordinates; base coordinates are shared.
pub fn decomposed_pairing(e: &DecomposedElement, e_dual: &DecomposedElement, k: u8) -> i64 {
    debug_assert_eq!(e.excluded(), 0);
    debug_assert_eq!(e_dual.excluded(), k);
    debug_assert!(k >= 1);
    let n = e.n();
    let mut total = 0i64;
    for s in e_dual.runs() {
        if !s.contains(0) {
            continue;
        }
        let sc = s.complement(n);
        let left = e.get(sc);
        let right = e_dual.get(s);
        debug_assert_eq!(left.len(), right.len());
        total += left
            .iter()
            .zip(right.iter())
            .map(|(&a, &b)| a * b)
            .sum::<i64>();
    }
    total
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingCounterexample {
    pub trial: u32,
    pub lhs: i64,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingReport {
    pub holds: bool,
    pub trials: u32,
    pub counterexample: Option<PairingCounterexample>,
}

/// Check the duality-pairing identity on random decomposed elements: with
/// `psi` the dual-indexed transform of `phi`,
///
/// ```text
/// <e, e'> = <stato_0(phi)(e), stato_k(psi)(e')>
/// ```
///
/// exactly, for `trials` seeded draws of `(e, e')` sharing base
/// coordinates. A failure indicts the pairing formula chosen here rather
/// than the closed-form transform, and is reported with the offending
/// values.
pub fn verify_pairing(
    k: u8,
    phi: &ParamVector,
    dims: &BundleAssignment,
    trials: u32,
    seed: u64,
) -> Result<PairingReport> {
    let n = dims.n();
    if k < 1 || k > n {
        return Err(Error::GeneratorOutOfRange { index: k, n });
    }
    let psi = theta_dual_components(k, phi, dims)?;
    let mut rng = SplitMix64::new(seed);
    for trial in 0..trials {
        let e = DecomposedElement::random(n, 0, dims, &mut rng);
        let mut e_dual = DecomposedElement::random(n, k, dims, &mut rng);
        // Shared base: runs avoiding both 0 and k.
        for run in e_dual.runs().collect::<Vec<_>>() {
            if !run.contains(0) {
                e_dual.set(run, e.get(run).to_vec())?;
            }
        }
        let lhs = decomposed_pairing(&e, &e_dual, k);
        let f = apply_statomorphism(0, phi, &e, dims)?;
        let f_dual = apply_statomorphism(k, &psi, &e_dual, dims)?;
        let rhs = decomposed_pairing(&f, &f_dual, k);
        if lhs != rhs {
            return Ok(PairingReport {
                holds: false,
                trials: trial + 1,
                counterexample: Some(PairingCounterexample { trial, lhs, rhs }),
            });
        }
    }
    Ok(PairingReport {
        holds: true,
        trials,
        counterexample: None,
    })
}
