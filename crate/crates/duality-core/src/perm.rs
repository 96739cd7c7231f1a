//! Permutations of `{0, …, n}` in one-line image notation.

use alloc::vec::Vec;

use crate::{Error, Result, MAX_N};

/// A permutation of `{0, …, n}`; `image[v]` is the image of `v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    image: Vec<u8>,
}

impl Perm {
    pub fn identity(n: u8) -> Perm {
        assert!(n <= MAX_N);
        Perm {
            image: (0..=n).collect(),
        }
    }

    /// The transposition `(a b)` inside `S_{n+1}`.
    pub fn transposition(n: u8, a: u8, b: u8) -> Perm {
        assert!(a <= n && b <= n && a != b);
        let mut p = Perm::identity(n);
        p.image.swap(a as usize, b as usize);
        p
    }

    pub fn from_image(image: Vec<u8>) -> Result<Perm> {
        let n = image.len();
        if n == 0 || n > MAX_N as usize + 1 {
            return Err(Error::Parse("permutation size out of range"));
        }
        let mut seen = vec_bool(n);
        for &v in &image {
            if v as usize >= n || seen[v as usize] {
                return Err(Error::Parse("image is not a bijection"));
            }
            seen[v as usize] = true;
        }
        Ok(Perm { image })
    }

    /// Largest moved-set index: a permutation of `{0, …, n}` reports `n`.
    pub fn n(&self) -> u8 {
        (self.image.len() - 1) as u8
    }

    pub fn apply(&self, v: u8) -> u8 {
        self.image[v as usize]
    }

    pub fn image(&self) -> &[u8] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.image.len(), other.image.len());
        Perm {
            image: other
                .image
                .iter()
                .map(|&v| self.image[v as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut image = alloc::vec![0u8; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v as usize] = i as u8;
        }
        Perm { image }
    }

    /// Disjoint cycle decomposition, fixed points omitted, each cycle led by
    /// its smallest element, cycles ordered by leading element.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let size = self.image.len();
        let mut seen = vec_bool(size);
        let mut out = Vec::new();
        for start in 0..size {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cycle.push(v as u8);
                v = self.image[v] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

fn vec_bool(size: usize) -> Vec<bool> {
    let mut v = Vec::new();
    v.resize(size, false);
    v
}
