use core::fmt;

/// Errors reported by the fallible operations of this crate.
///
/// Structural invariants that no input can violate (catalogue collisions,
/// kernel-span defects) are asserted instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex argument is outside `{0, …, n}` or not covered by the hop.
    VertexNotCovered { vertex: u8 },
    /// `together`/`separate` need two distinct vertices.
    VerticesEqual { vertex: u8 },
    /// Generator or word letter outside `{1, …, n}`.
    GeneratorOutOfRange { index: u8, n: u8 },
    /// Indices of a square graph must be pairwise distinct.
    IndicesNotDistinct,
    /// The two partitions share no block/complement pair.
    NotCompatible,
    /// Enumeration refused: the group order is too large without the opt-in.
    EnumerationTooLarge { n: u8 },
    /// An order computation left the range of `u128`.
    Overflow,
    /// A tensor or coordinate vector has the wrong shape for its index.
    DimensionMismatch,
    /// The bundle dimensions are not invariant under the `0 ↔ k` relabeling,
    /// so the generator action cannot transport components.
    DimsNotRelabelable { k: u8 },
    /// Malformed text for a hop, partition, graph, or word.
    Parse(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexNotCovered { vertex } => {
                write!(f, "vertex {vertex} is not covered")
            }
            Error::VerticesEqual { vertex } => {
                write!(f, "vertices must be distinct, both are {vertex}")
            }
            Error::GeneratorOutOfRange { index, n } => {
                write!(f, "generator index {index} outside 1..={n}")
            }
            Error::IndicesNotDistinct => write!(f, "indices must be pairwise distinct"),
            Error::NotCompatible => write!(f, "partitions are not compatible through any block"),
            Error::EnumerationTooLarge { n } => {
                write!(f, "enumeration for n = {n} needs the explicit large opt-in")
            }
            Error::Overflow => write!(f, "order does not fit in 128 bits"),
            Error::DimensionMismatch => write!(f, "tensor shape does not match bundle dimensions"),
            Error::DimsNotRelabelable { k } => {
                write!(
                    f,
                    "bundle dimensions are not invariant under swapping 0 and {k}"
                )
            }
            Error::Parse(what) => write!(f, "parse error: {what}"),
        }
    }
}
