//! The 32-element kernel for `n = 4`, with named elements, its sign table
//! on the 25 two-tomos, and its multiplication table.
//!
//! Twelve elements arise as `(X_i X_j X_i X_k)^2` and carry the labels
//! `A..F`, `K..M`, `P..R`; `T = AD`, `U = BF`, `V = AQ`; `i` is the
//! complete graph (multiplication by it takes a graph to its complement);
//! lowercase letters are the complements of their uppercase partners; `I`
//! is the empty graph.

use alloc::vec::Vec;

use crate::combinatorics::Partition;
use crate::graph::LabeledGraph;
use crate::group::{eval_word, Word};
use crate::perm::Perm;
use crate::theta::{separating_edge_count, sign_action, ParamVector, Tensor};

/// Labels of the fifteen table columns, in table order.
pub const TABLE_LABELS: [char; 15] = [
    'A', 'B', 'C', 'D', 'E', 'F', 'K', 'L', 'M', 'P', 'Q', 'R', 'T', 'U', 'V',
];

/// The twelve square-word elements and their defining words.
const SQUARE_WORDS: [(char, &str); 12] = [
    ('A', "1213"),
    ('B', "1312"),
    ('C', "2321"),
    ('D', "1214"),
    ('E', "1412"),
    ('F', "2421"),
    ('K', "1413"),
    ('L', "1314"),
    ('M', "4341"),
    ('P', "4243"),
    ('Q', "4342"),
    ('R', "2324"),
];

/// The 25 partitions of `{0, …, 4}` into three blocks, in the row order of
/// the reference sign table: the fifteen 2+2+1 shapes, then the ten 3+1+1
/// shapes.
pub const TABLE_ROW_ORDER: [&str; 25] = [
    "0,12,34", "0,13,24", "0,14,23", "02,1,34", "03,1,24", "04,1,23", "01,2,34", "03,14,2",
    "04,13,2", "01,24,3", "02,14,3", "04,12,3", "01,23,4", "02,13,4", "03,12,4", "012,3,4",
    "013,2,4", "014,2,3", "023,1,4", "024,1,3", "034,1,2", "0,123,4", "0,124,3", "0,134,2",
    "0,1,234",
];

/// One catalogue entry.
#[derive(Debug, Clone)]
pub struct K5Element {
    pub label: char,
    pub graph: LabeledGraph,
    /// Defining word for the twelve square-word elements.
    pub word: Option<Word>,
}

/// The full 32-element catalogue: `I`, the 15 uppercase labels, `i`, and
/// the 15 lowercase complements. Any collision or parity failure panics.
pub fn build_k5_catalog() -> Vec<K5Element> {
    let n = 4;
    let mut out: Vec<K5Element> = Vec::with_capacity(32);
    out.push(K5Element {
        label: 'I',
        graph: LabeledGraph::empty(n),
        word: None,
    });

    for (label, text) in SQUARE_WORDS {
        let word = Word::parse(text).unwrap().repeat(2);
        let el = eval_word(&word, n).unwrap();
        assert!(
            el.perm.is_identity(),
            "square word {text} must be a kernel word"
        );
        assert!(
            el.graph.is_kernel_graph(),
            "square word graph fails the parity conditions"
        );
        out.push(K5Element {
            label,
            graph: el.graph,
            word: Some(word),
        });
    }

    let graph_of = |out: &[K5Element], label: char| -> LabeledGraph {
        out.iter().find(|e| e.label == label).unwrap().graph
    };
    for (label, x, y) in [('T', 'A', 'D'), ('U', 'B', 'F'), ('V', 'A', 'Q')] {
        let graph = graph_of(&out, x) ^ graph_of(&out, y);
        out.push(K5Element {
            label,
            graph,
            word: None,
        });
    }

    let complete = LabeledGraph::complete(n);
    out.push(K5Element {
        label: 'i',
        graph: complete,
        word: None,
    });
    let uppercase: Vec<(char, LabeledGraph)> = out
        .iter()
        .filter(|e| e.label != 'I' && e.label != 'i')
        .map(|e| (e.label, e.graph))
        .collect();
    for (upper, graph) in uppercase {
        out.push(K5Element {
            label: upper.to_ascii_lowercase(),
            graph: graph ^ complete,
            word: None,
        });
    }

    assert_eq!(out.len(), 32);
    for e in &out {
        assert!(
            e.graph.is_kernel_graph(),
            "{} fails the parity conditions",
            e.label
        );
    }
    let mut bits: Vec<u128> = out.iter().map(|e| e.graph.bits()).collect();
    bits.sort_unstable();
    bits.dedup();
    assert_eq!(bits.len(), 32, "catalogue graphs must be pairwise distinct");
    out
}

pub fn catalog_lookup(catalog: &[K5Element], graph: LabeledGraph) -> Option<char> {
    catalog.iter().find(|e| e.graph == graph).map(|e| e.label)
}

/// The 25 x 15 sign table of the catalogue acting on 2-tomos, generated by
/// the sign action on a basis tensor per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignTable {
    /// Row partitions in reference-table order.
    pub rows: Vec<Partition>,
    /// `cells[r][c] = ±1` for column [`TABLE_LABELS`]`[c]`.
    pub cells: Vec<Vec<i8>>,
}

pub fn generate_action_table() -> SignTable {
    let catalog = build_k5_catalog();
    let rows: Vec<Partition> = TABLE_ROW_ORDER
        .iter()
        .map(|t| Partition::parse(t).unwrap())
        .collect();
    {
        // The pinned row order must be exactly the 3-block partitions.
        let mut sorted: Vec<Partition> = rows.clone();
        sorted.sort();
        let expected: Vec<Partition> = crate::combinatorics::enumerate_partitions(4, 3)
            .into_iter()
            .filter(|p| p.block_count() == 3)
            .collect();
        assert_eq!(sorted, expected);
    }
    let cells = rows
        .iter()
        .map(|p| {
            let mut basis = ParamVector::zero();
            basis.set(p.clone(), Tensor::scalar(3, 1));
            TABLE_LABELS
                .iter()
                .map(|&label| {
                    let graph = catalog.iter().find(|e| e.label == label).unwrap().graph;
                    let image = sign_action(&graph, &basis);
                    match image.get(p).map(|t| t.data()[0]) {
                        Some(1) => 1i8,
                        Some(-1) => -1,
                        other => panic!("sign action must be ±1 on a basis tomo, got {other:?}"),
                    }
                })
                .collect()
        })
        .collect();
    SignTable { rows, cells }
}

/// The 15 x 15 multiplication table over the labels of [`TABLE_LABELS`]:
/// XOR of graphs, looked up in the catalogue (`I` on the diagonal,
/// lowercase letters for products landing on a complement).
pub fn generate_mult_table() -> Vec<Vec<char>> {
    let catalog = build_k5_catalog();
    let graph_of =
        |label: char| -> LabeledGraph { catalog.iter().find(|e| e.label == label).unwrap().graph };
    TABLE_LABELS
        .iter()
        .map(|&a| {
            TABLE_LABELS
                .iter()
                .map(|&b| {
                    let product = graph_of(a) ^ graph_of(b);
                    catalog_lookup(&catalog, product)
                        .unwrap_or_else(|| panic!("product {a}{b} left the catalogue"))
                })
                .collect()
        })
        .collect()
}

/// Conjugate a catalogue element by the generator `X_g`: relabel the graph
/// by the transposition `(0 g)` and look the result up. The kernel is
/// stable under relabeling, so the lookup never fails.
pub fn conjugate(catalog: &[K5Element], label: char, g: u8) -> char {
    assert!((1..=4).contains(&g));
    let element = catalog
        .iter()
        .find(|e| e.label == label)
        .expect("unknown catalogue label");
    let sigma = Perm::transposition(4, 0, g);
    let moved = element.graph.relabel(&sigma);
    catalog_lookup(catalog, moved).expect("kernel is stable under vertex relabeling")
}

/// Sign of one table cell straight from the parity count, used to
/// cross-check the generated table.
pub fn cell_sign(graph: &LabeledGraph, partition: &Partition) -> i8 {
    if separating_edge_count(graph, partition) % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    fn graph_of(catalog: &[K5Element], label: char) -> LabeledGraph {
        catalog.iter().find(|e| e.label == label).unwrap().graph
    }

    #[test]
    fn catalogue_has_32_distinct_kernel_graphs() {
        let catalog = build_k5_catalog();
        assert_eq!(catalog.len(), 32);
        let labels: BTreeSet<char> = catalog.iter().map(|e| e.label).collect();
        assert_eq!(labels.len(), 32);
        // The kernel for n = 4 has exactly these 32 graphs.
        let all: BTreeSet<LabeledGraph> = crate::graph::kernel_elements(4).into_iter().collect();
        let ours: BTreeSet<LabeledGraph> = catalog.iter().map(|e| e.graph).collect();
        assert_eq!(all, ours);
    }

    #[test]
    fn named_graphs_have_the_expected_edge_sets() {
        let catalog = build_k5_catalog();
        assert_eq!(graph_of(&catalog, 'A').to_text(), "01,02,13,23");
        // T is the 4-cycle 1-3, 3-2, 2-4, 4-1.
        assert_eq!(graph_of(&catalog, 'T').to_text(), "13,14,23,24");
        assert_eq!(graph_of(&catalog, 'U').to_text(), "01,02,03,04,14,23");
        assert_eq!(graph_of(&catalog, 'V').to_text(), "01,02,03,04,13,24");
        assert_eq!(graph_of(&catalog, 'i'), LabeledGraph::complete(4));
        assert!(graph_of(&catalog, 'I').is_empty());
    }

    #[test]
    fn span_of_the_catalogue_has_rank_five() {
        let catalog = build_k5_catalog();
        let bits: Vec<u128> = catalog.iter().map(|e| e.graph.bits()).collect();
        assert_eq!(crate::graph::gf2_rank(&bits), 5);
    }

    #[test]
    fn defining_product_identities() {
        let catalog = build_k5_catalog();
        let mul = |x: char, y: char| {
            catalog_lookup(&catalog, graph_of(&catalog, x) ^ graph_of(&catalog, y)).unwrap()
        };
        assert_eq!(mul('A', 'B'), 'C');
        assert_eq!(mul('A', 'K'), 'P');
        assert_eq!(mul('A', 'D'), 'T');
        assert_eq!(mul('B', 'F'), 'U');
        assert_eq!(mul('A', 'Q'), 'V');
        assert_eq!(mul('T', 'U'), 'V');
        assert_eq!(mul('U', 'V'), 'T');
        assert_eq!(mul('T', 'V'), 'U');
        // AD = MQ, hence A·D·M·Q = I.
        let admq = graph_of(&catalog, 'A')
            ^ graph_of(&catalog, 'D')
            ^ graph_of(&catalog, 'M')
            ^ graph_of(&catalog, 'Q');
        assert!(admq.is_empty());
    }

    #[test]
    fn mult_table_is_symmetric_with_identity_diagonal() {
        let table = generate_mult_table();
        for (r, row) in table.iter().enumerate() {
            assert_eq!(row[r], 'I');
            for (c, &cell) in row.iter().enumerate() {
                assert_eq!(cell, table[c][r]);
            }
        }
    }

    #[test]
    fn sign_table_spot_cells() {
        let table = generate_action_table();
        let col = |l: char| TABLE_LABELS.iter().position(|&c| c == l).unwrap();
        let row = |text: &str| {
            let p = Partition::parse(text).unwrap();
            table.rows.iter().position(|q| *q == p).unwrap()
        };
        assert_eq!(table.cells[row("12,0,34")][col('A')], 1);
        assert_eq!(table.cells[row("13,0,24")][col('A')], -1);
        assert_eq!(table.cells[row("012,3,4")][col('K')], -1);
    }

    #[test]
    fn sign_table_agrees_with_the_parity_count() {
        let catalog = build_k5_catalog();
        let table = generate_action_table();
        for (r, p) in table.rows.iter().enumerate() {
            for (c, &label) in TABLE_LABELS.iter().enumerate() {
                assert_eq!(table.cells[r][c], cell_sign(&graph_of(&catalog, label), p));
            }
        }
    }

    #[test]
    fn lowercase_flips_exactly_the_three_one_one_rows() {
        let catalog = build_k5_catalog();
        let table = generate_action_table();
        for &label in TABLE_LABELS.iter() {
            let upper = graph_of(&catalog, label);
            let lower = graph_of(&catalog, label.to_ascii_lowercase());
            for (r, p) in table.rows.iter().enumerate() {
                let us = cell_sign(&upper, p);
                let ls = cell_sign(&lower, p);
                if r < 15 {
                    assert_eq!(us, ls, "2+2+1 row {p}");
                } else {
                    assert_eq!(us, -ls, "3+1+1 row {p}");
                }
            }
        }
    }

    #[test]
    fn conjugation_facts() {
        let catalog = build_k5_catalog();
        assert_eq!(conjugate(&catalog, 'Q', 1), 'T');
        assert_eq!(conjugate(&catalog, 'M', 2), 'T');
        assert_eq!(conjugate(&catalog, 'D', 3), 'T');
        assert_eq!(conjugate(&catalog, 'A', 4), 'T');
        assert_eq!(conjugate(&catalog, 'I', 2), 'I');
        assert_eq!(conjugate(&catalog, 'i', 3), 'i');
    }

    #[test]
    fn conjugation_closes_for_every_label_and_generator() {
        let catalog = build_k5_catalog();
        for e in &catalog {
            for g in 1..=4u8 {
                let _ = conjugate(&catalog, e.label, g);
            }
        }
    }

    #[test]
    fn row_order_text_is_stable() {
        let table = generate_action_table();
        assert_eq!(table.rows[0].to_string(), "0,12,34");
        assert_eq!(table.rows[24].to_string(), "0,1,234");
    }
}
