//! Cross-checks of the parameter action: the worked single-generator
//! images, the word relations, the identification of kernel-word actions
//! with graph sign actions, and closure of statomorphisms under
//! composition.

use duality_core::combinatorics::{enumerate_partitions, Partition, Run};
use duality_core::graph::square_graph;
use duality_core::group::{eval_word, Word};
use duality_core::rng::SplitMix64;
use duality_core::theta::{
    apply_statomorphism, component_shape, for_each_index, sign_action, theta_generator, theta_word,
    BundleAssignment, DecomposedElement, ParamVector, Tensor,
};

fn scalar_vector(entries: &[(&str, i64)]) -> ParamVector {
    let mut phi = ParamVector::zero();
    for &(text, v) in entries {
        let p = Partition::parse(text).unwrap();
        let axes = p.block_count();
        phi.set(p, Tensor::scalar(axes, v));
    }
    phi
}

/// The images of the seven components under the first generator at n = 3:
/// each 2-tomo moves to the partition with 0 and 1 swapped, picking up a
/// minus sign unless 0 and 1 were together; the 3-tomo picks up the two
/// product corrections.
#[test]
fn n3_single_generator_images_of_all_seven_components() {
    let dims = BundleAssignment::uniform(3, 1);
    let moves: [(&str, &str, i64); 6] = [
        ("1,2,03", "0,13,2", -1),
        ("2,3,01", "01,2,3", 1),
        ("3,1,02", "0,12,3", -1),
        ("12,3,0", "02,1,3", -1),
        ("23,1,0", "0,1,23", -1),
        ("31,2,0", "03,1,2", -1),
    ];
    for (source, target, sign) in moves {
        let phi = scalar_vector(&[(source, 1)]);
        let out = theta_generator(1, &phi, &dims).unwrap();
        let target = Partition::parse(target).unwrap();
        assert_eq!(out.get(&target).unwrap().data(), &[sign], "{source}");
        assert_eq!(
            out.components().count(),
            1,
            "{source} image is a single tomo"
        );
    }

    // Full vector with distinct primes: the 3-tomo image is
    // -(0,2,3,1) + (1,2,03)(0,3,12) + (1,3,02)(0,2,13).
    let phi = scalar_vector(&[
        ("0,1,2,3", 2),
        ("03,1,2", 3),
        ("0,12,3", 5),
        ("02,1,3", 7),
        ("0,13,2", 11),
        ("01,2,3", 13),
        ("0,1,23", 17),
    ]);
    let out = theta_generator(1, &phi, &dims).unwrap();
    let discrete = Partition::parse("0,1,2,3").unwrap();
    assert_eq!(out.get(&discrete).unwrap().data(), &[-2 + 3 * 5 + 7 * 11]);
}

/// The full thirteen-term expansion of the 4-tomo image at n = 4,
/// transcribed as an independent arithmetic expectation.
#[test]
fn n4_four_tomo_image_has_thirteen_terms() {
    let dims = BundleAssignment::uniform(4, 1);
    let mut rng = SplitMix64::new(271828);
    let mut phi = ParamVector::zero();
    for p in enumerate_partitions(4, 3) {
        let axes = p.block_count();
        // Nonzero entries everywhere so no term degenerates.
        let mut v = rng.small_int();
        if v == 0 {
            v = 4;
        }
        phi.set(p, Tensor::scalar(axes, v));
    }
    let v = |text: &str| phi.get(&Partition::parse(text).unwrap()).unwrap().data()[0];

    let expected = -v("1,2,3,4,0")
        + v("0,2,134") * v("1,3,4,02")
        + v("0,3,124") * v("1,2,4,03")
        + v("0,4,123") * v("1,2,3,04")
        + v("14,2,3,0") * v("1,4,023")
        - v("0,2,134") * v("14,3,02") * v("1,4,023")
        - v("0,3,124") * v("14,2,03") * v("1,4,023")
        + v("13,2,4,0") * v("1,3,024")
        - v("0,2,134") * v("13,4,02") * v("1,3,024")
        - v("0,4,123") * v("13,2,04") * v("1,3,024")
        + v("12,3,4,0") * v("1,2,034")
        - v("0,3,124") * v("12,4,03") * v("1,2,034")
        - v("0,4,123") * v("12,3,04") * v("1,2,034");

    let out = theta_generator(1, &phi, &dims).unwrap();
    let discrete = Partition::parse("0,1,2,3,4").unwrap();
    assert_eq!(out.get(&discrete).unwrap().data(), &[expected]);
}

#[test]
fn word_relations_on_parameters() {
    let mut rng = SplitMix64::new(7);
    for n in [3u8, 4] {
        let dims = BundleAssignment::random_symmetric(n, 2, &mut rng);
        let phi = ParamVector::random(n, &dims, &mut rng);
        // X_k^2 = 1.
        for k in 1..=n {
            let w = Word::new(vec![k, k]);
            assert_eq!(theta_word(&w, &phi, &dims).unwrap(), phi);
        }
        // (X_i X_j)^3 = 1 for every pair.
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let w = Word::new(vec![i, j]).repeat(3);
                assert_eq!(theta_word(&w, &phi, &dims).unwrap(), phi, "braid {i}{j}");
            }
        }
    }
}

#[test]
fn fourth_powers_act_trivially_on_parameters() {
    // (X_i X_j X_i X_k)^4 = 1 for every distinct triple.
    let mut rng = SplitMix64::new(17);
    for n in [3u8, 4] {
        let dims = BundleAssignment::random_symmetric(n, 2, &mut rng);
        let phi = ParamVector::random(n, &dims, &mut rng);
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let w = Word::new(vec![i, j, i, k]).repeat(4);
                    assert_eq!(
                        theta_word(&w, &phi, &dims).unwrap(),
                        phi,
                        "({i}{j}{i}{k})^4"
                    );
                }
            }
        }
    }
}

#[test]
fn two_tomo_images_are_signed_permuted_copies() {
    // Any word sends a single 2-tomo to ± a relabeled copy on the image
    // partition of the word's permutation.
    let n = 4u8;
    let dims = BundleAssignment::uniform(n, 1);
    let words = ["1", "12", "1213", "4231", "121342"];
    for text in words {
        let word = Word::parse(text).unwrap();
        let sigma = eval_word(&word, n).unwrap().perm;
        for p in enumerate_partitions(n, 3) {
            if p.block_count() != 3 {
                continue;
            }
            let mut phi = ParamVector::zero();
            phi.set(p.clone(), Tensor::scalar(3, 1));
            let out = theta_word(&word, &phi, &dims).unwrap();
            assert_eq!(out.components().count(), 1);
            let (q, t) = out.components().next().unwrap();
            assert_eq!(
                *q,
                p.relabel(sigma.image()),
                "word {text} moves {p} by its permutation"
            );
            assert!(t.data() == [1] || t.data() == [-1]);
        }
    }
}

/// Kernel words act exactly as their graphs: checked on every component,
/// including the partitions with four or more blocks where the product
/// terms must cancel pairwise.
#[test]
fn kernel_words_act_by_their_graphs() {
    let mut rng = SplitMix64::new(1234);
    for n in [3u8, 4] {
        let dims = BundleAssignment::random_symmetric(n, 2, &mut rng);
        let phi = ParamVector::random(n, &dims, &mut rng);
        let mut base_words: Vec<Word> = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    base_words.push(Word::new(vec![i, j, i, k]).repeat(2));
                }
            }
        }
        for w in &base_words {
            let el = eval_word(w, n).unwrap();
            assert!(el.perm.is_identity());
            let by_theta = theta_word(w, &phi, &dims).unwrap();
            let by_graph = sign_action(&el.graph, &phi);
            assert_eq!(by_theta, by_graph, "n = {n}, word {w}");
        }
        // A few products of two square words (length 16).
        for a in 0..base_words.len().min(4) {
            for b in 0..base_words.len().min(4) {
                let w = base_words[a].concat(&base_words[b]);
                let el = eval_word(&w, n).unwrap();
                let by_theta = theta_word(&w, &phi, &dims).unwrap();
                let by_graph = sign_action(&el.graph, &phi);
                assert_eq!(by_theta, by_graph, "n = {n}, word {w}");
            }
        }
    }
}

/// Solve for the parameters of a composite statomorphism by probing with
/// basis inputs, then check the composite pointwise: statomorphisms are
/// closed under composition.
#[test]
fn statomorphism_composition_closure() {
    let n = 3u8;
    let dims = BundleAssignment::from_fn(n, |run| if run.len() == 2 { 2 } else { 1 });
    let mut rng = SplitMix64::new(5150);
    let phi = ParamVector::random(n, &dims, &mut rng);
    let phi2 = ParamVector::random(n, &dims, &mut rng);
    let composite = |e: &DecomposedElement| {
        let once = apply_statomorphism(0, &phi, e, &dims).unwrap();
        apply_statomorphism(0, &phi2, &once, &dims).unwrap()
    };

    // Basis probing: with inputs supported on the non-0 blocks of P, the
    // corrected coordinate of the complement run reads off one slice of
    // the unknown component at P.
    let mut solved = ParamVector::zero();
    for p in enumerate_partitions(n, 3) {
        let zero_block = p.block_containing(0);
        let out_axis = p.position_of_block(zero_block).unwrap();
        let target = Run(zero_block).complement(n);
        let shape = component_shape(&p, &dims);
        let mut tensor = Tensor::zeros(shape.clone());
        let mut arg_shape = shape.clone();
        arg_shape[out_axis] = 1;
        for_each_index(&arg_shape, |index| {
            let mut e = DecomposedElement::zeros(n, 0, &dims);
            for (axis, &blk) in p.blocks().iter().enumerate() {
                if axis == out_axis {
                    continue;
                }
                let run = Run(blk);
                let mut unit = vec![0i64; dims.dim(run)];
                unit[index[axis]] = 1;
                e.set(run, unit).unwrap();
            }
            let f = composite(&e);
            let column = f.get(target);
            let mut full = index.to_vec();
            for (r, &value) in column.iter().enumerate() {
                full[out_axis] = r;
                tensor.set(&full, value);
            }
        });
        solved.set(p, tensor);
    }

    for _ in 0..25 {
        let e = DecomposedElement::random(n, 0, &dims, &mut rng);
        let direct = composite(&e);
        let via_solved = apply_statomorphism(0, &solved, &e, &dims).unwrap();
        assert_eq!(direct, via_solved);
    }
}

/// Nonlinearity containment: the 3-block part of the image is linear in
/// the 3-block part of the input (factorization products always land on
/// partitions with at least four blocks), while the full image of a sum of
/// 2-tomos may gain genuine cross products there.
#[test]
fn generator_is_linear_on_the_two_tomo_part() {
    let n = 4u8;
    let mut rng = SplitMix64::new(99);
    let dims = BundleAssignment::random_symmetric(n, 2, &mut rng);
    let project = |phi: &ParamVector, blocks: usize| {
        let mut out = ParamVector::zero();
        for (p, t) in phi.components() {
            if p.block_count() == blocks {
                out.set(p.clone(), t.clone());
            }
        }
        out
    };
    let a = project(&ParamVector::random(n, &dims, &mut rng), 3);
    let b = project(&ParamVector::random(n, &dims, &mut rng), 3);
    let mut sum = a.clone();
    for (p, t) in b.components() {
        sum.add(p.clone(), t, 1);
    }
    let mut saw_cross_terms = false;
    for k in 1..=n {
        let image_of_sum = theta_generator(k, &sum, &dims).unwrap();
        let mut image_sum = theta_generator(k, &a, &dims).unwrap();
        for (p, t) in theta_generator(k, &b, &dims).unwrap().components() {
            image_sum.add(p.clone(), t, 1);
        }
        assert_eq!(project(&image_of_sum, 3), project(&image_sum, 3), "k = {k}");
        if project(&image_of_sum, 4) != project(&image_sum, 4) {
            saw_cross_terms = true;
        }
    }
    assert!(
        saw_cross_terms,
        "some generator produces quadratic cross terms"
    );
}

#[test]
fn theta_word_matches_square_graph_action_at_n3() {
    let dims = BundleAssignment::uniform(3, 1);
    let mut rng = SplitMix64::new(808);
    let phi = ParamVector::random(3, &dims, &mut rng);
    let w = Word::parse("1213").unwrap().repeat(2);
    let by_theta = theta_word(&w, &phi, &dims).unwrap();
    let by_graph = sign_action(&square_graph(1, 2, 3, 3).unwrap(), &phi);
    assert_eq!(by_theta, by_graph);
}
