//! The certified bound against exhaustive cycle enumeration on small random
//! cubic graphs and on sampled kernels.

use cycle_bound_core::biased_tree::{e_t_closed_form, BiasedTree, StandardTree, TreeShape};
use cycle_bound_core::kernel_config::{random_cubic_graph, sample_uniform_prekernel, validate_degree_sequence};
use cycle_bound_core::pseudograph::{
    certified_cycle_weight_bound, enumerate_cycles, kernel_with_weights, max_weight_cycle, subdivide_uniformly,
    SolveMode, WeightedPseudograph,
};
use cycle_bound_core::rng::stream;

fn trees() -> Vec<(BiasedTree, usize)> {
    vec![
        (BiasedTree::uniform(TreeShape::star()), 3),
        (e_t_closed_form(StandardTree::T5).unwrap().biased_tree(), 5),
        (e_t_closed_form(StandardTree::T9).unwrap().biased_tree(), 9),
    ]
}

fn heaviest_enumerated(g: &WeightedPseudograph) -> u64 {
    let list = enumerate_cycles(g.graph(), usize::MAX);
    assert!(!list.truncated);
    list.cycles.iter().map(|c| g.weight_of(c)).max().unwrap_or(0)
}

#[test]
fn bound_holds_on_random_cubic_graphs() {
    let trees = trees();
    let mut nondegenerate = 0;
    for i in 0..60u64 {
        let n = 10 + 2 * (i % 3) as usize;
        let mut rng = stream(100, i);
        let g = random_cubic_graph(n, &mut rng, 10_000).unwrap();
        let weighted = subdivide_uniformly(&g, 10 * g.edge_count() as u64, &mut rng).unwrap();
        let heaviest = heaviest_enumerated(&weighted);
        let exact = max_weight_cycle(&weighted, SolveMode::Exact).unwrap().unwrap();
        assert_eq!(exact.weight, heaviest);
        for (tree, k) in &trees {
            let bound = certified_cycle_weight_bound(&weighted, tree, *k).unwrap();
            assert!(
                heaviest as f64 <= bound.value,
                "graph {i}, k = {k}: {heaviest} > {}",
                bound.value
            );
            nondegenerate += usize::from(!bound.degenerate && bound.gamma_weight < weighted.total_weight());
        }
    }
    // the star with k = 3 must leave room for the embedding term
    assert!(nondegenerate > 0);
}

#[test]
fn bound_holds_on_sampled_kernels() {
    let d = validate_degree_sequence(&[3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 2, 2, 2, 2, 2, 2, 2, 2]).unwrap();
    let (star, _) = trees().into_iter().next().unwrap();
    for i in 0..30u64 {
        let sample = sample_uniform_prekernel(&d, &mut stream(101, i), 10_000).unwrap();
        let kernel = kernel_with_weights(&sample.realization.prekernel).unwrap();
        let heaviest = heaviest_enumerated(&kernel);
        // the prekernel's longest cycle is the kernel's heaviest cycle
        let on_prekernel = heaviest_enumerated(&WeightedPseudograph::unit(sample.realization.prekernel.clone()));
        assert_eq!(heaviest, on_prekernel);
        let bound = certified_cycle_weight_bound(&kernel, &star, 3).unwrap();
        assert!(heaviest as f64 <= bound.value);
    }
}
