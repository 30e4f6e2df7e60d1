use proptest::prelude::*;
use upkernel::constructors::{directed_cycle, directed_path};
use upkernel::families::{decide_even_cycle, decide_path};
use upkernel::line::independence_transfer_check;
use upkernel::predicates::is_classic_kernel;
use upkernel::{
    enumerate_classic_kernels, enumerate_up_color_kernels, gen, is_independent, is_up_color_kernel, Color,
    ColoredDigraph, VertexSet,
};

fn digraph(max_n: usize) -> impl Strategy<Value = ColoredDigraph> {
    (0..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(0u64..5, n), prop::collection::vec(prop::bool::weighted(0.35), n * n)).prop_map(
            move |(colors, bits)| {
                let arcs = (0..n * n).filter(|&i| bits[i] && i / n != i % n).map(|i| (i / n, i % n));
                ColoredDigraph::new(colors, arcs).unwrap()
            },
        )
    })
}

fn brute_force(d: &ColoredDigraph) -> Vec<VertexSet> {
    (0u64..1 << d.order()).map(VertexSet::from_mask).filter(|s| is_up_color_kernel(d, s).unwrap()).collect()
}

proptest! {
    #[test]
    fn oracle_matches_subset_sweep(d in digraph(8)) {
        let mut expected = brute_force(&d);
        expected.sort();
        let report = enumerate_up_color_kernels(&d).unwrap();
        prop_assert_eq!(report.count, expected.len());
        prop_assert_eq!(report.kernels, expected);
        prop_assert_eq!(report.exists, report.count > 0);
        prop_assert!(report.exists || !report.diagnostics.is_empty() || d.order() == 0);
    }

    #[test]
    fn up_color_kernels_are_independent_classic_kernels(d in digraph(8)) {
        let classic = enumerate_classic_kernels(&d).unwrap().kernels;
        for k in enumerate_up_color_kernels(&d).unwrap().kernels {
            prop_assert!(is_independent(&d, &k).unwrap());
            prop_assert!(is_classic_kernel(&d, &k).unwrap());
            prop_assert!(classic.contains(&k));
        }
    }

    #[test]
    fn strictly_increasing_recoloring_fixing_zero_keeps_kernels(d in digraph(7), scale in 1u64..5, shift in 0u64..5) {
        let c: Vec<Color> = d.colors().iter().map(|&c| if c == 0 { 0 } else { c * scale + shift }).collect();
        let e = d.with_colors(c).unwrap();
        prop_assert_eq!(enumerate_up_color_kernels(&d).unwrap().kernels, enumerate_up_color_kernels(&e).unwrap().kernels);
    }

    #[test]
    fn relabeling_permutes_kernels(d in digraph(7), seed in any::<u64>()) {
        let perm = gen::permutation(&mut gen::rng(seed), d.order());
        let e = gen::relabel(&d, &perm);
        let mut moved: Vec<VertexSet> = enumerate_up_color_kernels(&d).unwrap().kernels.iter().map(|k| k.mapped(&perm)).collect();
        moved.sort();
        prop_assert_eq!(moved, enumerate_up_color_kernels(&e).unwrap().kernels);
    }

    #[test]
    fn path_verdict_ignores_vertex_numbering(colors in prop::collection::vec(0u64..4, 1..8)) {
        let n = colors.len();
        let p = directed_path(n).unwrap().with_colors(colors).unwrap();
        let reversed: Vec<usize> = (0..n).rev().collect();
        let q = gen::relabel(&p, &reversed);
        prop_assert_eq!(decide_path(&p).unwrap().verdict, decide_path(&q).unwrap().verdict);
    }

    #[test]
    fn cycle_verdict_is_rotation_invariant(colors in prop::collection::vec(0u64..4, 2..9), r in 0usize..8) {
        let n = colors.len();
        let c = directed_cycle(n).unwrap().with_colors(colors).unwrap();
        let rot: Vec<usize> = (0..n).map(|i| (i + r) % n).collect();
        prop_assert_eq!(decide_even_cycle(&c).unwrap().verdict, decide_even_cycle(&gen::relabel(&c, &rot)).unwrap().verdict);
    }

    #[test]
    fn independence_transfers_outside_source_arcs(d in digraph(6), mask in any::<u64>()) {
        let z = VertexSet::from_mask(mask & ((1u64 << d.order()) - 1));
        let (a, b) = independence_transfer_check(&d, &z).unwrap();
        let source_arc = d.arcs().iter().any(|&(u, v)| z.contains(u) && z.contains(v) && d.in_degree(u) == 0);
        prop_assert_eq!(a, b && !source_arc);
    }
}
