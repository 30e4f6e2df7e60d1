use upkernel::constructors::{line_digraph, Coloration};
use upkernel::line::*;
use upkernel::{gen, ColoredDigraph, Oracle, VertexSet};

// Independence transfers except when Z holds an arc leaving a source.
#[test]
fn independence_transfers_on_every_subset() {
    let mut rng = gen::rng(5);
    let mut exceptions = 0;
    for i in 0..500 {
        let n = 1 + i % 5;
        let d = gen::digraph(&mut rng, n, 0.4, 3);
        for mask in 0u64..1 << n {
            let z = VertexSet::from_mask(mask);
            let (a, b) = independence_transfer_check(&d, &z).unwrap();
            let source_arc = d.arcs().iter().any(|&(u, v)| z.contains(u) && z.contains(v) && d.in_degree(u) == 0);
            assert_eq!(a, b && !source_arc, "{d:?} mask {mask:b}");
            assert!(!a || b, "independent Z must map to an independent f(Z)");
            exceptions += (a != b) as usize;
        }
    }
    assert!(exceptions > 0);
}

// Source hypothesis plus nonzero source colors.
fn hypothesis_instances(seed: u64, count: usize) -> Vec<ColoredDigraph> {
    let mut rng = gen::rng(seed);
    let mut out = Vec::new();
    let mut i = 0;
    while out.len() < count {
        let d = gen::digraph_with_source_hypothesis(&mut rng, 1 + i % 7, 0.3, 4);
        i += 1;
        if d.sources().all(|s| d.color(s) > 0) {
            out.push(d);
        }
    }
    out
}

#[test]
fn counts_agree_under_the_source_hypothesis() {
    let oracle = Oracle::new(64);
    let mut nonzero = 0;
    for d in hypothesis_instances(7, 200) {
        let r = verify_count_theorem_with(&oracle, &d).unwrap();
        assert!(r.hypothesis && r.nonzero_sources);
        assert!(r.consistent, "{d:?}: {r:?}");
        nonzero += (r.count_d > 0) as usize;
    }
    assert!(nonzero > 20);
}

#[test]
fn f_and_g_are_inverse_on_kernels() {
    let oracle = Oracle::new(64);
    for d in hypothesis_instances(8, 200) {
        let line = line_digraph(&d, Coloration::Outer);
        let kd = oracle.up_color_kernels(&d).unwrap().kernels;
        let kl = oracle.up_color_kernels(&line.digraph).unwrap().kernels;
        let mut images: Vec<VertexSet> = kd.iter().map(|z| map_f(&d, z).unwrap().to_line_vertices(&line).unwrap()).collect();
        images.sort();
        assert_eq!(images, kl, "f is a bijection onto the kernels of L(D)");
        for h in &kl {
            let back = map_g(&d, &ArcSubset::from_line_vertices(&line, h));
            assert!(kd.contains(&back), "g(H) = {back:?} is not a kernel of {d:?}");
        }
    }
}
