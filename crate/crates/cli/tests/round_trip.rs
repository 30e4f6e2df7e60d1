use proptest::prelude::*;
use upkernel_cli::{GraphDocument, VertexEntry};

fn document() -> impl Strategy<Value = GraphDocument> {
    (0usize..7, "[a-zA-Z0-9 _\"\\\\(),.-]{0,12}").prop_flat_map(|(n, name)| {
        let ids = proptest::collection::btree_set("[a-z0-9()\",]{1,6}", n..=n);
        let colors = proptest::collection::vec(0u64..1_000_000, n);
        let arcs = proptest::collection::vec((0..n.max(1), 0..n.max(1)), 0..12);
        (Just(name), ids, colors, arcs).prop_map(move |(name, ids, colors, arcs)| {
            let ids: Vec<String> = ids.into_iter().collect();
            let mut seen = std::collections::BTreeSet::new();
            let arcs = arcs
                .into_iter()
                .filter(|&(u, v)| u != v && u < ids.len() && v < ids.len() && seen.insert((u, v)))
                .map(|(u, v)| (ids[u].clone(), ids[v].clone()))
                .collect();
            GraphDocument {
                name,
                vertices: ids.iter().zip(colors).map(|(id, color)| VertexEntry { id: id.clone(), color }).collect(),
                arcs,
            }
        })
    })
}

proptest! {
    #[test]
    fn parse_inverts_serialize(doc in document()) {
        let text = doc.to_text();
        prop_assert_eq!(GraphDocument::parse(&text, "doc").unwrap(), doc.clone());
        // the validated form lists arcs in index order and is a fixed point
        let g = doc.validate().unwrap();
        let canonical = g.document();
        prop_assert_eq!(canonical.arcs.iter().cloned().collect::<std::collections::BTreeSet<_>>(), doc.arcs.iter().cloned().collect());
        prop_assert_eq!(canonical.validate().unwrap(), g);
    }
}
