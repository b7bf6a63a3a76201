use aenergy::io::{parse_edge_list, parse_graph6, read_graph_file, write_edge_list, write_graph6, GraphSpec};
use aenergy::Error;
use aenergy_core::corpus::pair_order;
use aenergy_core::{FamilySpec, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = pair_order(n);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            Graph::new(n, pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(&p, _)| p)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(40)) {
        let s = write_graph6(&g);
        let n = g.order();
        let prefix = if n <= 62 { 1 } else { 4 };
        prop_assert_eq!(s.len(), prefix + (n * n.saturating_sub(1) / 2).div_ceil(6));
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph(15)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_never_panics(s in "[\\x20-\\x7f]{0,12}") {
        let _ = parse_graph6(&s);
    }
}

#[test]
fn large_orders_round_trip() {
    let g = Graph::new(300, (0..299).map(|i| (i, i + 1))).unwrap();
    let s = write_graph6(&g);
    assert!(s.starts_with('~'));
    assert_eq!(parse_graph6(&s).unwrap(), g);
}

#[test]
fn files_by_content() {
    let dir = std::env::temp_dir().join(format!("aenergy-io-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g6 = dir.join("c5.g6");
    std::fs::write(&g6, "Dhc\n").unwrap();
    let el = dir.join("p3.txt");
    std::fs::write(&el, "3 2\n0 1\n1 2\n").unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "3 3\n0 1\n1 2\n").unwrap();

    assert_eq!(read_graph_file(&g6).unwrap(), FamilySpec::Cycle(5).generate().unwrap());
    let spec: GraphSpec = format!("file:{}", el.display()).parse().unwrap();
    assert_eq!(spec.load().unwrap(), FamilySpec::Path(3).generate().unwrap());
    assert!(matches!(read_graph_file(&bad), Err(Error::EdgeCountMismatch { declared: 3, found: 2 })));
    assert!(matches!(read_graph_file(&dir.join("missing")), Err(Error::Io { .. })));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn error_messages_name_the_problem() {
    let e = parse_graph6("A\x1f").unwrap_err().to_string();
    assert!(e.contains("0x1f"), "{e}");
    let e = parse_edge_list("2 1\n0 q").unwrap_err().to_string();
    assert!(e.contains("line 2"), "{e}");
    let e = "nope:3".parse::<GraphSpec>().unwrap_err().to_string();
    assert!(e.contains("nope"), "{e}");
}
