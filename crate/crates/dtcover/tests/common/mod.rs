//! Shared graph corpora and reference oracles for the integration tests.

use dtcover::graph::Graph;

/// Every labeled simple graph on vertex set `1..=n`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
        .collect();
    (0u32..(1u32 << pairs.len()))
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            Graph::new(n, edges).expect("enumeration yields simple graphs")
        })
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1usize];
    seen[1] = true;
    while let Some(u) = stack.pop() {
        for e in g.edges() {
            if e.contains(u) {
                let v = e.other(u);
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    (1..=n).all(|v| seen[v])
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(is_connected).collect()
}

/// Four vertices, edges {1,2}, {1,4}, {2,4}, {3,4}; VC = 2.
pub fn four_graph() -> Graph {
    Graph::new(4, vec![(1, 2), (1, 4), (2, 4), (3, 4)]).unwrap()
}

/// Three degree->=2 centers in a path with 3+2+3 pendant leaves:
/// 11 vertices, 10 edges, unique cover {1,2,3}.
pub fn three_center_graph() -> Graph {
    Graph::new(
        11,
        vec![
            (1, 2),
            (2, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 7),
            (2, 8),
            (3, 9),
            (3, 10),
            (3, 11),
        ],
    )
    .unwrap()
}
