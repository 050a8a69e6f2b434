//! Built-in named graphs and colorings used by the CLI (`corpus:` URIs) and
//! throughout the test suite.

use crate::colorings::{Coloring, ColoringVariant};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

/// Complete graph `K_k`.
pub fn clique(k: usize) -> Hypergraph {
    hyperclique(k, 2)
}

/// Complete ℓ-graph `K_r^(ℓ)` on `r` vertices.
pub fn hyperclique(r: usize, ell: usize) -> Hypergraph {
    assert!(ell >= 1 && r >= ell, "need r >= ell >= 1");
    let mut edges = Vec::new();
    let mut cur: Vec<VertexId> = (0..ell as u32).collect();
    loop {
        edges.push(cur.clone());
        // next ell-subset of [0, r) in lexicographic order
        let mut i = ell;
        loop {
            if i == 0 {
                return Hypergraph::new(ell, r, &edges).unwrap();
            }
            i -= 1;
            if cur[i] < (r - ell + i) as u32 {
                cur[i] += 1;
                for j in i + 1..ell {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Cycle `C_k`.
pub fn cycle(k: usize) -> Hypergraph {
    assert!(k >= 3);
    let edges: Vec<Vec<VertexId>> = (0..k)
        .map(|i| vec![i as u32, ((i + 1) % k) as u32])
        .collect();
    Hypergraph::new(2, k, &edges).unwrap()
}

/// Path on `k` vertices (k−1 edges).
pub fn path(k: usize) -> Hypergraph {
    assert!(k >= 1);
    let edges: Vec<Vec<VertexId>> = (0..k.saturating_sub(1))
        .map(|i| vec![i as u32, (i + 1) as u32])
        .collect();
    Hypergraph::new(2, k, &edges).unwrap()
}

/// The 3-regular graph on 6 vertices built from a 6-cycle plus its three
/// long chords (isomorphic to `K_{3,3}`); the minimal graph with
/// `m = m_2(C4) = 3/2` that forces a rainbow C4 in every 2-bounded coloring.
pub fn c6_3plus() -> Hypergraph {
    // cycle 0-1-5-4-3-2-0 with chords {0,4}, {1,3}, {2,5}
    Hypergraph::new(
        2,
        6,
        &[
            vec![0, 1],
            vec![1, 5],
            vec![4, 5],
            vec![3, 4],
            vec![2, 3],
            vec![0, 2],
            vec![0, 4],
            vec![1, 3],
            vec![2, 5],
        ],
    )
    .unwrap()
}

/// Two copies of `K_5^(3)` sharing 4 vertices; vertices 0..=3 are the shared
/// core, vertices 4 and 5 the private tips. 16 edges, 9 copies of
/// `K_4^(3)`.
pub fn doubled_k5_3() -> Hypergraph {
    let mut edges = Vec::new();
    for a in 0..4u32 {
        for b in a + 1..4 {
            for c in b + 1..4 {
                edges.push(vec![a, b, c]);
            }
        }
    }
    for a in 0..4u32 {
        for b in a + 1..4 {
            edges.push(vec![a, b, 4]);
            edges.push(vec![a, b, 5]);
        }
    }
    Hypergraph::new(3, 6, &edges).unwrap()
}

/// Coloring paired edge list → `Coloring` over `g`, one fresh color per
/// pair, then fresh singleton colors for any unlisted edges.
fn coloring_from_pairs(
    g: &Hypergraph,
    variant: ColoringVariant,
    pairs: &[(&[VertexId], &[VertexId])],
) -> Coloring {
    let mut colors = vec![u32::MAX; g.n_edges()];
    let mut col = 0u32;
    for (a, b) in pairs {
        let ia = g.edge_index(a).expect("pair edge in graph");
        let ib = g.edge_index(b).expect("pair edge in graph");
        colors[ia as usize] = col;
        colors[ib as usize] = col;
        col += 1;
    }
    for c in colors.iter_mut() {
        if *c == u32::MAX {
            *c = col;
            col += 1;
        }
    }
    Coloring { variant, colors }
}

/// A named coloring from the literature of this problem family, together
/// with its host graph and the pattern it avoids.
pub struct NamedColoring {
    pub name: &'static str,
    pub host_description: &'static str,
    pub host: Hypergraph,
    pub pattern: Hypergraph,
    pub coloring: Coloring,
}

/// The 2-bounded coloring of `K6` with no rainbow `K4`: seven pairs plus a
/// singleton color on the remaining edge `{1,2}`.
pub fn k6_no_rainbow_k4() -> NamedColoring {
    let host = clique(6);
    let pairs: [(&[VertexId], &[VertexId]); 7] = [
        (&[0, 1], &[0, 2]),
        (&[0, 3], &[0, 4]),
        (&[0, 5], &[4, 5]),
        (&[1, 3], &[1, 5]),
        (&[2, 3], &[2, 5]),
        (&[2, 4], &[1, 4]),
        (&[3, 4], &[3, 5]),
    ];
    let coloring = coloring_from_pairs(&host, ColoringVariant::Bounded(2), &pairs);
    NamedColoring {
        name: "k6-no-rainbow-k4",
        host_description: "K6",
        host,
        pattern: clique(4),
        coloring,
    }
}

/// The 2-bounded coloring of `K_5^(3)` with no rainbow `K_4^(3)`: five
/// pairs covering all ten edges.
pub fn k5_3_no_rainbow_k4_3() -> NamedColoring {
    let host = hyperclique(5, 3);
    let pairs: [(&[VertexId], &[VertexId]); 5] = [
        (&[0, 1, 4], &[0, 2, 4]),
        (&[0, 3, 4], &[2, 3, 4]),
        (&[1, 3, 4], &[0, 1, 3]),
        (&[1, 2, 3], &[1, 2, 4]),
        (&[0, 1, 2], &[0, 2, 3]),
    ];
    let coloring = coloring_from_pairs(&host, ColoringVariant::Bounded(2), &pairs);
    NamedColoring {
        name: "k5-3-no-rainbow-k4-3",
        host_description: "K5^(3)",
        host,
        pattern: hyperclique(4, 3),
        coloring,
    }
}

pub fn explicit_colorings() -> Vec<NamedColoring> {
    vec![k6_no_rainbow_k4(), k5_3_no_rainbow_k4_3()]
}

/// Graph names resolvable as `corpus:<name>`.
pub fn graph_names() -> Vec<String> {
    let mut names = vec![
        "c6-3plus".to_string(),
        "k5-3-doubled".to_string(),
    ];
    for k in 3..=20 {
        names.push(format!("K{k}"));
        names.push(format!("C{k}"));
    }
    names.push("K4^3".into());
    names.push("K5^3".into());
    names.push("K5^4".into());
    names.push("K6^4".into());
    names
}

/// Coloring names resolvable as `corpus:<name>`.
pub fn coloring_names() -> Vec<&'static str> {
    vec!["k6-fig2-coloring", "k6-no-rainbow-k4", "k5-3-coloring", "k5-3-no-rainbow-k4-3"]
}

pub fn lookup_graph(name: &str) -> Result<Hypergraph> {
    match name {
        "c6-3plus" => return Ok(c6_3plus()),
        "k5-3-doubled" => return Ok(doubled_k5_3()),
        _ => {}
    }
    let parse_usize = |s: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::input(format!("bad corpus name {name:?}")))
    };
    if let Some(rest) = name.strip_prefix('K').or_else(|| name.strip_prefix('k')) {
        if let Some((r, ell)) = rest.split_once('^') {
            let (r, ell) = (parse_usize(r)?, parse_usize(ell)?);
            if ell < 2 || r < ell + 1 {
                return Err(Error::input(format!("bad hyperclique {name:?}")));
            }
            return Ok(hyperclique(r, ell));
        }
        let k = parse_usize(rest)?;
        if k < 1 {
            return Err(Error::input(format!("bad clique {name:?}")));
        }
        return Ok(clique(k.max(2)));
    }
    if let Some(rest) = name.strip_prefix('C').or_else(|| name.strip_prefix('c')) {
        let k = parse_usize(rest)?;
        if k < 3 {
            return Err(Error::input(format!("cycle needs at least 3 vertices, got {name:?}")));
        }
        return Ok(cycle(k));
    }
    Err(Error::input(format!("unknown corpus graph {name:?}")))
}

pub fn lookup_coloring(name: &str) -> Result<NamedColoring> {
    match name {
        "k6-fig2-coloring" | "k6-no-rainbow-k4" => Ok(k6_no_rainbow_k4()),
        "k5-3-coloring" | "k5-3-no-rainbow-k4-3" => Ok(k5_3_no_rainbow_k4_3()),
        _ => Err(Error::input(format!("unknown corpus coloring {name:?}"))),
    }
}
