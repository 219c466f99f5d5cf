//! Undirected simple graphs with sorted adjacency lists, plus the two
//! traversal primitives every solver shares: connected components and
//! deterministic BFS spanning trees.

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// An undirected simple graph. Vertices are `0..n`; parallel edges collapse
/// silently at construction, self-loops are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut degree_sum = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            degree_sum += list.len();
        }
        debug_assert_eq!(degree_sum % 2, 0);
        Ok(Graph {
            n,
            m: degree_sum / 2,
            adjacency,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }
}

/// BFS tree of one connected component. The root's parent is the root
/// itself; vertices outside the component have no parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    /// BFS visitation order; parents always precede children.
    pub order: Vec<usize>,
}

impl SpanningTree {
    pub fn contains(&self, v: usize) -> bool {
        v < self.parent.len() && self.parent[v].is_some()
    }
}

/// BFS tree rooted at `root`, exploring neighbours in ascending index order
/// so the tree (and everything derived from it) is reproducible.
pub fn bfs_spanning_tree(g: &Graph, root: usize) -> SpanningTree {
    assert!(root < g.n(), "root {root} out of range");
    let mut parent = vec![None; g.n()];
    let mut order = Vec::new();
    parent[root] = Some(root);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbours(v) {
            if parent[w].is_none() {
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    SpanningTree {
        root,
        parent,
        order,
    }
}

/// Connected components, listed by smallest member; each component's
/// vertices are sorted ascending.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut result = Vec::new();
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        result.push(comp);
    }
    result
}
