//! Enumeration of tree shapes up to isomorphism.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::tree::TreeShape;

/// Canonical string of a tree up to isomorphism: the smaller of the AHU
/// codes rooted at the tree's centre(s).
pub fn canonical_code(vertex_count: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); vertex_count];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    centres(&adj)
        .into_iter()
        .map(|c| rooted_code(&adj, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    children.sort();
    let mut s = String::from("(");
    children.iter().for_each(|c| s.push_str(c));
    s.push(')');
    s
}

fn centres(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut removed = vec![false; n];
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        layer.iter().for_each(|&v| removed[v] = true);
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                if !removed[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

/// Every tree shape on `k` edges (non-leaf vertices of degree 3), one per
/// isomorphism class. Empty unless `k` is odd and at least 3.
///
/// Internal skeletons (trees of maximum degree 3 on `(k-1)/2` vertices) are
/// grown one vertex at a time and deduplicated by [`canonical_code`]; leaves
/// are then attached to bring every skeleton vertex to degree 3. Edge order
/// in the result: skeleton edges first, then leaf edges by host vertex.
pub fn tree_shapes(k: usize) -> Vec<TreeShape> {
    if k < 3 || k.is_multiple_of(2) {
        return Vec::new();
    }
    let internal = (k - 1) / 2;
    let mut level: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    level.insert(canonical_code(1, &[]), Vec::new());
    for size in 1..internal {
        let mut next = BTreeMap::new();
        for skeleton in level.values() {
            let mut deg = vec![0usize; size];
            for &(u, v) in skeleton {
                deg[u] += 1;
                deg[v] += 1;
            }
            for host in (0..size).filter(|&v| deg[v] < 3) {
                let mut grown = skeleton.clone();
                grown.push((host, size));
                next.entry(canonical_code(size + 1, &grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level
        .into_values()
        .map(|skeleton| {
            let mut deg = vec![0usize; internal];
            for &(u, v) in &skeleton {
                deg[u] += 1;
                deg[v] += 1;
            }
            let mut edges = skeleton;
            let mut next_vertex = internal;
            for (host, d) in deg.iter().enumerate() {
                for _ in *d..3 {
                    edges.push((host, next_vertex));
                    next_vertex += 1;
                }
            }
            TreeShape::new(next_vertex, edges).expect("grown shape is a valid tree")
        })
        .collect()
}

/// Automorphisms of `shape` as edge permutations (`perm[i]` is the image of
/// edge `i`), identity first. Stops after `limit` elements, so for very
/// symmetric shapes the result may be a proper subset of the group.
pub fn edge_automorphisms(shape: &TreeShape, limit: usize) -> Vec<Vec<usize>> {
    let n = shape.vertex_count();
    // BFS order from vertex 0 with parent links
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &(_, w) in shape.incident(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                order.push(w);
            }
        }
    }
    let mut found = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for root in 0..n {
        if shape.degree(root) != shape.degree(0) || found.len() >= limit {
            continue;
        }
        image[0] = root;
        used[root] = true;
        extend(shape, &order, &parent, 1, &mut image, &mut used, &mut found, limit);
        used[root] = false;
    }
    // identity first
    if let Some(pos) = found.iter().position(|p| p.iter().enumerate().all(|(i, &j)| i == j)) {
        found.swap(0, pos);
    }
    found
}

#[allow(clippy::too_many_arguments)]
fn extend(
    shape: &TreeShape,
    order: &[usize],
    parent: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
    found: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if found.len() >= limit {
        return;
    }
    if depth == order.len() {
        let edge_of = |a: usize, b: usize| {
            shape
                .incident(a)
                .iter()
                .find(|&&(_, w)| w == b)
                .map(|&(e, _)| e)
                .expect("image of an edge is an edge")
        };
        found.push(
            shape
                .edges()
                .iter()
                .map(|&(u, v)| edge_of(image[u], image[v]))
                .collect(),
        );
        return;
    }
    let v = order[depth];
    let target_parent = image[parent[v]];
    for &(_, w) in shape.incident(target_parent) {
        if !used[w] && shape.degree(w) == shape.degree(v) {
            image[v] = w;
            used[w] = true;
            extend(shape, order, parent, depth + 1, image, used, found, limit);
            used[w] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_counts() {
        // internal skeletons of max degree 3 on 1..=6 vertices: 1, 1, 1, 2, 2, 4
        let counts: Vec<usize> = [3, 5, 7, 9, 11, 13].iter().map(|&k| tree_shapes(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 2, 4]);
        assert!(tree_shapes(4).is_empty());
        assert!(tree_shapes(1).is_empty());
    }

    #[test]
    fn code_identifies_isomorphic_trees() {
        let t9 = TreeShape::t9();
        let shapes = tree_shapes(9);
        let codes: Vec<String> = shapes
            .iter()
            .map(|s| canonical_code(s.vertex_count(), s.edges()))
            .collect();
        assert!(codes.contains(&canonical_code(t9.vertex_count(), t9.edges())));
        // relabelled T5 has the same code
        let t5 = TreeShape::t5();
        let relabel = [5, 4, 3, 2, 1, 0];
        let moved: Vec<(usize, usize)> = t5.edges().iter().map(|&(u, v)| (relabel[u], relabel[v])).collect();
        assert_eq!(canonical_code(6, t5.edges()), canonical_code(6, &moved));
    }

    #[test]
    fn automorphism_group_orders() {
        for (shape, order) in [
            (TreeShape::star(), 6),
            (TreeShape::t5(), 8),
            (TreeShape::t7(), 8),
            (TreeShape::t9(), 48),
        ] {
            let auts = edge_automorphisms(&shape, usize::MAX);
            assert_eq!(auts.len(), order);
            assert_eq!(auts[0], (0..shape.edge_count()).collect::<Vec<_>>());
            let mut sorted = auts.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), order);
        }
        assert_eq!(edge_automorphisms(&TreeShape::t9(), 5).len(), 5);
    }
}
