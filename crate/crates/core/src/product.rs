use crate::graph::{Graph, GraphError};
use crate::vertex_set::MAX_VERTICES;

/// Cartesian product `G_1 □ ... □ G_k`.
///
/// Vertex `(x_1, .., x_k)` gets the row-major index `((x_1 * n_2 + x_2) * n_3 + ..) + x_k`,
/// so nested products and flat products number their vertices identically. Factors that
/// are themselves products are flattened in the retained factor list.
pub fn cartesian_product(gs: &[Graph]) -> Result<Graph, GraphError> {
    if gs.is_empty() {
        return Err(GraphError::EmptyProduct);
    }
    if let Some(i) = gs.iter().position(|g| g.vertex_count() == 0) {
        return Err(GraphError::EmptyFactor(i));
    }
    let total = gs
        .iter()
        .try_fold(1usize, |acc, g| acc.checked_mul(g.vertex_count()))
        .filter(|&t| t <= MAX_VERTICES)
        .ok_or_else(|| {
            GraphError::Capacity(gs.iter().map(Graph::vertex_count).fold(1, usize::saturating_mul))
        })?;

    // stride of coordinate i = product of the sizes after it
    let mut strides = vec![1usize; gs.len()];
    for i in (0..gs.len() - 1).rev() {
        strides[i] = strides[i + 1] * gs[i + 1].vertex_count();
    }

    let mut edges = Vec::new();
    for idx in 0..total {
        for (i, g) in gs.iter().enumerate() {
            let coord = idx / strides[i] % g.vertex_count();
            for other in g.neighbors(coord) {
                if other > coord {
                    edges.push((idx, idx + (other - coord) * strides[i]));
                }
            }
        }
    }

    let mut factors = Vec::new();
    for g in gs {
        match g.factors() {
            Some(inner) => factors.extend(inner.iter().cloned()),
            None => factors.push(g.clone()),
        }
    }
    Ok(Graph::from_edges(total, edges)?.with_factors(factors))
}

/// Coordinates of product vertex `idx` given the factor sizes.
pub fn product_coordinates(sizes: &[usize], mut idx: usize) -> Vec<usize> {
    let mut coords = vec![0; sizes.len()];
    for (c, &size) in coords.iter_mut().zip(sizes).rev() {
        *c = idx % size;
        idx /= size;
    }
    coords
}
