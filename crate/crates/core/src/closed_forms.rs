//! Constant-time values for the families with known formulas.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{recognize_family, GraphClassTag};
use crate::game::{GrundyValue, Outcome};
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph is not a {0}")]
    TagMismatch(&'static str),
}

fn invalid(msg: impl Into<String>) -> ClosedFormError {
    ClosedFormError::InvalidParameter(msg.into())
}

/// A full Grundy value, or only the outcome where no value formula is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Evaluation {
    Grundy(GrundyValue),
    Outcome(Outcome),
}

impl Evaluation {
    pub fn outcome(self) -> Outcome {
        match self {
            Evaluation::Grundy(g) => g.outcome(),
            Evaluation::Outcome(o) => o,
        }
    }

    pub fn grundy(self) -> Option<GrundyValue> {
        match self {
            Evaluation::Grundy(g) => Some(g),
            Evaluation::Outcome(_) => None,
        }
    }
}

/// Every vertex of `K_n` gets selected: value `n mod 2`.
pub fn grundy_complete(n: usize) -> Result<GrundyValue, ClosedFormError> {
    if n == 0 {
        return Err(invalid("K_n needs n >= 1"));
    }
    Ok(GrundyValue((n % 2) as u32))
}

/// `K_{1,n}`: value `1 - (n mod 2)`.
pub fn grundy_star(leaves: usize) -> Result<GrundyValue, ClosedFormError> {
    if leaves == 0 {
        return Err(invalid("K_{1,n} needs n >= 1"));
    }
    Ok(GrundyValue(1 - (leaves % 2) as u32))
}

/// `K_{m,n}` with `m, n >= 2`: `0` when the parts have equal parity, `2` otherwise.
pub fn grundy_complete_bipartite(m: usize, n: usize) -> Result<GrundyValue, ClosedFormError> {
    if m.min(n) < 2 {
        return Err(invalid("K_{m,n} needs m, n >= 2 (use grundy_star for m = 1)"));
    }
    Ok(GrundyValue(if m % 2 == n % 2 { 0 } else { 2 }))
}

pub fn grundy_cycle(n: usize) -> Result<GrundyValue, ClosedFormError> {
    if n < 3 {
        return Err(invalid("C_n needs n >= 3"));
    }
    Ok(GrundyValue((n % 2) as u32))
}

/// `C_n` with one vertex selected: `n / 2` for even `n`, `0` for odd `n`.
pub fn grundy_cycle_one_selected(n: usize) -> Result<GrundyValue, ClosedFormError> {
    if n < 3 {
        return Err(invalid("C_n needs n >= 3"));
    }
    Ok(GrundyValue(if n.is_multiple_of(2) { (n / 2) as u32 } else { 0 }))
}

/// `C_n` with two selected vertices at cyclic distance `d`: `ceil(n / 2) - d`.
pub fn grundy_cycle_two_selected(n: usize, d: usize) -> Result<GrundyValue, ClosedFormError> {
    if n < 3 {
        return Err(invalid("C_n needs n >= 3"));
    }
    if d == 0 || d > n / 2 {
        return Err(invalid(format!("distance {d} outside 1..={} on C_{n}", n / 2)));
    }
    Ok(GrundyValue((n.div_ceil(2) - d) as u32))
}

/// `C_n` with one selected vertex (`d = None`) or two at cyclic distance `d`.
pub fn grundy_cycle_selected(n: usize, d: Option<usize>) -> Result<GrundyValue, ClosedFormError> {
    match d {
        None => grundy_cycle_one_selected(n),
        Some(d) => grundy_cycle_two_selected(n, d),
    }
}

pub fn grundy_path(n: usize) -> Result<GrundyValue, ClosedFormError> {
    if n == 0 {
        return Err(invalid("P_n needs n >= 1"));
    }
    Ok(GrundyValue((n % 2) as u32))
}

/// A grid is `N` exactly when every dimension is odd. Dimension 1 is allowed.
pub fn grid_outcome(dims: &[usize]) -> Result<Outcome, ClosedFormError> {
    if dims.is_empty() {
        return Err(invalid("grid needs at least one dimension"));
    }
    if dims.contains(&0) {
        return Err(invalid("grid dimensions must be positive"));
    }
    Ok(if dims.iter().all(|d| d % 2 == 1) { Outcome::N } else { Outcome::P })
}

/// A cartesian product is `N` exactly when every factor is `N`.
pub fn product_outcome(outcomes: &[Outcome]) -> Result<Outcome, ClosedFormError> {
    if outcomes.is_empty() {
        return Err(invalid("product needs at least one factor"));
    }
    Ok(if outcomes.iter().all(|&o| o == Outcome::N) { Outcome::N } else { Outcome::P })
}

/// Dispatches a recognized family to its formula. `Ok(None)` for families without one.
pub fn closed_form_lookup(g: &Graph, tag: &GraphClassTag) -> Result<Option<Evaluation>, ClosedFormError> {
    match recognize_family(g) {
        Ok(actual) if actual == *tag => {}
        _ => return Err(ClosedFormError::TagMismatch(tag.name())),
    }
    let value = match *tag {
        GraphClassTag::Complete { n } => grundy_complete(n)?,
        GraphClassTag::Star { leaves } => grundy_star(leaves)?,
        GraphClassTag::CompleteBipartite { m, n } => grundy_complete_bipartite(m, n)?,
        GraphClassTag::Cycle { n } => grundy_cycle(n)?,
        GraphClassTag::Path { n } => grundy_path(n)?,
        GraphClassTag::Grid { ref dims } => return Ok(Some(Evaluation::Outcome(grid_outcome(dims)?))),
        GraphClassTag::Tree
        | GraphClassTag::BlockGraph
        | GraphClassTag::Cactus
        | GraphClassTag::General => return Ok(None),
    };
    Ok(Some(Evaluation::Grundy(value)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::product::cartesian_product;

    fn g(v: u32) -> GrundyValue {
        GrundyValue(v)
    }

    #[test]
    fn family_formulas() {
        assert_eq!(grundy_complete(5), Ok(g(1)));
        assert_eq!(grundy_complete(1), Ok(g(1)));
        assert_eq!(grundy_complete(8), Ok(g(0)));
        assert_eq!(grundy_star(3), Ok(g(0)));
        assert_eq!(grundy_star(4), Ok(g(1)));
        assert_eq!(grundy_star(1), Ok(g(0)));
        assert_eq!(grundy_complete_bipartite(3, 5), Ok(g(0)));
        assert_eq!(grundy_complete_bipartite(2, 3), Ok(g(2)));
        assert_eq!(grundy_complete_bipartite(2, 2), Ok(g(0)));
        assert_eq!(grundy_cycle(7), Ok(g(1)));
        assert_eq!(grundy_cycle(8), Ok(g(0)));
        assert_eq!(grundy_cycle(3), Ok(g(1)));
        assert_eq!(grundy_path(5), Ok(g(1)));
        assert_eq!(grundy_path(6), Ok(g(0)));
        assert_eq!(grundy_path(1), Ok(g(1)));
    }

    #[test]
    fn cycle_with_selected_vertices() {
        assert_eq!(grundy_cycle_selected(6, None), Ok(g(3)));
        assert_eq!(grundy_cycle_selected(7, None), Ok(g(0)));
        assert_eq!(grundy_cycle_selected(7, Some(1)), Ok(g(3)));
        assert_eq!(grundy_cycle_selected(8, Some(4)), Ok(g(0)));
        assert!(grundy_cycle_selected(8, Some(5)).is_err());
        assert!(grundy_cycle_selected(8, Some(0)).is_err());
    }

    #[test]
    fn parameter_errors() {
        assert!(grundy_complete(0).is_err());
        assert!(grundy_star(0).is_err());
        assert!(grundy_complete_bipartite(1, 4).is_err());
        assert!(grundy_cycle(2).is_err());
        assert!(grundy_path(0).is_err());
        assert!(grid_outcome(&[]).is_err());
        assert!(product_outcome(&[]).is_err());
    }

    #[test]
    fn outcome_rules() {
        assert_eq!(grid_outcome(&[3, 3]), Ok(Outcome::N));
        assert_eq!(grid_outcome(&[2, 5]), Ok(Outcome::P));
        assert_eq!(grid_outcome(&[3, 3, 3]), Ok(Outcome::N));
        assert_eq!(grid_outcome(&[1, 3]), Ok(Outcome::N));
        assert_eq!(product_outcome(&[Outcome::N, Outcome::N]), Ok(Outcome::N));
        assert_eq!(product_outcome(&[Outcome::N, Outcome::P]), Ok(Outcome::P));
        assert_eq!(product_outcome(&[Outcome::N]), Ok(Outcome::N));
    }

    #[test]
    fn lookup_dispatch() {
        let c9 = generators::cycle(9);
        let tag = recognize_family(&c9).unwrap();
        assert_eq!(closed_form_lookup(&c9, &tag), Ok(Some(Evaluation::Grundy(g(1)))));

        let grid = cartesian_product(&[generators::path(2), generators::path(4)]).unwrap();
        let tag = recognize_family(&grid).unwrap();
        assert_eq!(closed_form_lookup(&grid, &tag), Ok(Some(Evaluation::Outcome(Outcome::P))));

        let petersen = generators::petersen();
        assert_eq!(closed_form_lookup(&petersen, &GraphClassTag::General), Ok(None));
        assert_eq!(
            closed_form_lookup(&petersen, &GraphClassTag::Cycle { n: 10 }),
            Err(ClosedFormError::TagMismatch("cycle"))
        );
    }
}
