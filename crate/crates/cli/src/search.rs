//! Bounded operator searches over a workspace algebra.

use plab_core::algebra::{search_averaging_operators, SearchLimits};
use plab_core::rota_baxter::{search_rb_operators, search_relative_rb};
use plab_core::{AveragingAlgebra, AvgRepresentation, Matrix, Rational, Result};

use crate::workspace::{emit_map, Workspace};

#[derive(Clone, Debug, PartialEq)]
pub enum Target {
    Averaging,
    RotaBaxter {
        weight: Rational,
    },
    /// Maps `V → A` for the representation `rep` of `(A, op)` with companion `alpha`.
    RelativeRotaBaxter {
        op: String,
        rep: String,
        alpha: String,
    },
}

pub fn search(
    ws: &Workspace,
    on: &str,
    target: &Target,
    entries: &[Rational],
    limits: &SearchLimits,
) -> Result<Vec<Matrix>> {
    let alg = ws.algebra(on)?.clone();
    match target {
        Target::Averaging => search_averaging_operators(&alg, entries, limits),
        Target::RotaBaxter { weight } => search_rb_operators(&alg, weight, entries, limits),
        Target::RelativeRotaBaxter { op, rep, alpha } => {
            let avg = AveragingAlgebra::new(alg, ws.map(op)?.clone())?;
            let avgrep = AvgRepresentation {
                rep: ws.rep(rep)?.clone(),
                alpha: ws.map(alpha)?.clone(),
            };
            search_relative_rb(&avg, &avgrep, entries, limits)
        }
    }
}

/// The found maps as `map PREFIX1 ...`, `map PREFIX2 ...` declarations.
pub fn emit_found(ws: &Workspace, on: &str, prefix: &str, found: &[Matrix]) -> Result<String> {
    let n = ws.algebra(on)?.dim();
    Ok(found
        .iter()
        .enumerate()
        .map(|(k, m)| emit_map(&format!("{prefix}{}", k + 1), on, n, m))
        .collect::<Vec<_>>()
        .join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workspace::parse_workspace;
    use plab_core::Scalar;

    fn entries() -> Vec<Rational> {
        [-1, 0, 1].map(Rational::from_i64).to_vec()
    }

    #[test]
    fn averaging_on_zero_algebra_finds_everything() {
        let ws = parse_workspace("algebra Z2 dim 2\n").unwrap();
        let found = search(
            &ws,
            "Z2",
            &Target::Averaging,
            &entries(),
            &SearchLimits::default(),
        )
        .unwrap();
        assert_eq!(found.len(), 81);
    }

    #[test]
    fn found_maps_parse_back() {
        let ws = parse_workspace("algebra N2 dim 2\nc 1 1 2 = 1\n").unwrap();
        let w = Rational::from_i64(1);
        let found = search(
            &ws,
            "N2",
            &Target::RotaBaxter { weight: w },
            &entries(),
            &SearchLimits::default(),
        )
        .unwrap();
        assert!(!found.is_empty());
        let text = format!(
            "algebra N2 dim 2\nc 1 1 2 = 1\n{}",
            emit_found(&ws, "N2", "B", &found).unwrap()
        );
        let back = parse_workspace(&text).unwrap();
        for (k, m) in found.iter().enumerate() {
            assert_eq!(back.map(&format!("B{}", k + 1)).unwrap(), m);
        }
    }

    #[test]
    fn budget_is_enforced() {
        let ws = parse_workspace("algebra Z2 dim 2\n").unwrap();
        let limits = SearchLimits {
            max_dim: 3,
            budget: 80,
        };
        let e = search(&ws, "Z2", &Target::Averaging, &entries(), &limits).unwrap_err();
        assert!(matches!(
            e,
            plab_core::Error::SearchSpaceTooLarge {
                size: 81,
                budget: 80
            }
        ));
    }
}
