//! Upper bounds on `|u·v|` and a permutation-enumeration oracle for the tightest one.

use crate::error::SimilarityError;
use crate::metrics::{norm, sorted_bound, squared_norm};
use crate::vector::{sorted_ascending, DenseVector};

/// Largest dimension [`brute_force_rearrangement`] will enumerate (8! permutations).
pub const BRUTE_FORCE_MAX_DIM: usize = 8;

/// The four quantities of the dot-product bound chain, loosest last.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundChain {
    /// `|u·v|`
    pub abs_dot: f64,
    /// `|u↑·v↕|`
    pub rearrangement: f64,
    /// `‖u‖‖v‖`
    pub cauchy_schwarz: f64,
    /// `(‖u‖² + ‖v‖²) / 2`
    pub arithmetic_quadratic: f64,
}

impl BoundChain {
    pub fn as_array(&self) -> [f64; 4] {
        [
            self.abs_dot,
            self.rearrangement,
            self.cauchy_schwarz,
            self.arithmetic_quadratic,
        ]
    }

    /// Checks `a <= b·(1 + rel_tol)` for each consecutive pair. Returns the index
    /// of the first violated link (0, 1 or 2), or `None` if the chain holds.
    pub fn first_violation(&self, rel_tol: f64) -> Option<usize> {
        let xs = self.as_array();
        (0..3).find(|&i| xs[i] > xs[i + 1] * (1.0 + rel_tol))
    }
}

/// `|u↑·v↕|`. For orthogonal input the larger of `|u↑·v↑|` and `|u↑·v↓|` is returned.
pub fn rearrangement_bound(u: &DenseVector, v: &DenseVector) -> Result<f64, SimilarityError> {
    let d = crate::metrics::dot(u, v)?;
    let u_asc = sorted_ascending(u);
    let v_asc = sorted_ascending(v);
    Ok(if d == 0.0 {
        sorted_bound(&u_asc, &v_asc, 1.0).max(sorted_bound(&u_asc, &v_asc, -1.0))
    } else {
        sorted_bound(&u_asc, &v_asc, d)
    })
}

pub fn bound_chain(u: &DenseVector, v: &DenseVector) -> Result<BoundChain, SimilarityError> {
    let d = crate::metrics::dot(u, v)?;
    Ok(BoundChain {
        abs_dot: d.abs(),
        rearrangement: rearrangement_bound(u, v)?,
        cauchy_schwarz: norm(u) * norm(v),
        arithmetic_quadratic: 0.5 * (squared_norm(u) + squared_norm(v)),
    })
}

/// Extremum of `u·Pv` over all permutations `P`, found by exhaustive enumeration.
///
/// Follows the sign of `u·v`: the maximum when positive, `|min|` when negative,
/// and the larger magnitude of the two when zero. Independent of any sorting,
/// so it serves as an oracle for [`rearrangement_bound`].
pub fn brute_force_rearrangement(u: &DenseVector, v: &DenseVector) -> Result<f64, SimilarityError> {
    let d = crate::metrics::dot(u, v)?;
    let n = u.dim();
    if n > BRUTE_FORCE_MAX_DIM {
        return Err(SimilarityError::DimensionTooLarge {
            dim: n,
            max: BRUTE_FORCE_MAX_DIM,
        });
    }

    let u = u.as_slice();
    let mut perm = v.to_vec();
    let eval = |p: &[f64]| u.iter().zip(p).map(|(a, b)| a * b).sum::<f64>();
    let mut hi = eval(&perm);
    let mut lo = hi;

    // Heap's algorithm, iterative form.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let s = eval(&perm);
            hi = hi.max(s);
            lo = lo.min(s);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    Ok(if d > 0.0 {
        hi
    } else if d < 0.0 {
        lo.abs()
    } else {
        hi.abs().max(lo.abs())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(xs: &[f64]) -> DenseVector {
        DenseVector::try_from(xs).unwrap()
    }

    #[test]
    fn rearrangement_examples() {
        assert_eq!(rearrangement_bound(&dv(&[1.0, 2.0]), &dv(&[2.0, 1.0])).unwrap(), 5.0);
        assert_eq!(rearrangement_bound(&dv(&[3.0, 1.0]), &dv(&[3.0, 1.0])).unwrap(), 10.0);
        assert_eq!(
            rearrangement_bound(&dv(&[1.0, 2.0, 3.0]), &dv(&[-3.0, -2.0, -1.0])).unwrap(),
            14.0
        );
    }

    #[test]
    fn rearrangement_orthogonal_takes_larger_magnitude() {
        // u·v = 0; u↑·v↑ = 1·(-1) + 1·1 = 0 and u↑·v↓ = 0 for equal u components,
        // so use a non-degenerate pair instead: u = (1, 2), v = (2, -1)
        let u = dv(&[1.0, 2.0]);
        let v = dv(&[2.0, -1.0]);
        assert_eq!(crate::metrics::dot(&u, &v).unwrap(), 0.0);
        // u↑·v↑ = 1·(-1) + 2·2 = 3; u↑·v↓ = 1·2 + 2·(-1) = 0
        assert_eq!(rearrangement_bound(&u, &v).unwrap(), 3.0);
        assert_eq!(brute_force_rearrangement(&u, &v).unwrap(), 3.0);
    }

    #[test]
    fn chain_examples() {
        let c = bound_chain(&dv(&[1.0, 0.0]), &dv(&[1.0, 0.0])).unwrap();
        assert_eq!(c.as_array(), [1.0, 1.0, 1.0, 1.0]);

        let c = bound_chain(&dv(&[1.0, 2.0]), &dv(&[2.0, 4.0])).unwrap();
        assert_eq!(c.abs_dot, 10.0);
        assert_eq!(c.rearrangement, 10.0);
        assert!((c.cauchy_schwarz - 10.0).abs() < 1e-12);
        assert_eq!(c.arithmetic_quadratic, 12.5);

        let c = bound_chain(&dv(&[1.0, 2.0]), &dv(&[2.0, 1.0])).unwrap();
        assert_eq!(c.abs_dot, 4.0);
        assert_eq!(c.rearrangement, 5.0);
        assert!((c.cauchy_schwarz - 5.0).abs() < 1e-12);
        assert_eq!(c.arithmetic_quadratic, 5.0);
        assert_eq!(c.first_violation(1e-9), None);
    }

    #[test]
    fn first_violation_reports_link() {
        let c = BoundChain {
            abs_dot: 1.0,
            rearrangement: 2.0,
            cauchy_schwarz: 1.5,
            arithmetic_quadratic: 3.0,
        };
        assert_eq!(c.first_violation(1e-9), Some(1));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_rearrangement(&dv(&[1.0, 2.0]), &dv(&[2.0, 1.0])).unwrap(), 5.0);
        assert_eq!(brute_force_rearrangement(&dv(&[5.0]), &dv(&[5.0])).unwrap(), 25.0);
        let u = dv(&[0.3, -1.1, 2.0, 0.7, -0.2]);
        let v = dv(&[1.4, 0.2, 0.9, -0.5, 1.0]);
        assert!(crate::metrics::dot(&u, &v).unwrap() > 0.0);
        let bf = brute_force_rearrangement(&u, &v).unwrap();
        assert!((bf - rearrangement_bound(&u, &v).unwrap()).abs() < 1e-9);
    }

    #[test]
    fn brute_force_visits_every_permutation() {
        // distinct powers of ten make every permutation's dot product distinct
        let u = dv(&[1.0, 10.0, 100.0, 1000.0]);
        let v = dv(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(brute_force_rearrangement(&u, &v).unwrap(), 1.0 + 20.0 + 300.0 + 4000.0);
    }

    #[test]
    fn brute_force_caps_dimension() {
        let u = dv(&[1.0; 9]);
        assert_eq!(
            brute_force_rearrangement(&u, &u),
            Err(SimilarityError::DimensionTooLarge { dim: 9, max: 8 })
        );
    }

    #[test]
    fn dimension_mismatch() {
        assert!(bound_chain(&dv(&[1.0]), &dv(&[1.0, 2.0])).is_err());
        assert!(rearrangement_bound(&dv(&[1.0]), &dv(&[1.0, 2.0])).is_err());
    }
}
