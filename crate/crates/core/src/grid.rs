//! Equidistant 1D grids and coefficient profiles.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GridError {
    #[error("grid needs at least {min} points for this operator, got {n}")]
    TooFew { n: usize, min: usize },
    #[error("interval is empty or reversed: [{lo}, {hi}]")]
    BadInterval { lo: f64, hi: f64 },
    #[error("coefficient must be strictly positive, found {0}")]
    NonPositiveCoefficient(f64),
    #[error("coefficient profile has length {got}, grid has {want} points")]
    ProfileLength { got: usize, want: usize },
}

/// Equidistant grid on [x_lo, x_hi] with n points.
#[derive(Debug, Clone)]
pub struct Grid1D {
    pub n: usize,
    pub x_lo: f64,
    pub x_hi: f64,
    pub h: f64,
}

impl Grid1D {
    pub fn new(n: usize, x_lo: f64, x_hi: f64) -> Result<Self, GridError> {
        if n < 2 {
            return Err(GridError::TooFew { n, min: 2 });
        }
        if !(x_hi > x_lo) {
            return Err(GridError::BadInterval { lo: x_lo, hi: x_hi });
        }
        let h = (x_hi - x_lo) / (n - 1) as f64;
        Ok(Grid1D { n, x_lo, x_hi, h })
    }

    pub fn node(&self, i: usize) -> f64 {
        if i == self.n - 1 {
            self.x_hi
        } else {
            self.x_lo + i as f64 * self.h
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.node(i)).collect()
    }

    pub fn length(&self) -> f64 {
        self.x_hi - self.x_lo
    }
}

/// Wave-speed-squared coefficient b(x) > 0.
#[derive(Debug, Clone)]
pub enum CoefficientProfile {
    Constant(f64),
    Sampled(Vec<f64>),
}

impl CoefficientProfile {
    pub fn sample(&self, grid: &Grid1D) -> Result<Vec<f64>, GridError> {
        match self {
            CoefficientProfile::Constant(b) => {
                if *b <= 0.0 {
                    return Err(GridError::NonPositiveCoefficient(*b));
                }
                Ok(vec![*b; grid.n])
            }
            CoefficientProfile::Sampled(vals) => {
                if vals.len() != grid.n {
                    return Err(GridError::ProfileLength {
                        got: vals.len(),
                        want: grid.n,
                    });
                }
                if let Some(&bad) = vals.iter().find(|v| **v <= 0.0) {
                    return Err(GridError::NonPositiveCoefficient(bad));
                }
                Ok(vals.clone())
            }
        }
    }

    pub fn from_fn(grid: &Grid1D, f: impl Fn(f64) -> f64) -> Self {
        CoefficientProfile::Sampled((0..grid.n).map(|i| f(grid.node(i))).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_hit_endpoints() {
        let g = Grid1D::new(11, -0.5, 2.0).unwrap();
        assert_eq!(g.node(0), -0.5);
        assert_eq!(g.node(10), 2.0);
        let nodes = g.nodes();
        for w in nodes.windows(2) {
            assert!(w[1] > w[0]);
        }
        assert!((g.h - 0.25).abs() < 1e-15);
    }

    #[test]
    fn profile_validation() {
        let g = Grid1D::new(5, 0.0, 1.0).unwrap();
        assert!(CoefficientProfile::Constant(-1.0).sample(&g).is_err());
        assert!(CoefficientProfile::Sampled(vec![1.0; 4]).sample(&g).is_err());
        assert!(CoefficientProfile::Sampled(vec![1.0, 2.0, 0.0, 1.0, 1.0])
            .sample(&g)
            .is_err());
        let b = CoefficientProfile::from_fn(&g, |x| 1.0 + x).sample(&g).unwrap();
        assert_eq!(b.len(), 5);
        assert!((b[4] - 2.0).abs() < 1e-15);
    }
}
