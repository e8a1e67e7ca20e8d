use num_traits::Float;

use crate::error::{Error, Result};

/// Least-squares slope of `ln(edges)` against `ln(n)`.
pub fn exponent_fit<T: Float>(points: &[(T, T)]) -> Result<T> {
    if points.len() < 3 {
        return Err(Error::Degenerate(format!("exponent fit needs >= 3 points, got {}", points.len())));
    }
    if points.iter().any(|&(n, e)| n <= T::zero() || e <= T::zero()) {
        return Err(Error::Degenerate("exponent fit needs positive n and edge counts".into()));
    }
    let xs: Vec<T> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<T> = points.iter().map(|p| p.1.ln()).collect();
    let k = T::from(points.len()).expect("small count");
    let mx = xs.iter().fold(T::zero(), |a, &b| a + b) / k;
    let my = ys.iter().fold(T::zero(), |a, &b| a + b) / k;
    let mut sxx = T::zero();
    let mut sxy = T::zero();
    for (x, y) in xs.iter().zip(&ys) {
        sxx = sxx + (*x - mx) * (*x - mx);
        sxy = sxy + (*x - mx) * (*y - my);
    }
    if sxx <= T::zero() {
        return Err(Error::Degenerate("exponent fit needs distinct n".into()));
    }
    Ok(sxy / sxx)
}
