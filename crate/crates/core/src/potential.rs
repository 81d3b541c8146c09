//! Finite cut-off pairwise potential and the repulsion it induces.
//!
//! The potential Φ(d) = f(d) + λ·g(d) combines a bounded repulsive core f
//! that is active only inside the risky radius with a smooth quintic step g
//! that rises across the cautionary band and is identically 1 beyond it.
//! Beyond the cautionary radius Φ is exactly flat, so interactions are
//! strictly local: the induced acceleration is exactly zero there.
//!
//! Shape summary (uniform radii d_r < d_c):
//!   Φ(0) = μ (global maximum), Φ(d_r) = 0, Φ(d ≥ d_c) = λ,
//!   Φ' < 0 on (0, d_r), Φ' > 0 on (d_r, d_c), Φ' = 0 on [d_c, ∞).

use crate::error::{CoreError, Result};
use crate::linalg::Vec3;
use crate::scalar::Real;

/// Distance below which two positions are treated as coincident and the
/// deterministic fallback direction is used.
pub fn degenerate_distance_guard<T: Real>() -> T {
    T::lit(1e-6)
}

/// Zone radii and shape constants of one pairwise potential.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PotentialParams<T> {
    d_risky: T,
    d_cautionary: T,
    lambda: T,
    mu: T,
}

impl<T: Real> PotentialParams<T> {
    /// Requires 0 < d_risky < d_cautionary and 0 < lambda < mu.
    pub fn new(d_risky: T, d_cautionary: T, lambda: T, mu: T) -> Result<Self> {
        for (name, v) in [
            ("d_risky", d_risky),
            ("d_cautionary", d_cautionary),
            ("lambda", lambda),
            ("mu", mu),
        ] {
            if !v.is_finite() || v <= T::zero() {
                return Err(CoreError::InvalidParam(format!(
                    "{name} must be finite and positive"
                )));
            }
        }
        if d_risky >= d_cautionary {
            return Err(CoreError::InvalidParam(
                "d_risky must be strictly less than d_cautionary".into(),
            ));
        }
        if lambda >= mu {
            return Err(CoreError::InvalidParam(
                "lambda must be strictly less than mu".into(),
            ));
        }
        Ok(PotentialParams {
            d_risky,
            d_cautionary,
            lambda,
            mu,
        })
    }

    pub fn d_risky(&self) -> T {
        self.d_risky
    }

    pub fn d_cautionary(&self) -> T {
        self.d_cautionary
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn mu(&self) -> T {
        self.mu
    }
}

fn check_distance<T: Real>(d: T) -> Result<()> {
    if !d.is_finite() {
        return Err(CoreError::NonFinite("distance"));
    }
    if d < T::zero() {
        return Err(CoreError::NegativeDistance(d.as_f64()));
    }
    Ok(())
}

/// Repulsive core: (d_r − d)³ / (d + d_r³/μ) inside the risky radius, else 0.
///
/// Takes the value μ at contact, falls to 0 at d_r, and stays within [0, μ].
pub fn f_core<T: Real>(d: T, p: &PotentialParams<T>) -> Result<T> {
    check_distance(d)?;
    if d > p.d_risky {
        return Ok(T::zero());
    }
    let dr = p.d_risky;
    let shift = dr.powi(3) / p.mu;
    let diff = dr - d;
    Ok(diff.powi(3) / (d + shift))
}

/// Quintic smooth step over [d_r, d_c]: 0 below, 1 above, 10s³ − 15s⁴ + 6s⁵
/// in between with s the normalized position in the band. C² everywhere.
pub fn smooth_step<T: Real>(d: T, p: &PotentialParams<T>) -> Result<T> {
    check_distance(d)?;
    if d <= p.d_risky {
        return Ok(T::zero());
    }
    if d >= p.d_cautionary {
        return Ok(T::one());
    }
    let s = (d - p.d_risky) / (p.d_cautionary - p.d_risky);
    Ok(s * s * s * (T::lit(10.0) + s * (T::lit(-15.0) + s * T::lit(6.0))))
}

/// Derivative of [`smooth_step`] with respect to distance:
/// 30s²(1−s)² / (d_c − d_r) strictly inside the band, 0 elsewhere.
pub fn smooth_step_deriv<T: Real>(d: T, p: &PotentialParams<T>) -> Result<T> {
    check_distance(d)?;
    if d <= p.d_risky || d >= p.d_cautionary {
        return Ok(T::zero());
    }
    let span = p.d_cautionary - p.d_risky;
    let s = (d - p.d_risky) / span;
    let w = s * (T::one() - s);
    Ok(T::lit(30.0) * w * w / span)
}

/// The finite cut-off potential Φ(d) = f(d) + λ·g(d).
pub fn phi<T: Real>(d: T, p: &PotentialParams<T>) -> Result<T> {
    Ok(f_core(d, p)? + p.lambda * smooth_step(d, p)?)
}

/// Radial derivative ∂Φ/∂d, piecewise closed form.
///
/// Continuous and bounded everywhere; strictly negative inside the risky
/// radius, strictly positive across the cautionary band, exactly zero from
/// the cautionary radius outward.
pub fn dphi_dd<T: Real>(d: T, p: &PotentialParams<T>) -> Result<T> {
    check_distance(d)?;
    let dr = p.d_risky;
    if d < dr {
        let shift = dr.powi(3) / p.mu;
        let diff = dr - d;
        let num = diff * diff * (T::two() * d + T::lit(3.0) * shift + dr);
        let den = d + shift;
        return Ok(-num / (den * den));
    }
    if d < p.d_cautionary {
        return Ok(p.lambda * smooth_step_deriv(d, p)?);
    }
    Ok(T::zero())
}

/// Acceleration exerted on the agent at `p_i` by an object at `p_j`:
/// the negative position-gradient −Φ'(‖p_i−p_j‖)·(p_i−p_j)/‖p_i−p_j‖.
///
/// Points away from the object inside the risky zone, gently toward it in
/// the cautionary band, and is exactly zero beyond the cut-off. Coincident
/// positions (inside the epsilon guard) fall back to a fixed +x direction
/// with the near-contact magnitude; the second return value flags that
/// degenerate case.
pub fn repulsion_vector<T: Real>(
    p_i: Vec3<T>,
    p_j: Vec3<T>,
    p: &PotentialParams<T>,
) -> (Vec3<T>, bool) {
    let diff = p_i - p_j;
    let d = diff.norm();
    let eps = degenerate_distance_guard::<T>();
    if d < eps {
        let magnitude = dphi_dd(eps, p).expect("positive distance").abs();
        return (Vec3::new(magnitude, T::zero(), T::zero()), true);
    }
    if d >= p.d_cautionary {
        return (Vec3::zero(), false);
    }
    let slope = dphi_dd(d, p).expect("non-negative distance");
    (diff * (-slope / d), false)
}
