//! Agent state, double-integrator dynamics, the outer→inner loop output
//! mapping, formation shape vectors, reference trajectory, and tracking
//! errors.

use crate::error::{CoreError, Result};
use crate::linalg::Vec3;
use crate::scalar::Real;

/// Translational state of one agent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AgentState<T> {
    pub position: Vec3<T>,
    pub velocity: Vec3<T>,
}

impl<T: Real> AgentState<T> {
    pub fn new(position: Vec3<T>, velocity: Vec3<T>) -> Result<Self> {
        if !position.is_finite() || !velocity.is_finite() {
            return Err(CoreError::NonFinite("agent state"));
        }
        Ok(AgentState { position, velocity })
    }

    pub fn at_rest(position: Vec3<T>) -> Result<Self> {
        Self::new(position, Vec3::zero())
    }
}

/// The double-integrator vector field: ṗ = v, v̇ = u.
pub fn dynamics_field<T: Real>(state: &AgentState<T>, u: Vec3<T>) -> (Vec3<T>, Vec3<T>) {
    (state.velocity, u)
}

/// Advances one agent by `dt` under a constant acceleration, integrating the
/// linear field exactly: p += v·dt + u·dt²/2, v += u·dt.
pub fn step_dynamics<T: Real>(
    state: &AgentState<T>,
    u: Vec3<T>,
    dt: T,
) -> Result<AgentState<T>> {
    if !(dt > T::zero()) || !dt.is_finite() {
        return Err(CoreError::InvalidParam("dt must be positive and finite".into()));
    }
    if !u.is_finite() {
        return Err(CoreError::NonFinite("acceleration input"));
    }
    let half = T::lit(0.5);
    AgentState::new(
        state.position + state.velocity * dt + u * (half * dt * dt),
        state.velocity + u * dt,
    )
}

/// How the roll formula treats the horizontal acceleration components.
///
/// `Literal` keeps the squared components exactly as printed in the output
/// mapping; `ConsistentInversion` uses the unsquared components, which makes
/// the mapping an actual inverse of the thrust-direction composition. Both
/// are pure output mappings with no feedback into the simulation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AttitudeMode {
    #[default]
    Literal,
    ConsistentInversion,
}

/// Thrust and attitude references handed to the (abstracted) inner loop.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AttitudeReference<T> {
    pub thrust: T,
    pub roll: T,
    pub pitch: T,
    pub yaw: T,
    pub mass: T,
    pub gravity: T,
    /// Set when the roll arcsine argument had to be clamped to [−1, 1].
    pub clamped: bool,
}

/// Maps a commanded acceleration to thrust/roll/pitch references.
///
/// Requires u_z + g > 0 (non-inverted flight). The roll arcsine argument is
/// clamped to its domain with a flag rather than failing.
pub fn attitude_reference<T: Real>(
    u: Vec3<T>,
    yaw: T,
    mass: T,
    gravity: T,
    mode: AttitudeMode,
) -> Result<AttitudeReference<T>> {
    if !u.is_finite() || !yaw.is_finite() {
        return Err(CoreError::NonFinite("attitude input"));
    }
    if !(mass > T::zero()) || !(gravity > T::zero()) {
        return Err(CoreError::InvalidParam(
            "mass and gravity must be positive".into(),
        ));
    }
    let vertical = u.z + gravity;
    if vertical <= T::zero() {
        return Err(CoreError::UnsupportedAttitude {
            vertical: vertical.as_f64(),
        });
    }
    let thrust = mass * (u.x * u.x + u.y * u.y + vertical * vertical).sqrt();
    let (sx, sy) = match mode {
        AttitudeMode::Literal => (u.x * u.x, u.y * u.y),
        AttitudeMode::ConsistentInversion => (u.x, u.y),
    };
    let raw = mass * (sx * yaw.sin() - sy * yaw.cos()) / thrust;
    let clamped = raw.abs() > T::one();
    let roll = raw.min(T::one()).max(-T::one()).asin();
    let pitch = ((u.x * yaw.cos() + u.y * yaw.sin()) / vertical).atan();
    Ok(AttitudeReference {
        thrust,
        roll,
        pitch,
        yaw,
        mass,
        gravity,
        clamped,
    })
}

/// One agent's offset from the formation reference, with analytic
/// derivatives. Polynomial coefficients are ascending in t.
#[derive(Clone, Debug, PartialEq)]
pub enum OffsetProfile<T> {
    Constant(Vec3<T>),
    Polynomial { x: Vec<T>, y: Vec<T>, z: Vec<T> },
}

fn poly_eval<T: Real>(coeffs: &[T], t: T) -> T {
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, &c| acc * t + c)
}

fn poly_deriv_eval<T: Real>(coeffs: &[T], t: T, order: u32) -> T {
    if order == 0 {
        return poly_eval(coeffs, t);
    }
    let mut d: Vec<T> = coeffs.to_vec();
    for _ in 0..order {
        d = d
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * T::from_usize(k).unwrap())
            .collect();
    }
    poly_eval(&d, t)
}

impl<T: Real> OffsetProfile<T> {
    fn eval(&self, t: T, order: u32) -> Vec3<T> {
        match self {
            OffsetProfile::Constant(v) => {
                if order == 0 {
                    *v
                } else {
                    Vec3::zero()
                }
            }
            OffsetProfile::Polynomial { x, y, z } => Vec3::new(
                poly_deriv_eval(x, t, order),
                poly_deriv_eval(y, t, order),
                poly_deriv_eval(z, t, order),
            ),
        }
    }
}

/// Per-agent formation offsets f_p,i(t) with bounds on their first and
/// second derivatives.
#[derive(Clone, Debug, PartialEq)]
pub struct FormationSpec<T> {
    offsets: Vec<OffsetProfile<T>>,
    pub velocity_bound: T,
    pub acceleration_bound: T,
}

impl<T: Real> FormationSpec<T> {
    pub fn new(
        offsets: Vec<OffsetProfile<T>>,
        velocity_bound: T,
        acceleration_bound: T,
    ) -> Result<Self> {
        if offsets.is_empty() {
            return Err(CoreError::InvalidParam(
                "formation needs at least one agent offset".into(),
            ));
        }
        if !(velocity_bound > T::zero()) || !(acceleration_bound > T::zero()) {
            return Err(CoreError::InvalidParam(
                "formation derivative bounds must be positive".into(),
            ));
        }
        Ok(FormationSpec {
            offsets,
            velocity_bound,
            acceleration_bound,
        })
    }

    pub fn n_agents(&self) -> usize {
        self.offsets.len()
    }

    pub fn offsets(&self) -> &[OffsetProfile<T>] {
        &self.offsets
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.offsets.len() {
            return Err(CoreError::IndexOutOfRange {
                what: "agent",
                index: i,
                len: self.offsets.len(),
            });
        }
        Ok(())
    }

    pub fn offset(&self, i: usize, t: T) -> Result<Vec3<T>> {
        self.check_index(i)?;
        Ok(self.offsets[i].eval(t, 0))
    }

    pub fn offset_velocity(&self, i: usize, t: T) -> Result<Vec3<T>> {
        self.check_index(i)?;
        Ok(self.offsets[i].eval(t, 1))
    }

    pub fn offset_acceleration(&self, i: usize, t: T) -> Result<Vec3<T>> {
        self.check_index(i)?;
        Ok(self.offsets[i].eval(t, 2))
    }

    /// Checks the derivative bounds on a 1 kHz sample grid over [0, t_end].
    pub fn validate_bounds(&self, t_end: T) -> Result<()> {
        let dt = T::lit(1e-3);
        let steps = (t_end / dt).ceil().to_usize().unwrap_or(0).max(1);
        for i in 0..self.offsets.len() {
            for k in 0..=steps {
                let t = T::from_usize(k).unwrap() * dt;
                let t = t.min(t_end);
                if self.offsets[i].eval(t, 1).norm() >= self.velocity_bound {
                    return Err(CoreError::InvalidParam(format!(
                        "formation offset {i} violates the velocity bound at t = {}",
                        t.as_f64()
                    )));
                }
                if self.offsets[i].eval(t, 2).norm() >= self.acceleration_bound {
                    return Err(CoreError::InvalidParam(format!(
                        "formation offset {i} violates the acceleration bound at t = {}",
                        t.as_f64()
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Sampled reference at one instant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrajectorySample<T> {
    pub position: Vec3<T>,
    pub velocity: Vec3<T>,
    /// Set when t fell outside the waypoint horizon and the reference was
    /// held at the nearest endpoint with zero velocity.
    pub clamped: bool,
}

/// Waypoint-based reference: piecewise-constant velocity between strictly
/// increasing knots, continuous at the knots.
#[derive(Clone, Debug, PartialEq)]
pub struct ReferenceTrajectory<T> {
    waypoints: Vec<(T, Vec3<T>)>,
}

impl<T: Real> ReferenceTrajectory<T> {
    pub fn new(waypoints: Vec<(T, Vec3<T>)>) -> Result<Self> {
        if waypoints.is_empty() {
            return Err(CoreError::InvalidParam(
                "trajectory needs at least one waypoint".into(),
            ));
        }
        for (t, p) in &waypoints {
            if !t.is_finite() || !p.is_finite() {
                return Err(CoreError::NonFinite("waypoint"));
            }
        }
        for w in waypoints.windows(2) {
            if w[1].0 <= w[0].0 {
                return Err(CoreError::InvalidParam(
                    "waypoint times must be strictly increasing".into(),
                ));
            }
        }
        Ok(ReferenceTrajectory { waypoints })
    }

    pub fn waypoints(&self) -> &[(T, Vec3<T>)] {
        &self.waypoints
    }

    pub fn start_time(&self) -> T {
        self.waypoints[0].0
    }

    pub fn end_time(&self) -> T {
        self.waypoints.last().expect("non-empty").0
    }

    /// Constant velocity of the segment starting at waypoint `k`.
    pub fn segment_velocity(&self, k: usize) -> Result<Vec3<T>> {
        if k + 1 >= self.waypoints.len() {
            return Err(CoreError::IndexOutOfRange {
                what: "segment",
                index: k,
                len: self.waypoints.len().saturating_sub(1),
            });
        }
        let (t0, p0) = self.waypoints[k];
        let (t1, p1) = self.waypoints[k + 1];
        Ok((p1 - p0) * (T::one() / (t1 - t0)))
    }

    /// Reference position and velocity at time `t`. Outside the horizon the
    /// position clamps to the nearest endpoint with zero velocity and the
    /// sample is flagged.
    pub fn sample(&self, t: T) -> TrajectorySample<T> {
        let first = self.waypoints[0];
        let last = *self.waypoints.last().expect("non-empty");
        if t < first.0 {
            return TrajectorySample {
                position: first.1,
                velocity: Vec3::zero(),
                clamped: true,
            };
        }
        if t > last.0 {
            return TrajectorySample {
                position: last.1,
                velocity: Vec3::zero(),
                clamped: true,
            };
        }
        // Find the segment with t0 <= t <= t1.
        for k in 0..self.waypoints.len() - 1 {
            let (t0, p0) = self.waypoints[k];
            let (t1, _) = self.waypoints[k + 1];
            if t <= t1 {
                let v = self.segment_velocity(k).expect("valid segment");
                return TrajectorySample {
                    position: p0 + v * (t - t0),
                    velocity: v,
                    clamped: false,
                };
            }
        }
        TrajectorySample {
            position: last.1,
            velocity: Vec3::zero(),
            clamped: false,
        }
    }
}

/// Position and velocity tracking errors of one agent at time `t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrackingErrors<T> {
    pub e_p: Vec3<T>,
    pub e_v: Vec3<T>,
    pub clamped: bool,
}

/// e_p = p − f_p,i(t) − r(t), e_v = v − f_v,i(t) − v₀(t).
pub fn tracking_errors<T: Real>(
    state: &AgentState<T>,
    formation: &FormationSpec<T>,
    trajectory: &ReferenceTrajectory<T>,
    i: usize,
    t: T,
) -> Result<TrackingErrors<T>> {
    let sample = trajectory.sample(t);
    let f_p = formation.offset(i, t)?;
    let f_v = formation.offset_velocity(i, t)?;
    Ok(TrackingErrors {
        e_p: state.position - f_p - sample.position,
        e_v: state.velocity - f_v - sample.velocity,
        clamped: sample.clamped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn field_returns_velocity_and_input() {
        let s = AgentState::new(Vec3::new(1.0, 2.0, 3.0), Vec3::new(-1.0, 0.5, 0.0)).unwrap();
        let u = Vec3::new(0.1, 0.2, 0.3);
        assert_eq!(dynamics_field(&s, u), (s.velocity, u));
    }

    #[test]
    fn free_motion_advances_linearly() {
        let s = AgentState::new(Vec3::zero(), Vec3::new(2.0, 0.0, -1.0)).unwrap();
        let next = step_dynamics(&s, Vec3::zero(), 0.25).unwrap();
        assert_eq!(next.velocity, s.velocity);
        assert_eq!(next.position, Vec3::new(0.5, 0.0, -0.25));
    }

    #[test]
    fn constant_input_integrates_exactly() {
        let u = Vec3::new(0.0, 0.0, 2.0);
        let mut s = AgentState::at_rest(Vec3::zero()).unwrap();
        // dt a power of two keeps every arithmetic step exact.
        for _ in 0..8 {
            s = step_dynamics(&s, u, 0.125).unwrap();
        }
        assert_eq!(s.velocity, Vec3::new(0.0, 0.0, 2.0));
        assert_eq!(s.position, Vec3::new(0.0, 0.0, 1.0));
        assert!(step_dynamics(&s, u, 0.0).is_err());
        assert!(step_dynamics(&s, Vec3::new(f64::NAN, 0.0, 0.0), 0.1).is_err());
    }

    #[test]
    fn hover_attitude() {
        let out =
            attitude_reference(Vec3::zero(), 0.0, 0.033, 9.81, AttitudeMode::Literal).unwrap();
        assert_relative_eq!(out.thrust, 0.033 * 9.81, max_relative = 1e-14);
        assert_eq!(out.roll, 0.0);
        assert_eq!(out.pitch, 0.0);
        assert!(!out.clamped);
    }

    #[test]
    fn pure_vertical_acceleration() {
        let out = attitude_reference(
            Vec3::new(0.0, 0.0, 1.5),
            0.7,
            0.033,
            9.81,
            AttitudeMode::Literal,
        )
        .unwrap();
        assert_relative_eq!(out.thrust, 0.033 * (1.5 + 9.81), max_relative = 1e-14);
        assert_eq!(out.roll, 0.0);
        assert_eq!(out.pitch, 0.0);
    }

    #[test]
    fn forward_acceleration_at_zero_yaw() {
        let ux = 1.2;
        let out = attitude_reference(
            Vec3::new(ux, 0.0, 0.0),
            0.0,
            0.033,
            9.81,
            AttitudeMode::Literal,
        )
        .unwrap();
        assert_relative_eq!(out.pitch, (ux / 9.81).atan(), max_relative = 1e-14);
        assert_eq!(out.roll, 0.0);
        // Consistent-inversion mode also gives zero roll when u_y = 0.
        let alt = attitude_reference(
            Vec3::new(ux, 0.0, 0.0),
            0.0,
            0.033,
            9.81,
            AttitudeMode::ConsistentInversion,
        )
        .unwrap();
        assert_eq!(alt.roll, 0.0);
        assert_eq!(alt.pitch, out.pitch);
    }

    #[test]
    fn literal_and_consistent_modes_differ_on_lateral_input() {
        let u = Vec3::new(0.0, 1.0, 0.0);
        let lit = attitude_reference(u, 0.0, 1.0, 9.81, AttitudeMode::Literal).unwrap();
        let inv =
            attitude_reference(u, 0.0, 1.0, 9.81, AttitudeMode::ConsistentInversion).unwrap();
        // Literal squares u_y, so the sign of the roll flips between modes.
        assert!(lit.roll < 0.0);
        assert!(inv.roll < 0.0);
        let neg = attitude_reference(
            Vec3::new(0.0, -1.0, 0.0),
            0.0,
            1.0,
            9.81,
            AttitudeMode::Literal,
        )
        .unwrap();
        assert_eq!(neg.roll, lit.roll);
        let neg_inv = attitude_reference(
            Vec3::new(0.0, -1.0, 0.0),
            0.0,
            1.0,
            9.81,
            AttitudeMode::ConsistentInversion,
        )
        .unwrap();
        assert!(neg_inv.roll > 0.0);
    }

    #[test]
    fn arcsine_clamp_and_inverted_flight() {
        // Large lateral input at yaw = π/2 pushes the literal argument past 1.
        let out = attitude_reference(
            Vec3::new(10.0, 0.0, 0.0),
            std::f64::consts::FRAC_PI_2,
            1.0,
            9.81,
            AttitudeMode::Literal,
        )
        .unwrap();
        assert!(out.clamped);
        assert_relative_eq!(out.roll, std::f64::consts::FRAC_PI_2, max_relative = 1e-12);
        assert!(attitude_reference(
            Vec3::new(0.0, 0.0, -9.81),
            0.0,
            1.0,
            9.81,
            AttitudeMode::Literal
        )
        .is_err());
    }

    #[test]
    fn attitude_is_stable_under_tiny_perturbations() {
        let base =
            attitude_reference(Vec3::zero(), 0.0, 0.033, 9.81, AttitudeMode::Literal).unwrap();
        let pert = attitude_reference(
            Vec3::new(1e-9, -1e-9, 1e-9),
            0.0,
            0.033,
            9.81,
            AttitudeMode::Literal,
        )
        .unwrap();
        assert!((base.thrust - pert.thrust).abs() <= 1e-6);
        assert!((base.roll - pert.roll).abs() <= 1e-6);
        assert!((base.pitch - pert.pitch).abs() <= 1e-6);
    }

    fn square_formation() -> FormationSpec<f64> {
        FormationSpec::new(
            vec![
                OffsetProfile::Constant(Vec3::new(0.4, 0.45, 0.0)),
                OffsetProfile::Constant(Vec3::new(-0.4, 0.45, 0.0)),
            ],
            1.0,
            1.0,
        )
        .unwrap()
    }

    fn two_segment_trajectory() -> ReferenceTrajectory<f64> {
        ReferenceTrajectory::new(vec![
            (0.0, Vec3::zero()),
            (2.0, Vec3::zero()),
            (4.0, Vec3::new(0.8, 0.0, 0.0)),
        ])
        .unwrap()
    }

    #[test]
    fn trajectory_segments_and_clamping() {
        let r = two_segment_trajectory();
        let hold = r.sample(1.0);
        assert_eq!(hold.position, Vec3::zero());
        assert_eq!(hold.velocity, Vec3::zero());
        assert!(!hold.clamped);
        let moving = r.sample(3.0);
        assert_relative_eq!(moving.position.x, 0.4, max_relative = 1e-14);
        assert_relative_eq!(moving.velocity.x, 0.4, max_relative = 1e-14);
        let beyond = r.sample(5.0);
        assert_eq!(beyond.position, Vec3::new(0.8, 0.0, 0.0));
        assert_eq!(beyond.velocity, Vec3::zero());
        assert!(beyond.clamped);
        let before = r.sample(-1.0);
        assert!(before.clamped);
        assert!(ReferenceTrajectory::<f64>::new(vec![]).is_err());
        assert!(ReferenceTrajectory::new(vec![
            (0.0, Vec3::<f64>::zero()),
            (0.0, Vec3::zero())
        ])
        .is_err());
    }

    #[test]
    fn integrating_segment_velocities_reproduces_waypoints() {
        let r = ReferenceTrajectory::new(vec![
            (0.0, Vec3::new(0.1, -0.2, 0.3)),
            (1.7, Vec3::new(1.0, 0.4, -0.6)),
            (2.9, Vec3::new(-0.5, 2.0, 0.0)),
        ])
        .unwrap();
        let mut p = r.waypoints()[0].1;
        for k in 0..r.waypoints().len() - 1 {
            let (t0, _) = r.waypoints()[k];
            let (t1, p1) = r.waypoints()[k + 1];
            p += r.segment_velocity(k).unwrap() * (t1 - t0);
            assert!((p - p1).norm() <= 1e-12);
        }
    }

    #[test]
    fn perfect_tracking_gives_zero_errors() {
        let f = square_formation();
        let r = two_segment_trajectory();
        let t = 3.0;
        let sample = r.sample(t);
        let s = AgentState::new(
            sample.position + f.offset(0, t).unwrap(),
            sample.velocity + f.offset_velocity(0, t).unwrap(),
        )
        .unwrap();
        let e = tracking_errors(&s, &f, &r, 0, t).unwrap();
        assert_eq!(e.e_p, Vec3::zero());
        assert_eq!(e.e_v, Vec3::zero());
        assert!(!e.clamped);
    }

    #[test]
    fn position_offset_shifts_only_position_error() {
        let f = square_formation();
        let r = two_segment_trajectory();
        let t = 1.0;
        let sample = r.sample(t);
        let s = AgentState::new(
            sample.position + f.offset(1, t).unwrap() + Vec3::new(0.1, 0.0, 0.0),
            sample.velocity,
        )
        .unwrap();
        let e = tracking_errors(&s, &f, &r, 1, t).unwrap();
        assert_relative_eq!(e.e_p.x, 0.1, max_relative = 1e-12);
        assert_eq!(e.e_p.y, 0.0);
        assert_eq!(e.e_v, Vec3::zero());
    }

    #[test]
    fn static_formation_hovering_reference_error_is_velocity() {
        let f = square_formation();
        let r = ReferenceTrajectory::new(vec![(0.0, Vec3::zero()), (10.0, Vec3::zero())])
            .unwrap();
        let v = Vec3::new(0.3, -0.1, 0.2);
        let s = AgentState::new(Vec3::new(1.0, 1.0, 1.0), v).unwrap();
        let e = tracking_errors(&s, &f, &r, 0, 4.0).unwrap();
        assert_eq!(e.e_v, v);
    }

    #[test]
    fn tracking_errors_are_affine_in_state() {
        let f = square_formation();
        let r = two_segment_trajectory();
        let t = 2.5;
        let s1 = AgentState::new(Vec3::new(1.0, 0.0, 2.0), Vec3::new(0.5, 0.5, 0.0)).unwrap();
        let s2 = AgentState::new(Vec3::new(-1.0, 3.0, 0.0), Vec3::new(0.0, -0.2, 0.1)).unwrap();
        let alpha = 0.3;
        let blend = AgentState::new(
            s1.position * alpha + s2.position * (1.0 - alpha),
            s1.velocity * alpha + s2.velocity * (1.0 - alpha),
        )
        .unwrap();
        let e1 = tracking_errors(&s1, &f, &r, 0, t).unwrap();
        let e2 = tracking_errors(&s2, &f, &r, 0, t).unwrap();
        let eb = tracking_errors(&blend, &f, &r, 0, t).unwrap();
        let expect_p = e1.e_p * alpha + e2.e_p * (1.0 - alpha);
        let expect_v = e1.e_v * alpha + e2.e_v * (1.0 - alpha);
        assert!((eb.e_p - expect_p).norm() <= 1e-12);
        assert!((eb.e_v - expect_v).norm() <= 1e-12);
    }

    #[test]
    fn polynomial_offsets_differentiate_analytically() {
        // x(t) = 1 + 2t + 3t²  →  x' = 2 + 6t, x'' = 6.
        let profile = OffsetProfile::Polynomial {
            x: vec![1.0, 2.0, 3.0],
            y: vec![0.0],
            z: vec![],
        };
        let f = FormationSpec::new(vec![profile], 100.0, 100.0).unwrap();
        assert_relative_eq!(f.offset(0, 2.0).unwrap().x, 17.0, max_relative = 1e-14);
        assert_relative_eq!(
            f.offset_velocity(0, 2.0).unwrap().x,
            14.0,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            f.offset_acceleration(0, 2.0).unwrap().x,
            6.0,
            max_relative = 1e-14
        );
        assert_eq!(f.offset(0, 2.0).unwrap().z, 0.0);
    }

    #[test]
    fn formation_bound_validation() {
        // Offset velocity grows linearly and crosses the bound within [0, 2].
        let fast = OffsetProfile::Polynomial {
            x: vec![0.0, 0.0, 1.0],
            y: vec![0.0],
            z: vec![0.0],
        };
        let f = FormationSpec::new(vec![fast], 1.0, 10.0).unwrap();
        assert!(f.validate_bounds(2.0).is_err());
        let slow = FormationSpec::new(
            vec![OffsetProfile::Constant(Vec3::<f64>::zero())],
            1.0,
            1.0,
        )
        .unwrap();
        assert!(slow.validate_bounds(30.0).is_ok());
    }
}
