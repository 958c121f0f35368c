//! Air-to-ground propagation for the GBS→UAV and jammer→UAV links.
//!
//! Path loss is the sum of a terrestrial term evaluated at the point beneath
//! the UAV, an excess aerial term driven by the depression angle, and a
//! log-normal shadowing term whose spread depends on that angle.
//! Angles are in degrees, distances in meters, losses in dB.

use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

/// Shadowing offset of the alternate parameter reading.
pub const ALT_SHADOW_OFFSET_DB: f64 = 5.86;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ChannelError {
    #[error("zero horizontal distance between UAV and {0:?}")]
    DegenerateGeometry(GroundNode),
    #[error("shadowing spread {sigma} dB is not positive at {theta} degrees")]
    NonPositiveShadowing { theta: f64, sigma: f64 },
    #[error("invalid channel parameters: {0}")]
    InvalidParams(String),
    #[error("invalid link budget: {0}")]
    InvalidBudget(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroundNode {
    Gbs,
    Jammer,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ChannelParams {
    /// Terrestrial path-loss exponent.
    pub alpha_pl: f64,
    pub excess_scale_db: f64,
    pub angle_scale_deg: f64,
    pub angle_offset_deg: f64,
    pub excess_offset_db: f64,
    /// Shadowing spread slope, dB per degree.
    pub shadow_slope: f64,
    pub shadow_offset_db: f64,
}

impl Default for ChannelParams {
    fn default() -> Self {
        Self {
            alpha_pl: 3.04,
            excess_scale_db: -23.29,
            angle_scale_deg: 4.14,
            angle_offset_deg: -3.61,
            excess_offset_db: 20.70,
            shadow_slope: -0.41,
            shadow_offset_db: 8.52,
        }
    }
}

impl ChannelParams {
    pub fn alternate_shadowing() -> Self {
        Self {
            shadow_offset_db: ALT_SHADOW_OFFSET_DB,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), ChannelError> {
        let fields = [
            self.alpha_pl,
            self.excess_scale_db,
            self.angle_scale_deg,
            self.angle_offset_deg,
            self.excess_offset_db,
            self.shadow_slope,
            self.shadow_offset_db,
        ];
        if fields.iter().any(|v| !v.is_finite()) {
            return Err(ChannelError::InvalidParams("non-finite value".into()));
        }
        if self.angle_scale_deg == 0.0 {
            return Err(ChannelError::InvalidParams("angle_scale_deg must be non-zero".into()));
        }
        Ok(())
    }

    /// Shadowing standard deviation in dB at depression angle `theta`.
    pub fn shadow_std(&self, theta: f64) -> f64 {
        self.shadow_slope * theta + self.shadow_offset_db
    }

    /// Checks the shadowing spread stays positive over every angle in `angles`.
    pub fn check_shadow_range(&self, angles: impl IntoIterator<Item = f64>) -> Result<(), ChannelError> {
        for theta in angles {
            let sigma = self.shadow_std(theta);
            if !(sigma > 0.0) {
                return Err(ChannelError::NonPositiveShadowing { theta, sigma });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geometry {
    pub uav_pos: [f64; 3],
    pub gbs_pos: [f64; 3],
    pub jammer_pos: [f64; 3],
}

impl Geometry {
    pub fn ground(&self, node: GroundNode) -> [f64; 3] {
        match node {
            GroundNode::Gbs => self.gbs_pos,
            GroundNode::Jammer => self.jammer_pos,
        }
    }

    pub fn horizontal_distance(&self, node: GroundNode) -> f64 {
        let g = self.ground(node);
        (self.uav_pos[0] - g[0]).hypot(self.uav_pos[1] - g[1])
    }

    pub fn validate(&self) -> Result<(), ChannelError> {
        for p in [self.uav_pos, self.gbs_pos, self.jammer_pos] {
            if p.iter().any(|v| !v.is_finite()) || p[2] < 0.0 {
                return Err(ChannelError::InvalidParams(format!(
                    "position {p:?} must be finite with z >= 0"
                )));
            }
        }
        if self.uav_pos[2] <= self.gbs_pos[2].max(self.jammer_pos[2]) {
            return Err(ChannelError::InvalidParams(
                "UAV altitude must exceed ground equipment height".into(),
            ));
        }
        Ok(())
    }
}

/// Transmit powers, receiver noise and the jammer-present indicator.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkBudget {
    pub p_tx_uav: f64,
    pub p_tx_jammer: f64,
    pub noise_power: f64,
    pub jammer_present: bool,
}

impl LinkBudget {
    /// Sets noise and jammer power so that, at the reference gains, the
    /// received SNR and jammer-to-signal ratio equal the requested values.
    pub fn calibrated(p_tx_uav: f64, snr_db: f64, jsr_db: f64, ref_gain_gu: f64, ref_gain_ju: f64) -> Self {
        let rx = p_tx_uav * ref_gain_gu;
        Self {
            p_tx_uav,
            p_tx_jammer: db_to_linear(jsr_db) * rx / ref_gain_ju,
            noise_power: rx / db_to_linear(snr_db),
            jammer_present: false,
        }
    }

    pub fn with_jammer(self, present: bool) -> Self {
        Self {
            jammer_present: present,
            ..self
        }
    }

    pub fn validate(&self) -> Result<(), ChannelError> {
        for (name, v) in [
            ("p_tx_uav", self.p_tx_uav),
            ("p_tx_jammer", self.p_tx_jammer),
            ("noise_power", self.noise_power),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ChannelError::InvalidBudget(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

/// Components of one link's path loss, all in dB.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathLoss {
    pub terrestrial_db: f64,
    pub excess_db: f64,
    pub shadowing_db: f64,
}

impl PathLoss {
    pub fn total_db(&self) -> f64 {
        self.terrestrial_db + self.excess_db + self.shadowing_db
    }

    /// Linear channel gain.
    pub fn gain(&self) -> f64 {
        db_to_linear(-self.total_db())
    }
}

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

pub fn depression_angle(geometry: &Geometry, node: GroundNode) -> Result<f64, ChannelError> {
    let d = geometry.horizontal_distance(node);
    if d == 0.0 {
        return Err(ChannelError::DegenerateGeometry(node));
    }
    let rise = geometry.uav_pos[2] - geometry.ground(node)[2];
    Ok((rise / d).atan().to_degrees())
}

/// Terrestrial path loss at horizontal distance `d`; distances under 1 m clamp to 1 m.
pub fn terrestrial_pathloss(d: f64, alpha_pl: f64) -> f64 {
    let d = if d < 1.0 {
        log::debug!("horizontal distance {d} m clamped to 1 m");
        1.0
    } else {
        d
    };
    10.0 * alpha_pl * d.log10()
}

pub fn excess_aerial_pathloss(theta: f64, params: &ChannelParams) -> f64 {
    let x = theta - params.angle_offset_deg;
    params.excess_scale_db * x * (-x / params.angle_scale_deg).exp() + params.excess_offset_db
}

pub fn shadowing_sample<R: Rng + ?Sized>(theta: f64, params: &ChannelParams, rng: &mut R) -> Result<f64, ChannelError> {
    let sigma = params.shadow_std(theta);
    if !(sigma > 0.0) {
        return Err(ChannelError::NonPositiveShadowing { theta, sigma });
    }
    let normal = Normal::new(0.0, sigma).expect("positive finite spread");
    Ok(normal.sample(rng))
}

/// Path loss with the shadowing term left at zero.
pub fn deterministic_pathloss(geometry: &Geometry, node: GroundNode, params: &ChannelParams) -> Result<PathLoss, ChannelError> {
    let theta = depression_angle(geometry, node)?;
    Ok(PathLoss {
        terrestrial_db: terrestrial_pathloss(geometry.horizontal_distance(node), params.alpha_pl),
        excess_db: excess_aerial_pathloss(theta, params),
        shadowing_db: 0.0,
    })
}

pub fn total_pathloss<R: Rng + ?Sized>(
    geometry: &Geometry,
    node: GroundNode,
    params: &ChannelParams,
    rng: &mut R,
) -> Result<PathLoss, ChannelError> {
    let theta = depression_angle(geometry, node)?;
    let mut pl = deterministic_pathloss(geometry, node, params)?;
    pl.shadowing_db = shadowing_sample(theta, params, rng)?;
    Ok(pl)
}

pub fn sinr(budget: &LinkBudget, h_gu: f64, h_ju: f64) -> f64 {
    let interference = if budget.jammer_present {
        budget.p_tx_jammer * h_ju
    } else {
        0.0
    };
    budget.p_tx_uav * h_gu / (interference + budget.noise_power)
}

/// Shadowing held fixed along the trajectory until the UAV has moved
/// `decorrelation_m` from where the current value was drawn.
/// A distance of zero redraws on every call.
#[derive(Debug, Clone)]
pub struct ShadowingTrack {
    decorrelation_m: f64,
    anchor: Option<([f64; 3], f64)>,
}

impl ShadowingTrack {
    pub fn new(decorrelation_m: f64) -> Self {
        Self {
            decorrelation_m,
            anchor: None,
        }
    }

    pub fn sample<R: Rng + ?Sized>(
        &mut self,
        uav_pos: [f64; 3],
        theta: f64,
        params: &ChannelParams,
        rng: &mut R,
    ) -> Result<f64, ChannelError> {
        if let Some((at, value)) = self.anchor {
            let moved = ((uav_pos[0] - at[0]).powi(2) + (uav_pos[1] - at[1]).powi(2) + (uav_pos[2] - at[2]).powi(2)).sqrt();
            if self.decorrelation_m > 0.0 && moved < self.decorrelation_m {
                return Ok(value);
            }
        }
        let value = shadowing_sample(theta, params, rng)?;
        self.anchor = Some((uav_pos, value));
        Ok(value)
    }
}
