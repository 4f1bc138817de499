//! JSON run configuration and its mapping onto core types.
//!
//! Energies carry a `_mev` suffix, times `_ps`, areas `_pi`. Unknown keys
//! are rejected everywhere.

use std::path::Path;

use clap::ValueEnum;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;
use twocolor::conditions::{design_for_pulse, Branch, DesignResult};
use twocolor::pulses::Envelope;
use twocolor::scenarios::BINDING_ENERGY;
use twocolor::{PulseSpec, SystemConfig, SystemKind, TimeGrid, TwoColorDrive};

use crate::error::{CliError, CliResult};

/// Width of a designed second pulse when the configuration does not set one.
pub const DEFAULT_DESIGN_SIGMA_PS: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemName {
    TwoLevel,
    Biexciton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum BranchName {
    Positive,
    Negative,
}

impl From<BranchName> for Branch {
    fn from(b: BranchName) -> Self {
        match b {
            BranchName::Positive => Branch::Positive,
            BranchName::Negative => Branch::Negative,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub system: SystemName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub binding_energy_mev: Option<f64>,
    pub pulse1: PulseConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pulse2: Option<SecondPulse>,
    pub grid: GridConfig,
    #[serde(default)]
    pub outputs: Outputs,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "snake_case", deny_unknown_fields)]
pub enum PulseConfig {
    Gaussian {
        area_pi: f64,
        sigma_ps: f64,
        detuning_mev: f64,
        #[serde(default)]
        center_ps: f64,
        #[serde(default)]
        phase_rad: f64,
    },
    SmoothRectangular {
        amplitude_mev: f64,
        tau_ps: f64,
        kappa_per_ps: f64,
        detuning_mev: f64,
        #[serde(default)]
        center_ps: f64,
        #[serde(default)]
        phase_rad: f64,
    },
}

/// Second pulse: explicit, or designed from the first pulse.
///
/// The design forms are the strings `"design:positive"` / `"design:negative"`
/// or an object `{"design": "positive", "sigma_ps": 4.0, "area_pi": 9.0}`
/// where `sigma_ps` and `area_pi` are optional.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SecondPulse {
    Explicit(PulseConfig),
    Design(BranchName),
    DesignSpec(DesignSpec),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DesignSpec {
    pub design: BranchName,
    #[serde(default = "default_design_sigma")]
    pub sigma_ps: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub area_pi: Option<f64>,
}

fn default_design_sigma() -> f64 {
    DEFAULT_DESIGN_SIGMA_PS
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    pub t_start_ps: f64,
    pub t_end_ps: f64,
    /// Sampling and integration step in fs.
    #[serde(default = "default_dt_fs")]
    pub dt_fs: f64,
}

fn default_dt_fs() -> f64 {
    1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Outputs {
    pub trajectory: bool,
    pub dressed: bool,
    /// Adds the analytic second-pulse design for the first pulse to the summary.
    pub design: bool,
}

impl Default for Outputs {
    fn default() -> Self {
        Self { trajectory: true, dressed: true, design: true }
    }
}

impl Serialize for SecondPulse {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SecondPulse::Explicit(p) => p.serialize(s),
            SecondPulse::Design(BranchName::Positive) => s.serialize_str("design:positive"),
            SecondPulse::Design(BranchName::Negative) => s.serialize_str("design:negative"),
            SecondPulse::DesignSpec(d) => d.serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for SecondPulse {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let value = Value::deserialize(d)?;
        let field = |e: serde_json::Error| de::Error::custom(format!("pulse2: {e}"));
        match value {
            Value::String(s) => match s.as_str() {
                "design:positive" => Ok(SecondPulse::Design(BranchName::Positive)),
                "design:negative" => Ok(SecondPulse::Design(BranchName::Negative)),
                other => Err(de::Error::custom(format!(
                    "pulse2: expected \"design:positive\" or \"design:negative\", got {other:?}"
                ))),
            },
            Value::Object(ref map) if map.contains_key("design") => {
                DesignSpec::deserialize(value).map(SecondPulse::DesignSpec).map_err(field)
            }
            Value::Object(_) => PulseConfig::deserialize(value).map(SecondPulse::Explicit).map_err(field),
            _ => Err(de::Error::custom("pulse2: expected a pulse object or a design string")),
        }
    }
}

impl PulseConfig {
    pub fn to_spec(&self) -> twocolor::Result<PulseSpec> {
        let (envelope, detuning, center, phase) = match *self {
            PulseConfig::Gaussian { area_pi, sigma_ps, detuning_mev, center_ps, phase_rad } => {
                (Envelope::Gaussian { area_pi, sigma_ps }, detuning_mev, center_ps, phase_rad)
            }
            PulseConfig::SmoothRectangular {
                amplitude_mev,
                tau_ps,
                kappa_per_ps,
                detuning_mev,
                center_ps,
                phase_rad,
            } => (
                Envelope::SmoothRectangular { amplitude_mev, tau_ps, kappa_per_ps },
                detuning_mev,
                center_ps,
                phase_rad,
            ),
        };
        Ok(PulseSpec::new(envelope, detuning)?.with_center(center).with_phase(phase))
    }

    pub fn from_spec(p: &PulseSpec) -> Self {
        let (detuning_mev, center_ps, phase_rad) = (p.detuning(), p.center(), p.phase());
        match *p.envelope_shape() {
            Envelope::Gaussian { area_pi, sigma_ps } => {
                PulseConfig::Gaussian { area_pi, sigma_ps, detuning_mev, center_ps, phase_rad }
            }
            Envelope::SmoothRectangular { amplitude_mev, tau_ps, kappa_per_ps } => PulseConfig::SmoothRectangular {
                amplitude_mev,
                tau_ps,
                kappa_per_ps,
                detuning_mev,
                center_ps,
                phase_rad,
            },
        }
    }
}

/// A configuration mapped onto core types.
#[derive(Debug, Clone)]
pub struct Resolved {
    pub config: SystemConfig,
    /// Design used for the second pulse, with `area2` set to the area applied.
    pub design: Option<DesignResult>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Validation(format!("invalid configuration: {e}")))
    }

    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
        Self::from_json(&text).map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("configuration serializes")
    }

    /// Explicit configuration describing `cfg`.
    pub fn from_system(cfg: &SystemConfig) -> Self {
        let (system, binding_energy_mev) = match cfg.kind {
            SystemKind::TwoLevel => (SystemName::TwoLevel, None),
            SystemKind::Biexciton { binding_energy_mev } => (SystemName::Biexciton, Some(binding_energy_mev)),
        };
        RunConfig {
            system,
            binding_energy_mev,
            pulse1: PulseConfig::from_spec(cfg.drive.pulse1()),
            pulse2: cfg.drive.pulse2().map(|p| SecondPulse::Explicit(PulseConfig::from_spec(p))),
            grid: GridConfig {
                t_start_ps: cfg.grid.t_start(),
                t_end_ps: cfg.grid.t_end(),
                dt_fs: cfg.grid.dt() * 1000.0,
            },
            outputs: Outputs::default(),
        }
    }

    pub fn resolve(&self) -> CliResult<Resolved> {
        let kind = match (self.system, self.binding_energy_mev) {
            (SystemName::TwoLevel, None) => SystemKind::TwoLevel,
            (SystemName::TwoLevel, Some(_)) => {
                return Err(CliError::Validation("binding_energy_mev applies only to the biexciton system".into()))
            }
            (SystemName::Biexciton, b) => SystemKind::Biexciton { binding_energy_mev: b.unwrap_or(BINDING_ENERGY) },
        };
        let pulse1 = self.pulse1.to_spec().map_err(|e| CliError::Validation(format!("pulse1: {e}")))?;
        let (pulse2, design) = match self.pulse2 {
            None => (None, None),
            Some(SecondPulse::Explicit(p)) => {
                (Some(p.to_spec().map_err(|e| CliError::Validation(format!("pulse2: {e}")))?), None)
            }
            Some(SecondPulse::Design(branch)) => {
                let spec = DesignSpec { design: branch, sigma_ps: DEFAULT_DESIGN_SIGMA_PS, area_pi: None };
                let (p, d) = designed_pulse(&pulse1, kind, &spec)?;
                (Some(p), Some(d))
            }
            Some(SecondPulse::DesignSpec(spec)) => {
                let (p, d) = designed_pulse(&pulse1, kind, &spec)?;
                (Some(p), Some(d))
            }
        };
        let grid = TimeGrid::new(self.grid.t_start_ps, self.grid.t_end_ps, self.grid.dt_fs / 1000.0)
            .map_err(|e| CliError::Validation(format!("grid: {e}")))?;
        let drive = TwoColorDrive::new(pulse1, pulse2).map_err(|e| CliError::Validation(format!("pulse2: {e}")))?;
        let config = SystemConfig::new(kind, drive, grid).map_err(|e| CliError::Validation(e.to_string()))?;
        Ok(Resolved { config, design })
    }
}

fn designed_pulse(pulse1: &PulseSpec, kind: SystemKind, spec: &DesignSpec) -> CliResult<(PulseSpec, DesignResult)> {
    if kind != SystemKind::TwoLevel {
        return Err(CliError::Validation("pulse2: design rules apply only to the two-level system".into()));
    }
    let mut design =
        design_for_pulse(pulse1, spec.design.into()).map_err(|e| CliError::Validation(format!("pulse2: {e}")))?;
    let area = spec.area_pi.or(design.area2).ok_or_else(|| {
        CliError::Validation("pulse2: a Gaussian first pulse has no area rule; set area_pi in the design object".into())
    })?;
    design.area2 = Some(area);
    let pulse = PulseSpec::gaussian(area, spec.sigma_ps, design.delta2)
        .map_err(|e| CliError::Validation(format!("pulse2: {e}")))?
        .with_center(pulse1.center());
    Ok((pulse, design))
}

#[cfg(test)]
mod tests {
    use super::*;
    use twocolor::scenarios::all;

    const FIG2_DESIGN: &str = r#"{
        "system": "two_level",
        "pulse1": {"shape": "smooth_rectangular", "amplitude_mev": 4.0, "tau_ps": 40.0,
                   "kappa_per_ps": 1.0, "detuning_mev": -5.0},
        "pulse2": "design:positive",
        "grid": {"t_start_ps": -40.0, "t_end_ps": 40.0, "dt_fs": 1.0}
    }"#;

    #[test]
    fn presets_round_trip_through_json() {
        for sc in all() {
            let rc = RunConfig::from_system(&sc.config);
            let back = RunConfig::from_json(&rc.to_json()).unwrap();
            assert_eq!(back, rc, "{}", sc.name);
            assert_eq!(back.resolve().unwrap().config, sc.config, "{}", sc.name);
        }
    }

    #[test]
    fn design_forms_round_trip() {
        let rc = RunConfig::from_json(FIG2_DESIGN).unwrap();
        assert_eq!(rc.pulse2, Some(SecondPulse::Design(BranchName::Positive)));
        assert_eq!(RunConfig::from_json(&rc.to_json()).unwrap(), rc);

        let obj = FIG2_DESIGN.replace("\"design:positive\"", r#"{"design": "negative", "sigma_ps": 3.0}"#);
        let rc = RunConfig::from_json(&obj).unwrap();
        let expected = DesignSpec { design: BranchName::Negative, sigma_ps: 3.0, area_pi: None };
        assert_eq!(rc.pulse2, Some(SecondPulse::DesignSpec(expected)));
        assert_eq!(RunConfig::from_json(&rc.to_json()).unwrap(), rc);
    }

    #[test]
    fn design_resolves_to_analytic_pulse() {
        let r = RunConfig::from_json(FIG2_DESIGN).unwrap().resolve().unwrap();
        let d = r.design.unwrap();
        assert!((d.delta2 + 11.403124).abs() < 1e-6);
        let p2 = r.config.drive.pulse2().unwrap();
        assert_eq!(p2.detuning(), d.delta2);
        match *p2.envelope_shape() {
            Envelope::Gaussian { area_pi, sigma_ps } => {
                assert_eq!(sigma_ps, DEFAULT_DESIGN_SIGMA_PS);
                assert!((area_pi - 9.127).abs() < 1e-3);
            }
            other => panic!("unexpected envelope {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_keys() {
        for (from, to) in [
            ("\"system\"", "\"colour\": 1, \"system\""),
            ("\"tau_ps\"", "\"width_ps\": 1.0, \"tau_ps\""),
            ("\"dt_fs\"", "\"steps\": 3, \"dt_fs\""),
        ] {
            let err = RunConfig::from_json(&FIG2_DESIGN.replacen(from, to, 1)).unwrap_err();
            assert!(err.to_string().contains("unknown field"), "{err}");
        }
    }

    #[test]
    fn reports_line_of_bad_field() {
        let bad = FIG2_DESIGN.replace("\"amplitude_mev\": 4.0", "\"amplitude_mev\": \"four\"");
        let msg = RunConfig::from_json(&bad).unwrap_err().to_string();
        assert!(msg.contains("line"), "{msg}");
    }

    #[test]
    fn rejects_bad_design_requests() {
        let bad_sign = FIG2_DESIGN.replace("design:positive", "design:sideways");
        assert!(RunConfig::from_json(&bad_sign).is_err());

        let biex = FIG2_DESIGN.replace("two_level", "biexciton");
        let err = RunConfig::from_json(&biex).unwrap().resolve().unwrap_err();
        assert!(err.to_string().contains("two-level"), "{err}");

        let gauss = r#"{
            "system": "two_level",
            "pulse1": {"shape": "gaussian", "area_pi": 22.65, "sigma_ps": 2.4, "detuning_mev": -8.0},
            "pulse2": "design:positive",
            "grid": {"t_start_ps": -18.0, "t_end_ps": 18.0}
        }"#;
        let err = RunConfig::from_json(gauss).unwrap().resolve().unwrap_err();
        assert!(err.to_string().contains("area_pi"), "{err}");
        let with_area =
            gauss.replace("\"design:positive\"", r#"{"design": "positive", "area_pi": 19.29, "sigma_ps": 3.04}"#);
        let r = RunConfig::from_json(&with_area).unwrap().resolve().unwrap();
        assert!((r.design.unwrap().delta2 + 19.163).abs() < 5e-4);
    }

    #[test]
    fn rejects_invalid_values() {
        let neg_sigma = FIG2_DESIGN.replace("\"tau_ps\": 40.0", "\"tau_ps\": -40.0");
        assert!(RunConfig::from_json(&neg_sigma).unwrap().resolve().is_err());
        let odd_grid = FIG2_DESIGN.replace("\"dt_fs\": 1.0", "\"dt_fs\": 0.7");
        assert!(RunConfig::from_json(&odd_grid).unwrap().resolve().is_err());
        let binding = FIG2_DESIGN
            .replace("\"system\": \"two_level\",", "\"system\": \"two_level\", \"binding_energy_mev\": 4.0,");
        assert!(RunConfig::from_json(&binding).unwrap().resolve().is_err());
    }
}
