//! Sweep configuration and CSV emission.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use rindler_tangle::fock::{make_ghz_state, make_w_state, parse_custom_state, PureState};
use rindler_tangle::measures::full_report;
use rindler_tangle::rindler::{party_accelerations, uniform_acceleration, RindlerParameter};

pub const CSV_HEADER: &str = "r,r_a,N_A,N_B,N_C,N_AB,N_AC,N_BC,pi_A,pi_B,pi_C,pi_tangle";

#[derive(Debug)]
pub enum CliError {
    /// Invalid configuration; maps to exit code 2.
    Config(String),
    /// I/O failure; maps to exit code 3.
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "invalid configuration: {msg}"),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Grid {
    pub fn validate(&self, name: &str) -> Result<(), CliError> {
        if !(0.0 <= self.min && self.min <= self.max && self.max <= FRAC_PI_4) {
            return Err(CliError::Config(format!(
                "{name} grid must satisfy 0 <= min <= max <= pi/4, got [{}, {}]",
                self.min, self.max
            )));
        }
        if self.steps < 1 {
            return Err(CliError::Config(format!("{name} grid needs at least 1 step")));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<RindlerParameter> {
        if self.steps == 1 {
            return vec![RindlerParameter::new(self.min).unwrap()];
        }
        (0..self.steps)
            .map(|i| {
                let t = i as f64 / (self.steps - 1) as f64;
                let r = (self.min + t * (self.max - self.min)).min(FRAC_PI_4);
                RindlerParameter::new(r).unwrap()
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Scenario {
    W,
    Ghz,
    Custom(PathBuf),
}

impl Scenario {
    /// Accepts `w`, `ghz`, or `custom:<path>`.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "w" => Ok(Scenario::W),
            "ghz" => Ok(Scenario::Ghz),
            _ => match s.strip_prefix("custom:") {
                Some(path) if !path.is_empty() => Ok(Scenario::Custom(PathBuf::from(path))),
                _ => Err(CliError::Config(format!(
                    "unknown state `{s}` (expected w, ghz, or custom:<path>)"
                ))),
            },
        }
    }

    pub fn label(&self) -> String {
        match self {
            Scenario::W => "w".into(),
            Scenario::Ghz => "ghz".into(),
            Scenario::Custom(path) => format!("custom:{}", path.display()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub scenario: Scenario,
    pub r_grid: Grid,
    /// Independent grid for Alice; GHZ and custom scenarios only. When
    /// absent those scenarios hold r_a fixed at pi/4.
    pub ra_grid: Option<Grid>,
    /// Decimal digits in the CSV output.
    pub digits: usize,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        self.r_grid.validate("r")?;
        if let Some(g) = &self.ra_grid {
            g.validate("r_a")?;
            if self.scenario == Scenario::W {
                return Err(CliError::Config(
                    "the W scenario uses one shared parameter; r_a flags apply to ghz/custom only"
                        .into(),
                ));
            }
        }
        Ok(())
    }
}

pub fn load_state(scenario: &Scenario) -> Result<PureState, CliError> {
    match scenario {
        Scenario::W => Ok(make_w_state()),
        Scenario::Ghz => Ok(make_ghz_state()),
        Scenario::Custom(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let (state, renormalized) =
                parse_custom_state(&text).map_err(|e| CliError::Config(e.to_string()))?;
            if renormalized {
                eprintln!("note: custom state renormalized to unit norm");
            }
            Ok(state)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub rows: usize,
}

/// Evaluate the configured grid and write one CSV row per point, row-major
/// with r_a outer and r inner. Output is deterministic for a fixed config.
pub fn run_sweep(cfg: &SweepConfig, out: &mut dyn Write) -> Result<SweepSummary, CliError> {
    cfg.validate()?;
    let state = load_state(&cfg.scenario)?;
    let d = cfg.digits;

    writeln!(
        out,
        "# scenario={} r_min={:.10} r_max={:.10} r_steps={}",
        cfg.scenario.label(),
        cfg.r_grid.min,
        cfg.r_grid.max,
        cfg.r_grid.steps
    )?;
    let ra_points: Vec<Option<RindlerParameter>> = match (&cfg.scenario, &cfg.ra_grid) {
        (Scenario::W, _) => vec![None],
        (_, Some(g)) => {
            writeln!(
                out,
                "# ra_min={:.10} ra_max={:.10} ra_steps={}",
                g.min, g.max, g.steps
            )?;
            g.points().into_iter().map(Some).collect()
        }
        (_, None) => {
            writeln!(out, "# r_a fixed at {FRAC_PI_4:.10} (pi/4)")?;
            vec![Some(RindlerParameter::MAX)]
        }
    };
    writeln!(out, "{CSV_HEADER}")?;

    let mut rows = 0;
    for ra in &ra_points {
        for r in cfg.r_grid.points() {
            let (params, ra_col) = match ra {
                // Shared parameter: all three observers at r.
                None => (uniform_acceleration(r), r),
                // Alice at r_a, Bob and Charlie at r.
                Some(ra) => (party_accelerations(*ra, r, r), *ra),
            };
            let rep = full_report(&state, &params)
                .map_err(|e| CliError::Config(e.to_string()))?;
            writeln!(
                out,
                "{:.d$},{:.d$},{:.d$},{:.d$},{:.d$},{:.d$},{:.d$},{:.d$},{:.d$},{:.d$},{:.d$},{:.d$}",
                r.value(),
                ra_col.value(),
                rep.one_tangles[0],
                rep.one_tangles[1],
                rep.one_tangles[2],
                rep.two_tangles[0],
                rep.two_tangles[1],
                rep.two_tangles[2],
                rep.residuals[0],
                rep.residuals[1],
                rep.residuals[2],
                rep.pi_tangle,
            )?;
            rows += 1;
        }
    }
    Ok(SweepSummary { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scenario_parsing() {
        assert_eq!(Scenario::parse("w").unwrap(), Scenario::W);
        assert_eq!(Scenario::parse("ghz").unwrap(), Scenario::Ghz);
        assert_eq!(
            Scenario::parse("custom:/tmp/state.txt").unwrap(),
            Scenario::Custom(PathBuf::from("/tmp/state.txt"))
        );
        assert!(Scenario::parse("bell").is_err());
        assert!(Scenario::parse("custom:").is_err());
    }

    #[test]
    fn grid_validation() {
        assert!(Grid { min: 0.0, max: FRAC_PI_4, steps: 50 }.validate("r").is_ok());
        assert!(Grid { min: -0.1, max: 0.5, steps: 2 }.validate("r").is_err());
        assert!(Grid { min: 0.2, max: 0.1, steps: 2 }.validate("r").is_err());
        assert!(Grid { min: 0.0, max: 1.0, steps: 2 }.validate("r").is_err());
        assert!(Grid { min: 0.0, max: 0.5, steps: 0 }.validate("r").is_err());
    }

    #[test]
    fn w_rejects_ra_grid() {
        let cfg = SweepConfig {
            scenario: Scenario::W,
            r_grid: Grid { min: 0.0, max: FRAC_PI_4, steps: 2 },
            ra_grid: Some(Grid { min: 0.0, max: FRAC_PI_4, steps: 2 }),
            digits: 10,
        };
        assert!(matches!(cfg.validate(), Err(CliError::Config(_))));
    }

    #[test]
    fn w_sweep_first_row_has_inertial_values() {
        let cfg = SweepConfig {
            scenario: Scenario::W,
            r_grid: Grid { min: 0.0, max: FRAC_PI_4, steps: 2 },
            ra_grid: None,
            digits: 10,
        };
        let mut buf = Vec::new();
        let summary = run_sweep(&cfg, &mut buf).unwrap();
        assert_eq!(summary.rows, 2);
        let text = String::from_utf8(buf).unwrap();
        let first_row = text
            .lines()
            .find(|l| !l.starts_with('#') && !l.starts_with("r,"))
            .unwrap();
        let fields: Vec<&str> = first_row.split(',').collect();
        assert_eq!(fields.len(), 12);
        assert_eq!(fields[2], "0.9428090416", "N_A");
        assert_eq!(fields[5], "0.4120226592", "N_AB");
        // last row: past the two-tangle crossing
        let last_row = text.lines().last().unwrap();
        let fields: Vec<&str> = last_row.split(',').collect();
        assert_eq!(fields[5].parse::<f64>().unwrap(), 0.0);
    }

    #[test]
    fn ghz_inertial_row() {
        let cfg = SweepConfig {
            scenario: Scenario::Ghz,
            r_grid: Grid { min: 0.0, max: 0.0, steps: 1 },
            ra_grid: Some(Grid { min: 0.0, max: 0.0, steps: 1 }),
            digits: 10,
        };
        let mut buf = Vec::new();
        run_sweep(&cfg, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let row = text.lines().last().unwrap();
        let fields: Vec<f64> = row.split(',').map(|f| f.parse().unwrap()).collect();
        for i in 2..5 {
            assert!((fields[i] - 1.0).abs() < 1e-9, "one-tangle column {i}");
        }
        for i in 5..8 {
            assert!(fields[i].abs() < 1e-9, "two-tangle column {i}");
        }
        assert!((fields[11] - 1.0).abs() < 1e-9, "pi-tangle");
    }

    #[test]
    fn sweep_output_is_deterministic() {
        let cfg = SweepConfig {
            scenario: Scenario::Ghz,
            r_grid: Grid { min: 0.0, max: FRAC_PI_4, steps: 5 },
            ra_grid: Some(Grid { min: 0.0, max: FRAC_PI_4, steps: 3 }),
            digits: 10,
        };
        let mut a = Vec::new();
        let mut b = Vec::new();
        assert_eq!(run_sweep(&cfg, &mut a).unwrap().rows, 15);
        run_sweep(&cfg, &mut b).unwrap();
        assert_eq!(a, b);
    }
}
