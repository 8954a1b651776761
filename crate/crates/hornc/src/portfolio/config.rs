//! Portfolio configuration: actors and solve plans, loaded from TOML.

use serde::Deserialize;

use crate::chc::TheoryClass;
use crate::codegen::Encoding;
use crate::error::PortfolioError;

/// Names of the in-process actors that are always available.
pub const BUILTIN_ACTORS: [&str; 3] = ["builtin-oracle", "builtin-overflow", "builtin-validator"];

/// The default portfolio shipped with the binary.
pub const DEFAULT_PORTFOLIO: &str = include_str!("default.portfolio");

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PortfolioConfig {
    #[serde(default, rename = "actor")]
    pub actors: Vec<ActorConfig>,
    #[serde(default, rename = "plan")]
    pub plans: Vec<PlanConfig>,
}

/// One verifier backend. Either `builtin` (run in-process) or external, in
/// which case `command` is a shell template with the placeholders
/// `{input_file}`, `{witness_dir}`, and `{timeout_s}`, and the patterns
/// classify its combined stdout/stderr.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActorConfig {
    pub name: String,
    pub kind: ActorKind,
    #[serde(default)]
    pub builtin: bool,
    pub command: Option<String>,
    pub safe_pattern: Option<String>,
    pub unsafe_pattern: Option<String>,
}

/// What property an actor decides. `Reach` answers whether the error location
/// is reachable; `Overflow` whether any execution overflows signed `int`;
/// `Validator` whether a reported violation witness replays cleanly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActorKind {
    Reach,
    Overflow,
    Validator,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanConfig {
    pub theory: TheoryRoute,
    #[serde(rename = "stage")]
    pub stages: Vec<StageConfig>,
}

/// Theory routing key for plan selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoryRoute {
    Core,
    Lia,
    Bv,
}

impl TheoryRoute {
    pub fn of(theory: &TheoryClass) -> TheoryRoute {
        match theory {
            TheoryClass::Core => TheoryRoute::Core,
            TheoryClass::Lia => TheoryRoute::Lia,
            TheoryClass::Bv(_) => TheoryRoute::Bv,
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StageConfig {
    pub encoding: EncodingChoice,
    #[serde(default)]
    pub reach: Vec<String>,
    #[serde(default)]
    pub overflow: Vec<String>,
    #[serde(default)]
    pub validators: Vec<String>,
    pub budget_fraction: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EncodingChoice {
    Forward,
    Backward,
}

impl From<EncodingChoice> for Encoding {
    fn from(c: EncodingChoice) -> Encoding {
        match c {
            EncodingChoice::Forward => Encoding::Forward,
            EncodingChoice::Backward => Encoding::Backward,
        }
    }
}

impl PortfolioConfig {
    pub fn actor(&self, name: &str) -> Option<&ActorConfig> {
        self.actors.iter().find(|a| a.name == name)
    }

    pub fn plan_for(&self, theory: &TheoryClass) -> Option<&PlanConfig> {
        let route = TheoryRoute::of(theory);
        self.plans.iter().find(|p| p.theory == route)
    }
}

pub fn load_config(text: &str) -> Result<PortfolioConfig, PortfolioError> {
    let config: PortfolioConfig =
        toml::from_str(text).map_err(|e| PortfolioError::Config(e.to_string()))?;
    validate(&config)?;
    Ok(config)
}

pub fn default_config() -> PortfolioConfig {
    load_config(DEFAULT_PORTFOLIO).expect("the embedded default portfolio is valid")
}

fn validate(config: &PortfolioConfig) -> Result<(), PortfolioError> {
    let mut seen = std::collections::HashSet::new();
    for actor in &config.actors {
        if !seen.insert(actor.name.as_str()) {
            return Err(PortfolioError::Config(format!(
                "duplicate actor name {:?}",
                actor.name
            )));
        }
        if actor.builtin {
            if !BUILTIN_ACTORS.contains(&actor.name.as_str()) {
                return Err(PortfolioError::Config(format!(
                    "{:?} is not a builtin actor; available: {}",
                    actor.name,
                    BUILTIN_ACTORS.join(", ")
                )));
            }
            if actor.command.is_some() {
                return Err(PortfolioError::Config(format!(
                    "builtin actor {:?} must not set a command",
                    actor.name
                )));
            }
        } else {
            if actor.command.is_none() {
                return Err(PortfolioError::Config(format!(
                    "external actor {:?} needs a command template",
                    actor.name
                )));
            }
            for pattern in [&actor.safe_pattern, &actor.unsafe_pattern].into_iter().flatten() {
                regex::Regex::new(pattern)
                    .map_err(|e| PortfolioError::Config(format!("bad pattern: {e}")))?;
            }
        }
    }
    for plan in &config.plans {
        if plan.stages.is_empty() {
            return Err(PortfolioError::Config("plan without stages".into()));
        }
        for stage in &plan.stages {
            if !(stage.budget_fraction > 0.0 && stage.budget_fraction <= 1.0) {
                return Err(PortfolioError::Config(
                    "budget_fraction must be in (0, 1]".into(),
                ));
            }
            for (names, kind) in [
                (&stage.reach, ActorKind::Reach),
                (&stage.overflow, ActorKind::Overflow),
                (&stage.validators, ActorKind::Validator),
            ] {
                for name in names {
                    let actor = config
                        .actor(name)
                        .ok_or_else(|| PortfolioError::UnknownActor(name.clone()))?;
                    if actor.kind != kind {
                        return Err(PortfolioError::Config(format!(
                            "actor {:?} has kind {:?}, but the plan uses it as {:?}",
                            name, actor.kind, kind
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_portfolio_loads_and_covers_all_theories() {
        let config = default_config();
        for theory in [
            TheoryClass::Core,
            TheoryClass::Lia,
            TheoryClass::Bv([4u32].into_iter().collect()),
        ] {
            let plan = config.plan_for(&theory).expect("plan exists");
            assert!(!plan.stages.is_empty());
        }
    }

    #[test]
    fn rejects_unknown_actor_reference() {
        let text = r#"
[[actor]]
name = "builtin-oracle"
kind = "reach"
builtin = true

[[plan]]
theory = "lia"
[[plan.stage]]
encoding = "forward"
reach = ["ghost"]
budget_fraction = 1.0
"#;
        assert!(matches!(
            load_config(text),
            Err(PortfolioError::UnknownActor(name)) if name == "ghost"
        ));
    }

    #[test]
    fn rejects_kind_mismatch_and_bad_fraction() {
        let mismatch = r#"
[[actor]]
name = "builtin-overflow"
kind = "overflow"
builtin = true

[[plan]]
theory = "lia"
[[plan.stage]]
encoding = "forward"
reach = ["builtin-overflow"]
budget_fraction = 0.5
"#;
        assert!(matches!(
            load_config(mismatch),
            Err(PortfolioError::Config(_))
        ));

        let fraction = r#"
[[plan]]
theory = "lia"
[[plan.stage]]
encoding = "forward"
budget_fraction = 0.0
"#;
        assert!(matches!(
            load_config(fraction),
            Err(PortfolioError::Config(_))
        ));
    }
}
