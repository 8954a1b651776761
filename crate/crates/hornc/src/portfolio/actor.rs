//! Actor execution: external processes and parallel groups.
//!
//! External actors run as their own process group so a timeout or cancel can
//! take down the whole tool tree: SIGTERM first, then SIGKILL after a short
//! grace period. A group runs its actors on threads and cancels the rest as
//! soon as one produces a decisive (non-unknown) answer.

use std::fs::File;
use std::os::unix::process::CommandExt;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use super::builtin::run_builtin;
use super::config::ActorConfig;
use crate::chc::ChcSystem;

const POLL_INTERVAL: Duration = Duration::from_millis(20);
const KILL_GRACE: Duration = Duration::from_millis(500);

/// What an actor said, uniformly across kinds. For reach actors, safe means
/// the error location is unreachable. For overflow actors, safe means no
/// signed-int overflow. For validators, safe means the violation witness
/// replays as a real, overflow-free execution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RawAnswer {
    Safe,
    Unsafe,
    Unknown(String),
}

impl RawAnswer {
    pub fn is_decisive(&self) -> bool {
        !matches!(self, RawAnswer::Unknown(_))
    }
}

/// One actor's answer plus where it may have left a witness.
#[derive(Debug)]
pub struct ActorOutcome {
    pub actor: String,
    pub answer: RawAnswer,
    pub witness_dir: PathBuf,
}

#[derive(Debug)]
pub struct GroupRun {
    /// Index into `outcomes` of the first decisive answer, if any.
    pub decisive: Option<usize>,
    pub outcomes: Vec<ActorOutcome>,
}

impl GroupRun {
    pub fn decisive_outcome(&self) -> Option<&ActorOutcome> {
        self.decisive.map(|i| &self.outcomes[i])
    }

    /// Reasons from every non-decisive actor, prefixed with the actor name.
    pub fn unknown_reasons(&self) -> Vec<String> {
        self.outcomes
            .iter()
            .filter_map(|o| match &o.answer {
                RawAnswer::Unknown(r) => Some(format!("{}: {r}", o.actor)),
                _ => None,
            })
            .collect()
    }
}

/// Everything an actor needs to run: the system (for builtins), the generated
/// C file (for external tools), and for validators the witness directory of
/// the actor whose violation is being checked.
pub struct ActorInput<'a> {
    pub system: &'a ChcSystem,
    pub c_file: &'a Path,
    pub violation_witness: Option<&'a Path>,
}

/// Runs `actors` concurrently until one answers decisively or all finish.
/// `label` keys the per-actor witness directories under `scratch`.
pub fn run_parallel(
    actors: &[&ActorConfig],
    input: &ActorInput<'_>,
    scratch: &Path,
    label: &str,
    deadline: Instant,
) -> GroupRun {
    let cancel = AtomicBool::new(false);
    let (tx, rx) = mpsc::channel::<(usize, ActorOutcome)>();
    let mut slots: Vec<Option<ActorOutcome>> = Vec::new();
    slots.resize_with(actors.len(), || None);

    let decisive = thread::scope(|scope| {
        for (i, actor) in actors.iter().enumerate() {
            let tx = tx.clone();
            let cancel = &cancel;
            let witness_dir = scratch.join(format!("{label}-{i}-{}", safe_name(&actor.name)));
            scope.spawn(move || {
                let answer = run_actor(actor, input, &witness_dir, deadline, cancel);
                let _ = tx.send((
                    i,
                    ActorOutcome {
                        actor: actor.name.clone(),
                        answer,
                        witness_dir,
                    },
                ));
            });
        }
        drop(tx);
        let mut decisive = None;
        while let Ok((i, outcome)) = rx.recv() {
            if decisive.is_none() && outcome.answer.is_decisive() {
                decisive = Some(i);
                cancel.store(true, Ordering::SeqCst);
            }
            slots[i] = Some(outcome);
        }
        decisive
    });

    GroupRun {
        decisive,
        outcomes: slots.into_iter().map(|s| s.expect("all actors reported")).collect(),
    }
}

pub fn run_actor(
    actor: &ActorConfig,
    input: &ActorInput<'_>,
    witness_dir: &Path,
    deadline: Instant,
    cancel: &AtomicBool,
) -> RawAnswer {
    if std::fs::create_dir_all(witness_dir).is_err() {
        return RawAnswer::Unknown("could not create witness directory".into());
    }
    if actor.builtin {
        run_builtin(&actor.name, input, witness_dir)
    } else {
        run_external(actor, input, witness_dir, deadline, cancel)
    }
}

fn run_external(
    actor: &ActorConfig,
    input: &ActorInput<'_>,
    witness_dir: &Path,
    deadline: Instant,
    cancel: &AtomicBool,
) -> RawAnswer {
    let remaining = deadline.saturating_duration_since(Instant::now());
    if remaining.is_zero() {
        return RawAnswer::Unknown("no budget left".into());
    }
    let template = actor.command.as_deref().expect("external actors have a command");
    let command = template
        .replace("{input_file}", &input.c_file.to_string_lossy())
        .replace(
            "{witness_dir}",
            &input
                .violation_witness
                .unwrap_or(witness_dir)
                .to_string_lossy(),
        )
        .replace("{timeout_s}", &remaining.as_secs().max(1).to_string());

    let stdout_path = witness_dir.join("stdout.log");
    let stderr_path = witness_dir.join("stderr.log");
    let (Ok(stdout), Ok(stderr)) = (File::create(&stdout_path), File::create(&stderr_path))
    else {
        return RawAnswer::Unknown("could not create log files".into());
    };

    let mut child = match Command::new("sh")
        .arg("-c")
        .arg(&command)
        .stdin(Stdio::null())
        .stdout(stdout)
        .stderr(stderr)
        .process_group(0)
        .spawn()
    {
        Ok(c) => c,
        Err(e) => return RawAnswer::Unknown(format!("spawn failed: {e}")),
    };

    let exited = loop {
        match child.try_wait() {
            Ok(Some(status)) => break Some(status),
            Ok(None) => {}
            Err(e) => return RawAnswer::Unknown(format!("wait failed: {e}")),
        }
        if cancel.load(Ordering::SeqCst) {
            kill_group(&mut child);
            return RawAnswer::Unknown("cancelled".into());
        }
        if Instant::now() >= deadline {
            kill_group(&mut child);
            return RawAnswer::Unknown("timeout".into());
        }
        thread::sleep(POLL_INTERVAL);
    };
    let _ = exited;

    let mut output = std::fs::read_to_string(&stdout_path).unwrap_or_default();
    output.push_str(&std::fs::read_to_string(&stderr_path).unwrap_or_default());
    classify_output(actor, &output)
}

fn classify_output(actor: &ActorConfig, output: &str) -> RawAnswer {
    let matches = |pattern: &Option<String>| {
        pattern
            .as_deref()
            .map(|p| {
                regex::Regex::new(p)
                    .expect("patterns are validated at config load")
                    .is_match(output)
            })
            .unwrap_or(false)
    };
    match (matches(&actor.safe_pattern), matches(&actor.unsafe_pattern)) {
        (true, false) => RawAnswer::Safe,
        (false, true) => RawAnswer::Unsafe,
        (true, true) => RawAnswer::Unknown("both verdict patterns matched".into()),
        (false, false) => RawAnswer::Unknown("no verdict pattern matched".into()),
    }
}

/// SIGTERM the actor's process group, wait out the grace period, SIGKILL.
fn kill_group(child: &mut std::process::Child) {
    let pgid = child.id() as i32;
    unsafe {
        libc::kill(-pgid, libc::SIGTERM);
    }
    let grace_end = Instant::now() + KILL_GRACE;
    loop {
        match child.try_wait() {
            Ok(Some(_)) => return,
            Ok(None) if Instant::now() < grace_end => thread::sleep(POLL_INTERVAL),
            _ => break,
        }
    }
    unsafe {
        libc::kill(-pgid, libc::SIGKILL);
    }
    let _ = child.wait();
}

fn safe_name(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::portfolio::config::ActorKind;

    fn echo_actor(name: &str, text: &str) -> ActorConfig {
        ActorConfig {
            name: name.into(),
            kind: ActorKind::Reach,
            builtin: false,
            command: Some(format!("echo '{text}'")),
            safe_pattern: Some(r"(?mi)\bTRUE\b".into()),
            unsafe_pattern: Some(r"(?mi)\bFALSE\b".into()),
        }
    }

    fn dummy_system() -> ChcSystem {
        crate::chc::parse_chc("(set-logic HORN)(check-sat)").unwrap()
    }

    #[test]
    fn classifies_external_output() {
        let scratch = tempfile::tempdir().unwrap();
        let c_file = scratch.path().join("in.c");
        std::fs::write(&c_file, "int main(void) { return 0; }\n").unwrap();
        let system = dummy_system();
        let input = ActorInput {
            system: &system,
            c_file: &c_file,
            violation_witness: None,
        };
        let deadline = Instant::now() + Duration::from_secs(10);
        let cancel = AtomicBool::new(false);

        for (text, want) in [
            ("VERDICT: TRUE", RawAnswer::Safe),
            ("VERDICT: FALSE", RawAnswer::Unsafe),
            ("gibberish", RawAnswer::Unknown("no verdict pattern matched".into())),
        ] {
            let actor = echo_actor("e", text);
            let dir = scratch.path().join(format!("w-{}", text.len()));
            assert_eq!(run_actor(&actor, &input, &dir, deadline, &cancel), want);
        }
    }

    #[test]
    fn missing_binary_is_unknown_not_fatal() {
        let scratch = tempfile::tempdir().unwrap();
        let c_file = scratch.path().join("in.c");
        std::fs::write(&c_file, "int main(void) { return 0; }\n").unwrap();
        let actor = ActorConfig {
            name: "ghost".into(),
            kind: ActorKind::Reach,
            builtin: false,
            command: Some("definitely-not-a-real-verifier-binary {input_file}".into()),
            safe_pattern: Some(r"TRUE".into()),
            unsafe_pattern: Some(r"FALSE".into()),
        };
        let system = dummy_system();
        let input = ActorInput {
            system: &system,
            c_file: &c_file,
            violation_witness: None,
        };
        let out = run_actor(
            &actor,
            &input,
            &scratch.path().join("w"),
            Instant::now() + Duration::from_secs(5),
            &AtomicBool::new(false),
        );
        // `sh -c` exits 127; no pattern matches
        assert!(matches!(out, RawAnswer::Unknown(_)), "{out:?}");
    }

    #[test]
    fn decisive_answer_cancels_slow_peers() {
        let scratch = tempfile::tempdir().unwrap();
        let c_file = scratch.path().join("in.c");
        std::fs::write(&c_file, "int main(void) { return 0; }\n").unwrap();
        let fast = echo_actor("fast", "TRUE");
        let slow = ActorConfig {
            name: "slow".into(),
            kind: ActorKind::Reach,
            builtin: false,
            command: Some("sleep 30 && echo FALSE".into()),
            safe_pattern: Some(r"TRUE".into()),
            unsafe_pattern: Some(r"FALSE".into()),
        };
        let system = dummy_system();
        let input = ActorInput {
            system: &system,
            c_file: &c_file,
            violation_witness: None,
        };
        let start = Instant::now();
        let run = run_parallel(
            &[&slow, &fast],
            &input,
            scratch.path(),
            "g",
            Instant::now() + Duration::from_secs(60),
        );
        assert!(start.elapsed() < Duration::from_secs(10), "group hung on the slow actor");
        let winner = run.decisive_outcome().expect("fast actor decides");
        assert_eq!(winner.actor, "fast");
        assert_eq!(winner.answer, RawAnswer::Safe);
        assert_eq!(run.unknown_reasons(), vec!["slow: cancelled".to_string()]);
    }

    #[test]
    fn deadline_kills_runaway_actor() {
        let scratch = tempfile::tempdir().unwrap();
        let c_file = scratch.path().join("in.c");
        std::fs::write(&c_file, "int main(void) { return 0; }\n").unwrap();
        let slow = ActorConfig {
            name: "slow".into(),
            kind: ActorKind::Reach,
            builtin: false,
            command: Some("sleep 30".into()),
            safe_pattern: Some(r"TRUE".into()),
            unsafe_pattern: Some(r"FALSE".into()),
        };
        let system = dummy_system();
        let input = ActorInput {
            system: &system,
            c_file: &c_file,
            violation_witness: None,
        };
        let start = Instant::now();
        let out = run_actor(
            &slow,
            &input,
            &scratch.path().join("w"),
            Instant::now() + Duration::from_millis(300),
            &AtomicBool::new(false),
        );
        assert_eq!(out, RawAnswer::Unknown("timeout".into()));
        assert!(start.elapsed() < Duration::from_secs(5));
    }
}
