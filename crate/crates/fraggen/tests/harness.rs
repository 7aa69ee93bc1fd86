//! Engine execution, classification, crash deduplication and campaigns,
//! against shell scripts standing in for engines.

mod common;

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::atomic::AtomicBool;
use std::time::{Duration, Instant};

use fraggen::harness::{
    classify, dedup_key, execute, read_stats, run_campaign, Budget, Campaign, CampaignStats, Classification,
    EngineConfig, ErrorMatcher, ExecutionOutcome, Termination, CRASHES_DIR, EVENTS_FILE, STDERR_LIMIT,
};
use fraggen::pipeline::Generator;
use fraggen::Error;
use fraggen_core::generate::GenerationParams;
use fraggen_core::suggest::MarkovSuggester;
use proptest::prelude::*;

fn run(body: &str, timeout: f64) -> (ExecutionOutcome, Classification) {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = EngineConfig::new(common::stub_engine(dir.path(), "engine", body));
    cfg.timeout_secs = timeout;
    let out = execute(&cfg, "print(1);\n", dir.path()).unwrap();
    let class = classify(&out, &cfg.error_matcher().unwrap());
    (out, class)
}

#[test]
fn clean_exit_passes() {
    assert_eq!(run("exit 0", 5.0).1, Classification::Pass);
}

#[test]
fn the_test_file_is_passed_as_the_last_argument() {
    let (_, c) = run(r#"grep -q 'print(1)' "$1" || exit 9"#, 5.0);
    assert_eq!(c, Classification::Pass);
}

#[test]
fn segv_and_ill_are_crashes() {
    assert_eq!(run("kill -SEGV $$", 5.0).1, Classification::Crash(libc::SIGSEGV));
    assert_eq!(run("kill -ILL $$", 5.0).1, Classification::Crash(libc::SIGILL));
}

#[test]
fn abort_is_other() {
    let (out, c) = run("kill -ABRT $$", 5.0);
    assert_eq!(out.termination, Termination::Signal(libc::SIGABRT));
    assert_eq!(c, Classification::Other);
}

#[test]
fn runtime_errors_are_named() {
    let (_, c) = run("echo 'test.js:1' >&2; echo 'TypeError: x is not a function' >&2; exit 1", 5.0);
    assert_eq!(c, Classification::RuntimeError("TypeError".into()));
    let (_, c) = run("echo 'Uncaught RangeError: too deep' >&2; exit 3", 5.0);
    assert_eq!(c, Classification::RuntimeError("RangeError".into()));
    let (_, c) = run("echo 'something odd' >&2; exit 3", 5.0);
    assert_eq!(c, Classification::Other);
}

#[test]
fn timeouts_kill_the_whole_process_group() {
    let start = Instant::now();
    let (out, c) = run("sleep 30 & sleep 30; wait", 0.5);
    assert_eq!(c, Classification::Timeout);
    assert!(out.wall < Duration::from_secs_f64(1.5), "{:?}", out.wall);
    assert!(start.elapsed() < Duration::from_secs_f64(1.5));
}

#[test]
fn stderr_is_capped() {
    let (out, _) = run("head -c 300000 /dev/zero | tr '\\0' x >&2; exit 0", 5.0);
    assert!(out.stderr_truncated);
    assert_eq!(out.stderr.len(), STDERR_LIMIT);
}

#[test]
fn custom_error_names_replace_the_standard_ones() {
    let m = ErrorMatcher::new(&["InternalError"]).unwrap();
    assert_eq!(m.find("InternalError: too much recursion"), Some("InternalError".into()));
    assert_eq!(m.find("TypeError: nope"), None);
}

#[test]
fn missing_engine_is_unavailable() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = EngineConfig::new("/nonexistent/engine");
    assert!(matches!(execute(&cfg, "", dir.path()), Err(Error::EngineUnavailable(_))));
    assert!(matches!(cfg.validate(), Err(Error::EngineUnavailable(_))));
}

fn outcome(stderr: &str) -> ExecutionOutcome {
    ExecutionOutcome {
        termination: Termination::Signal(libc::SIGSEGV),
        stderr: stderr.into(),
        stderr_truncated: false,
        wall: Duration::ZERO,
    }
}

#[test]
fn crash_keys_follow_the_last_stderr_line() {
    let cfg = EngineConfig::new("/bin/true");
    let t = Path::new("/tmp/x.js");
    let a = dedup_key(&outcome("noise 1\n#0 Foo::bar()\n\n"), &cfg, t);
    let b = dedup_key(&outcome("noise 2\n#0 Foo::bar()\n"), &cfg, t);
    let c = dedup_key(&outcome("noise 1\n#0 Foo::baz()\n"), &cfg, t);
    assert_eq!(a, b);
    assert_ne!(a.key, c.key);
    assert!(a.key.starts_with("SIGSEGV-") && a.key.len() == "SIGSEGV-".len() + 16, "{}", a.key);
    assert_eq!(a.frame, None);
}

#[test]
fn extractor_frames_key_crashes() {
    let mut cfg = EngineConfig::new("/bin/true");
    cfg.extractor = Some("grep -o 'in [A-Za-z:]*' | head -n 1".into());
    let t = Path::new("/tmp/x.js");
    let a = dedup_key(&outcome("#0 0x1 in Foo::bar\n#1 0x2 in main\nseed 1\n"), &cfg, t);
    let b = dedup_key(&outcome("#0 0x9 in Foo::bar\n#1 0x2 in other\nseed 2\n"), &cfg, t);
    assert_eq!(a.frame.as_deref(), Some("in Foo::bar"));
    assert_eq!(a.key, b.key);
    // A failing extractor falls back to the stderr line.
    cfg.extractor = Some("exit 1".into());
    let c = dedup_key(&outcome("last line\n"), &cfg, t);
    assert_eq!(c.frame, None);
    assert_eq!(c.key, dedup_key(&outcome("last line\n"), &EngineConfig::new("/bin/true"), t).key);
    // The extractor sees the test path.
    cfg.extractor = Some("echo \"$FRAGGEN_TEST\"".into());
    assert_eq!(dedup_key(&outcome(""), &cfg, t).frame.as_deref(), Some("/tmp/x.js"));
}

proptest! {
    #[test]
    fn classification_is_total(code in -300i32..300, sig in 1i32..32, which in 0u8..3, stderr in ".{0,200}") {
        let termination = match which {
            0 => Termination::Exit(code),
            1 => Termination::Signal(sig),
            _ => Termination::Timeout,
        };
        let out = ExecutionOutcome { termination, stderr, stderr_truncated: false, wall: Duration::ZERO };
        let c = classify(&out, &ErrorMatcher::standard());
        let expected = match termination {
            Termination::Exit(0) => "pass",
            Termination::Exit(_) => if matches!(c, Classification::RuntimeError(_)) { "runtime_error" } else { "other" },
            Termination::Signal(s) if s == libc::SIGSEGV || s == libc::SIGILL => "crash",
            Termination::Signal(_) => "other",
            Termination::Timeout => "timeout",
        };
        prop_assert_eq!(c.label(), expected);
    }
}

/// Engine whose verdict depends only on the test text.
const HASH_ENGINE: &str = r#"h=$(cksum < "$1" | cut -d' ' -f1)
case $((h % 5)) in
  0) echo "frame $((h % 3))" >&2; kill -SEGV $$ ;;
  1) echo "TypeError: bad" >&2; exit 1 ;;
  2) exit 2 ;;
  *) exit 0 ;;
esac"#;

fn campaign(engine: &EngineConfig, workers: usize, tests: u64, out: &Path) -> Result<CampaignStats, Error> {
    let (seeds, corpus) = common::toy_corpus();
    let asts: Vec<_> = seeds.iter().map(|(_, a)| a.clone()).collect();
    let names: Vec<_> = seeds.iter().map(|(n, _)| n.clone()).collect();
    let suggester = MarkovSuggester { model: &corpus.markov };
    let builtins = fraggen::registry::bundled_builtins("node").unwrap();
    let hints = fraggen::registry::default_usage_hints();
    let c = Campaign {
        generator: Generator {
            seeds: &asts,
            vocab: &corpus.vocab,
            suggester: &suggester,
            params: GenerationParams::new(100, 8),
            resolve: Some((&builtins, &hints)),
            rng_seed: 11,
        },
        seed_names: &names,
        engine,
        workers,
        budget: Budget { tests: Some(tests), seconds: None },
        out,
    };
    run_campaign(&c, &AtomicBool::new(false))
}

fn classes_by_test(out: &Path) -> BTreeMap<u64, (String, Option<String>)> {
    std::fs::read_to_string(out.join(EVENTS_FILE))
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .filter(|e| e["class"] != "generation_failed")
        .map(|e| (e["test"].as_u64().unwrap(), (e["class"].as_str().unwrap().to_string(), e["key"].as_str().map(String::from))))
        .collect()
}

#[test]
fn worker_count_does_not_change_results() {
    let dir = tempfile::tempdir().unwrap();
    let engine = EngineConfig::new(common::stub_engine(dir.path(), "engine", HASH_ENGINE));
    let one = dir.path().join("one");
    let four = dir.path().join("four");
    let a = campaign(&engine, 1, 120, &one).unwrap();
    let b = campaign(&engine, 4, 120, &four).unwrap();
    assert_eq!(a.executed, 120);
    assert_eq!(b.executed, 120);
    assert_eq!(a.generated, 120);
    assert_eq!((a.pass, a.runtime_error, a.crash, a.other, a.timeout), (b.pass, b.runtime_error, b.crash, b.other, b.timeout));
    assert_eq!(a.runtime_errors, b.runtime_errors);
    assert_eq!(a.unique_crashes, b.unique_crashes);
    assert!(a.crash > 0 && a.pass > 0 && a.runtime_error > 0, "{a:?}");
    assert_eq!(classes_by_test(&one), classes_by_test(&four));
    // One directory per distinct key, whose hit count sums to the crashes.
    for out in [&one, &four] {
        let dirs: Vec<_> = std::fs::read_dir(out.join(CRASHES_DIR)).unwrap().collect();
        assert_eq!(dirs.len() as u64, a.unique_crashes);
        let hits: u64 = dirs
            .iter()
            .map(|d| fraggen::harness::load_crash(&d.as_ref().unwrap().path()).unwrap().0.hits)
            .sum();
        assert_eq!(hits, a.crash);
    }
    assert!(a.unique_crashes <= 3);
    assert_eq!(read_stats(&one).unwrap().executed, 120);
}

#[test]
fn always_crashing_engine_dedups_to_one_key() {
    let dir = tempfile::tempdir().unwrap();
    let engine = EngineConfig::new(common::stub_engine(dir.path(), "segv", "echo '#0 in Same::frame' >&2; kill -SEGV $$"));
    let out = dir.path().join("c");
    let s = campaign(&engine, 4, 100, &out).unwrap();
    assert_eq!((s.crash, s.unique_crashes), (100, 1));
    let (rec, src) = fraggen::harness::load_crash(&std::fs::read_dir(out.join(CRASHES_DIR)).unwrap().next().unwrap().unwrap().path()).unwrap();
    assert_eq!(rec.hits, 100);
    assert_eq!(rec.signal, "SIGSEGV");
    assert!(!src.is_empty());
}

#[test]
fn unavailable_engine_stops_with_partial_stats() {
    let dir = tempfile::tempdir().unwrap();
    // A native binary: a shell script deleted mid-run can be exec'd and then
    // fail to reopen itself, which shows up as an ordinary exit 127.
    let bin = dir.path().join("engine");
    std::fs::copy("/bin/true", &bin).unwrap();
    let engine = EngineConfig::new(&bin);
    let out = dir.path().join("c");
    // The binary disappears after validation would have passed.
    let deleter = {
        let bin = bin.clone();
        std::thread::spawn(move || {
            std::thread::sleep(Duration::from_millis(300));
            std::fs::remove_file(bin).unwrap();
        })
    };
    let r = campaign(&engine, 2, 1_000_000, &out);
    deleter.join().unwrap();
    assert!(matches!(r, Err(Error::EngineUnavailable(_))), "{r:?}");
    let stats = read_stats(&out).unwrap();
    assert_eq!(stats.stopped, "engine_unavailable");
    assert!(stats.error.is_some());
    assert!(stats.executed > 0);
    assert_eq!(stats.executed, stats.pass);
}

#[test]
fn missing_engine_fails_before_running() {
    let dir = tempfile::tempdir().unwrap();
    let r = campaign(&EngineConfig::new("/nonexistent/engine"), 1, 10, &dir.path().join("c"));
    assert!(matches!(r, Err(Error::EngineUnavailable(_))));
}

#[test]
fn timeouts_are_counted() {
    let dir = tempfile::tempdir().unwrap();
    let mut engine = EngineConfig::new(common::stub_engine(dir.path(), "slow", "sleep 10"));
    engine.timeout_secs = 0.2;
    let start = Instant::now();
    let s = campaign(&engine, 4, 8, &dir.path().join("c")).unwrap();
    assert_eq!(s.timeout, 8);
    assert!(start.elapsed() < Duration::from_secs(4));
}
