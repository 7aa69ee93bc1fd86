mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fraggen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fraggen")).args(args).env_remove("FRAGGEN_ADAPTER").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn ingest_toy(store: &Path) {
    let toy = common::fixtures().join("toy/ast");
    let o = fraggen(&["ingest", "--fixtures", s(&toy), "--out", s(store), "--min-freq", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("files 20 kept 20 "), "{}", stdout(&o));
}

fn train(store: &Path, out: &Path, seed: &str) -> Output {
    fraggen(&[
        "train", "--store", s(store), "--out", s(out), "--epochs", "3", "--seed", seed, "--embed-dim", "8",
        "--hidden-dim", "12", "--type-embed-dim", "4", "--batch-size", "4",
    ])
}

fn sorted_files(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut v: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap())
        })
        .collect();
    v.sort();
    v
}

#[test]
fn help_exits_zero_for_every_subcommand() {
    for sub in ["ingest", "train", "generate", "fuzz", "stats", "replay"] {
        let o = fraggen(&[sub, "--help"]);
        assert_eq!(o.status.code(), Some(0), "{sub}");
        assert!(stdout(&o).contains("Usage:"), "{sub}");
    }
    assert_eq!(fraggen(&["--help"]).status.code(), Some(0));
    assert_eq!(fraggen(&["--version"]).status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(fraggen(&[]).status.code(), Some(1));
    assert_eq!(fraggen(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(fraggen(&["train"]).status.code(), Some(1));
    assert_eq!(fraggen(&["ingest", "--fixtures", "a", "--sources", "b", "--out", "c"]).status.code(), Some(1));
    assert_eq!(fraggen(&["generate", "--store", "x", "--out", "y", "--suggester", "oracle"]).status.code(), Some(1));
    assert_eq!(fraggen(&["replay", "--crash", "x"]).status.code(), Some(1));
}

#[test]
fn runtime_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope");
    let o = fraggen(&["train", "--store", s(&missing), "--epochs", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: "), "{}", stderr(&o));

    let o = fraggen(&["ingest", "--sources", s(dir.path()), "--out", s(&dir.path().join("st"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("FRAGGEN_ADAPTER"), "{}", stderr(&o));

    let o = fraggen(&["fuzz", "--config", s(&missing)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn generate_rejects_zero_k_top() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    ingest_toy(&store);
    let o = fraggen(&[
        "generate", "--store", s(&store), "--out", s(&dir.path().join("o")), "--suggester", "markov", "--k-top", "0",
    ]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn train_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    ingest_toy(&store);
    let a = dir.path().join("a.ckpt");
    let b = dir.path().join("b.ckpt");
    let c = dir.path().join("c.ckpt");
    let oa = train(&store, &a, "5");
    assert_eq!(oa.status.code(), Some(0), "{}", stderr(&oa));
    let lines: Vec<_> = stdout(&oa).lines().map(String::from).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("epoch 1 l1 "));
    assert_eq!(lines[3], format!("wrote {}", a.display()));
    assert_eq!(train(&store, &b, "5").status.code(), Some(0));
    assert_eq!(train(&store, &c, "6").status.code(), Some(0));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_ne!(fs::read(&a).unwrap(), fs::read(&c).unwrap());
}

#[test]
fn ingest_train_generate_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    ingest_toy(&store);
    let o = train(&store, &store.join("model.ckpt"), "1");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    let gen = |out: &Path, seed: &str| {
        fraggen(&["generate", "--store", s(&store), "--out", s(out), "--count", "25", "--seed", seed, "--k-top", "4"])
    };
    let first = dir.path().join("g1");
    let second = dir.path().join("g2");
    let other = dir.path().join("g3");
    let o = gen(&first, "9");
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let line = stdout(&o);
    let generated: usize = line.split_whitespace().nth(1).unwrap().parse().unwrap();
    assert!(generated > 0, "{line}");
    let files = sorted_files(&first);
    assert_eq!(files.len(), generated);
    assert!(files.iter().all(|(n, _)| n.starts_with("test_") && n.ends_with(".js")));

    assert_eq!(gen(&second, "9").status.code(), Some(0));
    assert_eq!(files, sorted_files(&second));
    assert_eq!(gen(&other, "10").status.code(), Some(0));
    assert_ne!(files, sorted_files(&other));

    if let Some(adapter) = common::acorn_adapter() {
        for (name, body) in &files {
            let src = String::from_utf8(body.clone()).unwrap();
            adapter.parse(&src).unwrap_or_else(|e| panic!("{name} does not parse: {e}\n{src}"));
        }
    }
}

#[test]
fn generate_with_markov_needs_no_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    ingest_toy(&store);
    let out = dir.path().join("out");
    let o = fraggen(&["generate", "--store", s(&store), "--out", s(&out), "--count", "10", "--suggester", "markov"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    // The default LSTM suggester has no checkpoint to load yet.
    let o = fraggen(&["generate", "--store", s(&store), "--out", s(&out), "--count", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

fn write_config(dir: &Path, engine: &Path, store: &Path, out: &Path) -> PathBuf {
    let cfg = serde_json::json!({
        "engine": { "binary": engine, "timeout_secs": 5.0 },
        "store": store,
        "suggester": "markov",
        "gen": { "f_max": 50, "k_top": 8 },
        "workers": 2,
        "budget": { "tests": 20 },
        "rng_seed": 3,
        "out": out,
    });
    let path = dir.join(format!("{}.json", out.file_name().unwrap().to_string_lossy()));
    fs::write(&path, serde_json::to_string_pretty(&cfg).unwrap()).unwrap();
    path
}

#[test]
fn fuzz_stats_and_replay() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    ingest_toy(&store);
    let segv = common::stub_engine(dir.path(), "segv", "echo 'fault in Parse' >&2\nkill -SEGV $$");
    let ok = common::stub_engine(dir.path(), "ok", "exit 0");
    let out = dir.path().join("campaign");
    let cfg = write_config(dir.path(), &segv, &store, &out);

    let o = fraggen(&["fuzz", "--config", s(&cfg)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.starts_with("executed 20 pass 0 runtime_error 0 crash 20 timeout 0 other 0 unique_crashes 1"), "{text}");

    let o = fraggen(&["stats", "--campaign", s(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let stats = stdout(&o);
    assert!(stats.starts_with("executed 20 "), "{stats}");
    let crash_line = stats.lines().find(|l| l.starts_with("crash ")).unwrap();
    assert!(crash_line.contains(" hits 20 "), "{crash_line}");
    let key = crash_line.split_whitespace().nth(1).unwrap();

    let crash = out.join("crashes").join(key);
    assert!(crash.is_dir());
    let o = fraggen(&["replay", "--crash", s(&crash), "--config", s(&cfg)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), format!("class crash key {key}\nreproduced yes\n"));

    let o = fraggen(&["replay", "--crash", s(&crash), "--engine", s(&ok)]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stdout(&o), "class pass\nreproduced no\n");

    let o = fraggen(&["stats", "--campaign", s(&dir.path().join("none"))]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn fuzz_is_reproducible_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store");
    ingest_toy(&store);
    let engine = common::stub_engine(dir.path(), "engine", "exit 0");
    let events = |name: &str| {
        let out = dir.path().join(name);
        let cfg = write_config(dir.path(), &engine, &store, &out);
        let o = fraggen(&["fuzz", "--config", s(&cfg)]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let mut tests: Vec<(u64, String)> = fs::read_to_string(out.join(fraggen::harness::EVENTS_FILE))
            .unwrap()
            .lines()
            .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
            .map(|e| (e["test"].as_u64().unwrap(), e["class"].as_str().unwrap().to_string()))
            .collect();
        tests.sort();
        tests
    };
    let a = events("r1");
    assert_eq!(a.iter().filter(|(_, c)| c == "pass").count(), 20);
    assert_eq!(a, events("r2"));
}
