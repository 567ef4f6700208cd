#![allow(dead_code)]

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn workspace_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn default_config() -> PathBuf {
    workspace_root().join("configs/master-curve.default")
}

pub fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tds-entropy"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Relative path → file bytes for every file under `root`.
pub fn tree(root: &Path) -> BTreeMap<String, Vec<u8>> {
    let mut out = BTreeMap::new();
    let mut stack = vec![root.to_owned()];
    while let Some(dir) = stack.pop() {
        for entry in fs::read_dir(&dir).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path
                    .strip_prefix(root)
                    .unwrap()
                    .to_string_lossy()
                    .into_owned();
                out.insert(rel, fs::read(&path).unwrap());
            }
        }
    }
    out
}

pub const MANIFEST: &str = r#"attributes = ["firm", "brittle", "grainy", "creamy", "sticky", "melting", "watery", "spreadable"]
n_r = 1
"#;

pub const EVENTS: &str = "panelist,rep,sample,attribute,onset_s,swallow_s
p1,1,gel,firm,1.0,20.0
p1,1,gel,creamy,10.0,20.0
p2,1,gel,firm,2.0,18.0
p2,1,gel,grainy,9.0,18.0
p1,1,sausage,brittle,0.5,30.0
p2,1,sausage,melting,3.0,25.0
";

pub fn write_inputs(dir: &Path, events: &str) -> (PathBuf, PathBuf) {
    let manifest = dir.join("manifest.toml");
    let ev = dir.join("events.csv");
    fs::write(&manifest, MANIFEST).unwrap();
    fs::write(&ev, events).unwrap();
    (manifest, ev)
}
