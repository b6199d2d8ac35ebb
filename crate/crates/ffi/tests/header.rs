use std::path::PathBuf;
use std::process::Command;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn generate() -> String {
    let config = cbindgen::Config::from_file(root().join("cbindgen.toml")).unwrap();
    let mut out = Vec::new();
    cbindgen::Builder::new()
        .with_crate(root())
        .with_config(config)
        .generate()
        .expect("header generation")
        .write(&mut out);
    String::from_utf8(out).unwrap()
}

/// Set `GDSLAB_BLESS=1` to rewrite the checked-in header.
#[test]
fn header_is_current() {
    let path = root().join("include/gdslab.h");
    let fresh = generate();
    if std::env::var_os("GDSLAB_BLESS").is_some() {
        std::fs::write(&path, &fresh).unwrap();
    }
    let current = std::fs::read_to_string(&path).unwrap_or_default();
    assert_eq!(current, fresh, "include/gdslab.h is stale; rerun with GDSLAB_BLESS=1");
}

#[test]
fn header_compiles_as_c() {
    let Ok(probe) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping");
        return;
    };
    assert!(probe.status.success());
    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-x", "c"])
        .arg(root().join("include/gdslab.h"))
        .status()
        .unwrap();
    assert!(status.success());
}
