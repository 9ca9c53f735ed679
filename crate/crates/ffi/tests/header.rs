use std::path::{Path, PathBuf};
use std::process::Command;

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// `target/<profile>`, two levels above the test binary in `deps/`.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_declares_every_export() {
    let header = std::fs::read_to_string(manifest_dir().join("include/scherk.h")).unwrap();
    for name in [
        "scherk_status_message",
        "scherk_in_region",
        "scherk_heinz_bound",
        "scherk_surface_new",
        "scherk_surface_free",
        "scherk_surface_geometry",
        "scherk_surface_weierstrass",
        "scherk_surface_eval",
        "scherk_surface_curvature",
        "scherk_write_mesh",
        "typedef struct ScherkSurface ScherkSurface;",
        "SCHERK_STATUS_CONVERGENCE = 3",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn c_program_links_against_static_library() {
    let lib = profile_dir().join("libscherk_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let src = manifest_dir().join("tests/c/smoke.c");
    let include = manifest_dir().join("include");
    let status = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(&src)
        .arg(format!("-I{}", include.display()))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl"])
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(Path::new(&exe)).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "K = -4.934802200545"
    );
}
