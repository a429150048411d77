//! Compiles a small C program against the generated header and the static
//! library, then runs it. Skipped when no C compiler is on PATH.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "genus_ffi.h"

int main(void) {
    GenusDist *d = NULL;
    if (genus_family_distribution(3, 9, GENUS_METHOD_AUTO, &d) != GENUS_STATUS_OK) return 10;
    char *c = NULL;
    if (genus_dist_coeff(d, 4, &c) != GENUS_STATUS_OK) return 11;
    int ok = strcmp(c, "69632") == 0;
    genus_string_free(c);
    genus_dist_free(d);
    if (!ok) return 12;

    if (genus_oracle_named(GENUS_GRAPH_R, 2, 1000, &d) != GENUS_STATUS_UNSUPPORTED) return 13;
    if (strlen(genus_last_error()) == 0) return 14;
    puts("ok");
    return 0;
}
"#;

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let lib = target_dir().join("libgenus_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    let bin = dir.path().join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();

    let status = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-o"])
        .arg(&bin)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");

    let out = Command::new(&bin).output().unwrap();
    assert!(
        out.status.success(),
        "smoke program exited with {:?}",
        out.status.code()
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
