//! Compiles a small C translation unit against the generated header.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include "simperm.h"

int main(void) {
    SpPermutation *p = NULL;
    size_t vals[4] = {2, 4, 1, 3};
    bool simple = false;
    if (sp_permutation_new(vals, 4, &p) != SP_STATUS_OK) return 1;
    sp_is_simple(p, &simple);
    sp_permutation_free(p);
    return simple ? 0 : 2;
}
"#;

#[test]
fn header_compiles_as_c() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = dir.join("include/simperm.h");
    assert!(header.exists(), "header not generated");
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = tmp.join("header_check.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = match Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(dir.join("include"))
        .arg(&src)
        .status()
    {
        Ok(s) => s,
        Err(e) => {
            eprintln!("skipping: no C compiler ({cc}): {e}");
            return;
        }
    };
    assert!(status.success());
}
