//! Compiles and runs a small C program against the generated header and the
//! static library, proving the header matches the ABI.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "nmrel.h"

static const char *SET_A =
    "{\"kind\":\"nmset\",\"dimension\":1,\"universe\":[\"x1\",\"x2\"],"
    "\"entries\":["
    "{\"key\":\"x1\",\"t\":[0.5],\"i\":[0.25],\"f\":[0.25]},"
    "{\"key\":\"x2\",\"t\":[0.25],\"i\":[0.5],\"f\":[0.5]}]}";

int main(void) {
    NmrSet *a = NULL;
    if (nmr_set_parse(SET_A, &a) != NMR_STATUS_OK) return 1;

    NmrSet *comp = NULL;
    if (nmr_set_complement(a, &comp) != NMR_STATUS_OK) return 2;
    NmrSet *back = NULL;
    if (nmr_set_complement(comp, &back) != NMR_STATUS_OK) return 3;
    bool equal = false;
    if (nmr_set_equals(a, back, &equal) != NMR_STATUS_OK || !equal) return 4;

    NmrRelation *product = NULL;
    if (nmr_set_product(a, a, &product) != NMR_STATUS_OK) return 5;
    bool symmetric = false;
    if (nmr_relation_has_property(product, NMR_PROPERTY_SYMMETRIC, &symmetric)
            != NMR_STATUS_OK || !symmetric)
        return 6;

    char *text = NULL;
    if (nmr_relation_serialize(product, &text) != NMR_STATUS_OK) return 7;
    if (strstr(text, "\"nmrelation\"") == NULL) return 8;
    nmr_string_free(text);

    NmrSet *bad = NULL;
    if (nmr_set_parse("{broken", &bad) != NMR_STATUS_PARSE_ERROR) return 9;
    char message[128];
    if (nmr_last_error_message(message, sizeof message) == 0) return 10;

    nmr_relation_free(product);
    nmr_set_free(back);
    nmr_set_free(comp);
    nmr_set_free(a);
    puts("c smoke ok");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    // the staticlib lands next to this test binary (target/.../deps) or one
    // level up, depending on how cargo was invoked
    let deps_dir = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let lib_dir = [deps_dir.clone(), deps_dir.parent().unwrap().to_path_buf()]
        .into_iter()
        .find(|dir| dir.join("libnmrel_ffi.a").exists())
        .expect("libnmrel_ffi.a not found near the test binary");
    let lib = lib_dir.join("libnmrel_ffi.a");

    let include_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let work = lib_dir.join("c_smoke");
    std::fs::create_dir_all(&work).unwrap();
    let source = work.join("smoke.c");
    let binary = work.join("smoke");
    std::fs::write(&source, PROGRAM).unwrap();

    let compile = Command::new("cc")
        .arg(&source)
        .arg("-I")
        .arg(&include_dir)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&binary)
        .output()
        .unwrap();
    assert!(
        compile.status.success(),
        "cc failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().unwrap();
    assert!(
        run.status.success(),
        "smoke binary exited {:?}: {}",
        run.status.code(),
        String::from_utf8_lossy(&run.stdout)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "c smoke ok");
}
