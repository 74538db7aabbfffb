//! The generated C header must exist, export the full surface, and compile
//! as standalone C.

use std::path::Path;
use std::process::Command;

#[test]
fn generated_header_compiles_as_c() {
    let include_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let header = include_dir.join("qecaut.h");
    let text = std::fs::read_to_string(&header).expect("header generated by build.rs");
    for symbol in [
        "qec_group_build",
        "qec_group_parse",
        "qec_group_from_catalog",
        "qec_group_free",
        "qec_group_qubits",
        "qec_group_generator_count",
        "qec_group_logical_qubits",
        "qec_group_distance",
        "qec_group_contains",
        "qec_aut_order",
        "qec_check_perm",
        "qec_last_error",
        "QecStatus_Ok",
        "QecAutKind_Clifford",
        "QecMembership_UpToSign",
    ] {
        assert!(text.contains(symbol), "header missing {symbol}");
    }

    let snippet = std::env::temp_dir().join(format!("qecaut-header-{}.c", std::process::id()));
    std::fs::write(
        &snippet,
        "#include \"qecaut.h\"\n\
         int main(void) {\n\
           QecGroup *group = 0;\n\
           QecStatus status = qec_group_from_catalog(\"513\", &group);\n\
           uint64_t order = 0;\n\
           if (status == QecStatus_Ok) { qec_aut_order(group, QecAutKind_Strong, &order); }\n\
           qec_group_free(group);\n\
           return (int)status + (int)order;\n\
         }\n",
    )
    .unwrap();
    let cc = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"])
        .arg("-I")
        .arg(&include_dir)
        .arg(&snippet)
        .output();
    let _ = std::fs::remove_file(&snippet);
    match cc {
        Ok(output) => {
            assert!(
                output.status.success(),
                "cc rejected the header:\n{}",
                String::from_utf8_lossy(&output.stderr)
            );
        }
        Err(_) => eprintln!("cc not available; skipped the C syntax check"),
    }
}
