//! End-to-end checks of the `chowgen` binary: flag handling, output bytes,
//! exit codes, and sweep parallelism not affecting output.

use std::process::{Command, Output};

fn chowgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chowgen"))
        .args(args)
        .env_remove("CHOWGEN_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn present_gf_text_lists_generators() {
    let out = chowgen(&["present", "--r", "1", "--form", "gf", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("presentation r=1 form=gf"));
    assert!(text.contains("rho_2,2 = 3T^2 + c2"));
    assert!(text.contains("amb*rho_2,0 = T^3 + c2T + c3"));
}

#[test]
fn present_closed_json_has_eight_generators() {
    let out = chowgen(&[
        "present", "--r", "1", "--form", "closed", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["form"], "closed");
    assert_eq!(doc["generators"].as_array().unwrap().len(), 8);
    // Coefficients are decimal strings.
    assert!(doc["generators"][0]["terms"][0]["coeff"].is_string());
}

#[test]
fn present_both_json_is_an_array() {
    let out = chowgen(&["present", "--r", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let forms: Vec<&str> = doc
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["form"].as_str().unwrap())
        .collect();
    assert_eq!(forms, ["closed", "gf"]);
}

#[test]
fn present_rejects_r_zero() {
    let out = chowgen(&["present", "--r", "0", "--form", "gf"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flags_are_usage_errors() {
    assert_eq!(chowgen(&["present"]).status.code(), Some(2));
    assert_eq!(chowgen(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        chowgen(&["series", "--which", "R3", "--max-degree", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_small_sweep_passes() {
    let out = chowgen(&["verify", "--r-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("claim_Z1 r=1 PASS"));
    assert!(text.contains("claim_Z2 r=1 PASS"));
    assert!(text.contains("ambient_redundancy PASS"));
    assert!(text.contains("complement_class PASS"));
    assert!(text.contains("resummation_A1,0 PASS"));
    assert!(text.contains("resummation_A2,2 PASS"));
}

#[test]
fn verify_rejects_r_max_zero() {
    assert_eq!(chowgen(&["verify", "--r-max", "0"]).status.code(), Some(2));
}

#[test]
fn verify_jobs_do_not_change_bytes() {
    let serial = chowgen(&["verify", "--r-max", "4", "--jobs", "1"]);
    let parallel = chowgen(&["verify", "--r-max", "4", "--jobs", "4"]);
    assert_eq!(serial.status.code(), Some(0));
    assert_eq!(serial.stdout, parallel.stdout);

    let via_env = Command::new(env!("CARGO_BIN_EXE_chowgen"))
        .args(["verify", "--r-max", "4"])
        .env("CHOWGEN_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(serial.stdout, via_env.stdout);
}

#[test]
fn series_r1_text() {
    let out = chowgen(&["series", "--which", "R1", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "deg0: 2\ndeg1: 4T\ndeg2: 6T^2 - 2c2\n");
}

#[test]
fn series_r2_text() {
    let out = chowgen(&["series", "--which", "R2", "--max-degree", "0"]);
    assert_eq!(stdout_of(&out), "deg0: 1\n");
    let out = chowgen(&["series", "--which", "R2", "--max-degree", "4"]);
    let text = stdout_of(&out);
    assert!(text.contains("deg4: 6T^4 + 3c2T^2 + c3T + c2^2"));
}

#[test]
fn series_json_shape() {
    let out = chowgen(&[
        "series",
        "--which",
        "R2",
        "--max-degree",
        "3",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc["which"], "R2");
    assert_eq!(doc["components"].as_array().unwrap().len(), 4);
}

#[test]
fn table_text_and_exit_code() {
    let out = chowgen(&["table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("ambient: 2c3, (T^3 + c2T + c3)^2"));
    assert!(text.contains("alpha_2,2^3 = T^8 - 6c2T^6 + c2^2T^4 + c2c3^2"));
    assert!(text.contains("rho_2,8 = 15T^8 + 5c2T^6 + c3T^5 + 10c2^2T^4"));
}

#[test]
fn table_json_blocks() {
    let out = chowgen(&["table", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    for key in ["r=1", "r=2", "r=3"] {
        assert!(doc.get(key).is_some(), "missing block {key}");
    }
    assert_eq!(doc["r=2"]["z2"][1]["left_label"], "alpha_2,1^2");
}

#[test]
fn table_latex_mirrors_tabular_layout() {
    let out = chowgen(&["table", "--format", "latex"]);
    let text = stdout_of(&out);
    assert!(text.contains("\\begin{tabular}{|l|l|}"));
    assert!(text.contains("Ambient relations: $2c_3, (T^3+c_2T+c_3)^{2}$"));
    assert!(text.contains("$\\alpha_{1,0}^{1}=4T$ & $\\rho_{1,1}=4T$"));
    assert!(text.contains("Classes from $Z_2$"));
}

#[test]
fn present_latex_renders_names() {
    let out = chowgen(&["present", "--r", "1", "--form", "gf", "--format", "latex"]);
    let text = stdout_of(&out);
    assert!(text.contains("\\rho_{1,2} &= 6T^{2} - 2c_2"));
    assert!(text.contains("(T^3+c_2T+c_3)\\rho_{2,0}"));
}

#[test]
fn help_exits_zero() {
    assert_eq!(chowgen(&["--help"]).status.code(), Some(0));
}
