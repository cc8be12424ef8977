use assert_cmd::Command;
use serde_json::Value;

fn bunncalc(args: &[&str]) -> (i32, String, String) {
    let out = Command::cargo_bin("bunncalc").unwrap().args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let (code, stdout, stderr) = bunncalc(&all);
    assert_eq!(code, 0, "{stderr}");
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["schema"], "bunncalc/1");
    v["result"].clone()
}

#[test]
fn hv_two_line_characters_cubic() {
    let r = json(&["hv", "--dims", "1,1", "--xi", "-1,-2", "--mu-inv", "3,0"]);
    let piece = &r["cohomology"]["pieces"][0];
    assert_eq!(piece["sigma_text"], "φ_1 ⊗ φ_2^2");
    assert_eq!(piece["shift"], -1);
    assert_eq!(piece["dual"], true);
}

#[test]
fn kottwitz_enum_rank_two_has_two_points() {
    let (code, stdout, _) = bunncalc(&["kottwitz", "enum", "-n", "2", "--mu", "1,0"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("|B(GL_2, [1, 0])| = 2"));
    let r = json(&["kottwitz", "enum", "-n", "2", "--mu", "1,0"]);
    assert_eq!(r["points"].as_array().unwrap().len(), 2);
    assert_eq!(r["hasse"], serde_json::json!([[1, 0]]));
}

#[test]
fn kottwitz_dot_output() {
    let (code, stdout, _) = bunncalc(&["kottwitz", "hasse", "-n", "3", "--mu", "1,0,0", "--dot", "-"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("digraph kottwitz {"));
    assert!(stdout.contains("[label=\"ν=(1/3,1/3,1/3) κ=1 d=0\"]"));
    assert_eq!(stdout.matches("->").count(), 2);

    let dir = std::env::temp_dir().join(format!("bunncalc-dot-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.dot");
    let (code, _, _) = bunncalc(&["kottwitz", "enum", "-n", "3", "--mu", "1,0,0", "--dot", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn chi_to_b_two_lines() {
    let r = json(&["chi-to-b", "--dims", "1,1", "--chi", "-1,-2"]);
    assert_eq!(r["bundle"], "O(-1)+O(-2)");
    assert_eq!(r["d"], 1);
}

#[test]
fn b_to_chis_three_lines() {
    let r = json(&["b-to-chis", "--dims", "1,1,1", "--bundle", "O(1)^2+O"]);
    assert_eq!(r["chis"], serde_json::json!([[0, 1, 1], [1, 0, 1], [1, 1, 0]]));
}

#[test]
fn weights_sigma_cubic_line() {
    let r = json(&["weights", "sigma", "--dims", "1,1", "--lambda", "3,0", "--chi", "2,1"]);
    assert_eq!(r["text"], "φ_1^2 ⊗ φ_2");
    assert_eq!(r["dim"], "1");
}

#[test]
fn hecke_cubic_stalk() {
    let r = json(&["hecke", "--dims", "1,1", "--lambda", "3,0", "--xi", "0,0", "--stalk", "O(2)+O(1)"]);
    let terms = r["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(r["total_dim"], "4");
    let same = json(&["spectral", "stalk", "--dims", "1,1", "--lambda", "3,0", "--xi", "0,0", "--b", "O(2)+O(1)"]);
    assert_eq!(same["terms"], r["terms"]);
}

#[test]
fn boyer_rank_ten_configuration() {
    let r = json(&[
        "boyer",
        "--b",
        "O(3/4)+O(1/3)+O^3",
        "--bprime",
        "O(3/2)+O(1/2)+O(1/3)+O^3",
        "--mu",
        "1,0,0,0,0,0,0,0,0,0",
        "--split",
        "4",
    ]);
    assert_eq!(r["direction"], "proposition");
    assert_eq!((r["rho_1"].as_i64(), r["rho_2"].as_i64(), r["d"].as_i64()), (Some(4), Some(3), Some(20)));
    assert_eq!(r["notes"].as_array().unwrap().len(), 1);
}

#[test]
fn boyer_rank_twelve_configuration() {
    let r = json(&[
        "boyer",
        "--b",
        "O(3/2)+O(1/2)^2+O(1/6)",
        "--bprime",
        "O(3/2)^2+O(1/2)+O(1/3)+O^3",
        "--mu",
        "1,1,0,0,0,0,0,0,0,0,0,0",
        "--split",
        "2",
    ]);
    assert_eq!(r["direction"], "corollary");
    assert_eq!(r["parabolic_proper"], true);
}

#[test]
fn shtuka_cubic_inverse() {
    let r = json(&["shtuka", "--dims", "1,1", "--xi", "-1,-2", "--mu-inv", "3,0", "--target", "O^2"]);
    let piece = &r["pieces"][0];
    assert_eq!(piece["sigma_text"], "φ_1 ⊗ φ_2^2");
    assert_eq!(piece["dual"], true);
}

#[test]
fn modif_rank_one_targets() {
    let r = json(&["modif", "-n", "4", "--n-prime", "2"]);
    assert_eq!(r["bundles"], serde_json::json!(["O^4", "O(1/2)+O+O(-1)", "O(1/2)+O(-1/2)"]));
}

#[test]
fn igusa_and_mantovan() {
    let r = json(&["igusa", "--dims", "2,1", "--mu", "1,0,0", "--b", "O(1/2)+O", "--mantovan"]);
    assert_eq!(r["igusa"]["pieces"].as_array().unwrap().len(), 1);
    assert_eq!(r["mantovan"].as_array().unwrap().len(), 3);
}

#[test]
fn spectral_verify_holds() {
    let (code, stdout, _) = bunncalc(&["spectral", "verify", "--dims", "2,1", "--lambda", "1,0,0"]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("holds\n"));
}

#[test]
fn ascii_output_is_ascii() {
    let (code, stdout, _) = bunncalc(&["hv", "--dims", "1,1", "--xi", "-1,-2", "--mu-inv", "3,0", "--ascii"]);
    assert_eq!(code, 0);
    assert!(stdout.is_ascii());
    assert!(stdout.contains("phi_1 (x) phi_2^2"));
}

#[test]
fn output_is_deterministic() {
    let args = ["kottwitz", "enum", "-n", "6", "--mu", "2,1,0,0,0,0", "--json"];
    assert_eq!(bunncalc(&args).1, bunncalc(&args).1);
    let args = ["hecke", "--dims", "2,1,1", "--lambda", "2,1,0,0", "--xi", "1,0,-1"];
    assert_eq!(bunncalc(&args).1, bunncalc(&args).1);
}

#[test]
fn exit_codes() {
    let (code, _, stderr) = bunncalc(&[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("Usage"));

    let (code, _, stderr) = bunncalc(&["bundle", "O(1/0)"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("position 4"));

    let (code, _, stderr) = bunncalc(&["weights", "mult", "--lambda", "0,1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("not dominant"));

    let (code, _, _) = bunncalc(&["bundle", "O", "--bogus"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = bunncalc(&["boyer", "--b", "O^2", "--bprime", "O^2", "--mu", "1,0", "--split", "1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("degree balance"));
}
