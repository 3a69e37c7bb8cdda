use std::io::Write;
use std::process::Command;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pavingehr")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("pavingehr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::File::create(&path).unwrap().write_all(contents.as_bytes()).unwrap();
    path
}

#[test]
fn plane_polynomial_json() {
    let (code, out, _) = bin(&["ehrhart", "plane", "--q", "2", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""coeffs":["1/1","21/5","343/45","63/8","91/18","77/40","29/90"]"#));
}

#[test]
fn oracle_row() {
    let (code, out, _) = bin(&["oracle", "panhandle", "--r", "2", "--s", "2", "--n", "4", "--t", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().nth(1), Some("1,5"));
}

#[test]
fn big_conjecture_certified() {
    let (code, out, _) = bin(&["verify", "big-conjecture", "--max-s", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""status":"certified""#));
    assert!(out.contains(r#""tuples_checked":"742""#));
}

#[test]
fn jobs_do_not_change_output() {
    for args in [
        vec!["verify", "weighted-lah", "--n-max", "6"],
        vec!["sweep", "--n-max", "7"],
        vec!["verify", "phi-positive", "--max-s", "6"],
    ] {
        let one: Vec<&str> = ["--jobs", "1"].iter().chain(&args).copied().collect();
        let four: Vec<&str> = ["--jobs", "4"].iter().chain(&args).copied().collect();
        let a = bin(&one);
        assert_eq!(a.0, 0, "{args:?}");
        assert_eq!(a, bin(&four), "{args:?}");
        assert_eq!(a, bin(&args), "{args:?}");
    }
}

#[test]
fn files_profile_matroid_steiner() {
    let profile = temp_file("fano-profile.json", r#"{"n":7,"r":3,"hyperplanes_by_size":{"3":7}}"#);
    let (code, out, _) = bin(&["volume", "paving", "--profile", profile.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""volume":"232""#));

    let fano = paving_ehrhart::designs::fano_plane();
    let steiner = temp_file("fano.json", &fano.to_json_value().to_string());
    let (code, out, _) = bin(&["ehrhart", "steiner", "--steiner", steiner.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""formula_only":false"#));

    use paving_ehrhart::matroid::MatroidJson;
    let m = paving_ehrhart::designs::steiner_matroid(&fano).unwrap();
    let mfile = temp_file("fano-matroid.json", &m.to_json_value().to_string());
    let (code, via_matroid, _) = bin(&["ehrhart", "paving", "--matroid", mfile.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, 0);
    let (_, via_plane, _) = bin(&["ehrhart", "plane", "--q", "2", "--format", "csv"]);
    assert_eq!(via_matroid, via_plane);
    let (code, out, _) = bin(&["oracle", "matroid", "--matroid", mfile.to_str().unwrap(), "--t", "1"]);
    assert_eq!((code, out.as_str()), (0, "t,count\n1,28\n"));
}

#[test]
fn malformed_inputs_exit_2_naming_field() {
    let bad = temp_file("bad-profile.json", r#"{"n":7,"r":3,"hyperplanes_by_size":{"3":"many"}}"#);
    let (code, out, err) = bin(&["ehrhart", "paving", "--profile", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("hyperplanes_by_size.3"), "{err}");

    let bad = temp_file("bad-matroid.json", r#"{"n":4,"r":2,"bases":[[1,2],[3]]}"#);
    let (code, _, err) = bin(&["ehrhart", "paving", "--matroid", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("bases[1]"), "{err}");

    let bad = temp_file("bad-steiner.json", r#"{"t":2,"k":3,"n":7,"blocks":[[1,2,3],[1,2,4]]}"#);
    let (code, _, err) = bin(&["volume", "steiner", "--steiner", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("blocks"), "{err}");

    assert_eq!(bin(&["ehrhart", "panhandle", "--r", "3", "--s", "2", "--n", "5"]).0, 2);
    assert_eq!(bin(&["volume", "steiner", "--t", "2", "--k", "3", "--n", "8"]).0, 2);
    assert_eq!(bin(&["frobnicate"]).0, 2);
}

#[test]
fn sweep_csv_header_and_rows() {
    let (code, out, _) = bin(&["sweep", "--n-max", "4"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "r,s,n,bases,volume,ehrhart");
    assert_eq!(lines.len(), 1 + paving_ehrhart::matroid::PanhandleParams::all_up_to(4).len());
    assert!(lines.contains(&"2,2,4,5,2,1/1 13/6 3/2 1/3"));
}
