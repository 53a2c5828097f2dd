use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_tca-lab"));
    c.env_remove("TCA_LAB_BUDGET").env_remove("SOURCE_DATE_EPOCH");
    c
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String) {
    let out: Output = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap() + &String::from_utf8(out.stderr).unwrap())
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text.split("--- json\n").nth(1).expect("json block")).unwrap()
}

#[test]
fn decompose_examples() {
    let (code, out) = run(&["decompose", "--flavor", "symmetric", "--degree", "2", "--rank", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("table flavor=symmetric n=4 d=2 irreps=\"{(2,2):1, (4):1}\""), "{out}");
    let (code, out) = run(&["decompose", "--flavor", "generic", "--degree", "1", "--rank", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("irreps={((1),(1)):1}"));
    let (code, out) = run(&["decompose", "--flavor", "symmetric", "--degree", "0", "--rank", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("d=0 irreps={():1}"));
}

#[test]
fn header_echoes_config_and_seed() {
    let (_, out) = run(&["decompose", "--degree", "1", "--rank", "2", "--seed", "7"]);
    assert!(out.starts_with("# tca-lab "));
    assert!(out.contains("# config: rank=2 degree=1 budget=1000000 seed=7\n"));
    assert_eq!(json(&out)["config"]["seed"], "7");
    assert!(!out.contains("# timestamp"));
    let out = bin().args(["decompose", "--degree", "0"]).env("SOURCE_DATE_EPOCH", "0").output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("# timestamp: 0\n"));
}

#[test]
fn poset_compare_and_antichain() {
    let (code, out) = run(&["poset", "compare", "{(1,2)}", "{(2,3)}"]);
    assert_eq!(code, 0);
    assert!(out.contains("holds=true"), "{out}");
    let (code, out) = run(&["poset", "compare", "{(2,3)}", "{(1,2)}"]);
    assert_eq!(code, 0);
    assert!(out.contains("holds=false"));
    let (code, out) = run(&["poset", "antichain", "--edges", "2", "--rank", "6", "--order", "full"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("candidates=45"));
    assert!(out.contains("check greedy-within-width PASS"));
    let (code, _) = run(&["poset", "compare", "{(1,1)}", "{(2,3)}"]);
    assert_eq!(code, 4);
}

#[test]
fn verify_example_and_budget() {
    let (code, out) = run(&["poset", "verify-example", "--nrange", "3..5"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.matches("check incomparable/").count(), 3);
    assert_eq!(out.matches("check chain/").count(), 3);
    let (code, out) = run(&["poset", "verify-example", "--budget", "10"]);
    assert_eq!(code, 3);
    assert!(out.contains("verdict INCONCLUSIVE"));
    let out = bin().args(["poset", "verify-example"]).env("TCA_LAB_BUDGET", "10").output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    // the flag wins over the environment
    let out = bin().args(["poset", "verify-example", "--budget", "1000000"]).env("TCA_LAB_BUDGET", "10").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["poset", "verify-example", "--nrange", "2..4"]).0, 4);
}

#[test]
fn ideal_lattice_table() {
    let (code, out) = run(&["ideal", "lattice", "--flavor", "symmetric", "--rank", "6", "--degree", "2"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().filter(|l| l.starts_with("lattice flavor")).collect();
    assert_eq!(
        rows,
        [
            "lattice flavor=symmetric lambda=() row=1111",
            "lattice flavor=symmetric lambda=(1) row=0111",
            "lattice flavor=symmetric lambda=(2) row=0010",
            "lattice flavor=symmetric lambda=(1,1) row=0001",
        ]
    );
    let (code, out) = run(&["ideal", "lattice", "--input", &data("det2.ideal"), "--degree", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("support labels=(1,1)\n"), "{out}");
}

#[test]
fn ideal_initial_set_and_closure() {
    let (code, out) = run(&["ideal", "initial-set", "--input", &data("det2.ideal")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("generator f=\"x[1,1] * x[2,2] - x[1,2]^2\""));
    // the square of x11 generates S_(4); its orbit is move-closed up to 3 edges
    let (code, out) = run(&["ideal", "move-closure", "--input", &data("square_n8.ideal"), "--degree", "3"]);
    assert_eq!(code, 0, "{out}");
    // and not at 4 edges on 8 vertices
    let (code, out) = run(&["ideal", "move-closure", "--input", &data("square_n8.ideal")]);
    assert_eq!(code, 2);
    assert!(out.contains("violation from={(4,5),(1,6),(2,7),(3,8)} move=nested(2,7)(4,5) to={(2,5),(1,6),(4,7),(3,8)}"));
    assert_eq!(run(&["ideal", "move-closure"]).0, 4);
}

#[test]
fn malformed_input_is_exit_4() {
    let (code, out) = run(&["ideal", "initial-set", "--input", &data("bad_syntax.ideal")]);
    assert_eq!(code, 4);
    assert!(out.contains("line 3, column 18"), "{out}");
    assert_eq!(run(&["ideal", "initial-set", "--input", "/nonexistent.ideal"]).0, 4);
    assert_eq!(run(&["decompose", "--flavor", "hermitian"]).0, 4);
    assert_eq!(run(&["decompose", "--rank", "0"]).0, 4);
}

#[test]
fn tor_examples() {
    let (code, out) = run(&["tor", "--flavor", "generic", "--rank-bound", "1", "--pmax", "2", "--degree", "4", "--nrange", "2..4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("check stabilization PASS"));
    let (code, out) = run(&["tor", "--flavor", "symmetric", "--rank-bound", "0", "--nrange", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("tor n=2 p=2 q=2 irreps={(3,1):1}"));
    let (code, out) = run(&["tor", "--flavor", "symmetric", "--rank-bound", "3", "--nrange", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("tor ")).count(), 1);
    let (code, out) = run(&["tor", "--input", &data("det2.ideal"), "--pmax", "3", "--degree", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("tor n=2 p=1 q=2 irreps={(2,2):1}"));
    let (code, out) = run(&["tor", "--degree", "17"]);
    assert_eq!(code, 3, "{out}");
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("tca-lab-out-{}.txt", std::process::id()));
    let (code, out) = run(&["decompose", "--degree", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.ends_with("}\n"));
    assert_eq!(json(&written)["verdict"], "PASS");
}
