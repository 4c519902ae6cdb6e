use std::path::PathBuf;
use std::process::Command;

use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_matroid-lab")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(TempDir::new().unwrap())
    }

    fn put(&self, name: &str, text: &str) -> String {
        let p: PathBuf = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }
}

const U23_CIRCUITS: &str = "matroid 3\nelements: a b c\ncircuits:\na b c\n";
const LADDER: &str = "sgraph\nvertices:\ntail a\ntail b\ncross a b 0 0 1 0\n";

#[test]
fn verify_passes_and_fails_with_exit_codes() {
    let f = Files::new();
    let good = f.put("good", U23_CIRCUITS);
    let r = run(&["verify", &good]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, "report circuits\nelements: a b c\nC1 pass\nC2 pass\nC3 pass\nCM pass\n");

    // {a,b} and {b,c} with nothing inside {a,c}: elimination fails
    let bad = f.put("bad", "matroid 3\nelements: a b c\ncircuits:\na b\nb c\n");
    let r = run(&["verify", &bad]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("C3 fail witness: {a,b} {b} {b,c}"), "{}", r.stdout);

    let r = run(&["verify", "--classic", &good]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("CE pass"));
}

#[test]
fn verify_rejects_wrong_system() {
    let f = Files::new();
    let good = f.put("good", U23_CIRCUITS);
    let r = run(&["verify", "--system", "bases", &good]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not bases"), "{}", r.stderr);
}

#[test]
fn parse_errors_carry_file_line_and_column() {
    let f = Files::new();
    let bad = f.put("bad", "matroid 2\nelements: a b\nbases:\na z\n");
    let r = run(&["verify", &bad]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with(&format!("error: {bad}:4:3: ")), "{}", r.stderr);
    assert!(r.stdout.is_empty());
}

#[test]
fn missing_file_is_an_input_error() {
    let r = run(&["verify", "/nonexistent/matroid.txt"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("/nonexistent/matroid.txt"));
}

#[test]
fn convert_through_every_system_and_back() {
    let f = Files::new();
    let mut path = f.put("m", U23_CIRCUITS);
    for (i, to) in ["bases", "closure", "rank", "independents", "circuits"].into_iter().enumerate() {
        let r = run(&["convert", "--to", to, &path]);
        assert_eq!(r.code, 0, "{to}: {}", r.stderr);
        path = f.put(&format!("step{i}"), &r.stdout);
    }
    assert_eq!(std::fs::read_to_string(path).unwrap(), U23_CIRCUITS);
}

#[test]
fn convert_refuses_a_non_matroid() {
    let f = Files::new();
    let bad = f.put("bad", "matroid 2\nelements: a b\nindependents:\na\n");
    let r = run(&["convert", "--to", "bases", &bad]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("I1 fail"), "{}", r.stderr);
}

#[test]
fn dual_and_minor() {
    let f = Files::new();
    let m = f.put("m", U23_CIRCUITS);
    let r = run(&["dual", "--to", "bases", &m]);
    assert_eq!(r.stdout, "matroid 3\nelements: a b c\nbases:\na\nb\nc\n");
    let r = run(&["minor", "--contract", "a", "--to", "circuits", &m]);
    assert_eq!(r.stdout, "matroid 2\nelements: b c\ncircuits:\nb c\n");
    let r = run(&["minor", "--delete", "a,b", "--to", "bases", &m]);
    assert_eq!(r.stdout, "matroid 1\nelements: c\nbases:\nc\n");
    let r = run(&["minor", "--delete", "a", "--contract", "a", &m]);
    assert_eq!(r.code, 2);
}

#[test]
fn graph_commands_on_k4() {
    let f = Files::new();
    let mut text = String::from("graph\nvertices: 1 2 3 4\n");
    for (k, (u, v)) in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)].into_iter().enumerate() {
        text += &format!("edge e{k} {u} {v}\n");
    }
    let g = f.put("k4", &text);
    let r = run(&["graph", "bonds", &g]);
    // three vertex stars and three 4-edge cuts
    assert_eq!(r.stdout.lines().count(), 7);
    let r = run(&["graph", "cycle", &g]);
    assert_eq!(r.stdout.lines().filter(|l| !l.contains(':') && !l.starts_with("matroid")).count(), 7);
    let r = run(&["graph", "theorem1", &g]);
    assert_eq!(r.code, 0);
    let r = run(&["graph", "thin", &g]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("on all 64 edge sets: true"));
}

#[test]
fn sgraph_queries_on_the_ladder() {
    let f = Files::new();
    let g = f.put("ladder", LADDER);
    let circle = f.put("circle", "finite: @cross:0:0\nword rail:a 0 - 1\nword rail:b 0 - 1\n");
    let comb = f.put("comb", "word rail:a 0 - 1\nword cross:0 0 - 1\n");

    let expect = [("fc", 1), ("b", 1), ("fb", 1), ("c", 0), ("ac", 0)];
    for (kind, code) in expect {
        let r = run(&["sgraph", "circuit", "--kind", kind, &g, &circle]);
        assert_eq!(r.code, code, "{kind}: {}{}", r.stdout, r.stderr);
    }
    assert_eq!(run(&["sgraph", "circle", &g, &circle]).code, 0);
    assert_eq!(run(&["sgraph", "tree", &g, &comb]).code, 0);
    assert_eq!(run(&["sgraph", "thin", &g, &comb]).code, 0);
    assert_eq!(run(&["sgraph", "thin", &g, &circle]).code, 1);
    assert_eq!(run(&["sgraph", "bean", &g]).code, 1);
    assert_eq!(run(&["sgraph", "ends", &g]).stdout, "end 0: tails a b dominated-by -\n");
    assert_eq!(run(&["sgraph", "show", &g]).stdout, LADDER);
}

#[test]
fn sgraph_extend_produces_a_tree() {
    let f = Files::new();
    let g = f.put("ladder", LADDER);
    let ray = f.put("ray", "word rail:a 0 - 1\n");
    let r = run(&["sgraph", "extend", &g, &ray]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let t = f.put("tree", &r.stdout);
    assert_eq!(run(&["sgraph", "tree", &g, &t]).code, 0);
}

#[test]
fn edge_set_errors_point_into_the_set_file() {
    let f = Files::new();
    let g = f.put("ladder", LADDER);
    let bad = f.put("bad", "word rail:c 0 - 1\n");
    let r = run(&["sgraph", "circle", &g, &bad]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains(&format!("{bad}:1:6")), "{}", r.stderr);
}

#[test]
fn bean_graph_refuses_mac_duality() {
    let f = Files::new();
    let g = f.put(
        "bean",
        "sgraph\nvertices: u\ntail x\ntail y\ncross x y 0 0 1 -\npatch + z x:0 y:0\ncoretail u x 0 1 0\n",
    );
    assert_eq!(run(&["sgraph", "bean", &g]).code, 0);
    let r = run(&["sgraph", "duality", &g]);
    assert_eq!(r.code, 2, "{}", r.stdout);
}

#[test]
fn thin_sum_queries() {
    let f = Files::new();
    let fam = f.put("fam", "thinfam p=3 dim=3\nvec x 0:1\nvec y 1:1\nvec z 0:1 1:2\nvec w 2:2\n");
    let r = run(&["thinsum", "independent", &fam, "--members", "x,y,w"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "independent\n"));
    let r = run(&["thinsum", "independent", &fam, "--members", "x,y,z"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("dependent: "));
    let r = run(&["thinsum", "span", &fam, "--target", "z", "--members", "x,y"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "z = 1*x + 2*y\n"));
    let r = run(&["thinsum", "span", &fam, "--target", "w", "--members", "x,y"]);
    assert_eq!(r.code, 1);
    let r = run(&["thinsum", "extend", &fam, "--base", "z"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout.split_whitespace().count(), 3);
    let r = run(&["thinsum", "verify", &fam]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("report independence\n"));
    let r = run(&["thinsum", "extend", &fam, "--base", "x,y,z"]);
    assert_eq!(r.code, 2);
}

#[test]
fn thin_sweep_and_enumeration_are_mode_independent() {
    let a = run(&["thinsum", "sweep", "--count", "30", "--seed", "7"]);
    let b = run(&["thinsum", "sweep", "--count", "30", "--seed", "7", "--sequential"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["enumerate", "3", "--list", "--cross-check"]);
    let b = run(&["enumerate", "3", "--list", "--cross-check", "--sequential"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.ends_with("matroids on 3 elements: 16\ndown-closed families passing the independence axioms: 16\n"));
}

#[test]
fn enumeration_above_the_bound_is_refused() {
    let r = run(&["enumerate", "9"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("refused"), "{}", r.stderr);
}

#[test]
fn augmentation_demo_output() {
    let r = run(&["thinsum", "demo", "--n", "6"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("readings agree on augmentation: false"), "{}", r.stdout);
    assert_eq!(run(&["thinsum", "demo", "--n", "2"]).code, 2);
}

#[test]
fn catalog_runs_clean() {
    let r = run(&["catalog", "list"]);
    assert_eq!(r.stdout.lines().count(), 7);
    let r = run(&["catalog", "run", "all"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.lines().all(|l| l.ends_with(" pass")));
    let r = run(&["catalog", "run", "ladder"]);
    assert!(r.stdout.lines().all(|l| l.starts_with("ladder ")));
    assert_eq!(run(&["catalog", "run", "nope"]).code, 2);
}
