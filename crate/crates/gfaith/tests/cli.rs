mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use common::*;
use gfaith::cli::{run, Outcome};
use gfaith::format::{write_graph, write_model};
use gfaith::json;
use gfaith_core::faithfulness::{decide_graphical, is_faithful, is_markov, is_minimally_markov, is_pairwise_markov};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use tempfile::TempDir;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn gfaith(args: &[&str]) -> Outcome {
    run(std::iter::once("gfaith").chain(args.iter().copied()))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn binary(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gfaith")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn transitivity_model_is_not_graphical() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.ci", "a _||_ c\na _||_ c | b\n");
    let (code, out) = binary(&["--json", "graphical", "--model", s(&m)]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["graphical"], false);
    assert_eq!(v["failure"]["property"], "singleton-transitivity");
}

#[test]
fn collider_is_not_separated_by_its_child() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.graph", "a -> c\nb -> c\n");
    let (code, out) = binary(&["separate", "--graph", s(&g), "--a", "a", "--b", "b", "--given", "c"]);
    assert_eq!(code, 1);
    assert!(out.contains("not separated"));
    assert_eq!(gfaith(&["separate", "--graph", s(&g), "--a", "a", "--b", "b"]).code, 0);
}

#[test]
fn gaussian_counterexample_prints_its_statement() {
    let dir = TempDir::new().unwrap();
    let cov = write(&dir, "sigma.csv", "1,2,3,4\n3,2,1,2\n2,4,2,1\n1,2,7,1\n2,1,1,6\n");
    let (code, out) = binary(&["gaussian", "--cov", s(&cov), "--print-model"]);
    assert_eq!(code, 0);
    assert!(out.contains("1 _||_ 3 | 2"), "{out}");
    assert!(out.contains("concentration dense: yes"));
    let full = write(&dir, "k4.graph", "1 -- 2\n1 -- 3\n1 -- 4\n2 -- 3\n2 -- 4\n3 -- 4\n");
    assert_eq!(gfaith(&["gaussian", "--cov", s(&cov), "--graph", s(&full)]).code, 1);
}

#[test]
fn verbs_match_library_calls() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let dir = TempDir::new().unwrap();
    for round in 0..25 {
        let h = random_ang(&mut rng, 4, 0.5);
        let g = random_ang(&mut rng, 4, 0.6);
        let j = h.induced_model().unwrap();
        let gp = write(&dir, &format!("g{round}.graph"), &write_graph(&g));
        let mp = write(&dir, &format!("m{round}.ci"), &write_model(&j));

        let o = gfaith(&["faithful", "--model", s(&mp), "--graph", s(&gp)]);
        assert_eq!(o.code == 0, is_faithful(&j, &g).unwrap());
        for (kind, lib) in [
            ("global", is_markov(&j, &g).unwrap()),
            ("pairwise", is_pairwise_markov(&j, &g).unwrap()),
            ("minimal", is_minimally_markov(&j, &g).unwrap()),
        ] {
            let o = gfaith(&["markov", "--model", s(&mp), "--graph", s(&gp), "--kind", kind]);
            assert_eq!(o.code == 0, lib, "{kind}");
        }

        let o = gfaith(&["--json", "graphical", "--model", s(&mp)]);
        let lib = decide_graphical(&j).unwrap();
        let cli: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(cli, json::verdict(j.ground(), &lib));
        assert_eq!(o.code, if lib.graphical { 0 } else { 1 });

        let o = gfaith(&["--json", "model", "--graph", s(&gp)]);
        let cli: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(cli, json::model(&g.induced_model().unwrap()));
    }
}

#[test]
fn exit_codes_ignore_output_format() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.graph", "a -> c\nb -> c\nc -- d\n");
    let m = write(&dir, "m.ci", "a _||_ c\na _||_ c | b\n");
    let cov = write(&dir, "s.csv", "x,y\n2,1\n1,2\n");
    let bad = write(&dir, "bad.ci", "a _||_\n");
    let cases: Vec<Vec<&str>> = vec![
        vec!["classify", "--graph", s(&g)],
        vec!["classify", "--graph", s(&g), "--require", "dag"],
        vec!["separate", "--graph", s(&g), "--a", "a", "--b", "b", "--given", "d"],
        vec!["separate", "--graph", s(&g), "--a", "a", "--b", "b"],
        vec!["model", "--graph", s(&g)],
        vec!["axioms", "--model", s(&m)],
        vec!["axioms", "--model", s(&m), "--property", "semi-graphoid"],
        vec!["stability", "--model", s(&m)],
        vec!["graphical", "--model", s(&m)],
        vec!["graphical", "--model", s(&m), "--class-filter", "ug"],
        vec!["gaussian", "--cov", s(&cov), "--decide"],
        vec!["alpha", "--model", s(&m), "--marginalize", "b", "--decide"],
        vec!["axioms", "--model", s(&bad)],
    ];
    let mut codes = Vec::new();
    for args in &cases {
        let plain = gfaith(args);
        let mut with = vec!["--json"];
        with.extend(args);
        let json = gfaith(&with);
        assert_eq!(plain.code, json.code, "{args:?}");
        if json.code != 2 {
            serde_json::from_str::<Value>(&json.stdout).unwrap();
        }
        codes.push(plain.code);
    }
    assert_eq!(codes, [0, 1, 1, 0, 0, 1, 0, 0, 1, 1, 0, 0, 2]);
}

#[test]
fn input_errors_exit_two_with_locations() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.graph", "a -> b\na -- b\n");
    let o = gfaith(&["classify", "--graph", s(&g)]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 2, column 3"), "{}", o.stderr);

    let m = write(&dir, "m.ci", "nodes a b\na _||_ z\n");
    let o = gfaith(&["axioms", "--model", s(&m)]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 2, column 8"), "{}", o.stderr);

    assert_eq!(gfaith(&["classify"]).code, 2);
    assert_eq!(gfaith(&["frobnicate"]).code, 2);
    assert_eq!(gfaith(&["--cap", "13", "axioms", "--model", s(&m)]).code, 2);
    assert_eq!(gfaith(&["classify", "--graph", "/nonexistent/g.graph"]).code, 2);
    let h = gfaith(&["--help"]);
    assert_eq!(h.code, 0);
    assert!(h.stdout.contains("graphical"));
}

#[test]
fn models_are_aligned_to_the_graph() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.graph", "a -> c\nb -> c\n");
    // same model, nodes listed in another order
    let m = write(&dir, "m.ci", "nodes c b a\nb _||_ a\n");
    assert_eq!(gfaith(&["faithful", "--model", s(&m), "--graph", s(&g)]).code, 0);
    let p = write(&dir, "p.pre", "class c\nclass b\nclass a\norder c < a\norder c < b\n");
    assert_eq!(gfaith(&["stability", "--model", s(&m), "--preorder", s(&p)]).code, 0);
    assert_eq!(gfaith(&["graphical", "--model", s(&m), "--preorder", s(&p)]).code, 0);
    // arrows point down the order, so the reversed order is not compatible
    let up = write(&dir, "up.pre", "class c\nclass b\nclass a\norder a < c\norder b < c\n");
    assert_eq!(gfaith(&["stability", "--model", s(&m), "--preorder", s(&up)]).code, 1);
    assert_eq!(gfaith(&["graphical", "--model", s(&m), "--preorder", s(&up)]).code, 1);
    let other = write(&dir, "o.graph", "a -> c\nb -> d\n");
    assert_eq!(gfaith(&["faithful", "--model", s(&m), "--graph", s(&other)]).code, 2);
}

#[test]
fn extend_fills_in_set_statements() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.ci", "a _||_ b\na _||_ c\n");
    let o = gfaith(&["axioms", "--model", s(&m), "--property", "composition"]);
    assert_eq!(o.code, 1);
    let o = gfaith(&["axioms", "--model", s(&m), "--property", "composition", "--extend"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
}

#[test]
fn parallel_flag_gives_the_same_report() {
    let dir = TempDir::new().unwrap();
    let g = "a -> b\nc -> b\nb -- d\nd <-> e\n";
    let j = gfaith::format::parse_graph(g).unwrap().induced_model().unwrap();
    let m = write(&dir, "m.ci", &write_model(&j));
    let seq = gfaith(&["graphical", "--model", s(&m)]);
    let par = gfaith(&["graphical", "--model", s(&m), "--parallel", "3"]);
    assert_eq!(seq, par);
    assert_eq!(seq.code, 0);
}
