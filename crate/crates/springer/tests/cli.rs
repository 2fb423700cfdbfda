use std::process::Command;

fn springer(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_springer")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn member_all_criteria() {
    let (code, out, _) = springer(&["member", "--tau", "2,3,5/4/1", "--T", "1,3,4/2/5", "--criterion", "all"]);
    assert_eq!(code, 0);
    assert_eq!(out, "true (dominance=hook_A=constructible)\n");
}

#[test]
fn member_on_several_families_demands_agreement() {
    let (code, out, _) = springer(&["member", "--tau", "2,3/1", "--T", "1,2/3", "--criterion", "all"]);
    assert_eq!(code, 1);
    assert!(out.starts_with(
        "false (dominance=hook_A=two_row_A=two_col_A=constructible_hook=constructible_two_row=constructible_two_col)"
    ));
    let (code, out, _) = springer(&["member", "--tau", "2,3/1", "--T", "1,2/3", "--criterion", "inductive", "--family", "two-row"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("false (two_row_A)"), "{out}");
}

#[test]
fn meander_and_svg() {
    let path = std::env::temp_dir().join(format!("springer-meander-{}.svg", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = springer(&["meander", "--T", "1,2,4,6,7/3,5,8,9", "--S", "1,2,5,6,7/3,4,8,9", "--svg", p]);
    assert_eq!(code, 0);
    assert_eq!(out, "even, loops=3, intervals=[2], codim1=true\n");
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn construct_trace() {
    let (code, out, _) = springer(&["construct", "--tau", "2,4,5/3/1", "--T", "1,3,4/2/5", "--trace"]);
    assert_eq!(code, 0);
    assert!(out.contains("step 3:\n  2 . . .\n  . 3 . .\n  1 . . .\n"), "{out}");
    assert!(out.ends_with("failure at step 4 (first kind)\n"));
}

#[test]
fn intersect_schuetzenberger_enumerate() {
    let (code, out, _) = springer(&["intersect", "--T", "1,2,4,6,7/3,5,8,9", "--S", "1,2,5,6,7/3,4,8,9"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("nonempty=true, dim=3, codim1=true\n"), "{out}");
    let (_, out, _) = springer(&["schuetzenberger", "--T", "1,3,4/2,5,7/6"]);
    assert_eq!(out, "1,2,6/3,5,7/4\n");
    let (_, out, _) = springer(&["enumerate", "--shape", "3,2"]);
    assert_eq!(out.lines().count(), 5);
    let (_, out, _) = springer(&["enumerate", "--shape", "2,2", "--row-standard"]);
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn cross_validate_exit_codes() {
    let (code, out, _) = springer(&["cross-validate", "--max-boxes", "6"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("0 failures\n"));
    let (code, out, _) = springer(&["cross-validate", "--shape", "3,3", "--structured"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("check=codim-one-two-row ")));
    let (code, _, err) = springer(&["cross-validate", "--shape", "3,2,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("3,2,1"));
}

#[test]
fn input_errors_name_the_input() {
    let (code, _, err) = springer(&["member", "--tau", "1,3/3", "--T", "1,2/3"]);
    assert_eq!(code, 2);
    assert!(err.contains("1,3/3"));
    assert_eq!(springer(&["nonsense"]).0, 2);
    assert_eq!(springer(&["meander", "--T", "1,2,3/4", "--S", "1,2/3,4"]).0, 2);
}

#[test]
fn batch_and_graph() {
    let dir = std::env::temp_dir();
    let input = dir.join(format!("springer-batch-{}.txt", std::process::id()));
    std::fs::write(&input, "2,3,5/4/1|1,3,4/2/5\n2,3/1|1,2/3\n").unwrap();
    let (code, out, _) = springer(&["batch", "--file", input.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "line=1 pair=2,3,5/4/1|1,3,4/2/5 member=true\nline=2 pair=2,3/1|1,2/3 member=false\n"
    );
    std::fs::remove_file(&input).unwrap();

    let dot = dir.join(format!("springer-graph-{}.dot", std::process::id()));
    let (code, out, _) = springer(&["graph", "--shape", "2,1", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("0 -- 1 codim1"));
    assert!(std::fs::read_to_string(&dot).unwrap().contains("n0 -- n1 [style=bold]"));
    std::fs::remove_file(&dot).unwrap();
}
