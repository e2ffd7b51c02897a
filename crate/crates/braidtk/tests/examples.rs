#[path = "../examples/analyze.rs"]
mod analyze;
#[path = "../examples/arf.rs"]
mod arf;
#[path = "../examples/certify.rs"]
mod certify;
#[path = "../examples/divide.rs"]
mod divide;
#[path = "../examples/enumerate.rs"]
mod enumerate;
#[path = "../examples/linking_graph.rs"]
mod linking_graph;
#[path = "../examples/tripods.rs"]
mod tripods;

#[test]
fn analyze_runs() {
    let out = analyze::run_example();
    assert!(out.contains("N=2; s1^3: r=1 b1=2 g=1 prime=true"));
    assert!(out.contains("N=4; s1^2 s3^2: r=4 b1=2 g=0 prime=false"));
    assert!(out.contains("\"dynkin\": \"A4\""));
}

#[test]
fn arf_runs() {
    let out = arf::run_example();
    assert!(out.contains("N=2; s1^7: alexander t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3 arf 0 (via determinant 0)"));
    assert_eq!(out.lines().count(), 6);
}

#[test]
fn certify_runs() {
    let out = certify::run_example();
    assert!(out.contains("known_exception (exit 3)"));
    assert!(out.contains("N=2; s1^5: not_applicable (exit 4)"));
    assert_eq!(out.matches("replay ok").count(), 3);
}

#[test]
fn divide_runs() {
    let out = divide::run_example();
    assert!(out.contains("braid N=4; s1 s3 s2 s1 s3 s2 s3 s1 s2"));
    assert!(out.contains("braid N=3; s1 s2 s1 s2"));
    assert!(out.contains("r=1 b1=6 alexander t^3 - t^2 + 1 - t^-2 + t^-3"));
}

#[test]
fn enumerate_runs() {
    let out = enumerate::run_example();
    assert!(out.starts_with(braidtk::certifier::TSV_HEADER));
    assert!(out.contains("N=3; s1^3 s2 s1^3 s2^5\t3\t12\t1\t10\t5\t0\tother\tcertified"));
}

#[test]
fn linking_graph_runs() {
    let out = linking_graph::run_example();
    assert!(out.contains("N=3; s1^4 s2 s1^2 s2: 6 bricks, 5 edges, type D6, E6 None"));
    assert!(out.contains("type ~D8"));
    assert!(out.contains("graph linking {"));
}

#[test]
fn tripods_run() {
    let out = tripods::run_example();
    for t in ["T(1,2,6)", "T(2,2,5)", "T(3,2,4)", "T(1,4,4)"] {
        assert!(out.contains(&format!("{t}: curves 10 betti 10 r 1 genus 5 E-arboreal true")), "{t}");
    }
    assert!(out.contains("A12: r 1 genus 6"));
}
