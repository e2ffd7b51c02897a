//! Linking graphs, their Dynkin shapes, and DOT output.

use braidtk::braid::BraidWord;
use braidtk::linking::{contains_e6_subtree, dynkin_type, induced_path, linking_graph};

pub fn run_example() -> String {
    let mut out = String::new();
    for text in [
        "s1^3",
        "s3 s1 s2 s1 s1 s3 s2",
        "s1^4 s2 s1^2 s2",
        "s1 s2^2 s1 s2^4 s3 s2^2 s3",
        "s1^2 s2 s1^2 s2 s1^2 s2 s1^2 s2 s1^2 s2^2",
    ] {
        let w: BraidWord = text.parse().unwrap();
        let g = linking_graph(&w);
        out += &format!(
            "{w}: {} bricks, {} edges, type {}, E6 {:?}\n",
            g.vertex_count(),
            g.edge_count(),
            dynkin_type(&g),
            contains_e6_subtree(&g)
        );
    }
    let w: BraidWord = "s3 s1 s2 s1 s1 s3 s2".parse().unwrap();
    let g = linking_graph(&w);
    let start = g.column_vertices(1).last().copied().unwrap();
    let path = induced_path(&g, start, 3).unwrap();
    let labels: Vec<String> = path.iter().map(|&v| g.brick(v).to_string()).collect();
    out += &format!("induced path: {}\n", labels.join(" - "));
    out += &g.to_dot();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
