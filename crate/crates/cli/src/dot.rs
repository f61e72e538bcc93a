//! DOT rendering of Whitehead graphs.

use freewidth::whitehead::WhiteheadGraph;
use freewidth::words::{Letter, Sign};

fn vertex_name(l: Letter) -> String {
    match l.sign() {
        Sign::Plus => format!("x{}", l.gen()),
        Sign::Minus => format!("x{}'", l.gen()),
    }
}

/// Byte-stable DOT text: every vertex of the letter set (so isolated
/// vertices are visible), then one line per edge, sorted lexicographically.
pub fn emit_dot(g: &WhiteheadGraph) -> String {
    let mut out = String::from("graph WG {\n");
    for v in 0..g.vertex_count() {
        let l = g.letter_of_vertex(v).expect("vertex indices are in range");
        out.push_str(&format!("  \"{}\";\n", vertex_name(l)));
    }
    let mut edge_lines: Vec<String> = g
        .edges_as_letters()
        .into_iter()
        .map(|(a, b)| format!("  \"{}\" -- \"{}\";\n", vertex_name(a), vertex_name(b)))
        .collect();
    edge_lines.sort();
    for line in edge_lines {
        out.push_str(&line);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use freewidth::whitehead::whitehead_graph;
    use freewidth::words::{Rank, Word};

    fn parse(text: &str, rank: u32) -> Word {
        crate::wordtext::parse(text, Rank::new(rank).unwrap()).unwrap()
    }

    #[test]
    fn single_edge_graph() {
        let dot = emit_dot(&whitehead_graph(&parse("x1 x2", 2)));
        let edges: Vec<&str> = dot.lines().filter(|l| l.contains(" -- ")).collect();
        assert_eq!(edges, vec![r#"  "x1" -- "x2'";"#]);
    }

    #[test]
    fn empty_word_lists_isolated_vertices() {
        let dot = emit_dot(&whitehead_graph(&parse("", 2)));
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 0);
        for name in ["\"x1\";", "\"x1'\";", "\"x2\";", "\"x2'\";"] {
            assert!(dot.contains(name), "missing {name} in {dot}");
        }
    }

    #[test]
    fn doubled_square_has_four_sorted_edges() {
        let dot = emit_dot(&whitehead_graph(&parse("x1^2 x2^2 x1^2 x2^2", 2)));
        let edges: Vec<&str> = dot.lines().filter(|l| l.contains(" -- ")).collect();
        assert_eq!(
            edges,
            vec![
                r#"  "x1" -- "x1'";"#,
                r#"  "x1" -- "x2'";"#,
                r#"  "x1'" -- "x2";"#,
                r#"  "x2" -- "x2'";"#,
            ]
        );
        let again = emit_dot(&whitehead_graph(&parse("x1^2 x2^2 x1^2 x2^2", 2)));
        assert_eq!(dot, again);
    }
}
