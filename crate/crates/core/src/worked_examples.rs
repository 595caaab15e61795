//! Reference data transcribed by hand: configurations and binomial lists
//! for the named example graphs. Used by the reproduction suite and tests
//! as fixed expected values.

use crate::algebra::Binomial;
use crate::graph::Edge;

/// `f_ij = x_ii x_jj - x_ij x_ji`, written out.
fn expand(item: &str) -> String {
    let item = item.trim();
    match item.strip_prefix('f') {
        Some(ij) if ij.len() == 2 => {
            let (i, j) = (&ij[..1], &ij[1..]);
            format!("x{i}{i}*x{j}{j} - x{i}{j}*x{j}{i}")
        }
        _ => item.to_string(),
    }
}

fn parse_list(items: &[&str]) -> Vec<Binomial> {
    items
        .iter()
        .map(|s| {
            expand(s)
                .parse::<Binomial>()
                .unwrap_or_else(|e| panic!("bad reference binomial {s}: {e}"))
        })
        .collect()
}

/// Edge numbering `z_1, ..., z_6` of the five-vertex example graph.
pub fn example_edge_order() -> Vec<Edge> {
    [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (3, 5)]
        .into_iter()
        .map(|(a, b)| Edge::new(a, b))
        .collect()
}

/// The 17 columns of `A_G` for the five-vertex example, by variable name.
pub fn example_vectors() -> Vec<(&'static str, [i64; 11])> {
    vec![
        ("x12", [1, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0]),
        ("x21", [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]),
        ("x23", [0, 1, 1, 0, 0, 0, -1, 0, 0, 0, 0]),
        ("x32", [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
        ("x34", [0, 0, 1, 1, 0, 0, 0, -1, 0, 0, 0]),
        ("x43", [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0]),
        ("x14", [1, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0]),
        ("x41", [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
        ("x15", [1, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0]),
        ("x51", [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0]),
        ("x35", [0, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1]),
        ("x53", [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
        ("x11", [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
        ("x22", [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
        ("x33", [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
        ("x44", [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]),
        ("x55", [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0]),
    ]
}

/// The 36 circuits of the five-vertex example.
pub fn example_circuits() -> Vec<Binomial> {
    parse_list(&[
        "f12",
        "f23",
        "f34",
        "f14",
        "f15",
        "f35",
        "x44*x35*x53 - x55*x34*x43",
        "x11*x35*x53 - x33*x15*x51",
        "x44*x15*x51 - x55*x14*x41",
        "x22*x15*x51 - x55*x12*x21",
        "x33*x14*x41 - x11*x34*x43",
        "x22*x14*x41 - x44*x12*x21",
        "x22*x34*x43 - x44*x23*x32",
        "x11*x23*x32 - x33*x12*x21",
        "x22*x35*x53 - x55*x23*x32",
        "x14*x41*x35*x53 - x34*x43*x15*x51",
        "x14*x41*x35*x53 - x33*x44*x15*x51",
        "x14*x41*x35*x53 - x11*x55*x34*x43",
        "x11*x44*x35*x53 - x34*x43*x15*x51",
        "x12*x21*x35*x53 - x23*x32*x15*x51",
        "x11*x22*x35*x53 - x23*x32*x15*x51",
        "x12*x21*x35*x53 - x22*x33*x15*x51",
        "x12*x21*x35*x53 - x11*x55*x23*x32",
        "x34*x43*x15*x51 - x33*x55*x14*x41",
        "x23*x32*x15*x51 - x33*x55*x12*x21",
        "x23*x32*x14*x41 - x12*x21*x34*x43",
        "x23*x32*x14*x41 - x11*x22*x34*x43",
        "x22*x33*x14*x41 - x12*x21*x34*x43",
        "x23*x32*x14*x41 - x33*x44*x12*x21",
        "x12*x21*x34*x43 - x11*x44*x23*x32",
        "x22*x14*x41*x35*x53 - x44*x23*x32*x15*x51",
        "x22*x14*x41*x35*x53 - x55*x12*x21*x34*x43",
        "x44*x12*x21*x35*x53 - x55*x23*x32*x14*x41",
        "x44*x12*x21*x35*x53 - x22*x34*x43*x15*x51",
        "x22*x34*x43*x15*x51 - x55*x23*x32*x14*x41",
        "x44*x23*x32*x15*x51 - x55*x12*x21*x34*x43",
    ])
}

/// The 16 Graver basis elements of the prism over the triangle with a
/// pendant edge.
pub fn triangle_pendant_graver() -> Vec<Binomial> {
    parse_list(&[
        "f12",
        "f23",
        "f13",
        "f14",
        "x33*x14*x41 - x44*x13*x31",
        "x22*x14*x41 - x44*x12*x21",
        "x22*x13*x31 - x11*x23*x32",
        "x22*x13*x31 - x33*x12*x21",
        "x11*x23*x32 - x33*x12*x21",
        "x23*x32*x14*x41 - x22*x44*x13*x31",
        "x23*x32*x14*x41 - x33*x44*x12*x21",
        "x33^2*x12*x21 - x23*x32*x13*x31",
        "x11^2*x23*x32 - x12*x21*x13*x31",
        "x22^2*x13*x31 - x12*x21*x23*x32",
        "x11*x23*x32*x14*x41 - x44*x12*x21*x13*x31",
        "x12*x21*x13*x31*x44^2 - x23*x32*x14^2*x41^2",
    ])
}

/// The primitive binomial of the triangle-with-pendant prism that is not a
/// circuit.
pub fn triangle_pendant_non_circuit() -> Binomial {
    parse_list(&["x11*x23*x32*x14*x41 - x44*x12*x21*x13*x31"]).remove(0)
}

/// Universal Gröbner basis of the star on four vertices.
pub fn star4_ugb() -> Vec<Binomial> {
    parse_list(&[
        "x11*x22 - x12*x21",
        "x11*x33 - x13*x31",
        "x11*x44 - x14*x41",
        "x12*x21*x33 - x22*x31*x13",
        "x12*x21*x44 - x22*x41*x14",
        "x13*x31*x44 - x33*x41*x14",
    ])
}

/// Universal Gröbner basis of the path on five vertices.
pub fn path5_ugb() -> Vec<Binomial> {
    parse_list(&[
        "x11*x22 - x12*x21",
        "x22*x33 - x23*x32",
        "x33*x44 - x34*x43",
        "x44*x55 - x45*x54",
        "x12*x33*x21 - x23*x32*x11",
        "x23*x44*x32 - x34*x43*x22",
        "x34*x55*x43 - x45*x54*x33",
        "x12*x34*x43*x21 - x23*x44*x32*x11",
        "x23*x45*x54*x32 - x34*x55*x43*x22",
        "x12*x34*x55*x43*x21 - x23*x45*x54*x32*x11",
    ])
}

/// Variable chain of the quadratic Gröbner basis for the witness graph of
/// the 4-cycle with two pendant edges.
pub const CYCLE4_PENDANTS_CHAIN: &str =
    "x11>x12>x14>x15>x16>x21>x22>x23>x32>x33>x34>x41>x43>x44>x51>x55>x61>x66";

/// The witness graph of the 4-cycle with two pendant edges, in its original
/// labelling: `(a, b, name)`.
pub fn cycle4_pendants_witness_edges() -> Vec<(u32, u32, &'static str)> {
    vec![
        (7, 8, "x12"),
        (8, 9, "x23"),
        (9, 10, "x34"),
        (7, 17, "x14"),
        (12, 13, "x21"),
        (13, 15, "x32"),
        (15, 17, "x43"),
        (10, 12, "x41"),
        (7, 12, "x11"),
        (8, 13, "x22"),
        (9, 15, "x33"),
        (10, 17, "x44"),
        (7, 18, "x15"),
        (12, 20, "x51"),
        (7, 19, "x16"),
        (12, 21, "x61"),
        (18, 20, "x55"),
        (19, 21, "x66"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_sizes() {
        assert_eq!(example_vectors().len(), 17);
        assert_eq!(example_circuits().len(), 36);
        assert_eq!(triangle_pendant_graver().len(), 16);
        assert_eq!(star4_ugb().len(), 6);
        assert_eq!(path5_ugb().len(), 10);
        assert_eq!(cycle4_pendants_witness_edges().len(), 18);
        assert_eq!(expand("f35"), "x33*x55 - x35*x53");
    }
}
