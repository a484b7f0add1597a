//! Vertex connectivity of small complete multipartite graphs, cross-checked
//! against a brute-force minimum vertex cut.

use multichiral::graph::{expand, is_low_connectivity_form, vertex_connectivity};
use multichiral::oracle::{enumerate_specs, min_vertex_cut_bruteforce, SweepConfig};

fn main() {
    for spec in enumerate_specs(&SweepConfig::up_to(6)) {
        let k = vertex_connectivity(&spec).unwrap();
        let brute = min_vertex_cut_bruteforce(&expand(&spec).unwrap());
        assert_eq!(k, brute);
        println!(
            "{:<16} kappa={k} edges={:<3} low-connectivity form: {}",
            spec.k_notation(),
            spec.edge_count(),
            is_low_connectivity_form(&spec)
        );
    }
}
