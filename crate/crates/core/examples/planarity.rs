//! Compare the planarity closed form with a Kuratowski subgraph search.

use multichiral::graph::expand;
use multichiral::oracle::{enumerate_specs, kuratowski_search, SweepConfig};
use multichiral::planarity::{is_outerplanar_cm, is_planar_cm};

fn main() {
    for spec in enumerate_specs(&SweepConfig::up_to(7)) {
        let g = expand(&spec).unwrap();
        let obstruction = kuratowski_search(&g).unwrap();
        let planar = obstruction.is_none();
        assert_eq!(planar, is_planar_cm(&spec));
        let kind = obstruction
            .map(|o| format!("{:?} subdivision", o.kind))
            .unwrap_or_else(|| "planar".into());
        println!(
            "{:<16} outerplanar={:<5} {}",
            spec.k_notation(),
            is_outerplanar_cm(&spec),
            kind
        );
    }
}
