//! Build a symmetric embedding plan for an achiral spec and check it.
//!
//!     cargo run --example embedding_plan -- 2,2,5

use multichiral::cli::parse_spec;
use multichiral::embedding::{build_plan, check_lemma1, Mutation};
use multichiral::classify;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,3,1".into());
    let spec = parse_spec(&arg).expect("valid spec");
    let verdict = classify(&spec);
    let Some(witness) = verdict.witness else {
        println!("{} is intrinsically chiral; no plan exists", spec.k_notation());
        return;
    };
    let plan = build_plan(&witness).expect("witness builds");
    println!(
        "{}: {:?}, construction {}, {} auxiliary vertices",
        spec.k_notation(),
        plan.scenario.kind,
        plan.construction_case,
        plan.auxiliary.len()
    );
    for (v, p) in plan.placement.iter().enumerate() {
        println!("  v{v} (part {}) -> {p}", plan.part_of[v]);
    }
    let report = check_lemma1(&plan).expect("well-formed plan");
    println!("self-check passed: {}", report.passed());

    // Damage the plan in every applicable way and see the checker object.
    for m in Mutation::ALL {
        if let Some(bad) = m.apply(&plan) {
            let caught = match check_lemma1(&bad) {
                Ok(r) => !r.passed(),
                Err(_) => true,
            };
            println!("  mutation {:<22} caught: {caught}", m.name());
        }
    }
}
