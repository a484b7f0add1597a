//! Classify a few complete multipartite graphs and print their witnesses.
//!
//!     cargo run --example classify_spec -- 3,3,1 "K_{3,3,1,1}"

use multichiral::cli::parse_spec;
use multichiral::classifier::validate_verdict;
use multichiral::classify;

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["3,3,1", "3,3,1,1", "1,1,1,1,1,1", "1,1,1,1,1,1,1", "6,6,4"]
            .map(String::from)
            .to_vec();
    }
    for a in &args {
        let spec = match parse_spec(a) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("{a}: {e}");
                continue;
            }
        };
        let v = classify(&spec);
        match &v.witness {
            Some(w) => println!("{}: achiral, {w}", spec.k_notation()),
            None => {
                println!("{}: intrinsically chiral", spec.k_notation());
                for e in v.near_misses() {
                    println!("  near miss: form {} case {}: {}", e.theorem, e.case, e.reason);
                }
            }
        }
        validate_verdict(&v).expect("independent validator accepts the verdict");
    }
}
