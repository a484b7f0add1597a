//! Classify a block of spec lines and emit one JSON record per line.

use multichiral::cli::{classify_lines, BatchRecord};

const INPUT: &str = "\
# named instances
3,3,1
K_{3,3,1,1}

1 1 1 1 1 1
3,x,1
";

fn main() {
    for rec in classify_lines(INPUT) {
        let line = serde_json::to_string(&rec).unwrap();
        let back: BatchRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, rec);
        println!("{line}");
    }
}
