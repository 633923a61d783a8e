mod common;

use common::{check_extension, extension_cases};

#[test]
fn every_rule_extends_soundly() {
    for rule in 1..=8u8 {
        let cases = extension_cases(rule, 40, 9);
        assert!(cases.len() >= 5, "rule {rule}: only {} cases", cases.len());
        for (g, inst) in &cases {
            check_extension(g, inst).unwrap();
        }
    }
}
