mod common;

use serde_json::json;

#[test]
fn validator_rejects_malformed_documents() {
    let schema = common::schema("verify");
    let good = json!({
        "check": "eq2",
        "params": {"a": "1/5", "b": "1"},
        "verdict": {"kind": "a-star-extended", "W": 6, "rank": 1, "codimension": 2,
                    "certified_block": [3, 5, 4], "holds": true, "witness": null},
        "outcome": true, "predicted": true, "agrees": true
    });
    assert!(common::validate(&good, &schema).is_empty());

    let mut missing = good.clone();
    missing.as_object_mut().unwrap().remove("agrees");
    assert_eq!(common::validate(&missing, &schema).len(), 1);

    let mut wrong = good.clone();
    wrong["verdict"]["certified_block"] = json!([3, 5]);
    wrong["check"] = json!("eq3");
    wrong["extra"] = json!(1);
    assert_eq!(common::validate(&wrong, &schema).len(), 3);
}

#[test]
fn shipped_schemas_are_json() {
    for name in ["classify", "verify", "envelope", "sweep-manifest"] {
        assert!(common::schema(name).is_object());
    }
}
