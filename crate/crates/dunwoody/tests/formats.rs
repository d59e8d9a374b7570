use std::path::PathBuf;

use dunwoody::dot::to_dot;
use dunwoody::json::{DiagramDocument, PresentationDoc};
use dunwoody::text::{format_presentation, parse_presentation};
use dunwoody_core::diagram::{Diagram, DunwoodyParams};
use jsonschema::JSONSchema;
use proptest::prelude::*;
use serde_json::Value;

fn schema(name: &str) -> JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    JSONSchema::compile(&raw).unwrap()
}

fn params() -> impl Strategy<Value = DunwoodyParams> {
    (0..4i64, 0..4i64, 0..5i64, 1..5i64, -20..20i64, -6..6i64)
        .prop_filter("nonempty", |t| t.0 + t.1 + t.2 > 0)
        .prop_map(|(a, b, c, n, r, s)| DunwoodyParams::new(a, b, c, n, r, s).unwrap())
}

#[test]
fn schema_rejects_malformed_documents() {
    let diagram = schema("diagram.schema.json");
    let d = Diagram::new(DunwoodyParams::new(1, 0, 1, 1, 2, 0).unwrap());
    let good = serde_json::to_value(DiagramDocument::from_diagram(&d)).unwrap();
    assert!(diagram.is_valid(&good));
    let mut missing = good.clone();
    missing.as_object_mut().unwrap().remove("arcs");
    assert!(!diagram.is_valid(&missing));
    let mut versioned = good.clone();
    versioned["schema_version"] = 2.into();
    assert!(!diagram.is_valid(&versioned));
    let mut kind = good;
    kind["arcs"][0]["kind"] = "sideways".into();
    assert!(!diagram.is_valid(&kind));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn diagram_json_round_trips(p in params()) {
        let d = Diagram::new(p);
        let doc = DiagramDocument::from_diagram(&d);
        let value = serde_json::to_value(&doc).unwrap();
        prop_assert!(schema("diagram.schema.json").is_valid(&value));
        let back: DiagramDocument = serde_json::from_str(&value.to_string()).unwrap();
        prop_assert_eq!(back.to_diagram().unwrap(), d);
    }

    #[test]
    fn presentation_formats_round_trip(p in params()) {
        let d = Diagram::new(p);
        if let Ok(h) = d.heegaard_presentation() {
            for pres in [Some(h.cyclic), h.closed].into_iter().flatten() {
                let text = format_presentation(&pres);
                let parsed = parse_presentation(&text).unwrap();
                prop_assert_eq!(parsed.generator_count(), pres.generator_count());
                prop_assert_eq!(parsed.relators(), pres.relators());
                if pres.relators().iter().any(|r| !r.is_identity()) {
                    prop_assert_eq!(parsed.alphabet(), pres.alphabet());
                }
                let doc = PresentationDoc::new(&pres);
                let value = serde_json::to_value(&doc).unwrap();
                prop_assert!(schema("presentation.schema.json").is_valid(&value));
                prop_assert_eq!(doc.to_presentation().unwrap(), pres);
            }
        }
    }

    #[test]
    fn dot_lists_every_arc_and_pair(p in params()) {
        let d = Diagram::new(p);
        let dot = to_dot(&d);
        prop_assert_eq!(dot.matches("subgraph cluster_").count(), 2 * p.n() as usize);
        prop_assert_eq!(dot.matches(" -> ").count(), 2 * d.arcs().len());
    }
}
