//! Graphviz export. Each of the `2n` cycles is a `cluster_` subgraph whose
//! nodes are labelled with their vertex labels; arcs are solid directed
//! edges and handle identifications dashed undirected ones.

use std::fmt::Write;

use dunwoody_core::diagram::{ArcKind, Diagram, Tier, VertexId};

use crate::json::SCHEMA_VERSION;

fn node(v: VertexId) -> String {
    let t = match v.tier {
        Tier::Upper => 'u',
        Tier::Lower => 'l',
    };
    format!("{t}{}_{}", v.cycle, v.position)
}

pub fn to_dot(d: &Diagram) -> String {
    let p = d.params();
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "digraph dunwoody {{").unwrap();
    writeln!(w, "  schema_version=\"{SCHEMA_VERSION}\";").unwrap();
    writeln!(w, "  label=\"{p}\";").unwrap();
    writeln!(w, "  node [shape=circle];").unwrap();
    for (tier, name, primes) in [(Tier::Upper, "upper", "'"), (Tier::Lower, "lower", "''")] {
        for i in 0..p.n() {
            writeln!(w, "  subgraph cluster_{name}_{i} {{").unwrap();
            writeln!(w, "    label=\"C{primes}_{i}\";").unwrap();
            for pos in 0..p.d() {
                let v = VertexId {
                    tier,
                    cycle: i,
                    position: pos,
                };
                writeln!(w, "    {} [label=\"{}\"];", node(v), d.label(v)).unwrap();
            }
            writeln!(w, "  }}").unwrap();
        }
    }
    for arc in d.arcs() {
        let kind = match arc.kind {
            ArcKind::UpperBelt => "upper_belt",
            ArcKind::LowerBelt => "lower_belt",
            ArcKind::Diagonal => "diagonal",
            ArcKind::Vertical => "vertical",
        };
        writeln!(
            w,
            "  {} -> {} [class=\"{kind}\"];",
            node(arc.tail),
            node(arc.head)
        )
        .unwrap();
    }
    for v in d.vertices().filter(|v| v.tier == Tier::Upper) {
        writeln!(
            w,
            "  {} -> {} [style=dashed, dir=none, constraint=false];",
            node(v),
            node(d.identified(v))
        )
        .unwrap();
    }
    writeln!(w, "}}").unwrap();
    out
}
