//! Construction of `D(a,b,c,n,r,s)`.
//!
//! Positions on a cycle are clockwise slots `0..d` from a fixed marker. Around
//! an upper cycle `C'_i` the arc endpoints come in blocks
//!
//! ```text
//! [a belts to C'_{i+1}] [b diagonals to C''_{i+1}] [c verticals to C''_i] [a belts from C'_{i-1}]
//! ```
//!
//! and around a lower cycle `C''_i`
//!
//! ```text
//! [a belts from C''_{i-1}] [b diagonals from C'_{i-1}] [c verticals from C'_i] [a belts to C''_{i+1}]
//! ```
//!
//! Arcs in a parallel bundle meet their two cycles in opposite slot order.
//! Upper labels run clockwise (slot `k` has label `k+1`); lower labels run
//! counterclockwise, slot `k` carrying label `-r-k mod d` (with `0` written
//! as `d`). `C'_i` is glued to `C''_{i-s}` matching equal labels.

use alloc::vec::Vec;

use super::DunwoodyParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tier {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId {
    pub tier: Tier,
    pub cycle: u32,
    pub position: u32,
}

impl VertexId {
    pub fn upper(cycle: u32, position: u32) -> Self {
        VertexId {
            tier: Tier::Upper,
            cycle,
            position,
        }
    }

    pub fn lower(cycle: u32, position: u32) -> Self {
        VertexId {
            tier: Tier::Lower,
            cycle,
            position,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArcKind {
    /// `C'_i -> C'_{i+1}`.
    UpperBelt,
    /// `C''_i -> C''_{i+1}`.
    LowerBelt,
    /// `C'_i -> C''_{i+1}`.
    Diagonal,
    /// `C'_i -> C''_i`.
    Vertical,
}

impl ArcKind {
    /// Whether the arc runs from cycle `i` to cycle `i+1`.
    pub fn advances_cycle(self) -> bool {
        !matches!(self, ArcKind::Vertical)
    }
}

/// An arc of the diagram, oriented from `tail` (on cycle `i`) to `head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arc {
    pub kind: ArcKind,
    pub tail: VertexId,
    pub head: VertexId,
    pub bundle_index: u32,
}

impl Arc {
    pub fn other_end(&self, v: VertexId) -> Option<VertexId> {
        if v == self.tail {
            Some(self.head)
        } else if v == self.head {
            Some(self.tail)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    params: DunwoodyParams,
    arcs: Vec<Arc>,
    arc_at: Vec<u32>,
}

impl Diagram {
    pub fn new(params: DunwoodyParams) -> Self {
        let (a, b, c, n) = (params.a(), params.b(), params.c(), params.n());
        let d = params.d();
        let next = |i: u32| (i + 1) % n;
        let mut arcs = Vec::with_capacity((n * d) as usize);
        for i in 0..n {
            for j in 0..a {
                arcs.push(Arc {
                    kind: ArcKind::UpperBelt,
                    tail: VertexId::upper(i, j),
                    head: VertexId::upper(next(i), a + b + c + (a - 1 - j)),
                    bundle_index: j,
                });
            }
            for j in 0..a {
                arcs.push(Arc {
                    kind: ArcKind::LowerBelt,
                    tail: VertexId::lower(i, a + b + c + j),
                    head: VertexId::lower(next(i), a - 1 - j),
                    bundle_index: j,
                });
            }
            for j in 0..b {
                arcs.push(Arc {
                    kind: ArcKind::Diagonal,
                    tail: VertexId::upper(i, a + j),
                    head: VertexId::lower(next(i), a + (b - 1 - j)),
                    bundle_index: j,
                });
            }
            for j in 0..c {
                arcs.push(Arc {
                    kind: ArcKind::Vertical,
                    tail: VertexId::upper(i, a + b + j),
                    head: VertexId::lower(i, a + b + (c - 1 - j)),
                    bundle_index: j,
                });
            }
        }

        let mut diagram = Diagram {
            params,
            arcs,
            arc_at: alloc::vec![u32::MAX; (2 * n * d) as usize],
        };
        for idx in 0..diagram.arcs.len() {
            let arc = diagram.arcs[idx];
            for v in [arc.tail, arc.head] {
                let slot = diagram.vertex_index(v);
                debug_assert_eq!(diagram.arc_at[slot], u32::MAX, "vertex {v:?} used twice");
                diagram.arc_at[slot] = idx as u32;
            }
        }
        diagram
    }

    pub fn params(&self) -> &DunwoodyParams {
        &self.params
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.arc_at.len()
    }

    /// Dense index of a vertex: lower cycles follow the upper ones.
    pub fn vertex_index(&self, v: VertexId) -> usize {
        let (n, d) = (self.params.n() as usize, self.params.d() as usize);
        let tier = match v.tier {
            Tier::Upper => 0,
            Tier::Lower => 1,
        };
        (tier * n + v.cycle as usize) * d + v.position as usize
    }

    pub fn vertex_at(&self, index: usize) -> VertexId {
        let (n, d) = (self.params.n() as usize, self.params.d() as usize);
        let position = (index % d) as u32;
        let cycle = ((index / d) % n) as u32;
        let tier = if index / d < n {
            Tier::Upper
        } else {
            Tier::Lower
        };
        VertexId {
            tier,
            cycle,
            position,
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).map(|i| self.vertex_at(i))
    }

    /// Index of the unique arc ending at `v`.
    pub fn arc_at(&self, v: VertexId) -> usize {
        self.arc_at[self.vertex_index(v)] as usize
    }

    /// Label `1..=d` of a vertex.
    pub fn label(&self, v: VertexId) -> u32 {
        let d = self.params.d() as i64;
        let raw = match v.tier {
            Tier::Upper => v.position as i64 + 1,
            Tier::Lower => -(self.params.r() as i64) - v.position as i64,
        };
        match raw.rem_euclid(d) {
            0 => d as u32,
            l => l as u32,
        }
    }

    /// The vertex on the paired cycle carrying the same label.
    pub fn identified(&self, v: VertexId) -> VertexId {
        let p = &self.params;
        let (n, d) = (p.n() as i64, p.d() as i64);
        let position = (-1 - p.r() as i64 - v.position as i64).rem_euclid(d) as u32;
        match v.tier {
            Tier::Upper => VertexId::lower(
                (v.cycle as i64 - p.s() as i64).rem_euclid(n) as u32,
                position,
            ),
            Tier::Lower => VertexId::upper((v.cycle + p.s()) % p.n(), position),
        }
    }

    /// Handle (identified cycle pair) through `v`, named by its upper cycle.
    pub fn handle_of(&self, v: VertexId) -> u32 {
        match v.tier {
            Tier::Upper => v.cycle,
            Tier::Lower => (v.cycle + self.params.s()) % self.params.n(),
        }
    }

    /// Lower vertex on cycle `i` with label `d`, where traversals start.
    pub fn start_vertex(&self, cycle: u32) -> VertexId {
        let d = self.params.d() as i64;
        VertexId::lower(cycle, (-(self.params.r() as i64)).rem_euclid(d) as u32)
    }

    /// Cycle-index rotation by `k` steps.
    pub fn rotate_vertex(&self, v: VertexId, k: u32) -> VertexId {
        VertexId {
            cycle: (v.cycle + k) % self.params.n(),
            ..v
        }
    }

    /// Index of the rotation image of arc `idx`.
    pub fn rotate_arc(&self, idx: usize, k: u32) -> usize {
        let (n, d) = (self.params.n() as usize, self.params.d() as usize);
        let (cycle, local) = (idx / d, idx % d);
        ((cycle + k as usize) % n) * d + local
    }
}

/// See [`Diagram::new`].
pub fn build_diagram(params: DunwoodyParams) -> Diagram {
    Diagram::new(params)
}
