use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{Diagram, DiagramError, Tier, VertexId};
use crate::freegroup::{FreeWord, Letter, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Tail to head.
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Traversal {
    pub arc: usize,
    pub direction: Direction,
}

/// Passage through the handle `handle`; `Pos` for lower-to-upper.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub handle: u32,
    pub sign: Sign,
}

/// A closed curve of arcs. `crossings[k]` is the handle passage made right
/// after `traversals[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub traversals: Vec<Traversal>,
    pub crossings: Vec<Crossing>,
}

impl Curve {
    pub fn len(&self) -> usize {
        self.traversals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traversals.is_empty()
    }

    /// The relator read off the handle passages, `x_handle^sign` each.
    pub fn crossing_word(&self) -> FreeWord {
        self.crossings
            .iter()
            .map(|c| Letter::new(c.handle, c.sign))
            .collect()
    }

    /// The same curve walked the other way.
    pub fn reversed(&self) -> Curve {
        Curve {
            traversals: self
                .traversals
                .iter()
                .rev()
                .map(|t| Traversal {
                    arc: t.arc,
                    direction: t.direction.flip(),
                })
                .collect(),
            crossings: self
                .crossings
                .iter()
                .rev()
                .map(|c| Crossing {
                    handle: c.handle,
                    sign: c.sign.flip(),
                })
                .collect(),
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = usize> + '_ {
        self.traversals.iter().map(|t| t.arc)
    }
}

impl Diagram {
    /// Walks the closed curve that leaves `start` along its arc.
    pub fn trace_from(&self, start: VertexId) -> Result<Curve, DiagramError> {
        let limit = self.arcs().len();
        let mut curve = Curve {
            traversals: Vec::new(),
            crossings: Vec::new(),
        };
        let mut v = start;
        loop {
            if curve.len() >= limit {
                return Err(DiagramError::Structural("curve does not close"));
            }
            let idx = self.arc_at(v);
            let arc = &self.arcs()[idx];
            let (w, direction) = if v == arc.tail {
                (arc.head, Direction::Forward)
            } else if v == arc.head {
                (arc.tail, Direction::Backward)
            } else {
                return Err(DiagramError::Structural("arc lookup mismatch"));
            };
            let sign = match w.tier {
                Tier::Lower => Sign::Pos,
                Tier::Upper => Sign::Neg,
            };
            curve.traversals.push(Traversal {
                arc: idx,
                direction,
            });
            curve.crossings.push(Crossing {
                handle: self.handle_of(w),
                sign,
            });
            v = self.identified(w);
            if v == start {
                return Ok(curve);
            }
        }
    }

    /// Partitions the arcs into closed curves. Curves through the label-`d`
    /// vertices of `C''_0, C''_1, ...` come first, in that order, so the
    /// curves of a symmetric diagram are listed as rotations of curve 0.
    pub fn trace_curves(&self) -> Result<Vec<Curve>, DiagramError> {
        let n = self.params().n();
        let mut used = alloc::vec![false; self.arcs().len()];
        let mut curves = Vec::new();
        let starts = (0..n).map(|i| self.start_vertex(i)).chain(self.vertices());
        for start in starts {
            if used[self.arc_at(start)] {
                continue;
            }
            let curve = self.trace_from(start)?;
            for idx in curve.arcs() {
                if core::mem::replace(&mut used[idx], true) {
                    return Err(DiagramError::Structural("arc traversed twice"));
                }
            }
            curves.push(curve);
        }
        Ok(curves)
    }

    pub fn check_admissibility(&self) -> Result<AdmissibilityReport, DiagramError> {
        let curves = self.trace_curves()?;
        Ok(self.admissibility_of(&curves))
    }

    pub(crate) fn admissibility_of(&self, curves: &[Curve]) -> AdmissibilityReport {
        let n = self.params().n();
        let mut owner = alloc::vec![0usize; self.arcs().len()];
        for (ci, curve) in curves.iter().enumerate() {
            for idx in curve.arcs() {
                owner[idx] = ci;
            }
        }
        let first_arc = curves[0].traversals[0].arc;
        let orbit: BTreeSet<usize> = (0..n)
            .map(|k| owner[self.rotate_arc(first_arc, k)])
            .collect();
        let orbit_transitive = orbit.len() == curves.len();
        AdmissibilityReport {
            curve_count: curves.len(),
            orbit_transitive,
            admissible: curves.len() == n as usize && orbit_transitive,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub curve_count: usize,
    /// The cycle rotation carries one curve onto every other.
    pub orbit_transitive: bool,
    pub admissible: bool,
}

/// See [`Diagram::trace_curves`].
pub fn trace_curves(diagram: &Diagram) -> Result<Vec<Curve>, DiagramError> {
    diagram.trace_curves()
}

/// See [`Diagram::check_admissibility`].
pub fn check_admissibility(diagram: &Diagram) -> Result<AdmissibilityReport, DiagramError> {
    diagram.check_admissibility()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{family_params, DunwoodyParams, FamilySign};

    fn family(p: i64, m: i64, sign: FamilySign, n: i64) -> Diagram {
        Diagram::new(family_params(p, m, sign, n).unwrap())
    }

    #[test]
    fn trefoil_base_is_one_curve_of_three_arcs() {
        let curves = family(2, 1, FamilySign::Plus, 1).trace_curves().unwrap();
        assert_eq!(curves.len(), 1);
        assert_eq!(curves[0].len(), 3);
    }

    #[test]
    fn three_fold_family_curves_are_rotations() {
        let d = family(3, 1, FamilySign::Plus, 3);
        let curves = d.trace_curves().unwrap();
        assert_eq!(curves.len(), 3);
        for (k, curve) in curves.iter().enumerate() {
            let rotated: alloc::vec::Vec<usize> = curves[0]
                .arcs()
                .map(|a| d.rotate_arc(a, k as u32))
                .collect();
            assert_eq!(curve.arcs().collect::<alloc::vec::Vec<_>>(), rotated);
        }
        assert!(d.check_admissibility().unwrap().admissible);
    }

    #[test]
    fn single_vertical_arc() {
        let d = Diagram::new(DunwoodyParams::new(0, 0, 1, 1, 0, 0).unwrap());
        let curves = d.trace_curves().unwrap();
        assert_eq!(curves.len(), 1);
        assert_eq!(curves[0].len(), 1);
    }

    #[test]
    fn belts_only_diagram() {
        // one upper and one lower belt; the brute-force trace decides
        let d = Diagram::new(DunwoodyParams::new(1, 0, 0, 1, 0, 0).unwrap());
        let report = d.check_admissibility().unwrap();
        let total: usize = d.trace_curves().unwrap().iter().map(Curve::len).sum();
        assert_eq!(total, 2);
        assert_eq!(report.admissible, report.curve_count == 1);
    }

    #[test]
    fn trefoil_four_fold_is_admissible() {
        let report = family(2, 1, FamilySign::Plus, 4)
            .check_admissibility()
            .unwrap();
        assert_eq!(report.curve_count, 4);
        assert!(report.orbit_transitive && report.admissible);
    }

    #[test]
    fn wrong_shift_is_inadmissible() {
        // the + family needs s = p; s = 0 breaks the curve structure for n = 4
        let good = family_params(2, 1, FamilySign::Plus, 4).unwrap();
        let bad = DunwoodyParams::new(
            good.a() as i64,
            good.b() as i64,
            good.c() as i64,
            4,
            good.r() as i64,
            0,
        )
        .unwrap();
        let report = Diagram::new(bad).check_admissibility().unwrap();
        assert!(!report.admissible);
    }

    #[test]
    fn reversal_inverts_crossing_word() {
        let d = family(3, 2, FamilySign::Minus, 3);
        for curve in d.trace_curves().unwrap() {
            let back = curve.reversed();
            assert!(back
                .crossing_word()
                .cyclically_equivalent(&curve.crossing_word().inverse(), false));
            assert_eq!(back.reversed(), curve);
        }
    }
}
