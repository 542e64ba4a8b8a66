//! Lines and Fano planes of the symplectic polar space W(5,2).
//!
//! Lines are the 315 totally isotropic 2-spaces, planes the 135 totally
//! isotropic 3-spaces. Both are stored in canonical order: sorted
//! lexicographically by their sorted point tuples, with ids equal to ranks.
//! Every line and plane carries the sign of the product of its observables.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::pauli::{commutes, context_sign, Observable, ObservableType, Sign};
use crate::pointset::PointSet;

pub const LINE_COUNT: usize = 315;
pub const PLANE_COUNT: usize = 135;
pub const LINES_PER_POINT: usize = 15;
pub const PLANES_PER_POINT: usize = 15;
pub const PLANES_PER_LINE: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("line {line} is not one of the lines of plane {plane}")]
    LineNotInPlane { plane: PlaneId, line: LineId },
    #[error("unknown {kind} id {id}")]
    UnknownId { kind: &'static str, id: usize },
    #[error("plane {plane}: {reason}")]
    TaxonomyViolation { plane: PlaneId, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LineId(pub u16);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlaneId(pub u16);

impl LineId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl PlaneId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for LineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for PlaneId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub id: LineId,
    pub points: [Observable; 3],
    pub sign: Sign,
}

impl Line {
    pub fn point_set(&self) -> PointSet {
        self.points.iter().copied().collect()
    }
}

/// Sign-and-structure class of a Fano plane.
///
/// Positive planes are split by their affine part (the four points off the
/// line of type-B observables): one `A` and three `C` gives `PosA` or `PosB`
/// depending on whether the plane has negative lines; three `A` and one `C`
/// gives `PosC`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PlaneClass {
    Negative,
    PosA,
    PosB,
    PosC,
}

impl PlaneClass {
    pub const ALL: [PlaneClass; 4] = [PlaneClass::Negative, PlaneClass::PosA, PlaneClass::PosB, PlaneClass::PosC];

    pub fn label(self) -> &'static str {
        match self {
            PlaneClass::Negative => "negative",
            PlaneClass::PosA => "a",
            PlaneClass::PosB => "b",
            PlaneClass::PosC => "c",
        }
    }
}

impl fmt::Display for PlaneClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    pub id: PlaneId,
    pub points: [Observable; 7],
    /// The seven lines of the plane, in increasing id order.
    pub lines: [LineId; 7],
    pub sign: Sign,
    /// The line carrying the three type-B observables.
    pub b_line: LineId,
    pub class: PlaneClass,
    pub negative_lines: u8,
}

impl Plane {
    pub fn point_set(&self) -> PointSet {
        self.points.iter().copied().collect()
    }

    pub fn contains_line(&self, line: LineId) -> bool {
        self.lines.contains(&line)
    }
}

/// Every isotropic line of W(5,2), in canonical order and with its sign.
pub fn enumerate_lines() -> Vec<Line> {
    let mut triples = Vec::with_capacity(LINE_COUNT);
    for a in Observable::all() {
        for b in Observable::all().filter(|&b| b > a && commutes(a, b)) {
            let c = a.xor(b).expect("distinct points");
            if c > b {
                triples.push([a, b, c]);
            }
        }
    }
    triples.sort();
    triples
        .into_iter()
        .enumerate()
        .map(|(i, points)| Line {
            id: LineId(i as u16),
            points,
            sign: context_sign(&points).expect("isotropic line is a context"),
        })
        .collect()
}

/// Point sets of all isotropic planes, sorted by their point tuples.
fn enumerate_plane_point_sets(lines: &[Line]) -> Vec<[Observable; 7]> {
    let mut found: Vec<[Observable; 7]> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for line in lines {
        let [a, b, _] = line.points;
        let base = line.point_set();
        for c in Observable::all().filter(|&c| !base.contains(c) && commutes(a, c) && commutes(b, c)) {
            let span: PointSet = [a, b, c]
                .into_iter()
                .chain([a.xor(c), b.xor(c), a.xor(b).and_then(|ab| ab.xor(c))].into_iter().flatten())
                .chain(line.points)
                .collect();
            if seen.insert(span) {
                let pts: Vec<Observable> = span.iter().collect();
                found.push(pts.try_into().expect("span of three independent points has seven"));
            }
        }
    }
    found.sort();
    found
}

/// Indexed W(5,2): points, lines, planes and their incidences.
#[derive(Debug, Clone)]
pub struct Geometry {
    lines: Vec<Line>,
    planes: Vec<Plane>,
    line_index: HashMap<PointSet, LineId>,
    plane_index: HashMap<PointSet, PlaneId>,
    lines_through_point: Vec<Vec<LineId>>,
    planes_through_point: Vec<Vec<PlaneId>>,
    planes_through_line: Vec<[PlaneId; 3]>,
}

impl Geometry {
    /// Enumerates and classifies everything. Fails only if a plane breaks
    /// the sign taxonomy, which would indicate a bug in the sign engine.
    pub fn new() -> Result<Self, GeometryError> {
        let lines = enumerate_lines();
        let line_index: HashMap<PointSet, LineId> = lines.iter().map(|l| (l.point_set(), l.id)).collect();

        let mut lines_through_point = vec![Vec::new(); 64];
        for line in &lines {
            for p in line.points {
                lines_through_point[p.id() as usize].push(line.id);
            }
        }

        let mut planes = Vec::with_capacity(PLANE_COUNT);
        for (i, points) in enumerate_plane_point_sets(&lines).into_iter().enumerate() {
            let id = PlaneId(i as u16);
            let set: PointSet = points.iter().copied().collect();
            let mut in_plane: Vec<LineId> =
                lines.iter().filter(|l| l.point_set().is_subset(set)).map(|l| l.id).collect();
            in_plane.sort();
            let plane_lines: [LineId; 7] =
                in_plane.try_into().map_err(|v: Vec<LineId>| GeometryError::TaxonomyViolation {
                    plane: id,
                    reason: format!("plane has {} lines instead of 7", v.len()),
                })?;
            let sign = context_sign(&points).map_err(|e| GeometryError::TaxonomyViolation {
                plane: id,
                reason: format!("plane is not a context: {e}"),
            })?;
            let b_line = find_b_line(id, &points, &plane_lines, &lines)?;
            let (class, negative_lines) = classify(id, set, sign, &plane_lines, b_line, &lines)?;
            planes.push(Plane { id, points, lines: plane_lines, sign, b_line, class, negative_lines });
        }

        let plane_index = planes.iter().map(|p| (p.point_set(), p.id)).collect();
        let mut planes_through_point = vec![Vec::new(); 64];
        let mut through_line: Vec<Vec<PlaneId>> = vec![Vec::new(); lines.len()];
        for plane in &planes {
            for p in plane.points {
                planes_through_point[p.id() as usize].push(plane.id);
            }
            for l in plane.lines {
                through_line[l.index()].push(plane.id);
            }
        }
        let planes_through_line = through_line
            .into_iter()
            .map(|v| v.try_into().expect("every isotropic line lies in three planes"))
            .collect();

        Ok(Geometry {
            lines,
            planes,
            line_index,
            plane_index,
            lines_through_point,
            planes_through_point,
            planes_through_line,
        })
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    pub fn planes(&self) -> &[Plane] {
        &self.planes
    }

    pub fn line(&self, id: LineId) -> Result<&Line, GeometryError> {
        self.lines.get(id.index()).ok_or(GeometryError::UnknownId { kind: "line", id: id.index() })
    }

    pub fn plane(&self, id: PlaneId) -> Result<&Plane, GeometryError> {
        self.planes.get(id.index()).ok_or(GeometryError::UnknownId { kind: "plane", id: id.index() })
    }

    /// The line with exactly this point set, if it is one.
    pub fn line_id(&self, points: PointSet) -> Option<LineId> {
        self.line_index.get(&points).copied()
    }

    pub fn plane_id(&self, points: PointSet) -> Option<PlaneId> {
        self.plane_index.get(&points).copied()
    }

    /// Lines and planes through the point with the given id.
    pub fn point_incidence(&self, point_id: u8) -> Result<(&[LineId], &[PlaneId]), GeometryError> {
        let o = Observable::from_id(point_id)
            .map_err(|_| GeometryError::UnknownId { kind: "point", id: point_id as usize })?;
        Ok((&self.lines_through_point[o.id() as usize], &self.planes_through_point[o.id() as usize]))
    }

    pub fn lines_through(&self, o: Observable) -> &[LineId] {
        &self.lines_through_point[o.id() as usize]
    }

    pub fn planes_through(&self, o: Observable) -> &[PlaneId] {
        &self.planes_through_point[o.id() as usize]
    }

    pub fn planes_through_line(&self, line: LineId) -> Result<[PlaneId; 3], GeometryError> {
        self.planes_through_line
            .get(line.index())
            .copied()
            .ok_or(GeometryError::UnknownId { kind: "line", id: line.index() })
    }

    /// Sign of the product of all seven observables of the plane.
    pub fn plane_sign(&self, plane: PlaneId) -> Result<Sign, GeometryError> {
        let p = self.plane(plane)?;
        context_sign(&p.points).map_err(|e| GeometryError::TaxonomyViolation { plane, reason: e.to_string() })
    }

    /// The four points of the plane off the given line.
    pub fn affine_part(&self, plane: PlaneId, line: LineId) -> Result<[Observable; 4], GeometryError> {
        let p = self.plane(plane)?;
        let l = self.line(line)?;
        if !p.contains_line(line) {
            return Err(GeometryError::LineNotInPlane { plane, line });
        }
        let rest: Vec<Observable> = p.point_set().difference(l.point_set()).iter().collect();
        Ok(rest.try_into().expect("seven minus three"))
    }

    /// Recomputes the class of a plane from its signs and observable types.
    pub fn classify_plane(&self, plane: PlaneId) -> Result<PlaneClass, GeometryError> {
        let p = self.plane(plane)?;
        let sign = self.plane_sign(plane)?;
        classify(plane, p.point_set(), sign, &p.lines, p.b_line, &self.lines).map(|(c, _)| c)
    }

    pub fn negative_lines_in(&self, plane: PlaneId) -> Result<Vec<LineId>, GeometryError> {
        let p = self.plane(plane)?;
        Ok(p.lines.iter().copied().filter(|l| self.lines[l.index()].sign.is_negative()).collect())
    }
}

fn find_b_line(
    id: PlaneId,
    points: &[Observable; 7],
    plane_lines: &[LineId; 7],
    lines: &[Line],
) -> Result<LineId, GeometryError> {
    let b_points: PointSet = points.iter().copied().filter(|o| o.observable_type() == ObservableType::B).collect();
    if b_points.len() != 3 {
        return Err(GeometryError::TaxonomyViolation {
            plane: id,
            reason: format!("expected 3 type-B observables, found {}", b_points.len()),
        });
    }
    plane_lines.iter().copied().find(|l| lines[l.index()].point_set() == b_points).ok_or_else(|| {
        GeometryError::TaxonomyViolation { plane: id, reason: "type-B observables are not collinear".into() }
    })
}

fn classify(
    id: PlaneId,
    points: PointSet,
    sign: Sign,
    plane_lines: &[LineId; 7],
    b_line: LineId,
    lines: &[Line],
) -> Result<(PlaneClass, u8), GeometryError> {
    let violation = |reason: String| GeometryError::TaxonomyViolation { plane: id, reason };
    let affine = points.difference(lines[b_line.index()].point_set());
    let count_type = |t| affine.iter().filter(|o| o.observable_type() == t).count();
    let (a, c) = (count_type(ObservableType::A), count_type(ObservableType::C));
    let negative: Vec<PointSet> =
        plane_lines.iter().map(|l| &lines[l.index()]).filter(|l| l.sign.is_negative()).map(Line::point_set).collect();
    let n_neg = negative.len() as u8;

    let class = match (sign, a, c) {
        (Sign::Minus, 0, 4) => {
            if negative.len() != 3 {
                return Err(violation(format!("negative plane with {} negative lines", negative.len())));
            }
            let common = negative[0].intersection(negative[1]).intersection(negative[2]);
            if common.len() != 1 {
                return Err(violation("negative lines of a negative plane are not concurrent".into()));
            }
            PlaneClass::Negative
        }
        (Sign::Minus, _, _) => return Err(violation(format!("negative plane with affine part {a}A/{c}C"))),
        (Sign::Plus, 1, 3) if negative.is_empty() => PlaneClass::PosB,
        (Sign::Plus, 1, 3) => {
            if negative.len() != 4 {
                return Err(violation(format!("type-a plane with {} negative lines", negative.len())));
            }
            for i in 0..4 {
                for j in i + 1..4 {
                    for k in j + 1..4 {
                        if !negative[i].intersection(negative[j]).intersection(negative[k]).is_empty() {
                            return Err(violation("three concurrent negative lines in a type-a plane".into()));
                        }
                    }
                }
            }
            PlaneClass::PosA
        }
        (Sign::Plus, 3, 1) => PlaneClass::PosC,
        (Sign::Plus, _, _) => return Err(violation(format!("positive plane with affine part {a}A/{c}C"))),
    };
    Ok((class, n_neg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::dense_product_sign;

    fn o(word: &str) -> Observable {
        word.parse().unwrap()
    }

    fn plane_of(g: &Geometry, words: &[&str]) -> PlaneId {
        let a = o(words[0]);
        let b = o(words[1]);
        let c = o(words[2]);
        let span: PointSet = [Some(a), Some(b), Some(c), a.xor(b), a.xor(c), b.xor(c), a.xor(b).and_then(|x| x.xor(c))]
            .into_iter()
            .flatten()
            .collect();
        g.plane_id(span).expect("span is an isotropic plane")
    }

    #[test]
    fn counts() {
        let g = Geometry::new().unwrap();
        assert_eq!(g.lines().len(), LINE_COUNT);
        assert_eq!(g.planes().len(), PLANE_COUNT);
        for p in Observable::all() {
            assert_eq!(g.lines_through(p).len(), LINES_PER_POINT);
            assert_eq!(g.planes_through(p).len(), PLANES_PER_POINT);
        }
        for l in g.lines() {
            assert_eq!(g.planes_through_line(l.id).unwrap().len(), PLANES_PER_LINE);
        }
    }

    #[test]
    fn negative_line_count_matches_dense_sweep() {
        let g = Geometry::new().unwrap();
        let oracle = g.lines().iter().filter(|l| dense_product_sign(&l.points) == Some(Sign::Minus)).count();
        let ours = g.lines().iter().filter(|l| l.sign.is_negative()).count();
        assert_eq!(ours, oracle);
        // frozen from the oracle sweep
        assert_eq!(oracle, 90);
    }

    #[test]
    fn plane_sign_examples() {
        let g = Geometry::new().unwrap();
        let p = plane_of(&g, &["XII", "IXI", "IIX"]);
        assert_eq!(g.plane_sign(p).unwrap(), Sign::Plus);
        assert!(g.negative_lines_in(p).unwrap().is_empty());

        let first_negative = g.planes().iter().find(|p| p.class == PlaneClass::Negative).unwrap();
        assert_eq!(g.plane_sign(first_negative.id).unwrap(), Sign::Minus);
        assert_eq!(dense_product_sign(&first_negative.points), Some(Sign::Minus));
    }

    #[test]
    fn plane_sign_is_product_of_lines_through_any_point() {
        let g = Geometry::new().unwrap();
        for plane in g.planes() {
            for &pt in &plane.points {
                let prod = plane
                    .lines
                    .iter()
                    .map(|l| g.line(*l).unwrap())
                    .filter(|l| l.points.contains(&pt))
                    .fold(Sign::Plus, |acc, l| acc * l.sign);
                assert_eq!(prod, plane.sign);
            }
        }
    }

    #[test]
    fn affine_part_examples() {
        let g = Geometry::new().unwrap();
        let p = plane_of(&g, &["XII", "IXI", "IIX"]);
        let plane = g.plane(p).unwrap();
        let b = g.line(plane.b_line).unwrap();
        let mut b_words: Vec<String> = b.points.iter().map(|x| x.to_string()).collect();
        b_words.sort();
        assert_eq!(b_words, ["IXX", "XIX", "XXI"]);
        let mut aff: Vec<String> = g.affine_part(p, plane.b_line).unwrap().iter().map(|x| x.to_string()).collect();
        aff.sort();
        assert_eq!(aff, ["IIX", "IXI", "XII", "XXX"]);

        for plane in g.planes() {
            for &l in &plane.lines {
                let quad = g.affine_part(plane.id, l).unwrap();
                assert_eq!(quad.iter().fold(0, |acc, x| acc ^ x.id()), 0);
            }
        }
    }

    #[test]
    fn affine_part_rejects_foreign_line() {
        let g = Geometry::new().unwrap();
        let plane = &g.planes()[0];
        let foreign = g.lines().iter().find(|l| !plane.contains_line(l.id)).unwrap();
        assert_eq!(
            g.affine_part(plane.id, foreign.id),
            Err(GeometryError::LineNotInPlane { plane: plane.id, line: foreign.id })
        );
        assert!(matches!(g.affine_part(PlaneId(135), LineId(0)), Err(GeometryError::UnknownId { .. })));
    }

    #[test]
    fn classification_examples() {
        let g = Geometry::new().unwrap();
        let c = plane_of(&g, &["XII", "IXI", "IIX"]);
        assert_eq!(g.classify_plane(c).unwrap(), PlaneClass::PosC);

        let a = plane_of(&g, &["XXI", "YYI", "IIX"]);
        assert_eq!(g.classify_plane(a).unwrap(), PlaneClass::PosA);
        let mut neg: Vec<Vec<String>> = g
            .negative_lines_in(a)
            .unwrap()
            .iter()
            .map(|l| {
                let mut ws: Vec<String> = g.line(*l).unwrap().points.iter().map(|x| x.to_string()).collect();
                ws.sort();
                ws
            })
            .collect();
        neg.sort();
        assert_eq!(
            neg,
            vec![
                vec!["XXI", "YYI", "ZZI"],
                vec!["XXI", "YYX", "ZZX"],
                vec!["XXX", "YYI", "ZZX"],
                vec!["XXX", "YYX", "ZZI"],
            ]
        );
    }

    #[test]
    fn negative_planes_have_three_concurrent_negative_lines() {
        let g = Geometry::new().unwrap();
        for plane in g.planes().iter().filter(|p| p.sign.is_negative()) {
            assert_eq!(plane.class, PlaneClass::Negative);
            let neg = g.negative_lines_in(plane.id).unwrap();
            assert_eq!(neg.len(), 3);
            let common =
                neg.iter().map(|l| g.line(*l).unwrap().point_set()).fold(plane.point_set(), PointSet::intersection);
            assert_eq!(common.len(), 1);
        }
    }

    #[test]
    fn negative_line_incidence_parity() {
        let g = Geometry::new().unwrap();
        for plane in g.planes() {
            let neg: Vec<PointSet> =
                g.negative_lines_in(plane.id).unwrap().iter().map(|l| g.line(*l).unwrap().point_set()).collect();
            for &pt in &plane.points {
                let k = neg.iter().filter(|s| s.contains(pt)).count();
                if plane.sign.is_negative() {
                    assert!(k == 1 || k == 3, "{k}");
                } else {
                    assert!(k == 0 || k == 2, "{k}");
                }
            }
        }
    }

    #[test]
    fn incidence_is_consistent() {
        let g = Geometry::new().unwrap();
        assert_eq!(g.point_incidence(1).unwrap().0.len(), 15);
        assert!(matches!(g.point_incidence(0), Err(GeometryError::UnknownId { .. })));
        assert!(matches!(g.point_incidence(64), Err(GeometryError::UnknownId { .. })));
        assert!(g.planes_through_line(LineId(315)).is_err());
        for plane in g.planes() {
            for line in g.lines() {
                let through = g.planes_through_line(line.id).unwrap();
                assert_eq!(plane.contains_line(line.id), through.contains(&plane.id));
            }
        }
    }

    #[test]
    fn canonical_order() {
        let g = Geometry::new().unwrap();
        assert!(g.lines().windows(2).all(|w| w[0].points < w[1].points));
        assert!(g.planes().windows(2).all(|w| w[0].points < w[1].points));
        assert_eq!(g.lines()[0].points.map(|o| o.id()), [1, 2, 3]);
    }
}
