//! Fano pentads and the two contextual sets they carry.
//!
//! A Fano pentad is a set of five isotropic planes meeting pairwise in a
//! single point, the ten meet points all distinct, such that in each plane
//! the four meet points it holds are the complement of one of its lines
//! (the distinguished line). From a pentad we derive
//!
//! * a Mermin pentagram: the five quadruples of meet points as edges;
//! * a `10_6 15_2 − 30_3` configuration: the six non-distinguished lines of
//!   every plane as three-element contexts.

use rayon::prelude::*;
use thiserror::Error;

use crate::contextuality::ContextSet;
use crate::geometry::{Geometry, GeometryError, LineId, PlaneId, PLANE_COUNT};
use crate::pauli::{context_sign, Observable, Sign};
use crate::pointset::PointSet;

/// Number of Fano pentads of the three-qubit W(5,2).
pub const PENTAD_COUNT: usize = 12_096;

/// Unordered plane pairs in the order used for [`Pentad::meet_points`].
pub const PLANE_PAIRS: [(usize, usize); 10] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PentadError {
    #[error("not a Fano pentad: {0}")]
    NotAPentad(String),
    #[error("not a Mermin pentagram: {0}")]
    NotAPentagram(String),
    #[error("closure of edge {edge} is not an isotropic plane")]
    ClosureNotIsotropicPlane { edge: usize },
    #[error("taxonomy violation: {0}")]
    TaxonomyViolation(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Five planes forming a Fano pentad, with their meet points and
/// distinguished lines precomputed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pentad {
    planes: [PlaneId; 5],
    meets: [Observable; 10],
    distinguished: [LineId; 5],
}

impl Pentad {
    /// Validates and builds a pentad; the planes may be given in any order.
    pub fn from_planes(geom: &Geometry, mut planes: [PlaneId; 5]) -> Result<Self, PentadError> {
        planes.sort();
        if planes.windows(2).any(|w| w[0] == w[1]) {
            return Err(PentadError::NotAPentad("repeated plane".into()));
        }
        let sets: Vec<PointSet> =
            planes.iter().map(|&p| geom.plane(p).map(|pl| pl.point_set())).collect::<Result<_, _>>()?;

        let mut meets = [Observable::from_id(1).expect("valid id"); 10];
        let mut used = PointSet::EMPTY;
        for (slot, &(i, j)) in meets.iter_mut().zip(PLANE_PAIRS.iter()) {
            let m = sets[i].intersection(sets[j]).single().ok_or_else(|| {
                PentadError::NotAPentad(format!("planes {} and {} do not meet in a single point", planes[i], planes[j]))
            })?;
            if used.contains(m) {
                return Err(PentadError::NotAPentad(format!("meet point {m} repeats")));
            }
            used.insert(m);
            *slot = m;
        }

        let mut distinguished = [LineId(0); 5];
        for (k, slot) in distinguished.iter_mut().enumerate() {
            let shared = shared_set(&meets, k);
            let rest = sets[k].difference(shared);
            *slot = geom.line_id(rest).ok_or_else(|| {
                PentadError::NotAPentad(format!("shared points of plane {} are not an affine plane", planes[k]))
            })?;
        }
        Ok(Pentad { planes, meets, distinguished })
    }

    pub fn planes(&self) -> &[PlaneId; 5] {
        &self.planes
    }

    /// The ten meet points in [`PLANE_PAIRS`] order.
    pub fn meet_points(&self) -> &[Observable; 10] {
        &self.meets
    }

    /// Meet point of the planes at positions `i` and `j` (`i != j`).
    pub fn meet(&self, i: usize, j: usize) -> Observable {
        let pair = (i.min(j), i.max(j));
        let idx = PLANE_PAIRS.iter().position(|&p| p == pair).expect("distinct positions below 5");
        self.meets[idx]
    }

    /// The four meet points inside the plane at position `k`, sorted.
    pub fn shared_points(&self, k: usize) -> [Observable; 4] {
        let v: Vec<Observable> = shared_set(&self.meets, k).iter().collect();
        v.try_into().expect("each plane holds four meet points")
    }

    pub fn distinguished_line(&self, k: usize) -> LineId {
        self.distinguished[k]
    }

    pub fn distinguished_lines(&self) -> &[LineId; 5] {
        &self.distinguished
    }
}

fn shared_set(meets: &[Observable; 10], k: usize) -> PointSet {
    PLANE_PAIRS.iter().zip(meets).filter(|((i, j), _)| *i == k || *j == k).map(|(_, &m)| m).collect()
}

/// Ten observables on five four-element edges, each observable on two edges,
/// with an odd number of negative edges. Stored canonically: every edge
/// sorted, edges sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pentagram {
    edges: [[Observable; 4]; 5],
    edge_signs: [Sign; 5],
    observables: [Observable; 10],
}

impl Pentagram {
    pub fn from_edges(mut edges: [[Observable; 4]; 5]) -> Result<Self, PentadError> {
        for e in edges.iter_mut() {
            e.sort();
        }
        edges.sort();
        let mut edge_signs = [Sign::Plus; 5];
        for (k, (edge, sign)) in edges.iter().zip(edge_signs.iter_mut()).enumerate() {
            *sign = context_sign(edge).map_err(|e| PentadError::NotAPentagram(format!("edge {k}: {e}")))?;
        }
        let mut counts = [0u8; 64];
        for o in edges.iter().flatten() {
            counts[o.id() as usize] += 1;
        }
        let observables: Vec<Observable> = Observable::all().filter(|o| counts[o.id() as usize] > 0).collect();
        if let Some(o) = Observable::all().find(|o| counts[o.id() as usize] != 0 && counts[o.id() as usize] != 2) {
            return Err(PentadError::NotAPentagram(format!("{o} is on {} edges", counts[o.id() as usize])));
        }
        let observables: [Observable; 10] = observables
            .try_into()
            .map_err(|v: Vec<_>| PentadError::NotAPentagram(format!("{} observables instead of 10", v.len())))?;
        let negative = edge_signs.iter().filter(|s| s.is_negative()).count();
        if negative % 2 == 0 {
            return Err(PentadError::NotAPentagram(format!("{negative} negative edges (even)")));
        }
        Ok(Pentagram { edges, edge_signs, observables })
    }

    pub fn edges(&self) -> &[[Observable; 4]; 5] {
        &self.edges
    }

    pub fn edge_signs(&self) -> &[Sign; 5] {
        &self.edge_signs
    }

    pub fn observables(&self) -> &[Observable; 10] {
        &self.observables
    }

    pub fn negative_edges(&self) -> usize {
        self.edge_signs.iter().filter(|s| s.is_negative()).count()
    }

    pub fn to_context_set(&self) -> ContextSet {
        ContextSet::new(self.edges.iter().map(|e| e.to_vec()).collect()).expect("pentagram edges are well formed")
    }
}

/// The 25 observables and 30 three-element contexts of a pentad's
/// `10_6 15_2 − 30_3` configuration. Contexts are listed plane by plane,
/// each plane's lines in increasing id order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContextualConfig {
    observables: Vec<Observable>,
    contexts: Vec<[Observable; 3]>,
    context_lines: Vec<LineId>,
    context_signs: Vec<Sign>,
}

impl ContextualConfig {
    pub fn observables(&self) -> &[Observable] {
        &self.observables
    }

    pub fn contexts(&self) -> &[[Observable; 3]] {
        &self.contexts
    }

    pub fn context_lines(&self) -> &[LineId] {
        &self.context_lines
    }

    pub fn context_signs(&self) -> &[Sign] {
        &self.context_signs
    }

    pub fn negative_contexts(&self) -> usize {
        self.context_signs.iter().filter(|s| s.is_negative()).count()
    }

    pub fn to_context_set(&self) -> ContextSet {
        ContextSet::new(self.contexts.iter().map(|c| c.to_vec()).collect()).expect("lines are well formed")
    }
}

pub fn pentad_to_pentagram(p: &Pentad) -> Result<Pentagram, PentadError> {
    let edges: [[Observable; 4]; 5] = std::array::from_fn(|k| p.shared_points(k));
    Pentagram::from_edges(edges).map_err(|e| PentadError::TaxonomyViolation(e.to_string()))
}

/// Closes every edge to its Fano plane and rebuilds the pentad.
pub fn pentagram_to_pentad(geom: &Geometry, g: &Pentagram) -> Result<Pentad, PentadError> {
    let mut planes = [PlaneId(0); 5];
    for (k, edge) in g.edges().iter().enumerate() {
        let mut closure: PointSet = edge.iter().copied().collect();
        for (i, &a) in edge.iter().enumerate() {
            for &b in &edge[i + 1..] {
                if let Some(s) = a.xor(b) {
                    closure.insert(s);
                }
            }
        }
        planes[k] = geom.plane_id(closure).ok_or(PentadError::ClosureNotIsotropicPlane { edge: k })?;
    }
    Pentad::from_planes(geom, planes)
}

pub fn pentad_to_config(geom: &Geometry, p: &Pentad) -> Result<ContextualConfig, PentadError> {
    let mut contexts = Vec::with_capacity(30);
    let mut context_lines = Vec::with_capacity(30);
    let mut context_signs = Vec::with_capacity(30);
    let mut all = PointSet::EMPTY;
    for (k, &plane_id) in p.planes().iter().enumerate() {
        let plane = geom.plane(plane_id)?;
        all = all.union(plane.point_set());
        for &l in plane.lines.iter().filter(|&&l| l != p.distinguished_line(k)) {
            let line = geom.line(l)?;
            contexts.push(line.points);
            context_lines.push(l);
            context_signs.push(line.sign);
        }
    }
    let config = ContextualConfig { observables: all.iter().collect(), contexts, context_lines, context_signs };
    check_config(p, &config)?;
    Ok(config)
}

fn check_config(p: &Pentad, config: &ContextualConfig) -> Result<(), PentadError> {
    let violation = |msg: String| Err(PentadError::TaxonomyViolation(msg));
    if config.observables.len() != 25 || config.contexts.len() != 30 {
        return violation(format!("{} observables on {} contexts", config.observables.len(), config.contexts.len()));
    }
    let mut counts = [0u8; 64];
    for o in config.contexts.iter().flatten() {
        counts[o.id() as usize] += 1;
    }
    let meets: PointSet = p.meet_points().iter().copied().collect();
    for &o in &config.observables {
        let expected = if meets.contains(o) { 6 } else { 2 };
        if counts[o.id() as usize] != expected {
            return violation(format!("{o} lies on {} contexts, expected {expected}", counts[o.id() as usize]));
        }
    }
    if config.negative_contexts().is_multiple_of(2) {
        return violation(format!("{} negative contexts (even)", config.negative_contexts()));
    }
    Ok(())
}

/// Precomputed single-point intersection graph on the 135 planes.
pub struct PentadSearch<'g> {
    geom: &'g Geometry,
    planes: Vec<PointSet>,
    /// `meet[i][j]` is the id of the single common point, or 0.
    meet: Vec<[u8; PLANE_COUNT]>,
    neighbors: Vec<Vec<u16>>,
}

impl<'g> PentadSearch<'g> {
    pub fn new(geom: &'g Geometry) -> Self {
        let planes: Vec<PointSet> = geom.planes().iter().map(|p| p.point_set()).collect();
        let n = planes.len();
        let mut meet = vec![[0u8; PLANE_COUNT]; n];
        let mut neighbors = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if let Some(m) = planes[i].intersection(planes[j]).single() {
                    meet[i][j] = m.id();
                    neighbors[i].push(j as u16);
                }
            }
        }
        PentadSearch { geom, planes, meet, neighbors }
    }

    /// All pentads whose smallest plane id is `root`, in canonical order.
    pub fn pentads_from_root(&self, root: PlaneId) -> Vec<Pentad> {
        let mut out = Vec::new();
        let mut clique = [0u16; 5];
        clique[0] = root.0;
        self.extend(&mut clique, 1, 0, &mut out);
        out
    }

    fn extend(&self, clique: &mut [u16; 5], size: usize, used: u64, out: &mut Vec<Pentad>) {
        if size == 5 {
            if self.affine_condition(clique) {
                let pentad = Pentad::from_planes(self.geom, clique.map(PlaneId)).expect("search only yields pentads");
                out.push(pentad);
            }
            return;
        }
        let last = clique[size - 1];
        let root = clique[0] as usize;
        'candidates: for &j in self.neighbors[root].iter().filter(|&&j| j > last) {
            let mut added = used;
            for &i in &clique[..size] {
                let m = self.meet[i as usize][j as usize];
                // no single meet, or a meet point already taken by another pair
                if m == 0 || added & (1u64 << m) != 0 {
                    continue 'candidates;
                }
                added |= 1u64 << m;
            }
            clique[size] = j;
            self.extend(clique, size + 1, added, out);
        }
    }

    fn affine_condition(&self, clique: &[u16; 5]) -> bool {
        (0..5).all(|k| {
            let shared = (0..5)
                .filter(|&other| other != k)
                .fold(0u64, |acc, other| acc | (1u64 << self.meet[clique[k] as usize][clique[other] as usize]));
            let rest = self.planes[clique[k] as usize].difference(PointSet::from_bits(shared));
            rest.len() == 3 && rest.coordinate_sum() == 0
        })
    }
}

/// Every Fano pentad, in lexicographic order of the sorted plane 5-tuples.
pub fn enumerate_pentads(geom: &Geometry) -> Vec<Pentad> {
    let search = PentadSearch::new(geom);
    geom.planes().iter().flat_map(|p| search.pentads_from_root(p.id)).collect()
}

/// Same result as [`enumerate_pentads`], split by smallest plane id across
/// the current rayon pool.
pub fn par_enumerate_pentads(geom: &Geometry) -> Vec<Pentad> {
    let search = PentadSearch::new(geom);
    let per_root: Vec<Vec<Pentad>> = geom.planes().par_iter().map(|p| search.pentads_from_root(p.id)).collect();
    per_root.into_iter().flatten().collect()
}

/// Number of pentads containing each plane.
pub fn pentads_per_plane(pentads: &[Pentad]) -> Vec<usize> {
    let mut counts = vec![0; PLANE_COUNT];
    for p in pentads {
        for plane in p.planes() {
            counts[plane.index()] += 1;
        }
    }
    counts
}
