//! Cyclic-order primitives: k-subsets of `[1, n]`, the crossing relation,
//! polygon arcs, triangulations and cutting a polygon along non-crossing arcs.
//!
//! Vertices are numbered `1..=n` and read cyclically. A k-subset with
//! `k = 2` is an arc of the n-gon; arcs between cyclically adjacent
//! vertices are boundary arcs.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A k-element subset of the cycle `Z/n`, stored as a strictly increasing
/// list of representatives in `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KSubset {
    n: usize,
    elements: Vec<usize>,
}

impl KSubset {
    pub fn new(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut elements: Vec<usize> = elements.into_iter().collect();
        elements.sort_unstable();
        let k = elements.len();
        let invalid = |reason: &str| Error::InvalidSubset {
            n,
            k,
            reason: reason.to_string(),
        };
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(invalid("repeated element"));
        }
        if elements.iter().any(|&e| e == 0 || e > n) {
            return Err(invalid("element outside [1, n]"));
        }
        if k == 0 || k >= n {
            return Err(invalid("need 1 <= k <= n - 1"));
        }
        Ok(KSubset { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, v: usize) -> bool {
        self.elements.binary_search(&v).is_ok()
    }

    fn check_same_ambient(&self, other: &KSubset) -> Result<()> {
        if self.n != other.n || self.k() != other.k() {
            return Err(Error::MismatchedAmbient {
                n1: self.n,
                k1: self.k(),
                n2: other.n,
                k2: other.k(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (idx, e) in self.elements.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Whether two k-subsets cross (are not weakly separated).
///
/// Walking once around the cycle through the symmetric difference and
/// recording which side each element belongs to, the subsets cross exactly
/// when that cyclic word changes side at least four times, i.e. contains the
/// pattern `I J I J`.
pub fn crossing(a: &KSubset, b: &KSubset) -> Result<bool> {
    a.check_same_ambient(b)?;
    let sides: Vec<bool> = (1..=a.n)
        .filter_map(|v| match (a.contains(v), b.contains(v)) {
            (true, false) => Some(true),
            (false, true) => Some(false),
            _ => None,
        })
        .collect();
    if sides.is_empty() {
        return Ok(false);
    }
    let changes = (0..sides.len())
        .filter(|&i| sides[i] != sides[(i + 1) % sides.len()])
        .count();
    Ok(changes >= 4)
}

/// Pairwise non-crossing.
pub fn is_rigid(set: &[KSubset]) -> Result<bool> {
    Ok(first_crossing_pair(set)?.is_none())
}

fn first_crossing_pair(set: &[KSubset]) -> Result<Option<(usize, usize)>> {
    for (x, a) in set.iter().enumerate() {
        for (y, b) in set.iter().enumerate().skip(x + 1) {
            if crossing(a, b)? {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// A 2-subset `{i, j}` of the polygon vertices, normalized so that `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Arc {
    i: usize,
    j: usize,
}

impl Arc {
    /// Builds the arc with endpoints `a` and `b` in either order.
    ///
    /// # Panics
    /// If `a == b` or either endpoint is zero.
    pub fn new(a: usize, b: usize) -> Self {
        Self::try_new(a, b).expect("arc endpoints must be distinct and positive")
    }

    pub fn try_new(a: usize, b: usize) -> Option<Self> {
        if a == b || a == 0 || b == 0 {
            return None;
        }
        Some(Arc {
            i: a.min(b),
            j: a.max(b),
        })
    }

    /// Arc through the (cyclically reduced) endpoints, `None` when they coincide.
    pub fn cyclic(n: usize, a: usize, b: usize) -> Option<Self> {
        Self::try_new(reduce_mod(n, a), reduce_mod(n, b))
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn endpoints(&self) -> [usize; 2] {
        [self.i, self.j]
    }

    pub fn has_endpoint(&self, v: usize) -> bool {
        self.i == v || self.j == v
    }

    pub fn is_boundary(&self, n: usize) -> bool {
        self.j - self.i == 1 || (self.i == 1 && self.j == n)
    }

    pub fn to_subset(&self, n: usize) -> Result<KSubset> {
        KSubset::new(n, [self.i, self.j])
    }

    /// Whether the two arcs cross in the interior of the polygon.
    pub fn crosses(&self, other: &Arc) -> bool {
        let strictly_inside = |v: usize| self.i < v && v < self.j;
        if self.has_endpoint(other.i) || self.has_endpoint(other.j) {
            return false;
        }
        strictly_inside(other.i) != strictly_inside(other.j)
    }

    /// Whether both endpoints are vertices of the n-gon.
    pub fn in_polygon(&self, n: usize) -> bool {
        self.j <= n
    }
}

impl From<Arc> for [usize; 2] {
    fn from(a: Arc) -> Self {
        [a.i, a.j]
    }
}

impl TryFrom<[usize; 2]> for Arc {
    type Error = String;

    fn try_from(value: [usize; 2]) -> std::result::Result<Self, Self::Error> {
        Arc::try_new(value[0], value[1]).ok_or_else(|| format!("invalid arc [{}, {}]", value[0], value[1]))
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Representative of `v` modulo `n` in `[1, n]`.
pub fn reduce_mod(n: usize, v: usize) -> usize {
    (v + n - 1) % n + 1
}

pub fn enumerate_arcs(n: usize) -> Result<Vec<Arc>> {
    if n < 3 {
        return Err(Error::DegeneratePolygon { n, min: 3 });
    }
    Ok((1..=n).flat_map(|i| (i + 1..=n).map(move |j| Arc { i, j })).collect())
}

pub fn boundary_arcs(n: usize) -> Vec<Arc> {
    let mut arcs: Vec<Arc> = (1..=n).map(|i| Arc::new(i, reduce_mod(n, i + 1))).collect();
    arcs.sort();
    arcs
}

pub fn diagonals(n: usize) -> Vec<Arc> {
    (1..=n)
        .flat_map(|i| (i + 2..=n).map(move |j| Arc { i, j }))
        .filter(|a| !a.is_boundary(n))
        .collect()
}

/// Arc sets: rigid iff no two arcs cross.
pub fn arcs_rigid(arcs: &[Arc]) -> bool {
    find_crossing(arcs).is_none()
}

fn find_crossing(arcs: &[Arc]) -> Option<(Arc, Arc)> {
    arcs.iter()
        .enumerate()
        .find_map(|(x, a)| arcs[x + 1..].iter().find(|b| a.crosses(b)).map(|b| (*a, *b)))
}

/// Checks that `frozen` is a rigid set of diagonals of the n-gon.
pub(crate) fn check_frozen(n: usize, frozen: &[Arc]) -> Result<()> {
    for a in frozen {
        if !a.in_polygon(n) {
            return Err(Error::Precondition(format!("arc {a} outside the {n}-gon")));
        }
        if a.is_boundary(n) {
            return Err(Error::BoundaryArc(*a));
        }
    }
    if let Some((a, b)) = find_crossing(frozen) {
        return Err(Error::NotRigid(a, b));
    }
    Ok(())
}

/// A triangulation of the n-gon, stored by its `n - 3` diagonals. The `n`
/// boundary arcs are always implicitly present.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    n: usize,
    diagonals: BTreeSet<Arc>,
}

impl Triangulation {
    pub fn new(n: usize, diagonals: impl IntoIterator<Item = Arc>) -> Result<Self> {
        if n < 3 {
            return Err(Error::DegeneratePolygon { n, min: 3 });
        }
        let diagonals: BTreeSet<Arc> = diagonals.into_iter().collect();
        let list: Vec<Arc> = diagonals.iter().copied().collect();
        check_frozen(n, &list).map_err(|e| Error::InvalidTriangulation(e.to_string()))?;
        if diagonals.len() != n - 3 {
            return Err(Error::InvalidTriangulation(format!(
                "{} diagonals given, a triangulation of a {n}-gon has {}",
                diagonals.len(),
                n - 3
            )));
        }
        Ok(Triangulation { n, diagonals })
    }

    /// The fan triangulation with all diagonals at vertex `v`.
    pub fn fan(n: usize, v: usize) -> Result<Self> {
        if v == 0 || v > n {
            return Err(Error::BadVertex { vertex: v, size: n });
        }
        Self::new(n, fan_diagonals(n, v))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> &BTreeSet<Arc> {
        &self.diagonals
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.diagonals.contains(arc) || arc.is_boundary(self.n)
    }

    /// The common vertex of all diagonals, if the triangulation is a fan.
    /// For `n = 4` the smaller endpoint of the diagonal is reported.
    pub fn fan_vertex(&self) -> Option<usize> {
        if self.n == 3 {
            return Some(1);
        }
        (1..=self.n).find(|&v| self.diagonals.iter().all(|d| d.has_endpoint(v)))
    }

    /// The quadrilateral `(a, b, c, d)`, in cyclic order with `diagonal =
    /// (a, c)`, formed by the two triangles adjacent to a diagonal.
    pub fn quadrilateral(&self, diagonal: &Arc) -> Option<[usize; 4]> {
        if !self.diagonals.contains(diagonal) {
            return None;
        }
        let (a, c) = (diagonal.i, diagonal.j);
        let is_apex = |v: &usize| self.contains(&Arc::new(a, *v)) && self.contains(&Arc::new(c, *v));
        let b = (a + 1..c).find(is_apex)?;
        let d = (c + 1..=self.n).chain(1..a).find(is_apex)?;
        Some([a, b, c, d])
    }

    /// Replaces `diagonal` by the other diagonal of its quadrilateral.
    pub fn flip(&self, diagonal: &Arc) -> Option<(Triangulation, Arc)> {
        let [_, b, _, d] = self.quadrilateral(diagonal)?;
        let new = Arc::new(b, d);
        let mut diagonals = self.diagonals.clone();
        diagonals.remove(diagonal);
        diagonals.insert(new);
        Some((Triangulation { n: self.n, diagonals }, new))
    }
}

pub(crate) fn fan_diagonals(n: usize, v: usize) -> Vec<Arc> {
    (2..n - 1)
        .map(|offset| Arc::new(v, reduce_mod(n, v + offset)))
        .collect()
}

/// Every triangulation of the n-gon containing all arcs of `required`,
/// sorted by diagonal list.
pub fn enumerate_triangulations(n: usize, required: &[Arc]) -> Result<Vec<Triangulation>> {
    if n < 3 {
        return Err(Error::DegeneratePolygon { n, min: 3 });
    }
    check_frozen(n, required)?;
    let candidates: Vec<Arc> = diagonals(n)
        .into_iter()
        .filter(|d| !required.contains(d) && required.iter().all(|r| !r.crosses(d)))
        .collect();
    let target = n - 3;
    let mut chosen: Vec<Arc> = required.to_vec();
    chosen.sort();
    chosen.dedup();
    let mut out = Vec::new();
    extend_noncrossing(&candidates, 0, &mut chosen, target, &mut |set| {
        out.push(Triangulation {
            n,
            diagonals: set.iter().copied().collect(),
        });
    });
    out.sort();
    Ok(out)
}

fn extend_noncrossing(
    candidates: &[Arc],
    from: usize,
    chosen: &mut Vec<Arc>,
    target: usize,
    emit: &mut dyn FnMut(&[Arc]),
) {
    if chosen.len() == target {
        emit(chosen);
        return;
    }
    if chosen.len() + (candidates.len() - from) < target {
        return;
    }
    for idx in from..candidates.len() {
        let d = candidates[idx];
        if chosen.iter().all(|c| !c.crosses(&d)) {
            chosen.push(d);
            extend_noncrossing(candidates, idx + 1, chosen, target, emit);
            chosen.pop();
        }
    }
}

/// Faces of the n-gon cut along a set of non-crossing diagonals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubpolygonDecomposition {
    pub n: usize,
    /// Vertex lists in increasing (hence cyclic) order, sorted lexicographically.
    pub pieces: Vec<Vec<usize>>,
    pub frozen: BTreeSet<Arc>,
}

impl SubpolygonDecomposition {
    /// The piece containing both endpoints of `arc` as vertices, if any arc
    /// lies in exactly one piece as a diagonal or edge.
    pub fn piece_of(&self, arc: &Arc) -> Option<usize> {
        self.pieces
            .iter()
            .position(|p| p.contains(&arc.i) && p.contains(&arc.j) && !self.frozen.contains(arc))
    }

    /// Edges of a piece (consecutive vertices, cyclically).
    pub fn piece_edges(piece: &[usize]) -> Vec<Arc> {
        (0..piece.len())
            .map(|idx| Arc::new(piece[idx], piece[(idx + 1) % piece.len()]))
            .collect()
    }
}

pub fn cut_polygon(n: usize, frozen: &[Arc]) -> Result<SubpolygonDecomposition> {
    if n < 3 {
        return Err(Error::DegeneratePolygon { n, min: 3 });
    }
    check_frozen(n, frozen)?;
    let mut pieces: Vec<Vec<usize>> = vec![(1..=n).collect()];
    for arc in frozen {
        let idx = pieces
            .iter()
            .position(|p| p.contains(&arc.i) && p.contains(&arc.j))
            .expect("a non-crossing arc lies inside one face");
        let piece = pieces.swap_remove(idx);
        let (inner, outer): (Vec<usize>, Vec<usize>) = (
            piece.iter().copied().filter(|&v| arc.i <= v && v <= arc.j).collect(),
            piece.iter().copied().filter(|&v| v <= arc.i || arc.j <= v).collect(),
        );
        pieces.push(inner);
        pieces.push(outer);
    }
    pieces.sort();
    Ok(SubpolygonDecomposition {
        n,
        pieces,
        frozen: frozen.iter().copied().collect(),
    })
}

/// Catalan numbers by the convolution recurrence.
pub fn catalan(m: usize) -> u128 {
    let mut c = vec![1u128; m + 1];
    for k in 1..=m {
        c[k] = (0..k).map(|i| c[i] * c[k - 1 - i]).sum();
    }
    c[m]
}
