//! Auslander–Reiten translation quivers of `C(2,n)` and of its reductions
//! `X^perp` at rigid sets of diagonals `X`.
//!
//! Vertices are arcs. The full category uses the closed-form rule
//! `tau(M_{i,j}) = M_{i+1,j+1}` with arrows `M_{i,j} -> M_{i-1,j}` and
//! `M_{i,j} -> M_{i,j-1}`. In a reduction, `tau` rotates an arc inside its
//! piece of the cut polygon, and arrows are the irreducible maps found by
//! the radical oracle [`irreducible_arrows`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{check_frozen, cut_polygon, enumerate_arcs, Arc};
use crate::error::{Error, Result};
use crate::rank_one::arc_generator;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationQuiver {
    n: usize,
    frozen: Vec<Arc>,
    vertices: Vec<Arc>,
    projectives: BTreeSet<Arc>,
    arrows: Vec<(Arc, Arc)>,
    tau: BTreeMap<Arc, Arc>,
}

/// An almost split sequence `0 -> start -> middle -> end -> 0` read off a quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArTriple {
    pub start: Arc,
    pub middle: Vec<Arc>,
    pub end: Arc,
}

impl TranslationQuiver {
    /// Assembles and validates a quiver from its parts.
    pub fn from_parts(
        n: usize,
        frozen: impl IntoIterator<Item = Arc>,
        vertices: impl IntoIterator<Item = Arc>,
        projectives: impl IntoIterator<Item = Arc>,
        arrows: impl IntoIterator<Item = (Arc, Arc)>,
        tau: impl IntoIterator<Item = (Arc, Arc)>,
    ) -> Result<Self> {
        let mut frozen: Vec<Arc> = frozen.into_iter().collect();
        frozen.sort();
        frozen.dedup();
        let mut vertices: Vec<Arc> = vertices.into_iter().collect();
        vertices.sort();
        let mut arrows: Vec<(Arc, Arc)> = arrows.into_iter().collect();
        arrows.sort();
        let q = TranslationQuiver {
            n,
            frozen,
            vertices,
            projectives: projectives.into_iter().collect(),
            arrows,
            tau: tau.into_iter().collect(),
        };
        let problems = q.validate();
        if !problems.is_empty() {
            return Err(Error::Precondition(problems.join("; ")));
        }
        Ok(q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn frozen(&self) -> &[Arc] {
        &self.frozen
    }

    pub fn vertices(&self) -> &[Arc] {
        &self.vertices
    }

    pub fn projectives(&self) -> &BTreeSet<Arc> {
        &self.projectives
    }

    pub fn arrows(&self) -> &[(Arc, Arc)] {
        &self.arrows
    }

    pub fn tau(&self) -> &BTreeMap<Arc, Arc> {
        &self.tau
    }

    pub fn contains(&self, v: &Arc) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn is_projective(&self, v: &Arc) -> bool {
        self.projectives.contains(v)
    }

    pub fn non_projectives(&self) -> impl Iterator<Item = &Arc> {
        self.vertices.iter().filter(|v| !self.projectives.contains(v))
    }

    pub fn sources_into(&self, v: &Arc) -> Vec<Arc> {
        self.arrows.iter().filter(|(_, t)| t == v).map(|(s, _)| *s).collect()
    }

    pub fn targets_out_of(&self, v: &Arc) -> Vec<Arc> {
        self.arrows.iter().filter(|(s, _)| s == v).map(|(_, t)| *t).collect()
    }

    /// Structural problems; empty for a valid translation quiver.
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if self.vertices.windows(2).any(|w| w[0] == w[1]) {
            problems.push("repeated vertex".to_string());
        }
        if let Some(p) = self.projectives.iter().find(|p| !self.contains(p)) {
            problems.push(format!("projective {p} is not a vertex"));
        }
        for (s, t) in &self.arrows {
            if !self.contains(s) || !self.contains(t) {
                problems.push(format!("arrow {s} -> {t} leaves the vertex set"));
            }
        }
        if self.arrows.windows(2).any(|w| w[0] == w[1]) {
            problems.push("arrow of multiplicity > 1".to_string());
        }
        let domain: BTreeSet<Arc> = self.tau.keys().copied().collect();
        let expected: BTreeSet<Arc> = self.non_projectives().copied().collect();
        if domain != expected {
            problems.push("tau is not defined exactly on the non-projectives".to_string());
        }
        let image: BTreeSet<Arc> = self.tau.values().copied().collect();
        if image.len() != self.tau.len() {
            problems.push("tau is not injective".to_string());
        }
        if let Some(t) = image.iter().find(|t| !self.contains(t)) {
            problems.push(format!("tau image {t} is not a vertex"));
        }
        problems.extend(self.mesh_violations());
        problems
    }

    /// Non-projective vertices whose incoming arrows do not match the
    /// outgoing arrows of their translate.
    pub fn mesh_violations(&self) -> Vec<String> {
        self.tau
            .iter()
            .filter_map(|(x, tx)| {
                let mut into = self.sources_into(x);
                let mut out = self.targets_out_of(tx);
                into.sort();
                out.sort();
                (into != out).then(|| format!("mesh at {x}: sources into {x} {into:?} vs targets out of {tx} {out:?}"))
            })
            .collect()
    }
}

/// The AR quiver of `C(2,n)` by the closed-form rule.
pub fn build_c2n(n: usize) -> Result<TranslationQuiver> {
    if n < 4 {
        return Err(Error::DegeneratePolygon { n, min: 4 });
    }
    let vertices = enumerate_arcs(n)?;
    let projectives: BTreeSet<Arc> = vertices.iter().copied().filter(|a| a.is_boundary(n)).collect();
    let tau = vertices.iter().filter(|a| !a.is_boundary(n)).map(|a| {
        let image = Arc::cyclic(n, a.i() + 1, a.j() + 1).expect("rotation keeps endpoints apart");
        (*a, image)
    });
    let arrows = vertices.iter().flat_map(|a| {
        let (i, j) = (a.i(), a.j());
        [Arc::cyclic(n, i + n - 1, j), Arc::cyclic(n, i, j + n - 1)]
            .into_iter()
            .flatten()
            .map(move |t| (*a, t))
    });
    TranslationQuiver::from_parts(
        n,
        [],
        vertices.clone(),
        projectives,
        arrows.collect::<Vec<_>>(),
        tau.collect::<Vec<_>>(),
    )
}

/// Vertices of `X^perp`: arcs crossing no member of `frozen`.
pub fn perp_vertices(n: usize, frozen: &[Arc]) -> Result<Vec<Arc>> {
    Ok(enumerate_arcs(n)?
        .into_iter()
        .filter(|a| frozen.iter().all(|x| !x.crosses(a)))
        .collect())
}

/// The AR quiver of the reduction `X^perp` of `C(2,n)` at a rigid set of diagonals.
pub fn reduce(n: usize, frozen: &[Arc]) -> Result<TranslationQuiver> {
    if n < 4 {
        return Err(Error::DegeneratePolygon { n, min: 4 });
    }
    check_frozen(n, frozen).map_err(|e| match e {
        Error::BoundaryArc(a) => Error::BoundaryFrozen(a),
        other => other,
    })?;
    let decomposition = cut_polygon(n, frozen)?;
    let vertices = perp_vertices(n, frozen)?;
    let projectives: BTreeSet<Arc> = vertices
        .iter()
        .copied()
        .filter(|a| a.is_boundary(n) || frozen.contains(a))
        .collect();
    let mut tau = Vec::new();
    for a in vertices.iter().filter(|a| !projectives.contains(a)) {
        let piece = decomposition
            .pieces
            .iter()
            .find(|p| p.contains(&a.i()) && p.contains(&a.j()))
            .expect("a compatible arc lies in one piece");
        let succ = |v: usize| {
            let pos = piece.iter().position(|&w| w == v).expect("endpoint in piece");
            piece[(pos + 1) % piece.len()]
        };
        tau.push((*a, Arc::new(succ(a.i()), succ(a.j()))));
    }
    let arrows = irreducible_arrows(&vertices, n);
    TranslationQuiver::from_parts(n, frozen.iter().copied(), vertices, projectives, arrows, tau)
}

/// Irreducible maps among the given rank-one modules: `I -> J` is an arrow
/// when the generator admits no factorization `I -> K -> J` of defect zero
/// through a third vertex `K`.
pub fn irreducible_arrows(vertex_set: &[Arc], n: usize) -> Vec<(Arc, Arc)> {
    let table: Vec<Vec<Vec<u32>>> = vertex_set
        .iter()
        .map(|s| vertex_set.iter().map(|t| arc_generator(n, s, t)).collect())
        .collect();
    let mut arrows = Vec::new();
    for (a, source) in vertex_set.iter().enumerate() {
        for (b, target) in vertex_set.iter().enumerate() {
            if a == b {
                continue;
            }
            let factors = (0..vertex_set.len())
                .filter(|&c| c != a && c != b)
                .any(|c| table[a][c].iter().zip(&table[c][b]).any(|(x, y)| x + y == 0));
            if !factors {
                arrows.push((*source, *target));
            }
        }
    }
    arrows.sort();
    arrows
}

/// One triple per non-projective vertex, ordered by end term.
pub fn ar_sequences(q: &TranslationQuiver) -> Vec<ArTriple> {
    q.tau
        .iter()
        .map(|(x, tx)| {
            let mut middle = q.sources_into(x);
            middle.sort();
            ArTriple {
                start: *tx,
                middle,
                end: *x,
            }
        })
        .collect()
}

/// Full subquiver on the non-projective vertices.
pub fn stable_quiver(q: &TranslationQuiver) -> TranslationQuiver {
    let keep: BTreeSet<Arc> = q.non_projectives().copied().collect();
    TranslationQuiver {
        n: q.n,
        frozen: q.frozen.clone(),
        vertices: keep.iter().copied().collect(),
        projectives: BTreeSet::new(),
        arrows: q
            .arrows
            .iter()
            .filter(|(s, t)| keep.contains(s) && keep.contains(t))
            .copied()
            .collect(),
        tau: q
            .tau
            .iter()
            .filter(|(x, tx)| keep.contains(x) && keep.contains(tx))
            .map(|(x, tx)| (*x, *tx))
            .collect(),
    }
}

/// Renames every vertex through `map`, which must be injective on the vertices.
pub fn relabel(q: &TranslationQuiver, map: &BTreeMap<Arc, Arc>) -> TranslationQuiver {
    let m = |a: &Arc| map[a];
    let mut arrows: Vec<(Arc, Arc)> = q.arrows.iter().map(|(s, t)| (m(s), m(t))).collect();
    arrows.sort();
    let mut vertices: Vec<Arc> = q.vertices.iter().map(m).collect();
    vertices.sort();
    TranslationQuiver {
        n: q.n,
        frozen: q.frozen.clone(),
        vertices,
        projectives: q.projectives.iter().map(m).collect(),
        arrows,
        tau: q.tau.iter().map(|(x, tx)| (m(x), m(tx))).collect(),
    }
}

/// Disjoint union over the pieces of the cut polygon (size at least four) of
/// the stable AR quivers of `C(2, m_i)`, each relabelled into the n-gon by
/// sending local vertex `r` to the `r`-th vertex of the piece.
pub fn piecewise_stable_model(n: usize, frozen: &[Arc]) -> Result<TranslationQuiver> {
    let decomposition = cut_polygon(n, frozen)?;
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    let mut tau = Vec::new();
    for piece in decomposition.pieces.iter().filter(|p| p.len() >= 4) {
        let local = stable_quiver(&build_c2n(piece.len())?);
        let map: BTreeMap<Arc, Arc> = enumerate_arcs(piece.len())?
            .into_iter()
            .map(|a| (a, Arc::new(piece[a.i() - 1], piece[a.j() - 1])))
            .collect();
        let image = relabel(&local, &map);
        vertices.extend(image.vertices);
        arrows.extend(image.arrows);
        tau.extend(image.tau);
    }
    vertices.sort();
    arrows.sort();
    Ok(TranslationQuiver {
        n,
        frozen: {
            let mut f = frozen.to_vec();
            f.sort();
            f
        },
        vertices,
        projectives: BTreeSet::new(),
        arrows,
        tau: tau.into_iter().collect(),
    })
}

/// Whether `map` is an isomorphism of translation quivers `a -> b`: a
/// bijection on vertices carrying arrows onto arrows, projectives onto
/// projectives, and commuting with `tau`.
pub fn is_isomorphism(map: &BTreeMap<Arc, Arc>, a: &TranslationQuiver, b: &TranslationQuiver) -> bool {
    if a.vertices.len() != b.vertices.len() || a.vertices.iter().any(|v| !map.contains_key(v)) {
        return false;
    }
    let image: BTreeSet<Arc> = a.vertices.iter().map(|v| map[v]).collect();
    if image != b.vertices.iter().copied().collect() {
        return false;
    }
    let arrows: BTreeSet<(Arc, Arc)> = a.arrows.iter().map(|(s, t)| (map[s], map[t])).collect();
    if a.arrows.len() != b.arrows.len() || arrows != b.arrows.iter().copied().collect() {
        return false;
    }
    let projectives: BTreeSet<Arc> = a.projectives.iter().map(|p| map[p]).collect();
    if projectives != b.projectives {
        return false;
    }
    let tau: BTreeMap<Arc, Arc> = a.tau.iter().map(|(x, tx)| (map[x], map[tx])).collect();
    tau == b.tau
}

/// Maximal sets of pairwise compatible vertices that contain every
/// projective, i.e. the cluster-tilting objects of the category. Each set is
/// returned in full, projectives included, and the list is sorted.
pub fn maximal_rigid_completions(q: &TranslationQuiver) -> Vec<BTreeSet<Arc>> {
    let candidates: Vec<Arc> = q.non_projectives().copied().collect();
    let mut out = Vec::new();
    bron_kerbosch(
        &candidates,
        Vec::new(),
        (0..candidates.len()).collect(),
        Vec::new(),
        &mut |clique| {
            let mut set: BTreeSet<Arc> = q.projectives.clone();
            set.extend(clique.iter().map(|&c| candidates[c]));
            out.push(set);
        },
    );
    out.sort();
    out
}

fn bron_kerbosch(
    arcs: &[Arc],
    current: Vec<usize>,
    mut candidates: Vec<usize>,
    mut excluded: Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if candidates.is_empty() && excluded.is_empty() {
        emit(&current);
        return;
    }
    while let Some(v) = candidates.pop() {
        let compatible = |w: &usize| !arcs[v].crosses(&arcs[*w]);
        let mut next = current.clone();
        next.push(v);
        bron_kerbosch(
            arcs,
            next,
            candidates.iter().copied().filter(compatible).collect(),
            excluded.iter().copied().filter(compatible).collect(),
            emit,
        );
        excluded.push(v);
    }
}

#[derive(Serialize, Deserialize)]
struct VertexRecord {
    label: Arc,
    projective: bool,
}

#[derive(Serialize, Deserialize)]
struct QuiverRecord {
    n: usize,
    frozen: Vec<Arc>,
    vertices: Vec<VertexRecord>,
    arrows: Vec<(Arc, Arc)>,
    tau: Vec<(Arc, Arc)>,
}

impl TranslationQuiver {
    /// JSON document with `n`, `frozen`, `vertices`, `arrows` and `tau`;
    /// each `tau` entry is `[X, tau(X)]`.
    pub fn to_json(&self) -> String {
        let record = QuiverRecord {
            n: self.n,
            frozen: self.frozen.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexRecord {
                    label: *v,
                    projective: self.projectives.contains(v),
                })
                .collect(),
            arrows: self.arrows.clone(),
            tau: self.tau.iter().map(|(x, tx)| (*x, *tx)).collect(),
        };
        serde_json::to_string_pretty(&record).expect("quiver serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let record: QuiverRecord = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_parts(
            record.n,
            record.frozen,
            record.vertices.iter().map(|v| v.label),
            record.vertices.iter().filter(|v| v.projective).map(|v| v.label),
            record.arrows,
            record.tau,
        )
    }

    /// Graphviz digraph: vertices `M_i_j`, projectives boxed, arrows solid,
    /// `X -> tau(X)` dashed and excluded from layout constraints.
    pub fn to_dot(&self) -> String {
        let name = |a: &Arc| format!("M_{}_{}", a.i(), a.j());
        let mut out = String::from("digraph ar_quiver {\n");
        for v in &self.vertices {
            if self.projectives.contains(v) {
                let _ = writeln!(out, "  {} [shape=box];", name(v));
            } else {
                let _ = writeln!(out, "  {};", name(v));
            }
        }
        for (s, t) in &self.arrows {
            let _ = writeln!(out, "  {} -> {};", name(s), name(t));
        }
        for (x, tx) in &self.tau {
            let _ = writeln!(out, "  {} -> {} [style=dashed, constraint=false];", name(x), name(tx));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{diagonals, enumerate_triangulations};
    use crate::rank_one::ext_dim;

    fn arc(i: usize, j: usize) -> Arc {
        Arc::new(i, j)
    }

    fn set(arcs: &[(usize, usize)]) -> BTreeSet<Arc> {
        arcs.iter().map(|&(i, j)| arc(i, j)).collect()
    }

    #[test]
    fn hexagon_quiver() {
        let q = build_c2n(6).unwrap();
        assert_eq!(q.vertices().len(), 15);
        assert_eq!(q.projectives().len(), 6);
        assert_eq!(q.tau()[&arc(1, 3)], arc(2, 4));
        let mut middle = q.sources_into(&arc(2, 4));
        middle.sort();
        assert_eq!(middle, vec![arc(2, 5), arc(3, 4)]);
        assert_eq!(q.arrows().len(), 24);
    }

    #[test]
    fn square_quiver() {
        let q = build_c2n(4).unwrap();
        assert_eq!(q.vertices().len(), 6);
        assert_eq!(q.projectives().len(), 4);
        assert_eq!(q.tau()[&arc(1, 3)], arc(2, 4));
        assert_eq!(q.tau()[&arc(2, 4)], arc(1, 3));
        assert_eq!(q.arrows().len(), 8);
        assert!(matches!(build_c2n(3), Err(Error::DegeneratePolygon { .. })));
    }

    #[test]
    fn closed_form_arrows_agree_with_radical_oracle() {
        for n in 4..=8 {
            let q = build_c2n(n).unwrap();
            assert_eq!(q.arrows(), irreducible_arrows(q.vertices(), n).as_slice(), "n={n}");
        }
    }

    #[test]
    fn oracle_examples() {
        let all = enumerate_arcs(6).unwrap();
        let full = irreducible_arrows(&all, 6);
        assert!(!full.contains(&(arc(1, 2), arc(1, 6))));
        let perp = perp_vertices(6, &[arc(1, 4)]).unwrap();
        let reduced = irreducible_arrows(&perp, 6);
        assert!(reduced.contains(&(arc(1, 2), arc(1, 6))));
        assert!(reduced.contains(&(arc(4, 5), arc(3, 4))));
    }

    #[test]
    fn hexagon_reduction_at_14() {
        let q = reduce(6, &[arc(1, 4)]).unwrap();
        assert_eq!(q.vertices().len(), 11);
        assert_eq!(
            *q.projectives(),
            set(&[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4)])
        );
        let non_proj: BTreeSet<Arc> = q.non_projectives().copied().collect();
        assert_eq!(non_proj, set(&[(1, 3), (2, 4), (1, 5), (4, 6)]));
        let seqs = ar_sequences(&q);
        let ends: Vec<Arc> = seqs.iter().map(|s| s.end).collect();
        assert_eq!(ends, vec![arc(1, 3), arc(1, 5), arc(2, 4), arc(4, 6)]);
        let at = |e: Arc| seqs.iter().find(|s| s.end == e).unwrap().clone();
        assert_eq!(
            at(arc(2, 4)),
            ArTriple {
                start: arc(1, 3),
                middle: vec![arc(1, 2), arc(3, 4)],
                end: arc(2, 4)
            }
        );
        assert_eq!(at(arc(1, 5)).start, arc(4, 6));
        assert_eq!(at(arc(1, 5)).middle, vec![arc(1, 6), arc(4, 5)]);
        // 16 arrows through meshes plus 2 arrows between projectives
        let expected: BTreeSet<(Arc, Arc)> = [
            ((1, 5), (5, 6)),
            ((1, 5), (1, 4)),
            ((2, 4), (1, 4)),
            ((2, 4), (2, 3)),
            ((5, 6), (4, 6)),
            ((1, 4), (4, 6)),
            ((1, 4), (1, 3)),
            ((2, 3), (1, 3)),
            ((4, 6), (1, 6)),
            ((4, 6), (4, 5)),
            ((1, 3), (1, 2)),
            ((1, 3), (3, 4)),
            ((1, 6), (1, 5)),
            ((4, 5), (1, 5)),
            ((1, 2), (2, 4)),
            ((3, 4), (2, 4)),
            ((4, 5), (3, 4)),
            ((1, 2), (1, 6)),
        ]
        .iter()
        .map(|&((a, b), (c, d))| (arc(a, b), arc(c, d)))
        .collect();
        let got: BTreeSet<(Arc, Arc)> = q.arrows().iter().copied().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn empty_reduction_is_full_quiver() {
        for n in 4..=8 {
            assert_eq!(reduce(n, &[]).unwrap(), build_c2n(n).unwrap());
        }
    }

    #[test]
    fn reduction_errors() {
        assert!(matches!(reduce(6, &[arc(1, 4), arc(2, 5)]), Err(Error::NotRigid(..))));
        assert!(matches!(reduce(6, &[arc(1, 2)]), Err(Error::BoundaryFrozen(_))));
    }

    #[test]
    fn stable_quivers() {
        assert_eq!(stable_quiver(&build_c2n(6).unwrap()).vertices().len(), 9);
        let s = stable_quiver(&reduce(6, &[arc(1, 4)]).unwrap());
        assert_eq!(s.vertices().len(), 4);
        // two components of two vertices: arrows never join the quadrilaterals
        let left = set(&[(1, 3), (2, 4)]);
        assert!(s.arrows().iter().all(|(a, b)| left.contains(a) == left.contains(b)));
        assert!(s.tau().iter().all(|(a, b)| left.contains(a) == left.contains(b)));
        let s = stable_quiver(&reduce(8, &[arc(1, 4), arc(4, 8)]).unwrap());
        assert_eq!(s.vertices().len(), 7);
    }

    #[test]
    fn reductions_are_valid_and_match_vertex_criterion() {
        for n in 4..=9 {
            let diags = diagonals(n);
            let mut frozen_sets: Vec<Vec<Arc>> = vec![vec![]];
            for (x, a) in diags.iter().enumerate() {
                frozen_sets.push(vec![*a]);
                for b in &diags[x + 1..] {
                    if !a.crosses(b) {
                        frozen_sets.push(vec![*a, *b]);
                    }
                }
            }
            for frozen in frozen_sets {
                let q = reduce(n, &frozen).unwrap();
                assert!(q.validate().is_empty(), "n={n} {frozen:?}: {:?}", q.validate());
                for a in enumerate_arcs(n).unwrap() {
                    let s = a.to_subset(n).unwrap();
                    let orthogonal = frozen
                        .iter()
                        .all(|x| ext_dim(&s, &x.to_subset(n).unwrap()).unwrap() == 0);
                    assert_eq!(q.contains(&a), orthogonal);
                }
                let mut proj: BTreeSet<Arc> = enumerate_arcs(n)
                    .unwrap()
                    .into_iter()
                    .filter(|a| a.is_boundary(n))
                    .collect();
                proj.extend(frozen.iter().copied());
                assert_eq!(*q.projectives(), proj);
            }
        }
    }

    #[test]
    fn completions_match_triangulations() {
        let q = reduce(6, &[arc(1, 4)]).unwrap();
        let completions = maximal_rigid_completions(&q);
        assert_eq!(completions.len(), 4);
        let tris = enumerate_triangulations(6, &[arc(1, 4)]).unwrap();
        for (c, t) in completions.iter().zip(&tris) {
            assert_eq!(c.len(), 3 + 6);
            assert!(t.diagonals().iter().all(|d| c.contains(d)));
        }
    }

    #[test]
    fn json_and_dot() {
        let q = build_c2n(4).unwrap();
        let value: serde_json::Value = serde_json::from_str(&q.to_json()).unwrap();
        assert_eq!(value["vertices"].as_array().unwrap().len(), 6);
        assert_eq!(value["arrows"].as_array().unwrap().len(), 8);
        assert_eq!(value["tau"].as_array().unwrap().len(), 2);
        assert_eq!(value["vertices"][0]["label"], serde_json::json!([1, 2]));

        let q = reduce(6, &[arc(1, 4)]).unwrap();
        assert_eq!(TranslationQuiver::from_json(&q.to_json()).unwrap(), q);

        let dot = q.to_dot();
        let arrow_lines = dot
            .lines()
            .filter(|l| l.contains("->") && !l.contains("dashed"))
            .count();
        assert_eq!(arrow_lines, q.arrows().len());
        assert!(dot.contains("M_1_4 [shape=box];"));
        assert_eq!(dot.lines().filter(|l| l.contains("dashed")).count(), q.tau().len());
        assert!(TranslationQuiver::from_json("{}").is_err());
    }
}
