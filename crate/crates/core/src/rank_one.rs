//! Rank-one modules `M_I` over the circle algebra and the monomial morphisms
//! between them.
//!
//! Every vertex space of `M_I` is a copy of `Z = C[[t]]`, so a morphism
//! `M_I -> M_J` that acts on vertex `j` by `t^{alpha_j}` is recorded by its
//! exponent tuple alone. Hom spaces are free of rank one over `Z`; the
//! generator is the tuple with minimum zero.

use std::fmt;

use crate::combinatorics::{crossing, reduce_mod, Arc, KSubset};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialMorphism {
    source: KSubset,
    target: KSubset,
    alpha: Vec<u32>,
}

impl MonomialMorphism {
    pub fn source(&self) -> &KSubset {
        &self.source
    }

    pub fn target(&self) -> &KSubset {
        &self.target
    }

    /// Exponent of `t` at vertex `j`, stored at index `j - 1`.
    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    /// Power of `t` by which this morphism differs from the generator.
    pub fn defect(&self) -> u32 {
        self.alpha.iter().copied().min().unwrap_or(0)
    }

    pub fn is_generator(&self) -> bool {
        self.defect() == 0
    }

    /// `t^power` times this morphism.
    pub fn scaled(&self, power: u32) -> Self {
        MonomialMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            alpha: self.alpha.iter().map(|a| a + power).collect(),
        }
    }
}

impl fmt::Display for MonomialMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} t^{:?}", self.source, self.target, self.alpha)
    }
}

/// Prescribed step `alpha_j - alpha_{j-1}` of a morphism `M_I -> M_J`.
fn step(source: &KSubset, target: &KSubset, j: usize) -> i64 {
    match (source.contains(j), target.contains(j)) {
        (false, true) => 1,
        (true, false) => -1,
        _ => 0,
    }
}

/// The generator of `Hom(M_I, M_J)`: the solution of the step recurrence
/// whose smallest exponent is zero.
pub fn hom_generator(source: &KSubset, target: &KSubset) -> Result<MonomialMorphism> {
    crossing(source, target)?; // ambient check
    let n = source.n();
    let mut raw = vec![0i64; n];
    for j in 2..=n {
        raw[j - 1] = raw[j - 2] + step(source, target, j);
    }
    // closing the cycle: alpha_1 - alpha_n must match the step at vertex 1
    debug_assert_eq!(raw[0] - raw[n - 1], step(source, target, 1));
    let min = raw.iter().copied().min().unwrap_or(0);
    Ok(MonomialMorphism {
        source: source.clone(),
        target: target.clone(),
        alpha: raw.iter().map(|a| (a - min) as u32).collect(),
    })
}

/// Composite `g . f` of `f: M_I -> M_J` followed by `g: M_J -> M_K`.
pub fn compose(f: &MonomialMorphism, g: &MonomialMorphism) -> Result<MonomialMorphism> {
    if f.target != g.source {
        return Err(Error::NonComposable(
            f.target.elements().to_vec(),
            g.source.elements().to_vec(),
        ));
    }
    Ok(MonomialMorphism {
        source: f.source.clone(),
        target: g.target.clone(),
        alpha: f.alpha.iter().zip(&g.alpha).map(|(a, b)| a + b).collect(),
    })
}

pub fn identity(subset: &KSubset) -> MonomialMorphism {
    MonomialMorphism {
        source: subset.clone(),
        target: subset.clone(),
        alpha: vec![0; subset.n()],
    }
}

/// `dim Ext^1(M_I, M_J)` for 2-subsets: one when the arcs cross, else zero.
pub fn ext_dim(a: &KSubset, b: &KSubset) -> Result<usize> {
    for s in [a, b] {
        if s.k() != 2 {
            return Err(Error::UnsupportedK(s.k()));
        }
    }
    Ok(usize::from(crossing(a, b)?))
}

/// Generator between two arcs of the n-gon, with exponent arithmetic only.
pub(crate) fn arc_generator(n: usize, source: &Arc, target: &Arc) -> Vec<u32> {
    let sign = |v: usize| -> i64 {
        match (source.has_endpoint(v), target.has_endpoint(v)) {
            (false, true) => 1,
            (true, false) => -1,
            _ => 0,
        }
    };
    let mut raw = vec![0i64; n];
    for j in 2..=n {
        raw[j - 1] = raw[j - 2] + sign(j);
    }
    let min = raw.iter().copied().min().unwrap_or(0);
    raw.iter().map(|a| (a - min) as u32).collect()
}

/// The almost split sequence `0 -> start -> middle -> end -> 0` ending at
/// `M_{i,j}` together with its maps. `g` carries an explicit sign per entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArSequenceMaps {
    pub start: KSubset,
    pub middle: Vec<KSubset>,
    pub end: KSubset,
    pub f: Vec<MonomialMorphism>,
    pub g: Vec<(i8, MonomialMorphism)>,
}

impl ArSequenceMaps {
    /// The composites `g_r . f_r` for each middle summand, with sign.
    pub fn composites(&self) -> Result<Vec<(i8, MonomialMorphism)>> {
        self.f
            .iter()
            .zip(&self.g)
            .map(|(f, (sign, g))| Ok((*sign, compose(f, g)?)))
            .collect()
    }

    /// Whether the signed composites cancel: all have the same exponent
    /// tuple and the signs sum to zero.
    pub fn composes_to_zero(&self) -> Result<bool> {
        let composites = self.composites()?;
        let Some((_, first)) = composites.first() else {
            return Ok(true);
        };
        let same = composites.iter().all(|(_, m)| m.alpha == first.alpha);
        let signs: i32 = composites.iter().map(|(s, _)| i32::from(*s)).sum();
        Ok(same && signs == 0)
    }
}

pub fn ar_sequence_maps(i: usize, j: usize, n: usize) -> Result<ArSequenceMaps> {
    let end_arc = Arc::try_new(i, j)
        .filter(|a| a.j() <= n)
        .ok_or_else(|| Error::Precondition(format!("({i},{j}) is not an arc of the {n}-gon")))?;
    if end_arc.is_boundary(n) {
        return Err(Error::BoundaryArc(end_arc));
    }
    let subset = |a: usize, b: usize| KSubset::new(n, [reduce_mod(n, a), reduce_mod(n, b)]);
    let end = subset(i, j)?;
    let start = subset(i + 1, j + 1)?;
    let mut middle = Vec::new();
    let mut f = Vec::new();
    let mut g = Vec::new();
    for (a, b, sign) in [(i + 1, j, 1i8), (i, j + 1, -1i8)] {
        if reduce_mod(n, a) == reduce_mod(n, b) {
            continue;
        }
        let m = subset(a, b)?;
        f.push(hom_generator(&start, &m)?);
        g.push((sign, hom_generator(&m, &end)?));
        middle.push(m);
    }
    Ok(ArSequenceMaps {
        start,
        middle,
        end,
        f,
        g,
    })
}
