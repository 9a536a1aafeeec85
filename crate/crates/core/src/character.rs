//! Cluster characters of arcs as Laurent polynomials in the seed of a
//! triangulation, and a Caldero–Chapoton oracle for fan triangulations.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;
use std::sync::Arc as Shared;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::combinatorics::{boundary_arcs, check_frozen, Arc, Triangulation};
use crate::error::{Error, Result};
use crate::frieze::propagate_flips;
use crate::laurent::LaurentPoly;

/// Seed variables of `t`: its diagonals in order, then the boundary arcs.
pub fn seed_variables(t: &Triangulation) -> Shared<Vec<Arc>> {
    let mut vars: Vec<Arc> = t.diagonals().iter().copied().collect();
    vars.extend(boundary_arcs(t.n()));
    Shared::new(vars)
}

fn initial_seed(vars: &Shared<Vec<Arc>>) -> BTreeMap<Arc, LaurentPoly> {
    vars.iter()
        .map(|a| (*a, LaurentPoly::variable(vars.clone(), a).expect("seed variable")))
        .collect()
}

/// Characters of every arc of the polygon with respect to `t`.
pub fn plucker_characters(t: &Triangulation) -> Result<BTreeMap<Arc, LaurentPoly>> {
    let vars = seed_variables(t);
    propagate_flips(t, initial_seed(&vars), &[], false)
}

#[cfg(test)]
pub(crate) fn plucker_characters_reversed(t: &Triangulation) -> Result<BTreeMap<Arc, LaurentPoly>> {
    let vars = seed_variables(t);
    propagate_flips(t, initial_seed(&vars), &[], true)
}

/// Characters of the arcs compatible with `x`, reached only through
/// triangulations that contain `x`.
pub(crate) fn restricted_characters(t: &Triangulation, x: &[Arc]) -> Result<BTreeMap<Arc, LaurentPoly>> {
    let vars = seed_variables(t);
    propagate_flips(t, initial_seed(&vars), x, false)
}

pub fn plucker_character(n: usize, t: &Triangulation, arc: &Arc) -> Result<LaurentPoly> {
    if t.n() != n {
        return Err(Error::Precondition(format!(
            "triangulation is of a {}-gon, not a {n}-gon",
            t.n()
        )));
    }
    if !arc.in_polygon(n) {
        return Err(Error::Precondition(format!("{arc} is not an arc of the {n}-gon")));
    }
    let mut all = plucker_characters(t)?;
    Ok(all.remove(arc).expect("every arc is reached by flips"))
}

/// Exact evaluation of a character.
pub fn specialize(p: &LaurentPoly, assignment: &BTreeMap<Arc, BigRational>) -> Result<BigRational> {
    p.specialize(assignment)
}

/// An interval module over a linearly oriented type A quiver
/// `q[0] -> q[1] -> ...`, one-dimensional on each vertex of `support`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StringModuleSpec {
    quiver: Vec<Arc>,
    support: Option<RangeInclusive<usize>>,
}

impl StringModuleSpec {
    pub fn new(quiver: Vec<Arc>, support: Option<RangeInclusive<usize>>) -> Result<Self> {
        if let Some(r) = &support {
            if r.is_empty() || *r.end() >= quiver.len() {
                return Err(Error::Precondition(format!(
                    "support {r:?} outside quiver of size {}",
                    quiver.len()
                )));
            }
        }
        Ok(StringModuleSpec { quiver, support })
    }

    pub fn quiver(&self) -> &[Arc] {
        &self.quiver
    }

    pub fn support(&self) -> Option<&RangeInclusive<usize>> {
        self.support.as_ref()
    }

    pub fn dimension_vector(&self) -> Vec<i32> {
        (0..self.quiver.len())
            .map(|i| i32::from(self.support.as_ref().is_some_and(|r| r.contains(&i))))
            .collect()
    }

    /// Dimension vectors of all submodules. Arrows point to higher indices,
    /// so a subset of the support spans a submodule iff it is closed under
    /// successors; every such Grassmannian is a point.
    pub fn submodule_dimension_vectors(&self) -> Vec<Vec<i32>> {
        let m = self.quiver.len();
        let dim = self.dimension_vector();
        let candidates: Vec<usize> = self.support.clone().map_or_else(Vec::new, |r| r.collect());
        let mut out = Vec::new();
        // brute force over subsets of the support
        for mask in 0u64..(1 << candidates.len()) {
            let chosen: Vec<usize> = (0..candidates.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| candidates[b])
                .collect();
            let closed = chosen
                .iter()
                .all(|&i| i + 1 >= m || dim[i + 1] == 0 || chosen.contains(&(i + 1)));
            if closed {
                let mut e = vec![0; m];
                for i in chosen {
                    e[i] = 1;
                }
                out.push(e);
            }
        }
        out.sort();
        out
    }
}

/// The module `GX` of an arc over the fan at `v`: the interval of fan
/// diagonals the arc crosses, ordered `(v,v+2), (v,v+3), ...`.
pub fn fan_module(n: usize, v: usize, arc: &Arc) -> Result<StringModuleSpec> {
    let fan = Triangulation::fan(n, v)?;
    if !arc.in_polygon(n) {
        return Err(Error::Precondition(format!("{arc} is not an arc of the {n}-gon")));
    }
    let quiver = fan_order(&fan);
    let crossed: Vec<usize> = (0..quiver.len()).filter(|&i| quiver[i].crosses(arc)).collect();
    let support = match (crossed.first(), crossed.last()) {
        (Some(&a), Some(&b)) => {
            debug_assert_eq!(b - a + 1, crossed.len());
            Some(a..=b)
        }
        _ => None,
    };
    StringModuleSpec::new(quiver, support)
}

fn fan_order(fan: &Triangulation) -> Vec<Arc> {
    let (n, v) = (fan.n(), fan.fan_vertex().expect("fan"));
    (2..n - 1)
        .map(|s| Arc::cyclic(n, v, v + s).expect("diagonal"))
        .collect()
}

/// Caldero–Chapoton character over the fan at `fan_vertex` with frozen
/// variables set to one. Variables are the fan diagonals in arc order.
pub fn cc_character_fan(n: usize, fan_vertex: usize, arc: &Arc) -> Result<LaurentPoly> {
    let fan = Triangulation::fan(n, fan_vertex)?;
    cc_character(&fan, arc)
}

/// As [`cc_character_fan`], for a triangulation that must be a fan.
pub fn cc_character(t: &Triangulation, arc: &Arc) -> Result<LaurentPoly> {
    if t.fan_vertex().is_none() {
        return Err(Error::NotFan);
    }
    let n = t.n();
    let vars: Shared<Vec<Arc>> = Shared::new(t.diagonals().iter().copied().collect());
    if arc.is_boundary(n) {
        return Ok(LaurentPoly::one(vars));
    }
    if t.diagonals().contains(arc) {
        return Ok(LaurentPoly::variable(vars.clone(), arc).expect("diagonal of t"));
    }
    let module = fan_module(n, t.fan_vertex().expect("fan"), arc)?;
    let order = module.quiver();
    let slot: Vec<usize> = order
        .iter()
        .map(|d| vars.iter().position(|w| w == d).expect("fan diagonal"))
        .collect();
    let m = module.dimension_vector();
    let len = order.len();
    let at = |v: &[i32], i: Option<usize>| i.filter(|&i| i < len).map_or(0, |i| v[i]);
    let terms = module.submodule_dimension_vectors().into_iter().map(|e| {
        let quotient: Vec<i32> = m.iter().zip(&e).map(|(a, b)| a - b).collect();
        let mut exps = vec![0; len];
        for i in 0..len {
            // arrows i-1 -> i -> i+1
            exps[slot[i]] = -m[i] + at(&e, i.checked_sub(1)) + at(&quotient, Some(i + 1));
        }
        (exps, BigInt::one())
    });
    Ok(LaurentPoly::from_terms(vars, terms))
}

/// Checks that characters computed by flips confined to triangulations
/// containing `x` agree with the unconstrained characters on `arcs`.
pub fn verify_restriction(n: usize, t: &Triangulation, x: &[Arc], arcs: &[Arc]) -> Result<bool> {
    if t.n() != n {
        return Err(Error::Precondition(format!(
            "triangulation is of a {}-gon, not a {n}-gon",
            t.n()
        )));
    }
    check_frozen(n, x)?;
    if let Some(a) = x.iter().find(|a| !t.diagonals().contains(a)) {
        return Err(Error::Precondition(format!(
            "{a} is not a diagonal of the triangulation"
        )));
    }
    for a in arcs {
        if !a.in_polygon(n) {
            return Err(Error::Precondition(format!("{a} is not an arc of the {n}-gon")));
        }
        if let Some(b) = x.iter().find(|b| b.crosses(a)) {
            return Err(Error::NotRigid(*a, *b));
        }
    }
    let restricted = restricted_characters(t, x)?;
    let full = plucker_characters(t)?;
    Ok(arcs.iter().all(|a| restricted.get(a) == full.get(a)))
}

/// Sets the boundary variables of a character to one.
pub fn frozen_to_one(p: &LaurentPoly, n: usize) -> LaurentPoly {
    let boundary: BTreeSet<Arc> = boundary_arcs(n).into_iter().collect();
    p.set_to_one(&boundary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar_quiver::perp_vertices;
    use crate::combinatorics::{enumerate_arcs, enumerate_triangulations};
    use crate::frieze::{int, ptolemy_frieze};

    fn arc(i: usize, j: usize) -> Arc {
        Arc::new(i, j)
    }

    fn tri(n: usize, d: &[(usize, usize)]) -> Triangulation {
        Triangulation::new(n, d.iter().map(|&(i, j)| arc(i, j))).unwrap()
    }

    fn ones_on(vars: &[Arc]) -> BTreeMap<Arc, BigRational> {
        vars.iter().map(|a| (*a, BigRational::one())).collect()
    }

    #[test]
    fn examples() {
        let t = tri(6, &[(1, 3), (1, 4), (1, 5)]);
        let x13 = plucker_character(6, &t, &arc(1, 3)).unwrap();
        assert_eq!(x13.to_string(), "x[1,3]");
        let p24 = plucker_character(6, &t, &arc(2, 4)).unwrap();
        assert_eq!(p24.num_terms(), 2);
        assert_eq!(p24.to_string(), "(x[1,2]*x[3,4] + x[1,4]*x[2,3]) / x[1,3]");
        assert_eq!(p24.specialize_all_ones(), 2.into());
        let p26 = plucker_character(6, &t, &arc(2, 6)).unwrap();
        assert_eq!(specialize(&p26, &ones_on(p26.variables())).unwrap(), int(4));

        let t2 = tri(6, &[(2, 6), (3, 6), (4, 6)]);
        let p14 = plucker_character(6, &t2, &arc(1, 4)).unwrap();
        assert_eq!(p14.specialize_all_ones(), 3.into());
        assert_eq!(specialize(&x13, &[(arc(1, 3), int(1))].into()).unwrap(), int(1));
    }

    #[test]
    fn specialization_errors() {
        let t = tri(6, &[(1, 3), (1, 4), (1, 5)]);
        let p24 = plucker_character(6, &t, &arc(2, 4)).unwrap();
        assert!(matches!(
            specialize(&p24, &BTreeMap::new()),
            Err(Error::MissingAssignment(_))
        ));
        let mut zero = ones_on(p24.variables());
        zero.insert(arc(1, 3), int(0));
        assert!(matches!(specialize(&p24, &zero), Err(Error::ZeroSubstitution(_))));
    }

    #[test]
    fn fan_oracle_examples() {
        let m = fan_module(6, 1, &arc(3, 5)).unwrap();
        assert_eq!(m.dimension_vector(), vec![0, 1, 0]);
        assert_eq!(m.submodule_dimension_vectors().len(), 2);
        assert_eq!(
            cc_character_fan(6, 1, &arc(3, 5)).unwrap().specialize_all_ones(),
            2.into()
        );

        let m = fan_module(6, 1, &arc(2, 6)).unwrap();
        assert_eq!(m.dimension_vector(), vec![1, 1, 1]);
        assert_eq!(m.submodule_dimension_vectors().len(), 4);
        assert_eq!(
            cc_character_fan(6, 1, &arc(2, 6)).unwrap().specialize_all_ones(),
            4.into()
        );

        assert!(fan_module(6, 1, &arc(1, 3)).unwrap().support().is_none());
        assert_eq!(cc_character_fan(6, 1, &arc(1, 3)).unwrap().to_string(), "x[1,3]");
        assert!(matches!(
            cc_character(&tri(6, &[(1, 3), (3, 5), (1, 5)]), &arc(2, 4)),
            Err(Error::NotFan)
        ));
    }

    #[test]
    fn fan_oracle_matches_flips() {
        for n in 4..=9 {
            for v in 1..=n {
                let fan = Triangulation::fan(n, v).unwrap();
                let chars = plucker_characters(&fan).unwrap();
                let frieze = ptolemy_frieze(&fan, &BTreeMap::new()).unwrap();
                for a in enumerate_arcs(n).unwrap() {
                    let cc = cc_character_fan(n, v, &a).unwrap();
                    let flips = frozen_to_one(&chars[&a], n);
                    assert_eq!(flips, cc, "n={n} v={v} arc={a}");
                    assert_eq!(BigRational::from_integer(cc.specialize_all_ones()), frieze.values()[&a]);
                }
            }
        }
    }

    #[test]
    fn laurent_phenomenon_and_normalization() {
        for n in 4..=8 {
            for t in enumerate_triangulations(n, &[]).unwrap() {
                let chars = plucker_characters(&t).unwrap();
                assert_eq!(chars.len(), n * (n - 1) / 2);
                assert!(chars.values().all(LaurentPoly::has_positive_coefficients));
                for a in seed_variables(&t).iter() {
                    assert_eq!(chars[a], LaurentPoly::variable(seed_variables(&t), a).unwrap());
                }
                if n <= 7 {
                    assert_eq!(chars, plucker_characters_reversed(&t).unwrap());
                }
            }
        }
    }

    #[test]
    fn exchange_relation_on_all_quadrilaterals() {
        let n = 7;
        for t in enumerate_triangulations(n, &[]).unwrap().into_iter().step_by(5) {
            let c = plucker_characters(&t).unwrap();
            let p = |i, j| &c[&arc(i, j)];
            for a in 1..=n {
                for b in a + 1..=n {
                    for cc in b + 1..=n {
                        for d in cc + 1..=n {
                            let lhs = p(a, cc).mul(p(b, d)).unwrap();
                            let rhs = p(a, b)
                                .mul(p(cc, d))
                                .unwrap()
                                .add(&p(a, d).mul(p(b, cc)).unwrap())
                                .unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn restriction() {
        let t = tri(6, &[(1, 3), (1, 4), (1, 5)]);
        let perp = perp_vertices(6, &[arc(1, 4)]).unwrap();
        assert!(verify_restriction(6, &t, &[arc(1, 4)], &perp).unwrap());
        assert!(verify_restriction(6, &t, &[], &enumerate_arcs(6).unwrap()).unwrap());
        let t2 = tri(6, &[(2, 6), (3, 6), (4, 6)]);
        assert!(matches!(
            verify_restriction(6, &t2, &[arc(1, 4)], &[]),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            verify_restriction(6, &t, &[arc(1, 4)], &[arc(2, 5)]),
            Err(Error::NotRigid(..))
        ));
    }
}
