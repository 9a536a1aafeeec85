//! Sparse Laurent polynomials with integer coefficients in variables indexed
//! by arcs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc as Shared;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::Arc;
use crate::error::{Error, Result};

/// A Laurent polynomial over a fixed, ordered list of variables. Terms map
/// exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    variables: Shared<Vec<Arc>>,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(variables: Shared<Vec<Arc>>) -> Self {
        LaurentPoly {
            variables,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(variables: Shared<Vec<Arc>>, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(variables);
        let c = c.into();
        if !c.is_zero() {
            let width = p.variables.len();
            p.terms.insert(vec![0; width], c);
        }
        p
    }

    pub fn one(variables: Shared<Vec<Arc>>) -> Self {
        Self::constant(variables, 1)
    }

    /// The monomial `x_v`; `None` if `v` is not one of the variables.
    pub fn variable(variables: Shared<Vec<Arc>>, v: &Arc) -> Option<Self> {
        let idx = variables.iter().position(|w| w == v)?;
        Some(Self::monomial(variables, &[(idx, 1)], BigInt::one()))
    }

    fn monomial(variables: Shared<Vec<Arc>>, exps: &[(usize, i32)], c: BigInt) -> Self {
        let mut e = vec![0; variables.len()];
        for &(idx, k) in exps {
            e[idx] += k;
        }
        let mut p = Self::zero(variables);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms(variables: Shared<Vec<Arc>>, terms: impl IntoIterator<Item = (Vec<i32>, BigInt)>) -> Self {
        let mut p = Self::zero(variables);
        for (e, c) in terms {
            assert_eq!(e.len(), p.variables.len(), "exponent vector width");
            p.add_term(e, c);
        }
        p
    }

    pub fn variables(&self) -> &[Arc] {
        &self.variables
    }

    pub fn shared_variables(&self) -> Shared<Vec<Arc>> {
        self.variables.clone()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if Shared::ptr_eq(&self.variables, &other.variables) || self.variables == other.variables {
            Ok(())
        } else {
            Err(Error::MismatchedVariables)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.variables.clone());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    /// Componentwise minimum exponent over all terms.
    fn min_exponents(&self) -> Vec<i32> {
        let mut min = vec![i32::MAX; self.variables.len()];
        for e in self.terms.keys() {
            for (m, x) in min.iter_mut().zip(e) {
                *m = (*m).min(*x);
            }
        }
        min
    }

    fn shifted(&self, by: &[i32]) -> Self {
        LaurentPoly {
            variables: self.variables.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Both sides are first multiplied by monomials to become polynomials
    /// not divisible by any variable; the quotient of two such polynomials is
    /// again a polynomial when it exists, and single-divisor lex division
    /// finds it (or leaves a remainder).
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_compatible(divisor)?;
        if divisor.is_zero() {
            return Err(Error::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let u = self.min_exponents();
        let v = divisor.min_exponents();
        let neg = |x: &[i32]| x.iter().map(|a| -a).collect::<Vec<i32>>();
        let mut rem = self.shifted(&neg(&u));
        let g = divisor.shifted(&neg(&v));
        let (lead_e, lead_c) = g.terms.iter().next_back().expect("nonzero divisor");
        let mut quotient = Self::zero(self.variables.clone());
        while let Some((e, c)) = rem.terms.iter().next_back() {
            let diff: Vec<i32> = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            if diff.iter().any(|d| *d < 0) || !(c % lead_c).is_zero() {
                return Err(Error::NonExactDivision);
            }
            let q = c / lead_c;
            for (ge, gc) in &g.terms {
                let te: Vec<i32> = ge.iter().zip(&diff).map(|(a, b)| a + b).collect();
                rem.add_term(te, -(gc * &q));
            }
            quotient.add_term(diff, q);
        }
        let shift: Vec<i32> = u.iter().zip(&v).map(|(a, b)| a - b).collect();
        Ok(quotient.shifted(&shift))
    }

    /// Exact value under an assignment of nonzero rationals.
    pub fn specialize(&self, assignment: &BTreeMap<Arc, BigRational>) -> Result<BigRational> {
        let mut values = Vec::with_capacity(self.variables.len());
        for (idx, v) in self.variables.iter().enumerate() {
            let used = self.terms.keys().any(|e| e[idx] != 0);
            match assignment.get(v) {
                Some(x) => {
                    if x.is_zero() && self.terms.keys().any(|e| e[idx] < 0) {
                        return Err(Error::ZeroSubstitution(*v));
                    }
                    values.push(x.clone());
                }
                None if used => return Err(Error::MissingAssignment(*v)),
                None => values.push(BigRational::one()),
            }
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (x, k) in values.iter().zip(e) {
                term *= pow(x, *k);
            }
            total += term;
        }
        Ok(total)
    }

    pub fn specialize_all_ones(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc + c)
    }

    /// Sets the listed variables to one and drops them from the variable list.
    pub fn set_to_one(&self, drop: &BTreeSet<Arc>) -> Self {
        let keep: Vec<usize> = (0..self.variables.len())
            .filter(|&i| !drop.contains(&self.variables[i]))
            .collect();
        let variables: Shared<Vec<Arc>> = Shared::new(keep.iter().map(|&i| self.variables[i]).collect());
        Self::from_terms(
            variables,
            self.terms
                .iter()
                .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone())),
        )
    }

    /// Re-expresses the polynomial over another variable list that contains
    /// every variable actually used.
    pub fn with_variables(&self, variables: Shared<Vec<Arc>>) -> Option<Self> {
        let mut map = Vec::with_capacity(self.variables.len());
        for (idx, v) in self.variables.iter().enumerate() {
            match variables.iter().position(|w| w == v) {
                Some(p) => map.push(Some(p)),
                None if self.terms.keys().any(|e| e[idx] != 0) => return None,
                None => map.push(None),
            }
        }
        let width = variables.len();
        Some(Self::from_terms(
            variables,
            self.terms.iter().map(|(e, c)| {
                let mut out = vec![0; width];
                for (k, slot) in e.iter().zip(&map) {
                    if let Some(p) = slot {
                        out[*p] = *k;
                    }
                }
                (out, c.clone())
            }),
        ))
    }
}

fn pow(x: &BigRational, k: i32) -> BigRational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

impl fmt::Display for LaurentPoly {
    /// Prints `numerator / denominator` with the denominator the smallest
    /// monomial clearing all negative exponents. Variables are written
    /// `x[i,j]` in arc order; terms go in decreasing lexicographic order of
    /// their exponents read in that same arc order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut order: Vec<usize> = (0..self.variables.len()).collect();
        order.sort_by_key(|&i| self.variables[i]);
        let denom: Vec<i32> = self.min_exponents().iter().map(|m| (-m).max(0)).collect();
        let mut numerators: Vec<(Vec<i32>, &BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| (order.iter().map(|&i| e[i] + denom[i]).collect(), c))
            .collect();
        numerators.sort_by(|a, b| b.0.cmp(&a.0));
        let monomial = |exps: &[i32]| -> String {
            exps.iter()
                .zip(&order)
                .filter(|(k, _)| **k != 0)
                .map(|(k, &i)| {
                    let v = self.variables[i];
                    if *k == 1 {
                        format!("x[{},{}]", v.i(), v.j())
                    } else {
                        format!("x[{},{}]^{}", v.i(), v.j(), k)
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        let mut numerator = String::new();
        for (idx, (exps, c)) in numerators.iter().enumerate() {
            let mono = monomial(exps);
            let (sign, abs) = if c.is_negative() {
                ("-", -(*c).clone())
            } else {
                ("+", (*c).clone())
            };
            if idx == 0 {
                if sign == "-" {
                    numerator.push('-');
                }
            } else {
                numerator.push_str(&format!(" {sign} "));
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => numerator.push_str(&abs.to_string()),
                (false, true) => numerator.push_str(&mono),
                (false, false) => numerator.push_str(&format!("{abs}*{mono}")),
            }
        }
        let denominator: Vec<i32> = order.iter().map(|&i| denom[i]).collect();
        if denominator.iter().all(|d| *d == 0) {
            write!(f, "{numerator}")
        } else {
            let num = if numerators.len() > 1 {
                format!("({numerator})")
            } else {
                numerator
            };
            write!(f, "{num} / {}", monomial(&denominator))
        }
    }
}
