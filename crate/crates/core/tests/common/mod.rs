//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use grred::Arc;
use num_rational::BigRational;

/// Catalan numbers from `C_m = sum C_i C_{m-1-i}`.
pub fn catalan_recurrence(upto: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for m in 1..=upto {
        c.push((0..m).map(|i| c[i] * c[m - 1 - i]).sum());
    }
    c
}

/// Closes `seed` under the Ptolemy relation: for every quadruple
/// `i < j < k < l` whose four sides are known and exactly one diagonal is
/// known, solves for the other one. Repeats until nothing changes.
pub fn ptolemy_closure(n: usize, seed: &BTreeMap<Arc, BigRational>) -> BTreeMap<Arc, BigRational> {
    let mut p = seed.clone();
    loop {
        let mut changed = false;
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        let get = |p: &BTreeMap<Arc, BigRational>, a, b| p.get(&Arc::new(a, b)).cloned();
                        let (Some(ij), Some(kl), Some(il), Some(jk)) =
                            (get(&p, i, j), get(&p, k, l), get(&p, i, l), get(&p, j, k))
                        else {
                            continue;
                        };
                        let rhs = ij * kl + il * jk;
                        match (get(&p, i, k), get(&p, j, l)) {
                            (Some(ik), None) => {
                                p.insert(Arc::new(j, l), rhs / ik);
                                changed = true;
                            }
                            (None, Some(jl)) => {
                                p.insert(Arc::new(i, k), rhs / jl);
                                changed = true;
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        if !changed {
            return p;
        }
    }
}

pub fn arc(i: usize, j: usize) -> Arc {
    Arc::new(i, j)
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}
