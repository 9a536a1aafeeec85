//! Friezes on arcs: mesh friezes propagated through AR meshes, Ptolemy
//! friezes propagated through diagonal flips, restriction to reductions,
//! and the mesh and Ptolemy checks.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ar_quiver::{ar_sequences, perp_vertices, ArTriple, TranslationQuiver};
use crate::combinatorics::{
    boundary_arcs, check_frozen, cut_polygon, reduce_mod, Arc, SubpolygonDecomposition, Triangulation,
};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Exact values attached to the arcs of an n-gon, possibly reduced at a
/// frozen arc set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frieze {
    n: usize,
    frozen: Vec<Arc>,
    values: BTreeMap<Arc, BigRational>,
}

impl Frieze {
    pub fn new(n: usize, frozen: impl IntoIterator<Item = Arc>, values: BTreeMap<Arc, BigRational>) -> Self {
        let mut frozen: Vec<Arc> = frozen.into_iter().collect();
        frozen.sort();
        frozen.dedup();
        Frieze { n, frozen, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn frozen(&self) -> &[Arc] {
        &self.frozen
    }

    pub fn values(&self) -> &BTreeMap<Arc, BigRational> {
        &self.values
    }

    pub fn get(&self, arc: &Arc) -> Option<&BigRational> {
        self.values.get(arc)
    }

    fn value(&self, arc: &Arc) -> Result<&BigRational> {
        self.values.get(arc).ok_or(Error::MissingValue(*arc))
    }

    /// Whether every value is a positive integer.
    pub fn is_positive_integral(&self) -> bool {
        self.values.values().all(|v| v.is_integer() && v.is_positive())
    }
}

#[cfg(test)]
pub(crate) fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Values that can be pushed through a Ptolemy exchange
/// `p_e * p_e' = p_ab * p_cd + p_ad * p_bc`.
pub(crate) trait ExchangeValue: Clone {
    fn is_zero_value(&self) -> bool;
    fn exchange(ab: &Self, cd: &Self, ad: &Self, bc: &Self, old: &Self) -> Result<Self>;
}

impl ExchangeValue for BigRational {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }

    fn exchange(ab: &Self, cd: &Self, ad: &Self, bc: &Self, old: &Self) -> Result<Self> {
        Ok((ab * cd + ad * bc) / old)
    }
}

impl ExchangeValue for LaurentPoly {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }

    fn exchange(ab: &Self, cd: &Self, ad: &Self, bc: &Self, old: &Self) -> Result<Self> {
        ab.mul(cd)?.add(&ad.mul(bc)?)?.exact_div(old)
    }
}

/// Breadth-first search over the flip graph starting at `start`, never
/// flipping arcs of `frozen`, until every arc compatible with `frozen` has a
/// value. `seed` must hold the values of `start`'s diagonals and all
/// boundary arcs. `reverse` flips diagonals in the opposite order, which
/// gives a second propagation path.
pub(crate) fn propagate_flips<V: ExchangeValue>(
    start: &Triangulation,
    mut values: BTreeMap<Arc, V>,
    frozen: &[Arc],
    reverse: bool,
) -> Result<BTreeMap<Arc, V>> {
    let n = start.n();
    let wanted = perp_vertices(n, frozen)?.len();
    let mut seen: BTreeSet<Triangulation> = BTreeSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start.clone());
    while let Some(t) = queue.pop_front() {
        if values.len() >= wanted {
            break;
        }
        let mut diags: Vec<Arc> = t.diagonals().iter().copied().filter(|d| !frozen.contains(d)).collect();
        if reverse {
            diags.reverse();
        }
        for e in diags {
            let [a, b, c, d] = t.quadrilateral(&e).expect("diagonal of t");
            let (flipped, new) = t.flip(&e).expect("diagonal of t");
            if !values.contains_key(&new) {
                let get = |x: usize, y: usize| &values[&Arc::new(x, y)];
                let v = V::exchange(get(a, b), get(c, d), get(a, d), get(b, c), &values[&e])?;
                if v.is_zero_value() {
                    return Err(Error::ZeroEncountered(new));
                }
                values.insert(new, v);
            }
            if seen.insert(flipped.clone()) {
                queue.push_back(flipped);
            }
        }
    }
    Ok(values)
}

/// Seed values on the diagonals of `t` and the boundary: `init` where
/// given, one elsewhere.
fn ptolemy_seed(t: &Triangulation, init: &BTreeMap<Arc, BigRational>) -> Result<BTreeMap<Arc, BigRational>> {
    let n = t.n();
    let mut seed: BTreeMap<Arc, BigRational> = t
        .diagonals()
        .iter()
        .copied()
        .chain(boundary_arcs(n))
        .map(|a| (a, BigRational::one()))
        .collect();
    for (a, v) in init {
        if !seed.contains_key(a) {
            return Err(Error::Precondition(format!(
                "initial value on {a}, which is neither a diagonal of the triangulation nor a boundary arc"
            )));
        }
        if v.is_zero() {
            return Err(Error::ZeroEncountered(*a));
        }
        seed.insert(*a, v.clone());
    }
    Ok(seed)
}

/// Ptolemy frieze of a triangulation: values on the arcs of `t` from `init`
/// (default one), every other arc by flip propagation.
pub fn ptolemy_frieze(t: &Triangulation, init: &BTreeMap<Arc, BigRational>) -> Result<Frieze> {
    let seed = ptolemy_seed(t, init)?;
    let values = propagate_flips(t, seed, &[], false)?;
    Ok(Frieze::new(t.n(), [], values))
}

#[cfg(test)]
pub(crate) fn ptolemy_frieze_reversed(t: &Triangulation, init: &BTreeMap<Arc, BigRational>) -> Result<Frieze> {
    let seed = ptolemy_seed(t, init)?;
    let values = propagate_flips(t, seed, &[], true)?;
    Ok(Frieze::new(t.n(), [], values))
}

/// Override values for a mesh frieze: projectives default to one, and so do
/// the seeding slice entries.
#[derive(Debug, Clone, Default)]
pub struct MeshSeed {
    pub boundary: BTreeMap<Arc, BigRational>,
    pub slice: BTreeMap<Arc, BigRational>,
}

/// The seeding slice of a quiver: in every piece of the cut polygon, the
/// non-projective arcs from the piece's smallest vertex. For `C(2,n)` this
/// is `{M_{1,j}}`.
pub fn seeding_slice(q: &TranslationQuiver) -> Result<Vec<Arc>> {
    let pieces = cut_polygon(q.n(), q.frozen())?;
    let mut slice = Vec::new();
    for piece in &pieces.pieces {
        let apex = piece[0];
        slice.extend(
            piece[1..]
                .iter()
                .map(|&v| Arc::new(apex, v))
                .filter(|a| q.contains(a) && !q.is_projective(a)),
        );
    }
    slice.sort();
    Ok(slice)
}

/// Mesh frieze on `q`: projectives and the seeding slice take their seed
/// values, and every other vertex follows from
/// `F(X) F(tau X) = prod F(E_i) + 1`, solved for whichever of `X`, `tau X`
/// is still unknown.
pub fn mesh_frieze(q: &TranslationQuiver, seed: &MeshSeed) -> Result<Frieze> {
    let mut values: BTreeMap<Arc, BigRational> = BTreeMap::new();
    for p in q.projectives() {
        values.insert(*p, seed.boundary.get(p).cloned().unwrap_or_else(BigRational::one));
    }
    for a in seeding_slice(q)? {
        values.insert(a, seed.slice.get(&a).cloned().unwrap_or_else(BigRational::one));
    }
    for (a, v) in seed.boundary.iter().chain(&seed.slice) {
        if !values.contains_key(a) {
            return Err(Error::Precondition(format!(
                "seed value on {a}, which is not a seed vertex"
            )));
        }
        if v.is_zero() {
            return Err(Error::DivisionByZero(*a));
        }
    }
    let triples = ar_sequences(q);
    loop {
        let mut progressed = false;
        for ArTriple { start, middle, end } in &triples {
            let Some(product) = middle
                .iter()
                .map(|m| values.get(m).cloned())
                .try_fold(BigRational::one(), |acc, v| v.map(|v| acc * v))
            else {
                continue;
            };
            let rhs = product + BigRational::one();
            let (known, unknown) = match (values.get(end), values.get(start)) {
                (Some(x), None) => (x.clone(), *start),
                (None, Some(x)) => (x.clone(), *end),
                _ => continue,
            };
            if known.is_zero() {
                return Err(Error::DivisionByZero(unknown));
            }
            let v = rhs / known;
            if v.is_zero() {
                return Err(Error::DivisionByZero(unknown));
            }
            values.insert(unknown, v);
            progressed = true;
        }
        if !progressed {
            break;
        }
    }
    if let Some(v) = q.vertices().iter().find(|v| !values.contains_key(v)) {
        return Err(Error::NonPropagatable(*v));
    }
    let frieze = Frieze::new(q.n(), q.frozen().iter().copied(), values);
    let violations = mesh_check(q, &frieze)?;
    if let Some(first) = violations.first() {
        return Err(Error::Precondition(format!(
            "seed values are inconsistent: mesh ending at {} fails",
            first.triple.end
        )));
    }
    Ok(frieze)
}

/// Restriction of a frieze to the arcs compatible with `x`.
pub fn restrict_frieze(f: &Frieze, x: &[Arc]) -> Result<Frieze> {
    check_frozen(f.n, x)?;
    let mut frozen: Vec<Arc> = f.frozen.clone();
    frozen.extend_from_slice(x);
    frozen.sort();
    frozen.dedup();
    check_frozen(f.n, &frozen)?;
    let mut values = BTreeMap::new();
    for a in perp_vertices(f.n, &frozen)? {
        values.insert(a, f.value(&a)?.clone());
    }
    Ok(Frieze::new(f.n, frozen, values))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeshViolation {
    pub triple: ArTriple,
    /// `F(X) F(tau X)`
    pub lhs: BigRational,
    /// `prod F(E_i) + 1`
    pub rhs: BigRational,
}

pub fn mesh_check(q: &TranslationQuiver, f: &Frieze) -> Result<Vec<MeshViolation>> {
    let mut out = Vec::new();
    for triple in ar_sequences(q) {
        let lhs = f.value(&triple.end)? * f.value(&triple.start)?;
        let mut product = BigRational::one();
        for m in &triple.middle {
            product *= f.value(m)?;
        }
        let rhs = product + BigRational::one();
        if lhs != rhs {
            out.push(MeshViolation { triple, lhs, rhs });
        }
    }
    Ok(out)
}

/// Quadruples `i < j < k < l` violating `p_ik p_jl = p_ij p_kl + p_il p_jk`.
/// With `pieces`, only quadruples inside a single piece are checked.
pub fn ptolemy_check(n: usize, f: &Frieze, pieces: Option<&SubpolygonDecomposition>) -> Result<Vec<[usize; 4]>> {
    let full: Vec<Vec<usize>> = vec![(1..=n).collect()];
    let vertex_sets = pieces.map_or(&full, |p| &p.pieces);
    let mut out = Vec::new();
    for piece in vertex_sets {
        let m = piece.len();
        for a in 0..m {
            for b in a + 1..m {
                for c in b + 1..m {
                    for d in c + 1..m {
                        let [i, j, k, l] = [piece[a], piece[b], piece[c], piece[d]];
                        let p = |x: usize, y: usize| f.value(&Arc::new(x, y));
                        let lhs = p(i, k)? * p(j, l)?;
                        let rhs = p(i, j)? * p(k, l)? + p(i, l)? * p(j, k)?;
                        if lhs != rhs {
                            out.push([i, j, k, l]);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn format_value(v: &BigRational) -> String {
    if v.is_integer() {
        v.to_integer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

fn parse_value(s: &str) -> Result<BigRational> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("{s:?}: zero denominator")));
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    parse_value(s)
}

/// Rows by arc span `l = 1 ..= n/2`; row `l` lists `F(M_{i,i+l})` for
/// `i = 1..n`, shifted right by `l - 1` half-columns. Arcs without a value
/// (removed by a reduction) print as `.`.
pub fn render_ascii(f: &Frieze) -> String {
    let n = f.n;
    let cell = |i: usize, span: usize| -> String {
        f.values
            .get(&Arc::new(i, reduce_mod(n, i + span)))
            .map_or_else(|| ".".to_string(), format_value)
    };
    let rows: Vec<Vec<String>> = (1..=n / 2)
        .map(|span| (1..=n).map(|i| cell(i, span)).collect())
        .collect();
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    let half = (width + 1).div_ceil(2);
    let mut out = String::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut line = " ".repeat(idx * half);
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        line.push_str(&cells.join(" "));
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

#[derive(Serialize, Deserialize)]
struct ValueRecord {
    arc: Arc,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct FriezeRecord {
    n: usize,
    frozen: Vec<Arc>,
    values: Vec<ValueRecord>,
}

impl Frieze {
    /// `{"n", "frozen", "values": [{"arc": [i,j], "value": "p" | "p/q"}]}`
    pub fn to_json(&self) -> String {
        let record = FriezeRecord {
            n: self.n,
            frozen: self.frozen.clone(),
            values: self
                .values
                .iter()
                .map(|(a, v)| ValueRecord {
                    arc: *a,
                    value: format_value(v),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&record).expect("frieze serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let record: FriezeRecord = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut values = BTreeMap::new();
        for r in record.values {
            values.insert(r.arc, parse_value(&r.value)?);
        }
        Ok(Frieze::new(record.n, record.frozen, values))
    }
}
