//! Quiver mutation on skew-symmetric exchange matrices and recognition of
//! Dynkin orientations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{Arc, Triangulation};
use crate::error::{Error, Result};

/// A quiver without loops or 2-cycles, stored as `b[i][j]` = arrows `i -> j`
/// minus arrows `j -> i`. Vertices are 1-based in the public API.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeQuiver {
    labels: Vec<String>,
    b: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(m) => write!(f, "A{m}"),
            DynkinType::D(m) => write!(f, "D{m}"),
            DynkinType::E6 => write!(f, "E6"),
            DynkinType::E7 => write!(f, "E7"),
            DynkinType::E8 => write!(f, "E8"),
        }
    }
}

impl std::str::FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnknownName(s.to_string());
        let (head, rank) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        let m: usize = rank.parse().map_err(|_| bad())?;
        match (head.to_ascii_uppercase().as_str(), m) {
            ("A", m) if m >= 1 => Ok(DynkinType::A(m)),
            ("D", m) if m >= 4 => Ok(DynkinType::D(m)),
            ("E", 6) => Ok(DynkinType::E6),
            ("E", 7) => Ok(DynkinType::E7),
            ("E", 8) => Ok(DynkinType::E8),
            _ => Err(bad()),
        }
    }
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(m) | DynkinType::D(m) => m,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
            DynkinType::E8 => 8,
        }
    }

    /// Edges of the diagram on vertices `0..rank`.
    fn edges(&self) -> Vec<(usize, usize)> {
        let m = self.rank();
        let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match *self {
            DynkinType::A(_) => chain(m),
            DynkinType::D(_) => {
                let mut e = chain(m - 1);
                e.push((m - 3, m - 1));
                e
            }
            DynkinType::E6 | DynkinType::E7 | DynkinType::E8 => {
                let mut e = chain(m - 1);
                e.push((2, m - 1));
                e
            }
        }
    }

    /// All types of the given rank.
    pub fn all_of_rank(m: usize) -> Vec<DynkinType> {
        let mut out = vec![DynkinType::A(m)];
        if m >= 4 {
            out.push(DynkinType::D(m));
        }
        out.extend(match m {
            6 => Some(DynkinType::E6),
            7 => Some(DynkinType::E7),
            8 => Some(DynkinType::E8),
            _ => None,
        });
        out
    }
}

impl ExchangeQuiver {
    /// Quiver on vertices `1..=m` labelled by their numbers.
    pub fn from_arrows(m: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        Self::with_labels((1..=m).map(|i| i.to_string()).collect(), arrows)
    }

    pub fn with_labels(labels: Vec<String>, arrows: &[(usize, usize)]) -> Result<Self> {
        let m = labels.len();
        let mut b = vec![vec![0i64; m]; m];
        for &(i, j) in arrows {
            for v in [i, j] {
                if v == 0 || v > m {
                    return Err(Error::BadVertex { vertex: v, size: m });
                }
            }
            if i == j {
                return Err(Error::Precondition(format!("loop at vertex {i}")));
            }
            b[i - 1][j - 1] += 1;
            b[j - 1][i - 1] -= 1;
        }
        Ok(ExchangeQuiver { labels, b })
    }

    pub fn from_matrix(labels: Vec<String>, b: Vec<Vec<i64>>) -> Result<Self> {
        let q = ExchangeQuiver { labels, b };
        q.check()?;
        Ok(q)
    }

    fn check(&self) -> Result<()> {
        let m = self.labels.len();
        if self.b.len() != m || self.b.iter().any(|row| row.len() != m) {
            return Err(Error::Precondition(format!("exchange matrix is not {m}x{m}")));
        }
        for i in 0..m {
            for j in 0..m {
                if self.b[i][j] != -self.b[j][i] {
                    return Err(Error::Precondition(format!(
                        "matrix not skew-symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// Arrows `(i, j)` with multiplicity, 1-based.
    pub fn arrows(&self) -> Vec<(usize, usize)> {
        let m = self.size();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for _ in 0..self.b[i][j].max(0) {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn mutate(&self, v: usize) -> Result<Self> {
        let m = self.size();
        if v == 0 || v > m {
            return Err(Error::BadVertex { vertex: v, size: m });
        }
        let k = v - 1;
        let b = &self.b;
        let mut out = b.clone();
        for i in 0..m {
            for j in 0..m {
                out[i][j] = if i == k || j == k {
                    -b[i][j]
                } else {
                    b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
                };
            }
        }
        Ok(ExchangeQuiver {
            labels: self.labels.clone(),
            b: out,
        })
    }

    pub fn mutate_sequence(&self, vs: &[usize]) -> Result<Self> {
        vs.iter().try_fold(self.clone(), |q, &v| q.mutate(v))
    }

    /// Whether the quiver has single arrows only and its underlying graph is
    /// the Dynkin diagram of type `t`.
    pub fn is_dynkin_orientation(&self, t: DynkinType) -> bool {
        let m = self.size();
        if m != t.rank() || self.b.iter().flatten().any(|x| x.abs() > 1) {
            return false;
        }
        let mut adj = vec![vec![false; m]; m];
        for (i, j) in t.edges() {
            adj[i][j] = true;
            adj[j][i] = true;
        }
        let ours: Vec<Vec<bool>> = self.b.iter().map(|row| row.iter().map(|x| *x != 0).collect()).collect();
        isomorphic(&ours, &adj)
    }

    /// The Dynkin types this quiver is an orientation of.
    pub fn recognize(&self) -> Vec<DynkinType> {
        DynkinType::all_of_rank(self.size())
            .into_iter()
            .filter(|t| self.is_dynkin_orientation(*t))
            .collect()
    }

    /// Text format: a `vertices m` header, then one `i -> j` per arrow.
    /// Blank lines and `#` comments are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty quiver file".into()))?;
        let m: usize = header
            .strip_prefix("vertices")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected `vertices m`, found {header:?}")))?;
        let mut arrows = Vec::new();
        for line in lines {
            let (a, b) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("expected `i -> j`, found {line:?}")))?;
            let p = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{line:?}: {e}")))
            };
            arrows.push((p(a)?, p(b)?));
        }
        Self::from_arrows(m, &arrows)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vertices {}\n", self.size());
        for (i, j) in self.arrows() {
            out.push_str(&format!("{i} -> {j}\n"));
        }
        out
    }

    /// `{"labels": [...], "b": [[...]]}`
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("quiver serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let q: ExchangeQuiver = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        q.check()?;
        Ok(q)
    }
}

/// Backtracking isomorphism test between two simple undirected graphs.
fn isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    let m = a.len();
    if b.len() != m {
        return false;
    }
    let degree = |g: &[Vec<bool>], i: usize| g[i].iter().filter(|x| **x).count();
    let mut da: Vec<usize> = (0..m).map(|i| degree(a, i)).collect();
    let mut db: Vec<usize> = (0..m).map(|i| degree(b, i)).collect();
    let (ta, tb) = (da.clone(), db.clone());
    da.sort();
    db.sort();
    if da != db {
        return false;
    }
    fn extend(
        a: &[Vec<bool>],
        b: &[Vec<bool>],
        da: &[usize],
        db: &[usize],
        map: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || da[i] != db[j] || (0..i).any(|p| a[i][p] != b[j][map[p]]) {
                continue;
            }
            used[j] = true;
            map.push(j);
            if extend(a, b, da, db, map, used) {
                return true;
            }
            map.pop();
            used[j] = false;
        }
        false
    }
    extend(a, b, &ta, &tb, &mut Vec::with_capacity(m), &mut vec![false; m])
}

/// Linearly oriented quiver on the fan diagonals `(v,v+2) -> (v,v+3) -> ...`.
pub fn fan_quiver(n: usize, v: usize) -> Result<ExchangeQuiver> {
    let fan = Triangulation::fan(n, v)?;
    let order: Vec<Arc> = (2..n - 1)
        .map(|s| Arc::cyclic(n, v, v + s).expect("diagonal"))
        .collect();
    debug_assert!(order.iter().all(|d| fan.diagonals().contains(d)));
    let arrows: Vec<(usize, usize)> = (1..order.len()).map(|i| (i, i + 1)).collect();
    ExchangeQuiver::with_labels(order.iter().map(Arc::to_string).collect(), &arrows)
}

/// Named quivers: `Q37`, `Q38` and `fan_quiver(n, v)`.
pub fn builtin(name: &str) -> Result<ExchangeQuiver> {
    let trimmed = name.trim();
    match trimmed {
        "Q37" => ExchangeQuiver::from_arrows(6, &[(2, 1), (2, 3), (5, 4), (6, 5), (1, 4), (2, 5), (4, 2)]),
        "Q38" => ExchangeQuiver::from_arrows(
            8,
            &[
                (1, 2),
                (2, 6),
                (6, 5),
                (5, 1),
                (3, 2),
                (6, 7),
                (7, 3),
                (3, 4),
                (4, 8),
                (8, 7),
            ],
        ),
        _ => {
            let args = trimmed
                .strip_prefix("fan_quiver(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| Error::UnknownName(trimmed.to_string()))?;
            let parsed: Vec<usize> = args
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::UnknownName(trimmed.to_string()))?;
            match parsed[..] {
                [n, v] => fan_quiver(n, v),
                _ => Err(Error::UnknownName(trimmed.to_string())),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) const Q38_SEQUENCE: [usize; 12] = [2, 6, 3, 4, 8, 1, 7, 6, 5, 3, 4, 5];

    #[test]
    fn builtins() {
        assert_eq!(builtin("Q37").unwrap().arrows().len(), 7);
        assert_eq!(builtin("Q38").unwrap().arrows().len(), 10);
        let f = builtin("fan_quiver(6, 1)").unwrap();
        assert_eq!(f.labels(), ["(1,3)", "(1,4)", "(1,5)"]);
        assert_eq!(f.arrows(), vec![(1, 2), (2, 3)]);
        assert!(matches!(builtin("Q99"), Err(Error::UnknownName(_))));
        assert!(matches!(builtin("fan_quiver(6)"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn q37_mutates_to_e6() {
        let q = builtin("Q37").unwrap();
        assert!(!q.is_dynkin_orientation(DynkinType::E6));
        let m = q.mutate(4).unwrap();
        assert!(m.is_dynkin_orientation(DynkinType::E6));
        assert_eq!(m.recognize(), vec![DynkinType::E6]);
        for v in 1..=6 {
            assert_eq!(q.mutate(v).unwrap().mutate(v).unwrap(), q);
        }
    }

    #[test]
    fn q38_mutates_to_e8() {
        let q = builtin("Q38").unwrap();
        let m = q.mutate_sequence(&Q38_SEQUENCE).unwrap();
        assert!(m.is_dynkin_orientation(DynkinType::E8));
        assert_eq!(m.recognize(), vec![DynkinType::E8]);
        assert_eq!(q.mutate_sequence(&[]).unwrap(), q);
        assert_eq!(q.mutate_sequence(&[3, 3]).unwrap(), q);
    }

    #[test]
    fn small_cases() {
        let a2 = ExchangeQuiver::from_arrows(2, &[(1, 2)]).unwrap();
        assert_eq!(a2.mutate(2).unwrap().arrows(), vec![(2, 1)]);
        let a3 = ExchangeQuiver::from_arrows(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(a3.is_dynkin_orientation(DynkinType::A(3)));
        assert!(!a3.is_dynkin_orientation(DynkinType::A(4)));
        let double = ExchangeQuiver::from_arrows(2, &[(1, 2), (1, 2)]).unwrap();
        assert!(double.recognize().is_empty());
        assert!(!double.is_dynkin_orientation(DynkinType::A(2)));
        let d4 = ExchangeQuiver::from_arrows(4, &[(1, 2), (3, 2), (2, 4)]).unwrap();
        assert_eq!(d4.recognize(), vec![DynkinType::D(4)]);
        assert!(matches!(a2.mutate(3), Err(Error::BadVertex { vertex: 3, size: 2 })));
        assert!(matches!(a2.mutate(0), Err(Error::BadVertex { .. })));
    }

    #[test]
    fn diagrams_are_distinct_trees() {
        for m in 1..=9 {
            let types = DynkinType::all_of_rank(m);
            for t in &types {
                assert_eq!(t.edges().len(), m - 1, "{t}");
                let arrows: Vec<(usize, usize)> = t.edges().iter().map(|&(i, j)| (i + 1, j + 1)).collect();
                let q = ExchangeQuiver::from_arrows(m, &arrows).unwrap();
                assert_eq!(q.recognize(), vec![*t]);
            }
        }
        assert_eq!("e7".parse::<DynkinType>().unwrap(), DynkinType::E7);
        assert!("E9".parse::<DynkinType>().is_err());
    }

    #[test]
    fn fan_quivers_are_type_a() {
        for n in 4..=10 {
            for v in 1..=n {
                assert!(fan_quiver(n, v).unwrap().is_dynkin_orientation(DynkinType::A(n - 3)));
            }
        }
    }

    #[test]
    fn text_and_json_round_trip() {
        let q = builtin("Q38").unwrap();
        assert_eq!(ExchangeQuiver::parse_text(&q.to_text()).unwrap(), q);
        assert_eq!(ExchangeQuiver::from_json(&q.to_json()).unwrap(), q);
        let parsed = ExchangeQuiver::parse_text("# example\nvertices 3\n1 -> 2\n\n3 -> 2 # sink\n").unwrap();
        assert_eq!(parsed.arrows(), vec![(1, 2), (3, 2)]);
        assert!(ExchangeQuiver::parse_text("1 -> 2").is_err());
        assert!(ExchangeQuiver::parse_text("vertices 2\n1 -> 5").is_err());
        assert!(ExchangeQuiver::from_json(r#"{"labels":["1","2"],"b":[[0,1],[1,0]]}"#).is_err());
    }

    #[allow(clippy::needless_range_loop)]
    fn arb_quiver() -> impl Strategy<Value = ExchangeQuiver> {
        (2usize..=7).prop_flat_map(|m| {
            proptest::collection::vec(-2i64..=2, m * (m - 1) / 2).prop_map(move |upper| {
                let mut b = vec![vec![0; m]; m];
                let mut it = upper.into_iter();
                for i in 0..m {
                    for j in i + 1..m {
                        let x = it.next().unwrap();
                        b[i][j] = x;
                        b[j][i] = -x;
                    }
                }
                ExchangeQuiver::from_matrix((1..=m).map(|i| i.to_string()).collect(), b).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn mutation_is_a_skew_symmetric_involution(q in arb_quiver(), seed in 0usize..100) {
            let v = seed % q.size() + 1;
            let once = q.mutate(v).unwrap();
            prop_assert!(once.check().is_ok());
            prop_assert_eq!(once.mutate(v).unwrap(), q);
        }
    }
}
