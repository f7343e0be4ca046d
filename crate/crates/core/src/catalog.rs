//! Reference schemes: cycles, Hamming, Johnson, Petersen, icosahedron and
//! direct products.

use crate::scheme::{adjacency_from_edges, from_distance_partition, validate_axioms, RelationTable};
use crate::{Error, Result};

/// Largest point count any constructor will build.
pub const SIZE_CAP: usize = 4096;

/// Facts known in advance about a catalog scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedFacts {
    pub n: usize,
    pub d: usize,
    pub valencies: Vec<usize>,
    /// Whether the scheme is Q-polynomial with respect to some `E_e`.
    pub qpoly: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub table: RelationTable,
    pub expected: Option<ExpectedFacts>,
}

impl CatalogEntry {
    fn new(name: impl Into<String>, table: RelationTable, expected: Option<ExpectedFacts>) -> Self {
        Self { name: name.into(), table, expected }
    }

    /// Whether the recorded facts agree with the table and its intersection
    /// numbers. Entries without facts only need to be schemes.
    pub fn facts_hold(&self) -> bool {
        let Ok(tensor) = validate_axioms(&self.table) else {
            return false;
        };
        match &self.expected {
            None => true,
            Some(f) => {
                f.n == self.table.n() && f.d == self.table.d() && f.valencies == tensor.valencies()
            }
        }
    }

    /// Schemes of class 1 are outside the scope of polynomial detection.
    pub fn note(&self) -> Option<&'static str> {
        (self.table.d() == 1).then_some("d=1, excluded from polyprops")
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Distance scheme of the `n`-cycle (the ordinary `n`-gon).
pub fn cycle(n: usize) -> Result<CatalogEntry> {
    if n < 3 {
        return Err(Error::BadParameters(format!("cycle needs n >= 3, got {n}")));
    }
    if n > SIZE_CAP {
        return Err(Error::TooLarge { size: n, cap: SIZE_CAP });
    }
    let edges: Vec<_> = (0..n).map(|x| (x, (x + 1) % n)).collect();
    let table = from_distance_partition(&adjacency_from_edges(n, &edges)?)?;
    let d = n / 2;
    let valencies = (0..=d).map(|i| if i == 0 || 2 * i == n { 1 } else { 2 }).collect();
    let qpoly = (d >= 2).then_some(true);
    Ok(CatalogEntry::new(format!("cycle:{n}"), table, Some(ExpectedFacts { n, d, valencies, qpoly })))
}

/// Hamming scheme `H(d, q)` on `q`-ary words of length `d`.
pub fn hamming(d: usize, q: usize) -> Result<CatalogEntry> {
    if d == 0 || q < 2 {
        return Err(Error::BadParameters(format!("hamming needs d >= 1 and q >= 2, got ({d},{q})")));
    }
    let n = u32::try_from(d)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .filter(|&n| n <= SIZE_CAP)
        .ok_or(Error::TooLarge { size: q.saturating_pow(d.min(64) as u32), cap: SIZE_CAP })?;
    let digits = |mut x: usize| {
        let mut out = vec![0; d];
        for slot in out.iter_mut() {
            *slot = x % q;
            x /= q;
        }
        out
    };
    let words: Vec<Vec<usize>> = (0..n).map(digits).collect();
    let rows: Vec<Vec<usize>> = words
        .iter()
        .map(|a| words.iter().map(|b| a.iter().zip(b).filter(|(s, t)| s != t).count()).collect())
        .collect();
    let table = RelationTable::from_rows(&rows, d)?;
    let valencies = (0..=d).map(|i| binomial(d, i) * (q - 1).pow(i as u32)).collect();
    let qpoly = (d >= 2).then_some(true);
    Ok(CatalogEntry::new(format!("hamming:{d},{q}"), table, Some(ExpectedFacts { n, d, valencies, qpoly })))
}

/// Johnson scheme `J(v, k)`: relation `i` holds when `|A ∩ B| = k - i`.
pub fn johnson(v: usize, k: usize) -> Result<CatalogEntry> {
    if k == 0 || 2 * k > v || v > 63 {
        return Err(Error::BadParameters(format!("johnson needs 1 <= k <= v/2, got ({v},{k})")));
    }
    let n = binomial(v, k);
    if n > SIZE_CAP {
        return Err(Error::TooLarge { size: n, cap: SIZE_CAP });
    }
    let subsets: Vec<u64> = (0u64..1 << v).filter(|s| s.count_ones() as usize == k).collect();
    let rows: Vec<Vec<usize>> = subsets
        .iter()
        .map(|a| subsets.iter().map(|b| k - (a & b).count_ones() as usize).collect())
        .collect();
    let table = RelationTable::from_rows(&rows, k)?;
    let valencies = (0..=k).map(|i| binomial(k, i) * binomial(v - k, i)).collect();
    let qpoly = (k >= 2).then_some(true);
    Ok(CatalogEntry::new(format!("johnson:{v},{k}"), table, Some(ExpectedFacts { n, d: k, valencies, qpoly })))
}

/// Distance scheme of the Petersen graph (the Kneser graph on 2-subsets of
/// a 5-set).
pub fn petersen() -> CatalogEntry {
    let subsets: Vec<u32> = (0u32..32).filter(|s| s.count_ones() == 2).collect();
    let mut edges = Vec::new();
    for (a, sa) in subsets.iter().enumerate() {
        for (b, sb) in subsets.iter().enumerate().skip(a + 1) {
            if sa & sb == 0 {
                edges.push((a, b));
            }
        }
    }
    let adj = adjacency_from_edges(10, &edges).expect("valid edge list");
    let table = from_distance_partition(&adj).expect("Petersen graph is connected");
    CatalogEntry::new(
        "petersen",
        table,
        Some(ExpectedFacts { n: 10, d: 2, valencies: vec![1, 3, 6], qpoly: Some(true) }),
    )
}

const ICOSAHEDRON_EDGES: [(usize, usize); 30] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 1),
    (1, 6), (1, 7), (2, 7), (2, 8), (3, 8),
    (3, 9), (4, 9), (4, 10), (5, 10), (5, 6),
    (6, 7), (7, 8), (8, 9), (9, 10), (10, 6),
    (11, 6), (11, 7), (11, 8), (11, 9), (11, 10),
];

/// Distance scheme of the icosahedron graph.
pub fn icosahedron() -> CatalogEntry {
    let adj = adjacency_from_edges(12, &ICOSAHEDRON_EDGES).expect("valid edge list");
    let table = from_distance_partition(&adj).expect("icosahedron is connected");
    CatalogEntry::new(
        "icosahedron",
        table,
        Some(ExpectedFacts { n: 12, d: 3, valencies: vec![1, 5, 5, 1], qpoly: Some(true) }),
    )
}

/// Direct product of two schemes: the pair relation `(r, s)` gets index
/// `r * (d_b + 1) + s`.
pub fn direct_product(a: &CatalogEntry, b: &CatalogEntry) -> Result<CatalogEntry> {
    let (na, nb) = (a.table.n(), b.table.n());
    let n = na.checked_mul(nb).filter(|&n| n <= SIZE_CAP).ok_or(Error::TooLarge {
        size: na.saturating_mul(nb),
        cap: SIZE_CAP,
    })?;
    let wb = b.table.d() + 1;
    let d = (a.table.d() + 1) * wb - 1;
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| a.table.get(x / nb, y / nb) * wb + b.table.get(x % nb, y % nb))
                .collect()
        })
        .collect();
    let table = RelationTable::from_rows(&rows, d)?;
    Ok(CatalogEntry::new(format!("{}*{}", a.name, b.name), table, None))
}

/// Rook's graph scheme `K_r x K_c`, a direct product of two complete graphs.
pub fn rook(r: usize, c: usize) -> Result<CatalogEntry> {
    let mut entry = direct_product(&hamming(1, r)?, &hamming(1, c)?)?;
    entry.name = format!("rook:{r},{c}");
    Ok(entry)
}

/// Looks up a catalog scheme by name: `petersen`, `icosahedron`, `pentagon`,
/// `cube`, `cycle:N`, `hamming:D,Q`, `johnson:V,K`, `rook:R,C`,
/// `complete:N`.
pub fn by_name(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownName(name.to_string());
    let (head, args) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let nums: Vec<usize> = match args {
        None => Vec::new(),
        Some(a) => a
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| unknown())?,
    };
    match (head, nums.as_slice()) {
        ("petersen", []) => Ok(petersen()),
        ("icosahedron", []) => Ok(icosahedron()),
        ("pentagon", []) => cycle(5),
        ("cube", []) => hamming(3, 2),
        ("cycle", [n]) => cycle(*n),
        ("hamming", [d, q]) => hamming(*d, *q),
        ("johnson", [v, k]) => johnson(*v, *k),
        ("rook", [r, c]) => rook(*r, *c),
        ("complete", [n]) => {
            let mut entry = hamming(1, *n)?;
            entry.name = format!("complete:{n}");
            Ok(entry)
        }
        _ => Err(unknown()),
    }
}

/// The reference set every analysis is checked against.
pub fn reference_names() -> Vec<String> {
    let mut names: Vec<String> = (4..=12).map(|n| format!("cycle:{n}")).collect();
    names.extend((1..=4).map(|d| format!("hamming:{d},2")));
    names.extend(
        ["hamming:2,3", "johnson:5,2", "johnson:4,2", "icosahedron", "petersen", "rook:3,4"]
            .map(String::from),
    );
    names
}

pub fn reference_entries() -> Vec<CatalogEntry> {
    reference_names().iter().map(|n| by_name(n).expect("reference names resolve")).collect()
}
