//! Lexicographic basis of strictly increasing index tuples for Λ^k ℝⁿ.
//!
//! Indices are 0-based internally for every dimension; the JSON layer shifts
//! to the 1..7 labels used on the 7-dimensional side.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// All strictly increasing k-tuples in 0..n, lex-ordered, with a rank lookup.
pub struct BasisTable {
    pub n: u8,
    pub k: u8,
    tuples: Vec<Vec<u8>>,
    ranks: HashMap<Vec<u8>, usize>,
}

impl BasisTable {
    fn build(n: u8, k: u8) -> Self {
        let mut tuples = Vec::with_capacity(binomial(n as usize, k as usize));
        let mut cur = Vec::with_capacity(k as usize);
        fn rec(n: u8, k: u8, start: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if cur.len() == k as usize {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                rec(n, k, v + 1, cur, out);
                cur.pop();
            }
        }
        rec(n, k, 0, &mut cur, &mut tuples);
        let ranks = tuples
            .iter()
            .enumerate()
            .map(|(r, t)| (t.clone(), r))
            .collect();
        BasisTable { n, k, tuples, ranks }
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuple(&self, rank: usize) -> &[u8] {
        &self.tuples[rank]
    }

    /// Rank of a sorted tuple; `None` if it is not a valid basis tuple.
    pub fn rank(&self, tuple: &[u8]) -> Option<usize> {
        self.ranks.get(tuple).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[u8])> {
        self.tuples.iter().enumerate().map(|(r, t)| (r, t.as_slice()))
    }
}

/// Shared table for (n, k); built once per process.
pub fn basis(n: u8, k: u8) -> &'static BasisTable {
    static CACHE: OnceLock<RwLock<HashMap<(u8, u8), &'static BasisTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().unwrap().get(&(n, k)) {
        return t;
    }
    let mut w = cache.write().unwrap();
    w.entry((n, k))
        .or_insert_with(|| Box::leak(Box::new(BasisTable::build(n, k))))
}

/// Merges two strictly increasing tuples. Returns the merged tuple and the
/// sign of the shuffle, or `None` when they share an index.
pub fn merge_sign(a: &[u8], b: &[u8]) -> Option<(Vec<u8>, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut sign = 1i32;
    while i < a.len() && j < b.len() {
        if a[i] == b[j] {
            return None;
        }
        if a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    Some((out, sign))
}

/// Complement of a sorted tuple in 0..n.
pub fn complement(n: u8, tuple: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(n as usize - tuple.len());
    let mut it = tuple.iter().peekable();
    for v in 0..n {
        if it.peek() == Some(&&v) {
            it.next();
        } else {
            out.push(v);
        }
    }
    out
}
