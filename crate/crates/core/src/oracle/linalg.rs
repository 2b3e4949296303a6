//! Sparse exact vectors and incremental row reduction.

use std::collections::HashMap;

use super::field::{FieldKind, Scalar};

/// Sorted `(index, value)` pairs with no stored zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, one: Scalar) -> Self {
        SparseVec { entries: vec![(i, one)] }
    }

    /// Sums duplicate indices and drops zeros.
    pub fn from_entries(mut items: Vec<(usize, Scalar)>) -> Self {
        items.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(items.len());
        for (i, c) in items {
            match entries.last_mut() {
                Some((j, d)) if *j == i => *d = *d + c,
                _ => entries.push((i, c)),
            }
        }
        entries.retain(|(_, c)| !c.is_zero());
        SparseVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Scalar)> + '_ {
        self.entries.iter().copied()
    }

    pub fn get(&self, i: usize) -> Option<Scalar> {
        self.entries.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| self.entries[k].1)
    }

    pub fn last(&self) -> Option<(usize, Scalar)> {
        self.entries.last().copied()
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(i, x)), Some(&&(j, y))) => {
                    if i < j {
                        out.push((i, x));
                        a.next();
                    } else if j < i {
                        out.push((j, c * y));
                        b.next();
                    } else {
                        let s = x + c * y;
                        if !s.is_zero() {
                            out.push((i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some(&&e), None) => {
                    out.push(e);
                    a.next();
                }
                (None, Some(&&(j, y))) => {
                    out.push((j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn scaled(&self, c: Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|&(i, x)| (i, c * x)).collect() }
    }

    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_entries(self.entries.iter().map(|&(i, x)| (f(i), x)).collect())
    }

    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> SparseVec {
        SparseVec { entries: self.entries.iter().copied().filter(|(i, _)| keep(*i)).collect() }
    }
}

struct Row {
    vec: SparseVec,
    tag: SparseVec,
}

/// Row space kept in semi-echelon form; each row's pivot is its largest index
/// and carries coefficient one.
pub struct Echelon {
    field: FieldKind,
    rows: Vec<Row>,
    pivot_row: HashMap<usize, usize>,
    inserted: usize,
}

/// Outcome of inserting a vector.
pub enum Insert {
    /// The vector was independent; its pivot column.
    New(usize),
    /// The vector was dependent; coefficients over insertion ids summing to zero.
    Dependent(SparseVec),
}

impl Echelon {
    pub fn new(field: FieldKind) -> Self {
        Echelon { field, rows: Vec::new(), pivot_row: HashMap::new(), inserted: 0 }
    }

    pub fn from_vectors<'a>(field: FieldKind, vs: impl IntoIterator<Item = &'a SparseVec>) -> Self {
        let mut e = Echelon::new(field);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.iter().map(|r| &r.vec)
    }

    /// Eliminates every pivot column from `v`, applying the same operations to `tag`.
    fn reduce_tagged(&self, v: &mut SparseVec, tag: &mut SparseVec) {
        let mut cursor = usize::MAX;
        loop {
            let hit = v.entries.iter().rev().find(|(i, _)| *i < cursor && self.pivot_row.contains_key(i)).copied();
            let Some((col, c)) = hit else { break };
            let row = &self.rows[self.pivot_row[&col]];
            v.add_scaled(-c, &row.vec);
            tag.add_scaled(-c, &row.tag);
            cursor = col;
        }
    }

    /// Normal form of `v` modulo the row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut tag = SparseVec::new();
        self.reduce_tagged(&mut v, &mut tag);
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn insert(&mut self, v: SparseVec) -> Insert {
        let id = self.inserted;
        self.inserted += 1;
        let mut v = v;
        let mut tag = SparseVec::unit(id, self.field.one());
        self.reduce_tagged(&mut v, &mut tag);
        match v.last() {
            None => Insert::Dependent(tag),
            Some((col, c)) => {
                let inv = c.inv();
                self.pivot_row.insert(col, self.rows.len());
                self.rows.push(Row { vec: v.scaled(inv), tag: tag.scaled(inv) });
                Insert::New(col)
            }
        }
    }

    /// Inserts and reports whether the vector was independent.
    pub fn add(&mut self, v: SparseVec) -> bool {
        matches!(self.insert(v), Insert::New(_))
    }

    /// Coefficients over insertion ids expressing `v`, if it lies in the span.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut v = v.clone();
        let mut tag = SparseVec::new();
        self.reduce_tagged(&mut v, &mut tag);
        if v.is_zero() {
            Some(tag.scaled(-self.field.one()))
        } else {
            None
        }
    }
}

/// Basis of the relations among `images`, as coefficient vectors over their positions.
pub fn kernel(field: FieldKind, images: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new(field);
    images
        .iter()
        .filter_map(|v| match e.insert(v.clone()) {
            Insert::Dependent(t) => Some(t),
            Insert::New(_) => None,
        })
        .collect()
}

pub fn rank(field: FieldKind, vs: &[SparseVec]) -> usize {
    Echelon::from_vectors(field, vs).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Scalar {
        FieldKind::Rational.int(n)
    }

    fn vecs(raw: &[Vec<i64>]) -> Vec<SparseVec> {
        raw.iter()
            .map(|r| SparseVec::from_entries(r.iter().enumerate().map(|(i, &x)| (i, q(x))).collect()))
            .collect()
    }

    #[test]
    fn solve_recovers_combination() {
        let vs = vecs(&[vec![1, 2, 0], vec![0, 1, 1]]);
        let e = Echelon::from_vectors(FieldKind::Rational, &vs);
        let target = vecs(&[vec![2, 7, 3]]).remove(0);
        let c = e.solve(&target).unwrap();
        assert_eq!(c.get(0), Some(q(2)));
        assert_eq!(c.get(1), Some(q(3)));
    }

    proptest! {
        #[test]
        fn kernel_vectors_annihilate(raw in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 1..7)) {
            let vs = vecs(&raw);
            let ker = kernel(FieldKind::Rational, &vs);
            prop_assert_eq!(ker.len() + rank(FieldKind::Rational, &vs), vs.len());
            for k in &ker {
                let mut sum = SparseVec::new();
                for (i, c) in k.iter() {
                    sum.add_scaled(c, &vs[i]);
                }
                prop_assert!(sum.is_zero());
            }
        }
    }
}
