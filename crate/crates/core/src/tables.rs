//! Carriers, partial operation tables, unary maps, and binary relations.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::report::{CheckReport, Reporter};
use crate::Error;

/// Index of an element within a carrier.
pub type El = usize;

/// Ordered sequence of distinct element labels. The position of a label is
/// the element's index everywhere else in the crate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Carrier {
    labels: Vec<String>,
}

impl Carrier {
    pub fn new(labels: Vec<String>) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Input(format!("duplicate element label {l:?}")));
            }
        }
        Ok(Carrier { labels })
    }

    /// Generated labels "a", "b", ... ("e26", "e27", ... past the alphabet)
    /// used for enumerated structures and canonical-form comparison.
    pub fn standard(n: usize) -> Self {
        let labels = (0..n)
            .map(|i| {
                if i < 26 {
                    char::from(b'a' + i as u8).to_string()
                } else {
                    format!("e{i}")
                }
            })
            .collect();
        Carrier { labels }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: El) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<El> {
        self.labels.iter().position(|l| l == label)
    }

    /// Labels permuted so that old element `i` sits at position `perm[i]`.
    pub fn permuted(&self, perm: &[El]) -> Carrier {
        let mut labels = self.labels.clone();
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        Carrier { labels }
    }
}

/// n-by-n partial operation table. A cell holds the product's index, or
/// `None` where the product is undefined; definedness patterns are data,
/// not error conditions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialOpTable {
    n: usize,
    cells: Vec<Option<El>>,
}

impl PartialOpTable {
    pub fn empty(n: usize) -> Self {
        PartialOpTable {
            n,
            cells: alloc::vec![None; n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Option<El>>>) -> Result<Self, Error> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::Input(format!(
                    "product row {i} has {} cells, expected {n}",
                    row.len()
                )));
            }
            for (j, cell) in row.into_iter().enumerate() {
                if let Some(v) = cell {
                    if v >= n {
                        return Err(Error::Input(format!(
                            "product cell ({i},{j}) holds out-of-range index {v}"
                        )));
                    }
                }
                cells.push(cell);
            }
        }
        Ok(PartialOpTable { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Unchecked lookup; `x`, `y` must be valid indices.
    #[inline]
    pub fn get(&self, x: El, y: El) -> Option<El> {
        self.cells[x * self.n + y]
    }

    pub fn set(&mut self, x: El, y: El, v: Option<El>) {
        self.cells[x * self.n + y] = v;
    }

    /// Range-checked lookup.
    pub fn product(&self, x: El, y: El) -> Result<Option<El>, Error> {
        if x >= self.n || y >= self.n {
            return Err(Error::Input(format!(
                "element index out of range: ({x},{y}) in a {n}-element table",
                n = self.n
            )));
        }
        Ok(self.get(x, y))
    }

    pub fn is_total(&self) -> bool {
        self.cells.iter().all(|c| c.is_some())
    }

    /// E(T): elements with e*e defined and equal to e.
    pub fn idempotents(&self) -> Vec<El> {
        (0..self.n).filter(|&e| self.get(e, e) == Some(e)).collect()
    }

    /// RI(T): elements e with x*e = x whenever x*e is defined.
    pub fn right_identities(&self) -> Vec<El> {
        (0..self.n)
            .filter(|&e| (0..self.n).all(|x| self.get(x, e).is_none() || self.get(x, e) == Some(x)))
            .collect()
    }

    /// Elements e with e*x = x whenever e*x is defined.
    pub fn left_identities(&self) -> Vec<El> {
        (0..self.n)
            .filter(|&e| (0..self.n).all(|x| self.get(e, x).is_none() || self.get(e, x) == Some(x)))
            .collect()
    }

    /// Two-sided identities.
    pub fn identities(&self) -> Vec<El> {
        let right: BTreeSet<El> = self.right_identities().into_iter().collect();
        self.left_identities()
            .into_iter()
            .filter(|e| right.contains(e))
            .collect()
    }

    /// Cells transported by a carrier permutation: new[p(x)][p(y)] = p(old[x][y]).
    pub fn permuted(&self, perm: &[El]) -> PartialOpTable {
        let mut out = PartialOpTable::empty(self.n);
        for x in 0..self.n {
            for y in 0..self.n {
                out.set(perm[x], perm[y], self.get(x, y).map(|v| perm[v]));
            }
        }
        out
    }
}

/// Total unary map on a carrier; houses domain, range, inverse, and
/// involution operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnaryMap {
    images: Vec<El>,
}

impl UnaryMap {
    pub fn new(images: Vec<El>, n: usize) -> Result<Self, Error> {
        if images.len() != n {
            return Err(Error::Input(format!(
                "unary map has {} entries, expected {n}",
                images.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&v| v >= n) {
            return Err(Error::Input(format!(
                "unary map image {bad} out of range for a {n}-element carrier"
            )));
        }
        Ok(UnaryMap { images })
    }

    pub fn identity(n: usize) -> Self {
        UnaryMap {
            images: (0..n).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: El) -> El {
        self.images[x]
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[El] {
        &self.images
    }

    /// Sorted set of values taken by the map.
    pub fn image_set(&self) -> Vec<El> {
        let set: BTreeSet<El> = self.images.iter().copied().collect();
        set.into_iter().collect()
    }

    pub fn permuted(&self, perm: &[El]) -> UnaryMap {
        let n = self.images.len();
        let mut images = alloc::vec![0; n];
        for x in 0..n {
            images[perm[x]] = perm[self.images[x]];
        }
        UnaryMap { images }
    }
}

/// Binary relation on a carrier, stored reflexively and transitively closed;
/// pairs `(a, b)` read "a is below b".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinRelation {
    n: usize,
    pairs: BTreeSet<(El, El)>,
}

impl BinRelation {
    pub fn diagonal(n: usize) -> Self {
        BinRelation {
            n,
            pairs: (0..n).map(|i| (i, i)).collect(),
        }
    }

    /// Builds from a generating set of pairs, applying the
    /// reflexive-transitive closure.
    pub fn from_generators(
        n: usize,
        pairs: impl IntoIterator<Item = (El, El)>,
    ) -> Result<Self, Error> {
        let mut rel = Self::from_pairs_closed(n, pairs)?;
        rel.close();
        Ok(rel)
    }

    /// Builds from a pair set that is already reflexively and transitively
    /// closed (diagonal pairs may be omitted; they are always added).
    pub fn from_pairs_closed(
        n: usize,
        pairs: impl IntoIterator<Item = (El, El)>,
    ) -> Result<Self, Error> {
        let mut set: BTreeSet<(El, El)> = (0..n).map(|i| (i, i)).collect();
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::Input(format!(
                    "relation pair ({a},{b}) out of range for a {n}-element carrier"
                )));
            }
            set.insert((a, b));
        }
        Ok(BinRelation { n, pairs: set })
    }

    fn close(&mut self) {
        loop {
            let mut added = Vec::new();
            for &(a, b) in &self.pairs {
                for &(c, d) in self.pairs.range((b, 0)..=(b, self.n.saturating_sub(1))) {
                    debug_assert_eq!(c, b);
                    let _ = c;
                    if !self.pairs.contains(&(a, d)) {
                        added.push((a, d));
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            self.pairs.extend(added);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, a: El, b: El) -> bool {
        a == b || self.pairs.contains(&(a, b))
    }

    /// All pairs, diagonal included, in sorted order.
    pub fn pairs(&self) -> impl Iterator<Item = (El, El)> + '_ {
        self.pairs.iter().copied()
    }

    /// Pairs off the diagonal, in sorted order; this is what gets serialized.
    pub fn strict_pairs(&self) -> impl Iterator<Item = (El, El)> + '_ {
        self.pairs.iter().copied().filter(|&(a, b)| a != b)
    }

    /// First pair witnessing an antisymmetry failure, if any.
    pub fn antisymmetry_witness(&self) -> Option<(El, El)> {
        self.pairs
            .iter()
            .copied()
            .find(|&(a, b)| a != b && self.pairs.contains(&(b, a)))
    }

    pub fn is_partial_order(&self) -> bool {
        self.antisymmetry_witness().is_none()
    }

    pub fn permuted(&self, perm: &[El]) -> BinRelation {
        BinRelation {
            n: self.n,
            pairs: self
                .pairs
                .iter()
                .map(|&(a, b)| (perm[a], perm[b]))
                .collect(),
        }
    }

    /// Checks reflexivity, antisymmetry, and transitivity, with witnesses.
    pub fn check_partial_order(&self, carrier: &Carrier) -> CheckReport {
        let mut rep = Reporter::new(carrier);
        for a in 0..self.n {
            if !self.pairs.contains(&(a, a)) {
                rep.violation("reflexivity", &[a], "element not related to itself");
            }
        }
        for &(a, b) in &self.pairs {
            if a != b && self.pairs.contains(&(b, a)) {
                if a < b {
                    rep.violation(
                        "antisymmetry",
                        &[a, b],
                        "both below each other yet distinct",
                    );
                }
            }
        }
        for &(a, b) in &self.pairs {
            for &(c, d) in self.pairs.range((b, 0)..=(b, self.n.saturating_sub(1))) {
                let _ = c;
                if !self.pairs.contains(&(a, d)) {
                    rep.violation("transitivity", &[a, b, d], "missing composite pair");
                }
            }
        }
        rep.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carrier_rejects_duplicate_labels() {
        assert!(Carrier::new(alloc::vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn standard_labels_are_distinct_past_the_alphabet() {
        let c = Carrier::standard(30);
        assert_eq!(c.label(0), "a");
        assert_eq!(c.label(25), "z");
        assert_eq!(c.label(26), "e26");
        assert_eq!(c.len(), 30);
    }

    // Left-zero table on {a, b}: xy = x.
    fn left_zero() -> PartialOpTable {
        PartialOpTable::from_rows(alloc::vec![
            alloc::vec![Some(0), Some(0)],
            alloc::vec![Some(1), Some(1)],
        ])
        .unwrap()
    }

    // Two-chain e <= f as a poset table: e*e=e, e*f=e, f*f=f.
    fn two_chain() -> PartialOpTable {
        PartialOpTable::from_rows(alloc::vec![
            alloc::vec![Some(0), Some(0)],
            alloc::vec![None, Some(1)],
        ])
        .unwrap()
    }

    fn z2() -> PartialOpTable {
        PartialOpTable::from_rows(alloc::vec![
            alloc::vec![Some(0), Some(1)],
            alloc::vec![Some(1), Some(0)],
        ])
        .unwrap()
    }

    #[test]
    fn product_lookup_and_range_errors() {
        let t = two_chain();
        assert_eq!(t.product(0, 1).unwrap(), Some(0));
        assert_eq!(t.product(1, 0).unwrap(), None);
        assert!(t.product(2, 0).is_err());
    }

    #[test]
    fn idempotents_of_small_tables() {
        assert_eq!(two_chain().idempotents(), alloc::vec![0, 1]);
        assert_eq!(z2().idempotents(), alloc::vec![0]);
    }

    #[test]
    fn right_identities_of_small_tables() {
        // Every column of the left-zero table fixes every row.
        assert_eq!(left_zero().right_identities(), alloc::vec![0, 1]);
        assert_eq!(z2().right_identities(), alloc::vec![0]);
        assert_eq!(two_chain().right_identities(), alloc::vec![0, 1]);
    }

    #[test]
    fn partial_order_check_flags_antisymmetry() {
        let c = Carrier::standard(2);
        let chain = BinRelation::from_generators(2, [(0, 1)]).unwrap();
        assert!(chain.check_partial_order(&c).passed());

        let cyclic = BinRelation::from_generators(2, [(0, 1), (1, 0)]).unwrap();
        let report = cyclic.check_partial_order(&c);
        assert!(!report.passed());
        assert_eq!(report.violations[0].axiom, "antisymmetry");
        assert_eq!(report.violations[0].witness, alloc::vec!["a", "b"]);
    }

    #[test]
    fn generator_closure_is_transitive() {
        let r = BinRelation::from_generators(3, [(0, 1), (1, 2)]).unwrap();
        assert!(r.contains(0, 2));
        assert_eq!(r.strict_pairs().count(), 3);
    }
}
