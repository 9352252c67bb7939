//! The universal structure container shared by every kind of algebra.

use alloc::format;
use alloc::vec::Vec;

use crate::tables::{BinRelation, Carrier, El, PartialOpTable, UnaryMap};
use crate::Error;

/// Structure kinds the bundle format carries.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Kind {
    Semigroup,
    PreConstellation,
    Constellation,
    ConstellationWithRange,
    Category,
    Groupoid,
    OrderedCategory,
    OrderedGroupoid,
    InvolutedSemigroup,
}

impl Kind {
    pub const ALL: [Kind; 9] = [
        Kind::Semigroup,
        Kind::PreConstellation,
        Kind::Constellation,
        Kind::ConstellationWithRange,
        Kind::Category,
        Kind::Groupoid,
        Kind::OrderedCategory,
        Kind::OrderedGroupoid,
        Kind::InvolutedSemigroup,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Semigroup => "semigroup",
            Kind::PreConstellation => "pre-constellation",
            Kind::Constellation => "constellation",
            Kind::ConstellationWithRange => "constellation-with-range",
            Kind::Category => "category",
            Kind::Groupoid => "groupoid",
            Kind::OrderedCategory => "ordered-category",
            Kind::OrderedGroupoid => "ordered-groupoid",
            Kind::InvolutedSemigroup => "involuted-semigroup",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.as_str() == s)
    }
}

/// A finite partial algebra: carrier, partial product, and whichever unary
/// maps, distinguished idempotent subsets, and order relations the kind
/// calls for. Components present must be dimensionally consistent with the
/// carrier; semantic axioms are the checkers' business.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraBundle {
    pub kind: Kind,
    pub carrier: Carrier,
    pub product: PartialOpTable,
    pub d: Option<UnaryMap>,
    pub r: Option<UnaryMap>,
    pub inverse: Option<UnaryMap>,
    pub star: Option<UnaryMap>,
    /// Distinguished idempotent subset, sorted by index.
    pub e_set: Option<Vec<El>>,
    /// Order relation, stored reflexively and transitively closed.
    pub order: Option<BinRelation>,
}

impl AlgebraBundle {
    pub fn new(kind: Kind, carrier: Carrier, product: PartialOpTable) -> Result<Self, Error> {
        if product.n() != carrier.len() {
            return Err(Error::Input(format!(
                "product table is {}x{} but the carrier has {} elements",
                product.n(),
                product.n(),
                carrier.len()
            )));
        }
        Ok(AlgebraBundle {
            kind,
            carrier,
            product,
            d: None,
            r: None,
            inverse: None,
            star: None,
            e_set: None,
            order: None,
        })
    }

    pub fn n(&self) -> usize {
        self.carrier.len()
    }

    pub fn with_d(mut self, d: UnaryMap) -> Self {
        debug_assert_eq!(d.len(), self.n());
        self.d = Some(d);
        self
    }

    pub fn with_r(mut self, r: UnaryMap) -> Self {
        debug_assert_eq!(r.len(), self.n());
        self.r = Some(r);
        self
    }

    pub fn with_inverse(mut self, inv: UnaryMap) -> Self {
        debug_assert_eq!(inv.len(), self.n());
        self.inverse = Some(inv);
        self
    }

    pub fn with_star(mut self, star: UnaryMap) -> Self {
        debug_assert_eq!(star.len(), self.n());
        self.star = Some(star);
        self
    }

    pub fn with_e_set(mut self, mut e: Vec<El>) -> Self {
        e.sort_unstable();
        e.dedup();
        self.e_set = Some(e);
        self
    }

    pub fn with_order(mut self, order: BinRelation) -> Self {
        debug_assert_eq!(order.n(), self.n());
        self.order = Some(order);
        self
    }

    /// Which optional components are present, in serialization order.
    pub fn component_signature(&self) -> [bool; 6] {
        [
            self.d.is_some(),
            self.r.is_some(),
            self.inverse.is_some(),
            self.star.is_some(),
            self.e_set.is_some(),
            self.order.is_some(),
        ]
    }

    /// Structure transported along a carrier permutation (`perm[i]` is the
    /// new index of old element `i`); labels stay attached to positions.
    pub fn transported(&self, perm: &[El]) -> AlgebraBundle {
        AlgebraBundle {
            kind: self.kind,
            carrier: self.carrier.clone(),
            product: self.product.permuted(perm),
            d: self.d.as_ref().map(|m| m.permuted(perm)),
            r: self.r.as_ref().map(|m| m.permuted(perm)),
            inverse: self.inverse.as_ref().map(|m| m.permuted(perm)),
            star: self.star.as_ref().map(|m| m.permuted(perm)),
            e_set: self.e_set.as_ref().map(|e| {
                let mut out: Vec<El> = e.iter().map(|&x| perm[x]).collect();
                out.sort_unstable();
                out
            }),
            order: self.order.as_ref().map(|o| o.permuted(perm)),
        }
    }

    /// Transported structure with labels moved along as well: the same
    /// abstract algebra presented under a permuted carrier.
    pub fn relabeled(&self, perm: &[El]) -> AlgebraBundle {
        let mut out = self.transported(perm);
        out.carrier = self.carrier.permuted(perm);
        out
    }

    /// Same structure under the generated standard labels.
    pub fn with_standard_labels(&self) -> AlgebraBundle {
        let mut out = self.clone();
        out.carrier = Carrier::standard(self.n());
        out
    }
}
