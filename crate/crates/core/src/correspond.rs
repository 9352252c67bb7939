//! The mutually-inverse conversions between constellations with range and
//! ordered categories with restrictions, and their groupoid refinements.
//!
//! All conversions keep the carrier and its label order, so round trips can
//! be compared literally, byte for byte, on the serialized form.

use alloc::format;
use alloc::vec::Vec;

use crate::constellation::{Constellation, ConstellationWithRange};
use crate::ordered::{Category, Groupoid, OrderedCategory, OrderedGroupoid};
use crate::report::{CheckReport, Reporter};
use crate::tables::{PartialOpTable, UnaryMap};
use crate::Error;

/// The derived category of a constellation with range: compose s with t
/// exactly when R(s) = D(t), order by the natural order.
pub fn to_ordered_category(q: &ConstellationWithRange) -> OrderedCategory {
    let n = q.n();
    let base = q.base();
    let mut comp = PartialOpTable::empty(n);
    for s in 0..n {
        for t in 0..n {
            if q.r().apply(s) == base.d().apply(t) {
                comp.set(s, t, base.product().get(s, t));
            }
        }
    }
    let cat = Category::from_parts(
        base.carrier().clone(),
        comp,
        base.d().clone(),
        q.r().clone(),
        base.projections().to_vec(),
    );
    OrderedCategory::from_parts(cat, base.natural_quasiorder())
}

/// The derived constellation of an ordered category with restrictions: set
/// s*t to s∘(R(s)|t) whenever R(s) is below D(t).
pub fn to_range_constellation(c: &OrderedCategory) -> ConstellationWithRange {
    let n = c.n();
    let cat = c.cat();
    let mut product = PartialOpTable::empty(n);
    for s in 0..n {
        let rs = cat.r().apply(s);
        for t in 0..n {
            if !c.order().contains(rs, cat.d().apply(t)) {
                continue;
            }
            // The restriction of t to R(s): unique below t with that domain.
            let restricted = (0..n)
                .find(|&y| c.order().contains(y, t) && cat.d().apply(y) == rs)
                .expect("restrictions exist in a checked ordered category");
            product.set(s, t, cat.comp().get(s, restricted));
        }
    }
    let base = Constellation::from_parts(cat.carrier().clone(), product, cat.d().clone());
    ConstellationWithRange::from_parts(base, cat.r().clone())
}

/// Views a D-inverse constellation as an ordered groupoid: attach the range
/// R(s) = D(s'), derive the category, and carry the inverse map along.
pub fn to_ordered_groupoid(q: &Constellation) -> Result<OrderedGroupoid, Error> {
    let (report, inverse) = q.is_d_inverse();
    let Some(inverse) = inverse else {
        let why = report
            .violations
            .first()
            .map(|v| format!("{} (witness {:?})", v.axiom, v.witness))
            .unwrap_or_else(|| "no inverse map".into());
        return Err(Error::Input(format!(
            "input is not a D-inverse constellation: {why}"
        )));
    };
    let n = q.n();
    let r_images: Vec<usize> = (0..n).map(|s| q.d().apply(inverse.apply(s))).collect();
    let r = UnaryMap::new(r_images, n).expect("in range");
    let ranged = ConstellationWithRange::from_parts(q.clone(), r);
    let oc = to_ordered_category(&ranged);
    let (cat, order) = oc.into_parts();
    Ok(OrderedGroupoid::from_parts(
        Groupoid::from_parts(cat, inverse),
        order,
    ))
}

/// The inverse direction: the derived constellation of an ordered groupoid,
/// with the groupoid inverse carried over as the D-inverse map.
pub fn from_ordered_groupoid(g: &OrderedGroupoid) -> (ConstellationWithRange, UnaryMap) {
    let ranged = to_range_constellation(&g.as_ordered_category());
    (ranged, g.gpd().inverse().clone())
}

/// Literal round-trip comparison of two bundles, reported field by field on
/// the serialized form.
pub(crate) fn literal_equality(
    original: &crate::AlgebraBundle,
    back: &crate::AlgebraBundle,
) -> CheckReport {
    let mut rep = Reporter::new(&original.carrier);
    let a = crate::serial::serialize_bundle(original);
    let b = crate::serial::serialize_bundle(back);
    if a != b {
        let at = a
            .bytes()
            .zip(b.bytes())
            .position(|(x, y)| x != y)
            .unwrap_or_else(|| a.len().min(b.len()));
        rep.violation(
            "round-trip",
            &[],
            format!("double conversion differs from the original at byte {at}"),
        );
    }
    rep.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::{AlgebraBundle, Kind};
    use crate::tables::{BinRelation, Carrier, El};
    use alloc::string::ToString;
    use alloc::vec;

    fn bundle(kind: Kind, labels: &[&str], rows: Vec<Vec<Option<El>>>) -> AlgebraBundle {
        let carrier = Carrier::new(labels.iter().map(|s| s.to_string()).collect()).unwrap();
        let product = PartialOpTable::from_rows(rows).unwrap();
        AlgebraBundle::new(kind, carrier, product).unwrap()
    }

    fn two_chain_ranged() -> ConstellationWithRange {
        let b = bundle(
            Kind::Constellation,
            &["e", "f"],
            vec![vec![Some(0), Some(0)], vec![None, Some(1)]],
        );
        ConstellationWithRange::attach(Constellation::from_bundle(&b).unwrap()).unwrap()
    }

    #[test]
    fn chain_becomes_the_discrete_category_with_ordered_objects() {
        let oc = to_ordered_category(&two_chain_ranged());
        // R(e) = e differs from D(f) = f, so e∘f dies; the comparison
        // survives only in the order.
        assert_eq!(oc.cat().comp().get(0, 1), None);
        assert_eq!(oc.cat().comp().get(0, 0), Some(0));
        assert!(oc.order().contains(0, 1));
        assert!(crate::ordered::check_ordered_category(&oc.to_bundle()).passed());
    }

    #[test]
    fn discrete_ordered_category_becomes_the_chain() {
        let b = bundle(
            Kind::OrderedCategory,
            &["e", "f"],
            vec![vec![Some(0), None], vec![None, Some(1)]],
        )
        .with_order(BinRelation::from_generators(2, [(0, 1)]).unwrap());
        let oc = OrderedCategory::from_bundle(&b).unwrap();
        let q = to_range_constellation(&oc);
        // R(e) = e below D(f) = f gives e*f = e∘(e|f) = e∘e = e.
        assert_eq!(q.base().product().get(0, 1), Some(0));
        assert_eq!(q.base().product().get(1, 0), None);
        assert!(crate::constellation::check_range(&q.to_bundle()).passed());
    }

    #[test]
    fn round_trip_on_the_chain_is_literal() {
        let q = two_chain_ranged();
        let back = to_range_constellation(&to_ordered_category(&q));
        assert!(literal_equality(&q.to_bundle(), &back.to_bundle()).passed());
    }

    #[test]
    fn z2_becomes_a_one_object_ordered_groupoid_with_diagonal_order() {
        let b = bundle(
            Kind::Constellation,
            &["1", "a"],
            vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]],
        );
        let q = Constellation::from_bundle(&b).unwrap();
        let og = to_ordered_groupoid(&q).unwrap();
        assert!(og.gpd().cat().comp().is_total());
        assert_eq!(og.order().strict_pairs().count(), 0);
        assert!(crate::ordered::check_ordered_groupoid(&og.to_bundle()).passed());
    }

    #[test]
    fn chain_becomes_a_discrete_groupoid_with_ordered_identities() {
        let b = bundle(
            Kind::Constellation,
            &["e", "f"],
            vec![vec![Some(0), Some(0)], vec![None, Some(1)]],
        );
        let q = Constellation::from_bundle(&b).unwrap();
        let og = to_ordered_groupoid(&q).unwrap();
        assert_eq!(og.gpd().cat().comp().get(0, 1), None);
        assert!(og.order().contains(0, 1));
        let (ranged, inv) = from_ordered_groupoid(&og);
        assert_eq!(ranged.base().product().get(0, 1), Some(0));
        assert_eq!(inv.images(), &[0, 1]);
    }

    #[test]
    fn non_d_inverse_input_is_rejected_with_a_witness() {
        let left_zero = bundle(
            Kind::Constellation,
            &["a", "b"],
            vec![vec![Some(0), Some(0)], vec![Some(1), Some(1)]],
        );
        let q = Constellation::from_bundle(&left_zero).unwrap();
        match to_ordered_groupoid(&q) {
            Err(Error::Input(msg)) => assert!(msg.contains("D-inverse")),
            other => panic!("expected input error, got {other:?}"),
        }
    }
}
