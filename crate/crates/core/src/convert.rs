//! Kind dispatch for checking, converting, and round-tripping bundles.

use alloc::format;

use crate::bundle::{AlgebraBundle, Kind};
use crate::constellation::{
    check_constellation, check_range, Constellation, ConstellationWithRange,
};
use crate::correspond;
use crate::ordered::{
    check_category, check_groupoid, check_ordered_category, check_ordered_groupoid,
    OrderedCategory, OrderedGroupoid,
};
use crate::pre::check_pre_constellation;
use crate::report::CheckReport;
use crate::semigroup::check_semigroup;
use crate::{Error, Violation};

/// Runs the axiom checker for a kind (the bundle's own, unless overridden).
pub fn check_bundle(b: &AlgebraBundle, as_kind: Option<Kind>) -> CheckReport {
    let kind = as_kind.unwrap_or(b.kind);
    match kind {
        Kind::Semigroup => check_semigroup(b),
        Kind::InvolutedSemigroup => {
            let mut report = check_semigroup(b);
            if b.star.is_none() {
                report.violations.push(Violation {
                    axiom: "involution".into(),
                    witness: alloc::vec![],
                    reason: "no star map supplied".into(),
                });
            }
            report
        }
        Kind::PreConstellation => check_pre_constellation(b),
        Kind::Constellation => check_constellation(b),
        Kind::ConstellationWithRange => check_range(b),
        Kind::Category => check_category(b),
        Kind::Groupoid => check_groupoid(b),
        Kind::OrderedCategory => check_ordered_category(b),
        Kind::OrderedGroupoid => check_ordered_groupoid(b),
    }
}

fn input_err(context: &str, report: &CheckReport) -> Error {
    let detail = report
        .violations
        .first()
        .map(|v| format!("{} (witness {:?})", v.axiom, v.witness))
        .unwrap_or_else(|| "unspecified".into());
    Error::Input(format!("{context}: {detail}"))
}

fn as_constellation(b: &AlgebraBundle) -> Result<Constellation, Error> {
    Constellation::from_bundle(b).map_err(|r| input_err("input is not a constellation", &r))
}

fn as_ranged(b: &AlgebraBundle) -> Result<ConstellationWithRange, Error> {
    if b.r.is_some() {
        ConstellationWithRange::from_bundle(b)
            .map_err(|r| input_err("input is not a constellation with range", &r))
    } else {
        let q = as_constellation(b)?;
        ConstellationWithRange::attach(q)
            .map_err(|r| input_err("input admits no range structure", &r))
    }
}

fn as_ordered_category(b: &AlgebraBundle) -> Result<OrderedCategory, Error> {
    OrderedCategory::from_bundle(b)
        .map_err(|r| input_err("input is not an ordered category with restrictions", &r))
}

fn as_ordered_groupoid(b: &AlgebraBundle) -> Result<OrderedGroupoid, Error> {
    OrderedGroupoid::from_bundle(b)
        .map_err(|r| input_err("input is not an ordered groupoid", &r))
}

/// Copies components the conversion neither produced nor invalidated.
fn carry_extras(mut out: AlgebraBundle, src: &AlgebraBundle) -> AlgebraBundle {
    if out.inverse.is_none() {
        out.inverse = src.inverse.clone();
    }
    if out.star.is_none() {
        out.star = src.star.clone();
    }
    if out.e_set.is_none() {
        out.e_set = src.e_set.clone();
    }
    out
}

/// The conversions the library supports, keyed by the source bundle's kind
/// tag and the requested target kind. Carrier and label order are always
/// preserved.
pub fn convert(b: &AlgebraBundle, target: Kind) -> Result<AlgebraBundle, Error> {
    use Kind::*;
    match (b.kind, target) {
        (Constellation | ConstellationWithRange, ConstellationWithRange) => {
            let ranged = as_ranged(b)?;
            Ok(carry_extras(ranged.to_bundle(), b))
        }
        (Constellation | ConstellationWithRange, OrderedCategory) => {
            let ranged = as_ranged(b)?;
            let oc = correspond::to_ordered_category(&ranged);
            Ok(carry_extras(oc.to_bundle(), b))
        }
        (Constellation | ConstellationWithRange, OrderedGroupoid) => {
            let q = as_constellation(b)?;
            let og = correspond::to_ordered_groupoid(&q)?;
            let out = og.to_bundle();
            if let Some(stated) = &b.inverse {
                if Some(stated) != out.inverse.as_ref() {
                    return Err(Error::Input(
                        "stated inverse map differs from the unique D-inverses".into(),
                    ));
                }
            }
            Ok(carry_extras(out, b))
        }
        (OrderedCategory, ConstellationWithRange) => {
            let oc = as_ordered_category(b)?;
            let ranged = correspond::to_range_constellation(&oc);
            Ok(carry_extras(ranged.to_bundle(), b))
        }
        (OrderedGroupoid, ConstellationWithRange | Constellation) => {
            let og = as_ordered_groupoid(b)?;
            let (ranged, inverse) = correspond::from_ordered_groupoid(&og);
            let mut out = ranged.to_bundle().with_inverse(inverse);
            if target == Constellation {
                out.kind = Constellation;
                out.r = None;
            }
            Ok(carry_extras(out, b))
        }
        (Semigroup | InvolutedSemigroup, Constellation) => crate::repr::inv2inv(b),
        (Semigroup | InvolutedSemigroup, OrderedGroupoid) => crate::repr::esn_ordered_groupoid(b),
        (PreConstellation, Constellation) => {
            let p = crate::pre::PreConstellation::from_bundle(b)
                .map_err(|r| input_err("input is not a pre-constellation", &r))?;
            p.reconstruct()
        }
        (from, to) if from == to => {
            let report = check_bundle(b, None);
            if report.passed() {
                Ok(b.clone())
            } else {
                Err(input_err("input fails its own kind check", &report))
            }
        }
        (from, to) => Err(Error::Input(format!(
            "no conversion from {} to {}",
            from.as_str(),
            to.as_str()
        ))),
    }
}

/// Double-conversion comparison: the bundle must come back literally,
/// byte for byte on the serialized form. Constellation inputs are first
/// augmented with their derived range.
pub fn roundtrip_check(b: &AlgebraBundle) -> Result<CheckReport, Error> {
    use Kind::*;
    match b.kind {
        ConstellationWithRange => {
            let there = convert(b, OrderedCategory)?;
            let back = convert(&there, ConstellationWithRange)?;
            Ok(correspond::literal_equality(b, &back))
        }
        OrderedCategory => {
            let there = convert(b, ConstellationWithRange)?;
            let back = convert(&there, OrderedCategory)?;
            Ok(correspond::literal_equality(b, &back))
        }
        OrderedGroupoid => {
            let there = convert(b, ConstellationWithRange)?;
            let back = convert(&there, OrderedGroupoid)?;
            Ok(correspond::literal_equality(b, &back))
        }
        Constellation => {
            let augmented = convert(b, ConstellationWithRange)?;
            let there = convert(&augmented, OrderedCategory)?;
            let back = convert(&there, ConstellationWithRange)?;
            Ok(correspond::literal_equality(&augmented, &back))
        }
        other => Err(Error::Input(format!(
            "round-trip check does not apply to kind {}",
            other.as_str()
        ))),
    }
}
