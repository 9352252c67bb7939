//! Canonical models over finite point sets: the partial-map constellation,
//! its partial-injection subconstellation, and the symmetric inverse
//! monoid, plus inverse-semigroup recognition and the Cayley-style
//! embedding into partial injections.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bundle::{AlgebraBundle, Kind};
use crate::constellation::Constellation;
use crate::radiant::{check_radiant, ConstellationView, RadiantReport};
use crate::report::{CheckReport, Reporter};
use crate::tables::{BinRelation, Carrier, El, PartialOpTable, UnaryMap};
use crate::Error;

/// Point count cap for the full partial-map constellation (625 elements).
pub const CX_POINT_CAP: usize = 4;
/// Point count cap for partial injections and the symmetric inverse monoid
/// (209 elements).
pub const IX_POINT_CAP: usize = 4;
/// Point count cap for Cayley embedding targets (1546 elements at 5).
pub const CAYLEY_POINT_CAP: usize = 5;

/// A partial self-map of an m-point set: per point, the image point or
/// `None`.
pub type PartialMap = Vec<Option<usize>>;

fn dom_mask(f: &PartialMap) -> u64 {
    f.iter()
        .enumerate()
        .filter(|(_, v)| v.is_some())
        .fold(0, |m, (i, _)| m | (1 << i))
}

fn img_mask(f: &PartialMap) -> u64 {
    f.iter().flatten().fold(0, |m, &v| m | (1 << v))
}

fn is_injective(f: &PartialMap) -> bool {
    let mut seen = 0u64;
    for &v in f.iter().flatten() {
        if seen & (1 << v) != 0 {
            return false;
        }
        seen |= 1 << v;
    }
    true
}

/// First f, then g, on the overlap where both are defined.
fn compose(f: &PartialMap, g: &PartialMap) -> PartialMap {
    f.iter().map(|&v| v.and_then(|p| g[p])).collect()
}

/// The identity map restricted to the points of `mask`.
fn identity_on(m: usize, mask: u64) -> PartialMap {
    (0..m)
        .map(|i| (mask & (1 << i) != 0).then_some(i))
        .collect()
}

/// Relational inverse of an injective partial map.
fn invert(f: &PartialMap) -> PartialMap {
    let mut out = alloc::vec![None; f.len()];
    for (i, &v) in f.iter().enumerate() {
        if let Some(v) = v {
            out[v] = Some(i);
        }
    }
    out
}

/// All partial self-maps of an m-point set, ordered lexicographically by
/// their image sequences with undefined sorted last.
pub fn all_partial_maps(m: usize) -> Vec<PartialMap> {
    let mut out = Vec::new();
    let mut cur: PartialMap = alloc::vec![Some(0); m];
    if m == 0 {
        return alloc::vec![Vec::new()];
    }
    loop {
        out.push(cur.clone());
        // Odometer over the digit order 0 < 1 < ... < m-1 < undefined.
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] = match cur[i] {
                Some(v) if v + 1 < m => Some(v + 1),
                Some(_) => None,
                None => {
                    cur[i] = Some(0);
                    continue;
                }
            };
            break;
        }
    }
}

/// The injective ones, in the same order.
pub fn all_partial_injections(m: usize) -> Vec<PartialMap> {
    all_partial_maps(m).into_iter().filter(is_injective).collect()
}

fn map_label(f: &PartialMap) -> String {
    if f.is_empty() {
        return "e".into();
    }
    f.iter()
        .map(|v| match v {
            Some(p) => char::from(b'0' + *p as u8),
            None => '-',
        })
        .collect()
}

fn carrier_of(maps: &[PartialMap]) -> Carrier {
    Carrier::new(maps.iter().map(map_label).collect()).expect("distinct image words")
}

fn cap_points(m: usize, cap: usize, what: &str) -> Result<(), Error> {
    if m > cap {
        return Err(Error::Resource(format!(
            "{what} is capped at {cap} points; got {m}"
        )));
    }
    Ok(())
}

/// The constellation of all partial self-maps: s*t is the composite when
/// the image of s lies inside the domain of t; D and R restrict the
/// identity to domain and image.
pub fn build_cx(m: usize) -> Result<AlgebraBundle, Error> {
    cap_points(m, CX_POINT_CAP, "the partial-map constellation")?;
    let maps = all_partial_maps(m);
    let index: BTreeMap<&PartialMap, usize> =
        maps.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let n = maps.len();
    let mut product = PartialOpTable::empty(n);
    for (i, s) in maps.iter().enumerate() {
        for (j, t) in maps.iter().enumerate() {
            if img_mask(s) & !dom_mask(t) == 0 {
                product.set(i, j, Some(index[&compose(s, t)]));
            }
        }
    }
    let d: Vec<El> = maps.iter().map(|s| index[&identity_on(m, dom_mask(s))]).collect();
    let r: Vec<El> = maps.iter().map(|s| index[&identity_on(m, img_mask(s))]).collect();
    Ok(
        AlgebraBundle::new(Kind::ConstellationWithRange, carrier_of(&maps), product)?
            .with_d(UnaryMap::new(d, n)?)
            .with_r(UnaryMap::new(r, n)?),
    )
}

/// Partial injections with their constellation product, domain map, and
/// relational inverses, kept both as a bundle and in typed form. Ranges are
/// derivable and deliberately not stored.
pub(crate) struct InjectionModel {
    pub maps: Vec<PartialMap>,
    pub index: BTreeMap<PartialMap, usize>,
    pub carrier: Carrier,
    pub product: PartialOpTable,
    pub d: UnaryMap,
    pub inverse: UnaryMap,
}

pub(crate) fn injection_model(m: usize) -> InjectionModel {
    let maps = all_partial_injections(m);
    let index: BTreeMap<PartialMap, usize> = maps
        .iter()
        .enumerate()
        .map(|(i, f)| (f.clone(), i))
        .collect();
    let n = maps.len();
    let mut product = PartialOpTable::empty(n);
    for (i, s) in maps.iter().enumerate() {
        for (j, t) in maps.iter().enumerate() {
            if img_mask(s) & !dom_mask(t) == 0 {
                product.set(i, j, Some(index[&compose(s, t)]));
            }
        }
    }
    let d: Vec<El> = maps.iter().map(|s| index[&identity_on(m, dom_mask(s))]).collect();
    let inverse: Vec<El> = maps.iter().map(|s| index[&invert(s)]).collect();
    InjectionModel {
        carrier: carrier_of(&maps),
        product: product.clone(),
        d: UnaryMap::new(d, n).expect("in range"),
        inverse: UnaryMap::new(inverse, n).expect("in range"),
        maps,
        index,
    }
}

impl InjectionModel {
    pub fn bundle(&self) -> AlgebraBundle {
        AlgebraBundle::new(Kind::Constellation, self.carrier.clone(), self.product.clone())
            .expect("dimensions agree")
            .with_d(self.d.clone())
            .with_inverse(self.inverse.clone())
    }

    pub fn constellation(&self) -> Constellation {
        Constellation::from_parts(self.carrier.clone(), self.product.clone(), self.d.clone())
    }
}

/// The partial-injection subconstellation of the partial-map constellation,
/// with the relational inverse attached as the D-inverse map.
pub fn build_ix(m: usize) -> Result<AlgebraBundle, Error> {
    cap_points(m, IX_POINT_CAP, "the partial-injection constellation")?;
    Ok(injection_model(m).bundle())
}

/// The symmetric inverse monoid: the same carrier of partial injections
/// under unrestricted composition, with the relational inverse as the
/// involution.
pub fn build_symmetric_inverse_monoid(m: usize) -> Result<AlgebraBundle, Error> {
    cap_points(m, IX_POINT_CAP, "the symmetric inverse monoid")?;
    let model = injection_model(m);
    let n = model.maps.len();
    let mut product = PartialOpTable::empty(n);
    for (i, s) in model.maps.iter().enumerate() {
        for (j, t) in model.maps.iter().enumerate() {
            product.set(i, j, Some(model.index[&compose(s, t)]));
        }
    }
    Ok(
        AlgebraBundle::new(Kind::InvolutedSemigroup, model.carrier.clone(), product)?
            .with_star(model.inverse.clone()),
    )
}

fn associativity_witness(t: &PartialOpTable) -> Option<(El, El, El)> {
    let n = t.n();
    for x in 0..n {
        for y in 0..n {
            let xy = t.get(x, y)?;
            for z in 0..n {
                let yz = t.get(y, z)?;
                if t.get(xy, z) != t.get(x, yz) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// Unique-inverse check for a total associative table: every a needs
/// exactly one b with aba = a and bab = b. Returns the inverse map on pass.
pub fn is_inverse_semigroup(
    b: &AlgebraBundle,
) -> Result<(CheckReport, Option<UnaryMap>), Error> {
    if !b.product.is_total() {
        return Err(Error::Input(
            "inverse-semigroup check needs a total product table".into(),
        ));
    }
    if let Some((x, y, z)) = associativity_witness(&b.product) {
        return Err(Error::Input(format!(
            "table is not associative at ({}, {}, {})",
            b.carrier.label(x),
            b.carrier.label(y),
            b.carrier.label(z)
        )));
    }
    let n = b.n();
    let t = &b.product;
    let mul = |x: El, y: El| t.get(x, y).expect("total");
    let mut rep = Reporter::new(&b.carrier);
    let mut images = Vec::with_capacity(n);
    let mut ok = true;
    for a in 0..n {
        let invs: Vec<El> = (0..n)
            .filter(|&u| mul(mul(a, u), a) == a && mul(mul(u, a), u) == u)
            .collect();
        match invs.len() {
            1 => images.push(invs[0]),
            0 => {
                ok = false;
                rep.violation("inverse-semigroup", &[a], "element has no semigroup inverse");
                images.push(0);
            }
            k => {
                ok = false;
                let mut witness = alloc::vec![a];
                witness.extend(&invs);
                rep.violation(
                    "inverse-semigroup",
                    &witness,
                    format!("element has {k} semigroup inverses"),
                );
                images.push(invs[0]);
            }
        }
    }
    let map = ok.then(|| UnaryMap::new(images, n).expect("in range"));
    Ok((rep.finish(), map))
}

/// Restricts an inverse semigroup to the partial constellation product:
/// s*t is kept exactly when s(tt') = s, with D(s) = ss' and the semigroup
/// inverses carried over.
pub fn inv2inv(b: &AlgebraBundle) -> Result<AlgebraBundle, Error> {
    let (report, inv) = is_inverse_semigroup(b)?;
    let Some(inv) = inv else {
        let v = &report.violations[0];
        return Err(Error::Input(format!(
            "input is not an inverse semigroup: {} (witness {:?})",
            v.axiom, v.witness
        )));
    };
    let n = b.n();
    let t = &b.product;
    let mul = |x: El, y: El| t.get(x, y).expect("total");
    let mut product = PartialOpTable::empty(n);
    for s in 0..n {
        for u in 0..n {
            if mul(s, mul(u, inv.apply(u))) == s {
                product.set(s, u, Some(mul(s, u)));
            }
        }
    }
    let d: Vec<El> = (0..n).map(|s| mul(s, inv.apply(s))).collect();
    Ok(
        AlgebraBundle::new(Kind::Constellation, b.carrier.clone(), product)?
            .with_d(UnaryMap::new(d, n)?)
            .with_inverse(inv),
    )
}

/// The inductive ordered groupoid of an inverse semigroup, built directly:
/// D(s) = ss', R(s) = s's, compose when s's = tt', order by s = ss't.
pub fn esn_ordered_groupoid(b: &AlgebraBundle) -> Result<AlgebraBundle, Error> {
    let (report, inv) = is_inverse_semigroup(b)?;
    let Some(inv) = inv else {
        let v = &report.violations[0];
        return Err(Error::Input(format!(
            "input is not an inverse semigroup: {} (witness {:?})",
            v.axiom, v.witness
        )));
    };
    let n = b.n();
    let t = &b.product;
    let mul = |x: El, y: El| t.get(x, y).expect("total");
    let d: Vec<El> = (0..n).map(|s| mul(s, inv.apply(s))).collect();
    let r: Vec<El> = (0..n).map(|s| mul(inv.apply(s), s)).collect();
    let mut comp = PartialOpTable::empty(n);
    for s in 0..n {
        for u in 0..n {
            if r[s] == d[u] {
                comp.set(s, u, Some(mul(s, u)));
            }
        }
    }
    let mut pairs = Vec::new();
    for s in 0..n {
        for u in 0..n {
            if mul(d[s], u) == s {
                pairs.push((s, u));
            }
        }
    }
    Ok(
        AlgebraBundle::new(Kind::OrderedGroupoid, b.carrier.clone(), comp)?
            .with_d(UnaryMap::new(d, n)?)
            .with_r(UnaryMap::new(r, n)?)
            .with_inverse(inv)
            .with_order(BinRelation::from_pairs_closed(n, pairs)?),
    )
}

/// A materialized partial-injection constellation over a structure's own
/// element set, used as the target of Cayley embeddings.
pub struct CayleyTarget {
    points: usize,
    model: InjectionModel,
    typed: Constellation,
}

impl CayleyTarget {
    pub fn new(points: usize) -> Result<Self, Error> {
        cap_points(points, CAYLEY_POINT_CAP, "the Cayley embedding target")?;
        let model = injection_model(points);
        let typed = model.constellation();
        Ok(CayleyTarget {
            points,
            model,
            typed,
        })
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn bundle(&self) -> AlgebraBundle {
        self.model.bundle()
    }

    pub fn constellation(&self) -> &Constellation {
        &self.typed
    }

    pub fn inverse(&self) -> &UnaryMap {
        &self.model.inverse
    }
}

/// Outcome of the Cayley construction: where each element went, the full
/// morphism flags against the target, and whether every image's relational
/// inverse is itself an image (the obstruction to carrying an inverse map).
pub struct CayleyEmbedding {
    pub map: Vec<El>,
    pub radiant: RadiantReport,
    pub inverse_attainable: bool,
}

/// Right-translation Cayley map s -> (x -> x*s) into the partial
/// injections over the carrier. The source must be normal and right
/// cancellative; those are exactly the embeddable constellations.
pub fn cayley_embedding(q: &Constellation, target: &CayleyTarget) -> Result<CayleyEmbedding, Error> {
    let n = q.n();
    if target.points() != n {
        return Err(Error::Input(format!(
            "target is over {} points but the source has {n} elements",
            target.points()
        )));
    }
    let normal = q.is_normal();
    if !normal.passed() {
        let v = &normal.violations[0];
        return Err(Error::Input(format!(
            "source is not normal (witness {:?})",
            v.witness
        )));
    }
    let rc = q.is_right_cancellative();
    if !rc.passed() {
        let v = &rc.violations[0];
        return Err(Error::Input(format!(
            "source is not right cancellative (witness {:?})",
            v.witness
        )));
    }

    let translations: Vec<PartialMap> = (0..n)
        .map(|s| (0..n).map(|x| q.product().get(x, s)).collect())
        .collect();
    let map: Vec<El> = translations
        .iter()
        .map(|f| {
            *target
                .model
                .index
                .get(f)
                .expect("right translations are injective once the gates pass")
        })
        .collect();

    let (_, src_inverse) = q.is_d_inverse();
    let src_view = ConstellationView {
        q,
        r: None,
        inverse: src_inverse.as_ref(),
    };
    let dst_view = ConstellationView {
        q: target.constellation(),
        r: None,
        inverse: Some(target.inverse()),
    };
    let radiant = check_radiant(src_view, dst_view, &map)?;

    let image_set: BTreeSet<El> = map.iter().copied().collect();
    let inverse_attainable = map
        .iter()
        .all(|&i| image_set.contains(&target.model.index[&invert(&target.model.maps[i])]));

    Ok(CayleyEmbedding {
        map,
        radiant,
        inverse_attainable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constellation::{check_constellation, check_range, ConstellationWithRange};
    use alloc::vec;

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn partial_map_counts() {
        for m in 0..=4 {
            assert_eq!(all_partial_maps(m).len(), (m + 1).pow(m as u32));
            let expected: usize = (0..=m).map(|k| binomial(m, k).pow(2) * factorial(k)).sum();
            assert_eq!(all_partial_injections(m).len(), expected, "m = {m}");
        }
        // The two-point case by hand: 1 + 4 + 2.
        assert_eq!(all_partial_injections(2).len(), 7);
    }

    #[test]
    fn element_order_puts_undefined_last() {
        let maps = all_partial_maps(1);
        assert_eq!(maps, vec![vec![Some(0)], vec![None]]);
        let b = build_cx(1).unwrap();
        assert_eq!(b.carrier.labels(), &["0", "-"]);
        // The identity does not compose into the empty map: image not
        // inside the domain.
        assert_eq!(b.product.get(0, 1), None);
        assert_eq!(b.product.get(1, 0), Some(1));
    }

    #[test]
    fn cx_is_a_constellation_with_range() {
        for m in 0..=2 {
            let b = build_cx(m).unwrap();
            assert!(check_range(&b).passed(), "m = {m}");
        }
    }

    #[test]
    fn cx2_is_not_right_cancellative() {
        let b = build_cx(2).unwrap();
        let q = Constellation::from_bundle(&b).unwrap();
        let report = q.is_right_cancellative();
        assert!(!report.passed());
        // The constant maps collapse onto each other under composition
        // with a constant.
        assert!(q.is_d_regular().passed() == false);
    }

    #[test]
    fn ix2_is_a_d_inverse_constellation_with_seven_elements() {
        let b = build_ix(2).unwrap();
        assert_eq!(b.n(), 7);
        assert!(check_constellation(&b).passed());
        let q = Constellation::from_bundle(&b).unwrap();
        let (report, map) = q.is_d_inverse();
        assert!(report.passed());
        assert_eq!(map.as_ref(), b.inverse.as_ref());
        // Four projections: the identity restrictions.
        assert_eq!(q.projections().len(), 4);
    }

    #[test]
    fn ix_product_asymmetry_between_s_and_its_inverse_partner() {
        // s = {(x,x)}, t = the identity: s*t = s exists, t'*s' = t*s does not.
        let b = build_ix(2).unwrap();
        let s = b.carrier.index_of("0-").unwrap();
        let t = b.carrier.index_of("01").unwrap();
        assert_eq!(b.product.get(s, t), Some(s));
        assert_eq!(b.product.get(t, s), None);
    }

    #[test]
    fn sim2_is_an_inverse_monoid_with_four_idempotents() {
        let b = build_symmetric_inverse_monoid(2).unwrap();
        assert_eq!(b.n(), 7);
        assert!(b.product.is_total());
        assert_eq!(associativity_witness(&b.product), None);
        assert_eq!(b.product.idempotents().len(), 4);
        let (report, inv) = is_inverse_semigroup(&b).unwrap();
        assert!(report.passed());
        // The semigroup inverse is the relational inverse, i.e. the star.
        assert_eq!(inv.as_ref(), b.star.as_ref());
    }

    #[test]
    fn involution_law_holds_in_sim2() {
        let b = build_symmetric_inverse_monoid(2).unwrap();
        let star = b.star.as_ref().unwrap();
        let mul = |x, y| b.product.get(x, y).unwrap();
        for x in 0..b.n() {
            assert_eq!(star.apply(star.apply(x)), x);
            for y in 0..b.n() {
                assert_eq!(star.apply(mul(x, y)), mul(star.apply(y), star.apply(x)));
            }
        }
    }

    #[test]
    fn left_zero_fails_inverse_uniqueness() {
        let carrier = Carrier::new(vec!["a".into(), "b".into()]).unwrap();
        let product = PartialOpTable::from_rows(vec![
            vec![Some(0), Some(0)],
            vec![Some(1), Some(1)],
        ])
        .unwrap();
        let b = AlgebraBundle::new(Kind::Semigroup, carrier, product).unwrap();
        let (report, map) = is_inverse_semigroup(&b).unwrap();
        assert!(!report.passed());
        assert!(map.is_none());
    }

    #[test]
    fn z2_is_an_inverse_semigroup() {
        let carrier = Carrier::new(vec!["1".into(), "a".into()]).unwrap();
        let product = PartialOpTable::from_rows(vec![
            vec![Some(0), Some(1)],
            vec![Some(1), Some(0)],
        ])
        .unwrap();
        let b = AlgebraBundle::new(Kind::Semigroup, carrier, product).unwrap();
        let (report, map) = is_inverse_semigroup(&b).unwrap();
        assert!(report.passed());
        assert_eq!(map.unwrap().images(), &[0, 1]);
    }

    #[test]
    fn inv2inv_of_sim_matches_the_injection_constellation_bytes() {
        let sim = build_symmetric_inverse_monoid(2).unwrap();
        let derived = inv2inv(&sim).unwrap();
        let direct = build_ix(2).unwrap();
        assert_eq!(
            crate::serial::serialize_bundle(&derived),
            crate::serial::serialize_bundle(&direct)
        );
    }

    #[test]
    fn inv2inv_of_a_group_keeps_every_product() {
        let carrier = Carrier::new(vec!["1".into(), "a".into()]).unwrap();
        let product = PartialOpTable::from_rows(vec![
            vec![Some(0), Some(1)],
            vec![Some(1), Some(0)],
        ])
        .unwrap();
        let b = AlgebraBundle::new(Kind::Semigroup, carrier, product).unwrap();
        let q = inv2inv(&b).unwrap();
        assert!(q.product.is_total());
    }

    #[test]
    fn inv2inv_of_the_two_element_semilattice_is_the_chain() {
        // Meet semilattice on {1, 0}: top times bottom is bottom.
        let carrier = Carrier::new(vec!["1".into(), "0".into()]).unwrap();
        let product = PartialOpTable::from_rows(vec![
            vec![Some(0), Some(1)],
            vec![Some(1), Some(1)],
        ])
        .unwrap();
        let b = AlgebraBundle::new(Kind::Semigroup, carrier, product).unwrap();
        let q = inv2inv(&b).unwrap();
        // 1*0 requires 1*0*0 = 0 = 1 to hold, so it dies; 0*1 survives.
        assert_eq!(q.product.get(0, 1), None);
        assert_eq!(q.product.get(1, 0), Some(1));
        assert_eq!(q.product.get(0, 0), Some(0));
    }

    #[test]
    fn cayley_embeds_the_chain() {
        let carrier = Carrier::new(vec!["e".into(), "f".into()]).unwrap();
        let product = PartialOpTable::from_rows(vec![
            vec![Some(0), Some(0)],
            vec![None, Some(1)],
        ])
        .unwrap();
        let b = AlgebraBundle::new(Kind::Constellation, carrier, product).unwrap();
        let q = Constellation::from_bundle(&b).unwrap();
        let target = CayleyTarget::new(2).unwrap();
        let emb = cayley_embedding(&q, &target).unwrap();
        assert!(emb.radiant.flags.embedding);
        assert_eq!(emb.radiant.flags.inverse_preserving, Some(true));
        assert!(emb.inverse_attainable);
        // rho_e is the partial identity on {e}; rho_f is the full identity.
        assert_eq!(target.model.maps[emb.map[0]], vec![Some(0), None]);
        assert_eq!(target.model.maps[emb.map[1]], vec![Some(0), Some(1)]);
    }

    #[test]
    fn cayley_on_z2_sends_the_generator_to_the_transposition() {
        let carrier = Carrier::new(vec!["1".into(), "a".into()]).unwrap();
        let product = PartialOpTable::from_rows(vec![
            vec![Some(0), Some(1)],
            vec![Some(1), Some(0)],
        ])
        .unwrap();
        let b = AlgebraBundle::new(Kind::Constellation, carrier, product).unwrap();
        let q = Constellation::from_bundle(&b).unwrap();
        let target = CayleyTarget::new(2).unwrap();
        let emb = cayley_embedding(&q, &target).unwrap();
        assert!(emb.radiant.flags.embedding);
        assert_eq!(target.model.maps[emb.map[1]], vec![Some(1), Some(0)]);
    }

    #[test]
    fn cayley_rejects_the_left_zero_constellation() {
        let carrier = Carrier::new(vec!["a".into(), "b".into()]).unwrap();
        let product = PartialOpTable::from_rows(vec![
            vec![Some(0), Some(0)],
            vec![Some(1), Some(1)],
        ])
        .unwrap();
        let b = AlgebraBundle::new(Kind::Constellation, carrier, product).unwrap();
        let q = Constellation::from_bundle(&b).unwrap();
        let target = CayleyTarget::new(2).unwrap();
        assert!(matches!(cayley_embedding(&q, &target), Err(Error::Input(_))));
    }

    #[test]
    fn ranges_of_cx_restrict_the_identity_to_the_image() {
        let b = build_cx(2).unwrap();
        let rc = ConstellationWithRange::from_bundle(&b).unwrap();
        let idx = |l: &str| b.carrier.index_of(l).unwrap();
        // The constant-at-0 total map has image {0}.
        assert_eq!(rc.r().apply(idx("00")), idx("0-"));
        assert_eq!(rc.r().apply(idx("01")), idx("01"));
    }
}
