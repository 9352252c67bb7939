//! Constellation axioms, domain derivation, quasiorders, normality,
//! D-regularity, D-inverses, cancellativity, and the range structure.
//!
//! Throughout, a quoted equation "lhs = rhs" used as a hypothesis means
//! both sides are defined and equal; used as a conclusion it means both
//! sides must be defined and equal. A hypothesis mentioning an undefined
//! term is simply not satisfied.

use alloc::format;
use alloc::vec::Vec;

use crate::bundle::{AlgebraBundle, Kind};
use crate::report::{CheckReport, Reporter};
use crate::tables::{BinRelation, Carrier, El, PartialOpTable, UnaryMap};

/// Adds violations for the two composition laws shared by constellations
/// and pre-constellations:
/// associativity of existing composites (x*(y*z) exists forces (x*y)*z to
/// exist and agree) and closure of chained products (x*y and y*z existing
/// force x*(y*z) to exist).
pub(crate) fn const12_violations(t: &PartialOpTable, rep: &mut Reporter<'_>) {
    let n = t.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if let Some(w) = t.get(y, z) {
                    if let Some(v) = t.get(x, w) {
                        // Const1: (x*y)*z must exist and equal x*(y*z).
                        match t.get(x, y) {
                            None => rep.violation(
                                "Const1",
                                &[x, y, z],
                                "x*(y*z) exists but x*y does not",
                            ),
                            Some(u) => match t.get(u, z) {
                                None => rep.violation(
                                    "Const1",
                                    &[x, y, z],
                                    "x*(y*z) exists but (x*y)*z does not",
                                ),
                                Some(v2) if v2 != v => rep.violation(
                                    "Const1",
                                    &[x, y, z],
                                    "x*(y*z) and (x*y)*z differ",
                                ),
                                _ => {}
                            },
                        }
                    }
                    if t.get(x, y).is_some() && t.get(x, w).is_none() {
                        rep.violation("Const2", &[x, y, z], "x*y and y*z exist but x*(y*z) does not");
                    }
                }
            }
        }
    }
}

/// For each element, the unique right identity e with e*x = x; per element,
/// zero or several candidates is a Const3 failure.
pub fn derive_domain_map(t: &PartialOpTable, carrier: &Carrier) -> Result<UnaryMap, CheckReport> {
    let n = t.n();
    let ri = t.right_identities();
    let mut rep = Reporter::new(carrier);
    let mut images = Vec::with_capacity(n);
    for x in 0..n {
        let candidates: Vec<El> = ri.iter().copied().filter(|&e| t.get(e, x) == Some(x)).collect();
        match candidates.len() {
            1 => images.push(candidates[0]),
            0 => {
                rep.violation("Const3", &[x], "no right identity e with e*x = x");
                images.push(0);
            }
            _ => {
                let mut witness = alloc::vec![x];
                witness.extend(&candidates);
                rep.violation(
                    "Const3",
                    &witness,
                    format!("{} distinct right identities fix this element", candidates.len()),
                );
                images.push(candidates[0]);
            }
        }
    }
    if rep.failed() {
        Err(rep.finish())
    } else {
        Ok(UnaryMap::new(images, n).expect("derived map is total and in range"))
    }
}

/// Full constellation check: the two composition laws, unique-domains, and,
/// when the bundle carries a D map, agreement with the derived one.
pub fn check_constellation(b: &AlgebraBundle) -> CheckReport {
    let mut rep = Reporter::new(&b.carrier);
    const12_violations(&b.product, &mut rep);
    match derive_domain_map(&b.product, &b.carrier) {
        Err(sub) => rep.absorb(sub),
        Ok(derived) => {
            if let Some(given) = &b.d {
                for x in 0..b.n() {
                    if given.apply(x) != derived.apply(x) {
                        rep.violation(
                            "D",
                            &[x, given.apply(x), derived.apply(x)],
                            "stated domain differs from the derived right identity",
                        );
                    }
                }
            }
        }
    }
    rep.finish()
}

/// A validated constellation: carrier, partial product, and the derived
/// domain map. Projections (the D image, equal to the right identities)
/// are cached sorted.
#[derive(Clone, PartialEq, Debug)]
pub struct Constellation {
    carrier: Carrier,
    product: PartialOpTable,
    d: UnaryMap,
    projections: Vec<El>,
}

impl Constellation {
    /// Validates and builds; the bundle's kind tag is not consulted, so
    /// range or groupoid bundles can be read as their constellation reduct.
    pub fn from_bundle(b: &AlgebraBundle) -> Result<Self, CheckReport> {
        let report = check_constellation(b);
        if !report.passed() {
            return Err(report);
        }
        let d = derive_domain_map(&b.product, &b.carrier).expect("checked above");
        Ok(Self::from_parts(b.carrier.clone(), b.product.clone(), d))
    }

    pub(crate) fn from_parts(carrier: Carrier, product: PartialOpTable, d: UnaryMap) -> Self {
        let projections = d.image_set();
        Constellation {
            carrier,
            product,
            d,
            projections,
        }
    }

    pub fn n(&self) -> usize {
        self.carrier.len()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn product(&self) -> &PartialOpTable {
        &self.product
    }

    pub fn d(&self) -> &UnaryMap {
        &self.d
    }

    /// D(Q): the domain elements, coinciding with the right identities.
    pub fn projections(&self) -> &[El] {
        &self.projections
    }

    /// Standard quasiorder on projections: e below f iff e*f exists.
    #[inline]
    pub fn proj_leq(&self, e: El, f: El) -> bool {
        self.product.get(e, f).is_some()
    }

    pub fn to_bundle(&self) -> AlgebraBundle {
        AlgebraBundle::new(Kind::Constellation, self.carrier.clone(), self.product.clone())
            .expect("dimensions agree")
            .with_d(self.d.clone())
    }

    /// Natural quasiorder: s below t iff s = e*t for some projection e.
    pub fn natural_quasiorder(&self) -> BinRelation {
        let n = self.n();
        let mut pairs = Vec::new();
        for t in 0..n {
            for &e in &self.projections {
                if let Some(s) = self.product.get(e, t) {
                    pairs.push((s, t));
                }
            }
        }
        BinRelation::from_pairs_closed(n, pairs).expect("indices in range")
    }

    /// Normality: projections e, f with e*f and f*e both defined must be
    /// equal; equivalently the natural quasiorder is a partial order. Both
    /// characterizations are computed and must agree.
    pub fn is_normal(&self) -> CheckReport {
        let mut rep = Reporter::new(&self.carrier);
        for &e in &self.projections {
            for &f in &self.projections {
                if e < f && self.product.get(e, f).is_some() && self.product.get(f, e).is_some() {
                    rep.violation("normality", &[e, f], "e*f and f*e both exist yet e != f");
                }
            }
        }
        let condition_holds = !rep.failed();
        let order_holds = self.natural_quasiorder().is_partial_order();
        if condition_holds != order_holds {
            rep.violation(
                "derived-law(normality)",
                &[],
                "projection condition and quasiorder antisymmetry disagree",
            );
        }
        rep.finish()
    }

    /// D-regularity: every a has some b with a*b = D(a).
    pub fn is_d_regular(&self) -> CheckReport {
        let mut rep = Reporter::new(&self.carrier);
        for a in 0..self.n() {
            let target = self.d.apply(a);
            if !(0..self.n()).any(|b| self.product.get(a, b) == Some(target)) {
                rep.violation("D-regularity", &[a], "no b with a*b = D(a)");
            }
        }
        rep.finish()
    }

    /// Right cancellativity: a*c = b*c forces a = b.
    pub fn is_right_cancellative(&self) -> CheckReport {
        let mut rep = Reporter::new(&self.carrier);
        let n = self.n();
        for a in 0..n {
            for b in (a + 1)..n {
                for c in 0..n {
                    let p = self.product.get(a, c);
                    if p.is_some() && p == self.product.get(b, c) {
                        rep.violation("right-cancellativity", &[a, b, c], "a*c = b*c with a != b");
                    }
                }
            }
        }
        rep.finish()
    }

    /// All t with s*t = D(s) and t*s = D(t).
    pub fn d_inverses(&self, s: El) -> Vec<El> {
        (0..self.n())
            .filter(|&t| {
                self.product.get(s, t) == Some(self.d.apply(s))
                    && self.product.get(t, s) == Some(self.d.apply(t))
            })
            .collect()
    }

    /// Unique-D-inverse check. Computed two ways: directly (exactly one
    /// D-inverse per element) and via existence plus normality; the two
    /// routes must agree. On pass, returns the inverse map.
    pub fn is_d_inverse(&self) -> (CheckReport, Option<UnaryMap>) {
        let mut rep = Reporter::new(&self.carrier);
        let n = self.n();
        let mut images = Vec::with_capacity(n);
        let mut all_unique = true;
        let mut all_exist = true;
        for s in 0..n {
            let invs = self.d_inverses(s);
            match invs.len() {
                1 => images.push(invs[0]),
                0 => {
                    all_unique = false;
                    all_exist = false;
                    rep.violation("D-inverse-existence", &[s], "element has no D-inverse");
                    images.push(0);
                }
                _ => {
                    all_unique = false;
                    let mut witness = alloc::vec![s];
                    witness.extend(&invs);
                    rep.violation(
                        "D-inverse-uniqueness",
                        &witness,
                        format!("element has {} D-inverses", invs.len()),
                    );
                    images.push(invs[0]);
                }
            }
        }
        let via_normality = all_exist && self.is_normal().passed();
        if all_unique != via_normality {
            rep.violation(
                "derived-law(D-inverse)",
                &[],
                "uniqueness route and existence-plus-normality route disagree",
            );
        }
        let map = if all_unique {
            Some(UnaryMap::new(images, n).expect("in range"))
        } else {
            None
        };
        (rep.finish(), map)
    }

    /// s_D: projections e with s*e defined that sit below (in the standard
    /// quasiorder) every projection f with s*f defined.
    pub fn range_candidates(&self, s: El) -> Vec<El> {
        let absorbing: Vec<El> = self
            .projections
            .iter()
            .copied()
            .filter(|&e| self.product.get(s, e).is_some())
            .collect();
        absorbing
            .iter()
            .copied()
            .filter(|&e| absorbing.iter().all(|&f| self.proj_leq(e, f)))
            .collect()
    }
}

/// Range-structure validation on the typed constellation plus a candidate
/// R map: minimality of R(s), the congruence condition, and the derived
/// definedness equivalences.
fn validate_range(q: &Constellation, r: &UnaryMap, rep: &mut Reporter<'_>) {
    let n = q.n();
    // Minimality presupposes projections are ordered, not just quasiordered;
    // a non-normal constellation is reported rather than rejected outright.
    let normality = q.is_normal();
    if !normality.passed() {
        if let Some(v) = normality.violations.first() {
            rep.violation(
                "range(minimality-ambiguous)",
                &[],
                format!(
                    "projection quasiorder is not a partial order (witness {:?})",
                    v.witness
                ),
            );
        }
    }
    for s in 0..n {
        let cands = q.range_candidates(s);
        if cands != [r.apply(s)] {
            let labels: Vec<&str> = cands.iter().map(|&e| q.carrier().label(e)).collect();
            rep.violation(
                "range(minimal-projection)",
                &[s, r.apply(s)],
                format!("s_D computed as {labels:?}, expected exactly the stated R(s)"),
            );
        }
    }
    for s in 0..n {
        for t in 0..n {
            if let Some(st) = q.product().get(s, t) {
                match q.product().get(r.apply(s), t) {
                    None => rep.violation(
                        "range(congruence)",
                        &[s, t],
                        "s*t exists but R(s)*t does not",
                    ),
                    Some(u) => {
                        if r.apply(st) != r.apply(u) {
                            rep.violation(
                                "range(congruence)",
                                &[s, t],
                                "R(s*t) differs from R(R(s)*t)",
                            );
                        }
                    }
                }
                // R(s*t) sits below R(t) in the standard quasiorder.
                if !q.proj_leq(r.apply(st), r.apply(t)) {
                    rep.violation("range(order)", &[s, t], "R(s*t) is not below R(t)");
                }
            }
            // The four definedness statements stand or fall together:
            // s*t, s*D(t), R(s)*D(t), R(s)*t.
            let ways = [
                q.product().get(s, t).is_some(),
                q.product().get(s, q.d().apply(t)).is_some(),
                q.product().get(r.apply(s), q.d().apply(t)).is_some(),
                q.product().get(r.apply(s), t).is_some(),
            ];
            if ways.iter().any(|&w| w != ways[0]) {
                rep.violation(
                    "range(definedness)",
                    &[s, t],
                    format!("definedness of s*t, s*D(t), R(s)*D(t), R(s)*t disagree: {ways:?}"),
                );
            }
        }
    }
}

/// Validates a bundle as a constellation with range: the constellation
/// axioms, presence of R, and the range laws.
pub fn check_range(b: &AlgebraBundle) -> CheckReport {
    let base = check_constellation(b);
    if !base.passed() {
        return base;
    }
    let q = Constellation::from_bundle(b).expect("just checked");
    let mut rep = Reporter::new(&b.carrier);
    match &b.r {
        None => rep.violation("range(R-missing)", &[], "no R map supplied"),
        Some(r) => validate_range(&q, r, &mut rep),
    }
    rep.finish()
}

/// A validated constellation with range.
#[derive(Clone, PartialEq, Debug)]
pub struct ConstellationWithRange {
    base: Constellation,
    r: UnaryMap,
}

impl ConstellationWithRange {
    pub fn from_bundle(b: &AlgebraBundle) -> Result<Self, CheckReport> {
        let report = check_range(b);
        if !report.passed() {
            return Err(report);
        }
        let base = Constellation::from_bundle(b).expect("range check includes it");
        Ok(ConstellationWithRange {
            base,
            r: b.r.clone().expect("range check requires R"),
        })
    }

    /// Derives R from the minimal absorbing projections and validates the
    /// range laws on the result.
    pub fn attach(q: Constellation) -> Result<Self, CheckReport> {
        let n = q.n();
        let mut rep = Reporter::new(q.carrier());
        let mut images = Vec::with_capacity(n);
        for s in 0..n {
            let cands = q.range_candidates(s);
            if cands.len() == 1 {
                images.push(cands[0]);
            } else {
                rep.violation(
                    "range(minimal-projection)",
                    &[s],
                    format!("s_D has {} elements, expected exactly one", cands.len()),
                );
                images.push(q.d().apply(s));
            }
        }
        if rep.failed() {
            return Err(rep.finish());
        }
        let r = UnaryMap::new(images, n).expect("in range");
        let mut rep = Reporter::new(q.carrier());
        validate_range(&q, &r, &mut rep);
        if rep.failed() {
            return Err(rep.finish());
        }
        Ok(ConstellationWithRange { base: q, r })
    }

    pub(crate) fn from_parts(base: Constellation, r: UnaryMap) -> Self {
        ConstellationWithRange { base, r }
    }

    pub fn base(&self) -> &Constellation {
        &self.base
    }

    pub fn r(&self) -> &UnaryMap {
        &self.r
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn carrier(&self) -> &Carrier {
        self.base.carrier()
    }

    pub fn to_bundle(&self) -> AlgebraBundle {
        let mut b = self.base.to_bundle();
        b.kind = Kind::ConstellationWithRange;
        b.with_r(self.r.clone())
    }

    /// Left cancellativity for constellations with range: a*b = a*c forces
    /// R(a)*b = R(a)*c.
    pub fn is_left_cancellative(&self) -> CheckReport {
        let mut rep = Reporter::new(self.carrier());
        let n = self.n();
        let t = self.base.product();
        for a in 0..n {
            for b in 0..n {
                for c in (b + 1)..n {
                    let p = t.get(a, b);
                    if p.is_some() && p == t.get(a, c) {
                        let ra = self.r.apply(a);
                        let lhs = t.get(ra, b);
                        let rhs = t.get(ra, c);
                        if lhs.is_none() || lhs != rhs {
                            rep.violation(
                                "left-cancellativity",
                                &[a, b, c],
                                "a*b = a*c but R(a)*b and R(a)*c do not agree",
                            );
                        }
                    }
                }
            }
        }
        rep.finish()
    }

    /// Strong right cancellativity: right cancellative, and projections
    /// e, f with R(e*s) = R(f*s) must coincide.
    pub fn is_strongly_right_cancellative(&self) -> CheckReport {
        let mut rep = Reporter::new(self.carrier());
        rep.absorb(self.base.is_right_cancellative());
        let t = self.base.product();
        for &e in self.base.projections() {
            for &f in self.base.projections() {
                if e >= f {
                    continue;
                }
                for s in 0..self.n() {
                    if let (Some(es), Some(fs)) = (t.get(e, s), t.get(f, s)) {
                        if self.r.apply(es) == self.r.apply(fs) {
                            rep.violation(
                                "strong-right-cancellativity",
                                &[e, f, s],
                                "R(e*s) = R(f*s) with e != f",
                            );
                        }
                    }
                }
            }
        }
        rep.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn bundle(kind: Kind, labels: &[&str], rows: Vec<Vec<Option<El>>>) -> AlgebraBundle {
        let carrier = Carrier::new(labels.iter().map(|s| s.to_string()).collect()).unwrap();
        let product = PartialOpTable::from_rows(rows).unwrap();
        AlgebraBundle::new(kind, carrier, product).unwrap()
    }

    fn two_chain() -> AlgebraBundle {
        bundle(
            Kind::Constellation,
            &["e", "f"],
            vec![vec![Some(0), Some(0)], vec![None, Some(1)]],
        )
    }

    fn left_zero() -> AlgebraBundle {
        bundle(
            Kind::Constellation,
            &["a", "b"],
            vec![vec![Some(0), Some(0)], vec![Some(1), Some(1)]],
        )
    }

    fn z2() -> AlgebraBundle {
        bundle(
            Kind::Constellation,
            &["1", "a"],
            vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]],
        )
    }

    use alloc::string::ToString;

    #[test]
    fn poset_tables_pass_the_constellation_check() {
        assert!(check_constellation(&two_chain()).passed());
        let with_d = two_chain().with_d(UnaryMap::identity(2));
        assert!(check_constellation(&with_d).passed());
    }

    #[test]
    fn z2_with_constant_d_passes() {
        let b = z2().with_d(UnaryMap::new(vec![0, 0], 2).unwrap());
        assert!(check_constellation(&b).passed());
    }

    #[test]
    fn two_right_identities_fixing_one_element_break_const3() {
        // e and f are both right identities and both fix x.
        let b = bundle(
            Kind::Constellation,
            &["e", "f", "x"],
            vec![
                vec![Some(0), None, Some(2)],
                vec![None, Some(1), Some(2)],
                vec![None, None, None],
            ],
        );
        let report = check_constellation(&b);
        assert!(report.has("Const3"));
        assert_eq!(report.first("Const3").unwrap().witness[0], "x");
    }

    #[test]
    fn stated_d_must_match_the_derived_one() {
        let b = two_chain().with_d(UnaryMap::new(vec![0, 0], 2).unwrap());
        let report = check_constellation(&b);
        assert!(report.has("D"));
    }

    #[test]
    fn derive_d_on_left_zero_fixes_every_element() {
        // e*x = x forces e = x when every product is a projection onto the row.
        let b = left_zero();
        let d = derive_domain_map(&b.product, &b.carrier).unwrap();
        assert_eq!(d.images(), &[0, 1]);
    }

    #[test]
    fn natural_quasiorder_of_the_chain_and_left_zero() {
        let q = Constellation::from_bundle(&two_chain()).unwrap();
        let rel = q.natural_quasiorder();
        assert!(rel.contains(0, 1));
        assert!(!rel.contains(1, 0));
        assert!(rel.is_partial_order());

        let lz = Constellation::from_bundle(&left_zero()).unwrap();
        let rel = lz.natural_quasiorder();
        // All four pairs: a quasiorder, not a partial order.
        assert_eq!(rel.pairs().count(), 4);
        assert!(!rel.is_partial_order());
    }

    #[test]
    fn z2_natural_quasiorder_is_the_diagonal() {
        let q = Constellation::from_bundle(&z2()).unwrap();
        let rel = q.natural_quasiorder();
        assert_eq!(rel.strict_pairs().count(), 0);
    }

    #[test]
    fn normality_of_small_examples() {
        assert!(Constellation::from_bundle(&two_chain()).unwrap().is_normal().passed());
        let report = Constellation::from_bundle(&left_zero()).unwrap().is_normal();
        assert!(!report.passed());
        assert_eq!(report.violations[0].witness, vec!["a", "b"]);
    }

    #[test]
    fn d_regularity_of_small_examples() {
        assert!(Constellation::from_bundle(&z2()).unwrap().is_d_regular().passed());
        assert!(Constellation::from_bundle(&two_chain()).unwrap().is_d_regular().passed());
    }

    #[test]
    fn one_element_constellation_is_right_cancellative() {
        let b = bundle(Kind::Constellation, &["e"], vec![vec![Some(0)]]);
        assert!(Constellation::from_bundle(&b).unwrap().is_right_cancellative().passed());
    }

    #[test]
    fn left_zero_d_inverses_are_not_unique() {
        let q = Constellation::from_bundle(&left_zero()).unwrap();
        // a*b = a = D(a) and b*a = b = D(b): both elements invert a.
        assert_eq!(q.d_inverses(0), vec![0, 1]);
        let (report, map) = q.is_d_inverse();
        assert!(report.has("D-inverse-uniqueness"));
        assert!(map.is_none());
    }

    #[test]
    fn projections_are_their_own_d_inverses() {
        let q = Constellation::from_bundle(&two_chain()).unwrap();
        for &e in q.projections() {
            assert!(q.d_inverses(e).contains(&e));
        }
        let (report, map) = q.is_d_inverse();
        assert!(report.passed());
        assert_eq!(map.unwrap().images(), &[0, 1]);
    }

    #[test]
    fn z2_is_d_inverse_with_group_inverses() {
        let q = Constellation::from_bundle(&z2()).unwrap();
        let (report, map) = q.is_d_inverse();
        assert!(report.passed());
        assert_eq!(map.unwrap().images(), &[0, 1]);
    }

    #[test]
    fn chain_range_candidates_and_attachment() {
        let q = Constellation::from_bundle(&two_chain()).unwrap();
        // e*e and e*f exist; e is below f, so s_D(e) = {e}.
        assert_eq!(q.range_candidates(0), vec![0]);
        assert_eq!(q.range_candidates(1), vec![1]);
        let rc = ConstellationWithRange::attach(q).unwrap();
        assert_eq!(rc.r().images(), &[0, 1]);
    }

    #[test]
    fn left_zero_range_candidates_are_not_singletons() {
        let q = Constellation::from_bundle(&left_zero()).unwrap();
        // Both projections absorb a on the right and each is below the
        // other, so minimality picks both.
        assert_eq!(q.range_candidates(0), vec![0, 1]);
        assert!(ConstellationWithRange::attach(q).is_err());
    }

    #[test]
    fn check_range_accepts_the_chain_with_r_equal_d() {
        let b = two_chain()
            .with_d(UnaryMap::identity(2))
            .with_r(UnaryMap::identity(2));
        let mut b = b;
        b.kind = Kind::ConstellationWithRange;
        assert!(check_range(&b).passed());
    }

    #[test]
    fn check_range_reports_missing_r() {
        let report = check_range(&two_chain());
        assert!(report.has("range(R-missing)"));
    }
}
