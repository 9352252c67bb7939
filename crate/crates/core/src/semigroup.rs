//! Semigroups with a distinguished idempotent set: E-regularity,
//! E-inverses, T-normality, the pair constellation, and its one-element-
//! per-pair variant for pre-reduced E.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bundle::{AlgebraBundle, Kind};
use crate::report::{CheckReport, Reporter};
use crate::tables::{Carrier, El, PartialOpTable, UnaryMap};
use crate::Error;

/// Validates a bundle as a (possibly involuted) semigroup with a
/// distinguished idempotent subset: total, associative, E inside the
/// idempotents, involution laws when a star is present.
pub fn check_semigroup(b: &AlgebraBundle) -> CheckReport {
    let mut rep = Reporter::new(&b.carrier);
    let n = b.n();
    let t = &b.product;
    for x in 0..n {
        for y in 0..n {
            if t.get(x, y).is_none() {
                rep.violation("totality", &[x, y], "product undefined");
            }
        }
    }
    if rep.failed() {
        return rep.finish();
    }
    let mul = |x: El, y: El| t.get(x, y).expect("total");
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if mul(mul(x, y), z) != mul(x, mul(y, z)) {
                    rep.violation("associativity", &[x, y, z], "(xy)z differs from x(yz)");
                }
            }
        }
    }
    if let Some(e_set) = &b.e_set {
        for &e in e_set {
            if mul(e, e) != e {
                rep.violation("E-idempotent", &[e], "distinguished element is not idempotent");
            }
        }
    }
    if let Some(star) = &b.star {
        for x in 0..n {
            if star.apply(star.apply(x)) != x {
                rep.violation("involution", &[x], "star is not self-inverse");
            }
            for y in 0..n {
                if star.apply(mul(x, y)) != mul(star.apply(y), star.apply(x)) {
                    rep.violation("involution", &[x, y], "(xy)* differs from y*x*");
                }
            }
        }
    }
    rep.finish()
}

/// A validated total associative table with a distinguished idempotent
/// subset E (defaulting to all idempotents) and an optional involution.
#[derive(Clone, PartialEq, Debug)]
pub struct SemigroupWithE {
    carrier: Carrier,
    table: PartialOpTable,
    e_set: Vec<El>,
    star: Option<UnaryMap>,
}

/// A built pair constellation plus the pairs that index its carrier and
/// any products that met the definedness condition but escaped the
/// carrier (the T-normality failure mode).
#[derive(Clone, PartialEq, Debug)]
pub struct PairBuild {
    pub bundle: AlgebraBundle,
    pub pairs: Vec<(El, El)>,
    pub escaped: Vec<((El, El), (El, El))>,
}

impl PairBuild {
    /// Well-defined and a D-inverse constellation with the pair swap as
    /// the inverse assignment.
    pub fn is_d_inverse(&self) -> bool {
        if !self.escaped.is_empty() {
            return false;
        }
        let Ok(q) = crate::constellation::Constellation::from_bundle(&self.bundle) else {
            return false;
        };
        let (report, map) = q.is_d_inverse();
        report.passed() && map.as_ref() == self.bundle.inverse.as_ref()
    }
}

impl SemigroupWithE {
    pub fn from_bundle(b: &AlgebraBundle) -> Result<Self, CheckReport> {
        let report = check_semigroup(b);
        if !report.passed() {
            return Err(report);
        }
        let e_set = b.e_set.clone().unwrap_or_else(|| b.product.idempotents());
        Ok(SemigroupWithE {
            carrier: b.carrier.clone(),
            table: b.product.clone(),
            e_set,
            star: b.star.clone(),
        })
    }

    /// Same semigroup with a different distinguished subset.
    pub fn with_e_set(&self, e_set: Vec<El>) -> Result<Self, Error> {
        for &e in &e_set {
            if self.mul(e, e) != e {
                return Err(Error::Input(format!(
                    "element {:?} in E is not idempotent",
                    self.carrier.label(e)
                )));
            }
        }
        let mut s = self.clone();
        let mut e_set = e_set;
        e_set.sort_unstable();
        e_set.dedup();
        s.e_set = e_set;
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.carrier.len()
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn table(&self) -> &PartialOpTable {
        &self.table
    }

    pub fn e_set(&self) -> &[El] {
        &self.e_set
    }

    pub fn star(&self) -> Option<&UnaryMap> {
        self.star.as_ref()
    }

    #[inline]
    pub fn mul(&self, x: El, y: El) -> El {
        self.table.get(x, y).expect("total")
    }

    fn in_e(&self, x: El) -> bool {
        self.e_set.binary_search(&x).is_ok()
    }

    /// R_E(S): elements s with some t making sts = s and st, ts both in E.
    pub fn e_regular_elements(&self) -> Vec<El> {
        (0..self.n())
            .filter(|&s| {
                (0..self.n()).any(|t| {
                    self.mul(self.mul(s, t), s) == s
                        && self.in_e(self.mul(s, t))
                        && self.in_e(self.mul(t, s))
                })
            })
            .collect()
    }

    /// All u with sus = s, usu = u, and su, us in E.
    pub fn e_inverses(&self, s: El) -> Vec<El> {
        (0..self.n())
            .filter(|&u| {
                self.mul(self.mul(s, u), s) == s
                    && self.mul(self.mul(u, s), u) == u
                    && self.in_e(self.mul(s, u))
                    && self.in_e(self.mul(u, s))
            })
            .collect()
    }

    fn require_admissible(&self, t_set: &[El]) -> Result<(), Error> {
        let regular = self.e_regular_elements();
        for &e in &self.e_set {
            if !t_set.contains(&e) {
                return Err(Error::Input(format!(
                    "T must contain E; missing {:?}",
                    self.carrier.label(e)
                )));
            }
        }
        for &s in t_set {
            if !regular.contains(&s) {
                return Err(Error::Input(format!(
                    "T must consist of E-regular elements; {:?} is not",
                    self.carrier.label(s)
                )));
            }
        }
        Ok(())
    }

    /// T-normality of E: for e in E and mutually E-inverse s, s' in T,
    /// e = ess' = ss'e forces s'es into E.
    pub fn is_t_normal(&self, t_set: &[El]) -> Result<CheckReport, Error> {
        self.require_admissible(t_set)?;
        let mut rep = Reporter::new(&self.carrier);
        for &e in &self.e_set {
            for &s in t_set {
                for &si in t_set {
                    if !self.e_inverses(s).contains(&si) {
                        continue;
                    }
                    let ssi = self.mul(s, si);
                    if self.mul(e, ssi) == e && self.mul(ssi, e) == e {
                        let conj = self.mul(self.mul(si, e), s);
                        if !self.in_e(conj) {
                            rep.violation(
                                "T-normality",
                                &[e, s, si],
                                "s'es falls outside E",
                            );
                        }
                    }
                }
            }
        }
        Ok(rep.finish())
    }

    /// Pre-reduced E: ef = f with fe = e forces e = f, and ef = e with
    /// fe = f forces e = f. Exactly when this holds are E-inverses unique.
    pub fn is_pre_reduced(&self) -> CheckReport {
        let mut rep = Reporter::new(&self.carrier);
        for &e in &self.e_set {
            for &f in &self.e_set {
                if e >= f {
                    continue;
                }
                let ef = self.mul(e, f);
                let fe = self.mul(f, e);
                if ef == f && fe == e {
                    rep.violation("pre-reduced", &[e, f], "ef = f and fe = e with e != f");
                }
                if ef == e && fe == f {
                    rep.violation("pre-reduced", &[e, f], "ef = e and fe = f with e != f");
                }
            }
        }
        rep.finish()
    }

    /// Reduced E: ef = f exactly when fe = f. Implies pre-reduced, which is
    /// re-checked as a derived law.
    pub fn is_reduced(&self) -> CheckReport {
        let mut rep = Reporter::new(&self.carrier);
        for &e in &self.e_set {
            for &f in &self.e_set {
                if (self.mul(e, f) == f) != (self.mul(f, e) == f) {
                    rep.violation("reduced", &[e, f], "ef = f and fe = f disagree");
                }
            }
        }
        let reduced = !rep.failed();
        if reduced && !self.is_pre_reduced().passed() {
            rep.violation(
                "derived-law(reduced)",
                &[],
                "reduced idempotent set fails the pre-reduced condition",
            );
        }
        rep.finish()
    }

    fn pair_label(&self, s: El, si: El) -> String {
        format!("({},{})", self.carrier.label(s), self.carrier.label(si))
    }

    /// The pair constellation on mutually E-inverse pairs from T:
    /// (s,s')(t,t') = (st,t's') when s = stt' and tt's' = s', with
    /// D((s,s')) = (ss',ss') and (s,s') inverted to (s',s).
    ///
    /// When E is not T-normal the stated product is not well-defined: some
    /// product pairs fall outside the carrier. Those show up in `escaped`
    /// (and as undefined cells), so callers can treat the construction as
    /// failed without losing the rest of the table.
    pub fn build_pair_constellation(&self, t_set: &[El]) -> Result<PairBuild, Error> {
        self.require_admissible(t_set)?;
        let mut pairs: Vec<(El, El)> = Vec::new();
        for &s in t_set {
            for &si in t_set {
                if self.e_inverses(s).contains(&si) {
                    pairs.push((s, si));
                }
            }
        }
        pairs.sort_unstable();
        let index = |p: (El, El)| pairs.binary_search(&p).ok();
        let m = pairs.len();
        let mut product = PartialOpTable::empty(m);
        let mut escaped = Vec::new();
        for (i, &(s, si)) in pairs.iter().enumerate() {
            for (j, &(t, ti)) in pairs.iter().enumerate() {
                let tti = self.mul(t, ti);
                if self.mul(s, tti) == s && self.mul(tti, si) == si {
                    let target = (self.mul(s, t), self.mul(ti, si));
                    match index(target) {
                        Some(k) => product.set(i, j, Some(k)),
                        None => escaped.push(((s, si), (t, ti))),
                    }
                }
            }
        }
        let d: Vec<El> = pairs
            .iter()
            .map(|&(s, si)| {
                let e = self.mul(s, si);
                index((e, e)).expect("ss' is idempotent in E, hence self-paired")
            })
            .collect();
        let inverse: Vec<El> = pairs
            .iter()
            .map(|&(s, si)| index((si, s)).expect("mutual inverses swap"))
            .collect();
        let labels: Vec<String> = pairs.iter().map(|&(s, si)| self.pair_label(s, si)).collect();
        let carrier = Carrier::new(labels)?;
        let bundle = AlgebraBundle::new(Kind::Constellation, carrier, product)?
            .with_d(UnaryMap::new(d, m)?)
            .with_inverse(UnaryMap::new(inverse, m)?);
        Ok(PairBuild {
            bundle,
            pairs,
            escaped,
        })
    }

    /// The unconditional closure identities of the pair product, asserted
    /// per defined product: (st)(t's')(st) = st, (t's')(st)(t's') = t's',
    /// (st)(t's') in E; plus the domain image being exactly the pairs
    /// (e, e) for e in E.
    pub fn pair_closure_check(&self, build: &PairBuild) -> CheckReport {
        let mut rep = Reporter::new(&build.bundle.carrier);
        let m = build.pairs.len();
        for i in 0..m {
            for j in 0..m {
                if build.bundle.product.get(i, j).is_none() {
                    continue;
                }
                let (s, si) = build.pairs[i];
                let (t, ti) = build.pairs[j];
                let st = self.mul(s, t);
                let tisi = self.mul(ti, si);
                if self.mul(self.mul(st, tisi), st) != st {
                    rep.violation("pair-closure", &[i, j], "(st)(t's')(st) differs from st");
                }
                if self.mul(self.mul(tisi, st), tisi) != tisi {
                    rep.violation("pair-closure", &[i, j], "(t's')(st)(t's') differs from t's'");
                }
                if !self.in_e(self.mul(st, tisi)) {
                    rep.violation("pair-closure", &[i, j], "(st)(t's') falls outside E");
                }
            }
        }
        let d_image: Vec<El> = build
            .bundle
            .d
            .as_ref()
            .expect("pair bundles carry D")
            .image_set();
        let expected: Vec<El> = build
            .pairs
            .iter()
            .enumerate()
            .filter(|(_, &(s, si))| s == si && self.in_e(s))
            .map(|(i, _)| i)
            .collect();
        if d_image != expected {
            rep.violation(
                "pair-domain-image",
                &[],
                "domain image is not exactly the diagonal pairs over E",
            );
        }
        rep.finish()
    }

    /// The one-element-per-pair variant available when E is pre-reduced
    /// (unique E-inverses): carrier T itself, s*t = st exactly when
    /// stt' = s and tt's' = s'.
    pub fn build_element_constellation(&self, t_set: &[El]) -> Result<AlgebraBundle, Error> {
        self.require_admissible(t_set)?;
        let pre_reduced = self.is_pre_reduced();
        if !pre_reduced.passed() {
            let v = &pre_reduced.violations[0];
            return Err(Error::Input(format!(
                "E is not pre-reduced (witness {:?}); E-inverses are not unique",
                v.witness
            )));
        }
        let t_normal = self.is_t_normal(t_set)?;
        if !t_normal.passed() {
            let v = &t_normal.violations[0];
            return Err(Error::Input(format!(
                "E is not T-normal (witness {:?})",
                v.witness
            )));
        }
        let mut members: Vec<El> = t_set.to_vec();
        members.sort_unstable();
        members.dedup();
        let unique_inverse = |s: El| -> El {
            let invs: Vec<El> = self
                .e_inverses(s)
                .into_iter()
                .filter(|u| members.contains(u))
                .collect();
            debug_assert_eq!(invs.len(), 1, "pre-reduced E gives unique E-inverses");
            invs[0]
        };
        let m = members.len();
        let pos = |s: El| members.binary_search(&s).expect("member");
        let mut product = PartialOpTable::empty(m);
        for (i, &s) in members.iter().enumerate() {
            let si = unique_inverse(s);
            for (j, &t) in members.iter().enumerate() {
                let ti = unique_inverse(t);
                let tti = self.mul(t, ti);
                if self.mul(s, tti) == s && self.mul(tti, si) == si {
                    product.set(i, j, Some(pos(self.mul(s, t))));
                }
            }
        }
        let d: Vec<El> = members.iter().map(|&s| pos(self.mul(s, unique_inverse(s)))).collect();
        let inverse: Vec<El> = members.iter().map(|&s| pos(unique_inverse(s))).collect();
        let labels: Vec<String> = members
            .iter()
            .map(|&s| self.carrier.label(s).into())
            .collect();
        let carrier = Carrier::new(labels)?;
        Ok(AlgebraBundle::new(Kind::Constellation, carrier, product)?
            .with_d(UnaryMap::new(d, m)?)
            .with_inverse(UnaryMap::new(inverse, m)?))
    }

    /// The pair constellation over all idempotents and all regular
    /// elements. E(S) is S-normal, so nothing ever escapes here.
    pub fn nambooripad(&self) -> Result<PairBuild, Error> {
        let all_idempotents = self.table.idempotents();
        let s = self.with_e_set(all_idempotents)?;
        let regular = s.e_regular_elements();
        s.build_pair_constellation(&regular)
    }

    /// Partial isometries and projections of an involuted semigroup:
    /// I*(S) = elements with ss*s = s, E*(S) = self-adjoint idempotents.
    /// E*(S) is verified reduced and I*(S)-normal on the way out.
    pub fn partial_isometries(&self) -> Result<(Vec<El>, Vec<El>), Error> {
        let Some(star) = &self.star else {
            return Err(Error::Input("no involution present".into()));
        };
        let i_star: Vec<El> = (0..self.n())
            .filter(|&s| self.mul(self.mul(s, star.apply(s)), s) == s)
            .collect();
        let e_star: Vec<El> = (0..self.n())
            .filter(|&e| star.apply(e) == e && self.mul(e, e) == e)
            .collect();
        let scoped = self.with_e_set(e_star.clone())?;
        let reduced = scoped.is_reduced();
        if !reduced.passed() {
            return Err(Error::Input(format!(
                "derived invariant failed: projections are not reduced ({:?})",
                reduced.violations[0].witness
            )));
        }
        let normal = scoped.is_t_normal(&i_star)?;
        if !normal.passed() {
            return Err(Error::Input(format!(
                "derived invariant failed: projections are not partial-isometry-normal ({:?})",
                normal.violations[0].witness
            )));
        }
        Ok((i_star, e_star))
    }

    /// The partial-isometry constellation of an involuted semigroup:
    /// carrier I*(S) with E = E*(S).
    pub fn lawson(&self) -> Result<AlgebraBundle, Error> {
        let (i_star, e_star) = self.partial_isometries()?;
        let scoped = self.with_e_set(e_star)?;
        scoped.build_element_constellation(&i_star)
    }
}
