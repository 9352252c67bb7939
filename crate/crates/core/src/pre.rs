//! Pre-constellations: the domain-free fragment, regularity, inverses, and
//! reconstruction of the domain operation.

use alloc::format;
use alloc::vec::Vec;

use crate::bundle::{AlgebraBundle, Kind};
use crate::constellation::{check_constellation, const12_violations, Constellation};
use crate::report::{CheckReport, Reporter};
use crate::tables::{Carrier, El, PartialOpTable, UnaryMap};
use crate::Error;

/// Just the two composition laws; no domain operation is presumed.
pub fn check_pre_constellation(b: &AlgebraBundle) -> CheckReport {
    let mut rep = Reporter::new(&b.carrier);
    const12_violations(&b.product, &mut rep);
    rep.finish()
}

/// Forgets everything but the product table.
pub fn reduct(b: &AlgebraBundle) -> AlgebraBundle {
    AlgebraBundle::new(Kind::PreConstellation, b.carrier.clone(), b.product.clone())
        .expect("dimensions agree")
}

#[derive(Clone, PartialEq, Debug)]
pub struct PreConstellation {
    carrier: Carrier,
    product: PartialOpTable,
}

impl PreConstellation {
    pub fn from_bundle(b: &AlgebraBundle) -> Result<Self, CheckReport> {
        let report = check_pre_constellation(b);
        if !report.passed() {
            return Err(report);
        }
        Ok(PreConstellation {
            carrier: b.carrier.clone(),
            product: b.product.clone(),
        })
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

    /// x sandwiched by y: x*(y*x), when every piece exists.
    fn sandwich(&self, x: El, y: El) -> Option<El> {
        let yx = self.product.get(y, x)?;
        self.product.get(x, yx)
    }

    /// Regularity: every x has a y with x = x*(y*x). The symmetric-witness
    /// form (some z with x = x*(z*x) and z = z*(x*z)) is computed too and
    /// must agree.
    pub fn is_regular(&self) -> CheckReport {
        let mut rep = Reporter::new(&self.carrier);
        let n = self.n();
        for x in 0..n {
            if !(0..n).any(|y| self.sandwich(x, y) == Some(x)) {
                rep.violation("regular", &[x], "no y with x = x*(y*x)");
            }
        }
        let plain = !rep.failed();
        let symmetric = (0..n).all(|x| {
            (0..n).any(|z| self.sandwich(x, z) == Some(x) && self.sandwich(z, x) == Some(z))
        });
        if plain != symmetric {
            rep.violation(
                "derived-law(regular)",
                &[],
                "one-sided and symmetric-witness regularity disagree",
            );
        }
        rep.finish()
    }

    /// All t with s*(t*s) = s and t = t*(s*t).
    pub fn inverses_of(&self, s: El) -> Vec<El> {
        (0..self.n())
            .filter(|&t| self.sandwich(s, t) == Some(s) && self.sandwich(t, s) == Some(t))
            .collect()
    }

    /// Unique-inverse check; returns the inverse map on pass.
    pub fn is_inverse(&self) -> (CheckReport, Option<UnaryMap>) {
        let mut rep = Reporter::new(&self.carrier);
        let n = self.n();
        let mut images = Vec::with_capacity(n);
        let mut ok = true;
        for s in 0..n {
            let invs = self.inverses_of(s);
            match invs.len() {
                1 => images.push(invs[0]),
                0 => {
                    ok = false;
                    rep.violation("inverse-pre", &[s], "element has no inverse");
                    images.push(0);
                }
                k => {
                    ok = false;
                    let mut witness = alloc::vec![s];
                    witness.extend(&invs);
                    rep.violation("inverse-pre", &witness, format!("element has {k} inverses"));
                    images.push(invs[0]);
                }
            }
        }
        let map = ok.then(|| UnaryMap::new(images, n).expect("in range"));
        (rep.finish(), map)
    }

    /// The idempotent separation condition: idempotents e, f with
    /// e = e*(f*e) and f = f*(e*f) must coincide. For regular inputs this
    /// is equivalent to being inverse, and the two verdicts are compared.
    pub fn regisinv_condition(&self) -> CheckReport {
        let mut rep = Reporter::new(&self.carrier);
        let idempotents = self.product.idempotents();
        for &e in &idempotents {
            for &f in &idempotents {
                if e < f && self.sandwich(e, f) == Some(e) && self.sandwich(f, e) == Some(f) {
                    rep.violation(
                        "idempotent-separation",
                        &[e, f],
                        "mutually sandwiched idempotents differ",
                    );
                }
            }
        }
        if self.is_regular().passed() {
            let condition = !rep.failed();
            let inverse = self.is_inverse().0.passed();
            if condition != inverse {
                rep.violation(
                    "derived-law(idempotent-separation)",
                    &[],
                    "separation condition and unique inverses disagree on a regular input",
                );
            }
        }
        rep.finish()
    }

    /// The two laws separating constellation reducts from general inverse
    /// pre-constellations: commuting-style agreement of idempotent
    /// products, and idempotents absorbing on the right.
    pub fn cond12(&self) -> CheckReport {
        let mut rep = Reporter::new(&self.carrier);
        let idempotents = self.product.idempotents();
        for &e in &idempotents {
            for &f in &idempotents {
                if e < f {
                    if let (Some(a), Some(b)) = (self.product.get(e, f), self.product.get(f, e)) {
                        if a != b {
                            rep.violation("cond1", &[e, f], "e*f and f*e both exist but differ");
                        }
                    }
                }
            }
        }
        for s in 0..self.n() {
            for &e in &idempotents {
                if let Some(v) = self.product.get(s, e) {
                    if v != s {
                        rep.violation("cond2", &[s, e], "s*e exists but is not s");
                    }
                }
            }
        }
        rep.finish()
    }

    /// Rebuilds the domain operation of an inverse pre-constellation
    /// satisfying both conditions: D(s) = s*s', with the pre-inverse as the
    /// D-inverse map.
    pub fn reconstruct(&self) -> Result<AlgebraBundle, Error> {
        let (inv_report, inverse) = self.is_inverse();
        let Some(inverse) = inverse else {
            let v = &inv_report.violations[0];
            return Err(Error::Input(format!(
                "reconstruction needs unique inverses: {} (witness {:?})",
                v.axiom, v.witness
            )));
        };
        let cond = self.cond12();
        if !cond.passed() {
            let v = &cond.violations[0];
            return Err(Error::Input(format!(
                "reconstruction precondition {} fails (witness {:?})",
                v.axiom, v.witness
            )));
        }
        let n = self.n();
        let d: Vec<El> = (0..n)
            .map(|s| {
                self.product
                    .get(s, inverse.apply(s))
                    .expect("s*(s'*s) = s existing forces s*s' to exist")
            })
            .collect();
        let bundle = AlgebraBundle::new(
            Kind::Constellation,
            self.carrier.clone(),
            self.product.clone(),
        )?
        .with_d(UnaryMap::new(d, n)?)
        .with_inverse(inverse);
        let check = check_constellation(&bundle);
        if !check.passed() {
            let v = &check.violations[0];
            return Err(Error::Input(format!(
                "reconstruction did not yield a constellation: {} (witness {:?})",
                v.axiom, v.witness
            )));
        }
        let q = Constellation::from_bundle(&bundle).expect("just checked");
        let (dinv, map) = q.is_d_inverse();
        if !dinv.passed() || map.as_ref() != bundle.inverse.as_ref() {
            return Err(Error::Input(
                "reconstruction did not yield a D-inverse constellation".into(),
            ));
        }
        Ok(bundle)
    }
}
