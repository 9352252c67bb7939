//! Constellation morphisms: radiants, strong radiants, embeddings, range
//! radiants, and inverse preservation.

use alloc::vec::Vec;

use crate::constellation::Constellation;
use crate::report::{CheckReport, Reporter};
use crate::tables::{El, UnaryMap};
use crate::Error;

/// A constellation together with whatever optional structure a morphism
/// check may need to respect.
#[derive(Clone, Copy)]
pub struct ConstellationView<'a> {
    pub q: &'a Constellation,
    pub r: Option<&'a UnaryMap>,
    pub inverse: Option<&'a UnaryMap>,
}

impl<'a> ConstellationView<'a> {
    pub fn plain(q: &'a Constellation) -> Self {
        ConstellationView {
            q,
            r: None,
            inverse: None,
        }
    }
}

/// Which morphism properties a candidate map enjoys. Flags that need
/// structure absent on one side come back as `None`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RadiantFlags {
    /// Preserves defined products and the domain map.
    pub radiant: bool,
    /// Reflects definedness as well: s*t exists iff (s rho)*(t rho) does.
    pub strong: bool,
    pub injective: bool,
    /// Strong injective radiant.
    pub embedding: bool,
    /// Preserves R (when both sides carry one).
    pub range_radiant: Option<bool>,
    /// Preserves the inverse map (when both sides carry one).
    pub inverse_preserving: Option<bool>,
}

/// Flags plus per-flag witnesses for everything that failed.
#[derive(Clone, PartialEq, Debug)]
pub struct RadiantReport {
    pub flags: RadiantFlags,
    pub report: CheckReport,
}

/// Checks a total map between two constellations against every morphism
/// property at once.
pub fn check_radiant(
    src: ConstellationView<'_>,
    dst: ConstellationView<'_>,
    map: &[El],
) -> Result<RadiantReport, Error> {
    if map.len() != src.q.n() {
        return Err(Error::Input(alloc::format!(
            "map has {} entries but the source has {} elements",
            map.len(),
            src.q.n()
        )));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= dst.q.n()) {
        return Err(Error::Input(alloc::format!(
            "map image {bad} out of range for a {}-element target",
            dst.q.n()
        )));
    }

    let n = src.q.n();
    let mut rep = Reporter::new(src.q.carrier());
    let mut radiant = true;
    let mut strong = true;

    for s in 0..n {
        for t in 0..n {
            let src_def = src.q.product().get(s, t);
            let dst_def = dst.q.product().get(map[s], map[t]);
            match (src_def, dst_def) {
                (Some(u), Some(v)) => {
                    if map[u] != v {
                        radiant = false;
                        rep.violation("radiant", &[s, t], "(s*t) image differs from (s rho)*(t rho)");
                    }
                }
                (Some(_), None) => {
                    radiant = false;
                    rep.violation("radiant", &[s, t], "s*t exists but the image product does not");
                }
                (None, Some(_)) => {
                    strong = false;
                    rep.violation("strong", &[s, t], "image product exists but s*t does not");
                }
                (None, None) => {}
            }
        }
    }
    for s in 0..n {
        if dst.q.d().apply(map[s]) != map[src.q.d().apply(s)] {
            radiant = false;
            rep.violation("radiant", &[s], "domain of the image differs from the image of the domain");
        }
    }

    let mut injective = true;
    for s in 0..n {
        for t in (s + 1)..n {
            if map[s] == map[t] {
                injective = false;
                rep.violation("injective", &[s, t], "two elements share an image");
            }
        }
    }

    let range_radiant = match (src.r, dst.r) {
        (Some(rs), Some(rd)) => {
            let mut ok = true;
            for s in 0..n {
                if rd.apply(map[s]) != map[rs.apply(s)] {
                    ok = false;
                    rep.violation("range-radiant", &[s], "range of the image differs from the image of the range");
                }
            }
            Some(ok)
        }
        _ => None,
    };

    let inverse_preserving = match (src.inverse, dst.inverse) {
        (Some(is), Some(id)) => {
            let mut ok = true;
            for s in 0..n {
                if id.apply(map[s]) != map[is.apply(s)] {
                    ok = false;
                    rep.violation("inverse-preserving", &[s], "inverse of the image differs from the image of the inverse");
                }
            }
            Some(ok)
        }
        _ => None,
    };

    let strong = strong && radiant;
    let flags = RadiantFlags {
        radiant,
        strong,
        injective,
        embedding: strong && injective,
        range_radiant,
        inverse_preserving,
    };
    Ok(RadiantReport {
        flags,
        report: rep.finish(),
    })
}

/// Convenience: all maps from a source of size `n` into a target of size
/// `m`, in lexicographic order. Used by exhaustive morphism scans.
pub fn all_maps(n: usize, m: usize) -> Vec<Vec<El>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    if m == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = alloc::vec![0usize; n];
    loop {
        out.push(cur.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < m {
                break;
            }
            cur[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::{AlgebraBundle, Kind};
    use crate::tables::{Carrier, PartialOpTable};
    use alloc::string::ToString;
    use alloc::vec;

    fn constellation(labels: &[&str], rows: Vec<Vec<Option<El>>>) -> Constellation {
        let carrier = Carrier::new(labels.iter().map(|s| s.to_string()).collect()).unwrap();
        let product = PartialOpTable::from_rows(rows).unwrap();
        let b = AlgebraBundle::new(Kind::Constellation, carrier, product).unwrap();
        Constellation::from_bundle(&b).unwrap()
    }

    #[test]
    fn identity_map_has_every_applicable_flag() {
        let q = constellation(&["e", "f"], vec![vec![Some(0), Some(0)], vec![None, Some(1)]]);
        let out = check_radiant(
            ConstellationView::plain(&q),
            ConstellationView::plain(&q),
            &[0, 1],
        )
        .unwrap();
        assert!(out.flags.radiant && out.flags.strong && out.flags.injective && out.flags.embedding);
        assert_eq!(out.flags.range_radiant, None);
    }

    #[test]
    fn collapsing_z2_to_a_point_is_strong_but_not_injective() {
        let z2 = constellation(&["1", "a"], vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]]);
        let point = constellation(&["e"], vec![vec![Some(0)]]);
        let out = check_radiant(
            ConstellationView::plain(&z2),
            ConstellationView::plain(&point),
            &[0, 0],
        )
        .unwrap();
        assert!(out.flags.radiant);
        // Every product is defined on both sides, so strength holds too.
        assert!(out.flags.strong);
        assert!(!out.flags.injective);
        assert!(!out.flags.embedding);
    }

    #[test]
    fn all_maps_counts() {
        assert_eq!(all_maps(2, 3).len(), 9);
        assert_eq!(all_maps(0, 5).len(), 1);
        assert_eq!(all_maps(2, 0).len(), 0);
    }
}
