//! Isomorphism search and canonical forms by brute-force permutation
//! minimization. Fine at desk scale; capped at order 8.

use alloc::string::String;
use alloc::vec::Vec;

use crate::bundle::AlgebraBundle;
use crate::serial::serialize_bundle;
use crate::tables::El;
use crate::Error;

/// Largest carrier canonical_form and find_isomorphism will brute-force.
pub const MAX_CANONICAL_ORDER: usize = 8;

/// All permutations of 0..n in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<El>> {
    let mut out = Vec::new();
    let mut cur: Vec<El> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn cap_order(n: usize, what: &str) -> Result<(), Error> {
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::Resource(alloc::format!(
            "{what} is capped at order {MAX_CANONICAL_ORDER}; got {n}"
        )));
    }
    Ok(())
}

/// Does `perm` carry the structure of `a` onto `b` exactly?
fn is_structure_map(a: &AlgebraBundle, b: &AlgebraBundle, perm: &[El]) -> bool {
    let n = a.n();
    for x in 0..n {
        for y in 0..n {
            let lhs = b.product.get(perm[x], perm[y]);
            let rhs = a.product.get(x, y).map(|v| perm[v]);
            if lhs != rhs {
                return false;
            }
        }
    }
    for (ma, mb) in [
        (&a.d, &b.d),
        (&a.r, &b.r),
        (&a.inverse, &b.inverse),
        (&a.star, &b.star),
    ] {
        if let (Some(ma), Some(mb)) = (ma, mb) {
            for x in 0..n {
                if mb.apply(perm[x]) != perm[ma.apply(x)] {
                    return false;
                }
            }
        }
    }
    if let (Some(ea), Some(eb)) = (&a.e_set, &b.e_set) {
        let mut mapped: Vec<El> = ea.iter().map(|&x| perm[x]).collect();
        mapped.sort_unstable();
        if &mapped != eb {
            return false;
        }
    }
    if let (Some(oa), Some(ob)) = (&a.order, &b.order) {
        for x in 0..n {
            for y in 0..n {
                if oa.contains(x, y) != ob.contains(perm[x], perm[y]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Brute-force isomorphism search between two bundles of the same kind,
/// size, and component signature. Returns the first bijection (in
/// lexicographic order) preserving the product table, definedness pattern
/// included, and every present unary map, subset, and relation.
pub fn find_isomorphism(a: &AlgebraBundle, b: &AlgebraBundle) -> Result<Option<Vec<El>>, Error> {
    if a.kind != b.kind {
        return Err(Error::Input(alloc::format!(
            "kind mismatch: {} vs {}",
            a.kind.as_str(),
            b.kind.as_str()
        )));
    }
    if a.n() != b.n() {
        return Err(Error::Input(alloc::format!(
            "carrier size mismatch: {} vs {}",
            a.n(),
            b.n()
        )));
    }
    if a.component_signature() != b.component_signature() {
        return Err(Error::Input(
            "bundles carry different component sets".into(),
        ));
    }
    cap_order(a.n(), "isomorphism search")?;
    Ok(permutations(a.n())
        .into_iter()
        .find(|p| is_structure_map(a, b, p)))
}

fn canonical_inner(a: &AlgebraBundle) -> Result<(Vec<El>, String), Error> {
    cap_order(a.n(), "canonical form")?;
    let normalized = a.with_standard_labels();
    let mut best: Option<(Vec<El>, String)> = None;
    for perm in permutations(a.n()) {
        let key = serialize_bundle(&normalized.transported(&perm));
        match &best {
            Some((_, k)) if *k <= key => {}
            _ => best = Some((perm, key)),
        }
    }
    Ok(best.expect("at least the identity permutation"))
}

/// The comparison key of the canonical form: the serialized bytes of the
/// lexicographically least transport of the bundle under standard labels.
/// Two same-kind bundles are isomorphic exactly when their keys are equal.
pub fn canonical_key(a: &AlgebraBundle) -> Result<String, Error> {
    Ok(canonical_inner(a)?.1)
}

/// Lexicographically least transport of the bundle over all carrier
/// permutations, compared on the serialized byte layout under standard
/// labels. The original label sequence is kept positionally.
pub fn canonical_form(a: &AlgebraBundle) -> Result<AlgebraBundle, Error> {
    let (perm, _) = canonical_inner(a)?;
    Ok(a.transported(&perm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::Kind;
    use crate::tables::{Carrier, PartialOpTable, UnaryMap};
    use alloc::vec;

    fn z2() -> AlgebraBundle {
        let carrier = Carrier::new(vec!["1".into(), "a".into()]).unwrap();
        let product = PartialOpTable::from_rows(vec![
            vec![Some(0), Some(1)],
            vec![Some(1), Some(0)],
        ])
        .unwrap();
        AlgebraBundle::new(Kind::Constellation, carrier, product)
            .unwrap()
            .with_d(UnaryMap::new(vec![0, 0], 2).unwrap())
    }

    fn two_chain() -> AlgebraBundle {
        let carrier = Carrier::new(vec!["e".into(), "f".into()]).unwrap();
        let product = PartialOpTable::from_rows(vec![
            vec![Some(0), Some(0)],
            vec![None, Some(1)],
        ])
        .unwrap();
        AlgebraBundle::new(Kind::Constellation, carrier, product)
            .unwrap()
            .with_d(UnaryMap::identity(2))
    }

    fn left_zero() -> AlgebraBundle {
        let carrier = Carrier::new(vec!["a".into(), "b".into()]).unwrap();
        let product = PartialOpTable::from_rows(vec![
            vec![Some(0), Some(0)],
            vec![Some(1), Some(1)],
        ])
        .unwrap();
        AlgebraBundle::new(Kind::Constellation, carrier, product)
            .unwrap()
            .with_d(UnaryMap::identity(2))
    }

    #[test]
    fn identity_is_always_an_isomorphism_of_a_structure_with_itself() {
        let b = z2();
        let iso = find_isomorphism(&b, &b).unwrap().unwrap();
        assert_eq!(iso, vec![0, 1]);
    }

    #[test]
    fn distinct_definedness_patterns_are_not_isomorphic() {
        assert_eq!(find_isomorphism(&two_chain(), &left_zero()).unwrap(), None);
    }

    #[test]
    fn relabeled_copy_is_recovered_by_the_inverse_relabeling() {
        let b = two_chain();
        let perm = vec![1, 0];
        let relabeled = b.relabeled(&perm);
        let iso = find_isomorphism(&relabeled, &b).unwrap().unwrap();
        assert_eq!(iso, perm);
    }

    #[test]
    fn canonical_form_is_idempotent_and_label_independent() {
        let b = two_chain();
        let c1 = canonical_form(&b).unwrap();
        let c2 = canonical_form(&c1).unwrap();
        assert_eq!(c1, c2);
        // Two relabelings of the same structure share a canonical key.
        let relabeled = b.relabeled(&[1, 0]);
        assert_eq!(canonical_key(&b).unwrap(), canonical_key(&relabeled).unwrap());
        // Non-isomorphic structures have distinct keys.
        assert_ne!(
            canonical_key(&b).unwrap(),
            canonical_key(&left_zero()).unwrap()
        );
    }

    #[test]
    fn canonical_form_caps_at_order_eight() {
        let n = MAX_CANONICAL_ORDER + 1;
        let b = AlgebraBundle::new(
            Kind::PreConstellation,
            Carrier::standard(n),
            PartialOpTable::empty(n),
        )
        .unwrap();
        assert!(matches!(canonical_key(&b), Err(Error::Resource(_))));
    }

    #[test]
    fn permutation_order_is_lexicographic() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        assert_eq!(ps[0], vec![0, 1, 2]);
        assert_eq!(ps[5], vec![2, 1, 0]);
    }
}
