//! Exhaustive generation of structures of a given kind at small orders, one
//! canonical representative per isomorphism class.
//!
//! Generation backtracks over table cells in row-major order with
//! incremental consistency pruning, rejects prefixes that some relabeling
//! already beats, and keeps exactly the tables that are lexicographically
//! least over all carrier permutations (on the serialized byte order:
//! defined values ascending, undefined greatest). Ordered kinds layer the
//! order relation over each base table afterwards, minimizing over the
//! base's automorphisms.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bundle::{AlgebraBundle, Kind};
use crate::constellation::{Constellation, ConstellationWithRange};
use crate::ordered::OrderedGroupoid;
use crate::pre::PreConstellation;
use crate::report::CheckReport;
use crate::serial::serialize_bundle;
use crate::tables::{BinRelation, Carrier, El, PartialOpTable, UnaryMap};
use crate::Error;

const UNDEF: u8 = 0xFE;
const UNKNOWN: u8 = 0xFF;

/// Structure kinds the enumerator can generate. `DInverseConstellation`
/// is the constellation kind filtered down to unique D-inverses, emitted
/// with the inverse map attached.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EnumKind {
    Semigroup,
    InvolutedSemigroup,
    PreConstellation,
    Constellation,
    ConstellationWithRange,
    DInverseConstellation,
    Category,
    Groupoid,
    OrderedCategory,
    OrderedGroupoid,
}

impl EnumKind {
    pub const ALL: [EnumKind; 10] = [
        EnumKind::Semigroup,
        EnumKind::InvolutedSemigroup,
        EnumKind::PreConstellation,
        EnumKind::Constellation,
        EnumKind::ConstellationWithRange,
        EnumKind::DInverseConstellation,
        EnumKind::Category,
        EnumKind::Groupoid,
        EnumKind::OrderedCategory,
        EnumKind::OrderedGroupoid,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            EnumKind::Semigroup => "semigroup",
            EnumKind::InvolutedSemigroup => "involuted-semigroup",
            EnumKind::PreConstellation => "pre-constellation",
            EnumKind::Constellation => "constellation",
            EnumKind::ConstellationWithRange => "constellation-with-range",
            EnumKind::DInverseConstellation => "d-inverse-constellation",
            EnumKind::Category => "category",
            EnumKind::Groupoid => "groupoid",
            EnumKind::OrderedCategory => "ordered-category",
            EnumKind::OrderedGroupoid => "ordered-groupoid",
        }
    }

    pub fn parse(s: &str) -> Option<EnumKind> {
        EnumKind::ALL.into_iter().find(|k| k.as_str() == s)
    }

    /// Largest carrier this kind is enumerated at.
    pub fn order_cap(&self) -> usize {
        match self {
            EnumKind::Semigroup | EnumKind::InvolutedSemigroup | EnumKind::PreConstellation => 4,
            _ => 5,
        }
    }
}

/// What to generate: kind, order, required named predicates, and output
/// shaping.
#[derive(Clone, Debug)]
pub struct EnumerationTask {
    pub kind: EnumKind,
    pub order: usize,
    pub predicates: Vec<String>,
    pub count_only: bool,
    /// Cap on the number of bundles kept (the count stays exact).
    pub max_emit: Option<usize>,
    /// Try cell values in the reverse order; the emitted set must not
    /// change. A determinism self-check knob.
    pub reversed_value_order: bool,
}

impl EnumerationTask {
    pub fn new(kind: EnumKind, order: usize) -> Self {
        EnumerationTask {
            kind,
            order,
            predicates: Vec::new(),
            count_only: false,
            max_emit: None,
            reversed_value_order: false,
        }
    }
}

pub struct EnumerationOutcome {
    /// Isomorphism classes passing all predicates.
    pub count: usize,
    /// Sorted by serialized bytes; empty when counting only, truncated to
    /// `max_emit` otherwise.
    pub bundles: Vec<AlgebraBundle>,
}

/// Named structure predicates usable as enumeration filters.
pub const PREDICATE_NAMES: [&str; 11] = [
    "normal",
    "d-regular",
    "d-inverse",
    "right-cancellative",
    "with-range",
    "left-cancellative-range",
    "strongly-right-cancellative",
    "inductive",
    "inverse-semigroup",
    "regular-pre",
    "inverse-pre",
];

pub fn run_predicate(name: &str, b: &AlgebraBundle) -> Option<bool> {
    let as_constellation = || Constellation::from_bundle(b).ok();
    let as_ranged = || {
        if b.r.is_some() {
            ConstellationWithRange::from_bundle(b).ok()
        } else {
            as_constellation().and_then(|q| ConstellationWithRange::attach(q).ok())
        }
    };
    Some(match name {
        "normal" => as_constellation().is_some_and(|q| q.is_normal().passed()),
        "d-regular" => as_constellation().is_some_and(|q| q.is_d_regular().passed()),
        "d-inverse" => as_constellation().is_some_and(|q| q.is_d_inverse().0.passed()),
        "right-cancellative" => {
            as_constellation().is_some_and(|q| q.is_right_cancellative().passed())
        }
        "with-range" => as_ranged().is_some(),
        "left-cancellative-range" => as_ranged().is_some_and(|q| q.is_left_cancellative().passed()),
        "strongly-right-cancellative" => {
            as_ranged().is_some_and(|q| q.is_strongly_right_cancellative().passed())
        }
        "inductive" => {
            OrderedGroupoid::from_bundle(b).is_ok_and(|g| g.is_inductive().passed())
        }
        "inverse-semigroup" => crate::repr::is_inverse_semigroup(b)
            .map(|(r, _)| r.passed())
            .unwrap_or(false),
        "regular-pre" => {
            PreConstellation::from_bundle(b).is_ok_and(|p| p.is_regular().passed())
        }
        "inverse-pre" => {
            PreConstellation::from_bundle(b).is_ok_and(|p| p.is_inverse().0.passed())
        }
        _ => return None,
    })
}

#[inline]
fn defined(v: u8) -> bool {
    v < UNDEF
}

/// Definite-violation check localized around the freshly assigned cell
/// (i, j). Conservative: only fires when every referenced cell is decided,
/// so no valid completion is ever pruned.
fn local_ok(c: &[u8], n: usize, k: usize, cat_reverse: bool) -> bool {
    let i = k / n;
    let j = k % n;
    let v = c[k];
    let at = |x: usize, y: usize| c[x * n + y];

    // (i, j) as the inner pair (y, z).
    for x in 0..n {
        let xy = at(x, i);
        if defined(v) {
            let xw = at(x, v as usize);
            if defined(xy) && xw == UNDEF {
                return false;
            }
            if defined(xw) {
                if xy == UNDEF {
                    return false;
                }
                if defined(xy) {
                    let uz = at(xy as usize, j);
                    if uz == UNDEF || (defined(uz) && uz != xw) {
                        return false;
                    }
                }
            }
            if cat_reverse && defined(xy) {
                let uz = at(xy as usize, j);
                if defined(uz) && xw == UNDEF {
                    return false;
                }
            }
        } else if v == UNDEF && cat_reverse && defined(xy) {
            let uz = at(xy as usize, j);
            if defined(uz) {
                return false;
            }
        }
    }

    // (i, j) as the left pair (x, y).
    for z in 0..n {
        let yz = at(j, z);
        if defined(yz) {
            let xw = at(i, yz as usize);
            if defined(v) && xw == UNDEF {
                return false;
            }
            if defined(xw) {
                if v == UNDEF {
                    return false;
                }
                if defined(v) {
                    let uz = at(v as usize, z);
                    if uz == UNDEF || (defined(uz) && uz != xw) {
                        return false;
                    }
                }
            }
            if cat_reverse && defined(v) {
                let uz = at(v as usize, z);
                if defined(uz) && xw == UNDEF {
                    return false;
                }
            }
        } else if yz == UNDEF && cat_reverse && defined(v) {
            let uz = at(v as usize, z);
            if defined(uz) {
                return false;
            }
        }
    }

    // (i, j) as the outer composite x*(y*z) with x = i, y*z = j.
    for y in 0..n {
        for z in 0..n {
            if at(y, z) != j as u8 {
                continue;
            }
            let xy = at(i, y);
            if defined(xy) && v == UNDEF {
                return false;
            }
            if defined(v) {
                if xy == UNDEF {
                    return false;
                }
                if defined(xy) {
                    let uz = at(xy as usize, z);
                    if uz == UNDEF || (defined(uz) && uz != v) {
                        return false;
                    }
                }
            }
            if cat_reverse && defined(xy) {
                let uz = at(xy as usize, z);
                if defined(uz) && v == UNDEF {
                    return false;
                }
            }
        }
    }

    // (i, j) as the composite (x*y)*z with x*y = i, z = j.
    for x in 0..n {
        for y in 0..n {
            if at(x, y) != i as u8 {
                continue;
            }
            let yz = at(y, j);
            if defined(yz) {
                let xw = at(x, yz as usize);
                if defined(xw) {
                    if v == UNDEF {
                        return false;
                    }
                    if defined(v) && v != xw {
                        return false;
                    }
                }
            }
            if cat_reverse && defined(v) {
                if yz == UNDEF {
                    return false;
                }
                if defined(yz) && at(x, yz as usize) == UNDEF {
                    return false;
                }
            }
        }
    }

    true
}

/// Authoritative complete-table check for the composition laws (plus the
/// reverse direction for category kinds).
fn full_ok(c: &[u8], n: usize, cat_reverse: bool) -> bool {
    let at = |x: usize, y: usize| c[x * n + y];
    for x in 0..n {
        for y in 0..n {
            let xy = at(x, y);
            for z in 0..n {
                let yz = at(y, z);
                if yz != UNDEF {
                    let xw = at(x, yz as usize);
                    if xw != UNDEF {
                        if xy == UNDEF || at(xy as usize, z) != xw {
                            return false;
                        }
                    } else if xy != UNDEF {
                        return false;
                    }
                }
                if cat_reverse && xy != UNDEF {
                    let uz = at(xy as usize, z);
                    if uz != UNDEF && (yz == UNDEF || at(x, yz as usize) == UNDEF) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

struct Perms {
    perms: Vec<Vec<usize>>,
    inverses: Vec<Vec<usize>>,
}

fn perms_with_inverses(n: usize) -> Perms {
    let perms = crate::iso::permutations(n);
    let inverses = perms
        .iter()
        .map(|p| {
            let mut inv = alloc::vec![0usize; n];
            for (i, &v) in p.iter().enumerate() {
                inv[v] = i;
            }
            inv
        })
        .collect();
    Perms { perms, inverses }
}

#[inline]
fn rank(v: u8, n: usize) -> usize {
    if v == UNDEF {
        n
    } else {
        v as usize
    }
}

/// Can some permutation already beat the decided prefix? Sound pruning:
/// only returns true when a strictly smaller transported prefix is certain.
fn prefix_beaten(c: &[u8], n: usize, decided: usize, perms: &Perms) -> bool {
    'next: for (perm, inv) in perms.perms.iter().zip(&perms.inverses).skip(1) {
        for p in 0..decided {
            let (i, j) = (p / n, p % n);
            let src = c[inv[i] * n + inv[j]];
            if src == UNKNOWN {
                continue 'next;
            }
            let tv = if src == UNDEF { n } else { perm[src as usize] };
            let cv = rank(c[p], n);
            if tv < cv {
                return true;
            }
            if tv > cv {
                continue 'next;
            }
        }
    }
    false
}

/// Is the complete table lexicographically least over all permutations?
/// On success also returns the automorphism group of the table.
fn canonical_with_auts(c: &[u8], n: usize, perms: &Perms) -> Option<Vec<Vec<usize>>> {
    let mut auts = alloc::vec![perms.perms[0].clone()];
    'next: for (perm, inv) in perms.perms.iter().zip(&perms.inverses).skip(1) {
        for p in 0..n * n {
            let (i, j) = (p / n, p % n);
            let src = c[inv[i] * n + inv[j]];
            let tv = if src == UNDEF { n } else { perm[src as usize] };
            let cv = rank(c[p], n);
            if tv < cv {
                return None;
            }
            if tv > cv {
                continue 'next;
            }
        }
        auts.push(perm.clone());
    }
    Some(auts)
}

/// Backtracking search over all tables of the given mode, calling `leaf`
/// on every complete table that passes the full composition check and is
/// canonical. The leaf also receives the table's automorphisms.
fn search_tables(
    n: usize,
    total: bool,
    cat_reverse: bool,
    reversed: bool,
    leaf: &mut dyn FnMut(&[u8], &[Vec<usize>]),
) {
    if n == 0 {
        leaf(&[], &[Vec::new()]);
        return;
    }
    let perms = perms_with_inverses(n);
    let mut values: Vec<u8> = (0..n as u8).collect();
    if !total {
        values.push(UNDEF);
    }
    if reversed {
        values.reverse();
    }
    let mut cells = alloc::vec![UNKNOWN; n * n];

    fn dfs(
        cells: &mut [u8],
        k: usize,
        n: usize,
        values: &[u8],
        cat_reverse: bool,
        perms: &Perms,
        leaf: &mut dyn FnMut(&[u8], &[Vec<usize>]),
    ) {
        if k == n * n {
            if full_ok(cells, n, cat_reverse) {
                if let Some(auts) = canonical_with_auts(cells, n, perms) {
                    leaf(cells, &auts);
                }
            }
            return;
        }
        for &v in values {
            cells[k] = v;
            if local_ok(cells, n, k, cat_reverse) {
                // Prune by permutation dominance at each row boundary.
                if k % n != n - 1 || !prefix_beaten(cells, n, k + 1, perms) {
                    dfs(cells, k + 1, n, values, cat_reverse, perms, leaf);
                }
            }
        }
        cells[k] = UNKNOWN;
    }

    dfs(&mut cells, 0, n, &values, cat_reverse, &perms, leaf);
}

fn table_from_cells(c: &[u8], n: usize) -> PartialOpTable {
    let mut t = PartialOpTable::empty(n);
    for x in 0..n {
        for y in 0..n {
            let v = c[x * n + y];
            t.set(x, y, (v != UNDEF).then_some(v as usize));
        }
    }
    t
}

/// Projection-and-domain derivation on the raw cells: every element needs
/// exactly one right identity fixing it.
fn derive_d_cells(c: &[u8], n: usize) -> Option<Vec<usize>> {
    let at = |x: usize, y: usize| c[x * n + y];
    let ri: Vec<usize> = (0..n)
        .filter(|&e| (0..n).all(|x| at(x, e) == UNDEF || at(x, e) == x as u8))
        .collect();
    let mut d = Vec::with_capacity(n);
    for x in 0..n {
        let mut found = None;
        for &e in &ri {
            if at(e, x) == x as u8 {
                if found.is_some() {
                    return None;
                }
                found = Some(e);
            }
        }
        d.push(found?);
    }
    Some(d)
}

fn derive_category_maps(c: &[u8], n: usize) -> Option<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let at = |x: usize, y: usize| c[x * n + y];
    let ids: Vec<usize> = (0..n)
        .filter(|&e| {
            (0..n).all(|x| {
                (at(x, e) == UNDEF || at(x, e) == x as u8)
                    && (at(e, x) == UNDEF || at(e, x) == x as u8)
            })
        })
        .collect();
    let mut d = Vec::with_capacity(n);
    let mut r = Vec::with_capacity(n);
    for x in 0..n {
        let mut dom = None;
        let mut cod = None;
        for &e in &ids {
            if at(e, x) != UNDEF {
                if dom.is_some() {
                    return None;
                }
                dom = Some(e);
            }
            if at(x, e) != UNDEF {
                if cod.is_some() {
                    return None;
                }
                cod = Some(e);
            }
        }
        d.push(dom?);
        r.push(cod?);
    }
    // The hom law: x∘y defined exactly when R(x) = D(y).
    for x in 0..n {
        for y in 0..n {
            if (at(x, y) != UNDEF) != (r[x] == d[y]) {
                return None;
            }
        }
    }
    Some((d, r, ids))
}

fn groupoid_inverse(c: &[u8], n: usize, d: &[usize], r: &[usize]) -> Option<Vec<usize>> {
    let at = |x: usize, y: usize| c[x * n + y];
    (0..n)
        .map(|s| {
            (0..n).find(|&t| at(s, t) == d[s] as u8 && at(t, s) == r[s] as u8)
        })
        .collect()
}

/// Relation represented as per-row bitmasks for the order layering.
type RelRows = Vec<u32>;

fn rel_close(rows: &mut RelRows) {
    let n = rows.len();
    loop {
        let mut changed = false;
        for a in 0..n {
            let mut acc = rows[a];
            let mut bits = rows[a];
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                acc |= rows[b];
            }
            if acc != rows[a] {
                rows[a] = acc;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}

/// All reflexive-transitive antisymmetric relations over the base that
/// survive the quick order-law filters, as sorted strict-pair lists.
fn candidate_orders(
    n: usize,
    d: &[usize],
    r: &[usize],
    inv: Option<&[usize]>,
) -> Vec<Vec<(El, El)>> {
    // Pairs that can never be related: distinct parallel arrows.
    let blocked = |x: usize, y: usize| d[x] == d[y] && r[x] == r[y];
    let candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && !blocked(x, y))
        .collect();
    let p = candidates.len();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    debug_assert!(p <= 20, "order layering assumes small arrow counts");
    'mask: for mask in 0u32..(1 << p) {
        let mut rows: RelRows = (0..n).map(|i| 1u32 << i).collect();
        for (b, &(x, y)) in candidates.iter().enumerate() {
            if mask & (1 << b) != 0 {
                rows[x] |= 1 << y;
            }
        }
        rel_close(&mut rows);
        for x in 0..n {
            for y in 0..n {
                if x != y && rows[x] & (1 << y) != 0 {
                    // Antisymmetry and the hom-set/OG1 quick filters.
                    if rows[y] & (1 << x) != 0 || blocked(x, y) {
                        continue 'mask;
                    }
                    if let Some(inv) = inv {
                        if rows[inv[x]] & (1 << inv[y]) == 0 {
                            continue 'mask;
                        }
                    }
                }
            }
        }
        let mut pairs: Vec<(El, El)> = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && rows[x] & (1 << y) != 0 {
                    pairs.push((x, y));
                }
            }
        }
        if seen.insert(pairs.clone()) {
            out.push(pairs);
        }
    }
    out
}

/// Is this order the least among its images under the base automorphisms?
fn order_canonical(pairs: &[(El, El)], auts: &[Vec<usize>]) -> bool {
    for aut in auts.iter().skip(1) {
        let mut mapped: Vec<(El, El)> = pairs.iter().map(|&(a, b)| (aut[a], aut[b])).collect();
        mapped.sort_unstable();
        if mapped.as_slice() < pairs {
            return false;
        }
    }
    true
}

fn involution_candidates(c: &[u8], n: usize) -> Vec<Vec<usize>> {
    let at = |x: usize, y: usize| c[x * n + y];
    crate::iso::permutations(n)
        .into_iter()
        .filter(|s| {
            (0..n).all(|x| s[s[x]] == x)
                && (0..n).all(|x| {
                    (0..n).all(|y| s[at(x, y) as usize] == at(s[y], s[x]) as u8 as usize)
                })
        })
        .collect()
}

fn star_canonical(star: &[usize], auts: &[Vec<usize>]) -> bool {
    for aut in auts.iter().skip(1) {
        let mut inv_aut = alloc::vec![0usize; star.len()];
        for (i, &v) in aut.iter().enumerate() {
            inv_aut[v] = i;
        }
        let mapped: Vec<usize> = (0..star.len()).map(|x| aut[star[inv_aut[x]]]).collect();
        if mapped.as_slice() < star {
            return false;
        }
    }
    true
}

pub fn enumerate(task: &EnumerationTask) -> Result<EnumerationOutcome, Error> {
    let n = task.order;
    let cap = task.kind.order_cap();
    if n > cap {
        return Err(Error::Resource(format!(
            "enumeration of {} is capped at order {cap}; got {n}",
            task.kind.as_str()
        )));
    }
    for p in &task.predicates {
        if run_predicate(p, &empty_probe()).is_none() {
            return Err(Error::Input(format!(
                "unknown predicate {p:?}; known: {}",
                PREDICATE_NAMES.join(", ")
            )));
        }
    }

    let carrier = Carrier::standard(n);
    let mut bundles: Vec<AlgebraBundle> = Vec::new();

    let total = matches!(
        task.kind,
        EnumKind::Semigroup | EnumKind::InvolutedSemigroup
    );
    let cat_reverse = matches!(
        task.kind,
        EnumKind::Category | EnumKind::Groupoid | EnumKind::OrderedCategory | EnumKind::OrderedGroupoid
    );

    {
        let kind = task.kind;
        let carrier = &carrier;
        let sink = &mut bundles;
        let mut leaf = |cells: &[u8], auts: &[Vec<usize>]| {
            emit(kind, carrier, cells, auts, sink);
        };
        search_tables(n, total, cat_reverse, task.reversed_value_order, &mut leaf);
    }

    // Predicate filters, then deterministic emission order.
    let mut kept = Vec::new();
    'bundle: for b in bundles {
        debug_assert!(
            enumerated_bundle_valid(task.kind, &b),
            "generator emitted an invalid {} bundle",
            task.kind.as_str()
        );
        for p in &task.predicates {
            if !run_predicate(p, &b).expect("validated above") {
                continue 'bundle;
            }
        }
        kept.push(b);
    }
    kept.sort_by(|a, b| serialize_bundle(a).cmp(&serialize_bundle(b)));
    let count = kept.len();
    if task.count_only {
        kept.clear();
    } else if let Some(max) = task.max_emit {
        kept.truncate(max);
    }
    Ok(EnumerationOutcome {
        count,
        bundles: kept,
    })
}

fn empty_probe() -> AlgebraBundle {
    AlgebraBundle::new(
        Kind::Constellation,
        Carrier::standard(0),
        PartialOpTable::empty(0),
    )
    .expect("empty bundle")
}

fn emit(
    kind: EnumKind,
    carrier: &Carrier,
    cells: &[u8],
    auts: &[Vec<usize>],
    sink: &mut Vec<AlgebraBundle>,
) {
    let n = carrier.len();
    let table = || table_from_cells(cells, n);
    match kind {
        EnumKind::Semigroup => {
            sink.push(
                AlgebraBundle::new(Kind::Semigroup, carrier.clone(), table())
                    .expect("dimensions agree"),
            );
        }
        EnumKind::InvolutedSemigroup => {
            for star in involution_candidates(cells, n) {
                if !star_canonical(&star, auts) {
                    continue;
                }
                sink.push(
                    AlgebraBundle::new(Kind::InvolutedSemigroup, carrier.clone(), table())
                        .expect("dimensions agree")
                        .with_star(UnaryMap::new(star, n).expect("in range")),
                );
            }
        }
        EnumKind::PreConstellation => {
            sink.push(
                AlgebraBundle::new(Kind::PreConstellation, carrier.clone(), table())
                    .expect("dimensions agree"),
            );
        }
        EnumKind::Constellation | EnumKind::ConstellationWithRange | EnumKind::DInverseConstellation => {
            let Some(d) = derive_d_cells(cells, n) else {
                return;
            };
            let bundle = AlgebraBundle::new(Kind::Constellation, carrier.clone(), table())
                .expect("dimensions agree")
                .with_d(UnaryMap::new(d, n).expect("in range"));
            match kind {
                EnumKind::Constellation => sink.push(bundle),
                EnumKind::ConstellationWithRange => {
                    let q = Constellation::from_bundle(&bundle).expect("generated valid");
                    if let Ok(ranged) = ConstellationWithRange::attach(q) {
                        sink.push(ranged.to_bundle());
                    }
                }
                EnumKind::DInverseConstellation => {
                    let q = Constellation::from_bundle(&bundle).expect("generated valid");
                    let (report, map) = q.is_d_inverse();
                    if report.passed() {
                        sink.push(bundle.with_inverse(map.expect("pass yields the map")));
                    }
                }
                _ => unreachable!(),
            }
        }
        EnumKind::Category | EnumKind::Groupoid => {
            let Some((d, r, _)) = derive_category_maps(cells, n) else {
                return;
            };
            let bundle = AlgebraBundle::new(Kind::Category, carrier.clone(), table())
                .expect("dimensions agree")
                .with_d(UnaryMap::new(d.clone(), n).expect("in range"))
                .with_r(UnaryMap::new(r.clone(), n).expect("in range"));
            match kind {
                EnumKind::Category => sink.push(bundle),
                EnumKind::Groupoid => {
                    if let Some(inv) = groupoid_inverse(cells, n, &d, &r) {
                        let mut b = bundle.with_inverse(UnaryMap::new(inv, n).expect("in range"));
                        b.kind = Kind::Groupoid;
                        sink.push(b);
                    }
                }
                _ => unreachable!(),
            }
        }
        EnumKind::OrderedCategory | EnumKind::OrderedGroupoid => {
            let Some((d, r, _)) = derive_category_maps(cells, n) else {
                return;
            };
            let inv = if kind == EnumKind::OrderedGroupoid {
                match groupoid_inverse(cells, n, &d, &r) {
                    Some(inv) => Some(inv),
                    None => return,
                }
            } else {
                None
            };
            for pairs in candidate_orders(n, &d, &r, inv.as_deref()) {
                if !order_canonical(&pairs, auts) {
                    continue;
                }
                let order = BinRelation::from_pairs_closed(n, pairs).expect("in range");
                let mut b = AlgebraBundle::new(Kind::OrderedCategory, carrier.clone(), table())
                    .expect("dimensions agree")
                    .with_d(UnaryMap::new(d.clone(), n).expect("in range"))
                    .with_r(UnaryMap::new(r.clone(), n).expect("in range"))
                    .with_order(order);
                if let Some(inv) = &inv {
                    b = b.with_inverse(UnaryMap::new(inv.clone(), n).expect("in range"));
                    b.kind = Kind::OrderedGroupoid;
                }
                // The quick filters are necessary, not sufficient; the full
                // axiom checks arbitrate.
                if crate::convert::check_bundle(&b, None).passed() {
                    sink.push(b);
                }
            }
        }
    }
}

/// Emitted bundles must pass their own kind checks; used as a generator
/// self-check in test builds.
fn enumerated_bundle_valid(kind: EnumKind, b: &AlgebraBundle) -> bool {
    let base = crate::convert::check_bundle(b, None).passed();
    match kind {
        EnumKind::DInverseConstellation => {
            base && Constellation::from_bundle(b)
                .map(|q| q.is_d_inverse().0.passed())
                .unwrap_or(false)
        }
        _ => base,
    }
}

/// Outcome of comparing the two independent enumeration routes for the
/// groupoid correspondence at one order.
pub struct DualCount {
    pub constellation_count: usize,
    pub groupoid_count: usize,
    pub report: CheckReport,
}

/// Counts D-inverse constellations and ordered groupoids independently and
/// matches them one-to-one through the conversion, comparing canonical
/// forms in both directions.
pub fn dual_count_check(n: usize) -> Result<DualCount, Error> {
    let constellations = enumerate(&EnumerationTask::new(EnumKind::DInverseConstellation, n))?;
    let groupoids = enumerate(&EnumerationTask::new(EnumKind::OrderedGroupoid, n))?;

    let probe = Carrier::standard(0);
    let mut rep = crate::report::Reporter::new(&probe);
    if constellations.count != groupoids.count {
        rep.violation(
            "dual-count",
            &[],
            format!(
                "{} D-inverse constellations vs {} ordered groupoids",
                constellations.count, groupoids.count
            ),
        );
    }

    let groupoid_keys: BTreeSet<String> = groupoids
        .bundles
        .iter()
        .map(serialize_bundle)
        .collect();
    let mut image_keys = BTreeSet::new();
    for b in &constellations.bundles {
        let q = Constellation::from_bundle(b)
            .map_err(|_| Error::Input("enumerated constellation failed revalidation".into()))?;
        let og = crate::correspond::to_ordered_groupoid(&q)?;
        let key = crate::iso::canonical_key(&og.to_bundle())?;
        if !groupoid_keys.contains(&key) {
            rep.violation(
                "dual-count",
                &[],
                "conversion image missing from the groupoid census",
            );
        }
        if !image_keys.insert(key) {
            rep.violation(
                "dual-count",
                &[],
                "two non-isomorphic constellations map to one groupoid",
            );
        }
    }
    if image_keys.len() != groupoid_keys.len() && constellations.count == groupoids.count {
        rep.violation("dual-count", &[], "conversion images do not cover the census");
    }

    // The reverse route: every enumerated groupoid converts back to an
    // enumerated constellation.
    let constellation_keys: BTreeSet<String> = constellations
        .bundles
        .iter()
        .map(serialize_bundle)
        .collect();
    for g in &groupoids.bundles {
        let og = OrderedGroupoid::from_bundle(g)
            .map_err(|_| Error::Input("enumerated groupoid failed revalidation".into()))?;
        let (ranged, inverse) = crate::correspond::from_ordered_groupoid(&og);
        let mut back = ranged.base().to_bundle().with_inverse(inverse);
        back.kind = Kind::Constellation;
        let key = crate::iso::canonical_key(&back)?;
        if !constellation_keys.contains(&key) {
            rep.violation(
                "dual-count",
                &[],
                "reverse conversion image missing from the constellation census",
            );
        }
    }

    Ok(DualCount {
        constellation_count: constellations.count,
        groupoid_count: groupoids.count,
        report: rep.finish(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(kind: EnumKind, n: usize) -> usize {
        enumerate(&EnumerationTask::new(kind, n)).unwrap().count
    }

    /// Independent oracle: filter and deduplicate every raw table.
    fn brute_force_count(kind: EnumKind, n: usize) -> usize {
        let total = matches!(kind, EnumKind::Semigroup);
        let values: Vec<u8> = if total {
            (0..n as u8).collect()
        } else {
            (0..n as u8).chain([UNDEF]).collect()
        };
        let cells_count = n * n;
        let mut keys = BTreeSet::new();
        let mut odometer = alloc::vec![0usize; cells_count];
        loop {
            let cells: Vec<u8> = odometer.iter().map(|&i| values[i]).collect();
            let cat_reverse = matches!(kind, EnumKind::Category | EnumKind::Groupoid);
            let mut acceptable = full_ok(&cells, n, cat_reverse);
            if acceptable {
                acceptable = match kind {
                    EnumKind::Semigroup | EnumKind::PreConstellation => true,
                    EnumKind::Constellation => derive_d_cells(&cells, n).is_some(),
                    EnumKind::Category => derive_category_maps(&cells, n).is_some(),
                    _ => unimplemented!("oracle covers the table kinds"),
                };
            }
            if acceptable {
                // Deduplicate by the least transported image.
                let perms = perms_with_inverses(n);
                let mut best: Option<Vec<u8>> = None;
                for (perm, _) in perms.perms.iter().zip(&perms.inverses) {
                    let mut img = alloc::vec![0u8; cells_count];
                    for x in 0..n {
                        for y in 0..n {
                            let v = cells[x * n + y];
                            img[perm[x] * n + perm[y]] =
                                if v == UNDEF { UNDEF } else { perm[v as usize] as u8 };
                        }
                    }
                    let ranked: Vec<usize> = img.iter().map(|&v| rank(v, n)).collect();
                    let keyed = (ranked, img);
                    best = match best {
                        None => Some(keyed.1),
                        Some(b) => {
                            let b_ranked: Vec<usize> = b.iter().map(|&v| rank(v, n)).collect();
                            if keyed.0 < b_ranked {
                                Some(keyed.1)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
                keys.insert(best.unwrap());
            }
            // Advance.
            let mut i = cells_count;
            loop {
                if i == 0 {
                    return keys.len();
                }
                i -= 1;
                odometer[i] += 1;
                if odometer[i] < values.len() {
                    break;
                }
                odometer[i] = 0;
            }
        }
    }

    #[test]
    fn one_element_censuses() {
        assert_eq!(count(EnumKind::Constellation, 1), 1);
        assert_eq!(count(EnumKind::DInverseConstellation, 1), 1);
        assert_eq!(count(EnumKind::OrderedGroupoid, 1), 1);
        assert_eq!(count(EnumKind::Semigroup, 1), 1);
    }

    #[test]
    fn backtracker_agrees_with_brute_force_at_order_two() {
        for kind in [
            EnumKind::Semigroup,
            EnumKind::PreConstellation,
            EnumKind::Constellation,
            EnumKind::Category,
        ] {
            assert_eq!(
                count(kind, 2),
                brute_force_count(kind, 2),
                "kind {}",
                kind.as_str()
            );
        }
    }

    #[test]
    fn backtracker_agrees_with_brute_force_at_order_three() {
        for kind in [EnumKind::PreConstellation, EnumKind::Constellation] {
            assert_eq!(
                count(kind, 3),
                brute_force_count(kind, 3),
                "kind {}",
                kind.as_str()
            );
        }
    }

    #[test]
    fn reversed_value_order_changes_nothing() {
        for kind in [EnumKind::Constellation, EnumKind::OrderedGroupoid] {
            for n in 1..=3 {
                let forward = enumerate(&EnumerationTask::new(kind, n)).unwrap();
                let mut task = EnumerationTask::new(kind, n);
                task.reversed_value_order = true;
                let backward = enumerate(&task).unwrap();
                let keys = |o: &EnumerationOutcome| {
                    o.bundles.iter().map(serialize_bundle).collect::<Vec<_>>()
                };
                assert_eq!(keys(&forward), keys(&backward));
            }
        }
    }

    #[test]
    fn emitted_bundles_are_pairwise_non_isomorphic() {
        let out = enumerate(&EnumerationTask::new(EnumKind::Constellation, 3)).unwrap();
        for (i, a) in out.bundles.iter().enumerate() {
            for b in &out.bundles[i + 1..] {
                assert_eq!(crate::iso::find_isomorphism(a, b).unwrap(), None);
            }
        }
    }

    #[test]
    fn order_cap_is_enforced() {
        let task = EnumerationTask::new(EnumKind::Semigroup, 5);
        assert!(matches!(enumerate(&task), Err(Error::Resource(_))));
    }

    #[test]
    fn unknown_predicates_are_rejected() {
        let mut task = EnumerationTask::new(EnumKind::Constellation, 2);
        task.predicates.push("no-such-check".into());
        assert!(matches!(enumerate(&task), Err(Error::Input(_))));
    }

    #[test]
    fn dual_counts_match_at_tiny_orders() {
        for n in 1..=2 {
            let out = dual_count_check(n).unwrap();
            assert!(out.report.passed(), "order {n}");
            assert_eq!(out.constellation_count, out.groupoid_count);
        }
        // Hand count at order two: the group of order two, the two-chain,
        // and the two-element discrete poset.
        assert_eq!(dual_count_check(2).unwrap().constellation_count, 3);
    }
}
