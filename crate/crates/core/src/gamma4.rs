//! Combines every bound producer, plus a short list of hand-checked facts
//! from the literature, into one `γ₄` interval with provenance.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::knot::TorusKnot;
use crate::obstructions::{
    band_move_upper, batson_lower, linking_form_obstruction, mobius_family, pinch_reduce,
    pinch_theorem_interval, sigma_arf_obstructed, theta, upsilon_sigma_lower, ObstructionStatus,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactKind {
    Exact,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CuratedFact {
    pub knot: TorusKnot,
    pub kind: FactKind,
    pub value: i64,
    pub citation: &'static str,
}

fn knot(p: i64, q: i64) -> TorusKnot {
    TorusKnot::new(p, q).expect("curated knots are valid")
}

pub fn curated_facts() -> Vec<CuratedFact> {
    vec![
        CuratedFact {
            knot: knot(6, 5),
            kind: FactKind::Exact,
            value: 2,
            citation: "band move to Mobius-band knot T(3,4) + sigma/Arf lower bound",
        },
        CuratedFact {
            knot: knot(6, 17),
            kind: FactKind::Exact,
            value: 2,
            citation: "band move to a Mobius-band T(4,q) + sigma/Arf lower bound",
        },
        CuratedFact {
            knot: knot(6, 13),
            kind: FactKind::Upper,
            value: 2,
            citation: "band move to T(4,9), which bounds a Mobius band",
        },
        CuratedFact {
            knot: knot(4, 9),
            kind: FactKind::Exact,
            value: 1,
            citation: "Lobb: T(4,9) bounds a Mobius band",
        },
    ]
}

pub fn curated_fact(k: &TorusKnot) -> Option<CuratedFact> {
    curated_facts().into_iter().find(|f| f.knot == *k)
}

/// Recorded single non-oriented band moves between torus knots, beyond the
/// pinch moves `T(p, kp ± 1) → T(p-2, k(p-2) ± 1)`.
pub fn curated_band_moves() -> Vec<(TorusKnot, TorusKnot, &'static str)> {
    vec![
        (knot(6, 13), knot(4, 9), "band move T(6,13) -> T(4,9)"),
        (knot(6, 5), knot(3, 4), "band move T(6,5) -> T(3,4)"),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub bound: &'static str,
    pub role: Role,
    pub value: i64,
    pub citation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub knot: TorusKnot,
    pub lower: i64,
    pub upper: Option<i64>,
    pub exact: bool,
    pub provenance: Vec<Provenance>,
}

impl BoundResult {
    fn from_provenance(knot: TorusKnot, provenance: Vec<Provenance>) -> Self {
        let of = |role| {
            provenance
                .iter()
                .filter(move |e| e.role == role)
                .map(|e| e.value)
        };
        let lower = of(Role::Lower).max().unwrap_or(0).max(0);
        let upper = of(Role::Upper).min();
        BoundResult {
            knot,
            lower,
            upper,
            exact: upper == Some(lower),
            provenance,
        }
    }

    pub fn contains(&self, g: i64) -> bool {
        self.lower <= g && self.upper.is_none_or(|u| g <= u)
    }
}

fn entry(bound: &'static str, role: Role, value: i64, citation: impl Into<String>) -> Provenance {
    Provenance {
        bound,
        role,
        value,
        citation: citation.into(),
    }
}

/// The `γ₄` interval for `k`: the largest lower bound and the smallest upper
/// bound among all producers. A missing upper bound stays missing.
pub fn gamma4_bounds(k: &TorusKnot) -> BoundResult {
    use Role::*;

    if k.is_unknot() {
        return BoundResult::from_provenance(
            *k,
            vec![
                entry("unknot", Lower, 0, "unknot bounds a disk"),
                entry("unknot", Upper, 0, "unknot bounds a disk"),
            ],
        );
    }

    let mut prov = vec![entry("nontrivial", Lower, 1, "torus knots are not slice")];
    if sigma_arf_obstructed(k) {
        prov.push(entry(
            "sigma+4arf",
            Lower,
            2,
            "Yasuhara: sigma + 4 Arf = 4 mod 8",
        ));
    }
    prov.push(entry(
        "upsilon-sigma",
        Lower,
        upsilon_sigma_lower(k),
        "OSS: |upsilon + sigma/2|",
    ));
    prov.push(entry(
        "batson",
        Lower,
        batson_lower(k),
        "Batson: sigma/2 - d(S^3_-1)",
    ));
    if let Some((lo, hi)) = pinch_theorem_interval(k) {
        prov.push(entry(
            "pinch-theorem",
            Lower,
            lo,
            "pinch theorem: theta - 1 <= g4",
        ));
        prov.push(entry(
            "pinch-theorem",
            Upper,
            hi,
            "pinch theorem: g4 <= theta",
        ));
    }
    let linking = linking_form_obstruction(k);
    if linking.status == ObstructionStatus::Obstructed {
        prov.push(entry(
            "linking-form",
            Lower,
            2,
            "Gilmer-Livingston linking form obstruction",
        ));
    }

    if mobius_family(k) {
        prov.push(entry(
            "mobius-family",
            Upper,
            1,
            "Jabuka-Van Cott: T(mk+-2, m) bounds a Mobius band",
        ));
    }
    if let Ok(t) = theta(k) {
        prov.push(entry("pinch-count", Upper, t, "pinch moves to the unknot"));
    }
    if let Some(f) = curated_fact(k) {
        if f.kind == FactKind::Exact {
            prov.push(entry("curated", Lower, f.value, f.citation));
        }
        prov.push(entry("curated", Upper, f.value, f.citation));
    }

    let mut moves: Vec<(TorusKnot, String)> = Vec::new();
    if let Ok(step) = pinch_reduce(k) {
        moves.push((step.to, format!("pinch move {} -> {}", k, step.to)));
    }
    for (from, to, what) in curated_band_moves() {
        if from == *k && moves.iter().all(|(t, _)| *t != to) {
            moves.push((to, what.to_string()));
        }
    }
    for (target, what) in moves {
        let b = gamma4_bounds(&target);
        if b.exact {
            let v = band_move_upper(k, &target, b.lower);
            prov.push(entry(
                "band-move",
                Upper,
                v,
                format!("Jabuka-Kelly: {what}, g4({target}) = {}", b.lower),
            ));
        }
    }

    BoundResult::from_provenance(*k, prov)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifiedRow {
    pub q: i64,
    pub residue_2p: i64,
    /// `q mod 5`, reported for `p = 6`.
    pub residue_5: Option<i64>,
    pub bounds: BoundResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub p: i64,
    pub rows: Vec<ClassifiedRow>,
    pub skipped: Vec<i64>,
}

/// Bounds for every `T(p,q)` with `q_min <= q <= q_max`; `q` sharing a factor
/// with `p` is listed in `skipped`.
pub fn classify_range(p: i64, q_min: i64, q_max: i64) -> Result<Classification> {
    if p < 2 {
        return Err(Error::Precondition("classify_range needs p >= 2"));
    }
    if q_min < 1 || q_min > q_max {
        return Err(Error::Precondition(
            "classify_range needs 1 <= q_min <= q_max",
        ));
    }
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for q in q_min..=q_max {
        match TorusKnot::new(p, q) {
            Ok(k) => rows.push(ClassifiedRow {
                q,
                residue_2p: q % (2 * p),
                residue_5: (p == 6).then_some(q % 5),
                bounds: gamma4_bounds(&k),
            }),
            Err(_) => skipped.push(q),
        }
    }
    Ok(Classification { p, rows, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::make_knot;

    fn bounds(p: i64, q: i64) -> (i64, Option<i64>) {
        let b = gamma4_bounds(&make_knot(p, q).unwrap());
        (b.lower, b.upper)
    }

    #[test]
    fn curated_lookup() {
        assert_eq!(curated_facts().len(), 4);
        let f = curated_fact(&make_knot(6, 5).unwrap()).unwrap();
        assert_eq!((f.kind, f.value), (FactKind::Exact, 2));
        let f = curated_fact(&make_knot(9, 4).unwrap()).unwrap();
        assert_eq!((f.kind, f.value), (FactKind::Exact, 1));
        assert!(curated_fact(&make_knot(5, 7).unwrap()).is_none());
    }

    #[test]
    fn bound_examples() {
        assert_eq!(bounds(5, 7), (1, Some(1)));
        assert_eq!(bounds(5, 6), (2, Some(2)));
        assert_eq!(bounds(5, 11), (1, Some(2)));
        assert_eq!(bounds(6, 7), (2, Some(3)));
        assert_eq!(bounds(6, 25), (2, Some(3)));
        assert_eq!(bounds(6, 13), (1, Some(2)));
        assert_eq!(bounds(2, 3), (1, Some(1)));
        assert_eq!(bounds(1, 5), (0, Some(0)));
        assert!(gamma4_bounds(&make_knot(1, 5).unwrap()).exact);
    }

    #[test]
    fn unknown_upper_stays_unknown() {
        // T(7,10): no pinch form, no Möbius family, no curated fact
        let b = gamma4_bounds(&make_knot(7, 10).unwrap());
        assert_eq!(b.upper, None);
        assert!(!b.exact);
    }

    #[test]
    fn band_move_provenance_for_six_thirteen() {
        let b = gamma4_bounds(&make_knot(6, 13).unwrap());
        assert!(b
            .provenance
            .iter()
            .any(|e| e.bound == "band-move" && e.value == 2));
        assert!(b
            .provenance
            .iter()
            .any(|e| e.bound == "curated" && e.value == 2));
    }

    #[test]
    fn batson_kept_unclamped() {
        let b = gamma4_bounds(&make_knot(6, 19).unwrap());
        assert!(b
            .provenance
            .iter()
            .any(|e| e.bound == "batson" && e.value == -3));
        assert_eq!(b.lower, 2);
    }

    #[test]
    fn classify_small() {
        let c = classify_range(2, 3, 3).unwrap();
        assert_eq!(c.rows.len(), 1);
        assert!(c.rows[0].bounds.exact && c.rows[0].bounds.lower == 1);
        let c = classify_range(6, 5, 30).unwrap();
        let qs: Vec<i64> = c.rows.iter().map(|r| r.q).collect();
        assert_eq!(qs, vec![5, 7, 11, 13, 17, 19, 23, 25, 29]);
        assert!(c.skipped.contains(&6) && c.skipped.contains(&27));
        assert_eq!(c.rows[0].residue_5, Some(0));
        assert!(classify_range(1, 2, 5).is_err());
        assert!(classify_range(5, 9, 2).is_err());
    }

    #[test]
    fn result_invariants_sweep() {
        for p in 1..=8 {
            for q in 1..=300 {
                let Ok(k) = make_knot(p, q) else { continue };
                let b = gamma4_bounds(&k);
                if let Some(u) = b.upper {
                    assert!(b.lower <= u, "{k}: {b:?}");
                }
                assert_eq!(b.exact, b.upper == Some(b.lower));
                if k.is_unknot() {
                    assert_eq!((b.lower, b.upper), (0, Some(0)));
                } else {
                    assert!(b.lower >= 1);
                }
                let lo = b
                    .provenance
                    .iter()
                    .filter(|e| e.role == Role::Lower)
                    .map(|e| e.value)
                    .max();
                let hi = b
                    .provenance
                    .iter()
                    .filter(|e| e.role == Role::Upper)
                    .map(|e| e.value)
                    .min();
                assert_eq!(lo, Some(b.lower));
                assert_eq!(hi, b.upper);
            }
        }
    }

    #[test]
    fn curated_facts_never_weaken() {
        for f in curated_facts() {
            let b = gamma4_bounds(&f.knot);
            assert!(b.contains(f.value), "{}", f.knot);
            assert!(b.upper.unwrap() <= f.value);
        }
    }
}
