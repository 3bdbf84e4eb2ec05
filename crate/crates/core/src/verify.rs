//! Cross-check sweeps over ranges of torus knots. Each check counts its
//! instances and failures and remembers the first failing knot.
//!
//! A [`Mutation`] swaps in a deliberately broken formula so that the harness
//! itself can be shown to catch mistakes.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::gamma4::gamma4_bounds;
use crate::invariants::{
    d_closed, d_formula_with, d_invariant_oracle, signature_closed, signature_mirror,
    upsilon_closed, upsilon_with,
};
use crate::knot::{floor_div, TorusKnot};
use crate::laurent::{truncated_expansion, unshifted_alexander};
use crate::obstructions::{linking_form_obstruction, pinch_chain, theta};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mutation {
    #[default]
    None,
    /// Rounds the floor sum of the `d` formula toward zero.
    TruncatingDivision,
    /// Picks `i = ⌊p/2⌋ + 1` in `υ(p, p+1)`.
    UpsilonIndexUp,
    /// Picks `i = ⌊p/2⌋ - 1` in `υ(p, p+1)`.
    UpsilonIndexDown,
}

impl FromStr for Mutation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Self::None),
            "truncating-division" => Ok(Self::TruncatingDivision),
            "upsilon-index-up" => Ok(Self::UpsilonIndexUp),
            "upsilon-index-down" => Ok(Self::UpsilonIndexDown),
            _ => Err(format!("unknown mutation '{s}'")),
        }
    }
}

impl Mutation {
    pub const NAMES: [&'static str; 4] = [
        "none",
        "truncating-division",
        "upsilon-index-up",
        "upsilon-index-down",
    ];

    fn division(self) -> fn(i64, i64) -> i64 {
        match self {
            Mutation::TruncatingDivision => |a, b| a / b,
            _ => floor_div,
        }
    }

    fn upsilon_shift(self) -> i64 {
        match self {
            Mutation::UpsilonIndexUp => 1,
            Mutation::UpsilonIndexDown => -1,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            instances: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `name<TAB>instances<TAB>failures<TAB>first_failure_or_dash` per check.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let first = c.first_failure.as_deref().unwrap_or("-");
            writeln!(s, "{}\t{}\t{}\t{}", c.name, c.instances, c.failures, first).unwrap();
        }
        s
    }
}

fn knots(p_range: impl Iterator<Item = i64>, q_max: i64, strictly_above: bool) -> Vec<TorusKnot> {
    let mut out = Vec::new();
    for p in p_range {
        let start = if strictly_above { p + 1 } else { 1 };
        for q in start..=q_max {
            if let Ok(k) = TorusKnot::new(p, q) {
                out.push(k);
            }
        }
    }
    out
}

/// Runs every sweep for `2 <= p <= p_max`, `q <= q_max`.
pub fn run(p_max: i64, q_max: i64, mutation: Mutation) -> VerifyReport {
    let div = mutation.division();
    let shift = mutation.upsilon_shift();
    let mut checks = Vec::new();
    let ordered = knots(2..=p_max, q_max, true);

    let mut c = CheckResult::new("d_formula_vs_alexander");
    for k in &ordered {
        let oracle = d_invariant_oracle(k).ok();
        let a = d_formula_with(k.p(), k.q(), div);
        let b = d_formula_with(k.q(), k.p(), div);
        c.record(oracle == Some(a) && oracle == Some(b), || {
            format!("{k}: formula {a}/{b} (reversed) vs alexander {oracle:?}")
        });
    }
    checks.push(c);

    let tabulated = knots([5, 6].into_iter().filter(|&p| p <= p_max), q_max, false);
    let mut cs = CheckResult::new("sigma_closed_vs_recursion");
    let mut cu = CheckResult::new("upsilon_closed_vs_recursion");
    let mut cd = CheckResult::new("d_closed_vs_formula");
    for k in &tabulated {
        let (s, sc) = (signature_mirror(k), signature_closed(k));
        cs.record(sc == Ok(s), || {
            format!("{k}: closed {sc:?} vs recursion {s}")
        });
        let (u, uc) = (upsilon_with(k, shift), upsilon_closed(k));
        cu.record(uc == Ok(u), || {
            format!("{k}: closed {uc:?} vs recursion {u}")
        });
        let (d, dc) = (d_formula_with(k.p(), k.q(), div), d_closed(k));
        cd.record(dc == Ok(d), || format!("{k}: closed {dc:?} vs formula {d}"));
    }
    checks.extend([cs, cu, cd]);

    let mut c = CheckResult::new("truncation_agreement");
    for k in &ordered {
        let half = (k.p() - 1) * (k.q() - 1) / 2;
        let ok = match (truncated_expansion(k), unshifted_alexander(k)) {
            (Ok(t), Ok(full)) => (0..half).all(|e| t.coeff(e) == full.coeff(e)),
            _ => false,
        };
        c.record(ok, || format!("{k}"));
    }
    checks.push(c);

    let mut c = CheckResult::new("pinch_chain_length");
    for k in &ordered {
        if let Ok(t) = theta(k) {
            let len = pinch_chain(k).map(|v| v.len() as i64);
            c.record(len == Ok(t), || format!("{k}: chain {len:?} vs theta {t}"));
        }
    }
    checks.push(c);

    let mut c = CheckResult::new("linking_form_witness");
    for k in &ordered {
        let r = linking_form_obstruction(k);
        if let (Some(n), Some((even, odd))) = (r.witness, k.even_odd()) {
            let v = (-(even / 2) * (n * n % odd)).rem_euclid(odd);
            c.record(v == 1 || v == odd - 1, || format!("{k}: witness {n}"));
        }
    }
    checks.push(c);

    let mut c = CheckResult::new("bounds_consistent");
    for k in knots(1..=p_max, q_max, false) {
        let b = gamma4_bounds(&k);
        let ok = b.upper.is_none_or(|u| b.lower <= u)
            && (k.is_unknot() || b.lower >= 1)
            && b.exact == (b.upper == Some(b.lower));
        c.record(ok, || format!("{k}: [{}, {:?}]", b.lower, b.upper));
    }
    checks.push(c);

    if p_max >= 5 {
        let mut c = CheckResult::new("t5_classification");
        for q in 2..=q_max {
            let Ok(k) = TorusKnot::new(5, q) else {
                continue;
            };
            let b = gamma4_bounds(&k);
            let ok = match (q % 5, q % 10) {
                (2 | 3, _) => b.exact && b.lower == 1,
                (_, 4 | 6 | 9) => b.exact && b.lower == 2,
                _ => b.lower >= 1 && b.upper.is_some_and(|u| u <= 2),
            };
            c.record(ok, || format!("{k}: [{}, {:?}]", b.lower, b.upper));
        }
        checks.push(c);
    }

    if p_max >= 6 {
        let mut c = CheckResult::new("t6_classification");
        for q in 5..=q_max {
            let Ok(k) = TorusKnot::new(6, q) else {
                continue;
            };
            let b = gamma4_bounds(&k);
            let floor = if q % 12 != 1 || q % 5 == 0 { 2 } else { 1 };
            let ok = b.lower >= floor && b.upper.is_some_and(|u| u <= 3);
            c.record(ok, || format!("{k}: [{}, {:?}]", b.lower, b.upper));
        }
        checks.push(c);
    }

    VerifyReport { checks }
}
