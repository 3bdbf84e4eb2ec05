use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use torus_nog4::gamma4::{BoundResult, Classification, Role};
use torus_nog4::invariants::{d_invariant_oracle, full_record};
use torus_nog4::laurent::alexander_polynomial;
use torus_nog4::obstructions::{batson_lower, sigma_arf_mod8, upsilon_sigma_lower};
use torus_nog4::{Result, TorusKnot};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Text,
    Csv,
    Json,
}

/// Symbols for text output.
pub struct Glyphs {
    sigma: &'static str,
    upsilon: &'static str,
    gamma: &'static str,
    d: &'static str,
    ok: &'static str,
    bad: &'static str,
    elem: &'static str,
}

impl Glyphs {
    pub fn new(ascii: bool) -> Self {
        if ascii {
            Glyphs {
                sigma: "sigma",
                upsilon: "upsilon",
                gamma: "g4",
                d: "d(S^3_-1)",
                ok: "ok",
                bad: "MISMATCH",
                elem: "in",
            }
        } else {
            Glyphs {
                sigma: "σ",
                upsilon: "υ",
                gamma: "γ₄",
                d: "d(S³₋₁)",
                ok: "✓",
                bad: "✗",
                elem: "∈",
            }
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct InvariantsJson {
    p: i64,
    q: i64,
    unknot: bool,
    sigma: i64,
    arf: u8,
    upsilon: i64,
    d: i64,
    d_oracle: i64,
    d_agree: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    alexander: Option<Vec<(i64, i64)>>,
}

pub fn invariants(k: &TorusKnot, format: ReportFormat, dump: bool, g: &Glyphs) -> Result<String> {
    let r = full_record(k);
    let oracle = d_invariant_oracle(k)?;
    let agree = oracle == r.d_minus_one_surgery;
    let alex = if dump {
        Some(alexander_polynomial(k)?)
    } else {
        None
    };
    let mut out = String::new();
    match format {
        ReportFormat::Json => {
            out = json(&InvariantsJson {
                p: k.p(),
                q: k.q(),
                unknot: k.is_unknot(),
                sigma: r.sigma_mirror,
                arf: r.arf,
                upsilon: r.upsilon,
                d: r.d_minus_one_surgery,
                d_oracle: oracle,
                d_agree: agree,
                alexander: alex.map(|a| a.terms().collect()),
            });
        }
        ReportFormat::Csv => {
            out.push_str("p,q,sigma,arf,upsilon,d,d_oracle,d_agree\n");
            writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                k.p(),
                k.q(),
                r.sigma_mirror,
                r.arf,
                r.upsilon,
                r.d_minus_one_surgery,
                oracle,
                agree
            )
            .unwrap();
            if let Some(a) = alex {
                out.push_str(&a.dump());
            }
        }
        ReportFormat::Text => {
            writeln!(out, "{k}").unwrap();
            if k.is_unknot() {
                out.push_str("unknot: every invariant vanishes\n");
            }
            writeln!(out, "  {}(p,q) = {}", g.sigma, r.sigma_mirror).unwrap();
            writeln!(out, "  Arf = {}", r.arf).unwrap();
            writeln!(out, "  {} = {}", g.upsilon, r.upsilon).unwrap();
            writeln!(
                out,
                "  {} = {} (closed form), {} (Alexander) {}",
                g.d,
                r.d_minus_one_surgery,
                oracle,
                if agree { g.ok } else { g.bad }
            )
            .unwrap();
            if let Some(a) = alex {
                out.push_str(&a.dump());
            }
        }
    }
    Ok(out)
}

fn interval(b: &BoundResult, g: &Glyphs) -> String {
    match b.upper {
        Some(u) if b.exact => format!("{} = {u} (exact)", g.gamma),
        Some(u) => format!("{} {} [{}, {u}]", g.gamma, g.elem, b.lower),
        None => format!("{} {} [{}, ?]", g.gamma, g.elem, b.lower),
    }
}

fn role(r: Role) -> &'static str {
    match r {
        Role::Lower => "lower",
        Role::Upper => "upper",
    }
}

pub fn bounds(b: &BoundResult, format: ReportFormat, g: &Glyphs) -> String {
    match format {
        ReportFormat::Json => json(b),
        ReportFormat::Csv => {
            let mut out = String::from("p,q,g4_lower,g4_upper,exact,provenance\n");
            let prov: Vec<String> = b
                .provenance
                .iter()
                .map(|e| format!("{}:{}={}", e.bound, role(e.role), e.value))
                .collect();
            writeln!(
                out,
                "{},{},{},{},{},{}",
                b.knot.p(),
                b.knot.q(),
                b.lower,
                b.upper.map(|u| u.to_string()).unwrap_or_default(),
                b.exact,
                prov.join(";")
            )
            .unwrap();
            out
        }
        ReportFormat::Text => {
            let mut out = format!("{}: {}\n", b.knot, interval(b, g));
            for e in &b.provenance {
                writeln!(
                    out,
                    "  {:<5} {:<14} {:>3}  [{}]",
                    role(e.role),
                    e.bound,
                    e.value,
                    e.citation
                )
                .unwrap();
            }
            out
        }
    }
}

pub const TABLE_HEADER: &str =
    "q,residue_2p,sigma,arf,sigma_arf_mod8,upsilon,ups_sigma_abs,d,batson,g4_lower,g4_upper,exact";

#[derive(Serialize)]
struct TableRow {
    q: i64,
    residue_2p: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    residue_5: Option<i64>,
    sigma: i64,
    arf: u8,
    sigma_arf_mod8: i64,
    upsilon: i64,
    ups_sigma_abs: i64,
    d: i64,
    batson: i64,
    g4_lower: i64,
    g4_upper: Option<i64>,
    exact: bool,
}

#[derive(Serialize)]
struct TableJson {
    p: i64,
    rows: Vec<TableRow>,
    skipped: Vec<i64>,
}

pub fn table(c: &Classification, format: ReportFormat, g: &Glyphs) -> String {
    let rows: Vec<TableRow> = c
        .rows
        .iter()
        .map(|row| {
            let k = &row.bounds.knot;
            let r = full_record(k);
            TableRow {
                q: row.q,
                residue_2p: row.residue_2p,
                residue_5: row.residue_5,
                sigma: r.sigma_mirror,
                arf: r.arf,
                sigma_arf_mod8: sigma_arf_mod8(k),
                upsilon: r.upsilon,
                ups_sigma_abs: upsilon_sigma_lower(k),
                d: r.d_minus_one_surgery,
                batson: batson_lower(k),
                g4_lower: row.bounds.lower,
                g4_upper: row.bounds.upper,
                exact: row.bounds.exact,
            }
        })
        .collect();
    match format {
        ReportFormat::Json => json(&TableJson {
            p: c.p,
            rows,
            skipped: c.skipped.clone(),
        }),
        ReportFormat::Csv => {
            let mut out = format!("{TABLE_HEADER}\n");
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{}",
                    r.q,
                    r.residue_2p,
                    r.sigma,
                    r.arf,
                    r.sigma_arf_mod8,
                    r.upsilon,
                    r.ups_sigma_abs,
                    r.d,
                    r.batson,
                    r.g4_lower,
                    r.g4_upper.map(|u| u.to_string()).unwrap_or_default(),
                    r.exact
                )
                .unwrap();
            }
            out
        }
        ReportFormat::Text => {
            let mut out = format!(
                "{:>6} {:>4} {:>4} {:>7} {:>4} {:>8} {:>8} {:>9} {:>7} {:>7}  {}\n",
                "q",
                format!("mod{}", 2 * c.p),
                if c.p == 6 { "mod5" } else { "" },
                g.sigma,
                "arf",
                "s+4a%8",
                g.upsilon,
                "|u+s/2|",
                "d",
                "s/2-d",
                g.gamma
            );
            for (r, row) in rows.iter().zip(&c.rows) {
                writeln!(
                    out,
                    "{:>6} {:>4} {:>4} {:>7} {:>4} {:>8} {:>8} {:>9} {:>7} {:>7}  {}",
                    r.q,
                    r.residue_2p,
                    r.residue_5.map(|x| x.to_string()).unwrap_or_default(),
                    r.sigma,
                    r.arf,
                    r.sigma_arf_mod8,
                    r.upsilon,
                    r.ups_sigma_abs,
                    r.d,
                    r.batson,
                    interval(&row.bounds, g)
                )
                .unwrap();
            }
            out
        }
    }
}
