//! The end-to-end report: torus-knot term growth, Torres lower bounds,
//! unknot controls, and trefoil surgery-quotient hom counts.

use std::fmt::Write;

use serde::Serialize;

use crate::alexander::{nonzero_term_count, torus_knot_alexander};
use crate::braid::{trefoil_braid, BraidWord, FamilyKind};
use crate::error::Result;
use crate::fox::closure_presentation;
use crate::quotients::{
    abelianization_invariants, distinguish_family, hom_count, surgery_quotient, FamilyPartition,
    FiniteGroupTable,
};
use crate::swcount::{beta_sweep, BetaTable, SweepOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusRow {
    pub p: i64,
    pub alexander: String,
    pub terms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientRow {
    pub p: i64,
    pub h1: Vec<u64>,
    /// Hom counts in the order of [`PaperReport::targets`].
    pub homs: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PaperReport {
    pub torus_growth: Vec<TorusRow>,
    pub two_component: BetaTable,
    pub three_component: BetaTable,
    pub targets: Vec<String>,
    pub unknot_controls: Vec<QuotientRow>,
    pub trefoil_quotients: Vec<QuotientRow>,
    pub trefoil_partition: FamilyPartition,
}

const P_MAX: i64 = 10;

fn quotient_rows(
    knot: &BraidWord,
    ps: impl Iterator<Item = i64>,
    targets: &[FiniteGroupTable],
    budget: u128,
) -> Result<Vec<QuotientRow>> {
    let g = closure_presentation(knot);
    ps.map(|p| {
        let q = surgery_quotient(&g, 0, p)?;
        let homs = targets
            .iter()
            .map(|t| hom_count(&q, &format!("1/{p}"), t, budget).map(|r| r.total))
            .collect::<Result<Vec<_>>>()?;
        Ok(QuotientRow {
            p,
            h1: abelianization_invariants(&q)?,
            homs,
        })
    })
    .collect()
}

pub fn default_targets() -> Result<Vec<FiniteGroupTable>> {
    ["S3", "S4", "A5"]
        .iter()
        .map(|n| FiniteGroupTable::by_name(n))
        .collect()
}

pub fn reproduce_paper(budget: u128) -> Result<PaperReport> {
    let torus_growth = (1..=P_MAX)
        .map(|p| {
            let d = torus_knot_alexander(p, p + 1)?;
            Ok(TorusRow {
                p,
                terms: nonzero_term_count(&d),
                alexander: d.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let opts = SweepOptions {
        full_delta_max_p: 6,
    };
    let two_component = beta_sweep(FamilyKind::CircleSum, 1..=P_MAX, opts)?;
    let three_component = beta_sweep(FamilyKind::TrefoilFiber, 1..=P_MAX, opts)?;

    let targets = default_targets()?;
    let unknot = BraidWord::trivial(1)?;
    let unknot_controls = quotient_rows(&unknot, 1..=5, &targets, budget)?;
    let trefoil_quotients = quotient_rows(&trefoil_braid(), 1..=6, &targets, budget)?;

    let g = closure_presentation(&trefoil_braid());
    let members = (1..=4)
        .map(|p| Ok((format!("1/{p}"), surgery_quotient(&g, 0, p)?)))
        .collect::<Result<Vec<_>>>()?;
    let trefoil_partition = distinguish_family(&members, &targets, budget)?;

    Ok(PaperReport {
        torus_growth,
        two_component,
        three_component,
        targets: targets.iter().map(|t| t.name.clone()).collect(),
        unknot_controls,
        trefoil_quotients,
        trefoil_partition,
    })
}

fn opt(v: Option<usize>) -> String {
    v.map_or("-".to_string(), |x| x.to_string())
}

fn beta_lines(out: &mut String, t: &BetaTable) {
    writeln!(
        out,
        "{:>4} {:>11} {:>6} {:>7}",
        "p", "lower bound", "beta", "torres"
    )
    .unwrap();
    for r in &t.rows {
        let torres = match r.torres_verified {
            Some(true) => "ok",
            Some(false) => "FAIL",
            None => "-",
        };
        writeln!(
            out,
            "{:>4} {:>11} {:>6} {:>7}",
            r.p,
            r.lower_bound,
            opt(r.beta),
            torres
        )
        .unwrap();
    }
}

fn quotient_lines(out: &mut String, targets: &[String], rows: &[QuotientRow]) {
    write!(out, "{:>6} {:>6}", "slope", "H1").unwrap();
    for t in targets {
        write!(out, " {t:>5}").unwrap();
    }
    out.push('\n');
    for r in rows {
        let h1 = if r.h1.is_empty() {
            "0".to_string()
        } else {
            format!("{:?}", r.h1)
        };
        write!(out, "{:>6} {:>6}", format!("1/{}", r.p), h1).unwrap();
        for h in &r.homs {
            write!(out, " {h:>5}").unwrap();
        }
        out.push('\n');
    }
}

impl PaperReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("(a) Alexander polynomials of T(p,p+1)\n");
        for r in &self.torus_growth {
            writeln!(out, "{:>4} {:>4}  {}", r.p, r.terms, r.alexander).unwrap();
        }
        out.push_str("\n(b) basic classes, trefoil K with gamma_p = T(p,p+1)\n");
        out.push_str("K u gamma_p, lk = 1:\n");
        beta_lines(&mut out, &self.two_component);
        out.push_str("K u M u gamma_p, lower bound from (t2 - 1) * Delta_T(p,p+1)(t3):\n");
        beta_lines(&mut out, &self.three_component);
        out.push_str("\n(c) unknot: surgery quotients (hom counts)\n");
        quotient_lines(&mut out, &self.targets, &self.unknot_controls);
        out.push_str("\n(d) trefoil: surgery quotients (hom counts)\n");
        quotient_lines(&mut out, &self.targets, &self.trefoil_quotients);
        out.push_str("partition by hom counts:");
        for b in &self.trefoil_partition.blocks {
            write!(out, " {{{}}}", b.join(", ")).unwrap();
        }
        out.push('\n');
        out.push_str("different blocks have non-isomorphic groups; a shared block is not a proof of isomorphism\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotients::DEFAULT_HOM_BUDGET;

    #[test]
    fn report_sections() {
        let r = reproduce_paper(DEFAULT_HOM_BUDGET).unwrap();
        assert_eq!(r.torus_growth[2].terms, 5);
        assert!(r
            .unknot_controls
            .iter()
            .all(|q| q.h1.is_empty() && q.homs.iter().all(|&h| h == 1)));
        assert_eq!(r.trefoil_quotients[0].homs, vec![1, 1, 121]);
        assert_eq!(r.trefoil_partition.blocks.len(), 2);
        assert_eq!(
            r.to_text(),
            reproduce_paper(DEFAULT_HOM_BUDGET).unwrap().to_text()
        );
    }
}
