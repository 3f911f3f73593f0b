//! Verification suites. Each returns its cases in a canonical order that
//! does not depend on the number of worker threads.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde_json::{json, Value};
use weylbn::cosets::{
    case1_bound_check, double_coset_count, double_coset_count_naive, lemma2_specs, prop7_weight_sets,
    stembridge_witness, w0_is_minus_one, w0_negation_map, w0_not_minus_one_expected, ParabolicChoice,
};
use weylbn::fingrp::{affine_group, affine_line_action, projective_space_action, special_linear_group};
use weylbn::rootsys::{Family, RootSystem, RootSystemSpec};
use weylbn::titssys::{
    bruhat_cells, cell_size_formula_check, check_axioms, classify, coxeter_order_check, intersection_identity_check,
    matrix_coxeter_order_check, psl3f2_nonstandard, rank1_from_2transitive, rank1_round_trip,
    sl_rank1_column_system, standard_projective_system, standard_sl_system, star_property_check,
    TitsSystemCandidate,
};
use weylbn::weyl::WeylGroup;
use weylbn::{Error, Result};

use crate::suite::{Case, SuiteResult};

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// End node of a simple-chain diagram (type `A_m`, including `D3`).
fn type_a_end(rs: &RootSystem, node: usize) -> bool {
    rs.has_type_a_diagram() && rs.is_end_node(node)
}

struct SpecCases {
    double_cosets: Vec<Case>,
    witnesses: Vec<Case>,
    case1: Vec<Case>,
    w0: Case,
}

fn lemma2_cases(spec: RootSystemSpec) -> Result<SpecCases> {
    let rs = RootSystem::build(spec)?;
    let group = WeylGroup::new(&rs)?;
    let minus_one = w0_is_minus_one(spec)?;
    let mut out = SpecCases {
        double_cosets: Vec::new(),
        witnesses: Vec::new(),
        case1: Vec::new(),
        w0: Case::new(
            format!("w0/{spec}"),
            json!({ "type": spec.to_string() }),
            json!({ "minus_one": !w0_not_minus_one_expected(spec) }),
            json!({ "minus_one": minus_one }),
            minus_one != w0_not_minus_one_expected(spec),
        )
        .detail(format!("w0 = -1: {minus_one}")),
    };
    for a in 0..rs.rank() {
        let choice = ParabolicChoice::from_group(&group, a);
        let inputs = json!({ "type": spec.to_string(), "node": a + 1 });
        let r = double_coset_count(&choice)?;
        let expected = if r.expected_two { json!({ "count": 2 }) } else { json!({ "count": ">2" }) };
        out.double_cosets.push(
            Case::new(format!("double-cosets/{spec}/{}", a + 1), inputs.clone(), expected, to_value(&r), r.pass)
                .detail(format!("index {} count {}", r.index, r.count)),
        );
        let a_end = type_a_end(&rs, a);
        let witness = match stembridge_witness(&choice) {
            Ok(w) => Case::new(
                format!("witness/{spec}/{}", a + 1),
                inputs.clone(),
                json!({ "applicable": true, "length": 2 * w.i + 2, "reduced_words": 2 }),
                to_value(&w),
                w.pass && !a_end,
            )
            .detail(format!("word {} length {} words {}", w.word, w.length, w.reduced_words.join(" | "))),
            Err(Error::WitnessNotApplicable(why)) => Case::new(
                format!("witness/{spec}/{}", a + 1),
                inputs.clone(),
                json!({ "applicable": false }),
                json!({ "applicable": false, "reason": why, "w0_is_minus_one": minus_one }),
                a_end || minus_one,
            )
            .detail(if a_end { "not applicable (type-A end node)" } else { "not applicable (w0 = -1 branch)" }),
            Err(e) => return Err(e),
        };
        out.witnesses.push(witness);
        if minus_one {
            let c = case1_bound_check(&choice)?;
            out.case1.push(
                Case::new(
                    format!("case1/{spec}/{}", a + 1),
                    inputs,
                    json!({ "holds": true }),
                    to_value(&c),
                    c.holds,
                )
                .detail(format!("#Psi {} #Psi' {}", c.size_psi, c.size_psi_prime)),
            );
        }
    }
    Ok(out)
}

/// Double-coset counts, braid-relation witnesses, the `w0 = -1` bound and
/// the `w0` classification for every type in range.
pub fn lemma2_suite(max_rank: usize, families: &[Family]) -> Result<SuiteResult> {
    let specs = lemma2_specs(max_rank, families);
    let per_spec: Vec<SpecCases> = specs.par_iter().map(|&s| lemma2_cases(s)).collect::<Result<_>>()?;
    let mut cases = Vec::new();
    for s in &per_spec {
        cases.extend(s.double_cosets.iter().cloned());
    }
    for s in &per_spec {
        cases.extend(s.witnesses.iter().cloned());
    }
    for s in &per_spec {
        cases.extend(s.case1.iter().cloned());
    }
    cases.extend(per_spec.into_iter().map(|s| s.w0));
    Ok(SuiteResult::new("lemma2", cases))
}

/// Orbit-method counts against exhaustive enumeration of `W`.
pub fn oracle_suite() -> Result<SuiteResult> {
    let specs: Vec<RootSystemSpec> = lemma2_specs(3, &Family::ALL)
        .into_iter()
        .chain([RootSystemSpec::new(Family::F, 4)?])
        .collect();
    let cases: Vec<Vec<Case>> = specs
        .par_iter()
        .map(|&spec| {
            let group = WeylGroup::new(&RootSystem::build(spec)?)?;
            (0..group.rank())
                .map(|a| {
                    let choice = ParabolicChoice::from_group(&group, a);
                    let fast = double_coset_count(&choice)?.count;
                    let naive = double_coset_count_naive(&choice)?;
                    Ok(Case::new(
                        format!("oracle/{spec}/{}", a + 1),
                        json!({ "type": spec.to_string(), "node": a + 1 }),
                        json!({ "count": naive }),
                        json!({ "count": fast }),
                        fast == naive,
                    )
                    .detail(format!("orbit method {fast}, exhaustive {naive}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(SuiteResult::new("oracle", cases.concat()))
}

/// Type-A weight sets and `w0(a_i) = -a_{m+1-i}`.
pub fn prop7_suite() -> Result<SuiteResult> {
    let mut cases = Vec::new();
    for m in 2..=8 {
        let rs = RootSystem::of(Family::A, m)?;
        let s = prop7_weight_sets(m)?;
        let coords = s.difference_coords(&rs);
        let expected: Vec<Vec<i64>> = {
            let mut v: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| i64::from(j >= i)).collect()).collect();
            v.sort();
            v
        };
        let pass = coords == expected && s.difference.len() == m && s.matches_expected && s.opposite_ok;
        cases.push(
            Case::new(
                format!("weights/A{m}"),
                json!({ "m": m }),
                json!({ "difference": expected }),
                json!({ "difference": coords, "lie_p": s.lie_p.len(), "lie_q": s.lie_q.len() }),
                pass,
            )
            .detail(format!("|Lie P| {} |Lie Q| {} difference {}", s.lie_p.len(), s.lie_q.len(), s.difference.len())),
        );
    }
    for m in 1..=8 {
        let rs = RootSystem::of(Family::A, m)?;
        let sigma: Vec<usize> = w0_negation_map(&rs)?.iter().map(|i| i + 1).collect();
        let expected: Vec<usize> = (1..=m).rev().collect();
        cases.push(
            Case::new(
                format!("w0-negation/A{m}"),
                json!({ "m": m }),
                json!({ "sigma": expected }),
                json!({ "sigma": sigma }),
                sigma == expected,
            )
            .detail(format!("sigma {}", join(&sigma))),
        );
    }
    Ok(SuiteResult::new("prop7", cases))
}

/// Order of `s s'` in the Weyl group of the standard `SL_n(F_p)` system
/// against the `A_{n-1}` Coxeter matrix, `n <= 4`, `p <= 3`.
pub fn coxeter_suite(cap: usize) -> Result<SuiteResult> {
    let params: Vec<(usize, u32)> = (2..=4).flat_map(|n| [2, 3].map(|p| (n, p))).collect();
    let cases = params
        .par_iter()
        .map(|&(n, p)| {
            let (report, method) = match standard_sl_system(n, p, cap) {
                Ok(c) => (coxeter_order_check(&c)?, "enumerated"),
                Err(Error::GroupTooLarge { .. }) => (matrix_coxeter_order_check(n, p)?, "rank profile"),
                Err(e) => return Err(e),
            };
            Ok(Case::new(
                format!("coxeter/SL{n}(F{p})"),
                json!({ "n": n, "p": p }),
                json!({ "coxeter_type": format!("A{}", n - 1) }),
                json!({ "nodes": report.nodes, "orders": report.orders, "method": method }),
                report.holds,
            )
            .detail(format!("{method}: orders {:?}", report.orders)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteResult::new("coxeter", cases))
}

/// A Tits system to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BnSpec {
    Sl(usize, u32),
    SlRank1(usize, u32),
    Projective(usize, u32),
    Affine(u32),
    Example(String),
}

pub const EXAMPLES: [&str; 2] = ["psl3f2-nonstandard", "psl3f2-standard"];

impl fmt::Display for BnSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BnSpec::Sl(n, p) => write!(f, "sl-{n}-{p}"),
            BnSpec::SlRank1(n, p) => write!(f, "sl-rank1-{n}-{p}"),
            BnSpec::Projective(n, p) => write!(f, "projective-{n}-{p}"),
            BnSpec::Affine(p) => write!(f, "affine-{p}"),
            BnSpec::Example(name) => f.write_str(name),
        }
    }
}

/// Every system exercised by `report --all`.
pub fn all_bn_specs() -> Vec<BnSpec> {
    let mut v: Vec<BnSpec> =
        [(2, 2), (2, 3), (2, 5), (2, 7), (3, 2), (3, 3), (4, 2)].map(|(n, p)| BnSpec::Sl(n, p)).to_vec();
    v.extend([(2, 2), (2, 3), (3, 2)].map(|(n, p)| BnSpec::SlRank1(n, p)));
    v.extend([(3, 2), (2, 7)].map(|(n, p)| BnSpec::Projective(n, p)));
    v.extend([3, 5, 7].map(BnSpec::Affine));
    v.extend(EXAMPLES.map(|e| BnSpec::Example(e.into())));
    v
}

/// Axioms, Bruhat cells, (*), the intersection identity and the
/// classification for one system.
pub fn bn_suite(spec: &BnSpec, cap: usize) -> Result<SuiteResult> {
    let mut extra = Vec::new();
    let (c, expect_split): (TitsSystemCandidate, bool) = match spec {
        BnSpec::Sl(n, p) => (standard_sl_system(*n, *p, cap)?, true),
        BnSpec::SlRank1(n, p) => (sl_rank1_column_system(*n, *p, cap)?, *n == 2),
        BnSpec::Projective(n, p) => {
            let g = Arc::new(special_linear_group(*n, *p, cap)?);
            let act = projective_space_action(g)?;
            let last = act.num_points() as u32 - 1;
            (rank1_from_2transitive(&act, 0, last)?, *n == 2)
        }
        BnSpec::Affine(p) => {
            let act = affine_line_action(Arc::new(affine_group(*p)?))?;
            (rank1_from_2transitive(&act, 0, p - 1)?, true)
        }
        BnSpec::Example(name) if name == "psl3f2-standard" => (standard_projective_system(3, 2, cap)?, true),
        BnSpec::Example(name) if name == "psl3f2-nonstandard" => {
            let ns = psl3f2_nonstandard()?;
            extra.push(
                Case::new(
                    "nonstandard",
                    json!({}),
                    json!({ "b_order": 21, "index": 8, "two_transitive": true, "fitting_order": 7 }),
                    json!({
                        "b_order": ns.b_order(),
                        "index": ns.action.num_points(),
                        "two_transitive": ns.two_transitive,
                        "fitting_order": ns.flags.fitting_order,
                        "standard_parabolic_orders": ns.standard_parabolic_orders,
                    }),
                    ns.b_order() == 21
                        && ns.action.num_points() == 8
                        && ns.two_transitive
                        && ns.flags.fitting_order == 7
                        && ns.is_nonstandard(),
                )
                .detail(format!(
                    "|B| = {} on {} cosets; standard parabolics {}",
                    ns.b_order(),
                    ns.action.num_points(),
                    join(&ns.standard_parabolic_orders)
                )),
            );
            (ns.candidate, true)
        }
        BnSpec::Example(name) => {
            return Err(Error::InvalidArgument(format!(
                "unknown example {name:?} (known: {})",
                EXAMPLES.join(", ")
            )))
        }
    };
    let inputs = json!({ "system": spec.to_string() });
    let mut cases = Vec::new();

    let report = check_axioms(&c, cap)?;
    cases.push(
        Case::new("axioms", inputs.clone(), json!({ "pass": true }), to_value(&report), report.pass).detail(
            format!(
                "|G| {} |B| {} |H| {} |W| {} rank {}",
                report.group_order, report.b_order, report.h_order, report.weyl_order, report.rank
            ),
        ),
    );

    let cells = bruhat_cells(&c)?;
    let sizes = report.sorted_cell_sizes();
    let (expected, pass) = match spec {
        BnSpec::Sl(n, p) => {
            let f = cell_size_formula_check(*n, *p, cap)?;
            let want: Vec<usize> = {
                let mut v: Vec<usize> = f.cells.iter().map(|(_, l, _)| (*p as usize).pow(*l as u32) * f.b_order).collect();
                v.sort_unstable();
                v
            };
            (json!({ "sizes": want, "total": f.group_order }), f.pass && report.bruhat_bijective)
        }
        _ => (
            json!({ "total": report.group_order }),
            report.bruhat_bijective && report.cells_total == report.group_order,
        ),
    };
    cases.push(
        Case::new("bruhat-cells", inputs.clone(), expected, json!({ "cells": cells, "total": report.cells_total }), pass)
            .detail(format!("cells {} total {}", join(&sizes), report.cells_total)),
    );

    let star = star_property_check(&c)?;
    cases.push(
        Case::new("star-property", inputs.clone(), json!({ "holds": true }), json!({ "holds": star }), star)
            .detail(format!("holds: {star}")),
    );

    let inter = intersection_identity_check(&c)?;
    cases.push(
        Case::new("intersection-identity", inputs.clone(), json!({ "holds": true }), to_value(&inter), inter.holds)
            .detail(format!(
                "|H| {} |∩ wBw^-1| {} |B ∩ w0Bw0^-1| {}",
                inter.h_order, inter.all_conjugates_order, inter.longest_conjugate_order
            )),
    );

    let flags = classify(&c)?;
    let monotone = !flags.split || (flags.weakly_split && flags.saturated);
    let expected = if expect_split { json!({ "split": true }) } else { json!({ "monotone": true }) };
    cases.push(
        Case::new("classify", inputs.clone(), expected, to_value(&flags), monotone && (!expect_split || flags.split))
            .detail(format!(
                "saturated {} weakly-split {} split {} |Fit(B)| {}",
                flags.saturated, flags.weakly_split, flags.split, flags.fitting_order
            )),
    );

    if let BnSpec::Sl(n, _) = spec {
        let r = coxeter_order_check(&c)?;
        cases.push(
            Case::new(
                "coxeter-orders",
                inputs.clone(),
                json!({ "coxeter_type": format!("A{}", n - 1) }),
                to_value(&r),
                r.holds,
            )
            .detail(format!("orders {:?}", r.orders)),
        );
    }
    if report.rank == 1 {
        let ok = rank1_round_trip(&c)?;
        cases.push(
            Case::new("round-trip", inputs, json!({ "same_cells": true }), json!({ "same_cells": ok }), ok)
                .detail(format!("coset action rebuilds the same cells: {ok}")),
        );
    }
    cases.extend(extra);
    Ok(SuiteResult::new(format!("bn/{spec}"), cases))
}
