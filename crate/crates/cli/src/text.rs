//! Plain-text renderings of command results.

use std::fmt::Write;

use heis_deform::parametrize::Canonicalized;
use heis_deform::{
    Component, GammaWord, Geometry, HomPair, ParamPoint, ProbeReport, ProperVerdict, Scalar,
};

use crate::family::FamilyRow;

fn component(c: &Component) -> String {
    match c {
        Component::Signs { torus, fiber } => format!("({torus}, {fiber})"),
        Component::Boundary => "boundary".into(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn verdict<S: Scalar>(v: &ProperVerdict<S>) -> String {
    let status = if v.proper {
        "proper"
    } else if v.undecided {
        "undecided (within tolerance of the boundary)"
    } else {
        "not proper"
    };
    format!(
        "verdict:        {status}\n\
         det(A - A'):    {} ({})\n\
         detA - detA':   {} ({})\n\
         torus matrix:   {}\n\
         component:      {}\n\
         rho injective:  {}\n\
         rho' injective: {}\n",
        v.torus_det,
        if v.cond_a { "nonzero" } else { "zero" },
        v.fiber_value,
        if v.cond_b { "nonzero" } else { "zero" },
        v.torus_matrix,
        component(&v.component),
        yes_no(v.rho_injective),
        yes_no(v.rho_prime_injective),
    )
}

pub fn pair<S: Scalar>(p: &HomPair<S>) -> String {
    format!(
        "rho:  gamma1 -> {}, gamma2 -> {}\nrho': gamma1 -> {}, gamma2 -> {}\n",
        p.rho().g1,
        p.rho().g2,
        p.rho_prime().g1,
        p.rho_prime().g2
    )
}

pub fn param<S: Scalar>(p: &ParamPoint<S>) -> String {
    let list = |xs: &[S]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!("S: {}\nt: ({})\nc: ({})\n", p.s, list(&p.t), list(&p.c))
}

pub fn canonical<S: Scalar>(c: &Canonicalized<S>) -> String {
    let [t1, t2, t3] = &c.coords.t;
    format!(
        "S:  {}\nt0: {}\nt:  ({t1}, {t2}, {t3})\nh1: {}\nh2: {}\nrepresentative:\n{}",
        c.coords.s,
        c.coords.t0,
        c.h1,
        c.h2,
        pair(&c.representative)
    )
}

pub fn geometry<S: Scalar>(g: &Geometry<S>) -> String {
    format!(
        "torus matrix:      {}\nfiber length:      {}\ntorus orientation: {}\nfiber orientation: {}\n",
        g.torus_matrix, g.fiber_length, g.torus_orientation, g.fiber_orientation
    )
}

pub fn probe<S: Scalar>(r: &ProbeReport<S>, free_bound: i64, fixed: &[GammaWord]) -> String {
    let mut out = format!("box radius {} ({} contact)\n", r.radius, r.contact.as_str());
    for (n, count) in r.n_list.iter().zip(&r.counts) {
        let _ = writeln!(out, "  N = {n:>3}: {count} words");
    }
    let _ = writeln!(out, "verdict: {}", r.verdict.as_str());
    let shown: Vec<String> = r.witnesses.iter().take(8).map(|w| w.to_string()).collect();
    let _ = writeln!(
        out,
        "witnesses ({} kept): {}",
        r.witnesses.len(),
        shown.join(" ")
    );
    let _ = writeln!(
        out,
        "words with a fixed point up to N = {free_bound}: {}",
        fixed.len()
    );
    out
}

pub fn family<S: Scalar>(rows: &[FamilyRow<S>]) -> String {
    let mut out = format!(
        "{:>12}  {:<10}  {:>12}  {:<18}  {}\n",
        "parameter", "proper", "fiber length", "torus matrix", "component"
    );
    for r in rows {
        let proper = if r.proper {
            "yes"
        } else if r.undecided {
            "undecided"
        } else {
            "no"
        };
        let _ = writeln!(
            out,
            "{:>12}  {:<10}  {:>12}  {:<18}  {}",
            r.parameter.to_string(),
            proper,
            r.fiber_length.to_string(),
            r.torus_matrix.to_string(),
            component(&r.component)
        );
    }
    out
}
