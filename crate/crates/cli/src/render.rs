use std::fmt::Write;

use freediv::{DivisorReport, Stage};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Human-readable report of the requested stages.
pub fn text(r: &DivisorReport, stages: &[Stage]) -> String {
    let mut s = String::new();
    let want = |st: Stage| stages.contains(&st);
    if let Some(input) = &r.input {
        writeln!(s, "f = {}  over ({})", input.f, input.variables.join(", ")).unwrap();
    }
    if want(Stage::Derlog) || stages.len() > 1 {
        match &r.weighted_homogeneous {
            Some(w) => writeln!(s, "weighted homogeneous: weights ({}), degree {}", w.weights.join(", "), w.degree),
            None => writeln!(s, "not weighted homogeneous"),
        }
        .unwrap();
    }
    if want(Stage::Derlog) {
        writeln!(s, "logarithmic vector fields ({} generators):", r.generators.len()).unwrap();
        for g in &r.generators {
            writeln!(s, "  {g}").unwrap();
        }
    }
    let Some(basis) = &r.basis else {
        writeln!(s, "freeness not certified").unwrap();
        return s;
    };
    writeln!(s, "free: certified, det = {} = ({}) * f", basis.det, basis.det_constant).unwrap();
    for (i, (op, m)) in basis.operators.iter().zip(&basis.multipliers).enumerate() {
        writeln!(s, "  delta_{} = {op}    m_{} = {m}", i + 1, i + 1).unwrap();
    }
    if let Some(alpha) = &r.alpha {
        if want(Stage::Alpha) {
            writeln!(s, "brackets:").unwrap();
            for e in alpha {
                let terms: Vec<String> = e
                    .coefficients
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.as_str() != "0")
                    .map(|(k, c)| format!("({c})*delta_{}", k + 1))
                    .collect();
                let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                writeln!(s, "  [delta_{}, delta_{}] = {rhs}", e.i, e.j).unwrap();
            }
        }
    }
    if let Some(k) = &r.koszul {
        if k.koszul_free {
            writeln!(s, "Koszul free ({})", k.scope).unwrap();
        } else {
            let w = k.witness.as_deref().unwrap_or("?");
            writeln!(s, "NOT Koszul free ({}); witness: {w}", k.scope).unwrap();
        }
    }
    if let Some(h) = r.holonomic {
        writeln!(s, "holonomic: {}", yes(h)).unwrap();
    }
    if want(Stage::Spencer) {
        if let Some(sp) = &r.spencer {
            for (p, m) in sp.differentials.iter().enumerate() {
                writeln!(s, "d_{}:", p + 1).unwrap();
                for row in m {
                    writeln!(s, "  [{}]", row.join(", ")).unwrap();
                }
            }
        }
    }
    if let Some(d2) = r.spencer_d2_zero {
        writeln!(s, "Spencer d^2 = 0: {}", yes(d2)).unwrap();
    }
    if let Some(m) = r.spencer_matches_syzygies {
        writeln!(s, "Spencer differentials match the syzygies: {}", yes(m)).unwrap();
    }
    if let Some(t) = &r.tilde_generators {
        writeln!(s, "tilde generators:").unwrap();
        for g in t {
            writeln!(s, "  {g}").unwrap();
        }
    }
    if let Some(d) = r.duality_theorem_verified {
        writeln!(s, "dual presentation equals the tilde generators: {}", yes(d)).unwrap();
    }
    if let Some(ids) = &r.identity_checks {
        for c in ids.iter().filter(|c| !c.holds) {
            writeln!(s, "  identity failed at index {}: {}", c.index, c.failed.as_deref().unwrap_or("?")).unwrap();
        }
    }
    match r.annihilator_check {
        Some(true) => writeln!(s, "all tilde generators annihilate 1/f").unwrap(),
        Some(false) => writeln!(s, "some tilde generator does not annihilate 1/f").unwrap(),
        None => {}
    }
    for (stage, why) in &r.skipped {
        writeln!(s, "skipped {stage}: {why}").unwrap();
    }
    if let Some(t) = &r.timings_us {
        for (stage, us) in t {
            writeln!(s, "time {stage}: {us} us").unwrap();
        }
    }
    s
}
