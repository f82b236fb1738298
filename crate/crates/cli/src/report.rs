//! JSON renderings of verdicts and certificates. Every exact value is a
//! string that parses back with the ring's literal syntax.

use serde_json::{json, Value};
use stabring::arith::{rat_to_string, Poly};
use stabring::closedloop::FeedbackMatrix;
use stabring::coprime::{
    CFVerdict, CommonObstruction, CoprimeCertificate, NonexistenceCertificate, SufficiencyReport, Verdict,
};
use stabring::elemfactor::{FallbackReason, SearchMethod, WitnessPair, WitnessTrace};
use stabring::rings::{RingDescriptor, RingElement, TransferFunction};
use stabring::synthesis::{SynthesisPath, SynthesisResult};

pub fn tf(p: &TransferFunction) -> Value {
    Value::String(p.to_string())
}

pub fn elem(e: &RingElement) -> Value {
    Value::String(e.to_string())
}

pub fn poly(p: &Poly) -> Value {
    Value::String(p.to_string())
}

pub fn ring(r: RingDescriptor) -> Value {
    match r {
        RingDescriptor::Quadratic { m } => json!({"kind": "quadratic", "m": m, "maximal_order": r.is_maximal_order()}),
        RingDescriptor::Delay => json!({"kind": "delay"}),
    }
}

fn reason(r: &FallbackReason) -> Value {
    match r {
        FallbackReason::QuadraticGcd { alpha_prime, beta, gcd } => json!({
            "kind": "quadratic_gcd",
            "alpha_prime": alpha_prime.to_string(),
            "beta": beta.to_string(),
            "gcd": gcd.to_string(),
        }),
        FallbackReason::GcdDegree(d) => json!({"kind": "gcd_degree", "degree": d}),
        FallbackReason::SharedFactor => json!({"kind": "shared_factor"}),
        FallbackReason::MultiplierExhausted => json!({"kind": "multiplier_exhausted"}),
    }
}

pub fn trace(t: &WitnessTrace) -> Value {
    match t {
        WitnessTrace::Quadratic(q) => json!({
            "kind": "quadratic",
            "alpha1": q.alpha1.to_string(),
            "alpha2": q.alpha2.to_string(),
            "beta": q.beta.to_string(),
            "norm": q.norm.to_string(),
            "g": q.g.to_string(),
            "alpha_prime": q.alpha_prime.to_string(),
        }),
        WitnessTrace::Delay(d) => json!({
            "kind": "delay",
            "g": poly(&d.g),
            "g1": rat_to_string(&d.g1),
            "c": rat_to_string(&d.c),
            "q": poly(&d.q),
            "n_prime": poly(&d.n_prime),
            "d_prime": poly(&d.d_prime),
            "n_second": poly(&d.n_second),
            "d_second": poly(&d.d_second),
            "alpha": poly(&d.alpha),
            "beta": poly(&d.beta),
            "r": poly(&d.r),
            "alpha0": rat_to_string(&d.alpha0),
            "alpha1": rat_to_string(&d.alpha1),
            "beta0": rat_to_string(&d.beta0),
            "beta1": rat_to_string(&d.beta1),
        }),
        WitnessTrace::Search(s) => {
            let method = match &s.method {
                SearchMethod::BoxSpiral { radius } => json!({"kind": "box_spiral", "radius": radius}),
                SearchMethod::Lattice => json!({"kind": "lattice"}),
                SearchMethod::LinearSystem { deg_bound } => json!({"kind": "linear_system", "degree": deg_bound}),
            };
            json!({
                "kind": "search",
                "method": method,
                "reason": s.reason.as_ref().map(reason),
                "beyond_direct_construction": true,
            })
        }
    }
}

pub fn witness(w: &WitnessPair) -> Value {
    json!({
        "lambda1": elem(&w.lambda1),
        "lambda2": elem(&w.lambda2),
        "u": elem(&w.u),
        "v": elem(&w.v),
        "trace": trace(&w.trace),
    })
}

pub fn matrix(h: &FeedbackMatrix) -> Value {
    let m = h.membership();
    json!({
        "entries": [[tf(&h.h11), tf(&h.h12)], [tf(&h.h21), tf(&h.h22)]],
        "in_ring": [[m[0][0], m[0][1]], [m[1][0], m[1][1]]],
        "stable": h.stable,
        "well_posed": h.well_posed,
    })
}

pub fn synthesis(r: &SynthesisResult) -> Value {
    let mut v = json!({
        "controller": tf(&r.controller),
        "controller_causal": r.controller_causal,
        "closed_loop": matrix(&r.closed_loop),
    });
    let path = match &r.path {
        SynthesisPath::PlantInRing => json!({"kind": "plant_in_ring"}),
        SynthesisPath::Formula(f) => json!({
            "kind": "formula",
            "omega": f.omega,
            "a1": elem(&f.a1),
            "a2": elem(&f.a2),
            "lambda1": elem(&f.lambda1),
            "lambda2": elem(&f.lambda2),
            "r1": elem(&f.r1),
            "r2": elem(&f.r2),
            "condition_ii_products": f.condition_ii_products.iter().map(elem).collect::<Vec<_>>(),
            "witness": witness(&f.witness),
        }),
    };
    v["path"] = path;
    v
}

pub fn coprime(c: &CoprimeCertificate) -> Value {
    match c {
        CoprimeCertificate::Witness { x, y } => json!({"verdict": "coprime", "x": elem(x), "y": elem(y)}),
        CoprimeCertificate::NotCoprime(CommonObstruction::Ideal(i)) => {
            json!({"verdict": "not_coprime", "ideal": i.to_string(), "ideal_norm": i.norm().to_string()})
        }
        CoprimeCertificate::NotCoprime(CommonObstruction::CommonFactor(g)) => {
            json!({"verdict": "not_coprime", "common_factor": poly(g)})
        }
        CoprimeCertificate::Unknown { bound } => json!({"verdict": "unknown", "bound": bound}),
    }
}

pub fn cf(v: &CFVerdict) -> Value {
    match v {
        CFVerdict::Exists { num, den, x, y } => {
            json!({"verdict": "exists", "num": elem(num), "den": elem(den), "x": elem(x), "y": elem(y)})
        }
        CFVerdict::NotExists(NonexistenceCertificate::NonPrincipal {
            gcd_ideal,
            numerator_ideal,
            denominator_ideal,
        }) => json!({
            "verdict": "not_exists",
            "certificate": {
                "kind": "non_principal",
                "gcd_ideal": gcd_ideal.to_string(),
                "numerator_ideal": numerator_ideal.to_string(),
                "denominator_ideal": denominator_ideal.to_string(),
            },
        }),
        CFVerdict::NotExists(NonexistenceCertificate::ReducedFormOutsideRing { num, den }) => json!({
            "verdict": "not_exists",
            "certificate": {"kind": "reduced_form_outside_ring", "num": poly(num), "den": poly(den)},
        }),
        CFVerdict::Unknown { bound } => json!({"verdict": "unknown", "bound": bound}),
    }
}

pub fn verdict(v: Verdict) -> Value {
    Value::String(
        match v {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Unknown => "unknown",
        }
        .into(),
    )
}

pub fn sufficiency(r: &SufficiencyReport) -> Value {
    let holds = |b: bool| verdict(if b { Verdict::Holds } else { Verdict::Fails });
    json!({
        "plant": tf(&r.plant),
        "condition_i": holds(r.cond_i),
        "condition_ii": {"verdict": verdict(r.cond_ii()), "causal": r.causal, "coprime_factorization": cf(&r.cf)},
        "condition_iii": {"verdict": holds(r.cond_iii_holds()), "certificate": coprime(&r.cond_iii)},
        "all_hold": r.all_hold(),
    })
}

/// Renders a report as indented `key: value` lines.
pub fn human(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(xs) => {
            let parts: Option<Vec<String>> = xs.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(_) => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(xs) => {
            for x in xs {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(x, depth + 1, out);
                    }
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v).unwrap_or_default())),
    }
}
