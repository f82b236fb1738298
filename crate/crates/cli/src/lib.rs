//! Command implementations behind the `stabring` binary. Each command
//! returns a JSON report and an exit status.

pub mod plantfile;
pub mod report;

use serde_json::{json, Value};
use stabring::closedloop::feedback_matrix;
use stabring::coprime::{
    cf_exists, generate_family_instance, verify_sufficiency, CFVerdict, FamilyParams, DEFAULT_DELAY_BOUND,
    DEFAULT_QUAD_BOX,
};
use stabring::elemfactor::{delay_gcd, find_witnesses, quadratic_gcd_data, SearchBounds, WitnessTrace};
use stabring::rings::{
    causal_representation, contains, parse_element, parse_transfer_function, RingDescriptor, RingElement,
    TransferFunction,
};
use stabring::synthesis::{synthesize, SynthesisConfig};
use stabring::Error;

use plantfile::{Loaded, ParseError};

/// Process exit statuses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified = 0,
    ParseError = 2,
    Unverified = 3,
    SynthesisFailure = 4,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub status: Status,
}

/// Command-line overrides of the plant file's config.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub bound: Option<usize>,
    pub search_box: Option<u64>,
    pub omega_max: Option<u32>,
    pub r1: Option<String>,
    pub r2: Option<String>,
    pub latex: bool,
}

impl Options {
    fn bound(&self, l: &Loaded) -> usize {
        self.bound.or(l.config.bound).unwrap_or(DEFAULT_DELAY_BOUND)
    }

    fn bounds(&self, l: &Loaded) -> SearchBounds {
        SearchBounds {
            quad_box: self.search_box.or(l.config.search_box).unwrap_or(DEFAULT_QUAD_BOX as u64),
            delay_degree: self.bound(l),
        }
    }

    fn synthesis_config(&self, l: &Loaded) -> Result<SynthesisConfig, ParseError> {
        let param = |flag: &str, s: Option<&String>| -> Result<Option<RingElement>, ParseError> {
            s.map(|s| {
                parse_element(l.ring, s).map_err(|e| {
                    let mut pe = ParseError::from(e);
                    pe.message = format!("--{flag}: {}", pe.message);
                    pe
                })
            })
            .transpose()
        };
        Ok(SynthesisConfig {
            omega_max: self.omega_max.or(l.config.omega_max).unwrap_or(32),
            r1: param("r1", self.r1.as_ref().or(l.config.r1.as_ref()))?,
            r2: param("r2", self.r2.as_ref().or(l.config.r2.as_ref()))?,
            bounds: self.bounds(l),
        })
    }
}

fn latex(v: &mut Value, items: &[(&str, &TransferFunction)]) {
    let map: serde_json::Map<String, Value> =
        items.iter().map(|(k, p)| (k.to_string(), Value::String(p.to_latex()))).collect();
    v["latex"] = Value::Object(map);
}

fn header(command: &str, l: &Loaded) -> Value {
    json!({"command": command, "ring": report::ring(l.ring), "plant": report::tf(&l.plant)})
}

pub fn analyze(l: &Loaded, opts: &Options) -> Outcome {
    let p = &l.plant;
    let mut v = header("analyze", l);
    let rep = causal_representation(p);
    v["causal"] = json!(rep.is_some());
    v["in_ring"] = json!(contains(p).is_some());
    if opts.latex {
        latex(&mut v, &[("plant", p)]);
    }
    let Some(rep) = rep else {
        v["stabilizable"] = json!("not applicable: plant is not causal");
        return Outcome { report: v, status: Status::Unverified };
    };
    v["representation"] = json!({"num": report::elem(&rep.num), "den": report::elem(&rep.den)});
    v["gcd"] = match l.ring {
        RingDescriptor::Quadratic { .. } => {
            let t = quadratic_gcd_data(p).expect("quadratic");
            json!({"norm": t.norm.to_string(), "g": t.g.to_string(), "alpha_prime": t.alpha_prime.to_string()})
        }
        RingDescriptor::Delay => json!({"g": report::poly(&delay_gcd(p).expect("causal"))}),
    };
    if contains(p).is_some() {
        v["stabilizable"] = json!(true);
        v["witnesses"] = Value::Null;
        v["note"] = json!("plant lies in the stable ring; c = 0 stabilizes it");
        return Outcome { report: v, status: Status::Verified };
    }
    match find_witnesses(p, opts.bounds(l)) {
        Ok(Some(w)) => {
            v["stabilizable"] = json!(true);
            if let WitnessTrace::Search(_) = w.trace {
                v["note"] = json!("witnesses found by search; the direct construction does not apply");
            }
            v["witnesses"] = report::witness(&w);
            Outcome { report: v, status: Status::Verified }
        }
        Ok(None) => {
            v["stabilizable"] = match l.ring {
                RingDescriptor::Quadratic { .. } => json!(false),
                RingDescriptor::Delay => json!("unknown"),
            };
            v["witnesses"] = Value::Null;
            Outcome { report: v, status: Status::Unverified }
        }
        Err(e) => {
            v["stabilizable"] = json!("unknown");
            v["error"] = json!(e.to_string());
            Outcome { report: v, status: Status::Unverified }
        }
    }
}

fn failed_condition(e: &Error) -> &'static str {
    match e {
        Error::NotCausal => "causality",
        Error::WitnessSearchExhausted(_) => "witness search",
        Error::OmegaMaxExceeded(_) => "condition (ii)",
        Error::ConditionIiiViolated => "condition (iii)",
        Error::VerificationFailed => "closed-loop verification",
        Error::Precondition(_) => "condition (i)",
        _ => "input",
    }
}

pub fn synthesize_cmd(l: &Loaded, opts: &Options) -> Result<Outcome, ParseError> {
    let cfg = opts.synthesis_config(l)?;
    let mut v = header("synthesize", l);
    v["config"] = json!({
        "omega_max": cfg.omega_max,
        "box": cfg.bounds.quad_box,
        "bound": cfg.bounds.delay_degree,
        "r1": cfg.r1.as_ref().map(report::elem),
        "r2": cfg.r2.as_ref().map(report::elem),
    });
    match synthesize(&l.plant, &cfg) {
        Ok(r) => {
            if opts.latex {
                latex(&mut v, &[("plant", &l.plant), ("controller", &r.controller)]);
            }
            v["result"] = report::synthesis(&r);
            v["verified"] = json!(r.closed_loop.stable);
            let status = if r.closed_loop.stable { Status::Verified } else { Status::Unverified };
            Ok(Outcome { report: v, status })
        }
        Err(e) => {
            v["verified"] = json!(false);
            v["failure"] = json!({"condition": failed_condition(&e), "message": e.to_string()});
            Ok(Outcome { report: v, status: Status::SynthesisFailure })
        }
    }
}

pub fn verify_cmd(l: &Loaded, controller: Option<&str>, opts: &Options) -> Result<Outcome, ParseError> {
    let c = match controller {
        Some(s) => parse_transfer_function(l.ring, s).map_err(|e| {
            let mut pe = ParseError::from(e);
            pe.message = format!("--controller: {}", pe.message);
            pe
        })?,
        None => l.controller.clone().ok_or_else(|| ParseError::plain("no controller given (file or --controller)"))?,
    };
    let mut v = header("verify", l);
    v["controller"] = report::tf(&c);
    if opts.latex {
        latex(&mut v, &[("plant", &l.plant), ("controller", &c)]);
    }
    match feedback_matrix(&l.plant, &c) {
        Ok(h) => {
            v["closed_loop"] = report::matrix(&h);
            v["stable"] = json!(h.stable);
            Ok(Outcome { report: v, status: if h.stable { Status::Verified } else { Status::Unverified } })
        }
        Err(e) => {
            v["stable"] = json!(false);
            v["closed_loop"] = json!({"well_posed": false, "message": e.to_string()});
            Ok(Outcome { report: v, status: Status::Unverified })
        }
    }
}

pub fn coprime_factorization_cmd(l: &Loaded, opts: &Options) -> Outcome {
    let bound = opts.bound(l);
    let mut v = header("coprime-factorization", l);
    v["bound"] = json!(bound);
    let verdict = if l.plant.is_zero() {
        let (z, o) = (RingElement::zero(l.ring), RingElement::one(l.ring));
        Ok(CFVerdict::Exists { num: z.clone(), den: o.clone(), x: z, y: o })
    } else {
        cf_exists(&l.plant, bound)
    };
    match verdict {
        Ok(cf) => {
            if matches!(cf, CFVerdict::Unknown { .. }) && !l.ring.is_maximal_order() {
                v["note"] = json!(format!(
                    "{}; only existence can be certified, within the bound",
                    Error::NotMaximalOrder(match l.ring {
                        RingDescriptor::Quadratic { m } => m,
                        RingDescriptor::Delay => 0,
                    })
                ));
            }
            let status = if matches!(cf, CFVerdict::Unknown { .. }) { Status::Unverified } else { Status::Verified };
            v["coprime_factorization"] = report::cf(&cf);
            Outcome { report: v, status }
        }
        Err(e) => {
            v["error"] = json!(e.to_string());
            Outcome { report: v, status: Status::Unverified }
        }
    }
}

pub fn family_cmd(x: i64, y: i64, opts: &Options) -> Result<Outcome, ParseError> {
    let fp = FamilyParams { x, y };
    let inst = generate_family_instance(fp).map_err(|e| ParseError::plain(e.to_string()))?;
    let p = fp.plant();
    let mut v = json!({
        "command": "family",
        "x": x,
        "y": y,
        "ring": report::ring(fp.ring()),
        "plant": report::tf(&p),
        "instance": {
            "a": report::elem(&inst.a),
            "b": report::elem(&inst.b),
            "a_prime": report::elem(&inst.a_prime),
            "b_prime": report::elem(&inst.b_prime),
        },
    });
    let bound = opts.bound.unwrap_or(DEFAULT_DELAY_BOUND);
    let rep = verify_sufficiency(&inst, bound).map_err(|e| ParseError::plain(e.to_string()))?;
    v["conditions"] = report::sufficiency(&rep);
    let loaded = Loaded { ring: fp.ring(), plant: p.clone(), controller: None, config: Default::default() };
    let synth = synthesize_cmd(&loaded, opts)?;
    let synth_ok = synth.status == Status::Verified;
    v["synthesis"] = synth.report;
    let status = match (synth_ok, rep.all_hold()) {
        (false, _) => Status::SynthesisFailure,
        (true, false) => Status::Unverified,
        (true, true) => Status::Verified,
    };
    Ok(Outcome { report: v, status })
}

#[cfg(test)]
mod tests {
    use super::*;
    use plantfile::PlantFile;

    fn load(text: &str) -> Loaded {
        PlantFile::parse(text).unwrap().load().unwrap()
    }

    const EX1: &str = r#"{"ring": {"kind": "quadratic", "m": 5},
        "plant": {"num": {"re": "1", "im": "1"}, "den": {"re": "2", "im": "0"}}}"#;
    const EX2: &str = r#"{"ring": {"kind": "delay"},
        "plant": {"num": {"coeffs": ["1", "0", "0", "-1"]}, "den": {"coeffs": ["1", "0", "-1"]}}}"#;

    #[test]
    fn analyze_examples() {
        let o = analyze(&load(EX1), &Options::default());
        assert_eq!(o.status, Status::Verified);
        assert_eq!(o.report["witnesses"]["lambda1"], "3");
        assert_eq!(o.report["witnesses"]["lambda2"], "2");
        let o = analyze(&load(EX2), &Options::default());
        assert_eq!(o.report["witnesses"]["lambda1"], "1 - x^3");
        assert_eq!(o.report["witnesses"]["lambda2"], "1 - 7/9*x^2 + 2/9*x^3");
        assert_eq!(o.report["gcd"]["g"], "1 - x");
    }

    #[test]
    fn synthesize_examples() {
        let o = synthesize_cmd(&load(EX1), &Options::default()).unwrap();
        assert_eq!(o.report["result"]["controller"], "(-1+i5)/2");
        assert_eq!(o.status, Status::Verified);
        let o = synthesize_cmd(&load(EX1), &Options { r1: Some("1+".into()), ..Options::default() }).unwrap_err();
        assert!(o.to_string().contains("--r1"));
    }

    #[test]
    fn verify_and_cf() {
        let o = verify_cmd(&load(EX1), Some("(-1+i5)/2"), &Options::default()).unwrap();
        assert_eq!(o.status, Status::Verified);
        assert_eq!(o.report["closed_loop"]["entries"][0][1], "1+i5");
        let o = verify_cmd(&load(EX1), Some("0"), &Options::default()).unwrap();
        assert_eq!(o.status, Status::Unverified);
        assert!(verify_cmd(&load(EX1), None, &Options::default()).is_err());
        let o = coprime_factorization_cmd(&load(EX1), &Options::default());
        assert_eq!(o.report["coprime_factorization"]["certificate"]["denominator_ideal"], "(2, 1+i5)");
    }

    #[test]
    fn family_statuses() {
        assert!(family_cmd(2, 5, &Options::default()).unwrap_err().message.contains("not square"));
        let o = family_cmd(2, 3, &Options::default()).unwrap();
        assert_eq!(o.report["conditions"]["condition_iii"]["verdict"], "fails");
        assert_eq!(o.status, Status::Unverified);
        let o = family_cmd(3, 4, &Options::default()).unwrap();
        assert_eq!(o.report["synthesis"]["verified"], true);
    }
}
