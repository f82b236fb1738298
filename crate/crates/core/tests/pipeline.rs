use stabring::closedloop::{feedback_matrix, is_stable};
use stabring::coprime::{
    generate_family_instance, verify_sufficiency, CFVerdict, FamilyParams, SufficiencyInstance, Verdict,
};
use stabring::elemfactor::{find_witnesses, SearchBounds};
use stabring::rings::{parse_transfer_function, RingDescriptor, RingElement, TransferFunction};
use stabring::synthesis::{synthesize, SynthesisConfig};

#[test]
fn delay_instance_satisfies_all_three_conditions() {
    let d = |cs: &[i64]| RingElement::delay_ints(cs).unwrap();
    let inst = SufficiencyInstance {
        a: d(&[1, 0, 0, -1]),
        b: d(&[1, 0, 0, 1]),
        a_prime: d(&[1, 0, -1]),
        b_prime: d(&[1, 0, 1, 0, 1]),
    };
    let rep = verify_sufficiency(&inst, 8).unwrap();
    assert!(rep.cond_i && rep.cond_iii_holds());
    assert!(matches!(rep.cf, CFVerdict::NotExists(_)));
    assert!(rep.all_hold());
    let c = synthesize(&rep.plant, &SynthesisConfig::default()).unwrap().controller;
    assert!(is_stable(&rep.plant, &c));
}

#[test]
fn odd_family_products_satisfy_all_conditions_on_maximal_orders() {
    for (x, y) in [(3, 5), (5, 7), (7, 9), (3, 11)] {
        let fp = FamilyParams { x, y };
        let rep = verify_sufficiency(&generate_family_instance(fp).unwrap(), 8).unwrap();
        assert!(rep.cond_i && rep.cond_iii_holds(), "({x}, {y})");
        if fp.ring().is_maximal_order() {
            assert_eq!(rep.cond_ii(), Verdict::Holds, "({x}, {y})");
        } else {
            assert_ne!(rep.cond_ii(), Verdict::Fails, "({x}, {y})");
        }
    }
}

#[test]
fn every_family_plant_is_stabilized() {
    for x in 2..=12i64 {
        for y in x + 1..=12 {
            let fp = FamilyParams { x, y };
            if fp.validate().is_err() {
                continue;
            }
            let p = fp.plant();
            let r = synthesize(&p, &SynthesisConfig::default()).unwrap();
            assert!(r.closed_loop.stable, "({x}, {y})");
        }
    }
}

#[test]
fn controllers_print_and_parse_back() {
    let cases = [
        (RingDescriptor::Quadratic { m: 5 }, "(7+i5)/6"),
        (RingDescriptor::Quadratic { m: 6 }, "(5-2*i6)/7"),
        (RingDescriptor::Delay, "(1-x^3)/(1-x^2)"),
        (RingDescriptor::Delay, "(2+3x^2)/(1-x^2+5x^3)"),
    ];
    for (ring, s) in cases {
        let p = parse_transfer_function(ring, s).unwrap();
        let c = synthesize(&p, &SynthesisConfig::default()).unwrap().controller;
        let back = parse_transfer_function(ring, &c.to_string()).unwrap();
        assert_eq!(back, c);
        assert!(feedback_matrix(&p, &back).unwrap().stable);
    }
}

#[test]
fn witnesses_for_small_quadratic_box() {
    // a tiny box forces the lattice step for the recipe-gap plant
    let p = parse_transfer_function(RingDescriptor::Quadratic { m: 5 }, "(7+i5)/6").unwrap();
    let pair = find_witnesses(&p, SearchBounds { quad_box: 0, delay_degree: 8 }).unwrap().unwrap();
    assert!(pair.verify(&p).unwrap());
    let c = synthesize(
        &p,
        &SynthesisConfig { bounds: SearchBounds { quad_box: 0, delay_degree: 8 }, ..SynthesisConfig::default() },
    )
    .unwrap()
    .controller;
    assert!(is_stable(&p, &c));
}

#[test]
fn zero_plant_uses_zero_controller() {
    let ring = RingDescriptor::Quadratic { m: 5 };
    let r = synthesize(&TransferFunction::zero(ring), &SynthesisConfig::default()).unwrap();
    assert!(r.controller.is_zero() && r.closed_loop.stable);
}
