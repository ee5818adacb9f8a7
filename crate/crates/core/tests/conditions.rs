mod common;

use antimagic_corona::conditions::check_conditions;
use antimagic_corona::labeling::{label_instance, LabelError};
use common::*;

#[test]
fn fixtures_meet_every_hypothesis() {
    for inst in [pan_example(), spider_example(), long_leg_example()] {
        let report = check_conditions(&inst);
        assert!(report.overall, "{report}");
    }
}

#[test]
fn each_violation_is_isolated() {
    let cases = violating_instances();
    assert_eq!(cases.len(), 20);
    for (id, inst) in &cases {
        let report = check_conditions(inst);
        assert_eq!(report.failed_ids(), vec![*id], "{report}");
    }
}

#[test]
fn violations_block_labeling_unless_forced() {
    for (id, inst) in violating_instances() {
        match label_instance(&inst, false) {
            Err(LabelError::ConditionsNotMet(report)) => assert_eq!(report.failed_ids(), vec![id]),
            other => panic!("{id}: {other:?}"),
        }
        let forced = label_instance(&inst, true).unwrap();
        assert!(
            is_permutation(&forced.labeling, inst.composite().edge_count()),
            "{id}"
        );
    }
}

#[test]
fn strict_pair_reports_values() {
    let inst = pan_instance(3, vec![c(3), k(2), k(2), k(2)]);
    let report = check_conditions(&inst);
    let c = report.get("pan.h0-h1-strict").unwrap();
    assert!(!c.holds);
    assert_eq!((c.lhs, c.rhs), (2, 1));
}

#[test]
fn spider_with_one_vertex_legs_is_unconditional() {
    let inst = spider_instance(1, vec![k(5), c(3), k(2)]);
    let report = check_conditions(&inst);
    assert!(report.overall);
    assert!(report.conditions.is_empty());
}

#[test]
fn forcing_past_a_hypothesis_can_repeat_sums() {
    let inst = pan_instance(3, vec![k(2), c(3), c(3), p(3)]);
    let out = label_instance(&inst, true).unwrap();
    let report = antimagic_corona::vertex_sums(inst.composite(), &out.labeling).unwrap();
    assert!(!report.is_antimagic);
    assert!(!report.clone().with_chain(&out.trace.chain).chain_holds());
}
