use compcodes::bincodes::Family;
use compcodes::repro::{self, ReproTarget};

fn assert_passes(t: ReproTarget) {
    let report = repro::run(t).unwrap();
    assert!(!report.checks.is_empty());
    for c in &report.checks {
        assert!(c.ok(), "{t}: {c}");
    }
}

#[test]
fn hamming() {
    assert_passes(ReproTarget::HammingQ8);
}

#[test]
fn example5() {
    assert_passes(ReproTarget::Example5D16);
}

#[test]
fn example6() {
    assert_passes(ReproTarget::Example6Sigma);
}

#[test]
fn example7() {
    assert_passes(ReproTarget::Example7Omega);
}

#[test]
fn table1() {
    assert_passes(ReproTarget::Table1);
}

#[test]
fn table2() {
    assert_passes(ReproTarget::Table2);
    let class = repro::classify68(&repro::table2_code().unwrap()).unwrap();
    assert_eq!(class.family, Family::W68_2);
}

#[test]
fn chain_starts_on_the_published_first_step() {
    let chain = repro::table3_chain(&repro::table2_code().unwrap()).unwrap();
    assert_eq!(chain.len(), repro::TABLE3.len());
    for code in &chain {
        assert!(code.is_self_dual());
        assert_eq!((code.len(), code.dim()), (68, 34));
    }
    let first = repro::classify68(&chain[0]).unwrap();
    let (_, gamma, beta) = repro::TABLE3[0];
    assert_eq!((first.family, first.gamma, first.beta), (Family::W68_2, Some(gamma), beta));
}
