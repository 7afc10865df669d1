use specint_core::fixtures::{run_suite, Outcome, Suite};

fn show(suite: Suite) -> bool {
    let r = run_suite(suite);
    for c in &r.cases {
        if c.status != Outcome::Pass {
            println!("{:>5} {:<40} err={:.3e} tol={:?} {}", c.status.name(), c.id, c.max_rel_err, c.tol, c.note.clone().unwrap_or_default());
        }
    }
    println!("{suite}: {} cases, failing {:?}", r.cases.len(), r.failing_ids());
    r.passed()
}

#[test]
fn tables_suite_passes() {
    assert!(show(Suite::Tables));
}

#[test]
fn identities_suite_passes() {
    assert!(show(Suite::Identities));
}

#[test]
fn laplace_suite_passes() {
    assert!(show(Suite::Laplace));
}

#[test]
fn eq19_suite_is_informational() {
    assert!(show(Suite::Eq19));
}

