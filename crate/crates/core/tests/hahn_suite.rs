use sl2hahn::hahn::{verify_hahn_identities, verify_kernel_and_inverse, DEFAULT_DEGREE_BOUND};

#[test]
fn identities_certify_at_default_bound() {
    let report = verify_hahn_identities(DEFAULT_DEGREE_BOUND);
    for item in &report.items {
        println!("{} {} {}", item.status.as_str(), item.name, item.detail);
    }
    assert!(report.all_passed());
}

#[test]
fn kernel_and_inverse_at_default_bound() {
    let report = verify_kernel_and_inverse(DEFAULT_DEGREE_BOUND);
    for item in &report.items {
        println!("{} {} {}", item.status.as_str(), item.name, item.detail);
    }
    assert!(report.all_passed());
}
