use semiprim::config::Caps;
use semiprim::corpus;

#[test]
fn corpus_manifests_hold() {
    let entries = corpus::corpus(Caps::default()).expect("corpus builds");
    let mut failures = Vec::new();
    for entry in &entries {
        let t0 = std::time::Instant::now();
        let checks = corpus::verify_entry(entry);
        let elapsed = t0.elapsed();
        let bad: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        println!(
            "{:28} {:5} checks, {:3} failed, {:?}",
            entry.tag,
            checks.len(),
            bad.len(),
            elapsed
        );
        for c in &bad {
            println!("    FAIL {}: {}", c.name, c.detail);
            failures.push(format!("{}/{}", entry.tag, c.name));
        }
    }
    assert!(failures.is_empty(), "manifest failures: {failures:?}");
}
