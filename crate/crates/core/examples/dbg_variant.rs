fn main() {
    let a: Vec<String> = std::env::args().collect();
    let n: usize = a[1].parse().unwrap();
    let b: u64 = a[2].parse().unwrap();
    let t0 = std::time::Instant::now();
    let e = frieze_core::variant::variant_enumerate(n, b).unwrap();
    println!(
        "n={} bound={}: count={} with_mirror={} max_entry={} ({:?})",
        n, b, e.count, e.count_with_mirror, e.max_entry, t0.elapsed()
    );
}
