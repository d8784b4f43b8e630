fn main() {
    for n in 3..=10usize {
        let t0 = std::time::Instant::now();
        let set = sortnet_core::filters::complete_filter_set(n).unwrap();
        println!("n={n}: |R_n|={} saturated={} ({:?})", set.len(), set.provenance.saturated_candidates, t0.elapsed());
    }
}
