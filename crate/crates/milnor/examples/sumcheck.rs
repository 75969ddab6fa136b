// Sphere-relation coherence: the sum of the per-component values must
// reduce to zero modulo each degree's lattice.
use milnor::higher::higher_mu;
use milnor::tensor::IntervalTensor;
use milnor::{build, parse_pd};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let d = build(&parse_pd(&args[1]).unwrap()).unwrap();
    let maxd: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(5);
    let ledger = higher_mu(&d, maxd).unwrap().unwrap();
    for (entry, lat) in ledger.entries.iter().zip(&ledger.lattices) {
        let mut sum = IntervalTensor::zero(1, entry.degree as u32);
        for raw in &entry.raw {
            sum = &sum + raw;
        }
        println!(
            "degree {}: sum_in_lattice={} sum_zero={}",
            entry.degree,
            lat.contains(&sum),
            sum.is_zero()
        );
    }
}
