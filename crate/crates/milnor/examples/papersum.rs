// Is the worked example's displayed degree-4 tuple sum-coherent with the
// computed lattice?
use milnor::higher::higher_mu;
use milnor::tensor::{left_collecting_bracket, IntervalTensor};
use milnor::{build, parse_pd};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let d = build(&parse_pd(&args[1]).unwrap()).unwrap();
    let ledger = higher_mu(&d, 5).unwrap().unwrap();
    for degree in [4usize, 5] {
        let lat = ledger.lattice(degree).unwrap();
        let mut sum = IntervalTensor::zero(1, degree as u32);
        for j in 1u8..=3 {
            let rot = |k: u8| 1 + (j - 1 + k) % 3;
            let word: Vec<u8> = if degree == 4 {
                vec![rot(0), rot(1), rot(1), rot(2)]
            } else {
                vec![rot(0), rot(1), rot(1), rot(1), rot(2)]
            };
            sum = &sum + &left_collecting_bracket(&word);
        }
        println!("degree {degree}: paper tuple sum in lattice: {}", lat.contains(&sum));
        // individual paper values against each computed component, any sign
        for j in 1u8..=3 {
            let rot = |k: u8| 1 + (j - 1 + k) % 3;
            let word: Vec<u8> = if degree == 4 {
                vec![rot(0), rot(1), rot(1), rot(2)]
            } else {
                vec![rot(0), rot(1), rot(1), rot(1), rot(2)]
            };
            let t = left_collecting_bracket(&word);
            let e = ledger.entry(degree).unwrap();
            let mut hits: Vec<String> = Vec::new();
            for idx in 0..3usize {
                if lat.contains(&(&e.raw[idx] - &t)) {
                    hits.push(format!("comp{}+", idx + 1));
                }
                if lat.contains(&(&e.raw[idx] + &t)) {
                    hits.push(format!("comp{}-", idx + 1));
                }
            }
            println!("  paper j={j}: {}", hits.join(" "));
        }
    }
}
