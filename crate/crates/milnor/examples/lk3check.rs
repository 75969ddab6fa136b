// Check a 2-component lk=3 candidate against the published invariant table:
// mu3 ≡ 0, mu4 as a b1/b2/b3 combination, the degree-5 lattice presentation,
// and mu5 in the A–F symbols.
use milnor::higher::{higher_mu, DeltaLattice};
use milnor::lattice::SpanSolver;
use milnor::lattice::tensor_coords;
use milnor::tensor::{left_collecting_bracket, CentralTensor, IntervalTensor};
use milnor::{build, parse_pd};
use num_bigint::BigInt;

fn symbols4() -> Vec<(&'static str, CentralTensor)> {
    vec![
        ("b1", left_collecting_bracket(&[1, 2, 2, 2])),
        ("b2", left_collecting_bracket(&[2, 1, 1, 1])),
        ("b3", left_collecting_bracket(&[1, 2, 2, 1])),
    ]
}

fn symbols5() -> Vec<(&'static str, CentralTensor)> {
    vec![
        ("A", left_collecting_bracket(&[1, 2, 2, 2, 2])),
        ("B", left_collecting_bracket(&[1, 2, 2, 2, 1])),
        ("C", left_collecting_bracket(&[2, 1, 1, 1, 2])),
        ("D", left_collecting_bracket(&[2, 1, 1, 1, 1])),
        ("E", left_collecting_bracket(&[2, 1, 1, 2, 2])),
        ("F", left_collecting_bracket(&[1, 2, 2, 1, 1])),
    ]
}

/// Express `t` modulo `lat` over the symbol tensors, searching small
/// coefficient combinations.
fn express(t: &CentralTensor, lat: &DeltaLattice, symbols: &[(&str, CentralTensor)]) -> String {
    let range: Vec<i64> = vec![0, 1, -1, 2, -2, 3, -3];
    let n = symbols.len();
    let mut counters = vec![0usize; n];
    loop {
        let coeffs: Vec<i64> = counters.iter().map(|&c| range[c]).collect();
        let mut candidate = IntervalTensor::zero(1, t.degree());
        for ((_, s), &c) in symbols.iter().zip(&coeffs) {
            if c != 0 {
                candidate = &candidate + &s.scale(&BigInt::from(c));
            }
        }
        if lat.contains(&(t - &candidate)) {
            let mut parts = Vec::new();
            for ((name, _), &c) in symbols.iter().zip(&coeffs) {
                match c {
                    0 => {}
                    1 => parts.push(format!("+{name}")),
                    -1 => parts.push(format!("-{name}")),
                    c => parts.push(format!("{c:+}{name}")),
                }
            }
            return if parts.is_empty() { "0".into() } else { parts.join("") };
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                return format!("UNEXPRESSED {}", t.to_pairs_string());
            }
            counters[i] += 1;
            if counters[i] < range.len() {
                break;
            }
            counters[i] = 0;
            i += 1;
        }
    }
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let d = build(&parse_pd(&args[1]).unwrap()).unwrap();
    let ledger = higher_mu(&d, 5).unwrap().unwrap();
    println!("m = {}", ledger.first_degree);
    for degree in [3usize, 4, 5] {
        let (e, lat) = (ledger.entry(degree).unwrap(), ledger.lattice(degree).unwrap());
        let symbols = match degree {
            4 => symbols4(),
            5 => symbols5(),
            _ => vec![],
        };
        for (idx, raw) in e.raw.iter().enumerate() {
            if degree == 3 {
                println!("mu3({}) zero mod D3: {}", idx + 1, lat.contains(raw));
            } else {
                println!("mu{}({}) = {}", degree, idx + 1, express(raw, lat, &symbols));
            }
        }
    }
    // Describe Delta5 against the candidate presentations <3, X, Y>.
    let lat5 = ledger.lattice(5).unwrap();
    let s5 = symbols5();
    let combos: Vec<(&str, Vec<i64>)> = vec![
        ("B+D-F", vec![0, 1, 0, 1, 0, -1]),
        ("A+C+E", vec![1, 0, 1, 0, 1, 0]),
        ("B-E", vec![0, 1, 0, 0, -1, 0]),
        ("A-C", vec![1, 0, -1, 0, 0, 0]),
        ("B-D+F", vec![0, 1, 0, -1, 0, 1]),
        ("A-C-E", vec![1, 0, -1, 0, -1, 0]),
    ];
    for (pair_name, pairs) in [
        ("<3,B+D-F,A+C+E>", [0usize, 1]),
        ("<3,B-E,A-C>", [2, 3]),
        ("<3,B-D+F,A-C-E>", [4, 5]),
    ] {
        let mut gens: Vec<CentralTensor> = s5.iter().map(|(_, t)| t.scale(&BigInt::from(3))).collect();
        for &ci in &pairs {
            let mut t = IntervalTensor::zero(1, 5);
            for ((_, s), &c) in s5.iter().zip(&combos[ci].1) {
                if c != 0 {
                    t = &t + &s.scale(&BigInt::from(c));
                }
            }
            gens.push(t);
        }
        let candidate = DeltaLattice::from_generators(5, 2, gens);
        println!("Delta5 == {pair_name}: {}", lat5.lattice_equal(&candidate));
    }
    // Where does Delta5 actually sit relative to the 6-symbol span?
    let span: Vec<Vec<BigInt>> = s5.iter().map(|(_, t)| tensor_coords(t, 2)).collect();
    let solver = SpanSolver::new(32, &span);
    let mut inside = true;
    for row in lat5.generators() {
        if solver.solve(&tensor_coords(row, 2)).is_none() {
            inside = false;
        }
    }
    println!("Delta5 generators inside A-F span: {inside}");
    println!("Delta5 rank {} divisors {:?}", lat5.rank(),
        lat5.elementary_divisors().iter().map(|x| x.to_string()).collect::<Vec<_>>());
}
