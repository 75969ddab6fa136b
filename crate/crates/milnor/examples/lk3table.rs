// Test a 2-component lk=3 candidate directly against the published rows.
use milnor::higher::{higher_mu, DeltaLattice};
use milnor::tensor::{left_collecting_bracket, CentralTensor, IntervalTensor};
use milnor::{build, parse_pd};
use num_bigint::BigInt;

fn combo(symbols: &[(&str, CentralTensor)], coeffs: &[i64]) -> CentralTensor {
    let mut t = IntervalTensor::zero(1, symbols[0].1.degree());
    for ((_, s), &c) in symbols.iter().zip(coeffs) {
        if c != 0 {
            t = &t + &s.scale(&BigInt::from(c));
        }
    }
    t
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let d = build(&parse_pd(&args[1]).unwrap()).unwrap();
    let ledger = higher_mu(&d, 5).unwrap().unwrap();
    let s4 = vec![
        ("b1", left_collecting_bracket(&[1, 2, 2, 2])),
        ("b2", left_collecting_bracket(&[2, 1, 1, 1])),
        ("b3", left_collecting_bracket(&[1, 2, 2, 1])),
    ];
    let s5 = vec![
        ("A", left_collecting_bracket(&[1, 2, 2, 2, 2])),
        ("B", left_collecting_bracket(&[1, 2, 2, 2, 1])),
        ("C", left_collecting_bracket(&[2, 1, 1, 1, 2])),
        ("D", left_collecting_bracket(&[2, 1, 1, 1, 1])),
        ("E", left_collecting_bracket(&[2, 1, 1, 2, 2])),
        ("F", left_collecting_bracket(&[1, 2, 2, 1, 1])),
    ];
    let (e3, l3) = (ledger.entry(3).unwrap(), ledger.lattice(3).unwrap());
    print!("mu3z={}{} ", l3.contains(&e3.raw[0]), l3.contains(&e3.raw[1]));
    let (e4, l4) = (ledger.entry(4).unwrap(), ledger.lattice(4).unwrap());
    // table candidates for mu4(1): 2b1+b2+b3 (6_1), 2b1+b2 (6_2); also their
    // negations and the component swap (swap b1<->b2, i.e. relabel).
    for (name, coeffs) in [("61", vec![2i64, 1, 1]), ("62", vec![2, 1, 0])] {
        let t = combo(&s4, &coeffs);
        for (idx, raw) in e4.raw.iter().enumerate() {
            if l4.contains(&(raw - &t)) {
                print!("mu4({})=+{} ", idx + 1, name);
            }
            if l4.contains(&(raw + &t)) {
                print!("mu4({})=-{} ", idx + 1, name);
            }
        }
    }
    // Delta5 against the two relevant presentations.
    let l5 = ledger.lattice(5).unwrap();
    for (name, v, w) in [
        ("61", vec![0i64, 1, 0, 1, 0, -1], vec![1i64, 0, 1, 0, 1, 0]),
        ("62", vec![0, 1, 0, 0, -1, 0], vec![1, 0, -1, 0, 0, 0]),
    ] {
        let mut gens: Vec<CentralTensor> =
            s5.iter().map(|(_, t)| t.scale(&BigInt::from(3))).collect();
        gens.push(combo(&s5, &v));
        gens.push(combo(&s5, &w));
        let candidate = DeltaLattice::from_generators(5, 2, gens);
        if l5.lattice_equal(&candidate) {
            print!("D5={name} ");
        }
    }
    // mu5 against the rows: 6_1: (-A-C, -A+C+D); 6_2: (D-F, B-F).
    let (e5, _) = (ledger.entry(5).unwrap(), ledger.lattice(5).unwrap());
    for (name, r1, r2) in [
        ("61", vec![-1i64, 0, -1, 0, 0, 0], vec![-1i64, 0, 1, 1, 0, 0]),
        ("62", vec![0, 0, 0, 1, 0, -1], vec![0, 1, 0, 0, 0, -1]),
    ] {
        let t1 = combo(&s5, &r1);
        let t2 = combo(&s5, &r2);
        let direct = l5.contains(&(&e5.raw[0] - &t1)) && l5.contains(&(&e5.raw[1] - &t2));
        let swapped = l5.contains(&(&e5.raw[0] - &t2)) && l5.contains(&(&e5.raw[1] - &t1));
        let neg = l5.contains(&(&e5.raw[0] + &t1)) && l5.contains(&(&e5.raw[1] + &t2));
        let negswap = l5.contains(&(&e5.raw[0] + &t2)) && l5.contains(&(&e5.raw[1] + &t1));
        print!("mu5[{name}]: direct={direct} swap={swapped} neg={neg} negswap={negswap} ");
    }
    println!();
}
