// Identify ledger values at a degree as ± left-collected brackets mod Δ.
use milnor::higher::higher_mu;
use milnor::lyndon;
use milnor::tensor::left_collecting_bracket;
use milnor::word::all_index_words;
use milnor::{build, parse_pd};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let d = build(&parse_pd(&args[1]).unwrap()).unwrap();
    let degree: usize = args[2].parse().unwrap();
    let q = d.num_components() as u8;
    let ledger = higher_mu(&d, degree).unwrap().unwrap();
    let (e, lat) = (ledger.entry(degree).unwrap(), ledger.lattice(degree).unwrap());
    for (idx, raw) in e.raw.iter().enumerate() {
        let dec = lyndon::decompose(raw, q);
        let terms: Vec<String> = dec
            .coeffs
            .iter()
            .map(|(w, c)| format!("{c}*[{}]", w.iter().map(|x| x.to_string()).collect::<String>()))
            .collect();
        println!("raw({}) = {}", idx + 1, terms.join(" + "));
        let mut hits = Vec::new();
        for w in all_index_words(q, degree) {
            if w.iter().skip(1).zip(w.iter()).all(|(a, b)| a == b) {
                continue; // constant words bracket to zero
            }
            let t = left_collecting_bracket(&w);
            if t.is_zero() {
                continue;
            }
            let ws: String = w.iter().map(|x| x.to_string()).collect();
            if lat.contains(&(raw - &t)) {
                hits.push(format!("+lcb({ws})"));
            }
            if lat.contains(&(raw + &t)) {
                hits.push(format!("-lcb({ws})"));
            }
        }
        println!("  matches: {}", hits.join(" "));
    }
}
