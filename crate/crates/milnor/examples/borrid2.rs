// Identify ledger values as ± arbitrary bracketings of 4-letter words mod Δ.
use milnor::higher::higher_mu;
use milnor::tensor::{bracket, CentralTensor, IntervalTensor};
use milnor::{build, parse_pd};

fn bracketings(word: &[u8]) -> Vec<(String, CentralTensor)> {
    if word.len() == 1 {
        return vec![(format!("{}", word[0]), IntervalTensor::generator(1, word[0]))];
    }
    let mut out = Vec::new();
    for split in 1..word.len() {
        for (ls, lt) in bracketings(&word[..split]) {
            for (rs, rt) in bracketings(&word[split..]) {
                if lt.is_zero() || rt.is_zero() {
                    out.push((format!("[{ls},{rs}]"), IntervalTensor::zero(1, word.len() as u32)));
                } else {
                    out.push((format!("[{ls},{rs}]"), bracket(&lt, &rt)));
                }
            }
        }
    }
    out
}

fn words_with_multiset(letters: &[u8]) -> Vec<Vec<u8>> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut perm = sorted;
    loop {
        out.push(perm.clone());
        let n = perm.len();
        let mut i = n - 1;
        while i > 0 && perm[i - 1] >= perm[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 1] {
            j -= 1;
        }
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let d = build(&parse_pd(&args[1]).unwrap()).unwrap();
    let ledger = higher_mu(&d, 4).unwrap().unwrap();
    let degree = 4usize;
    let (entry, lat) = (ledger.entry(degree).unwrap(), ledger.lattice(degree).unwrap());
    for (idx, raw) in entry.raw.iter().enumerate() {
        let mut hits = Vec::new();
        for a in 1u8..=3 {
            for w in words_with_multiset(&[a, 1, 2, 3]) {
                for (name, t) in bracketings(&w) {
                    if t.is_zero() {
                        continue;
                    }
                    if lat.contains(&(raw - &t)) {
                        hits.push(format!("+{name}"));
                    }
                    if lat.contains(&(raw + &t)) {
                        hits.push(format!("-{name}"));
                    }
                }
            }
        }
        println!("deg4 comp{}: {}", idx + 1, hits.join(" "));
    }
}
