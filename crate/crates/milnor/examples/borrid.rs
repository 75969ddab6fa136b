// Identify Borromean ledger values as ± left-collected brackets mod Δ.
use milnor::higher::higher_mu;
use milnor::tensor::left_collecting_bracket;
use milnor::{build, parse_pd};

fn words_with_multiset(letters: &[u8]) -> Vec<Vec<u8>> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut perm = sorted.clone();
    loop {
        out.push(perm.clone());
        // next_permutation
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
    let ledger = higher_mu(&d, 5).unwrap().unwrap();
    for degree in [4usize, 5] {
        let (entry, lat) = (ledger.entry(degree).unwrap(), ledger.lattice(degree).unwrap());
        for (idx, raw) in entry.raw.iter().enumerate() {
            let mut hits = Vec::new();
            // all multisets over {1,2,3} of this size with all letters present
            let mut letter_sets = Vec::new();
            if degree == 4 {
                for a in 1u8..=3 {
                    letter_sets.push(vec![a, 1, 2, 3]);
                }
            } else {
                for a in 1u8..=3 {
                    for b in a..=3 {
                        letter_sets.push(vec![a, b, 1, 2, 3]);
                    }
                }
            }
            for ls in letter_sets {
                for w in words_with_multiset(&ls) {
                    let t = left_collecting_bracket(&w);
                    for (sign, tt) in [(1i8, t.clone()), (-1, -&t)] {
                        if lat.contains(&(raw - &tt)) {
                            let ws: String = w.iter().map(|x| x.to_string()).collect();
                            hits.push(format!("{}{}", if sign > 0 { "+" } else { "-" }, ws));
                        }
                    }
                }
            }
            println!("deg{} comp{}: {}", degree, idx + 1, hits.join(" "));
        }
    }
}
