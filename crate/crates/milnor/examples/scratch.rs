// Throwaway exploration driver used while curating the link catalog.
use milnor::engine::{first_nonvanishing, Outcome};
use milnor::higher::higher_mu;
use milnor::lyndon;
use milnor::tensor::{left_collecting_bracket, CentralTensor};
use milnor::{build, parse_pd, Diagram};

fn decomp_string(t: &CentralTensor, q: u8) -> String {
    let dec = lyndon::decompose(t, q);
    if !dec.is_exact() {
        return format!("NONLIE {}", t.to_pairs_string());
    }
    if dec.coeffs.is_empty() {
        return "0".into();
    }
    dec.coeffs
        .iter()
        .map(|(w, c)| {
            let ws: String = w.iter().map(|x| x.to_string()).collect();
            format!("{c}*[{ws}]")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn quick(d: &Diagram, max: usize) {
    let q = d.num_components() as u8;
    let lk = d.linking_matrix();
    let alternating = d.arcs().iter().all(|a| a.edges.len() == 2);
    let lk_flat: Vec<String> = lk.iter().flat_map(|r| r.iter().map(|v| v.to_string())).collect();
    println!("q={q} c={} alt={alternating} lk={}", d.num_crossings(), lk_flat.join(","));
    for j in 1..=d.num_components() {
        let labels: Vec<String> = d
            .walk(j)
            .iter()
            .flat_map(|s| d.arcs()[s.alpha].edges.iter().map(|&e| d.edge_label(e).to_string()))
            .collect();
        println!("edges {j} = {}", labels.join(","));
    }
    match first_nonvanishing(d, max).unwrap() {
        Outcome::TrivialUpTo(h) => println!("m=trivial({h})"),
        Outcome::Found(r) => {
            println!("m={}", r.degree);
            for (j, t) in r.psi.iter().enumerate() {
                println!("psi {} = {}", j + 1, decomp_string(t, q));
            }
        }
    }
}

fn ledger(d: &Diagram, max: usize) {
    let q = d.num_components() as u8;
    let ledger = match higher_mu(d, max).unwrap() {
        Some(l) => l,
        None => {
            println!("m=trivial({max})");
            return;
        }
    };
    println!("m={}", ledger.first_degree);
    for (entry, lat) in ledger.entries.iter().zip(&ledger.lattices) {
        let div: Vec<String> =
            lat.elementary_divisors().iter().map(|x| x.to_string()).collect();
        println!("delta {} rank={} div=[{}]", entry.degree, lat.rank(), div.join(","));
        for (j, (raw, red)) in entry.raw.iter().zip(&entry.reduced).enumerate() {
            println!("raw {} {} = {}", entry.degree, j + 1, decomp_string(raw, q));
            println!("red {} {} = {}", entry.degree, j + 1, red.to_pairs_string());
        }
    }
    // Whitehead-class refined check: degree-5 value vs ±[[[[λ1^(2),λ2^(1)],λ3^(1)],λ4^(1)],λ5^(2)],
    // degrees 6, 7 reduced to zero.
    if q == 2 && ledger.first_degree == 4 {
        for word in [&[2u8, 1, 1, 1, 2][..], &[1, 2, 2, 2, 1]] {
            let target = left_collecting_bracket(word);
            if let (Some(e), Some(lat)) = (ledger.entry(5), ledger.lattice(5)) {
                for (j, raw) in e.raw.iter().enumerate() {
                    let plus = lat.contains(&(raw - &target));
                    let minus = lat.contains(&(raw + &target));
                    let ws: String = word.iter().map(|x| x.to_string()).collect();
                    println!("deg5 {} lcb({ws}) plus={plus} minus={minus}", j + 1);
                }
            }
        }
        for degree in [6usize, 7] {
            if let Some(e) = ledger.entry(degree) {
                let zero = e.reduced.iter().all(|t| t.is_zero());
                println!("deg{degree} zero={zero}");
            }
        }
    }
    // Borromean targets, swept over component relabelings: does some
    // permutation transport the computed tuple onto the paper's?
    if q == 3 && ledger.first_degree == 3 {
        let perms: [[u8; 3]; 6] =
            [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
        for perm in perms {
            let apply = |j: u8| perm[(j - 1) as usize];
            let transport = |t: &CentralTensor| -> CentralTensor {
                CentralTensor::from_terms(
                    1,
                    t.degree(),
                    t.terms().map(|(w, c)| {
                        let mapped: milnor::IndexWord = w.iter().map(|&x| apply(x)).collect();
                        (mapped, c.clone())
                    }),
                )
            };
            let mut oks: Vec<bool> = Vec::new();
            for j in 1u8..=3 {
                let rot = |k: u8| 1 + (j - 1 + k) % 3;
                let idx = (apply(j) - 1) as usize;
                if let Some(e) = ledger.entry(3) {
                    let t = milnor::tensor::bracket(
                        &CentralTensor::generator(1, rot(0)),
                        &left_collecting_bracket(&[rot(1), rot(2)]),
                    );
                    oks.push(e.raw[idx] == transport(&t));
                }
                if let (Some(e), Some(lat)) = (ledger.entry(4), ledger.lattice(4)) {
                    let t = transport(&left_collecting_bracket(&[rot(0), rot(1), rot(1), rot(2)]));
                    oks.push(lat.contains(&(&e.raw[idx] - &t)));
                }
                if let (Some(e), Some(lat)) = (ledger.entry(5), ledger.lattice(5)) {
                    let t = transport(&left_collecting_bracket(&[
                        rot(0), rot(1), rot(1), rot(1), rot(2),
                    ]));
                    oks.push(lat.contains(&(&e.raw[idx] - &t)));
                }
            }
            let flags: String = oks.iter().map(|b| if *b { '1' } else { '0' }).collect();
            println!("borrperm {} {} {} {}", perm[0], perm[1], perm[2], flags);
        }
    }
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    if args[1] == "batch" {
        let max: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(6);
        // Optional filter: only engine-run diagrams with this many
        // components (and zero total pairwise linking when set).
        let want_q: Option<usize> = args.get(3).and_then(|s| s.parse().ok());
        let mut line = String::new();
        while std::io::stdin().read_line(&mut line).unwrap_or(0) > 0 {
            let text = line.trim().to_string();
            line.clear();
            if text.is_empty() {
                continue;
            }
            match parse_pd(&text).ok().and_then(|pd| build(&pd).ok()) {
                None => println!("SKIP"),
                Some(d) => {
                    let ok = match want_q {
                        None => true,
                        Some(q) => {
                            d.num_components() == q
                                && d.linking_matrix()
                                    .iter()
                                    .enumerate()
                                    .all(|(i, row)| {
                                        row.iter().enumerate().all(|(j, v)| i == j || *v == 0)
                                    })
                        }
                    };
                    if ok {
                        quick(&d, max);
                    } else {
                        println!("FILTERED");
                    }
                }
            }
            println!("END");
        }
        return;
    }
    let pd_text = &args[1];
    let mode = args.get(2).map(String::as_str).unwrap_or("quick");
    let max: usize = args.get(3).and_then(|s| s.parse().ok()).unwrap_or(6);
    let d = build(&parse_pd(pd_text).expect("parse")).expect("build");
    match mode {
        "quick" => quick(&d, max),
        "ledger" => ledger(&d, max),
        other => panic!("unknown mode {other}"),
    }
}
