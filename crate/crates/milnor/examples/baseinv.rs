// Meridian-choice independence experiment: rotate which edge of each
// component is minimal (hence its arc the base arc) and compare ledgers.
use milnor::higher::higher_mu;
use milnor::{build, parse_pd};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let pd = parse_pd(&args[1]).unwrap();
    let maxd: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(4);
    let base = build(&pd).unwrap();
    let reference = higher_mu(&base, maxd).unwrap().unwrap();
    let q = base.num_components();

    // Collect the edge labels of each component, in traversal order.
    let mut comp_edges: Vec<Vec<u32>> = vec![Vec::new(); q];
    for j in 1..=q {
        for step in base.walk(j) {
            for &e in &base.arcs()[step.alpha].edges {
                comp_edges[j - 1].push(base.edge_label(e));
            }
        }
    }

    for j in 1..=q {
        for (rot, &start_label) in comp_edges[j - 1].iter().enumerate() {
            // Relabel: scale all labels by 100, then make `start_label` the
            // global minimum of component j while keeping other components'
            // relative order (their minima scale uniformly).
            let text = pd
                .crossings()
                .iter()
                .map(|x| {
                    let lab = |l: u32| {
                        if l == start_label {
                            100 * comp_edges[j - 1].iter().min().unwrap() - 50
                        } else {
                            100 * l
                        }
                    };
                    format!("X({},{},{},{})", lab(x[0]), lab(x[1]), lab(x[2]), lab(x[3]))
                })
                .collect::<Vec<_>>()
                .join(" ");
            let d2 = build(&parse_pd(&text).unwrap()).unwrap();
            let other = higher_mu(&d2, maxd).unwrap().unwrap();
            let mut report = Vec::new();
            for degree in reference.entries.iter().map(|e| e.degree) {
                let (ea, eb) = (reference.entry(degree).unwrap(), other.entry(degree).unwrap());
                let (la, lb) =
                    (reference.lattice(degree).unwrap(), other.lattice(degree).unwrap());
                let lat_eq = la.lattice_equal(lb);
                let vals: Vec<bool> = ea
                    .raw
                    .iter()
                    .zip(&eb.raw)
                    .map(|(x, y)| la.contains(&(x - y)))
                    .collect();
                report.push(format!(
                    "d{degree}: lat={} vals={}",
                    lat_eq,
                    vals.iter().map(|b| if *b { '1' } else { '0' }).collect::<String>()
                ));
            }
            println!("comp {j} rot {rot}: {}", report.join("  "));
        }
    }
}
