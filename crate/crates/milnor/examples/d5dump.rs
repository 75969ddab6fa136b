// Compare the computed degree-5 lattice with the published presentation in
// the A-F coordinate system.
use milnor::higher::{higher_mu, DeltaLattice};
use milnor::lattice::{tensor_coords, SpanSolver};
use milnor::tensor::{left_collecting_bracket, CentralTensor, IntervalTensor};
use milnor::{build, parse_pd};
use num_bigint::BigInt;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let d = build(&parse_pd(&args[1]).unwrap()).unwrap();
    let ledger = higher_mu(&d, 5).unwrap().unwrap();
    let l5 = ledger.lattice(5).unwrap();
    let s5: Vec<CentralTensor> = [
        [1u8, 2, 2, 2, 2], [1, 2, 2, 2, 1], [2, 1, 1, 1, 2],
        [2, 1, 1, 1, 1], [2, 1, 1, 2, 2], [1, 2, 2, 1, 1],
    ]
    .iter()
    .map(|w| left_collecting_bracket(w))
    .collect();
    let span: Vec<Vec<BigInt>> = s5.iter().map(|t| tensor_coords(t, 2)).collect();
    let solver = SpanSolver::new(32, &span);
    println!("computed Delta5 generators in A-F coordinates:");
    let mut coord_rows: Vec<Vec<BigInt>> = Vec::new();
    for g in l5.generators() {
        match solver.solve(&tensor_coords(g, 2)) {
            Some(c) => {
                coord_rows.push(c.clone());
            }
            None => println!("  OUTSIDE SPAN: {}", g.to_pairs_string()),
        }
    }
    let hnf = milnor::lattice::IntLattice::from_generators(6, &coord_rows);
    for row in hnf.rows() {
        let pretty: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("  [{}]", pretty.join(","));
    }
    // paper 6_1 presentation in the same coordinates
    for (name, v, w) in [
        ("61 <3,B+D-F,A+C+E>", vec![0i64, 1, 0, 1, 0, -1], vec![1i64, 0, 1, 0, 1, 0]),
        ("62 <3,B-E,A-C>", vec![0, 1, 0, 0, -1, 0], vec![1, 0, -1, 0, 0, 0]),
    ] {
        let mut rows: Vec<Vec<BigInt>> = (0..6)
            .map(|i| {
                (0..6).map(|j| BigInt::from(if i == j { 3 } else { 0 })).collect()
            })
            .collect();
        rows.push(v.iter().map(|&x| BigInt::from(x)).collect());
        rows.push(w.iter().map(|&x| BigInt::from(x)).collect());
        let cand = milnor::lattice::IntLattice::from_generators(6, &rows);
        println!("{name}:");
        for row in cand.rows() {
            let pretty: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            println!("  [{}]", pretty.join(","));
        }
        let _ = &cand;
    }
    let _ = DeltaLattice::initial(5, 2);
    let _ = IntervalTensor::zero(1, 5);
}
