// Internal coherence of the published lk=3 table: the degree-5 lattice
// should be generated by 3·(everything) plus the brackets of the degree-4
// value with the two generators.
use milnor::lattice::{tensor_coords, IntLattice, SpanSolver};
use milnor::tensor::{bracket, left_collecting_bracket, CentralTensor, IntervalTensor};
use num_bigint::BigInt;

fn main() {
    let s5: Vec<CentralTensor> = [
        [1u8, 2, 2, 2, 2], [1, 2, 2, 2, 1], [2, 1, 1, 1, 2],
        [2, 1, 1, 1, 1], [2, 1, 1, 2, 2], [1, 2, 2, 1, 1],
    ]
    .iter()
    .map(|w| left_collecting_bracket(w))
    .collect();
    let span: Vec<Vec<BigInt>> = s5.iter().map(|t| tensor_coords(t, 2)).collect();
    let solver = SpanSolver::new(32, &span);

    let b1 = left_collecting_bracket(&[1, 2, 2, 2]);
    let b2 = left_collecting_bracket(&[2, 1, 1, 1]);
    let b3 = left_collecting_bracket(&[1, 2, 2, 1]);

    for (name, t) in [
        ("2b1+b2+b3", &(&(&b1.scale(&BigInt::from(2)) + &b2) + &b3)),
        ("2b1+b2", &(&b1.scale(&BigInt::from(2)) + &b2)),
        ("-(2b1+b2+b3)", &(&(&b1.scale(&BigInt::from(-2)) - &b2) - &b3)),
    ] {
        let mut rows: Vec<Vec<BigInt>> = (0..6)
            .map(|i| (0..6).map(|j| BigInt::from(if i == j { 3 } else { 0 })).collect())
            .collect();
        for j in 1u8..=2 {
            let g = bracket(t, &IntervalTensor::generator(1, j));
            match solver.solve(&tensor_coords(&g, 2)) {
                Some(c) => rows.push(c),
                None => println!("{name}: bracket with {j} escapes the A-F span!"),
            }
        }
        let lat = IntLattice::from_generators(6, &rows);
        println!("{name}: lattice rows:");
        for row in lat.rows() {
            println!("  {:?}", row.iter().map(|x| x.to_string()).collect::<Vec<_>>());
        }
    }
}
