// Scheme experiment: centralize defects by shuffle-solved sections of the
// previous central values instead of witness-word sections.
use milnor::engine::{base_assignment, walk_all};
use milnor::matrix::UniMatrix;
use milnor::tensor::{bracket, left_collecting_bracket, CentralTensor, IntervalTensor};
use milnor::{build, parse_pd};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let d = build(&parse_pd(&args[1]).unwrap()).unwrap();
    let q = d.num_components() as u8;
    let mut a = base_assignment(&d);
    // accumulated section matrices per component (shuffle-lifted chain)
    let mut acc: Vec<Option<UniMatrix>> = vec![None; q as usize];
    let mut values: Vec<Vec<CentralTensor>> = Vec::new();
    for _level in 2..=5usize {
        let walk = walk_all(&d, &a);
        let mut zs = Vec::new();
        for (idx, defect) in walk.defects.iter().enumerate() {
            let corrected = match &acc[idx] {
                None => defect.clone(),
                Some(s) => defect.mul(&s.inv()),
            };
            let z = corrected.central_part().expect("central");
            // advance the accumulator: S' = shuffle_lift(C)·shuffle_lift(S)
            let c_matrix = {
                let mut m = UniMatrix::identity(defect.size());
                if !z.is_zero() {
                    m.set_entry(1, defect.size(), z.clone());
                }
                m
            };
            let lifted_c = c_matrix.shuffle_lift(q).expect("central lift");
            acc[idx] = Some(match &acc[idx] {
                None => lifted_c,
                Some(s) => lifted_c.mul(&s.shuffle_lift(q).expect("chain lift")),
            });
            zs.push(z);
        }
        values.push(zs);
        a = walk.next;
    }
    for (lv, zs) in values.iter().enumerate() {
        for (j, z) in zs.iter().enumerate() {
            println!("deg {} comp {}: {}", lv + 2, j + 1, z.to_pairs_string());
        }
    }
    // compare degree-4 values against paper tuple directly (not mod Delta yet)
    for j in 1u8..=3 {
        let rot = |k: u8| 1 + (j - 1 + k) % 3;
        let target = left_collecting_bracket(&[rot(0), rot(1), rot(1), rot(2)]);
        let psi_t = bracket(
            &IntervalTensor::generator(1, rot(0)),
            &left_collecting_bracket(&[rot(1), rot(2)]),
        );
        println!("psi3({j}) == target: {}", values[1][(j - 1) as usize] == psi_t);
        println!("mu4({j}) == target-exact: {}", values[2][(j - 1) as usize] == target);
    }
}
