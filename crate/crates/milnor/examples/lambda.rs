use milnor::lyndon;
use milnor::tensor::left_collecting_bracket;

fn main() {
    for w in [&[1u8, 2, 1, 1, 1, 2][..], &[2, 1, 2, 2, 2, 1]] {
        let t = left_collecting_bracket(w);
        let d = lyndon::decompose(&t, 2);
        let terms: Vec<String> = d
            .coeffs
            .iter()
            .map(|(w, c)| format!("{c}*[{}]", w.iter().map(|x| x.to_string()).collect::<String>()))
            .collect();
        println!("lcb({w:?}) = {}", terms.join(" + "));
    }
}
