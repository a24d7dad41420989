use std::time::Instant;

use spingrass_core::spinor::{conjectured_decomposition, decompose, Case, Decomposition};

fn show(d: &Decomposition) -> Vec<String> {
    d.summands
        .iter()
        .map(|s| format!("{} {} {}x{} m{}", s.chirality, s, s.dim1, s.dim2, s.multiplicity))
        .collect()
}

#[test]
fn peeled_matches_conjecture() {
    let cases = [
        (2, 2, Case::Even),
        (3, 2, Case::Even),
        (4, 2, Case::Even),
        (3, 3, Case::Even),
        (1, 1, Case::Odd),
        (2, 1, Case::Odd),
        (3, 1, Case::Odd),
        (2, 2, Case::Odd),
        (1, 1, Case::Mixed),
        (2, 1, Case::Mixed),
    ];
    for (k, l, case) in cases {
        let t = Instant::now();
        let got = decompose(k, l, case).unwrap();
        let want = conjectured_decomposition(k, l, case).unwrap();
        eprintln!("({k},{l},{case}) {:?}", t.elapsed());
        assert_eq!(show(&got), show(&want), "({k},{l},{case})");
        assert!(got.is_consistent());
    }
}
