//! B a subfield plus one extra point: how small can f(A, B) get?

use expander_lab::explore::{subfield_baseline, subfield_experiment, ThetaChoice};
use expander_lab::field::FieldSpec;
use expander_lab::poly::Poly;
use num_rational::Ratio;

fn main() {
    let f: FieldSpec = "5^2".parse().unwrap();
    let g = Poly::parse(&f, "x^2").unwrap();
    let h = Poly::parse(&f, "x").unwrap();

    let base = subfield_baseline(&f, 1, &g, &h).unwrap();
    println!(
        "B = F_5: |f(A,B)| = {}, image is B: {}",
        base.record.image_size, base.image_equals_b
    );

    for (num, den) in [(1, 4), (1, 2), (3, 4)] {
        let c = Ratio::new(num, den);
        let records = subfield_experiment(&f, 1, c, &g, &h, ThetaChoice::All, 1).unwrap();
        let min = records.iter().map(|r| r.image_size).min().unwrap();
        let r = &records[0];
        println!(
            "C = {c}: |A| = {}, min |f(A,B)| = {min} over {} thetas, proved >= {}, conjectured {}",
            r.a,
            records.len(),
            r.proved_threshold.unwrap(),
            r.conjectured_threshold.unwrap()
        );
    }
}
