//! Replays the proof on a concrete instance and prints the certificate.

use expander_lab::bound::ExpanderInstance;
use expander_lab::certificate::build_certificate;
use expander_lab::field::FieldSpec;
use expander_lab::poly::Poly;

fn main() {
    let f = FieldSpec::prime(5).unwrap();
    let g = Poly::parse(&f, "x^2").unwrap();
    let h = Poly::parse(&f, "x").unwrap();
    let a = (1..=4).map(|i| f.from_int(i)).collect();
    let b = (0..=2).map(|i| f.from_int(i)).collect();
    let instance = ExpanderInstance::new(&f, g, h, a, b).unwrap();
    let c: Vec<_> = [0, 1, 4].map(|i| f.from_int(i)).to_vec();

    let cert = build_certificate(&instance, &c).unwrap();
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
    println!(
        "sum alpha(x) beta(y) P(x, y) = {}, predicted {}: {}",
        cert.pointwise,
        cert.predicted,
        if cert.identity_holds() { "PASS" } else { "FAIL" }
    );
}
