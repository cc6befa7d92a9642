//! Computes f(A, B) for f = x^2 + x*y and compares it with the bound.

use expander_lab::bound::{check_instance, image, ExpanderInstance, InstanceCandidate};
use expander_lab::field::FieldSpec;
use expander_lab::poly::Poly;

fn show(instance: &ExpanderInstance) {
    let img = image(instance);
    let listed: Vec<String> = img.iter().map(|e| e.to_string()).collect();
    println!(
        "over {}: |f(A,B)| = {} >= {}  [{}]",
        instance.field(),
        img.len(),
        instance.bound_report().bound,
        listed.join(" ")
    );
}

fn main() {
    let f = FieldSpec::prime(11).unwrap();
    let g = Poly::parse(&f, "x^2").unwrap();
    let h = Poly::parse(&f, "x").unwrap();
    let a = [1, 2, 3, 4].map(|i| f.from_int(i)).to_vec();
    let b = [0, 1, 2].map(|i| f.from_int(i)).to_vec();
    show(&ExpanderInstance::new(&f, g.clone(), h.clone(), a, b).unwrap());

    // B the prime subfield of GF(9) and A inside it: the image collapses to B.
    let f9: FieldSpec = "3^2".parse().unwrap();
    let sub = f9.subfield_elements(1).unwrap();
    let g9 = Poly::parse(&f9, "x^2").unwrap();
    let h9 = Poly::parse(&f9, "x").unwrap();
    show(&ExpanderInstance::new(&f9, g9, h9, sub[1..].to_vec(), sub).unwrap());

    let bad = InstanceCandidate {
        field: f.clone(),
        g: h.clone(),
        h: g,
        a: vec![f.zero(), f.one(), f.one()],
        b: vec![],
    };
    for violation in check_instance(bad).unwrap_err() {
        println!("violation: {violation}");
    }
}
