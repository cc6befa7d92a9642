//! Parsing, evaluating and factoring-by-roots of univariate polynomials.

use expander_lab::field::FieldSpec;
use expander_lab::poly::Poly;

fn main() {
    let f = FieldSpec::prime(5).unwrap();
    let g = Poly::parse(&f, "x^3 + 2x + 4").unwrap();
    let h = Poly::parse(&f, "x^2 - 1").unwrap();
    println!("g = {g}, deg {}", g.degree().unwrap());
    println!("h = {h}");
    println!("g * h = {}", g.try_mul(&h).unwrap());
    println!("g + h = {}", g.try_add(&h).unwrap());
    println!("g(2) = {}", g.eval(&f.from_int(2)).unwrap());
    let roots: Vec<String> = h.roots_in_field().unwrap().iter().map(|r| r.to_string()).collect();
    println!("roots of h: {}", roots.join(", "));

    let f4: FieldSpec = "2^2".parse().unwrap();
    let p = Poly::parse(&f4, "(t)*x^2 + (t+1)").unwrap();
    println!("over {f4}: p = {p}, p^2 = {}", p.pow(2));
}
