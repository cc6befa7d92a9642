//! A set C smaller than the bound can never contain f(A, B); this finds the
//! escaping pair for a few candidates.

use expander_lab::bound::ExpanderInstance;
use expander_lab::certificate::{refute_cover, Refutation};
use expander_lab::field::FieldSpec;
use expander_lab::poly::Poly;

fn main() {
    let f = FieldSpec::prime(7).unwrap();
    let g = Poly::parse(&f, "x^3 + x").unwrap();
    let h = Poly::parse(&f, "x + 1").unwrap();
    let a = (0..=4).map(|i| f.from_int(i)).collect();
    let b = (0..=3).map(|i| f.from_int(i)).collect();
    let instance = ExpanderInstance::new(&f, g, h, a, b).unwrap();
    println!("bound: {}", instance.bound_report().bound);

    for c in [vec![0, 1, 2], vec![1, 3, 5, 6], vec![0, 2, 4, 5]] {
        let c: Vec<_> = c.into_iter().map(|i| f.from_int(i)).collect();
        let names: Vec<String> = c.iter().map(|e| e.to_string()).collect();
        match refute_cover(&instance, &c) {
            Ok(Refutation::Witness { x, y, value }) => {
                println!("C = {{{}}}: f({x}, {y}) = {value} escapes", names.join(", "))
            }
            Ok(Refutation::Inconsistent(_)) => println!("C = {{{}}}: inconsistent", names.join(", ")),
            Err(e) => println!("C = {{{}}}: {e}", names.join(", ")),
        }
    }
}
