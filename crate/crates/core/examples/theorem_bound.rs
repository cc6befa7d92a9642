//! The lower bound for |g(A) + B h(A)| as a function of |A|, |B|, deg g and
//! the characteristic, next to the simpler closed form min(a/d + b - 1, p).

use expander_lab::bound::{corollary_bound, theorem_bound, Characteristic};

fn main() {
    let report = theorem_bound(6, 4, 2, Characteristic::Prime(13)).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());

    println!(
        "{:>4} {:>4} {:>3} {:>5} {:>8} {:>9}",
        "a", "b", "d", "p", "theorem", "corollary"
    );
    for (a, b, d, ch) in [
        (10, 3, 2, Characteristic::Prime(2)),
        (10, 4, 2, Characteristic::Prime(2)),
        (10, 4, 2, Characteristic::Prime(3)),
        (40, 20, 3, Characteristic::Prime(7)),
        (40, 20, 3, Characteristic::Zero),
    ] {
        let t = theorem_bound(a, b, d, ch).unwrap().bound;
        let c = corollary_bound(a, b, d, ch).unwrap();
        println!("{a:>4} {b:>4} {d:>3} {ch:>5} {t:>8} {c:>9}");
    }
}
