//! Looks for the pairs (A, B) closest to the bound and writes them as CSV.

use expander_lab::explore::{search_extremal, write_csv, SearchConfig, SearchMode, SizeRange};
use expander_lab::field::FieldSpec;
use expander_lab::poly::Poly;

fn main() {
    let f = FieldSpec::prime(7).unwrap();
    let g = Poly::parse(&f, "x^2").unwrap();
    let h = Poly::parse(&f, "x").unwrap();

    let mut config = SearchConfig::new(&f, g.clone(), h.clone(), SizeRange::new(2, 3), SizeRange::new(2, 4));
    config.keep = Some(5);
    config.parallelism = 2;
    let outcome = search_extremal(&config).unwrap();
    eprintln!("exhaustive: {} pairs", outcome.pairs_examined);
    write_csv(&outcome.records, std::io::stdout()).unwrap();

    let f8: FieldSpec = "2^3".parse().unwrap();
    let mut config = SearchConfig::new(
        &f8,
        Poly::parse(&f8, "x^3 + x").unwrap(),
        Poly::parse(&f8, "x + 1").unwrap(),
        SizeRange::exactly(4),
        SizeRange::exactly(4),
    );
    config.mode = SearchMode::Random;
    config.sample_count = 500;
    config.seed = 42;
    config.keep = Some(3);
    let outcome = search_extremal(&config).unwrap();
    let best = outcome.min_slack().unwrap();
    eprintln!(
        "random over {f8}: min slack {} (|f(A,B)| = {})",
        best.slack, best.image_size
    );
}
