//! Arithmetic in a prime field and in GF(9), including its prime subfield.

use expander_lab::field::FieldSpec;

fn main() {
    let f7 = FieldSpec::prime(7).unwrap();
    let three = f7.from_int(3);
    println!("in {f7}: 3 * 5 = {}", &three * &f7.from_int(5));
    println!("in {f7}: 3^-1 = {}", three.inv().unwrap());

    let f9: FieldSpec = "3^2".parse().unwrap();
    println!("default modulus: {f9}");
    let t = f9.generator().unwrap();
    let a = &t + &f9.one();
    println!("(t+1)^2 = {}", a.pow(2));
    println!("(t+1)^-1 = {}", a.inv().unwrap());
    println!("t^8 = {}", t.pow(8));

    let all: Vec<String> = f9.elements().iter().map(|e| e.to_string()).collect();
    println!("elements: {}", all.join(", "));
    let sub: Vec<String> = f9.subfield_elements(1).unwrap().iter().map(|e| e.to_string()).collect();
    println!("prime subfield: {}", sub.join(", "));

    let custom = FieldSpec::extension(2, 3, Some(&[1, 1, 0])).unwrap();
    println!("custom modulus: {custom}");
    match FieldSpec::extension(2, 4, Some(&[1, 0, 1, 0])) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
