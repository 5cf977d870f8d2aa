use factorcheck::arith::orders::{order_of, Family};
use factorcheck::arith::ppd::ppd;

fn main() -> factorcheck::Result<()> {
    for (a, n) in [(2, 6), (2, 12), (3, 5), (4, 3), (16, 5)] {
        println!("ppd({a}, {n}) = {:?}", ppd(a, n));
    }
    for (family, n, q) in [(Family::Sp, 8, 2), (Family::Sz, 1, 8), (Family::G2, 1, 4), (Family::Mathieu12, 12, 1)] {
        println!("{:<10} n={n:<3} q={q:<3} order {}", family.name(), order_of(family, n, q)?);
    }
    Ok(())
}
