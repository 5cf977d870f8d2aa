use num_bigint::BigUint;

use factorcheck::action::PermPoint;
use factorcheck::atlas::perms::{alternating, PermGroup};
use factorcheck::perm::Perm;
use factorcheck::verify::{order_oracle, orbit_transitivity, Budget, Group, Side};

fn main() -> factorcheck::Result<()> {
    let budget = Budget::default();
    for n in [5usize, 7, 9] {
        let g = Group::from_perm(&alternating(n), &budget)?;
        let point = PermPoint::Int(0);
        let h = g.stabilizer(format!("A_{}", n - 1), &point)?;
        let cycle = Perm::from_images((0..n as u16).map(|i| (i + 1) % n as u16).collect())?;
        let k = Group::from_perm(&PermGroup::new(format!("C_{n}"), n, vec![cycle], Some(BigUint::from(n))), &budget)?;

        let id = format!("A_{n} = A_{} C_{n}", n - 1);
        let a = order_oracle(&id, &g, &h, &k, &budget)?;
        let b = orbit_transitivity(&id, &g, &h, &k, &point, Side::H, &budget)?;
        println!("{id}: oracle {:?} (|H∩K| = {:?}), orbit {:?}", a.verdict, a.intersection, b.verdict);
    }
    Ok(())
}
