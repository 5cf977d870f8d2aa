use factorcheck::action::PermPoint;
use factorcheck::atlas::mathieu12;
use factorcheck::perm::Perm;

fn main() -> factorcheck::Result<()> {
    let m12 = mathieu12();
    let chain = m12.chain()?;
    println!("{}: order {}, base {:?}", m12.label, chain.order(), chain.base());

    let swap = Perm::from_images((0..12u16).map(|i| match i { 0 => 1, 1 => 0, i => i }).collect())?;
    println!("transposition (0 1) in M12: {}", chain.contains(&swap));

    let rebased = chain.rebase(&[PermPoint::Int(11), PermPoint::Int(10)])?;
    println!("after rebasing on 11, 10: base {:?}, order {}", rebased.base(), rebased.order());

    let mut rng = chain.random_elements(0x5EED);
    for _ in 0..3 {
        let g = rng.next_elem();
        println!("random element {g:?} sifts: {}", chain.contains(&g));
    }
    Ok(())
}
