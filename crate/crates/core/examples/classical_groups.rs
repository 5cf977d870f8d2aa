use factorcheck::atlas::classical::{o_group, sp_group};
use factorcheck::atlas::exceptional::{g2_subgroup, sz_group};
use factorcheck::forms::FormType;

fn main() -> factorcheck::Result<()> {
    let groups = [
        sp_group(2, 4)?,
        o_group(2, 4, FormType::Minus)?.0,
        o_group(3, 2, FormType::Plus)?.0,
        sz_group(3)?,
        g2_subgroup(1)?,
    ];
    for g in &groups {
        g.check_forms()?;
        let chain = g.chain()?;
        println!("{:<16} dim {}  |G| = {}  Dickson {:?}", g.label, g.space.dim, chain.order(), g.dickson_profile());
    }
    Ok(())
}
