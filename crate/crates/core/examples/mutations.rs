use factorcheck::catalog::mutation::{run, Mutation};
use factorcheck::catalog::Catalog;
use factorcheck::verify::Budget;

fn main() -> factorcheck::Result<()> {
    let cat = Catalog::bundled();
    let budget = Budget::from_env()?;
    for m in Mutation::ALL {
        let out = run(m, &cat, &budget)?;
        println!("{m:?}: caught = {}  ({:?}: {})", out.caught, out.report.verdict, out.report.detail);
    }
    Ok(())
}
