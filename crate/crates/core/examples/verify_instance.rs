use factorcheck::catalog::{instantiate, parse_params, run_instance, Catalog, DecorChoice, Table};
use factorcheck::verify::{Budget, Strategy};

fn main() -> factorcheck::Result<()> {
    let cat = Catalog::bundled();
    let budget = Budget::from_env()?;
    let row = cat.row(Table::T1, "6")?;
    let inst = instantiate(row, &parse_params("f=3")?, DecorChoice::Max, &budget)?;
    println!("{}: G = {}, H = {}, K = {}", inst.id, inst.labels[0], inst.labels[1], inst.labels[2]);

    for strategy in [None, Some(Strategy::OrbitTransitivity), Some(Strategy::Screen)] {
        match run_instance(&inst, strategy, &budget) {
            Ok(r) => println!("{}", r.to_json()),
            Err(e) => println!("{strategy:?} not applicable: {e}"),
        }
    }
    Ok(())
}
