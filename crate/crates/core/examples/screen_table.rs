use factorcheck::catalog::{screen_table, Catalog, Table};
use factorcheck::verify::Budget;

fn main() -> factorcheck::Result<()> {
    let cat = Catalog::bundled();
    let budget = Budget::from_env()?;
    let reports = screen_table(&cat, Table::T1, 8, 2, &budget)?;
    for r in &reports {
        println!("{:<28} {:?}  {}", r.id, r.verdict, r.detail);
    }
    let bad = reports.iter().filter(|r| !r.verdict.is_success()).count();
    println!("{} records, {bad} inconsistent", reports.len());
    Ok(())
}
