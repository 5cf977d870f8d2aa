use factorcheck::catalog::{Catalog, Table};

#[test]
fn display_matches_fixture() {
    let expected = include_str!("fixtures/catalog_display.txt");
    assert_eq!(Catalog::bundled().display_table(), expected);
}

#[test]
fn serialization_round_trips() {
    let cat = Catalog::bundled();
    let text = cat.serialize();
    let again = Catalog::parse(&text).unwrap();
    assert_eq!(again.serialize(), text);
    assert_eq!(again.display_table(), cat.display_table());
}

#[test]
fn every_table_is_populated() {
    let cat = Catalog::bundled();
    let count = |t| cat.table(t).count();
    assert_eq!(count(Table::T1), 10);
    assert!(count(Table::T2) >= 8);
    assert!(count(Table::T5) >= 3);
    assert!(count(Table::A) >= 4);
}

#[test]
fn latex_survives_verbatim() {
    let row = Catalog::bundled().row(Table::T1, "7").unwrap().clone();
    let shown = Catalog::bundled().display_table();
    let line = shown.lines().find(|l| l.starts_with("T1.7 ")).unwrap();
    assert!(line.contains(r"$U$ nonsolvable and $U\leqslant\Sp_2(2^f)$"));
    assert!(format!("{row:?}").contains("G_2"));
}
