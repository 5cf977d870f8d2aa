use factorcheck::field::{Field, Gf};

fn main() -> factorcheck::Result<()> {
    let k = Field::with_order(16)?;
    let w = k.primitive_element();
    println!("GF(16), primitive element {w:?} of order {:?}", k.mult_order(w));

    for i in 0..5 {
        let x = k.pow(w, i as i64)?;
        let sq = k.frobenius(x, 2)?;
        let tr4 = k.trace_to_subfield(x, 4)?;
        let tr2 = k.trace_to_subfield(x, 2)?;
        println!("w^{i} = {x:?}  x^2 = {sq:?}  Tr to GF(4) = {tr4:?}  Tr to GF(2) = {tr2:?}");
    }

    let fixed: Vec<Gf> = k.elements().filter(|&x| k.frobenius(x, 4).unwrap() == x).collect();
    println!("fixed by x -> x^4: {fixed:?}");
    Ok(())
}
