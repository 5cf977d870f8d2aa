use factorcheck::field::{Field, Gf};
use factorcheck::forms::{classify_quadratic, count_singular, singular_count_formula, FormType, QuadraticForm};
use factorcheck::matrix::Matrix;

fn main() -> factorcheck::Result<()> {
    let k = Field::with_order(4)?;
    let std = QuadraticForm::standard(&k, 2, FormType::Minus)?;

    // scramble the standard minus-type form by a lower unitriangular change of basis
    let mut c = Matrix::identity(4);
    for i in 0..4 {
        for j in 0..i {
            c.set(i, j, Gf(((i + 2 * j) % 4) as u16));
        }
    }
    let form = std.change_basis(&k, &c);
    let cls = classify_quadratic(&form, &k)?;
    println!("type {:?}, Witt index {}", cls.form_type, cls.witt_index);
    println!("standard basis recovered: {}", form.change_basis(&k, &cls.basis) == std);

    for m in 1..=3u32 {
        for ty in [FormType::Plus, FormType::Minus] {
            let f = QuadraticForm::standard(&k, m as usize, ty)?;
            println!(
                "dim {} {:?}: {} singular vectors (formula {})",
                2 * m,
                ty,
                count_singular(&f, &k)?,
                singular_count_formula(4, m, ty)
            );
        }
    }
    Ok(())
}
