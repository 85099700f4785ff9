//! Monomial substitutions x = C y acting on the differential by
//! N = C⁻¹ M (c_ij²), with cohomology compared on both sides.

use skewdg::transform::invariance_check;
use skewdg::{apply_transform, Field, Matrix, MonomialMatrix};

fn main() -> skewdg::Result<()> {
    let q = Field::Rational;
    let m = Matrix::from_ints(q, &[[1, 1, 0], [1, 1, 0], [1, 1, 0]]);
    let c = MonomialMatrix::from_json(q, r#"[[0, 2, 0], [0, 0, -1], ["1/3", 0, 0]]"#)?;
    println!("N = {}", apply_transform(&c, &m)?);
    let r = invariance_check(&m, &c, 6)?;
    println!("dims {:?} / {:?}", r.dims_original, r.dims_transformed);
    println!("prediction {:?} / {:?}, passed {}", r.verdict_original, r.verdict_transformed, r.passed());

    match MonomialMatrix::from_json(q, "[[1, 1, 0], [0, 1, 0], [0, 0, 1]]") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
