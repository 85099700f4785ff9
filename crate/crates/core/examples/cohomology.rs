//! Cohomology of a rank-one differential: dimensions, basis cocycles and a
//! few products of classes.

use skewdg::{Cohomology, DgSpec, Field, GradedElement, Matrix};

fn main() -> skewdg::Result<()> {
    let q = Field::Rational;
    let m = Matrix::from_ints(q, &[[2, 1, 1], [2, 1, 1], [2, 1, 1]]);
    let spec = DgSpec::new(m)?;
    let h = Cohomology::compute(&spec, 6);
    println!("dims {:?}", h.dims());
    for d in 0..=3 {
        let basis: Vec<String> = h.basis(d).iter().map(ToString::to_string).collect();
        println!("H^{d}: {}", basis.join(" | "));
    }

    let xi = h.class_of_cocycle(&GradedElement::parse(q, "x1 - x2")?)?;
    let eta = h.class_of_cocycle(&GradedElement::parse(q, "x1 - x3")?)?;
    let square = h.class_product(&xi, &xi)?;
    println!("[x1 - x2]^2 = {} (coordinates {:?})", square.representative, square.coordinates.iter().map(ToString::to_string).collect::<Vec<_>>());
    let mixed = h.class_product(&xi, &eta)?;
    println!("[x1 - x2][x1 - x3] is zero: {}", mixed.is_zero());

    // x1^2 is a coboundary exactly when it lies in the image of d.
    let x1_sq = GradedElement::parse(q, "x1^2")?;
    println!("d(x1) = {}", spec.d(&GradedElement::parse(q, "x1")?));
    println!("x1^2 is a coboundary: {}", h.is_coboundary(&x1_sq)?);
    Ok(())
}
