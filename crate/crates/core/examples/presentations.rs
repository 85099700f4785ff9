//! Finitely presented graded algebras truncated at a degree bound: Hilbert
//! functions, normal forms and multiplication.

use skewdg::{AlgebraPresentation, Field};

fn main() -> skewdg::Result<()> {
    let q = Field::Rational;
    let skew = AlgebraPresentation::parse(q, "gen x1:1, x2:1, x3:1; rel x1*x2 + x2*x1; rel x1*x3 + x3*x1; rel x2*x3 + x3*x2")?;
    println!("{skew}\n  Hilbert function {:?}", skew.truncate(6)?.hilbert_function());

    let p = AlgebraPresentation::parse(q, "gen xi:1, eta:2; rel xi*xi; rel xi*eta - eta*xi")?;
    let a = p.truncate(8)?;
    println!("{p}\n  Hilbert function {:?}", a.hilbert_function());
    let (deg, v) = a.normal_form(&p.polynomial("eta*xi*eta + 2*xi*eta*eta")?)?;
    println!("  eta*xi*eta + 2*xi*eta*eta = {}", a.render(deg, &v));

    let fib = AlgebraPresentation::parse(q, "gen x:1, y:1; rel y*y")?.truncate(8)?;
    println!("k<x,y>/(y^2): Hilbert function {:?}", fib.hilbert_function());
    let x = fib.unit_vector(1, 0);
    let yx = fib.mul(1, &fib.unit_vector(1, 1), 1, &x)?;
    println!("  y * x = {}, basis of degree 2: {:?}", fib.render(2, &yx), fib.basis(2));
    println!("  associativity failures on 200 samples: {}", fib.check_associativity(200, 1).len());
    Ok(())
}
