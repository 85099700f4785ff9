//! Minimal free resolution of the trivial module and Ext(k, A) from its
//! dual complex.

use skewdg::resolution::{ext_against_algebra, minimal_resolution};
use skewdg::{AlgebraPresentation, Field};

fn main() -> skewdg::Result<()> {
    let p = AlgebraPresentation::parse(Field::Rational, "gen x:1, y:1; rel y*y")?;
    let algebra = p.truncate(10)?;
    let mut res = minimal_resolution(&algebra, 5, 10)?;
    let report = res.report();
    println!("{}", report.betti_table());
    for d in report.differentials.iter().flatten() {
        println!("{d}");
    }
    println!("minimal {}, complex {}, exact {}, Euler characteristics ok {}", report.minimal, report.complex, report.exact, report.euler_ok);
    println!("{}", ext_against_algebra(&res).table());
    Ok(())
}
