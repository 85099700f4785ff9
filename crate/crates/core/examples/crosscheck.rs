//! Every prediction of the case analysis tested against computed cohomology,
//! including a search for relations the prediction misses.

use skewdg::{crosscheck, Field, Matrix};

fn main() -> skewdg::Result<()> {
    let q = Field::Rational;
    for rows in [[[1, 1, 5], [1, 1, 5], [0, 0, 0]], [[1, 1, 0], [1, 1, 0], [1, 1, 0]]] {
        let r = crosscheck(&Matrix::from_ints(q, &rows), 7)?;
        println!("{rows:?}: case {}", r.classification.case);
        println!("  computed {:?}", r.computed_dims);
        println!("  predicted {:?}", r.predicted_dims);
        for p in &r.probes {
            println!("  [{}] {}", if p.passed() { "ok" } else { "FAIL" }, p.description);
        }
        if !r.missing_relations.is_empty() {
            println!("  missing relations {:?}, extended Hilbert function {:?}", r.missing_relations, r.observed_dims);
        }
        println!("  passed: {}", r.passed());
    }
    Ok(())
}
