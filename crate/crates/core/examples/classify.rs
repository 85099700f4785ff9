//! Case analysis by rank: the predicted presentation of cohomology and the
//! predicted Gorenstein property.

use skewdg::{classify, Field, Matrix};

fn main() -> skewdg::Result<()> {
    let q = Field::Rational;
    let matrices = [
        [[0, 0, 0], [0, 0, 0], [0, 0, 0]],
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 0], [0, 0, 0]],
        [[1, 0, 0], [0, 0, 1], [0, 0, 0]],
        [[1, 1, 1], [1, 1, 1], [1, 1, 1]],
        [[2, 1, 1], [2, 1, 1], [0, 0, 0]],
        [[0, 1, 2], [0, 0, 0], [0, 0, 0]],
        [[1, 1, 0], [1, 1, 0], [1, 1, 0]],
    ];
    for rows in matrices {
        let c = classify(&Matrix::from_ints(q, &rows))?;
        println!("{rows:?}\n  {} (rank {}), {:?}", c.case, c.rank, c.predicted_gorenstein);
        println!("  {}", c.presentation);
        for g in &c.generators {
            println!("  {} ↦ {}", g.name, g.representative);
        }
    }
    Ok(())
}
