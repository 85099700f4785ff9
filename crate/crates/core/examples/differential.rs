//! The differential on monomials, and a check of d∘d = 0, the Leibniz rule
//! and compatibility with the anticommutation relations, over Q and over F_p.

use skewdg::{DgSpec, Field, GradedElement, Matrix};

fn main() -> skewdg::Result<()> {
    let rows = [[1, 2, 0], [0, 1, 3], [4, 0, 1]];
    for field in [Field::Rational, Field::prime(1_000_000_007)?] {
        let spec = DgSpec::new(Matrix::from_ints(field, &rows))?;
        let u = GradedElement::parse(field, "x1 x2 + 3 x3^2")?;
        println!("over {}: d({u}) = {}", field.label(), spec.d(&u));
        let ranks: Vec<usize> = (0..=6).map(|d| spec.d_matrix(d).rank()).collect();
        let v = spec.verify(6, 7);
        println!("  ranks of d in degrees 0..6: {ranks:?}");
        println!(
            "  valid: {} ({} Leibniz pairs, {} relations, {} words)",
            v.passed(),
            v.leibniz_checked,
            v.relations_checked,
            v.words_checked
        );
    }
    Ok(())
}
