//! Gorenstein certificates: a verified pair of independent Ext classes, or a
//! statement that none exists within the bounds.

use skewdg::resolution::{gorenstein_certificate, predicted_vs_certified, GorensteinVerdict};
use skewdg::{AlgebraPresentation, Field, Matrix};

fn show(v: &GorensteinVerdict) -> String {
    match v {
        GorensteinVerdict::NonGorenstein { witness } => {
            let at: Vec<String> = witness.iter().map(|w| format!("Ext^{}_{}", w.homological_degree, w.internal_degree)).collect();
            format!("non-Gorenstein ({})", at.join(", "))
        }
        GorensteinVerdict::ConsistentUpToCutoff { .. } => "consistent up to the cutoff".into(),
    }
}

fn main() -> skewdg::Result<()> {
    let q = Field::Rational;
    for text in ["gen x:1, y:1; rel x*y + y*x", "gen x:1, y:1; rel y*y", "gen x:1, y:1; rel y*y; rel x*x"] {
        let p = AlgebraPresentation::parse(q, text)?;
        println!("{p}: {}", show(&gorenstein_certificate(&p, 5, 10)?));
    }

    let r = predicted_vs_certified(&Matrix::from_ints(q, &[[1, 1, 1], [1, 1, 1], [2, 2, 2]]), 5, 10)?;
    println!("case {}: predicted {:?}", r.classification.case, r.classification.predicted_gorenstein);
    println!("  {}: {} / {}", r.classification.presentation, show(&r.left), show(&r.right));
    if let Some(o) = &r.observed {
        println!("  {}: {} / {}", o.presentation, show(&o.left), show(&o.right));
    }
    Ok(())
}
