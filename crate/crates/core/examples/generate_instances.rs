//! The instance families: star forests, fans, `G(n, p)`, line graphs and
//! repaired random K_{1,r}-free graphs. Random families are reproducible
//! from their seed.
//!
//! ```bash
//! cargo run --example generate_instances
//! ```

use starfree::generators::{GeneratorKind, GeneratorSpec};

fn main() -> starfree::Result<()> {
    let specs = [
        GeneratorSpec { kind: GeneratorKind::StarForest { p: 3, r: 4 }, seed: 0 },
        GeneratorSpec { kind: GeneratorKind::Fan { k: 5 }, seed: 0 },
        GeneratorSpec { kind: GeneratorKind::Gnp { n: 12, prob: 0.3 }, seed: 1 },
        GeneratorSpec {
            kind: GeneratorKind::LineGraphOf { inner: Box::new(GeneratorKind::Gnp { n: 7, prob: 0.4 }) },
            seed: 2,
        },
        GeneratorSpec { kind: GeneratorKind::RandomStarFree { n: 14, prob: 0.2, r: 3 }, seed: 3 },
    ];
    for spec in &specs {
        let g = spec.generate()?;
        assert_eq!(g, spec.generate()?);
        println!("{:<32} n = {:>2}  m = {:>3}", spec.label(), g.n(), g.m());
    }

    // The same specs as they would appear in an experiment config.
    let json = serde_json::to_string(&specs[3]).expect("serializable");
    println!("{json}");
    Ok(())
}
