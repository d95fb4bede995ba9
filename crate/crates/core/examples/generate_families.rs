// Builds one member of every named family and prints its size, regularity
// and where the rim, outer ring and centre sit in the vertex numbering.
//
//     cargo run --example generate_families -- 6

use chromatic_curling::{generate, vertex_layout, Family, FamilySpec};

pub fn run_example(n: usize) -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<18} {:>8} {:>6} {:>7}  layout", "family", "vertices", "edges", "regular");
    for family in Family::ALL {
        let spec = FamilySpec::new(family, n.max(family.min_order()))?;
        let g = generate(spec)?;
        let layout = vertex_layout(spec)?;
        let outer = layout.outer.map(|r| format!(" outer {}..{}", r.start, r.end)).unwrap_or_default();
        let centre = layout.centre.map(|c| format!(" centre {c}")).unwrap_or_default();
        println!(
            "{:<18} {:>8} {:>6} {:>7}  rim {}..{}{outer}{centre}",
            family.symbol(spec.n),
            g.vertex_count(),
            g.edge_count(),
            g.is_regular(),
            layout.rim.start,
            layout.rim.end,
        );
    }
    let sample = generate(FamilySpec::new(Family::Wheel, 4)?)?;
    println!("\nW_5 as JSON: {}", sample.to_json());
    print!("W_5 as DOT:\n{}", sample.to_dot());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(6);
    run_example(n)
}
