// The chi-minus colouring (largest classes first) and its label reversal.

use chromatic_curling::{chi_minus, chi_plus, chromatic_number, class_sizes, generate, ColourAssignment, Family, FamilySpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (family, n) in [(Family::Path, 7), (Family::Cycle, 5), (Family::Wheel, 9), (Family::ClosedSunflower, 6)] {
        let g = generate(FamilySpec::new(family, n)?)?;
        let minus = chi_minus(&g)?;
        let plus = chi_plus(&minus);
        println!("{} (chi = {})", family.symbol(n), chromatic_number(&g)?);
        println!("  chi-  theta {:?} witness {:?}", minus.theta.as_slice(), minus.witness.colours());
        println!("  chi+  theta {:?} witness {:?}", plus.theta.as_slice(), plus.witness.colours());
        println!("  cn_chi = {}, cnc_chi = {}", minus.cn_chi, minus.cnc_chi);
    }

    // Any proper colouring can be measured directly.
    let c4 = generate(FamilySpec::new(Family::Cycle, 4)?)?;
    let sizes = class_sizes(&c4, &ColourAssignment::new(vec![1, 2, 1, 2])?)?;
    println!("C_4 coloured 1,2,1,2 has classes {:?}", sizes.as_slice());
    match class_sizes(&c4, &ColourAssignment::new(vec![1, 1, 2, 2])?) {
        Ok(_) => unreachable!("adjacent vertices share a colour"),
        Err(e) => println!("C_4 coloured 1,1,2,2 is rejected: {e}"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
