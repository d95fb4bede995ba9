// Checks the hand-drawn colourings against the class sizes their arguments
// state, and compares each with the chi-minus optimum.

use chromatic_curling::figures::figure_colourings;
use chromatic_curling::{chi_minus, class_sizes, generate, witness_check};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for fig in figure_colourings() {
        let g = generate(fig.spec)?;
        let drawn = class_sizes(&g, &fig.colouring)?;
        let ok = witness_check(fig.spec.family, fig.spec.n, &fig.colouring)?;
        let best = chi_minus(&g)?;
        println!(
            "{:<26} drawn {:<18} {}  optimum {:?}",
            fig.caption,
            format!("{:?}", drawn.as_slice()),
            if ok { "matches" } else { "DIFFERS" },
            best.theta.as_slice(),
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
