// Runs the search engine and the brute-force oracle side by side on seeded
// random connected graphs and reports any disagreement.
//
//     cargo run --release --example oracle_crosscheck -- 500

use chromatic_curling::{chi_minus, oracle_chromatic, Graph, DEFAULT_VERTEX_BUDGET};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn run_example(count: usize) -> Result<usize, Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut disagreements = 0;
    for i in 0..count {
        let n = rng.gen_range(1..=9);
        let g = Graph::random_connected(n, rng.gen_range(0.0..0.8), &mut rng);
        let engine = chi_minus(&g)?;
        let oracle = oracle_chromatic(&g, DEFAULT_VERTEX_BUDGET)?;
        if engine.theta != oracle.lex_max_theta {
            disagreements += 1;
            println!("#{i}: engine {:?} oracle {:?}\n  {}", engine.theta.as_slice(), oracle.lex_max_theta.as_slice(), g.to_json());
        }
    }
    println!("{count} graphs, {disagreements} disagreements");
    Ok(disagreements)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let count = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(200);
    if run_example(count)? > 0 {
        std::process::exit(1);
    }
    Ok(())
}
