// Curling number and compound curling number of degree sequences.

use chromatic_curling::{curling_number, generate, Family, FamilySpec, Graph};

fn show(name: &str, g: &Graph) {
    let r = curling_number(g);
    let runs: Vec<String> = r.runs.runs.iter().map(|run| format!("{}^{}", run.degree, run.count)).collect();
    println!("{name:<8} degrees {:<22} cn = {:<3} cn^c = {}", runs.join(" "), r.cn, r.cn_compound);
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    show("P_4", &Graph::new(4, [(0, 1), (1, 2), (2, 3)])?);
    show("K_1,3", &Graph::new(4, [(0, 1), (0, 2), (0, 3)])?);
    for (family, n) in [(Family::Cycle, 7), (Family::Helm, 5), (Family::Flower, 5), (Family::Blossom, 4)] {
        let g = generate(FamilySpec::new(family, n)?)?;
        show(&family.symbol(n), &g);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
