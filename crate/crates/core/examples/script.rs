//! Running a session script and reading its report.

use pertinax::frontend::{run_source, RunOptions};

const SCRIPT: &str = "
field cyclotomic(3);
algebra R = quantum_affine([[1, -1, -1], [-1, 1, -1], [-1, -1, 1]]);
group G = matrices { g: diag(1, z3, z3^2); };
pair Y = ([1, y, y^2], [y^3, y^2, y]);

task verify(R, G, Y) maxdeg=6;
task radical(R, G) maxdeg=6;
task invariants(R, G) maxdeg=6;
";

fn main() {
    let path = std::env::args().nth(1);
    let src = match &path {
        Some(p) => std::fs::read_to_string(p).expect("readable script"),
        None => SCRIPT.to_string(),
    };
    match run_source(&src, &RunOptions::default()) {
        Ok(report) => {
            print!("{}", report.to_text());
            if let Some(r) = report.result(1) {
                println!("radical generators: {}", r["radical_generators"]);
            }
        }
        Err(e) => eprintln!("{e}"),
    }
}
