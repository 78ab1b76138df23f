use std::process::ExitCode;

fn main() -> ExitCode {
    let config = match fspi_cli::parse_cli(std::env::args_os()) {
        Ok(config) => config,
        Err(e) => e.exit(),
    };
    match fspi_cli::run(&config) {
        Ok(report) => {
            println!("illuminations  sampling_ratio  accuracy");
            for p in &report.points {
                println!(
                    "{:>13}  {:>14.4}  {:>8.4}",
                    p.illuminations, p.sampling_ratio, p.accuracy
                );
            }
            eprintln!(
                "wrote {} in {:.1}s",
                config.out_csv.display(),
                report.elapsed_secs
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
