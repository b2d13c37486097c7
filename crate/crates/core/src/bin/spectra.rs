use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use congruent_spectra::dsp::magnitude_spectrum;
use congruent_spectra::error::exit_code;
use congruent_spectra::io::{
    detections_csv_string, read_samples_csv, spectrum_csv_string, write_spectrum_csv,
};
use congruent_spectra::scenario::{resolve_scenario, run_scenario};
use congruent_spectra::{
    emphasized, group_contrast, product, AxisConvention, DivisionPolicy, Error, ScenarioError, Spectrum,
};

#[derive(Parser)]
#[command(
    name = "spectra",
    version,
    about = "Common and non-common frequencies of congruent spectra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file, or a bundled scenario by name.
    Synth {
        #[arg(long)]
        scenario: String,
        /// Overrides the scenario's output directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Detect common frequencies of sample files, or frequencies that
    /// distinguish one group of files from another.
    #[command(group(ArgGroup::new("mode").required(true).args(["common", "emphasize"])))]
    Analyze {
        #[arg(long, num_args = 1.., value_name = "CSV")]
        common: Vec<PathBuf>,
        #[arg(long, num_args = 1.., value_name = "CSV", requires = "suppress")]
        emphasize: Vec<PathBuf>,
        #[arg(long, num_args = 1.., value_name = "CSV", requires = "emphasize")]
        suppress: Vec<PathBuf>,
        #[arg(short, default_value_t = 3)]
        k: usize,
        /// Rank the DC line too.
        #[arg(long)]
        keep_dc: bool,
        #[arg(long, default_value_t = 1e-6)]
        epsilon: f64,
        /// Divide without the noise-level conditioning.
        #[arg(long)]
        plain_division: bool,
        /// Also write the combined spectrum to this file.
        #[arg(long, value_name = "CSV")]
        spectrum_out: Option<PathBuf>,
    },
    /// Magnitude spectrum of one sample file.
    Fft {
        input: PathBuf,
        /// Overrides the axis declared in the file.
        #[arg(long)]
        axis: Option<AxisConvention>,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_spectra(paths: &[PathBuf]) -> Result<Vec<Spectrum<f64>>, Error> {
    paths
        .iter()
        .map(|p| Ok(magnitude_spectrum(&read_samples_csv(p)?)?))
        .collect()
}

fn print(text: &str) -> Result<(), Error> {
    std::io::stdout()
        .write_all(text.as_bytes())
        .map_err(|e| congruent_spectra::IoError::Io {
            path: "<stdout>".into(),
            source: e,
        })?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Synth { scenario, out } => {
            let spec = resolve_scenario(&scenario)?;
            let report = run_scenario(&spec, out.as_deref())?;
            print(&report.to_string())?;
        }
        Command::Analyze {
            common,
            emphasize,
            suppress,
            k,
            keep_dc,
            epsilon,
            plain_division,
            spectrum_out,
        } => {
            if k == 0 {
                return Err(ScenarioError::Invalid("-k must be at least 1".into()).into());
            }
            let combined = if !common.is_empty() {
                product(&load_spectra(&common)?)?
            } else {
                let policy = if plain_division {
                    DivisionPolicy::plain()
                } else {
                    DivisionPolicy::conditioned(epsilon)?
                };
                group_contrast(&load_spectra(&emphasize)?, &load_spectra(&suppress)?, &policy)?
            };
            if let Some(path) = spectrum_out {
                write_spectrum_csv(&combined, path)?;
            }
            print(&detections_csv_string(&emphasized(&combined, k, !keep_dc)))?;
        }
        Command::Fft { input, axis, out } => {
            let mut series = read_samples_csv(&input)?;
            if let Some(axis) = axis {
                series = series.with_axis(axis);
            }
            let spectrum = magnitude_spectrum(&series)?;
            match out {
                Some(path) => write_spectrum_csv(&spectrum, path)?,
                None => print(&spectrum_csv_string(&spectrum))?,
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(exit_code::SUCCESS as u8),
        Err(e) => {
            let mut message = e.to_string();
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                let text = s.to_string();
                if !message.contains(&text) {
                    message.push_str(": ");
                    message.push_str(&text);
                }
                source = s.source();
            }
            eprintln!("error: {message}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
