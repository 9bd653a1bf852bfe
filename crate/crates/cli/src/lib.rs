//! Command-line front end for `deltashift`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 invalid input.
//! Results go to stdout, diagnostics to stderr.

mod args;
pub mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use deltashift::{
    action_table, all_orbits, apply_word, delta_brute_force, delta_closed_form, verify_type,
    LieType, RootSystem, VerifyReport, Weight, WeylWord,
};

use args::{parse_int_list, Cli, Command, Format};
use output::*;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

enum Failure {
    Usage(String),
    Check(String),
}

impl From<deltashift::Error> for Failure {
    fn from(e: deltashift::Error) -> Self {
        match e {
            deltashift::Error::NotAffinePermutation { .. }
            | deltashift::Error::NotBijective { .. }
            | deltashift::Error::NonIntegralComark { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut Vec<u8>, err: &mut Vec<u8>) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                err.extend_from_slice(rendered.as_bytes());
            } else {
                out.extend_from_slice(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            EXIT_CHECK_FAILED
        }
    }
}

fn dispatch(cmd: Command, out: &mut Vec<u8>) -> CmdResult {
    match cmd {
        Command::Info { ty, format } => info(ty.lie_type, format, out),
        Command::Reflect {
            ty,
            word,
            weight,
            format,
        } => reflect_cmd(ty.lie_type, &word, &weight, format, out),
        Command::Delta {
            ty,
            level,
            weight,
            coweight,
            oracle,
            format,
        } => delta(ty.lie_type, level, &weight, coweight, oracle, format, out),
        Command::Verify {
            lie_type,
            all,
            level,
            format,
        } => {
            let types = if all {
                LieType::all_up_to_rank(8)
            } else {
                vec![lie_type.expect("clap requires --type without --all")]
            };
            verify(&types, level, format, out)
        }
        Command::Orbits { ty, level, format } => orbits(ty.lie_type, level, format, out),
        Command::Table {
            ty,
            level,
            coweight,
            format,
        } => table(ty.lie_type, level, coweight, format, out),
    }
}

fn parse_weight(ty: LieType, s: &str) -> Result<Weight, Failure> {
    let coeffs: Vec<i64> = parse_int_list(s, "weight").map_err(Failure::Usage)?;
    if coeffs.len() != ty.rank() {
        return Err(Failure::Usage(format!(
            "weight has {} entries but {ty} has rank {}",
            coeffs.len(),
            ty.rank()
        )));
    }
    Ok(Weight::new(coeffs))
}

fn emit_json<T: serde::Serialize>(out: &mut Vec<u8>, doc: &T) {
    serde_json::to_writer(&mut *out, doc).expect("serializing plain data");
    out.push(b'\n');
}

fn info(ty: LieType, format: Format, out: &mut Vec<u8>) -> CmdResult {
    let rs = RootSystem::new(ty)?;
    let doc = InfoDoc {
        algebra: ty.into(),
        cartan: rs.cartan().entries().to_vec(),
        theta: ThetaDoc {
            roots: rs.theta().coeffs().to_vec(),
            weights: rs.theta_weight().coeffs().to_vec(),
        },
        marks: rs.marks().to_vec(),
        comarks: rs.comarks().to_vec(),
        miniscule: rs.miniscule_indices().to_vec(),
        fundamental_group_order: rs.fundamental_group_order(),
    };
    match format {
        Format::Json => emit_json(out, &doc),
        Format::Text => {
            let _ = writeln!(out, "type: {ty}");
            let _ = writeln!(out, "cartan matrix (row i = alpha_i in fundamental weights):");
            for row in rs.cartan().entries() {
                let _ = writeln!(out, "  {}", Weight::new(row.clone()));
            }
            let _ = writeln!(out, "theta (simple roots): {}", rs.theta());
            let _ = writeln!(out, "theta (fundamental weights): {}", rs.theta_weight());
            let _ = writeln!(out, "marks: {:?}", doc.marks);
            let _ = writeln!(out, "comarks: {:?}", doc.comarks);
            let _ = writeln!(out, "miniscule coweights: {:?}", doc.miniscule);
            let _ = writeln!(out, "|P^v/Q^v|: {}", doc.fundamental_group_order);
        }
    }
    Ok(())
}

fn reflect_cmd(ty: LieType, word: &str, weight: &str, format: Format, out: &mut Vec<u8>) -> CmdResult {
    let letters: Vec<usize> = parse_int_list(word, "word").map_err(Failure::Usage)?;
    let weight = parse_weight(ty, weight)?;
    let word = WeylWord::new(letters);
    word.validate(ty.rank())?;
    let rs = RootSystem::new(ty)?;
    let image = apply_word(&rs, &word, &weight)?;
    match format {
        Format::Json => emit_json(
            out,
            &ReflectDoc {
                algebra: ty.into(),
                word: word.letters().to_vec(),
                from: coeffs(&weight),
                to: coeffs(&image),
            },
        ),
        Format::Text => {
            let _ = writeln!(out, "{image}");
        }
    }
    Ok(())
}

fn delta(
    ty: LieType,
    level: i64,
    weight: &str,
    coweight: usize,
    oracle: bool,
    format: Format,
    out: &mut Vec<u8>,
) -> CmdResult {
    let weight = parse_weight(ty, weight)?;
    let rs = RootSystem::new(ty)?;
    let image = delta_closed_form(&rs, level, &weight, coweight)?;
    let brute = if oracle {
        Some(delta_brute_force(&rs, level, &weight, coweight)?)
    } else {
        None
    };
    let equal = brute.as_ref().map(|b| *b == image);
    match format {
        Format::Json => emit_json(
            out,
            &DeltaDoc {
                algebra: ty.into(),
                level,
                coweight,
                from: coeffs(&weight),
                to: coeffs(&image),
                oracle: brute.as_ref().map(coeffs),
                equal,
            },
        ),
        Format::Text => match &brute {
            None => {
                let _ = writeln!(out, "{image}");
            }
            Some(b) => {
                let _ = writeln!(out, "closed form: {image}");
                let _ = writeln!(out, "oracle:      {b}");
                let _ = writeln!(out, "{}", if equal == Some(true) { "EQUAL" } else { "UNEQUAL" });
            }
        },
    }
    if equal == Some(false) {
        return Err(Failure::Check(format!(
            "closed form {image} differs from Weyl-word oracle"
        )));
    }
    Ok(())
}

fn verify(types: &[LieType], level: Option<i64>, format: Format, out: &mut Vec<u8>) -> CmdResult {
    let levels: Vec<i64> = match level {
        Some(k) if k < 1 => return Err(Failure::Usage(format!("level must be at least 1, got {k}"))),
        Some(k) => vec![k],
        None => vec![1, 2, 3],
    };
    // one worker per type; results are collected in input order
    let reports: Vec<deltashift::Result<VerifyReport>> = std::thread::scope(|s| {
        let handles: Vec<_> = types
            .iter()
            .map(|&t| {
                let levels = &levels;
                s.spawn(move || verify_type(t, levels))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification worker panicked"))
            .collect()
    });
    let reports: Vec<VerifyReport> = reports.into_iter().collect::<Result<_, _>>()?;

    match format {
        Format::Json => {
            let docs: Vec<VerifyDoc> = reports.iter().map(VerifyDoc::from).collect();
            if docs.len() == 1 {
                emit_json(out, &docs[0]);
            } else {
                emit_json(out, &docs);
            }
        }
        Format::Text => {
            for r in &reports {
                for c in &r.checks {
                    let _ = writeln!(out, "{c}");
                }
                let passed = r.checks.iter().filter(|c| c.passed).count();
                if r.is_vacuous() {
                    let _ = writeln!(
                        out,
                        "{}: no miniscule coweights, 0 checks run: PASS (vacuous)",
                        r.lie_type
                    );
                } else {
                    let verdict = if r.passed() { "PASS" } else { "FAIL" };
                    let _ = writeln!(
                        out,
                        "{}: {passed}/{} checks passed: {verdict}",
                        r.lie_type,
                        r.checks.len()
                    );
                }
            }
        }
    }
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures().map(|c| c.name.clone()))
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(failed.join(", ")))
    }
}

fn orbits(ty: LieType, level: i64, format: Format, out: &mut Vec<u8>) -> CmdResult {
    let rs = RootSystem::new(ty)?;
    let orbits = all_orbits(&rs, level)?;
    match format {
        Format::Json => emit_json(
            out,
            &OrbitsDoc {
                algebra: ty.into(),
                level,
                orbits: orbits
                    .iter()
                    .map(|o| o.iter().map(coeffs).collect())
                    .collect(),
            },
        ),
        Format::Text => {
            for o in &orbits {
                let parts: Vec<String> = o.iter().map(|w| w.to_string()).collect();
                let _ = writeln!(out, "{{{}}}", parts.join(", "));
            }
        }
    }
    Ok(())
}

fn table(ty: LieType, level: i64, coweight: Option<usize>, format: Format, out: &mut Vec<u8>) -> CmdResult {
    let rs = RootSystem::new(ty)?;
    if let Some(i) = coweight {
        if !rs.is_miniscule(i) {
            return Err(deltashift::Error::NotMiniscule { ty, index: i }.into());
        }
    }
    let table = action_table(&rs, level)?;
    let maps: Vec<_> = table
        .maps
        .iter()
        .filter(|m| coweight.is_none_or(|i| m.coweight == i))
        .collect();
    match format {
        Format::Json => {
            let docs: Vec<TableDoc> = maps.iter().map(|m| TableDoc::new(&table, m)).collect();
            if coweight.is_some() {
                emit_json(out, &docs[0]);
            } else {
                emit_json(out, &docs);
            }
        }
        Format::Text => {
            for m in maps {
                let _ = writeln!(out, "coweight {}:", m.coweight);
                for (from, to) in &m.entries {
                    let _ = writeln!(out, "  {from} -> {to}");
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consistency_errors_map_to_check_failure() {
        let e = deltashift::Error::NotBijective {
            ty: "A2".parse().unwrap(),
            level: 1,
            coweight: 1,
            detail: String::new(),
        };
        assert!(matches!(Failure::from(e), Failure::Check(_)));
        let e = deltashift::Error::InvalidLevel { level: 0, min: 1 };
        assert!(matches!(Failure::from(e), Failure::Usage(_)));
    }
}
