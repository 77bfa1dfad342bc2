use bott_basis_cli::config::{validate, Cli, CliError, Command};
use bott_basis_cli::{run, selfcheck};
use clap::Parser;

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: &Cli) -> Result<i32, CliError> {
    let (output, code) = match &cli.command {
        Command::Basis(args) => run::cmd_basis(&validate(args)?)?,
        Command::Lvectors(args) => run::cmd_lvectors(&validate(args)?)?,
        Command::Leaves(args) => run::cmd_leaves(&validate(args)?)?,
        Command::CharacterCheck(args) => run::cmd_character_check(&validate(args)?)?,
        Command::Polytope(args) => run::cmd_polytope(&validate(args)?)?,
        Command::StringCompare(args) => run::cmd_string_compare(&validate(args)?)?,
        Command::Selftest => return Ok(run_selftest()),
    };
    let out_path = match &cli.command {
        Command::Basis(a)
        | Command::Lvectors(a)
        | Command::Leaves(a)
        | Command::CharacterCheck(a)
        | Command::Polytope(a)
        | Command::StringCompare(a) => a.out.clone(),
        Command::Selftest => None,
    };
    match out_path {
        Some(path) => std::fs::write(&path, output)
            .map_err(|e| CliError::Internal(format!("writing {}: {e}", path.display())))?,
        None => print!("{output}"),
    }
    Ok(code)
}

fn run_selftest() -> i32 {
    let outcomes = selfcheck::run_all();
    let mut failed = 0;
    for o in &outcomes {
        match &o.result {
            Ok(msg) => println!("[PASS] criterion {:2}: {} - {msg}", o.index, o.name),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] criterion {:2}: {} - {msg}", o.index, o.name);
            }
        }
    }
    if failed == 0 {
        println!("selftest: all {} criteria passed", outcomes.len());
        0
    } else {
        println!("selftest: {failed} of {} criteria FAILED", outcomes.len());
        4
    }
}
