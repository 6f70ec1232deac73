//! Flat `key=value` configuration files, mapped one-to-one onto long flags.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;

use clap::{ArgMatches, Command};

use crate::error::CliError;

const NOT_DUMPED: [&str; 4] = ["config", "dump_config", "help", "version"];

/// Parses config text into `(key, value)` pairs in file order.
pub fn parse(text: &str) -> Result<Vec<(String, String)>, CliError> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("config line {}: expected key=value, got `{line}`", no + 1)))?;
        out.push((k.trim().to_string(), v.trim().to_string()));
    }
    Ok(out)
}

/// Replaces `--config FILE` in `args` by the flags the file holds. File
/// flags go right after the subcommand so that later command-line flags
/// override them. `subcommands` lists the valid subcommand names.
pub fn expand(args: Vec<OsString>, subcommands: &[&str]) -> Result<Vec<OsString>, CliError> {
    let mut rest = Vec::with_capacity(args.len());
    let mut path = None;
    let mut it = args.into_iter();
    let prog = it.next().unwrap_or_else(|| "julia-limits".into());
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            path = Some(it.next().ok_or_else(|| CliError::Usage("--config needs a file path".into()))?);
        } else if let Some(p) = s.strip_prefix("--config=") {
            path = Some(p.into());
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else {
        let mut all = vec![prog];
        all.extend(rest);
        return Ok(all);
    };
    let text = fs::read_to_string(&path)
        .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.to_string_lossy())))?;
    let entries = parse(&text)?;

    let file_command = entries.iter().find(|(k, _)| k == "command").map(|(_, v)| v.clone());
    let flags: Vec<OsString> = entries
        .iter()
        .filter(|(k, _)| k != "command")
        .map(|(k, v)| format!("--{k}={v}").into())
        .collect();

    let sub_at = rest.iter().position(|t| subcommands.contains(&t.to_string_lossy().as_ref()));
    let mut all = vec![prog];
    match (sub_at, file_command) {
        (Some(i), file_command) => {
            if let Some(fc) = file_command {
                if rest[i].to_string_lossy() != fc {
                    return Err(CliError::Usage(format!(
                        "config is for `{fc}` but the command line asks for `{}`",
                        rest[i].to_string_lossy()
                    )));
                }
            }
            all.extend(rest.drain(..=i));
            all.extend(flags);
            all.extend(rest);
        }
        (None, Some(fc)) => {
            all.push(fc.into());
            all.extend(flags);
            all.extend(rest);
        }
        (None, None) => return Err(CliError::Usage("config has no `command=` line and none was given".into())),
    }
    Ok(all)
}

/// Effective configuration of a parsed subcommand, defaults included.
pub fn dump(root: &Command, matches: &ArgMatches) -> String {
    let mut out = String::from("# julia-limits configuration\n");
    let Some((name, sub_matches)) = matches.subcommand() else {
        return out;
    };
    let _ = writeln!(out, "command={name}");
    let sub = root.find_subcommand(name).expect("parsed subcommand exists");
    for arg in sub.get_arguments() {
        let id = arg.get_id().as_str();
        if NOT_DUMPED.contains(&id) {
            continue;
        }
        let (Some(long), Some(raw)) = (arg.get_long(), sub_matches.get_raw(id)) else {
            continue;
        };
        let values: Vec<String> = raw.map(|v| v.to_string_lossy().into_owned()).collect();
        let _ = writeln!(out, "{long}={}", values.join(","));
    }
    out
}
