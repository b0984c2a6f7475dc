//! Command-line front end.
//!
//! Semigroup arguments accept three spellings: a generator list `4,6,9`, a
//! named family `hermitian:q=2,r=3`, or a gluing expression `2*(2,3)+5*(1)`
//! (nestable on either side). Exit codes: 0 success, 1 computation error,
//! 2 usage error. Results go to stdout, diagnostics to stderr, and identical
//! invocations produce byte-identical output.

use crate::apery::{apery, divisors};
use crate::bounds::{bounds_table_with_budget, to_csv, to_json, to_markdown};
use crate::error::Error;
use crate::families::{hermitian, suzuki, suzuki_gamma1, FamilySpec};
use crate::fengrao::{
    ceil_div, feng_rao_distance, feng_rao_number_with_budget,
    generalized_feng_rao_distance_with_budget, is_free, is_telescopic, second_feng_rao_number,
    telescopic_up_to_genus, DEFAULT_TUPLE_BUDGET,
};
use crate::gluing::{make_gluing, Gluing};
use crate::oracle::{
    oracle_apery, oracle_delta_r, oracle_divisors, oracle_structure, OracleConfig,
};
use crate::semigroup::{make_semigroup, NumericalSemigroup};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug)]
pub enum ParsedSpec {
    Plain(NumericalSemigroup),
    Family(Box<FamilySpec>),
    Glued(Box<Gluing>),
}

impl ParsedSpec {
    pub fn semigroup(&self) -> &NumericalSemigroup {
        match self {
            ParsedSpec::Plain(s) => s,
            ParsedSpec::Family(f) => &f.expanded,
            ParsedSpec::Glued(g) => g.expanded(),
        }
    }
}

#[derive(Debug)]
pub enum SpecError {
    /// Malformed text (usage error, exit 2).
    Syntax(String),
    /// Well-formed text naming an invalid object (computation error, exit 1).
    Domain(Error),
}

pub fn parse_spec(text: &str) -> std::result::Result<ParsedSpec, SpecError> {
    let t = text.trim();
    if t.contains(':') {
        parse_family(t).map(|f| ParsedSpec::Family(Box::new(f)))
    } else if t.contains('*') {
        parse_gluing_expr(t).map(|g| ParsedSpec::Glued(Box::new(g)))
    } else {
        let gens = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| SpecError::Syntax(format!("expected an integer, found {p:?}")))
            })
            .collect::<std::result::Result<Vec<i64>, SpecError>>()?;
        make_semigroup(&gens)
            .map(ParsedSpec::Plain)
            .map_err(SpecError::Domain)
    }
}

fn parse_family(t: &str) -> std::result::Result<FamilySpec, SpecError> {
    let (name, rest) = t.split_once(':').unwrap();
    let name = name.trim();
    let mut params: Vec<(&str, i64)> = Vec::new();
    for piece in rest.split(',') {
        let (k, v) = piece.split_once('=').ok_or_else(|| {
            SpecError::Syntax(format!("expected key=value, found {:?}", piece.trim()))
        })?;
        let v: i64 = v.trim().parse().map_err(|_| {
            SpecError::Syntax(format!("expected an integer value, found {:?}", v.trim()))
        })?;
        params.push((k.trim(), v));
    }
    let take = |keys: [&str; 2]| -> std::result::Result<(i64, i64), SpecError> {
        if params.len() != 2 || params[0].0 != keys[0] || params[1].0 != keys[1] {
            return Err(SpecError::Syntax(format!(
                "family {name:?} takes parameters {}=…,{}=…",
                keys[0], keys[1]
            )));
        }
        Ok((params[0].1, params[1].1))
    };
    match name {
        "hermitian" => {
            let (q, r) = take(["q", "r"])?;
            hermitian(q, r).map_err(SpecError::Domain)
        }
        "suzuki" => {
            let (p, n) = take(["p", "n"])?;
            suzuki(p, n).map_err(SpecError::Domain)
        }
        "suzuki-gamma1" => {
            let (p, n) = take(["p", "n"])?;
            suzuki_gamma1(p, n).map_err(SpecError::Domain)
        }
        other => Err(SpecError::Syntax(format!("unknown family {other:?}"))),
    }
}

fn parse_gluing_expr(t: &str) -> std::result::Result<Gluing, SpecError> {
    let mut depth = 0i32;
    let mut split = None;
    for (i, b) in t.bytes().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' if depth == 0 => {
                if split.is_some() {
                    return Err(SpecError::Syntax(
                        "a gluing expression has exactly one top-level '+'".into(),
                    ));
                }
                split = Some(i);
            }
            _ => {}
        }
        if depth < 0 {
            return Err(SpecError::Syntax("unbalanced parentheses".into()));
        }
    }
    if depth != 0 {
        return Err(SpecError::Syntax("unbalanced parentheses".into()));
    }
    let i = split.ok_or_else(|| {
        SpecError::Syntax("expected a gluing expression 'a1*(…)+a2*(…)'".into())
    })?;
    let (scale1, inner1) = parse_factor(&t[..i])?;
    let (scale2, inner2) = parse_factor(&t[i + 1..])?;
    make_gluing(scale1, inner1, scale2, inner2).map_err(SpecError::Domain)
}

fn parse_factor(t: &str) -> std::result::Result<(i64, NumericalSemigroup), SpecError> {
    let t = t.trim();
    let (num, rest) = t.split_once('*').ok_or_else(|| {
        SpecError::Syntax(format!("expected 'scale*(…)', found {t:?}"))
    })?;
    let scale: i64 = num.trim().parse().map_err(|_| {
        SpecError::Syntax(format!("expected an integer scale, found {:?}", num.trim()))
    })?;
    let inner = rest
        .trim()
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| {
            SpecError::Syntax(format!("expected parentheses around {:?}", rest.trim()))
        })?;
    let parsed = parse_spec(inner)?;
    Ok((scale, parsed.semigroup().clone()))
}

const SPEC_HELP: &str =
    "Generator list \"4,6,9\", family \"hermitian:q=2,r=3\", or gluing \"2*(2,3)+5*(1)\"";

#[derive(Parser)]
#[command(
    name = "sgfr",
    version,
    about = "Numerical-semigroup calculator: Apéry and divisor sets, Feng-Rao \
             distances and numbers, gluing towers, and second-weight bound tables \
             for one-point AG codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Structural summary: generators, multiplicity, Frobenius number, conductor, genus, freeness
    Info {
        #[arg(help = SPEC_HELP)]
        spec: String,
        /// Recompute through the definition-level reference and compare
        #[arg(long)]
        verify: bool,
    },
    /// Generalized Apéry set Ap(S, x) = {a in S : a - x not in S} for any integer x
    Apery {
        #[arg(help = SPEC_HELP)]
        spec: String,
        x: i64,
        #[arg(long)]
        verify: bool,
    },
    /// Divisor set D(z) = {s in S : z - s in S}
    Divisors {
        #[arg(help = SPEC_HELP)]
        spec: String,
        z: i64,
        #[arg(long)]
        verify: bool,
    },
    /// Feng-Rao distance of order r at index a
    Fr {
        #[arg(help = SPEC_HELP)]
        spec: String,
        #[arg(value_parser = clap::value_parser!(i64).range(0..))]
        a: i64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..))]
        r: i64,
        /// Reference check needs r <= 3
        #[arg(long)]
        verify: bool,
    },
    /// Feng-Rao number E(S, r), the eventual offset of the order-r distance
    Frnumber {
        #[arg(help = SPEC_HELP)]
        spec: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(1..))]
        r: i64,
        /// Reference check needs r <= 3
        #[arg(long)]
        verify: bool,
    },
    /// Expand a named family member and verify its closed-form second Feng-Rao number
    Family {
        /// Family spec such as "hermitian:q=2,r=3", "suzuki:p=2,n=1", "suzuki-gamma1:p=2,n=1"
        spec: String,
        /// Additionally recompute E2 through the definition-level reference
        #[arg(long)]
        verify: bool,
    },
    /// Second-weight bound table: Kirfel-Pellikaan, Griesmer order bound, E2 bound, exact value
    Bounds {
        #[arg(help = SPEC_HELP)]
        spec: String,
        /// Size of the underlying finite field
        #[arg(long)]
        q: i64,
        /// First code index a (must be >= conductor)
        #[arg(long)]
        from: i64,
        /// Last code index a
        #[arg(long)]
        to: i64,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
        /// Transpose Markdown so index values run across the columns
        #[arg(long)]
        paper_layout: bool,
        #[arg(long)]
        verify: bool,
    },
    /// Enumerate telescopic semigroups by genus and check E2 = multiplicity on each
    ScanTelescopic {
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        genus_max: i64,
        /// Recheck every E2 through the definition-level reference (slow)
        #[arg(long)]
        verify: bool,
    },
}

type CmdResult = std::result::Result<(), (i32, String)>;

pub fn main_entry() -> i32 {
    let cli = Cli::parse();
    match env_budget().and_then(|_| dispatch(cli.command)) {
        Ok(()) => 0,
        Err((code, message)) => {
            eprintln!("error: {message}");
            code
        }
    }
}

fn parse(spec: &str) -> std::result::Result<ParsedSpec, (i32, String)> {
    parse_spec(spec).map_err(|e| match e {
        SpecError::Syntax(m) => (2, m),
        SpecError::Domain(d) => (1, d.to_string()),
    })
}

fn to1(e: Error) -> (i32, String) {
    (1, e.to_string())
}

fn env_budget() -> std::result::Result<u64, (i32, String)> {
    match std::env::var("SGFR_TUPLE_BUDGET") {
        Ok(v) => v.trim().parse::<u64>().map_err(|_| {
            (
                2,
                format!("SGFR_TUPLE_BUDGET must be a nonnegative integer, found {v:?}"),
            )
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_TUPLE_BUDGET),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err((2, "SGFR_TUPLE_BUDGET is not valid UTF-8".into()))
        }
    }
}

fn oracle_cfg() -> std::result::Result<OracleConfig, (i32, String)> {
    Ok(OracleConfig {
        tuple_budget: env_budget()?,
        ..OracleConfig::default()
    })
}

fn set_text(elements: &[i64]) -> String {
    let inner = elements
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{inner}}}")
}

fn check_eq<T: PartialEq + std::fmt::Debug>(what: &str, reference: &T, fast: &T) -> CmdResult {
    if reference == fast {
        Ok(())
    } else {
        Err((
            1,
            format!("verification mismatch for {what}: computed {fast:?}, reference {reference:?}"),
        ))
    }
}

/// E(S, r) recomputed purely through the reference path: the order-r distance
/// at a = 2c−1 minus the Goppa offset a+1−2g, with c and g themselves
/// recomputed from the generators.
fn reference_feng_rao_number(
    s: &NumericalSemigroup,
    r: i64,
    cfg: &OracleConfig,
) -> std::result::Result<i64, (i32, String)> {
    if r > 3 {
        return Err((2, "--verify supports --r at most 3".into()));
    }
    let (_, _, c, g) = oracle_structure(s);
    let a = 2 * c - 1;
    let d = oracle_delta_r(s, a, r as usize, cfg).map_err(to1)?;
    Ok(d - (a + 1 - 2 * g))
}

fn dispatch(cmd: Cmd) -> CmdResult {
    match cmd {
        Cmd::Info { spec, verify } => {
            let parsed = parse(&spec)?;
            let s = parsed.semigroup();
            println!("generators: {s}");
            println!("multiplicity: {}", s.multiplicity());
            println!("frobenius: {}", s.frobenius());
            println!("conductor: {}", s.conductor());
            println!("genus: {}", s.genus());
            println!("free: {}", is_free(s));
            println!("telescopic: {}", is_telescopic(s));
            if verify {
                let fast = (s.multiplicity(), s.frobenius(), s.conductor(), s.genus());
                check_eq("structure", &oracle_structure(s), &fast)?;
                println!("verify: ok");
            }
            Ok(())
        }
        Cmd::Apery { spec, x, verify } => {
            let parsed = parse(&spec)?;
            let s = parsed.semigroup();
            let set = apery(s, x);
            println!("{}", set_text(set.elements()));
            println!("size: {}", set.len());
            if verify {
                let reference = oracle_apery(s, x, &oracle_cfg()?);
                check_eq("apery set", &reference, &set.elements().to_vec())?;
                println!("verify: ok");
            }
            Ok(())
        }
        Cmd::Divisors { spec, z, verify } => {
            let parsed = parse(&spec)?;
            let s = parsed.semigroup();
            let set = divisors(s, z);
            println!("{}", set_text(set.elements()));
            println!("size: {}", set.len());
            if verify {
                let reference = oracle_divisors(s, z);
                check_eq("divisor set", &reference, &set.elements().to_vec())?;
                println!("verify: ok");
            }
            Ok(())
        }
        Cmd::Fr { spec, a, r, verify } => {
            let parsed = parse(&spec)?;
            let s = parsed.semigroup();
            let value = if r == 1 {
                feng_rao_distance(s, a)
            } else {
                generalized_feng_rao_distance_with_budget(s, a, r as usize, env_budget()?)
                    .map_err(to1)?
            };
            println!("{value}");
            if verify {
                if r > 3 {
                    return Err((2, "--verify supports --r at most 3".into()));
                }
                let reference = oracle_delta_r(s, a, r as usize, &oracle_cfg()?).map_err(to1)?;
                check_eq("feng-rao distance", &reference, &value)?;
                println!("verify: ok");
            }
            Ok(())
        }
        Cmd::Frnumber { spec, r, verify } => {
            let parsed = parse(&spec)?;
            let s = parsed.semigroup();
            let value =
                feng_rao_number_with_budget(s, r as usize, env_budget()?).map_err(to1)?;
            println!("{value}");
            if verify {
                let reference = reference_feng_rao_number(s, r, &oracle_cfg()?)?;
                check_eq("feng-rao number", &reference, &value)?;
                println!("verify: ok");
            }
            Ok(())
        }
        Cmd::Family { spec, verify } => {
            let parsed = parse(&spec)?;
            let ParsedSpec::Family(fam) = &parsed else {
                return Err((
                    2,
                    "the family subcommand needs a family spec like \"hermitian:q=2,r=3\"".into(),
                ));
            };
            let s = &fam.expanded;
            println!("family: {}", fam.kind);
            println!("expanded: {s}");
            println!("tower: {}", fam.tower);
            println!("multiplicity: {}", s.multiplicity());
            println!("genus: {}", s.genus());
            println!("conductor: {}", s.conductor());
            println!("closed-form E2: {}", fam.closed_form_e2);
            let computed = second_feng_rao_number(s).map_err(to1)?;
            println!("computed E2: {computed}");
            if computed != fam.closed_form_e2 {
                return Err((
                    1,
                    format!(
                        "closed form {} disagrees with computed E2 {computed}",
                        fam.closed_form_e2
                    ),
                ));
            }
            println!("verified: true");
            if verify {
                let reference = reference_feng_rao_number(s, 2, &oracle_cfg()?)?;
                check_eq("E2", &reference, &computed)?;
                println!("verify: ok");
            }
            Ok(())
        }
        Cmd::Bounds {
            spec,
            q,
            from,
            to,
            format,
            paper_layout,
            verify,
        } => {
            if paper_layout && format != Format::Md {
                return Err((2, "--paper-layout applies only to --format md".into()));
            }
            let parsed = parse(&spec)?;
            let s = parsed.semigroup();
            let rows =
                bounds_table_with_budget(s, from, to, q, env_budget()?).map_err(to1)?;
            let text = match format {
                Format::Md => to_markdown(&rows, paper_layout),
                Format::Csv => to_csv(&rows),
                Format::Json => to_json(&rows),
            };
            println!("{text}");
            if verify {
                let cfg = oracle_cfg()?;
                for row in &rows {
                    let kp = oracle_delta_r(s, row.a + 2, 1, &cfg).map_err(to1)?;
                    check_eq(&format!("kp at a={}", row.a), &kp, &row.kp)?;
                    let d1 = oracle_delta_r(s, row.a + 1, 1, &cfg).map_err(to1)?;
                    check_eq(&format!("gob at a={}", row.a), &(d1 + ceil_div(d1, q)), &row.gob)?;
                    if row.exact_certified {
                        let exact = oracle_delta_r(s, row.a + 1, 2, &cfg).map_err(to1)?;
                        check_eq(&format!("exact at a={}", row.a), &exact, &row.exact)?;
                    }
                }
                println!("verify: ok");
            }
            Ok(())
        }
        Cmd::ScanTelescopic { genus_max, verify } => {
            let found = telescopic_up_to_genus(genus_max);
            for s in &found {
                let e2 = second_feng_rao_number(s).map_err(to1)?;
                if e2 != s.multiplicity() {
                    return Err((
                        1,
                        format!(
                            "E2 = {e2} differs from multiplicity {} for {s}",
                            s.multiplicity()
                        ),
                    ));
                }
            }
            println!(
                "telescopic semigroups with genus in [1, {genus_max}]: {}",
                found.len()
            );
            println!("E2 = multiplicity: {0}/{0}", found.len());
            if verify {
                let cfg = oracle_cfg()?;
                for s in &found {
                    let reference = reference_feng_rao_number(s, 2, &cfg)?;
                    check_eq(&format!("E2 of {s}"), &reference, &s.multiplicity())?;
                }
                println!("verify: ok");
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_forms() {
        let p = parse_spec("4, 6, 9").unwrap();
        assert_eq!(p.semigroup().generators(), &[4, 6, 9]);

        let p = parse_spec("hermitian:q=2,r=3").unwrap();
        assert_eq!(p.semigroup().generators(), &[4, 6, 9]);
        assert!(matches!(p, ParsedSpec::Family(_)));

        let p = parse_spec("2*(2,3)+5*(1)").unwrap();
        assert_eq!(p.semigroup().generators(), &[4, 5, 6]);

        // Nested tower: 2·(2·⟨2,3⟩+5·N) + 13·N = ⟨8,10,12,13⟩.
        let p = parse_spec("2*(2*(2,3)+5*(1))+13*(1)").unwrap();
        assert_eq!(p.semigroup().generators(), &[8, 10, 12, 13]);
    }

    #[test]
    fn spec_syntax_errors() {
        assert!(matches!(parse_spec("4,x,9"), Err(SpecError::Syntax(_))));
        assert!(matches!(parse_spec("mystery:q=2"), Err(SpecError::Syntax(_))));
        assert!(matches!(
            parse_spec("hermitian:q=2"),
            Err(SpecError::Syntax(_))
        ));
        assert!(matches!(
            parse_spec("2*(2,3)+5*(1)+7*(1)"),
            Err(SpecError::Syntax(_))
        ));
        assert!(matches!(parse_spec("2*(2,3"), Err(SpecError::Syntax(_))));
        assert!(matches!(parse_spec("2*2,3"), Err(SpecError::Syntax(_))));
    }

    #[test]
    fn spec_domain_errors() {
        assert!(matches!(parse_spec("4,6"), Err(SpecError::Domain(_))));
        assert!(matches!(parse_spec("0,3"), Err(SpecError::Domain(_))));
        assert!(matches!(
            parse_spec("hermitian:q=1,r=3"),
            Err(SpecError::Domain(_))
        ));
        // 3 is a minimal generator of ⟨3,4⟩, so it cannot be a gluing scale.
        assert!(matches!(
            parse_spec("3*(2,3)+2*(3,4)"),
            Err(SpecError::Domain(_))
        ));
    }
}
