use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hookchar::characters::{
    alternant_formula, gl2_nabla_hooks, hook_formula, two_column_formula, HookFormulaInput, TwoColumnForm,
};
use hookchar::fixtures;
use hookchar::paths::{enumerate_t, filter_paths, gf_t, parse_filters};
use hookchar::pierimaps::{e_minus_map, e_plus_map, path_stats, TaggedPath};
use hookchar::schur::{restrict, specialize2};
use hookchar::verify::{self, Status, Suite};
use hookchar::{LatticePath, LaurentPoly, Partition, SchurExpansion, ShapeClass};

#[derive(Parser)]
#[command(name = "hookchar", version, about = "Hook components of rectangular diagonal-harmonics characters")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Formula {
    /// Sum over tableaux of μ and paths (needs --mu).
    Hook,
    /// The μ = 1^n case written over T(n,0) (needs --n).
    Alternant,
    /// Two-variable maj formula for hook μ.
    Nabla2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Lifted,
    Path,
}

#[derive(Subcommand)]
enum Cmd {
    /// Schur expansion of a hook component.
    Expand {
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long, value_enum, default_value_t = Formula::Hook)]
        formula: Formula,
        /// hooks, one-part, two-rows, two-column or V<b>.
        #[arg(long)]
        restrict: Option<String>,
        /// Evaluate at two variables (q, t).
        #[arg(long)]
        specialize: Option<u32>,
    },
    /// List the paths of T(n,s) with area and height.
    Paths {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        s: u32,
        /// Comma-separated predicates, e.g. `starts_with_east,height_eq=3`.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Area/height generating function of T(n,s).
    Gf {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        s: u32,
    },
    /// Path-level e_k^⊥ images.
    Pieri {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// A word of T(n,0); omit for the full table.
        #[arg(long)]
        path: Option<String>,
    },
    /// The (a,2,1^k) part of the alternant.
    TwoColumn {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Form::Path)]
        form: Form,
    },
    /// Run invariant suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        /// Print wall time per instance.
        #[arg(long)]
        timing: bool,
        /// Print passing instances too.
        #[arg(long)]
        verbose: bool,
    },
    /// The shipped E(4,4) character.
    Fixtures {
        #[arg(long)]
        mu: Option<String>,
    },
}

fn parse_mu(s: &str) -> Result<Partition> {
    s.parse().with_context(|| format!("malformed partition `{s}`"))
}

fn print_expansion(e: &SchurExpansion, json: bool, extra: serde_json::Value) -> Result<()> {
    if json {
        let mut v = serde_json::to_value(e)?;
        if let (Some(obj), Some(more)) = (v.as_object_mut(), extra.as_object()) {
            obj.extend(more.clone());
        }
        println!("{}", serde_json::to_string(&v)?);
    } else {
        println!("{e}");
    }
    Ok(())
}

fn print_poly(p: &LaurentPoly, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string(p)?);
    } else {
        println!("{p}");
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_expand(
    mu: Option<String>,
    n: Option<u32>,
    r: u32,
    formula: Formula,
    restriction: Option<String>,
    specialize: Option<u32>,
    json: bool,
) -> Result<()> {
    let mu = mu.as_deref().map(parse_mu).transpose()?;
    if let (Some(mu), Some(n)) = (&mu, n) {
        if mu.size() != n {
            bail!("--n {n} does not match |μ| = {}", mu.size());
        }
    }
    let (e, status) = match formula {
        Formula::Hook => {
            let mu = mu.context("--mu is required")?;
            let input = HookFormulaInput::new(mu.clone(), r)?;
            let out = hook_formula(&input).with_context(|| format!("expanding μ=({mu}), r={r}"))?;
            (out.expansion, Some(out.status))
        }
        Formula::Alternant => {
            let n = n.or(mu.as_ref().map(|m| m.size())).context("--n is required")?;
            if n < 2 {
                bail!("need n >= 2");
            }
            (alternant_formula(n, r), None)
        }
        Formula::Nabla2 => {
            let mu = mu.context("--mu is required")?;
            (gl2_nabla_hooks(mu.size(), r, &mu)?, None)
        }
    };
    let e = match restriction {
        Some(c) => restrict(&e, &ShapeClass::parse(&c)?),
        None => e,
    };
    if let Some(s) = status {
        eprintln!("status: {s}");
    }
    match specialize {
        None => print_expansion(&e, json, json!({ "status": status })),
        Some(2) => print_poly(&specialize2(&e), json),
        Some(m) => bail!("only --specialize 2 is supported, got {m}"),
    }
}

fn cmd_paths(n: u32, s: u32, filter: Option<String>, json: bool) -> Result<()> {
    let paths = match filter {
        Some(f) => filter_paths(n, s, &parse_filters(&f)?),
        None => enumerate_t(n, s),
    };
    if json {
        let rows: Vec<_> = paths
            .iter()
            .map(|g| json!({ "word": g.word(), "area": g.area(), "ht": g.ht() }))
            .collect();
        println!("{}", serde_json::to_string(&json!({ "n": n, "s": s, "paths": rows }))?);
    } else {
        for g in &paths {
            println!("{:<12} area={} ht={}", g.word(), g.area(), g.ht());
        }
    }
    Ok(())
}

fn tagged_json(t: &Result<TaggedPath>) -> serde_json::Value {
    match t {
        Ok(t) => json!({
            "des_conj": t.conj_descents(),
            "path": t.path.word(),
            "hook": t.hook().ok().map(|h| h.parts().to_vec()),
        }),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn tagged_text(t: &Result<TaggedPath>) -> String {
    match t {
        Ok(t) => {
            let hook = t.hook().map(|h| format!("({h})")).unwrap_or_else(|e| e.to_string());
            format!("{t} hook={hook}")
        }
        Err(_) => "-".into(),
    }
}

fn cmd_pieri(n: u32, k: u32, path: Option<String>, json: bool) -> Result<()> {
    if n < 2 || k > n - 2 {
        bail!("need 0 <= k <= n-2, got n={n} k={k}");
    }
    let paths = match path {
        Some(w) => vec![LatticePath::parse(n, 0, &w)?],
        None => enumerate_t(n, 0),
    };
    let mut rows = Vec::new();
    for g in &paths {
        let plus = e_plus_map(k, g).map_err(anyhow::Error::from);
        let minus = e_minus_map(k, g).map_err(anyhow::Error::from);
        let st = path_stats(g);
        if json {
            rows.push(json!({
                "path": g.word(),
                "area": g.area(),
                "ht": g.ht(),
                "p": st.p,
                "h": st.h,
                "plus": tagged_json(&plus),
                "minus": tagged_json(&minus),
            }));
        } else {
            println!(
                "{:<12} area={} ht={}  e+ {}  e- {}",
                g.word(),
                g.area(),
                g.ht(),
                tagged_text(&plus),
                tagged_text(&minus)
            );
        }
    }
    if json {
        println!("{}", serde_json::to_string(&json!({ "n": n, "k": k, "rows": rows }))?);
    }
    Ok(())
}

fn cmd_verify(suite: &str, max_n: u32, timing: bool, verbose: bool, json: bool) -> Result<bool> {
    let suites = Suite::parse_list(suite)?;
    let reports = verify::run(&suites, max_n);
    if json {
        println!("{}", serde_json::to_string(&reports)?);
    } else {
        for s in &suites {
            let mine: Vec<_> = reports.iter().filter(|r| r.suite == *s).collect();
            let count = |st| mine.iter().filter(|r| r.status == st).count();
            for r in &mine {
                if verbose || r.status != Status::Pass {
                    if timing {
                        println!("{r} ({:.3} ms)", r.elapsed.as_secs_f64() * 1e3);
                    } else {
                        println!("{r}");
                    }
                }
            }
            let total: f64 = mine.iter().map(|r| r.elapsed.as_secs_f64()).sum();
            let mut line = format!(
                "{s}: {} pass, {} fail, {} reported",
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Reported)
            );
            if timing {
                line.push_str(&format!(" in {total:.3} s"));
            }
            println!("{line}");
        }
    }
    Ok(!verify::any_failed(&reports))
}

fn cmd_fixtures(mu: Option<String>, json: bool) -> Result<()> {
    let f = fixtures::e44()?;
    let wanted = mu.as_deref().map(parse_mu).transpose()?;
    let mut out = Vec::new();
    for (m, e) in f.components.iter().rev() {
        if wanted.as_ref().is_some_and(|w| w != m) {
            continue;
        }
        if json {
            out.push(json!({ "mu": m, "expansion": e }));
        } else {
            println!("<{}, s[{m}]> = {e}", f.name);
        }
    }
    if let Some(w) = &wanted {
        if !f.components.contains_key(w) {
            bail!("μ=({w}) is not a partition of {}", f.n);
        }
    }
    if json {
        println!("{}", serde_json::to_string(&json!({ "name": f.name, "components": out }))?);
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    let json = cli.json;
    match cli.cmd {
        Cmd::Expand {
            mu,
            n,
            r,
            formula,
            restrict,
            specialize,
        } => cmd_expand(mu, n, r, formula, restrict, specialize, json)?,
        Cmd::Paths { n, s, filter } => cmd_paths(n, s, filter, json)?,
        Cmd::Gf { n, s } => print_poly(&gf_t(n, s), json)?,
        Cmd::Pieri { n, k, path } => cmd_pieri(n, k, path, json)?,
        Cmd::TwoColumn { n, form } => {
            let form = match form {
                Form::Lifted => TwoColumnForm::Lifted,
                Form::Path => TwoColumnForm::Path,
            };
            print_expansion(&two_column_formula(n, form), json, json!({}))?
        }
        Cmd::Verify {
            suite,
            max_n,
            timing,
            verbose,
        } => return cmd_verify(&suite, max_n, timing, verbose, json),
        Cmd::Fixtures { mu } => cmd_fixtures(mu, json)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
