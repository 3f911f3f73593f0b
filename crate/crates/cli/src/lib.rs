//! The `weylbn` command-line driver.

pub mod args;
pub mod render;
pub mod suite;
pub mod suites;

use std::time::Instant;

use serde_json::json;
use weylbn::rootsys::{Family, RootSystem, RootSystemSpec};
use weylbn::titssys::DEFAULT_MAX_GROUP;
use weylbn::weyl::{WeylGroup, Word};
use weylbn::Error;

use args::{BnArgs, Cli, Command, Format};
use suite::SuiteResult;
use suites::BnSpec;

pub const MAX_GROUP_ENV: &str = "WEYL_BN_MAX_GROUP";
pub const MAX_LEMMA2_RANK: usize = 12;

/// Rendered output and exit code.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

/// A failure to run at all, as opposed to a failing case.
#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { message: message.into(), code: 2 }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidSpec(_)
            | Error::InvalidLetter { .. }
            | Error::Parse { .. }
            | Error::RankTooSmall { .. }
            | Error::NotPrime(_)
            | Error::InvalidArgument(_)
            | Error::GroupTooLarge { .. } => 2,
            _ => 1,
        };
        Self { message: e.to_string(), code }
    }
}

/// `WEYL_BN_MAX_GROUP` if set, else the library default.
pub fn max_group_from_env(value: Option<&str>) -> Result<usize, Failure> {
    match value {
        None => Ok(DEFAULT_MAX_GROUP),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(Failure::usage(format!("{MAX_GROUP_ENV} must be a positive integer, got {v:?}"))),
        },
    }
}

fn spec_of(family: &str, rank: usize) -> Result<RootSystemSpec, Failure> {
    Ok(RootSystemSpec::new(family.parse::<Family>()?, rank)?)
}

fn timed(timings: bool, f: impl FnOnce() -> weylbn::Result<SuiteResult>) -> Result<SuiteResult, Failure> {
    let start = Instant::now();
    let mut s = f()?;
    if timings {
        s.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(s)
}

fn bn_spec(a: &BnArgs) -> Result<BnSpec, Failure> {
    let pair = |v: &Vec<u32>| (v[0] as usize, v[1]);
    if let Some(v) = &a.sl {
        let (n, p) = pair(v);
        Ok(BnSpec::Sl(n, p))
    } else if let Some(v) = &a.sl_rank1 {
        let (n, p) = pair(v);
        Ok(BnSpec::SlRank1(n, p))
    } else if let Some(v) = &a.projective {
        let (n, p) = pair(v);
        Ok(BnSpec::Projective(n, p))
    } else if let Some(p) = a.affine {
        Ok(BnSpec::Affine(p))
    } else if let Some(name) = &a.example {
        if suites::EXAMPLES.contains(&name.as_str()) {
            Ok(BnSpec::Example(name.clone()))
        } else {
            Err(Failure::usage(format!("unknown example {name:?} (known: {})", suites::EXAMPLES.join(", "))))
        }
    } else {
        Err(Failure::usage("bn needs one of --sl, --sl-rank1, --projective, --affine, --example"))
    }
}

fn render_suites(format: Format, suites: &[SuiteResult], aggregate: bool) -> String {
    match (format, aggregate) {
        (Format::Text, false) => render::suite_text(&suites[0]),
        (Format::Text, true) => render::report_text(suites),
        (Format::Json, false) => render::suite_json(&suites[0]),
        (Format::Json, true) => render::report_json(suites),
        (Format::Csv, _) => render::suites_csv(suites),
    }
}

fn suites_output(format: Format, suites: Vec<SuiteResult>, aggregate: bool) -> Output {
    let code = if suites.iter().all(SuiteResult::pass) { 0 } else { 1 };
    Output { text: render_suites(format, &suites, aggregate), code }
}

fn roots_listing(format: Format, spec: RootSystemSpec) -> Result<Output, Failure> {
    let rs = RootSystem::build(spec)?;
    let mut idx: Vec<usize> = (0..rs.num_roots()).collect();
    idx.sort_by_key(|&i| (!rs.is_positive(i), rs.height(i).abs(), rs.simple_coords(i).to_vec()));
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    let text = match format {
        Format::Text => {
            let mut s = format!("# {spec}: {} roots; height | simple-root coordinates | vector\n", rs.num_roots());
            for &i in &idx {
                s.push_str(&format!("{} | {} | {}\n", rs.height(i), join(rs.simple_coords(i)), join(rs.root(i))));
            }
            s
        }
        Format::Json => {
            let roots: Vec<_> = idx
                .iter()
                .map(|&i| json!({ "height": rs.height(i), "coords": rs.simple_coords(i), "vector": rs.root(i) }))
                .collect();
            render::listing_json(json!({
                "type": spec.to_string(),
                "count": rs.num_roots(),
                "ambient_dim": rs.ambient_dim(),
                "scale": rs.scale(),
                "roots": roots,
            }))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = idx
                .iter()
                .map(|&i| vec![rs.height(i).to_string(), join(rs.simple_coords(i)), join(rs.root(i))])
                .collect();
            render::rows_csv(&["height", "coords", "vector"], &rows)
        }
    };
    Ok(Output { text, code: 0 })
}

fn reduced_words_listing(format: Format, spec: RootSystemSpec, word: &str, cap: usize) -> Result<Output, Failure> {
    let g = WeylGroup::new(&RootSystem::build(spec)?)?;
    let word = Word::parse_one_based(word)?;
    word.check(g.rank())?;
    let w = g.element_of(&word)?;
    let words: Vec<String> = g.reduced_words(&w, cap)?.iter().map(ToString::to_string).collect();
    let text = match format {
        Format::Text => words.iter().map(|u| format!("{u}\n")).collect(),
        Format::Json => render::listing_json(json!({
            "type": spec.to_string(),
            "word": word.to_string(),
            "length": w.length(),
            "count": words.len(),
            "reduced_words": words,
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = words.iter().map(|u| vec![u.clone()]).collect();
            render::rows_csv(&["word"], &rows)
        }
    };
    Ok(Output { text, code: 0 })
}

/// Every suite, in a fixed order.
pub fn all_suites(cap: usize, timings: bool) -> Result<Vec<SuiteResult>, Failure> {
    let mut out = vec![
        timed(timings, || suites::lemma2_suite(8, &Family::ALL))?,
        timed(timings, suites::oracle_suite)?,
        timed(timings, suites::prop7_suite)?,
    ];
    for spec in suites::all_bn_specs() {
        out.push(timed(timings, || suites::bn_suite(&spec, cap))?);
    }
    out.push(timed(timings, || suites::coxeter_suite(cap))?);
    Ok(out)
}

/// Runs one parsed command on the current rayon pool.
pub fn run(cli: &Cli, cap: usize) -> Result<Output, Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Lemma2 { max_rank, family } => {
            if !(2..=MAX_LEMMA2_RANK).contains(max_rank) {
                return Err(Failure::usage(format!("--max-rank must be in 2..={MAX_LEMMA2_RANK}, got {max_rank}")));
            }
            let families = if family.is_empty() {
                Family::ALL.to_vec()
            } else {
                family.iter().map(|f| f.parse()).collect::<weylbn::Result<Vec<Family>>>()?
            };
            let s = timed(cli.timings, || suites::lemma2_suite(*max_rank, &families))?;
            Ok(suites_output(format, vec![s], false))
        }
        Command::Bn(a) => {
            let spec = bn_spec(a)?;
            let s = timed(cli.timings, || suites::bn_suite(&spec, cap))?;
            Ok(suites_output(format, vec![s], false))
        }
        Command::Roots { family, rank } => roots_listing(format, spec_of(family, *rank)?),
        Command::ReducedWords { family, rank, word, cap } => {
            reduced_words_listing(format, spec_of(family, *rank)?, word, *cap)
        }
        Command::Report { .. } => Ok(suites_output(format, all_suites(cap, cli.timings)?, true)),
    }
}
