//! Verb dispatch. Every command is a pure function from parsed inputs to an
//! output string; negative mathematical verdicts are successes (exit 0),
//! exit 1 marks input errors, exit 2 marks search-bound refusals.

use crate::formats::{self, ParsedTable};
use crate::report;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};
use sloop_core::holomorph::HolomorphError;
use sloop_core::morph::MorphError;
use sloop_core::subs::{format_subset, ClassFilter};
use sloop_core::theorem::TheoremError;
use sloop_core::variety::{self, VarietyDef};
use sloop_core::{Perm, SPair};
use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

#[derive(Parser, Debug)]
#[command(
    name = "sloop",
    about = "Workbench for finite quasigroups, loops, and Smarandache isotopy",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit canonical JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Override the exhaustive-search order bound (refusals exit with 2)
    #[arg(long, global = true, value_name = "n")]
    pub max_order: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FilterArg {
    Any,
    Semigroup,
    Quasigroup,
    Loop,
    Group,
}

impl From<FilterArg> for ClassFilter {
    fn from(f: FilterArg) -> ClassFilter {
        match f {
            FilterArg::Any => ClassFilter::Any,
            FilterArg::Semigroup => ClassFilter::Semigroup,
            FilterArg::Quasigroup => ClassFilter::Quasigroup,
            FilterArg::Loop => ClassFilter::Loop,
            FilterArg::Group => ClassFilter::Group,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum ModeArg {
    Full,
    Smarandache,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a table and detect the Smarandache property
    Check { table: PathBuf },
    /// Enumerate closed substructures
    Sub {
        table: PathBuf,
        #[arg(long, value_enum, default_value_t = FilterArg::Any)]
        filter: FilterArg,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Automorphism group
    Aut { table: PathBuf },
    /// Smarandache automorphism group (subset from --s, the file, or auto)
    Saum {
        table: PathBuf,
        #[arg(long)]
        s: Option<String>,
    },
    /// Smarandache symmetric group
    Ssym {
        table: PathBuf,
        #[arg(long)]
        s: Option<String>,
    },
    /// Autotopism group; a designated subset switches to SAUT
    Autotop {
        table: PathBuf,
        #[arg(long)]
        s: Option<String>,
    },
    /// Apply an isotopism triple to a table
    Isotope {
        table: PathBuf,
        #[arg(long)]
        triple: PathBuf,
    },
    /// Verify a triple as an (S-)isotopism between two tables
    VerifyIso {
        src: PathBuf,
        dst: PathBuf,
        #[arg(long)]
        triple: PathBuf,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        s_dst: Option<String>,
    },
    /// Search for an (S-)isomorphism between two tables
    Iso {
        src: PathBuf,
        dst: PathBuf,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        s_dst: Option<String>,
    },
    /// Build the holomorph (full) or Smarandache holomorph
    Holomorph {
        table: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Full)]
        mode: ModeArg,
        #[arg(long)]
        s: Option<String>,
    },
    /// Variety profile, or named/custom identity checks
    Variety {
        table: PathBuf,
        /// Comma-separated catalog names, or "all"
        #[arg(long)]
        variety: Option<String>,
        /// Custom identity `"<lhs> = <rhs>"` in prefix notation (repeatable)
        #[arg(long)]
        identity: Vec<String>,
        /// Run the checks on the designated substructure instead
        #[arg(long)]
        s: Option<String>,
    },
    /// Audit the holomorph theorem on a pair of S-structures
    VerifyT31 {
        src: PathBuf,
        dst: PathBuf,
        #[arg(long)]
        s: Option<String>,
        #[arg(long)]
        s_dst: Option<String>,
    },
    /// Audit variety preservation under the special triple
    VerifyT32 {
        table: PathBuf,
        #[arg(long)]
        s: Option<String>,
        /// Image list for beta (default: identity)
        #[arg(long)]
        beta: Option<String>,
        /// Image list for gamma (default: identity)
        #[arg(long)]
        gamma: Option<String>,
        /// Image list for delta (default: identity)
        #[arg(long)]
        delta: Option<String>,
        /// Comma-separated catalog names, or "all" (default)
        #[arg(long)]
        variety: Option<String>,
    },
}

pub struct CliError {
    pub message: String,
    pub code: i32,
}

impl CliError {
    fn input(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: 1,
        }
    }

    fn bound(message: impl Into<String>) -> CliError {
        CliError {
            message: message.into(),
            code: 2,
        }
    }
}

fn morph_error(e: MorphError) -> CliError {
    match e {
        MorphError::OrderAboveBound { .. } => CliError::bound(e.to_string()),
        _ => CliError::input(e.to_string()),
    }
}

fn holomorph_error(e: HolomorphError) -> CliError {
    match e {
        HolomorphError::Morph(m) => morph_error(m),
        _ => CliError::input(e.to_string()),
    }
}

fn theorem_error(e: TheoremError) -> CliError {
    match e {
        TheoremError::Morph(m) => morph_error(m),
        TheoremError::Holomorph(h) => holomorph_error(h),
        _ => CliError::input(e.to_string()),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {}", path.display(), e)))
}

fn load_table(path: &Path) -> Result<ParsedTable, CliError> {
    let source = read_file(path)?;
    formats::parse_table(&source)
        .map_err(|e| CliError::input(format!("{}: {}", path.display(), e)))
}

fn load_triple(path: &Path) -> Result<sloop_core::Isotopism, CliError> {
    let source = read_file(path)?;
    formats::parse_isotopism(&source)
        .map_err(|e| CliError::input(format!("{}: {}", path.display(), e)))
}

fn parse_perm_flag(flag: &Option<String>, degree: usize) -> Result<Perm, CliError> {
    match flag {
        None => Ok(Perm::identity(degree)),
        Some(s) => formats::parse_perm(s).map_err(|e| CliError::input(e.to_string())),
    }
}

/// Where a resolved subset came from; auto and file picks are reported in
/// the output so runs stay reproducible.
#[derive(Clone, Copy, PartialEq, Eq)]
enum SubsetSource {
    Flag,
    File,
    Auto,
}

fn resolve_subset(
    parsed: &ParsedTable,
    flag: &Option<String>,
    label: &str,
) -> Result<(BTreeSet<usize>, SubsetSource), CliError> {
    if let Some(flag) = flag {
        let s = formats::parse_subset(flag).map_err(|e| CliError::input(e.to_string()))?;
        return Ok((s, SubsetSource::Flag));
    }
    if let Some(s) = &parsed.s_subset {
        return Ok((s.clone(), SubsetSource::File));
    }
    match sloop_core::is_smarandache(&parsed.table) {
        Some(w) => Ok((w, SubsetSource::Auto)),
        None => Err(CliError::input(format!(
            "{label}: no Smarandache substructure found; designate one with --s"
        ))),
    }
}

fn make_pair(
    parsed: &ParsedTable,
    flag: &Option<String>,
    label: &str,
) -> Result<(SPair, SubsetSource), CliError> {
    let (subset, source) = resolve_subset(parsed, flag, label)?;
    let pair = sloop_core::make_spair(&parsed.table, &subset)
        .map_err(|e| CliError::input(format!("{label}: {e}")))?;
    Ok((pair, source))
}

fn subset_note(label: &str, subset: &BTreeSet<usize>, source: SubsetSource) -> Option<String> {
    match source {
        SubsetSource::Flag => None,
        SubsetSource::File => Some(format!(
            "{label}: {} (designated by input file)\n",
            format_subset(subset)
        )),
        SubsetSource::Auto => Some(format!(
            "{label}: {} (auto-selected witness)\n",
            format_subset(subset)
        )),
    }
}

fn json_with_subsets(
    value: Value,
    subsets: &[(&str, &BTreeSet<usize>)],
) -> Value {
    let mut obj = Map::new();
    for (key, s) in subsets {
        obj.insert((*key).into(), report::subset_json(s));
    }
    obj.insert("result".into(), value);
    Value::Object(obj)
}

/// Catalog selection for --variety plus custom --identity definitions.
/// `--identity` alone checks only the custom identities; add
/// `--variety all` to run the catalog as well.
fn select_varieties(
    names: &Option<String>,
    identities: &[String],
) -> Result<Vec<VarietyDef>, CliError> {
    let mut out = Vec::new();
    match names.as_deref() {
        None if !identities.is_empty() => {}
        None | Some("all") => out.extend(variety::catalog()),
        Some(list) => {
            for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                out.push(variety::catalog_entry(name).ok_or_else(|| {
                    CliError::input(format!("unknown variety {name:?}; see the catalog"))
                })?);
            }
        }
    }
    for (i, src) in identities.iter().enumerate() {
        let def = formats::parse_identity(&format!("custom{}", i + 1), src)
            .map_err(|e| CliError::input(e.to_string()))?;
        out.push(def);
    }
    Ok(out)
}

pub fn run(cli: Cli) -> Result<String, CliError> {
    let json = cli.json;
    let max_order = cli.max_order;
    match cli.command {
        Command::Check { table } => {
            let parsed = load_table(&table)?;
            let class = parsed.table.classify();
            let witness = sloop_core::is_smarandache(&parsed.table);
            Ok(if json {
                report::emit_json(&report::check_json(&class, &witness))
            } else {
                report::check_text(&class, &witness)
            })
        }
        Command::Sub {
            table,
            filter,
            max_size,
        } => {
            let parsed = load_table(&table)?;
            let subs =
                sloop_core::enumerate_substructures(&parsed.table, filter.into(), max_size);
            Ok(if json {
                report::emit_json(&report::substructures_json(&subs))
            } else {
                report::substructures_text(&subs)
            })
        }
        Command::Aut { table } => {
            let parsed = load_table(&table)?;
            let g = sloop_core::automorphism_group(&parsed.table, max_order)
                .map_err(morph_error)?;
            Ok(if json {
                report::emit_json(&report::perm_group_json(&g))
            } else {
                report::perm_group_text(&g)
            })
        }
        Command::Saum { table, s } => {
            let parsed = load_table(&table)?;
            let (pair, source) = make_pair(&parsed, &s, "table")?;
            let g = sloop_core::saum(&pair, max_order).map_err(morph_error)?;
            Ok(if json {
                report::emit_json(&json_with_subsets(
                    report::perm_group_json(&g),
                    &[("s_subset", pair.subset())],
                ))
            } else {
                let mut out = String::new();
                if let Some(note) = subset_note("s-subset", pair.subset(), source) {
                    out.push_str(&note);
                }
                out.push_str(&report::perm_group_text(&g));
                out
            })
        }
        Command::Ssym { table, s } => {
            let parsed = load_table(&table)?;
            let (pair, source) = make_pair(&parsed, &s, "table")?;
            let g = sloop_core::ssym(&pair);
            Ok(if json {
                report::emit_json(&json_with_subsets(
                    report::perm_group_json(&g),
                    &[("s_subset", pair.subset())],
                ))
            } else {
                let mut out = String::new();
                if let Some(note) = subset_note("s-subset", pair.subset(), source) {
                    out.push_str(&note);
                }
                out.push_str(&report::perm_group_text(&g));
                out
            })
        }
        Command::Autotop { table, s } => {
            let parsed = load_table(&table)?;
            let designated = s.is_some() || parsed.s_subset.is_some();
            if designated {
                let (pair, source) = make_pair(&parsed, &s, "table")?;
                let a = sloop_core::s_autotopism_set(&pair, max_order).map_err(morph_error)?;
                Ok(if json {
                    report::emit_json(&json_with_subsets(
                        report::autotopisms_json(&a),
                        &[("s_subset", pair.subset())],
                    ))
                } else {
                    let mut out = String::new();
                    if let Some(note) = subset_note("s-subset", pair.subset(), source) {
                        out.push_str(&note);
                    }
                    out.push_str(&report::autotopisms_text(&a));
                    out
                })
            } else {
                let a = sloop_core::autotopism_set(&parsed.table, max_order)
                    .map_err(morph_error)?;
                Ok(if json {
                    report::emit_json(&report::autotopisms_json(&a))
                } else {
                    report::autotopisms_text(&a)
                })
            }
        }
        Command::Isotope { table, triple } => {
            let parsed = load_table(&table)?;
            let iso = load_triple(&triple)?;
            let result =
                sloop_core::apply_isotopism(&parsed.table, &iso).map_err(morph_error)?;
            let moved_subset = parsed
                .s_subset
                .as_ref()
                .map(|s| iso.w().image_of_set(s));
            Ok(report::table_text_or_json(
                &result,
                moved_subset.as_ref(),
                json,
            ))
        }
        Command::VerifyIso {
            src,
            dst,
            triple,
            s,
            s_dst,
        } => {
            let psrc = load_table(&src)?;
            let pdst = load_table(&dst)?;
            let iso = load_triple(&triple)?;
            let smarandache = s.is_some()
                || s_dst.is_some()
                || psrc.s_subset.is_some()
                || pdst.s_subset.is_some();
            if smarandache {
                let (usrc, src_source) = make_pair(&psrc, &s, "source")?;
                let (udst, dst_source) = make_pair(&pdst, &s_dst, "target")?;
                let verdict = sloop_core::verify_s_isotopism(&usrc, &udst, &iso)
                    .map_err(morph_error)?;
                Ok(if json {
                    report::emit_json(&json_with_subsets(
                        report::verdict_json(&verdict),
                        &[
                            ("s_subset", usrc.subset()),
                            ("s_subset_dst", udst.subset()),
                        ],
                    ))
                } else {
                    let mut out = String::new();
                    if let Some(note) = subset_note("s-subset", usrc.subset(), src_source) {
                        out.push_str(&note);
                    }
                    if let Some(note) = subset_note("s-subset-dst", udst.subset(), dst_source)
                    {
                        out.push_str(&note);
                    }
                    out.push_str(&report::verdict_text(&verdict));
                    out
                })
            } else {
                let verdict = sloop_core::verify_isotopism(&psrc.table, &pdst.table, &iso)
                    .map_err(morph_error)?;
                Ok(if json {
                    report::emit_json(&report::verdict_json(&verdict))
                } else {
                    report::verdict_text(&verdict)
                })
            }
        }
        Command::Iso { src, dst, s, s_dst } => {
            let psrc = load_table(&src)?;
            let pdst = load_table(&dst)?;
            let smarandache = s.is_some()
                || s_dst.is_some()
                || psrc.s_subset.is_some()
                || pdst.s_subset.is_some();
            if smarandache {
                let (usrc, src_source) = make_pair(&psrc, &s, "source")?;
                let (udst, dst_source) = make_pair(&pdst, &s_dst, "target")?;
                let found = sloop_core::find_s_isomorphism(&usrc, &udst);
                Ok(if json {
                    report::emit_json(&json_with_subsets(
                        report::isomorphism_json(&found),
                        &[
                            ("s_subset", usrc.subset()),
                            ("s_subset_dst", udst.subset()),
                        ],
                    ))
                } else {
                    let mut out = String::new();
                    if let Some(note) = subset_note("s-subset", usrc.subset(), src_source) {
                        out.push_str(&note);
                    }
                    if let Some(note) = subset_note("s-subset-dst", udst.subset(), dst_source)
                    {
                        out.push_str(&note);
                    }
                    out.push_str(&report::isomorphism_text("S-isomorphism", &found));
                    out
                })
            } else {
                let found = sloop_core::find_isomorphism(&psrc.table, &pdst.table);
                Ok(if json {
                    report::emit_json(&report::isomorphism_json(&found))
                } else {
                    report::isomorphism_text("isomorphism", &found)
                })
            }
        }
        Command::Holomorph { table, mode, s } => {
            let parsed = load_table(&table)?;
            match mode {
                ModeArg::Full => {
                    let h = sloop_core::build_holomorph(&parsed.table, max_order)
                        .map_err(holomorph_error)?;
                    Ok(if json {
                        report::emit_json(&report::holomorph_json(&h))
                    } else {
                        report::holomorph_text(&h)
                    })
                }
                ModeArg::Smarandache => {
                    let (pair, source) = make_pair(&parsed, &s, "table")?;
                    let h = sloop_core::build_smarandache_holomorph(&pair, max_order)
                        .map_err(holomorph_error)?;
                    // The designated block must itself designate validly.
                    h.s_pair().map_err(holomorph_error)?;
                    Ok(if json {
                        report::emit_json(&report::holomorph_json(&h))
                    } else {
                        let mut out = String::new();
                        if let Some(note) = subset_note("s-subset", pair.subset(), source) {
                            out.push_str(&note);
                        }
                        out.push_str(&report::holomorph_text(&h));
                        out
                    })
                }
            }
        }
        Command::Variety {
            table,
            variety: names,
            identity,
            s,
        } => {
            let parsed = load_table(&table)?;
            let defs = select_varieties(&names, &identity)?;
            let full_catalog = names.as_deref().is_none_or(|n| n == "all")
                && identity.is_empty();
            let designated = s.is_some() || parsed.s_subset.is_some();
            if designated {
                let (pair, source) = make_pair(&parsed, &s, "table")?;
                let profile: Vec<(String, sloop_core::ProfileEntry)> = defs
                    .iter()
                    .map(|def| {
                        let entry = match sloop_core::smarandache_variety_check(&pair, def) {
                            Ok(sloop_core::IdentityVerdict::Holds) => {
                                sloop_core::ProfileEntry::Holds
                            }
                            Ok(sloop_core::IdentityVerdict::Fails {
                                assignment,
                                lhs,
                                rhs,
                            }) => sloop_core::ProfileEntry::Fails {
                                assignment,
                                lhs,
                                rhs,
                            },
                            Err(_) => sloop_core::ProfileEntry::NotApplicable,
                        };
                        (def.name.clone(), entry)
                    })
                    .collect();
                Ok(if json {
                    report::emit_json(&json_with_subsets(
                        report::profile_json(&profile),
                        &[("s_subset", pair.subset())],
                    ))
                } else {
                    let mut out = String::new();
                    if let Some(note) = subset_note("s-subset", pair.subset(), source) {
                        out.push_str(&note);
                    }
                    out.push_str("checked on the designated substructure\n");
                    out.push_str(&report::profile_text(&profile));
                    out
                })
            } else if full_catalog {
                let profile = sloop_core::variety_profile(&parsed.table);
                Ok(if json {
                    report::emit_json(&report::profile_json(&profile))
                } else {
                    report::profile_text(&profile)
                })
            } else {
                let profile: Vec<(String, sloop_core::ProfileEntry)> = defs
                    .iter()
                    .map(|def| {
                        let entry = match sloop_core::holds_identity(&parsed.table, def) {
                            Ok(sloop_core::IdentityVerdict::Holds) => {
                                sloop_core::ProfileEntry::Holds
                            }
                            Ok(sloop_core::IdentityVerdict::Fails {
                                assignment,
                                lhs,
                                rhs,
                            }) => sloop_core::ProfileEntry::Fails {
                                assignment,
                                lhs,
                                rhs,
                            },
                            Err(_) => sloop_core::ProfileEntry::NotApplicable,
                        };
                        (def.name.clone(), entry)
                    })
                    .collect();
                Ok(if json {
                    report::emit_json(&report::profile_json(&profile))
                } else {
                    report::profile_text(&profile)
                })
            }
        }
        Command::VerifyT31 { src, dst, s, s_dst } => {
            let psrc = load_table(&src)?;
            let pdst = load_table(&dst)?;
            let (u, src_source) = make_pair(&psrc, &s, "source")?;
            let (v, dst_source) = make_pair(&pdst, &s_dst, "target")?;
            let report_data =
                sloop_core::verify_theorem_31(&u, &v, max_order).map_err(theorem_error)?;
            let corollaries = report_data
                .witnesses
                .iter()
                .find(|w| w.satisfied)
                .map(|w| sloop_core::corollary_checks_31(&u, &v, w, max_order))
                .transpose()
                .map_err(theorem_error)?;
            Ok(if json {
                let mut obj = match report::theorem_json(&report_data) {
                    Value::Object(o) => o,
                    _ => unreachable!(),
                };
                obj.insert("s_subset".into(), report::subset_json(u.subset()));
                obj.insert("s_subset_dst".into(), report::subset_json(v.subset()));
                if let Some(c) = &corollaries {
                    obj.insert("corollaries".into(), report::corollaries_json(c));
                }
                report::emit_json(&Value::Object(obj))
            } else {
                let mut out = String::new();
                if let Some(note) = subset_note("s-subset", u.subset(), src_source) {
                    out.push_str(&note);
                }
                if let Some(note) = subset_note("s-subset-dst", v.subset(), dst_source) {
                    out.push_str(&note);
                }
                out.push_str(&report::theorem_text(&report_data));
                if let Some(c) = &corollaries {
                    out.push_str(&report::corollaries_text(c));
                }
                out
            })
        }
        Command::VerifyT32 {
            table,
            s,
            beta,
            gamma,
            delta,
            variety: names,
        } => {
            let parsed = load_table(&table)?;
            let (u, source) = make_pair(&parsed, &s, "table")?;
            let n = u.table().order();
            let beta = parse_perm_flag(&beta, n)?;
            let gamma = parse_perm_flag(&gamma, n)?;
            let delta = parse_perm_flag(&delta, n)?;
            let defs = select_varieties(&names, &[])?;
            let report_data =
                sloop_core::verify_theorem_32(&u, &beta, &gamma, &delta, &defs, max_order)
                    .map_err(theorem_error)?;
            Ok(if json {
                let mut obj = match report::theorem_json(&report_data) {
                    Value::Object(o) => o,
                    _ => unreachable!(),
                };
                obj.insert("s_subset".into(), report::subset_json(u.subset()));
                report::emit_json(&Value::Object(obj))
            } else {
                let mut out = String::new();
                if let Some(note) = subset_note("s-subset", u.subset(), source) {
                    out.push_str(&note);
                }
                out.push_str(&report::theorem_text(&report_data));
                out
            })
        }
    }
}
