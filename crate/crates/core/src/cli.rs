//! Command-line surface. The binary only parses arguments and calls [`run`].
//!
//! Exit codes: 0 success, 1 a verified statement failed, 2 usage or spec
//! error, 3 a cap or budget was hit.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use serde::Serialize;
use serde_json::json;

use crate::aut::check_propagation;
use crate::aut::{
    colour_group_from, full_aut_with, left_translations, xi_of_group, xi_stabilizer_with_budget,
    AutGroup, FullAutOptions, Stabilizer, DEFAULT_EXPLICIT_CAP, DEFAULT_NODE_BUDGET,
    DEFAULT_VERTEX_CAP,
};
use crate::cache::{cache_key, default_path, Cache};
use crate::cayley::{CayleyGraph, GeneratingSet};
use crate::classify::{
    check_boolean_factor_lemma, classify, decompose_q8_times_boolean, find_a0,
    find_dicyclic_witness,
};
use crate::error::{Error, Result};
use crate::families::{family, quantsuite};
use crate::group::FiniteGroup;
use crate::groupspec::{GroupSpec, DEFAULT_COSET_CAP};
use crate::report::{self, ReportRow};
use crate::rigidity::{
    cayley_index_search, index_of_with, inverse_pairs, optimality_example_h, optimality_example_k,
    optimality_example_product, optimality_example_q8, predicted_xi, verify_quantitative,
    IndexReport, SearchMode, SearchOptions, SearchResult,
};

#[derive(Parser, Debug, Clone)]
#[command(
    name = "cayley",
    version,
    about = "Automorphism groups of Cayley graphs of finite groups"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Result cache file (JSON lines). Overridden by $CAYLEY_CACHE.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Largest graph handed to the full automorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_VERTEX_CAP)]
    pub vertex_cap: usize,

    /// Automorphism groups up to this order are listed element by element.
    #[arg(long, global = true, default_value_t = DEFAULT_EXPLICIT_CAP)]
    pub explicit_cap: u128,

    /// Live-coset cap for groups given by presentations.
    #[arg(long, global = true, default_value_t = DEFAULT_COSET_CAP)]
    pub coset_cap: usize,

    /// Node budget of the colour-automorphism search.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    pub node_budget: u64,

    /// Seed for sampled searches.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Inspect a group.
    Group {
        #[command(subcommand)]
        action: GroupAction,
    },
    /// Identity stabilizer of the colour-preserving automorphism group.
    Xi {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        genset: GensetArgs,
        /// Write the Cayley graph as Graphviz DOT.
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Labelled, colour-preserving or full automorphism group.
    Aut {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        genset: GensetArgs,
        #[arg(long, value_enum, default_value_t = AutKindArg::Full)]
        kind: AutKindArg,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Cayley index of one generating set, or the minimum over all of them.
    Index {
        #[command(flatten)]
        group: GroupArgs,
        /// Evaluate this generating set only.
        #[arg(long)]
        gens: Option<String>,
        /// Enumerate every symmetric generating set.
        #[arg(long)]
        exhaustive: bool,
        /// Draw random generating sets.
        #[arg(long, conflicts_with = "exhaustive")]
        sample: bool,
        /// Maximum number of generating sets evaluated.
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        /// Evaluate candidates on one thread.
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Check the structural statements on concrete groups.
    Verify {
        #[command(subcommand)]
        check: VerifyCheck,
    },
    /// Index rows for a family or a group, as JSON, CSV or a table.
    Report {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        family: Option<String>,
        /// Report this generating set instead of the best one found.
        #[arg(long)]
        gens: Option<String>,
        /// One row per symmetric generating set (exhaustive sweep).
        #[arg(long, conflicts_with = "gens")]
        all_gensets: bool,
        /// Generating sets examined per group.
        #[arg(long, default_value_t = 2_000)]
        budget: u64,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum GroupAction {
    /// Element table, orders and inverses.
    Describe {
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Case of the classification, with witnesses.
    Classify {
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum VerifyCheck {
    /// Computed ξ_G against the classification's prediction.
    Thm2 {
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// ξ over the ball of the case's radius equals ξ_G.
    Quant {
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        gens: Option<String>,
    },
    /// Optimality examples: product:M,N, q8:N, h:N, k:N or all.
    Example {
        #[arg(long)]
        name: String,
    },
    /// Boolean-factor lemma for G × B, and the a₀ dichotomy for G.
    Lemma {
        #[command(flatten)]
        group: GroupArgs,
        /// Boolean group B.
        #[arg(long, default_value = "abelian:2")]
        boolean: String,
    },
    /// Propagation from pinned points S0, inside T = S^{≤radius}.
    Propagation {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        /// Comma-separated S0; may be empty.
        #[arg(long, default_value = "")]
        pinned: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AutKindArg {
    Labelled,
    Colour,
    Full,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GroupArgs {
    /// Group spec, e.g. cyclic:5, q8, dic:cyclic:6@3, product:(q8)x(abelian:2).
    #[arg(long, short = 'g')]
    pub group: Option<String>,
    /// Group presentation, e.g. "< a, b | a^3, b^2, (a b)^2 >".
    #[arg(long, conflicts_with = "group")]
    pub presentation: Option<String>,
    #[arg(long, conflicts_with_all = ["group", "presentation"])]
    pub presentation_file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GensetArgs {
    /// Comma-separated element names; inverses are added.
    #[arg(long, conflicts_with = "full")]
    pub gens: Option<String>,
    /// Use every non-identity element.
    #[arg(long)]
    pub full: bool,
    /// Replace S by the ball S^{≤radius}.
    #[arg(long, default_value_t = 1)]
    pub radius: usize,
}

#[derive(Debug, Serialize)]
struct CheckResult {
    name: String,
    pass: bool,
    detail: serde_json::Value,
}

struct Runner<'a> {
    config: &'a RunConfig,
    cache: Cache,
    out: &'a mut dyn Write,
}

/// Maps an error to the documented exit code.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_resource_limit() {
        3
    } else {
        2
    }
}

/// Runs one command, writing results to `out` and diagnostics to stderr.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> i32 {
    let cache = if config.no_cache {
        Ok(Cache::disabled())
    } else {
        match default_path_for(config) {
            Some(p) => Cache::open(p),
            None => Ok(Cache::disabled()),
        }
    };
    let mut runner = match cache {
        Ok(cache) => Runner { config, cache, out },
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    match runner.dispatch() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn default_path_for(config: &RunConfig) -> Option<PathBuf> {
    if std::env::var_os(crate::cache::CACHE_ENV).is_some() {
        return default_path();
    }
    config.cache.clone().or_else(default_path)
}

fn load_group(args: &GroupArgs, coset_cap: usize) -> Result<(String, Arc<FiniteGroup>)> {
    let spec: GroupSpec = match (&args.group, &args.presentation, &args.presentation_file) {
        (Some(g), _, _) => g.parse()?,
        (_, Some(p), _) => format!("pres:{p}").parse()?,
        (_, _, Some(path)) => format!("pres:{}", std::fs::read_to_string(path)?).parse()?,
        _ => {
            return Err(Error::malformed(
                "give a group with --group, --presentation or --presentation-file",
            ))
        }
    };
    let group = spec.build_with(coset_cap)?;
    Ok((spec.to_string(), Arc::new(group)))
}

fn load_genset(group: &Arc<FiniteGroup>, args: &GensetArgs) -> Result<GeneratingSet> {
    let s = match (&args.gens, args.full) {
        (_, true) => GeneratingSet::full(group.clone())?,
        (Some(list), false) => GeneratingSet::parse(group.clone(), list)?,
        (None, false) => return Err(Error::malformed("give --gens or --full")),
    };
    if args.radius == 0 {
        return Err(Error::malformed("--radius must be at least 1"));
    }
    Ok(s.ball(args.radius))
}

fn permutation_lines(perms: &[crate::perm::Permutation]) -> String {
    perms
        .iter()
        .map(|p| {
            p.images()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
                + "\n"
        })
        .collect()
}

impl Runner<'_> {
    fn aut_options(&self) -> FullAutOptions {
        FullAutOptions {
            vertex_cap: self.config.vertex_cap,
            explicit_cap: self.config.explicit_cap,
        }
    }

    fn caps_string(&self) -> String {
        format!(
            "vertex_cap={};explicit_cap={};node_budget={}",
            self.config.vertex_cap, self.config.explicit_cap, self.config.node_budget
        )
    }

    fn emit(&mut self, text: &str) -> Result<()> {
        self.out.write_all(text.as_bytes())?;
        if !text.ends_with('\n') {
            self.out.write_all(b"\n")?;
        }
        Ok(())
    }

    fn emit_json<T: Serialize>(&mut self, value: &T) -> Result<()> {
        let text = serde_json::to_string_pretty(value).expect("reports serialize");
        self.emit(&text)
    }

    fn write_dot(path: &Option<PathBuf>, graph: &CayleyGraph) -> Result<()> {
        if let Some(path) = path {
            std::fs::write(path, graph.to_dot())?;
            info!("wrote {}", path.display());
        }
        Ok(())
    }

    fn dispatch(&mut self) -> Result<i32> {
        let config = self.config;
        match &config.command {
            Command::Group { action } => self.cmd_group(action),
            Command::Xi {
                group,
                genset,
                emit_dot,
            } => self.cmd_xi(group, genset, emit_dot),
            Command::Aut {
                group,
                genset,
                kind,
                emit_dot,
            } => self.cmd_aut(group, genset, *kind, emit_dot),
            Command::Index {
                group,
                gens,
                exhaustive,
                sample,
                budget,
                sequential,
                emit_dot,
            } => {
                let mode = match (exhaustive, sample) {
                    (true, _) => SearchMode::Exhaustive,
                    (_, true) => SearchMode::Sampled,
                    _ => SearchMode::Auto,
                };
                self.cmd_index(group, gens.as_deref(), mode, *budget, !sequential, emit_dot)
            }
            Command::Verify { check } => self.cmd_verify(check),
            Command::Report {
                group,
                family,
                gens,
                all_gensets,
                budget,
            } => self.cmd_report(
                group,
                family.as_deref(),
                gens.as_deref(),
                *all_gensets,
                *budget,
            ),
        }
    }

    fn cmd_group(&mut self, action: &GroupAction) -> Result<i32> {
        match action {
            GroupAction::Describe { group } => {
                let (_, g) = load_group(group, self.config.coset_cap)?;
                let d = g.describe();
                match self.config.format {
                    Format::Json => self.emit_json(&d)?,
                    Format::Csv | Format::Table => {
                        let sep = if self.config.format == Format::Csv {
                            ","
                        } else {
                            "\t"
                        };
                        let mut text =
                            format!("# {} order={} digest={}\n", d.spec, d.order, d.digest);
                        text.push_str(&["index", "name", "order", "inverse"].join(sep));
                        text.push('\n');
                        for e in &d.elements {
                            let name = if sep == "," && e.name.contains(',') {
                                format!("\"{}\"", e.name)
                            } else {
                                e.name.clone()
                            };
                            text.push_str(&format!(
                                "{}{sep}{name}{sep}{}{sep}{}\n",
                                e.index, e.order, e.inverse
                            ));
                        }
                        self.emit(&text)?;
                    }
                }
            }
            GroupAction::Classify { group } => {
                let (spec, g) = load_group(group, self.config.coset_cap)?;
                let c = classify(&g);
                if c.literal_dicyclic_only {
                    eprintln!(
                        "note: {spec} has an abelian index-2 subgroup inverted by an involution; \
                         it is generalized dicyclic only if x of order 2 is allowed"
                    );
                }
                match self.config.format {
                    Format::Json => {
                        self.emit_json(&json!({ "group_spec": spec, "classification": c }))?
                    }
                    _ => {
                        let mut text = format!(
                            "group               {spec}\norder               {}\ncase                {:?}\npredicted |xi_G|    {}\n",
                            g.order(),
                            c.case,
                            c.predicted_xi_order
                        );
                        if let Some(w) = &c.witness {
                            let names: Vec<_> =
                                w.abelian_subgroup().iter().map(|&a| g.name(a)).collect();
                            text.push_str(&format!(
                                "A                   {{{}}}\nx                   {}\n",
                                names.join(", "),
                                g.name(w.x())
                            ));
                        }
                        if let Some(d) = &c.decomposition {
                            let b: Vec<_> = d.boolean_factor.iter().map(|&a| g.name(a)).collect();
                            text.push_str(&format!(
                                "Q8 generators       {}, {}\nBoolean factor      {{{}}}\n",
                                g.name(d.i),
                                g.name(d.j),
                                b.join(", ")
                            ));
                        }
                        if c.literal_dicyclic_only {
                            text.push_str(
                                "note                generalized dicyclic only with x of order 2\n",
                            );
                        }
                        self.emit(&text)?;
                    }
                }
            }
        }
        Ok(0)
    }

    fn emit_stabilizer(&mut self, xi: &Stabilizer) -> Result<()> {
        match self.config.format {
            Format::Json => self.emit_json(&xi.report()),
            Format::Csv | Format::Table => {
                let text = format!(
                    "# order {}\n{}",
                    xi.order(),
                    permutation_lines(xi.elements())
                );
                self.emit(&text)
            }
        }
    }

    fn emit_aut(&mut self, aut: &AutGroup) -> Result<()> {
        match self.config.format {
            Format::Json => self.emit_json(&aut.report()),
            Format::Csv | Format::Table => {
                let (what, perms) = match aut.elements() {
                    Some(e) => ("elements", e),
                    None => ("generators", aut.generators()),
                };
                let text = format!(
                    "# {:?} order {} ({what})\n{}",
                    aut.kind(),
                    aut.order(),
                    permutation_lines(perms)
                );
                self.emit(&text)
            }
        }
    }

    fn cmd_xi(
        &mut self,
        group: &GroupArgs,
        genset: &GensetArgs,
        dot: &Option<PathBuf>,
    ) -> Result<i32> {
        let (_, g) = load_group(group, self.config.coset_cap)?;
        if g.order() == 1 {
            return Err(Error::degenerate(
                "the trivial group has no Cayley graph with edges",
            ));
        }
        let s = load_genset(&g, genset)?;
        let graph = CayleyGraph::new(&s);
        Self::write_dot(dot, &graph)?;
        let xi = xi_stabilizer_with_budget(&graph, self.config.node_budget)?;
        self.emit_stabilizer(&xi)?;
        Ok(0)
    }

    fn cmd_aut(
        &mut self,
        group: &GroupArgs,
        genset: &GensetArgs,
        kind: AutKindArg,
        dot: &Option<PathBuf>,
    ) -> Result<i32> {
        let (_, g) = load_group(group, self.config.coset_cap)?;
        let s = load_genset(&g, genset)?;
        let graph = CayleyGraph::new(&s);
        Self::write_dot(dot, &graph)?;
        let aut = match kind {
            AutKindArg::Labelled => left_translations(&graph),
            AutKindArg::Colour => {
                let xi = xi_stabilizer_with_budget(&graph, self.config.node_budget)?;
                colour_group_from(&graph, &xi)?
            }
            AutKindArg::Full => full_aut_with(&graph, self.aut_options())?,
        };
        self.emit_aut(&aut)?;
        Ok(0)
    }

    fn index_report(&mut self, s: &GeneratingSet) -> Result<IndexReport> {
        let key = cache_key(s.group(), s.elements(), "index_of", &self.caps_string());
        let options = self.aut_options();
        self.cache
            .get_or_compute(&key, "index_of", || index_of_with(s, options))
    }

    fn search(&mut self, g: &Arc<FiniteGroup>, options: SearchOptions) -> Result<SearchResult> {
        let params = format!(
            "{};mode={:?};budget={};seed={}",
            self.caps_string(),
            options.mode,
            options.budget,
            options.seed
        );
        let key = cache_key(g, &[], "index_search", &params);
        self.cache
            .get_or_compute(&key, "index_search", || cayley_index_search(g, options))
    }

    fn emit_rows(&mut self, rows: &[ReportRow]) -> Result<()> {
        let text = match self.config.format {
            Format::Json => report::to_json(rows),
            Format::Csv => report::to_csv(rows)?,
            Format::Table => report::to_table(rows),
        };
        self.emit(&text)
    }

    fn cmd_index(
        &mut self,
        group: &GroupArgs,
        gens: Option<&str>,
        mode: SearchMode,
        budget: u64,
        parallel: bool,
        dot: &Option<PathBuf>,
    ) -> Result<i32> {
        let (spec, g) = load_group(group, self.config.coset_cap)?;
        if let Some(list) = gens {
            let s = GeneratingSet::parse(g.clone(), list)?;
            Self::write_dot(dot, &CayleyGraph::new(&s))?;
            let r = self.index_report(&s)?;
            match self.config.format {
                Format::Json => self.emit_json(&r)?,
                _ => self.emit_rows(&[ReportRow::single(&spec, &r)])?,
            }
            return Ok(0);
        }
        let options = SearchOptions {
            mode,
            budget,
            seed: self.config.seed,
            parallel,
            aut: self.aut_options(),
        };
        let result = self.search(&g, options)?;
        let witness = GeneratingSet::parse(g.clone(), &result.witness_genset)?;
        Self::write_dot(dot, &CayleyGraph::new(&witness))?;
        match self.config.format {
            Format::Json => self.emit_json(&result)?,
            _ => {
                let r = self.index_report(&witness)?;
                self.emit_rows(&[ReportRow::from_search(&spec, &result, &r)])?;
            }
        }
        Ok(0)
    }

    fn cmd_report(
        &mut self,
        group: &GroupArgs,
        family_name: Option<&str>,
        gens: Option<&str>,
        all_gensets: bool,
        budget: u64,
    ) -> Result<i32> {
        let groups: Vec<(String, Arc<FiniteGroup>)> = match family_name {
            Some(name) => family(name)?
                .iter()
                .map(|s| {
                    Ok((
                        s.to_string(),
                        Arc::new(s.build_with(self.config.coset_cap)?),
                    ))
                })
                .collect::<Result<_>>()?,
            None => vec![load_group(group, self.config.coset_cap)?],
        };
        let mut rows = Vec::new();
        for (spec, g) in &groups {
            if let Some(list) = gens {
                let s = GeneratingSet::parse(g.clone(), list)?;
                let r = self.index_report(&s)?;
                rows.push(ReportRow::single(spec, &r));
            } else if all_gensets {
                let pairs = inverse_pairs(g);
                if pairs.len() >= 24 {
                    return Err(Error::ResourceLimit(format!(
                        "{spec}: {} inverse pairs are too many to sweep",
                        pairs.len()
                    )));
                }
                let mut count = 0u64;
                for mask in 1u64..(1u64 << pairs.len()) {
                    let mut elems = Vec::new();
                    for (k, &(a, b)) in pairs.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            elems.push(a);
                            elems.push(b);
                        }
                    }
                    let Ok(s) = GeneratingSet::new(g.clone(), &elems, true) else {
                        continue;
                    };
                    if count == budget {
                        return Err(Error::ResourceLimit(format!(
                            "{spec}: sweep exceeded the budget of {budget} generating sets"
                        )));
                    }
                    count += 1;
                    let r = self.index_report(&s)?;
                    let mut row = ReportRow::single(spec, &r);
                    row.exhaustive = true;
                    rows.push(row);
                }
            } else {
                let options = SearchOptions {
                    budget,
                    seed: self.config.seed,
                    aut: self.aut_options(),
                    ..Default::default()
                };
                let result = self.search(g, options)?;
                let witness = GeneratingSet::parse(g.clone(), &result.witness_genset)?;
                let r = self.index_report(&witness)?;
                rows.push(ReportRow::from_search(spec, &result, &r));
            }
        }
        self.emit_rows(&rows)?;
        Ok(0)
    }

    fn emit_checks(&mut self, check: &str, results: &[CheckResult]) -> Result<i32> {
        let pass = results.iter().all(|r| r.pass);
        match self.config.format {
            Format::Json => {
                self.emit_json(&json!({ "check": check, "pass": pass, "results": results }))?
            }
            Format::Csv => {
                let mut text = String::from("name,pass\n");
                for r in results {
                    text.push_str(&format!("\"{}\",{}\n", r.name.replace('"', "\"\""), r.pass));
                }
                self.emit(&text)?;
            }
            Format::Table => {
                let mut text = String::new();
                for r in results {
                    text.push_str(&format!(
                        "{} {} {}\n",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.name,
                        r.detail
                    ));
                }
                text.push_str(&format!(
                    "{check}: {}\n",
                    if pass { "all passed" } else { "FAILED" }
                ));
                self.emit(&text)?;
            }
        }
        Ok(if pass { 0 } else { 1 })
    }

    fn groups_for(
        &self,
        family_name: &Option<String>,
        group: &GroupArgs,
    ) -> Result<Vec<(String, Arc<FiniteGroup>)>> {
        match family_name {
            Some(name) => family(name)?
                .iter()
                .map(|s| {
                    Ok((
                        s.to_string(),
                        Arc::new(s.build_with(self.config.coset_cap)?),
                    ))
                })
                .collect(),
            None => Ok(vec![load_group(group, self.config.coset_cap)?]),
        }
    }

    fn cmd_verify(&mut self, check: &VerifyCheck) -> Result<i32> {
        match check {
            VerifyCheck::Thm2 { family, group } => {
                let family = if family.is_none()
                    && group.group.is_none()
                    && group.presentation.is_none()
                    && group.presentation_file.is_none()
                {
                    Some("smallsuite".to_string())
                } else {
                    family.clone()
                };
                let mut results = Vec::new();
                for (spec, g) in self.groups_for(&family, group)? {
                    let c = classify(&g);
                    let xi = xi_of_group(&g)?;
                    let predicted = predicted_xi(&g, &c)?;
                    let mut detail = json!({
                        "case": c.case,
                        "predicted_xi_order": c.predicted_xi_order,
                        "computed_xi_order": xi.order(),
                    });
                    if c.literal_dicyclic_only {
                        detail["note"] = json!("generalized dicyclic only with x of order 2");
                    }
                    results.push(CheckResult {
                        name: spec,
                        pass: xi.order() == c.predicted_xi_order
                            && xi.elements() == predicted.as_slice(),
                        detail,
                    });
                }
                self.emit_checks("thm2", &results)
            }
            VerifyCheck::Quant {
                family,
                group,
                gens,
            } => {
                let pairs: Vec<(String, Arc<FiniteGroup>, String)> = match (family.as_deref(), gens)
                {
                    (Some("quantsuite"), _) => quantsuite()
                        .into_iter()
                        .map(|(spec, s)| {
                            Ok((
                                spec.to_string(),
                                Arc::new(spec.build_with(self.config.coset_cap)?),
                                s,
                            ))
                        })
                        .collect::<Result<_>>()?,
                    (Some(other), _) => {
                        return Err(Error::malformed(format!(
                            "verify quant takes --family quantsuite, not '{other}'"
                        )))
                    }
                    (None, Some(list)) => {
                        let (spec, g) = load_group(group, self.config.coset_cap)?;
                        vec![(spec, g, list.clone())]
                    }
                    (None, None) => {
                        return Err(Error::malformed("give --gens or --family quantsuite"))
                    }
                };
                let mut results = Vec::new();
                for (spec, g, list) in pairs {
                    let s = GeneratingSet::parse(g, &list)?;
                    let r = verify_quantitative(&s)?;
                    results.push(CheckResult {
                        name: format!("{spec} S={list}"),
                        pass: r.pass,
                        detail: serde_json::to_value(&r).expect("report serializes"),
                    });
                }
                self.emit_checks("quant", &results)
            }
            VerifyCheck::Example { name } => {
                let results = run_examples(name)?;
                self.emit_checks("example", &results)
            }
            VerifyCheck::Lemma { group, boolean } => {
                let (spec, g) = load_group(group, self.config.coset_cap)?;
                let b: GroupSpec = boolean.parse()?;
                let b = b.build_with(self.config.coset_cap)?;
                let mut results = vec![CheckResult {
                    name: format!("boolean factor {spec} x {boolean}"),
                    pass: check_boolean_factor_lemma(&g, &b)?,
                    detail: json!({ "boolean_order": b.order() }),
                }];
                if let Some(w) = find_dicyclic_witness(&g) {
                    let q8b = decompose_q8_times_boolean(&g).is_some();
                    let a0 = find_a0(&g, &w);
                    let a0_name = a0.as_ref().ok().map(|&a| g.name(a).to_string());
                    results.push(CheckResult {
                        name: format!("a0 dichotomy {spec}"),
                        pass: q8b != a0.is_ok(),
                        detail: json!({ "q8_times_boolean": q8b, "a0": a0_name }),
                    });
                }
                self.emit_checks("lemma", &results)
            }
            VerifyCheck::Propagation {
                group,
                gens,
                radius,
                pinned,
            } => {
                let (spec, g) = load_group(group, self.config.coset_cap)?;
                let s = GeneratingSet::parse(g.clone(), gens)?;
                let s0 = crate::cayley::split_top_level(pinned, ',')
                    .into_iter()
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| g.resolve(t))
                    .collect::<Result<Vec<_>>>()?;
                let t = CayleyGraph::new(&s.ball(*radius));
                let pass = check_propagation(&t, &s, &s0)?;
                self.emit_checks(
                    "propagation",
                    &[CheckResult {
                        name: format!("{spec} S={gens} T=S^<={radius} S0={{{pinned}}}"),
                        pass,
                        detail: json!({ "t_size": t.degree() }),
                    }],
                )
            }
        }
    }
}

fn run_examples(name: &str) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let names: Vec<String> = if name == "all" {
        [
            "product:3,3",
            "product:3,4",
            "product:4,5",
            "q8:1",
            "q8:2",
            "h:2",
            "h:3",
            "h:4",
            "h:5",
            "k:1",
            "k:2",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect()
    } else {
        vec![name.to_string()]
    };
    for name in names {
        let (kind, arg) = name.split_once(':').ok_or_else(|| {
            Error::malformed(format!("example '{name}' needs the form kind:args"))
        })?;
        let num = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::malformed(format!("bad example argument '{s}'")))
        };
        let (pass, detail) = match kind {
            "product" => {
                let (m, n) = arg
                    .split_once(',')
                    .ok_or_else(|| Error::malformed("product example needs m,n"))?;
                let r = optimality_example_product(num(m)?, num(n)?)?;
                (r.passed(), value(&r))
            }
            "q8" => {
                let r = optimality_example_q8(num(arg)?)?;
                (r.passed(), value(&r))
            }
            "h" => {
                let r = optimality_example_h(num(arg)?)?;
                (r.passed(), value(&r))
            }
            "k" => {
                let r = optimality_example_k(num(arg)?)?;
                (r.passed(), value(&r))
            }
            _ => return Err(Error::malformed(format!("unknown example '{kind}'"))),
        };
        out.push(CheckResult { name, pass, detail });
    }
    Ok(out)
}

fn value<T: Serialize>(report: &T) -> serde_json::Value {
    serde_json::to_value(report).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut full = vec!["cayley", "--no-cache"];
        full.extend_from_slice(args);
        let config = RunConfig::try_parse_from(full).unwrap();
        let mut out = Vec::new();
        let code = run(&config, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    fn json_of(text: &str) -> serde_json::Value {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn xi_commands() {
        let (code, out) = run_args(&["xi", "--group", "q8", "--gens", "i,j", "--radius", "1"]);
        assert_eq!(code, 0);
        assert_eq!(json_of(&out)["order"], 8);
        let (code, out) = run_args(&["xi", "--group", "abelian:6", "--full"]);
        assert_eq!(code, 0);
        assert_eq!(json_of(&out)["order"], 2);
        assert_eq!(run_args(&["xi", "--group", "cyclic:1", "--full"]).0, 2);
        assert_eq!(run_args(&["xi", "--group", "cyclic:4", "--gens", "2"]).0, 2);
    }

    #[test]
    fn index_commands() {
        for (g, best) in [("cyclic:5", 2), ("abelian:2,2", 2), ("cyclic:2", 1)] {
            let (code, out) = run_args(&["index", "--group", g, "--exhaustive"]);
            assert_eq!(code, 0);
            assert_eq!(json_of(&out)["best_index"], best, "{g}");
        }
    }

    #[test]
    fn verify_commands() {
        let (code, out) = run_args(&[
            "verify",
            "quant",
            "--group",
            "hgroup:4",
            "--gens",
            "s1,s2,s3,s4",
        ]);
        assert_eq!(code, 0, "{out}");
        let (code, _) = run_args(&["verify", "example", "--name", "product:3,3"]);
        assert_eq!(code, 0);
        assert_eq!(
            run_args(&["verify", "example", "--name", "product:2,3"]).0,
            2
        );
    }

    #[test]
    fn resource_limits_exit_3() {
        let (code, _) = run_args(&["aut", "--group", "cyclic:70", "--gens", "1"]);
        assert_eq!(code, 3);
        let (code, _) = run_args(&[
            "group",
            "describe",
            "--presentation",
            "< a, b | a b a^-1 b^-1 >",
            "--coset-cap",
            "50",
        ]);
        assert_eq!(code, 3);
    }
}
