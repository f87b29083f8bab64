use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use defcolor::batch;
use defcolor::colorer::{color, ColorOutcome};
use defcolor::coloring::{induced_max_degrees, is_valid, solve_exact};
use defcolor::discharge::{audit, classify_faces, AuditReport, FaceClass};
use defcolor::generate::{gen_planar_girth5_with, large_corpus, standard_corpus, GenParams};
use defcolor::io::{
    ledger_csv, parse_coloring, parse_document, rational, serialize_coloring, serialize_graph, serialize_trace,
    transfers_csv, FormatError,
};
use defcolor::{Adjacency, EmbeddedGraph, SolveResult};

use crate::config::{CorpusKind, Format, RunConfig, TChoice};
use crate::error::CliError;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn format_err(path: &Path) -> impl FnOnce(FormatError) -> CliError + '_ {
    move |source| CliError::Format {
        path: path.to_owned(),
        source,
    }
}

fn load_graph(path: &Path) -> Result<EmbeddedGraph, CliError> {
    parse_document(&read(path)?).map(|d| d.graph).map_err(format_err(path))
}

pub fn run(config: RunConfig) -> Result<(), CliError> {
    match config {
        RunConfig::Check {
            input,
            coloring,
            defects,
        } => check(&input, &coloring, defects),
        RunConfig::Solve {
            input,
            defects,
            budget,
            output,
        } => {
            let g = load_graph(&input)?;
            match solve_exact(&g, &defects, budget) {
                SolveResult::Found(phi) => {
                    emit(output.as_deref(), &serialize_coloring(&phi))?;
                    if output.is_some() {
                        println!("found");
                    }
                    Ok(())
                }
                SolveResult::Infeasible => Err(CliError::Infeasible(defects.to_string())),
                SolveResult::Unknown => Err(CliError::Budget(budget)),
            }
        }
        RunConfig::Color {
            input,
            t,
            output,
            trace,
        } => color_cmd(&input, t, output.as_deref(), trace.as_deref()),
        RunConfig::Audit {
            inputs,
            t,
            format,
            output,
        } => audit_cmd(&inputs, t, format, output.as_deref()),
        RunConfig::Gen {
            seed,
            size,
            corpus,
            structured,
            output,
        } => gen(seed, size, corpus, structured, output.as_deref()),
        RunConfig::Stats { inputs, t } => {
            let graphs = inputs.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>, _>>()?;
            let paths: Vec<(&PathBuf, &EmbeddedGraph)> = inputs.iter().zip(&graphs).collect();
            for report in batch::map(&paths, |(path, g)| stats(path, g, t)) {
                print!("{report}");
            }
            Ok(())
        }
    }
}

fn check(input: &Path, coloring: &Path, defects: Option<defcolor::DefectVector>) -> Result<(), CliError> {
    let g = load_graph(input)?;
    let phi = parse_coloring(&read(coloring)?).map_err(format_err(coloring))?;
    let d = defects.unwrap_or_else(|| phi.defects().clone());
    if phi.len() != g.vertex_count() {
        return Err(CliError::InvalidColoring(format!(
            "coloring has {} vertices, graph has {}",
            phi.len(),
            g.vertex_count()
        )));
    }
    let valid = is_valid(&g, &phi, &d).map_err(|e| CliError::InvalidColoring(e.to_string()))?;
    if !valid {
        let induced = induced_max_degrees(&g, &phi).map_err(|e| CliError::InvalidColoring(e.to_string()))?;
        let over: Vec<String> = induced
            .iter()
            .enumerate()
            .filter(|&(c, &m)| c >= d.classes() || m > d.defect(c))
            .map(|(c, m)| format!("class {} has induced degree {m}", c + 1))
            .collect();
        return Err(CliError::InvalidColoring(format!("defects {d}: {}", over.join(", "))));
    }
    println!("valid ({d})");
    Ok(())
}

fn color_cmd(input: &Path, t: TChoice, output: Option<&Path>, trace: Option<&Path>) -> Result<(), CliError> {
    let g = load_graph(input)?;
    let t = t.resolve(g.euler_genus());
    let outcome = color(&g, t)?;
    emit(output, &serialize_coloring(outcome.coloring()))?;
    match &outcome {
        ColorOutcome::Reduced { trace: tr, .. } => {
            if let Some(path) = trace {
                write(path, &serialize_trace(tr))?;
            }
            if output.is_some() {
                println!("colored with t = {t} in {} reduction steps", tr.entries.len());
            }
        }
        ColorOutcome::Fallback { theorem_anomaly, .. } => {
            eprintln!("warning: no reduction applied; coloring came from the exact solver");
            if *theorem_anomaly {
                eprintln!("warning: this graph has no reducible configuration at t = {t}");
            }
        }
    }
    Ok(())
}

fn audit_text(path: &Path, r: &AuditReport) -> String {
    let ledger = &r.discharging.ledger;
    let mut out = String::new();
    writeln!(out, "audit {} t {} genus {}", path.display(), r.t, r.genus).unwrap();
    writeln!(
        out,
        "total initial {} final {}",
        rational(&ledger.total_initial()),
        rational(&ledger.total_final())
    )
    .unwrap();
    let mut fired: BTreeMap<String, usize> = BTreeMap::new();
    for tr in &r.discharging.transfers {
        *fired.entry(tr.rule.to_string()).or_default() += 1;
    }
    let fired: Vec<String> = fired.into_iter().map(|(k, n)| format!("{k}={n}")).collect();
    writeln!(out, "transfers {}", fired.join(" ")).unwrap();
    for c in &r.claim_violations {
        writeln!(
            out,
            "claim {:?} {} {} charge {}",
            c.claim,
            c.element.kind(),
            c.element.id(),
            rational(&c.charge)
        )
        .unwrap();
    }
    for l in &r.lemma_violations {
        let w: Vec<String> = l.witnesses.iter().map(usize::to_string).collect();
        writeln!(out, "lemma {} witnesses {}", l.lemma, w.join(",")).unwrap();
    }
    for h in &r.high_bound_violations {
        writeln!(
            out,
            "high-bound vertex {} charge {} bound {}",
            h.vertex,
            rational(&h.charge),
            rational(&h.bound)
        )
        .unwrap();
    }
    let verdict = if r.is_clean() { "clean" } else { "violations" };
    writeln!(out, "result {verdict}").unwrap();
    out
}

fn audit_cmd(inputs: &[PathBuf], t: TChoice, format: Format, output: Option<&Path>) -> Result<(), CliError> {
    let graphs = inputs.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>, _>>()?;
    let reports = batch::map(&graphs, |g| audit(g, t.resolve(g.euler_genus())));
    if let Some(dir) = output {
        fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.to_owned(),
            source,
        })?;
    }
    for (path, report) in inputs.iter().zip(reports) {
        let r = report?;
        let stem = path
            .file_stem()
            .map_or_else(|| "graph".into(), |s| s.to_string_lossy().into_owned());
        match format {
            Format::Text => {
                let text = audit_text(path, &r);
                emit(output.map(|d| d.join(format!("{stem}.audit.txt"))).as_deref(), &text)?;
            }
            Format::Csv => {
                let ledger = ledger_csv(&r.discharging.ledger).map_err(format_err(path))?;
                let transfers = transfers_csv(&r.discharging.transfers).map_err(format_err(path))?;
                match output {
                    Some(dir) => {
                        write(&dir.join(format!("{stem}.ledger.csv")), &ledger)?;
                        write(&dir.join(format!("{stem}.transfers.csv")), &transfers)?;
                    }
                    None => print!("{ledger}\n{transfers}"),
                }
            }
        }
    }
    Ok(())
}

fn gen(
    seed: u64,
    size: usize,
    corpus: Option<CorpusKind>,
    structured: bool,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let Some(kind) = corpus else {
        let params = if structured {
            GenParams::structured()
        } else {
            GenParams::default()
        };
        return emit(output, &serialize_graph(&gen_planar_girth5_with(seed, size, &params)));
    };
    let dir = output.expect("clap requires --output with --corpus");
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.to_owned(),
        source,
    })?;
    let entries = match kind {
        CorpusKind::Standard => standard_corpus(),
        CorpusKind::Large => large_corpus(),
    };
    let docs = batch::map(&entries, |e| (e.index, serialize_graph(&e.build())));
    for (index, text) in &docs {
        write(&dir.join(format!("graph-{index:04}.txt")), text)?;
    }
    println!("wrote {} graphs to {}", docs.len(), dir.display());
    Ok(())
}

fn stats(path: &Path, g: &EmbeddedGraph, t: TChoice) -> String {
    let genus = g.euler_genus();
    let t = t.resolve(genus);
    let degrees = g.degrees();
    let mut out = String::new();
    writeln!(out, "stats {}", path.display()).unwrap();
    writeln!(
        out,
        "vertices {} edges {} faces {} components {}",
        g.vertex_count(),
        g.edge_count(),
        g.face_count(),
        g.component_count()
    )
    .unwrap();
    writeln!(
        out,
        "degree min {} max {} high {}",
        degrees.iter().min().unwrap_or(&0),
        degrees.iter().max().unwrap_or(&0),
        degrees.iter().filter(|&&d| d >= t + 2).count()
    )
    .unwrap();
    let girth = g.girth().map_or("none".to_string(), |x| x.to_string());
    writeln!(out, "girth {girth} genus {genus} t {t}").unwrap();
    let classes = classify_faces(g, t);
    let mut hist: BTreeMap<FaceClass, usize> = BTreeMap::new();
    for f in 0..g.face_count() {
        *hist.entry(classes.class(f)).or_default() += 1;
    }
    let hist: Vec<String> = hist.into_iter().map(|(c, n)| format!("{c}={n}")).collect();
    writeln!(out, "faces {}", hist.join(" ")).unwrap();
    out
}
