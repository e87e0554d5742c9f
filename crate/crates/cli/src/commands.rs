use crate::Command;
use anyhow::{anyhow, bail, Context, Result};
use std::fmt::Write;
use std::fs;
use std::path::{Path, PathBuf};
use veerkit::carried::{
    assemble_surface, classify, enumerate_connected_weight_systems, enumerate_weight_systems,
    parse_wts, surface_topology, track_regions, write_wts, CarriedSurface, WeightSystem,
};
use veerkit::data::{fig12_entry, fig8_entry, figure7, reconstruct_all, shipped_files};
use veerkit::invariants::{edge_orientable, homology_h1, EdgeOrientability};
use veerkit::mutation::{alignment_check, edge_product_disks, mutant_signature, mutate, Alignment};
use veerkit::symmetry::{
    automorphism_group, fixed_simplices, parse_aut, write_aut, SurfaceAutomorphism,
};
use veerkit::trimesh::{ConnectOutcome, VeeringOutcome};
use veerkit::{
    canonical_signature, load_triangulation, pachner_connect, write_vrt, Flavor,
    TautIdealTriangulation,
};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> Result<TautIdealTriangulation> {
    load_triangulation(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn weights(tri: &TautIdealTriangulation, path: &Path, index: usize) -> Result<WeightSystem> {
    let all = parse_wts(tri, &read(path)?).with_context(|| format!("{}", path.display()))?;
    let n = all.len();
    all.into_iter().nth(index).ok_or_else(|| {
        anyhow!(
            "{} has {n} weight systems, no index {index}",
            path.display()
        )
    })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn surface_line(q: &CarriedSurface) -> String {
    let t = surface_topology(q);
    let genus = t.genus.map_or("-".to_string(), |g| g.to_string());
    format!(
        "chi {} punctures {} genus {} components {}",
        t.euler_char,
        t.boundary_components,
        genus,
        t.components.len()
    )
}

pub fn run(command: Command) -> Result<String> {
    let mut out = String::new();
    match command {
        Command::Validate { file } => {
            let tri = load(&file)?;
            writeln!(
                out,
                "tets {} faces {} edges {}",
                tri.num_tets(),
                tri.num_faces(),
                tri.num_edges()
            )?;
            if !tri.has_coorientations() {
                writeln!(out, "taut: no coorientations")?;
            } else {
                writeln!(out, "taut: yes")?;
                match tri.check_veering()? {
                    VeeringOutcome::Veering(colors) => {
                        let c: Vec<String> = colors.iter().map(|c| c.to_string()).collect();
                        writeln!(out, "veering: yes")?;
                        writeln!(out, "colors: {}", c.join(" "))?;
                    }
                    VeeringOutcome::NotVeering(w) => writeln!(out, "veering: no ({w})")?,
                }
            }
        }
        Command::Signature { file, plain } => {
            let tri = load(&file)?;
            let flavor = if plain || !tri.has_coorientations() {
                Flavor::Plain
            } else {
                Flavor::Taut
            };
            writeln!(out, "{}", canonical_signature(&tri, flavor)?)?;
        }
        Command::Weights {
            file,
            cap,
            connected,
            emit_wts,
        } => {
            let tri = load(&file)?;
            let systems = if connected {
                enumerate_connected_weight_systems(&tri, cap)?
            } else {
                enumerate_weight_systems(&tri, cap)?
            };
            if emit_wts {
                out.push_str(&write_wts(&systems));
            } else {
                writeln!(
                    out,
                    "{} weight systems with weights at most {cap}",
                    systems.len()
                )?;
                for w in &systems {
                    let q = assemble_surface(&tri, w)?;
                    writeln!(out, "{w}  |  {}", surface_line(&q))?;
                }
            }
        }
        Command::Surface {
            file,
            weights: wpath,
            index,
            emit_srf,
        } => {
            let tri = load(&file)?;
            let w = weights(&tri, &wpath, index)?;
            let q = assemble_surface(&tri, &w)?;
            if emit_srf {
                out.push_str(&q.to_srf());
            } else {
                writeln!(out, "weights {w}")?;
                writeln!(
                    out,
                    "triangles {} edges {}",
                    q.num_triangles(),
                    q.num_edges()
                )?;
                writeln!(out, "{}", surface_line(&q))?;
                let regions = track_regions(&q);
                let idx: Vec<String> = regions.iter().map(|r| r.index.to_string()).collect();
                writeln!(out, "track region indices {}", idx.join(" "))?;
            }
        }
        Command::Auts {
            file,
            weights: wpath,
            index,
            all,
            emit_aut,
        } => {
            let tri = load(&file)?;
            let w = weights(&tri, &wpath, index)?;
            let q = assemble_surface(&tri, &w)?;
            let group = automorphism_group(&q, !all);
            if emit_aut {
                let names: Vec<String> = (0..group.len()).map(|i| format!("a{i}")).collect();
                let entries: Vec<(&str, &SurfaceAutomorphism)> =
                    names.iter().map(|s| s.as_str()).zip(&group).collect();
                out.push_str(&write_aut(&entries));
            } else {
                let kind = if all {
                    "automorphisms"
                } else {
                    "track automorphisms"
                };
                writeln!(out, "{} {kind}", group.len())?;
                for (i, phi) in group.iter().enumerate() {
                    let (fe, fp) = fixed_simplices(&q, phi);
                    let im: Vec<String> = phi.images.iter().map(|x| x.to_string()).collect();
                    writeln!(
                        out,
                        "a{i}: order {} track {} fixed edges {fe} fixed punctures {fp} images {}",
                        phi.order(),
                        yes(phi.track_preserving),
                        im.join(" ")
                    )?;
                }
            }
        }
        Command::Disks {
            file,
            weights: wpath,
            index,
        } => {
            let tri = load(&file)?;
            let w = weights(&tri, &wpath, index)?;
            let q = assemble_surface(&tri, &w)?;
            let disks = edge_product_disks(&tri, &w)?;
            writeln!(out, "{} edge product disks", disks.len())?;
            for d in &disks {
                writeln!(
                    out,
                    "e{} between copies {} and {}",
                    d.edge,
                    d.level - 1,
                    d.level
                )?;
            }
            for (i, phi) in automorphism_group(&q, false).iter().enumerate() {
                match alignment_check(&q, phi) {
                    Alignment::Misaligns => writeln!(out, "a{i}: misaligns")?,
                    Alignment::Aligns(cycle) => {
                        let c: Vec<String> = cycle
                            .iter()
                            .map(|d| format!("e{}/{}", d.edge, d.level))
                            .collect();
                        writeln!(out, "a{i}: aligns along {}", c.join(" "))?;
                    }
                }
            }
        }
        Command::Mutate {
            file,
            weights: wpath,
            index,
            aut,
            aut_file,
            emit_vrt,
        } => {
            let tri = load(&file)?;
            let w = weights(&tri, &wpath, index)?;
            let apath = aut_file.unwrap_or_else(|| wpath.with_extension("aut"));
            let auts = parse_aut(&read(&apath)?).with_context(|| format!("{}", apath.display()))?;
            let phi = auts
                .into_iter()
                .find(|(n, _)| *n == aut)
                .map(|(_, p)| p)
                .ok_or_else(|| anyhow!("no automorphism named {aut} in {}", apath.display()))?;
            let rec = mutate(&tri, &w, &phi)?;
            writeln!(out, "automorphism {aut}")?;
            writeln!(out, "{}", rec.regluing)?;
            writeln!(
                out,
                "track preserving: {}",
                yes(rec.report.track_preserving)
            )?;
            writeln!(out, "taut: {}", yes(rec.report.taut.is_ok()))?;
            writeln!(out, "veering: {}", yes(rec.report.veering.is_veering()))?;
            writeln!(
                out,
                "input signature {}",
                canonical_signature(&tri, Flavor::Taut)?
            )?;
            writeln!(out, "mutant signature {}", mutant_signature(&rec)?)?;
            if let Some(path) = emit_vrt {
                fs::write(&path, write_vrt(&rec.mutant, &[]))
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
        }
        Command::PachnerConnect {
            from,
            to,
            max_depth,
            budget,
        } => {
            let a = load(&from)?;
            let b = load(&to)?;
            match pachner_connect(&a, &b, max_depth, budget)? {
                ConnectOutcome::Path(steps) => {
                    writeln!(out, "path of length {}", steps.len())?;
                    for s in &steps {
                        writeln!(out, "{} at {} -> {}", s.kind, s.site, s.signature)?;
                    }
                }
                ConnectOutcome::NotFound => writeln!(out, "not found within depth {max_depth}")?,
            }
        }
        Command::Homology { file } => {
            writeln!(out, "H1 = {}", homology_h1(&load(&file)?))?;
        }
        Command::EdgeOrient { file } => {
            let tri = load(&file)?;
            match edge_orientable(&tri)? {
                EdgeOrientability::Orientable(x) => {
                    writeln!(out, "edge-orientable")?;
                    for (e, flip) in x.iter().enumerate() {
                        let m = &tri.edge(e).embeddings[0];
                        let (a, b) = if *flip {
                            (m.head, m.tail)
                        } else {
                            (m.tail, m.head)
                        };
                        writeln!(out, "e{e}: tet {} vertex {a} -> {b}", m.tet)?;
                    }
                }
                EdgeOrientability::NotOrientable(cycle) => {
                    let faces: Vec<String> = cycle.iter().map(|c| format!("f{}", c.face)).collect();
                    writeln!(out, "not edge-orientable")?;
                    writeln!(out, "obstruction faces {}", faces.join(" "))?;
                }
            }
        }
        Command::Classify { file } => {
            let c = classify(&load(&file)?)?;
            writeln!(out, "{}", c.class)?;
        }
        Command::ReportFigure7 => report_figure7(&mut out)?,
        Command::Reconstruct { out: dir, check } => reconstruct(&mut out, dir, check)?,
    }
    Ok(out)
}

fn report_figure7(out: &mut String) -> Result<()> {
    let fig = figure7()?;
    writeln!(out, "mutations of V along Q0 = f2 + f5 + f7 + f11")?;
    writeln!(out)?;
    for (name, r) in &fig.regluings {
        writeln!(out, "r({name})")?;
        writeln!(out, "{r}")?;
    }
    writeln!(out)?;
    writeln!(
        out,
        "{:<5} {:<6} {:<8} {:<12} {:<10} {:<15} label",
        "", "taut", "veering", "class", "H1", "edge-orientable"
    )?;
    for row in &fig.rows {
        writeln!(
            out,
            "{:<5} {:<6} {:<8} {:<12} {:<10} {:<15} {}",
            row.name,
            yes(row.taut),
            yes(row.veering),
            row.class.to_string(),
            row.h1.to_string(),
            yes(row.edge_orientable),
            row.label
        )?;
    }
    writeln!(out)?;
    for row in &fig.rows {
        writeln!(out, "{:<5} {}", row.name, row.signature)?;
    }
    writeln!(
        out,
        "V and V^rs have the same taut signature: {}",
        yes(fig.rows[0].signature == fig.rows[3].signature)
    )?;
    for e in &fig.square {
        let verdict = match e.commutes {
            Some(b) => yes(b),
            None => "automorphism not transported",
        };
        writeln!(
            out,
            "{} then {} agrees with rs: {verdict}",
            e.first, e.second
        )?;
    }
    writeln!(out)?;
    out.push_str(veerkit::data::FIGURE7_EXCLUSIONS);
    Ok(())
}

fn reconstruct(out: &mut String, dir: Option<PathBuf>, check: Option<PathBuf>) -> Result<()> {
    for entry in [fig8_entry(), fig12_entry()] {
        let all = reconstruct_all(&entry)?;
        writeln!(out, "{}: {} solution(s)", entry.name, all.len())?;
        for sig in all.keys() {
            writeln!(out, "  {sig}")?;
        }
        if all.len() != 1 {
            bail!("{} is not reconstructed uniquely", entry.name);
        }
    }
    let files = shipped_files()?;
    if let Some(dir) = dir {
        fs::create_dir_all(&dir)?;
        for (name, text) in &files {
            fs::write(dir.join(name), text)?;
            writeln!(out, "wrote {name}")?;
        }
    }
    if let Some(dir) = check {
        let mut stale = Vec::new();
        for (name, text) in &files {
            if read(&dir.join(name)).ok().as_deref() != Some(text.as_str()) {
                stale.push(*name);
            }
        }
        if !stale.is_empty() {
            bail!("out of date: {}", stale.join(" "));
        }
        writeln!(out, "{} files up to date", files.len())?;
    }
    Ok(())
}
