//! Dispatch from parsed arguments to the core library, and rendering of the
//! results as text or as the JSON envelope.

use std::fmt::Write as _;

use bunncalc_core::kottwitz::{automorphism_group, dot_export, enumerate_b, hasse};
use bunncalc_core::lparam::{b_to_chis, chi_to_b, chi_to_bundle, chi_to_rep, make_f};
use bunncalc_core::shtuka::{
    boyer_factorize, harris_viehmann, harris_viehmann_at, igusa_cohomology, mantovan_pieces,
    modification_necessary, modification_targets_rank_one, shtuka_cohomology, Direction, HvOutput,
};
use bunncalc_core::spectral::{eigensheaf_stalk, hecke, spectral_act, stalk, verify_eigen, HeckeTerm};
use bunncalc_core::weights::{isotypic_decomposition, levi_branching, sigma_chi, weight_multiplicities, WeilSymbol};
use bunncalc_core::{
    parse_bundle, parse_chi, parse_int_list, parse_weight, BundleSpec, CharacterExponents, CohomologyOutput, Error,
    LParamShape, NewtonPoint,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Cli, Command, HeckeArgs, KottwitzArgs, KottwitzCmd, PhiArgs, SpectralCmd, WeightsCmd};

pub const SCHEMA: &str = "bunncalc/1";

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_parse() => 2,
            _ => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type Out = Result<String, CliError>;

/// Text and JSON renderings of one result.
struct Emit {
    command: &'static str,
    text: String,
    json: Value,
}

impl Emit {
    fn new(command: &'static str, text: String, json: impl Serialize) -> Self {
        Emit { command, text, json: serde_json::to_value(json).expect("results serialize") }
    }

    fn finish(self, as_json: bool) -> String {
        if as_json {
            let envelope = json!({ "schema": SCHEMA, "command": self.command, "result": self.json });
            serde_json::to_string_pretty(&envelope).expect("JSON values serialize")
        } else {
            self.text
        }
    }
}

pub fn run(cli: &Cli) -> Out {
    let emit = match &cli.command {
        Command::Bundle { expr } => bundle(expr)?,
        Command::Kottwitz(KottwitzCmd::Enum(args)) => return kottwitz(args, false, cli.json),
        Command::Kottwitz(KottwitzCmd::Hasse(args)) => return kottwitz(args, true, cli.json),
        Command::ChiToB { phi, chi } => chi_to_b_cmd(phi, chi)?,
        Command::BToChis { phi, bundle } => b_to_chis_cmd(phi, bundle)?,
        Command::Weights(WeightsCmd::Mult { lambda }) => weights_mult(lambda)?,
        Command::Weights(WeightsCmd::Branch { lambda, blocks }) => weights_branch(lambda, blocks)?,
        Command::Weights(WeightsCmd::Sigma { phi, lambda, chi }) => weights_sigma(phi, lambda, chi)?,
        Command::Spectral(SpectralCmd::Act { phi, chi, xi }) => spectral_act_cmd(phi, chi, xi)?,
        Command::Spectral(SpectralCmd::Hecke(args)) | Command::Hecke(args) => hecke_cmd(args)?,
        Command::Spectral(SpectralCmd::Stalk { phi, lambda, xi, b }) => {
            let args = HeckeArgs { phi: PhiArgs { dims: phi.dims.clone() }, lambda: lambda.clone(), xi: xi.clone(), stalk: Some(b.clone()) };
            hecke_cmd(&args)?
        }
        Command::Spectral(SpectralCmd::Eigensheaf { phi, b }) => eigensheaf_cmd(phi, b)?,
        Command::Spectral(SpectralCmd::Verify { phi, lambda, b }) => verify_cmd(phi, lambda, b)?,
        Command::Shtuka { phi, xi, mu, mu_inv, target } => shtuka_cmd(phi, xi, mu.as_deref(), mu_inv.as_deref(), target)?,
        Command::Hv { phi, xi, b, mu_inv } => hv_cmd(phi, xi.as_deref(), b.as_deref(), mu_inv)?,
        Command::Boyer { b, bprime, mu, split } => boyer_cmd(b, bprime, mu, *split)?,
        Command::Modif { n, n_prime, b, bprime, mu } => modif_cmd(*n, *n_prime, b.as_deref(), bprime.as_deref(), mu.as_deref())?,
        Command::Igusa { phi, mu, b, mantovan } => igusa_cmd(phi, mu, b, *mantovan)?,
    };
    Ok(emit.finish(cli.json))
}

fn shape(phi: &PhiArgs) -> Result<LParamShape, CliError> {
    let dims = parse_int_list(&phi.dims)?;
    let dims: Vec<u64> = dims
        .iter()
        .map(|&d| u64::try_from(d).map_err(|_| Error::Parse { pos: 0, msg: format!("dimension {d} is negative") }))
        .collect::<Result<_, _>>()?;
    Ok(LParamShape::from_dims(&dims)?)
}

fn stratum(text: &str) -> Result<NewtonPoint, CliError> {
    Ok(NewtonPoint::from_bundle(&parse_bundle(text)?))
}

fn exponents(e: &CharacterExponents) -> String {
    if e.is_trivial() {
        return "trivial".into();
    }
    let parts: Vec<String> = e.exps.iter().map(|(i, x)| format!("|det_{}|^{}", i + 1, x)).collect();
    parts.join(" · ")
}

fn bundle(expr: &str) -> Result<Emit, CliError> {
    let e = parse_bundle(expr)?;
    let b = NewtonPoint::from_bundle(&e);
    let group = automorphism_group(&e);
    let slopes: Vec<String> = e.slope_classes().iter().map(|(s, m)| format!("{s}^{m}")).collect();
    let mut text = String::new();
    let _ = writeln!(text, "E = {}", e.canonical());
    let _ = writeln!(text, "rank {}, degree {}", e.rank(), e.degree());
    let _ = writeln!(text, "slope classes: {}", slopes.join(", "));
    let _ = writeln!(text, "ν = {b}, κ = {}, ⟨2ρ,ν⟩ = {}", b.kappa(), b.rho_pairing());
    let _ = writeln!(text, "semistable: {}", e.is_semistable());
    let _ = write!(text, "Aut(E) = {group}");
    let json = json!({
        "bundle": e,
        "canonical": e.canonical(),
        "rank": e.rank(),
        "degree": e.degree(),
        "newton_point": b,
        "kappa": b.kappa(),
        "rho_pairing": b.rho_pairing(),
        "semistable": e.is_semistable(),
        "automorphism_group": group.to_string(),
    });
    Ok(Emit::new("bundle", text, json))
}

fn kottwitz(args: &KottwitzArgs, edges_only: bool, as_json: bool) -> Out {
    let mu = parse_int_list(&args.mu)?;
    let points = enumerate_b(args.n, &mu)?;
    let edges = hasse(&points);
    let mut dot_to_stdout = false;
    if let Some(path) = &args.dot {
        let dot = dot_export(&points);
        if path == "-" {
            dot_to_stdout = true;
        } else {
            std::fs::write(path, dot).map_err(|e| CliError::Io(format!("cannot write {path}: {e}")))?;
        }
    }
    if dot_to_stdout {
        return Ok(dot_export(&points));
    }
    let command = if edges_only { "kottwitz hasse" } else { "kottwitz enum" };
    let mut text = String::new();
    if edges_only {
        for (lo, hi) in &edges {
            let _ = writeln!(text, "{} ≤ {}", points[*lo], points[*hi]);
        }
    } else {
        let _ = writeln!(text, "|B(GL_{}, {:?})| = {}", args.n, mu, points.len());
        for p in &points {
            let _ = writeln!(text, "{}  E = {}", p.label(), p.to_bundle());
        }
    }
    let json = json!({
        "n": args.n,
        "mu": mu,
        "points": points.iter().map(|p| json!({
            "newton_point": p,
            "label": p.label(),
            "bundle": p.to_bundle().canonical(),
            "kappa": p.kappa(),
            "rho_pairing": p.rho_pairing(),
        })).collect::<Vec<_>>(),
        "hasse": edges.iter().map(|(lo, hi)| [lo, hi]).collect::<Vec<_>>(),
    });
    Ok(Emit::new(command, text, json).finish(as_json))
}

fn chi_to_b_cmd(phi: &PhiArgs, chi: &str) -> Result<Emit, CliError> {
    let p = shape(phi)?;
    let chi = parse_chi(chi)?;
    let e = chi_to_bundle(&p, &chi)?;
    let b = chi_to_b(&p, &chi)?;
    let rep = chi_to_rep(&p, &chi)?;
    let labels = p.labels();
    let text = format!(
        "E_χ = {}\nb_χ = {b}, d = {}\nπ_χ = {}",
        e.canonical(),
        b.rho_pairing(),
        rep.render(&labels)
    );
    let json = json!({ "chi": chi, "bundle": e.canonical(), "b": b, "d": b.rho_pairing(), "rep": rep, "rep_text": rep.render(&labels) });
    Ok(Emit::new("chi-to-b", text, json))
}

fn b_to_chis_cmd(phi: &PhiArgs, bundle: &str) -> Result<Emit, CliError> {
    let p = shape(phi)?;
    let b = stratum(bundle)?;
    let chis = b_to_chis(&p, &b)?;
    let mut text = format!("{} character(s) with b_χ = {b}", chis.len());
    for c in &chis {
        let _ = write!(text, "\n  χ = {c}");
    }
    Ok(Emit::new("b-to-chis", text, json!({ "b": b, "chis": chis })))
}

fn weights_mult(lambda: &str) -> Result<Emit, CliError> {
    let lam = parse_weight(lambda)?;
    let mults = weight_multiplicities(&lam)?;
    let mut text = format!("V_{lam}: dim {}", lam.dim());
    for (w, m) in mults.iter().rev() {
        let _ = write!(text, "\n  {w:?}: {m}");
    }
    let json = json!({
        "lambda": lam,
        "dim": lam.dim().to_string(),
        "weights": mults.iter().rev().map(|(w, m)| json!({ "weight": w, "mult": m })).collect::<Vec<_>>(),
    });
    Ok(Emit::new("weights mult", text, json))
}

fn weights_branch(lambda: &str, blocks: &str) -> Result<Emit, CliError> {
    let lam = parse_weight(lambda)?;
    let blocks: Vec<u64> = parse_int_list(blocks)?
        .into_iter()
        .map(|b| u64::try_from(b).map_err(|_| Error::Parse { pos: 0, msg: format!("block size {b} is negative") }))
        .collect::<Result<_, _>>()?;
    let terms = levi_branching(&lam, &blocks)?;
    let symbol = WeilSymbol::new(blocks.clone(), terms.clone());
    let text = format!("V_{lam}|_M = {symbol}");
    let json = json!({
        "lambda": lam,
        "blocks": blocks,
        "terms": terms.iter().map(|(mono, m)| json!({ "weights": mono, "mult": m })).collect::<Vec<_>>(),
        "text": symbol.to_string(),
    });
    Ok(Emit::new("weights branch", text, json))
}

fn weights_sigma(phi: &PhiArgs, lambda: &str, chi: &str) -> Result<Emit, CliError> {
    let p = shape(phi)?;
    let lam = parse_weight(lambda)?;
    let chi = parse_chi(chi)?;
    let s = sigma_chi(&p, &lam, &chi)?;
    let labels = p.labels();
    let mut text = format!("σ_{chi} = {} (dim {})", s.render(&labels), s.dim);
    if let Ok(iso) = isotypic_decomposition(&p, &lam) {
        let _ = write!(text, "\nr_λ ∘ φ = ");
        let parts: Vec<String> = iso.iter().map(|(c, s)| format!("χ_{c} ⊠ {}", s.render(&labels))).collect();
        text.push_str(&parts.join(" ⊕ "));
    }
    let json = json!({ "chi": chi, "lambda": lam, "sigma": s, "text": s.render(&labels), "dim": s.dim.to_string() });
    Ok(Emit::new("weights sigma", text, json))
}

fn spectral_act_cmd(phi: &PhiArgs, chi: &str, xi: &str) -> Result<Emit, CliError> {
    let p = shape(phi)?;
    let chi = parse_chi(chi)?;
    let xi = parse_chi(xi)?;
    let f = make_f(&p, &xi)?;
    let g = spectral_act(&p, &chi, &f)?;
    let labels = p.labels();
    let text = format!("C_{chi} ⋆ F_{xi} = F_{}\n  = {}", chi.mul(&xi), g.render(&labels));
    Ok(Emit::new("spectral act", text, json!({ "chi": chi, "xi": xi, "sheaf": g, "text": g.render(&labels) })))
}

fn term_json(t: &HeckeTerm, labels: &[String]) -> Value {
    json!({
        "chi": t.chi,
        "sheaf": t.sheaf,
        "sheaf_text": t.sheaf.render(labels),
        "sigma": t.sigma,
        "sigma_text": t.sigma.render(labels),
        "dim": t.sigma.dim.to_string(),
    })
}

fn hecke_cmd(args: &HeckeArgs) -> Result<Emit, CliError> {
    let p = shape(&args.phi)?;
    let lam = parse_weight(&args.lambda)?;
    let xi = parse_chi(&args.xi)?;
    let dec = hecke(&p, &lam, &make_f(&p, &xi)?)?;
    let labels = p.labels();
    let (terms, header, b) = match &args.stalk {
        Some(s) => {
            let b = stratum(s)?;
            (stalk(&dec, &b), format!("i_b^* T_{lam}(F_{xi}) at b = {b}"), Some(b))
        }
        None => (dec.terms.clone(), format!("T_{lam}(F_{xi}), total dim {}", dec.total_dim()), None),
    };
    let mut text = header;
    if terms.is_empty() {
        text.push_str("\n  0");
    }
    for t in &terms {
        let _ = write!(text, "\n  χ = {}: {} ⊠ {}", t.chi, t.sheaf.render(&labels), t.sigma.render(&labels));
    }
    let json = json!({
        "lambda": lam,
        "xi": xi,
        "stalk": b,
        "total_dim": dec.total_dim().to_string(),
        "terms": terms.iter().map(|t| term_json(t, &labels)).collect::<Vec<_>>(),
    });
    Ok(Emit::new("spectral hecke", text, json))
}

fn eigensheaf_cmd(phi: &PhiArgs, b: &str) -> Result<Emit, CliError> {
    let p = shape(phi)?;
    let b = stratum(b)?;
    let st = eigensheaf_stalk(&p, &b)?;
    let labels = p.labels();
    let mut text = format!("G_φ|_b at b = {b}: {} piece(s)", st.pieces.len());
    for (c, f) in st.chis.iter().zip(&st.pieces) {
        let _ = write!(text, "\n  F_{c} = {}", f.render(&labels));
    }
    Ok(Emit::new("spectral eigensheaf", text, st))
}

fn verify_cmd(phi: &PhiArgs, lambda: &str, strata: &[String]) -> Result<Emit, CliError> {
    let p = shape(phi)?;
    let lam = parse_weight(lambda)?;
    let list: Vec<NewtonPoint> = if strata.is_empty() {
        let mut list = vec![NewtonPoint::basic(p.n(), 0)];
        for (chi, _) in isotypic_decomposition(&p, &lam)? {
            let b = chi_to_b(&p, &chi)?;
            if !list.contains(&b) {
                list.push(b);
            }
        }
        list
    } else {
        strata.iter().map(|s| stratum(s)).collect::<Result<_, _>>()?
    };
    let ok = verify_eigen(&p, &lam, &list)?;
    let names: Vec<String> = list.iter().map(|b| b.to_string()).collect();
    let text = format!(
        "T_{lam}(G_φ) = G_φ ⊠ (r_λ ∘ φ) on {} stratum(s) {}: {}",
        list.len(),
        names.join(" "),
        if ok { "holds" } else { "FAILS" }
    );
    Ok(Emit::new("spectral verify", text, json!({ "lambda": lam, "strata": list, "holds": ok })))
}

fn render_cohomology(out: &CohomologyOutput, labels: &[String], text: &mut String) {
    let _ = writeln!(text, "convention: {}", out.convention);
    let _ = writeln!(text, "source b = {} (π_b = {}), target b' = {}", out.source, out.source_rep.render(labels), out.target);
    let _ = writeln!(text, "κ_b^{{-1}} = δ_b = {}", exponents(&out.source_twist));
    if out.pieces.is_empty() {
        let _ = writeln!(text, "no contribution at b'");
    }
    for piece in &out.pieces {
        let sigma = match (&piece.dual, &piece.sigma_dual_form) {
            (true, Some(form)) => format!("{} = ({})^∨", piece.sigma.render(labels), form.render(labels)),
            _ => piece.sigma.render(labels),
        };
        let _ = writeln!(
            text,
            "  {} ⊠ {}  [shift {}] (Tate {}), dim {}",
            piece.rep.render(labels),
            sigma,
            piece.shift,
            piece.tate,
            piece.sigma.dim
        );
        if let Some(ind) = &piece.induction {
            let _ = writeln!(text, "    {ind}");
        }
    }
    for e in &out.ledger {
        let _ = writeln!(text, "  ledger: {}: {}", e.source, e.contribution);
    }
    for n in &out.notes {
        let _ = writeln!(text, "note: {n}");
    }
}

/// Adds rendered text next to the structural fields of each piece.
fn cohomology_json(out: &CohomologyOutput, labels: &[String]) -> Value {
    let mut v = serde_json::to_value(out).expect("results serialize");
    v["source_rep_text"] = json!(out.source_rep.render(labels));
    for (j, piece) in out.pieces.iter().enumerate() {
        let slot = &mut v["pieces"][j];
        slot["rep_text"] = json!(piece.rep.render(labels));
        slot["sigma_text"] = json!(piece.sigma.render(labels));
        slot["sigma_dim"] = json!(piece.sigma.dim.to_string());
        if let Some(form) = &piece.sigma_dual_form {
            slot["sigma_dual_form_text"] = json!(form.render(labels));
        }
    }
    v
}

fn hv_json(out: &HvOutput, labels: &[String]) -> Value {
    json!({ "cohomology": cohomology_json(&out.cohomology, labels), "levi": out.levi })
}

fn shtuka_cmd(phi: &PhiArgs, xi: &str, mu: Option<&str>, mu_inv: Option<&str>, target: &str) -> Result<Emit, CliError> {
    let p = shape(phi)?;
    let xi = parse_chi(xi)?;
    let (weight, direction) = match (mu, mu_inv) {
        (_, Some(w)) => (parse_weight(w)?, Direction::Inverse),
        (Some(w), None) => (parse_weight(w)?, Direction::Forward),
        (None, None) => unreachable!("clap requires one of --mu, --mu-inv"),
    };
    let out = shtuka_cohomology(&p, &xi, &stratum(target)?, &weight, direction)?;
    let labels = p.labels();
    let mut text = String::new();
    render_cohomology(&out, &labels, &mut text);
    Ok(Emit::new("shtuka", text.trim_end().to_string(), cohomology_json(&out, &labels)))
}

fn render_hv(out: &HvOutput, labels: &[String], text: &mut String) {
    render_cohomology(&out.cohomology, labels, text);
    let blocks: Vec<String> = out.levi.blocks.iter().map(u64::to_string).collect();
    let _ = writeln!(text, "  Levi M = GL_{{{}}}, d_M = {}", blocks.join(","), out.levi.d_m);
    if let Some(comps) = &out.levi.mu_components {
        let comps: Vec<String> = comps.iter().map(|c| format!("{c:?}")).collect();
        let _ = writeln!(text, "  μ_M = {}", comps.join(" × "));
    }
    if let Some(br) = &out.levi.branching {
        let _ = writeln!(text, "  r_{{μ^{{-1}}}}|_M = {}", WeilSymbol::new(out.levi.blocks.clone(), br.clone()));
    }
}

fn hv_cmd(phi: &PhiArgs, xi: Option<&str>, b: Option<&str>, mu_inv: &str) -> Result<Emit, CliError> {
    let p = shape(phi)?;
    let mu_inv = parse_weight(mu_inv)?;
    let labels = p.labels();
    let mut text = String::new();
    match (xi, b) {
        (Some(xi), _) => {
            let out = harris_viehmann(&p, &parse_chi(xi)?, &mu_inv)?;
            render_hv(&out, &labels, &mut text);
            Ok(Emit::new("hv", text.trim_end().to_string(), hv_json(&out, &labels)))
        }
        (None, Some(b)) => {
            let outs = harris_viehmann_at(&p, &stratum(b)?, &mu_inv)?;
            for out in &outs {
                render_hv(out, &labels, &mut text);
            }
            let json: Vec<Value> = outs.iter().map(|o| hv_json(o, &labels)).collect();
            Ok(Emit::new("hv", text.trim_end().to_string(), json))
        }
        (None, None) => unreachable!("clap requires one of --xi, --b"),
    }
}

fn boyer_cmd(b: &str, bprime: &str, mu: &str, split: u64) -> Result<Emit, CliError> {
    let b = parse_bundle(b)?;
    let bp = parse_bundle(bprime)?;
    let mu = parse_int_list(mu)?;
    let f = boyer_factorize(&b, &bp, &mu, split)?;
    let mut text = String::new();
    let _ = writeln!(text, "direction: {:?}, m = {}", f.direction, f.m);
    let _ = writeln!(text, "b = ({}) ⊕ ({})", f.b1, f.b2);
    let _ = writeln!(text, "b' = ({}) ⊕ ({})", f.bp1, f.bp2);
    let _ = writeln!(text, "μ_1 = {:?}, μ_2 = {:?}", f.mu1, f.mu2);
    let _ = writeln!(text, "G = {}", f.group);
    let _ = writeln!(text, "G_b = {}", f.group_b);
    let _ = writeln!(text, "G_b' = {}", f.group_bprime);
    let _ = writeln!(text, "P = {}{}", f.parabolic, if f.parabolic_proper { " (proper)" } else { "" });
    let _ = writeln!(text, "⟨2ρ,ν⟩ = {}, ⟨2ρ_m,ν_1⟩ = {}, ⟨2ρ_{{n−m}},ν_2⟩ = {}", f.rho_full, f.rho_1, f.rho_2);
    let _ = writeln!(text, "d = {}, h = {}", f.d, f.h);
    let _ = writeln!(text, "κ twist = {}", exponents(&f.kappa_twist));
    for n in &f.notes {
        let _ = writeln!(text, "note: {n}");
    }
    Ok(Emit::new("boyer", text.trim_end().to_string(), f))
}

fn modif_cmd(n: Option<u64>, n_prime: Option<u64>, b: Option<&str>, bprime: Option<&str>, mu: Option<&str>) -> Result<Emit, CliError> {
    if let (Some(n), Some(n_prime)) = (n, n_prime) {
        let targets = modification_targets_rank_one(n, n_prime)?;
        let names: Vec<String> = targets.iter().map(BundleSpec::canonical).collect();
        let mut text = format!("E with O(1/{n_prime}) ⊕ O^{} a degree-1 modification of E ({}):", n - n_prime, names.len());
        for t in &names {
            let _ = write!(text, "\n  {t}");
        }
        return Ok(Emit::new("modif", text, json!({ "n": n, "n_prime": n_prime, "bundles": names })));
    }
    let (b, bp, mu) = (parse_bundle(b.unwrap_or(""))?, parse_bundle(bprime.unwrap_or(""))?, parse_int_list(mu.unwrap_or(""))?);
    let ok = modification_necessary(&b, &bp, &mu)?;
    let text = format!(
        "necessary conditions for a type-{mu:?} modification {} ⇝ {}: {}",
        b.canonical(),
        bp.canonical(),
        if ok { "satisfied" } else { "violated" }
    );
    Ok(Emit::new("modif", text, json!({ "b": b.canonical(), "bprime": bp.canonical(), "mu": mu, "necessary_conditions_hold": ok })))
}

fn igusa_cmd(phi: &PhiArgs, mu: &str, b: &str, mantovan: bool) -> Result<Emit, CliError> {
    let p = shape(phi)?;
    let mu = parse_weight(mu)?;
    let out = igusa_cohomology(&p, &mu, &stratum(b)?)?;
    let mut text = format!("H^{}_c(Ig_b, L)[Π^{{∞,p}}] at b = {} =", out.degree, out.stratum);
    if out.pieces.is_empty() {
        text.push_str(" 0");
    }
    for piece in &out.pieces {
        let _ = write!(text, "\n  {} · {}", out.multiplicity, piece.text);
    }
    let pieces = if mantovan { Some(mantovan_pieces(&mu)?) } else { None };
    if let Some(list) = &pieces {
        text.push_str("\nMantovan filtration:");
        for (_, line) in list {
            let _ = write!(text, "\n  {line}");
        }
    }
    let json = json!({
        "igusa": out,
        "mantovan": pieces.map(|l| l.into_iter().map(|(b, t)| json!({ "b": b, "text": t })).collect::<Vec<_>>()),
    });
    Ok(Emit::new("igusa", text, json))
}
