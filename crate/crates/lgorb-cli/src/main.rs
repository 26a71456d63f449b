//! Command-line front end: parse a polynomial and a group specification,
//! dispatch the requested computation, and print a deterministic report in
//! either human-readable text or JSON.
//!
//! Exit status: 0 on computed results (including refuted mirror checks),
//! 1 on input errors, 2 on size-limit aborts.

use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use lgorb::groups::{
    diag_generators, enumerate_sigma, maximal_diag_group, DiagGroup, GroupElement, LgModel,
};
use lgorb::mirror::{dsc_check, krawitz_partners, nonabelian_dual, verify_mirror};
use lgorb::orbits::projected_dimensions;
use lgorb::poly::{parse_polynomial, InvertiblePolynomial};
use lgorb::rat::format_rational;
use lgorb::sectors::{Model, SectorBasisElement};
use lgorb::{Caps, Error};

mod groupspec;
mod render;

use groupspec::GroupSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    #[value(alias = "structured")]
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "lgorb",
    about = "Landau-Ginzburg orbifold state spaces and BHK mirror verification for invertible polynomials",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Subcommand)]
enum Command {
    /// Weights q = A_W^{-1}(1,...,1) of the polynomial
    Weights(CommonArgs),
    /// Milnor number of the polynomial
    Milnor(CommonArgs),
    /// The Kreuzer monomial basis of the Milnor ring
    Basis(CommonArgs),
    /// Order and generators of the maximal diagonal symmetry group
    DiagGroup(CommonArgs),
    /// All permutation symmetries of the polynomial
    Sigma(CommonArgs),
    /// Bigraded dimensions of the projected state space of (W, S ⋉ H)
    StateSpace(StateSpaceArgs),
    /// Krawitz partners of the constant-monomial sectors of a diagonal group
    Krawitz(GroupArgs),
    /// Check the mirror isomorphism A(W, S⋉H) ≅ B(W^T, S⋉H^T)
    MirrorCheck(GroupArgs),
    /// Check only the diagonal scaling condition for the mirror pair
    DscCheck(GroupArgs),
}

#[derive(Debug, clap::Args)]
struct CommonArgs {
    /// Polynomial text like "x1^4*x2 + x2^5*x3 + x3^3*x4 + x4^2", or a path
    /// to a file containing it
    #[arg(long)]
    poly: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Cap for group closures and basis enumeration
    #[arg(long, default_value_t = 1_000_000)]
    cap_group_size: usize,
    /// Cap for the per-fiber equivariant bijection search
    #[arg(long, default_value_t = 8)]
    cap_phi_search: usize,
}

#[derive(Debug, clap::Args)]
struct GroupArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Group specification file (diag_generators = ..., perm_generators = ...)
    #[arg(long)]
    group: String,
}

#[derive(Debug, clap::Args)]
struct StateSpaceArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Which bidegree to grade by
    #[arg(long, value_enum, ignore_case = true)]
    model: ModelArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::SizeLimitExceeded(_) | Error::SearchLimitExceeded => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn load_poly(arg: &str) -> Result<InvertiblePolynomial, Error> {
    let text = if std::path::Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("reading {arg}: {e}")))?
    } else {
        arg.to_string()
    };
    parse_polynomial(&text)
}

fn caps_of(common: &CommonArgs) -> Caps {
    Caps {
        group_cap: common.cap_group_size,
        phi_cap: common.cap_phi_search,
        ..Caps::default()
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Weights(args) => {
            let w = load_poly(&args.poly)?;
            match args.format {
                Format::Text => {
                    let parts: Vec<String> = w.weights().iter().map(format_rational).collect();
                    println!("({})", parts.join(", "));
                }
                Format::Json => {
                    let v: Vec<serde_json::Value> = w
                        .weights()
                        .iter()
                        .map(|r| serde_json::Value::String(format_rational(r)))
                        .collect();
                    println!("{}", serde_json::Value::Array(v));
                }
            }
            Ok(())
        }
        Command::Milnor(args) => {
            let w = load_poly(&args.poly)?;
            println!("{}", w.milnor_number());
            Ok(())
        }
        Command::Basis(args) => {
            let w = load_poly(&args.poly)?;
            let basis = w.kreuzer_basis();
            match args.format {
                Format::Text => {
                    for m in &basis {
                        println!("{}", m.format("x"));
                    }
                }
                Format::Json => {
                    let v: Vec<serde_json::Value> = basis
                        .iter()
                        .map(|m| {
                            serde_json::Value::Array(
                                m.exps.iter().map(|&e| serde_json::json!(e)).collect(),
                            )
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(v));
                }
            }
            Ok(())
        }
        Command::DiagGroup(args) => {
            let w = load_poly(&args.poly)?;
            let full = maximal_diag_group(&w)?;
            match args.format {
                Format::Text => {
                    println!("order {}", full.order()?);
                    for rho in diag_generators(&w) {
                        println!("{}", rho.format());
                    }
                }
                Format::Json => {
                    let gens: Vec<serde_json::Value> =
                        diag_generators(&w).iter().map(render::diag_json).collect();
                    println!(
                        "{}",
                        serde_json::json!({"order": full.order()? as u64, "generators": gens})
                    );
                }
            }
            Ok(())
        }
        Command::Sigma(args) => {
            let w = load_poly(&args.poly)?;
            let caps = caps_of(&args);
            let sig = enumerate_sigma(&w, &caps)?;
            match args.format {
                Format::Text => {
                    println!("order {}", sig.order());
                    for p in &sig.elements {
                        println!("{}", p.format());
                    }
                }
                Format::Json => {
                    let elems: Vec<serde_json::Value> = sig
                        .elements
                        .iter()
                        .map(|p| serde_json::Value::String(p.format()))
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({"order": sig.order(), "elements": elems})
                    );
                }
            }
            Ok(())
        }
        Command::StateSpace(args) => {
            let w = load_poly(&args.group.common.poly)?;
            let caps = caps_of(&args.group.common);
            let spec = GroupSpec::load(&args.group.group, &w)?;
            let model = LgModel::new(w, &spec.perm_generators, &spec.diag_generators, &caps)?;
            let which = match args.model {
                ModelArg::A => Model::A,
                ModelArg::B => Model::B,
            };
            let dims = projected_dimensions(&model, which)?;
            match args.group.common.format {
                Format::Text => print!("{}", dims.format()),
                Format::Json => println!("{}", render::graded_json(&dims)),
            }
            Ok(())
        }
        Command::Krawitz(args) => {
            let w = load_poly(&args.common.poly)?;
            let spec = GroupSpec::load(&args.group, &w)?;
            if !spec.perm_generators.is_empty() {
                return Err(Error::NotDiagonalSubgroup);
            }
            let h = DiagGroup::from_generators(w.n_vars(), &spec.diag_generators)?;
            let mut rows = Vec::new();
            for lam in h.elements()? {
                let c = SectorBasisElement {
                    sector: GroupElement::from_diag(lam.clone()),
                    exponents: vec![
                        0;
                        lgorb::sectors::fix_dimension(&GroupElement::from_diag(
                            lam.clone()
                        ))
                    ],
                };
                let partners = krawitz_partners(&w, &c)?;
                rows.push((c, partners));
            }
            match args.common.format {
                Format::Text => {
                    for (c, partners) in &rows {
                        let rhs: Vec<String> = partners.iter().map(|p| p.format()).collect();
                        let flag = if partners.len() > 1 {
                            "  (two-dimensional block)"
                        } else {
                            ""
                        };
                        println!("{} <-> {}{}", c.format(), rhs.join(" | "), flag);
                    }
                }
                Format::Json => {
                    let v: Vec<serde_json::Value> = rows
                        .iter()
                        .map(|(c, partners)| {
                            serde_json::json!({
                                "element": render::sector_element_json(c),
                                "partners": partners
                                    .iter()
                                    .map(render::sector_element_json)
                                    .collect::<Vec<_>>(),
                                "ambiguous": partners.len() > 1,
                            })
                        })
                        .collect();
                    println!("{}", serde_json::Value::Array(v));
                }
            }
            Ok(())
        }
        Command::MirrorCheck(args) => {
            let w = load_poly(&args.common.poly)?;
            let caps = caps_of(&args.common);
            let spec = GroupSpec::load(&args.group, &w)?;
            let model = LgModel::new(w, &spec.perm_generators, &spec.diag_generators, &caps)?;
            let report = verify_mirror(&model, &caps)?;
            match args.common.format {
                Format::Text => print!("{}", render::mirror_text(&report)),
                Format::Json => println!("{}", render::mirror_json(&report)),
            }
            Ok(())
        }
        Command::DscCheck(args) => {
            let w = load_poly(&args.common.poly)?;
            let caps = caps_of(&args.common);
            let spec = GroupSpec::load(&args.group, &w)?;
            let model = LgModel::new(w, &spec.perm_generators, &spec.diag_generators, &caps)?;
            let dual = nonabelian_dual(&model, &caps)?;
            let report = dsc_check(&model, &dual, &caps)?;
            match args.common.format {
                Format::Text => {
                    if report.pass {
                        println!("DSC: pass");
                    } else {
                        println!("DSC: fail");
                        for f in &report.failures {
                            println!(
                                "  side {}: fiber {} scaled by {} (scalar {}) with no diagonal counterpart",
                                if f.on_a_side { "A" } else { "B" },
                                f.fiber.format(),
                                f.scaler.format(),
                                f.scalar
                            );
                        }
                    }
                }
                Format::Json => println!("{}", render::dsc_json(&report)),
            }
            Ok(())
        }
    }
}
