//! Command-line front end: parses the element and polynomial expression
//! languages and binds every kernel capability to a subcommand, with text or
//! JSON output.
//!
//! Exit codes: 0 on success, 1 on user error, 2 on an internal verification
//! failure (a factor product mismatch, which should be impossible).

use clap::{Parser, Subcommand};

use antimatter_core::report::{
    AtomizationReport, CertificateEnvelope, ChainReport, EnumerateReport, NilIndexReport,
    ValueReport, WitnessReport, SCHEMA_VERSION,
};
use antimatter_core::*;

const DEFAULT_MAX_CANDIDATES: u64 = 100_000_000;

#[derive(Parser)]
#[command(
    name = "antimatter",
    version,
    about = "Exact arithmetic and strong-atom factorization for a truncated rational-exponent monomial algebra over F_p"
)]
struct Cli {
    /// Prime modulus of the coefficient field.
    #[arg(long, global = true, default_value_t = 2)]
    p: u64,

    /// Emit JSON (schema version 1) instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Maximum factor degree for searches and certificates.
    #[arg(long = "budget-degree", global = true, default_value_t = 2)]
    budget_degree: usize,

    /// Fresh-variable allowance recorded in search budgets.
    #[arg(long = "budget-fresh", global = true, default_value_t = 2)]
    budget_fresh: u32,

    /// Denominator refinement factor for search subrings.
    #[arg(long = "budget-refine", global = true, default_value_t = 2)]
    budget_refine: u64,

    /// Cap on examined candidates; defaults to ANTIMATTER_MAX_CANDIDATES or
    /// 100000000.
    #[arg(long = "max-candidates", global = true)]
    max_candidates: Option<u64>,

    /// Seed recorded for certificate replay.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an expression and print its canonical form.
    Eval { expr: String },
    /// Multiply two polynomials and print the canonical product.
    Mul { a: String, b: String },
    /// Nilpotency certificate of a ring element.
    Nilindex { elem: String },
    /// Termwise p-th root of a ring element.
    Proot { elem: String },
    /// Chain of iterated p-th roots of length k + 1.
    Chain { elem: String, k: u64 },
    /// Surviving-monomial witness for a product of two polynomials.
    Witness { f: String, g: String },
    /// Image in F_p[t] modulo the maximal ideal.
    Reduce { f: String },
    /// Factor a polynomial into strong atoms with bounded certificates.
    Atomize { f: String },
    /// Bounded strong-atom certification of a polynomial.
    Certify { f: String },
    /// Enumerate a finite truncated subring in canonical order.
    Enumerate {
        /// Comma-separated variable indices, e.g. 1,2.
        #[arg(long, value_delimiter = ',')]
        vars: Vec<u32>,
        /// Exponent denominator d of the subring.
        #[arg(long)]
        denominator: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(&cli));
}

fn user_error(message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    1
}

fn max_candidates(cli: &Cli) -> u64 {
    cli.max_candidates
        .or_else(|| {
            std::env::var("ANTIMATTER_MAX_CANDIDATES")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_MAX_CANDIDATES)
}

fn budget(cli: &Cli) -> SearchBudget {
    SearchBudget::new(
        cli.budget_degree,
        cli.budget_fresh,
        cli.budget_refine,
        max_candidates(cli),
    )
}

fn emit_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn run(cli: &Cli) -> i32 {
    let prime = match Prime::new(cli.p) {
        Ok(p) => p,
        Err(e) => return user_error(e),
    };
    match &cli.command {
        Command::Eval { expr } => match parse_rpoly(expr, prime) {
            Ok(f) => {
                if cli.json {
                    emit_json(&ValueReport::new(cli.p, f.to_string()));
                } else {
                    println!("{f}");
                }
                0
            }
            Err(e) => user_error(e),
        },
        Command::Mul { a, b } => {
            let (fa, fb) = match (parse_rpoly(a, prime), parse_rpoly(b, prime)) {
                (Ok(fa), Ok(fb)) => (fa, fb),
                (Err(e), _) | (_, Err(e)) => return user_error(e),
            };
            let product = fa.mul(&fb);
            if cli.json {
                emit_json(&ValueReport::new(cli.p, product.to_string()));
            } else {
                println!("{product}");
            }
            0
        }
        Command::Nilindex { elem } => {
            let e = match parse_element(elem, prime) {
                Ok(e) => e,
                Err(err) => return user_error(err),
            };
            match e.nil_certificate() {
                Ok(cert) => {
                    if cli.json {
                        emit_json(&NilIndexReport::new(cli.p, e.to_string(), &cert));
                    } else {
                        println!(
                            "m={}, bound {}, exact {}",
                            cert.min_potential, cert.bound, cert.exact_index
                        );
                    }
                    0
                }
                Err(err) => user_error(err),
            }
        }
        Command::Proot { elem } => {
            let e = match parse_element(elem, prime) {
                Ok(e) => e,
                Err(err) => return user_error(err),
            };
            match e.proot() {
                Ok(root) => {
                    if cli.json {
                        emit_json(&ValueReport::new(cli.p, root.to_string()));
                    } else {
                        println!("{root}");
                    }
                    0
                }
                Err(err) => user_error(err),
            }
        }
        Command::Chain { elem, k } => {
            let e = match parse_element(elem, prime) {
                Ok(e) => e,
                Err(err) => return user_error(err),
            };
            match e.divisor_chain(*k) {
                Ok(chain) => {
                    if cli.json {
                        emit_json(&ChainReport {
                            schema: SCHEMA_VERSION,
                            p: cli.p,
                            chain: chain.iter().map(|c| c.to_string()).collect(),
                        });
                    } else {
                        for c in &chain {
                            println!("{c}");
                        }
                    }
                    0
                }
                Err(err) => user_error(err),
            }
        }
        Command::Witness { f, g } => {
            let (pf, pg) = match (parse_rpoly(f, prime), parse_rpoly(g, prime)) {
                (Ok(pf), Ok(pg)) => (pf, pg),
                (Err(e), _) | (_, Err(e)) => return user_error(e),
            };
            match survive_witness(&pf, &pg) {
                Ok(w) => {
                    if cli.json {
                        emit_json(&WitnessReport::new(cli.p, pf.to_string(), pg.to_string(), &w));
                    } else {
                        println!(
                            "j={}, j'={}, monomial {}, degree {}, potential {}",
                            w.j,
                            w.j_prime,
                            w.product_monomial,
                            w.j + w.j_prime,
                            w.total_potential
                        );
                    }
                    0
                }
                Err(err) => user_error(err),
            }
        }
        Command::Reduce { f } => match parse_rpoly(f, prime) {
            Ok(poly) => {
                let reduced = poly.reduce_mod_m();
                if cli.json {
                    emit_json(&ValueReport::new(cli.p, reduced.to_string()));
                } else {
                    println!("{reduced}");
                }
                0
            }
            Err(e) => user_error(e),
        },
        Command::Atomize { f } => {
            let poly = match parse_rpoly(f, prime) {
                Ok(p) => p,
                Err(e) => return user_error(e),
            };
            let atomization = match atomize(&poly, &budget(cli), cli.seed) {
                Ok(a) => a,
                Err(e) => return user_error(e),
            };
            // Independent verification; a mismatch is an internal error.
            let product = atomization
                .factors
                .iter()
                .fold(RPoly::constant(RingElem::one(prime)), |acc, g| acc.mul(g));
            if product != poly {
                eprintln!("internal error: factor product does not reproduce the input");
                return 2;
            }
            if cli.json {
                emit_json(&AtomizationReport::from(&atomization));
            } else {
                println!("case: {}", atomization.case.name());
                println!(
                    "bound: {} (factors: {})",
                    atomization.bound,
                    atomization.factors.len()
                );
                for (i, factor) in atomization.factors.iter().enumerate() {
                    println!("factor {}: {}", i + 1, factor);
                }
                for (i, cert) in atomization.certificates.iter().enumerate() {
                    println!("certificate {}: {}", i + 1, verdict_line(cert));
                }
                println!("product check: ok");
            }
            0
        }
        Command::Certify { f } => {
            let poly = match parse_rpoly(f, prime) {
                Ok(p) => p,
                Err(e) => return user_error(e),
            };
            match certify_strong_atom(&poly, &budget(cli), cli.seed) {
                Ok(cert) => {
                    if cli.json {
                        emit_json(&CertificateEnvelope::from(&cert));
                    } else {
                        println!("subject: {}", cert.subject);
                        println!("space: {}", cert.space);
                        println!("verdict: {}", verdict_line(&cert));
                    }
                    0
                }
                Err(e) => user_error(e),
            }
        }
        Command::Enumerate { vars, denominator } => {
            if *denominator == 0 {
                return user_error("denominator must be positive");
            }
            let spec = SubringSpec::new(prime, vars.iter().copied().collect(), *denominator);
            match enumerate_elements(&spec, max_candidates(cli)) {
                Ok(stream) => {
                    if cli.json {
                        let elements: Vec<String> = stream.map(|e| e.to_string()).collect();
                        emit_json(&EnumerateReport {
                            schema: SCHEMA_VERSION,
                            p: cli.p,
                            variables: vars.clone(),
                            denominator: *denominator,
                            count: elements.len() as u64,
                            elements,
                        });
                    } else {
                        for e in stream {
                            println!("{e}");
                        }
                    }
                    0
                }
                Err(e) => user_error(e),
            }
        }
    }
}

fn verdict_line(cert: &AtomCertificate) -> String {
    match &cert.verdict {
        AtomVerdict::CertifiedWithinBudget => {
            format!("CertifiedWithinBudget (enumerated {})", cert.enumerated)
        }
        AtomVerdict::FactorFound(g, h) => {
            format!(
                "FactorFound (enumerated {}): [{}] * [{}]",
                cert.enumerated, g, h
            )
        }
        AtomVerdict::Uncertified => format!("Uncertified (enumerated {})", cert.enumerated),
    }
}
