//! Command-line front end.
//!
//! Output is tab-separated with `#` header lines. Exit codes: 0 success or
//! property holds, 1 property fails, 2 parse or validation error, 3 resource
//! cap exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};

use crate::config::Limits;
use crate::dimsub::{
    compare_series, dimension_series, dimension_subgroup_sigma, lower_central_series, verbal_ideal, Completeness,
    FiniteGroupAlgebra,
};
use crate::error::{Error, Result};
use crate::exact::Domain;
use crate::freegrp::Word;
use crate::grpalg::GroupAlgebraElement;
use crate::magnus::{dimension_degree, in_free_dimension_subgroup, magnus_embed, monomial_string};
use crate::matrep::{find_action_witness, find_polynomial_witness, triangular_product, Catalog, RepFile, Witness};
use crate::ncpoly::{multilinear_identities, standard_polynomial, NCPolynomial};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "varkit",
    version,
    about = "Exact computations with group representations and PI algebras"
)]
struct Cli {
    #[command(flatten)]
    caps: Caps,
    #[command(subcommand)]
    verb: Verb,
}

/// Flags that may only lower the caps read from the environment.
#[derive(Args, Debug)]
struct Caps {
    #[arg(long, global = true)]
    max_group: Option<usize>,
    #[arg(long, global = true)]
    max_degree: Option<usize>,
    #[arg(long, global = true)]
    max_assign: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Magnus expansion of a free-group word, or a dimension-subgroup test.
    Magnus {
        word: String,
        #[arg(long)]
        letters: u32,
        #[arg(long)]
        cutoff: u32,
        #[arg(long)]
        test_n: Option<u32>,
    },
    /// Dimension series of a finite group over Z, Q or F<p>.
    Dimsub {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "Z")]
        coeff: String,
        #[arg(long)]
        nmax: usize,
        /// Compare with the lower central series.
        #[arg(long)]
        gamma: bool,
    },
    /// Verbal ideal of a group algebra for multilinear identities.
    Verbal {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "Q")]
        coeff: String,
        #[arg(long = "poly", required = true)]
        polys: Vec<String>,
    },
    /// Multilinear identities of an algebra or of a representation's
    /// enveloping algebra.
    Identities {
        #[arg(long, conflicts_with = "rep", required_unless_present = "rep")]
        algebra: Option<String>,
        #[arg(long)]
        rep: Option<String>,
        #[arg(long)]
        degree: usize,
    },
    /// Triangular product of two representations, as a representation file.
    Trprod {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value = "full")]
        hom: String,
    },
    /// Checks an identity `action:<element>` or `poly:<polynomial>` on a
    /// finite representation.
    Check {
        #[arg(long)]
        rep: String,
        #[arg(long)]
        identity: String,
    },
}

/// Reads a file, or a bundled file written `catalog:<name>`.
fn load(source: &str) -> Result<RepFile> {
    if let Some(name) = source.strip_prefix("catalog:") {
        return Catalog::group(name)
            .or_else(|| Catalog::algebra(name))
            .ok_or_else(|| Error::invalid(format!("no bundled file named `{name}`")));
    }
    RepFile::load(Path::new(source))
}

fn variable_name(prefix: char, w: &Witness) -> String {
    w.assignment
        .keys()
        .map(|v| format!("{prefix}{v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn run(cli: Cli, out: &mut String) -> Result<i32> {
    let limits = Limits::from_env().lowered(cli.caps.max_group, cli.caps.max_degree, cli.caps.max_assign);
    match cli.verb {
        Verb::Magnus {
            word,
            letters,
            cutoff,
            test_n,
        } => {
            let w: Word = word.parse()?;
            let series = magnus_embed(&w, letters, cutoff, &limits)?;
            writeln!(out, "# magnus\tletters={letters}\tcutoff={cutoff}\tword={w}").unwrap();
            match test_n {
                Some(n) => {
                    let member = in_free_dimension_subgroup(&w, n, letters, &limits)?;
                    let degree = dimension_degree(&w, letters, cutoff, &limits)?;
                    writeln!(out, "in_D_n\t{member}").unwrap();
                    writeln!(out, "n\t{n}").unwrap();
                    writeln!(out, "degree\t{degree}").unwrap();
                }
                None => {
                    writeln!(out, "# degree\tmonomial\tcoefficient").unwrap();
                    for (m, c) in series.terms() {
                        writeln!(out, "{}\t{}\t{c}", m.len(), monomial_string(&m)).unwrap();
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Verb::Dimsub {
            group,
            coeff,
            nmax,
            gamma,
        } => {
            let domain: Domain = coeff.parse()?;
            let table = load(&group)?.group_table(&limits)?;
            let alg = FiniteGroupAlgebra::new(table, domain);
            let ds = dimension_series(&alg, nmax)?;
            writeln!(out, "# dimsub\tcoeff={domain}\torder={}", alg.order()).unwrap();
            if gamma {
                let gs = lower_central_series(alg.table(), nmax)?;
                write!(out, "{}", compare_series(&ds, &gs)?).unwrap();
            } else {
                writeln!(out, "# n\tD_n").unwrap();
                for (i, d) in ds.iter().enumerate() {
                    writeln!(out, "{}\t{}", i + 1, d.order()).unwrap();
                }
            }
            Ok(EXIT_OK)
        }
        Verb::Verbal { group, coeff, polys } => {
            let domain: Domain = coeff.parse()?;
            let table = load(&group)?.group_table(&limits)?;
            let alg = FiniteGroupAlgebra::new(table, domain);
            let gens = polys
                .iter()
                .map(|p| p.parse::<NCPolynomial>())
                .collect::<Result<Vec<_>>>()?;
            let v = verbal_ideal(&alg, &gens, &limits)?;
            let d = dimension_subgroup_sigma(&alg, &gens, &limits)?;
            writeln!(out, "# verbal\tcoeff={domain}\torder={}", alg.order()).unwrap();
            writeln!(out, "rank\t{}", v.ideal.rank()).unwrap();
            let stamp = match v.completeness {
                Completeness::Exact => "exact",
                Completeness::LowerBound => "lower_bound",
            };
            writeln!(out, "completeness\t{stamp}").unwrap();
            writeln!(out, "D_sigma\t{}", d.order()).unwrap();
            writeln!(out, "abelian_quotient\t{}", d.has_abelian_quotient(alg.table())).unwrap();
            Ok(EXIT_OK)
        }
        Verb::Identities { algebra, rep, degree } => {
            let file = load(algebra.as_deref().or(rep.as_deref()).expect("clap requires one"))?;
            let basis = file.algebra_basis()?;
            let ids = multilinear_identities(&basis, degree, &limits)?;
            let s_n = standard_polynomial(degree)?;
            writeln!(out, "# identities\tdegree={degree}\tdim={}", ids.dim()).unwrap();
            writeln!(out, "# s{degree}\tmember={}", ids.contains(&s_n.coerce(ids.domain())?)?).unwrap();
            for f in ids.basis_polynomials() {
                writeln!(out, "{f}").unwrap();
            }
            Ok(EXIT_OK)
        }
        Verb::Trprod { left, right, hom } => {
            if hom != "full" {
                return Err(Error::invalid(format!(
                    "unsupported --hom `{hom}`; only `full` is available"
                )));
            }
            let a = load(&left)?.representation(None)?;
            let b = load(&right)?.representation(None)?;
            let p = triangular_product(&a, &b, None)?;
            write!(out, "{}", RepFile::Matrix(p)).unwrap();
            Ok(EXIT_OK)
        }
        Verb::Check { rep, identity } => {
            let file = load(&rep)?;
            let r = file.representation(None)?;
            let table = file.group_table(&limits)?;
            let (witness, prefix) = if let Some(text) = identity.strip_prefix("action:") {
                let u = GroupAlgebraElement::parse_in(text, r.domain())?;
                (find_action_witness(&r, &u, &table, &limits)?, 'y')
            } else if let Some(text) = identity.strip_prefix("poly:") {
                let f = NCPolynomial::parse_in(text, r.domain())?;
                (find_polynomial_witness(&r, &f, &table, &limits)?, 'x')
            } else {
                return Err(Error::parse("identity must start with `action:` or `poly:`"));
            };
            match witness {
                None => {
                    writeln!(out, "true").unwrap();
                    Ok(EXIT_OK)
                }
                Some(w) => {
                    writeln!(out, "false").unwrap();
                    writeln!(out, "# witness\t{}", variable_name(prefix, &w)).unwrap();
                    for (v, e) in &w.assignment {
                        writeln!(out, "{prefix}{v}\t{}", table.element(*e)).unwrap();
                    }
                    writeln!(out, "vector\te{}", w.row + 1).unwrap();
                    writeln!(out, "value\t{}", w.value).unwrap();
                    Ok(EXIT_FALSE)
                }
            }
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Output goes to `stdout` only on success or a checked result.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_INVALID
                }
            };
        }
    };
    let mut out = String::new();
    match run(cli, &mut out) {
        Ok(code) => {
            let _ = stdout.write_all(out.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_resource_cap() {
                EXIT_CAP
            } else {
                EXIT_INVALID
            }
        }
    }
}
