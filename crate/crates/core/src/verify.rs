//! Self-check suites: each one compares two independent computations over
//! an exhaustive family of small instances and stops at the first mismatch.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{connected_simple_graphs_up_to, small_multigraphs, weight_assignments};
use crate::equivalence::{
    paired_augmented_monomial_value, paired_p_to_m, paired_power_sum_value, u_to_polychromate,
    ubar_to_ybar, ybar_to_extended_polychromate, ybar_to_ubar,
};
use crate::error::{Error, Result};
use crate::invariants::{self, specialize, Limits, PivotPolicy};
use crate::multigraph::Multigraph;
use crate::partitions::{coarsening_table, integer_pair_partitions, integer_partitions, PairPartition};
use crate::polyring::{Family, Monomial, Poly, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Recurrence,
    Specializations,
    EquivalenceChain,
    Bases,
    PaperExamples,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Recurrence,
        Suite::Specializations,
        Suite::EquivalenceChain,
        Suite::Bases,
        Suite::PaperExamples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrence => "recurrence",
            Suite::Specializations => "specializations",
            Suite::EquivalenceChain => "equivalence-chain",
            Suite::Bases => "bases",
            Suite::PaperExamples => "paper-examples",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown suite {s:?}")))
    }
}

/// Size bounds for the suites. `None` picks the suite's default:
///
/// | suite | vertices | edges |
/// |---|---|---|
/// | recurrence | 4 | 5 |
/// | specializations | 5 (connected simple), 4 (multigraphs) | 4 (multigraphs) |
/// | equivalence-chain | 5 (connected simple), 4 (multigraphs) | 4 (multigraphs) |
/// | bases | `n <= 5` for pair partitions, `n <= 6` for partitions | `m <= 4` |
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub limits: Limits,
    pub max_vertices: Option<usize>,
    pub max_edges: Option<usize>,
    pub seed: u64,
    /// Random evaluation points per identity in the bases suite.
    pub points: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            limits: Limits::default(),
            max_vertices: None,
            max_edges: None,
            seed: 20_240_601,
            points: 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFailure {
    /// The offending instance, usually as an edge list.
    pub instance: String,
    pub check: String,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checked: usize,
    pub failure: Option<VerifyFailure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub fn to_json(&self) -> String {
        let failure = self.failure.as_ref().map(|f| {
            serde_json::json!({
                "instance": f.instance,
                "check": f.check,
                "expected": f.expected,
                "got": f.got,
            })
        });
        let v = serde_json::json!({
            "suite": self.suite.name(),
            "passed": self.passed(),
            "checked": self.checked,
            "failure": failure,
        });
        serde_json::to_string_pretty(&v).expect("plain data serializes")
    }

    pub fn to_text(&self) -> String {
        match &self.failure {
            None => format!("{}: PASS ({} checks)\n", self.suite, self.checked),
            Some(f) => format!(
                "{}: FAIL after {} checks\ncheck: {}\ninstance:\n{}expected: {}\ngot: {}\n",
                self.suite,
                self.checked,
                f.check,
                if f.instance.ends_with('\n') {
                    f.instance.clone()
                } else {
                    format!("{}\n", f.instance)
                },
                f.expected,
                f.got
            ),
        }
    }
}

enum Halt {
    Failed(VerifyFailure),
    Error(Error),
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        Halt::Error(e)
    }
}

type Step = std::result::Result<(), Halt>;

struct Checker {
    checked: usize,
}

impl Checker {
    fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        instance: impl FnOnce() -> String,
        check: &str,
        expected: &T,
        got: &T,
    ) -> Step {
        self.checked += 1;
        if expected == got {
            Ok(())
        } else {
            Err(Halt::Failed(VerifyFailure {
                instance: instance(),
                check: check.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            }))
        }
    }
}

/// Runs one suite.
pub fn run(suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut c = Checker { checked: 0 };
    let outcome = match suite {
        Suite::Recurrence => recurrence(&mut c, opts),
        Suite::Specializations => specializations(&mut c, opts),
        Suite::EquivalenceChain => equivalence_chain(&mut c, opts),
        Suite::Bases => bases(&mut c, opts),
        Suite::PaperExamples => paper_examples(&mut c, opts),
    };
    let failure = match outcome {
        Ok(()) => None,
        Err(Halt::Failed(f)) => Some(f),
        Err(Halt::Error(e)) => return Err(e),
    };
    Ok(VerifyReport {
        suite,
        checked: c.checked,
        failure,
    })
}

fn recurrence(c: &mut Checker, opts: &VerifyOptions) -> Step {
    let lim = &opts.limits;
    for g in small_multigraphs(opts.max_vertices.unwrap_or(4), opts.max_edges.unwrap_or(5)) {
        for w in weight_assignments(g.vertex_count(), &[1, 2]) {
            let g = g.clone().with_weights(w)?;
            let expansion = invariants::wbar_expansion(&g, lim)?;
            for policy in [PivotPolicy::LowestIndex, PivotPolicy::HighestIndex] {
                let rec = invariants::wbar_recurrence(&g, lim, policy)?;
                c.eq(|| g.to_edge_list(), "wbar recurrence = expansion", &expansion, &rec)?;
            }
        }
    }
    Ok(())
}

/// Connected simple graphs plus small multigraphs.
fn test_graphs(opts: &VerifyOptions) -> Vec<Multigraph> {
    let mut graphs = connected_simple_graphs_up_to(opts.max_vertices.unwrap_or(5));
    graphs.extend(small_multigraphs(
        opts.max_vertices.unwrap_or(4).min(4),
        opts.max_edges.unwrap_or(4),
    ));
    graphs
}

/// Proper colourings with `colours` colours, counted by brute force.
fn proper_colourings(g: &Multigraph, colours: usize) -> u64 {
    let n = g.vertex_count();
    let mut chi = vec![0usize; n];
    let mut count = 0;
    if colours == 0 {
        return u64::from(n == 0);
    }
    loop {
        if g.edges().iter().all(|&(u, v)| chi[u] != chi[v]) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            chi[i] += 1;
            if chi[i] < colours {
                break;
            }
            chi[i] = 0;
            i += 1;
        }
    }
}

fn specializations(c: &mut Checker, opts: &VerifyOptions) -> Step {
    let lim = &opts.limits;
    for g in test_graphs(opts) {
        let el = || g.to_edge_list();
        let n = g.vertex_count();
        let k = g.component_count();
        let ub = invariants::ubar(&g, lim)?;
        let u = invariants::u_poly(&g, lim)?;
        c.eq(el, "u from ubar", &u, &specialize::ubar_to_u(&ub))?;
        let t = invariants::tutte(&g, lim)?;
        c.eq(el, "tutte from u", &t, &specialize::u_to_tutte(&u, k)?)?;
        let p = invariants::chromatic(&g, lim)?;
        c.eq(el, "chromatic from tutte", &p, &specialize::tutte_to_chromatic(&t, n, k))?;
        for lambda in 0..=4i64 {
            let value = p.evaluate(|_| Some(BigRational::from_integer(lambda.into())))?;
            let want = BigRational::from_integer(proper_colourings(&g, lambda as usize).into());
            c.eq(el, &format!("chromatic at {lambda}"), &want, &value)?;
        }
        let x_direct = invariants::chromatic_symmetric_direct(&g, n.max(1), lim)?;
        let x_from_u = specialize::u_to_chromatic_symmetric(&u, n, n.max(1));
        c.eq(el, "chromatic symmetric from u", &x_direct, &x_from_u)?;
        if g.is_loopless() {
            let a = invariants::stability_direct(&g, lim)?;
            c.eq(el, "stability from u", &a, &specialize::u_to_stability(&u))?;
            if !g.has_isolated_vertices() {
                let s = invariants::two_polymatroid_direct(&g, lim)?;
                c.eq(el, "2-polymatroid from u", &s, &specialize::u_to_two_polymatroid(&u)?)?;
            }
        }
        let v = invariants::v_function_recursive(&g, lim)?;
        c.eq(el, "v-function from ubar", &v, &specialize::ubar_to_v_function(&ub))?;
    }
    Ok(())
}

/// `x2[i,j] -> x[i] y^j`.
pub fn extended_to_plain_polychromate(chi: &Poly) -> Poly {
    chi.substitute(|v| {
        (v.family() == Family::X2).then(|| {
            Poly::term(
                Monomial::from_factors([(Var::x(v.first()), 1), (Var::y(), v.second())]),
                1,
            )
        })
    })
}

fn equivalence_chain(c: &mut Checker, opts: &VerifyOptions) -> Step {
    let lim = &opts.limits;
    for g in test_graphs(opts) {
        let el = || g.to_edge_list();
        let ub = invariants::ubar(&g, lim)?;
        let ybar = ubar_to_ybar(&ub)?;
        c.eq(
            el,
            "ybar from ubar = subset expansion",
            &invariants::ybar_coefficients(&g, lim)?,
            &ybar,
        )?;
        c.eq(el, "ubar round trip", &ub, &ybar_to_ubar(&ybar)?)?;
        let chi = invariants::extended_polychromate(&g, lim)?;
        c.eq(el, "ext-polychromate from ybar", &chi, &ybar_to_extended_polychromate(&ybar))?;
        let poly = invariants::polychromate(&g, lim)?;
        c.eq(el, "polychromate from ext-polychromate", &poly, &extended_to_plain_polychromate(&chi))?;
        let u = invariants::u_poly(&g, lim)?;
        c.eq(
            el,
            "polychromate from u",
            &poly,
            &u_to_polychromate(&u, g.vertex_count() as u32)?,
        )?;
    }
    Ok(())
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=9);
    BigRational::new(num.into(), den.into())
}

fn bases(c: &mut Checker, opts: &VerifyOptions) -> Step {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let max_n = opts.max_vertices.unwrap_or(5) as u32;
    let max_m = opts.max_edges.unwrap_or(4) as u32;
    for n in 1..=max_n {
        let n_vars = n as usize + 2;
        let keys = integer_pair_partitions(n, max_m);
        let expansions: Vec<_> = keys.iter().map(paired_p_to_m).collect();
        for _ in 0..opts.points {
            let x: Vec<BigRational> = (0..n_vars).map(|_| random_rational(&mut rng)).collect();
            let t: Vec<BigRational> = (0..n_vars).map(|_| random_rational(&mut rng)).collect();
            let mut m_values: HashMap<PairPartition, BigRational> = HashMap::new();
            for (key, exp) in keys.iter().zip(&expansions) {
                let lhs = paired_power_sum_value(key, &x, &t);
                let mut rhs = BigRational::zero();
                for (mk, coeff) in exp.iter() {
                    let v = m_values
                        .entry(mk.clone())
                        .or_insert_with(|| paired_augmented_monomial_value(mk, &x, &t));
                    rhs += &*v * BigRational::from_integer(coeff.clone());
                }
                c.eq(|| format!("pbar[{key}] at N = {n_vars}"), "pbar = sum mbar", &lhs, &rhs)?;
            }
        }
    }
    let zeros = |len: usize| vec![BigRational::zero(); len];
    for n in 1..=max_n + 1 {
        let n_vars = n as usize + 2;
        for tau in integer_partitions(n) {
            let table = coarsening_table(&tau);
            for _ in 0..opts.points {
                let x: Vec<BigRational> = (0..n_vars).map(|_| random_rational(&mut rng)).collect();
                let as_pairs =
                    |p: &crate::partitions::IntegerPartition| PairPartition::from_pairs(p.parts().iter().map(|&a| (a, 0)).collect());
                let lhs = paired_power_sum_value(&as_pairs(&tau), &x, &zeros(n_vars));
                let mut rhs = BigRational::zero();
                for (target, a) in &table {
                    rhs += paired_augmented_monomial_value(&as_pairs(target), &x, &zeros(n_vars))
                        * BigRational::from_integer(BigInt::from(*a));
                }
                c.eq(|| format!("p[{tau}] at N = {n_vars}"), "p = sum a m", &lhs, &rhs)?;
            }
        }
    }
    Ok(())
}

pub(crate) const BRYLAWSKI_1: &str = "11 18
1 7
1 8
1 9
2 3
2 10
2 11
3 4
6 3
4 5
7 10
8 6
9 11
2 7
3 10
5 11
5 6
3 8
5 9
";

pub(crate) const BRYLAWSKI_2: &str = "11 18
1 7
1 8
1 9
2 3
2 10
2 11
3 4
6 3
4 5
8 10
9 6
7 11
2 7
3 10
5 11
5 6
3 8
5 9
";

fn weighted_triangle(a: u32, b: u32, c: u32) -> Poly {
    let z = |i, j| Poly::var(Var::z(i, j));
    let s = a + b + c;
    &(&(&(&z(a, 0) * &z(b, 0)) * &z(c, 0)) + &(&z(a, 0) * &z(b + c, 0)))
        + &(&z(b, 0) * &z(a + c, 0))
        + (&z(c, 0) * &z(a + b, 0))
        + z(s, 0).scale(&BigInt::from(3))
        + z(s, 1)
}

fn paper_examples(c: &mut Checker, opts: &VerifyOptions) -> Step {
    let lim = &opts.limits;
    let parse = |s: &str| Multigraph::parse_edge_list(s);
    let poly = |s: &str| s.parse::<Poly>();
    let k3 = parse("3 3\n1 2\n2 3\n3 1\n")?;
    let path = parse("3 2\n1 2\n2 3\n")?;
    let g1 = parse("3 3\n1 2\n2 3\n1 1\n")?;
    let g2 = parse("3 3\n1 2\n2 3\n2 2\n")?;
    let figure = parse("2 3\n1 2\n1 2\n1 1\n")?;
    let named = |name: &'static str| move || name.to_string();

    c.eq(
        named("triangle"),
        "ubar",
        &poly("z[1,0]^3 + 3*z[1,0]*z[2,0] + 3*z[3,0] + z[3,1]")?,
        &invariants::ubar(&k3, lim)?,
    )?;
    c.eq(
        named("triangle"),
        "u",
        &poly("x[1]^3 + 3*x[1]*x[2] + 2*x[3] + y*x[3]")?,
        &invariants::u_poly(&k3, lim)?,
    )?;
    c.eq(
        named("triangle"),
        "ext-polychromate",
        &poly("x2[1,0]^3 + 3*x2[2,1]*x2[1,0] + x2[3,3]")?,
        &invariants::extended_polychromate(&k3, lim)?,
    )?;
    c.eq(
        named("path with two edges"),
        "ext-polychromate",
        &poly("x2[1,0]^3 + 2*x2[2,1]*x2[1,0] + x2[2,0]*x2[1,0] + x2[3,2]")?,
        &invariants::extended_polychromate(&path, lim)?,
    )?;
    c.eq(
        named("G1 (loop at an end vertex)"),
        "ubar",
        &poly("z[3,1] + z[3,0] + z[2,1]*z[1,0] + z[2,0]*z[1,1] + 2*z[2,0]*z[1,0] + z[1,0]^2*z[1,1] + z[1,0]^3")?,
        &invariants::ubar(&g1, lim)?,
    )?;
    c.eq(
        named("G2 (loop at the middle vertex)"),
        "ubar",
        &poly("z[3,1] + z[3,0] + 2*z[2,1]*z[1,0] + 2*z[2,0]*z[1,0] + z[1,0]^2*z[1,1] + z[1,0]^3")?,
        &invariants::ubar(&g2, lim)?,
    )?;
    let u12 = poly("y*(x[3] + 2*x[2]*x[1] + x[1]^3)")?;
    c.eq(named("G1"), "u", &u12, &invariants::u_poly(&g1, lim)?)?;
    c.eq(named("G2"), "u", &u12, &invariants::u_poly(&g2, lim)?)?;
    for (a, b, cc) in [(1, 1, 1), (1, 2, 3)] {
        let g = k3.clone().with_weights(vec![a, b, cc])?;
        let want = weighted_triangle(a, b, cc);
        let inst = move || format!("triangle with weights {a}, {b}, {cc}");
        c.eq(inst, "wbar expansion", &want, &invariants::wbar_expansion(&g, lim)?)?;
        c.eq(
            inst,
            "wbar recurrence",
            &want,
            &invariants::wbar_recurrence(&g, lim, PivotPolicy::LowestIndex)?,
        )?;
    }
    c.eq(
        named("deletion-contraction figure"),
        "wbar recurrence",
        &poly("z[1,0]^2 + z[1,0]*z[1,1] + 2*z[2,0] + 3*z[2,1] + z[2,2]")?,
        &invariants::wbar_recurrence(&figure, lim, PivotPolicy::LowestIndex)?,
    )?;
    c.eq(named("triangle"), "tutte", &poly("X^2 + X + Y")?, &invariants::tutte(&k3, lim)?)?;
    c.eq(
        named("triangle"),
        "chromatic",
        &poly("lambda^3 - 3*lambda^2 + 2*lambda")?,
        &invariants::chromatic(&k3, lim)?,
    )?;

    let b1 = parse(BRYLAWSKI_1)?;
    let b2 = parse(BRYLAWSKI_2)?;
    let pair = named("Brylawski pair");
    c.eq(pair, "polychromate", &invariants::polychromate(&b1, lim)?, &invariants::polychromate(&b2, lim)?)?;
    c.eq(
        pair,
        "ext-polychromate",
        &invariants::extended_polychromate(&b1, lim)?,
        &invariants::extended_polychromate(&b2, lim)?,
    )?;
    c.eq(pair, "ubar", &invariants::ubar(&b1, lim)?, &invariants::ubar(&b2, lim)?)?;
    let differ = invariants::ubar(&g1, lim)? != invariants::ubar(&g2, lim)?;
    c.eq(named("G1 vs G2"), "ubar distinguishes", &true, &differ)?;
    Ok(())
}
