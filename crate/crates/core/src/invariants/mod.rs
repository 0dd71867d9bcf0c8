//! Graph polynomials computed from their defining expansions, from
//! deletion–contraction, and by specialization of the U / extended U
//! polynomials.
//!
//! Every exponential enumeration is guarded by [`Limits`]: edge subsets
//! (`2^m`), vertex partitions (Bell numbers) and colourings (`N^n`).

use std::fmt;
use std::str::FromStr;

use crate::equivalence::PairedCoefficientMap;
use crate::error::{Error, Result};
use crate::multigraph::Multigraph;
use crate::polyring::Poly;

mod colourings;
mod expansion;
mod partition_sums;
mod recurrence;
pub mod specialize;

pub use colourings::{
    chromatic_symmetric_direct, stability_direct, tutte_symmetric_oracle, ybar_evaluate_oracle,
};
pub use expansion::{
    chromatic, tutte, two_polymatroid_direct, u_poly, ubar, wbar_expansion, ybar_coefficients,
};
pub use partition_sums::{extended_polychromate, polychromate};
pub use recurrence::{v_function_recursive, wbar_recurrence, PivotPolicy};

/// Size guards for exponential enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `m` for `2^m` subset enumerations (and `n` for vertex subsets).
    pub max_subset_bits: u32,
    /// Largest vertex count for sums over all vertex partitions.
    pub max_partition_vertices: usize,
    /// Largest number of colourings `N^n` for colouring sums.
    pub max_colourings: u128,
    /// Skip the guards above. Subset masks are still capped at 63 bits.
    pub force: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_subset_bits: 26,
            max_partition_vertices: 13,
            max_colourings: 1 << 24,
            force: false,
        }
    }
}

const HARD_SUBSET_BITS: u32 = 63;

impl Limits {
    pub fn forced() -> Self {
        Limits {
            force: true,
            ..Limits::default()
        }
    }

    pub(crate) fn check_subsets(&self, bits: usize, what: &'static str) -> Result<()> {
        let limit = if self.force {
            HARD_SUBSET_BITS
        } else {
            self.max_subset_bits.min(HARD_SUBSET_BITS)
        };
        if bits > limit as usize {
            return Err(Error::GuardExceeded {
                what,
                size: bits as u128,
                limit: u128::from(limit),
            });
        }
        Ok(())
    }

    pub(crate) fn check_partitions(&self, n: usize, what: &'static str) -> Result<()> {
        if !self.force && n > self.max_partition_vertices {
            return Err(Error::GuardExceeded {
                what,
                size: n as u128,
                limit: self.max_partition_vertices as u128,
            });
        }
        Ok(())
    }

    pub(crate) fn check_colourings(&self, colours: usize, n: usize) -> Result<()> {
        let count = (colours as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if !self.force && count > self.max_colourings {
            return Err(Error::GuardExceeded {
                what: "colouring count",
                size: count,
                limit: self.max_colourings,
            });
        }
        Ok(())
    }
}

/// The invariants the engine can compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    Tutte,
    Chromatic,
    U,
    Ubar,
    Wbar,
    Polychromate,
    ExtPolychromate,
    Ybar,
    ChromaticSymmetric,
    TutteSymmetric,
    Stability,
    TwoPolymatroid,
    VFunction,
}

impl Invariant {
    pub const ALL: [Invariant; 13] = [
        Invariant::Tutte,
        Invariant::Chromatic,
        Invariant::U,
        Invariant::Ubar,
        Invariant::Wbar,
        Invariant::Polychromate,
        Invariant::ExtPolychromate,
        Invariant::Ybar,
        Invariant::ChromaticSymmetric,
        Invariant::TutteSymmetric,
        Invariant::Stability,
        Invariant::TwoPolymatroid,
        Invariant::VFunction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Invariant::Tutte => "tutte",
            Invariant::Chromatic => "chromatic",
            Invariant::U => "u",
            Invariant::Ubar => "ubar",
            Invariant::Wbar => "wbar",
            Invariant::Polychromate => "polychromate",
            Invariant::ExtPolychromate => "ext-polychromate",
            Invariant::Ybar => "ybar",
            Invariant::ChromaticSymmetric => "chromatic-symmetric",
            Invariant::TutteSymmetric => "tutte-symmetric",
            Invariant::Stability => "stability",
            Invariant::TwoPolymatroid => "two-polymatroid",
            Invariant::VFunction => "v-function",
        }
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown invariant {s:?}")))
    }
}

/// Which algorithm produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    SubsetExpansion,
    PartitionExpansion,
    ColouringSum,
    StableSetSum,
    Recurrence,
    SubstitutionFrom(Invariant),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::SubsetExpansion => f.write_str("subset-expansion"),
            Provenance::PartitionExpansion => f.write_str("partition-expansion"),
            Provenance::ColouringSum => f.write_str("colouring-sum"),
            Provenance::StableSetSum => f.write_str("stable-set-sum"),
            Provenance::Recurrence => f.write_str("recurrence"),
            Provenance::SubstitutionFrom(i) => write!(f, "substitution-from-{i}"),
        }
    }
}

/// Either a polynomial or a paired symmetric function in coefficient form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantValue {
    Poly(Poly),
    Paired(PairedCoefficientMap),
}

impl InvariantValue {
    pub fn to_json(&self) -> String {
        match self {
            InvariantValue::Poly(p) => p.to_json(),
            InvariantValue::Paired(m) => m.to_json(),
        }
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        match self {
            InvariantValue::Poly(p) => Some(p),
            InvariantValue::Paired(_) => None,
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantValue::Poly(p) => p.fmt(f),
            InvariantValue::Paired(m) => m.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub invariant: Invariant,
    pub value: InvariantValue,
    pub provenance: Provenance,
}

/// Algorithm selection for [`compute`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// The defining expansion or brute-force sum.
    #[default]
    Definition,
    /// Substitution into U (or extended U for the V-function).
    Specialization,
    /// Deletion–contraction (W-bar and the V-function only).
    Recurrence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ComputeOptions {
    pub limits: Limits,
    /// Number of variables kept for symmetric-function outputs; defaults to `n`.
    pub truncate: Option<usize>,
    pub route: Route,
}

/// Computes `invariant` for `g` with the requested route.
pub fn compute(invariant: Invariant, g: &Multigraph, opts: &ComputeOptions) -> Result<InvariantResult> {
    use Invariant as I;
    use Provenance as P;
    use Route as R;
    let lim = &opts.limits;
    let n_vars = opts.truncate.unwrap_or(g.vertex_count()).max(1);
    let unsupported = || {
        Err(Error::Precondition(format!(
            "{invariant} has no {:?} route",
            opts.route
        )))
    };
    let (value, provenance) = match (invariant, opts.route) {
        (I::Ubar, R::Definition) => (ubar(g, lim)?, P::SubsetExpansion),
        (I::Ubar, R::Recurrence) => (
            wbar_recurrence(&unit_weights(g), lim, PivotPolicy::LowestIndex)?,
            P::Recurrence,
        ),
        (I::Wbar, R::Definition) => (wbar_expansion(g, lim)?, P::SubsetExpansion),
        (I::Wbar, R::Recurrence) => (
            wbar_recurrence(g, lim, PivotPolicy::LowestIndex)?,
            P::Recurrence,
        ),
        (I::U, R::Definition) => (u_poly(g, lim)?, P::SubsetExpansion),
        (I::U, R::Specialization) => (
            specialize::ubar_to_u(&ubar(g, lim)?),
            P::SubstitutionFrom(I::Ubar),
        ),
        (I::Tutte, R::Definition) => (tutte(g, lim)?, P::SubsetExpansion),
        (I::Tutte, R::Specialization) => (
            specialize::u_to_tutte(&u_poly(g, lim)?, g.component_count())?,
            P::SubstitutionFrom(I::U),
        ),
        (I::Chromatic, R::Definition) => (chromatic(g, lim)?, P::SubsetExpansion),
        (I::Chromatic, R::Specialization) => (
            specialize::tutte_to_chromatic(
                &tutte(g, lim)?,
                g.vertex_count(),
                g.component_count(),
            ),
            P::SubstitutionFrom(I::Tutte),
        ),
        (I::Polychromate, R::Definition) => (polychromate(g, lim)?, P::PartitionExpansion),
        (I::Polychromate, R::Specialization) => (
            crate::equivalence::u_to_polychromate(&u_poly(g, lim)?, g.vertex_count() as u32)?,
            P::SubstitutionFrom(I::U),
        ),
        (I::ExtPolychromate, R::Definition) => {
            (extended_polychromate(g, lim)?, P::PartitionExpansion)
        }
        (I::ExtPolychromate, R::Specialization) => (
            crate::equivalence::ybar_to_extended_polychromate(&crate::equivalence::ubar_to_ybar(
                &ubar(g, lim)?,
            )?),
            P::SubstitutionFrom(I::Ubar),
        ),
        (I::Ybar, R::Definition) => {
            return Ok(InvariantResult {
                invariant,
                value: InvariantValue::Paired(ybar_coefficients(g, lim)?),
                provenance: P::SubsetExpansion,
            })
        }
        (I::Ybar, R::Specialization) => {
            let mut map = crate::equivalence::ubar_to_ybar(&ubar(g, lim)?)?;
            map.set_edge_bound(g.edge_count() as u32);
            return Ok(InvariantResult {
                invariant,
                value: InvariantValue::Paired(map),
                provenance: P::SubstitutionFrom(I::Ubar),
            });
        }
        (I::ChromaticSymmetric, R::Definition) => (
            chromatic_symmetric_direct(g, n_vars, lim)?,
            P::ColouringSum,
        ),
        (I::ChromaticSymmetric, R::Specialization) => (
            specialize::u_to_chromatic_symmetric(&u_poly(g, lim)?, g.vertex_count(), n_vars),
            P::SubstitutionFrom(I::U),
        ),
        (I::TutteSymmetric, R::Specialization | R::Definition) => (
            specialize::u_to_tutte_symmetric(&u_poly(g, lim)?, g.vertex_count(), n_vars)?,
            P::SubstitutionFrom(I::U),
        ),
        (I::Stability, R::Definition) => (stability_direct(g, lim)?, P::StableSetSum),
        (I::Stability, R::Specialization) => {
            require_loopless(g, "the stability polynomial")?;
            (
                specialize::u_to_stability(&u_poly(g, lim)?),
                P::SubstitutionFrom(I::U),
            )
        }
        (I::TwoPolymatroid, R::Definition) => (two_polymatroid_direct(g, lim)?, P::SubsetExpansion),
        (I::TwoPolymatroid, R::Specialization) => {
            require_two_polymatroid_graph(g)?;
            (
                specialize::u_to_two_polymatroid(&u_poly(g, lim)?)?,
                P::SubstitutionFrom(I::U),
            )
        }
        (I::VFunction, R::Definition | R::Specialization) => (
            specialize::ubar_to_v_function(&ubar(g, lim)?),
            P::SubstitutionFrom(I::Ubar),
        ),
        (I::VFunction, R::Recurrence) => (v_function_recursive(g, lim)?, P::Recurrence),
        _ => return unsupported(),
    };
    Ok(InvariantResult {
        invariant,
        value: InvariantValue::Poly(value),
        provenance,
    })
}

fn unit_weights(g: &Multigraph) -> Multigraph {
    g.clone()
        .with_weights(vec![1; g.vertex_count()])
        .expect("unit weights are valid")
}

pub(crate) fn require_loopless(g: &Multigraph, what: &str) -> Result<()> {
    if !g.is_loopless() {
        return Err(Error::Precondition(format!("{what} needs a loopless graph")));
    }
    Ok(())
}

pub(crate) fn require_two_polymatroid_graph(g: &Multigraph) -> Result<()> {
    require_loopless(g, "the 2-polymatroid rank generating function")?;
    if g.has_isolated_vertices() {
        return Err(Error::Precondition(
            "the 2-polymatroid rank generating function needs a graph without isolated vertices"
                .into(),
        ));
    }
    Ok(())
}
