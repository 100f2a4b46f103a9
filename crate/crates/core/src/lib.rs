//! Exact combinatorics for Gromov width upper bounds of coadjoint orbits.
//!
//! The crate builds finite root systems from Cartan matrices, works in the
//! Weyl group through integer matrices on root coordinates, computes curve
//! neighborhoods of the base point in `G/P`, and certifies the
//! Gromov-Witten non-vanishing that backs the width bound.
//!
//! ```
//! use coadjoint_core::{gromov_width_upper, RootSystem, Weight};
//!
//! let f4 = RootSystem::new('F', 4).unwrap();
//! let report = gromov_width_upper(&f4, &Weight::fundamental(4, 3)).unwrap();
//! assert_eq!(coadjoint_core::format_rational(&report.bound), "1");
//! ```

pub mod error;
pub mod invariants;
pub mod lattice;
pub mod rootsys;
pub mod schubert;
pub mod weyl;
pub mod width;

pub use error::{Error, Result};
pub use invariants::{
    bott_degree_check, certify_maximal_parabolics, chern_number, curve_class, gw_certificate,
    weyl_dim, CurveClass, GwCertificate, GwValue,
};
pub use lattice::{format_rational, parse_rational, IntMatrix, Rational};
pub use rootsys::{pair, CorootVector, Root, RootSystem, SimpleType, Weight};
pub use schubert::{
    curve_neighborhood_point, fixed_point_set, hasse_diagram, longroot_curve_neighborhood,
    pullback, pushforward, CurveNeighborhood, FixedPoint, HasseDiagram,
};
pub use weyl::{enumerate_group, enumerate_min_reps, CosetRep, ParabolicSubset, WeylElement};
pub use width::{
    gromov_width_upper, make_dominant, stabilizer_parabolic, to_fundamental, un_width, Basis,
    GromovWidthReport, UnWidth,
};
