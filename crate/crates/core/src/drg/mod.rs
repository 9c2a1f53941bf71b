//! Distance-regular graph parameters, spectra and inequalities.

mod array;
mod bounds;
mod numbers;
mod perturbation;
mod spectrum;

pub use array::{extract_intersection_array, parse_array, IntersectionArray, NotDrg};
pub use bounds::{
    all_tradeoffs, best_spectral_gap_estimate, spectral_gap_estimate, spectral_gap_formula, tradeoff_inequality,
    GapEstimate, Tradeoff,
};
pub use numbers::{diam3_closed_forms, diam3_closed_forms_for, intersection_numbers, is_primitive};
pub use perturbation::{
    bottleneck_matching, matrix_eigen_matching, matrix_perturbation, polynomial_perturbation,
    polynomial_root_matching, MatrixBound, PolynomialBound,
};
pub use spectrum::{bipartite_diam3, graph_spectrum, tridiagonal_spectrum, Spectrum};
