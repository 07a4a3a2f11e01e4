//! Generalized Gegenbauer polynomials, generated either by the triangular
//! eigen-solve or by the recurrences.

pub mod eigen;
pub mod recurrence;
pub mod spectrum;
pub mod step;

pub use eigen::{gen_eigen, gen_eigen_at};
pub use recurrence::{coeff_a, coeff_c, coeff_d, coeff_f, coeff_g, gen_recurrence, recurrence_row, Z2Reading};
pub use spectrum::{char_eigenvalue, epsilon2, ground_energy, l_elementary, l_shift, l_vector, LVector, ShiftVector};
pub use step::{decompose, expand_product, sigma_closed_form, step, tabulated_shifts};
