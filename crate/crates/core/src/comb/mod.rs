//! Brute-force generation, validation, counting, and bijections for
//! alternating sign matrices and Gog / Magog arrays, plus the lattice
//! region predicates the recurrences live on.

mod asm;
mod counts;
mod gelfand;
mod regions;

pub use asm::{asm_count_formula, asm_to_monotone, enumerate_asm, monotone_to_asm, Asm};
pub use counts::{
    b_brute, border_count_gog, border_count_magog, gog_border_table, m_brute,
    magog_border_table, tilde_m,
};
pub use gelfand::{enumerate_gog, enumerate_magog, GelfandArray, GelfandKind};
pub use regions::{
    bar_land_of_gog_points, bar_land_of_magog_points, in_bar_land_of_gog,
    in_bar_land_of_magog, in_land_of_gog, in_land_of_magog, land_of_gog_points,
    land_of_magog_points, BorderVector,
};
