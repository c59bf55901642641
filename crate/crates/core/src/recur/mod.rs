//! Shift operators, partial-difference recurrences over the border
//! lattices, and uniqueness-based tabulation.

mod checks;
mod ops;
mod table;
mod tabulate;

pub use checks::{check_bill, check_ekhad, check_howard, check_pde_gog, check_pde_magog};
pub use ops::{p_a_operator, ShiftOperator};
pub use table::DiscreteTable;
pub use tabulate::{tabulate_x, tabulate_y};
