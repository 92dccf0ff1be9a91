//! Column crystals of type C, spin crystals, the triangle crystals of types
//! B and D, their monomial maps, and the rectification machinery.

mod column;
mod triangle;

pub use column::{
    all_columns, column_crystal, is_extended_domain, is_kn_column, level, monomial_map,
    monomial_map_m0, rectify, tau, ColumnCrystal, ColumnError, ColumnTableau, RectTrace,
};
pub use triangle::{
    apply_e_word, spin_vector_of_label, triangle_crystal, triangle_monomial,
    triangle_monomial_bar, word_e, xi_swap, Triangle, TriangleCrystal,
};
