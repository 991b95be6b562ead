//! Truncated Yangian generator tables in the Cartan-Weyl and principal
//! presentations, the isomorphism between them, and exact checks of the
//! Yang-Baxter, RTT and principal relations in representations.

mod bipoly;
pub mod checks;
mod relations;
mod rtt;
mod table;

pub use bipoly::BiPolyMat;
pub use relations::{
    cartan_weyl_relation_residual, cartan_weyl_table_from_blocks, derived_generator_closed_form,
    extract_principal_level, principal_evaluation_table, principal_relation_residual, relation_indices,
    EvaluationVariant, ExponentVariant,
};
pub use rtt::{embed_two_legs, evaluation_poly, qybe_residual, qybe_residual_with, rtt_residual};
pub use table::{s_from_t, t_from_s, GenTable, InverseVariant, Presentation};
