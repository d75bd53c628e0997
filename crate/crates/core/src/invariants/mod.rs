//! Trace fields, integrality of traces, cusp moduli and their commensurability
//! classes, mod-2 homology of the one-cusped family, and a congruence check.

mod congruence;
mod homology;
mod modulus;
mod trace;

pub use congruence::{
    mod3_congruence_containment, mod3_congruence_entries, mod3_sign, CongruenceEntry,
};
pub use homology::{
    homology_mod2, homology_report, onecusped_presentation, HomologyReport, Presentation2,
};
pub use modulus::{
    apply_rational, cusp_modulus, equivalence_witness, moduli_equivalent, ModulusClass,
    RationalMobius,
};
pub use trace::{
    for_each_word, integral_traces, invariant_trace_field_lower, search_nonintegral_trace,
    trace_field, word_label, IntegralityReport, NonintegralWitness,
};
