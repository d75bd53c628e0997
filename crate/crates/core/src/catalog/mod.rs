//! Named generators, derived words, family builders and check suites.

mod families;
mod namespace;
mod suites;
mod word;

pub use families::{
    family_generators, family_words, lambda1_word, lambda2_word, lambda_onecusped_word, Family,
    Generator, GroupSpec,
};
pub use namespace::{Namespace, NamespaceKind};
pub use suites::{
    named_identities, suite_checks, CheckKind, CheckOutcome, NamedIdentity, NamespaceCache, Suite,
    SuiteCheck, LAMBDA_MAX_N, MUTANT_SPANNING_TRACES,
};
pub use word::WordExpr;
