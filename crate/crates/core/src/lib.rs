pub mod cli;
pub mod error;
pub mod extremal;
pub mod forms;
pub mod identities;
pub mod lambert;
pub mod numeric;
pub mod positivity;
pub mod qseries;
