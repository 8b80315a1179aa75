pub mod exactalg;
pub mod quadform;
pub mod invariants;
pub mod sturm;
pub mod classify;
pub mod oracle;
pub mod sweep;
