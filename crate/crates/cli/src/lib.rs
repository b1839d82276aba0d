//! Library half of the `tangle-sweep` command line tool: sweep
//! configuration and CSV emission, the regression check table, and the
//! eigenvalue oracle the checks use for independent verification.

pub mod checks;
pub mod oracle;
pub mod sweep;
