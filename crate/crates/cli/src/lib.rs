//! Command-line front end of cyclab: graph lookup, JSON I/O, the
//! verification suite and the HTTP endpoints used by the explorer.

pub mod graphs;
pub mod io;
pub mod server;
pub mod suite;
