//! IO and orchestration around `algconn-core`: graph6 corpus streams,
//! multi-threaded exhaustive scans, report formatting and the `algconn`
//! command line.

pub mod cli;
pub mod corpus;
pub mod driver;
pub mod output;
