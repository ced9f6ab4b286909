//! Library surface of the command-line tool: the problem-file format, the
//! report documents, and the command implementations. The binary in
//! `main.rs` is a thin argument-parsing wrapper over [`run`].

pub mod problem;
pub mod report_doc;
pub mod run;
