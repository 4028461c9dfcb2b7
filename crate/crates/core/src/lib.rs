//! Many-valued logic over roots of unity, a multi-tape nondeterministic
//! Turing machine engine, radix re-encoding of words, and a harness that
//! compares step counts of wide-alphabet machines with binary simulations.

pub mod cli;
pub mod fixtures;
pub mod harness;
pub mod machine_file;
pub mod mvl;
pub mod radix;
pub mod tm;
