//! Placeholder; implemented in a later pass.

fn main() {}
