//! Holds the `acceptance` test target, which checks the workspace against
//! its acceptance criteria and prints one pass/fail line per criterion.
//! Run it alone with `cargo test -p tgrs-suite --test acceptance`.
