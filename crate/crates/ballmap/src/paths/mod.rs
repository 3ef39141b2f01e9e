//! Placeholder module (under construction).
