//! Placeholder for the checker module.
