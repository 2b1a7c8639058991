pub mod classify;
pub mod geometry;
pub mod selfcheck;
pub mod verify;
