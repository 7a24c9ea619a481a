//! Exact enumeration of Dyck path classes, two-row standard Young tableaux,
//! vincular pattern families of permutations, and the red/black card game
//! built on top of them.

pub mod cardgame;
pub mod dyck;
pub mod exactnum;
pub mod patterns;
pub mod tableaux;
