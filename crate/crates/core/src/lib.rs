pub mod scalars;
pub mod superlinalg;
pub mod rmatrix;
pub mod youngcomb;
pub mod lweights;
pub mod repmodules;
pub mod asymptotics;
pub mod json;
pub mod verify;
