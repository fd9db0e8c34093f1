pub mod exec;
pub mod fmethod;
pub mod pbw;
pub mod ring;
pub mod special;
pub mod suites;
pub mod weyl;
