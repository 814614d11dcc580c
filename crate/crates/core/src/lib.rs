pub mod cli;
pub mod coeff;
pub mod error;
pub mod frob;
pub mod gset;
pub mod linmat;
pub mod measure;
pub mod permcat;
pub mod report;
