pub mod bench;
pub mod circulant;
pub mod cli;
pub mod dense;
pub mod document;
pub mod error;
pub mod fft;
pub mod forms;
pub mod hopf;
pub mod lattice;
pub mod oracle;
pub mod sample;
pub mod spectral;
pub mod twisted;
pub mod verify;
