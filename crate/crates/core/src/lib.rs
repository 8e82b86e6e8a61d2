pub mod characters;
pub mod coeffring;
pub mod equivariant;
pub mod error;
pub mod genfun;
pub mod oracle;
pub mod partition;
pub mod rational;
pub mod ring;
pub mod series;
pub mod symfunc;
pub mod verify;
