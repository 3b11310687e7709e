pub mod critical;
pub mod haar;
pub mod oracle;
pub mod spectrum;
pub mod verify;
