pub mod cli;
pub mod embed_oracle;
pub mod families;
pub mod graphfam;
pub mod peaks;
pub mod seqcore;
