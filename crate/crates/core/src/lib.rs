//! Anti-jamming PRB selection for a UAV command-and-control link.
//!
//! A UAV picks one physical resource block (PRB) per slot while a jammer
//! occupies some of them. The active-inference agent learns a model of the
//! clean signal offline, tracks it online with a Markov jump particle filter,
//! and turns surprise into belief-table updates. Frequency hopping and
//! Q-learning serve as baselines.
//!
//! Layering, bottom up: [`channel`] and [`signal`] are pure models,
//! [`environment`] composes them into a world, [`offline_learning`],
//! [`filter`] and [`abnormality`] form the perception stack, [`agent`] and
//! [`baselines`] are policies, and [`harness`] runs experiments.

pub mod abnormality;
pub mod agent;
pub mod baselines;
pub mod channel;
pub mod environment;
pub mod filter;
pub mod harness;
pub mod offline_learning;
pub mod signal;
