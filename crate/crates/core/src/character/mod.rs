//! Virtual torus characters and the classes built from them.

mod class;
pub mod factored;
pub mod ratchar;
pub mod rational;
pub mod theta;
mod weight;

pub use class::CharClass;
pub use factored::{class_in_mode, euler, khat, sum_factored, FactoredClass, Mode};
pub use ratchar::{RatChar, RatSum};
pub use rational::{Polynomial, RationalFunction};
pub use theta::{theta, ThetaClass};
pub use weight::Weight;
