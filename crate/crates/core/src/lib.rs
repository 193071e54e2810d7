//! Conjugacy classes, centralizer characters and intersection lattices of
//! the Weyl groups of types A, B and D, with exact checks that sums of
//! induced linear characters give the regular character and the
//! Orlik–Solomon character.

pub mod centralizer;
pub mod character;
pub mod class_function;
pub mod classes;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod lattice;
pub mod linalg;
pub mod partition;
pub mod perm;
pub mod polynomial;
pub mod shape;
pub mod verify;

pub use classes::{ClassLabel, ClassTable, ConjClass, SplitTag};
pub use cyclotomic::{Cyclotomic, RootOfUnity};
pub use error::{Error, Result};
pub use group::{Budget, Family, Group};
pub use partition::{Partition, SignedPartition};
pub use perm::SignedPermutation;
pub use shape::Shape;
pub use verify::{Check, Status, VerificationReport, Verifier};
