//! In-place associative permutation sort for unsigned integer keys.
//!
//! The sorter works on 64-bit words whose top bit is reserved as a tag.
//! Each binding-loop iteration practices the key interval
//! `[delta, delta + n - 1]` of the unsorted suffix, permutes the practiced
//! elements into place with nested cycle-leader runs, and restores the key
//! values, leaving the sorted interval at the front and the deferred keys
//! behind for the next iteration. Beside the list itself only a constant
//! number of counters and indices are used.
//!
//! ```
//! use apsort::KeyedList;
//!
//! let mut list = KeyedList::new(vec![3, 1, 3, 7, 1, 3]);
//! let report = list.sort().unwrap();
//! assert_eq!(list.keys(), &[1, 1, 3, 3, 3, 7]);
//! assert_eq!(report.iterations, 2);
//! ```
//!
//! Payloads ride along with their keys; equal keys do **not** keep their
//! relative order (the technique is unstable):
//!
//! ```
//! use apsort::KeyedList;
//!
//! let keys = vec![5u64, 2, 9, 2];
//! let mut list = KeyedList::with_payloads(keys.clone(), vec!["e", "b", "x", "b2"]);
//! list.sort().unwrap();
//! assert_eq!(list.keys(), &[2, 2, 5, 9]);
//! ```
//!
//! Keys that need the tag bit go through [`KeyedList::sort_full_universe`],
//! which splits the universe at `2^63` and sorts both halves.

pub mod baselines;
pub mod dataset;
pub mod hash;
pub mod phases;
pub mod sort;
pub mod verify;
pub mod word;

pub use phases::{accumulate, permute, practice, repractice, restore, sort_interval, IterationCounters};
pub use sort::{binding_loop, sort_by_high_bits, split_universe, KeyedList, SortError, SortReport};
pub use verify::{verify, VerificationResult};

// The book chapters double as doctests so their snippets stay correct.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }

    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(WordsAndHashing, "../../../book/src/words-and-hashing.md");
    chapter!(Practicing, "../../../book/src/practicing.md");
    chapter!(Permutation, "../../../book/src/permutation.md");
    chapter!(RestoringAndBinding, "../../../book/src/restoring-and-binding.md");
    chapter!(UniverseAndHighBits, "../../../book/src/universe-and-high-bits.md");
    chapter!(DatasetsAndBaselines, "../../../book/src/datasets-and-baselines.md");
    chapter!(Cli, "../../../book/src/cli.md");
}
