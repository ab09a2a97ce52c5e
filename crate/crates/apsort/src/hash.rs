//! The partial monotone bijective hash between keys and list slots.
//!
//! An interval of length `n` starting at the minimum key `delta` maps each
//! in-interval key `k` to slot `k - delta`. Keys at distance `n` or more are
//! outside the interval and are deferred to a later iteration; that is a
//! normal outcome, not an error.

/// Maps a key to its slot in an interval of `len` slots starting at `delta`.
///
/// Returns `None` when the key lies outside the interval. Requires
/// `key >= delta`; `delta` is the interval minimum so every key of the
/// interval satisfies this.
#[inline(always)]
pub fn slot(key: u64, delta: u64, len: usize) -> Option<usize> {
    debug_assert!(key >= delta);
    let offset = key - delta;
    if offset < len as u64 {
        Some(offset as usize)
    } else {
        None
    }
}

/// Inverse of [`slot`]: recovers the key stored at a slot.
#[inline(always)]
pub fn key_for(slot: usize, delta: u64) -> u64 {
    slot as u64 + delta
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_in_interval_keys() {
        assert_eq!(slot(3, 1, 6), Some(2));
    }

    #[test]
    fn boundary_is_out_of_interval() {
        assert_eq!(slot(7, 1, 6), None);
    }

    #[test]
    fn minimum_maps_to_slot_zero() {
        for delta in [0u64, 1, 5, 1 << 40] {
            assert_eq!(slot(delta, delta, 3), Some(0));
        }
    }

    #[test]
    fn inverse_round_trip() {
        for delta in [0u64, 9, 1 << 32] {
            for offset in 0..64u64 {
                let key = delta + offset;
                let j = slot(key, delta, 64).unwrap();
                assert_eq!(key_for(j, delta), key);
            }
        }
    }
}
