//! Sort-output verification.

/// Outcome of checking a sort's output against its input. A sort passes
/// only when all three flags hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerificationResult {
    /// Output keys are non-decreasing.
    pub sorted: bool,
    /// Output key multiset equals the input key multiset.
    pub multiset_preserved: bool,
    /// With index payloads: the original key at `payload[i]` equals the
    /// output key at `i`. Vacuously true without payloads.
    pub payload_pairing_ok: bool,
}

impl VerificationResult {
    pub fn all_ok(&self) -> bool {
        self.sorted && self.multiset_preserved && self.payload_pairing_ok
    }

    /// The first violated property, if any.
    pub fn first_violation(&self) -> Option<&'static str> {
        if !self.sorted {
            Some("output is not sorted")
        } else if !self.multiset_preserved {
            Some("output key multiset differs from input")
        } else if !self.payload_pairing_ok {
            Some("payload does not index an element with the output key")
        } else {
            None
        }
    }
}

/// Checks a sorted candidate against the original keys; `payloads`, when
/// present, are the output's original-index payloads.
pub fn verify(original: &[u64], output: &[u64], payloads: Option<&[usize]>) -> VerificationResult {
    let sorted = output.is_sorted();
    let multiset_preserved = if original.len() != output.len() {
        false
    } else {
        let mut a = original.to_vec();
        let mut b = output.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    };
    let payload_pairing_ok = match payloads {
        None => true,
        Some(p) => {
            p.len() == output.len()
                && p.iter()
                    .zip(output.iter())
                    .all(|(&index, &key)| original.get(index) == Some(&key))
        }
    };
    VerificationResult { sorted, multiset_preserved, payload_pairing_ok }
}
