use crate::error::{Error, Result};

/// Upper bound on the exponent of any exhaustive enumeration: an operation
/// that would walk `2^items` states refuses to start when `items > cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCap(pub u32);

impl EnumerationCap {
    pub const DEFAULT: EnumerationCap = EnumerationCap(24);

    pub fn check(self, items: usize) -> Result<()> {
        if items > self.0 as usize || items >= 64 {
            Err(Error::EnumerationCapExceeded { items, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumerationCap {
    fn default() -> Self {
        Self::DEFAULT
    }
}
