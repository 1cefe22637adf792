/// Hard limits on constructed 2-categories. Exceeding a cap is an explicit
/// refusal, never silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeCaps {
    pub max_objects: usize,
    pub max_one_cells: usize,
}

impl Default for SizeCaps {
    fn default() -> Self {
        SizeCaps { max_objects: 64, max_one_cells: 512 }
    }
}

impl SizeCaps {
    /// Scale both limits from a single knob, keeping the default 1:8 ratio.
    pub fn with_limit(n: usize) -> Self {
        SizeCaps { max_objects: n, max_one_cells: n.saturating_mul(8) }
    }
}
