//! Oriented paintboxes and the characters they define on the F basis.

mod evaluator;
mod paintbox;

pub use evaluator::{
    a_shuffle_pmf, check_recursion, elementary_minus, elementary_plus, evaluate, evaluate_qsym, m_mix,
    uniform_character, CharacterEvaluator, Provenance, RecursionReport,
};
pub use paintbox::{
    paintbox_distance, rank, Interval, Orientation, OrientedPaintbox, RankedFrequencies, Segment, SegmentKind,
};
