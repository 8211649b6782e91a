//! Serialize exact numbers as decimal strings.

use serde::Serializer;

pub(crate) fn display_seq<T: std::fmt::Display, S: Serializer>(xs: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(ToString::to_string))
}
