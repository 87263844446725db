//! The 42 configuration types, ordered from the least to the most special,
//! with the expected dimension of `L(K)` for quintics.

use serde::Serialize;

/// One row of the type table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigTypeRecord {
    pub type_id: u8,
    /// Number of points for finite types, `None` when the type contains a curve.
    pub k_points: Option<u8>,
    pub expected_dim: u8,
    pub description: &'static str,
}

impl ConfigTypeRecord {
    pub fn is_finite(&self) -> bool {
        self.k_points.is_some()
    }
}

const fn fin(type_id: u8, k: u8, expected_dim: u8, description: &'static str) -> ConfigTypeRecord {
    ConfigTypeRecord { type_id, k_points: Some(k), expected_dim, description }
}

const fn comp(type_id: u8, expected_dim: u8, description: &'static str) -> ConfigTypeRecord {
    ConfigTypeRecord { type_id, k_points: None, expected_dim, description }
}

pub const TYPE_TABLE: [ConfigTypeRecord; 42] = [
    fin(1, 1, 18, "one point"),
    fin(2, 2, 15, "two points"),
    fin(3, 3, 12, "three points"),
    fin(4, 4, 11, "four collinear points"),
    fin(5, 5, 10, "five collinear points"),
    fin(6, 6, 10, "six collinear points"),
    fin(7, 7, 10, "seven collinear points"),
    fin(8, 8, 10, "eight collinear points"),
    fin(9, 9, 10, "nine collinear points"),
    fin(10, 10, 10, "ten collinear points"),
    comp(11, 10, "a line"),
    fin(12, 4, 9, "four points not all on one line"),
    fin(13, 5, 8, "four collinear points and one point off their line"),
    fin(14, 6, 7, "five collinear points and one point off their line"),
    fin(15, 7, 7, "six collinear points and one point off their line"),
    fin(16, 8, 7, "seven collinear points and one point off their line"),
    comp(17, 7, "a line and one point off it"),
    fin(18, 5, 6, "five points, no four collinear"),
    fin(19, 6, 5, "four collinear points and two points off their line"),
    fin(20, 7, 4, "five collinear points and two points off their line"),
    fin(21, 8, 4, "six collinear points and two points off their line"),
    comp(22, 4, "a line and two points off it"),
    fin(23, 6, 4, "three points on each of two lines, avoiding the crossing point"),
    fin(24, 6, 4, "six points on a nondegenerate conic"),
    fin(25, 7, 4, "three points on each of two lines plus the crossing point"),
    fin(26, 6, 3, "six points on no conic, no four collinear"),
    fin(27, 7, 3, "four points on one line and three on another, avoiding the crossing point"),
    fin(28, 8, 3, "five points on one line and three on another, off the first"),
    comp(29, 3, "a line and three points of another line, avoiding the crossing point"),
    fin(30, 8, 3, "four points on each of two lines, avoiding the crossing point"),
    comp(31, 3, "two distinct lines"),
    fin(32, 7, 3, "seven points on a nondegenerate conic"),
    comp(33, 3, "a nondegenerate conic"),
    fin(34, 7, 2, "four collinear points and three non-collinear points off their line"),
    fin(35, 7, 1, "three points on each of two lines plus one point off both lines"),
    fin(36, 7, 1, "six points on a nondegenerate conic and one point off it"),
    fin(37, 8, 1, "three points on each of two lines, the crossing point, and one point off both"),
    fin(38, 8, 1, "four base points and the four points cut on a line by two conics through them"),
    fin(39, 9, 1, "three vertices and the six points cut on the sides of their triangle by a conic"),
    fin(40, 10, 1, "the ten pairwise crossing points of five generic lines"),
    comp(41, 1, "a line and three non-collinear points off it"),
    comp(42, 0, "the whole plane"),
];

/// The record for `type_id`, if it is in `1..=42`.
pub fn type_record(type_id: u8) -> Option<&'static ConfigTypeRecord> {
    TYPE_TABLE.get((type_id as usize).checked_sub(1)?)
}

/// Expected `dim L(K)` for quintics singular along a configuration of this type.
pub fn expected_dim(type_id: u8) -> Option<u8> {
    type_record(type_id).map(|r| r.expected_dim)
}
