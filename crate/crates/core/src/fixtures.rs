//! Small machines shipped with the crate, used by the tests, the CLI examples
//! and the acceptance suite.

use crate::machine_file;
use crate::tm::MachineDef;

pub const EVEN_A: &str = include_str!("../fixtures/even_a.tm");
pub const TOTAL_FLIP: &str = include_str!("../fixtures/total_flip.tm");
pub const GUESS_BIT: &str = include_str!("../fixtures/guess_bit.tm");
pub const WALK_RIGHT_THREE: &str = include_str!("../fixtures/walk_right_three.tm");
pub const ACCEPT_AT_START: &str = include_str!("../fixtures/accept_at_start.tm");
pub const COPY_TWO_TAPE: &str = include_str!("../fixtures/copy_two_tape.tm");
pub const BOUNCE_LEFT: &str = include_str!("../fixtures/bounce_left.tm");
pub const ECHO_TWO_TAPE: &str = include_str!("../fixtures/echo_two_tape.tm");
/// Not a valid machine: one transition prints the blank.
pub const WRITES_BLANK: &str = include_str!("../fixtures/writes_blank.tm");

/// Every valid fixture, by name.
pub const FILES: [(&str, &str); 8] = [
    ("even_a", EVEN_A),
    ("total_flip", TOTAL_FLIP),
    ("guess_bit", GUESS_BIT),
    ("walk_right_three", WALK_RIGHT_THREE),
    ("accept_at_start", ACCEPT_AT_START),
    ("copy_two_tape", COPY_TWO_TAPE),
    ("bounce_left", BOUNCE_LEFT),
    ("echo_two_tape", ECHO_TWO_TAPE),
];

fn load(text: &str) -> MachineDef {
    machine_file::parse(text).expect("fixture files are well-formed")
}

pub fn even_a() -> MachineDef {
    load(EVEN_A)
}

pub fn total_flip() -> MachineDef {
    load(TOTAL_FLIP)
}

pub fn guess_bit() -> MachineDef {
    load(GUESS_BIT)
}

pub fn walk_right_three() -> MachineDef {
    load(WALK_RIGHT_THREE)
}

pub fn accept_at_start() -> MachineDef {
    load(ACCEPT_AT_START)
}

pub fn copy_two_tape() -> MachineDef {
    load(COPY_TWO_TAPE)
}

pub fn bounce_left() -> MachineDef {
    load(BOUNCE_LEFT)
}

pub fn echo_two_tape() -> MachineDef {
    load(ECHO_TWO_TAPE)
}

pub fn all() -> Vec<(&'static str, MachineDef)> {
    FILES.iter().map(|(n, t)| (*n, load(t))).collect()
}
