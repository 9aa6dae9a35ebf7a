//! The six built-in presentations with their expected reports.

pub struct CorpusEntry {
    pub name: &'static str,
    pub source: &'static str,
    pub golden: &'static str,
}

macro_rules! entry {
    ($name:literal) => {
        CorpusEntry {
            name: $name,
            source: include_str!(concat!("../corpus/", $name, ".alg")),
            golden: include_str!(concat!("../corpus/", $name, ".golden")),
        }
    };
}

pub const ENTRIES: [CorpusEntry; 6] = [
    entry!("alg1"),
    entry!("alg2"),
    entry!("alg3"),
    entry!("alg4"),
    entry!("alg5"),
    entry!("alg6"),
];
