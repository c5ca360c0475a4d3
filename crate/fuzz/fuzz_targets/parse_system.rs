#![no_main]

use koszulkit::cli::{parse_system, MAX_FILE_BYTES};
use koszulkit::Error;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > MAX_FILE_BYTES {
        return;
    }
    let Ok(src) = std::str::from_utf8(data) else {
        return;
    };
    match parse_system(src) {
        Ok(sf) => assert!(!sf.system.f.is_empty()),
        Err(Error::Parse { pos, .. }) => assert!(pos <= src.len()),
        Err(_) => {}
    }
});
