#![no_main]

use koszulkit::ring::parse_poly;
use koszulkit::Context;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(src) = std::str::from_utf8(data) else {
        return;
    };
    let ctx = Context::new(3).unwrap();
    let lookup = |name: &str| ctx.registry.lookup(name);
    if let Ok(p) = parse_poly(src, &lookup) {
        // rendering must parse back to the same polynomial
        let again = parse_poly(&p.render(&ctx.registry), &lookup).expect("rendered polynomial reparses");
        assert_eq!(again, p);
    }
});
