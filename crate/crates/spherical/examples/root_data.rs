//! Load presets and a datum from TOML text; print Weyl group data.
use spherical::root_datum::{load_root_datum, preset, PRESET_NAMES};

const CUSTOM: &str = r#"
name = "A2-custom"
rank = 2
cartan = [[2, -1], [-1, 2]]
simple_coroots = [[1, 0], [0, 1]]
simple_roots = [[2, -1], [-1, 2]]
"#;

fn main() {
    for name in PRESET_NAMES {
        let rd = preset(name);
        println!("{name}: rank {}, |W| = {}, positive coroots {}, 2rho = {:?}", rd.rank, rd.weyl_order(), rd.all_coroots().len() / 2, rd.two_rho());
    }
    let rd = load_root_datum(CUSTOM).expect("valid config");
    println!("{}: hash {}", rd.config.name, &rd.hash()[..16]);
}
