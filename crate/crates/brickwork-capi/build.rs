use std::path::Path;

// Regenerates include/brickwork.h from the exported items. The header
// is committed, so consumers without cbindgen still get a working
// build; a generation failure only warns and keeps the committed copy.
fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("cargo sets manifest dir");
    let header = Path::new(&crate_dir).join("include").join("brickwork.h");
    match cbindgen::generate(&crate_dir) {
        Ok(bindings) => {
            bindings.write_to_file(&header);
        }
        Err(e) => {
            println!("cargo:warning=cbindgen failed ({e}); keeping committed header");
        }
    }
}
