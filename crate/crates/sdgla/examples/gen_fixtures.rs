//! Writes the fixture files under `fixtures/`: `cargo run -p sdgla --example gen_fixtures`.

use std::path::Path;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    std::fs::create_dir_all(&dir).expect("create fixtures/");
    for (name, text) in sdgla::generate::fixture_files() {
        std::fs::write(dir.join(name), text).expect("fixture directory is writable");
        println!("wrote fixtures/{name}");
    }
}
