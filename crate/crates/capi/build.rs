fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();

    cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(cbindgen::Config {
            language: cbindgen::Language::C,
            cpp_compat: true,
            include_guard: Some("GLQ_H".into()),
            include_version: true,
            documentation: true,
            documentation_style: cbindgen::DocumentationStyle::C99,
            usize_is_size_t: true,
            enumeration: cbindgen::EnumConfig {
                prefix_with_name: true,
                ..Default::default()
            },
            ..Default::default()
        })
        .generate()
        .expect("unable to generate C bindings")
        .write_to_file(std::path::Path::new(&crate_dir).join("include/glq.h"));
}
