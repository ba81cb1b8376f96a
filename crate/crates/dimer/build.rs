fn main() {
    // Link the system OpenBLAS (provides both BLAS and LAPACK symbols).
    println!("cargo:rustc-link-search=native=/usr/lib/x86_64-linux-gnu/openblas-pthread");
    println!("cargo:rustc-link-lib=dylib=openblas");
}
