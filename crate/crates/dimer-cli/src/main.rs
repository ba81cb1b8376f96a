fn main() {
    println!("{}", dimer::hilbert::probe());
}
