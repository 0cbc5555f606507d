fn main() {
    std::process::exit(trigpos::cli::main())
}
