fn main() {
    std::process::exit(negn::cli::run());
}
