fn main() {
    let (code, out) = springer::cli::run(std::env::args().skip(1));
    if code == springer::cli::EXIT_INPUT {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
