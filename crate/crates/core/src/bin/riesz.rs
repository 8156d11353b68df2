fn main() {
    let seed = std::env::var("RIESZ_SEED").ok();
    let out = riesz::cli::run_args(std::env::args_os(), seed.as_deref());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
