use freewidth_cli::app;

fn main() {
    std::process::exit(app::run(std::env::args_os()));
}
