fn main() {
    std::process::exit(uav_route::cli::run(std::env::args_os()));
}
