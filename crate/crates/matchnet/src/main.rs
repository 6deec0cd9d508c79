use clap::Parser;

fn main() {
    let cli = matchnet::cli::Cli::parse();
    // Sequentialization recurses once per link; give large inputs room.
    let worker = std::thread::Builder::new()
        .stack_size(256 << 20)
        .spawn(move || matchnet::cli::run(cli, &mut std::io::stdout(), &mut std::io::stderr()))
        .expect("spawn worker");
    let code = worker.join().unwrap_or(101);
    std::process::exit(code);
}
