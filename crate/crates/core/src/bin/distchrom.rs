fn main() {
    // Die quietly on SIGPIPE like other line-oriented unix tools, so
    // `distchrom enum ... | head` does not panic mid-write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(distchrom::cli::run(std::env::args()));
}
