fn main() {
    // Die quietly when stdout is a closed pipe (`fraggen stats | head`).
    // SAFETY: runs before any other thread exists.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(fraggen::cli::run(std::env::args_os()));
}
