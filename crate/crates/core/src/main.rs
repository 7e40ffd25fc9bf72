fn main() {
    // Restore default SIGPIPE behavior so piping into `head` and friends
    // terminates the process instead of panicking on a closed stdout.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(chowgen::cli::run(std::env::args()));
}
