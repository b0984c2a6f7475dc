fn main() {
    // Die quietly on a closed pipe (`sgfr ... | head`) instead of panicking.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(sgfr::cli::main_entry());
}
