fn main() {
    // Die quietly when a downstream pipe closes (e.g. `permldpc ... | head`),
    // like any other line-oriented Unix tool, instead of panicking on
    // a failed print.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(permldpc_cli::run(std::env::args_os()));
}
