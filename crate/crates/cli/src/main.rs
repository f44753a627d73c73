use eqhom::confighom::Catalog;

fn main() {
    let code = eqhom_cli::run_with(
        std::env::args_os(),
        &Catalog,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
