//! Budget defaults, spec-file options and environment overrides, in that
//! order of precedence (environment wins).

use symrep::budget::Budget;

use crate::error::CliError;
use crate::spec_file::Options;

pub const ENV_VARS: [&str; 5] =
    ["SYMREP_WEYL_CAP", "SYMREP_IRREP_DIM_CAP", "SYMREP_SYM_DIM_CAP", "SYMREP_SYM_DEGREE_CAP", "SYMREP_MATRIX_DIM_CAP"];

pub fn resolve_budget(options: &Options, env: impl Fn(&str) -> Option<String>) -> Result<Budget, CliError> {
    let mut b = Budget::default();
    if let Some(cap) = options.weyl_cap {
        b.weyl_cap = cap;
    }
    let read = |name: &str| -> Result<Option<u64>, CliError> {
        match env(name) {
            None => Ok(None),
            Some(v) => v
                .trim()
                .parse::<u64>()
                .map(Some)
                .map_err(|_| CliError::Env { name: name.to_string(), value: v }),
        }
    };
    if let Some(x) = read("SYMREP_WEYL_CAP")? {
        b.weyl_cap = x as usize;
    }
    if let Some(x) = read("SYMREP_IRREP_DIM_CAP")? {
        b.irrep_dim_cap = x;
    }
    if let Some(x) = read("SYMREP_SYM_DIM_CAP")? {
        b.sym_dim_cap = x as usize;
    }
    if let Some(x) = read("SYMREP_SYM_DEGREE_CAP")? {
        b.sym_degree_cap = x as usize;
    }
    if let Some(x) = read("SYMREP_MATRIX_DIM_CAP")? {
        b.matrix_dim_cap = x as usize;
    }
    Ok(b)
}

pub fn process_env(name: &str) -> Option<String> {
    std::env::var(name).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn environment_overrides_file_options() {
        let opts = Options { weyl_cap: Some(10), ..Options::default() };
        let b = resolve_budget(&opts, |_| None).unwrap();
        assert_eq!(b.weyl_cap, 10);
        let b = resolve_budget(&opts, |n| (n == "SYMREP_WEYL_CAP").then(|| "99".to_string())).unwrap();
        assert_eq!(b.weyl_cap, 99);
        let e = resolve_budget(&opts, |n| (n == "SYMREP_SYM_DIM_CAP").then(|| "many".to_string()));
        assert_eq!(e.unwrap_err().exit_code(), 2);
    }
}
