use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{is_prime, CycleParseError, FiniteGroup, GroupError, Permutation};

/// Largest accepted permutation degree.
pub const MAX_DEGREE: usize = 1024;

/// A group given by permutation generators, with the primes to analyze.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    pub primes: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("degree {degree} exceeds the maximum of {max}")]
    Degree { degree: usize, max: usize },
    #[error("generator {index} ({text:?}): {source}")]
    Generator {
        index: usize,
        text: String,
        #[source]
        source: CycleParseError,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

impl GroupSpec {
    pub fn new(name: &str, degree: usize, generators: &[&str], primes: &[u64]) -> Self {
        GroupSpec {
            name: name.to_string(),
            degree,
            generators: generators.iter().map(|g| g.to_string()).collect(),
            primes: primes.to_vec(),
        }
    }

    /// Checks the degree, the primes and that every generator parses.
    pub fn validate(&self) -> Result<Vec<Permutation>, SpecError> {
        if self.degree > MAX_DEGREE {
            return Err(SpecError::Degree { degree: self.degree, max: MAX_DEGREE });
        }
        if let Some(&p) = self.primes.iter().find(|&&p| !is_prime(p)) {
            return Err(SpecError::NotPrime(p));
        }
        self.generators
            .iter()
            .enumerate()
            .map(|(index, text)| {
                Permutation::parse_cycles(text, self.degree).map_err(|source| SpecError::Generator {
                    index,
                    text: text.clone(),
                    source,
                })
            })
            .collect()
    }

    /// The generated permutation group.
    pub fn build(&self, max_order: usize) -> Result<FiniteGroup, BuildError> {
        let gens = self.validate()?;
        Ok(FiniteGroup::generate_with_degree(self.degree, &gens, max_order)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Parses and validates a group spec document:
/// `{"name": …, "degree": …, "generators": ["(0 1 2)", …], "primes": [2, 3]}`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let spec: GroupSpec = serde_json::from_str(text).map_err(|e| {
        // serde_json appends its own " at line L column C"
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
        SpecError::Syntax { line: e.line(), column: e.column(), message }
    })?;
    spec.validate()?;
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_spec() {
        let spec =
            parse_group_spec(r#"{"name":"S3","degree":3,"generators":["(0 1 2)","(0 1)"],"primes":[2,3]}"#).unwrap();
        assert_eq!(spec, GroupSpec::new("S3", 3, &["(0 1 2)", "(0 1)"], &[2, 3]));
        assert_eq!(spec.build(100).unwrap().order(), 6);
    }

    #[test]
    fn out_of_range_point() {
        let err = parse_group_spec(r#"{"name":"x","degree":3,"generators":["(0 3)"],"primes":[2]}"#).unwrap_err();
        assert!(matches!(
            err,
            SpecError::Generator {
                index: 0,
                source: CycleParseError::OutOfRange { point: 3, position: 3, degree: 3 },
                ..
            }
        ));
    }

    #[test]
    fn non_prime() {
        let err = parse_group_spec(r#"{"name":"x","degree":3,"generators":["(0 1)"],"primes":[4]}"#).unwrap_err();
        assert_eq!(err, SpecError::NotPrime(4));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_group_spec("{\n  \"name\": \"x\",\n  \"degree\": three\n}").unwrap_err();
        let SpecError::Syntax { line, column, .. } = err else { panic!("{err:?}") };
        assert_eq!(line, 3);
        assert!(column > 0);
        assert!(matches!(parse_group_spec(r#"{"name":"x"}"#), Err(SpecError::Syntax { .. })));
        assert!(matches!(
            parse_group_spec(r#"{"name":"x","degree":1,"generators":[],"primes":[],"extra":1}"#),
            Err(SpecError::Syntax { .. })
        ));
    }

    #[test]
    fn identity_and_degree_cap() {
        let spec = parse_group_spec(r#"{"name":"1","degree":2,"generators":["()"],"primes":[2]}"#).unwrap();
        assert_eq!(spec.build(10).unwrap().order(), 1);
        let big = format!(r#"{{"name":"x","degree":{},"generators":[],"primes":[]}}"#, MAX_DEGREE + 1);
        assert!(matches!(parse_group_spec(&big), Err(SpecError::Degree { .. })));
    }
}
