//! The JSON input format: `{"n": 2, "coefficients": [T0, T1, ...]}` where
//! `coefficients[i]` is the matrix multiplying `λ^i`, given as a list of
//! rows. Entries are integers or rational strings `"p/q"`.

use eigencurve_core::{Matrix, MatrixPolynomial, Rational};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub n: usize,
    pub coefficients: Vec<Vec<Vec<Rational>>>,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("{field}: {message} at line {line}, column {column}")]
    Syntax { field: String, message: String, line: usize, column: usize },
    #[error("{field}: {message}")]
    Shape { field: String, message: String },
}

fn shape(field: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Shape { field: field.into(), message: message.into() }
}

pub fn parse_document(bytes: &[u8]) -> Result<InputDocument, ParseError> {
    let mut de = serde_json::Deserializer::from_slice(bytes);
    let doc: InputDocument = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let field = match e.path().to_string() {
            p if p == "." => "document".to_string(),
            p => p,
        };
        let inner = e.into_inner();
        // serde_json appends its own position; it is reported separately.
        let message = inner.to_string();
        let message = message.split(" at line ").next().unwrap_or_default().to_string();
        ParseError::Syntax { field, message, line: inner.line(), column: inner.column() }
    })?;
    de.end().map_err(|e| ParseError::Syntax {
        field: "document".into(),
        message: "trailing characters".into(),
        line: e.line(),
        column: e.column(),
    })?;
    Ok(doc)
}

impl InputDocument {
    pub fn to_matrix_polynomial(&self) -> Result<MatrixPolynomial, ParseError> {
        let n = self.n;
        if n == 0 {
            return Err(shape("n", "matrix size must be positive"));
        }
        if self.coefficients.is_empty() {
            return Err(shape("coefficients", "at least one coefficient matrix is required"));
        }
        let mut mats = Vec::with_capacity(self.coefficients.len());
        for (i, rows) in self.coefficients.iter().enumerate() {
            if rows.len() != n {
                return Err(shape(format!("coefficients[{i}]"), format!("expected {n} rows, found {}", rows.len())));
            }
            for (r, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(shape(
                        format!("coefficients[{i}][{r}]"),
                        format!("expected {n} entries, found {}", row.len()),
                    ));
                }
            }
            mats.push(Matrix::from_rows(rows.clone()));
        }
        let top = mats.len() - 1;
        if mats[top].is_zero() {
            return Err(shape(format!("coefficients[{top}]"), "top coefficient is the zero matrix"));
        }
        MatrixPolynomial::new(mats).map_err(|e| shape("coefficients", e.to_string()))
    }

    pub fn from_matrix_polynomial(l: &MatrixPolynomial) -> Self {
        InputDocument { n: l.n(), coefficients: l.coefficients().iter().map(Matrix::to_rows).collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("input documents always serialize")
    }
}

pub fn parse_input(bytes: &[u8]) -> Result<MatrixPolynomial, ParseError> {
    parse_document(bytes)?.to_matrix_polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_context_in_errors() {
        let err = parse_input(br#"{"n": 1, "coefficients": [[["1/0"]]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("coefficients[0][0][0]:"), "{err}");
        let err = parse_input(b"{\"n\": 2,\n \"coefficients\": [[[1, 2], [3]]]}").unwrap_err();
        assert_eq!(err.to_string(), "coefficients[0][1]: expected 2 entries, found 1");
        let err = parse_input(b"{\"n\": 1, \"coefficients\": [[[0]], [[0]]]}").unwrap_err();
        assert_eq!(err.to_string(), "coefficients[1]: top coefficient is the zero matrix");
        match parse_input(b"{\"n\": 1,\n \"coefficients\": [[[1]]] ,}").unwrap_err() {
            ParseError::Syntax { line, .. } => assert_eq!(line, 2),
            e => panic!("{e}"),
        }
        assert!(parse_input(br#"{"n": 1, "coefficients": [[[1]]], "extra": 0}"#).is_err());
        assert!(parse_input(br#"{"n": 0, "coefficients": []}"#).is_err());
        assert!(parse_input(br#"{"n": 1, "coefficients": [[[1]]]} x"#).is_err());
    }

    #[test]
    fn round_trip_is_canonical() {
        let l = parse_input(br#"{"n": 2, "coefficients": [[["2/4", 0], [0, "-3"]], [[1, 0], [0, 1]]]}"#).unwrap();
        let doc = InputDocument::from_matrix_polynomial(&l);
        assert_eq!(doc.coefficients[0][0][0].to_string(), "1/2");
        assert_eq!(parse_input(doc.to_json().as_bytes()).unwrap(), l);
    }
}
